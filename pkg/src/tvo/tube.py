"""Tube algebra of pointed cyclic data and the modular data on its center.

For a cyclic group with the degree-3 cocycle omega_k the tube algebra has
basis u_(g,x) indexed by pairs of group elements (the object label g and
the annulus label x) with product

    u_(g,x) u_(h,y) = delta_{g,h} tau_g(x, y) u_(g, x+y),
    tau_g(x, y) = omega_k(g, x, y) omega_k(x, y, g) / omega_k(x, g, y),

which for the cyclic cocycle collapses to exp(2 pi i k g carry(x,y) / n).
The center is extracted numerically (nullspace of the commutator equations,
then simultaneous diagonalization of a generic central multiplication
operator); each minimal idempotent determines a flux sector g and a
projective character psi, and the modular data on the idempotent basis is

    t_p = psi(g),    S_{p q} = conj(psi_p(g_q) psi_q(g_p)) / n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .catalog import cyclic_cocycle
from .errors import DecompositionError, PreconditionError
from .modular import ModularData


@dataclass(eq=False)
class TubeAlgebra:
    """Finite-dimensional *-algebra with structure constants in the (g, x) basis.

    ``mult[a, b, c]`` is the coefficient of basis element c in the product
    e_a e_b; ``star_phase``/``star_perm`` give e_a^* = phase[a] e_{perm[a]}.
    """

    n: int
    twist: int
    labels: tuple
    mult: np.ndarray
    star_phase: np.ndarray
    star_perm: np.ndarray
    identity: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.labels)

    def product(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.einsum("a,b,abc->c", u, v, self.mult)

    def star(self, u: np.ndarray) -> np.ndarray:
        out = np.zeros(self.dim, dtype=complex)
        np.add.at(out, self.star_perm, u.conj() * self.star_phase)
        return out

    def associativity_residual(self) -> float:
        lhs = np.einsum("abx,xcd->abcd", self.mult, self.mult)
        rhs = np.einsum("bcy,ayd->abcd", self.mult, self.mult)
        return float(np.abs(lhs - rhs).max())

    def star_antihomomorphism_residual(self) -> float:
        """max |(e_a e_b)^* - e_b^* e_a^*| over all basis pairs."""
        inv = np.argsort(self.star_perm)
        # (e_a e_b)^* expressed on basis element d
        lhs = self.mult.conj()[:, :, inv] * self.star_phase[inv][None, None, :]
        # e_b^* e_a^* = phase[a] phase[b] mult[perm[b], perm[a], :]
        rhs = (
            self.star_phase[:, None, None]
            * self.star_phase[None, :, None]
            * self.mult[np.ix_(self.star_perm, self.star_perm)].swapaxes(0, 1)
        )
        return float(np.abs(lhs - rhs).max())


def tube_pointed(n: int, k: int) -> TubeAlgebra:
    """The tube algebra of the pointed cyclic data with cocycle parameter k.

    Dimension n^2; for k = 0 every sector is the plain group algebra of Z/n.
    """
    if n < 1:
        raise PreconditionError("tube_pointed requires n >= 1")
    k = k % n
    omega = cyclic_cocycle(n, k)
    d = n * n
    labels = tuple((g, x) for g in range(n) for x in range(n))
    idx = {lab: i for i, lab in enumerate(labels)}
    mult = np.zeros((d, d, d), dtype=complex)
    for g in range(n):
        for x in range(n):
            for y in range(n):
                # tau_g(x,y): the two outer cocycle factors cancel for cyclic groups
                tau = omega(g, x, y)
                mult[idx[(g, x)], idx[(g, y)], idx[(g, (x + y) % n)]] = tau
    star_phase = np.zeros(d, dtype=complex)
    star_perm = np.zeros(d, dtype=np.int64)
    for g in range(n):
        for x in range(n):
            xm = (-x) % n
            star_phase[idx[(g, x)]] = omega(g, x, xm).conjugate()
            star_perm[idx[(g, x)]] = idx[(g, xm)]
    identity = np.zeros(d, dtype=complex)
    for g in range(n):
        identity[idx[(g, 0)]] = 1.0
    return TubeAlgebra(n, k, labels, mult, star_phase, star_perm, identity)


@dataclass(eq=False)
class CenterBasis:
    """Minimal central idempotents, one row per idempotent, vacuum sector first."""

    idempotents: np.ndarray  # (r, dim)
    idempotent_residual: float
    completeness_residual: float


def _center_subspace(alg: TubeAlgebra, tol: float) -> np.ndarray:
    d = alg.dim
    left = alg.mult  # left[a, b, c]: e_a e_b
    right = np.swapaxes(alg.mult, 0, 1)  # right[a, b, c] = mult[b, a, c]: e_b e_a
    constraints = (right - left).transpose(0, 2, 1).reshape(d * d, d)
    _, s, vh = np.linalg.svd(constraints)
    smax = s[0] if len(s) else 0.0
    cutoff = max(tol, 1e-12 * max(1.0, smax))
    rank = int(np.sum(s > cutoff))
    return vh[rank:].conj()  # rows span the nullspace, i.e. the center


def center_idempotents(alg: TubeAlgebra, tol: float = 1e-9) -> CenterBasis:
    """Extract the minimal central idempotents of ``alg`` numerically.

    The center is the nullspace of the commutation constraints; a generic
    central element's multiplication operator restricted to the center is
    diagonalized, its eigenvectors rescaled to idempotents. Raises
    :class:`DecompositionError` if residuals exceed tolerance (the algebra
    is then not associative/semisimple enough for this route).
    """
    res = alg.associativity_residual()
    if res > tol:
        raise DecompositionError(f"structure constants not associative (residual {res:.3e})")
    Z = _center_subspace(alg, tol)
    r = Z.shape[0]
    if r == 0:
        raise DecompositionError("empty center")

    # multiplication by a generic central element, restricted to the center
    rng = np.random.default_rng(7)
    for _attempt in range(4):
        coeffs = rng.standard_normal(r)
        z = coeffs @ Z
        L = np.zeros((r, r), dtype=complex)
        closure = 0.0
        for j in range(r):
            prod = alg.product(z, Z[j])
            comp = Z.conj() @ prod
            closure = max(closure, float(np.abs(prod - comp @ Z).max()))
            L[:, j] = comp
        if closure > 1e3 * tol:
            raise DecompositionError(f"center not closed under product (residual {closure:.3e})")
        evals, evecs = np.linalg.eig(L)
        gaps = np.abs(evals[:, None] - evals[None, :]) + np.eye(r)
        if gaps.min() > 1e-6:
            break
    else:
        raise DecompositionError("could not separate central eigenvalues")

    idems = []
    worst = 0.0
    for j in range(r):
        q = evecs[:, j] @ Z
        sq = alg.product(q, q)
        mu = (q.conj() @ sq) / (q.conj() @ q)
        if abs(mu) < tol:
            raise DecompositionError("nilpotent direction in the center")
        p = q / mu
        worst = max(worst, float(np.abs(alg.product(p, p) - p).max()))
        idems.append(p)
    if worst > 1e3 * tol:
        raise DecompositionError(f"idempotent residual {worst:.3e} above tolerance")

    completeness = float(np.abs(sum(idems) - alg.identity).max())
    if completeness > 1e3 * tol:
        raise DecompositionError(f"idempotents do not sum to the identity ({completeness:.3e})")

    # deterministic order: by flux sector, then by the phase of the character at 1
    n = alg.n

    def sort_key(p):
        blocks = np.abs(p.reshape(n, n)).sum(axis=1)
        g = int(np.argmax(blocks))
        if n == 1:
            return (g, 0.0)
        psi1 = (p[g * n + 1] / p[g * n + 0]).conjugate()
        ang = cmath.phase(psi1) % (2 * math.pi)
        if ang > 2 * math.pi - 1e-8:
            ang = 0.0
        return (g, ang)

    idems.sort(key=sort_key)
    return CenterBasis(np.array(idems), worst, completeness)


def tube_modular_data(alg: TubeAlgebra, tol: float = 1e-9) -> ModularData:
    """Modular data on the center idempotents of a pointed tube algebra.

    Each idempotent p is supported in a single flux sector g and reads off a
    projective character psi(x) = conj(n * p_(g,x)); the S and T entries are
    assembled from these characters. Labels are ordered (flux, charge), so
    the output coincides with the twisted-double generator for the same
    (n, k) rather than merely being equivalent to it.
    """
    cb = center_idempotents(alg, tol)
    n = alg.n
    r = cb.idempotents.shape[0]
    chars = []
    for row in cb.idempotents:
        blocks = np.abs(row.reshape(n, n)).sum(axis=1)
        g = int(np.argmax(blocks))
        off_sector = float(np.delete(np.abs(row.reshape(n, n)), g, axis=0).max()) if n > 1 else 0.0
        if off_sector > 1e3 * tol:
            raise DecompositionError("idempotent not supported in a single flux sector")
        c0 = row[g * n]
        if abs(c0 - 1.0 / n) > 1e3 * tol:
            raise DecompositionError(f"vacuum coefficient {c0} of sector {g} is not 1/n")
        psi = np.array([(row[g * n + x] / c0).conjugate() for x in range(n)])
        if np.abs(np.abs(psi) - 1.0).max() > 1e3 * tol:
            raise DecompositionError("projective character is not unimodular")
        # charge index j from psi(1) = exp(2 pi i (k g / n + j) / n)
        if n > 1:
            ang = cmath.phase(psi[1]) / (2 * math.pi) * n - alg.twist * g / n
            j = int(round(ang)) % n
        else:
            j = 0
        chars.append((g, j, psi))
    chars.sort(key=lambda t: (t[0], t[1]))
    if len({(g, j) for g, j, _ in chars}) != r:
        raise DecompositionError("flux/charge labels of the idempotents are not distinct")

    S = np.zeros((r, r), dtype=complex)
    T = np.zeros(r, dtype=complex)
    for i, (g, _, psi) in enumerate(chars):
        T[i] = psi[g]
        for i2, (h, _, phi) in enumerate(chars):
            S[i, i2] = (psi[h] * phi[g]).conjugate() / n
    labels = tuple(f"({g},{j})" for g, j, _ in chars)
    if chars[0][:2] != (0, 0):
        raise DecompositionError("vacuum idempotent (flux 0, trivial character) not found")
    return ModularData(S, T, labels=labels)

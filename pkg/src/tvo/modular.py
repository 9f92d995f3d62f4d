"""Modular data (S and T matrices) and the Verlinde-basis axiom checks.

A :class:`ModularData` holds a finite label set (index 0 is always the
vacuum), a symmetric unitary S matrix and the diagonal entries t_i of T.
Everything downstream (fusion rules, charge conjugation, doubling,
surgery evaluators) is computed from these two tables in complex double
precision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import (
    CapacityError,
    ConjugationError,
    DegenerateDataError,
    FusionIntegralityError,
    StructureError,
)

#: default comparison tolerance; relative for magnitudes > 1, absolute otherwise
DEFAULT_TOLERANCE = 1e-9
#: tolerance for rounding Verlinde sums to integers
INTEGER_TOLERANCE = 1e-6

# conjugate_equivalent search budgets; blocks of labels sharing a T eigenvalue
# larger than this are refused rather than searched
_BLOCK_CAP = 16
_NODE_BUDGET = 500_000


def close(a, b, tol=DEFAULT_TOLERANCE) -> bool:
    """Tolerance comparison of scalars: relative above magnitude 1, absolute below."""
    scale = max(1.0, abs(a), abs(b))
    return abs(a - b) <= tol * scale


@dataclass(eq=False)
class ModularData:
    """Labels plus the (S, t) tables of a torus representation.

    Parameters
    ----------
    S : (m+1, m+1) complex array, expected unitary and symmetric
    T : (m+1,) complex array of diagonal T entries t_i, expected unit modulus
    labels : optional display names, index 0 is the vacuum
    tolerance : comparison tolerance used by the verifier and derived operations

    Construction only checks shapes; run :func:`verify_verlinde` for the
    axioms. Instances are immutable by convention (arrays are marked
    read-only) and safe to share between threads.
    """

    S: np.ndarray
    T: np.ndarray
    labels: tuple[str, ...] | None = None
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        S = np.array(self.S, dtype=complex)
        T = np.array(self.T, dtype=complex).reshape(-1)
        if S.ndim != 2 or S.shape[0] != S.shape[1]:
            raise StructureError(f"S must be square, got shape {S.shape}")
        if T.shape[0] != S.shape[0]:
            raise StructureError(
                f"T length {T.shape[0]} does not match S rank {S.shape[0]}"
            )
        if self.tolerance <= 0:
            raise StructureError("tolerance must be positive")
        if self.labels is not None:
            self.labels = tuple(str(x) for x in self.labels)
            if len(self.labels) != S.shape[0]:
                raise StructureError("label count does not match rank")
        S.setflags(write=False)
        T.setflags(write=False)
        self.S = S
        self.T = T

    @property
    def rank(self) -> int:
        return self.S.shape[0]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def conjugate(self) -> "ModularData":
        """Entrywise complex conjugate data set."""
        return ModularData(self.S.conj(), self.T.conj(), self.labels, self.tolerance)

    @cached_property
    def _st_cubed(self):
        # returns ((ST)^3, S^2, scalar u, proportionality residual)
        M = self.S * self.T[np.newaxis, :]
        M3 = M @ M @ M
        S2 = self.S @ self.S
        idx = np.unravel_index(np.argmax(np.abs(S2)), S2.shape)
        u = M3[idx] / S2[idx]
        residual = float(np.abs(M3 - u * S2).max())
        return M3, S2, complex(u), residual

    @property
    def anomaly_phase(self) -> complex:
        """Scalar u with (ST)^3 = u * S^2; meaningful when the residual is small."""
        return self._st_cubed[2]

    @property
    def is_strictly_anomaly_free(self) -> bool:
        _, _, u, res = self._st_cubed
        return res <= self.tolerance and close(u, 1.0, self.tolerance)


@dataclass(eq=False)
class FusionTable:
    """Non-negative integer structure constants N_ij^k of the fusion algebra."""

    N: np.ndarray  # (rank, rank, rank) integer array

    def __post_init__(self):
        N = np.array(self.N, dtype=np.int64)
        if N.ndim != 3 or len(set(N.shape)) != 1:
            raise StructureError(f"fusion tensor must be cubic, got {N.shape}")
        if (N < 0).any():
            raise StructureError("fusion coefficients must be non-negative")
        N.setflags(write=False)
        self.N = N

    @property
    def rank(self) -> int:
        return self.N.shape[0]

    def unit_ok(self) -> bool:
        """N_0j^k = delta_jk: label 0 acts as the unit."""
        return bool((self.N[0] == np.eye(self.rank, dtype=np.int64)).all())

    def commutative_ok(self) -> bool:
        return bool((self.N == self.N.transpose(1, 0, 2)).all())

    def associative_ok(self) -> bool:
        """sum_x N_ij^x N_xk^l == sum_y N_jk^y N_iy^l, checked exactly.

        Entries are small integers, so float64 matmul is exact; chunked over i
        to bound memory at rank^3.
        """
        Nf = self.N.astype(np.float64)
        r = self.rank
        for i in range(r):
            lhs = np.einsum("jx,xkl->jkl", Nf[i], Nf)
            rhs = np.einsum("jky,yl->jkl", Nf, Nf[i])
            if not (lhs == rhs).all():
                return False
        return True


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float


@dataclass
class VerificationReport:
    """Outcome of the Verlinde-basis axiom suite for one data set.

    ``checks`` holds one pass/fail flag and worst-case residual per axiom;
    ``anomaly_phase`` is the scalar u in (ST)^3 = u S^2 (u = 1 means the
    torus representation is honest, i.e. strictly anomaly-free).
    """

    checks: list[CheckResult] = field(default_factory=list)
    anomaly_phase: complex = 1.0
    st_proportional: bool = False
    st_proportionality_residual: float = float("inf")

    def _get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def axioms_pass(self) -> bool:
        """All matrix/fusion axioms hold (anomaly phase not required to be 1)."""
        sl2 = {"S^4 identity", "(ST)^3 = S^2"}
        return all(c.passed for c in self.checks if c.name not in sl2)

    @property
    def sl2_relations_pass(self) -> bool:
        return self._get("S^4 identity").passed and self._get("(ST)^3 = S^2").passed

    @property
    def strict_pass(self) -> bool:
        return self.axioms_pass and self.sl2_relations_pass

    @property
    def worst_residual(self) -> float:
        finite = [c.residual for c in self.checks if np.isfinite(c.residual)]
        return max(finite) if finite else float("inf")

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            out.append(f"check {c.name:<24} {'pass' if c.passed else 'FAIL'}  residual {c.residual:.3e}")
        u = self.anomaly_phase
        out.append(f"anomaly phase: {u.real:.12f} {u.imag:.12f}")
        out.append(f"overall: {'PASS (strict)' if self.strict_pass else ('PASS (axioms only, anomalous)' if self.axioms_pass else 'FAIL')}")
        return out


def _verlinde_tensor(data: ModularData) -> np.ndarray:
    """Raw complex Verlinde sums N_ij^k = sum_l S_il S_jl conj(S_lk) / S_0l."""
    S = data.S
    with np.errstate(divide="ignore", invalid="ignore"):
        weighted = S.conj() / S[0][:, np.newaxis]
    return np.einsum("il,jl,lk->ijk", S, S, weighted)


def verify_verlinde(data: ModularData) -> VerificationReport:
    """Run every Verlinde-basis axiom on ``data`` and report residuals.

    Never raises on a failed axiom; structural problems (shape mismatch) are
    caught at :class:`ModularData` construction instead. A "strict" pass
    additionally requires the honest torus relations S^4 = I and
    (ST)^3 = S^2 (anomaly phase 1).
    """
    S, T = data.S, data.T
    tol = data.tolerance
    r = data.rank
    eye = np.eye(r)
    rep = VerificationReport()

    def add(name, residual, passed=None):
        residual = float(residual)
        if passed is None:
            passed = residual <= tol
        rep.checks.append(CheckResult(name, bool(passed), residual))

    res_unitary = np.abs(S @ S.conj().T - eye).max()
    add("S unitary", res_unitary)
    add("S symmetric", np.abs(S - S.T).max())
    add("T unitary", np.abs(np.abs(T) - 1.0).max())

    S2 = S @ S
    perm = np.argmax(np.abs(S2), axis=1)
    if len(set(perm.tolist())) == r:
        P = np.zeros_like(S2)
        P[np.arange(r), perm] = 1.0
        res_perm = np.abs(S2 - P).max()
    else:
        res_perm = float("inf")
    add("S^2 permutation", res_perm)
    add("S^2 fixes vacuum", np.abs(S2[0, 0] - 1.0))

    min_s0 = float(np.abs(S[0]).min())
    add("S row 0 nonzero", 0.0 if min_s0 > tol else tol - min_s0, min_s0 > tol)

    Nc = _verlinde_tensor(data)
    finite = np.isfinite(Nc).all()
    if finite:
        Nr = np.round(Nc.real)
        int_res = max(float(np.abs(Nc.real - Nr).max()), float(np.abs(Nc.imag).max()))
        nonneg = bool((Nr >= 0).all())
        add("fusion integrality", int_res, int_res <= INTEGER_TOLERANCE and nonneg)
        # axiom (i): the vacuum is the unit of the fusion algebra
        add("vacuum unit", np.abs(Nc[0] - eye).max(), np.abs(Nc[0] - eye).max() <= INTEGER_TOLERANCE)
        table = FusionTable(np.maximum(Nr, 0).astype(np.int64))
        ring_ok = table.unit_ok() and table.commutative_ok() and table.associative_ok()
        add("fusion ring consistency", 0.0 if ring_ok else 1.0, ring_ok)
    else:
        add("fusion integrality", float("inf"), False)
        add("vacuum unit", float("inf"), False)
        add("fusion ring consistency", float("inf"), False)

    add("S^4 identity", np.abs(S2 @ S2 - eye).max())

    M3, S2_, u, prop_res = data._st_cubed
    rep.anomaly_phase = u
    rep.st_proportionality_residual = prop_res
    rep.st_proportional = prop_res <= tol
    add("(ST)^3 = S^2", np.abs(M3 - S2_).max())
    return rep


def fusion_from_S(data: ModularData) -> FusionTable:
    """Fusion coefficients by the Verlinde formula, rounded to integers.

    Raises :class:`FusionIntegralityError` naming the first offending
    (i, j, k) if any sum is farther than the integer tolerance from a
    non-negative integer.
    """
    if float(np.abs(data.S[0]).min()) <= data.tolerance:
        raise DegenerateDataError("S row 0 has (near-)zero entries; Verlinde sums undefined")
    Nc = _verlinde_tensor(data)
    Nr = np.round(Nc.real)
    dev = np.abs(Nc.real - Nr) + np.abs(Nc.imag)
    bad = (dev > INTEGER_TOLERANCE) | (Nr < 0)
    if bad.any():
        i, j, k = np.argwhere(bad)[0]
        raise FusionIntegralityError(int(i), int(j), int(k), complex(Nc[i, j, k]))
    return FusionTable(Nr.astype(np.int64))


def charge_conjugation(data: ModularData) -> np.ndarray:
    """The permutation i -> ibar read off S^2; fixes the vacuum.

    Raises :class:`ConjugationError` when S^2 is not within tolerance of a
    permutation matrix.
    """
    S2 = data.S @ data.S
    r = data.rank
    perm = np.argmax(np.abs(S2), axis=1)
    if len(set(perm.tolist())) != r:
        raise ConjugationError("S^2 rows do not select a bijection")
    P = np.zeros_like(S2)
    P[np.arange(r), perm] = 1.0
    res = float(np.abs(S2 - P).max())
    if res > data.tolerance:
        raise ConjugationError(f"S^2 is not a permutation matrix (residual {res:.3e})")
    if perm[0] != 0:
        raise ConjugationError("S^2 does not fix the vacuum")
    return perm


def double_data(data: ModularData) -> ModularData:
    """The product of the data with its conjugate: S' = S (x) conj(S), t' = t (x) conj(t).

    Pair (i, j) gets index i*rank + j, so (0, 0) is the new vacuum. For any
    input satisfying the matrix axioms the result is strictly anomaly-free
    (the anomaly phases of the factor and its conjugate cancel).
    """
    S2 = np.kron(data.S, data.S.conj())
    T2 = np.kron(data.T, data.T.conj())
    labels = None
    if data.labels is not None:
        labels = tuple(
            f"({a},{b}~)" for a, b in itertools.product(data.labels, data.labels)
        )
    return ModularData(S2, T2, labels, data.tolerance)


def global_index(data: ModularData) -> float:
    """The total squared dimension, computed as 1 / S_00^2.

    Requires S_00 real and positive within tolerance.
    """
    s00 = data.S[0, 0]
    if abs(s00.imag) > data.tolerance or s00.real <= data.tolerance:
        raise DegenerateDataError(f"S_00 = {s00} is not a positive real")
    return float(1.0 / s00.real**2)


def _t_blocks(ta: np.ndarray, tb_conj: np.ndarray, tol: float):
    """Cluster labels of `a` by T eigenvalue and match each cluster in `b`.

    Returns None if the multisets do not match; otherwise a list of candidate
    index lists, cand[i] = labels j of b with t^a_i ~ conj(t^b_j).
    """
    n = len(ta)
    cand = []
    for i in range(n):
        js = [j for j in range(n) if abs(ta[i] - tb_conj[j]) <= tol]
        if not js:
            return None
        cand.append(js)
    # multiset check: count of a-labels sharing a value must equal b-count
    for i in range(n):
        same_a = sum(1 for i2 in range(n) if abs(ta[i] - ta[i2]) <= tol)
        if same_a != len(cand[i]):
            return None
    return cand


def conjugate_equivalent(a: ModularData, b: ModularData) -> np.ndarray | None:
    """Search for a vacuum-fixing permutation pi with S^a = conj(S^b o pi), t^a = conj(t^b o pi).

    Returns the permutation as an index array, or None if no equivalence
    exists. The search is a backtracking match over labels, pruned by the
    T spectrum and by S row 0; blocks of more than a dozen labels sharing a
    T eigenvalue, or searches exceeding the node budget, raise
    :class:`CapacityError`.
    """
    if a.rank != b.rank:
        return None
    n = a.rank
    tol = max(a.tolerance, b.tolerance)
    Sa, Sb = a.S, b.S.conj()
    tb_conj = b.T.conj()
    cand = _t_blocks(a.T, tb_conj, tol)
    if cand is None:
        return None
    if max(len(c) for c in cand) > _BLOCK_CAP:
        raise CapacityError(
            f"a T-eigenvalue block has {max(len(c) for c in cand)} labels "
            f"(cap {_BLOCK_CAP}); refusing brute-force permutation search"
        )
    if 0 not in cand[0] or abs(Sa[0, 0] - Sb[0, 0]) > tol:
        return None
    # row-0 pruning: pi(0) = 0 forces S^a_{0i} = conj(S^b_{0 pi(i)})
    cand = [
        [j for j in js if abs(Sa[0, i] - Sb[0, j]) <= tol]
        for i, js in enumerate(cand)
    ]
    cand[0] = [0]
    if any(not js for js in cand):
        return None

    perm = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    nodes = 0

    def assign(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        nodes += 1
        if nodes > _NODE_BUDGET:
            raise CapacityError("conjugate-equivalence search exceeded node budget")
        for j in cand[i]:
            if used[j]:
                continue
            ok = True
            for i2 in range(i + 1):
                j2 = j if i2 == i else perm[i2]
                if abs(Sa[i, i2] - Sb[j, j2]) > tol:
                    ok = False
                    break
            if not ok:
                continue
            perm[i] = j
            used[j] = True
            if assign(i + 1):
                return True
            used[j] = False
            perm[i] = -1
        return False

    return perm.copy() if assign(0) else None

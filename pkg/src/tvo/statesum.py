"""State-sum evaluation of triangulation invariants for pointed 6j data.

The evaluator implements

    Z = lambda^(-V) * sum_colorings  prod_edges [X]^(1/2) * prod_tets W

summing over edge colorings, with the inner face-coloring sum collapsing to
a single product because pointed data has one-dimensional face spaces. A
coloring is admissible when every face satisfies the fusion constraint;
inadmissible colorings are pruned during the depth-first enumeration and
contribute exactly zero.

Conventions: edges are oriented from the smaller to the larger vertex
class, each tetrahedron is read in the order of its vertex classes, and a
tetrahedron whose ordering disagrees with the global orientation
contributes the conjugated weight. Every tetrahedron must have four
distinct vertex classes for this ordering to exist; complexes violating
that (or non-orientable ones) are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .catalog import cyclic_cocycle
from .errors import StructureError, UnsupportedFeatureError
from .surgery import InvariantValue
from .triangulation import TET_EDGES, Triangulation


def _perm_sign(seq) -> int:
    inv = 0
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


@dataclass(eq=False)
class SixJData:
    """6j weight data on a finite label set with vacuum label 0.

    ``qdim`` holds the squared quantum dimension [X] of each label,
    ``admissible`` the ordered triples (a, b, c) meaning a and b fuse to c,
    and ``weights`` maps the six edge labels of a tetrahedron, ordered
    (e01, e02, e03, e12, e13, e23) by the tetrahedron's vertex order, to its
    weight. General data is accepted; evaluation and the pentagon check
    require single-channel (pointed) fusion.
    """

    num_labels: int
    qdim: np.ndarray
    admissible: frozenset
    weights: dict
    name: str = ""

    def __post_init__(self):
        q = np.array(self.qdim, dtype=float)
        if q.shape != (self.num_labels,) or (q <= 0).any():
            raise StructureError("qdim must be positive, one entry per label")
        if abs(q[0] - 1.0) > 1e-12:
            raise StructureError("the vacuum label must have [X] = 1")
        self.qdim = q

    @property
    def global_index(self) -> float:
        return float(self.qdim.sum())

    @cached_property
    def _channel(self):
        """(a, b) -> c maps when fusion is single-channel, else None."""
        chan: dict = {}
        for a, b, c in self.admissible:
            if (a, b) in chan and chan[(a, b)] != c:
                return None
            chan[(a, b)] = c
        return chan

    @property
    def pointed(self) -> bool:
        """Single fusion channel per pair, unit dimensions, invertible divisions."""
        chan = self._channel
        if chan is None or np.abs(self.qdim - 1.0).max() > 1e-12:
            return False
        left = {(b, c) for _, b, c in self.admissible}
        right = {(a, c) for a, _, c in self.admissible}
        n = self.num_labels
        return len(chan) == n * n and len(left) == n * n and len(right) == n * n

    @cached_property
    def _left_div(self):
        # (b, c) -> the a with (a, b, c) admissible
        return {(b, c): a for a, b, c in self.admissible}

    @cached_property
    def _mid_div(self):
        # (a, c) -> the b with (a, b, c) admissible
        return {(a, c): b for a, b, c in self.admissible}

    def tet_weight(self, key) -> complex:
        try:
            return self.weights[key]
        except KeyError:
            raise StructureError(f"no 6j weight for edge labels {key}") from None

    def key_from_triple(self, a: int, b: int, c: int):
        """The 6-tuple weight key of the tetrahedron with consecutive labels a, b, c."""
        chan = self._channel
        ab = chan[(a, b)]
        bc = chan[(b, c)]
        abc = chan[(ab, c)]
        return (a, ab, abc, b, bc, c)


def pointed_sixj(n: int, k: int) -> SixJData:
    """Pointed 6j data on Z/n with the cyclic degree-3 cocycle of parameter k.

    All dimensions are 1, (a, b) fuses to a+b mod n, and the tetrahedron
    weight is omega_k(a, b, c) on the three consecutive edge labels.
    """
    if n < 1:
        raise StructureError("pointed_sixj requires n >= 1")
    omega = cyclic_cocycle(n, k)
    admissible = frozenset((a, b, (a + b) % n) for a in range(n) for b in range(n))
    weights = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                key = (a, (a + b) % n, (a + b + c) % n, b, (b + c) % n, c)
                weights[key] = omega(a, b, c)
    return SixJData(
        num_labels=n,
        qdim=np.ones(n),
        admissible=admissible,
        weights=weights,
        name=f"vec-z{n}-{k % n}",
    )


@dataclass
class PentagonReport:
    passed: bool
    max_residual: float
    checked: int


def verify_pentagon(sixj: SixJData, tol: float = 1e-9) -> PentagonReport:
    """Check the pentagon identity on all label 4-tuples of single-channel data.

    For weight tables of cocycle type this is exactly the degree-3 cocycle
    condition W(b,c,d) W(a,bc,d) W(a,b,c) = W(ab,c,d) W(a,b,cd).
    """
    chan = sixj._channel
    if chan is None:
        raise UnsupportedFeatureError("pentagon check implemented for single-channel data only")
    n = sixj.num_labels
    worst = 0.0
    checked = 0
    for a in range(n):
        for b in range(n):
            ab = chan[(a, b)]
            for c in range(n):
                bc = chan[(b, c)]
                abc = chan[(ab, c)]
                w_abc = sixj.tet_weight(sixj.key_from_triple(a, b, c))
                for d in range(n):
                    lhs = (
                        sixj.tet_weight(sixj.key_from_triple(b, c, d))
                        * sixj.tet_weight(sixj.key_from_triple(a, bc, d))
                        * w_abc
                    )
                    rhs = sixj.tet_weight(sixj.key_from_triple(ab, c, d)) * sixj.tet_weight(
                        sixj.key_from_triple(a, b, chan[(c, d)])
                    )
                    worst = max(worst, abs(lhs - rhs))
                    checked += 1
    return PentagonReport(worst <= tol, worst, checked)


@dataclass
class _Evaluation:
    """Precomputed combinatorial layout for one (sixj, triangulation) pair."""

    num_edges: int
    faces: list  # (e_lowmid, e_midhigh, e_lowhigh) per face class
    tets: list  # (edge class 6-tuple in rank order, conjugate flag)
    schedule: list  # (edge, forcing face index or -1, slot, faces to check)


def _layout(sixj: SixJData, tri: Triangulation) -> _Evaluation:
    tri.validate_closed_manifold()
    vclass = tri.vertex_class
    eclass = tri.edge_class
    for t in range(tri.num_tets):
        if len(set(vclass[t])) != 4:
            raise UnsupportedFeatureError(
                f"tetrahedron {t} has repeated vertex classes; the vertex-order "
                "convention needs 4 distinct classes per tetrahedron"
            )
    orient = tri.orientation
    if orient is None:
        raise UnsupportedFeatureError("triangulation is not orientable")

    edge_idx = {pair: i for i, pair in enumerate(TET_EDGES)}

    faces = []
    for (t, f) in tri.face_classes:
        slots = sorted((v for v in range(4) if v != f), key=lambda v: vclass[t][v])
        x, y, z = slots
        e1 = eclass[t][edge_idx[tuple(sorted((x, y)))]]
        e2 = eclass[t][edge_idx[tuple(sorted((y, z)))]]
        e3 = eclass[t][edge_idx[tuple(sorted((x, z)))]]
        faces.append((e1, e2, e3))

    tets = []
    for t in range(tri.num_tets):
        rs = sorted(range(4), key=lambda v: vclass[t][v])
        key = tuple(
            eclass[t][edge_idx[tuple(sorted((rs[i], rs[j])))]]
            for i in range(4)
            for j in range(i + 1, 4)
        )
        eps = orient[t] * _perm_sign(rs)
        tets.append((key, eps < 0))

    # static schedule: force an edge from a face whenever two of its three
    # (distinct) edges are known, otherwise branch on the lowest unknown edge
    E = tri.num_edges
    known = [False] * E
    schedule = []
    face_done = [False] * len(faces)

    def completed_faces(edge):
        out = []
        for fi, (a, b, c) in enumerate(faces):
            if face_done[fi]:
                continue
            es = {a, b, c}
            if edge in es and all(known[e] or e == edge for e in es):
                out.append(fi)
                face_done[fi] = True
        return out

    remaining = E
    while remaining:
        forced = None
        for fi, (a, b, c) in enumerate(faces):
            if face_done[fi] or len({a, b, c}) != 3:
                continue
            unknown = [e for e in (a, b, c) if not known[e]]
            if len(unknown) == 1:
                slot = (a, b, c).index(unknown[0])
                forced = (unknown[0], fi, slot)
                break
        if forced is None:
            edge = known.index(False)
            known[edge] = True
            checks = completed_faces(edge)
            schedule.append((edge, -1, -1, checks))
        else:
            edge, fi, slot = forced
            known[edge] = True
            face_done[fi] = True
            checks = completed_faces(edge)
            schedule.append((edge, fi, slot, checks))
        remaining -= 1
    return _Evaluation(E, faces, tets, schedule)


def tv_evaluate(sixj: SixJData, tri: Triangulation) -> InvariantValue:
    """Evaluate the state sum of ``sixj`` over ``tri``.

    Requires pointed (single-channel, dimension-one) 6j data; the inner
    face-coloring sum is then a single product per admissible edge coloring.
    """
    if not sixj.pointed:
        raise UnsupportedFeatureError(
            "state-sum evaluation supports pointed (multiplicity-free, "
            "dimension-one) 6j data only"
        )
    layout = _layout(sixj, tri)
    n = sixj.num_labels
    chan = sixj._channel
    ldiv = sixj._left_div
    mdiv = sixj._mid_div
    adm = sixj.admissible
    faces = layout.faces
    wpos = dict(sixj.weights)
    wneg = {k: v.conjugate() for k, v in wpos.items()}

    colors = [0] * layout.num_edges
    tet_terms = [(key, wneg if conj else wpos) for key, conj in layout.tets]
    total = 0.0 + 0.0j

    def admissible_checks(checks) -> bool:
        for fi in checks:
            a, b, c = faces[fi]
            if (colors[a], colors[b], colors[c]) not in adm:
                return False
        return True

    def descend(pos: int):
        nonlocal total
        if pos == len(layout.schedule):
            w = 1.0 + 0.0j
            for key, table in tet_terms:
                w *= table[
                    (
                        colors[key[0]],
                        colors[key[1]],
                        colors[key[2]],
                        colors[key[3]],
                        colors[key[4]],
                        colors[key[5]],
                    )
                ]
            total += w
            return
        edge, fi, slot, checks = layout.schedule[pos]
        if fi >= 0:
            a, b, c = faces[fi]
            if slot == 0:
                val = ldiv.get((colors[b], colors[c]))
            elif slot == 1:
                val = mdiv.get((colors[a], colors[c]))
            else:
                val = chan.get((colors[a], colors[b]))
            if val is None:
                return
            colors[edge] = val
            if admissible_checks(checks):
                descend(pos + 1)
        else:
            for val in range(n):
                colors[edge] = val
                if admissible_checks(checks):
                    descend(pos + 1)

    descend(0)

    V = tri.num_vertices
    lam = sixj.global_index
    # prod_E [X]^(1/2) is identically 1 for pointed data
    value = complex(total) * lam ** (-V)
    return InvariantValue(value, f"statesum({sixj.name or 'sixj'}, {tri.num_tets} tets)")

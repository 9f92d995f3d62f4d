"""Tetrahedral gluing complexes and the 1-4 / 2-3 bistellar moves.

A triangulation is a set of abstract tetrahedra with faces glued in pairs.
Tetrahedron vertices carry local slots 0..3; face f is the face opposite
slot f. A gluing of face (t, f) is stored as ``gluings[(t, f)] = (t2, perm)``
where ``perm`` is a permutation of {0,1,2,3} with ``perm[f]`` the glued face
of t2 and ``perm[v]`` the image slot of each face vertex v != f. The reverse
gluing with the inverse permutation is always stored too, and a face is
never glued to itself.

Vertex, edge and face classes are the equivalence classes generated by the
gluings; they are computed once and cached (instances are immutable by
convention, the moves build new triangulations).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import PreconditionError, StructureError

#: the six local edges of a tetrahedron in a fixed order
TET_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_EDGE_INDEX = {pair: i for i, pair in enumerate(TET_EDGES)}


def inverse_perm(perm):
    inv = [0, 0, 0, 0]
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def _perm_sign3(seq) -> int:
    """Sign of the permutation sorting a 3-sequence of distinct numbers."""
    inv = 0
    for i in range(3):
        for j in range(i + 1, 3):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def classes(self):
        roots = {}
        out = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in roots:
                roots[r] = len(roots)
            out.append(roots[r])
        return out, len(roots)


@dataclass
class Triangulation:
    """A gluing complex on ``num_tets`` tetrahedra.

    ``gluings`` may leave faces unglued while building by hand, but the
    derived quantities and the state sum require a closed complex. The
    constructor validates indices, the involution property, and that no
    face is glued to itself.
    """

    num_tets: int
    gluings: dict

    def __post_init__(self):
        if self.num_tets < 1:
            raise StructureError("need at least one tetrahedron")
        clean = {}
        for key, val in self.gluings.items():
            t, f = key
            t2, perm = val
            perm = tuple(int(x) for x in perm)
            if not (0 <= t < self.num_tets and 0 <= t2 < self.num_tets):
                raise StructureError(f"gluing {key} -> {val}: tetrahedron index out of range")
            if not (0 <= f < 4):
                raise StructureError(f"gluing {key}: face index out of range")
            if sorted(perm) != [0, 1, 2, 3]:
                raise StructureError(f"gluing {key}: {perm} is not a permutation of 0..3")
            clean[(t, f)] = (t2, perm)
        for (t, f), (t2, perm) in clean.items():
            f2 = perm[f]
            if (t2, f2) == (t, f):
                raise StructureError(f"face ({t},{f}) glued to itself")
            back = clean.get((t2, f2))
            if back is None or back != (t, inverse_perm(perm)):
                raise StructureError(
                    f"gluing involution broken at tet {t} face {f} "
                    f"(reverse gluing of tet {t2} face {f2} missing or inconsistent)"
                )
        self.gluings = clean

    # -- derived combinatorics ------------------------------------------------

    @property
    def is_closed(self) -> bool:
        return len(self.gluings) == 4 * self.num_tets

    def require_closed(self):
        if not self.is_closed:
            unglued = [
                (t, f)
                for t in range(self.num_tets)
                for f in range(4)
                if (t, f) not in self.gluings
            ]
            raise StructureError(f"triangulation has unglued faces, e.g. {unglued[:3]}")

    @cached_property
    def vertex_class(self):
        """vertex_class[t][v] = id of the vertex equivalence class of corner (t, v)."""
        uf = _UnionFind(4 * self.num_tets)
        for (t, f), (t2, perm) in self.gluings.items():
            for v in range(4):
                if v != f:
                    uf.union(4 * t + v, 4 * t2 + perm[v])
        flat, self._num_vertices = uf.classes()
        return [flat[4 * t : 4 * t + 4] for t in range(self.num_tets)]

    @cached_property
    def edge_class(self):
        """edge_class[t][e] = class id of local edge TET_EDGES[e] of tet t."""
        uf = _UnionFind(6 * self.num_tets)
        for (t, f), (t2, perm) in self.gluings.items():
            for a, b in TET_EDGES:
                if f in (a, b):
                    continue
                ia, ib = perm[a], perm[b]
                pair = (ia, ib) if ia < ib else (ib, ia)
                uf.union(6 * t + _EDGE_INDEX[(a, b)], 6 * t2 + _EDGE_INDEX[pair])
        flat, self._num_edges = uf.classes()
        return [flat[6 * t : 6 * t + 6] for t in range(self.num_tets)]

    @property
    def num_vertices(self) -> int:
        self.vertex_class
        return self._num_vertices

    @property
    def num_edges(self) -> int:
        self.edge_class
        return self._num_edges

    @property
    def num_faces(self) -> int:
        glued = len(self.gluings) // 2
        return 4 * self.num_tets - glued

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces - self.num_tets

    @cached_property
    def face_classes(self):
        """One representative (t, f) per face class of a closed complex."""
        self.require_closed()
        reps = []
        seen = set()
        for (t, f), (t2, perm) in sorted(self.gluings.items()):
            if (t, f) in seen:
                continue
            seen.add((t, f))
            seen.add((t2, perm[f]))
            reps.append((t, f))
        return reps

    @cached_property
    def orientation(self):
        """Per-tetrahedron signs making all gluings orientation-reversing on faces.

        Seeded at tetrahedron 0 with +1. Returns None for non-orientable
        complexes. The sign rule for a gluing (t,f) -> (t2,f2) with slot map
        perm is o(t2) = -o(t) * (-1)^(f+f2) * sign(sort(images of the sorted
        face vertices)).
        """
        self.require_closed()
        signs = [0] * self.num_tets
        for start in range(self.num_tets):
            if signs[start]:
                continue
            signs[start] = 1
            stack = [start]
            while stack:
                t = stack.pop()
                for f in range(4):
                    t2, perm = self.gluings[(t, f)]
                    f2 = perm[f]
                    face = [v for v in range(4) if v != f]
                    s = _perm_sign3([perm[v] for v in face])
                    needed = -signs[t] * ((-1) ** (f + f2)) * s
                    if signs[t2] == 0:
                        signs[t2] = needed
                        stack.append(t2)
                    elif signs[t2] != needed:
                        return None
        return signs

    def validate_closed_manifold(self):
        """Closed-complex invariants: every face glued, Euler characteristic 0."""
        self.require_closed()
        chi = self.euler_characteristic
        if chi != 0:
            raise StructureError(f"Euler characteristic {chi} != 0; not a closed 3-manifold")


def boundary_4_simplex() -> Triangulation:
    """The boundary of the 4-simplex: 5 tetrahedra triangulating the 3-sphere.

    Tetrahedron i spans the global vertices {0..4} minus {i}, in increasing
    order; tets i and j are glued along the face omitting both.
    """
    verts = [[g for g in range(5) if g != i] for i in range(5)]
    gluings = {}
    for i in range(5):
        for j in range(5):
            if i == j:
                continue
            f_i = verts[i].index(j)  # face of tet i opposite global vertex j
            f_j = verts[j].index(i)
            perm = [0, 0, 0, 0]
            perm[f_i] = f_j
            for v in range(4):
                if v != f_i:
                    perm[v] = verts[j].index(verts[i][v])
            gluings[(i, f_i)] = (j, tuple(perm))
    return Triangulation(5, gluings)


def _remap_builder(removed: set, num_tets: int):
    """Map old tet ids (outside ``removed``) to compacted new ids."""
    mapping = {}
    nxt = 0
    for t in range(num_tets):
        if t not in removed:
            mapping[t] = nxt
            nxt += 1
    return mapping, nxt


def pachner_14(tri: Triangulation, t: int) -> Triangulation:
    """Replace tetrahedron ``t`` by four around a new interior vertex.

    The four new tetrahedra B_f keep the slot names of ``t`` except that
    slot f holds the new vertex; B_f inherits the old gluing of face (t, f).
    Adds 3 tetrahedra and 1 vertex.
    """
    tri.require_closed()
    if not 0 <= t < tri.num_tets:
        raise StructureError(f"no tetrahedron {t}")
    remap, base = _remap_builder({t}, tri.num_tets)
    B = [base + f for f in range(4)]

    gluings = {}
    for (s, f), (s2, perm) in tri.gluings.items():
        if s != t and s2 != t:
            gluings[(remap[s], f)] = (remap[s2], perm)

    # internal faces: B_f face g <-> B_g face f via the transposition (f g)
    for f in range(4):
        for g in range(4):
            if f != g:
                perm = list(range(4))
                perm[f], perm[g] = g, f
                gluings[(B[f], g)] = (B[g], tuple(perm))

    # external faces: B_f face f inherits the old gluing of (t, f)
    for f in range(4):
        s2, perm = tri.gluings[(t, f)]
        if s2 == t:
            f2 = perm[f]
            gluings[(B[f], f)] = (B[f2], perm)
        else:
            gluings[(B[f], f)] = (remap[s2], perm)
            gluings[(remap[s2], perm[f])] = (B[f], inverse_perm(perm))
    return Triangulation(tri.num_tets + 3, gluings)


def pachner_23(tri: Triangulation, t: int, f: int) -> Triangulation:
    """Replace the two tetrahedra sharing face (t, f) by three around a new edge.

    The named face must join two distinct tetrahedra. Adds 1 tetrahedron and
    1 edge. The new tetrahedron C_v (one per vertex v of the shared face)
    has slot 0 at the apex of t, slot 1 at the apex of the partner, and
    slots 2, 3 at the remaining two shared vertices in increasing t-slot
    order.
    """
    tri.require_closed()
    if (t, f) not in tri.gluings:
        raise StructureError(f"no face ({t},{f})")
    t2, pi = tri.gluings[(t, f)]
    if t2 == t:
        raise PreconditionError("2-3 move needs the face to join two distinct tetrahedra")
    f2 = pi[f]
    F = [v for v in range(4) if v != f]  # shared-face slots in t

    remap, base = _remap_builder({t, t2}, tri.num_tets)
    C = {v: base + i for i, v in enumerate(F)}

    def others(v):
        p, q = sorted(set(F) - {v})
        return p, q

    # old outer faces -> (new tet, new face, old-slot -> new-slot map)
    outer = {}
    for v in F:
        p, q = others(v)
        outer[(t, v)] = (C[v], 1, {f: 0, v: 1, p: 2, q: 3})
        outer[(t2, pi[v])] = (C[v], 0, {f2: 1, pi[v]: 0, pi[p]: 2, pi[q]: 3})

    gluings = {}
    for (s, g), (s2, perm) in tri.gluings.items():
        if s not in (t, t2) and s2 not in (t, t2):
            gluings[(remap[s], g)] = (remap[s2], perm)

    # internal faces: the face of C_v omitting shared token w is also the
    # face of C_w omitting shared token v
    for v in F:
        p, q = others(v)
        slot_v = {"a1": 0, "a2": 1, p: 2, q: 3}
        for omitted in (p, q):
            w = omitted
            pw, qw = others(w)
            slot_w = {"a1": 0, "a2": 1, pw: 2, qw: 3}
            perm = [0, 0, 0, 0]
            for token, sv in slot_v.items():
                perm[sv] = slot_w[v] if token == omitted else slot_w[token]
            gluings[(C[v], slot_v[omitted])] = (C[w], tuple(perm))

    # external faces, including old gluings that pointed back into {t, t2}
    done = set()
    for key, (new_tet, new_face, slot_map) in outer.items():
        if key in done:
            continue
        s, g = key
        s_star, rho = tri.gluings[key]
        g_star = rho[g]
        inv_src = {new: old for old, new in slot_map.items()}
        if (s_star, g_star) in outer:
            tgt_tet, tgt_face, tgt_map = outer[(s_star, g_star)]
            perm = tuple(tgt_map[rho[inv_src[x]]] for x in range(4))
            gluings[(new_tet, new_face)] = (tgt_tet, perm)
            gluings[(tgt_tet, tgt_face)] = (new_tet, inverse_perm(perm))
            done.add((s_star, g_star))
        else:
            perm = tuple(rho[inv_src[x]] for x in range(4))
            gluings[(new_tet, new_face)] = (remap[s_star], perm)
            gluings[(remap[s_star], g_star)] = (new_tet, inverse_perm(perm))
        done.add(key)

    return Triangulation(tri.num_tets + 1, gluings)

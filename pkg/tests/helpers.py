"""Independent brute-force oracles used to pin the fast evaluators.

Everything here is written as plainly as possible (nested loops, full
enumeration, no pruning or contraction tricks) so that agreement with the
library is meaningful.
"""

import itertools

import numpy as np

from tvo.triangulation import TET_EDGES, Triangulation


def verlinde_loops(S):
    """Literal triple-sum Verlinde coefficients."""
    m = S.shape[0]
    N = np.zeros((m, m, m), dtype=complex)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                acc = 0.0 + 0.0j
                for l in range(m):
                    acc += S[i, l] * S[j, l] * np.conj(S[l, k]) / S[0, l]
                N[i, j, k] = acc
    return N


def lens_p1_loops(S, T, p):
    return sum(T[i] ** p * S[i, 0] ** 2 for i in range(S.shape[0]))


def lens_p2_loops(S, T, p):
    m = S.shape[0]
    acc = 0.0 + 0.0j
    for i in range(m):
        for j in range(m):
            acc += T[i] ** ((p + 1) // 2) * T[j] ** 2 * S[i, 0] * S[j, 0] * S[i, j]
    return acc


def brieskorn_loops(S, T, p, q, r):
    """The printed quadruple sum, evaluated with four nested loops."""
    m = S.shape[0]
    acc = 0.0 + 0.0j
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    acc += (
                        T[i] ** p
                        * T[j] ** q
                        * T[k] ** r
                        * T[l]
                        * S[i, 0]
                        * S[j, 0]
                        * S[k, 0]
                        * S[i, l]
                        * S[j, l]
                        * S[k, l]
                        / S[l, 0]
                    )
    return acc


def tv_bruteforce(sixj, tri: Triangulation):
    """Full enumeration of all edge colorings, no pruning or forcing.

    Re-derives the rank orders, face constraints and orientation handling
    from the triangulation's class data independently of the evaluator's
    schedule machinery.
    """
    tri.validate_closed_manifold()
    vclass = tri.vertex_class
    eclass = tri.edge_class
    orient = tri.orientation
    assert orient is not None
    n = sixj.num_labels
    E = tri.num_edges
    edge_idx = {pair: i for i, pair in enumerate(TET_EDGES)}

    def parity(seq):
        inv = sum(
            1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
        )
        return -1 if inv % 2 else 1

    face_constraints = []
    for t in range(tri.num_tets):
        for f in range(4):
            slots = sorted((v for v in range(4) if v != f), key=lambda v: vclass[t][v])
            x, y, z = slots
            face_constraints.append(
                (
                    eclass[t][edge_idx[tuple(sorted((x, y)))]],
                    eclass[t][edge_idx[tuple(sorted((y, z)))]],
                    eclass[t][edge_idx[tuple(sorted((x, z)))]],
                )
            )

    tet_keys = []
    for t in range(tri.num_tets):
        rs = sorted(range(4), key=lambda v: vclass[t][v])
        key = tuple(
            eclass[t][edge_idx[tuple(sorted((rs[i], rs[j])))]]
            for i in range(4)
            for j in range(i + 1, 4)
        )
        tet_keys.append((key, orient[t] * parity(rs)))

    total = 0.0 + 0.0j
    for colors in itertools.product(range(n), repeat=E):
        if any(
            (colors[a], colors[b], colors[c]) not in sixj.admissible
            for a, b, c in face_constraints
        ):
            continue
        w = 1.0 + 0.0j
        for key, eps in tet_keys:
            val = sixj.weights[tuple(colors[e] for e in key)]
            w *= val if eps > 0 else np.conj(val)
        total += w
    return total * sixj.global_index ** (-tri.num_vertices)


def two_tet_sphere() -> Triangulation:
    """The double of a tetrahedron: two tets glued along all four faces by identity maps."""
    ident = (0, 1, 2, 3)
    gluings = {}
    for f in range(4):
        gluings[(0, f)] = (1, ident)
        gluings[(1, f)] = (0, ident)
    return Triangulation(2, gluings)


def random_pachner_sequence(tri, count, rng, max_new_vertices=3, p_vertex_move=0.25):
    """Apply ``count`` random 1-4 / 2-3 moves, keeping tetrahedra class-distinct.

    2-3 moves are only applied where the two apex vertex classes differ so
    the result stays evaluable; 1-4 moves are capped to keep the coloring
    enumeration desk-scale (each added vertex multiplies the number of
    admissible colorings by the label count).
    """
    from tvo.triangulation import pachner_14, pachner_23

    added = 0
    applied = []
    for _ in range(count):
        do14 = added < max_new_vertices and rng.random() < p_vertex_move
        if do14:
            t = int(rng.integers(tri.num_tets))
            tri = pachner_14(tri, t)
            added += 1
            applied.append(("1-4", t))
            continue
        vclass = tri.vertex_class
        candidates = []
        for (t, f), (t2, perm) in tri.gluings.items():
            if t2 == t or (t2, perm[f]) < (t, f):
                continue
            if vclass[t][f] != vclass[t2][perm[f]]:
                candidates.append((t, f))
        assert candidates, "no legal 2-3 move available"
        t, f = candidates[int(rng.integers(len(candidates)))]
        tri = pachner_23(tri, t, f)
        applied.append(("2-3", (t, f)))
    return tri, applied

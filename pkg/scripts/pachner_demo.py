#!/usr/bin/env python3
"""Walk a random Pachner-move sequence and watch the state sum stay constant.

Usage: python scripts/pachner_demo.py [--n 3] [--k 1] [--moves 12] [--seed 7]
"""

import argparse

import numpy as np

from tvo import boundary_4_simplex, pointed_sixj, tv_evaluate
from tvo.triangulation import pachner_14, pachner_23


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--moves", type=int, default=12)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-new-vertices", type=int, default=3)
    args = ap.parse_args()

    sixj = pointed_sixj(args.n, args.k)
    tri = boundary_4_simplex()
    rng = np.random.default_rng(args.seed)
    added = 0

    z = tv_evaluate(sixj, tri).value
    print(f"{'move':<12} {'tets':>5} {'verts':>6} {'edges':>6} {'value':>24}")
    print(f"{'(start)':<12} {tri.num_tets:>5} {tri.num_vertices:>6} {tri.num_edges:>6} "
          f"{z.real:>16.12f}{z.imag:>+.1e}j")

    for _ in range(args.moves):
        if added < args.max_new_vertices and rng.random() < 0.25:
            t = int(rng.integers(tri.num_tets))
            tri = pachner_14(tri, t)
            added += 1
            name = f"1-4 @tet{t}"
        else:
            vclass = tri.vertex_class
            candidates = [
                (t, f)
                for (t, f), (t2, perm) in tri.gluings.items()
                if t2 != t and (t, f) < (t2, perm[f]) and vclass[t][f] != vclass[t2][perm[f]]
            ]
            t, f = candidates[int(rng.integers(len(candidates)))]
            tri = pachner_23(tri, t, f)
            name = f"2-3 @({t},{f})"
        z = tv_evaluate(sixj, tri).value
        print(f"{name:<12} {tri.num_tets:>5} {tri.num_vertices:>6} {tri.num_edges:>6} "
              f"{z.real:>16.12f}{z.imag:>+.1e}j")


if __name__ == "__main__":
    main()

"""Worst relative cut error of the sparsifier as the strength constant shrinks.

At the default constant every edge is kept exactly on graphs this small.
The per-level rate is min(2q/eps^2, 1), so sampling only starts once both
the constant is small and eps is large.
"""
import argparse
import random

from cmpopt.cuts import CutOracle, CutPrimitives, SparsifierConfig, build_sparsifier
from cmpopt.cuts.graph import gnp, mask_of


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cuts", type=int, default=50)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    g = gnp(args.n, args.p, rng)
    cuts = [rng.sample(range(args.n), rng.randint(1, args.n - 1)) for _ in range(args.cuts)]
    print(f"G: n={args.n} m={g.m}")
    for eps in (0.1, 0.5, 0.9):
        for const in (4000, 10, 1, 0.3):
            cfg = SparsifierConfig(eps=eps, strength_const=const, seed=args.seed)
            H = build_sparsifier(CutPrimitives(CutOracle(g)), cfg, random.Random(args.seed))
            worst = max(abs(H.cut_value(S) / g.cut_value(mask_of(S)) - 1) for S in cuts)
            print(f"eps={eps} C={const:<5} edges(H)={H.m:5d} exact={H.exact!s:5} worst_error={worst:.4f}")


if __name__ == "__main__":
    main()

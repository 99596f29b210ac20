"""Write scrambled homomorphism files (oracle-colored G(n, p) graphs) for `raagcolor extract`.

    python scripts/make_scrambled_fixtures.py out_dir --count 100 --n 30 --p 0.15
    for f in out_dir/*.json; do raagcolor extract "$f" > /dev/null || echo "$f"; done
"""

import argparse
import pathlib
import random

from raagcolor.graph import min_coloring_oracle, random_graph
from raagcolor.homomorphism import serialize_hom
from raagcolor.instances import scramble
from raagcolor.reduction import coloring_to_surjection


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out_dir")
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--p", type=float, default=0.15)
    ap.add_argument("--moves", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        seed = args.seed + i
        g = random_graph(args.n, args.p, seed)
        c = min_coloring_oracle(g, args.n)
        h, _ = scramble(coloring_to_surjection(g, c), random.Random(seed), args.moves)
        (out / f"scrambled_{i:03d}_k{c.color_count}.json").write_text(serialize_hom(h))
    print(f"wrote {args.count} files to {out}")


if __name__ == "__main__":
    main()

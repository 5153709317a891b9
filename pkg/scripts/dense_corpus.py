"""Dump the dense-case corpus (minimum degree >= n/2) as graph files.

    python scripts/dense_corpus.py --out results/dense --seeds 60
"""

import argparse
from pathlib import Path

from mec2 import formats
from mec2.generators import complete, complete_bipartite, random_graph


def build(seeds: int):
    for n in range(3, 13):
        yield f"k{n:02d}.gr", complete(n)
        if n % 2 == 0:
            yield f"k{n // 2}_{n // 2}.gr", complete_bipartite(n // 2, n // 2)
        for s in range(seeds):
            g = random_graph(n, 0.5 + 0.45 * (s % 10) / 9, 7_000 + 100 * n + s)
            if 2 * g.min_degree() >= n:
                yield f"dense_n{n:02d}_s{s:02d}.gr", g


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results/dense"))
    ap.add_argument("--seeds", type=int, default=60)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    count = 0
    for name, g in build(args.seeds):
        (args.out / name).write_text(formats.emit_graph(g))
        count += 1
    print(f"wrote {count} graphs to {args.out}")

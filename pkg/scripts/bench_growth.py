"""Write growth corpora and benchmark them through ``mec2 bench``.

Two families: wheels (|F| = spokes) for the cycle-space engine and complete
graphs (growing branch width) for the branch-decomposition engine. Produces
one CSV per family plus a short table on stdout.

    python scripts/bench_growth.py --out results/
"""

from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass
from pathlib import Path

from mec2 import formats
from mec2.cli import main
from mec2.generators import complete, grid, wheel


@dataclass
class GrowthConfig:
    out: Path = Path("results")
    wheel_spokes: tuple[int, ...] = (3, 4, 5, 6, 7, 8, 9, 10)
    clique_sizes: tuple[int, ...] = (3, 4, 5, 6, 7)
    grid_sides: tuple[int, ...] = (2, 3, 4, 5)


def write_corpus(root: Path, graphs) -> Path:
    root.mkdir(parents=True, exist_ok=True)
    for name, g in graphs:
        (root / name).write_text(formats.emit_graph(g))
    return root


def run(cfg: GrowthConfig) -> dict[str, Path]:
    families = {
        "cyclespace": [(f"wheel{s:02d}.gr", wheel(s)) for s in cfg.wheel_spokes],
        "branchdp": [(f"k{n:02d}.gr", complete(n)) for n in cfg.clique_sizes]
        + [(f"grid{k}x{k}.gr", grid(k, k)) for k in cfg.grid_sides],
    }
    written = {}
    for engine, graphs in families.items():
        corpus = write_corpus(cfg.out / f"corpus_{engine}", graphs)
        csv_path = cfg.out / f"growth_{engine}.csv"
        main(["bench", str(corpus), "--engines", engine, "--out", str(csv_path)])
        written[engine] = csv_path
    return written


def summarise(path: Path) -> None:
    rows = sorted(csv.DictReader(path.open()), key=lambda r: (int(r["param"]), int(r["ops"])))
    print(f"\n{path.name}")
    print(f"{'instance':<14}{'param':>6}{'ops':>10}{'millis':>12}")
    for r in rows:
        print(f"{r['instance']:<14}{r['param']:>6}{r['ops']:>10}{float(r['millis']):>12.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=GrowthConfig.out)
    cfg = GrowthConfig(out=ap.parse_args().out)
    for p in run(cfg).values():
        summarise(p)

#!/usr/bin/env python3
"""Run the desk-scale benchmark sweep and print the summary table.

Datasets: cora.txt and topology.txt from data/ when present, plus the
three synthetic models at a configurable size. All five samplers run
under their defining edge semantics, phi in {0.02..0.1}, 10 repetitions.

Usage: python scripts/desk_sweep.py [--nodes 20000] [--reps 10]
       [--out bench_out] [--workers 2] [--data data/]
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from graphsample.generators import GeneratorConfig
from graphsample.harness import (
    DatasetSpec,
    ExperimentConfig,
    default_method_suite,
    run_experiment,
)

REPO_ROOT = Path(__file__).resolve().parent.parent


def build_datasets(data_dir: Path, nodes: int, gen_seed: int = 100) -> tuple[DatasetSpec, ...]:
    specs = []
    for name, category in (("cora", "citation"), ("topology", "technological")):
        path = data_dir / f"{name}.txt"
        if path.is_file():
            specs.append(DatasetSpec(name=name, path=str(path), category=category))
    for model in ("ff", "sw", "mm"):
        specs.append(DatasetSpec(
            name=model, category="synthetic",
            generator=GeneratorConfig(model=model, nodes=nodes, seed=gen_seed)))
    return tuple(specs)


def ordering_checks(summary: list[dict]) -> dict[str, bool]:
    """The trend checks: LS best at clustering RMSE and path-length JSD,
    FS or XS beats RD on assortativity RMSE."""
    def row(metric, prop):
        r = next(x for x in summary if x["metric"] == metric and x["property"] == prop)
        return {k: v for k, v in r.items() if k not in ("metric", "property") and v is not None}

    cc = row("rmse", "avg_clustering")
    pl = row("jsd", "path_length")
    ar = row("rmse", "assortativity")
    return {
        "ls_lowest_clustering_rmse": min(cc, key=cc.get) == "ls",
        "ls_lowest_path_jsd": min(pl, key=pl.get) == "ls",
        "fs_or_xs_beats_rd_assortativity": min(ar["fs"], ar["xs"]) < ar["rd"],
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=20000)
    parser.add_argument("--reps", type=int, default=10)
    parser.add_argument("--out", default="bench_out")
    parser.add_argument("--workers", type=int, default=2)
    parser.add_argument("--data", type=Path, default=REPO_ROOT / "data")
    parser.add_argument("--master-seed", type=int, default=20)
    args = parser.parse_args(argv)

    cfg = ExperimentConfig(
        datasets=build_datasets(args.data, args.nodes),
        samplers=default_method_suite(),
        phis=(0.02, 0.04, 0.06, 0.08, 0.1),
        repetitions=args.reps,
        master_seed=args.master_seed,
        output_dir=args.out,
        workers=args.workers,
    )
    t0 = time.time()
    res = run_experiment(cfg)
    print(f"\nswept {len(cfg.datasets)} datasets x {len(cfg.samplers)} methods x "
          f"{len(cfg.phis)} phis x {cfg.repetitions} reps "
          f"in {time.time() - t0:.0f}s -> {res.output_dir}")
    if res.failures:
        for f in res.failures:
            print(f"FAILED: {f}")

    methods = [s.label for s in cfg.samplers]
    print(f"\n{'metric':8s} {'property':20s} " + " ".join(f"{m:>8s}" for m in methods))
    for row in res.tables.summary:
        cells = " ".join(
            f"{row[m]:8.3f}" if row.get(m) is not None else f"{'-':>8s}" for m in methods)
        print(f"{row['metric']:8s} {row['property']:20s} {cells}")

    print("\ntrend checks:")
    for name, ok in ordering_checks(res.tables.summary).items():
        print(f"  {name}: {'PASS' if ok else 'FAIL'}")
    return 1 if res.failures else 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Subcommands:
    generate    write a synthetic graph as a normalized edge list
    sample      run one sampler on an edge-list file
    properties  emit a JSON property report (and optional distribution CSVs)
    bench run   execute a full experiment config
    bench aggregate
                rebuild the aggregate tables from a raw.csv
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .generators import GeneratorConfig, generate
from .graph import dump_edge_list, load_edge_list
from .harness import (
    ExperimentConfig,
    aggregate,
    read_cell_distributions,
    read_originals,
    read_raw,
    run_experiment,
    _write_tables,
)
from .properties import property_report
from .samplers import SamplerConfig, sample


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphsample")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a synthetic graph")
    p.add_argument("--model", required=True, choices=["ff", "sw", "mm"])
    p.add_argument("--nodes", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ff-pf", type=float, default=None, help="forward-burn probability")
    p.add_argument("--sw-k", type=int, default=None, help="ring degree (even)")
    p.add_argument("--sw-p", type=float, default=None, help="rewire probability")
    p.add_argument("--mm-k", type=int, default=None, help="edges per new node")
    p.add_argument("--mm-beta", type=float, default=None, help="preferential fraction")
    p.add_argument("--out", required=True, help="output edge-list path")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("sample", help="sample a graph from an edge-list file")
    p.add_argument("--input", required=True)
    p.add_argument("--method", required=True, choices=["fs", "xs", "rd", "ls", "hj"])
    p.add_argument("--phi", required=True, type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["induced", "collected"], default="induced")
    p.add_argument("--fs-walkers", type=int, default=None)
    p.add_argument("--rd-seeds", type=int, default=None)
    p.add_argument("--rd-rho", type=float, default=None)
    p.add_argument("--hj-alpha", type=float, default=None)
    p.add_argument("--hj-probes", type=int, default=None)
    p.add_argument("--hj-bfs-depth", type=int, default=None)
    p.add_argument("--xs-seed-rule", choices=["uniform", "max_degree"], default=None)
    p.add_argument("--out", required=True, help="output edge-list path")
    p.add_argument("--sidecar", default=None, help="telemetry JSON path (default: OUT.json)")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("properties", help="compute the property report of a graph")
    p.add_argument("--input", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact-paths", action="store_true")
    group.add_argument("--path-sources", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", dest="json_out", default=None, help="report path (default: stdout)")
    p.add_argument("--dist-dir", default=None, help="also write support,pmf,ecdf CSVs here")
    p.set_defaults(func=_cmd_properties)

    bench = sub.add_parser("bench", help="benchmark harness")
    bsub = bench.add_subparsers(dest="bench_command", required=True)

    p = bsub.add_parser("run", help="run an experiment config")
    p.add_argument("--config", required=True)
    p.add_argument("--workers", type=int, default=None, help="override config workers")
    p.set_defaults(func=_cmd_bench_run)

    p = bsub.add_parser("aggregate", help="recompute tables from raw.csv")
    p.add_argument("--raw", required=True, help="path to raw.csv")
    p.add_argument("--originals", default=None,
                   help="originals/ directory (default: sibling of raw.csv)")
    p.add_argument("--out-dir", default=None, help="where to write tables (default: alongside raw)")
    p.set_defaults(func=_cmd_bench_aggregate)

    return parser


def _cmd_generate(args) -> int:
    overrides = {}
    for attr, key in (("ff_pf", "ff_pf"), ("sw_k", "sw_k"), ("sw_p", "sw_p"),
                      ("mm_k", "mm_k"), ("mm_beta", "mm_beta")):
        val = getattr(args, attr)
        if val is not None:
            overrides[key] = val
    cfg = GeneratorConfig(model=args.model, nodes=args.nodes, seed=args.seed, **overrides)
    g = generate(cfg)
    dump_edge_list(g, args.out)
    print(f"wrote {args.out}: n={g.n} m={g.m}")
    return 0


def _cmd_sample(args) -> int:
    g = load_edge_list(args.input)
    overrides = {}
    for attr in ("fs_walkers", "rd_seeds", "rd_rho", "hj_alpha", "hj_probes",
                 "hj_bfs_depth", "xs_seed_rule"):
        val = getattr(args, attr)
        if val is not None:
            overrides[attr] = val
    cfg = SamplerConfig(method=args.method, phi=args.phi, seed=args.seed,
                        finalize_mode=args.mode, **overrides)
    smp = sample(g, cfg)
    orig = g.orig_ids
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(f"# n={smp.n_nodes} m={smp.n_edges} method={smp.method} phi={smp.phi}\n")
        for u, v in smp.edges:
            a, b = int(orig[u]), int(orig[v])
            fh.write(f"{min(a, b)} {max(a, b)}\n")
    sidecar = args.sidecar or (args.out + ".json")
    payload = smp.sidecar(cfg)
    payload["nodes"] = [int(orig[v]) for v in smp.nodes]
    with open(sidecar, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
    print(f"wrote {args.out} (+{Path(sidecar).name}): {smp.n_nodes} nodes, {smp.n_edges} edges")
    return 0


def _cmd_properties(args) -> int:
    g = load_edge_list(args.input)
    if args.exact_paths:
        mode, sources = "exact", 256
    elif args.path_sources is not None:
        mode, sources = "sampled", args.path_sources
    else:
        mode, sources = "auto", 256
    rep = property_report(g, path_mode=mode, path_sources=sources, seed=args.seed)
    payload = rep.to_dict()
    payload["graph"] = {"n": g.n, "m": g.m}
    text = json.dumps(payload, indent=2)
    if args.json_out:
        Path(args.json_out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    if args.dist_dir:
        from .harness import _write_distribution_csv
        out = Path(args.dist_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = Path(args.input).stem
        for kind, dist in rep.distributions().items():
            _write_distribution_csv(out / f"{stem}.{kind}.dist.csv", dist)
    return 0


def _cmd_bench_run(args) -> int:
    cfg = ExperimentConfig.from_json(args.config)
    if args.workers is not None:
        import dataclasses
        cfg = dataclasses.replace(cfg, workers=args.workers)
    result = run_experiment(cfg)
    print(f"wrote report bundle to {result.output_dir}")
    print(f"rows={len(result.rows)} errors={len(result.errors)} failures={len(result.failures)}")
    for f in result.failures:
        print(f"FAILED: {f}", file=sys.stderr)
    return 1 if result.failures else 0


def _cmd_bench_aggregate(args) -> int:
    raw_path = Path(args.raw)
    rows = read_raw(raw_path)
    orig_dir = Path(args.originals) if args.originals else raw_path.parent / "originals"
    originals = read_originals(orig_dir)
    cell_dists = read_cell_distributions(raw_path.parent / "dists" / "cells")
    tables = aggregate(rows, originals, cell_dists=cell_dists)
    labels = []
    for r in rows:   # method order = first appearance in the raw rows
        if r.method not in labels:
            labels.append(r.method)
    out = Path(args.out_dir) if args.out_dir else raw_path.parent
    out.mkdir(parents=True, exist_ok=True)
    _write_tables(out, tables, labels)
    print(f"wrote tables to {out}")
    for w in tables.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

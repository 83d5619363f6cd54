"""Benchmark orchestration: sweeps over (dataset, method, phi, repetition).

A run loads or generates every dataset, computes (and caches) the
original property report, executes all sampling cells with seeds derived
from the master seed, and writes a machine-readable report bundle:

    raw.csv          dataset,method,phi,rep,property,value
    point_stats.csv  scaling-ratio means with 95% CI half-widths
    rmse.csv         per (dataset, method, property)
    jsd.csv          per (dataset, method, distribution) at the ECDF phi
    summary.csv      per-method averages across datasets
    dists/           per-distribution support,pmf,ecdf files
    timings.csv      per-cell wall times (kept out of the deterministic set)
    meta.json        config echo, versions, timestamps, warnings

Identical configs (including the master seed) reproduce every CSV
byte for byte; wall-clock data lives only in timings.csv and meta.json.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from . import __version__ as _pkg_version
from .generators import GeneratorConfig, generate
from .graph import Graph, load_edge_list
from .metrics import RATIO_SHIFTS, confidence_interval_95, jsd, rmse, scaling_ratio
from .properties import Distribution, PropertyReport, property_report
from .samplers import Sample, SamplerConfig, sample, sample_subgraph

__all__ = [
    "DatasetSpec",
    "ExperimentConfig",
    "ExperimentResult",
    "ReportRow",
    "Tables",
    "aggregate",
    "default_method_suite",
    "derive_seed",
    "load_dataset",
    "run_experiment",
]

PROPERTY_ORDER = (
    "avg_degree",
    "avg_clustering",
    "avg_path_length",
    "global_clustering",
    "assortativity",
    "modularity",
)
DISTRIBUTION_KINDS = ("degree", "clustering", "path_length")


@dataclass(frozen=True)
class DatasetSpec:
    """A dataset is either an edge-list file or a generator config."""

    name: str
    path: str | None = None
    generator: GeneratorConfig | None = None
    category: str = ""

    def validate(self) -> None:
        if (self.path is None) == (self.generator is None):
            raise ValueError(f"dataset {self.name!r}: set exactly one of path/generator")

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "category": self.category}
        if self.path is not None:
            out["path"] = self.path
        if self.generator is not None:
            out["generator"] = dataclasses.asdict(self.generator)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "DatasetSpec":
        known = {"name", "path", "generator", "category"}
        _reject_unknown(d, known, "dataset")
        gen = d.get("generator")
        return cls(
            name=d["name"],
            path=d.get("path"),
            generator=_generator_from_dict(gen) if gen is not None else None,
            category=d.get("category", ""),
        )


def _generator_from_dict(d: dict) -> GeneratorConfig:
    fields = {f.name for f in dataclasses.fields(GeneratorConfig)}
    _reject_unknown(d, fields, "generator")
    return GeneratorConfig(**d)


def _sampler_from_dict(d: dict) -> SamplerConfig:
    fields = {f.name for f in dataclasses.fields(SamplerConfig)}
    _reject_unknown(d, fields, "sampler")
    return SamplerConfig(**d)


def _reject_unknown(d: dict, known: set[str], what: str) -> None:
    unknown = set(d) - known
    if unknown:
        raise ValueError(f"unknown {what} config keys: {sorted(unknown)}")


@dataclass(frozen=True)
class ExperimentConfig:
    datasets: tuple[DatasetSpec, ...]
    samplers: tuple[SamplerConfig, ...]
    phis: tuple[float, ...] = (0.02, 0.04, 0.06, 0.08, 0.1)
    repetitions: int = 10
    master_seed: int = 0
    # None keeps each sampler's own finalize mode; a string forces one for all
    finalize_mode: str | None = None
    path_mode: str = "auto"
    path_sources: int = 256
    distribution_phi: float | None = None   # default: min(phis)
    output_dir: str = "bench_out"
    workers: int = 1

    def validate(self) -> None:
        if not self.datasets:
            raise ValueError("no datasets configured")
        if not self.samplers:
            raise ValueError("no samplers configured")
        names = [d.name for d in self.datasets]
        if len(set(names)) != len(names):
            raise ValueError("dataset names must be unique")
        labels = [s.label for s in self.samplers]
        if len(set(labels)) != len(labels):
            raise ValueError("sampler labels must be unique (set tag to disambiguate)")
        for d in self.datasets:
            d.validate()
        if not self.phis:
            raise ValueError("no sampling fractions configured")
        for phi in self.phis:
            if not 0.0 < phi <= 1.0:
                raise ValueError("phis must lie in (0, 1]")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.finalize_mode not in (None, "induced", "collected"):
            raise ValueError(f"unknown finalize mode {self.finalize_mode!r}")
        if self.distribution_phi is not None and self.distribution_phi not in self.phis:
            raise ValueError("distribution_phi must be one of the configured phis")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def ecdf_phi(self) -> float:
        return self.distribution_phi if self.distribution_phi is not None else min(self.phis)

    def to_dict(self) -> dict:
        return {
            "datasets": [d.to_dict() for d in self.datasets],
            "samplers": [dataclasses.asdict(s) for s in self.samplers],
            "phis": list(self.phis),
            "repetitions": self.repetitions,
            "master_seed": self.master_seed,
            "finalize_mode": self.finalize_mode,
            "path_mode": self.path_mode,
            "path_sources": self.path_sources,
            "distribution_phi": self.distribution_phi,
            "output_dir": self.output_dir,
            "workers": self.workers,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        _reject_unknown(d, known, "experiment")
        return cls(
            datasets=tuple(DatasetSpec.from_dict(x) for x in d["datasets"]),
            samplers=tuple(_sampler_from_dict(x) for x in d["samplers"]),
            phis=tuple(d.get("phis", (0.02, 0.04, 0.06, 0.08, 0.1))),
            repetitions=d.get("repetitions", 10),
            master_seed=d.get("master_seed", 0),
            finalize_mode=d.get("finalize_mode", "induced"),
            path_mode=d.get("path_mode", "auto"),
            path_sources=d.get("path_sources", 256),
            distribution_phi=d.get("distribution_phi"),
            output_dir=d.get("output_dir", "bench_out"),
            workers=d.get("workers", 1),
        )

    @classmethod
    def from_json(cls, path: str | Path) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


@dataclass(frozen=True)
class ReportRow:
    dataset: str
    method: str
    phi: float
    rep: int
    property: str
    value: float | None


@dataclass
class Tables:
    point_stats: list[dict]
    rmse: list[dict]
    jsd: list[dict]
    summary: list[dict]
    warnings: list[str] = field(default_factory=list)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    rows: list[ReportRow]
    originals: dict[str, PropertyReport]
    tables: Tables
    failures: list[str]
    errors: list[dict]
    output_dir: Path


def derive_seed(master_seed: int, *tokens) -> int:
    """Stable 63-bit seed from the master seed and cell coordinates."""
    text = "|".join([str(master_seed)] + [repr(t) for t in tokens])
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") >> 1


def default_method_suite() -> tuple[SamplerConfig, ...]:
    """The five samplers under their defining edge semantics.

    FS, RD and HJ collect edges while traversing; XS is evaluated on the
    subgraph induced over its node set; LS's induction step makes both
    modes coincide. Pass finalize_mode to ExperimentConfig to force a
    single mode instead.
    """
    return (
        SamplerConfig(method="fs", finalize_mode="collected"),
        SamplerConfig(method="xs", finalize_mode="induced"),
        SamplerConfig(method="rd", finalize_mode="collected"),
        SamplerConfig(method="ls", finalize_mode="induced"),
        SamplerConfig(method="hj", finalize_mode="collected"),
    )


def load_dataset(spec: DatasetSpec) -> Graph:
    spec.validate()
    if spec.path is not None:
        return load_edge_list(spec.path)
    return generate(spec.generator)


def _graph_fingerprint(g: Graph) -> str:
    h = hashlib.sha256()
    h.update(np.ascontiguousarray(g.indptr).tobytes())
    h.update(np.ascontiguousarray(g.indices).tobytes())
    return h.hexdigest()[:24]


def _original_report(
    g: Graph, spec: DatasetSpec, cfg: ExperimentConfig, cache_dir: Path
) -> tuple[PropertyReport, bool]:
    """Compute or fetch the cached original-graph report. Returns (report, hit)."""
    seed = derive_seed(cfg.master_seed, spec.name, "original")
    key = _graph_fingerprint(g) + f"-{cfg.path_mode}-{cfg.path_sources}-{seed}"
    path = cache_dir / f"{spec.name}.{hashlib.sha256(key.encode()).hexdigest()[:16]}.json"
    if path.exists():
        with open(path, "r", encoding="utf-8") as fh:
            return PropertyReport.from_dict(json.load(fh)), True
    rep = property_report(g, path_mode=cfg.path_mode, path_sources=cfg.path_sources, seed=seed)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rep.to_dict(), fh)
    return rep, False


# ---------------------------------------------------------------------------
# Cell execution. Graphs are staged in a module global before forking so
# pool workers inherit them copy-on-write.

_CELL_GRAPHS: dict[str, Graph] = {}


@dataclass
class _CellJob:
    index: int
    dataset: str
    sampler: SamplerConfig    # phi/seed/finalize_mode already substituted
    rep: int
    keep_distributions: bool
    path_mode: str
    path_sources: int
    prop_seed: int


@dataclass
class _CellResult:
    index: int
    scalars: dict[str, float | None] | None
    distributions: dict[str, Distribution] | None
    sample_seconds: float
    properties_seconds: float
    error: str | None = None
    stage: str | None = None


def _run_cell(job: _CellJob) -> _CellResult:
    g = _CELL_GRAPHS[job.dataset]
    t0 = time.perf_counter()
    try:
        smp = sample(g, job.sampler)
    except Exception as exc:  # recorded, not fatal to the sweep
        return _CellResult(job.index, None, None, 0.0, 0.0,
                           error=f"{type(exc).__name__}: {exc}", stage="sample")
    t1 = time.perf_counter()
    try:
        sg = sample_subgraph(g, smp)
        rep = property_report(sg, path_mode=job.path_mode,
                              path_sources=job.path_sources, seed=job.prop_seed)
    except Exception as exc:
        return _CellResult(job.index, None, None, t1 - t0, 0.0,
                           error=f"{type(exc).__name__}: {exc}", stage="properties")
    t2 = time.perf_counter()
    dists = rep.distributions() if job.keep_distributions else None
    return _CellResult(job.index, rep.scalars(), dists, t1 - t0, t2 - t1)


def _execute_cells(jobs: list[_CellJob], workers: int) -> list[_CellResult]:
    if workers <= 1 or len(jobs) <= 1:
        return [_run_cell(j) for j in jobs]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        results = pool.map(_run_cell, jobs, chunksize=max(1, len(jobs) // (workers * 8)))
    return results


# ---------------------------------------------------------------------------


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Run the full sweep and write the report bundle under cfg.output_dir."""
    cfg.validate()
    started = time.time()
    out = Path(cfg.output_dir)
    (out / "cache").mkdir(parents=True, exist_ok=True)
    (out / "originals").mkdir(exist_ok=True)
    (out / "dists" / "cells").mkdir(parents=True, exist_ok=True)

    failures: list[str] = []
    originals: dict[str, PropertyReport] = {}
    dataset_meta: dict[str, dict] = {}
    graphs: dict[str, Graph] = {}

    for spec in cfg.datasets:
        try:
            g = load_dataset(spec)
        except Exception as exc:
            failures.append(f"dataset {spec.name}: {type(exc).__name__}: {exc}")
            continue
        graphs[spec.name] = g
        rep, hit = _original_report(g, spec, cfg, out / "cache")
        originals[spec.name] = rep
        with open(out / "originals" / f"{spec.name}.json", "w", encoding="utf-8") as fh:
            json.dump(rep.to_dict(), fh)
        dataset_meta[spec.name] = {
            "n": g.n,
            "m": g.m,
            "category": spec.category,
            "original_cache_hit": hit,
            "load_stats": dataclasses.asdict(g.load_stats) if g.load_stats else None,
        }

    _CELL_GRAPHS.clear()
    _CELL_GRAPHS.update(graphs)

    active = [spec for spec in cfg.datasets if spec.name in graphs]
    jobs: list[_CellJob] = []
    coords: list[tuple[str, str, float, int]] = []
    for spec in active:
        for scfg in cfg.samplers:
            for phi in cfg.phis:
                for rep_i in range(cfg.repetitions):
                    seed = derive_seed(cfg.master_seed, spec.name, scfg.label, phi, rep_i)
                    prop_seed = derive_seed(cfg.master_seed, spec.name, scfg.label, phi, rep_i, "props")
                    run_cfg = dataclasses.replace(
                        scfg, phi=phi, seed=seed,
                        finalize_mode=cfg.finalize_mode or scfg.finalize_mode,
                        record_steps=False)
                    jobs.append(_CellJob(
                        index=len(jobs),
                        dataset=spec.name,
                        sampler=run_cfg,
                        rep=rep_i,
                        keep_distributions=(phi == cfg.ecdf_phi),
                        path_mode=cfg.path_mode,
                        path_sources=cfg.path_sources,
                        prop_seed=prop_seed,
                    ))
                    coords.append((spec.name, scfg.label, phi, rep_i))

    results = _execute_cells(jobs, cfg.workers)
    results.sort(key=lambda r: r.index)

    rows: list[ReportRow] = []
    errors: list[dict] = []
    timings: list[dict] = []
    cell_dists: dict[tuple[str, str], dict[int, dict[str, Distribution]]] = {}
    for res in results:
        ds, label, phi, rep_i = coords[res.index]
        timings.append({
            "dataset": ds, "method": label, "phi": phi, "rep": rep_i,
            "sample_seconds": round(res.sample_seconds, 6),
            "properties_seconds": round(res.properties_seconds, 6),
        })
        if res.error is not None:
            errors.append({"dataset": ds, "method": label, "phi": phi, "rep": rep_i,
                           "stage": res.stage, "message": res.error})
            continue
        for prop in PROPERTY_ORDER:
            rows.append(ReportRow(ds, label, phi, rep_i, prop, res.scalars[prop]))
        if res.distributions is not None:
            cell_dists.setdefault((ds, label), {})[rep_i] = res.distributions

    _write_raw(out / "raw.csv", rows)
    _write_dicts(out / "timings.csv", timings,
                 ["dataset", "method", "phi", "rep", "sample_seconds", "properties_seconds"])
    if errors:
        _write_dicts(out / "errors.csv", errors,
                     ["dataset", "method", "phi", "rep", "stage", "message"])

    _write_cell_distributions(out / "dists" / "cells", cell_dists)
    tables = aggregate(rows, originals, cell_dists=cell_dists)
    _write_tables(out, tables, [s.label for s in cfg.samplers])
    _write_distribution_files(out / "dists", originals, cell_dists)

    meta = {
        "config": cfg.to_dict(),
        "versions": _versions(),
        "datasets": dataset_meta,
        "failures": failures,
        "errors": len(errors),
        "warnings": tables.warnings,
        "row_count": len(rows),
        "started_at": time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime(started)),
        "elapsed_seconds": round(time.time() - started, 3),
    }
    with open(out / "meta.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)

    return ExperimentResult(config=cfg, rows=rows, originals=originals, tables=tables,
                            failures=failures, errors=errors, output_dir=out)


def _versions() -> dict:
    import scipy
    return {
        "graphsample": _pkg_version,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
    }


# ---------------------------------------------------------------------------
# Aggregation


def aggregate(
    rows: Iterable[ReportRow],
    originals: dict[str, PropertyReport],
    cell_dists: dict[tuple[str, str], dict[int, dict[str, Distribution]]] | None = None,
) -> Tables:
    """Fold raw rows into the paper-style tables.

    Scaling ratios get a per-(dataset, method, phi, property) mean and
    95% CI over repetitions. RMSE follows the protocol: each phi cell is
    the mean over repetitions, one RMSE across phis per (dataset, method,
    property). JSD compares per-repetition distributions at the ECDF phi
    against the original. Missing or undefined cells leave explicit gaps
    and a warning.
    """
    warnings: list[str] = []
    cells: dict[tuple[str, str, float, str], dict[int, float | None]] = {}
    datasets_seen: list[str] = []
    methods_seen: list[str] = []
    phis_seen: list[float] = []
    for row in rows:
        cells.setdefault((row.dataset, row.method, row.phi, row.property), {})[row.rep] = row.value
        if row.dataset not in datasets_seen:
            datasets_seen.append(row.dataset)
        if row.method not in methods_seen:
            methods_seen.append(row.method)
        if row.phi not in phis_seen:
            phis_seen.append(row.phi)
    phis_seen.sort()

    point_stats: list[dict] = []
    for ds in datasets_seen:
        orig = originals.get(ds)
        if orig is None:
            warnings.append(f"point_stats: no original report for {ds}")
            continue
        truth = orig.scalars()
        for method in methods_seen:
            for phi in phis_seen:
                for prop in PROPERTY_ORDER:
                    reps = cells.get((ds, method, phi, prop))
                    if not reps:
                        continue
                    shift = RATIO_SHIFTS.get(prop, 0.0)
                    t = truth[prop]
                    ratios = [
                        scaling_ratio(v, t, shift)
                        for v in reps.values()
                        if v is not None and t is not None
                    ]
                    ratios = [r for r in ratios if r is not None]
                    if not ratios:
                        warnings.append(f"point_stats gap: {ds}/{method}/phi={phi}/{prop}")
                        point_stats.append({
                            "dataset": ds, "method": method, "phi": phi, "property": prop,
                            "scaling_ratio_mean": None, "ci95": None, "n": 0,
                        })
                        continue
                    ci = confidence_interval_95(ratios)
                    point_stats.append({
                        "dataset": ds, "method": method, "phi": phi, "property": prop,
                        "scaling_ratio_mean": ci.mean,
                        "ci95": ci.half_width if ci.half_width is not None else 0.0,
                        "n": len(ratios),
                    })

    rmse_rows: list[dict] = []
    for ds in datasets_seen:
        orig = originals.get(ds)
        if orig is None:
            continue
        truth = orig.scalars()
        for method in methods_seen:
            for prop in PROPERTY_ORDER:
                t = truth[prop]
                if t is None:
                    warnings.append(f"rmse gap (original undefined): {ds}/{prop}")
                    rmse_rows.append({"dataset": ds, "method": method, "property": prop,
                                      "rmse": None, "rmse_std": None})
                    continue
                phi_means: list[float] = []
                per_rep: dict[int, list[float]] = {}
                for phi in phis_seen:
                    reps = cells.get((ds, method, phi, prop))
                    if not reps:
                        continue
                    vals = [v for v in reps.values() if v is not None]
                    if len(vals) != len(reps):
                        warnings.append(f"rmse: undefined sample values at {ds}/{method}/phi={phi}/{prop}")
                    if not vals:
                        continue
                    phi_means.append(float(np.mean(vals)))
                    for r, v in reps.items():
                        if v is not None:
                            per_rep.setdefault(r, []).append(v)
                if not phi_means:
                    rmse_rows.append({"dataset": ds, "method": method, "property": prop,
                                      "rmse": None, "rmse_std": None})
                    continue
                value = rmse(phi_means, t)
                rep_rmses = [rmse(vs, t) for vs in per_rep.values() if vs]
                std = float(np.std(rep_rmses, ddof=1)) if len(rep_rmses) > 1 else 0.0
                rmse_rows.append({"dataset": ds, "method": method, "property": prop,
                                  "rmse": value, "rmse_std": std})

    jsd_rows: list[dict] = []
    if cell_dists:
        for ds in datasets_seen:
            orig = originals.get(ds)
            if orig is None:
                continue
            odists = orig.distributions()
            for method in methods_seen:
                reps = cell_dists.get((ds, method), {})
                for kind in DISTRIBUTION_KINDS:
                    vals = [jsd(d[kind], odists[kind]) for _, d in sorted(reps.items())]
                    if not vals:
                        warnings.append(f"jsd gap: {ds}/{method}/{kind}")
                        jsd_rows.append({"dataset": ds, "method": method, "distribution": kind,
                                         "jsd_mean": None, "jsd_std": None})
                        continue
                    jsd_rows.append({
                        "dataset": ds, "method": method, "distribution": kind,
                        "jsd_mean": float(np.mean(vals)),
                        "jsd_std": float(np.std(vals, ddof=1)) if len(vals) > 1 else 0.0,
                    })

    summary: list[dict] = []
    for prop in PROPERTY_ORDER:
        entry: dict[str, Any] = {"metric": "rmse", "property": prop}
        for method in methods_seen:
            vals = [r["rmse"] for r in rmse_rows
                    if r["method"] == method and r["property"] == prop and r["rmse"] is not None]
            entry[method] = float(np.mean(vals)) if vals else None
        summary.append(entry)
    for kind in DISTRIBUTION_KINDS:
        entry = {"metric": "jsd", "property": kind}
        for method in methods_seen:
            vals = [r["jsd_mean"] for r in jsd_rows
                    if r["method"] == method and r["distribution"] == kind
                    and r["jsd_mean"] is not None]
            entry[method] = float(np.mean(vals)) if vals else None
        summary.append(entry)

    return Tables(point_stats=point_stats, rmse=rmse_rows, jsd=jsd_rows,
                  summary=summary, warnings=warnings)


# ---------------------------------------------------------------------------
# Writers / readers


def _fmt(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _write_raw(path: Path, rows: list[ReportRow]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["dataset", "method", "phi", "rep", "property", "value"])
        for r in rows:
            w.writerow([r.dataset, r.method, _fmt(r.phi), r.rep, r.property, _fmt(r.value)])


def read_raw(path: str | Path) -> list[ReportRow]:
    rows: list[ReportRow] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for rec in csv.DictReader(fh):
            rows.append(ReportRow(
                dataset=rec["dataset"],
                method=rec["method"],
                phi=float(rec["phi"]),
                rep=int(rec["rep"]),
                property=rec["property"],
                value=float(rec["value"]) if rec["value"] != "" else None,
            ))
    return rows


def _write_dicts(path: Path, rows: list[dict], columns: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_fmt(r.get(c)) for c in columns])


def _write_tables(out: Path, tables: Tables, method_labels: Sequence[str]) -> None:
    _write_dicts(out / "point_stats.csv", tables.point_stats,
                 ["dataset", "method", "phi", "property", "scaling_ratio_mean", "ci95", "n"])
    _write_dicts(out / "rmse.csv", tables.rmse,
                 ["dataset", "method", "property", "rmse", "rmse_std"])
    _write_dicts(out / "jsd.csv", tables.jsd,
                 ["dataset", "method", "distribution", "jsd_mean", "jsd_std"])
    _write_dicts(out / "summary.csv", tables.summary,
                 ["metric", "property"] + list(method_labels))


def _write_distribution_csv(path: Path, dist: Distribution) -> None:
    ecdf = dist.ecdf()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["support", "pmf", "ecdf"])
        for s, p, e in zip(dist.support.tolist(), dist.pmf.tolist(), ecdf.tolist()):
            w.writerow([_fmt(s), _fmt(float(p)), _fmt(float(e))])


def _mean_distribution(dists: Sequence[Distribution]) -> Distribution:
    support = dists[0].support
    for d in dists[1:]:
        support = np.union1d(support, d.support)
    acc = np.zeros(len(support), dtype=np.float64)
    for d in dists:
        acc[np.searchsorted(support, d.support)] += d.pmf
    acc /= acc.sum()
    return Distribution(support=support, pmf=acc)


def _write_distribution_files(
    dist_dir: Path,
    originals: dict[str, PropertyReport],
    cell_dists: dict[tuple[str, str], dict[int, dict[str, Distribution]]],
) -> None:
    for ds, rep in sorted(originals.items()):
        for kind, dist in rep.distributions().items():
            _write_distribution_csv(dist_dir / f"{ds}.original.{kind}.dist.csv", dist)
    for (ds, method), reps in sorted(cell_dists.items()):
        for kind in DISTRIBUTION_KINDS:
            per_rep = [d[kind] for _, d in sorted(reps.items())]
            if per_rep:
                _write_distribution_csv(dist_dir / f"{ds}.{method}.{kind}.dist.csv",
                                        _mean_distribution(per_rep))


def _write_cell_distributions(
    cell_dir: Path,
    cell_dists: dict[tuple[str, str], dict[int, dict[str, Distribution]]],
) -> None:
    for (ds, method), reps in sorted(cell_dists.items()):
        payload = {
            str(rep): {kind: d[kind].to_dict() for kind in DISTRIBUTION_KINDS}
            for rep, d in sorted(reps.items())
        }
        with open(cell_dir / f"{ds}.{method}.json", "w", encoding="utf-8") as fh:
            json.dump(payload, fh)


def read_cell_distributions(
    cell_dir: str | Path,
) -> dict[tuple[str, str], dict[int, dict[str, Distribution]]]:
    out: dict[tuple[str, str], dict[int, dict[str, Distribution]]] = {}
    cell_dir = Path(cell_dir)
    if not cell_dir.is_dir():
        return out
    for path in sorted(cell_dir.glob("*.json")):
        ds, method = path.stem.rsplit(".", 1)
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        out[(ds, method)] = {
            int(rep): {kind: Distribution.from_dict(d) for kind, d in kinds.items()}
            for rep, kinds in payload.items()
        }
    return out


def read_originals(orig_dir: str | Path) -> dict[str, PropertyReport]:
    out: dict[str, PropertyReport] = {}
    for path in sorted(Path(orig_dir).glob("*.json")):
        with open(path, "r", encoding="utf-8") as fh:
            out[path.stem] = PropertyReport.from_dict(json.load(fh))
    return out

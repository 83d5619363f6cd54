"""The six graph properties: three local with distributions, three global.

Local: degree, clustering coefficient, path length. Global: global
clustering (transitivity), degree assortativity, modularity of a
detected partition. Path lengths are computed on the largest connected
component; everything else uses the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.sparse import csgraph

from .community import detect_communities, modularity
from .graph import Graph, induced_subgraph, largest_connected_component, to_csr

__all__ = [
    "CC_BINS",
    "Distribution",
    "PropertyReport",
    "assortativity",
    "average_degree",
    "avg_clustering",
    "clustering_distribution",
    "degree_distribution",
    "global_clustering",
    "local_clustering",
    "local_clustering_all",
    "path_length_stats",
    "average_path_length",
    "path_length_distribution",
    "property_report",
    "triangle_edge_counts",
]

CC_BINS = 100           # uniform bins on [0, 1] for the clustering distribution
EXACT_PATH_LIMIT = 5000  # LCC size up to which all-pairs BFS is used


@dataclass(frozen=True)
class Distribution:
    """Normalized pmf over an ordered discrete or binned support."""

    support: np.ndarray
    pmf: np.ndarray

    def __post_init__(self):
        if len(self.support) != len(self.pmf):
            raise ValueError("support and pmf lengths differ")
        if len(self.pmf) == 0:
            raise ValueError("empty distribution")
        if np.any(self.pmf < 0):
            raise ValueError("negative pmf weight")
        total = float(self.pmf.sum())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"pmf sums to {total}, not 1")
        if np.any(np.diff(self.support) <= 0):
            raise ValueError("support must be strictly increasing")
        self.support.flags.writeable = False
        self.pmf.flags.writeable = False

    def ecdf(self) -> np.ndarray:
        return np.cumsum(self.pmf)

    @classmethod
    def from_counts(cls, values: np.ndarray) -> "Distribution":
        """pmf over the distinct integer values observed."""
        values = np.asarray(values)
        if values.size == 0:
            raise ValueError("no observations")
        support, counts = np.unique(values, return_counts=True)
        return cls(support=support.astype(np.int64),
                   pmf=counts / counts.sum())

    @classmethod
    def from_histogram(cls, values: np.ndarray, bins: int, lo: float, hi: float) -> "Distribution":
        """pmf over uniform bins; support holds the bin centers."""
        values = np.asarray(values, dtype=np.float64)
        if values.size == 0:
            raise ValueError("no observations")
        counts, edges = np.histogram(values, bins=bins, range=(lo, hi))
        centers = (edges[:-1] + edges[1:]) / 2.0
        return cls(support=centers, pmf=counts / counts.sum())

    def to_dict(self) -> dict:
        return {"support": self.support.tolist(), "pmf": self.pmf.tolist()}

    @classmethod
    def from_dict(cls, d: dict) -> "Distribution":
        return cls(support=np.asarray(d["support"]), pmf=np.asarray(d["pmf"], dtype=np.float64))


@dataclass(frozen=True)
class PropertyReport:
    """The six scalar properties plus the three local distributions."""

    avg_degree: float
    avg_clustering: float
    avg_path_length: float
    global_clustering: float
    assortativity: float | None
    modularity: float
    degree_distribution: Distribution
    clustering_distribution: Distribution
    path_length_distribution: Distribution
    flags: dict[str, Any] = field(default_factory=dict)

    def scalars(self) -> dict[str, float | None]:
        return {
            "avg_degree": self.avg_degree,
            "avg_clustering": self.avg_clustering,
            "avg_path_length": self.avg_path_length,
            "global_clustering": self.global_clustering,
            "assortativity": self.assortativity,
            "modularity": self.modularity,
        }

    def distributions(self) -> dict[str, Distribution]:
        return {
            "degree": self.degree_distribution,
            "clustering": self.clustering_distribution,
            "path_length": self.path_length_distribution,
        }

    def to_dict(self) -> dict:
        return {
            "scalars": self.scalars(),
            "distributions": {k: d.to_dict() for k, d in self.distributions().items()},
            "flags": self.flags,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PropertyReport":
        s = d["scalars"]
        dist = d["distributions"]
        return cls(
            avg_degree=s["avg_degree"],
            avg_clustering=s["avg_clustering"],
            avg_path_length=s["avg_path_length"],
            global_clustering=s["global_clustering"],
            assortativity=s["assortativity"],
            modularity=s["modularity"],
            degree_distribution=Distribution.from_dict(dist["degree"]),
            clustering_distribution=Distribution.from_dict(dist["clustering"]),
            path_length_distribution=Distribution.from_dict(dist["path_length"]),
            flags=d.get("flags", {}),
        )


# ---------------------------------------------------------------------------
# Degree


def average_degree(g: Graph) -> float:
    """2m / n."""
    if g.n == 0:
        raise ValueError("average degree undefined for an empty graph")
    return 2.0 * g.m / g.n


def degree_distribution(g: Graph) -> Distribution:
    """Fraction of nodes at each observed degree."""
    if g.n == 0:
        raise ValueError("degree distribution undefined for an empty graph")
    return Distribution.from_counts(g.degrees())


# ---------------------------------------------------------------------------
# Clustering


def triangle_edge_counts(g: Graph) -> np.ndarray:
    """Per node: number of edges among its neighbors (= triangles through it)."""
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    a = to_csr(g)
    out = np.zeros(g.n, dtype=np.int64)
    step = 8192
    for start in range(0, g.n, step):
        stop = min(start + step, g.n)
        block = a[start:stop, :]
        paths = (block @ a).multiply(block)   # common-neighbor counts on edges
        out[start:stop] = np.asarray(paths.sum(axis=1)).ravel() // 2
    return out


def local_clustering(g: Graph, v: int) -> float:
    """2 e_v / (d_v (d_v - 1)); zero when the degree is below 2."""
    nb = g.neighbors(v)
    d = len(nb)
    if d < 2:
        return 0.0
    twice_e = 0
    for w in nb:
        twice_e += np.intersect1d(nb, g.neighbors(int(w)), assume_unique=True).size
    return twice_e / (d * (d - 1.0))


def local_clustering_all(g: Graph) -> np.ndarray:
    """Local clustering coefficient per node (0 for degree < 2)."""
    degs = g.degrees().astype(np.float64)
    e = triangle_edge_counts(g).astype(np.float64)
    out = np.zeros(g.n, dtype=np.float64)
    mask = degs >= 2
    out[mask] = 2.0 * e[mask] / (degs[mask] * (degs[mask] - 1.0))
    return out


def avg_clustering(g: Graph, include_low_degree: bool = True) -> float:
    """Mean local clustering; nodes of degree < 2 count as 0 by default."""
    if g.n == 0:
        raise ValueError("average clustering undefined for an empty graph")
    vals = local_clustering_all(g)
    if not include_low_degree:
        vals = vals[g.degrees() >= 2]
        if len(vals) == 0:
            return 0.0
    return float(vals.mean())


def clustering_distribution(g: Graph) -> Distribution:
    """Local clustering values binned into CC_BINS uniform bins on [0, 1]."""
    if g.n == 0:
        raise ValueError("clustering distribution undefined for an empty graph")
    return Distribution.from_histogram(local_clustering_all(g), CC_BINS, 0.0, 1.0)


def global_clustering(g: Graph) -> float:
    """Closed triplets over all triplets; 0 when the graph has no triplet."""
    degs = g.degrees().astype(np.float64)
    triplets = float((degs * (degs - 1.0) / 2.0).sum())
    if triplets == 0.0:
        return 0.0
    closed = float(triangle_edge_counts(g).sum())   # 3 * triangles
    return closed / triplets


# ---------------------------------------------------------------------------
# Path length


def path_length_stats(
    g: Graph,
    mode: str = "auto",
    sources: int = 256,
    seed: int = 0,
) -> tuple[float, Distribution, dict[str, Any]]:
    """Mean shortest-path length and hop-count pmf over the LCC.

    ``exact`` runs BFS from every LCC node (all ordered pairs); ``sampled``
    draws uniform source nodes without replacement, which is unbiased for
    the ordered-pair mean. ``auto`` picks exact up to EXACT_PATH_LIMIT
    nodes. Returns (mean, distribution, flags).
    """
    if g.n < 2 or g.m < 1:
        raise ValueError("path lengths need at least two nodes and one edge")
    if mode not in ("auto", "exact", "sampled"):
        raise ValueError(f"unknown path mode {mode!r}")
    lcc = largest_connected_component(g)
    sub = induced_subgraph(g, lcc)
    nl = sub.n
    if nl < 2:
        raise ValueError("largest component has no edges")
    if mode == "auto":
        mode = "exact" if nl <= EXACT_PATH_LIMIT else "sampled"
    if mode == "exact":
        src = np.arange(nl)
    else:
        rng = np.random.default_rng(seed)
        src = np.sort(rng.choice(nl, size=min(sources, nl), replace=False))
    a = to_csr(sub)
    total = 0.0
    count = 0
    hist = np.zeros(1, dtype=np.int64)
    step = max(1, min(len(src), 16_000_000 // max(nl, 1)))
    for start in range(0, len(src), step):
        block = src[start:start + step]
        d = csgraph.dijkstra(a, directed=False, unweighted=True, indices=block)
        d = d[np.isfinite(d)].astype(np.int64)
        d = d[d > 0]
        total += float(d.sum())
        count += len(d)
        if len(d):
            top = int(d.max())
            if top >= len(hist):
                hist = np.concatenate([hist, np.zeros(top + 1 - len(hist), dtype=np.int64)])
            hist += np.bincount(d, minlength=len(hist))
    mean = total / count
    support = np.flatnonzero(hist)
    dist = Distribution(support=support.astype(np.int64), pmf=hist[support] / hist.sum())
    flags = {
        "path_mode": mode,
        "path_sources": int(len(src)),
        "lcc_fraction": nl / g.n,
    }
    return mean, dist, flags


def average_path_length(g: Graph, mode: str = "auto", sources: int = 256, seed: int = 0) -> float:
    return path_length_stats(g, mode=mode, sources=sources, seed=seed)[0]


def path_length_distribution(g: Graph, mode: str = "auto", sources: int = 256, seed: int = 0) -> Distribution:
    return path_length_stats(g, mode=mode, sources=sources, seed=seed)[1]


# ---------------------------------------------------------------------------
# Assortativity


def assortativity(g: Graph) -> float | None:
    """Pearson correlation of degrees across edge endpoints (both orientations).

    Returns None when every endpoint has the same degree (zero variance),
    e.g. on regular graphs, where the coefficient is undefined.
    """
    if g.m == 0:
        raise ValueError("assortativity undefined without edges")
    ea = g.edge_array()
    d = g.degrees().astype(np.float64)
    x = np.concatenate([d[ea[:, 0]], d[ea[:, 1]]])
    y = np.concatenate([d[ea[:, 1]], d[ea[:, 0]]])
    var = float(x.var())
    if var == 0.0:
        return None
    cov = float((x * y).mean() - x.mean() * y.mean())
    return cov / var


# ---------------------------------------------------------------------------
# Full report


def property_report(
    g: Graph,
    path_mode: str = "auto",
    path_sources: int = 256,
    seed: int = 0,
) -> PropertyReport:
    """Compute all six properties and three distributions for one graph."""
    if g.n == 0 or g.m == 0:
        raise ValueError("property report needs a non-empty graph with edges")
    mean_path, path_dist, flags = path_length_stats(
        g, mode=path_mode, sources=path_sources, seed=seed)
    cc = local_clustering_all(g)
    labels = detect_communities(g, seed=seed)
    r = assortativity(g)
    degs = g.degrees().astype(np.float64)
    triplets = float((degs * (degs - 1.0) / 2.0).sum())
    flags = dict(flags)
    flags.update({
        "assortativity_defined": r is not None,
        "gcc_has_triplets": triplets > 0,
        "community_count": int(labels.max()) + 1,
        "community_seed": seed,
    })
    return PropertyReport(
        avg_degree=average_degree(g),
        avg_clustering=float(cc.mean()),
        avg_path_length=mean_path,
        global_clustering=global_clustering(g),
        assortativity=r,
        modularity=modularity(g, labels),
        degree_distribution=degree_distribution(g),
        clustering_distribution=Distribution.from_histogram(cc, CC_BINS, 0.0, 1.0),
        path_length_distribution=path_dist,
        flags=flags,
    )

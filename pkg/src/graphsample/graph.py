"""Undirected simple graphs in CSR form, plus edge-list I/O.

Node ids are dense integers in [0, n). The adjacency of every node is a
sorted array of distinct neighbor ids, stored in a shared ``indices``
buffer addressed through ``indptr`` (CSR layout). Graphs are immutable
after construction and safe to share across workers.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

__all__ = [
    "EdgeListParseError",
    "EdgeListSource",
    "Graph",
    "LoadStats",
    "build_graph",
    "dump_edge_list",
    "induced_subgraph",
    "largest_connected_component",
    "load_edge_list",
    "to_csr",
    "validate",
]

COMMENT_PREFIXES = ("#", "%")


class EdgeListParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class LoadStats:
    """Bookkeeping from one edge-list load."""

    lines_total: int = 0
    lines_skipped: int = 0          # comments and blanks
    edges_raw: int = 0              # parsed endpoint pairs
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0     # repeated unordered pairs (incl. reversed)
    isolated_dropped: int = 0       # ids that appeared only in self-loops


@dataclass(frozen=True)
class EdgeListSource:
    """Where and how to read an edge list.

    ``text`` takes precedence over ``path`` when both are set. ``sep=None``
    splits on any whitespace, which covers SNAP and KONECT files.
    """

    path: str | Path | None = None
    text: str | None = None
    comment_prefixes: tuple[str, ...] = COMMENT_PREFIXES
    sep: str | None = None

    def lines(self) -> Iterable[str]:
        if self.text is not None:
            return io.StringIO(self.text)
        if self.path is None:
            raise ValueError("EdgeListSource needs a path or text")
        return open(self.path, "r", encoding="utf-8")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph.

    ``orig_ids[i]`` is the external id node ``i`` carried in its source
    file (identity for generated graphs). ``load_stats`` is attached by
    the loader and ignored everywhere else.
    """

    indptr: np.ndarray
    indices: np.ndarray
    orig_ids: np.ndarray | None = None
    load_stats: LoadStats | None = field(default=None, compare=False)

    def __post_init__(self):
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False
        if self.orig_ids is not None:
            self.orig_ids.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def degree(self, v: int) -> int:
        self._check_node(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of ``v`` (a read-only view)."""
        self._check_node(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        if self.degree(u) > self.degree(v):
            u, v = v, u
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return np.column_stack([src[keep], dst[keep]])

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"node id {v} out of range [0, {self.n})")


def build_graph(
    u: Sequence[int] | np.ndarray,
    v: Sequence[int] | np.ndarray,
    n: int | None = None,
    orig_ids: np.ndarray | None = None,
    load_stats: LoadStats | None = None,
) -> Graph:
    """Build a normalized Graph from endpoint arrays.

    Self-loops are dropped and duplicate unordered pairs collapsed. When
    ``n`` is given, nodes without edges are kept as isolated nodes;
    otherwise ``n`` is the max id + 1.
    """
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape:
        raise ValueError("endpoint arrays differ in length")
    keep = u != v
    u, v = u[keep], v[keep]
    if n is None:
        n = int(max(u.max(initial=-1), v.max(initial=-1))) + 1
    if len(u) and (u.min() < 0 or v.min() < 0 or u.max() >= n or v.max() >= n):
        raise ValueError(f"node id out of range [0, {n})")

    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    key = np.unique(lo * np.int64(n) + hi)
    lo, hi = key // n, key % n

    deg = np.bincount(lo, minlength=n) + np.bincount(hi, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    indices = dst[order].astype(np.int32)
    return Graph(indptr=indptr, indices=indices, orig_ids=orig_ids, load_stats=load_stats)


def load_edge_list(
    source: EdgeListSource | str | Path,
    comment_prefixes: tuple[str, ...] = COMMENT_PREFIXES,
    sep: str | None = None,
) -> Graph:
    """Load and normalize an undirected simple graph from an edge list.

    One edge per line, two integer ids separated by whitespace (extra
    columns such as weights or timestamps are ignored). Direction is
    discarded, self-loops and duplicates dropped, and ids remapped to a
    dense [0, n) range; the remap is kept in ``Graph.orig_ids`` and the
    drop counts in ``Graph.load_stats``.
    """
    if not isinstance(source, EdgeListSource):
        source = EdgeListSource(path=source, comment_prefixes=comment_prefixes, sep=sep)

    us: list[int] = []
    vs: list[int] = []
    lines_total = 0
    lines_skipped = 0
    fh = source.lines()
    try:
        for lineno, line in enumerate(fh, start=1):
            lines_total += 1
            stripped = line.strip()
            if not stripped or stripped.startswith(source.comment_prefixes):
                lines_skipped += 1
                continue
            parts = stripped.split(source.sep)
            if len(parts) < 2:
                raise EdgeListParseError(lineno, f"expected 'u v', got {stripped!r}")
            try:
                a = int(parts[0])
                b = int(parts[1])
            except ValueError:
                raise EdgeListParseError(lineno, f"non-integer node id in {stripped!r}") from None
            us.append(a)
            vs.append(b)
    finally:
        if hasattr(fh, "close"):
            fh.close()

    if not us:
        raise ValueError("empty edge list: no edges found")

    raw_u = np.asarray(us, dtype=np.int64)
    raw_v = np.asarray(vs, dtype=np.int64)
    loops = raw_u == raw_v
    ids_with_loops = np.unique(np.concatenate([raw_u, raw_v]))
    raw_u, raw_v = raw_u[~loops], raw_v[~loops]
    if len(raw_u) == 0:
        raise ValueError("empty edge list: all edges were self-loops")
    orig_ids = np.unique(np.concatenate([raw_u, raw_v]))
    u = np.searchsorted(orig_ids, raw_u)
    v = np.searchsorted(orig_ids, raw_v)

    n = len(orig_ids)
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    unique_pairs = len(np.unique(lo * np.int64(n) + hi))
    stats = LoadStats(
        lines_total=lines_total,
        lines_skipped=lines_skipped,
        edges_raw=len(us),
        self_loops_dropped=int(loops.sum()),
        duplicates_dropped=len(raw_u) - unique_pairs,
        isolated_dropped=len(ids_with_loops) - n,
    )
    return build_graph(u, v, n=n, orig_ids=orig_ids, load_stats=stats)


def dump_edge_list(g: Graph, path: str | Path) -> None:
    """Write the normalized edge list: header comment, then 'u v' with u < v."""
    ea = g.edge_array()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# n={g.n} m={g.m}\n")
        for u, v in ea:
            fh.write(f"{u} {v}\n")


def dumps_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    buf.write(f"# n={g.n} m={g.m}\n")
    for u, v in g.edge_array():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def induced_subgraph(g: Graph, nodes: Iterable[int] | np.ndarray) -> Graph:
    """Subgraph over ``nodes`` (re-indexed densely by ascending id).

    Keeps exactly the edges of ``g`` with both endpoints in ``nodes``;
    nodes that lose all edges stay as isolated nodes.
    """
    nodes = np.unique(np.asarray(list(nodes) if not isinstance(nodes, np.ndarray) else nodes, dtype=np.int64))
    if len(nodes) and (nodes[0] < 0 or nodes[-1] >= g.n):
        raise ValueError(f"node id out of range [0, {g.n})")
    mask = np.zeros(g.n, dtype=bool)
    mask[nodes] = True
    ea = g.edge_array()
    keep = mask[ea[:, 0]] & mask[ea[:, 1]]
    new_u = np.searchsorted(nodes, ea[keep, 0])
    new_v = np.searchsorted(nodes, ea[keep, 1])
    orig = g.orig_ids[nodes] if g.orig_ids is not None else nodes.copy()
    return build_graph(new_u, new_v, n=len(nodes), orig_ids=orig)


def connected_component_labels(g: Graph) -> tuple[int, np.ndarray]:
    """(number of components, per-node component label)."""
    if g.n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    ncomp, labels = sparse.csgraph.connected_components(to_csr(g), directed=False)
    return int(ncomp), labels.astype(np.int64)


def largest_connected_component(g: Graph) -> np.ndarray:
    """Sorted node ids of a maximum component; ties go to the smallest min id."""
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    ncomp, labels = connected_component_labels(g)
    sizes = np.bincount(labels, minlength=ncomp)
    best = int(sizes.max())
    candidates = np.flatnonzero(sizes == best)
    # labels are assigned in scan order, so the first node carrying a candidate
    # label is also that component's minimum id
    first_seen = [int(np.flatnonzero(labels == c)[0]) for c in candidates]
    winner = candidates[int(np.argmin(first_seen))]
    return np.flatnonzero(labels == winner).astype(np.int64)


def to_csr(g: Graph) -> sparse.csr_matrix:
    """Adjacency as a scipy CSR matrix with unit weights."""
    data = np.ones(len(g.indices), dtype=np.int64)
    return sparse.csr_matrix((data, g.indices, g.indptr), shape=(g.n, g.n))


def validate(g: Graph) -> None:
    """Assert the structural invariants; used by tests and generators."""
    n = g.n
    assert g.indptr[0] == 0 and g.indptr[-1] == len(g.indices)
    assert np.all(np.diff(g.indptr) >= 0)
    degs = g.degrees()
    assert int(degs.sum()) == 2 * g.m, "handshake violated"
    for v in range(n):
        row = g.neighbors(v)
        assert np.all(np.diff(row) > 0), f"adjacency of {v} not strictly sorted"
        assert not np.any(row == v), f"self-loop at {v}"
    # symmetry
    ea = g.edge_array()
    for u, v in ea[: min(len(ea), 100000)]:
        assert g.has_edge(int(v), int(u))

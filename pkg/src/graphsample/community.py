"""Seeded greedy modularity maximization (Louvain) and the modularity score."""

from __future__ import annotations

import numpy as np

from .graph import Graph

__all__ = ["detect_communities", "modularity"]


def modularity(g: Graph, labels: np.ndarray) -> float:
    """Modularity Q of a partition: sum over communities of
    m_c / m - (D_c / 2m)^2, with m_c the intra-community edge count and
    D_c the total degree. Labels must cover every node with dense ids.
    """
    labels = np.asarray(labels)
    if len(labels) != g.n:
        raise ValueError("partition must assign a community to every node")
    if g.m == 0:
        raise ValueError("modularity undefined for an empty edge set")
    k = int(labels.max()) + 1 if len(labels) else 0
    if labels.min() < 0 or len(np.unique(labels)) != k:
        raise ValueError("community ids must be dense in [0, #communities)")
    ea = g.edge_array()
    intra = labels[ea[:, 0]] == labels[ea[:, 1]]
    m_c = np.bincount(labels[ea[:, 0]][intra], minlength=k).astype(np.float64)
    d_c = np.bincount(labels, weights=g.degrees(), minlength=k)
    m = float(g.m)
    return float((m_c / m - (d_c / (2.0 * m)) ** 2).sum())


def detect_communities(g: Graph, seed: int = 0) -> np.ndarray:
    """Louvain with a seeded node visiting order; returns dense labels.

    Deterministic for a fixed (graph, seed). Never returns a partition
    worse than the single community (Q = 0).
    """
    if g.m == 0:
        raise ValueError("community detection needs at least one edge")
    rng = np.random.default_rng(seed)

    # current level: symmetric weighted adjacency dicts plus self-loop weights
    n = g.n
    adj: list[dict[int, float]] = [dict() for _ in range(n)]
    for u, v in g.edge_array():
        adj[u][int(v)] = adj[u].get(int(v), 0.0) + 1.0
        adj[v][int(u)] = adj[v].get(int(u), 0.0) + 1.0
    loops = np.zeros(n, dtype=np.float64)
    membership = np.arange(n, dtype=np.int64)   # original node -> current-level node
    total_weight = float(g.m)

    while True:
        labels, improved = _one_level(adj, loops, total_weight, rng)
        dense = _dense_labels(labels)
        membership = dense[membership]
        if not improved:
            break
        adj, loops = _aggregate(adj, loops, dense)
        if len(adj) <= 1:
            break

    out = _dense_labels(membership)
    if modularity(g, out) < 0.0:
        out = np.zeros(g.n, dtype=np.int64)
    return out


def _dense_labels(labels: np.ndarray) -> np.ndarray:
    """Relabel to [0, k) in order of first appearance."""
    remap: dict[int, int] = {}
    out = np.empty(len(labels), dtype=np.int64)
    for i, c in enumerate(labels):
        c = int(c)
        if c not in remap:
            remap[c] = len(remap)
        out[i] = remap[c]
    return out


def _one_level(
    adj: list[dict[int, float]],
    loops: np.ndarray,
    total_weight: float,
    rng: np.random.Generator,
) -> tuple[np.ndarray, bool]:
    """Local node moving; returns (community per node, whether any move happened)."""
    n = len(adj)
    node_deg = np.array([sum(nb.values()) for nb in adj], dtype=np.float64) + 2.0 * loops
    comm = np.arange(n, dtype=np.int64)
    comm_tot = node_deg.copy()
    m2 = 2.0 * total_weight

    improved = False
    moved = True
    sweeps = 0
    while moved and sweeps < 100:
        moved = False
        sweeps += 1
        for v in rng.permutation(n):
            v = int(v)
            cur = int(comm[v])
            link: dict[int, float] = {}
            for w, wt in adj[v].items():
                c = int(comm[w])
                link[c] = link.get(c, 0.0) + wt
            comm_tot[cur] -= node_deg[v]
            base = link.get(cur, 0.0) - comm_tot[cur] * node_deg[v] / m2
            best_c, best_gain = cur, 0.0
            for c in sorted(link):
                if c == cur:
                    continue
                gain = link[c] - comm_tot[c] * node_deg[v] / m2 - base
                if gain > best_gain + 1e-12:
                    best_c, best_gain = c, gain
            comm[v] = best_c
            comm_tot[best_c] += node_deg[v]
            if best_c != cur:
                moved = True
                improved = True
    return comm, improved


def _aggregate(
    adj: list[dict[int, float]],
    loops: np.ndarray,
    dense: np.ndarray,
) -> tuple[list[dict[int, float]], np.ndarray]:
    """Collapse communities into super-nodes; intra weight becomes loop weight."""
    k = int(dense.max()) + 1
    new_adj: list[dict[int, float]] = [dict() for _ in range(k)]
    new_loops = np.zeros(k, dtype=np.float64)
    for v, nb in enumerate(adj):
        cv = int(dense[v])
        new_loops[cv] += loops[v]
        for w, wt in nb.items():
            cw = int(dense[w])
            if cv == cw:
                if v < w:   # count each intra-community edge once
                    new_loops[cv] += wt
            else:
                new_adj[cv][cw] = new_adj[cv].get(cw, 0.0) + wt
    return new_adj, new_loops

"""Undirected simple graphs: representation, generators, file I/O, BFS rings.

Graphs are stored in CSR form (``indptr``/``indices``) with sorted,
duplicate-free neighbor lists. Instances are immutable after construction
and safe to share across threads.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ParameterError, ParseError

__all__ = [
    "Network",
    "NeighborhoodIndex",
    "generate_er",
    "generate_ab",
    "load_edge_list",
    "save_edge_list",
    "build_rings",
]


@dataclass(frozen=True)
class Network:
    """Undirected simple graph over dense 0-based node ids."""

    num_nodes: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_edges(cls, num_nodes: int, edges) -> "Network":
        """Build from an iterable of (i, j) pairs.

        Duplicate and reversed duplicates are merged; self-loops and
        out-of-range ids are rejected.
        """
        if num_nodes < 0:
            raise ParameterError("num_nodes must be nonnegative")
        pairs = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise ParameterError(f"self-loop at node {i}")
            if not (0 <= i < num_nodes and 0 <= j < num_nodes):
                raise ParameterError(f"edge ({i},{j}) outside [0,{num_nodes})")
            pairs.add((min(i, j), max(i, j)))
        counts = np.zeros(num_nodes, dtype=np.int64)
        for i, j in pairs:
            counts[i] += 1
            counts[j] += 1
        indptr = np.zeros(num_nodes + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        indices = np.empty(indptr[-1], dtype=np.int64)
        cursor = indptr[:-1].copy()
        for i, j in pairs:
            indices[cursor[i]] = j
            cursor[i] += 1
            indices[cursor[j]] = i
            cursor[j] += 1
        for i in range(num_nodes):
            indices[indptr[i]:indptr[i + 1]].sort()
        net = cls(num_nodes, indptr, indices)
        net.indptr.setflags(write=False)
        net.indices.setflags(write=False)
        return net

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @property
    def num_edges(self) -> int:
        return int(self.indices.size // 2)

    def edge_set(self) -> set[tuple[int, int]]:
        out = set()
        for i in range(self.num_nodes):
            for j in self.neighbors(i):
                if i < j:
                    out.add((i, int(j)))
        return out

    def has_edge(self, i: int, j: int) -> bool:
        row = self.neighbors(i)
        k = np.searchsorted(row, j)
        return k < row.size and row[k] == j

    def validate(self) -> None:
        """Assert structural invariants (symmetry, no loops, sorted rows)."""
        for i in range(self.num_nodes):
            row = self.neighbors(i)
            assert np.all(np.diff(row) > 0), f"row {i} not sorted/unique"
            assert i not in row, f"self-loop at {i}"
            for j in row:
                assert self.has_edge(int(j), i), f"asymmetric edge ({i},{j})"


def generate_er(n: int, p: float, seed: int) -> Network:
    """Erdős–Rényi G(n, p): each unordered pair kept independently."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if not (0.0 <= p <= 1.0):
        raise ParameterError(f"edge probability {p} not in [0,1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Network.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def generate_ab(n: int, seed: int) -> Network:
    """Preferential-attachment graph grown from a small ER core.

    The core holds max(5, ceil(n/5)) nodes wired as ER with p = 2/n; each
    later node attaches one edge to an existing node drawn with probability
    proportional to current degree (uniform while the core is edgeless).
    """
    if n < 5:
        raise ParameterError("n must be >= 5")
    rng = np.random.default_rng(seed)
    core = max(5, -(-n // 5))
    core = min(core, n)
    p = 2.0 / n
    edges = []
    for i in range(core):
        for j in range(i + 1, core):
            if rng.random() < p:
                edges.append((i, j))
    degree = np.zeros(n, dtype=np.float64)
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    for v in range(core, n):
        total = degree[:v].sum()
        if total > 0:
            weights = degree[:v] / total
            target = int(rng.choice(v, p=weights))
        else:
            target = int(rng.integers(v))
        edges.append((target, v))
        degree[target] += 1
        degree[v] += 1
    return Network.from_edges(n, edges)


def _parse_tokens(line: str) -> list[str]:
    return line.replace(",", " ").split()


def load_edge_list(path) -> Network:
    """Read an edge-list text file.

    Lines hold "i j" pairs (whitespace- or comma-separated); an optional
    first line "# nodes=N" pins the node count. Non-integer ids are
    remapped to dense ints and the mapping persisted as
    ``<path>.idmap.csv`` ("external_id,internal_id").
    """
    path = Path(path)
    lines = path.read_text().splitlines()
    declared_n = None
    raw_pairs: list[tuple[str, str, int]] = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if "nodes=" in stripped:
                try:
                    declared_n = int(stripped.split("nodes=")[1].split()[0])
                except (ValueError, IndexError):
                    raise ParseError(f"bad header at line {lineno}: {stripped!r}")
            continue
        toks = _parse_tokens(stripped)
        if len(toks) != 2:
            raise ParseError(f"expected two ids at line {lineno}: {stripped!r}")
        if toks[0] == toks[1]:
            raise ParseError(f"self-loop at line {lineno}")
        raw_pairs.append((toks[0], toks[1], lineno))

    all_int = all(t[0].lstrip("-").isdigit() and t[1].lstrip("-").isdigit() for t in raw_pairs)
    if all_int:
        pairs = []
        for a, b, lineno in raw_pairs:
            i, j = int(a), int(b)
            if i < 0 or j < 0:
                raise ParseError(f"negative id at line {lineno}")
            if declared_n is not None and (i >= declared_n or j >= declared_n):
                raise ParseError(f"id >= nodes={declared_n} at line {lineno}")
            pairs.append((i, j))
        n = declared_n if declared_n is not None else (max((max(p) for p in pairs), default=-1) + 1)
        return Network.from_edges(n, pairs)

    # string ids: remap densely in first-seen order, persist the sidecar
    mapping: dict[str, int] = {}
    pairs = []
    for a, b, _ in raw_pairs:
        for t in (a, b):
            if t not in mapping:
                mapping[t] = len(mapping)
        pairs.append((mapping[a], mapping[b]))
    n = declared_n if declared_n is not None else len(mapping)
    sidecar = path.with_name(path.name + ".idmap.csv")
    with open(sidecar, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["external_id", "internal_id"])
        for ext, internal in mapping.items():
            writer.writerow([ext, internal])
    return Network.from_edges(n, pairs)


def save_edge_list(net: Network, path) -> None:
    """Write "# nodes=N" then one "i j" line per edge (i < j)."""
    with open(path, "w") as fh:
        fh.write(f"# nodes={net.num_nodes}\n")
        for i in range(net.num_nodes):
            for j in net.neighbors(i):
                if i < j:
                    fh.write(f"{i} {j}\n")


@dataclass(frozen=True)
class NeighborhoodIndex:
    """BFS rings: for each node, the sets of nodes at exact distance u <= M.

    ``ring_indptr[u-1]``/``ring_indices[u-1]`` give CSR rows for distance u.
    ``dep_indptr``/``dep_indices`` merge all rings (the dependence
    neighborhood), with ``dep_order`` holding each entry's distance.
    """

    m_degree: int
    ring_indptr: tuple
    ring_indices: tuple
    dep_indptr: np.ndarray = field(repr=False, default=None)
    dep_indices: np.ndarray = field(repr=False, default=None)
    dep_order: np.ndarray = field(repr=False, default=None)

    def ring(self, i: int, u: int) -> np.ndarray:
        ptr, idx = self.ring_indptr[u - 1], self.ring_indices[u - 1]
        return idx[ptr[i]:ptr[i + 1]]

    @property
    def max_degree(self) -> int:
        ptr = self.ring_indptr[0]
        return int(np.max(np.diff(ptr))) if ptr.size > 1 else 0


def build_rings(net: Network, M: int) -> NeighborhoodIndex:
    """Compute N_i^u (nodes at shortest-path distance exactly u) for u <= M."""
    if M < 1:
        raise ParameterError("M must be >= 1")
    n = net.num_nodes
    per_u_rows: list[list[np.ndarray]] = [[] for _ in range(M)]
    dist = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        dist[:] = -1
        dist[i] = 0
        frontier = [i]
        for u in range(1, M + 1):
            nxt = []
            for v in frontier:
                for w in net.neighbors(v):
                    if dist[w] < 0:
                        dist[w] = u
                        nxt.append(int(w))
            nxt.sort()
            per_u_rows[u - 1].append(np.asarray(nxt, dtype=np.int64))
            frontier = nxt
            if not frontier:
                for rest in range(u + 1, M + 1):
                    per_u_rows[rest - 1].append(np.empty(0, dtype=np.int64))
                break

    ring_indptr, ring_indices = [], []
    for u in range(M):
        lens = np.fromiter((r.size for r in per_u_rows[u]), dtype=np.int64, count=n)
        ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(lens, out=ptr[1:])
        idx = np.concatenate(per_u_rows[u]) if ptr[-1] else np.empty(0, dtype=np.int64)
        ring_indptr.append(ptr)
        ring_indices.append(idx)

    dep_rows, dep_orders = [], []
    for i in range(n):
        chunks = [per_u_rows[u][i] for u in range(M)]
        dep_rows.append(np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64))
        dep_orders.append(np.concatenate([np.full(per_u_rows[u][i].size, u + 1, dtype=np.int64)
                                          for u in range(M)]))
    lens = np.fromiter((r.size for r in dep_rows), dtype=np.int64, count=n)
    dep_indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(lens, out=dep_indptr[1:])
    dep_indices = np.concatenate(dep_rows) if dep_indptr[-1] else np.empty(0, dtype=np.int64)
    dep_order = np.concatenate(dep_orders) if dep_indptr[-1] else np.empty(0, dtype=np.int64)
    return NeighborhoodIndex(M, tuple(ring_indptr), tuple(ring_indices),
                             dep_indptr, dep_indices, dep_order)

"""Immutable sparse graphs over dense 0-based node ids.

Adjacency is stored in compressed sparse row form: ``indptr``,
``indices`` and ``weights`` give, per source node, its arcs sorted by
target.  Undirected graphs store both arc directions, so degree sums,
matrix-vector products and walk counts all run on one directed kernel.

Structural rules enforced by :func:`build` (the only public
constructor): no self-loops, no duplicate edges, strictly positive
weights, at least one edge.  A graph whose stored weights are all
exactly 1.0 is flagged ``unweighted`` and gets exact integer arithmetic
in the modules that care.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphError

__all__ = [
    "Graph",
    "NodeVector",
    "build",
    "degree_vector",
    "out_degree_vector",
    "in_degree_vector",
    "is_connected",
    "is_strongly_connected",
    "is_regular",
    "transpose",
    "validate_graph",
]

# Relative spread below which weighted degrees count as equal.
_REGULAR_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class NodeVector:
    """One finite real value per node, tagged with a short label."""

    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        if arr.ndim != 1:
            raise GraphError("node vector must be one-dimensional")
        if not np.all(np.isfinite(arr)):
            raise GraphError("node vector entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodeVector):
            return NotImplemented
        return self.label == other.label and np.array_equal(self.values, other.values)

    def __repr__(self) -> str:
        return f"NodeVector(label={self.label!r}, n={len(self)})"


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable (di)graph; see the module docstring for the storage scheme."""

    n: int
    directed: bool
    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "indptr", _frozen(self.indptr, np.int64))
        object.__setattr__(self, "indices", _frozen(self.indices, np.int64))
        object.__setattr__(self, "weights", _frozen(self.weights, np.float64))

    @property
    def arc_count(self) -> int:
        return int(self.indices.shape[0])

    @property
    def edge_count(self) -> int:
        return self.arc_count if self.directed else self.arc_count // 2

    @cached_property
    def unweighted(self) -> bool:
        return bool(np.all(self.weights == 1.0))

    @cached_property
    def total_weight(self) -> float:
        """Sum of a_ij over ordered pairs; counts each undirected edge twice."""
        return float(self.weights.sum())

    @cached_property
    def rows(self) -> np.ndarray:
        """Arc source ids aligned with ``indices`` (for scatter kernels)."""
        return np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))

    @cached_property
    def out_lists(self) -> tuple[tuple[int, ...], ...]:
        """Out-neighbour ids per node as plain ints, for exact arithmetic."""
        idx = self.indices.tolist()
        ptr = self.indptr.tolist()
        return tuple(tuple(idx[ptr[i]:ptr[i + 1]]) for i in range(self.n))

    @cached_property
    def reverse(self) -> "Graph":
        """Arc-reversed graph; an undirected graph is its own reverse."""
        if not self.directed:
            return self
        order = np.lexsort((self.rows, self.indices))
        new_rows = self.indices[order]
        new_indices = self.rows[order]
        new_weights = self.weights[order]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(new_rows, minlength=self.n), out=indptr[1:])
        return Graph(self.n, True, indptr, new_indices, new_weights)

    @cached_property
    def _linked_lists(self) -> tuple[tuple[int, ...], ...]:
        """Neighbours ignoring direction (for weak-connectivity walks)."""
        if not self.directed:
            return self.out_lists
        merged = [set(nbrs) for nbrs in self.out_lists]
        for nbrs, extra in zip(self.reverse.out_lists, merged):
            extra.update(nbrs)
        return tuple(tuple(sorted(s)) for s in merged)

    def arcs(self) -> Iterator[tuple[int, int, float]]:
        """All stored arcs as (source, target, weight)."""
        rows = self.rows.tolist()
        cols = self.indices.tolist()
        wts = self.weights.tolist()
        return zip(rows, cols, wts)

    def edges(self) -> list[tuple[int, int, float]]:
        """Canonical edge list: every arc if directed, i < j once otherwise."""
        if self.directed:
            return list(self.arcs())
        return [(i, j, w) for i, j, w in self.arcs() if i < j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.weights, other.weights)
        )

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, edges={self.edge_count}, {kind})"


def _frozen(arr, dtype) -> np.ndarray:
    out = np.array(arr, dtype=dtype)
    out.flags.writeable = False
    return out


def build(n: int, edges: Iterable[Sequence], directed: bool = False) -> Graph:
    """Validate an edge list and assemble the CSR graph.

    ``edges`` holds ``(source, target)`` or ``(source, target, weight)``
    entries with 0-based ids; omitted weights default to 1.  Undirected
    edges may be given in either orientation but only once.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise GraphError("node count must be a positive integer")
    n = int(n)

    src: list[int] = []
    dst: list[int] = []
    wts: list[float] = []
    seen: set[tuple[int, int]] = set()
    for edge in edges:
        if len(edge) == 2:
            s, t = edge
            w = 1.0
        elif len(edge) == 3:
            s, t, w = edge
        else:
            raise GraphError(f"edge must be (source, target[, weight]): {edge!r}")
        if isinstance(s, bool) or isinstance(t, bool):
            raise GraphError(f"node ids must be integers: {edge!r}")
        if not isinstance(s, (int, np.integer)) or not isinstance(t, (int, np.integer)):
            raise GraphError(f"node ids must be integers: {edge!r}")
        s, t = int(s), int(t)
        if not (0 <= s < n and 0 <= t < n):
            raise GraphError(f"node id out of range 0..{n - 1}: ({s}, {t})")
        if s == t:
            raise GraphError(f"self-loop at node {s}")
        w = float(w)
        if not np.isfinite(w) or w <= 0.0:
            raise GraphError(f"nonpositive or non-finite weight on edge ({s}, {t})")
        key = (s, t) if directed else (min(s, t), max(s, t))
        if key in seen:
            raise GraphError(f"duplicate edge ({s}, {t})")
        seen.add(key)
        src.append(s)
        dst.append(t)
        wts.append(w)
        if not directed:
            src.append(t)
            dst.append(s)
            wts.append(w)

    if not src:
        raise GraphError("graph must contain at least one edge")

    src_arr = np.asarray(src, dtype=np.int64)
    dst_arr = np.asarray(dst, dtype=np.int64)
    wts_arr = np.asarray(wts, dtype=np.float64)
    order = np.lexsort((dst_arr, src_arr))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src_arr, minlength=n), out=indptr[1:])
    return Graph(n, bool(directed), indptr, dst_arr[order], wts_arr[order])


def _row_sums(g: Graph) -> np.ndarray:
    return np.bincount(g.rows, weights=g.weights, minlength=g.n)


def degree_vector(g: Graph) -> NodeVector:
    """Weighted degrees of an undirected graph."""
    if g.directed:
        raise GraphError(
            "degree_vector requires an undirected graph; "
            "use out_degree_vector or in_degree_vector"
        )
    return NodeVector(_row_sums(g), "degree")


def out_degree_vector(g: Graph) -> NodeVector:
    """Row sums A·1 (equals the plain degree on undirected graphs)."""
    return NodeVector(_row_sums(g), "out-degree")


def in_degree_vector(g: Graph) -> NodeVector:
    """Column sums (A^T)·1 (equals the plain degree on undirected graphs).

    Computed as the row sums of the reversed graph so the value agrees
    bit for bit with out_degree_vector(transpose(g)).
    """
    return NodeVector(_row_sums(g.reverse), "in-degree")


def int_out_degrees(g: Graph) -> list[int]:
    """Arc counts per source; exact degrees when the graph is unweighted."""
    return np.diff(g.indptr).tolist()


def int_in_degrees(g: Graph) -> list[int]:
    """Arc counts per target; exact degrees when the graph is unweighted."""
    return np.diff(g.reverse.indptr).tolist()


def _reaches_all(lists: Sequence[Sequence[int]], n: int) -> bool:
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        node = stack.pop()
        for nbr in lists[node]:
            if not seen[nbr]:
                seen[nbr] = 1
                count += 1
                stack.append(nbr)
    return count == n


def is_connected(g: Graph) -> bool:
    """Connectivity of the underlying undirected structure."""
    return _reaches_all(g._linked_lists, g.n)


def is_strongly_connected(g: Graph) -> bool:
    """Every node reaches every other along directed arcs."""
    if not g.directed:
        return is_connected(g)
    return _reaches_all(g.out_lists, g.n) and _reaches_all(g.reverse.out_lists, g.n)


def is_regular(g: Graph, orientation: str = "undirected"):
    """Whether all (out-/in-)degrees coincide.

    Returns ``(True, common_degree)`` or ``(False, None)``.  Unweighted
    graphs compare integer degrees exactly; weighted graphs allow a
    1e-12 relative spread.
    """
    if orientation == "undirected":
        if g.directed:
            raise GraphError("orientation 'undirected' requires an undirected graph")
        counts = int_out_degrees(g)
        sums = _row_sums(g)
    elif orientation == "out":
        counts = int_out_degrees(g)
        sums = _row_sums(g)
    elif orientation == "in":
        counts = int_in_degrees(g)
        sums = _row_sums(g.reverse)
    else:
        raise GraphError(f"orientation must be undirected, out or in: {orientation!r}")

    if g.unweighted:
        first = counts[0]
        if all(c == first for c in counts):
            return True, first
        return False, None
    lo, hi = float(sums.min()), float(sums.max())
    if hi - lo <= _REGULAR_RTOL * max(abs(hi), abs(lo), 1.0):
        return True, float(sums.mean())
    return False, None


def transpose(g: Graph) -> Graph:
    """Arc-reversed graph; the same object for undirected input."""
    return g.reverse


def validate_graph(g: Graph) -> None:
    """Audit every structural invariant; raises GraphError on the first breach."""
    if g.n < 1:
        raise GraphError("node count must be positive")
    if g.arc_count == 0:
        raise GraphError("graph must contain at least one edge")
    if g.indptr.shape != (g.n + 1,) or g.indptr[0] != 0 or g.indptr[-1] != g.arc_count:
        raise GraphError("malformed indptr")
    if np.any(np.diff(g.indptr) < 0):
        raise GraphError("indptr must be nondecreasing")
    if g.indices.shape != g.weights.shape:
        raise GraphError("indices and weights must align")
    if np.any(g.indices < 0) or np.any(g.indices >= g.n):
        raise GraphError("arc target out of range")
    if np.any(g.weights <= 0) or not np.all(np.isfinite(g.weights)):
        raise GraphError("weights must be positive and finite")
    if np.any(g.rows == g.indices):
        raise GraphError("self-loop stored")
    arcs = list(zip(g.rows.tolist(), g.indices.tolist()))
    if len(set(arcs)) != len(arcs):
        raise GraphError("duplicate arc stored")
    for i in range(g.n):
        row = g.indices[g.indptr[i]:g.indptr[i + 1]]
        if np.any(np.diff(row) <= 0):
            raise GraphError(f"row {i} targets not strictly increasing")
    if not g.directed:
        forward = {(i, j): w for i, j, w in g.arcs()}
        for (i, j), w in forward.items():
            if forward.get((j, i)) != w:
                raise GraphError("undirected storage is not symmetric")

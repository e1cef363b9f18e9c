"""Immutable undirected simple graphs with compact sorted adjacency.

Graphs are normalized on construction: self-loops are dropped, duplicate
and reversed-duplicate edges are collapsed, and nodes are relabeled to the
dense index range 0..n-1 in order of first appearance.  The external
identifiers from the input are preserved in ``original_ids``.
"""

from __future__ import annotations

import gzip
import io
from collections import deque
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

import numpy as np

from .errors import EdgeListParseError

COMMENT_PREFIXES = ("#", "%")


def _as_mask(n: int, members) -> np.ndarray:
    """Normalize a node-set argument (bool mask or index iterable) to a mask."""
    if isinstance(members, np.ndarray) and members.dtype == bool:
        if members.shape != (n,):
            raise ValueError(f"membership mask must have shape ({n},)")
        return members
    mask = np.zeros(n, dtype=bool)
    idx = np.asarray(list(members) if not isinstance(members, np.ndarray) else members,
                     dtype=np.int64)
    if idx.size:
        if idx.min() < 0 or idx.max() >= n:
            raise IndexError("node index out of range")
        mask[idx] = True
    return mask


class Graph:
    """Undirected simple graph in CSR form.

    Attributes:
        indptr: int64 array of length n+1; row v spans indptr[v]:indptr[v+1].
        indices: int64 array of sorted neighbor indices (each edge stored twice).
        original_ids: tuple of external identifiers, one per node index.
    """

    __slots__ = ("indptr", "indices", "original_ids", "_degrees")

    def __init__(self, indptr: np.ndarray, indices: np.ndarray,
                 original_ids: Sequence):
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int64)
        self.original_ids = tuple(original_ids)
        self._degrees = np.diff(self.indptr)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self._degrees.setflags(write=False)
        if len(self.original_ids) != self.node_count:
            raise ValueError("original_ids length does not match node count")

    # -- basic accessors ---------------------------------------------------

    @property
    def node_count(self) -> int:
        return self.indptr.shape[0] - 1

    @property
    def edge_count(self) -> int:
        return self.indices.shape[0] // 2

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return int(self._degrees.max()) if self.node_count else 0

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count})"

    def __eq__(self, other) -> bool:
        """Equality as labeled graphs: same identifiers, same edges between them.

        Internal index assignment is not part of the comparison; two loads of
        the same logical graph compare equal even if first-appearance order
        assigned different indices.
        """
        if not isinstance(other, Graph):
            return NotImplemented
        if self.node_count != other.node_count or self.edge_count != other.edge_count:
            return False
        if set(self.original_ids) != set(other.original_ids):
            return False
        return self._labeled_edge_set() == other._labeled_edge_set()

    def __hash__(self):
        return hash((self.node_count, self.edge_count, frozenset(self.original_ids)))

    def _labeled_edge_set(self) -> set:
        ids = self.original_ids
        return {frozenset((ids[u], ids[v])) for u, v in self.canonical_edges()}

    # -- construction ------------------------------------------------------

    @classmethod
    def _build(cls, n: int, edges: np.ndarray, original_ids: Sequence) -> "Graph":
        """Assemble CSR from a deduplicated (m, 2) array of index pairs u < v."""
        if edges.size:
            src = np.concatenate([edges[:, 0], edges[:, 1]])
            dst = np.concatenate([edges[:, 1], edges[:, 0]])
            order = np.lexsort((dst, src))
            src = src[order]
            dst = dst[order]
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
            return cls(indptr, dst, original_ids)
        return cls(np.zeros(n + 1, dtype=np.int64),
                   np.empty(0, dtype=np.int64), original_ids)

    @classmethod
    def from_edges(cls, pairs: Iterable, ids: Sequence | None = None) -> "Graph":
        """Build a normalized graph from raw (u, v) pairs.

        Tokens may be any hashable identifiers; they are relabeled to dense
        indices in first-appearance order.  Self-loop pairs register the node
        but contribute no edge; duplicates (in either direction) collapse.
        """
        index: dict = {}
        edge_rows = []
        for u, v in pairs:
            iu = index.setdefault(u, len(index))
            iv = index.setdefault(v, len(index))
            if iu != iv:
                edge_rows.append((iu, iv) if iu < iv else (iv, iu))
        n = len(index)
        if edge_rows:
            edges = np.unique(np.asarray(edge_rows, dtype=np.int64), axis=0)
        else:
            edges = np.empty((0, 2), dtype=np.int64)
        if ids is None:
            ids = list(index.keys())
        return cls._build(n, edges, ids)

    @classmethod
    def from_edge_array(cls, pairs: np.ndarray, n: int | None = None) -> "Graph":
        """Vectorized construction from an integer (m, 2) array.

        Node indices are taken literally (no relabeling); ``n`` defaults to
        max index + 1.  Intended for synthetic generators.
        """
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        if n is None:
            n = int(pairs.max()) + 1 if pairs.size else 0
        keep = pairs[:, 0] != pairs[:, 1]
        pairs = pairs[keep]
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        if lo.size:
            key = np.unique(lo * np.int64(n) + hi)
            edges = np.column_stack([key // n, key % n])
        else:
            edges = np.empty((0, 2), dtype=np.int64)
        return cls._build(n, edges, list(range(n)))

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        """Build from a square adjacency matrix (dense or scipy sparse).

        Any nonzero entry (i, j) or (j, i) with i != j yields the undirected
        edge {i, j}; the diagonal is ignored.  All n nodes are kept, so
        isolated rows survive with degree 0.
        """
        import scipy.sparse as sp

        if sp.issparse(matrix):
            coo = matrix.tocoo()
            if coo.shape[0] != coo.shape[1]:
                raise ValueError("adjacency matrix must be square")
            nz = coo.data != 0
            pairs = np.column_stack([coo.row[nz], coo.col[nz]])
            n = coo.shape[0]
        else:
            arr = np.asarray(matrix)
            if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
                raise ValueError("adjacency matrix must be square")
            r, c = np.nonzero(arr)
            pairs = np.column_stack([r, c])
            n = arr.shape[0]
        return cls.from_edge_array(pairs, n=n)

    # -- induced-subgraph queries -------------------------------------------

    def induced_degree(self, members, v: int) -> int:
        """Number of neighbors of v inside the member set; 0 if v is outside."""
        if not 0 <= v < self.node_count:
            raise IndexError(f"node index {v} out of range")
        mask = _as_mask(self.node_count, members)
        if not mask[v]:
            return 0
        return int(mask[self.neighbors(v)].sum())

    def induced_edge_count(self, members) -> int:
        """Number of edges with both endpoints inside the member set."""
        mask = _as_mask(self.node_count, members)
        total = 0
        for v in np.flatnonzero(mask):
            total += int(mask[self.neighbors(v)].sum())
        return total // 2

    def connected_component_count(self) -> int:
        seen = np.zeros(self.node_count, dtype=bool)
        count = 0
        for start in range(self.node_count):
            if seen[start]:
                continue
            count += 1
            seen[start] = True
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for u in self.neighbors(v):
                    if not seen[u]:
                        seen[u] = True
                        queue.append(u)
        return count

    # -- serialization -------------------------------------------------------

    def canonical_edges(self) -> Iterator[tuple[int, int]]:
        """Yield index pairs (u, v), u < v, in lexicographic order.

        Isolated nodes are represented by the degenerate pair (v, v) so that
        the canonical form round-trips them (the loader keeps the node and
        drops the loop).
        """
        pairs = []
        for v in range(self.node_count):
            if self._degrees[v] == 0:
                pairs.append((v, v))
            else:
                for u in self.neighbors(v):
                    if u > v:
                        pairs.append((v, int(u)))
        pairs.sort()
        return iter(pairs)

    def canonical_text(self) -> str:
        """Canonical edge-list form: one "min_id<TAB>max_id" line per edge."""
        ids = self.original_ids
        return "".join(f"{ids[u]}\t{ids[v]}\n" for u, v in self.canonical_edges())

    def write_canonical(self, target: str | Path | IO[str]) -> None:
        text = self.canonical_text()
        if isinstance(target, (str, Path)):
            Path(target).write_text(text)
        else:
            target.write(text)


def load_edge_list(source: str | Path | IO, *,
                   comment_prefixes: tuple[str, ...] = COMMENT_PREFIXES) -> Graph:
    """Load a whitespace-separated edge list into a normalized Graph.

    Lines starting with '#' or '%' and blank lines are skipped.  Every other
    line must hold exactly two node tokens.  Paths ending in ``.gz`` are read
    through gzip.  Empty input yields the empty graph.

    Raises:
        EdgeListParseError: a data line has the wrong token count (the error
            names the 1-based line number).
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        opener = gzip.open if path.suffix == ".gz" else open
        with opener(path, "rt") as fh:
            return load_edge_list(fh, comment_prefixes=comment_prefixes)
    if isinstance(source, (bytes, bytearray)):
        source = io.StringIO(source.decode())

    index: dict[str, int] = {}
    edge_rows = []
    for line_no, raw in enumerate(source, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode()
        line = raw.strip()
        if not line or line.startswith(comment_prefixes):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                line_no, f"expected two node tokens, found {len(tokens)}")
        u, v = tokens
        iu = index.setdefault(u, len(index))
        iv = index.setdefault(v, len(index))
        if iu != iv:
            edge_rows.append((iu, iv) if iu < iv else (iv, iu))

    n = len(index)
    if edge_rows:
        edges = np.unique(np.asarray(edge_rows, dtype=np.int64), axis=0)
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    return Graph._build(n, edges, list(index.keys()))

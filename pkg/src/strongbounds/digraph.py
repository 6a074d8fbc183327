"""Loop-free simple digraphs on dense integer vertex ids.

Vertices are 0..n-1; display names live in the I/O layer. Digraphs are
immutable after construction, so profiles and products computed from them can
be cached and shared freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import LoopArc, ParallelArc, VertexOutOfRange

Arc = tuple[int, int]


def _csr(n: int, pairs: list[Arc]) -> tuple[np.ndarray, np.ndarray]:
    """CSR rows keyed by the first pair element, columns sorted ascending."""
    pairs.sort()
    indptr = np.zeros(n + 1, dtype=np.int32)
    for a, _ in pairs:
        indptr[a + 1] += 1
    np.cumsum(indptr, out=indptr)
    indices = np.fromiter((b for _, b in pairs), dtype=np.int32, count=len(pairs))
    indptr.setflags(write=False)
    indices.setflags(write=False)
    return indptr, indices


@dataclass(frozen=True, eq=False)
class Digraph:
    """Immutable digraph: vertex count plus a set of ordered arcs.

    Adjacency is kept in CSR form (out, in, and the undirected union used by
    neighborhood-based definitions) so the numeric kernels can run on it
    directly.
    """

    n: int
    arcs: frozenset[Arc]
    out_indptr: np.ndarray = field(repr=False)
    out_indices: np.ndarray = field(repr=False)
    in_indptr: np.ndarray = field(repr=False)
    in_indices: np.ndarray = field(repr=False)
    und_indptr: np.ndarray = field(repr=False)
    und_indices: np.ndarray = field(repr=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def out_neighbors(self, v: int) -> frozenset[int]:
        """{u : (v,u) is an arc}."""
        self._check_vertex(v)
        return frozenset(self.out_indices[self.out_indptr[v]:self.out_indptr[v + 1]].tolist())

    def in_neighbors(self, v: int) -> frozenset[int]:
        """{w : (w,v) is an arc}."""
        self._check_vertex(v)
        return frozenset(self.in_indices[self.in_indptr[v]:self.in_indptr[v + 1]].tolist())

    def neighbors(self, v: int) -> frozenset[int]:
        """Out- and in-neighbors combined; never contains v itself."""
        self._check_vertex(v)
        return frozenset(self.und_indices[self.und_indptr[v]:self.und_indptr[v + 1]].tolist())

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def is_bidirected(self) -> bool:
        """True when every arc is paired with its reverse (undirected-style)."""
        return all((b, a) in self.arcs for (a, b) in self.arcs)

    def reachable_from(self, source: int, reverse: bool = False) -> np.ndarray:
        """Boolean reachability vector by BFS along arcs (or reversed arcs)."""
        self._check_vertex(source)
        indptr = self.in_indptr if reverse else self.out_indptr
        indices = self.in_indices if reverse else self.out_indices
        seen = np.zeros(self.n, dtype=bool)
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in indices[indptr[u]:indptr[u + 1]]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(int(w))
        return seen


def from_arcs(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Build a digraph, rejecting loops, duplicates, and out-of-range ids.

    Malformed input is surfaced rather than silently repaired: a repeated
    ordered pair raises ParallelArc even though the arc set could absorb it.
    """
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
    seen: set[Arc] = set()
    for a, b in arcs:
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"arc ({a},{b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise LoopArc(f"loop arc ({a},{a}) not allowed")
        if (a, b) in seen:
            raise ParallelArc(f"duplicate arc ({a},{b})")
        seen.add((a, b))

    out_indptr, out_indices = _csr(n, list(seen))
    in_indptr, in_indices = _csr(n, [(b, a) for a, b in seen])
    und_pairs = {(a, b) for a, b in seen} | {(b, a) for a, b in seen}
    und_indptr, und_indices = _csr(n, list(und_pairs))
    return Digraph(
        n=n,
        arcs=frozenset(seen),
        out_indptr=out_indptr,
        out_indices=out_indices,
        in_indptr=in_indptr,
        in_indices=in_indices,
        und_indptr=und_indptr,
        und_indices=und_indices,
    )


def is_strong(d: Digraph) -> bool:
    """Every ordered vertex pair joined by a directed path.

    Dual BFS from vertex 0: forward reachability covers 0->x for all x,
    reverse reachability covers x->0; together they cover every ordered pair.
    """
    return bool(d.reachable_from(0).all() and d.reachable_from(0, reverse=True).all())


def find_unreachable_pair(d: Digraph) -> tuple[int, int] | None:
    """Some ordered pair (u, v) with no directed u->v path, if one exists."""
    fwd = d.reachable_from(0)
    if not fwd.all():
        return (0, int(np.flatnonzero(~fwd)[0]))
    back = d.reachable_from(0, reverse=True)
    if not back.all():
        return (int(np.flatnonzero(~back)[0]), 0)
    return None

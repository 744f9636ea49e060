"""Signed digraph data model, structural predicates, and cycle enumeration.

A sidigraph is a digraph whose arcs carry a sign of +1 or -1, with no
self-loops and at most one arc per ordered vertex pair.  Instances are
immutable and hashable; every operation here is a pure function, so values
can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CycleBudgetExceeded, InvalidEdge, InvalidSidigraph, MissingArc

Arc = tuple[int, int, int]

DEFAULT_CYCLE_BUDGET = 10**6


@dataclass(frozen=True, init=False)
class Sidigraph:
    """n vertices indexed 0..n-1 plus a canonically sorted tuple of signed arcs."""

    n: int
    arcs: tuple[Arc, ...]

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise InvalidSidigraph(f"vertex count must be a positive integer, got {n!r}")
        seen: dict[tuple[int, int], int] = {}
        for arc in arcs:
            try:
                tail, head, sign = arc
            except (TypeError, ValueError):
                raise InvalidSidigraph(f"arc must be a (tail, head, sign) triple, got {arc!r}")
            tail, head, sign = int(tail), int(head), int(sign)
            if tail == head:
                raise InvalidSidigraph(f"self-loop on vertex {tail} is not allowed")
            if not (0 <= tail < n and 0 <= head < n):
                raise InvalidSidigraph(f"arc ({tail}, {head}) out of range for n={n}")
            if sign not in (1, -1):
                raise InvalidSidigraph(f"arc sign must be +1 or -1, got {sign}")
            if (tail, head) in seen:
                raise InvalidSidigraph(f"duplicate arc ({tail}, {head})")
            seen[(tail, head)] = sign
        canon = tuple((t, h, s) for (t, h), s in sorted(seen.items()))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", canon)

    @cached_property
    def _sign_map(self) -> dict[tuple[int, int], int]:
        return {(t, h): s for t, h, s in self.arcs}

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for t, h, _ in self.arcs:
            out[t].append(h)
        return tuple(tuple(lst) for lst in out)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._sign_map

    def arc_sign(self, tail: int, head: int) -> int:
        """Sign of the arc (tail, head), or 0 if absent."""
        return self._sign_map.get((tail, head), 0)

    def is_all_positive(self) -> bool:
        return all(s == 1 for _, _, s in self.arcs)


@dataclass(frozen=True)
class CycleRecord:
    """A simple directed cycle, rotated to start at its minimum vertex.

    ``sign`` is the product of the member arc signs; consecutive vertices
    (and last back to first) are arcs of the host sidigraph.
    """

    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arc_pairs(self) -> tuple[tuple[int, int], ...]:
        v = self.vertices
        return tuple((v[i], v[(i + 1) % len(v)]) for i in range(len(v)))


@dataclass(frozen=True)
class DeltaClass:
    """Cycle-sign classification flags.

    ``in_delta1``: bipartite with every cycle of length divisible by 4
    negative and every other (even) cycle positive.  ``in_delta2``:
    bipartite with every cycle negative.  Graphs without cycles belong to
    both classes vacuously when bipartite.
    """

    in_delta1: bool
    in_delta2: bool
    is_bipartite: bool
    is_cycle_balanced: bool


def adjacency_matrix(s: Sidigraph) -> np.ndarray:
    """Dense n-by-n integer matrix with entries in {-1, 0, 1}."""
    a = np.zeros((s.n, s.n), dtype=np.int64)
    for t, h, sign in s.arcs:
        a[t, h] = sign
    return a


def negate(s: Sidigraph) -> Sidigraph:
    """Flip the sign of every arc (an involution)."""
    return Sidigraph(s.n, ((t, h, -sign) for t, h, sign in s.arcs))


def underlying_digraph(s: Sidigraph) -> Sidigraph:
    """Same arcs, all signs +1 (idempotent)."""
    return Sidigraph(s.n, ((t, h, 1) for t, h, _ in s.arcs))


def delete_arc(s: Sidigraph, tail: int, head: int) -> Sidigraph:
    if not s.has_arc(tail, head):
        raise MissingArc(f"arc ({tail}, {head}) is not present")
    return Sidigraph(s.n, (a for a in s.arcs if (a[0], a[1]) != (tail, head)))


def is_strongly_connected(s: Sidigraph) -> bool:
    """Every ordered vertex pair joined by a directed path (signs ignored)."""
    if s.n == 1:
        return True
    fwd: list[list[int]] = [[] for _ in range(s.n)]
    bwd: list[list[int]] = [[] for _ in range(s.n)]
    for t, h, _ in s.arcs:
        fwd[t].append(h)
        bwd[h].append(t)

    def reaches_all(adj: list[list[int]]) -> bool:
        seen = bytearray(s.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        return count == s.n

    return reaches_all(fwd) and reaches_all(bwd)


def two_coloring(s: Sidigraph) -> tuple[int, ...] | None:
    """A proper 2-coloring of the underlying undirected graph, or None."""
    adj: list[list[int]] = [[] for _ in range(s.n)]
    for t, h, _ in s.arcs:
        adj[t].append(h)
        adj[h].append(t)
    color = [-1] * s.n
    for start in range(s.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


def is_bipartite(s: Sidigraph) -> bool:
    return two_coloring(s) is not None


def is_symmetric(s: Sidigraph) -> bool:
    """True iff every arc (u, v, sign) is matched by (v, u, sign)."""
    return all(s.arc_sign(h, t) == sign for t, h, sign in s.arcs)


def from_sigraph(edges: Iterable[Sequence[int]], n: int | None = None) -> Sidigraph:
    """Expand a signed graph into the symmetric sidigraph with the same signs.

    Each signed edge (u, v, sign) becomes the two opposite arcs (u, v, sign)
    and (v, u, sign).  Vertex count defaults to 1 + the largest endpoint.
    """
    arcs = []
    seen = set()
    top = -1
    for edge in edges:
        try:
            u, v, sign = edge
        except (TypeError, ValueError):
            raise InvalidEdge(f"edge must be a (u, v, sign) triple, got {edge!r}")
        u, v = int(u), int(v)
        if u == v:
            raise InvalidEdge(f"self-edge on vertex {u} is not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidEdge(f"duplicate edge {key}")
        seen.add(key)
        top = max(top, u, v)
        arcs.append((u, v, int(sign)))
        arcs.append((v, u, int(sign)))
    if n is None:
        n = top + 1 if top >= 0 else 1
    return Sidigraph(n, arcs)


def enumerate_cycles(
    s: Sidigraph,
    max_len: int | None = None,
    budget: int = DEFAULT_CYCLE_BUDGET,
) -> list[CycleRecord]:
    """All distinct simple directed cycles with their signs.

    Each cycle appears once, rotated to start at its minimum vertex, in
    deterministic order (length, then lexicographic vertex sequence).
    Raises CycleBudgetExceeded when more than ``budget`` cycles are found.
    """
    limit = s.n if max_len is None else min(max_len, s.n)
    if limit < 2:
        return []
    sign_of = s._sign_map
    succ = s.successors
    found: list[CycleRecord] = []

    for root in range(s.n):
        path = [root]
        on_path = bytearray(s.n)
        on_path[root] = 1
        sign_stack = [1]
        # iterators per depth; only vertices > root may appear after the root
        iters = [iter(succ[root])]
        while iters:
            it = iters[-1]
            v = path[-1]
            advanced = False
            for w in it:
                if w == root:
                    if len(found) >= budget:
                        raise CycleBudgetExceeded(
                            f"more than {budget} cycles (raise the budget to continue)"
                        )
                    found.append(
                        CycleRecord(tuple(path), sign_stack[-1] * sign_of[(v, root)])
                    )
                elif w > root and not on_path[w] and len(path) < limit:
                    path.append(w)
                    on_path[w] = 1
                    sign_stack.append(sign_stack[-1] * sign_of[(v, w)])
                    iters.append(iter(succ[w]))
                    advanced = True
                    break
            if not advanced:
                iters.pop()
                on_path[path.pop()] = 0
                sign_stack.pop()

    found.sort(key=lambda c: (len(c.vertices), c.vertices))
    return found


def classify(s: Sidigraph, budget: int = DEFAULT_CYCLE_BUDGET) -> DeltaClass:
    """Exact cycle-sign classification from the full cycle census."""
    bip = is_bipartite(s)
    cycles = enumerate_cycles(s, budget=budget)
    balanced = all(c.sign == 1 for c in cycles)
    d1 = bip and all(
        (c.sign == -1) if c.length % 4 == 0 else (c.sign == 1) for c in cycles
    )
    d2 = bip and all(c.sign == -1 for c in cycles)
    return DeltaClass(
        in_delta1=d1, in_delta2=d2, is_bipartite=bip, is_cycle_balanced=balanced
    )

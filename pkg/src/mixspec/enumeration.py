"""Exhaustive enumeration of integrated colorings for arbitrary graphs.

This module is the brute-force oracle that validates the closed-form counts,
distributions, and bounds elsewhere in the package.  The search is a
backtracking scan in vertex-id order that yields colorings in lexicographic
order (black before white).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .graph import BLACK, WHITE, Coloring, Graph, is_integrated, mix_of_coloring

DEFAULT_VERTEX_CAP = 24


class CapExceededError(ValueError):
    """Raised when a graph is too large for exhaustive search."""


def _check_cap(g: Graph, cap: int | None) -> None:
    limit = DEFAULT_VERTEX_CAP if cap is None else cap
    if g.vertex_count > limit:
        raise CapExceededError(
            f"graph has {g.vertex_count} vertices; exhaustive enumeration is capped at {limit}"
        )


def enumerate_integrated(g: Graph, cap: int | None = None) -> Iterator[Coloring]:
    """Yield every integrated coloring exactly once, in lexicographic order.

    A partial assignment is pruned as soon as some assigned vertex v can no
    longer reach mix(v) >= deg(v)/2 even if all its unassigned neighbors turn
    out opposite.  Unassigned vertices can always pick the minority color of
    their already-assigned neighbors, so only assigned vertices can fail.
    A full integration check guards every leaf, so a pruning bug could cost
    time but never emit a wrong coloring.
    """
    _check_cap(g, cap)
    n = g.vertex_count
    if n == 0:
        yield ()
        return
    deg = [g.degree(v) for v in range(n)]
    nbrs = [sorted(g.adjacency[v]) for v in range(n)]
    colors = [-1] * n
    opp = [0] * n   # opposite-colored neighbors, counted once both ends are set
    seen = [0] * n  # assigned neighbors

    def viable(v: int) -> bool:
        return 2 * (opp[v] + deg[v] - seen[v]) >= deg[v]

    def search(v: int) -> Iterator[Coloring]:
        if v == n:
            candidate = tuple(colors)
            if is_integrated(g, candidate)[0]:
                yield candidate
            return
        for color in (BLACK, WHITE):
            colors[v] = color
            gained = 0
            for w in nbrs[v]:
                seen[w] += 1
                if colors[w] >= 0 and colors[w] != color:
                    opp[w] += 1
                    gained += 1
            opp[v] = gained
            if viable(v) and all(viable(w) for w in nbrs[v] if w < v):
                yield from search(v + 1)
            for w in nbrs[v]:
                seen[w] -= 1
                if colors[w] >= 0 and colors[w] != color:
                    opp[w] -= 1
            opp[v] = 0
        colors[v] = -1

    yield from search(0)


@dataclass(frozen=True)
class MixHistogram:
    """Exact distribution of mixing numbers over all integrated colorings."""

    counts: dict[int, int]

    @property
    def ic(self) -> int:
        return sum(self.counts.values())

    @property
    def ims(self) -> tuple[int, ...]:
        return tuple(sorted(k for k, c in self.counts.items() if c > 0))

    @property
    def ims_min(self) -> int:
        return self.ims[0]

    @property
    def ims_max(self) -> int:
        return self.ims[-1]


def mix_histogram(g: Graph, cap: int | None = None) -> MixHistogram:
    """Histogram of mix(C) over the full enumeration of integrated colorings."""
    counter: Counter[int] = Counter()
    for c in enumerate_integrated(g, cap=cap):
        counter[mix_of_coloring(g, c)] += 1
    return MixHistogram(dict(sorted(counter.items())))


def max_cut(g: Graph, cap: int | None = None) -> int:
    """Exact max-cut size by exhausting all 2^(n-1) splits."""
    _check_cap(g, cap)
    n = g.vertex_count
    edge_list = g.edges()
    if n <= 1 or not edge_list:
        return 0
    best = 0
    # Vertex n-1 stays on the fixed side; complement splits give the same cut.
    for mask in range(1 << (n - 1)):
        cut = 0
        for u, v in edge_list:
            if ((mask >> u) ^ (mask >> v)) & 1:
                cut += 1
        if cut > best:
            best = cut
    return best


def propp_local_search(g: Graph, start: Coloring) -> tuple[Coloring, int]:
    """Flip the lowest-indexed non-integrated vertex until none remains.

    Every flip strictly increases the number of balanced edges, so the
    procedure stops after at most edge_count flips and the result is
    integrated.
    """
    if len(start) != g.vertex_count:
        raise ValueError("coloring length does not match vertex count")
    colors = list(start)
    flips = 0
    while True:
        for v in range(g.vertex_count):
            cv = colors[v]
            mix = sum(1 for w in g.adjacency[v] if colors[w] != cv)
            if 2 * mix < g.degree(v):
                colors[v] = WHITE if cv == BLACK else BLACK
                flips += 1
                break
        else:
            return tuple(colors), flips

"""Signed shortest-path distances.

Between two vertices u and v of a connected signed graph there may be
several shortest paths, and they need not agree in sign.  Write
sigma_max(u, v) = +1 when some shortest u-v path is positive (else -1)
and sigma_min(u, v) = -1 when some shortest u-v path is negative
(else +1).  The two signed distances are

    d_max(u, v) = sigma_max(u, v) * d(u, v)
    d_min(u, v) = sigma_min(u, v) * d(u, v)

where d is the ordinary hop distance.  A pair is compatible when every
shortest path between its ends has the same sign (d_max = d_min), and
the graph is compatible when every pair is.

The per-source computation runs a BFS and then a dynamic program in
level order over the shortest-path DAG: the achievable sign set of a
vertex is the union, over DAG predecessors p, of the predecessor sets
multiplied by the sign of the connecting edge.  Each source costs
O(V + E) since the sign sets form a 3-element lattice.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import DisconnectedError, SignedGraph


@dataclass(frozen=True)
class PathSigns:
    """Which signs occur among the shortest paths of a vertex pair."""

    has_positive: bool
    has_negative: bool

    @property
    def sigma_max(self) -> int:
        return 1 if self.has_positive else -1

    @property
    def sigma_min(self) -> int:
        return -1 if self.has_negative else 1

    @property
    def is_single(self) -> bool:
        """True when all shortest paths agree in sign (a compatible pair)."""
        return self.has_positive != self.has_negative


class Reach(NamedTuple):
    distance: int
    signs: PathSigns


def sign_reachability(g: SignedGraph, source: int) -> list[Reach]:
    """Distance and shortest-path sign set from `source` to every vertex.

    Raises DisconnectedError when some vertex is unreachable.  The
    source itself is at distance 0 with sign set {+1} (the empty path).
    """
    g._check_vertex(source)
    n = g.vertex_count
    dist = [-1] * n
    dist[source] = 0
    order = [source]
    queue = deque((source,))
    while queue:
        x = queue.popleft()
        for y, _ in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                order.append(y)
                queue.append(y)
    if len(order) < n:
        missing = next(v for v in range(n) if dist[v] < 0)
        raise DisconnectedError(f"vertex {missing} unreachable from {source}")
    pos = [False] * n
    neg = [False] * n
    pos[source] = True
    # BFS order lists each vertex after all vertices of smaller level,
    # so every DAG predecessor is finished before its successors.
    for v in order[1:]:
        dv = dist[v]
        p = ng = False
        for w, s in g.neighbors(v):
            if dist[w] == dv - 1:
                if s > 0:
                    p |= pos[w]
                    ng |= neg[w]
                else:
                    p |= neg[w]
                    ng |= pos[w]
        pos[v] = p
        neg[v] = ng
    return [Reach(dist[v], PathSigns(pos[v], neg[v])) for v in range(n)]


def _reach_table(g: SignedGraph) -> tuple[list[Reach], ...]:
    """All-pairs sign reachability, cached on the (immutable) graph."""
    table = g._cache.get("reach_table")
    if table is None:
        table = tuple(sign_reachability(g, s) for s in range(g.vertex_count))
        g._cache["reach_table"] = table
    return table


@dataclass(eq=False, frozen=True)
class SignedDistanceMatrix:
    """Square integer matrix with entry (u, v) = sign * distance."""

    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedDistanceMatrix):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))


def distance_matrices(g: SignedGraph) -> tuple[SignedDistanceMatrix, SignedDistanceMatrix]:
    """(D_max, D_min) for a connected graph."""
    table = _reach_table(g)
    n = g.vertex_count
    dmax = np.zeros((n, n), dtype=np.int64)
    dmin = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            d, signs = table[u][v]
            dmax[u, v] = signs.sigma_max * d
            dmin[u, v] = signs.sigma_min * d
    return SignedDistanceMatrix(dmax), SignedDistanceMatrix(dmin)


def is_compatible_pair(g: SignedGraph, u: int, v: int) -> bool:
    """True when all shortest u-v paths share one sign (true when u == v)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return True
    return _reach_table(g)[u][v].signs.is_single


def is_compatible(g: SignedGraph) -> bool:
    return first_incompatible_pair(g) is None


def first_incompatible_pair(g: SignedGraph) -> tuple[int, int] | None:
    """Lexicographically first pair u < v with shortest paths of both signs."""
    table = _reach_table(g)
    for u in range(g.vertex_count):
        row = table[u]
        for v in range(u + 1, g.vertex_count):
            if not row[v].signs.is_single:
                return (u, v)
    return None


def diameter(g: SignedGraph) -> int:
    table = _reach_table(g)
    return max(r.distance for row in table for r in row)


def shortest_path_with_sign(g: SignedGraph, u: int, v: int, sign: int) -> tuple[int, ...] | None:
    """Lexicographically least shortest u-v path of the requested sign.

    Returns None when no shortest u-v path has that sign.  Greedy
    reconstruction over the shortest-path DAG: at each step take the
    smallest next vertex from which the remaining sign requirement is
    still achievable (checked against the reachability table of v).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    table = _reach_table(g)
    from_u = table[u]
    from_v = table[v]
    d = from_u[v].distance
    if u == v:
        return (u,) if sign == 1 else None
    want = from_u[v].signs
    if (sign > 0 and not want.has_positive) or (sign < 0 and not want.has_negative):
        return None
    path = [u]
    x = u
    acc = 1
    for _ in range(d):
        dx = from_u[x].distance
        for y, s in g.neighbors(x):
            if from_u[y].distance != dx + 1:
                continue
            if from_u[y].distance + from_v[y].distance != d:
                continue
            need = sign * acc * s  # sign still required on the y..v stretch
            rest = from_v[y].signs
            if (need > 0 and rest.has_positive) or (need < 0 and rest.has_negative):
                path.append(y)
                acc *= s
                x = y
                break
        else:  # pragma: no cover - the invariant above guarantees progress
            raise AssertionError("sign-constrained reconstruction got stuck")
    return tuple(path)

"""Signed graphs: construction, switching, connectivity, and path signs.

A signed graph is a finite simple undirected graph together with a sign
function assigning +1 or -1 to every edge.  The sign of a path (or any
walk) is the product of the signs of its edges; a cycle is positive or
negative accordingly, and a graph all of whose cycles are positive is
called balanced.

Vertices are dense 0-based integers.  Graphs are immutable after
construction; operations that change a graph (switching, taking powers)
return new graphs.  A graph on a single vertex counts as connected.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class SignedGraphError(Exception):
    """Base class for every error raised by this package."""


class LoopEdgeError(SignedGraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(SignedGraphError):
    """The same unordered vertex pair was given more than once."""


class BadSignError(SignedGraphError):
    """An edge sign other than +1 or -1."""


class VertexOutOfRangeError(SignedGraphError):
    """A vertex index outside [0, vertex_count)."""


class NotAPathError(SignedGraphError):
    """A vertex sequence that is not a path (or walk) of the graph."""


class DisconnectedError(SignedGraphError):
    """The operation needs a connected graph."""


class BadExponentError(SignedGraphError):
    """Power exponent below 1."""


class NotCompatibleError(SignedGraphError):
    """The operation needs a graph whose shortest-path signs are unambiguous."""


class NonUniquePowerError(SignedGraphError):
    """The n-th power is not unique (max and min versions differ)."""


class MissingWitnessError(SignedGraphError):
    """No recorded underlying path for an edge of a power graph."""


class NotTwoConnectedError(SignedGraphError):
    """The operation needs a 2-connected graph."""


class NotBalancedError(SignedGraphError):
    """The operation needs a balanced graph."""


class PreconditionViolatedError(SignedGraphError):
    """A check was invoked outside its stated hypotheses."""


Edge = tuple[int, int, int]  # (u, v, sign) with u < v


class SignedGraph:
    """An immutable signed graph.

    `edges` may list endpoints in either order; they are stored
    canonically with u < v.  Loops, repeated pairs, signs outside
    {+1, -1} and out-of-range endpoints are rejected.
    """

    __slots__ = ("vertex_count", "_sign_by_pair", "_adjacency", "_cache")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int, int]] = ()):
        if not isinstance(vertex_count, int) or vertex_count < 1:
            raise ValueError("vertex_count must be a positive integer")
        sign_by_pair: dict[tuple[int, int], int] = {}
        for u, v, s in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexOutOfRangeError(
                    f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})"
                )
            if u == v:
                raise LoopEdgeError(f"loop edge at vertex {u}")
            if s not in (1, -1):
                raise BadSignError(f"edge ({u}, {v}) has sign {s!r}; signs must be +1 or -1")
            key = (u, v) if u < v else (v, u)
            if key in sign_by_pair:
                raise DuplicateEdgeError(f"edge {key} appears more than once")
            sign_by_pair[key] = s
        neighbors: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for (u, v), s in sign_by_pair.items():
            neighbors[u].append((v, s))
            neighbors[v].append((u, s))
        self.vertex_count: int = vertex_count
        self._sign_by_pair = sign_by_pair
        self._adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
        self._cache: dict = {}

    # -- accessors ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self._sign_by_pair)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges as (u, v, sign) with u < v, sorted."""
        out = self._cache.get("edges")
        if out is None:
            out = tuple(sorted((u, v, s) for (u, v), s in self._sign_by_pair.items()))
            self._cache["edges"] = out
        return out

    def vertices(self) -> range:
        return range(self.vertex_count)

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._sign_by_pair

    def sign(self, u: int, v: int) -> int:
        """Sign of the edge uv.  KeyError if uv is not an edge."""
        key = (u, v) if u < v else (v, u)
        return self._sign_by_pair[key]

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbor, sign) pairs of v in ascending neighbor order."""
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise VertexOutOfRangeError(f"vertex {v} outside [0, {self.vertex_count})")

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self._sign_by_pair == other._sign_by_pair
        )

    def __hash__(self) -> int:
        h = self._cache.get("hash")
        if h is None:
            h = hash((self.vertex_count, frozenset(self._sign_by_pair.items())))
            self._cache["hash"] = h
        return h

    def __repr__(self) -> str:
        return f"SignedGraph({self.vertex_count}, {list(self.edges)!r})"


def new_signed_graph(vertex_count: int, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Validating constructor; equivalent to SignedGraph(vertex_count, edges)."""
    return SignedGraph(vertex_count, edges)


def switch(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Switch g at a vertex set: negate each edge with exactly one end inside.

    Switching preserves the sign of every cycle, so it preserves balance,
    and it never changes the underlying unsigned graph.
    """
    chosen = set(vertices)
    for v in chosen:
        g._check_vertex(v)
    edges = []
    for (u, v), s in g._sign_by_pair.items():
        if (u in chosen) != (v in chosen):
            s = -s
        edges.append((u, v, s))
    return SignedGraph(g.vertex_count, edges)


def is_connected(g: SignedGraph) -> bool:
    seen = [False] * g.vertex_count
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y, _ in g.neighbors(x):
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == g.vertex_count


def is_two_connected(g: SignedGraph) -> bool:
    """True iff g has at least 3 vertices, is connected, and has no cut vertex."""
    n = g.vertex_count
    if n < 3:
        return False
    if not is_connected(g):
        return False
    # iterative DFS low-point computation rooted at 0
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    root_children = 0
    stack: list[tuple[int, Iterator[tuple[int, int]]]] = [(0, iter(g.neighbors(0)))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        x, it = stack[-1]
        advanced = False
        for y, _ in it:
            if disc[y] == -1:
                parent[y] = x
                if x == 0:
                    root_children += 1
                disc[y] = low[y] = timer
                timer += 1
                stack.append((y, iter(g.neighbors(y))))
                advanced = True
                break
            elif y != parent[x]:
                low[x] = min(low[x], disc[y])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if p != 0 and low[x] >= disc[p]:
                    return False  # p is a cut vertex
    return root_children < 2


def walk_sign(g: SignedGraph, walk: Sequence[int]) -> int:
    """Product of edge signs along a walk; vertices may repeat.

    Raises NotAPathError when the sequence is empty, leaves the vertex
    range, or uses a pair that is not an edge.
    """
    if len(walk) == 0:
        raise NotAPathError("empty vertex sequence")
    for v in walk:
        if not (0 <= v < g.vertex_count):
            raise NotAPathError(f"vertex {v} outside [0, {g.vertex_count})")
    sign = 1
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise NotAPathError(f"({a}, {b}) is not an edge")
        sign *= g.sign(a, b)
    return sign


def path_sign(g: SignedGraph, path: Sequence[int]) -> int:
    """Sign of a path: like walk_sign but vertices must be distinct."""
    if len(set(path)) != len(path):
        raise NotAPathError("repeated vertex; not a path")
    return walk_sign(g, path)

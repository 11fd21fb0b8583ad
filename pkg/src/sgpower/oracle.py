"""Brute-force ground truth and random corpus generation.

`enumerate_shortest_paths` lists every shortest path between two
vertices by depth-first search restricted to the BFS shortest-path DAG,
with neighbors visited in ascending order, so the output order (and
therefore everything derived from it) is deterministic.  `oracle_signs`
reduces the listing to the sign set and is the reference the fast
dynamic program is tested against.

`generate` draws random connected signed graphs from a CorpusSpec.  The
generator is Python's `random.Random` (the Mersenne Twister MT19937),
seeded per trial with `spec.seed * 2**32 + trial`, so a spec identifies
its corpus exactly, on every platform.  Each graph is a uniformly random
recursive spanning tree plus independent extra edges; signs are uniform
unless balance is required, in which case the graph is built all
positive and then switched at a random vertex subset (which preserves
balance).  Structural requirements that are not guaranteed by
construction (2-connectivity, compatibility) are met by rejection
sampling with a bounded number of attempts per trial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .balance import is_balanced
from .core import DisconnectedError, SignedGraph, SignedGraphError, is_connected, is_two_connected, switch
from .distance import PathSigns, is_compatible


class TooManyPathsError(SignedGraphError):
    """Shortest-path enumeration exceeded its path budget."""


class GenerationExhaustedError(SignedGraphError):
    """Rejection sampling failed to meet the corpus requirements."""


MAX_ORACLE_PATHS = 10**6
_ATTEMPTS_PER_TRIAL = 2000

REQUIREMENTS = ("balanced", "compatible", "connected", "two_connected")


def _bfs_distances(g: SignedGraph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y, _ in g.neighbors(x):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def enumerate_shortest_paths(
    g: SignedGraph, u: int, v: int, max_paths: int = MAX_ORACLE_PATHS
) -> list[tuple[int, ...]]:
    """Every shortest u-v path, in lexicographic vertex order.

    Raises DisconnectedError when v is unreachable from u and
    TooManyPathsError when more than `max_paths` paths exist.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    du = _bfs_distances(g, u)
    if du[v] < 0:
        raise DisconnectedError(f"vertex {v} unreachable from {u}")
    dv = _bfs_distances(g, v)
    d = du[v]
    paths: list[tuple[int, ...]] = []
    prefix = [u]

    def extend(x: int) -> None:
        if x == v:
            if len(paths) >= max_paths:
                raise TooManyPathsError(f"more than {max_paths} shortest paths")
            paths.append(tuple(prefix))
            return
        for y, _ in g.neighbors(x):
            # stay on the shortest-path DAG and keep v reachable in budget
            if du[y] == du[x] + 1 and du[y] + dv[y] == d:
                prefix.append(y)
                extend(y)
                prefix.pop()

    extend(u)
    return paths


def oracle_signs(g: SignedGraph, u: int, v: int, max_paths: int = MAX_ORACLE_PATHS) -> PathSigns:
    """Sign set of the shortest u-v paths, by exhaustive enumeration."""
    has_pos = has_neg = False
    for path in enumerate_shortest_paths(g, u, v, max_paths):
        sign = 1
        for a, b in zip(path, path[1:]):
            sign *= g.sign(a, b)
        if sign > 0:
            has_pos = True
        else:
            has_neg = True
        if has_pos and has_neg:
            break
    return PathSigns(has_pos, has_neg)


def count_shortest_paths(g: SignedGraph, u: int, v: int) -> int:
    """Number of shortest u-v paths by DP over the BFS DAG (no enumeration)."""
    du = _bfs_distances(g, u)
    if du[v] < 0:
        raise DisconnectedError(f"vertex {v} unreachable from {u}")
    order = sorted(range(g.vertex_count), key=lambda x: du[x])
    count = [0] * g.vertex_count
    count[u] = 1
    for x in order:
        if x == u or du[x] < 0:
            continue
        count[x] = sum(count[w] for w, _ in g.neighbors(x) if du[w] == du[x] - 1)
    return count[v]


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters of a reproducible random graph corpus.

    require is any subset of {"connected", "two_connected", "balanced",
    "compatible"}; connectivity always holds by construction.
    """

    seed: int
    vertex_range: tuple[int, int]
    edge_probability: float
    require: frozenset[str] = frozenset()
    trials: int = 1

    def __post_init__(self) -> None:
        lo, hi = self.vertex_range
        if lo < 2 or hi < lo:
            raise ValueError("vertex_range must satisfy 2 <= min <= max")
        if not (0.0 <= self.edge_probability <= 1.0):
            raise ValueError("edge_probability must lie in [0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        req = frozenset(self.require)
        unknown = req.difference(REQUIREMENTS)
        if unknown:
            raise ValueError(f"unknown requirements: {sorted(unknown)}")
        object.__setattr__(self, "require", req)


def _random_graph(rng: random.Random, spec: CorpusSpec) -> SignedGraph:
    lo, hi = spec.vertex_range
    n = rng.randrange(lo, hi + 1)
    pairs = {(rng.randrange(v), v) for v in range(1, n)}  # random recursive tree
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.random() < spec.edge_probability:
                pairs.add((u, v))
    ordered = sorted(pairs)
    if "balanced" in spec.require:
        g = SignedGraph(n, [(u, v, 1) for u, v in ordered])
        g = switch(g, [v for v in range(n) if rng.random() < 0.5])
    else:
        g = SignedGraph(n, [(u, v, rng.choice((1, -1))) for u, v in ordered])
    return g


def _meets(g: SignedGraph, require: frozenset[str]) -> bool:
    if "connected" in require and not is_connected(g):
        return False
    if "two_connected" in require and not is_two_connected(g):
        return False
    if "balanced" in require and not is_balanced(g).balanced:
        return False
    if "compatible" in require and not is_compatible(g):
        return False
    return True


def generate(spec: CorpusSpec) -> Iterator[SignedGraph]:
    """Yield spec.trials graphs, deterministically from spec.seed."""
    for trial in range(spec.trials):
        rng = random.Random(spec.seed * 2**32 + trial)
        for _ in range(_ATTEMPTS_PER_TRIAL):
            g = _random_graph(rng, spec)
            if _meets(g, spec.require):
                yield g
                break
        else:
            raise GenerationExhaustedError(
                f"trial {trial}: no graph met {sorted(spec.require)} "
                f"after {_ATTEMPTS_PER_TRIAL} attempts"
            )

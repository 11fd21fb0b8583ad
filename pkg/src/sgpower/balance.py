"""Balance, switching certificates, and path transfer between a graph
and its powers.

A connected signed graph is balanced iff its vertices can be labeled
+1/-1 so that every edge sign is the product of its endpoint labels
(equivalently: no negative cycle).  `is_balanced` produces one of the
two certificates: the labeling when balanced, a negative cycle when
not.  The labeling comes from a BFS spanning tree (label = sign of the
tree path from the root); any non-tree edge violating the labels closes
a negative cycle with the tree.

`lift_path` moves a path of the base graph into a unique n-th power by
cutting it into blocks of n edges; `project_path` moves a path of the
power back down by concatenating the recorded witness paths of its
edges, which in general yields a walk.  For shortest paths these two
constructions preserve signs and have tightly bounded lengths; the
verify_* checks and the randomized harness exercise exactly those
statements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    BadExponentError,
    DisconnectedError,
    NonUniquePowerError,
    NotAPathError,
    NotBalancedError,
    MissingWitnessError,
    NotTwoConnectedError,
    PreconditionViolatedError,
    SignedGraph,
    is_two_connected,
    walk_sign,
)
from .distance import diameter, distance_matrices, first_incompatible_pair, is_compatible
from .power import Witnesses, associated_complete, is_power_unique, power


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    witness: tuple[int, ...] | None = None  # closed negative cycle, first == last
    switching_labels: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CheckOutcome:
    """Boolean verdict of a theorem check plus failure diagnostics."""

    ok: bool
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def is_balanced(g: SignedGraph) -> BalanceReport:
    """Balance test with certificate (connected input).

    Balanced: returns the switching labels, with label(0) = +1.
    Unbalanced: returns a negative cycle as a closed vertex sequence.
    """
    n = g.vertex_count
    label = [0] * n
    parent = [-1] * n
    depth = [0] * n
    label[0] = 1
    frontier = [0]
    seen = 1
    while frontier:
        nxt = []
        for x in frontier:
            for y, s in g.neighbors(x):
                if label[y] == 0:
                    label[y] = label[x] * s
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    seen += 1
                    nxt.append(y)
        frontier = nxt
    if seen < n:
        missing = next(v for v in range(n) if label[v] == 0)
        raise DisconnectedError(f"vertex {missing} unreachable from 0")
    for u, v, s in g.edges:
        if label[u] * label[v] != s:
            return BalanceReport(balanced=False, witness=_tree_cycle(parent, depth, u, v))
    return BalanceReport(balanced=True, switching_labels=tuple(label))


def _tree_cycle(parent: list[int], depth: list[int], u: int, v: int) -> tuple[int, ...]:
    """Closed cycle made of the tree path u..v plus the edge vu."""
    up_u = [u]
    up_v = [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        up_u.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        up_v.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        up_u.append(a)
        up_v.append(b)
    # up_u ends at the meeting vertex, as does up_v; join them
    return tuple(up_u + up_v[::-1][1:] + [u])


def _check_path(g: SignedGraph, p: Sequence[int]) -> None:
    if len(set(p)) != len(p):
        raise NotAPathError("repeated vertex; not a path")
    walk_sign(g, p)  # validates membership and adjacency


def lift_path(g: SignedGraph, p: Sequence[int], n: int) -> tuple[int, ...]:
    """Path of the unique n-th power covering p by blocks of n edges.

    The result has length ceil(k/n) where k = len(p) - 1.  When p is a
    shortest path its blocks are shortest too, so the lifted path keeps
    the sign of p.
    """
    if n < 1:
        raise BadExponentError(f"power exponent must be >= 1, got {n}")
    _check_path(g, p)
    if not is_power_unique(g, n):
        raise NonUniquePowerError(f"the {n}-th power of the graph is not unique")
    lifted = list(p[::n])
    if (len(p) - 1) % n != 0:
        lifted.append(p[-1])
    return tuple(lifted)


def project_path(witnesses: Witnesses, p: Sequence[int]) -> tuple[int, ...]:
    """Walk of the base graph obtained by splicing the witness of each
    edge of p (a path of the power graph).

    Witness keys are canonical (u, v) with u < v; each witness runs from
    u to v and is reversed as needed.  The result can repeat vertices.
    """
    if len(p) == 0:
        raise NotAPathError("empty vertex sequence")
    if len(set(p)) != len(p):
        raise NotAPathError("repeated vertex; not a path")
    walk: list[int] = [p[0]]
    for a, b in zip(p, p[1:]):
        key = (a, b) if a < b else (b, a)
        w = witnesses.get(key)
        if w is None:
            raise MissingWitnessError(f"no witness recorded for power edge {key}")
        seg = w if w[0] == a else w[::-1]
        walk.extend(seg[1:])
    return tuple(walk)


def expected_lift_length(k: int, n: int) -> int:
    return math.ceil(k / n)


# ---------------------------------------------------------------------------
# theorem checks
# ---------------------------------------------------------------------------


def verify_nbc(g: SignedGraph) -> CheckOutcome:
    """Equivalence of four balance statements on a connected graph:
    g balanced; its max completion balanced; its min completion
    balanced; the signed distance matrices agree and the common
    completion is balanced.
    """
    s1 = is_balanced(g).balanced
    s2 = is_balanced(associated_complete(g, "max")).balanced
    s3 = is_balanced(associated_complete(g, "min")).balanced
    dmax, dmin = distance_matrices(g)
    if dmax == dmin:
        s4 = is_balanced(associated_complete(g, "pm")).balanced
    else:
        s4 = False
    statements = (s1, s2, s3, s4)
    ok = len(set(statements)) == 1
    detail = {} if ok else {"statements": statements}
    return CheckOutcome(ok, detail)


def verify_power_balance(g: SignedGraph, n: int) -> CheckOutcome:
    """On a 2-connected graph: g balanced iff its n-th power is.

    When the power is not unique (possible only with g unbalanced, or
    the check fails), both sign choices must be unbalanced; the outcome
    records that the double check ran via detail["non_unique"].
    """
    if not is_two_connected(g):
        raise NotTwoConnectedError("the power balance equivalence needs a 2-connected graph")
    if n < 1:
        raise BadExponentError(f"power exponent must be >= 1, got {n}")
    base = is_balanced(g).balanced
    pr = power(g, n)
    if pr.unique:
        ok = base == is_balanced(pr.power_max).balanced
        return CheckOutcome(ok, {} if ok else {"n": n, "balanced": base})
    # non-unique power: balance would force uniqueness, so base must be
    # unbalanced and so must both powers
    both_unbalanced = (
        not is_balanced(pr.power_max).balanced and not is_balanced(pr.power_min).balanced
    )
    ok = (not base) and both_unbalanced
    detail: dict = {"non_unique": True}
    if not ok:
        detail.update({"n": n, "balanced": base})
    return CheckOutcome(ok, detail)


def verify_balanced_implies_power_compatible(g: SignedGraph, n: int) -> CheckOutcome:
    """On a balanced 2-connected graph the n-th power is compatible."""
    if not is_two_connected(g):
        raise NotTwoConnectedError("this check needs a 2-connected graph")
    if n < 1:
        raise BadExponentError(f"power exponent must be >= 1, got {n}")
    if not is_balanced(g).balanced:
        raise NotBalancedError("this check needs a balanced graph")
    pr = power(g, n)
    if not pr.unique:
        return CheckOutcome(False, {"n": n, "reason": "power of a balanced graph not unique"})
    bad = first_incompatible_pair(pr.power_max)
    ok = bad is None
    return CheckOutcome(ok, {} if ok else {"n": n, "pair": bad})


def verify_power_compat_implies_compat(g: SignedGraph, n: int) -> CheckOutcome:
    """With diameter(g) > n and a unique n-th power: a compatible power
    forces a compatible base graph."""
    if n < 1:
        raise BadExponentError(f"power exponent must be >= 1, got {n}")
    if diameter(g) <= n:
        raise PreconditionViolatedError(f"diameter must exceed n = {n}")
    if not is_power_unique(g, n):
        raise PreconditionViolatedError(f"the {n}-th power is not unique")
    pr = power(g, n)
    if not is_compatible(pr.power_max):
        return CheckOutcome(True, {"n": n, "vacuous": True})
    ok = is_compatible(g)
    return CheckOutcome(ok, {} if ok else {"n": n, "pair": first_incompatible_pair(g)})

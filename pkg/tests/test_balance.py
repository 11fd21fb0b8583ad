"""Balance certificates, path lifting/projection, and the verify_* checks.

Two pinned examples document why the length/sign statements for lifted
and projected paths hypothesize *shortest* paths: a non-shortest path
can change sign under lifting and break the length lower bound under
projection.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgpower import (
    BadExponentError,
    MissingWitnessError,
    NonUniquePowerError,
    NotAPathError,
    NotBalancedError,
    NotTwoConnectedError,
    PreconditionViolatedError,
    SignedGraph,
    diameter,
    is_balanced,
    is_compatible,
    lift_path,
    path_sign,
    power,
    project_path,
    switch,
    verify_balanced_implies_power_compatible,
    verify_nbc,
    verify_power_balance,
    verify_power_compat_implies_compat,
    walk_sign,
)
from sgpower.oracle import enumerate_shortest_paths

from conftest import (
    all_negative_cycle,
    brute_balanced,
    c4_one_negative,
    complete_graph,
    connected_signed_graphs,
    cycle_graph,
    path_graph,
)


# -- balance with certificates -------------------------------------------------


@given(connected_signed_graphs())
@settings(max_examples=120)
def test_balance_matches_exhaustive_labeling_search(g):
    assert is_balanced(g).balanced == brute_balanced(g)


@given(connected_signed_graphs())
@settings(max_examples=120)
def test_balance_certificates_check_out(g):
    report = is_balanced(g)
    if report.balanced:
        labels = report.switching_labels
        assert labels[0] == 1 and len(labels) == g.vertex_count
        assert all(labels[u] * labels[v] == s for u, v, s in g.edges)
        assert report.witness is None
    else:
        cyc = report.witness
        assert cyc[0] == cyc[-1] and len(set(cyc)) == len(cyc) - 1
        assert walk_sign(g, cyc) == -1
        assert report.switching_labels is None


def test_trees_are_balanced():
    assert is_balanced(path_graph([-1, -1, 1])).balanced
    assert is_balanced(SignedGraph(1)).balanced


def test_negative_cycle_witness_is_the_cycle():
    g = all_negative_cycle(5)
    report = is_balanced(g)
    assert not report.balanced
    assert sorted(set(report.witness)) == [0, 1, 2, 3, 4]


# -- lifting -------------------------------------------------------------------


def test_lift_cuts_into_blocks():
    g = path_graph([1, -1, 1, -1])
    assert lift_path(g, (0, 1, 2, 3, 4), 2) == (0, 2, 4)
    assert lift_path(g, (0, 1, 2, 3, 4), 3) == (0, 3, 4)
    assert lift_path(g, (0, 1, 2, 3, 4), 10) == (0, 4)
    assert lift_path(g, (2,), 2) == (2,)


def test_lift_validates_input():
    g = c4_one_negative()
    with pytest.raises(BadExponentError):
        lift_path(g, (0, 1), 0)
    with pytest.raises(NotAPathError):
        lift_path(g, (0, 1, 0), 1)
    with pytest.raises(NotAPathError):
        lift_path(g, (0, 2), 1)
    with pytest.raises(NonUniquePowerError):
        lift_path(g, (0, 1, 2), 2)  # square is not unique


@given(connected_signed_graphs(max_vertices=7), st.integers(1, 3))
@settings(max_examples=80)
def test_lifted_shortest_paths_keep_sign_and_shrink(g, n):
    pr = power(g, n)
    if not pr.unique:
        return
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            for p in enumerate_shortest_paths(g, u, v)[:4]:
                k = len(p) - 1
                lifted = lift_path(g, p, n)
                assert len(lifted) - 1 == math.ceil(k / n)
                assert walk_sign(pr.power_max, lifted) == path_sign(g, p)


def test_lifting_a_non_shortest_path_can_change_sign():
    # triangle with one negative edge: (0, 1, 2) is a positive walk from
    # 0 to 2 but not a shortest path; its 2-block lift is the single
    # negative edge (0, 2)
    g = SignedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])
    pr = power(g, 2)
    assert pr.unique
    p = (0, 1, 2)
    assert path_sign(g, p) == 1
    lifted = lift_path(g, p, 2)
    assert lifted == (0, 2)
    assert walk_sign(pr.power_max, lifted) == -1  # sign flipped


# -- projection ----------------------------------------------------------------


def test_projection_splices_witnesses():
    g = path_graph([1, 1, 1, 1, 1])
    pr = power(g, 2)
    w = project_path(pr.witnesses_max, (0, 2, 4))
    assert w == (0, 1, 2, 3, 4)
    assert walk_sign(g, w) == walk_sign(pr.power_max, (0, 2, 4))


def test_projection_reverses_witnesses_when_needed():
    g = path_graph([1, -1, 1, 1])
    pr = power(g, 2)
    w = project_path(pr.witnesses_max, (4, 2, 0))
    assert w == (4, 3, 2, 1, 0)


def test_projection_validates_input():
    g = path_graph([1, 1])
    pr = power(g, 2)
    with pytest.raises(NotAPathError):
        project_path(pr.witnesses_max, ())
    with pytest.raises(NotAPathError):
        project_path(pr.witnesses_max, (0, 2, 0))
    with pytest.raises(MissingWitnessError):
        project_path({}, (0, 2))


@given(connected_signed_graphs(max_vertices=7), st.integers(1, 3))
@settings(max_examples=80)
def test_projected_shortest_power_paths_bounded_with_equal_sign(g, n):
    pr = power(g, n)
    if not pr.unique:
        return
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            for p in enumerate_shortest_paths(pr.power_max, u, v)[:4]:
                k = len(p) - 1
                w = project_path(pr.witnesses_max, p)
                assert (k - 1) * n + 1 <= len(w) - 1 <= k * n or k == 0
                assert walk_sign(g, w) == walk_sign(pr.power_max, p)


def test_projecting_a_non_shortest_power_path_breaks_the_length_bound():
    # in the square of the 3-vertex path, (0, 1, 2) is a 2-edge path but
    # not shortest (0 and 2 are adjacent); its projection has 2 edges,
    # below the lower bound (k - 1) * n + 1 = 3 for shortest power paths
    g = path_graph([1, 1])
    pr = power(g, 2)
    assert pr.power_max.has_edge(0, 2)
    w = project_path(pr.witnesses_max, (0, 1, 2))
    assert w == (0, 1, 2)
    assert len(w) - 1 == 2 < 3


# -- the four-way balance equivalence -------------------------------------------


@given(connected_signed_graphs())
@settings(max_examples=100)
def test_balance_equivalence_of_completions(g):
    assert verify_nbc(g)


def test_balance_equivalence_concrete():
    assert verify_nbc(switch(complete_graph(5), [1, 2]))
    assert verify_nbc(all_negative_cycle(6))
    out = verify_nbc(all_negative_cycle(5))
    assert out and out.detail == {}


# -- base balanced iff power balanced -------------------------------------------


def test_power_balance_needs_two_connected():
    with pytest.raises(NotTwoConnectedError):
        verify_power_balance(path_graph([1, 1]), 1)


@given(st.integers(1, 4))
def test_power_balance_on_switched_cycles(n):
    g = switch(cycle_graph([1] * 7), [2, 5])
    out = verify_power_balance(g, n)
    assert out and "non_unique" not in out.detail


def test_power_balance_with_non_unique_power():
    g = c4_one_negative()
    out = verify_power_balance(g, 2)
    assert out
    assert out.detail == {"non_unique": True}


@given(connected_signed_graphs(min_vertices=3), st.integers(1, 3))
@settings(max_examples=80)
def test_power_balance_property(g, n):
    from sgpower import is_two_connected

    if not is_two_connected(g):
        return
    assert verify_power_balance(g, n)


# -- balanced base gives compatible powers ---------------------------------------


def test_balanced_implies_power_compatible_preconditions():
    with pytest.raises(NotTwoConnectedError):
        verify_balanced_implies_power_compatible(path_graph([1, 1]), 1)
    with pytest.raises(NotBalancedError):
        verify_balanced_implies_power_compatible(all_negative_cycle(5), 1)


@given(st.sets(st.integers(0, 7)), st.integers(1, 4))
@settings(max_examples=60)
def test_balanced_implies_power_compatible_on_switched_cycles(vertices, n):
    g = switch(cycle_graph([1] * 8), vertices)
    out = verify_balanced_implies_power_compatible(g, n)
    assert out and is_compatible(power(g, n).power_max)


# -- compatible power forces compatible base --------------------------------------


def test_compat_transfer_preconditions():
    g = path_graph([1, 1, 1])  # diameter 3
    with pytest.raises(PreconditionViolatedError):
        verify_power_compat_implies_compat(g, 3)  # diameter not exceeded
    # one-negative 4-cycle with a tail: diameter 4 but the square is not unique
    tailed = SignedGraph(
        6, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, -1), (2, 4, 1), (4, 5, 1)]
    )
    assert diameter(tailed) == 4
    with pytest.raises(PreconditionViolatedError):
        verify_power_compat_implies_compat(tailed, 2)
    with pytest.raises(BadExponentError):
        verify_power_compat_implies_compat(g, 0)


def test_compat_transfer_applicable_and_vacuous_cases():
    # all-positive 7-cycle: square compatible, base compatible
    out = verify_power_compat_implies_compat(cycle_graph([1] * 7), 2)
    assert out and out.detail == {}
    # all-negative 7-cycle: square incompatible, claim holds vacuously
    out = verify_power_compat_implies_compat(all_negative_cycle(7), 2)
    assert out and out.detail.get("vacuous")

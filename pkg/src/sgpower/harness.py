"""Randomized checking of the structural claims on seeded corpora.

Each theorem key draws its own corpus (seed derived from the base seed
and the key's position) and runs one check per trial graph, over every
applicable power exponent.  All randomness flows through the corpus
generator and a per-trial path-sampling generator, so a (theorem, seed,
trials, max_vertices) quadruple always produces the identical report.

Keys:

    t1    power uniqueness: sign comparison == pair criterion == oracle
    diam  diameter <= n makes the power the distance completion
    l1    lifting a shortest path multiplies length by 1/n, keeps sign
    le    projecting a shortest power path, length in ((k-1)n, kn]
    t27   compatible unique power (diameter > n) forces compatible base
    blcm  balanced 2-connected graphs have compatible powers
    l3    distance completion commutes with taking powers (fails in
          general; counterexamples are reported, not suppressed)
    cbp   2-connected: base balanced iff power balanced
    sgs   spectral balance test agrees with the direct one
    nbc   four-way balance equivalence of the completions
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .balance import (
    is_balanced,
    lift_path,
    project_path,
    verify_balanced_implies_power_compatible,
    verify_nbc,
    verify_power_balance,
    verify_power_compat_implies_compat,
)
from .core import SignedGraph, is_two_connected, path_sign, walk_sign
from .distance import _reach_table, diameter, is_compatible
from .oracle import CorpusSpec, enumerate_shortest_paths, generate, oracle_signs
from .power import associated_complete, is_power_unique, power
from .spectra import balanced_spectrum_test, power_balance_spectrum_test

THEOREM_ORDER = ("t1", "diam", "l1", "le", "t27", "blcm", "l3", "cbp", "sgs", "nbc")

_PAIRS_PER_TRIAL = 3  # sampled start/end pairs for the path lemmas


@dataclass
class FailureCase:
    theorem: str
    trial: int
    description: str
    graphs: dict[str, SignedGraph]


@dataclass
class TheoremReport:
    name: str
    trials: int
    passed: int
    notes: dict[str, int] = field(default_factory=dict)
    failures: list[FailureCase] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


def _exponents(g: SignedGraph, extra: int = 1) -> range:
    return range(1, diameter(g) + 1 + extra)


def _note(notes: dict[str, int], key: str) -> None:
    notes[key] = notes.get(key, 0) + 1


# -- per-trial checks -------------------------------------------------------


def _check_t1(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    table = _reach_table(g)
    pairs = [(u, v) for u in range(g.vertex_count) for v in range(u + 1, g.vertex_count)]
    single = {(u, v): oracle_signs(g, u, v).is_single for u, v in pairs}
    for n in _exponents(g):
        by_pairs = is_power_unique(g, n)
        pr = power(g, n)
        by_signs = pr.power_max == pr.power_min
        by_oracle = all(
            single[u, v] for u, v in pairs if table[u][v].distance <= n
        )
        if not (by_pairs == by_signs == pr.unique == by_oracle):
            return (
                f"n={n}: uniqueness routes disagree "
                f"(pairs={by_pairs} signs={by_signs} flag={pr.unique} oracle={by_oracle})"
            )
    return None


def _check_diam(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    d = diameter(g)
    for n in (d, d + 1):
        if not check_diameter_power_theorem_full(g, n):
            return f"n={n}: power differs from the distance completion"
    return None


def check_diameter_power_theorem_full(g: SignedGraph, n: int) -> bool:
    pr = power(g, n)
    if pr.power_max != associated_complete(g, "max"):
        return False
    if pr.power_min != associated_complete(g, "min"):
        return False
    if is_compatible(g) and pr.power_max != associated_complete(g, "pm"):
        return False
    return True


def _sample_pairs(g: SignedGraph, rng: random.Random) -> list[tuple[int, int]]:
    pairs = [
        (u, v) for u in range(g.vertex_count) for v in range(g.vertex_count) if u != v
    ]
    rng.shuffle(pairs)
    return pairs[:_PAIRS_PER_TRIAL]


def _check_l1(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    for n in _exponents(g):
        if not is_power_unique(g, n):
            _note(notes, "skipped_non_unique")
            continue
        pr = power(g, n)
        for u, v in _sample_pairs(g, rng):
            p = rng.choice(enumerate_shortest_paths(g, u, v))
            k = len(p) - 1
            if k == 0:
                continue
            lifted = lift_path(g, p, n)
            if len(lifted) - 1 != math.ceil(k / n):
                return f"n={n}: lift of {p} has length {len(lifted) - 1}"
            if walk_sign(pr.power_max, lifted) != path_sign(g, p):
                return f"n={n}: lift of {p} changed sign"
    return None


def _check_le(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    for n in _exponents(g):
        if not is_power_unique(g, n):
            _note(notes, "skipped_non_unique")
            continue
        pr = power(g, n)
        for u, v in _sample_pairs(g, rng):
            p = rng.choice(enumerate_shortest_paths(pr.power_max, u, v))
            k = len(p) - 1
            if k == 0:
                continue
            w = project_path(pr.witnesses_max, p)
            length = len(w) - 1
            if not ((k - 1) * n + 1 <= length <= k * n):
                return f"n={n}: projection of {p} has length {length}"
            if walk_sign(g, w) != walk_sign(pr.power_max, p):
                return f"n={n}: projection of {p} changed sign"
    return None


def _check_t27(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    applicable = False
    for n in range(1, diameter(g)):
        if not is_power_unique(g, n):
            continue
        applicable = True
        if not verify_power_compat_implies_compat(g, n):
            return f"n={n}: compatible power but incompatible base"
    if not applicable:
        _note(notes, "vacuous")
    return None


def _check_blcm(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    for n in range(1, diameter(g) + 1):
        out = verify_balanced_implies_power_compatible(g, n)
        if not out:
            return f"n={n}: {out.detail}"
    return None


def _check_l3(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    balanced = is_balanced(g).balanced
    for n in _exponents(g):
        pr = power(g, n)
        if associated_complete(g, "max") != associated_complete(pr.power_max, "max"):
            return f"n={n}: max completions differ"
        if associated_complete(g, "min") != associated_complete(pr.power_min, "min"):
            return f"n={n}: min completions differ"
        if balanced and associated_complete(g, "pm") != associated_complete(pr.power_max, "pm"):
            return f"n={n}: common completions differ"
    return None


def _check_cbp(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    for n in range(1, diameter(g) + 1):
        out = verify_power_balance(g, n)
        if out.detail.get("non_unique"):
            _note(notes, "non_unique")
        if not out:
            return f"n={n}: balance equivalence failed ({out.detail})"
    return None


def _check_sgs(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    if balanced_spectrum_test(g) != is_balanced(g).balanced:
        return "spectral test disagrees with the direct balance test"
    if is_two_connected(g):
        n = min(2, diameter(g))
        if is_power_unique(g, n):
            if not power_balance_spectrum_test(g, n):
                return f"n={n}: power balance disagrees with the spectral test"
        else:
            _note(notes, "skipped_non_unique")
    return None


def _check_nbc(g: SignedGraph, rng: random.Random, notes: dict[str, int]) -> str | None:
    out = verify_nbc(g)
    if not out:
        return f"statement values {out.detail.get('statements')}"
    return None


_CHECKS = {
    "t1": _check_t1,
    "diam": _check_diam,
    "l1": _check_l1,
    "le": _check_le,
    "t27": _check_t27,
    "blcm": _check_blcm,
    "l3": _check_l3,
    "cbp": _check_cbp,
    "sgs": _check_sgs,
    "nbc": _check_nbc,
}


def _corpus_graphs(theorem: str, trials: int, seed: int, max_vertices: int):
    """Deterministic trial graph stream for one theorem key."""
    idx = THEOREM_ORDER.index(theorem)
    base = seed * 1000 + idx
    small = max(3, min(4, max_vertices))
    if theorem in ("blcm",):
        spec = CorpusSpec(base, (3, max_vertices), 0.5, frozenset({"two_connected", "balanced"}), trials)
        yield from generate(spec)
    elif theorem == "cbp":
        # alternate balanced and unrestricted trials so both directions
        # of the equivalence get exercised
        half = (trials + 1) // 2
        bal = generate(
            CorpusSpec(base, (3, max_vertices), 0.5, frozenset({"two_connected", "balanced"}), half)
        )
        plain = (
            generate(
                CorpusSpec(
                    base + 500, (3, max_vertices), 0.5, frozenset({"two_connected"}), trials - half
                )
            )
            if trials > half
            else iter(())
        )
        for i in range(trials):
            yield next(bal if i % 2 == 0 else plain)
    elif theorem == "sgs":
        spec = CorpusSpec(base, (2, max_vertices), 0.25, frozenset({"compatible"}), trials)
        yield from generate(spec)
    elif theorem == "t27":
        spec = CorpusSpec(base, (small, max_vertices), 0.3, frozenset({"connected"}), trials)
        yield from generate(spec)
    else:
        spec = CorpusSpec(base, (3, max_vertices), 0.35, frozenset({"connected"}), trials)
        yield from generate(spec)


def run_theorem(theorem: str, trials: int, seed: int, max_vertices: int = 8) -> TheoremReport:
    if theorem not in _CHECKS:
        raise ValueError(f"unknown theorem key {theorem!r}")
    check = _CHECKS[theorem]
    report = TheoremReport(theorem, trials, 0)
    for trial, g in enumerate(_corpus_graphs(theorem, trials, seed, max_vertices)):
        rng = random.Random(seed * 2**32 + trial * 977 + THEOREM_ORDER.index(theorem))
        problem = check(g, rng, report.notes)
        if problem is None:
            report.passed += 1
        else:
            report.failures.append(FailureCase(theorem, trial, problem, {"graph": g}))
    return report


def run_many(theorems: list[str], trials: int, seed: int, max_vertices: int = 8) -> list[TheoremReport]:
    return [run_theorem(t, trials, seed, max_vertices) for t in theorems]

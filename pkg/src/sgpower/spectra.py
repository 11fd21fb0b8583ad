"""Spectra of signed adjacency matrices and the spectral balance test.

A balanced signed complete graph on m vertices is switching-equivalent
to the all-positive one, so its adjacency spectrum is m-1 (once) and
-1 (m-1 times); conversely that spectrum forces balance.  Combining
this with the common-sign completion of a compatible graph gives a
purely spectral balance criterion, and through the power balance
equivalence a spectral criterion for the balance of powers.

Eigenvalues are computed by cyclic Jacobi rotations on a dense
symmetric matrix: sweeps of Givens rotations annihilate off-diagonal
entries until the off-diagonal Frobenius norm drops below `tol`
(default 1e-10).  For the integer matrices produced here the iteration
converges in a handful of sweeps; a 100 sweep cap guards against
non-symmetric garbage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    NonUniquePowerError,
    NotCompatibleError,
    NotTwoConnectedError,
    SignedGraph,
    SignedGraphError,
    is_two_connected,
)
from .balance import is_balanced
from .distance import is_compatible
from .power import associated_complete, is_power_unique, power

DEFAULT_TOL = 1e-10
_MAX_SWEEPS = 100


class NotSymmetricError(SignedGraphError):
    """Jacobi iteration needs a symmetric matrix."""


class NoConvergenceError(SignedGraphError):
    """The sweep cap was reached before the tolerance."""


def adjacency_matrix(g: SignedGraph) -> np.ndarray:
    """Dense signed adjacency matrix with integer entries."""
    n = g.vertex_count
    a = np.zeros((n, n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = s
        a[v, u] = s
    return a


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order plus multiplicity grouping.

    `groups` clusters consecutive eigenvalues closer than 10 * tol into
    (value, multiplicity) pairs, value being the cluster mean.
    """

    eigenvalues: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]
    tol: float

    @property
    def order(self) -> int:
        return len(self.eigenvalues)


def _off_norm(a: np.ndarray) -> float:
    # Sum the off-diagonal squares directly: subtracting the diagonal
    # mass from the full Frobenius norm cancels catastrophically once
    # the off-diagonal part is tiny, and would floor the result near
    # sqrt(eps) * ||a|| instead of letting it reach zero.
    off = a.astype(np.float64, copy=True)
    np.fill_diagonal(off, 0.0)
    return float(np.sqrt(np.sum(off * off)))


def eigenvalues(m: np.ndarray, tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum of a symmetric matrix by the cyclic Jacobi method."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError("need a square matrix of order >= 1")
    if not np.array_equal(a, a.T):
        raise NotSymmetricError("matrix is not symmetric")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = a.astype(np.float64, copy=True)
    n = a.shape[0]
    if n > 1:
        for _ in range(_MAX_SWEEPS):
            if _off_norm(a) < tol:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    col_p = a[:, p].copy()
                    col_q = a[:, q].copy()
                    a[:, p] = c * col_p - s * col_q
                    a[:, q] = s * col_p + c * col_q
                    row_p = a[p, :].copy()
                    row_q = a[q, :].copy()
                    a[p, :] = c * row_p - s * row_q
                    a[q, :] = s * row_p + c * row_q
                    a[p, q] = a[q, p] = 0.0
        else:
            raise NoConvergenceError(f"no convergence within {_MAX_SWEEPS} sweeps")
    values = sorted((float(x) for x in np.diag(a)), reverse=True)
    return Spectrum(tuple(values), _cluster(values, tol), tol)


def _cluster(values: list[float], tol: float) -> tuple[tuple[float, int], ...]:
    groups: list[tuple[float, int]] = []
    i = 0
    while i < len(values):
        j = i + 1
        while j < len(values) and values[j - 1] - values[j] < 10.0 * tol:
            j += 1
        block = values[i:j]
        groups.append((sum(block) / len(block), len(block)))
        i = j
    return tuple(groups)


def _matches_balanced_pattern(spec: Spectrum, order: int, tol: float) -> bool:
    """Eigenvalues equal {order-1 once, -1 repeated} within 10 * tol."""
    atol = 10.0 * tol
    targets = [float(order - 1)] + [-1.0] * (order - 1)
    return all(abs(x - t) <= atol for x, t in zip(spec.eigenvalues, targets))


def balanced_spectrum_test(g: SignedGraph, tol: float = DEFAULT_TOL) -> bool:
    """Spectral balance test for a connected compatible graph.

    True iff the common-sign completion of g has spectrum
    {m-1 once, -1 (m-1) times}, which holds iff g is balanced.
    """
    if not is_compatible(g):  # raises DisconnectedError when disconnected
        raise NotCompatibleError("the spectral balance test needs a compatible graph")
    complete = associated_complete(g, "pm")
    spec = eigenvalues(adjacency_matrix(complete), tol)
    return _matches_balanced_pattern(spec, g.vertex_count, tol)


def power_balance_spectrum_test(g: SignedGraph, n: int, tol: float = DEFAULT_TOL) -> bool:
    """On a 2-connected compatible graph with a unique n-th power: the
    power is balanced iff the spectral balance test passes on g.
    Returns True when the two routes agree."""
    if not is_two_connected(g):
        raise NotTwoConnectedError("the power spectrum criterion needs a 2-connected graph")
    if not is_compatible(g):
        raise NotCompatibleError("the power spectrum criterion needs a compatible graph")
    if not is_power_unique(g, n):
        raise NonUniquePowerError(f"the {n}-th power of the graph is not unique")
    pr = power(g, n)
    direct = is_balanced(pr.power_max).balanced
    spectral = balanced_spectrum_test(g, tol)
    return direct == spectral

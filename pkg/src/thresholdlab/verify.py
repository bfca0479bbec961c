"""Executable checks for the eigenvalue-free interval of threshold graphs.

The headline claim: apart from the trivial eigenvalues -1 and 0, no threshold
graph has an eigenvalue in [(-1-sqrt(2))/2, (-1+sqrt(2))/2].  ``check_gap``
decides this for one graph by inertia counting (an exact integer test), the
scan functions sweep entire orders exhaustively, and the reduction machinery
walks the same vertex-deletion chain the inductive argument walks: every
non-anti-regular graph has a vertex whose removal drops exactly one trivial
eigenvalue, and iterating lands on an anti-regular graph whose extreme
nontrivial eigenvalues clear the interval with room to spare.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graphs import (
    NsgForm,
    OrderTooSmallError,
    anti_regular,
    count_threshold,
    creation_to_nsg,
    nsg_to_creation,
    nsg_to_graph,
    sequence_at,
)
from .spectra import (
    Spectrum,
    assemble_spectrum,
    eta_extremes,
    symmetric_eigenvalues,
    tridiagonalize,
    trivial_multiplicities,
    _sturm_count,
)

# Correctly rounded doubles: -1.2071067811865475..., 0.20710678118654757...
GAP_LOWER = (-1.0 - math.sqrt(2.0)) / 2.0
GAP_UPPER = (-1.0 + math.sqrt(2.0)) / 2.0

DEFAULT_ORDER_CAP = 22
INTERLACING_TOL = 1e-7


class DisconnectedError(ValueError):
    """Operation requires a connected graph."""


class EmptyClassError(ValueError):
    """Referenced vertex class does not exist or is empty."""


class OrderCapExceededError(ValueError):
    """Scan order above the configured cap."""


class ReductionCase(Enum):
    """Which trivial multiplicity drops when the chosen vertex is deleted."""

    DROP_ZERO = "drop_zero"  # mul(0, G) = mul(0, H) + 1, mul(-1) unchanged
    DROP_MINUS_ONE = "drop_minus_one"  # mul(-1, G) = mul(-1, H) + 1, mul(0) unchanged


@dataclass(frozen=True)
class GapReport:
    """Verdict of the interval check on a single graph."""

    sequence: str
    order: int
    count_in_interval: int
    expected_trivial: int
    min_nontrivial_distance: float
    passed: bool


@dataclass(frozen=True)
class InterlacingReport:
    """Verdict of one vertex-deletion interlacing check."""

    sequence: str
    deleted_class: tuple[str, int]
    passed: bool
    witness: int | None  # first index i (0-based) violating the weave


@dataclass(frozen=True)
class ReductionStep:
    parent: NsgForm
    deleted_class: tuple[str, int]  # ("U" | "V", 1-based class index)
    child: NsgForm
    case: ReductionCase


@dataclass(frozen=True)
class BoundsReport:
    """Extreme nontrivial eigenvalues of an anti-regular graph vs the interval."""

    order: int
    eta_plus: float
    eta_minus: float | None
    passed: bool


@dataclass(frozen=True)
class ScanReport:
    """Merged result of an exhaustive per-order scan over connected graphs."""

    kind: str  # "gap" | "conjecture"
    order: int
    graphs_checked: int
    failures: tuple[GapReport, ...]
    extremal_eta_plus: tuple[float, str] | None
    extremal_eta_minus: tuple[float, str] | None
    antiregular_sequence: str | None = None
    conjecture_holds: bool | None = None
    rows: tuple[dict, ...] | None = None

    @property
    def passed(self) -> bool:
        ok = not self.failures
        if self.conjecture_holds is not None:
            ok = ok and self.conjecture_holds
        return ok


def _min_nontrivial_distance(spectrum: Spectrum) -> float:
    eps = spectrum.tolerance
    best = math.inf
    for lam in spectrum.values:
        if abs(lam) <= eps or abs(lam + 1.0) <= eps:
            continue
        if lam > GAP_UPPER:
            best = min(best, lam - GAP_UPPER)
        elif lam < GAP_LOWER:
            best = min(best, GAP_LOWER - lam)
        else:
            return 0.0
    return best


def check_gap(form: NsgForm) -> GapReport:
    """Count eigenvalues inside [GAP_LOWER, GAP_UPPER] and compare with the forecast.

    The count is count_eigs_leq(A, upper) - count_eigs_leq(A, lower); it must
    equal mult0 + multm1, i.e. only the trivial eigenvalues (both strictly
    inside the interval) may appear there.  Also reports how far the nearest
    nontrivial eigenvalue stays clear of the closed interval.
    """
    seq = nsg_to_creation(form)
    adjacency = nsg_to_graph(form).adjacency.astype(np.float64)
    d, e = tridiagonalize(adjacency)
    count = _sturm_count(d, e, GAP_UPPER) - _sturm_count(d, e, GAP_LOWER)
    mults = trivial_multiplicities(form)
    expected = mults.mult0 + mults.multm1
    distance = _min_nontrivial_distance(assemble_spectrum(form))
    return GapReport(
        sequence=str(seq),
        order=form.order,
        count_in_interval=count,
        expected_trivial=expected,
        min_nontrivial_distance=distance,
        passed=count == expected,
    )


def check_interlacing(form: NsgForm, vertex_class: tuple[str, int]) -> InterlacingReport:
    """Delete one vertex of the class and verify the eigenvalue weave.

    With parent eigenvalues l_1 >= ... >= l_n and child eigenvalues
    m_1 >= ... >= m_(n-1), requires l_i + tol >= m_i >= l_(i+1) - tol.
    """
    kind, index = vertex_class
    graph = nsg_to_graph(form)
    victims = [v for v, tag in enumerate(graph.class_of) if tag == (kind, index)]
    if not victims:
        raise EmptyClassError(f"graph has no class {kind}_{index}")
    parent = graph.adjacency.astype(np.float64)
    child = np.delete(np.delete(parent, victims[0], axis=0), victims[0], axis=1)
    lams = symmetric_eigenvalues(parent)
    mus = symmetric_eigenvalues(child)
    witness = None
    for i, mu in enumerate(mus):
        if not (lams[i] + INTERLACING_TOL >= mu >= lams[i + 1] - INTERLACING_TOL):
            witness = i
            break
    return InterlacingReport(
        sequence=str(nsg_to_creation(form)),
        deleted_class=vertex_class,
        passed=witness is None,
        witness=witness,
    )


def reducing_vertex(form: NsgForm) -> ReductionStep | None:
    """Pick the vertex whose deletion drops exactly one trivial eigenvalue.

    Returns None when the graph is anti-regular (the base case: no such
    vertex is needed).  Otherwise: if every class is a singleton except the
    top coclique, that class has m_h >= 3 and loses a vertex (a duplicate);
    else the first clique class with n_k >= 2 loses a coduplicate; else the
    first coclique class below the top with m_j >= 2 loses a duplicate.
    """
    if form.isolated or form.h == 0:
        raise DisconnectedError("reduction needs a connected graph (isolated = 0, h >= 1)")
    m, n, h = form.m, form.n, form.h
    if all(x == 1 for x in n) and all(x == 1 for x in m[:-1]):
        if m[-1] <= 2:
            return None  # anti-regular
        child = NsgForm(m[:-1] + (m[-1] - 1,), n)
        return ReductionStep(form, ("U", h), child, ReductionCase.DROP_ZERO)
    for k in range(h):
        if n[k] >= 2:
            child = NsgForm(m, n[:k] + (n[k] - 1,) + n[k + 1:])
            return ReductionStep(form, ("V", k + 1), child, ReductionCase.DROP_MINUS_ONE)
    for j in range(h - 1):
        if m[j] >= 2:
            child = NsgForm(m[:j] + (m[j] - 1,) + m[j + 1:], n)
            return ReductionStep(form, ("U", j + 1), child, ReductionCase.DROP_ZERO)
    raise AssertionError("unreachable: non-anti-regular form with all classes singleton")


def check_reduction(step: ReductionStep) -> bool:
    """Exact integer check of the multiplicity relation claimed by the step."""
    parent = trivial_multiplicities(step.parent)
    child = trivial_multiplicities(step.child)
    if step.case is ReductionCase.DROP_ZERO:
        return (parent.mult0, parent.multm1) == (child.mult0 + 1, child.multm1)
    return (parent.mult0, parent.multm1) == (child.mult0, child.multm1 + 1)


def reduction_chain(form: NsgForm) -> list[ReductionStep]:
    """All steps from ``form`` down to its anti-regular endpoint."""
    steps = []
    current = form
    while (step := reducing_vertex(current)) is not None:
        steps.append(step)
        current = step.child
    return steps


def check_antiregular_bounds(order: int) -> BoundsReport:
    """Extreme nontrivial eigenvalues of the anti-regular graph clear the interval.

    Requires eta_plus > GAP_UPPER and eta_minus < GAP_LOWER; the eta_minus
    side is vacuous when no eigenvalue lies below -1 (order 2).
    """
    spectrum = assemble_spectrum(anti_regular(order))
    eta_plus, eta_minus = eta_extremes(spectrum)
    passed = (
        eta_plus is not None
        and eta_plus > GAP_UPPER
        and (eta_minus is None or eta_minus < GAP_LOWER)
    )
    return BoundsReport(order=order, eta_plus=eta_plus, eta_minus=eta_minus, passed=passed)


def _check_scan_order(order: int, order_cap: int) -> None:
    if order < 2:
        raise OrderTooSmallError(f"scans need order >= 2, got {order}")
    if order > order_cap:
        raise OrderCapExceededError(f"order {order} above cap {order_cap}")


def _scan_chunk(args) -> tuple:
    """Scan sequences [lo, hi) of an order; returns a mergeable partial result.

    Top-level function so process pools can pickle it.  Iteration is in
    lexicographic index order, and merging preserves chunk order, so reports
    are identical for any worker count.
    """
    kind, order, lo, hi, keep_rows = args
    failures: list[GapReport] = []
    rows: list[dict] = []
    best_plus: tuple[float, str] | None = None
    best_minus: tuple[float, str] | None = None
    for index in range(lo, hi):
        seq = sequence_at(order, index, connected_only=True)
        form = creation_to_nsg(seq)
        eta_plus, eta_minus = eta_extremes(assemble_spectrum(form))
        if eta_plus is not None and (best_plus is None or eta_plus < best_plus[0]):
            best_plus = (eta_plus, str(seq))
        if eta_minus is not None and (best_minus is None or eta_minus > best_minus[0]):
            best_minus = (eta_minus, str(seq))
        report = None
        if kind == "gap":
            report = check_gap(form)
            if not report.passed:
                failures.append(report)
        if keep_rows:
            row = {
                "sequence": str(seq),
                "order": order,
                "eta_plus": eta_plus,
                "eta_minus": eta_minus,
            }
            if report is not None:
                row.update(
                    count_in_interval=report.count_in_interval,
                    expected_trivial=report.expected_trivial,
                    min_nontrivial_distance=report.min_nontrivial_distance,
                    verdict="pass" if report.passed else "fail",
                )
            rows.append(row)
    return len(range(lo, hi)), failures, best_plus, best_minus, rows


def _run_scan(kind: str, order: int, workers: int, order_cap: int, keep_rows: bool) -> ScanReport:
    _check_scan_order(order, order_cap)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    total = count_threshold(order, connected_only=True)
    bounds = np.linspace(0, total, num=min(workers, total) + 1, dtype=int)
    chunks = [
        (kind, order, int(lo), int(hi), keep_rows)
        for lo, hi in zip(bounds[:-1], bounds[1:])
    ]
    if workers == 1:
        partials = [_scan_chunk(chunk) for chunk in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_scan_chunk, chunks))

    checked = 0
    failures: list[GapReport] = []
    rows: list[dict] = []
    best_plus: tuple[float, str] | None = None
    best_minus: tuple[float, str] | None = None
    for count, fails, plus, minus, chunk_rows in partials:
        checked += count
        failures.extend(fails)
        rows.extend(chunk_rows)
        if plus is not None and (best_plus is None or plus[0] < best_plus[0]):
            best_plus = plus
        if minus is not None and (best_minus is None or minus[0] > best_minus[0]):
            best_minus = minus

    antiregular_sequence = None
    conjecture_holds = None
    if kind == "conjecture":
        antiregular_sequence = str(nsg_to_creation(anti_regular(order)))
        plus_ok = best_plus is not None and best_plus[1] == antiregular_sequence
        minus_ok = best_minus is None or best_minus[1] == antiregular_sequence
        conjecture_holds = plus_ok and minus_ok
    return ScanReport(
        kind=kind,
        order=order,
        graphs_checked=checked,
        failures=tuple(failures),
        extremal_eta_plus=best_plus,
        extremal_eta_minus=best_minus,
        antiregular_sequence=antiregular_sequence,
        conjecture_holds=conjecture_holds,
        rows=tuple(rows) if keep_rows else None,
    )


def scan_gap(
    order: int,
    workers: int = 1,
    order_cap: int = DEFAULT_ORDER_CAP,
    keep_rows: bool = False,
) -> ScanReport:
    """Run :func:`check_gap` on every connected threshold graph of the order."""
    return _run_scan("gap", order, workers, order_cap, keep_rows)


def scan_conjecture(
    order: int,
    workers: int = 1,
    order_cap: int = DEFAULT_ORDER_CAP,
    keep_rows: bool = False,
) -> ScanReport:
    """Find the eta extremes over all connected graphs of the order.

    Reports whether the graph minimizing eta_plus and the one maximizing
    eta_minus are both the anti-regular graph; ties resolve to the
    lexicographically first sequence.
    """
    return _run_scan("conjecture", order, workers, order_cap, keep_rows)

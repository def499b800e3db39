"""Closed-form counts, each cross-checkable against a brute-force enumerator.

Counts use Python's arbitrary-precision integers throughout; formulas of the
shape (p*q^(m-1))^(n^m) overflow fixed-width integers immediately.  Where a
printed formula is suspect, the report carries the printed value and a
corrected candidate side by side and the brute force pins the truth; nothing
is silently "fixed".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, gcd

from .budget import DEFAULT_BUDGET, Budget
from .category import (
    FinitePrecategory,
    connected_components,
    enumerate_functors,
    is_connected,
    is_groupoid,
    vertex_group_table,
)
from .errors import SizeOverflowError, ValidationError
from .magma import (
    FiniteMagma,
    abelian_group_magma,
    cyclic_group_magma,
    enumerate_homs,
    enumerate_submagmas,
    enumerate_zero_homs,
    matrix_unit_zero_magma,
    with_zero_adjoined,
)


@dataclass(frozen=True)
class CountReport:
    """A closed-form value next to its brute-force check.

    brute_force_value is None when the oracle was skipped (budget); agrees is
    None exactly in that case.
    """

    formula_name: str
    parameters: dict
    closed_form_value: int
    brute_force_value: int | None
    agrees: bool | None
    extras: dict = field(default_factory=dict)


def _report(name, parameters, closed, brute, extras=None) -> CountReport:
    return CountReport(
        formula_name=name,
        parameters=parameters,
        closed_form_value=closed,
        brute_force_value=brute,
        agrees=None if brute is None else closed == brute,
        extras=extras or {},
    )


def count_matrix_group_gradings(n: int, q: int) -> int:
    """q^(n-1): gradings of the n x n matrix algebra by a group of order q."""
    if n < 1 or q < 1:
        raise ValidationError("need n >= 1 and q >= 1")
    return q ** (n - 1)


def matrix_group_gradings_report(n: int, q: int, budget: Budget | None = None) -> CountReport:
    """Closed form against zero-homomorphism enumeration into a group with a zero adjoined."""
    budget = budget or DEFAULT_BUDGET
    closed = count_matrix_group_gradings(n, q)
    try:
        source = matrix_unit_zero_magma(n, budget)
        target = with_zero_adjoined(cyclic_group_magma(q), budget)
        brute = len(enumerate_zero_homs(source, target, budget))
    except SizeOverflowError:
        brute = None
    return _report("matrix_group_gradings", {"n": n, "q": q}, closed, brute)


def count_groupoid_gradings_as_printed(m: int, n: int, p: int, q: int) -> int:
    """The printed groupoid-grading count (p*q^(m-1))^(n^m), computed verbatim."""
    if min(m, n, p, q) < 1:
        raise ValidationError("parameters must be >= 1")
    return (p * q ** (m - 1)) ** (n ** m)


def count_functors_connected_groupoids(
    source: FinitePrecategory, target: FinitePrecategory, budget: Budget | None = None
) -> CountReport:
    """Functor count between connected groupoids: printed formula, corrected candidate, brute force.

    The corrected candidate multiplies the two stages of the count instead of
    exponentiating and reads q as the order of the target's vertex group:
    |ob(target)|^|ob(source)| * |hom(vertex(source), vertex(target))| *
    |vertex(target)|^(|ob(source)|-1).  It is validated empirically, never
    asserted as a formula of record.
    """
    budget = budget or DEFAULT_BUDGET
    for cat, name in ((source, "source"), (target, "target")):
        if not (is_groupoid(cat) and is_connected(cat)):
            raise ValidationError(f"{name} is not a connected groupoid")
    m = source.object_count
    n = target.object_count
    vg_source = vertex_group_table(source, 0)
    vg_target = vertex_group_table(target, 0)
    p = len(
        enumerate_homs(
            FiniteMagma(len(vg_source), vg_source),
            FiniteMagma(len(vg_target), vg_target),
            budget,
        )
    )
    q = len(vg_target)
    printed = count_groupoid_gradings_as_printed(m, n, p, q)
    corrected = n ** m * p * q ** (m - 1)
    try:
        brute = len(enumerate_functors(source, target, budget))
    except SizeOverflowError:
        brute = None
    return _report(
        "connected_groupoid_functors",
        {"m": m, "n": n, "p": p, "q": q},
        corrected,
        brute,
        extras={
            "printed_value": printed,
            "printed_agrees": None if brute is None else printed == brute,
        },
    )


def count_surjective_functions(m: int, n: int) -> int:
    """Number of surjections {1..m} -> {1..n} by inclusion-exclusion (no prefactor)."""
    if m < 0 or n < 0:
        raise ValidationError("need m, n >= 0")
    return sum((-1) ** i * comb(n, i) * (n - i) ** m for i in range(n + 1))


def surjective_functions_report(m: int, n: int, budget: Budget | None = None) -> CountReport:
    """Inclusion-exclusion count against direct enumeration; the 1/n!-scaled value rides along."""
    budget = budget or DEFAULT_BUDGET
    closed = count_surjective_functions(m, n)
    prefactored, remainder = divmod(closed, factorial(n))
    brute = None
    if n ** m <= budget.max_nodes:
        brute = 0
        for code in range(n ** m):
            digits = []
            x = code
            for _ in range(m):
                digits.append(x % n)
                x //= n
            if len(set(digits)) == n:
                brute += 1
    return _report(
        "surjective_functions",
        {"m": m, "n": n},
        closed,
        brute,
        extras={
            "prefactored_value": prefactored,
            "prefactored_is_integer": remainder == 0,
            "prefactored_agrees": None if brute is None else prefactored == brute,
        },
    )


def count_abelian_homs(source_factors, target_factors) -> int:
    """Homomorphism count between direct sums of cyclic groups.

    The product over factor pairs of p^min(j, k) equals the product of
    pairwise gcds of the cyclic orders; cyclic x cyclic specializes to one gcd.
    """
    source_factors = tuple(source_factors)
    target_factors = tuple(target_factors)
    if any(f < 1 for f in source_factors + target_factors):
        raise ValidationError("cyclic factors must be positive")
    total = 1
    for a in source_factors:
        for b in target_factors:
            total *= gcd(a, b)
    return total


def abelian_homs_report(source_factors, target_factors, budget: Budget | None = None) -> CountReport:
    budget = budget or DEFAULT_BUDGET
    closed = count_abelian_homs(source_factors, target_factors)
    try:
        brute = len(
            enumerate_homs(
                abelian_group_magma(source_factors), abelian_group_magma(target_factors), budget
            )
        )
    except SizeOverflowError:
        brute = None
    return _report(
        "abelian_homs",
        {"source": list(source_factors), "target": list(target_factors)},
        closed,
        brute,
    )


def count_subspaces(p: int, n: int) -> CountReport:
    """Subspace count of an n-dimensional space over the field with p elements.

    The closed form sums A_k/B_k for k = 1..n with
    A_k = (p^n - 1)(p^n - p)...(p^n - p^(k-1)) and B_k the same at exponent k,
    which omits the zero subspace; the report also carries the k >= 0 reading.
    """
    if n < 1:
        raise ValidationError("need n >= 1")
    if p < 2:
        raise ValidationError("need a prime p >= 2")
    total = 0
    for k in range(1, n + 1):
        a = 1
        b = 1
        for i in range(k):
            a *= p ** n - p ** i
            b *= p ** k - p ** i
        total += a // b
    return _report(
        "subspace_count",
        {"p": p, "n": n},
        total,
        None,
        extras={"including_zero_subspace": total + 1},
    )


def subspaces_report(p: int, n: int, budget: Budget | None = None) -> CountReport:
    """Printed sum against subgroup enumeration of the elementary abelian group.

    The submagma enumerator returns the subgroups plus the empty set; dropping
    the empty set and the zero subspace leaves the k >= 1 sum.
    """
    budget = budget or DEFAULT_BUDGET
    report = count_subspaces(p, n)
    try:
        group = abelian_group_magma([p] * n)
        subs = enumerate_submagmas(group, budget)
        brute_all = len(subs) - 1  # drop the empty set: subgroups = subspaces
        brute = brute_all - 1  # drop the zero subspace to match the k >= 1 sum
    except SizeOverflowError:
        brute_all = None
        brute = None
    extras = dict(report.extras)
    extras["oracle_including_zero_subspace"] = brute_all
    return _report("subspace_count", report.parameters, report.closed_form_value, brute, extras)


def count_disconnected(
    source: FinitePrecategory, target: FinitePrecategory, budget: Budget | None = None
) -> CountReport:
    """Functor count for disconnected groupoids, factored over components.

    Each connected source component maps wholly into a single target
    component, so the count is the product over source components of the sum
    over target components; the plain product over all component pairs is
    reported alongside (the two coincide when the target is connected).
    """
    budget = budget or DEFAULT_BUDGET
    source_parts = connected_components(source)
    target_parts = connected_components(target)
    grid = [
        [count_functors_connected_groupoids(sp, tp, budget) for tp in target_parts]
        for sp in source_parts
    ]
    if any(cell.brute_force_value is None for row in grid for cell in row):
        raise SizeOverflowError("component-pair oracle exceeded the budget")
    closed = 1
    for row in grid:
        closed *= sum(cell.brute_force_value for cell in row)
    pairwise = 1
    for row in grid:
        for cell in row:
            pairwise *= cell.brute_force_value
    try:
        brute = len(enumerate_functors(source, target, budget))
    except SizeOverflowError:
        brute = None
    return _report(
        "disconnected_functors",
        {
            "source_components": len(source_parts),
            "target_components": len(target_parts),
        },
        closed,
        brute,
        extras={
            "pairwise_product": pairwise,
            "pairwise_agrees": None if brute is None else pairwise == brute,
        },
    )

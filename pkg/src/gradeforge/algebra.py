"""Magma and category algebras, elementary families, and the two correspondence maps.

An algebra is presented by structure constants on a basis indexed 0..k-1:
the product of basis elements s and t is either another basis element or the
ring's zero (the RING_ZERO sentinel, used for non-composable morphism pairs
and for contracted zero-magma algebras, where the magma zero is the ring
zero).  Elementary families are stored as basis subsets, one per element of a
target magma; every axiom check runs both as subset arithmetic and as exact
row reduction over a prime field, and the two verdicts must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import DEFAULT_BUDGET, Budget
from .category import (
    FinitePrecategory,
    adjoin_zero,
    enumerate_functors,
    enumerate_prefunctors,
    enumerate_subprecategory_pairs,
)
from .errors import BasisMismatchError, MissingZeroError, ValidationError
from .magma import (
    FiniteMagma,
    PairRelation,
    enumerate_homs,
    enumerate_product_submagmas,
    enumerate_zero_homs,
    enumerate_zero_submagmas,
    graph_relation,
)

RING_ZERO = None


@dataclass(frozen=True)
class AlgebraPresentation:
    """Structure constants of a magma or category algebra over a prime field.

    source is the underlying magma (for a category algebra, the zero magma of
    its morphisms); contracted presentations drop the source zero from the
    basis and send products hitting it to RING_ZERO.
    """

    source: FiniteMagma
    basis_size: int
    structure: tuple
    scalar_modulus: int
    source_of_basis: tuple
    basis_of_source: tuple
    contracted: bool

    def basis_zero_part(self) -> frozenset:
        """Basis support of the base part at the source zero ({0} has empty support)."""
        if self.source.zero is None or self.contracted:
            return frozenset()
        return frozenset((self.basis_of_source[self.source.zero],))


def _check_modulus(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValidationError(f"scalar modulus {p} is not prime")


def magma_algebra(source: FiniteMagma, scalar_modulus: int = 2) -> AlgebraPresentation:
    """The plain magma algebra: every element, including a designated zero, is a basis line."""
    _check_modulus(scalar_modulus)
    n = source.order
    return AlgebraPresentation(
        source=source,
        basis_size=n,
        structure=source.table,
        scalar_modulus=scalar_modulus,
        source_of_basis=tuple(range(n)),
        basis_of_source=tuple(range(n)),
        contracted=False,
    )


def contracted_algebra(source: FiniteMagma, scalar_modulus: int = 2) -> AlgebraPresentation:
    """The zero-magma algebra with the magma zero identified with the ring zero."""
    _check_modulus(scalar_modulus)
    if source.zero is None:
        raise MissingZeroError("contracted algebra needs a designated zero")
    basis = [g for g in range(source.order) if g != source.zero]
    basis_of_source = [None] * source.order
    for b, g in enumerate(basis):
        basis_of_source[g] = b
    structure = tuple(
        tuple(
            RING_ZERO if source.table[s][t] == source.zero else basis_of_source[source.table[s][t]]
            for t in basis
        )
        for s in basis
    )
    return AlgebraPresentation(
        source=source,
        basis_size=len(basis),
        structure=structure,
        scalar_modulus=scalar_modulus,
        source_of_basis=tuple(basis),
        basis_of_source=tuple(basis_of_source),
        contracted=True,
    )


def category_algebra(cat: FinitePrecategory, scalar_modulus: int = 2, budget: Budget | None = None) -> AlgebraPresentation:
    """Basis = morphisms; products of non-composable pairs are the ring zero."""
    return contracted_algebra(adjoin_zero(cat, budget or DEFAULT_BUDGET), scalar_modulus)


@dataclass(frozen=True)
class ElementaryFamily:
    """One basis subset per element of the target magma: the family (W_h) with
    W_h spanned by exactly the listed basis lines."""

    algebra: AlgebraPresentation
    target: FiniteMagma
    parts: tuple

    def __post_init__(self):
        if len(self.parts) != self.target.order:
            raise BasisMismatchError(
                f"{len(self.parts)} parts for a target of order {self.target.order}"
            )
        for part in self.parts:
            for b in part:
                if not 0 <= b < self.algebra.basis_size:
                    raise BasisMismatchError(f"basis index {b} outside 0..{self.algebra.basis_size - 1}")

    def part(self, h: int) -> frozenset:
        return self.parts[h]


def base_family(algebra: AlgebraPresentation) -> ElementaryFamily:
    """The fixed base family: one basis line per source element (empty at a contracted zero)."""
    parts = tuple(
        frozenset(() if algebra.basis_of_source[g] is None else (algebra.basis_of_source[g],))
        for g in range(algebra.source.order)
    )
    return ElementaryFamily(algebra=algebra, target=algebra.source, parts=parts)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check; witness localizes the first violation."""

    prop: str
    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def grading_from_relation(algebra: AlgebraPresentation, relation: PairRelation) -> ElementaryFamily:
    """Send a pair relation f to the family with parts[h] spanned by f^{-1}(h).

    Source elements outside the basis (a contracted zero) contribute nothing.
    """
    if relation.left != algebra.source:
        raise BasisMismatchError("relation's left magma is not the algebra's source")
    parts = [set() for _ in range(relation.right.order)]
    for g, h in relation.pairs:
        b = algebra.basis_of_source[g]
        if b is not None:
            parts[h].add(b)
    return ElementaryFamily(
        algebra=algebra,
        target=relation.right,
        parts=tuple(frozenset(p) for p in parts),
    )


def relation_from_filter(algebra: AlgebraPresentation, family: ElementaryFamily) -> PairRelation:
    """Send a family back to the relation {(g, h) : the base line at g lies inside W_h}."""
    if family.algebra != algebra:
        raise BasisMismatchError("family was built over a different algebra")
    pairs = {
        (algebra.source_of_basis[b], h)
        for h, part in enumerate(family.parts)
        for b in part
    }
    return PairRelation(algebra.source, family.target, frozenset(pairs))


# ---------------------------------------------------------------------------
# exact span arithmetic over F_p (the independent oracle)


def _reduce(rows, p):
    """Row-reduce over F_p; returns a list of pivoted, normalized rows."""
    basis = []
    for row in rows:
        row = list(row)
        for piv in basis:
            lead = next(i for i, x in enumerate(piv) if x)
            if row[lead]:
                c = row[lead] * pow(piv[lead], -1, p)
                row = [(a - c * b) % p for a, b in zip(row, piv)]
        if any(row):
            basis.append(row)
    return basis


def _in_span(vec, basis, p) -> bool:
    vec = list(vec)
    for piv in basis:
        lead = next(i for i, x in enumerate(piv) if x)
        if vec[lead]:
            c = vec[lead] * pow(piv[lead], -1, p)
            vec = [(a - c * b) % p for a, b in zip(vec, piv)]
    return not any(vec)


def _unit_vector(i, n):
    v = [0] * n
    v[i] = 1
    return v


def _vector_product(algebra: AlgebraPresentation, u, v):
    n = algebra.basis_size
    p = algebra.scalar_modulus
    out = [0] * n
    for s in range(n):
        if not u[s]:
            continue
        row = algebra.structure[s]
        for t in range(n):
            if not v[t]:
                continue
            idx = row[t]
            if idx is not RING_ZERO:
                out[idx] = (out[idx] + u[s] * v[t]) % p
    return out


def _part_span(algebra, part):
    return _reduce([_unit_vector(b, algebra.basis_size) for b in sorted(part)], algebra.scalar_modulus)


def _product_vectors(algebra, part_a, part_b):
    vecs = []
    for s in sorted(part_a):
        us = _unit_vector(s, algebra.basis_size)
        for t in sorted(part_b):
            vecs.append(_vector_product(algebra, us, _unit_vector(t, algebra.basis_size)))
    return vecs


def _set_product(algebra, part_a, part_b) -> frozenset:
    return frozenset(
        algebra.structure[s][t]
        for s in part_a
        for t in part_b
        if algebra.structure[s][t] is not RING_ZERO
    )


# ---------------------------------------------------------------------------
# axiom checks, each run set-level and span-level


def _agree(prop, set_verdict, span_verdict):
    if set_verdict[0] != span_verdict[0]:
        raise AssertionError(
            f"{prop}: subset arithmetic says {set_verdict[0]}, span arithmetic says {span_verdict[0]}"
        )
    holds, witness = set_verdict
    return Verdict(prop, holds, witness)


def _filter_set(algebra, family):
    target = family.target
    for h in range(target.order):
        for h2 in range(target.order):
            prod = _set_product(algebra, family.parts[h], family.parts[h2])
            if not prod <= family.parts[target.table[h][h2]]:
                return False, (h, h2)
    return True, None


def _filter_span(algebra, family):
    p = algebra.scalar_modulus
    target = family.target
    for h in range(target.order):
        for h2 in range(target.order):
            span = _part_span(algebra, family.parts[target.table[h][h2]])
            for vec in _product_vectors(algebra, family.parts[h], family.parts[h2]):
                if not _in_span(vec, span, p):
                    return False, (h, h2)
    return True, None


def is_filter(algebra: AlgebraPresentation, family: ElementaryFamily) -> Verdict:
    """W_h W_h' lies inside W_{hh'} for all h, h'; products that are the ring zero are vacuous."""
    return _agree("filter", _filter_set(algebra, family), _filter_span(algebra, family))


def _strong_set(algebra, family):
    target = family.target
    for h in range(target.order):
        for h2 in range(target.order):
            prod = _set_product(algebra, family.parts[h], family.parts[h2])
            if prod != family.parts[target.table[h][h2]]:
                return False, (h, h2)
    return True, None


def _strong_span(algebra, family):
    p = algebra.scalar_modulus
    target = family.target
    for h in range(target.order):
        for h2 in range(target.order):
            prods = _product_vectors(algebra, family.parts[h], family.parts[h2])
            prod_span = _reduce(prods, p)
            part_span = _part_span(algebra, family.parts[target.table[h][h2]])
            if len(prod_span) != len(part_span) or not all(_in_span(v, part_span, p) for v in prod_span):
                return False, (h, h2)
    return True, None


def is_strong(algebra: AlgebraPresentation, family: ElementaryFamily) -> Verdict:
    """Equality W_h W_h' = W_{hh'} everywhere (which makes the family a filter as well)."""
    return _agree("strong", _strong_set(algebra, family), _strong_span(algebra, family))


def _grading_set(algebra, family):
    holds, witness = _filter_set(algebra, family)
    if not holds:
        return holds, witness
    seen = set()
    for h, part in enumerate(family.parts):
        dup = seen & part
        if dup:
            return False, (min(dup),)
        seen |= part
    if len(seen) != algebra.basis_size:
        missing = min(set(range(algebra.basis_size)) - seen)
        return False, (missing,)
    return True, None


def _grading_span(algebra, family):
    holds, witness = _filter_span(algebra, family)
    if not holds:
        return holds, witness
    p = algebra.scalar_modulus
    vectors = []
    total = 0
    for part in family.parts:
        total += len(part)
        vectors.extend(_unit_vector(b, algebra.basis_size) for b in sorted(part))
    rank = len(_reduce(vectors, p))
    if total != algebra.basis_size or rank != algebra.basis_size:
        return False, (rank,)
    return True, None


def is_grading(algebra: AlgebraPresentation, family: ElementaryFamily) -> Verdict:
    """A filter whose parts decompose the algebra as a direct sum."""
    return _agree("grading", _grading_set(algebra, family), _grading_span(algebra, family))


def _nonzero_set(algebra, family):
    zero = family.target.zero
    for h, part in enumerate(family.parts):
        if h == zero:
            if part != algebra.basis_zero_part():
                return False, (h,)
        elif not part:
            return False, (h,)
    return True, None


def _nonzero_span(algebra, family):
    p = algebra.scalar_modulus
    zero = family.target.zero
    for h, part in enumerate(family.parts):
        span = _part_span(algebra, part)
        if h == zero:
            base = _part_span(algebra, algebra.basis_zero_part())
            same = len(span) == len(base) and all(_in_span(v, base, p) for v in span)
            if not same:
                return False, (h,)
        elif not span:
            return False, (h,)
    return True, None


def is_nonzero(algebra: AlgebraPresentation, family: ElementaryFamily) -> Verdict:
    """Every part is nonzero; with a target zero, that part is exempt and must equal the base part at zero."""
    return _agree("nonzero", _nonzero_set(algebra, family), _nonzero_span(algebra, family))


def _elementary_span(algebra, family):
    p = algebra.scalar_modulus
    for h, part in enumerate(family.parts):
        span = _part_span(algebra, part)
        if len(span) != len(part):
            return False, (h,)
        for b in sorted(part):
            if not _in_span(_unit_vector(b, algebra.basis_size), span, p):
                return False, (h,)
    return True, None


def is_elementary(algebra: AlgebraPresentation, family: ElementaryFamily) -> Verdict:
    """Each part equals the sum of the base lines it contains.

    True by construction for families stored as basis subsets; the span pass
    re-derives it from the vectors as a representation consistency check.
    """
    return _agree("elementary", (True, None), _elementary_span(algebra, family))


# ---------------------------------------------------------------------------
# enumerations via the correspondence


def enumerate_elementary_gradings(algebra: AlgebraPresentation, target: FiniteMagma, budget: Budget | None = None) -> list:
    """One grading per magma homomorphism source -> target."""
    if algebra.contracted:
        raise ValidationError("plain gradings live on the plain magma algebra")
    budget = budget or DEFAULT_BUDGET
    return [
        grading_from_relation(algebra, graph_relation(algebra.source, target, images))
        for images in enumerate_homs(algebra.source, target, budget)
    ]


def enumerate_nonzero_elementary_gradings(algebra: AlgebraPresentation, target: FiniteMagma, budget: Budget | None = None) -> list:
    """One grading per zero-magma homomorphism source -> target (contracted presentation)."""
    if not algebra.contracted:
        raise ValidationError("nonzero gradings live on the contracted algebra")
    budget = budget or DEFAULT_BUDGET
    return [
        grading_from_relation(algebra, graph_relation(algebra.source, target, images))
        for images in enumerate_zero_homs(algebra.source, target, budget)
    ]


def enumerate_elementary_filters(algebra: AlgebraPresentation, target: FiniteMagma, budget: Budget | None = None) -> list:
    """One filter per submagma of source x target, including the zero filter from the empty set."""
    if algebra.contracted:
        raise ValidationError("plain filters live on the plain magma algebra")
    budget = budget or DEFAULT_BUDGET
    return [
        grading_from_relation(algebra, rel)
        for rel in enumerate_product_submagmas(algebra.source, target, budget)
    ]


def enumerate_nonzero_elementary_filters(algebra: AlgebraPresentation, target: FiniteMagma, budget: Budget | None = None) -> list:
    """One filter per zero submagma of source x target (contracted presentation)."""
    if not algebra.contracted:
        raise ValidationError("nonzero filters live on the contracted algebra")
    budget = budget or DEFAULT_BUDGET
    return [
        grading_from_relation(algebra, rel)
        for rel in enumerate_zero_submagmas(algebra.source, target, budget)
    ]


def _family_from_morphism_map(algebra, target_magma, target_cat, morphism_map):
    parts = [set() for _ in range(target_magma.order)]
    for s, u in enumerate(morphism_map):
        parts[u].add(algebra.basis_of_source[s])
    return ElementaryFamily(
        algebra=algebra,
        target=target_magma,
        parts=tuple(frozenset(p) for p in parts),
    )


def enumerate_category_gradings(
    source: FinitePrecategory,
    target: FinitePrecategory,
    *,
    prefunctors: bool = False,
    scalar_modulus: int = 2,
    budget: Budget | None = None,
):
    """Gradings of the category algebra of ``source`` indexed by ``target``'s morphisms.

    One grading per functor (or per prefunctor with the flag); families are
    indexed by the zero magma adjoined to the target, whose zero part is empty.
    Returns (algebra, families).
    """
    budget = budget or DEFAULT_BUDGET
    algebra = category_algebra(source, scalar_modulus, budget)
    target_magma = adjoin_zero(target, budget)
    maps = (
        enumerate_prefunctors(source, target, budget)
        if prefunctors
        else enumerate_functors(source, target, budget)
    )
    families = [
        _family_from_morphism_map(algebra, target_magma, target, mm.morphism_map)
        for mm in maps
    ]
    return algebra, families


def enumerate_category_filters(
    source: FinitePrecategory,
    target: FinitePrecategory,
    *,
    scalar_modulus: int = 2,
    budget: Budget | None = None,
):
    """Filters of the category algebra of ``source``: one per subprecategory of source x target.

    Returns (algebra, families).
    """
    budget = budget or DEFAULT_BUDGET
    algebra = category_algebra(source, scalar_modulus, budget)
    target_magma = adjoin_zero(target, budget)
    families = []
    for pair_set in enumerate_subprecategory_pairs(source, target, budget):
        parts = [set() for _ in range(target_magma.order)]
        for s, t in pair_set:
            parts[t].add(algebra.basis_of_source[s])
        families.append(
            ElementaryFamily(
                algebra=algebra,
                target=target_magma,
                parts=tuple(frozenset(p) for p in parts),
            )
        )
    return algebra, families

"""Finite magmas and zero magmas.

Elements are dense indices 0..order-1; the binary operation is a row-major
Cayley table, so products are O(1) lookups and subsets fit in bit masks.
Nothing here assumes associativity, commutativity or an identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt

from .budget import DEFAULT_BUDGET, Budget, NodeCounter, check_order
from .errors import (
    IndexOutOfRangeError,
    MissingZeroError,
    NotAbsorbingError,
    SizeOverflowError,
    ValidationError,
)

ElementSet = frozenset


@dataclass(frozen=True)
class FiniteMagma:
    """A set {0..order-1} with a total binary operation table[g][h] = g*h.

    ``zero`` optionally designates an absorbing element (0g = g0 = 0).
    Instances are immutable; build them through :func:`validate_magma` or one
    of the constructors below.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    zero: int | None = None

    def product(self, g: int, h: int) -> int:
        return self.table[g][h]

    @property
    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class PairRelation:
    """A subset of G x H given by explicit (g, h) index pairs.

    No closure property is assumed at construction; submagma-ness is checked
    or enforced by the enumeration operations.
    """

    left: FiniteMagma
    right: FiniteMagma
    pairs: frozenset

    def __post_init__(self):
        for g, h in self.pairs:
            if not (0 <= g < self.left.order and 0 <= h < self.right.order):
                raise IndexOutOfRangeError(f"pair ({g}, {h}) outside {self.left.order}x{self.right.order}")

    def preimage(self, h: int) -> frozenset:
        """The set of g with (g, h) in the relation."""
        return frozenset(g for (g, h2) in self.pairs if h2 == h)


def validate_magma(order: int, table, zero: int | None = None) -> FiniteMagma:
    """Check shape, entry range and (if given) the absorbing law, then freeze."""
    if order < 1:
        raise ValidationError(f"order must be positive, got {order}")
    rows = tuple(tuple(row) for row in table)
    if len(rows) != order or any(len(row) != order for row in rows):
        raise ValidationError(f"table is not {order}x{order}")
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or not 0 <= entry < order:
                raise IndexOutOfRangeError(f"entry {entry!r} at ({i}, {j}) not in 0..{order - 1}")
    if zero is not None:
        if not 0 <= zero < order:
            raise IndexOutOfRangeError(f"zero index {zero} not in 0..{order - 1}")
        for g in range(order):
            if rows[zero][g] != zero or rows[g][zero] != zero:
                raise NotAbsorbingError(f"element {zero} is not absorbing at {g}")
    return FiniteMagma(order=order, table=rows, zero=zero)


def magma_from_word(word: str, zero: int | None = None) -> FiniteMagma:
    """Build an order-n magma from its flattened Cayley table spelled with letters.

    The word lists table rows in order with 'a' = 0, 'b' = 1, ...; e.g. a
    four-letter word w1 w2 w3 w4 means a*a = w1, a*b = w2, b*a = w3, b*b = w4.
    """
    n = isqrt(len(word))
    if n * n != len(word):
        raise ValidationError(f"word length {len(word)} is not a perfect square")
    values = [ord(c) - ord("a") for c in word]
    table = [values[i * n:(i + 1) * n] for i in range(n)]
    return validate_magma(n, table, zero)


def word_of_magma(magma: FiniteMagma) -> str:
    """Inverse of :func:`magma_from_word` for orders up to 26."""
    if magma.order > 26:
        raise ValidationError("word encoding needs order <= 26")
    return "".join(chr(ord("a") + e) for row in magma.table for e in row)


def product_magma(left: FiniteMagma, right: FiniteMagma, budget: Budget | None = None) -> FiniteMagma:
    """Componentwise product on pairs, encoded as (g, h) -> g*|right| + h.

    No zero is designated on the result even when both factors carry one.
    """
    budget = budget or DEFAULT_BUDGET
    order = left.order * right.order
    check_order(order, budget)
    nh = right.order
    table = tuple(
        tuple(left.table[g][g2] * nh + right.table[h][h2] for g2 in range(left.order) for h2 in range(nh))
        for g in range(left.order)
        for h in range(nh)
    )
    return FiniteMagma(order=order, table=table)


def with_zero_adjoined(magma: FiniteMagma, budget: Budget | None = None) -> FiniteMagma:
    """Adjoin a fresh absorbing element at the top index."""
    budget = budget or DEFAULT_BUDGET
    n = magma.order
    check_order(n + 1, budget)
    table = tuple(tuple(magma.table[g]) + (n,) for g in range(n)) + ((n,) * (n + 1),)
    return FiniteMagma(order=n + 1, table=table, zero=n)


def cyclic_group_magma(n: int) -> FiniteMagma:
    """The cyclic group of order n as a bare Cayley table."""
    if n < 1:
        raise ValidationError("cyclic group order must be positive")
    return FiniteMagma(order=n, table=tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def abelian_group_magma(factors) -> FiniteMagma:
    """Direct sum of cyclic groups, elements in mixed-radix order."""
    factors = tuple(factors)
    if not factors:
        return cyclic_group_magma(1)
    if any(f < 1 for f in factors):
        raise ValidationError("cyclic factors must be positive")
    order = 1
    for f in factors:
        order *= f

    def decode(x):
        digits = []
        for f in reversed(factors):
            digits.append(x % f)
            x //= f
        return tuple(reversed(digits))

    def encode(digits):
        x = 0
        for d, f in zip(digits, factors):
            x = x * f + d
        return x

    coords = [decode(x) for x in range(order)]
    table = tuple(
        tuple(encode(tuple((a + b) % f for a, b, f in zip(coords[i], coords[j], factors))) for j in range(order))
        for i in range(order)
    )
    return FiniteMagma(order=order, table=table)


def matrix_unit_zero_magma(n: int, budget: Budget | None = None) -> FiniteMagma:
    """Matrix units e(i,j) plus an absorbing zero; e(i,j)e(k,l) = e(i,l) if j = k, else 0.

    e(i,j) sits at index i*n + j (0-based); the zero is the last index n*n.
    """
    budget = budget or DEFAULT_BUDGET
    if n < 1:
        raise ValidationError("need n >= 1")
    order = n * n + 1
    check_order(order, budget)
    zero = n * n
    table = [[zero] * order for _ in range(order)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        table[i * n + j][k * n + l] = i * n + l
    return FiniteMagma(order=order, table=tuple(tuple(r) for r in table), zero=zero)


def closure(magma: FiniteMagma, seed) -> frozenset:
    """Smallest superset of ``seed`` closed under the table (fixpoint saturation)."""
    table = magma.table
    pending = []
    mask = 0
    for e in seed:
        if not 0 <= e < magma.order:
            raise IndexOutOfRangeError(f"seed element {e} not in 0..{magma.order - 1}")
        if not mask & (1 << e):
            mask |= 1 << e
            pending.append(e)
    while pending:
        x = pending.pop()
        row = table[x]
        mm = mask
        while mm:
            y = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            for z in (row[y], table[y][x]):
                if not mask & (1 << z):
                    mask |= 1 << z
                    pending.append(z)
    return frozenset(_bits(mask))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_submagmas(magma: FiniteMagma, budget: Budget | None = None) -> list:
    """All subsets closed under the product, including the empty set.

    Depth-first include/exclude search over elements, keeping the closure of
    the included part and pruning branches whose closure meets an excluded
    element.  Output is sorted by bit pattern, so the empty set comes first.
    """
    budget = budget or DEFAULT_BUDGET
    counter = NodeCounter(budget)
    n = magma.order
    table = magma.table
    full = (1 << n) - 1
    results: list[int] = []

    def close(mask: int, fresh: list, banned: int):
        while fresh:
            x = fresh.pop()
            row = table[x]
            mm = mask
            while mm:
                y = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                for z in (row[y], table[y][x]):
                    bit = 1 << z
                    if not mask & bit:
                        if banned & bit:
                            return None
                        mask |= bit
                        fresh.append(z)
        return mask

    def search(included: int, excluded: int):
        counter.spend()
        undecided = full & ~(included | excluded)
        if not undecided:
            results.append(included)
            return
        e = (undecided & -undecided).bit_length() - 1
        search(included, excluded | (1 << e))
        closed = close(included | (1 << e), [e], excluded)
        if closed is not None:
            search(closed, excluded)

    search(0, 0)
    results.sort()
    return [frozenset(_bits(m)) for m in results]


def enumerate_product_submagmas(left: FiniteMagma, right: FiniteMagma, budget: Budget | None = None) -> list:
    """Submagmas of left x right, decoded to pair relations."""
    prod = product_magma(left, right, budget)
    nh = right.order
    return [
        PairRelation(left, right, frozenset(divmod(e, nh) for e in subset))
        for subset in enumerate_submagmas(prod, budget)
    ]


def enumerate_zero_submagmas(left: FiniteMagma, right: FiniteMagma, budget: Budget | None = None) -> list:
    """Zero submagmas of left x right.

    A pair set f qualifies when f^{-1}(0_H) = {0_G} -- i.e. (0,0) is present
    and no nonzero g is paired with 0_H -- and f is closed under componentwise
    products whose left component is nonzero.  A forced product landing on
    (g, 0_H) with g nonzero kills the branch, since no such pair may exist.
    """
    budget = budget or DEFAULT_BUDGET
    if left.zero is None or right.zero is None:
        raise MissingZeroError("both operands need a designated zero")
    counter = NodeCounter(budget)
    ng, nh = left.order, right.order
    zg, zh = left.zero, right.zero
    npairs = ng * nh
    banned = 0
    for g in range(ng):
        if g != zg:
            banned |= 1 << (g * nh + zh)
    forced = zg * nh + zh
    full = (1 << npairs) - 1
    universe = full & ~banned & ~(1 << forced)
    gtab, htab = left.table, right.table
    results: list[int] = []

    def close(mask: int, fresh: list):
        while fresh:
            p = fresh.pop()
            g, h = divmod(p, nh)
            mm = mask
            while mm:
                q = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                g2, h2 = divmod(q, nh)
                for ga, ha, gb, hb in ((g, h, g2, h2), (g2, h2, g, h)):
                    gp = gtab[ga][gb]
                    if gp == zg:
                        continue
                    t = gp * nh + htab[ha][hb]
                    bit = 1 << t
                    if not mask & bit:
                        if banned & bit:
                            return None
                        mask |= bit
                        fresh.append(t)
        return mask

    def search(included: int, excluded: int):
        counter.spend()
        undecided = universe & ~(included | excluded)
        if not undecided:
            results.append(included)
            return
        e = (undecided & -undecided).bit_length() - 1
        search(included, excluded | (1 << e))
        closed = close(included | (1 << e), [e])
        if closed is not None and not closed & excluded:
            search(closed, excluded)

    start = close(1 << forced, [forced])
    assert start is not None  # (0,0)*(0,0) has zero left component
    search(start, 0)
    results.sort()
    return [
        PairRelation(left, right, frozenset(divmod(p, nh) for p in _bits(m)))
        for m in results
    ]


def _enumerate_maps(dom_table, cod_table, allowed, counter) -> list:
    # Backtracking with constraint propagation: images are assigned in index
    # order and every already-constrained product f(x)f(y) is propagated to a
    # forced assignment of f(x*y), failing fast on conflicts.  dom_table
    # entries of None are exempt from the homomorphism law.
    n = len(dom_table)
    out = []

    def propagate(f, x, v) -> bool:
        stack = [(x, v)]
        while stack:
            a, b = stack.pop()
            cur = f[a]
            if cur is not None:
                if cur != b:
                    return False
                continue
            if b not in allowed[a]:
                return False
            f[a] = b
            for y in range(n):
                w = f[y]
                if w is None:
                    continue
                z = dom_table[a][y]
                if z is not None:
                    stack.append((z, cod_table[b][w]))
                if y != a:
                    z = dom_table[y][a]
                    if z is not None:
                        stack.append((z, cod_table[w][b]))
        return True

    def search(f):
        counter.spend()
        for x in range(n):
            if f[x] is None:
                break
        else:
            out.append(tuple(f))
            return
        for v in sorted(allowed[x]):
            trial = list(f)
            if propagate(trial, x, v):
                search(trial)

    search([None] * n)
    out.sort()
    return out


def enumerate_homs(source: FiniteMagma, target: FiniteMagma, budget: Budget | None = None) -> list:
    """All total maps f with f(gg') = f(g)f(g') for all g, g', in sorted order."""
    budget = budget or DEFAULT_BUDGET
    counter = NodeCounter(budget)
    allowed = [frozenset(range(target.order))] * source.order
    return _enumerate_maps(source.table, target.table, allowed, counter)


def enumerate_zero_homs(source: FiniteMagma, target: FiniteMagma, budget: Budget | None = None) -> list:
    """All total maps with f^{-1}(0_H) = {0_G} and f(gg') = f(g)f(g') whenever gg' != 0_G."""
    budget = budget or DEFAULT_BUDGET
    if source.zero is None or target.zero is None:
        raise MissingZeroError("both operands need a designated zero")
    counter = NodeCounter(budget)
    zg, zh = source.zero, target.zero
    nonzero = frozenset(h for h in range(target.order) if h != zh)
    allowed = [nonzero if g != zg else frozenset((zh,)) for g in range(source.order)]
    dom = tuple(
        tuple(entry if entry != zg else None for entry in row)
        for row in source.table
    )
    return _enumerate_maps(dom, target.table, allowed, counter)


def graph_relation(source: FiniteMagma, target: FiniteMagma, images) -> PairRelation:
    """The graph of a total map as a pair relation."""
    images = tuple(images)
    if len(images) != source.order:
        raise ValidationError(f"map has {len(images)} images for order {source.order}")
    return PairRelation(source, target, frozenset(enumerate(images)))


def _perm_data(n: int):
    data = []
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        src = [inv[k // n] * n + inv[k % n] for k in range(n * n)]
        data.append((perm, src))
    return data


def canonical_form(magma: FiniteMagma, budget: Budget | None = None) -> FiniteMagma:
    """Lexicographically least relabeled table over all element permutations.

    A designated zero tags along under the winning permutation; it never
    constrains the minimization because an absorbing element is unique.
    """
    budget = budget or DEFAULT_BUDGET
    n = magma.order
    if n > budget.max_perm_order:
        raise SizeOverflowError(f"order {n} exceeds the permutation-scan cap of {budget.max_perm_order}")
    flat = [e for row in magma.table for e in row]
    best = None
    best_perm = None
    for perm, src in _perm_data(n):
        candidate = tuple(perm[flat[s]] for s in src)
        if best is None or candidate < best:
            best = candidate
            best_perm = perm
    table = tuple(best[i * n:(i + 1) * n] for i in range(n))
    zero = best_perm[magma.zero] if magma.zero is not None else None
    return FiniteMagma(order=n, table=table, zero=zero)


def are_isomorphic(left: FiniteMagma, right: FiniteMagma, budget: Budget | None = None) -> bool:
    """True when some relabeling of elements carries one table onto the other."""
    if left.order != right.order:
        return False
    return canonical_form(left, budget).table == canonical_form(right, budget).table


def census(order: int, budget: Budget | None = None) -> list:
    """One canonical representative per isomorphism class of the given order.

    Scans all order^(order^2) tables, so the node budget gates anything past
    order 3 (order 4 already has 178,981,952 classes).
    """
    budget = budget or DEFAULT_BUDGET
    if order < 1:
        raise ValidationError("order must be positive")
    counter = NodeCounter(budget)
    counter.spend(order ** (order * order))
    perms = _perm_data(order)
    seen = set()
    for flat in itertools.product(range(order), repeat=order * order):
        canon = min(tuple(perm[flat[s]] for s in src) for perm, src in perms)
        seen.add(canon)
    out = []
    for flat in sorted(seen):
        table = tuple(flat[i * order:(i + 1) * order] for i in range(order))
        out.append(FiniteMagma(order=order, table=table))
    return out

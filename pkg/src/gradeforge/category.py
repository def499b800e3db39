"""Finite precategories, categories and groupoids.

Morphisms are the primary carrier: a precategory is a list of (dom, cod)
pairs with a composition table that is total exactly on composable pairs.
comp[s][t] is "s after t" and is defined iff dom(s) = cod(t).  Identities are
optional; when every object has one the structure is a category.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .budget import DEFAULT_BUDGET, Budget, NodeCounter, check_order
from .errors import (
    BadCompositionError,
    BadIdentityError,
    IndexOutOfRangeError,
    NotACategoryError,
    NotAGroupError,
    NotAssociativeError,
    ReductionMismatchError,
    ValidationError,
)
from .magma import FiniteMagma, enumerate_zero_homs, enumerate_zero_submagmas


@dataclass(frozen=True)
class FinitePrecategory:
    """Objects 0..object_count-1, morphisms with dom/cod, partial composition.

    identity_at[e] names the identity morphism at object e, or None; a value
    with no None entries makes this a category.
    """

    object_count: int
    morphisms: tuple
    comp: tuple
    identity_at: tuple

    @property
    def morphism_count(self) -> int:
        return len(self.morphisms)

    def dom(self, s: int) -> int:
        return self.morphisms[s][0]

    def cod(self, s: int) -> int:
        return self.morphisms[s][1]

    @property
    def is_category(self) -> bool:
        return all(i is not None for i in self.identity_at)

    def hom(self, x: int, y: int) -> tuple:
        """Indices of morphisms x -> y."""
        return tuple(s for s, (d, c) in enumerate(self.morphisms) if d == x and c == y)


@dataclass(frozen=True)
class MorphismMap:
    """An object map and a morphism map, e.g. a prefunctor or functor."""

    object_map: tuple
    morphism_map: tuple


def validate_precategory(object_count, morphisms, comp, identity_at=None, budget: Budget | None = None) -> FinitePrecategory:
    """Check shapes, composability, dom/cod of composites, associativity and identities."""
    budget = budget or DEFAULT_BUDGET
    morphisms = tuple((int(d), int(c)) for d, c in morphisms)
    m = len(morphisms)
    check_order(m, budget)
    if object_count < 0:
        raise ValidationError("object count must be nonnegative")
    for s, (d, c) in enumerate(morphisms):
        if not (0 <= d < object_count and 0 <= c < object_count):
            raise IndexOutOfRangeError(f"morphism {s} has dom/cod ({d}, {c}) outside 0..{object_count - 1}")
    comp = tuple(tuple(row) for row in comp)
    if len(comp) != m or any(len(row) != m for row in comp):
        raise ValidationError(f"composition table is not {m}x{m}")
    for s in range(m):
        for t in range(m):
            entry = comp[s][t]
            composable = morphisms[s][0] == morphisms[t][1]
            if composable:
                if entry is None:
                    raise BadCompositionError(f"missing composite for composable pair ({s}, {t})")
                if not (isinstance(entry, int) and 0 <= entry < m):
                    raise IndexOutOfRangeError(f"composite {entry!r} at ({s}, {t}) not a morphism index")
                if morphisms[entry][0] != morphisms[t][0] or morphisms[entry][1] != morphisms[s][1]:
                    raise BadCompositionError(f"composite of ({s}, {t}) has wrong dom/cod")
            elif entry is not None:
                raise BadCompositionError(f"composite given for non-composable pair ({s}, {t})")
    for r in range(m):
        for s in range(m):
            rs = comp[r][s]
            if rs is None:
                continue
            for t in range(m):
                st = comp[s][t]
                if st is None:
                    continue
                if comp[rs][t] != comp[r][st]:
                    raise NotAssociativeError(f"composition not associative on triple ({r}, {s}, {t})")
    if identity_at is None:
        identity_at = (None,) * object_count
    identity_at = tuple(identity_at)
    if len(identity_at) != object_count:
        raise ValidationError("identity_at length must equal object count")
    for e, i in enumerate(identity_at):
        if i is None:
            continue
        if not (isinstance(i, int) and 0 <= i < m):
            raise IndexOutOfRangeError(f"identity index {i!r} at object {e} not a morphism index")
        if morphisms[i] != (e, e):
            raise BadIdentityError(f"identity at object {e} must run {e} -> {e}")
        for s in range(m):
            if morphisms[s][0] == e and comp[s][i] != s:
                raise BadIdentityError(f"morphism {s} not fixed by right unit at object {e}")
            if morphisms[s][1] == e and comp[i][s] != s:
                raise BadIdentityError(f"morphism {s} not fixed by left unit at object {e}")
    return FinitePrecategory(object_count, morphisms, comp, identity_at)


def _group_identity(table) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            return e
    raise NotAGroupError("no two-sided identity")


def _check_group(table) -> int:
    """Validate a Cayley table as a group; returns the identity index."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise NotAGroupError("table not square")
    e = _group_identity(table)
    for a in range(n):
        if set(table[a]) != set(range(n)) or {table[b][a] for b in range(n)} != set(range(n)):
            raise NotAGroupError("rows and columns must be permutations")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAGroupError("not associative")
    return e


def group_as_category(table) -> FinitePrecategory:
    """A group Cayley table as a one-object category."""
    table = tuple(tuple(row) for row in table)
    e = _check_group(table)
    n = len(table)
    return FinitePrecategory(
        object_count=1,
        morphisms=tuple((0, 0) for _ in range(n)),
        comp=table,
        identity_at=(e,),
    )


def connected_groupoid(object_count: int, vertex_group, budget: Budget | None = None) -> FinitePrecategory:
    """The connected groupoid on the given objects with the given vertex group.

    Morphism (i, g, j): j -> i sits at index (i*n + j)*q + g, and
    (i, g, j) o (j, h, k) = (i, gh, k).
    """
    budget = budget or DEFAULT_BUDGET
    table = tuple(tuple(row) for row in vertex_group)
    e = _check_group(table)
    q = len(table)
    n = object_count
    if n < 1:
        raise ValidationError("need at least one object")
    m = n * n * q
    check_order(m, budget)

    def idx(i, g, j):
        return (i * n + j) * q + g

    morphisms = [None] * m
    for i in range(n):
        for j in range(n):
            for g in range(q):
                morphisms[idx(i, g, j)] = (j, i)
    comp = [[None] * m for _ in range(m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for g in range(q):
                    for h in range(q):
                        comp[idx(i, g, j)][idx(j, h, k)] = idx(i, table[g][h], k)
    identity_at = tuple(idx(i, e, i) for i in range(n))
    return FinitePrecategory(n, tuple(morphisms), tuple(tuple(r) for r in comp), identity_at)


def matrix_groupoid(n: int, budget: Budget | None = None) -> FinitePrecategory:
    """The thin connected groupoid on n objects: morphisms e(i,j): j -> i."""
    return connected_groupoid(n, ((0,),), budget)


def product_category(left: FinitePrecategory, right: FinitePrecategory, budget: Budget | None = None) -> FinitePrecategory:
    """Componentwise product; morphism (s, t) encoded as s*|mor(right)| + t."""
    budget = budget or DEFAULT_BUDGET
    mr = right.morphism_count
    m = left.morphism_count * mr
    check_order(m, budget)
    nobj_r = right.object_count
    morphisms = tuple(
        (left.dom(s) * nobj_r + right.dom(t), left.cod(s) * nobj_r + right.cod(t))
        for s in range(left.morphism_count)
        for t in range(mr)
    )
    comp = [[None] * m for _ in range(m)]
    for s in range(left.morphism_count):
        for t in range(mr):
            for s2 in range(left.morphism_count):
                for t2 in range(mr):
                    a = left.comp[s][s2]
                    b = right.comp[t][t2]
                    if a is not None and b is not None:
                        comp[s * mr + t][s2 * mr + t2] = a * mr + b
    if left.is_category and right.is_category:
        identity_at = tuple(
            left.identity_at[i] * mr + right.identity_at[j]
            for i in range(left.object_count)
            for j in range(right.object_count)
        )
    else:
        identity_at = (None,) * (left.object_count * right.object_count)
    return FinitePrecategory(left.object_count * right.object_count, morphisms, tuple(tuple(r) for r in comp), identity_at)


def disjoint_union(left: FinitePrecategory, right: FinitePrecategory) -> FinitePrecategory:
    """Side-by-side union with left's objects and morphisms first."""
    off_o = left.object_count
    off_m = left.morphism_count
    morphisms = left.morphisms + tuple((d + off_o, c + off_o) for d, c in right.morphisms)
    m = len(morphisms)
    comp = [[None] * m for _ in range(m)]
    for s in range(left.morphism_count):
        for t in range(left.morphism_count):
            comp[s][t] = left.comp[s][t]
    for s in range(right.morphism_count):
        for t in range(right.morphism_count):
            c = right.comp[s][t]
            comp[off_m + s][off_m + t] = None if c is None else c + off_m
    identity_at = left.identity_at + tuple(None if i is None else i + off_m for i in right.identity_at)
    return FinitePrecategory(off_o + right.object_count, morphisms, tuple(tuple(r) for r in comp), identity_at)


def is_thin(cat: FinitePrecategory) -> bool:
    """At most one morphism between each ordered pair of objects."""
    seen = set()
    for d, c in cat.morphisms:
        if (d, c) in seen:
            return False
        seen.add((d, c))
    return True


def is_connected(cat: FinitePrecategory) -> bool:
    """At least one morphism between each ordered pair of objects."""
    seen = {(d, c) for d, c in cat.morphisms}
    return all((x, y) in seen for x in range(cat.object_count) for y in range(cat.object_count))


def is_groupoid(cat: FinitePrecategory) -> bool:
    """A category all of whose morphisms have two-sided inverses."""
    if not cat.is_category:
        return False
    for s in range(cat.morphism_count):
        ok = any(
            cat.comp[s][t] == cat.identity_at[cat.cod(s)] and cat.comp[t][s] == cat.identity_at[cat.dom(s)]
            for t in range(cat.morphism_count)
            if cat.dom(t) == cat.cod(s) and cat.cod(t) == cat.dom(s)
        )
        if not ok:
            return False
    return True


def connected_components(cat: FinitePrecategory) -> list:
    """Split into weakly connected pieces; objects and morphisms partition."""
    parent = list(range(cat.object_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d, c in cat.morphisms:
        rd, rc = find(d), find(c)
        if rd != rc:
            parent[max(rd, rc)] = min(rd, rc)
    roots = sorted({find(x) for x in range(cat.object_count)})
    out = []
    for root in roots:
        objs = [x for x in range(cat.object_count) if find(x) == root]
        obj_index = {x: i for i, x in enumerate(objs)}
        mors = [s for s in range(cat.morphism_count) if find(cat.dom(s)) == root]
        mor_index = {s: i for i, s in enumerate(mors)}
        morphisms = tuple((obj_index[cat.dom(s)], obj_index[cat.cod(s)]) for s in mors)
        comp = tuple(
            tuple(None if cat.comp[s][t] is None else mor_index[cat.comp[s][t]] for t in mors)
            for s in mors
        )
        identity_at = tuple(
            None if cat.identity_at[x] is None else mor_index[cat.identity_at[x]] for x in objs
        )
        out.append(FinitePrecategory(len(objs), morphisms, comp, identity_at))
    return out


def vertex_group_table(cat: FinitePrecategory, obj: int):
    """Cayley table of the endomorphisms at one object (must be closed)."""
    mors = [s for s in range(cat.morphism_count) if cat.morphisms[s] == (obj, obj)]
    index = {s: i for i, s in enumerate(mors)}
    table = []
    for s in mors:
        row = []
        for t in mors:
            c = cat.comp[s][t]
            if c is None or c not in index:
                raise ValidationError(f"endomorphisms at object {obj} are not closed")
            row.append(index[c])
        table.append(tuple(row))
    return tuple(table)


def adjoin_zero(cat: FinitePrecategory, budget: Budget | None = None) -> FiniteMagma:
    """The zero magma on mor(cat) plus a fresh absorbing element.

    s * t is the composite when defined and the zero otherwise; the zero sits
    at the top index, so morphism indices are preserved.
    """
    budget = budget or DEFAULT_BUDGET
    m = cat.morphism_count
    check_order(m + 1, budget)
    zero = m
    table = []
    for s in range(m):
        row = [zero] * (m + 1)
        for t in range(m):
            c = cat.comp[s][t]
            if c is not None:
                row[t] = c
        table.append(tuple(row))
    table.append((zero,) * (m + 1))
    return FiniteMagma(order=m + 1, table=tuple(table), zero=zero)


def _expand_free_objects(obj_map, mor_map, target_objects, results):
    free = [o for o, v in enumerate(obj_map) if v is None]
    if not free:
        results.append(MorphismMap(tuple(obj_map), tuple(mor_map)))
        return
    for combo in itertools.product(range(target_objects), repeat=len(free)):
        om = list(obj_map)
        for o, img in zip(free, combo):
            om[o] = img
        results.append(MorphismMap(tuple(om), tuple(mor_map)))


def _search_morphism_maps(source: FinitePrecategory, target: FinitePrecategory, functors: bool, counter) -> list:
    # Same propagation idea as the magma hom search, with the object map
    # carried alongside: binding a morphism image binds both incident object
    # images, which in turn prunes every later candidate set.
    m = source.morphism_count

    def propagate(mor_map, obj_map, s, u) -> bool:
        stack = [(s, u)]
        while stack:
            a, b = stack.pop()
            cur = mor_map[a]
            if cur is not None:
                if cur != b:
                    return False
                continue
            da, ca = source.morphisms[a]
            db, cb = target.morphisms[b]
            for go, lo in ((da, db), (ca, cb)):
                bound = obj_map[go]
                if bound is None:
                    obj_map[go] = lo
                    if functors:
                        stack.append((source.identity_at[go], target.identity_at[lo]))
                elif bound != lo:
                    return False
            mor_map[a] = b
            for t in range(m):
                v = mor_map[t]
                if v is None:
                    continue
                st = source.comp[a][t]
                if st is not None:
                    uv = target.comp[b][v]
                    if uv is None:
                        return False
                    stack.append((st, uv))
                if t != a:
                    ts = source.comp[t][a]
                    if ts is not None:
                        vu = target.comp[v][b]
                        if vu is None:
                            return False
                        stack.append((ts, vu))
        return True

    results: list[MorphismMap] = []

    def search(mor_map, obj_map):
        counter.spend()
        for s in range(m):
            if mor_map[s] is None:
                break
        else:
            _expand_free_objects(obj_map, mor_map, target.object_count, results)
            return
        ds, cs = source.morphisms[s]
        for u in range(target.morphism_count):
            du, cu = target.morphisms[u]
            if obj_map[ds] is not None and obj_map[ds] != du:
                continue
            if obj_map[cs] is not None and obj_map[cs] != cu:
                continue
            mm = list(mor_map)
            om = list(obj_map)
            if propagate(mm, om, s, u):
                search(mm, om)

    search([None] * m, [None] * source.object_count)
    results.sort(key=lambda f: (f.morphism_map, f.object_map))
    return results


def enumerate_prefunctors(source: FinitePrecategory, target: FinitePrecategory, budget: Budget | None = None) -> list:
    """All maps preserving dom/cod and composition; identities are not required to map to identities."""
    budget = budget or DEFAULT_BUDGET
    return _search_morphism_maps(source, target, False, NodeCounter(budget))


def enumerate_functors(source: FinitePrecategory, target: FinitePrecategory, budget: Budget | None = None) -> list:
    """Prefunctors that also send each identity to the identity at the image object."""
    budget = budget or DEFAULT_BUDGET
    if not source.is_category or not target.is_category:
        raise NotACategoryError("functor enumeration needs total identities on both sides")
    return _search_morphism_maps(source, target, True, NodeCounter(budget))


def enumerate_prefunctors_via_zero_homs(source: FinitePrecategory, target: FinitePrecategory, budget: Budget | None = None) -> list:
    """Prefunctor enumeration reduced to zero-magma homomorphisms of the adjoined magmas.

    Every zero-magma homomorphism must induce a consistent object assignment;
    an inconsistent one raises ReductionMismatchError rather than being
    silently discarded.  Objects touched by no morphism take every image.
    """
    budget = budget or DEFAULT_BUDGET
    g = adjoin_zero(source, budget)
    h = adjoin_zero(target, budget)
    results: list[MorphismMap] = []
    for images in enumerate_zero_homs(g, h, budget):
        obj_map: list = [None] * source.object_count
        for s in range(source.morphism_count):
            u = images[s]
            for go, lo in ((source.dom(s), target.dom(u)), (source.cod(s), target.cod(u))):
                if obj_map[go] is None:
                    obj_map[go] = lo
                elif obj_map[go] != lo:
                    raise ReductionMismatchError(
                        f"zero-magma homomorphism {images} induces no consistent object map"
                    )
        _expand_free_objects(obj_map, images[: source.morphism_count], target.object_count, results)
    results.sort(key=lambda f: (f.morphism_map, f.object_map))
    return results


def is_prefunctor(source: FinitePrecategory, target: FinitePrecategory, mm: MorphismMap) -> bool:
    """Check dom/cod compatibility and preservation of defined composition."""
    for s in range(source.morphism_count):
        u = mm.morphism_map[s]
        if target.dom(u) != mm.object_map[source.dom(s)] or target.cod(u) != mm.object_map[source.cod(s)]:
            return False
    for s in range(source.morphism_count):
        for t in range(source.morphism_count):
            st = source.comp[s][t]
            if st is None:
                continue
            uv = target.comp[mm.morphism_map[s]][mm.morphism_map[t]]
            if uv is None or uv != mm.morphism_map[st]:
                return False
    return True


def is_functor(source: FinitePrecategory, target: FinitePrecategory, mm: MorphismMap) -> bool:
    if not is_prefunctor(source, target, mm):
        return False
    return all(
        mm.morphism_map[source.identity_at[e]] == target.identity_at[mm.object_map[e]]
        for e in range(source.object_count)
    )


def identity_morphism_map(cat: FinitePrecategory) -> MorphismMap:
    return MorphismMap(tuple(range(cat.object_count)), tuple(range(cat.morphism_count)))


def compose_morphism_maps(first: MorphismMap, second: MorphismMap) -> MorphismMap:
    """second after first."""
    return MorphismMap(
        tuple(second.object_map[o] for o in first.object_map),
        tuple(second.morphism_map[s] for s in first.morphism_map),
    )


def enumerate_subprecategories(cat: FinitePrecategory, budget: Budget | None = None) -> list:
    """All morphism subsets closed under defined composition, sorted by bit pattern.

    Objects of a subprecategory are induced as the doms and cods of its
    morphisms; identities are not required to belong.
    """
    budget = budget or DEFAULT_BUDGET
    counter = NodeCounter(budget)
    m = cat.morphism_count
    comp = cat.comp
    full = (1 << m) - 1
    results: list[int] = []

    def close(mask, fresh, banned):
        while fresh:
            x = fresh.pop()
            mm = mask
            while mm:
                y = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                for z in (comp[x][y], comp[y][x]):
                    if z is None:
                        continue
                    bit = 1 << z
                    if not mask & bit:
                        if banned & bit:
                            return None
                        mask |= bit
                        fresh.append(z)
        return mask

    def search(included, excluded):
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
    out = []
    for mask in results:
        subset = frozenset(i for i in range(m) if mask & (1 << i))
        out.append(subset)
    return out


def enumerate_subprecategory_pairs(left: FinitePrecategory, right: FinitePrecategory, budget: Budget | None = None) -> list:
    """Subprecategories of left x right as sets of (left morphism, right morphism) pairs."""
    budget = budget or DEFAULT_BUDGET
    prod = product_category(left, right, budget)
    mr = right.morphism_count
    return [
        frozenset(divmod(e, mr) for e in subset)
        for subset in enumerate_subprecategories(prod, budget)
    ]


def subprecategory_pairs_via_zero_submagmas(left: FinitePrecategory, right: FinitePrecategory, budget: Budget | None = None) -> list:
    """Subprecategory pair-sets recovered from zero submagmas of the adjoined magmas.

    Each zero submagma contributes the pairs of genuine morphisms it contains;
    distinct zero submagmas can collapse to the same pair-set (pairs whose
    left component is the adjoined zero carry no morphism information), so the
    image is deduplicated.

    The result is exactly the subprecategories in which every pair of members
    with composable left components also has composable right components: a
    left-composable, right-non-composable pair would force a product onto the
    forbidden zero column of the zero submagma.  When the right factor has one
    object this is all subprecategories and the two enumerations coincide.
    """
    budget = budget or DEFAULT_BUDGET
    g = adjoin_zero(left, budget)
    h = adjoin_zero(right, budget)
    zg, zh = g.zero, h.zero
    seen = set()
    for rel in enumerate_zero_submagmas(g, h, budget):
        seen.add(frozenset((s, t) for (s, t) in rel.pairs if s != zg and t != zh))
    return sorted(seen, key=lambda f: sorted(f))

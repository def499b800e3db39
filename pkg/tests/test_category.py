import itertools

import pytest

from gradeforge.errors import (
    BadCompositionError,
    BadIdentityError,
    NotACategoryError,
    NotAGroupError,
    NotAssociativeError,
    ReductionMismatchError,
)
from gradeforge.category import (
    adjoin_zero,
    compose_morphism_maps,
    connected_components,
    connected_groupoid,
    disjoint_union,
    enumerate_functors,
    enumerate_prefunctors,
    enumerate_prefunctors_via_zero_homs,
    enumerate_subprecategories,
    enumerate_subprecategory_pairs,
    group_as_category,
    identity_morphism_map,
    is_connected,
    is_functor,
    is_groupoid,
    is_prefunctor,
    is_thin,
    matrix_groupoid,
    product_category,
    subprecategory_pairs_via_zero_submagmas,
    validate_precategory,
    vertex_group_table,
)
from gradeforge.magma import are_isomorphic, matrix_unit_zero_magma

from conftest import one_object_monoid


class TestValidate:
    def test_section3_category(self, involution_cat):
        assert involution_cat.is_category
        assert involution_cat.comp[2][2] == 0  # alpha o alpha = id_a
        assert involution_cat.comp[3][2] == 4  # beta o alpha = gamma
        assert involution_cat.comp[4][2] == 3  # gamma o alpha = beta, forced by the relations

    def test_idempotent_monoid(self, idem_cat):
        assert idem_cat.comp[1][1] == 1

    def test_wrong_codomain_rejected(self):
        # the composite of (0 -> 1) after (0 -> 0) must run 0 -> 1, not 0 -> 0
        with pytest.raises(BadCompositionError):
            validate_precategory(2, [(0, 0), (0, 1)], [[0, None], [0, None]], None)

    def test_missing_composite_rejected(self):
        with pytest.raises(BadCompositionError):
            validate_precategory(1, [(0, 0)], [[None]], None)

    def test_associativity_checked(self):
        # x*x = y, x*y = y, y*x = x, y*y = y is not associative
        with pytest.raises(NotAssociativeError):
            validate_precategory(1, [(0, 0), (0, 0)], [[1, 1], [0, 1]], None)

    def test_identity_flag_checked(self):
        with pytest.raises(BadIdentityError):
            validate_precategory(1, [(0, 0), (0, 0)], [[1, 1], [1, 1]], identity_at=(0,))


class TestPredicates:
    def test_matrix_groupoid(self):
        mg = matrix_groupoid(3)
        assert is_thin(mg) and is_connected(mg) and is_groupoid(mg)

    def test_group_category(self, z2_cat):
        assert is_connected(z2_cat) and is_groupoid(z2_cat)
        assert not is_thin(z2_cat)
        assert is_thin(group_as_category([[0]]))

    def test_idempotent_monoid_is_not_a_groupoid(self, idem_cat):
        assert not is_groupoid(idem_cat)

    def test_components_of_disjoint_union(self, z2_cat):
        both = disjoint_union(z2_cat, group_as_category([[0, 1, 2], [1, 2, 0], [2, 0, 1]]))
        parts = connected_components(both)
        assert len(parts) == 2
        assert sum(p.morphism_count for p in parts) == both.morphism_count
        assert [p.morphism_count for p in parts] == [2, 3]

    def test_vertex_hom_counts_constant_on_connected_groupoids(self):
        g = connected_groupoid(3, [[0, 1], [1, 0]])
        counts = {len(g.hom(x, y)) for x in range(3) for y in range(3)}
        assert counts == {2}


class TestConstructors:
    def test_matrix_groupoid_shape(self):
        mg = matrix_groupoid(2)
        assert mg.object_count == 2 and mg.morphism_count == 4

    def test_group_as_category(self, z2_cat):
        assert z2_cat.object_count == 1 and z2_cat.morphism_count == 2

    def test_not_a_group(self):
        with pytest.raises(NotAGroupError):
            group_as_category([[0, 0], [0, 0]])

    def test_product_counts(self, involution_cat, z2_cat):
        prod = product_category(involution_cat, z2_cat)
        assert prod.morphism_count == 10
        assert prod.is_category

    def test_connected_groupoid_is_valid(self):
        g = connected_groupoid(2, [[0, 1], [1, 0]])
        validate_precategory(g.object_count, g.morphisms, g.comp, g.identity_at)
        assert is_groupoid(g) and is_connected(g)


class TestAdjoinZero:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_matrix_unit_zero_magma(self, n):
        assert adjoin_zero(matrix_groupoid(n)) == matrix_unit_zero_magma(n)

    def test_matches_up_to_relabeling(self):
        assert are_isomorphic(adjoin_zero(matrix_groupoid(2)), matrix_unit_zero_magma(2))

    def test_group_category_gains_absorbing_zero(self, z2_cat):
        m = adjoin_zero(z2_cat)
        assert m.zero == 2 and m.table[0][1] == 1 and m.table[2][1] == 2

    def test_section3_products(self, involution_cat):
        m = adjoin_zero(involution_cat)
        assert m.table[2][3] == m.zero  # alpha * beta not composable
        assert m.table[3][2] == 4  # beta * alpha = gamma


class TestPrefunctorsAndFunctors:
    def test_four_functors_to_the_two_element_group(self, involution_cat, z2_cat):
        maps = enumerate_functors(involution_cat, z2_cat)
        assert [f.morphism_map for f in maps] == [
            (0, 0, 0, 0, 0),
            (0, 0, 0, 1, 1),
            (0, 0, 1, 0, 1),
            (0, 0, 1, 1, 0),
        ]

    def test_prefunctors_to_idempotent_monoid(self, involution_cat, idem_cat):
        # Three of the eight catalogued maps fail composition preservation
        # (beta o id_a = beta forces f(beta) = f(beta)f(id_a), and
        # gamma o alpha = beta forces f(beta) = f(gamma)f(alpha)); the
        # composition-preserving maps are exactly these five.
        maps = enumerate_prefunctors(involution_cat, idem_cat)
        assert [f.morphism_map for f in maps] == [
            (0, 0, 0, 0, 0),
            (0, 0, 0, 1, 1),
            (0, 1, 0, 1, 1),
            (1, 0, 1, 1, 1),
            (1, 1, 1, 1, 1),
        ]

    def test_every_functor_is_a_prefunctor(self, involution_cat, z2_cat, idem_cat):
        for target in (z2_cat, idem_cat):
            functors = {f.morphism_map for f in enumerate_functors(involution_cat, target)}
            prefunctors = {f.morphism_map for f in enumerate_prefunctors(involution_cat, target)}
            assert functors <= prefunctors

    def test_groupoid_target_collapses_prefunctors_to_functors(self, involution_cat, z2_cat):
        assert enumerate_prefunctors(involution_cat, z2_cat) == enumerate_functors(involution_cat, z2_cat)
        mg2 = matrix_groupoid(2)
        assert enumerate_prefunctors(mg2, mg2) == enumerate_functors(mg2, mg2)

    @pytest.mark.parametrize("m,n", [(1, 1), (1, 3), (2, 2), (3, 2), (4, 3)])
    def test_thin_connected_counts(self, m, n):
        assert len(enumerate_functors(matrix_groupoid(m), matrix_groupoid(n))) == n ** m

    def test_matrix_groupoid_to_group(self, z2_cat):
        assert len(enumerate_functors(matrix_groupoid(2), z2_cat)) == 2

    def test_functor_enumeration_requires_categories(self, z2_cat):
        arrow = validate_precategory(2, [(0, 1)], [[None]], None)
        with pytest.raises(NotACategoryError):
            enumerate_functors(arrow, z2_cat)

    def test_identity_and_composition_closure(self, involution_cat, z2_cat):
        functors = enumerate_functors(involution_cat, z2_cat)
        assert identity_morphism_map(involution_cat) in enumerate_functors(involution_cat, involution_cat)
        z2_endos = enumerate_functors(z2_cat, z2_cat)
        closed = {f.morphism_map for f in enumerate_functors(involution_cat, z2_cat)}
        for f in functors:
            for s in z2_endos:
                assert compose_morphism_maps(f, s).morphism_map in closed

    def test_validity_predicates(self, involution_cat, idem_cat):
        for f in enumerate_prefunctors(involution_cat, idem_cat):
            assert is_prefunctor(involution_cat, idem_cat, f)
        for f in enumerate_functors(involution_cat, idem_cat):
            assert is_functor(involution_cat, idem_cat, f)


class TestZeroHomReduction:
    def pairs(self, involution_cat, z2_cat, idem_cat):
        mg2 = matrix_groupoid(2)
        cats = [involution_cat, z2_cat, idem_cat, mg2]
        return [(s, t) for s in cats for t in cats]

    def test_reduction_agrees_with_direct_enumeration(self, involution_cat, z2_cat, idem_cat):
        for source, target in self.pairs(involution_cat, z2_cat, idem_cat):
            direct = enumerate_prefunctors(source, target)
            reduced = enumerate_prefunctors_via_zero_homs(source, target)
            assert direct == reduced, (source.morphism_count, target.morphism_count)

    def test_inconsistent_object_map_is_flagged(self):
        # two parallel-free arrows out of a shared source object, no identities:
        # a zero-magma homomorphism may send them into different components
        fork = validate_precategory(3, [(0, 1), (0, 2)], [[None, None], [None, None]], None)
        two_arrows = validate_precategory(
            4, [(0, 1), (2, 3)], [[None, None], [None, None]], None
        )
        assert len(enumerate_prefunctors(fork, two_arrows)) == 2
        with pytest.raises(ReductionMismatchError):
            enumerate_prefunctors_via_zero_homs(fork, two_arrows)


class TestSubprecategories:
    def test_empty_set_always_appears(self, involution_cat, z2_cat):
        assert frozenset() in enumerate_subprecategory_pairs(involution_cat, z2_cat)

    def test_reference_five_pair_set_appears(self, involution_cat, z2_cat):
        pairs = enumerate_subprecategory_pairs(involution_cat, z2_cat)
        assert frozenset({(0, 0), (3, 0), (3, 1), (1, 0), (1, 1)}) in pairs

    def test_reference_nine_pair_set_appears(self, involution_cat, z2_cat):
        pairs = enumerate_subprecategory_pairs(involution_cat, z2_cat)
        nine = frozenset({(0, 0), (0, 1), (2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (4, 1), (1, 0)})
        assert nine in pairs

    def test_closed_subsets_only(self, involution_cat):
        comp = involution_cat.comp
        for subset in enumerate_subprecategories(involution_cat):
            for s in subset:
                for t in subset:
                    if comp[s][t] is not None:
                        assert comp[s][t] in subset

    def test_zero_submagma_route_agrees(self, involution_cat, z2_cat, idem_cat):
        for source, target in [
            (involution_cat, z2_cat),
            (involution_cat, idem_cat),
            (z2_cat, idem_cat),
            (idem_cat, z2_cat),
            (z2_cat, z2_cat),
            (idem_cat, idem_cat),
        ]:
            direct = set(enumerate_subprecategory_pairs(source, target))
            reduced = set(subprecategory_pairs_via_zero_submagmas(source, target))
            assert direct == reduced

    def test_zero_submagma_route_on_multi_object_targets(self, involution_cat, z2_cat, idem_cat):
        # with several target objects, the zero route drops exactly the
        # subprecategories holding a pair whose left components compose while
        # the right components do not: closure would force a product onto the
        # forbidden zero column
        def compatible(source, target, pair_set):
            return all(
                target.comp[t][t2] is not None
                for (s, t) in pair_set
                for (s2, t2) in pair_set
                if source.comp[s][s2] is not None
            )

        for source in (z2_cat, idem_cat):
            direct = set(enumerate_subprecategory_pairs(source, involution_cat))
            reduced = set(subprecategory_pairs_via_zero_submagmas(source, involution_cat))
            assert reduced == {p for p in direct if compatible(source, involution_cat, p)}
            assert reduced < direct


class TestComponents:
    def test_morphism_counts_partition(self, involution_cat, z2_cat):
        cat = disjoint_union(disjoint_union(involution_cat, z2_cat), matrix_groupoid(2))
        parts = connected_components(cat)
        assert sum(p.morphism_count for p in parts) == cat.morphism_count
        assert sum(p.object_count for p in parts) == cat.object_count

    def test_vertex_group_extraction(self):
        g = connected_groupoid(2, [[0, 1], [1, 0]])
        table = vertex_group_table(g, 0)
        assert len(table) == 2 and table[0][0] == 0

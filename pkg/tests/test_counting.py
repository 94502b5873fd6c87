"""Tests for the counting recursion, the fiber decomposition and nodal counts."""

import pytest


class TestCatalan:
    @pytest.mark.parametrize('m,expected', [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (10, 16796)])
    def test_values(self, m, expected):
        from counting import catalan
        assert catalan(m) == expected

    def test_negative(self):
        from counting import catalan
        with pytest.raises(ValueError):
            catalan(-1)


# ---------------------------------------------------------------------------
# recursion
# ---------------------------------------------------------------------------

class TestRecursion:
    def test_running_example(self):
        from nakayama import make_algebra
        from counting import CountTable, count_tilt_recursive
        table = CountTable()
        assert count_tilt_recursive(make_algebra(10, [5, 6, 7, 9]), table) == 266
        assert len(table) > 1

    def test_table_reuses_entries(self):
        from nakayama import make_algebra
        from counting import CountTable, count_tilt_recursive
        table = CountTable()
        algebra = make_algebra(6, [3])
        table.put(algebra, 999)
        assert count_tilt_recursive(algebra, table) == 999

    @pytest.mark.parametrize('n', range(1, 8))
    def test_matches_enumeration(self, n):
        from nakayama import all_algebras
        from counting import CountTable, count_tilt_recursive
        from tilting import enumerate_tilting
        table = CountTable()
        for algebra in all_algebras(n):
            assert count_tilt_recursive(algebra, table) == len(enumerate_tilting(algebra))

    @pytest.mark.parametrize('n', range(2, 12))
    def test_radical_square_zero(self, n):
        from nakayama import radical_square_zero
        from counting import count_tilt_recursive
        assert count_tilt_recursive(radical_square_zero(n)) == n

    def test_suffix_parse(self):
        from nakayama import make_algebra
        from counting import parse_suffix
        parse = parse_suffix(make_algebra(10, [5, 6, 7, 9]))
        assert (parse.last, parse.run_length, parse.free_arrows) == (9, 0, 1)
        assert parse.base.label == '8:5,6,7'
        assert parse.extended.label == '9:5,6,7'


# ---------------------------------------------------------------------------
# fibers
# ---------------------------------------------------------------------------

class TestDecomposition:
    def test_fibers_with_relation_before_sink(self):
        from nakayama import make_algebra
        from counting import decomposition_fibers
        assert decomposition_fibers(make_algebra(3, [2])) == {2: 2, 3: 1}

    def test_fibers_of_path_algebra(self):
        from nakayama import path_algebra
        from counting import decomposition_fibers
        assert decomposition_fibers(path_algebra(3)) == {1: 2, 2: 1, 3: 2}

    def test_fibers_sum_to_count(self):
        from nakayama import make_algebra
        from counting import decomposition_fibers
        from tilting import enumerate_tilting
        algebra = make_algebra(7, [3, 5])
        assert sum(decomposition_fibers(algebra).values()) == len(enumerate_tilting(algebra))

    @pytest.mark.parametrize('n,relations', [(4, []), (4, [2]), (5, [2, 3]), (5, [4]), (6, [3, 4])])
    def test_fibers_read_from_orders(self, n, relations):
        from nakayama import make_algebra
        from counting import classify_decomposition, fiber_matches_order
        from qhs import order_from_tilting
        from tilting import enumerate_tilting
        algebra = make_algebra(n, relations)
        for tilting in enumerate_tilting(algebra):
            index = classify_decomposition(algebra, tilting)
            _, order = order_from_tilting(algebra, tilting)
            assert fiber_matches_order(algebra, index, order)

    def test_semisimple_cannot_be_classified(self):
        from nakayama import make_algebra, regular_module
        from counting import classify_decomposition
        from errors import ClassificationFailed
        algebra = make_algebra(1)
        with pytest.raises(ClassificationFailed):
            classify_decomposition(algebra, regular_module(algebra))

    @pytest.mark.parametrize('n,relations', [(5, []), (5, [2]), (5, [3]), (5, [2, 3])])
    def test_sink_restriction_is_a_bijection(self, n, relations):
        from nakayama import make_algebra, interval
        from counting import sink_removed, sink_restriction
        from tilting import enumerate_tilting
        algebra = make_algebra(n, relations)
        with_sink = [t for t in enumerate_tilting(algebra) if interval(n, n) in t]
        images = {sink_restriction(algebra, t) for t in with_sink}
        assert len(images) == len(with_sink)
        assert images == set(enumerate_tilting(sink_removed(algebra)))


# ---------------------------------------------------------------------------
# nodal counting
# ---------------------------------------------------------------------------

class TestNodal:
    def test_glue_nodal(self):
        from nakayama import make_algebra, path_algebra
        from counting import glue_nodal
        assert glue_nodal(path_algebra(2), 1, 1) == make_algebra(4, [2, 3])
        assert glue_nodal(path_algebra(1), 0, 2) == path_algebra(3)

    def test_two_vertex_base(self):
        from nakayama import path_algebra
        from counting import count_qhs_nodal
        nodal = count_qhs_nodal(path_algebra(2), 1, 1)
        assert nodal.count == 4
        assert nodal.below_predecessor == 1
        assert nodal.sink_free == 1

    def test_one_vertex_base(self):
        from nakayama import path_algebra
        from counting import count_qhs_nodal
        nodal = count_qhs_nodal(path_algebra(1), 0, 2)
        assert nodal.count == 5
        assert nodal.sink_free is None

    @pytest.mark.parametrize('n', [2, 3, 4, 5])
    def test_predecessor_count_matches_sink_free_base(self, n):
        from nakayama import all_algebras
        from counting import count_qhs_nodal
        checked = 0
        for base in all_algebras(n):
            nodal = count_qhs_nodal(base, 0, 1)
            if nodal.sink_free is not None:
                assert nodal.below_predecessor == nodal.sink_free, base.label
                checked += 1
        assert checked

    @pytest.mark.parametrize('relations,k,m', [([], 0, 1), ([2], 1, 2), ([2, 3], 0, 2), ([], 2, 1)])
    def test_matches_enumeration(self, relations, k, m):
        from nakayama import make_algebra
        from counting import count_qhs_nodal
        from qhs import enumerate_qhs
        nodal = count_qhs_nodal(make_algebra(4, relations), k, m)
        assert nodal.count == len(enumerate_qhs(nodal.glued))

    def test_rejects_no_free_arrows(self):
        from nakayama import path_algebra
        from counting import count_qhs_nodal
        with pytest.raises(ValueError):
            count_qhs_nodal(path_algebra(2), 1, 0)

    @pytest.mark.parametrize('k,m', [(1, 1), (2, 3), (4, 2)])
    def test_lemma_subcounts(self, k, m):
        from counting import catalan, lemma_subcounts
        assert lemma_subcounts(k, m) == (1, k, catalan(m + 1), catalan(m))

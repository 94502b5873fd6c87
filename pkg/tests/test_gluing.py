"""Tests for block decomposition, gluing at nodes and admissible sequences."""

import pytest


RUNNING_TILTING = [(1, 1), (1, 3), (3, 3), (1, 5), (5, 6), (6, 6), (6, 7), (7, 9), (9, 10), (10, 10)]


def _running_example():
    from nakayama import make_algebra
    return make_algebra(10, [5, 6, 7, 9])


def _module(pairs):
    from nakayama import BasicModule, IntervalModule
    return BasicModule.of(IntervalModule(a, b) for a, b in pairs)


def _sequence(read_fixture):
    from serialize import parse_sequence
    return parse_sequence(read_fixture('sequence.json'))


def _replace(sequence, index, **changes):
    from dataclasses import replace
    from gluing import AdmissibleSequence
    locals_ = list(sequence.locals)
    locals_[index] = replace(locals_[index], **changes)
    return AdmissibleSequence(tuple(locals_))


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------

class TestBlockDecomposition:
    def test_running_example(self, read_fixture):
        from gluing import block_decomposition
        decomposition = block_decomposition(_running_example())
        assert str(decomposition) + '\n' == read_fixture('running_example_blocks.txt')
        assert decomposition.cuts == (5, 7, 9)

    def test_path_algebra_is_one_block(self):
        from nakayama import path_algebra
        from gluing import block_decomposition
        decomposition = block_decomposition(path_algebra(4))
        assert str(decomposition) == 'path[1,4]'
        assert decomposition.cuts == ()

    def test_radical_square_zero_is_one_bang_block_between_path_ends(self):
        from nakayama import radical_square_zero
        from gluing import block_decomposition
        assert str(block_decomposition(radical_square_zero(5))) == 'path[1,2] bang[2,4] path[4,5]'

    def test_single_vertex(self):
        from nakayama import make_algebra
        from gluing import block_decomposition
        assert str(block_decomposition(make_algebra(1))) == 'path[1,1]'

    def test_dict_form(self):
        from nakayama import make_algebra
        from gluing import block_decomposition
        data = block_decomposition(make_algebra(4, [2])).to_dict()
        assert data == {
            'blocks': [{'kind': 'path', 'range': [1, 2]}, {'kind': 'path', 'range': [2, 4]}],
            'cuts': [2],
        }


# ---------------------------------------------------------------------------
# gluing orders
# ---------------------------------------------------------------------------

class TestGlueOrders:
    def test_glue_at_shared_vertex(self):
        from poset import PartialOrder
        from gluing import glue_orders
        left = PartialOrder.from_covers(1, 2, [(2, 1)])
        right = PartialOrder.from_covers(2, 3, [(3, 2)])
        glued = glue_orders(left, right)
        assert str(glued) == '2>1 3>2'
        assert glued.lt(1, 3)

    def test_ranges_must_meet(self):
        from poset import PartialOrder
        from gluing import glue_orders
        from errors import RangeMismatch
        with pytest.raises(RangeMismatch):
            glue_orders(PartialOrder.antichain(1, 2), PartialOrder.antichain(3, 4))

    def test_restrict_order(self):
        from poset import PartialOrder
        from gluing import restrict_order
        order = PartialOrder.from_covers(1, 3, [(2, 1), (2, 3)])
        assert str(restrict_order(order, 2, 3)) == '2>3'

    def test_gluing_conditions_reject_one_orientation(self):
        from poset import PartialOrder
        from gluing import gluing_conditions
        lefts = [PartialOrder.from_covers(1, 2, [(2, 1)]), PartialOrder.from_covers(1, 2, [(1, 2)])]
        rights = [PartialOrder.from_covers(2, 3, [(3, 2)]), PartialOrder.from_covers(2, 3, [(2, 3)])]
        passing = [
            (left, right) for left in lefts for right in rights
            if all(gluing_conditions(left, right, 2))
        ]
        assert len(passing) == 3
        # 1 below 2 on the left forces 2 below 3 on the right
        assert gluing_conditions(lefts[0], rights[1], 2) == (False, False)


# ---------------------------------------------------------------------------
# admissible sequences
# ---------------------------------------------------------------------------

class TestAdmissibleSequences:
    def test_running_example_assembles(self, read_fixture):
        from gluing import admissible_validate_assemble
        order, tilting = admissible_validate_assemble(_running_example(), _sequence(read_fixture))
        assert str(order) + '\n' == read_fixture('glued_covers.txt')
        assert tilting == _module(RUNNING_TILTING)

    def test_sequence_from_tilting(self, read_fixture):
        from gluing import admissible_from_tilting
        from serialize import dump_json
        sequence = admissible_from_tilting(_running_example(), _module(RUNNING_TILTING))
        assert dump_json(sequence.to_list()) == read_fixture('sequence.json')

    def test_local_tiltings(self, read_fixture):
        from gluing import block_decomposition, local_tiltings
        from qhs import order_from_tilting
        algebra = _running_example()
        labeled, _ = order_from_tilting(algebra, _module(RUNNING_TILTING))
        blocks = local_tiltings(labeled, block_decomposition(algebra))
        lines = [' '.join(str(labels[j]) for j in sorted(labels)) for labels in blocks]
        assert lines == read_fixture('local_tiltings.txt').splitlines()

    def test_bang_apex_against_rising_neighbour(self, read_fixture):
        from trees import BinaryTree
        from gluing import validate_sequence
        from errors import InadmissibleSequence
        left_comb = BinaryTree(5, BinaryTree(4, BinaryTree(3, BinaryTree(2, BinaryTree(1)))))
        sequence = _replace(_sequence(read_fixture), 0, tree=left_comb)
        with pytest.raises(InadmissibleSequence) as excinfo:
            validate_sequence(_running_example(), sequence)
        assert excinfo.value.clause == 'A1'
        # the apex may sit on the cut instead
        validate_sequence(_running_example(), _replace(sequence, 1, apex=5))

    def test_path_cut_orientation(self, read_fixture):
        from trees import BinaryTree
        from gluing import validate_sequence
        from errors import InadmissibleSequence
        rooted_at_nine = BinaryTree(9, BinaryTree(8, BinaryTree(7)))
        sequence = _replace(_sequence(read_fixture), 2, tree=rooted_at_nine)
        with pytest.raises(InadmissibleSequence) as excinfo:
            validate_sequence(_running_example(), sequence)
        assert excinfo.value.clause == 'A2'

    def test_apex_outside_block(self, read_fixture):
        from gluing import validate_sequence
        from errors import InadmissibleSequence
        sequence = _replace(_sequence(read_fixture), 1, apex=8)
        with pytest.raises(InadmissibleSequence) as excinfo:
            validate_sequence(_running_example(), sequence)
        assert excinfo.value.clause == 'A0'

    def test_wrong_blocks(self, read_fixture):
        from nakayama import make_algebra
        from gluing import validate_sequence
        from errors import InadmissibleSequence
        with pytest.raises(InadmissibleSequence) as excinfo:
            validate_sequence(make_algebra(10, [5, 9]), _sequence(read_fixture))
        assert excinfo.value.clause == 'blocks'

    @pytest.mark.parametrize('n', [2, 3, 4, 5, 6, 7])
    def test_sequences_classify_structures(self, n):
        from nakayama import all_algebras
        from gluing import admissible_sequences, admissible_validate_assemble
        from qhs import char_tilting, enumerate_qhs
        for algebra in all_algebras(n):
            sequences = admissible_sequences(algebra)
            assembled = [admissible_validate_assemble(algebra, s) for s in sequences]
            assert {order for order, _ in assembled} == enumerate_qhs(algebra)
            assert len(assembled) == len(enumerate_qhs(algebra))
            for order, tilting in assembled:
                assert char_tilting(algebra, order).module == tilting

    @pytest.mark.parametrize('n', [2, 3, 4, 5, 6, 7])
    def test_round_trip_through_tilting(self, n):
        from nakayama import all_algebras
        from gluing import admissible_from_tilting, admissible_sequences, admissible_validate_assemble
        from qhs import order_from_tilting
        from tilting import enumerate_tilting
        for algebra in all_algebras(n):
            tiltings = enumerate_tilting(algebra)
            sequences = {}
            for tilting in tiltings:
                sequence = admissible_from_tilting(algebra, tilting)
                order, module = admissible_validate_assemble(algebra, sequence)
                assert module == tilting
                assert order == order_from_tilting(algebra, tilting)[1]
                sequences[sequence] = tilting
            assert len(sequences) == len(tiltings)
            assert set(sequences) == set(admissible_sequences(algebra))

    def test_single_tree(self):
        from nakayama import path_algebra, regular_module
        from gluing import admissible_from_tilting, single_tree
        from trees import right_comb
        algebra = path_algebra(4)
        assert single_tree(admissible_from_tilting(algebra, regular_module(algebra))) == right_comb(1, 4)

    def test_single_tree_needs_one_block(self, read_fixture):
        from gluing import single_tree
        from errors import NotATree
        with pytest.raises(NotATree):
            single_tree(_sequence(read_fixture))

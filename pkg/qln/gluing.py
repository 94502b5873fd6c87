"""
Nodal gluing of quadratic linear Nakayama algebras.

Every relation vertex is a node: the algebra splits there into a left and a
right part sharing that vertex. Cutting at a minimal set of nodes leaves
path blocks (no relations) and bang blocks (all interior relations).
Quasi-hereditary structures glue blockwise, subject to orientation
conditions at the cuts.
"""

import itertools
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Tuple

from errors import InadmissibleSequence, NotATree, RangeMismatch
from nakayama import AlgebraSpec, BasicModule, IntervalModule, restrict_to_range
from poset import PartialOrder
from qhs import LabeledTilting, order_from_tilting
from trees import (
    BinaryTree,
    all_trees,
    bang_labels,
    bang_order,
    bang_structures,
    tilting_to_tree,
    tree_labels,
    tree_to_order,
)

PATH = 'path'
BANG = 'bang'


@dataclass(frozen=True)
class Block:
    kind: str
    lo: int
    hi: int

    def contains(self, vertex: int) -> bool:
        return self.lo <= vertex <= self.hi

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind, 'range': [self.lo, self.hi]}

    def __str__(self) -> str:
        return f"{self.kind}[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[Block, ...]
    cuts: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'blocks': [block.to_dict() for block in self.blocks],
            'cuts': list(self.cuts),
        }

    def __str__(self) -> str:
        return ' '.join(str(block) for block in self.blocks)


def block_decomposition(algebra: AlgebraSpec) -> BlockDecomposition:
    """Cut at the ends of every maximal run of consecutive relation vertices."""
    runs: List[List[int]] = []
    for r in algebra.relations:
        if runs and runs[-1][-1] == r - 1:
            runs[-1].append(r)
        else:
            runs.append([r])
    cuts = []
    bang_ranges = set()
    for run in runs:
        if len(run) >= 2:
            cuts.extend([run[0], run[-1]])
            bang_ranges.add((run[0], run[-1]))
        else:
            cuts.append(run[0])
    bounds = [1] + cuts + [algebra.n]
    blocks = []
    for lo, hi in zip(bounds, bounds[1:]):
        if lo == hi:
            # n = 1
            continue
        blocks.append(Block(BANG if (lo, hi) in bang_ranges else PATH, lo, hi))
    if not blocks:
        blocks.append(Block(PATH, 1, algebra.n))
    return BlockDecomposition(tuple(blocks), tuple(cuts))


def glue_orders(left: PartialOrder, right: PartialOrder) -> PartialOrder:
    """Transitive closure of two orders sharing exactly one vertex."""
    if left.hi != right.lo:
        raise RangeMismatch(f"[{left.lo},{left.hi}] and [{right.lo},{right.hi}] do not meet in one vertex")
    return left.union(right)


def restrict_order(order: PartialOrder, lo: int, hi: int) -> PartialOrder:
    return order.restrict(lo, hi)


def _rises_into(order: PartialOrder, vertex: int) -> bool:
    """vertex-1 below vertex, i.e. the arrow into the cut points upwards."""
    return order.lo < vertex and order.lt(vertex - 1, vertex)


def _rises_out_of(order: PartialOrder, vertex: int) -> bool:
    """vertex below vertex+1."""
    return vertex < order.hi and order.lt(vertex, vertex + 1)


def gluing_conditions(left: PartialOrder, right: PartialOrder, vertex: int) -> Tuple[bool, bool]:
    """((Delta) holds, (nabla) holds) at the node ``vertex`` between two chain orders."""
    delta_ok = not _rises_into(left, vertex) or _rises_out_of(right, vertex)
    falls_back = vertex < right.hi and right.lt(vertex + 1, vertex)
    nabla_ok = not falls_back or (left.lo < vertex and left.lt(vertex, vertex - 1))
    return delta_ok, nabla_ok


# ---------------------------------------------------------------------------
# admissible sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalStructure:
    """A binary tree for a path block, an apex for a bang block."""

    block: Block
    tree: Optional[BinaryTree] = None
    apex: Optional[int] = None

    def order(self) -> PartialOrder:
        if self.block.kind == PATH:
            return tree_to_order(self.tree)
        return bang_order(self.block.lo, self.block.hi, self.apex)

    def labels(self) -> Dict[int, IntervalModule]:
        if self.block.kind == PATH:
            return tree_labels(self.tree)
        return bang_labels(self.block.lo, self.block.hi, self.apex)

    def tilting(self) -> BasicModule:
        return BasicModule.of(self.labels().values())

    def to_dict(self) -> Dict[str, Any]:
        data = self.block.to_dict()
        if self.block.kind == PATH:
            data['tree'] = self.tree.to_dict()
        else:
            data['apex'] = self.apex
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LocalStructure':
        lo, hi = data['range']
        block = Block(data['kind'], int(lo), int(hi))
        if block.kind == PATH:
            return cls(block, tree=BinaryTree.from_dict(data['tree']))
        return cls(block, apex=int(data['apex']))


@dataclass(frozen=True)
class AdmissibleSequence:
    locals: Tuple[LocalStructure, ...]

    @property
    def decomposition(self) -> Tuple[Block, ...]:
        return tuple(local.block for local in self.locals)

    def to_list(self) -> List[Dict[str, Any]]:
        return [local.to_dict() for local in self.locals]

    @classmethod
    def from_list(cls, items: List[Dict[str, Any]]) -> 'AdmissibleSequence':
        return cls(tuple(LocalStructure.from_dict(item) for item in items))


def bang_case(left: Optional[PartialOrder], block: Block, apex: int,
              right: Optional[PartialOrder]) -> Optional[str]:
    """
    Which of the cases (i), (ii), (iii) a bang block is in, or None.

    An absent neighbour satisfies every clause about it; ties go to (i) at
    the left end and (iii) at the right end.
    """
    rises_in = None if left is None else _rises_into(left, block.lo)
    rises_out = None if right is None else _rises_out_of(right, block.hi)
    if apex == block.lo and rises_in is not False and rises_out is not False:
        return 'i'
    if apex == block.hi and rises_in is not True and rises_out is not True:
        return 'iii'
    if rises_in is not True and rises_out is not False:
        return 'ii'
    return None


def validate_sequence(algebra: AlgebraSpec, sequence: AdmissibleSequence) -> None:
    """Raise InadmissibleSequence naming the first violated clause."""
    expected = block_decomposition(algebra).blocks
    if sequence.decomposition != expected:
        raise InadmissibleSequence(
            'blocks', f"expected {' '.join(map(str, expected))}, "
                      f"got {' '.join(map(str, sequence.decomposition))}"
        )
    orders = []
    for local in sequence.locals:
        block = local.block
        if block.kind == PATH:
            if local.tree is None:
                raise InadmissibleSequence('A0', f"path block {block} needs a tree")
            if (local.tree.lo, local.tree.hi) != (block.lo, block.hi) or not local.tree.is_in_order():
                raise InadmissibleSequence('A0', f"tree labels {local.tree.in_order()} do not match {block}")
        else:
            if local.apex is None or not block.contains(local.apex):
                raise InadmissibleSequence('A0', f"apex {local.apex} outside {block}")
        orders.append(local.order())

    for index, local in enumerate(sequence.locals):
        left = orders[index - 1] if index > 0 else None
        right = orders[index + 1] if index + 1 < len(orders) else None
        if local.block.kind == BANG:
            if bang_case(left, local.block, local.apex, right) is None:
                raise InadmissibleSequence(
                    'A1', f"apex {local.apex} of {local.block} does not fit its neighbours"
                )
        elif right is not None and sequence.locals[index + 1].block.kind == PATH:
            cut = local.block.hi
            if _rises_into(orders[index], cut) and not _rises_out_of(right, cut):
                raise InadmissibleSequence('A2', f"{cut - 1} < {cut} on the left but not {cut} < {cut + 1} on the right")


def admissible_validate_assemble(algebra: AlgebraSpec,
                                 sequence: AdmissibleSequence) -> Tuple[PartialOrder, BasicModule]:
    """Validate a sequence and glue it into a global order and tilting module."""
    validate_sequence(algebra, sequence)
    order = None
    for local in sequence.locals:
        order = local.order() if order is None else glue_orders(order, local.order())

    fused: Dict[int, IntervalModule] = {}
    for local in sequence.locals:
        for label, summand in local.labels().items():
            if label not in fused:
                fused[label] = summand
                continue
            # a cut label: one side is the simple S(cut)
            earlier = fused[label]
            merged = IntervalModule(min(earlier.top, summand.top), max(earlier.socle, summand.socle))
            if not algebra.is_valid(merged):
                raise InadmissibleSequence('fusion', f"{earlier} and {summand} do not fuse at {label}")
            fused[label] = merged
    tilting = BasicModule.of(fused.values())

    for local in sequence.locals:
        block = local.block
        restricted = {
            label: restrict_to_range(fused[label], block.lo, block.hi)
            for label in range(block.lo, block.hi + 1)
        }
        if restricted != local.labels():
            raise InadmissibleSequence('fusion', f"fused module does not restrict back to {block}")
    return order, tilting


def local_tiltings(labeled: LabeledTilting, decomposition: BlockDecomposition) -> List[Dict[int, IntervalModule]]:
    """T_i = T(j) restricted to block i, for the labels j in block i."""
    return [
        {j: restrict_to_range(labeled.of(j), block.lo, block.hi) for j in range(block.lo, block.hi + 1)}
        for block in decomposition.blocks
    ]


def admissible_from_tilting(algebra: AlgebraSpec, tilting: BasicModule) -> AdmissibleSequence:
    labeled, _ = order_from_tilting(algebra, tilting)
    decomposition = block_decomposition(algebra)
    locals_ = []
    for block, labels in zip(decomposition.blocks, local_tiltings(labeled, decomposition)):
        module = BasicModule.of(labels.values())
        if block.kind == PATH:
            locals_.append(LocalStructure(block, tree=tilting_to_tree(block.lo, block.hi, module)))
        else:
            locals_.append(LocalStructure(block, apex=bang_structures(block.lo, block.hi, module).apex))
    return AdmissibleSequence(tuple(locals_))


def candidate_sequences(algebra: AlgebraSpec) -> Iterator[AdmissibleSequence]:
    """Every choice of one local structure per block, admissible or not."""
    options = []
    for block in block_decomposition(algebra).blocks:
        if block.kind == PATH:
            options.append([LocalStructure(block, tree=t) for t in all_trees(block.lo, block.hi)])
        else:
            options.append([LocalStructure(block, apex=a) for a in range(block.lo, block.hi + 1)])
    for choice in itertools.product(*options):
        yield AdmissibleSequence(tuple(choice))


def admissible_sequences(algebra: AlgebraSpec) -> List[AdmissibleSequence]:
    result = []
    for sequence in candidate_sequences(algebra):
        try:
            validate_sequence(algebra, sequence)
        except InadmissibleSequence:
            continue
        result.append(sequence)
    return result


def single_tree(sequence: AdmissibleSequence) -> BinaryTree:
    """The tree of a one-block path sequence."""
    if len(sequence.locals) != 1 or sequence.locals[0].tree is None:
        raise NotATree("sequence has more than one block")
    return sequence.locals[0].tree

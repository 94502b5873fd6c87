"""
Local structures of single blocks.

A path block [s, t] has its quasi-hereditary structures in bijection with
binary trees labeled in-order by s..t: the Hasse diagram of the minimal
adapted order is the tree (parent above child) and T(j) is the interval of
labels below j. A radical-square-zero ("bang") block has one structure per
apex vertex i, the V-shaped order with minimum i.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple

from errors import ApexOutOfRange, NotATree, NotQuasiHereditary, NotTilting, RangeMismatch
from homological import is_tilting
from nakayama import BasicModule, IntervalModule, make_algebra, path_algebra, radical_square_zero
from poset import PartialOrder


@dataclass(frozen=True)
class BinaryTree:
    """A node with in-order label and optional children."""

    label: int
    left: Optional['BinaryTree'] = None
    right: Optional['BinaryTree'] = None

    @property
    def lo(self) -> int:
        return self.left.lo if self.left else self.label

    @property
    def hi(self) -> int:
        return self.right.hi if self.right else self.label

    def in_order(self) -> List[int]:
        left = self.left.in_order() if self.left else []
        right = self.right.in_order() if self.right else []
        return left + [self.label] + right

    def nodes(self) -> Iterator['BinaryTree']:
        yield self
        if self.left:
            yield from self.left.nodes()
        if self.right:
            yield from self.right.nodes()

    def __len__(self) -> int:
        return sum(1 for _ in self.nodes())

    def edges(self) -> List[Tuple[int, int]]:
        """(parent, child) pairs."""
        return sorted(
            (node.label, child.label)
            for node in self.nodes()
            for child in (node.left, node.right) if child
        )

    def is_in_order(self) -> bool:
        return self.in_order() == list(range(self.lo, self.hi + 1))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'label': self.label}
        if self.left:
            data['left'] = self.left.to_dict()
        if self.right:
            data['right'] = self.right.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'BinaryTree':
        return cls(
            label=int(data['label']),
            left=cls.from_dict(data['left']) if data.get('left') else None,
            right=cls.from_dict(data['right']) if data.get('right') else None,
        )


def all_trees(lo: int, hi: int) -> Iterator[BinaryTree]:
    """Every binary tree on the in-order labels lo..hi."""
    if lo > hi:
        return
    for root in range(lo, hi + 1):
        lefts = list(all_trees(lo, root - 1)) or [None]
        rights = list(all_trees(root + 1, hi)) or [None]
        for left in lefts:
            for right in rights:
                yield BinaryTree(root, left, right)


def right_comb(lo: int, hi: int) -> BinaryTree:
    """The tree of the regular module: every node has only a right child."""
    tree = None
    for label in range(hi, lo - 1, -1):
        tree = BinaryTree(label, None, tree)
    return tree


def _check_labels(tree: BinaryTree, lo: int, hi: int) -> None:
    if (tree.lo, tree.hi) != (lo, hi) or not tree.is_in_order():
        raise NotATree(f"tree labels {tree.in_order()} are not the in-order range [{lo},{hi}]")


def tree_to_order(tree: BinaryTree) -> PartialOrder:
    """Covers parent > child."""
    if not tree.is_in_order():
        raise NotATree(f"tree labels {tree.in_order()} are not in in-order position")
    return PartialOrder.from_covers(tree.lo, tree.hi, tree.edges())


def order_to_tree(order: PartialOrder) -> BinaryTree:
    """Read a binary tree off a Hasse diagram rooted at the maximum."""
    children: Dict[int, List[int]] = {x: [] for x in order.vertices()}
    parents: Dict[int, List[int]] = {x: [] for x in order.vertices()}
    for greater, lesser in order.covers():
        children[greater].append(lesser)
        parents[lesser].append(greater)
    roots = [x for x in order.vertices() if not parents[x]]
    if len(roots) != 1 or any(len(p) > 1 for p in parents.values()):
        raise NotATree(f"Hasse diagram {order} is not a rooted tree")

    def build(label: int) -> BinaryTree:
        below = children[label]
        left = [c for c in below if c < label]
        right = [c for c in below if c > label]
        if len(left) > 1 or len(right) > 1:
            raise NotATree(f"vertex {label} has more than one child on a side")
        return BinaryTree(
            label,
            build(left[0]) if left else None,
            build(right[0]) if right else None,
        )

    tree = build(roots[0])
    _check_labels(tree, order.lo, order.hi)
    return tree


def tree_order_bijection(lo: int, hi: int, value):
    """BinaryTree -> PartialOrder or PartialOrder -> BinaryTree on the path block [lo, hi]."""
    if isinstance(value, BinaryTree):
        _check_labels(value, lo, hi)
        return tree_to_order(value)
    if (value.lo, value.hi) != (lo, hi):
        raise RangeMismatch(f"order on [{value.lo},{value.hi}] given for block [{lo},{hi}]")
    return order_to_tree(value)


def tree_labels(tree: BinaryTree) -> Dict[int, IntervalModule]:
    """T(j) = interval of the subtree rooted at j."""
    return {node.label: IntervalModule(node.lo, node.hi) for node in tree.nodes()}


def tree_to_tilting(tree: BinaryTree) -> BasicModule:
    return BasicModule.of(tree_labels(tree).values())


def tilting_to_tree(lo: int, hi: int, tilting: BasicModule) -> BinaryTree:
    """
    Grow a forest bottom-up, processing summands by length.

    Each summand must add exactly one new vertex; that vertex becomes the
    parent of the component roots lying inside the summand.
    """
    block = path_algebra(hi - lo + 1)
    if not is_tilting(block, tilting.shift(1 - lo)):
        raise NotTilting(f"{tilting} is not tilting over the path block [{lo},{hi}]")
    placed = 0
    roots: Dict[int, BinaryTree] = {}
    for summand in sorted(tilting, key=lambda m: (m.length, m.top)):
        fresh = [v for v in summand.vertices() if not placed >> v & 1]
        if len(fresh) != 1:
            raise NotTilting(f"{summand} does not add exactly one node")
        label = fresh[0]
        covered = sorted(r for r in roots if summand.contains(r))
        left = [roots.pop(r) for r in covered if r < label]
        right = [roots.pop(r) for r in covered if r > label]
        if len(left) > 1 or len(right) > 1:
            raise NotTilting(f"{summand} covers more than one component on a side")
        roots[label] = BinaryTree(label, left[0] if left else None, right[0] if right else None)
        placed |= 1 << label
    if len(roots) != 1:
        raise NotTilting(f"{tilting} leaves {len(roots)} components")
    tree = next(iter(roots.values()))
    if tree_to_tilting(tree) != tilting:
        raise NotTilting(f"{tilting} is not the module of the tree it builds")
    return tree


def tree_tilting_bijection(lo: int, hi: int, value):
    """BinaryTree -> BasicModule or BasicModule -> BinaryTree on the path block [lo, hi]."""
    if isinstance(value, BinaryTree):
        _check_labels(value, lo, hi)
        return tree_to_tilting(value)
    return tilting_to_tree(lo, hi, value)


# ---------------------------------------------------------------------------
# radical-square-zero blocks
# ---------------------------------------------------------------------------

class BangStructure(NamedTuple):
    """The structure of a bang block determined by its apex."""

    apex: int
    order: PartialOrder
    labels: Dict[int, IntervalModule]

    @property
    def tilting(self) -> BasicModule:
        return BasicModule.of(self.labels.values())


def bang_order(lo: int, hi: int, apex: int) -> PartialOrder:
    """V-shaped order with minimum ``apex``."""
    if not lo <= apex <= hi:
        raise ApexOutOfRange(f"apex {apex} outside [{lo},{hi}]")
    covers = [(j, j + 1) for j in range(lo, apex)] + [(j, j - 1) for j in range(apex + 1, hi + 1)]
    return PartialOrder.from_covers(lo, hi, covers)


def bang_labels(lo: int, hi: int, apex: int) -> Dict[int, IntervalModule]:
    """T(j) = P(j) left of the apex, S(apex), P(j-1) right of it."""
    if not lo <= apex <= hi:
        raise ApexOutOfRange(f"apex {apex} outside [{lo},{hi}]")
    labels = {}
    for j in range(lo, hi + 1):
        if j < apex:
            labels[j] = IntervalModule(j, j + 1)
        elif j == apex:
            labels[j] = IntervalModule(j, j)
        else:
            labels[j] = IntervalModule(j - 1, j)
    return labels


def bang_structures(lo: int, hi: int, value) -> BangStructure:
    """Complete a bang block structure from an apex, a tilting module or an order."""
    if isinstance(value, int):
        apex = value
    elif isinstance(value, BasicModule):
        block = radical_square_zero(hi - lo + 1) if hi - lo >= 2 else make_algebra(hi - lo + 1)
        if not is_tilting(block, value.shift(1 - lo)):
            raise NotTilting(f"{value} is not tilting over the bang block [{lo},{hi}]")
        simples = [m.top for m in value if m.is_simple]
        if len(simples) != 1:
            raise NotTilting(f"{value} has {len(simples)} simple summands")
        apex = simples[0]
    elif isinstance(value, PartialOrder):
        minimal = value.minimal()
        if (value.lo, value.hi) != (lo, hi) or len(minimal) != 1:
            raise NotQuasiHereditary(f"order {value} is not V-shaped on [{lo},{hi}]")
        apex = minimal[0]
        if bang_order(lo, hi, apex) != value:
            raise NotQuasiHereditary(f"order {value} is not V-shaped on [{lo},{hi}]")
    else:
        raise TypeError(f"cannot read a bang structure from {type(value).__name__}")
    structure = BangStructure(apex, bang_order(lo, hi, apex), bang_labels(lo, hi, apex))
    if isinstance(value, BasicModule) and structure.tilting != value:
        raise NotTilting(f"{value} is not the tilting module of apex {apex}")
    return structure

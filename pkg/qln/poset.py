"""
Partial orders on a range of vertices [lo, hi].

``below[x - lo]`` is the bitmask (bit y for vertex y) of the elements
strictly below x. Orders are closed with networkx over the relation graph
(arrows from greater to lesser); Hasse covers are its transitive reduction.
"""

import itertools
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from errors import NotAPartialOrder, RangeMismatch


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class PartialOrder:
    """A strict partial order, stored by its down-sets."""

    __slots__ = ('lo', 'hi', 'below', '_covers')

    def __init__(self, lo: int, hi: int, below: Tuple[int, ...]):
        self.lo = lo
        self.hi = hi
        self.below = below
        self._covers: Optional[List[Tuple[int, int]]] = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_pairs(cls, lo: int, hi: int, pairs: Iterable[Tuple[int, int]]) -> 'PartialOrder':
        """Transitive closure of ``lesser < greater`` pairs."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(lo, hi + 1))
        for lesser, greater in pairs:
            if not (lo <= lesser <= hi and lo <= greater <= hi):
                raise RangeMismatch(f"pair ({lesser}, {greater}) outside [{lo},{hi}]")
            if lesser == greater:
                raise NotAPartialOrder(f"reflexive pair ({lesser}, {greater})")
            graph.add_edge(greater, lesser)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise NotAPartialOrder(f"relation has a cycle through {cycle[0][0]}")
        closure = nx.transitive_closure_dag(graph)
        return cls(lo, hi, tuple(
            sum(1 << y for y in closure.successors(x)) for x in range(lo, hi + 1)
        ))

    @classmethod
    def from_covers(cls, lo: int, hi: int, covers: Iterable[Tuple[int, int]]) -> 'PartialOrder':
        """Build from (greater, lesser) cover pairs."""
        return cls.from_pairs(lo, hi, ((lesser, greater) for greater, lesser in covers))

    @classmethod
    def from_total_order(cls, sequence: Sequence[int]) -> 'PartialOrder':
        """The chain sequence[0] < sequence[1] < ..."""
        lo, hi = min(sequence), max(sequence)
        if sorted(sequence) != list(range(lo, hi + 1)):
            raise RangeMismatch("a total order must list every vertex of its range once")
        down = {}
        seen = 0
        for x in sequence:
            down[x] = seen
            seen |= 1 << x
        return cls(lo, hi, tuple(down[x] for x in range(lo, hi + 1)))

    @classmethod
    def antichain(cls, lo: int, hi: int) -> 'PartialOrder':
        return cls(lo, hi, (0,) * (hi - lo + 1))

    @classmethod
    def total_orders(cls, lo: int, hi: int) -> Iterator['PartialOrder']:
        for sequence in itertools.permutations(range(lo, hi + 1)):
            yield cls.from_total_order(sequence)

    # -- queries -----------------------------------------------------------

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    def down(self, x: int) -> int:
        if not self.lo <= x <= self.hi:
            raise RangeMismatch(f"vertex {x} outside [{self.lo},{self.hi}]")
        return self.below[x - self.lo]

    def lt(self, x: int, y: int) -> bool:
        """x strictly below y."""
        return bool(self.down(y) >> x & 1)

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.lt(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def pairs(self) -> List[Tuple[int, int]]:
        """All strict (lesser, greater) pairs."""
        return [(y, x) for x in self.vertices() for y in _bits(self.down(x))]

    def covers(self) -> List[Tuple[int, int]]:
        """Hasse covers as (greater, lesser), sorted."""
        if self._covers is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(self.vertices())
            graph.add_edges_from((greater, lesser) for lesser, greater in self.pairs())
            self._covers = sorted(nx.transitive_reduction(graph).edges())
        return list(self._covers)

    def minimal(self) -> List[int]:
        return [x for x in self.vertices() if not self.down(x)]

    def maximal(self) -> List[int]:
        return [x for x in self.vertices()
                if not any(self.lt(x, y) for y in self.vertices())]

    def is_total(self) -> bool:
        return all(self.comparable(x, y) for x, y in itertools.combinations(self.vertices(), 2))

    def is_subrelation_of(self, other: 'PartialOrder') -> bool:
        if (self.lo, self.hi) != (other.lo, other.hi):
            return False
        return all(mine & ~theirs == 0 for mine, theirs in zip(self.below, other.below))

    # -- derived orders ----------------------------------------------------

    def restrict(self, lo: int, hi: int) -> 'PartialOrder':
        """Induced order on [lo, hi]."""
        if not self.lo <= lo <= hi <= self.hi:
            raise RangeMismatch(f"[{lo},{hi}] is not inside [{self.lo},{self.hi}]")
        window = ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)
        return PartialOrder(lo, hi, tuple(self.down(x) & window for x in range(lo, hi + 1)))

    def shift(self, offset: int) -> 'PartialOrder':
        def moved(mask: int) -> int:
            return sum(1 << (y + offset) for y in _bits(mask))
        return PartialOrder(self.lo + offset, self.hi + offset, tuple(moved(m) for m in self.below))

    def union(self, other: 'PartialOrder') -> 'PartialOrder':
        """Transitive closure of both relations on the joint range."""
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        return PartialOrder.from_pairs(lo, hi, self.pairs() + other.pairs())

    # -- graphs ------------------------------------------------------------

    def hasse_graph(self) -> nx.DiGraph:
        """Hasse quiver, arrows from greater to lesser."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from(self.covers())
        return graph

    def hasse_is_tree(self) -> bool:
        return nx.is_tree(self.hasse_graph().to_undirected())

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialOrder):
            return NotImplemented
        return (self.lo, self.hi, self.below) == (other.lo, other.hi, other.below)

    def __hash__(self) -> int:
        return hash((self.lo, self.hi, self.below))

    def __lt__(self, other: 'PartialOrder') -> bool:
        return (self.lo, self.hi, self.covers()) < (other.lo, other.hi, other.covers())

    def __repr__(self) -> str:
        return f"PartialOrder([{self.lo},{self.hi}], {self})"

    def __str__(self) -> str:
        return ' '.join(f"{g}>{l}" for g, l in self.covers())

"""
Tilting modules: left approximations, mutation, enumeration and the tilting poset.

Mutation replaces a summand X of T by the other complement of T/X. The main
path finds that complement by scanning indecomposables against the Ext
tables; the cokernel of the minimal left approximation is available as an
independent cross-check (``QLN_CHECK_MUTATION``).
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

import networkx as nx

import config
from errors import MutationMismatch, NotMutable, NotTilting, SizeLimitExceeded
from homological import ext_table, is_tilting
from nakayama import (
    AlgebraSpec,
    BasicModule,
    IntervalModule,
    hom_dim,
    injective_cogenerator,
    regular_module,
)


class Approximation(NamedTuple):
    """Minimal left approximation X -> sum(targets)."""

    targets: BasicModule
    injective: bool


def min_left_approx(algebra: AlgebraSpec, module: IntervalModule,
                    others: BasicModule) -> Approximation:
    """Left add(others)-approximation of ``module`` with minimal target set."""
    receiving = [v for v in others if v != module and hom_dim(algebra, module, v)]
    targets = [
        v for v in receiving
        if not any(w != v and w.top >= v.top and w.socle >= v.socle for w in receiving)
    ]
    injective = any(v.socle == module.socle for v in targets)
    return Approximation(BasicModule.of(targets), injective)


def approximation_cokernel(algebra: AlgebraSpec, module: IntervalModule,
                           targets: BasicModule) -> List[IntervalModule]:
    """
    Decompose the cokernel of the canonical map module -> sum(targets).

    Ranks of path maps in the quotient are counted combinatorially and the
    interval multiplicities recovered by inclusion-exclusion.
    """
    summands = list(targets)
    a, b = module.top, module.socle
    n = algebra.n

    def image_support(vertex: int) -> FrozenSet[int]:
        # coordinates carrying the image of the module at this vertex
        if not a <= vertex <= b:
            return frozenset()
        return frozenset(i for i, v in enumerate(summands) if v.socle >= vertex)

    def rank(p: int, q: int) -> int:
        if p < 1 or q > n or p > q:
            return 0
        through = frozenset(i for i, v in enumerate(summands) if v.top <= p and q <= v.socle)
        image = image_support(q)
        return len(through) + (1 if image and not image <= through else 0) - (1 if image else 0)

    cokernel = []
    for top in range(1, n + 1):
        for socle in range(top, n + 1):
            multiplicity = (rank(top, socle) - rank(top - 1, socle)
                            - rank(top, socle + 1) + rank(top - 1, socle + 1))
            cokernel.extend([IntervalModule(top, socle)] * multiplicity)
    return cokernel


def complement_below(algebra: AlgebraSpec, tilting: BasicModule,
                     module: IntervalModule) -> Optional[IntervalModule]:
    """The complement Y != X of T/X with Ext^{>0}(X, Y) = 0, if any."""
    table = ext_table(algebra)
    rest = tilting.without(module)
    candidates = table.rigid_mask & table.ext_free[table.index[module]]
    for summand in rest:
        candidates &= table.compatible[table.index[summand]]
    candidates &= ~table.mask_of(tilting)
    found = table.members(candidates)
    if not found:
        return None
    # the complements below X form a chain; mutation takes its largest element
    largest = [y for y in found if not candidates & ~table.ext_free[table.index[y]]]
    if len(largest) != 1:
        raise MutationMismatch(
            f"complements {' '.join(map(str, found))} below {tilting} at {module} are not a chain"
        )
    return largest[0]


def left_mutation(algebra: AlgebraSpec, tilting: BasicModule,
                  module: IntervalModule) -> BasicModule:
    """mu_X(T): replace X by the complement below T."""
    if not is_tilting(algebra, tilting):
        raise NotTilting(f"{tilting} is not a tilting module over {algebra}")
    if module not in tilting:
        raise NotMutable(f"{module} is not a summand of {tilting}")
    rest = tilting.without(module)
    approximation = min_left_approx(algebra, module, rest)
    replacement = complement_below(algebra, tilting, module)
    if approximation.injective != (replacement is not None):
        raise MutationMismatch(
            f"approximation of {module} in {tilting} is "
            f"{'injective' if approximation.injective else 'not injective'} "
            f"but the complement scan found {replacement}"
        )
    if replacement is None:
        raise NotMutable(f"{module} is not left mutable in {tilting}")
    if config.CHECK_MUTATION:
        cokernel = approximation_cokernel(algebra, module, approximation.targets)
        if replacement not in cokernel or not set(cokernel) <= set(rest.adding(replacement)):
            raise MutationMismatch(
                f"cokernel {' '.join(map(str, cokernel))} does not match complement {replacement}"
            )
    return rest.adding(replacement)


@dataclass(frozen=True)
class TiltPoset:
    """Tilting modules in breadth-first mutation order with their mutation edges."""

    elements: Tuple[BasicModule, ...]
    edges: Tuple[Tuple[int, int, IntervalModule], ...]
    maximum: int = 0

    def to_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.elements)))
        for source, target, module in self.edges:
            graph.add_edge(source, target, summand=module)
        return graph

    def order_graph(self, algebra: AlgebraSpec) -> nx.DiGraph:
        """Strict tilting order T > U as a DAG."""
        table = ext_table(algebra)
        masks = [table.mask_of(t) for t in self.elements]
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.elements)))
        for i, upper in enumerate(masks):
            for j, lower in enumerate(masks):
                if i != j and table.geq(upper, lower):
                    graph.add_edge(i, j)
        return graph

    def hasse_edges_from_order(self, algebra: AlgebraSpec) -> FrozenSet[Tuple[int, int]]:
        """Transitive reduction of tilt_geq."""
        reduced = nx.transitive_reduction(self.order_graph(algebra))
        return frozenset(reduced.edges())

    def mutation_edges(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((source, target) for source, target, _ in self.edges)


def tilt_geq(algebra: AlgebraSpec, upper: BasicModule, lower: BasicModule) -> bool:
    """T >= U iff Ext^{>0}(T, U) = 0."""
    table = ext_table(algebra)
    return table.geq(table.mask_of(upper), table.mask_of(lower))


@lru_cache(maxsize=None)
def tilt_hasse(algebra: AlgebraSpec) -> TiltPoset:
    """Breadth-first closure of left mutations from the regular module."""
    start = regular_module(algebra)
    seen: Dict[BasicModule, int] = {start: 0}
    elements: List[BasicModule] = [start]
    edges: List[Tuple[int, int, IntervalModule]] = []
    queue = deque([start])
    while queue:
        tilting = queue.popleft()
        for module in tilting:
            try:
                mutated = left_mutation(algebra, tilting, module)
            except NotMutable:
                continue
            if mutated not in seen:
                seen[mutated] = len(elements)
                elements.append(mutated)
                queue.append(mutated)
            edges.append((seen[tilting], seen[mutated], module))
    config.log('Tilt', f"{algebra.label}: {len(elements)} tilting modules, {len(edges)} mutations")
    return TiltPoset(tuple(elements), tuple(edges))


def _exhaustive_search(algebra: AlgebraSpec) -> List[BasicModule]:
    table = ext_table(algebra)
    n = algebra.n
    found = []

    def extend(chosen: int, candidates: int, size: int) -> None:
        if size == n:
            found.append(BasicModule(tuple(table.members(chosen))))
            return
        if bin(candidates).count('1') < n - size:
            return
        remaining = candidates
        while remaining:
            low = remaining & -remaining
            i = low.bit_length() - 1
            remaining ^= low
            # only later indices, so each subset is visited once
            extend(chosen | low, remaining & table.compatible[i], size + 1)

    extend(0, table.rigid_mask, 0)
    return found


def enumerate_tilting(algebra: AlgebraSpec, strategy: str = 'mutation') -> FrozenSet[BasicModule]:
    """All basic tilting modules, by mutation closure or by exhaustive search."""
    if strategy == 'mutation':
        return frozenset(tilt_hasse(algebra).elements)
    if strategy == 'exhaustive':
        if algebra.n > config.EXHAUSTIVE_MAX_N:
            raise SizeLimitExceeded(
                f"exhaustive search limited to n <= {config.EXHAUSTIVE_MAX_N}, got {algebra.n}"
            )
        return frozenset(_exhaustive_search(algebra))
    raise ValueError(f"unknown tilting strategy: {strategy}")


def tilting_with_summand(algebra: AlgebraSpec, module: IntervalModule) -> FrozenSet[BasicModule]:
    """tilt_X A: tilting modules having X as a summand."""
    return frozenset(t for t in enumerate_tilting(algebra) if module in t)


def tilting_without_summand(algebra: AlgebraSpec, module: IntervalModule) -> FrozenSet[BasicModule]:
    """tilt^X A: tilting modules avoiding X."""
    return frozenset(t for t in enumerate_tilting(algebra) if module not in t)


def extremes(algebra: AlgebraSpec) -> Tuple[BasicModule, BasicModule]:
    """(maximum, minimum) of the tilting poset."""
    return regular_module(algebra), injective_cogenerator(algebra)


"""
Quasi-hereditary structures.

A partial order on the vertices fixes standard modules Delta(i) (largest
quotient of P(i) with factors below i) and costandard modules nabla(i).
Because every module is uniserial, filtrations are forced: the top factor
of M[a,b] can only be Delta(a), the bottom factor only nabla(b).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Tuple

import config
from errors import ExtractionFailed, NotQuasiHereditary, NotTilting, RangeMismatch, SizeLimitExceeded
from homological import is_tilting
from nakayama import AlgebraSpec, BasicModule, IntervalModule, indecomposables
from poset import PartialOrder
from tilting import enumerate_tilting


@dataclass(frozen=True)
class StandardData:
    """Delta(i) = M[i, d_i] and nabla(i) = M[c_i, i], indexed from vertex 1."""

    delta: Tuple[IntervalModule, ...]
    nabla: Tuple[IntervalModule, ...]

    def delta_of(self, i: int) -> IntervalModule:
        return self.delta[i - 1]

    def nabla_of(self, i: int) -> IntervalModule:
        return self.nabla[i - 1]


@dataclass(frozen=True)
class LabeledTilting:
    """A tilting module with its vertex labeling x -> T(x)."""

    module: BasicModule
    labels: Tuple[IntervalModule, ...]

    def of(self, x: int) -> IntervalModule:
        return self.labels[x - 1]

    def to_dict(self) -> Dict[str, List[int]]:
        return {str(x): m.to_list() for x, m in enumerate(self.labels, start=1)}


class Filtration(NamedTuple):
    """Outcome of a greedy filtration: membership and factor multiplicities."""

    member: bool
    multiplicities: Tuple[int, ...]


def standard_costandard(algebra: AlgebraSpec, order: PartialOrder) -> StandardData:
    if (order.lo, order.hi) != (1, algebra.n):
        raise RangeMismatch(f"order on [{order.lo},{order.hi}] does not match the vertices of {algebra}")
    delta, nabla = [], []
    for i in range(1, algebra.n + 1):
        socle = algebra.projective(i).socle
        d = i
        while d < socle and order.leq(d + 1, i):
            d += 1
        top = algebra.injective(i).top
        c = i
        while c > top and order.leq(c - 1, i):
            c -= 1
        delta.append(IntervalModule(i, d))
        nabla.append(IntervalModule(c, i))
    return StandardData(tuple(delta), tuple(nabla))


def _multiplicities(n: int, factors: List[int]) -> Tuple[int, ...]:
    counts = [0] * n
    for x in factors:
        counts[x - 1] += 1
    return tuple(counts)


def f_delta_membership(algebra: AlgebraSpec, module: IntervalModule, std: StandardData,
                       allowed: Optional[Callable[[int], bool]] = None) -> Filtration:
    """Greedy top-down Delta-filtration of ``module``."""
    a, b = module.top, module.socle
    factors = []
    while a <= b:
        factor = std.delta_of(a)
        if factor.socle > b or (allowed is not None and not allowed(a)):
            return Filtration(False, _multiplicities(algebra.n, factors))
        factors.append(a)
        a = factor.socle + 1
    return Filtration(True, _multiplicities(algebra.n, factors))


def f_nabla_membership(algebra: AlgebraSpec, module: IntervalModule, std: StandardData,
                       allowed: Optional[Callable[[int], bool]] = None) -> Filtration:
    """Greedy bottom-up nabla-filtration of ``module``."""
    a, b = module.top, module.socle
    factors = []
    while a <= b:
        factor = std.nabla_of(b)
        if factor.top < a or (allowed is not None and not allowed(b)):
            return Filtration(False, _multiplicities(algebra.n, factors))
        factors.append(b)
        b = factor.top - 1
    return Filtration(True, _multiplicities(algebra.n, factors))


def is_quasi_hereditary(algebra: AlgebraSpec, order: PartialOrder,
                        std: Optional[StandardData] = None) -> bool:
    """(qh1) [Delta(i):S(i)] = 1 and (qh2) ker(P(i) -> Delta(i)) in F(Delta(> i))."""
    std = std or standard_costandard(algebra, order)
    for i in range(1, algebra.n + 1):
        standard = std.delta_of(i)
        assert standard.contains(i)
        socle = algebra.projective(i).socle
        if standard.socle == socle:
            continue
        kernel = IntervalModule(standard.socle + 1, socle)
        if not f_delta_membership(algebra, kernel, std, allowed=lambda x, i=i: order.lt(i, x)).member:
            return False
    return True


def _require_qh(algebra: AlgebraSpec, order: PartialOrder) -> StandardData:
    std = standard_costandard(algebra, order)
    if not is_quasi_hereditary(algebra, order, std):
        raise NotQuasiHereditary(f"order {str(order) or '(antichain)'} is not quasi-hereditary for {algebra}")
    return std


def char_tilting(algebra: AlgebraSpec, order: PartialOrder) -> LabeledTilting:
    """The characteristic tilting module: add T = F(Delta) and F(nabla)."""
    std = _require_qh(algebra, order)
    summands = [
        m for m in indecomposables(algebra)
        if f_delta_membership(algebra, m, std).member and f_nabla_membership(algebra, m, std).member
    ]
    labels = []
    for i in range(1, algebra.n + 1):
        # T(i) = M[c_i, d_i]: every factor is below i
        labeled = IntervalModule(std.nabla_of(i).top, std.delta_of(i).socle)
        if labeled not in summands:
            raise NotQuasiHereditary(f"T({i}) = {labeled} is not in F(Delta) and F(nabla)")
        labels.append(labeled)
    if len(summands) != algebra.n or len(set(labels)) != algebra.n:
        raise NotQuasiHereditary(f"characteristic module has {len(summands)} summands, expected {algebra.n}")
    return LabeledTilting(BasicModule.of(summands), tuple(labels))


def minimal_adapted_order(algebra: AlgebraSpec, order: PartialOrder,
                          std: Optional[StandardData] = None) -> PartialOrder:
    """Transitive closure of the factor relations of all Delta(j) and nabla(j)."""
    if std is None:
        std = _require_qh(algebra, order)
    pairs = []
    for j in range(1, algebra.n + 1):
        pairs.extend((i, j) for i in std.delta_of(j).vertices() if i != j)
        pairs.extend((i, j) for i in std.nabla_of(j).vertices() if i != j)
    return PartialOrder.from_pairs(1, algebra.n, pairs)


def orders_equivalent(algebra: AlgebraSpec, first: PartialOrder, second: PartialOrder) -> bool:
    return _require_qh(algebra, first).delta == _require_qh(algebra, second).delta


def labeling_is_adapted(labeled: LabeledTilting, order: PartialOrder) -> bool:
    """Every factor S(y) of T(x) satisfies y below or equal to x."""
    return all(
        labeled.of(x).contains(x) and all(order.leq(y, x) for y in labeled.of(x).vertices())
        for x in order.vertices()
    )


class Branch(NamedTuple):
    """One completed elimination: vertices in elimination order and the labels."""

    sequence: Tuple[int, ...]
    labels: Tuple[IntervalModule, ...]


def elimination_branches(algebra: AlgebraSpec, tilting: BasicModule,
                         limit: Optional[int] = None) -> Iterator[Branch]:
    """
    Depth-first search over elimination orders.

    A summand can be labeled x once x is the only vertex of its interval
    not yet eliminated; x is then eliminated.
    """
    summands = list(tilting)
    masks = [m.mask() for m in summands]
    n = algebra.n
    labels: List[Optional[IntervalModule]] = [None] * n
    sequence: List[int] = []
    produced = 0

    def search(removed: int, used: int) -> Iterator[Branch]:
        nonlocal produced
        if len(sequence) == n:
            produced += 1
            yield Branch(tuple(sequence), tuple(labels))
            return
        for idx, mask in enumerate(masks):
            if used >> idx & 1:
                continue
            remaining = mask & ~removed
            if not remaining or remaining & (remaining - 1):
                continue
            x = remaining.bit_length() - 1
            labels[x - 1] = summands[idx]
            sequence.append(x)
            yield from search(removed | remaining, used | (1 << idx))
            sequence.pop()
            labels[x - 1] = None
            if limit is not None and produced >= limit:
                return

    yield from search(0, 0)


def order_from_tilting(algebra: AlgebraSpec, tilting: BasicModule,
                       check_branches: bool = False) -> Tuple[LabeledTilting, PartialOrder]:
    """IS-labeling of a tilting module and its minimal adapted order."""
    if not is_tilting(algebra, tilting):
        raise NotTilting(f"{tilting} is not tilting over {algebra}")
    limit = config.BRANCH_LIMIT if check_branches else 1
    first: Optional[Tuple[Branch, StandardData]] = None
    for branch in elimination_branches(algebra, tilting, limit=limit):
        std = standard_costandard(algebra, PartialOrder.from_total_order(branch.sequence))
        if first is None:
            first = (branch, std)
        elif std != first[1]:
            raise ExtractionFailed(
                f"elimination orders {first[0].sequence} and {branch.sequence} "
                f"give different standard modules for {tilting}"
            )
    if first is None:
        raise ExtractionFailed(f"no elimination order completes for {tilting}")
    branch, std = first
    total = PartialOrder.from_total_order(branch.sequence)
    if not is_quasi_hereditary(algebra, total, std):
        raise ExtractionFailed(f"elimination order {branch.sequence} is not quasi-hereditary")
    return LabeledTilting(tilting, branch.labels), minimal_adapted_order(algebra, total, std)


@lru_cache(maxsize=None)
def enumerate_qhs(algebra: AlgebraSpec, strategy: str = 'via_tilting') -> FrozenSet[PartialOrder]:
    """Quasi-hereditary structures, each as its minimal adapted order."""
    if strategy == 'via_tilting':
        return frozenset(order_from_tilting(algebra, t)[1] for t in enumerate_tilting(algebra))
    if strategy == 'total_order_oracle':
        return frozenset(total_order_oracle(algebra).classes.values())
    raise ValueError(f"unknown qhs strategy: {strategy}")


class OracleResult(NamedTuple):
    """Quasi-hereditary total orders grouped by their standard modules."""

    qh_total_orders: int
    classes: Dict[Tuple[IntervalModule, ...], PartialOrder]


def total_order_oracle(algebra: AlgebraSpec) -> OracleResult:
    """Test every total order directly against the definitions."""
    if algebra.n > config.ORACLE_MAX_N:
        raise SizeLimitExceeded(f"total-order oracle limited to n <= {config.ORACLE_MAX_N}, got {algebra.n}")
    count = 0
    classes: Dict[Tuple[IntervalModule, ...], PartialOrder] = {}
    for order in PartialOrder.total_orders(1, algebra.n):
        std = standard_costandard(algebra, order)
        if not is_quasi_hereditary(algebra, order, std):
            continue
        count += 1
        if std.delta not in classes:
            classes[std.delta] = minimal_adapted_order(algebra, order, std)
    config.log('Oracle', f"{algebra.label}: {count} quasi-hereditary total orders, {len(classes)} classes")
    return OracleResult(count, classes)


def brauer_humphreys_holds(algebra: AlgebraSpec, order: PartialOrder) -> bool:
    """(P(i):Delta(j)) = [nabla(j):S(i)] and (I(i):nabla(j)) = [Delta(j):S(i)]."""
    std = _require_qh(algebra, order)
    for i in range(1, algebra.n + 1):
        projective = f_delta_membership(algebra, algebra.projective(i), std)
        injective = f_nabla_membership(algebra, algebra.injective(i), std)
        if not (projective.member and injective.member):
            return False
        for j in range(1, algebra.n + 1):
            if projective.multiplicities[j - 1] != int(std.nabla_of(j).contains(i)):
                return False
            if injective.multiplicities[j - 1] != int(std.delta_of(j).contains(i)):
                return False
    return True


def arrows_comparable(order: PartialOrder) -> bool:
    """Every arrow i -> i+1 joins comparable vertices."""
    return all(order.comparable(i, i + 1) for i in range(order.lo, order.hi))

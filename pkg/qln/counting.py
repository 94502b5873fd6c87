"""
Counting tilting modules and quasi-hereditary structures.

The tilting count of an algebra is computed recursively by peeling the
last run of relations and the free arrows after it; the decomposition of
tilt A into fibers T_l, ..., T_n is read off summands and cross-checked
against the costandard module of the sink.
"""

import math
import threading
from collections import Counter
from typing import Dict, NamedTuple, Optional, Tuple

import config
from errors import ClassificationFailed
from homological import homdims
from nakayama import AlgebraSpec, BasicModule, IntervalModule, make_algebra
from poset import PartialOrder
from qhs import enumerate_qhs, order_from_tilting, standard_costandard
from tilting import enumerate_tilting


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("Catalan numbers are defined for m >= 0")
    return math.comb(2 * m, m) // (m + 1)


class CountTable:
    """Memo of tilting counts keyed by canonical algebra label."""

    def __init__(self):
        self._counts: Dict[str, int] = {}
        self._lock = threading.Lock()

    def get(self, algebra: AlgebraSpec) -> Optional[int]:
        with self._lock:
            return self._counts.get(algebra.label)

    def put(self, algebra: AlgebraSpec, count: int) -> None:
        with self._lock:
            self._counts[algebra.label] = count

    def __len__(self) -> int:
        return len(self._counts)

    def items(self):
        with self._lock:
            return sorted(self._counts.items())


_default_table = CountTable()


class SuffixParse(NamedTuple):
    """A = base, then k+1 consecutive relations ending at l, then m free arrows."""

    last: int
    run_length: int
    free_arrows: int
    base: AlgebraSpec
    extended: AlgebraSpec


def parse_suffix(algebra: AlgebraSpec) -> SuffixParse:
    last = max(algebra.relv)
    start = last
    while start - 1 in algebra.relv:
        start -= 1
    k = last - start
    j = start - 1
    prefix = [r for r in algebra.relv if r < j]
    return SuffixParse(
        last=last,
        run_length=k,
        free_arrows=algebra.n - last,
        base=make_algebra(j, prefix),
        extended=make_algebra(j + 1, prefix),
    )


def count_tilt_recursive(algebra: AlgebraSpec, table: Optional[CountTable] = None) -> int:
    """|tilt A| = C_m |tilt A(-1,1)| + (C_{m+1} + (k-1) C_m) |tilt A|."""
    table = table if table is not None else _default_table
    cached = table.get(algebra)
    if cached is not None:
        return cached
    if algebra.is_path:
        result = catalan(algebra.n)
    else:
        parse = parse_suffix(algebra)
        m, k = parse.free_arrows, parse.run_length
        result = (catalan(m) * count_tilt_recursive(parse.extended, table)
                  + (catalan(m + 1) + (k - 1) * catalan(m)) * count_tilt_recursive(parse.base, table))
    table.put(algebra, result)
    return result


def last_relation(algebra: AlgebraSpec) -> int:
    """l = max relv, or 1 for the path algebra."""
    return max(algebra.relv) if algebra.relv else 1


def classify_decomposition(algebra: AlgebraSpec, tilting: BasicModule,
                           cross_check: bool = True) -> int:
    """The index i in [l, n] of the fiber T_i containing ``tilting``."""
    n = algebra.n
    if n < 2:
        raise ClassificationFailed("the decomposition needs a non-semisimple algebra")
    ell = last_relation(algebra)
    if IntervalModule(n, n) in tilting:
        index = n
    elif n - 1 in algebra.relv:
        index = n - 1
    else:
        found = [
            i for i in range(ell, n)
            if IntervalModule(i, n) in tilting and IntervalModule(i, n - 1) in tilting
        ]
        if len(found) != 1:
            raise ClassificationFailed(f"{tilting} matches fibers {found}")
        index = found[0]
    if cross_check:
        _, order = order_from_tilting(algebra, tilting)
        sink_costandard = standard_costandard(algebra, order).nabla_of(n)
        if sink_costandard != algebra.projective(index):
            raise ClassificationFailed(
                f"{tilting} classified to {index} but nabla({n}) = {sink_costandard}"
            )
    return index


def decomposition_fibers(algebra: AlgebraSpec) -> Dict[int, int]:
    """Fiber sizes |T_i| over all tilting modules."""
    counts = Counter(classify_decomposition(algebra, t) for t in enumerate_tilting(algebra))
    return dict(sorted(counts.items()))


def fiber_matches_order(algebra: AlgebraSpec, index: int, order: PartialOrder) -> bool:
    """Describe the fiber T_index through the minimal adapted order."""
    n = algebra.n
    ell = last_relation(algebra)
    if index == n:
        return n in order.minimal()
    if n - 1 in algebra.relv:
        return index == ell and n not in order.minimal()
    if index == ell:
        return n in order.maximal()
    return all(order.leq(index + j, n) for j in range(n - index)) and order.leq(n, index - 1)


def sink_restriction(algebra: AlgebraSpec, tilting: BasicModule) -> BasicModule:
    """T -> T restricted to [1, n-1] for T containing S(n)."""
    n = algebra.n
    return BasicModule.of(
        IntervalModule(m.top, min(m.socle, n - 1)) for m in tilting if m != IntervalModule(n, n)
    )


def sink_removed(algebra: AlgebraSpec) -> AlgebraSpec:
    """The algebra on [1, n-1]."""
    return make_algebra(algebra.n - 1, [r for r in algebra.relv if r < algebra.n - 1])


# ---------------------------------------------------------------------------
# nodal counting
# ---------------------------------------------------------------------------

class NodalCount(NamedTuple):
    count: int
    below_predecessor: int
    glued: AlgebraSpec
    # |qhs| of the base without its sink, when idim S(sink) <= 1
    sink_free: Optional[int]


def glue_nodal(base: AlgebraSpec, k: int, m: int) -> AlgebraSpec:
    """base, then k+1 relation vertices from its sink, then m free arrows."""
    b = base.n
    n = b + k + m
    relations = set(base.relv) | {v for v in range(b, b + k + 1) if 2 <= v <= n - 1}
    return make_algebra(n, relations)


def count_qhs_nodal(base: AlgebraSpec, k: int, m: int) -> NodalCount:
    """|qhs B| C_m + N (C_{m+1} + (k-1) C_m)."""
    if k < 0 or m < 1:
        raise ValueError("nodal gluing needs k >= 0 and m >= 1")
    b = base.n
    structures = enumerate_qhs(base)
    if b == 1:
        below = 1
    else:
        below = sum(1 for order in structures if order.lt(b, b - 1))
    sink_free = None
    if b >= 2 and homdims(base, base.simple(b))[1] <= 1:
        sink_free = len(enumerate_qhs(sink_removed(base)))
    count = len(structures) * catalan(m) + below * (catalan(m + 1) + (k - 1) * catalan(m))
    config.log('Count', f"nodal {base.label} k={k} m={m}: {count}")
    return NodalCount(count, below, glue_nodal(base, k, m), sink_free)


def lemma_subcounts(k: int, m: int) -> Tuple[int, int, int, int]:
    """
    (structures of A^!_{k+1} with 1 < 2, those with 2 < 1,
     structures of A_{m+1}, those with 1 < 2).
    """
    if k < 1 or m < 1:
        raise ValueError("sub-counts need k >= 1 and m >= 1")
    bang = make_algebra(k + 1, range(2, k + 1))
    bang_orders = enumerate_qhs(bang)
    path_orders = enumerate_qhs(make_algebra(m + 1))
    return (
        sum(1 for o in bang_orders if o.lt(1, 2)),
        sum(1 for o in bang_orders if o.lt(2, 1)),
        len(path_orders),
        sum(1 for o in path_orders if o.lt(1, 2)),
    )

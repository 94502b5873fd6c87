"""
Quadratic linear Nakayama algebras and their interval modules.

An algebra is the path algebra of 1 -> 2 -> ... -> n modulo length-two
relations; ``relv`` holds the middle vertex of every zero path. Every
indecomposable module is an interval M[a, b] with top S(a) and socle S(b),
so all Hom spaces are 0- or 1-dimensional and everything below is integer
combinatorics.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from errors import (
    DuplicateSummand,
    InvalidInterval,
    NonPositiveSize,
    RelationOutOfRange,
    VertexOutOfRange,
)


@dataclass(frozen=True, order=True)
class IntervalModule:
    """The uniserial module M[top, socle]."""

    top: int
    socle: int

    @property
    def length(self) -> int:
        return self.socle - self.top + 1

    @property
    def is_simple(self) -> bool:
        return self.top == self.socle

    def contains(self, vertex: int) -> bool:
        """Check if S(vertex) is a composition factor."""
        return self.top <= vertex <= self.socle

    def vertices(self) -> range:
        return range(self.top, self.socle + 1)

    def mask(self) -> int:
        """Composition factors as a bitmask (bit v for S(v))."""
        return ((1 << (self.socle + 1)) - 1) ^ ((1 << self.top) - 1)

    def shift(self, offset: int) -> 'IntervalModule':
        return IntervalModule(self.top + offset, self.socle + offset)

    def to_list(self) -> List[int]:
        return [self.top, self.socle]

    def __str__(self) -> str:
        return f"[{self.top},{self.socle}]"


def interval(a: int, b: int) -> IntervalModule:
    """Shorthand constructor for M[a, b]."""
    return IntervalModule(a, b)


@dataclass(frozen=True)
class AlgebraSpec:
    """A quadratic linear Nakayama algebra on vertices 1..n."""

    n: int
    relv: FrozenSet[int] = field(default_factory=frozenset)

    @property
    def relations(self) -> Tuple[int, ...]:
        return tuple(sorted(self.relv))

    @property
    def label(self) -> str:
        """Canonical inline form ``n:l1,l2``."""
        return f"{self.n}:" + ','.join(str(r) for r in self.relations)

    @property
    def is_path(self) -> bool:
        return not self.relv

    def is_valid(self, module: IntervalModule) -> bool:
        """Check if M[a,b] is nonzero: no relation strictly inside (a, b)."""
        a, b = module.top, module.socle
        if not (1 <= a <= b <= self.n):
            return False
        return not any(a < r < b for r in self.relv)

    def check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise VertexOutOfRange(f"vertex {i} outside [1,{self.n}]")

    def check_module(self, module: IntervalModule) -> None:
        if not self.is_valid(module):
            raise InvalidInterval(f"{module} is not a module over {self.label}")

    def projective(self, i: int) -> IntervalModule:
        """P(i) = M[i, e_i], e_i the first relation vertex after i (else n)."""
        self.check_vertex(i)
        after = [r for r in self.relv if r > i]
        return IntervalModule(i, min(after) if after else self.n)

    def injective(self, i: int) -> IntervalModule:
        """I(i): the maximal valid interval with socle i."""
        self.check_vertex(i)
        before = [r for r in self.relv if r < i]
        return IntervalModule(max(before) if before else 1, i)

    def simple(self, i: int) -> IntervalModule:
        self.check_vertex(i)
        return IntervalModule(i, i)

    def __str__(self) -> str:
        return self.label


def make_algebra(n: int, relv: Iterable[int] = ()) -> AlgebraSpec:
    """Validate and build an algebra."""
    if n < 1:
        raise NonPositiveSize(f"algebra needs at least one vertex, got {n}")
    relations = frozenset(relv)
    for r in sorted(relations):
        if not 2 <= r <= n - 1:
            raise RelationOutOfRange(f"relation vertex {r} outside [2,{n - 1}]")
    return AlgebraSpec(n, relations)


def path_algebra(n: int) -> AlgebraSpec:
    return make_algebra(n)


def radical_square_zero(n: int) -> AlgebraSpec:
    """A_n^!: every length-two path vanishes."""
    return make_algebra(n, range(2, n))


def all_algebras(n: int) -> Iterator[AlgebraSpec]:
    """Every relation set on n vertices, in a fixed order."""
    inner = list(range(2, n))
    for bits in range(1 << len(inner)):
        yield make_algebra(n, [r for k, r in enumerate(inner) if bits >> k & 1])


@dataclass(frozen=True, order=True)
class BasicModule:
    """A duplicate-free direct sum of interval modules, sorted by (top, socle)."""

    summands: Tuple[IntervalModule, ...]

    @classmethod
    def of(cls, summands: Iterable[IntervalModule]) -> 'BasicModule':
        items = list(summands)
        unique = sorted(set(items))
        if len(unique) != len(items):
            raise DuplicateSummand("basic modules cannot repeat a summand")
        return cls(tuple(unique))

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self) -> Iterator[IntervalModule]:
        return iter(self.summands)

    def __contains__(self, module: object) -> bool:
        return module in self.summands

    def without(self, module: IntervalModule) -> 'BasicModule':
        return BasicModule(tuple(m for m in self.summands if m != module))

    def adding(self, module: IntervalModule) -> 'BasicModule':
        return BasicModule.of(self.summands + (module,))

    def shift(self, offset: int) -> 'BasicModule':
        return BasicModule(tuple(m.shift(offset) for m in self.summands))

    def to_list(self) -> List[List[int]]:
        return [m.to_list() for m in self.summands]

    def __str__(self) -> str:
        return ' '.join(str(m) for m in self.summands)


def make_module(algebra: AlgebraSpec, intervals: Iterable[Tuple[int, int]]) -> BasicModule:
    """Build a basic module and check every summand lives over the algebra."""
    module = BasicModule.of(IntervalModule(a, b) for a, b in intervals)
    for summand in module:
        algebra.check_module(summand)
    return module


def indecomposables(algebra: AlgebraSpec) -> BasicModule:
    """All valid intervals."""
    return BasicModule(tuple(
        IntervalModule(a, b)
        for a in range(1, algebra.n + 1)
        for b in range(a, algebra.projective(a).socle + 1)
    ))


def structural_module(algebra: AlgebraSpec, kind: str, i: int) -> IntervalModule:
    """P(i), I(i) or S(i) by name."""
    builders = {
        'projective': algebra.projective,
        'injective': algebra.injective,
        'simple': algebra.simple,
    }
    if kind not in builders:
        raise ValueError(f"unknown module kind: {kind}")
    return builders[kind](i)


def regular_module(algebra: AlgebraSpec) -> BasicModule:
    """P(1) + ... + P(n)."""
    return BasicModule.of(algebra.projective(i) for i in range(1, algebra.n + 1))


def injective_cogenerator(algebra: AlgebraSpec) -> BasicModule:
    """I(1) + ... + I(n)."""
    return BasicModule.of(algebra.injective(i) for i in range(1, algebra.n + 1))


def hom_dim(algebra: AlgebraSpec, source: IntervalModule, target: IntervalModule) -> int:
    """dim Hom(M[a,b], M[c,d]) is 1 iff c <= a <= d <= b."""
    a, b = source.top, source.socle
    c, d = target.top, target.socle
    return 1 if c <= a <= d <= b else 0


def composite_nonzero(first: IntervalModule, second: IntervalModule, third: IntervalModule) -> bool:
    """Canonical M[a,b] -> M[c,d] -> M[e,f] composes to nonzero iff a <= f."""
    return first.top <= third.socle


def restrict_to_range(module: IntervalModule, start: int, stop: int) -> Optional[IntervalModule]:
    """Idempotent truncation of a summand to the vertices [start, stop]."""
    top, socle = max(module.top, start), min(module.socle, stop)
    if top > socle:
        return None
    return IntervalModule(top, socle)


def subalgebra(algebra: AlgebraSpec, start: int, stop: int) -> AlgebraSpec:
    """The algebra on [start, stop], renumbered to start at 1."""
    if not 1 <= start <= stop <= algebra.n:
        raise VertexOutOfRange(f"range [{start},{stop}] outside [1,{algebra.n}]")
    return make_algebra(
        stop - start + 1,
        [r - start + 1 for r in algebra.relv if start < r < stop],
    )

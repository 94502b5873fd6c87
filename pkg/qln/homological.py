"""
Minimal resolutions and Ext dimensions over quadratic linear Nakayama algebras.

Each term of a minimal projective resolution of an interval is a single
indecomposable projective, so Ext^k(M, N) is the cohomology of a complex of
0/1-dimensional spaces whose differentials are decided by the composite rule.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from nakayama import AlgebraSpec, BasicModule, IntervalModule, hom_dim, indecomposables


@dataclass(frozen=True)
class Resolution:
    """Indecomposable terms P_0, P_1, ... of a minimal (co)resolution."""

    terms: Tuple[IntervalModule, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, k: int) -> IntervalModule:
        return self.terms[k]

    @property
    def dimension(self) -> int:
        """Projective (or injective) dimension of the resolved module."""
        return len(self.terms) - 1

    def to_list(self) -> List[List[int]]:
        return [term.to_list() for term in self.terms]


@lru_cache(maxsize=None)
def syzygy_and_resolution(algebra: AlgebraSpec, module: IntervalModule) -> Resolution:
    """Minimal projective resolution; Omega M[a,b] = M[b+1, e_a] while b < e_a."""
    terms = []
    a, b = module.top, module.socle
    while True:
        cover = algebra.projective(a)
        terms.append(cover)
        if b >= cover.socle:
            break
        a, b = b + 1, cover.socle
    return Resolution(tuple(terms))


@lru_cache(maxsize=None)
def coresolution(algebra: AlgebraSpec, module: IntervalModule) -> Resolution:
    """Minimal injective coresolution; the cosyzygy of M[a,b] in I(b) = M[c,b] is M[c, a-1]."""
    terms = []
    a, b = module.top, module.socle
    while True:
        hull = algebra.injective(b)
        terms.append(hull)
        if a <= hull.top:
            break
        a, b = hull.top, a - 1
    return Resolution(tuple(terms))


def syzygy(algebra: AlgebraSpec, module: IntervalModule) -> Optional[IntervalModule]:
    """First syzygy, or None for projective modules."""
    resolution = syzygy_and_resolution(algebra, module)
    if len(resolution) == 1:
        return None
    cover = resolution[0]
    return IntervalModule(module.socle + 1, cover.socle)


def ext_dim(algebra: AlgebraSpec, source: IntervalModule, target: IntervalModule, k: int) -> int:
    """dim Ext^k(source, target)."""
    if k < 0:
        raise ValueError("Ext degree must be non-negative")
    terms = syzygy_and_resolution(algebra, source).terms

    def hom_term(j: int) -> int:
        if j < 0 or j >= len(terms):
            return 0
        return hom_dim(algebra, terms[j], target)

    def differential(j: int) -> int:
        # Hom(P_j, N) -> Hom(P_{j+1}, N) by precomposition
        if j < 0 or not (hom_term(j) and hom_term(j + 1)):
            return 0
        return 1 if terms[j + 1].top <= target.socle else 0

    return hom_term(k) - differential(k) - differential(k - 1)


def homdims(algebra: AlgebraSpec, module: IntervalModule) -> Tuple[int, int]:
    """(projective dimension, injective dimension)."""
    return (
        syzygy_and_resolution(algebra, module).dimension,
        coresolution(algebra, module).dimension,
    )


def ext_vanishes(algebra: AlgebraSpec, source: IntervalModule, target: IntervalModule) -> bool:
    """Ext^{>0}(source, target) = 0; degrees beyond the resolution vanish."""
    length = len(syzygy_and_resolution(algebra, source))
    return all(ext_dim(algebra, source, target, k) == 0 for k in range(1, length))


def global_dimension(algebra: AlgebraSpec) -> int:
    return max(
        syzygy_and_resolution(algebra, algebra.simple(i)).dimension
        for i in range(1, algebra.n + 1)
    )


class ExtTable:
    """
    Bitmask tables over the indecomposables of one algebra.

    ``ext_free[i]`` has bit j set when Ext^{>0}(M_i, M_j) = 0, ``compatible[i]``
    when the vanishing holds in both directions.
    """

    def __init__(self, algebra: AlgebraSpec):
        self.algebra = algebra
        self.modules: Tuple[IntervalModule, ...] = indecomposables(algebra).summands
        self.index: Dict[IntervalModule, int] = {m: i for i, m in enumerate(self.modules)}
        count = len(self.modules)
        ext_free = []
        for source in self.modules:
            mask = 0
            for j, target in enumerate(self.modules):
                if ext_vanishes(algebra, source, target):
                    mask |= 1 << j
            ext_free.append(mask)
        self.ext_free: Tuple[int, ...] = tuple(ext_free)
        self.compatible: Tuple[int, ...] = tuple(
            sum(1 << j for j in range(count)
                if ext_free[i] >> j & 1 and ext_free[j] >> i & 1)
            for i in range(count)
        )
        self.rigid_mask = sum(1 << i for i in range(count) if ext_free[i] >> i & 1)
        self.full_mask = (1 << count) - 1

    def mask_of(self, modules: Iterable[IntervalModule]) -> int:
        mask = 0
        for module in modules:
            mask |= 1 << self.index[module]
        return mask

    def members(self, mask: int) -> List[IntervalModule]:
        return [m for i, m in enumerate(self.modules) if mask >> i & 1]

    def is_rigid_mask(self, mask: int) -> bool:
        if mask & ~self.rigid_mask:
            return False
        remaining = mask
        while remaining:
            low = remaining & -remaining
            i = low.bit_length() - 1
            if mask & ~self.compatible[i]:
                return False
            remaining ^= low
        return True

    def geq(self, upper: int, lower: int) -> bool:
        """Ext^{>0}(upper, lower) = 0 summand-wise."""
        remaining = upper
        while remaining:
            low = remaining & -remaining
            if lower & ~self.ext_free[low.bit_length() - 1]:
                return False
            remaining ^= low
        return True


@lru_cache(maxsize=None)
def ext_table(algebra: AlgebraSpec) -> ExtTable:
    return ExtTable(algebra)


def is_rigid(algebra: AlgebraSpec, module: BasicModule) -> bool:
    """Ext^{>0}(T, T) = 0."""
    table = ext_table(algebra)
    if any(m not in table.index for m in module):
        return False
    return table.is_rigid_mask(table.mask_of(module))


def is_tilting(algebra: AlgebraSpec, module: BasicModule) -> bool:
    """Exactly n rigid summands."""
    return len(module) == algebra.n and is_rigid(algebra, module)

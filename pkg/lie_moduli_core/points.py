"""
Points of the moduli space: a family tag plus a canonical invariant tuple.
"""
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from .exact_math import normalize_projective, to_vector

# Four dimensional families and singletons.
ABELIAN = 'abelian'
D1 = 'd1'
D2_STAR = 'd2*'
D3_STAR = 'd3*'
D2_SHARP = 'd2#'
D1_SHARP = 'd1#'
D3 = 'd3'
D1_FAMILY = 'd1(l:m)'
D3_SMALL = 'd3(l:m)'
D3_BIG = 'd3(l:m:n)'

# Three dimensional ones.
D2 = 'd2'
D2_FAMILY = 'd2(l:m)'

FAMILIES_4 = (ABELIAN, D1, D2_STAR, D3_STAR, D2_SHARP, D1_SHARP, D3, D1_FAMILY, D3_SMALL, D3_BIG)
FAMILIES_3 = (ABELIAN, D1, D2, D2_FAMILY, D3)

# Families whose parameters are only defined up to permutation.
SYMMETRIC_FAMILIES = (D1_FAMILY, D3_BIG, D2_FAMILY)


def display_parameters(values: Sequence[Any], symmetric: bool = True) -> Tuple[int, ...]:
    """
    Coprime integer parameters for printing. Symmetric families list nonzero
    entries first by increasing size, positive before negative.
    """
    vec = to_vector(values)
    if symmetric:
        vec = tuple(sorted(vec, key=lambda x: (x == 0, abs(x), x < 0)))
    return normalize_projective(vec)


class ModuliPoint:
    """
    A point of the moduli space of Lie algebras of the given dimension.

    Two points are equal iff dimension, family and canonical invariants agree.
    `parameters` is a rational representative for display, when one exists.
    """

    def __init__(self,
                 family: str,
                 invariants: Sequence[Any] = (),
                 dimension: int = 4,
                 parameters: Optional[Sequence[int]] = None,
                 bs_name: str = '',
                 agaoka_name: str = ''):
        known = FAMILIES_4 if dimension == 4 else FAMILIES_3
        if family not in known:
            raise ValueError(f"Unknown family tag {family!r} for dimension {dimension}")
        self.family: str = family
        self.invariants: Tuple[Fraction, ...] = to_vector(invariants)
        self.dimension: int = dimension
        self.parameters: Optional[Tuple[int, ...]] = tuple(parameters) if parameters is not None else None
        self.bs_name: str = bs_name
        self.agaoka_name: str = agaoka_name

    @property
    def is_family(self) -> bool:
        return '(' in self.family

    @property
    def label(self) -> str:
        if not self.is_family:
            return self.family
        stem = self.family.split('(')[0]
        if self.parameters is not None:
            return f"{stem}(" + ':'.join(str(p) for p in self.parameters) + ")"
        return f"{stem}[" + ','.join(str(x) for x in self.invariants) + "]"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'dim': self.dimension,
            'family': self.family,
            'label': self.label,
            'invariants': [str(x) for x in self.invariants],
            'parameters': list(self.parameters) if self.parameters is not None else None,
            'bs_name': self.bs_name,
            'agaoka_name': self.agaoka_name,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuliPoint):
            return NotImplemented
        return (self.dimension, self.family, self.invariants) == (other.dimension, other.family, other.invariants)

    def __hash__(self) -> int:
        return hash((self.dimension, self.family, self.invariants))

    def __repr__(self) -> str:
        names = ', '.join(n for n in (self.bs_name, self.agaoka_name) if n)
        return f"ModuliPoint({self.label}" + (f", {names})" if names else ")")

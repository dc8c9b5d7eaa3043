"""
Case analysis for solvable, non-nilpotent four dimensional Lie algebras.

The algebra is viewed as an extension of C by an ideal built from its
nilradical N. Each case picks an adapted basis (ideal first, complement
last), reads off the block describing how the complement acts, and
normalizes that block to a point of the moduli space.
"""
from abc import ABC, abstractmethod
from typing import List, Optional

from .cochains import Codifferential
from .exact_math import (RatMatrix, characteristic_polynomial, elementary_symmetric, minimal_polynomial,
                         normalize_projective, normalize_weighted, solve_linear, univariate_divmod)
from .exceptions import InternalConsistencyError
from .naming import make_point
from .points import D1_FAMILY, D1_SHARP, D2_SHARP, D3_BIG, D3_SMALL, D3_STAR, ModuliPoint
from .structure import Subspace, bracket_span, complete_basis, span_basis
from .transform import BasisChange, transform
from . import config as core_config

PAIR_WEIGHTS = (1, 2)
TRIPLE_WEIGHTS = (1, 2, 3)


class ReductionContext:
    """Input shared by all cases: the algebra and its nilradical."""

    def __init__(self, d: Codifferential, nilradical: Subspace):
        self.d: Codifferential = d
        self.nilradical: Subspace = nilradical
        self.commutator: Subspace = bracket_span(d, nilradical, nilradical)

    @property
    def nilradical_dim(self) -> int:
        return len(self.nilradical)


class Reduction:
    """
    Result of a case: the point, the basis change G into the adapted basis,
    the structure matrix A' = G^-1·A·Q(G) in that basis, and the block
    that was normalized.
    """

    def __init__(self, point: ModuliPoint, case: str,
                 basis_change: Optional[BasisChange] = None,
                 reduced: Optional[Codifferential] = None,
                 block: Optional[RatMatrix] = None):
        self.point: ModuliPoint = point
        self.case: str = case
        self.basis_change: Optional[BasisChange] = basis_change
        self.reduced: Optional[Codifferential] = reduced
        self.block: Optional[RatMatrix] = block

    def __repr__(self) -> str:
        return f"Reduction(case='{self.case}', point={self.point!r})"


def _adapted_change(vectors: List) -> BasisChange:
    return BasisChange(RatMatrix.from_columns(vectors, len(vectors[0])))


def _is_scalar(block: RatMatrix) -> bool:
    n = block.nrows
    return all(block[i, j] == (block[0, 0] if i == j else 0) for i in range(n) for j in range(n))


class ExtensionCase(ABC):
    """One branch of the case analysis."""

    name: str = 'base'

    @abstractmethod
    def applies(self, context: ReductionContext) -> bool:
        ...

    @abstractmethod
    def resolve(self, context: ReductionContext) -> Reduction:
        ...


class HeisenbergIdealCase(ExtensionCase):
    """
    N is the Heisenberg algebra. With f1 = [f2, f3] spanning [N, N] and e4
    adjusted by an inner derivation so that [f2, e4] and [f3, e4] have no f1
    component, the 2x2 block V of ad e4 on span(f2, f3) decides the point:
    scalar V gives d1#, otherwise (tr V, det V) with weights (1, 2) gives d1(l:m).
    """

    name = 'heisenberg-ideal'

    def applies(self, context: ReductionContext) -> bool:
        return context.nilradical_dim == 3 and len(context.commutator) == 1

    def resolve(self, context: ReductionContext) -> Reduction:
        d = context.d
        center_line = context.commutator
        f2, f3 = self._complement_in_ideal(center_line, context.nilradical)
        f1 = d.bracket_vectors(f2, f3)
        if not any(f1):
            raise InternalConsistencyError(f"[f2, f3] vanishes in the Heisenberg ideal of {d}")
        x = complete_basis(context.nilradical, 4)[0]
        first = _adapted_change([f1, f2, f3, x])
        staged = transform(d, first)

        # e4 -> e4 + a e1 + b e2 + c e3 removing the e1 part of [e2, e4] and [e3, e4].
        rows = [[staged.bracket_basis(i, k)[0] for k in (1, 2, 3)] for i in (2, 3)]
        rhs = [-staged.bracket_basis(i, 4)[0] for i in (2, 3)]
        shift = solve_linear(RatMatrix(rows, 3), rhs)
        if shift is None:
            raise InternalConsistencyError(f"Outer derivation adjustment has no solution for {d}")
        adjust = RatMatrix([[1, 0, 0, shift[0]], [0, 1, 0, shift[1]], [0, 0, 1, shift[2]], [0, 0, 0, 1]], 4)
        change = BasisChange(first.matrix @ adjust)
        reduced = transform(d, change)

        block = RatMatrix.from_columns([reduced.bracket_basis(j, 4)[1:3] for j in (2, 3)], 2)
        if core_config.LOG_LEVEL == "DEBUG":
            print(f"DEBUG: Heisenberg ideal block V = {block!r}")
        if _is_scalar(block):
            if block[0, 0] == 0:
                raise InternalConsistencyError(f"Zero block for non-nilpotent algebra {d}")
            return Reduction(make_point(D1_SHARP), self.name, change, reduced, block)
        trace, det = block.trace(), block.det()
        if trace == 0 and det == 0:
            raise InternalConsistencyError(f"Nilpotent block for non-nilpotent algebra {d}")
        point = make_point(D1_FAMILY, normalize_weighted((trace, det), PAIR_WEIGHTS))
        return Reduction(point, self.name, change, reduced, block)

    @staticmethod
    def _complement_in_ideal(line: Subspace, ideal: Subspace) -> List:
        chosen = []
        current = list(line)
        for v in ideal:
            if len(span_basis(current + [v], 4)) > len(current):
                chosen.append(v)
                current.append(v)
        if len(chosen) != 2:
            raise InternalConsistencyError("Could not complete [N, N] to a basis of N")
        return chosen


class AbelianIdealCase(ExtensionCase):
    """
    N is abelian of dimension 3 and e4 acts on it by the 3x3 block M.
    The degree of the minimal polynomial of M separates d3* (scalar),
    d3(l:m) (degree 2) and d3(l:m:n) (degree 3).
    """

    name = 'abelian-ideal'

    def applies(self, context: ReductionContext) -> bool:
        return context.nilradical_dim == 3 and not context.commutator

    def resolve(self, context: ReductionContext) -> Reduction:
        d = context.d
        x = complete_basis(context.nilradical, 4)[0]
        change = _adapted_change(list(context.nilradical) + [x])
        reduced = transform(d, change)
        block = reduced.matrix.submatrix([0, 1, 2], [3, 4, 5])
        minpoly = minimal_polynomial(block)
        degree = len(minpoly) - 1
        if core_config.LOG_LEVEL == "DEBUG":
            print(f"DEBUG: abelian ideal block M = {block!r}, minimal polynomial degree {degree}")
        if degree == 1:
            if block.is_zero():
                raise InternalConsistencyError(f"Zero block for non-nilpotent algebra {d}")
            return Reduction(make_point(D3_STAR), self.name, change, reduced, block)
        if degree == 3:
            invariants = normalize_weighted(elementary_symmetric(block), TRIPLE_WEIGHTS)
            if not any(invariants):
                raise InternalConsistencyError(f"Nilpotent block for non-nilpotent algebra {d}")
            return Reduction(make_point(D3_BIG, invariants), self.name, change, reduced, block)
        # Degree 2: charpoly / minpoly = x - l with l the repeated eigenvalue.
        quotient, remainder = univariate_divmod(characteristic_polynomial(block), minpoly)
        if any(remainder):
            raise InternalConsistencyError(f"Minimal polynomial does not divide the characteristic polynomial of {block!r}")
        lam = -quotient[0]
        mu = -minpoly[1] - lam
        point = make_point(D3_SMALL, normalize_projective((lam, mu)))
        return Reduction(point, self.name, change, reduced, block)


class SolvableIdealCase(ExtensionCase):
    """
    N is two dimensional, so the complement span(x, y) acts on N by commuting
    blocks X and Y. When the discriminant tr² - 4·det of sX + tY is not
    identically zero the algebra is d2#.
    """

    name = 'two-dimensional-nilradical'

    def applies(self, context: ReductionContext) -> bool:
        return context.nilradical_dim == 2

    def resolve(self, context: ReductionContext) -> Reduction:
        d = context.d
        x, y = complete_basis(context.nilradical, 4)
        change = _adapted_change(list(context.nilradical) + [x, y])
        reduced = transform(d, change)
        blocks = [RatMatrix.from_columns([reduced.bracket_basis(k, j)[:2] for j in (1, 2)], 2) for k in (3, 4)]

        def discriminant(s: int, t: int):
            pencil = blocks[0].scale(s) + blocks[1].scale(t)
            return pencil.trace() ** 2 - 4 * pencil.det()

        a, c = discriminant(1, 0), discriminant(0, 1)
        b = discriminant(1, 1) - a - c
        if core_config.LOG_LEVEL == "DEBUG":
            print(f"DEBUG: pencil discriminant {a}*s^2 + {b}*s*t + {c}*t^2")
        if a == 0 and b == 0 and c == 0:
            raise InternalConsistencyError(f"Degenerate pencil on a two dimensional nilradical for {d}")
        return Reduction(make_point(D2_SHARP), self.name, change, reduced, blocks[0])


DEFAULT_CASES: List[ExtensionCase] = [HeisenbergIdealCase(), AbelianIdealCase(), SolvableIdealCase()]

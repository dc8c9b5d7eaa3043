"""
Classification of three dimensional Lie algebras over Q up to the complex
invariants used for their moduli space:

    d1 = n3,  d2 = r3,1(C),  d2(l:m) = r3,m/l(C),  d3 = sl2(C),  abelian.

The family d2(l:m) is parametrized by (tr W, det W) of the action W of a
complementary vector on the two dimensional derived algebra, with weights (1, 2).
"""
from typing import Sequence

from .cochains import Codifferential, parse_cochain, require_codifferential
from .exact_math import RatMatrix, normalize_weighted, solve_linear
from .exceptions import DimensionMismatchError, InternalConsistencyError, NoRationalRepresentativeError
from .naming import bs_name3, pair_parameters
from .points import ABELIAN, D1, D2, D2_FAMILY, D3, ModuliPoint, display_parameters
from .structure import center, complete_basis, contains, derived_algebra

PAIR_WEIGHTS = (1, 2)


def make_point3(family: str, invariants: Sequence = ()) -> ModuliPoint:
    parameters = None
    if family == D2_FAMILY:
        pair = pair_parameters(invariants)
        if pair is not None:
            parameters = display_parameters(pair)
    return ModuliPoint(family, invariants, dimension=3, parameters=parameters,
                       bs_name=bs_name3(family, parameters))


def _family_point(e1, e2) -> ModuliPoint:
    return make_point3(D2_FAMILY, normalize_weighted((e1, e2), PAIR_WEIGHTS))


def classify3(d: Codifferential) -> ModuliPoint:
    """Canonical point of a three dimensional Lie algebra."""
    if d.n != 3:
        raise DimensionMismatchError(f"classify3 needs a 3-dimensional algebra, got dimension {d.n}")
    require_codifferential(d)
    rank = d.rank()
    if rank == 0:
        return make_point3(ABELIAN)
    if rank == 3:
        return make_point3(D3)
    derived = derived_algebra(d)
    if rank == 1:
        if contains(center(d), derived[0]):
            return make_point3(D1)
        return _family_point(1, 0)
    # The derived plane is abelian; x acts on it by an invertible W.
    x = complete_basis(derived, 3)[0]
    plane = RatMatrix.from_columns(derived, 3)
    columns = []
    for u in derived:
        coords = solve_linear(plane, d.bracket_vectors(x, u))
        if coords is None:
            raise InternalConsistencyError(f"Derived algebra of {d} is not an ideal")
        columns.append(coords)
    w = RatMatrix.from_columns(columns, 2)
    if w[0, 1] == 0 and w[1, 0] == 0 and w[0, 0] == w[1, 1]:
        return make_point3(D2)
    return _family_point(w.trace(), w.det())


def standard_form3(point: ModuliPoint) -> Codifferential:
    if point.dimension != 3:
        raise DimensionMismatchError(f"{point!r} is not a three dimensional point")
    if point.family == ABELIAN:
        return Codifferential.zero(3)
    if point.family == D1:
        return Codifferential.from_cochain(parse_cochain('psi^{23}_1', 3))
    if point.family == D2:
        return Codifferential.from_cochain(parse_cochain('psi^{13}_1 + psi^{23}_2', 3))
    if point.family == D3:
        return Codifferential.from_cochain(parse_cochain('psi^{12}_3 + psi^{13}_2 + psi^{23}_1', 3))
    if point.parameters is None:
        raise NoRationalRepresentativeError(
            f"No rational parameters for {point.label}", invariants=point.invariants
        )
    return d2_family_form(*point.parameters)


def d2_family_form(lam, mu) -> Codifferential:
    """lam·psi^{13}_1 + psi^{23}_1 + mu·psi^{23}_2."""
    return Codifferential.from_brackets(3, {(1, 3): {1: lam}, (2, 3): {1: 1, 2: mu}})

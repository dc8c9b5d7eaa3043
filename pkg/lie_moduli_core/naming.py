"""
Rational parameters and literature names for points of the moduli spaces.

Names are display metadata only (ASCII renderings of the Burde-Steinhoff
and Agaoka symbols); point equality never looks at them.
"""
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .exact_math import rational_root_multiset, to_vector
from .points import (ABELIAN, D1, D1_FAMILY, D1_SHARP, D2, D2_FAMILY, D2_SHARP, D2_STAR, D3, D3_BIG,
                     D3_SMALL, D3_STAR, ModuliPoint, display_parameters)

# family -> (Burde-Steinhoff, Agaoka)
SINGLETON_NAMES = {
    ABELIAN: ('C^4', ''),
    D1: ('n3(C)+C', 'L1'),
    D1_SHARP: ('g6', 'L5'),
    D2_STAR: ('n4(C)', 'L2'),
    D2_SHARP: ('r2(C)+r2(C)', 'L9'),
    D3: ('sl2(C)+C', 'L6'),
    D3_STAR: ('g1(1)', 'L3'),
}


def pair_parameters(invariants: Sequence) -> Optional[Tuple[Fraction, Fraction]]:
    """
    Rational (l, m) with (l + m, l·m) equal to the given pair, or None when
    x^2 - e1·x + e2 has irrational roots.
    """
    e1, e2 = to_vector(invariants)
    roots = rational_root_multiset([e2, -e1, 1])
    return (roots[0], roots[1]) if len(roots) == 2 else None


def triple_parameters(invariants: Sequence) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """Rational roots of x^3 - e1·x^2 + e2·x - e3 when all three are rational."""
    e1, e2, e3 = to_vector(invariants)
    roots = rational_root_multiset([-e3, e2, -e1, 1])
    return (roots[0], roots[1], roots[2]) if len(roots) == 3 else None


def _bs_name_big(invariants: Sequence[Fraction], parameters: Optional[Tuple[int, ...]]) -> str:
    e1, e2, e3 = invariants
    if e3 == 0:
        if e2 == 0:
            return 'g2(0,0)'
        # Remaining eigenvalues are the roots of x^2 - e1·x + e2.
        if e1 * e1 == 4 * e2:
            return 'r3(C)+C'
        pair = pair_parameters((e1, e2))
        if pair is None:
            return 'r3,q(C)+C'
        lam, mu = display_parameters(pair)
        return f"r3,{Fraction(mu, lam)}(C)+C"
    if e1 != 0:
        return f"g2({e3 / e1 ** 3},{e2 / e1 ** 2})"
    if e2 != 0:
        return f"g3({-e2 ** 3 / e3 ** 2})"
    return 'g4'


def _bs_name_small(parameters: Tuple[int, ...]) -> str:
    lam, mu = parameters
    if mu == 0:
        return 'r3,1(C)+C'
    if lam == 0:
        return 'r2(C)+C^2'
    if lam == mu:
        return 'g5'
    return f"g1({Fraction(mu, lam)})"


def _agaoka_big(parameters: Optional[Tuple[int, ...]]) -> str:
    if parameters is None:
        return 'L7'
    nu_index = max(i for i, p in enumerate(parameters) if p != 0)
    nu = parameters[nu_index]
    lam, mu = (p for i, p in enumerate(parameters) if i != nu_index)
    return f"L7({Fraction(lam, nu)},{Fraction(mu, nu)})"


def make_point(family: str, invariants: Sequence = ()) -> ModuliPoint:
    """
    Builds a four dimensional ModuliPoint with display parameters and names.
    """
    inv = to_vector(invariants)
    if family in SINGLETON_NAMES:
        bs, agaoka = SINGLETON_NAMES[family]
        return ModuliPoint(family, inv, 4, None, bs, agaoka)
    if family == D1_FAMILY:
        pair = pair_parameters(inv)
        parameters = display_parameters(pair) if pair is not None else None
        bs = 'g7' if inv[0] == 0 else f"g8({inv[1] / inv[0] ** 2})"
        agaoka = f"L8({Fraction(parameters[1], parameters[0])})" if parameters is not None else 'L8'
        return ModuliPoint(family, inv, 4, parameters, bs, agaoka)
    if family == D3_BIG:
        triple = triple_parameters(inv)
        parameters = display_parameters(triple) if triple is not None else None
        return ModuliPoint(family, inv, 4, parameters, _bs_name_big(inv, parameters), _agaoka_big(parameters))
    if family == D3_SMALL:
        parameters = tuple(int(x) for x in inv)
        lam, mu = parameters
        agaoka = 'L4(inf)' if lam == 0 else f"L4({Fraction(mu, lam)})"
        return ModuliPoint(family, inv, 4, parameters, _bs_name_small(parameters), agaoka)
    raise ValueError(f"Unknown four dimensional family {family!r}")


def bs_name3(family: str, parameters: Optional[Tuple[int, ...]]) -> str:
    """Burde-Steinhoff style names for the three dimensional algebras."""
    if family == D1:
        return 'n3'
    if family == D2:
        return 'r3,1(C)'
    if family == D3:
        return 'sl2(C)'
    if family == ABELIAN:
        return 'C^3'
    if family != D2_FAMILY:
        return ''
    if parameters is None:
        return 'r3,q(C)'
    lam, mu = parameters
    if mu == 0:
        return 'r2(C)+C'
    if lam == mu:
        return 'r3(C)'
    return f"r3,{Fraction(mu, lam)}(C)"

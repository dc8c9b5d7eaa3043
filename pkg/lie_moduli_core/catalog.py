"""
Static catalog of the moduli spaces of 3 and 4 dimensional Lie algebras:
symbolic family formulas, bracket tables, the rows of the cohomology tables
with their expected dimensions, and the point-spec grammar.

Table rows for the 4 dimensional space are listed in matching precedence:
a point belongs to the first row whose pattern it satisfies.
"""
import re
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .classifier import classify, family_form, standard_form
from .cochains import Codifferential
from .exact_math import polynomial_discriminant, to_rational
from .exceptions import LieModuliError, UnknownPointSpecError
from .points import (ABELIAN, D1, D1_FAMILY, D1_SHARP, D2, D2_FAMILY, D2_SHARP, D2_STAR, D3, D3_BIG, D3_SMALL,
                     D3_STAR, ModuliPoint)
from .three_dim import classify3, d2_family_form, standard_form3

# Symbolic codifferentials, l, m, n standing for the family parameters.
FAMILY_FORMULAS: Dict[str, str] = {
    ABELIAN: '0',
    D1: 'psi^{24}_1',
    D2_STAR: 'psi^{24}_1 + psi^{34}_2',
    D3_STAR: 'psi^{14}_1 + psi^{24}_2 + psi^{34}_3',
    D2_SHARP: 'psi^{12}_1 + psi^{34}_3',
    D1_SHARP: 'psi^{23}_1 + 2*psi^{14}_1 + psi^{24}_2 + psi^{34}_3',
    D3: 'psi^{12}_3 + psi^{13}_2 + psi^{23}_1',
    D1_FAMILY: 'psi^{23}_1 + (l+m)*psi^{14}_1 + l*psi^{24}_2 + psi^{34}_2 + m*psi^{34}_3',
    D3_SMALL: 'l*psi^{14}_1 + l*psi^{24}_2 + psi^{34}_2 + m*psi^{34}_3',
    D3_BIG: 'l*psi^{14}_1 + psi^{24}_1 + m*psi^{24}_2 + psi^{34}_2 + n*psi^{34}_3',
}

FAMILY_FORMULAS_3: Dict[str, str] = {
    ABELIAN: '0',
    D1: 'psi^{23}_1',
    D2: 'psi^{13}_1 + psi^{23}_2',
    D2_FAMILY: 'l*psi^{13}_1 + psi^{23}_1 + m*psi^{23}_2',
    D3: 'psi^{12}_3 + psi^{13}_2 + psi^{23}_1',
}

# Printed bracket tables that disagree with the codifferential formulas.
# The formulas win; these are kept for reference.
BRACKET_TABLE_CONFLICTS: Dict[str, str] = {
    D1_FAMILY: "printed table lists [e2,e3] = e3, while psi^{23}_1 gives [e2,e3] = e1",
    D2_STAR: "printed table lists [e1,e2] = e1, while psi^{24}_1 gives [e2,e4] = e1",
    D3_STAR: "one printed formula uses the impossible index psi^{25}_2; psi^{14}_1 + psi^{24}_2 + psi^{34}_3 is used",
}


def bracket_table(d: Codifferential) -> List[str]:
    """Nonzero brackets of d as strings such as '[e2,e4] = e1 - 1/2*e3'."""
    lines = []
    for (i, j), image in d.brackets().items():
        rhs = ''
        for k, c in sorted(image.items()):
            magnitude = abs(c)
            term = f"e{k}" if magnitude == 1 else f"{magnitude}*e{k}"
            if not rhs:
                rhs = term if c > 0 else f"-{term}"
            else:
                rhs += f" + {term}" if c > 0 else f" - {term}"
        lines.append(f"[e{i},e{j}] = {rhs}")
    return lines


# ---------------------------------------------------------------------------
# Point specs
# ---------------------------------------------------------------------------

_SPEC_PATTERN = re.compile(r'^\s*([a-z0-9]+[#*]?)\s*(?:\(([^()]*)\))?\s*$')

_ALIASES_3 = {'n3': D1, 'sl2': D3, 'abelian3': ABELIAN}


def _parse_parameters(text: Optional[str], spec: str) -> Tuple[Fraction, ...]:
    if text is None:
        return ()
    try:
        return tuple(to_rational(part.strip()) for part in text.split(':'))
    except (TypeError, ValueError, ZeroDivisionError):
        raise UnknownPointSpecError(f"Cannot read parameters of point-spec {spec!r}")


def _family_for(stem: str, arity: int, dimension: int) -> Optional[str]:
    if dimension == 3:
        stem = _ALIASES_3.get(stem, stem)
        if arity == 0 and stem in (ABELIAN, D1, D2, D3):
            return stem
        return D2_FAMILY if (stem, arity) == ('d2', 2) else None
    if arity == 0:
        return stem if stem in (ABELIAN, D1, D2_STAR, D3_STAR, D2_SHARP, D1_SHARP, D3) else None
    return {('d1', 2): D1_FAMILY, ('d3', 2): D3_SMALL, ('d3', 3): D3_BIG}.get((stem, arity))


def spec_form(spec: str, dimension: int = 4) -> Codifferential:
    """
    The catalog codifferential written by a point-spec, at the literal
    parameters given: 'd1(1:-1)' is built with l = 1, m = -1.
    """
    match = _SPEC_PATTERN.match(spec)
    if match is None:
        raise UnknownPointSpecError(f"Unknown point-spec {spec!r}")
    stem, text = match.groups()
    parameters = _parse_parameters(text, spec)
    family = _family_for(stem, len(parameters), dimension)
    if family is None:
        raise UnknownPointSpecError(f"Unknown point-spec {spec!r} in dimension {dimension}")
    if dimension == 3:
        if family == D2_FAMILY:
            return d2_family_form(*parameters)
        return standard_form3(ModuliPoint(family, (), dimension=3))
    return family_form(family, parameters)


def parse_point_spec(spec: str, dimension: int = 4) -> ModuliPoint:
    """
    Reads 'd3(1:2:5)', 'd1(1:-1)', 'd2#', 'd2*', 'd3*', 'd1#', 'd1', 'd3',
    'abelian' (and 'n3', 'd2', 'd2(1:2)', 'sl2' with dimension=3) as a point.
    Parameters that leave the named family raise UnknownPointSpecError.
    """
    form = spec_form(spec, dimension)
    point = classify3(form) if dimension == 3 else classify(form)
    stem = _SPEC_PATTERN.match(spec).group(1)
    expected = _family_for(stem, point.family.count(':') + 1 if point.is_family else 0, dimension)
    if expected != point.family:
        raise UnknownPointSpecError(f"{spec!r} is not a point of its family; it is {point.label}")
    return point


# ---------------------------------------------------------------------------
# Cohomology table rows
# ---------------------------------------------------------------------------

def _big_invariants(point: ModuliPoint) -> Optional[Tuple[Fraction, ...]]:
    return point.invariants if point.family == D3_BIG else None


def on_sum_line(point: ModuliPoint) -> bool:
    """Some parameter is the sum of the other two: e1/2 is an eigenvalue."""
    inv = _big_invariants(point)
    if inv is None:
        return False
    e1, e2, e3 = inv
    x = e1 / 2
    return x ** 3 - e1 * x ** 2 + e2 * x - e3 == 0


def on_zero_line(point: ModuliPoint) -> bool:
    inv = _big_invariants(point)
    return inv is not None and inv[2] == 0


def on_trace_free_line(point: ModuliPoint) -> bool:
    inv = _big_invariants(point)
    return inv is not None and inv[0] == 0


def on_repeated_line(point: ModuliPoint) -> bool:
    """Two parameters agree, d3(l:l:m): the block has a repeated eigenvalue."""
    inv = _big_invariants(point)
    if inv is None:
        return False
    e1, e2, e3 = inv
    return polynomial_discriminant((-e3, e2, -e1, 1)) == 0


@lru_cache(maxsize=None)
def _cached_point(spec: str, dimension: int) -> ModuliPoint:
    return parse_point_spec(spec, dimension)


def _at(spec: str, dimension: int = 4) -> Callable[[ModuliPoint], bool]:
    return lambda point: point == _cached_point(spec, dimension)


def _in_family(family: str) -> Callable[[ModuliPoint], bool]:
    return lambda point: point.family == family


class CatalogEntry:
    """
    One row of a cohomology table: a pattern on ModuliPoints, the
    representative spec the row is computed at, and the expected
    (h^1, ..., h^n).
    """

    def __init__(self,
                 row: str,
                 representative: str,
                 expected: Sequence[int],
                 pattern: Callable[[ModuliPoint], bool],
                 dimension: int = 4,
                 notes: str = ''):
        self.row: str = row
        self.representative: str = representative
        self.expected: Tuple[int, ...] = tuple(expected)
        self.pattern: Callable[[ModuliPoint], bool] = pattern
        self.dimension: int = dimension
        self.notes: str = notes
        self._point: Optional[ModuliPoint] = None

    @property
    def point(self) -> ModuliPoint:
        if self._point is None:
            self._point = parse_point_spec(self.representative, self.dimension)
        return self._point

    @property
    def codifferential(self) -> Codifferential:
        return spec_form(self.representative, self.dimension)

    @property
    def formula(self) -> str:
        formulas = FAMILY_FORMULAS_3 if self.dimension == 3 else FAMILY_FORMULAS
        return formulas[self.point.family]

    @property
    def bs_name(self) -> str:
        return self.point.bs_name

    @property
    def agaoka_name(self) -> str:
        return self.point.agaoka_name

    def bracket_table(self) -> List[str]:
        return bracket_table(self.codifferential)

    def matches(self, point: ModuliPoint) -> bool:
        return point.dimension == self.dimension and self.pattern(point)

    def to_dict(self) -> Dict[str, object]:
        return {
            'row': self.row,
            'representative': self.representative,
            'formula': self.formula,
            'codifferential': str(self.codifferential),
            'brackets': self.bracket_table(),
            'expected': list(self.expected),
            'bs_name': self.bs_name,
            'agaoka_name': self.agaoka_name,
            'notes': self.notes or BRACKET_TABLE_CONFLICTS.get(self.point.family, ''),
        }

    def __repr__(self) -> str:
        return f"CatalogEntry({self.row}, at {self.representative}, expected={self.expected})"


TABLE2: List[CatalogEntry] = [
    CatalogEntry('d3', 'd3', (1, 0, 1, 1), _in_family(D3), notes='rigid, sl2(C)+C'),
    CatalogEntry('d2#', 'd2#', (0, 0, 0, 0), _in_family(D2_SHARP), notes='the only truly rigid algebra'),
    CatalogEntry('d1(1:-1)', 'd1(1:-1)', (2, 2, 2, 1), _at('d1(1:-1)'), notes='orbifold point of the d1 family'),
    CatalogEntry('d1(1:0)', 'd1(1:0)', (1, 2, 1, 0), _at('d1(1:0)')),
    CatalogEntry('d1(l:m)', 'd1(1:2)', (1, 1, 0, 0), _in_family(D1_FAMILY)),
    CatalogEntry('d1#', 'd1#', (3, 3, 0, 0), _in_family(D1_SHARP)),
    CatalogEntry('d3(1:-1:0)', 'd3(1:-1:0)', (3, 5, 5, 2), _at('d3(1:-1:0)')),
    CatalogEntry('d3(l:m:l+m)', 'd3(1:2:3)', (2, 3, 1, 0), on_sum_line),
    CatalogEntry('d3(l:m:0)', 'd3(1:3:0)', (3, 3, 1, 0), on_zero_line),
    CatalogEntry('d3(l:m:-l-m)', 'd3(1:2:-3)', (2, 2, 1, 1), on_trace_free_line),
    CatalogEntry('d3(l:m:n)', 'd3(1:2:5)', (2, 2, 0, 0), _in_family(D3_BIG)),
    CatalogEntry('d3(1:0)', 'd3(1:0)', (5, 7, 3, 0), _at('d3(1:0)')),
    CatalogEntry('d3(0:1)', 'd3(0:1)', (6, 6, 2, 0), _at('d3(0:1)')),
    CatalogEntry('d3(1:2)', 'd3(1:2)', (4, 5, 1, 0), _at('d3(1:2)')),
    CatalogEntry('d3(1:-2)', 'd3(1:-2)', (4, 4, 1, 1), _at('d3(1:-2)')),
    CatalogEntry('d3(l:m)', 'd3(1:3)', (4, 4, 0, 0), _in_family(D3_SMALL)),
    CatalogEntry('d1', 'd1', (8, 13, 10, 3), _in_family(D1), notes='jumps to every point except d3*'),
    CatalogEntry('d2*', 'd2*', (4, 6, 5, 2), _in_family(D2_STAR)),
    CatalogEntry('d3*', 'd3*', (8, 8, 0, 0), _in_family(D3_STAR)),
    CatalogEntry('d=0', 'abelian', (16, 24, 16, 4), _in_family(ABELIAN)),
]

TABLE3: List[CatalogEntry] = [
    CatalogEntry('n3', 'n3', (4, 5, 2), _in_family(D1), dimension=3),
    CatalogEntry('d2', 'd2', (3, 3, 0), _in_family(D2), dimension=3),
    CatalogEntry('d2(1:1)', 'd2(1:1)', (1, 1, 0), _at('d2(1:1)', 3), dimension=3),
    CatalogEntry('d2(1:2)', 'd2(1:2)', (1, 1, 0), _at('d2(1:2)', 3), dimension=3),
    CatalogEntry('d2(1:0)', 'd2(1:0)', (2, 1, 0), _at('d2(1:0)', 3), dimension=3),
    CatalogEntry('d2(1:-1)', 'd2(1:-1)', (1, 2, 1), _at('d2(1:-1)', 3), dimension=3),
    CatalogEntry('sl2', 'sl2', (0, 0, 0), _in_family(D3), dimension=3),
]


def table_entries(dimension: int = 4) -> List[CatalogEntry]:
    if dimension not in (3, 4):
        raise UnknownPointSpecError(f"No cohomology table for dimension {dimension}")
    return TABLE3 if dimension == 3 else TABLE2


def match_row(point: ModuliPoint) -> Optional[CatalogEntry]:
    """First table row, in precedence order, whose pattern the point satisfies."""
    for entry in table_entries(point.dimension):
        if entry.matches(point):
            return entry
    return None


def catalog_forms() -> Dict[str, Codifferential]:
    """Representative codifferential of every 4 dimensional table row."""
    return {entry.representative: entry.codifferential for entry in TABLE2}


def describe(point: ModuliPoint) -> Dict[str, object]:
    """Point data plus its table row and a rational standard form when one exists."""
    out: Dict[str, object] = point.to_dict()
    entry = match_row(point)
    out['table_row'] = entry.row if entry is not None else None
    try:
        out['standard_form'] = str(standard_form(point))
    except LieModuliError:
        out['standard_form'] = None
    return out

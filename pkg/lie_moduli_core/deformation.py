"""
Versal deformations of a Lie algebra d.

Starting from d_inf = d + Σ ψ_i t_i over Q[t1..tm], each order k splits the
degree k part of ½[d_{k-1}, d_{k-1}] monomial by monomial as

    P = D(ζ) + Σ c_j Φ_j + Σ τ_l T_l

with Φ a basis of H^3 and T a completion of the 3-cocycles. The correction
-ζ·monomial removes the coboundary part, the c_j·monomial accumulate into
relation j on the base, and any τ is reported as a residual.
"""
from fractions import Fraction
from itertools import product
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .cochains import Cochain, CochainKey, Codifferential, nr_bracket, require_codifferential
from .cohomology import CochainDecomposition, h2_basis
from .exact_math import MultiPoly, Vector, grlex_key, to_rational
from .exceptions import DimensionMismatchError
from . import config as core_config

Exponent = Tuple[int, ...]
Point = Union[Mapping[str, Any], Sequence[Any]]

_HALF = Fraction(1, 2)


def parameter_names(count: int) -> Tuple[str, ...]:
    return tuple(f"t{i}" for i in range(1, count + 1))


class PolynomialCodifferential:
    """
    A 2-cochain on Q^n whose coefficients are polynomials in `variables`,
    together with the cocycles the variables were attached to.
    """

    def __init__(self, cochain: Cochain, variables: Sequence[str], basis: Sequence[Cochain] = ()):
        if cochain.degree != 2:
            raise DimensionMismatchError(f"Expected a 2-cochain, got degree {cochain.degree}")
        self.cochain: Cochain = cochain
        self.variables: Tuple[str, ...] = tuple(variables)
        self.basis: List[Cochain] = list(basis)

    @property
    def n(self) -> int:
        return self.cochain.n

    def _assignment(self, point: Point) -> Dict[str, Fraction]:
        if isinstance(point, Mapping):
            values = {name: to_rational(point.get(name, 0)) for name in self.variables}
            unknown = set(point) - set(self.variables)
            if unknown:
                raise KeyError(f"Unknown parameters {sorted(unknown)}; known: {self.variables}")
            return values
        if len(point) != len(self.variables):
            raise DimensionMismatchError(f"{len(point)} values for parameters {self.variables}")
        return {name: to_rational(v) for name, v in zip(self.variables, point)}

    def evaluate(self, point: Point) -> Codifferential:
        """The rational structure at a parameter point; missing names count as 0."""
        return Codifferential.from_cochain(self.cochain.substitute(self._assignment(point)))

    def base(self) -> Codifferential:
        return self.evaluate({})

    def square(self, max_degree: Optional[int] = None) -> Cochain:
        """½[d, d], dropping terms of total degree above max_degree."""
        return nr_bracket(self.cochain, self.cochain, max_degree).scale(_HALF)

    def corrected(self, update: Cochain) -> 'PolynomialCodifferential':
        return PolynomialCodifferential(self.cochain + update, self.variables, self.basis)

    def __str__(self) -> str:
        return str(self.cochain)

    def __repr__(self) -> str:
        return f"PolynomialCodifferential(variables={self.variables}, {self})"


def _lift(cochain: Cochain, variables: Tuple[str, ...]) -> Cochain:
    return cochain.map_coefficients(
        lambda v: v if isinstance(v, MultiPoly) else MultiPoly.constant(variables, v)
    )


def infinitesimal(d: Codifferential, basis: Optional[Sequence[Cochain]] = None) -> PolynomialCodifferential:
    """
    d_inf = d + Σ ψ_i t_i with ψ a basis of H^2(d): the computed complement
    basis, or `basis` after validation (InvalidBasisError otherwise).
    """
    require_codifferential(d)
    cocycles = h2_basis(d, override=basis)
    variables = parameter_names(len(cocycles))
    total = _lift(d.to_cochain(), variables)
    for psi, name in zip(cocycles, variables):
        total = total + psi.scale(MultiPoly.variable(variables, name))
    return PolynomialCodifferential(total, variables, cocycles)


def split_by_monomial(cochain: Cochain, variables: Sequence[str]) -> List[Tuple[Exponent, Cochain]]:
    """
    Writes a polynomial cochain as Σ monomial·(rational cochain), monomials
    in increasing graded lex order.
    """
    names = tuple(variables)
    buckets: Dict[Exponent, Dict[CochainKey, Fraction]] = {}
    for key, value in cochain.values.items():
        poly = value if isinstance(value, MultiPoly) else MultiPoly.constant(names, value)
        for exponent, coefficient in poly.with_variables(names).terms.items():
            buckets.setdefault(exponent, {})[key] = coefficient
    return [(e, Cochain(cochain.n, cochain.degree, buckets[e])) for e in sorted(buckets, key=grlex_key)]


class Correction:
    """A term -ζ·monomial added to the deformation at some order."""

    def __init__(self, order: int, monomial: MultiPoly, cochain: Cochain):
        self.order: int = order
        self.monomial: MultiPoly = monomial
        self.cochain: Cochain = cochain

    def to_dict(self) -> Dict[str, Any]:
        return {'order': self.order, 'monomial': str(self.monomial), 'cochain': str(self.cochain)}

    def __repr__(self) -> str:
        return f"Correction(order={self.order}, ({self.monomial})*[{self.cochain}])"


class Residual:
    """
    Components of a bracket outside the 3-cocycles. Once some relation is
    nonzero these may be multiples of it; before that they are a bug.
    """

    def __init__(self, order: int, monomial: MultiPoly, coordinates: Vector):
        self.order: int = order
        self.monomial: MultiPoly = monomial
        self.coordinates: Vector = coordinates

    def __repr__(self) -> str:
        return f"Residual(order={self.order}, {self.monomial}, {[str(c) for c in self.coordinates]})"


class DeformationResult:
    """
    Output of `extend`: the deformation up to `max_order`, its corrections,
    the relation ideal on the base and the obstruction classes per order.

    `relation_coordinates[j]` is the coefficient polynomial of the j-th H^3
    class; `relations` keeps the nonzero ones.
    """

    def __init__(self,
                 d: Codifferential,
                 deformation: PolynomialCodifferential,
                 classes: List[Cochain],
                 corrections: List[Correction],
                 relation_coordinates: List[MultiPoly],
                 obstructions: Dict[int, List[MultiPoly]],
                 residuals: List[Residual],
                 max_order: int,
                 converged: bool):
        self.d: Codifferential = d
        self.deformation: PolynomialCodifferential = deformation
        self.classes: List[Cochain] = classes
        self.corrections: List[Correction] = corrections
        self.relation_coordinates: List[MultiPoly] = relation_coordinates
        self.obstructions: Dict[int, List[MultiPoly]] = obstructions
        self.residuals: List[Residual] = residuals
        self.max_order: int = max_order
        self.converged: bool = converged

    @property
    def basis(self) -> List[Cochain]:
        return self.deformation.basis

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.deformation.variables

    @property
    def relations(self) -> List[MultiPoly]:
        return [r for r in self.relation_coordinates if r]

    @property
    def unexplained_residuals(self) -> List[Residual]:
        """Residuals found before any relation had appeared."""
        obstructed = [k for k, v in self.obstructions.items() if any(v)]
        first = min(obstructed) if obstructed else self.max_order
        return [r for r in self.residuals if r.order <= first]

    def evaluate(self, point: Point) -> Codifferential:
        return self.deformation.evaluate(point)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'base': str(self.d),
            'basis': [str(c) for c in self.basis],
            'parameters': list(self.variables),
            'deformation': str(self.deformation),
            'corrections': [c.to_dict() for c in self.corrections],
            'relations': [str(r) for r in self.relations],
            'obstructions': {str(k): [str(p) for p in v] for k, v in sorted(self.obstructions.items())},
            'max_order': self.max_order,
            'converged': self.converged,
            'residuals': len(self.residuals),
        }

    def __repr__(self) -> str:
        return (f"DeformationResult(order={self.max_order}, parameters={len(self.variables)}, "
                f"relations={len(self.relations)}, converged={self.converged})")


def _satisfied(current: PolynomialCodifferential, classes: List[Cochain], relations: List[MultiPoly]) -> bool:
    """½[d, d] equals Σ r_j Φ_j exactly, so d is a deformation over Q[t]/(r)."""
    expected = Cochain.zero(current.n, 3)
    for phi, r in zip(classes, relations):
        if r:
            expected = expected + phi.scale(r)
    return (current.square() - expected).is_zero()


def extend(d: Codifferential,
           basis: Optional[Sequence[Cochain]] = None,
           max_order: int = core_config.DEFAULT_MAX_ORDER) -> DeformationResult:
    """
    Extends d_inf order by order up to `max_order`, stopping early once
    ½[d_k, d_k] is exactly a combination of the relations times H^3 classes.
    """
    if max_order < 1:
        raise ValueError(f"max_order must be at least 1, got {max_order}")
    current = infinitesimal(d, basis)
    variables = current.variables
    splitter = CochainDecomposition(d, degree=3)
    classes = list(splitter.classes)
    relations = [MultiPoly.zero(variables) for _ in classes]
    corrections: List[Correction] = []
    obstructions: Dict[int, List[MultiPoly]] = {}
    residuals: List[Residual] = []

    order = 1
    converged = _satisfied(current, classes, relations)
    while not converged and order < max_order:
        order += 1
        part = current.square(max_degree=order).homogeneous_part(order)
        obstruction = [MultiPoly.zero(variables) for _ in classes]
        update = Cochain.zero(d.n, 2)
        for exponent, piece in split_by_monomial(part, variables):
            zeta, coordinates, completion = splitter.decompose(piece)
            monomial = MultiPoly.monomial(variables, exponent)
            if zeta:
                corrections.append(Correction(order, monomial, -zeta))
                update = update - zeta.scale(monomial)
            for j, c in enumerate(coordinates):
                if c:
                    obstruction[j] = obstruction[j] + monomial.scale(c)
            if any(completion):
                residuals.append(Residual(order, monomial, completion))
                if not any(relations):
                    print(f"WARN: order {order}, monomial {monomial}: bracket leaves the 3-cocycles")
                elif core_config.LOG_LEVEL == "DEBUG":
                    print(f"DEBUG: order {order}, monomial {monomial}: off-cocycle part beside nonzero relations")
        obstructions[order] = obstruction
        relations = [r + o for r, o in zip(relations, obstruction)]
        current = current.corrected(update)
        converged = _satisfied(current, classes, relations)
        if core_config.LOG_LEVEL == "DEBUG":
            print(f"DEBUG: order {order}: {len(corrections)} corrections, "
                  f"{sum(1 for r in relations if r)} nonzero relations, converged={converged}")

    return DeformationResult(d, current, classes, corrections, relations, obstructions, residuals, order, converged)


def obstruction_class(d: Codifferential, basis: Optional[Sequence[Cochain]] = None, order: int = 2) -> List[MultiPoly]:
    """
    H^3 coordinates of the degree `order` part of the bracket of the
    deformation built through order - 1, before it is corrected.
    All zero means the deformation is unobstructed at that order.
    """
    if order < 2:
        raise ValueError(f"Obstructions start at order 2, got {order}")
    result = extend(d, basis, max_order=order)
    zeros = [MultiPoly.zero(result.variables) for _ in result.classes]
    return result.obstructions.get(order, zeros)


def evaluate(d_poly: Union[PolynomialCodifferential, DeformationResult], point: Point) -> Codifferential:
    return d_poly.evaluate(point)


def scan_relation_variety(result: DeformationResult,
                          values: Iterable[Any] = core_config.RELATION_SCAN_VALUES,
                          limit: int = core_config.RELATION_SCAN_LIMIT,
                          budget: int = core_config.RELATION_SCAN_BUDGET) -> List[Dict[str, Fraction]]:
    """
    Small rational parameter points where every relation vanishes.

    :param values: candidate coordinate values.
    :param limit: stop after this many points.
    :param budget: stop after trying this many tuples.
    """
    candidates = [to_rational(v) for v in values]
    found: List[Dict[str, Fraction]] = []
    for tried, combo in enumerate(product(candidates, repeat=len(result.variables))):
        if tried >= budget or len(found) >= limit:
            break
        point = dict(zip(result.variables, combo))
        if all(r.evaluate(point) == 0 for r in result.relations):
            found.append(point)
    return found

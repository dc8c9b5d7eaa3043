"""
Classification of Lie algebra structures to canonical moduli points.

Four dimensional procedure:
  1. rank(A) = 0                  -> abelian
  2. not solvable                 -> d3 = sl2(C) + C
  3. nilpotent                    -> d1 (rank 1) or d2* (rank 2)
  4. otherwise the nilradical N selects an ExtensionCase, which builds an
     adapted basis and normalizes the block by which the complement acts on N.

Three dimensional algebras are delegated to three_dim.classify3.
"""
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .cochains import Codifferential, require_codifferential
from .exact_math import RatMatrix, elementary_symmetric, minimal_polynomial, normalize_weighted, span_basis, to_vector
from .exceptions import DimensionMismatchError, InternalConsistencyError, NoRationalRepresentativeError
from .extension_cases import DEFAULT_CASES, ExtensionCase, Reduction, ReductionContext
from .naming import make_point
from .points import (ABELIAN, D1, D1_FAMILY, D1_SHARP, D2_SHARP, D2_STAR, D3, D3_BIG, D3_SMALL, D3_STAR,
                     ModuliPoint)
from .structure import (center, centralizer, complete_basis, derived_algebra, derived_series_dims, is_nilpotent,
                        is_solvable, killing_rank, lower_central_series_dims, nilradical)
from .three_dim import classify3, standard_form3
from .transform import BasisChange, transform
from . import config as core_config

# Re-exported so callers can import points alongside classify.
__all__ = ['ModuliPoint', 'InvariantSignature', 'invariant_signature', 'classify', 'reduce', 'standard_form',
           'family_form']


class InvariantSignature:
    """
    Basis independent invariants of a four dimensional algebra.

    The block fields describe how a complement acts on a three dimensional
    ideal: the abelian nilradical for the abelian-ideal branch, an abelian
    ideal containing the derived algebra for nilpotent algebras, and the
    action on N/[N, N] for the Heisenberg branch. They are None otherwise.
    """

    def __init__(self,
                 derived_dims: Tuple[int, ...],
                 lower_central_dims: Tuple[int, ...],
                 center_dim: int,
                 solvable: bool,
                 nilpotent: bool,
                 killing_rank: int,
                 nilradical_dim: Optional[int] = None,
                 block_kind: Optional[str] = None,
                 block_charpoly: Optional[Tuple[Any, ...]] = None,
                 block_minpoly_degree: Optional[int] = None,
                 block_rank: Optional[int] = None,
                 block_square_rank: Optional[int] = None):
        self.derived_dims: Tuple[int, ...] = derived_dims
        self.lower_central_dims: Tuple[int, ...] = lower_central_dims
        self.center_dim: int = center_dim
        self.solvable: bool = solvable
        self.nilpotent: bool = nilpotent
        self.killing_rank: int = killing_rank
        self.nilradical_dim: Optional[int] = nilradical_dim
        self.block_kind: Optional[str] = block_kind
        self.block_charpoly: Optional[Tuple[Any, ...]] = block_charpoly
        self.block_minpoly_degree: Optional[int] = block_minpoly_degree
        self.block_rank: Optional[int] = block_rank
        self.block_square_rank: Optional[int] = block_square_rank

    @property
    def derived_dim(self) -> int:
        return self.derived_dims[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'derived_dims': list(self.derived_dims),
            'lower_central_dims': list(self.lower_central_dims),
            'center_dim': self.center_dim,
            'solvable': self.solvable,
            'nilpotent': self.nilpotent,
            'killing_rank': self.killing_rank,
            'nilradical_dim': self.nilradical_dim,
            'block_kind': self.block_kind,
            'block_charpoly': [str(c) for c in self.block_charpoly] if self.block_charpoly is not None else None,
            'block_minpoly_degree': self.block_minpoly_degree,
            'block_rank': self.block_rank,
            'block_square_rank': self.block_square_rank,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InvariantSignature):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return (f"InvariantSignature(derived={self.derived_dims}, lcs={self.lower_central_dims}, "
                f"center={self.center_dim}, solvable={self.solvable}, nilpotent={self.nilpotent}, "
                f"killing_rank={self.killing_rank}, block={self.block_kind})")


def _nilpotent_ideal(d: Codifferential) -> List:
    """
    A three dimensional abelian ideal containing the derived algebra of a
    nilpotent algebra: the centralizer of the derived algebra when it has
    dimension 3, else the center completed by unit vectors.
    """
    candidate = centralizer(d, derived_algebra(d))
    if len(candidate) == 3:
        return candidate
    base = center(d)[:3]
    return span_basis(base + complete_basis(base, 4)[:3 - len(base)], 4)


def _block_on(d: Codifferential, ideal: List) -> RatMatrix:
    x = complete_basis(ideal, 4)[0]
    reduced = transform(d, BasisChange(RatMatrix.from_columns(list(ideal) + [x], 4)))
    return reduced.matrix.submatrix([0, 1, 2], [3, 4, 5])


def invariant_signature(d: Codifferential, cases: Optional[Sequence[ExtensionCase]] = None) -> InvariantSignature:
    if d.n != 4:
        raise DimensionMismatchError(f"Invariant signatures are defined for dimension 4, got {d.n}")
    require_codifferential(d)
    solvable = is_solvable(d)
    nilpotent = is_nilpotent(d)
    fields: Dict[str, Any] = {}
    block: Optional[RatMatrix] = None
    if nilpotent:
        block = _block_on(d, _nilpotent_ideal(d))
        fields['block_kind'] = 'nilpotent-ideal'
    elif solvable:
        radical = nilradical(d)
        fields['nilradical_dim'] = len(radical)
        reduction = _resolve(d, radical, cases)
        if reduction.case in ('abelian-ideal', 'heisenberg-ideal'):
            block = reduction.block
            fields['block_kind'] = reduction.case
    if block is not None:
        # Up to rescaling of the complement; e_k has weight k.
        fields['block_charpoly'] = normalize_weighted(elementary_symmetric(block))
        fields['block_minpoly_degree'] = len(minimal_polynomial(block)) - 1
        fields['block_rank'] = block.rank()
        fields['block_square_rank'] = (block @ block).rank()
    return InvariantSignature(
        derived_dims=derived_series_dims(d),
        lower_central_dims=lower_central_series_dims(d),
        center_dim=len(center(d)),
        solvable=solvable,
        nilpotent=nilpotent,
        killing_rank=killing_rank(d),
        **fields,
    )


def _resolve(d: Codifferential, radical: List, cases: Optional[Sequence[ExtensionCase]]) -> Reduction:
    context = ReductionContext(d, radical)
    for case in (cases if cases is not None else DEFAULT_CASES):
        if case.applies(context):
            if core_config.LOG_LEVEL == "DEBUG":
                print(f"DEBUG: nilradical of dimension {context.nilradical_dim}, using case '{case.name}'")
            return case.resolve(context)
    raise InternalConsistencyError(
        f"No extension case matches {d} (nilradical dimension {context.nilradical_dim})"
    )


def reduce(d: Codifferential, cases: Optional[Sequence[ExtensionCase]] = None) -> Reduction:
    """
    Classifies a four dimensional algebra and returns the full reduction
    record (adapted basis and reduced matrix when a case analysis ran).
    """
    if d.n != 4:
        raise DimensionMismatchError(f"reduce works in dimension 4, got {d.n}")
    require_codifferential(d)
    if d.rank() == 0:
        return Reduction(make_point(ABELIAN), 'abelian')
    if not is_solvable(d):
        return Reduction(make_point(D3), 'semisimple-part')
    if is_nilpotent(d):
        rank = d.rank()
        if rank == 1:
            return Reduction(make_point(D1), 'nilpotent')
        if rank == 2:
            return Reduction(make_point(D2_STAR), 'nilpotent')
        raise InternalConsistencyError(f"Nilpotent four dimensional algebra with derived dimension {rank}: {d}")
    return _resolve(d, nilradical(d), cases)


def classify(d: Codifferential) -> ModuliPoint:
    """Canonical ModuliPoint of a Lie algebra of dimension 3 or 4."""
    if d.n == 3:
        return classify3(d)
    if d.n != 4:
        raise DimensionMismatchError(f"Only dimensions {core_config.SUPPORTED_DIMENSIONS} are classified, got {d.n}")
    return reduce(d).point


# ---------------------------------------------------------------------------
# Standard forms
# ---------------------------------------------------------------------------

def _form(brackets: Dict[Tuple[int, int], Dict[int, Any]]) -> Codifferential:
    return Codifferential.from_brackets(4, brackets)


def family_form(family: str, parameters: Sequence[Any] = ()) -> Codifferential:
    """
    Catalog codifferential of a family at explicit rational parameters.
    """
    p = to_vector(parameters)
    if family == ABELIAN:
        return Codifferential.zero(4)
    if family == D1:
        return _form({(2, 4): {1: 1}})
    if family == D2_STAR:
        return _form({(2, 4): {1: 1}, (3, 4): {2: 1}})
    if family == D3_STAR:
        return _form({(1, 4): {1: 1}, (2, 4): {2: 1}, (3, 4): {3: 1}})
    if family == D2_SHARP:
        return _form({(1, 2): {1: 1}, (3, 4): {3: 1}})
    if family == D1_SHARP:
        return _form({(2, 3): {1: 1}, (1, 4): {1: 2}, (2, 4): {2: 1}, (3, 4): {3: 1}})
    if family == D3:
        return _form({(1, 2): {3: 1}, (1, 3): {2: 1}, (2, 3): {1: 1}})
    if family == D1_FAMILY:
        lam, mu = p
        return _form({(2, 3): {1: 1}, (1, 4): {1: lam + mu}, (2, 4): {2: lam}, (3, 4): {2: 1, 3: mu}})
    if family == D3_SMALL:
        lam, mu = p
        return _form({(1, 4): {1: lam}, (2, 4): {2: lam}, (3, 4): {2: 1, 3: mu}})
    if family == D3_BIG:
        lam, mu, nu = p
        return _form({(1, 4): {1: lam}, (2, 4): {1: 1, 2: mu}, (3, 4): {2: 1, 3: nu}})
    raise ValueError(f"Unknown family {family!r}")


def standard_form(point: ModuliPoint) -> Codifferential:
    """
    Catalog codifferential representing `point`; classify(standard_form(p)) == p.
    Raises NoRationalRepresentativeError when the parameters are irrational.
    """
    if point.dimension == 3:
        return standard_form3(point)
    if not point.is_family:
        return family_form(point.family)
    if point.parameters is None:
        raise NoRationalRepresentativeError(
            f"{point.label} has no rational parameter representative", invariants=point.invariants
        )
    return family_form(point.family, point.parameters)


def point_for_parameters(family: str, parameters: Sequence[Any] = ()) -> ModuliPoint:
    """The canonical point of a family at given rational parameters."""
    return classify(family_form(family, parameters))

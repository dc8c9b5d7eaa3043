"""
Chevalley-Eilenberg cohomology H^k(d) = ker D_k / im D_{k-1} of a
codifferential with adjoint coefficients, for k = 0..n.

Complement representatives are chosen by the RREF pivot rule on
[coboundaries | cocycles], so bases are the same on every run.
"""
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .cochains import Codifferential, Cochain, coboundary, require_codifferential
from .exact_math import LinearSolver, RatMatrix, Vector, kernel_basis, rref, span_basis
from .exceptions import DimensionMismatchError, InternalConsistencyError, InvalidBasisError
from . import config as core_config


def coboundary_matrix(d: Codifferential, degree: int) -> RatMatrix:
    """
    Matrix of D: L_degree -> L_{degree+1}; column j is D of the j-th basis cochain.
    """
    n = d.n
    target_dim = len(Cochain.basis_keys(n, degree + 1)) if degree + 1 <= n else 0
    columns = []
    for basis_cochain in Cochain.basis(n, degree):
        image = coboundary(d, basis_cochain)
        columns.append(image.to_vector() if target_dim else ())
    if not columns:
        return RatMatrix.zeros(target_dim, 0)
    return RatMatrix.from_columns(columns, target_dim)


class CohomologySummary:
    """
    Dimensions h^0..h^n plus per-degree bases of cocycles, coboundaries and
    complement representatives (cocycles spanning a complement of the coboundaries).
    """

    def __init__(self,
                 n: int,
                 dims: Tuple[int, ...],
                 cocycles: Dict[int, List[Cochain]],
                 coboundaries: Dict[int, List[Cochain]],
                 complement: Dict[int, List[Cochain]]):
        self.n: int = n
        self.dims: Tuple[int, ...] = dims
        self.cocycles: Dict[int, List[Cochain]] = cocycles
        self.coboundaries: Dict[int, List[Cochain]] = coboundaries
        self.complement: Dict[int, List[Cochain]] = complement

    def h(self, degree: int) -> int:
        return self.dims[degree] if 0 <= degree <= self.n else 0

    def table_row(self) -> Tuple[int, ...]:
        """(h^1, ..., h^n), the columns reported in the cohomology tables."""
        return self.dims[1:]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * h for k, h in enumerate(self.dims))

    def to_dict(self, include_bases: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {'dim': self.n, 'h': list(self.dims)}
        if include_bases:
            out['bases'] = {
                str(k): {
                    'cocycles': [str(c) for c in self.cocycles[k]],
                    'coboundaries': [str(c) for c in self.coboundaries[k]],
                    'complement': [str(c) for c in self.complement[k]],
                }
                for k in range(self.n + 1)
            }
        return out

    def __repr__(self) -> str:
        return f"CohomologySummary(n={self.n}, dims={self.dims})"


def _complement_vectors(boundaries: Sequence[Vector], cocycles: Sequence[Vector], length: int) -> List[Vector]:
    if not cocycles:
        return []
    stacked = RatMatrix.from_columns(list(boundaries) + list(cocycles), length)
    _, pivots, _ = rref(stacked)
    offset = len(boundaries)
    return [cocycles[p - offset] for p in pivots if p >= offset]


def cohomology(d: Codifferential, validate: bool = True) -> CohomologySummary:
    """
    Computes every H^k(d) with explicit bases.

    :param validate: check the Jacobi identity first (InvalidCodifferentialError otherwise).
    """
    if validate:
        require_codifferential(d)
    n = d.n
    matrices = {k: coboundary_matrix(d, k) for k in range(n + 1)}
    dims: List[int] = []
    cocycles: Dict[int, List[Cochain]] = {}
    coboundaries: Dict[int, List[Cochain]] = {}
    complement: Dict[int, List[Cochain]] = {}
    for k in range(n + 1):
        length = len(Cochain.basis_keys(n, k))
        z_vectors = kernel_basis(matrices[k])
        b_vectors = span_basis(matrices[k - 1].columns(), length) if k > 0 else []
        h_vectors = _complement_vectors(b_vectors, z_vectors, length)
        if len(h_vectors) != len(z_vectors) - len(b_vectors):
            raise InternalConsistencyError(
                f"Degree {k}: {len(z_vectors)} cocycles, {len(b_vectors)} coboundaries "
                f"but {len(h_vectors)} complement vectors"
            )
        dims.append(len(h_vectors))
        cocycles[k] = [Cochain.from_vector(n, k, v) for v in z_vectors]
        coboundaries[k] = [Cochain.from_vector(n, k, v) for v in b_vectors]
        complement[k] = [Cochain.from_vector(n, k, v) for v in h_vectors]
    if core_config.LOG_LEVEL == "DEBUG":
        print(f"DEBUG: cohomology of {d} -> {tuple(dims)}")
    return CohomologySummary(n, tuple(dims), cocycles, coboundaries, complement)


def validate_cocycle_basis(d: Codifferential, basis: Sequence[Cochain], degree: int = 2,
                           summary: Optional[CohomologySummary] = None) -> List[Cochain]:
    """
    Checks that `basis` is a basis of H^degree(d): cocycles, independent
    modulo coboundaries, and exactly h^degree of them.
    """
    summary = summary or cohomology(d)
    n = d.n
    for position, cochain in enumerate(basis):
        if cochain.n != n or cochain.degree != degree:
            raise InvalidBasisError(f"Basis element {position} is a degree {cochain.degree} cochain on Q^{cochain.n}")
        if cochain.is_polynomial():
            raise InvalidBasisError(f"Basis element {position} has polynomial coefficients")
        if coboundary(d, cochain):
            raise InvalidBasisError(f"Basis element {position} ({cochain}) is not a cocycle")
    boundaries = [c.to_vector() for c in summary.coboundaries[degree]]
    vectors = [c.to_vector() for c in basis]
    length = len(Cochain.basis_keys(n, degree))
    if vectors:
        rank = RatMatrix.from_columns(boundaries + vectors, length).rank()
        if rank != len(boundaries) + len(vectors):
            raise InvalidBasisError("Basis elements are dependent modulo coboundaries")
    if len(vectors) != summary.h(degree):
        raise InvalidBasisError(f"Expected {summary.h(degree)} classes in degree {degree}, got {len(vectors)}")
    return list(basis)


def h2_basis(d: Codifferential, override: Optional[Sequence[Cochain]] = None) -> List[Cochain]:
    """
    Basis of H^2(d): the deterministic complement, or a validated override.
    """
    summary = cohomology(d)
    if override is None:
        return list(summary.complement[2])
    return validate_cocycle_basis(d, override, 2, summary)


class CochainDecomposition:
    """
    Splits k-cochains as P = D(zeta) + Σ c_i Φ_i + Σ τ_j T_j, where Φ is the
    H^k complement basis and T completes the k-cocycles to all of L_k.
    One elimination serves every call to `decompose`.
    """

    def __init__(self, d: Codifferential, degree: int = 3, summary: Optional[CohomologySummary] = None):
        if degree < 1 or degree > d.n:
            raise DimensionMismatchError(f"Cannot decompose degree {degree} cochains on Q^{d.n}")
        self.d: Codifferential = d
        self.degree: int = degree
        summary = summary or cohomology(d, validate=False)
        n = d.n
        length = len(Cochain.basis_keys(n, degree))
        self.classes: List[Cochain] = list(summary.complement[degree])
        cocycle_vectors = [c.to_vector() for c in summary.cocycles[degree]]
        completion: List[Vector] = []
        if len(cocycle_vectors) < length:
            identity = RatMatrix.identity(length)
            stacked = RatMatrix.from_columns(cocycle_vectors + identity.columns(), length)
            _, pivots, _ = rref(stacked)
            offset = len(cocycle_vectors)
            completion = [identity.column(p - offset) for p in pivots if p >= offset]
        self.completion: List[Cochain] = [Cochain.from_vector(n, degree, v) for v in completion]
        d_matrix = coboundary_matrix(d, degree - 1)
        self._n_zeta: int = d_matrix.ncols
        columns = d_matrix.columns() + [c.to_vector() for c in self.classes] + completion
        self._solver = LinearSolver(RatMatrix.from_columns(columns, length))

    def decompose(self, cochain: Cochain) -> Tuple[Cochain, Vector, Vector]:
        """
        :return: (zeta, class coordinates c, completion coordinates tau)
        """
        if (cochain.n, cochain.degree) != (self.d.n, self.degree):
            raise DimensionMismatchError(f"Expected a degree {self.degree} cochain on Q^{self.d.n}")
        solution = self._solver.solve(cochain.to_vector())
        if solution is None:
            raise InternalConsistencyError(f"Decomposition system is not spanning for {cochain}")
        n_classes = len(self.classes)
        zeta = Cochain.from_vector(self.d.n, self.degree - 1, solution[:self._n_zeta])
        classes = solution[self._n_zeta:self._n_zeta + n_classes]
        completion = solution[self._n_zeta + n_classes:]
        return zeta, classes, completion

"""
The GL(V) action on codifferentials.

A basis change G (columns are the new basis vectors in old coordinates)
acts on the right: A' = G^-1 · A · Q(G), with Q(G) the induced map on Λ²V.
"""
import random
from fractions import Fraction
from typing import Any, List, Optional

from .cochains import Codifferential, multi_indices
from .exact_math import RatMatrix
from .exceptions import DimensionMismatchError, SingularBasisChangeError
from . import config as core_config


class BasisChange:
    """An invertible n x n rational matrix G."""

    def __init__(self, matrix: Any):
        g = matrix if isinstance(matrix, RatMatrix) else RatMatrix(matrix)
        if not g.is_square():
            raise DimensionMismatchError(f"Basis change must be square, got {g.nrows}x{g.ncols}")
        if g.det() == 0:
            raise SingularBasisChangeError(f"Basis change {g!r} is singular")
        self.matrix: RatMatrix = g
        self.n: int = g.nrows
        self._inverse: Optional[RatMatrix] = None

    @classmethod
    def identity(cls, n: int) -> 'BasisChange':
        return cls(RatMatrix.identity(n))

    @property
    def inverse(self) -> RatMatrix:
        if self._inverse is None:
            self._inverse = self.matrix.inverse()
        return self._inverse

    def compose(self, other: 'BasisChange') -> 'BasisChange':
        """Change by self, then by other: G_self · G_other."""
        return BasisChange(self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasisChange):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"BasisChange({self.matrix!r})"


def _as_basis_change(g: Any) -> BasisChange:
    return g if isinstance(g, BasisChange) else BasisChange(g)


def induced_q(g: Any) -> RatMatrix:
    """
    Λ²G in the colex pair order. Column j is the image of e_m ∧ e_n for the
    j-th pair (m, n); its entry at row i, pair (k, l), is
    G[k][m]·G[l][n] − G[l][m]·G[k][n].
    """
    change = _as_basis_change(g)
    gm = change.matrix.data
    pairs = multi_indices(change.n, 2)
    rows = [
        [gm[k - 1][m - 1] * gm[l - 1][n - 1] - gm[l - 1][m - 1] * gm[k - 1][n - 1] for (m, n) in pairs]
        for (k, l) in pairs
    ]
    return RatMatrix(rows, len(pairs))


def transform(d: Codifferential, g: Any) -> Codifferential:
    """d' = g^-1 ∘ d ∘ Λ²g, i.e. A' = G^-1 · A · Q(G)."""
    change = _as_basis_change(g)
    if change.n != d.n:
        raise DimensionMismatchError(f"Basis change on Q^{change.n} applied to a codifferential on Q^{d.n}")
    return Codifferential(change.inverse @ d.matrix @ induced_q(change))


def check_equivalence_witness(d: Codifferential, d_prime: Codifferential, g: Any) -> bool:
    """
    True iff det(G) != 0 and G·A' = A·Q(G).
    """
    g_matrix = g.matrix if isinstance(g, BasisChange) else (g if isinstance(g, RatMatrix) else RatMatrix(g))
    if d.n != d_prime.n or g_matrix.shape != (d.n, d.n):
        return False
    if g_matrix.det() == 0:
        return False
    return g_matrix @ d_prime.matrix == d.matrix @ induced_q(BasisChange(g_matrix))


def random_basis_change(rng: random.Random, n: int, entry_range: int = core_config.ORBIT_ENTRY_RANGE) -> BasisChange:
    """
    Matrix with entries drawn uniformly from {-entry_range..entry_range},
    redrawn until it is invertible.
    """
    for _ in range(core_config.MAX_SINGULAR_RESAMPLES):
        candidate = RatMatrix([[rng.randint(-entry_range, entry_range) for _ in range(n)] for _ in range(n)], n)
        if candidate.det() != 0:
            return BasisChange(candidate)
    raise SingularBasisChangeError(f"No invertible sample after {core_config.MAX_SINGULAR_RESAMPLES} draws")


def random_orbit_sample(d: Codifferential, seed: int, count: int,
                        entry_range: int = core_config.ORBIT_ENTRY_RANGE) -> List[Codifferential]:
    """
    `count` seeded random transforms of d. The generator is private to the call.
    """
    if count < 1:
        raise ValueError(f"Sample count must be at least 1, got {count}")
    rng = random.Random(seed)
    return [transform(d, random_basis_change(rng, d.n, entry_range)) for _ in range(count)]


def random_orbit_pairs(d: Codifferential, seed: int, count: int,
                       entry_range: int = core_config.ORBIT_ENTRY_RANGE) -> List[tuple]:
    """Like random_orbit_sample but keeps each basis change with its image."""
    if count < 1:
        raise ValueError(f"Sample count must be at least 1, got {count}")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        change = random_basis_change(rng, d.n, entry_range)
        out.append((change, transform(d, change)))
    return out


def random_bracket_matrix(rng: random.Random, n: int = 4,
                          entry_range: int = core_config.RANDOM_MATRIX_ENTRY_RANGE) -> Codifferential:
    """
    A sparse n x C(n,2) rational matrix read as a candidate bracket. One to
    three entries are set to p/q with 0 < |p| <= entry_range, 0 < q <= entry_range.
    Most draws are not Lie brackets.
    """
    ncols = len(multi_indices(n, 2))
    rows = [[Fraction(0)] * ncols for _ in range(n)]
    for _ in range(rng.randint(1, 3)):
        numerator = rng.choice([k for k in range(-entry_range, entry_range + 1) if k])
        rows[rng.randrange(n)][rng.randrange(ncols)] = Fraction(numerator, rng.randint(1, entry_range))
    return Codifferential(RatMatrix(rows, ncols))


def random_bracket_matrices(seed: int = core_config.JACOBI_ORACLE_SEED,
                            count: int = core_config.JACOBI_ORACLE_SAMPLES,
                            n: int = 4,
                            entry_range: int = core_config.RANDOM_MATRIX_ENTRY_RANGE) -> List[Codifferential]:
    """`count` seeded candidate brackets for checking the Jacobi criteria against each other."""
    if count < 1:
        raise ValueError(f"Sample count must be at least 1, got {count}")
    rng = random.Random(seed)
    return [random_bracket_matrix(rng, n, entry_range) for _ in range(count)]

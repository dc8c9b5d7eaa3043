"""
The cochain complex of V = Q^n with adjoint coefficients.

A degree-k cochain is a map Λ^k V -> V, stored sparsely as
{(I, j): coefficient} with I a strictly increasing 1-based multi-index of
size k and j a target index. Coefficients are Fractions or MultiPolys, so
the same bracket code serves validation and deformation expansion.

A Codifferential is a quadratic cochain in matrix form: column c of its
n x C(n,2) matrix holds [e_k, e_l] for the c-th pair (k, l) in colex order.
"""
import re
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .exact_math import MultiPoly, RatMatrix, Vector, to_rational
from .exceptions import DimensionMismatchError, InternalConsistencyError, InvalidCodifferentialError

MultiIndex = Tuple[int, ...]
CochainKey = Tuple[MultiIndex, int]

_SYMBOLS = {2: 'psi', 3: 'phi'}
_ONE = to_rational(1)


@lru_cache(maxsize=None)
def _multi_indices(n: int, k: int) -> Tuple[MultiIndex, ...]:
    return tuple(sorted(combinations(range(1, n + 1), k), key=lambda idx: tuple(reversed(idx))))


def multi_indices(n: int, k: int) -> List[MultiIndex]:
    """
    Increasing k-subsets of {1..n} in colex order. For n = 4, k = 2 this is
    (1,2), (1,3), (2,3), (1,4), (2,4), (3,4).
    """
    if k < 0:
        raise ValueError(f"Negative arity {k}")
    return list(_multi_indices(n, k))


@lru_cache(maxsize=None)
def pair_position(n: int) -> Dict[MultiIndex, int]:
    return {pair: pos for pos, pair in enumerate(_multi_indices(n, 2))}


@lru_cache(maxsize=None)
def _basis_keys(n: int, k: int) -> Tuple[CochainKey, ...]:
    return tuple((idx, j) for idx in _multi_indices(n, k) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def _key_position(n: int, k: int) -> Dict[CochainKey, int]:
    return {key: pos for pos, key in enumerate(_basis_keys(n, k))}


def cochain_space_dimension(n: int, k: int) -> int:
    return n * comb(n, k) if 0 <= k <= n else 0


def _coerce_scalar(value: Any):
    if isinstance(value, MultiPoly):
        return value
    return to_rational(value)


def _product(a: Any, b: Any, max_degree: Optional[int]):
    if isinstance(a, MultiPoly):
        return a.mul(b, max_degree)
    if isinstance(b, MultiPoly):
        return b.mul(a, max_degree)
    return a * b


class Cochain:
    """
    A k-cochain on Q^n. Zero coefficients are never stored.
    """

    def __init__(self, n: int, degree: int, values: Optional[Dict[CochainKey, Any]] = None):
        if n < 1:
            raise DimensionMismatchError(f"Dimension must be positive, got {n}")
        if degree < 0:
            raise DimensionMismatchError(f"Cochain degree must be non-negative, got {degree}")
        self.n: int = n
        self.degree: int = degree
        clean: Dict[CochainKey, Any] = {}
        for (idx, j), value in (values or {}).items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree or any(a >= b for a, b in zip(idx, idx[1:])) or (idx and (idx[0] < 1 or idx[-1] > n)):
                raise DimensionMismatchError(f"Multi-index {idx} is not an increasing {degree}-subset of 1..{n}")
            if not 1 <= j <= n:
                raise DimensionMismatchError(f"Target index {j} outside 1..{n}")
            coefficient = _coerce_scalar(value)
            if coefficient:
                clean[(idx, int(j))] = coefficient
        self.values: Dict[CochainKey, Any] = clean
        self._rows: Optional[Dict[MultiIndex, Dict[int, Any]]] = None

    @classmethod
    def _from_clean(cls, n: int, degree: int, values: Dict[CochainKey, Any]) -> 'Cochain':
        obj = cls.__new__(cls)
        obj.n = n
        obj.degree = degree
        obj.values = values
        obj._rows = None
        return obj

    @classmethod
    def zero(cls, n: int, degree: int) -> 'Cochain':
        return cls._from_clean(n, degree, {})

    @classmethod
    def basis_keys(cls, n: int, degree: int) -> List[CochainKey]:
        """(I, j) pairs in basis order: multi-index major, target minor."""
        return list(_basis_keys(n, degree))

    @classmethod
    def basis(cls, n: int, degree: int) -> List['Cochain']:
        return [cls._from_clean(n, degree, {key: _ONE}) for key in _basis_keys(n, degree)]

    @classmethod
    def from_vector(cls, n: int, degree: int, vector: Sequence[Any]) -> 'Cochain':
        keys = _basis_keys(n, degree)
        if len(vector) != len(keys):
            raise DimensionMismatchError(f"Vector of length {len(vector)} for a space of dimension {len(keys)}")
        return cls(n, degree, {key: v for key, v in zip(keys, vector)})

    def to_vector(self) -> Tuple[Any, ...]:
        zero = to_rational(0)
        return tuple(self.values.get(key, zero) for key in _basis_keys(self.n, self.degree))

    def _by_index(self) -> Dict[MultiIndex, Dict[int, Any]]:
        if self._rows is None:
            rows: Dict[MultiIndex, Dict[int, Any]] = {}
            for (idx, j), value in self.values.items():
                rows.setdefault(idx, {})[j] = value
            self._rows = rows
        return self._rows

    def value(self, idx: Sequence[int]) -> Dict[int, Any]:
        """Nonzero components of the image of e_idx, keyed by target index."""
        return dict(self._by_index().get(tuple(idx), {}))

    def coefficient(self, idx: Sequence[int], j: int):
        return self.values.get((tuple(idx), j), to_rational(0))

    @property
    def parity(self) -> int:
        """Z2-degree of the associated coderivation."""
        return (self.degree - 1) % 2

    def is_zero(self) -> bool:
        return not self.values

    def __bool__(self) -> bool:
        return bool(self.values)

    def is_polynomial(self) -> bool:
        return any(isinstance(v, MultiPoly) for v in self.values.values())

    def _check_compatible(self, other: 'Cochain') -> None:
        if not isinstance(other, Cochain):
            raise TypeError(f"Expected a Cochain, got {type(other).__name__}")
        if (self.n, self.degree) != (other.n, other.degree):
            raise DimensionMismatchError(
                f"Cannot combine a degree {self.degree} cochain on Q^{self.n} "
                f"with a degree {other.degree} cochain on Q^{other.n}"
            )

    def __add__(self, other: 'Cochain') -> 'Cochain':
        self._check_compatible(other)
        out = dict(self.values)
        for key, value in other.values.items():
            total = out[key] + value if key in out else value
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return Cochain._from_clean(self.n, self.degree, out)

    def __neg__(self) -> 'Cochain':
        return Cochain._from_clean(self.n, self.degree, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: 'Cochain') -> 'Cochain':
        return self + (-other)

    def scale(self, factor: Any, max_degree: Optional[int] = None) -> 'Cochain':
        c = _coerce_scalar(factor)
        out = {}
        for key, value in self.values.items():
            product = _product(value, c, max_degree)
            if product:
                out[key] = product
        return Cochain._from_clean(self.n, self.degree, out)

    def __mul__(self, factor: Any) -> 'Cochain':
        if isinstance(factor, Cochain):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.n, self.degree) == (other.n, other.degree) and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.n, self.degree, frozenset(self.values.items())))

    def map_coefficients(self, fn: Callable[[Any], Any]) -> 'Cochain':
        out = {}
        for key, value in self.values.items():
            mapped = fn(value)
            if mapped:
                out[key] = mapped
        return Cochain._from_clean(self.n, self.degree, out)

    def substitute(self, point: Dict[str, Any]) -> 'Cochain':
        """Evaluates polynomial coefficients at a rational point."""
        return self.map_coefficients(lambda v: v.evaluate(point) if isinstance(v, MultiPoly) else v)

    def truncate(self, max_degree: int) -> 'Cochain':
        return self.map_coefficients(lambda v: v.truncate(max_degree) if isinstance(v, MultiPoly) else v)

    def homogeneous_part(self, degree: int) -> 'Cochain':
        def part(v):
            if isinstance(v, MultiPoly):
                return v.homogeneous_part(degree)
            return v if degree == 0 else to_rational(0)
        return self.map_coefficients(part)

    def sorted_items(self) -> Iterator[Tuple[CochainKey, Any]]:
        positions = _key_position(self.n, self.degree)
        return iter(sorted(self.values.items(), key=lambda item: positions[item[0]]))

    def __str__(self) -> str:
        if not self.values:
            return '0'
        symbol = _SYMBOLS.get(self.degree, f"c{self.degree}")
        text = ''
        for (idx, j), value in self.sorted_items():
            basis = f"{symbol}^{{{''.join(str(i) for i in idx)}}}_{j}"
            if isinstance(value, MultiPoly):
                term = f"({value})*{basis}"
                sign = '+'
            else:
                sign = '-' if value < 0 else '+'
                magnitude = abs(value)
                term = basis if magnitude == 1 else f"{magnitude}*{basis}"
            if not text:
                text = term if sign == '+' else f"-{term}"
            else:
                text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"Cochain(n={self.n}, degree={self.degree}, {self})"


_TERM_PATTERN = re.compile(r'\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?(psi|phi|c\d+)\^\{(\d+)\}_(\d+)\s*')


def parse_cochain(text: str, n: int) -> Cochain:
    """
    Reads sums like "psi^{14}_1 - 2*psi^{24}_3 + 1/2*psi^{34}_2".
    The degree is the length of the multi-index; all terms must agree.
    """
    values: Dict[CochainKey, Any] = {}
    degree: Optional[int] = None
    pos = 0
    stripped = text.strip()
    if stripped == '0':
        raise ValueError("Cannot infer the degree of '0'; use Cochain.zero")
    while pos < len(stripped):
        match = _TERM_PATTERN.match(stripped, pos)
        if match is None or match.end() == pos:
            raise ValueError(f"Cannot parse cochain term at position {pos} in {text!r}")
        sign, magnitude, _, idx_text, target = match.groups()
        idx = tuple(int(ch) for ch in idx_text)
        if degree is None:
            degree = len(idx)
        elif degree != len(idx):
            raise DimensionMismatchError(f"Mixed degrees in {text!r}")
        coefficient = to_rational(magnitude or 1) * (-1 if sign == '-' else 1)
        key = (idx, int(target))
        values[key] = values.get(key, 0) + coefficient
        pos = match.end()
    if degree is None:
        raise ValueError(f"Empty cochain expression {text!r}")
    return Cochain(n, degree, values)


# ---------------------------------------------------------------------------
# Bracket of coderivations
# ---------------------------------------------------------------------------

def _shuffle_sign(inner: MultiIndex, outer: MultiIndex) -> int:
    inversions = sum(1 for x in inner for y in outer if x > y)
    return -1 if inversions % 2 else 1


def _insert(m: int, rest: MultiIndex) -> Tuple[int, MultiIndex]:
    """e_m ∧ e_rest = sign · e_merged; sign 0 when m already occurs."""
    if m in rest:
        return 0, ()
    position = sum(1 for x in rest if x < m)
    merged = tuple(sorted(rest + (m,)))
    return (-1 if position % 2 else 1), merged


def compose(phi: Cochain, psi: Cochain, max_degree: Optional[int] = None) -> Cochain:
    """
    Insertion of psi into phi:
    (phi ∘ psi)(e_I) = Σ_{J ⊂ I, |J| = deg psi} sgn(J, I∖J) · phi(psi(e_J) ∧ e_{I∖J}).
    """
    if phi.n != psi.n:
        raise DimensionMismatchError(f"Cochains on Q^{phi.n} and Q^{psi.n} cannot be composed")
    n = phi.n
    degree = phi.degree + psi.degree - 1
    if degree < 0:
        raise DimensionMismatchError("Composition of two 0-cochains has negative degree")
    if phi.degree == 0 or degree > n or not phi or not psi:
        return Cochain.zero(n, degree)
    phi_rows = phi._by_index()
    psi_rows = psi._by_index()
    result: Dict[CochainKey, Any] = {}
    for idx in _multi_indices(n, degree):
        for inner in combinations(idx, psi.degree):
            images = psi_rows.get(inner)
            if not images:
                continue
            outer = tuple(x for x in idx if x not in inner)
            sign = _shuffle_sign(inner, outer)
            for m, a in images.items():
                wedge_sign, merged = _insert(m, outer)
                if not wedge_sign:
                    continue
                targets = phi_rows.get(merged)
                if not targets:
                    continue
                for j, b in targets.items():
                    term = _product(b, a, max_degree)
                    if sign * wedge_sign < 0:
                        term = -term
                    key = (idx, j)
                    result[key] = result[key] + term if key in result else term
    return Cochain._from_clean(n, degree, {k: v for k, v in result.items() if v})


def nr_bracket(phi: Cochain, psi: Cochain, max_degree: Optional[int] = None) -> Cochain:
    """
    Graded bracket [phi, psi] = phi∘psi − (−1)^{|phi||psi|} psi∘phi of the
    coderivations extending phi and psi, with |·| the Z2-degree (degree − 1).

    :param max_degree: for polynomial coefficients, drop products above this total degree.
    """
    if phi.n != psi.n:
        raise DimensionMismatchError(f"Cochains on Q^{phi.n} and Q^{psi.n} cannot be bracketed")
    forward = compose(phi, psi, max_degree)
    backward = compose(psi, phi, max_degree)
    if phi.parity and psi.parity:
        return forward + backward
    return forward - backward


# ---------------------------------------------------------------------------
# Quadratic codifferentials
# ---------------------------------------------------------------------------

class Codifferential:
    """
    Lie bracket on Q^n as an n x C(n,2) matrix A with A[i-1][c] the
    coefficient of e_i in [e_k, e_l], (k, l) the c-th pair.
    """

    def __init__(self, matrix: Any):
        m = matrix if isinstance(matrix, RatMatrix) else RatMatrix(matrix)
        n = m.nrows
        if n < 2:
            raise DimensionMismatchError(f"Codifferentials need dimension at least 2, got {n}")
        if m.ncols != comb(n, 2):
            raise DimensionMismatchError(f"Expected {n}x{comb(n, 2)} structure matrix, got {m.nrows}x{m.ncols}")
        self.matrix: RatMatrix = m
        self.n: int = n
        self._cochain: Optional[Cochain] = None

    @classmethod
    def zero(cls, n: int) -> 'Codifferential':
        return cls(RatMatrix.zeros(n, comb(n, 2)))

    @classmethod
    def from_cochain(cls, cochain: Cochain) -> 'Codifferential':
        if cochain.degree != 2:
            raise DimensionMismatchError(f"Only 2-cochains are quadratic codifferentials, got degree {cochain.degree}")
        if cochain.is_polynomial():
            raise TypeError("Polynomial cochains must be evaluated before conversion")
        n = cochain.n
        positions = pair_position(n)
        rows = [[0] * comb(n, 2) for _ in range(n)]
        for (pair, j), value in cochain.values.items():
            rows[j - 1][positions[pair]] = value
        return cls(RatMatrix(rows, comb(n, 2)))

    @classmethod
    def from_brackets(cls, n: int, brackets: Dict[Tuple[int, int], Dict[int, Any]]) -> 'Codifferential':
        """
        Builds A from {(i, j): {k: coefficient}} meaning [e_i, e_j] = Σ coefficient·e_k.
        Pairs with i > j are read antisymmetrically.
        """
        positions = pair_position(n)
        rows = [[to_rational(0)] * comb(n, 2) for _ in range(n)]
        seen = set()
        for (i, j), image in brackets.items():
            if i == j:
                raise DimensionMismatchError(f"[e_{i}, e_{i}] is always zero and cannot be assigned")
            pair, sign = ((i, j), 1) if i < j else ((j, i), -1)
            if pair not in positions:
                raise DimensionMismatchError(f"Pair {pair} outside 1..{n}")
            if pair in seen:
                raise DimensionMismatchError(f"Bracket {pair} assigned twice")
            seen.add(pair)
            for k, coefficient in image.items():
                if not 1 <= int(k) <= n:
                    raise DimensionMismatchError(f"Target e_{k} outside 1..{n}")
                rows[int(k) - 1][positions[pair]] = sign * to_rational(coefficient)
        return cls(RatMatrix(rows, comb(n, 2)))

    def to_cochain(self) -> Cochain:
        if self._cochain is None:
            values = {}
            for c, pair in enumerate(_multi_indices(self.n, 2)):
                for i in range(self.n):
                    if self.matrix.data[i][c]:
                        values[(pair, i + 1)] = self.matrix.data[i][c]
            self._cochain = Cochain._from_clean(self.n, 2, values)
        return self._cochain

    def brackets(self) -> Dict[Tuple[int, int], Dict[int, Any]]:
        """Nonzero brackets as {(i, j): {k: coefficient}} with i < j."""
        out: Dict[Tuple[int, int], Dict[int, Any]] = {}
        for (pair, k), value in self.to_cochain().sorted_items():
            out.setdefault(pair, {})[k] = value
        return out

    def bracket_basis(self, k: int, l: int) -> Vector:
        if k == l:
            return (to_rational(0),) * self.n
        pair, sign = ((k, l), 1) if k < l else ((l, k), -1)
        column = self.matrix.column(pair_position(self.n)[pair])
        return column if sign > 0 else tuple(-x for x in column)

    def bracket_vectors(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        """[x, y] for coordinate vectors x, y."""
        if len(x) != self.n or len(y) != self.n:
            raise DimensionMismatchError(f"Vectors must have length {self.n}")
        xs = [to_rational(v) for v in x]
        ys = [to_rational(v) for v in y]
        weights = [xs[k - 1] * ys[l - 1] - xs[l - 1] * ys[k - 1] for k, l in _multi_indices(self.n, 2)]
        return self.matrix.apply(weights)

    def ad_matrix(self, x: Sequence[Any]) -> RatMatrix:
        """Matrix of ad(x) = [x, ·]; column j is [x, e_j]."""
        unit = [[1 if i == j else 0 for i in range(self.n)] for j in range(self.n)]
        return RatMatrix.from_columns([self.bracket_vectors(x, e) for e in unit], self.n)

    def rank(self) -> int:
        return self.matrix.rank()

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def perturb(self, cochain: Cochain) -> 'Codifferential':
        """d + cochain for a rational 2-cochain."""
        return Codifferential.from_cochain(self.to_cochain() + cochain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Codifferential):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __str__(self) -> str:
        return str(self.to_cochain())

    def __repr__(self) -> str:
        return f"Codifferential(n={self.n}, {self})"


def coboundary(d: Any, phi: Cochain, max_degree: Optional[int] = None) -> Cochain:
    """D(phi) = [d, phi]."""
    base = d.to_cochain() if isinstance(d, Codifferential) else d
    if base.n != phi.n:
        raise DimensionMismatchError(f"Codifferential on Q^{base.n} applied to a cochain on Q^{phi.n}")
    return nr_bracket(base, phi, max_degree)


# ---------------------------------------------------------------------------
# Jacobi validation
# ---------------------------------------------------------------------------

def jacobi_matrix_B(a_matrix: Any) -> RatMatrix:
    """
    The 6x4 matrix B(A) with A·B = 0 exactly when the 4x6 matrix A is a Lie bracket.
    Column c collects the Jacobi sum of the triple omitting e_{4-c}, up to sign.
    """
    m = a_matrix if isinstance(a_matrix, RatMatrix) else RatMatrix(a_matrix)
    if m.shape != (4, 6):
        raise DimensionMismatchError(f"B is defined for 4x6 matrices, got {m.nrows}x{m.ncols}")

    def a(i: int, j: int):
        return m.data[i - 1][j - 1]

    return RatMatrix([
        [a(1, 6), -a(2, 6), -a(2, 5) - a(1, 4), -a(1, 2) - a(2, 3)],
        [-a(1, 5), -a(3, 6) - a(1, 4), -a(3, 5), a(1, 1) - a(3, 3)],
        [-a(3, 6) - a(2, 5), -a(2, 4), a(3, 4), a(3, 2) + a(2, 1)],
        [a(1, 3), -a(4, 6) + a(1, 2), -a(4, 5) + a(1, 1), -a(4, 3)],
        [-a(4, 6) + a(2, 3), a(2, 2), a(4, 4) + a(2, 1), a(4, 2)],
        [a(4, 5) + a(3, 3), a(4, 4) + a(3, 2), a(3, 1), -a(4, 1)],
    ], 4)


def jacobi_oracle(d: Codifferential) -> Optional[Tuple[int, int, int]]:
    """
    Brute-force Jacobi sum over all basis triples.
    Returns the first failing triple (1-based, lexicographic) or None.
    """
    n = d.n
    for i, j, k in combinations(range(1, n + 1), 3):
        ei, ej, ek = ([1 if t == s else 0 for t in range(1, n + 1)] for s in (i, j, k))
        total = [
            x + y + z for x, y, z in zip(
                d.bracket_vectors(ei, d.bracket_vectors(ej, ek)),
                d.bracket_vectors(ej, d.bracket_vectors(ek, ei)),
                d.bracket_vectors(ek, d.bracket_vectors(ei, ej)),
            )
        ]
        if any(total):
            return (i, j, k)
    return None


def is_codifferential(d: Codifferential) -> bool:
    """
    [d, d] = 0. For n = 4 the matrix criterion A·B = 0 is evaluated as well
    and any disagreement raises InternalConsistencyError.
    """
    square_zero = nr_bracket(d.to_cochain(), d.to_cochain()).is_zero()
    if d.n == 4:
        matrix_zero = (d.matrix @ jacobi_matrix_B(d.matrix)).is_zero()
        if matrix_zero != square_zero:
            raise InternalConsistencyError(
                f"[d,d] = 0 is {square_zero} but A·B = 0 is {matrix_zero} for {d!r}"
            )
    return square_zero


def require_codifferential(d: Codifferential) -> Codifferential:
    if not is_codifferential(d):
        triple = jacobi_oracle(d)
        raise InvalidCodifferentialError(f"Jacobi identity fails on triple {triple} for {d}", failing_triple=triple)
    return d

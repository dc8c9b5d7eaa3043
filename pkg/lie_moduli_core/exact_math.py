"""
Exact arithmetic substrate: rationals, dense matrices over Q with deterministic
row reduction, and sparse multivariate polynomials over Q.

Rational is fractions.Fraction, which is always reduced with a positive
denominator. All containers here are immutable after construction.
"""
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy

from .exceptions import DimensionMismatchError, SingularMatrixError

Rational = Fraction
Vector = Tuple[Fraction, ...]
Exponent = Tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_rational(value: Any) -> Fraction:
    """
    Coerces ints, Fractions, sympy rationals and "p/q" strings into a Fraction.
    Floats are rejected because they are not exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"Refusing to read boolean {value!r} as a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Cannot parse a rational from {value!r}: {e}") from e
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"Cannot interpret {value!r} of type {type(value).__name__} as an exact rational")


def to_vector(values: Sequence[Any]) -> Vector:
    return tuple(to_rational(v) for v in values)


# ---------------------------------------------------------------------------
# Dense matrices
# ---------------------------------------------------------------------------

class RatMatrix:
    """
    Dense matrix over Q, stored as a tuple of row tuples.
    """

    def __init__(self, rows: Sequence[Sequence[Any]], ncols: Optional[int] = None):
        data = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionMismatchError("Matrix rows have different lengths")
            if ncols is not None and ncols != width:
                raise DimensionMismatchError(f"Declared {ncols} columns but rows have {width}")
        else:
            width = ncols or 0
        self.data: Tuple[Vector, ...] = data
        self.nrows: int = len(data)
        self.ncols: int = width

    @classmethod
    def _from_clean(cls, data: Tuple[Vector, ...], ncols: int) -> 'RatMatrix':
        obj = cls.__new__(cls)
        obj.data = data
        obj.nrows = len(data)
        obj.ncols = ncols
        return obj

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> 'RatMatrix':
        return cls._from_clean(tuple((_ZERO,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> 'RatMatrix':
        return cls._from_clean(tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def diagonal(cls, entries: Sequence[Any]) -> 'RatMatrix':
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], nrows: Optional[int] = None) -> 'RatMatrix':
        if not columns:
            return cls.zeros(nrows or 0, 0)
        height = len(columns[0])
        if nrows is not None and nrows != height:
            raise DimensionMismatchError(f"Columns have length {height}, expected {nrows}")
        if any(len(col) != height for col in columns):
            raise DimensionMismatchError("Columns have different lengths")
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(height)], len(columns))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self.data[i][j]
        return self.data[key]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self.data]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.data))

    def __repr__(self) -> str:
        body = ', '.join('[' + ', '.join(str(x) for x in row) + ']' for row in self.data)
        return f"RatMatrix({self.nrows}x{self.ncols}, [{body}])"

    def _check_same_shape(self, other: 'RatMatrix') -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_shape(other)
        return RatMatrix._from_clean(tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)), self.ncols)

    def __sub__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_shape(other)
        return RatMatrix._from_clean(tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)), self.ncols)

    def __neg__(self) -> 'RatMatrix':
        return self.scale(-1)

    def scale(self, factor: Any) -> 'RatMatrix':
        c = to_rational(factor)
        return RatMatrix._from_clean(tuple(tuple(c * x for x in row) for row in self.data), self.ncols)

    def __mul__(self, factor: Any) -> 'RatMatrix':
        if isinstance(factor, RatMatrix):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return RatMatrix._from_clean(
                tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b), _ZERO) for col in cols) for row in self.data),
                other.ncols,
            )
        return self.apply(other)

    def apply(self, vector: Sequence[Any]) -> Vector:
        if len(vector) != self.ncols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} does not fit {self.shape}")
        v = to_vector(vector)
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), _ZERO) for row in self.data)

    def transpose(self) -> 'RatMatrix':
        return RatMatrix._from_clean(tuple(self.columns()), self.nrows)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _require_square(self) -> None:
        if not self.is_square():
            raise DimensionMismatchError(f"Square matrix required, got {self.shape}")

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self.data[i][i] for i in range(self.nrows)), _ZERO)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'RatMatrix':
        return RatMatrix._from_clean(tuple(tuple(self.data[i][j] for j in cols) for i in rows), len(cols))

    def hstack(self, other: 'RatMatrix') -> 'RatMatrix':
        if self.nrows != other.nrows:
            raise DimensionMismatchError(f"Cannot place {other.shape} beside {self.shape}")
        return RatMatrix._from_clean(tuple(r1 + r2 for r1, r2 in zip(self.data, other.data)), self.ncols + other.ncols)

    def flatten(self) -> Vector:
        return tuple(x for row in self.data for x in row)

    def power(self, k: int) -> 'RatMatrix':
        self._require_square()
        result = RatMatrix.identity(self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def det(self) -> Fraction:
        self._require_square()
        rows = [list(r) for r in self.data]
        n = self.nrows
        result = _ONE
        for c in range(n):
            pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if pivot is None:
                return _ZERO
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                result = -result
            p = rows[c][c]
            result *= p
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    f = rows[i][c] / p
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return result

    def inverse(self) -> 'RatMatrix':
        self._require_square()
        n = self.nrows
        reduced, pivots, rank = rref(self.hstack(RatMatrix.identity(n)))
        if rank < n or pivots[:n] != list(range(n)):
            raise SingularMatrixError(f"Matrix {self!r} is singular")
        return reduced.submatrix(range(n), range(n, 2 * n))

    def rank(self) -> int:
        return rref(self)[2]


def rref(m: RatMatrix) -> Tuple[RatMatrix, List[int], int]:
    """
    Reduced row echelon form by Gauss-Jordan elimination.

    The pivot in each column is the first row at or below the current one
    with a nonzero entry, so the result is deterministic.

    :return: (reduced matrix, pivot column list, rank)
    """
    rows = [list(r) for r in m.data]
    pivots: List[int] = []
    r = 0
    for c in range(m.ncols):
        if r >= m.nrows:
            break
        pivot_row = next((i for i in range(r, m.nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = _ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pivot = rows[r]
        for i in range(m.nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot)]
        pivots.append(c)
        r += 1
    return RatMatrix._from_clean(tuple(tuple(row) for row in rows), m.ncols), pivots, r


def kernel_basis(m: RatMatrix) -> List[Vector]:
    """
    Basis of {v : m·v = 0}, one vector per free column of the RREF.
    """
    reduced, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [_ZERO] * m.ncols
        v[free] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced.data[i][free]
        basis.append(tuple(v))
    return basis


def span_basis(vectors: Sequence[Sequence[Any]], length: int) -> List[Vector]:
    """
    Row-reduced basis of the span of the given vectors (nonzero RREF rows).
    """
    if not vectors:
        return []
    reduced, _, rank = rref(RatMatrix(vectors, length))
    return [reduced.data[i] for i in range(rank)]


class LinearSolver:
    """
    Solves m·x = b for many right-hand sides after a single elimination.
    Free variables are set to zero; inconsistent systems give None.
    """

    def __init__(self, m: RatMatrix):
        self.nrows: int = m.nrows
        self.ncols: int = m.ncols
        reduced, pivots, _ = rref(m.hstack(RatMatrix.identity(m.nrows)))
        self.pivots: List[int] = [p for p in pivots if p < m.ncols]
        self.rank: int = len(self.pivots)
        # E with E·m = rref(m), stored sparsely row by row.
        self._transform: List[List[Tuple[int, Fraction]]] = [
            [(k, x) for k, x in enumerate(reduced.data[i][m.ncols:]) if x != 0]
            for i in range(m.nrows)
        ]

    def solve(self, b: Sequence[Any]) -> Optional[Vector]:
        if len(b) != self.nrows:
            raise DimensionMismatchError(f"Right-hand side has length {len(b)}, expected {self.nrows}")
        rhs = to_vector(b)
        y = [sum((x * rhs[k] for k, x in row if rhs[k]), _ZERO) for row in self._transform]
        if any(y[i] != 0 for i in range(self.rank, self.nrows)):
            return None
        x = [_ZERO] * self.ncols
        for i, p in enumerate(self.pivots):
            x[p] = y[i]
        return tuple(x)


def solve_linear(m: RatMatrix, b: Sequence[Any]) -> Optional[Vector]:
    """
    Particular solution of m·x = b with free variables set to zero, or None.
    """
    return LinearSolver(m).solve(b)


# ---------------------------------------------------------------------------
# Similarity invariants
# ---------------------------------------------------------------------------

def characteristic_polynomial(m: RatMatrix) -> Vector:
    """
    Coefficients (c_0, ..., c_n) of det(xI - m), lowest degree first, by the
    Faddeev-LeVerrier recursion. c_n is always 1.
    """
    m._require_square()
    n = m.nrows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    identity = RatMatrix.identity(n)
    acc = RatMatrix.zeros(n, n)
    for k in range(1, n + 1):
        acc = m @ acc + identity.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ acc).trace() / k
    return tuple(coeffs)


def elementary_symmetric(m: RatMatrix) -> Vector:
    """
    (e_1, ..., e_n): elementary symmetric functions of the eigenvalues of m.
    """
    coeffs = characteristic_polynomial(m)
    n = m.nrows
    return tuple(coeffs[n - k] * (-1) ** k for k in range(1, n + 1))


def minimal_polynomial(m: RatMatrix) -> Vector:
    """
    Monic minimal polynomial of m, lowest degree first, found as the first
    linear dependence among I, m, m^2, ...
    """
    m._require_square()
    n = m.nrows
    power = RatMatrix.identity(n)
    flattened = [power.flatten()]
    for _ in range(n):
        power = power @ m
        solution = solve_linear(RatMatrix.from_columns(flattened, n * n), power.flatten())
        if solution is not None:
            return tuple(-s for s in solution) + (_ONE,)
        flattened.append(power.flatten())
    raise SingularMatrixError(f"No minimal polynomial found for {m!r}")


def univariate_divmod(numerator: Sequence[Any], denominator: Sequence[Any]) -> Tuple[Vector, Vector]:
    """
    Long division of univariate polynomials given lowest degree first.
    """
    num = list(to_vector(numerator))
    den = list(to_vector(denominator))
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("Division by the zero polynomial")
    quotient = [_ZERO] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        factor = num[shift + len(den) - 1] / den[-1]
        quotient[shift] = factor
        if factor:
            for i, c in enumerate(den):
                num[shift + i] -= factor * c
    remainder = num[:len(den) - 1] or [_ZERO]
    return tuple(quotient), tuple(remainder)


def _ground_roots(coefficients: Sequence[Any]) -> Dict[Fraction, int]:
    coeffs = to_vector(coefficients)
    if all(c == 0 for c in coeffs):
        raise ValueError("The zero polynomial has every number as a root")
    x = sympy.Symbol('x')
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain='QQ')
    if poly.degree() <= 0:
        return {}
    return {to_rational(root): int(mult) for root, mult in poly.ground_roots().items()}


def rational_roots(coefficients: Sequence[Any]) -> List[Fraction]:
    """
    Distinct rational roots of sum(c_i x^i), coefficients lowest degree first,
    in ascending order.
    """
    return sorted(_ground_roots(coefficients))


def rational_root_multiset(coefficients: Sequence[Any]) -> List[Fraction]:
    """Rational roots repeated according to multiplicity, ascending."""
    roots = _ground_roots(coefficients)
    return [root for root in sorted(roots) for _ in range(roots[root])]


def polynomial_discriminant(coefficients: Sequence[Any]) -> Fraction:
    """Discriminant of sum(c_i x^i), coefficients lowest degree first; zero iff a root repeats."""
    coeffs = to_vector(coefficients)
    x = sympy.Symbol('x')
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain='QQ')
    return to_rational(poly.discriminant())


# ---------------------------------------------------------------------------
# Projective and weighted-projective normalization
# ---------------------------------------------------------------------------

def normalize_projective(values: Sequence[Any]) -> Tuple[int, ...]:
    """
    Scales a nonzero tuple to coprime integers whose first nonzero entry is positive.
    """
    vec = to_vector(values)
    if all(v == 0 for v in vec):
        raise ValueError("The zero tuple is not a projective point")
    lcm = 1
    for v in vec:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vec]
    common = 0
    for i in ints:
        common = gcd(common, abs(i))
    ints = [i // common for i in ints]
    first = next(i for i in ints if i != 0)
    if first < 0:
        ints = [-i for i in ints]
    return tuple(ints)


def normalize_weighted(values: Sequence[Any], weights: Optional[Sequence[int]] = None) -> Vector:
    """
    Canonical representative of a weighted-projective point under
    (v_1, ..., v_r) ~ (c^w_1 v_1, ..., c^w_r v_r), c in Q*.

    If the leading nonzero coordinate has weight 1 it is scaled to 1.
    Otherwise it is scaled to an integer free of w-th powers, positive when w
    is odd; for even w the remaining sign choice makes the first nonzero
    odd-weight coordinate positive.
    """
    vec = to_vector(values)
    wts = list(weights) if weights is not None else list(range(1, len(vec) + 1))
    if len(wts) != len(vec):
        raise DimensionMismatchError(f"{len(vec)} values but {len(wts)} weights")
    lead = next((i for i, v in enumerate(vec) if v != 0), None)
    if lead is None:
        return vec
    a = vec[lead]
    w = wts[lead]
    if w == 1:
        c = _ONE / a
    else:
        q = a.denominator
        integer = a.numerator * q ** (w - 1)
        root = 1
        for prime, exponent in sympy.factorint(abs(integer)).items():
            root *= int(prime) ** (exponent // w)
        c = Fraction(q, root)
        if w % 2 == 1 and a * c ** w < 0:
            c = -c
    scaled = tuple(v * c ** wt for v, wt in zip(vec, wts))
    if w % 2 == 0:
        odd = next((v for v, wt in zip(scaled, wts) if wt % 2 == 1 and v != 0), None)
        if odd is not None and odd < 0:
            scaled = tuple(v * (-1) ** wt for v, wt in zip(scaled, wts))
    return scaled


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials
# ---------------------------------------------------------------------------

def grlex_key(exponent: Exponent) -> Tuple[int, Exponent]:
    return (sum(exponent), exponent)


class MultiPoly:
    """
    Sparse polynomial over Q in named variables.

    `terms` maps exponent tuples (aligned with `variables`) to nonzero
    Fractions. Polynomials in different variable lists combine over the
    union of the lists, the left operand's order first.
    """

    def __init__(self, variables: Sequence[str], terms: Optional[Dict[Sequence[int], Any]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"Duplicate variable names in {self.variables}")
        clean: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            exp = tuple(int(e) for e in exponent)
            if len(exp) != len(self.variables):
                raise DimensionMismatchError(f"Exponent {exp} does not match variables {self.variables}")
            if any(e < 0 for e in exp):
                raise ValueError(f"Negative exponent in {exp}")
            c = to_rational(coefficient)
            if c != 0:
                clean[exp] = c
        self.terms: Dict[Exponent, Fraction] = clean

    @classmethod
    def _make(cls, variables: Tuple[str, ...], terms: Dict[Exponent, Fraction]) -> 'MultiPoly':
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, variables: Sequence[str]) -> 'MultiPoly':
        return cls._make(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: Any) -> 'MultiPoly':
        c = to_rational(value)
        names = tuple(variables)
        return cls._make(names, {(0,) * len(names): c} if c != 0 else {})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> 'MultiPoly':
        names = tuple(variables)
        if name not in names:
            raise KeyError(f"Unknown variable {name!r}; known: {names}")
        return cls._make(names, {tuple(1 if v == name else 0 for v in names): _ONE})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponent: Sequence[int], coefficient: Any = 1) -> 'MultiPoly':
        return cls(variables, {tuple(exponent): coefficient})

    @classmethod
    def generators(cls, variables: Sequence[str]) -> List['MultiPoly']:
        return [cls.variable(variables, name) for name in variables]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def lowest_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, degree: int) -> 'MultiPoly':
        return MultiPoly._make(self.variables, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def lowest_degree_part(self) -> 'MultiPoly':
        return self.homogeneous_part(self.lowest_degree()) if self.terms else self

    def truncate(self, max_degree: int) -> 'MultiPoly':
        return MultiPoly._make(self.variables, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponent), _ZERO)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), _ZERO)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def degree_in(self, name: str) -> int:
        idx = self.variables.index(name)
        return max((e[idx] for e in self.terms), default=-1)

    # -- alignment ----------------------------------------------------------

    def _coerce(self, other: Any) -> Optional['MultiPoly']:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(self.variables, other)
        return None

    def _reindex(self, variables: Tuple[str, ...]) -> Dict[Exponent, Fraction]:
        if variables == self.variables:
            return self.terms
        positions = [self.variables.index(v) if v in self.variables else None for v in variables]
        return {tuple(e[p] if p is not None else 0 for p in positions): c for e, c in self.terms.items()}

    def _aligned(self, other: 'MultiPoly') -> Tuple[Tuple[str, ...], Dict[Exponent, Fraction], Dict[Exponent, Fraction]]:
        if other.variables == self.variables:
            return self.variables, self.terms, other.terms
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return merged, self._reindex(merged), other._reindex(merged)

    def with_variables(self, variables: Sequence[str]) -> 'MultiPoly':
        names = tuple(variables)
        missing = [v for v, e in zip(self.variables, zip(*self.terms)) if v not in names and any(e)] if self.terms else []
        if missing:
            raise ValueError(f"Variables {missing} occur in {self} but not in {names}")
        return MultiPoly._make(names, self._reindex(names))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Any) -> 'MultiPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        names, a, b = self._aligned(rhs)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._make(names, out)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly._make(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> 'MultiPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> 'MultiPoly':
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def scale(self, factor: Any) -> 'MultiPoly':
        c = to_rational(factor)
        if c == 0:
            return MultiPoly.zero(self.variables)
        return MultiPoly._make(self.variables, {e: c * v for e, v in self.terms.items()})

    def mul(self, other: Any, max_degree: Optional[int] = None) -> 'MultiPoly':
        """
        Product, optionally dropping every term of total degree above max_degree.
        """
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            result = self.scale(other)
            return result if max_degree is None else result.truncate(max_degree)
        rhs = self._coerce(other)
        if rhs is None:
            raise TypeError(f"Cannot multiply a polynomial by {other!r}")
        names, a, b = self._aligned(rhs)
        out: Dict[Exponent, Fraction] = {}
        b_items = [(e, c, sum(e)) for e, c in b.items()]
        for e1, c1 in a.items():
            d1 = sum(e1)
            for e2, c2, d2 in b_items:
                if max_degree is not None and d1 + d2 > max_degree:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, _ZERO) + c1 * c2
        return MultiPoly._make(names, {e: c for e, c in out.items() if c != 0})

    def __mul__(self, other: Any) -> 'MultiPoly':
        if self._coerce(other) is None:
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            if not other.is_constant() or not other:
                raise TypeError("Use divide() for division by a non-constant polynomial")
            return self.scale(_ONE / other.constant_term())
        return self.scale(_ONE / to_rational(other))

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = MultiPoly.constant(self.variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        _, a, b = self._aligned(rhs)
        return a == b

    def __hash__(self) -> int:
        return hash(frozenset(self._named_terms()))

    def _named_terms(self):
        for e, c in self.terms.items():
            yield (tuple((v, k) for v, k in zip(self.variables, e) if k), c)

    # -- evaluation ---------------------------------------------------------

    def substitute(self, assignment: Dict[str, Any]) -> 'MultiPoly':
        """
        Replaces the named variables by rationals. The variable list is kept.
        """
        values = {name: to_rational(v) for name, v in assignment.items()}
        idx = [(i, values[name]) for i, name in enumerate(self.variables) if name in values]
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            coeff = c
            exp = list(e)
            for i, value in idx:
                if exp[i]:
                    coeff *= value ** exp[i]
                    exp[i] = 0
            if coeff:
                key = tuple(exp)
                out[key] = out.get(key, _ZERO) + coeff
        return MultiPoly._make(self.variables, {e: c for e, c in out.items() if c != 0})

    def evaluate(self, point: Dict[str, Any]) -> Fraction:
        reduced = self.substitute(point)
        if not reduced.is_constant():
            unset = sorted({v for e in reduced.terms for v, k in zip(self.variables, e) if k})
            raise ValueError(f"Variables {unset} were not assigned")
        return reduced.constant_term()

    # -- division -----------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("The zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def divide(self, divisor: Any) -> Tuple['MultiPoly', 'MultiPoly']:
        """
        Division by a single polynomial with respect to graded lex order.

        :return: (quotient, remainder) with self = quotient·divisor + remainder
                 and no term of the remainder divisible by the leading term of divisor.
        """
        g = self._coerce(divisor)
        if g is None:
            raise TypeError(f"Cannot divide by {divisor!r}")
        if not g:
            raise ZeroDivisionError("Division by the zero polynomial")
        names, remaining_terms, g_terms = self._aligned(g)
        g_poly = MultiPoly._make(names, dict(g_terms))
        lead_e, lead_c = g_poly.leading_term()
        remaining = dict(remaining_terms)
        quotient: Dict[Exponent, Fraction] = {}
        remainder: Dict[Exponent, Fraction] = {}
        while remaining:
            e = max(remaining, key=grlex_key)
            c = remaining[e]
            if all(x >= y for x, y in zip(e, lead_e)):
                qe = tuple(x - y for x, y in zip(e, lead_e))
                qc = c / lead_c
                quotient[qe] = qc
                for ge, gc in g_terms.items():
                    te = tuple(a + b for a, b in zip(qe, ge))
                    value = remaining.get(te, _ZERO) - qc * gc
                    if value:
                        remaining[te] = value
                    else:
                        remaining.pop(te, None)
            else:
                remainder[e] = c
                del remaining[e]
        return MultiPoly._make(names, quotient), MultiPoly._make(names, remainder)

    def is_divisible_by(self, divisor: Any) -> bool:
        return not self.divide(divisor)[1]

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for e, c in self.sorted_terms():
            factors = [name if k == 1 else f"{name}^{k}" for name, k in zip(self.variables, e) if k]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = f"{magnitude}*" + '*'.join(factors)
            pieces.append(('-' if c < 0 else '+', body))
        sign, body = pieces[0]
        text = ('-' if sign == '-' else '') + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """
    Exact add/sub/mul of two polynomials over the union of their variables.
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError(f"Unsupported polynomial operation: {op}")

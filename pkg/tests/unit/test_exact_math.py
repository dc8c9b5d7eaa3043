import pytest
from fractions import Fraction
from hypothesis import given, strategies as st, settings, HealthCheck

from lie_moduli_core.exact_math import (MultiPoly, RatMatrix, characteristic_polynomial, elementary_symmetric,
                                        kernel_basis, minimal_polynomial, normalize_projective, normalize_weighted,
                                        poly_arith, polynomial_discriminant, rational_root_multiset, rref,
                                        solve_linear, to_rational, univariate_divmod)
from lie_moduli_core.exceptions import DimensionMismatchError, SingularMatrixError

VARS = ('t1', 't2')

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    data = draw(st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return RatMatrix(data, cols)


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2)),
        small_ints,
        max_size=4,
    ))
    return MultiPoly(VARS, terms)


class TestRationals:
    def test_to_rational_reads_strings_and_ints(self):
        assert to_rational('3/6') == Fraction(1, 2)
        assert to_rational(-4) == Fraction(-4)
        assert to_rational(' -2/4 ').denominator == 2

    def test_to_rational_rejects_floats_and_bools(self):
        with pytest.raises(TypeError):
            to_rational(0.5)
        with pytest.raises(TypeError):
            to_rational(True)

    def test_to_rational_bad_string(self):
        with pytest.raises(ValueError):
            to_rational('one half')


class TestRref:
    def test_identity(self):
        reduced, pivots, rank = rref(RatMatrix.identity(2))
        assert reduced == RatMatrix.identity(2)
        assert pivots == [0, 1]
        assert rank == 2

    def test_zero(self):
        reduced, pivots, rank = rref(RatMatrix.zeros(3, 3))
        assert reduced.is_zero()
        assert pivots == []
        assert rank == 0

    def test_rank_one(self):
        reduced, pivots, rank = rref(RatMatrix([[1, 2], [2, 4]]))
        assert reduced == RatMatrix([[1, 2], [0, 0]])
        assert pivots == [0]
        assert rank == 1

    @given(m=matrices())
    @settings(max_examples=60, deadline=None)
    def test_rref_is_idempotent(self, m):
        once = rref(m)[0]
        assert rref(once)[0] == once

    @given(m=matrices())
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity(self, m):
        assert m.rank() + len(kernel_basis(m)) == m.ncols


class TestKernelAndSolve:
    def test_identity_kernel_empty(self):
        assert kernel_basis(RatMatrix.identity(3)) == []

    def test_zero_kernel_full(self):
        basis = kernel_basis(RatMatrix.zeros(2, 3))
        assert len(basis) == 3
        assert RatMatrix.from_columns(basis, 3).rank() == 3

    def test_row_kernel(self):
        (v,) = kernel_basis(RatMatrix([[1, 1]]))
        assert v[0] == -v[1] != 0

    @given(m=matrices())
    @settings(max_examples=60, deadline=None)
    def test_kernel_vectors_are_annihilated(self, m):
        for v in kernel_basis(m):
            assert not any(m.apply(v))

    def test_solve_identity(self):
        assert solve_linear(RatMatrix.identity(3), [1, 2, 3]) == (1, 2, 3)

    def test_free_variables_are_zero(self):
        assert solve_linear(RatMatrix([[1, 1]]), [2]) == (2, 0)

    def test_inconsistent(self):
        assert solve_linear(RatMatrix([[0]]), [1]) is None

    def test_wrong_rhs_length(self):
        with pytest.raises(DimensionMismatchError):
            solve_linear(RatMatrix.identity(2), [1, 2, 3])


class TestMatrixAlgebra:
    def test_det_and_inverse(self):
        m = RatMatrix([[2, 1], [1, 1]])
        assert m.det() == 1
        assert m @ m.inverse() == RatMatrix.identity(2)

    def test_singular_inverse(self):
        with pytest.raises(SingularMatrixError):
            RatMatrix([[1, 2], [2, 4]]).inverse()

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            RatMatrix([[1, 2], [3]])

    def test_characteristic_polynomial(self):
        assert characteristic_polynomial(RatMatrix([[1, 2], [3, 4]])) == (-2, -5, 1)

    def test_elementary_symmetric(self):
        assert elementary_symmetric(RatMatrix.diagonal([1, 2, 5])) == (8, 17, 10)

    def test_minimal_polynomial_of_diagonalizable_block(self):
        assert minimal_polynomial(RatMatrix.diagonal([1, 1, 2])) == (2, -3, 1)

    def test_minimal_polynomial_of_jordan_block(self):
        jordan = RatMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        assert len(minimal_polynomial(jordan)) == 4

    def test_univariate_divmod(self):
        quotient, remainder = univariate_divmod((2, -3, 1), (-1, 1))
        assert quotient == (-2, 1)
        assert remainder == (0,)


class TestRootsAndNormalization:
    def test_rational_roots_with_multiplicity(self):
        assert rational_root_multiset((2, -3, 1)) == [1, 2]
        assert rational_root_multiset((1, -2, 1)) == [1, 1]

    def test_irrational_roots_are_skipped(self):
        assert rational_root_multiset((-2, 0, 1)) == []

    def test_discriminant(self):
        assert polynomial_discriminant((1, -2, 1)) == 0
        assert polynomial_discriminant((-1, 0, 1)) == 4

    def test_normalize_projective(self):
        assert normalize_projective((2, -4, 6)) == (1, -2, 3)
        assert normalize_projective((0, -3, 6)) == (0, 1, -2)
        assert normalize_projective((Fraction(1, 2), Fraction(1, 3))) == (3, 2)

    def test_normalize_projective_zero(self):
        with pytest.raises(ValueError):
            normalize_projective((0, 0))

    def test_normalize_weighted_leading_weight_one(self):
        assert normalize_weighted((2, 8), (1, 2)) == (1, 2)

    def test_normalize_weighted_square_free(self):
        assert normalize_weighted((0, 8), (1, 2)) == (0, 2)
        assert normalize_weighted((0, -4), (1, 2)) == (0, -1)

    @given(c=st.integers(min_value=1, max_value=6), e1=small_ints, e2=small_ints, e3=small_ints)
    @settings(max_examples=60, deadline=None)
    def test_normalize_weighted_is_scaling_invariant(self, c, e1, e2, e3):
        values = (e1, e2, e3)
        scaled = (c * e1, c ** 2 * e2, c ** 3 * e3)
        assert normalize_weighted(values) == normalize_weighted(scaled)
        negated = (-e1, e2, -e3)
        assert normalize_weighted(values) == normalize_weighted(negated)


class TestMultiPoly:
    def test_product_of_variables(self):
        t1, t2 = MultiPoly.generators(VARS)
        assert poly_arith(t1, t2, 'mul') == MultiPoly.monomial(VARS, (1, 1))

    def test_difference_of_squares(self):
        t1, t2 = MultiPoly.generators(VARS)
        product = poly_arith(t1 + t2, t1 - t2, 'mul')
        assert product == t1 ** 2 - t2 ** 2
        assert str(product) == 't1^2 - t2^2'

    def test_add_negation_is_empty(self):
        t1, t2 = MultiPoly.generators(VARS)
        p = t1 * t2 + 3
        total = poly_arith(p, -p, 'add')
        assert total.terms == {}
        assert not total

    def test_unsupported_operation(self):
        with pytest.raises(ValueError):
            poly_arith(MultiPoly.zero(VARS), MultiPoly.zero(VARS), 'pow')

    def test_union_of_variables(self):
        a = MultiPoly.variable(('t1',), 't1')
        b = MultiPoly.variable(('t2',), 't2')
        assert (a * b).variables == ('t1', 't2')

    def test_mul_truncates(self):
        t1, t2 = MultiPoly.generators(VARS)
        assert (t1 + 1).mul(t2 + 1, max_degree=1) == t1 + t2 + 1

    def test_divide_by_monomial(self):
        t1, t2 = MultiPoly.generators(VARS)
        quotient, remainder = (t1 ** 2 * t2 + t1 * t2).divide(t1 * t2)
        assert quotient == t1 + 1
        assert not remainder
        assert not (t1 ** 2 + t2).is_divisible_by(t1 * t2)

    def test_evaluate_and_lowest_part(self):
        t1, t2 = MultiPoly.generators(VARS)
        p = t1 * t2 + t1 ** 2 * t2
        assert p.evaluate({'t1': 2, 't2': Fraction(1, 2)}) == 3
        assert p.lowest_degree_part() == t1 * t2
        with pytest.raises(ValueError):
            p.evaluate({'t1': 1})

    @given(a=polys(), b=polys(), c=polys())
    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a

import random

import pytest
from hypothesis import given, strategies as st, settings, HealthCheck

from lie_moduli_core.catalog import spec_form
from lie_moduli_core.cochains import (Cochain, Codifferential, coboundary, cochain_space_dimension, compose,
                                      is_codifferential, jacobi_matrix_B, jacobi_oracle, multi_indices,
                                      nr_bracket, parse_cochain, require_codifferential)
from lie_moduli_core.exact_math import RatMatrix
from lie_moduli_core.exceptions import DimensionMismatchError, InvalidCodifferentialError
from lie_moduli_core.transform import random_bracket_matrices, random_bracket_matrix
from lie_moduli_core import config as core_config


@pytest.fixture
def d2_star():
    """[e2,e4] = e1, [e3,e4] = e2."""
    return Codifferential.from_cochain(parse_cochain('psi^{24}_1 + psi^{34}_2', 4))


@pytest.fixture
def broken():
    """[e1,e2] = e3 + e4, [e3,e4] = e1; fails Jacobi on (1, 2, 3)."""
    return Codifferential.from_cochain(parse_cochain('psi^{12}_3 + psi^{12}_4 + psi^{34}_1', 4))


@st.composite
def cochains(draw, n=4, degree=2):
    keys = Cochain.basis_keys(n, degree)
    values = draw(st.dictionaries(st.sampled_from(keys), st.integers(min_value=-2, max_value=2), max_size=4))
    return Cochain(n, degree, values)


class TestIndexing:
    def test_colex_pairs(self):
        assert multi_indices(4, 2) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]

    def test_colex_triples(self):
        assert multi_indices(4, 3) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]

    def test_space_dimensions(self):
        assert [cochain_space_dimension(4, k) for k in range(6)] == [4, 16, 24, 16, 4, 0]
        assert cochain_space_dimension(3, 2) == 9

    def test_vector_order_is_index_major(self):
        c = parse_cochain('psi^{13}_2', 4)
        vector = c.to_vector()
        assert vector.index(1) == 1 * 4 + 1
        assert Cochain.from_vector(4, 2, vector) == c


class TestCochain:
    def test_parse_and_print(self):
        c = parse_cochain('psi^{24}_1 - 2*psi^{34}_3 + 1/2*psi^{14}_2', 4)
        assert str(c) == '1/2*psi^{14}_2 + psi^{24}_1 - 2*psi^{34}_3'
        assert c.degree == 2

    def test_parse_degree_three(self):
        c = parse_cochain('phi^{124}_3', 4)
        assert c.degree == 3
        assert str(c) == 'phi^{124}_3'

    def test_parse_merges_repeated_terms(self):
        assert parse_cochain('psi^{12}_3 - psi^{12}_3', 4).is_zero()

    def test_parse_rejects_mixed_degrees(self):
        with pytest.raises(DimensionMismatchError):
            parse_cochain('psi^{12}_3 + phi^{123}_1', 4)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_cochain('psi^{12}', 4)

    def test_rejects_unsorted_index(self):
        with pytest.raises(DimensionMismatchError):
            Cochain(4, 2, {((2, 1), 3): 1})

    def test_rejects_target_out_of_range(self):
        with pytest.raises(DimensionMismatchError):
            Cochain(3, 2, {((1, 2), 4): 1})

    def test_cannot_add_different_degrees(self):
        with pytest.raises(DimensionMismatchError):
            Cochain.basis(4, 2)[0] + Cochain.basis(4, 3)[0]

    def test_zero_coefficients_are_dropped(self):
        c = Cochain(4, 2, {((1, 2), 3): 0})
        assert c.is_zero()
        assert c == Cochain.zero(4, 2)


class TestBracket:
    def test_known_bracket_of_two_cochains(self):
        phi = parse_cochain('psi^{14}_3', 4)
        psi = parse_cochain('psi^{13}_1 + psi^{23}_2', 4)
        assert nr_bracket(phi, psi) == parse_cochain('phi^{134}_3 + phi^{124}_2', 4)

    def test_known_bracket_with_sign(self):
        phi = parse_cochain('psi^{14}_1 + psi^{24}_2', 4)
        psi = parse_cochain('psi^{23}_4', 4)
        assert nr_bracket(phi, psi) == -parse_cochain('phi^{123}_1 + phi^{234}_4', 4)

    def test_composition_degree(self):
        phi = parse_cochain('psi^{12}_3', 4)
        psi = parse_cochain('phi^{123}_4', 4)
        assert compose(phi, psi).degree == 4

    def test_bracket_of_one_cochains_is_commutator(self):
        x = Cochain(2, 1, {((1,), 2): 1})
        y = Cochain(2, 1, {((2,), 1): 1})
        # x∘y - y∘x = E22 - E11
        assert nr_bracket(x, y) == Cochain(2, 1, {((1,), 1): -1, ((2,), 2): 1})

    @given(a=cochains(), b=cochains())
    @settings(max_examples=50, deadline=None)
    def test_even_odd_symmetry(self, a, b):
        """Two 2-cochains are odd, so their bracket is symmetric."""
        assert nr_bracket(a, b) == nr_bracket(b, a)

    @given(a=cochains(degree=1), b=cochains())
    @settings(max_examples=50, deadline=None)
    def test_graded_antisymmetry(self, a, b):
        assert nr_bracket(a, b) == -nr_bracket(b, a)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            nr_bracket(Cochain.basis(3, 2)[0], Cochain.basis(4, 2)[0])


class TestCoboundary:
    def test_known_coboundary(self):
        d = spec_form('d3(1:3:0)')
        phi = parse_cochain('psi^{12}_2 + psi^{13}_3', 4)
        expected = parse_cochain('phi^{124}_1 - phi^{124}_2 - phi^{134}_3 - phi^{234}_3', 4)
        assert coboundary(d, phi) == expected

    @given(phi=cochains())
    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    def test_coboundary_squares_to_zero(self, d2_star, phi):
        assert coboundary(d2_star, coboundary(d2_star, phi)).is_zero()

    @given(phi=cochains(degree=1))
    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    def test_coboundary_squares_to_zero_on_sl2(self, phi):
        d = spec_form('d3')
        assert coboundary(d, coboundary(d, phi)).is_zero()


class TestCodifferential:
    def test_from_brackets_reads_antisymmetrically(self):
        d = Codifferential.from_brackets(4, {(4, 2): {1: 1}})
        assert d.brackets() == {(2, 4): {1: -1}}

    def test_from_brackets_rejects_diagonal(self):
        with pytest.raises(DimensionMismatchError):
            Codifferential.from_brackets(4, {(2, 2): {1: 1}})

    def test_shape_is_checked(self):
        with pytest.raises(DimensionMismatchError):
            Codifferential([[0] * 5] * 4)

    def test_round_trip_through_cochain(self, d2_star):
        assert Codifferential.from_cochain(d2_star.to_cochain()) == d2_star
        assert d2_star.rank() == 2

    def test_bracket_vectors(self, d2_star):
        e2 = (0, 1, 0, 0)
        e4 = (0, 0, 0, 1)
        assert d2_star.bracket_vectors(e2, e4) == (1, 0, 0, 0)
        assert d2_star.bracket_vectors(e4, e2) == (-1, 0, 0, 0)

    def test_perturb(self, d2_star):
        perturbed = d2_star.perturb(parse_cochain('psi^{14}_1', 4))
        assert perturbed.brackets()[(1, 4)] == {1: 1}


class TestJacobi:
    @pytest.mark.parametrize('spec', ['d1', 'd2*', 'd3*', 'd2#', 'd1#', 'd3', 'd1(1:2)', 'd3(1:3)', 'd3(1:2:5)'])
    def test_catalog_forms_are_codifferentials(self, spec):
        d = spec_form(spec)
        assert is_codifferential(d)
        assert jacobi_oracle(d) is None
        assert (d.matrix @ jacobi_matrix_B(d.matrix)).is_zero()

    def test_broken_bracket(self, broken):
        assert not is_codifferential(broken)
        assert jacobi_oracle(broken) == (1, 2, 3)
        assert not (broken.matrix @ jacobi_matrix_B(broken.matrix)).is_zero()

    def test_require_reports_failing_triple(self, broken):
        with pytest.raises(InvalidCodifferentialError) as info:
            require_codifferential(broken)
        assert info.value.failing_triple == (1, 2, 3)

    def test_b_is_only_for_four_dimensions(self):
        with pytest.raises(DimensionMismatchError):
            jacobi_matrix_B(Codifferential.zero(3).matrix)


@st.composite
def bracket_matrices(draw, n=4):
    """Sparse rational n x C(n,2) matrices with entries p/q, |p|, q <= RANDOM_MATRIX_ENTRY_RANGE."""
    bound = core_config.RANDOM_MATRIX_ENTRY_RANGE
    ncols = len(multi_indices(n, 2))
    entries = draw(st.dictionaries(
        st.tuples(st.integers(0, n - 1), st.integers(0, ncols - 1)),
        st.fractions(min_value=-bound, max_value=bound, max_denominator=bound),
        min_size=1, max_size=4,
    ))
    rows = [[entries.get((i, j), 0) for j in range(ncols)] for i in range(n)]
    return Codifferential(RatMatrix(rows, ncols))


def _three_checks(d):
    matrix_zero = (d.matrix @ jacobi_matrix_B(d.matrix)).is_zero()
    oracle_valid = jacobi_oracle(d) is None
    square_zero = nr_bracket(d.to_cochain(), d.to_cochain()).is_zero()
    return matrix_zero, oracle_valid, square_zero


class TestJacobiCriteriaAgree:
    def test_seeded_sample(self):
        samples = random_bracket_matrices(core_config.JACOBI_ORACLE_SEED, core_config.JACOBI_ORACLE_SAMPLES)
        assert len(samples) == core_config.JACOBI_ORACLE_SAMPLES
        verdicts = [_three_checks(d) for d in samples]
        disagreements = [d for d, v in zip(samples, verdicts) if len(set(v)) != 1]
        assert disagreements == []
        valid = sum(1 for v in verdicts if v[0])
        assert 0 < valid < len(samples)

    def test_sample_is_reproducible(self):
        assert random_bracket_matrices(7, 5) == random_bracket_matrices(7, 5)

    def test_single_entry_is_always_lie(self):
        rng = random.Random(core_config.JACOBI_ORACLE_SEED)
        for _ in range(50):
            d = random_bracket_matrix(rng)
            if len([x for row in d.matrix.to_lists() for x in row if x]) == 1:
                assert is_codifferential(d)

    @given(d=bracket_matrices())
    @settings(max_examples=200, deadline=None)
    def test_criteria_agree(self, d):
        assert len(set(_three_checks(d))) == 1
        assert is_codifferential(d) == (jacobi_oracle(d) is None)

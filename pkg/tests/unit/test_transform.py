import random

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st, settings

from lie_moduli_core.catalog import spec_form
from lie_moduli_core.cochains import is_codifferential
from lie_moduli_core.cohomology import cohomology
from lie_moduli_core.exact_math import RatMatrix
from lie_moduli_core.exceptions import DimensionMismatchError, SingularBasisChangeError
from lie_moduli_core.transform import (BasisChange, check_equivalence_witness, induced_q, random_basis_change,
                                       random_orbit_pairs, random_orbit_sample, transform)

SWAP_12 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


@pytest.fixture
def d1_family_point():
    return spec_form('d1(1:2)')


class TestInducedQ:
    def test_identity(self):
        assert induced_q(RatMatrix.identity(4)) == RatMatrix.identity(6)

    def test_diagonal(self):
        q = induced_q(RatMatrix.diagonal([2, 3, 5, 7]))
        assert q == RatMatrix.diagonal([6, 10, 15, 14, 21, 35])

    def test_swap_negates_the_swapped_pair(self):
        q = induced_q(SWAP_12)
        assert q[0, 0] == -1
        # e1∧e3 and e2∧e3 trade places
        assert q[2, 1] == 1 and q[1, 2] == 1

    @given(seed=st.integers(min_value=0, max_value=10 ** 6))
    @settings(max_examples=25, deadline=None)
    def test_multiplicative(self, seed):
        rng = random.Random(seed)
        g = random_basis_change(rng, 4)
        h = random_basis_change(rng, 4)
        assert induced_q(g.compose(h)) == induced_q(g) @ induced_q(h)


class TestTransform:
    def test_identity_is_trivial(self, d1_family_point):
        assert transform(d1_family_point, BasisChange.identity(4)) == d1_family_point

    def test_rescaling_a_basis_vector(self):
        d = spec_form('d1')
        image = transform(d, RatMatrix.diagonal([2, 1, 1, 1]))
        assert image.brackets() == {(2, 4): {1: Fraction(1, 2)}}

    @given(seed=st.integers(min_value=0, max_value=10 ** 6))
    @settings(max_examples=20, deadline=None)
    def test_action_composes(self, seed):
        d = spec_form('d3(1:2:5)')
        rng = random.Random(seed)
        g = random_basis_change(rng, 4)
        h = random_basis_change(rng, 4)
        assert transform(transform(d, g), h) == transform(d, g.compose(h))

    @given(seed=st.integers(min_value=0, max_value=10 ** 6))
    @settings(max_examples=20, deadline=None)
    def test_witness_and_jacobi_survive(self, seed):
        d = spec_form('d1#')
        g = random_basis_change(random.Random(seed), 4)
        image = transform(d, g)
        assert is_codifferential(image)
        assert check_equivalence_witness(d, image, g)

    def test_cohomology_is_invariant(self, d1_family_point):
        expected = cohomology(d1_family_point).dims
        for image in random_orbit_sample(d1_family_point, seed=7, count=3):
            assert cohomology(image).dims == expected

    def test_singular_change(self):
        with pytest.raises(SingularBasisChangeError):
            BasisChange([[1, 2], [2, 4]])

    def test_dimension_mismatch(self, d1_family_point):
        with pytest.raises(DimensionMismatchError):
            transform(d1_family_point, RatMatrix.identity(3))

    def test_witness_rejects_singular_and_wrong_maps(self, d1_family_point):
        assert not check_equivalence_witness(d1_family_point, d1_family_point, RatMatrix.zeros(4, 4))
        assert not check_equivalence_witness(spec_form('d1'), d1_family_point, RatMatrix.identity(4))


class TestOrbitSampling:
    def test_seeded_samples_repeat(self, d1_family_point):
        first = random_orbit_sample(d1_family_point, seed=11, count=4)
        second = random_orbit_sample(d1_family_point, seed=11, count=4)
        assert first == second

    def test_pairs_match_samples(self, d1_family_point):
        pairs = random_orbit_pairs(d1_family_point, seed=3, count=2)
        assert [image for _, image in pairs] == random_orbit_sample(d1_family_point, seed=3, count=2)
        for change, image in pairs:
            assert transform(d1_family_point, change) == image

    def test_count_must_be_positive(self, d1_family_point):
        with pytest.raises(ValueError):
            random_orbit_sample(d1_family_point, seed=1, count=0)

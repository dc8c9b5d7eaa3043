import pytest

from lie_moduli_core.catalog import spec_form
from lie_moduli_core.cochains import Codifferential
from lie_moduli_core.structure import (center, complete_basis, contains, derived_series_dims, is_ideal, is_nilpotent,
                                       is_solvable, killing_rank, lower_central_series_dims, nilradical)


class TestSeries:
    def test_filiform(self):
        d = spec_form('d2*')
        assert derived_series_dims(d) == (2, 0)
        assert lower_central_series_dims(d) == (2, 1, 0)
        assert is_nilpotent(d)
        assert is_solvable(d)

    def test_reductive(self):
        d = spec_form('d3')
        assert derived_series_dims(d) == (3,)
        assert not is_solvable(d)
        assert not is_nilpotent(d)

    def test_solvable_not_nilpotent(self):
        d = spec_form('d3*')
        assert derived_series_dims(d) == (3, 0)
        assert lower_central_series_dims(d) == (3,)
        assert is_solvable(d)
        assert not is_nilpotent(d)

    def test_abelian(self):
        d = Codifferential.zero(4)
        assert derived_series_dims(d) == (0,)
        assert is_nilpotent(d)


class TestIdealsAndCenter:
    def test_heisenberg_plus_line_center(self):
        assert len(center(spec_form('d1'))) == 2

    def test_center_of_sl2_plus_line(self):
        assert center(spec_form('d3')) == [(0, 0, 0, 1)]

    @pytest.mark.parametrize('spec, dim', [('d2#', 2), ('d1(1:0)', 3), ('d3(1:2:5)', 3), ('d2*', 4)])
    def test_nilradical_dimension(self, spec, dim):
        assert len(nilradical(spec_form(spec))) == dim

    def test_is_ideal(self):
        d = spec_form('d1')
        assert is_ideal(d, [(1, 0, 0, 0)])
        assert not is_ideal(d, [(0, 1, 0, 0)])

    def test_killing_rank(self):
        assert killing_rank(spec_form('d3')) == 3
        assert killing_rank(spec_form('d2*')) == 0
        assert killing_rank(Codifferential.zero(4)) == 0


class TestLinearHelpers:
    def test_complete_basis(self):
        assert complete_basis([(1, 1, 0, 0)], 4) == [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]

    def test_contains(self):
        plane = [(1, 0, 0, 0), (0, 1, 0, 0)]
        assert contains(plane, (2, -3, 0, 0))
        assert not contains(plane, (0, 0, 1, 0))
        assert contains([], (0, 0, 0, 0))

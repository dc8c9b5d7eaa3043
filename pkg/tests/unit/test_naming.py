from fractions import Fraction

import pytest

from lie_moduli_core.catalog import parse_point_spec
from lie_moduli_core.naming import bs_name3, make_point, pair_parameters, triple_parameters
from lie_moduli_core.points import (ABELIAN, D1, D1_FAMILY, D2_FAMILY, D3_BIG, D3_SMALL, ModuliPoint,
                                    display_parameters)


class TestParameters:
    def test_pair(self):
        assert sorted(pair_parameters((3, 2))) == [1, 2]
        assert pair_parameters((0, 1)) is None

    def test_triple(self):
        assert sorted(triple_parameters((8, 17, 10))) == [1, 2, 5]
        assert triple_parameters((0, 0, 2)) is None

    def test_display_parameters(self):
        assert display_parameters((Fraction(1, 2), 1)) == (1, 2)
        assert display_parameters((2, 6), symmetric=False) == (1, 3)


class TestNames:
    def test_singletons(self):
        point = make_point(ABELIAN)
        assert (point.bs_name, point.agaoka_name) == ('C^4', '')
        assert parse_point_spec('d1').bs_name == 'n3(C)+C'

    def test_heisenberg_family(self):
        point = make_point(D1_FAMILY, (3, 2))
        assert point.label == 'd1(1:2)'
        assert point.bs_name == 'g8(2/9)'
        assert point.agaoka_name == 'L8(2)'

    @pytest.mark.parametrize('invariants, bs, agaoka', [
        ((1, 3), 'g1(3)', 'L4(3)'),
        ((1, 0), 'r3,1(C)+C', 'L4(0)'),
        ((0, 1), 'r2(C)+C^2', 'L4(inf)'),
        ((1, 1), 'g5', 'L4(1)'),
    ])
    def test_small_family(self, invariants, bs, agaoka):
        point = make_point(D3_SMALL, invariants)
        assert (point.bs_name, point.agaoka_name) == (bs, agaoka)

    @pytest.mark.parametrize('invariants, bs', [
        ((1, 0, 0), 'g2(0,0)'),
        ((8, 17, 10), 'g2(5/256,17/64)'),
        ((0, -1, 0), 'r3,-1(C)+C'),
        ((2, 1, 0), 'r3(C)+C'),
    ])
    def test_big_family(self, invariants, bs):
        assert make_point(D3_BIG, invariants).bs_name == bs

    def test_irrational_big_point_keeps_a_name(self):
        point = make_point(D3_BIG, (0, 0, 2))
        assert point.parameters is None
        assert point.agaoka_name == 'L7'

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            make_point('d9')

    @pytest.mark.parametrize('family, parameters, name', [
        (D1, None, 'n3'),
        (D2_FAMILY, (1, 1), 'r3(C)'),
        (D2_FAMILY, (1, 0), 'r2(C)+C'),
        (D2_FAMILY, (1, 2), 'r3,2(C)'),
        (D2_FAMILY, None, 'r3,q(C)'),
    ])
    def test_three_dimensional(self, family, parameters, name):
        assert bs_name3(family, parameters) == name


class TestModuliPoint:
    def test_unknown_family_tag(self):
        with pytest.raises(ValueError):
            ModuliPoint('d2', (), dimension=4)

    def test_label_without_parameters(self):
        assert ModuliPoint(D1_FAMILY, (1, 1)).label == 'd1[1,1]'

    def test_dimension_is_part_of_identity(self):
        assert ModuliPoint(ABELIAN, dimension=3) != ModuliPoint(ABELIAN)

    def test_repr_and_dict(self):
        point = parse_point_spec('d2*')
        assert repr(point) == 'ModuliPoint(d2*, n4(C), L2)'
        assert point.to_dict()['parameters'] is None

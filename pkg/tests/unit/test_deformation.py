import pytest
from unittest.mock import patch

from lie_moduli_core.catalog import parse_point_spec, spec_form
from lie_moduli_core.classifier import classify
from lie_moduli_core.cochains import is_codifferential, parse_cochain
from lie_moduli_core.deformation import (PolynomialCodifferential, evaluate, extend, infinitesimal, obstruction_class,
                                         parameter_names, scan_relation_variety, split_by_monomial)
from lie_moduli_core.exact_math import MultiPoly, RatMatrix
from lie_moduli_core.exceptions import DimensionMismatchError, InvalidBasisError
from lie_moduli_core.known_bases import validated_basis
from lie_moduli_core import config as core_config


def _deform(spec: str, max_order: int = core_config.DEFAULT_MAX_ORDER):
    return extend(spec_form(spec), validated_basis(spec), max_order=max_order)


def _var(result, name: str) -> MultiPoly:
    return MultiPoly.variable(result.variables, name)


def _span_rank(polys, variables) -> int:
    exponents = sorted({e for p in polys for e in p.with_variables(variables).terms})
    rows = [[p.with_variables(variables).coefficient(e) for e in exponents] for p in polys]
    return RatMatrix(rows, len(exponents)).rank() if exponents else 0


def _unit_multiple(relation: MultiPoly, generator: MultiPoly) -> bool:
    """relation = generator · u with u(0) != 0."""
    quotient, remainder = relation.divide(generator)
    return not remainder and quotient.constant_term() != 0


def _proportional(a: MultiPoly, b: MultiPoly) -> bool:
    exponent, coefficient = b.leading_term()
    scale = a.coefficient(exponent) / coefficient
    return scale != 0 and a == b.scale(scale)


def _vanish_on(relations, zeros) -> bool:
    return all(r.substitute(zeros).is_zero() for r in relations)


@pytest.fixture
def d10_result():
    """Deformation of d1(1:0) in the literature variables t1, t2."""
    return _deform('d1(1:0)')


class TestInfinitesimal:
    def test_attaches_one_variable_per_class(self):
        d = spec_form('d1(1:0)')
        d_inf = infinitesimal(d, validated_basis('d1(1:0)'))
        assert d_inf.variables == ('t1', 't2')
        assert d_inf.base() == d

    def test_split_by_monomial(self):
        d = spec_form('d1(1:0)')
        d_inf = infinitesimal(d, validated_basis('d1(1:0)'))
        pieces = split_by_monomial(d_inf.cochain, d_inf.variables)
        assert [e for e, _ in pieces] == [(0, 0), (0, 1), (1, 0)]
        assert pieces[0][1] == d.to_cochain()
        assert pieces[1][1] == parse_cochain('psi^{13}_2', 4)
        assert pieces[2][1] == parse_cochain('psi^{14}_1 + psi^{34}_3', 4)

    def test_evaluate_by_position_and_name(self):
        d_inf = infinitesimal(spec_form('d1(1:0)'), validated_basis('d1(1:0)'))
        assert d_inf.evaluate([1, 0]) == d_inf.evaluate({'t1': 1})
        with pytest.raises(KeyError):
            d_inf.evaluate({'t9': 1})
        with pytest.raises(DimensionMismatchError):
            d_inf.evaluate([1])

    def test_rejects_non_quadratic_cochains(self):
        with pytest.raises(DimensionMismatchError):
            PolynomialCodifferential(parse_cochain('phi^{123}_1', 4), ('t1',))

    def test_parameter_names(self):
        assert parameter_names(3) == ('t1', 't2', 't3')


class TestExtend:
    def test_single_relation_through_both_axes(self, d10_result):
        assert len(d10_result.relations) == 1
        assert _unit_multiple(d10_result.relations[0], _var(d10_result, 't1') * _var(d10_result, 't2'))

    def test_orbifold_point_relations(self):
        result = _deform('d1(1:-1)')
        t1t2 = _var(result, 't1') * _var(result, 't2')
        assert result.relations
        assert all(r.is_divisible_by(t1t2) for r in result.relations)
        assert any(_unit_multiple(r, t1t2) for r in result.relations)

    @pytest.mark.parametrize('spec', ['d1#', 'd3(1:3)', 'd3(1:-2)', 'd3(1:1)', 'd3*', 'd1(1:2)', 'd3(1:2:-3)'])
    def test_unobstructed(self, spec):
        result = _deform(spec)
        assert result.relations == []
        assert not result.residuals

    def test_third_order_relation(self):
        result = _deform('d3(1:1:0)')
        assert len(result.relations) == 1
        relation = result.relations[0]
        t1, t2, t3 = (_var(result, name) for name in ('t1', 't2', 't3'))
        assert relation.lowest_degree() == 3
        assert _unit_multiple(relation, t2 * t3 * (t1 + t2))
        assert _proportional(relation, t2 * t3 * (t1 + t2) * (t1 + t2 + 1))

    def test_small_family_point_relation(self):
        result = _deform('d3(1:2)')
        assert len(result.relations) == 1
        t1, t2, t3, t4, t5 = (_var(result, name) for name in result.variables)
        assert _proportional(result.relations[0], t1 * t2 * (t3 * t5 - t4 - 1))

    def test_filiform_relations(self):
        result = _deform('d2*')
        assert len(result.relations) == 5
        t = {name: _var(result, name) for name in result.variables}
        expected = [t['t2'] * t['t5'], t['t5'] * t['t6'], t['t1'] * t['t4'] + 2 * t['t2'] * t['t6'],
                    t['t4'] * t['t5']]
        quadratic = [r.homogeneous_part(2) for r in result.relations]
        assert _span_rank(quadratic, result.variables) == 4
        assert _span_rank(quadratic + expected, result.variables) == 4

    @pytest.mark.parametrize('spec', ['d2#', 'd3'])
    def test_rigid_points(self, spec):
        result = extend(spec_form(spec))
        assert result.variables == ()
        assert result.converged
        assert result.max_order == 1

    def test_converges_without_corrections(self):
        result = _deform('d1(1:2)')
        assert result.converged
        assert result.corrections == []
        assert classify(result.evaluate({'t1': 1})) == parse_point_spec('d1(1:1)')

    def test_solutions_give_lie_algebras(self, d10_result):
        for point in scan_relation_variety(d10_result, limit=4):
            assert is_codifferential(evaluate(d10_result, point))

    def test_scan_finds_both_axes(self, d10_result):
        found = scan_relation_variety(d10_result)
        assert {'t1': 0, 't2': 1} in found
        assert {'t1': 1, 't2': 0} in found

    def test_to_dict(self, d10_result):
        out = d10_result.to_dict()
        assert out['parameters'] == ['t1', 't2']
        assert len(out['relations']) == 1
        assert out['max_order'] == d10_result.max_order
        assert d10_result.unexplained_residuals == []

    def test_max_order_must_be_positive(self):
        with pytest.raises(ValueError):
            extend(spec_form('d1(1:0)'), max_order=0)

    def test_rejects_a_bad_basis(self):
        basis = validated_basis('d1(1:2)')
        with pytest.raises(InvalidBasisError):
            extend(spec_form('d1(1:2)'), basis * 2)

    def test_debug_logging(self, capsys):
        with patch.object(core_config, 'LOG_LEVEL', 'DEBUG'):
            _deform('d1(1:0)', max_order=2)
        assert "DEBUG: order 2:" in capsys.readouterr().out


class TestPublishedBases:
    def test_sum_line_point(self):
        result = _deform('d3(1:2:3)', max_order=3)
        assert len(result.relations) == 1
        relation = result.relations[0]
        t1, t2 = _var(result, 't1'), _var(result, 't2')
        assert relation.is_divisible_by(t1)
        assert _proportional(relation.lowest_degree_part(), t1 * t2)
        assert classify(result.evaluate({'t1': 1})) == parse_point_spec('d1(1:2)')

    def test_zero_sum_point(self):
        result = _deform('d3(1:-1:0)', max_order=3)
        assert result.relations
        assert _vanish_on(result.relations, {'t1': 0, 't2': 0, 't4': 0})
        assert _vanish_on(result.relations, {'t3': 0, 't4': 0, 't5': 0})
        assert classify(result.evaluate({'t3': 1})) == parse_point_spec('d3')
        assert classify(result.evaluate({'t3': 1, 't5': 1})) == parse_point_spec('d1(1:-1)')

    def test_small_family_end_point(self):
        result = _deform('d3(1:0)', max_order=2)
        t = {name: _var(result, name) for name in result.variables}
        published = [t['t1'] * t['t4'] + 2 * t['t3'] * t['t7'] + 2 * t['t2'] * t['t5'],
                     t['t2'] * t['t4'] - t['t2'] * t['t6'] + t['t1'] * t['t7'],
                     t['t1'] * t['t5'] + t['t3'] * t['t4'] + t['t3'] * t['t6']]
        quadratic = [r.homogeneous_part(2) for r in result.relations]
        assert _span_rank(quadratic, result.variables) == 3
        assert _span_rank(quadratic + published, result.variables) == 3
        assert _vanish_on(result.relations, {'t1': 0, 't2': 0, 't3': 0})
        assert classify(result.evaluate({'t5': 1})) == parse_point_spec('d3(1:1:0)')

    def test_heisenberg_extension(self):
        result = _deform('d1', max_order=2)
        assert len(result.variables) == 13
        assert _vanish_on(result.relations, {name: 0 for name in result.variables if name != 't5'})
        assert classify(result.evaluate({'t5': 1})) == parse_point_spec('d2*')
        others = {name: 0 for name in result.variables if name not in ('t11', 't13')}
        assert _vanish_on(result.relations, {**others, 't11': 1, 't13': -1})
        assert classify(result.evaluate({'t11': 1, 't13': -1})) == parse_point_spec('d1#')


class TestObstructionClass:
    @pytest.mark.parametrize('spec', ['d1#', 'd3(1:2:-3)'])
    def test_vanishes(self, spec):
        assert not any(obstruction_class(spec_form(spec), validated_basis(spec)))

    def test_nonzero(self):
        assert any(obstruction_class(spec_form('d1(1:0)'), validated_basis('d1(1:0)')))

    def test_starts_at_order_two(self):
        with pytest.raises(ValueError):
            obstruction_class(spec_form('d1(1:0)'), order=1)

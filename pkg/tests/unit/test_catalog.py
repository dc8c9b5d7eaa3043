import pytest

from lie_moduli_core.catalog import (FAMILY_FORMULAS, TABLE2, TABLE3, bracket_table, catalog_forms, describe,
                                     match_row, on_repeated_line, on_sum_line, on_trace_free_line, on_zero_line,
                                     parse_point_spec, spec_form, table_entries)
from lie_moduli_core.cochains import is_codifferential
from lie_moduli_core.exceptions import UnknownPointSpecError
from lie_moduli_core.points import D1_FAMILY, D3_BIG, ModuliPoint


class TestPointSpecs:
    @pytest.mark.parametrize('spec', ['d1', 'd2*', 'd3*', 'd2#', 'd1#', 'd3', 'abelian', 'd1(1:2)', 'd3(1:3)',
                                      'd3(1:2:5)', 'd3(1:1:0)', 'd1(1:-1)'])
    def test_round_trip_labels(self, spec):
        assert parse_point_spec(spec).label == spec

    def test_fractional_parameters(self):
        assert parse_point_spec('d3(1/2:1:5/2)') == parse_point_spec('d3(1:2:5)')

    @pytest.mark.parametrize('spec', ['d1(0:0)', 'd3(0:0:0)', 'd7', 'd3(1:2', 'd1(1:2:3)', 'd3(a:b)', 'd2'])
    def test_unknown_specs(self, spec):
        with pytest.raises(UnknownPointSpecError):
            parse_point_spec(spec)

    def test_three_dimensional_aliases(self):
        assert parse_point_spec('sl2', 3) == parse_point_spec('d3', 3)
        assert parse_point_spec('n3', 3).dimension == 3

    def test_spec_form_uses_literal_parameters(self):
        assert spec_form('d3(2:4:10)') != spec_form('d3(1:2:5)')
        assert spec_form('d1(1:-1)').brackets()[(2, 4)] == {2: 1}

    def test_unknown_spec_message_is_readable(self):
        with pytest.raises(UnknownPointSpecError) as info:
            spec_form('d9')
        assert str(info.value).startswith("Unknown point-spec 'd9'")


class TestFormulas:
    def test_bracket_table(self):
        assert bracket_table(spec_form('d2*')) == ['[e2,e4] = e1', '[e3,e4] = e2']
        assert bracket_table(spec_form('d1(1:-1)')) == ['[e2,e3] = e1', '[e2,e4] = e2', '[e3,e4] = e2 - e3']

    def test_formulas_cover_every_family(self):
        families = {entry.point.family for entry in TABLE2}
        assert families <= set(FAMILY_FORMULAS)

    @pytest.mark.parametrize('spec', [entry.representative for entry in TABLE2])
    def test_representatives_are_lie_algebras(self, spec):
        assert is_codifferential(spec_form(spec))

    def test_catalog_forms(self):
        forms = catalog_forms()
        assert len(forms) == len(TABLE2)
        assert forms['d2#'] == spec_form('d2#')

    def test_entry_to_dict(self):
        entry = next(e for e in TABLE2 if e.row == 'd2*')
        out = entry.to_dict()
        assert out['expected'] == [4, 6, 5, 2]
        assert out['bs_name'] == 'n4(C)'
        assert 'printed table' in out['notes']


class TestRows:
    @pytest.mark.parametrize('entry', TABLE2 + TABLE3, ids=lambda e: e.row)
    def test_representative_matches_its_own_row(self, entry):
        assert match_row(entry.point) is entry

    @pytest.mark.parametrize('spec, row', [
        ('d3(1:1:0)', 'd3(l:m:l+m)'),
        ('d3(2:3:5)', 'd3(l:m:l+m)'),
        ('d3(1:2:0)', 'd3(l:m:0)'),
        ('d3(1:3:-4)', 'd3(l:m:-l-m)'),
        ('d3(1:1:3)', 'd3(l:m:n)'),
        ('d1(1:3)', 'd1(l:m)'),
        ('d3(2:7)', 'd3(l:m)'),
    ])
    def test_precedence(self, spec, row):
        assert match_row(parse_point_spec(spec)).row == row

    def test_special_lines(self):
        assert on_sum_line(parse_point_spec('d3(1:2:3)'))
        assert on_zero_line(parse_point_spec('d3(1:5:0)'))
        assert on_trace_free_line(parse_point_spec('d3(2:3:-5)'))
        assert on_repeated_line(parse_point_spec('d3(2:2:7)'))
        assert not on_repeated_line(parse_point_spec('d3(1:2:5)'))
        assert not on_sum_line(parse_point_spec('d1(1:2)'))

    def test_table_entries(self):
        assert table_entries(3) is TABLE3
        with pytest.raises(UnknownPointSpecError):
            table_entries(5)

    def test_describe(self):
        out = describe(parse_point_spec('d3(1:2:5)'))
        assert out['table_row'] == 'd3(l:m:n)'
        assert out['standard_form'] == str(spec_form('d3(1:2:5)'))
        assert out['family'] == D3_BIG

    def test_describe_without_rational_form(self):
        point = ModuliPoint(D1_FAMILY, (1, 1))
        out = describe(point)
        assert out['standard_form'] is None
        assert out['table_row'] == 'd1(l:m)'

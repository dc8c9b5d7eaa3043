import pytest

from lie_moduli_core.catalog import spec_form
from lie_moduli_core.cohomology import cohomology
from lie_moduli_core.known_bases import LITERATURE_BASES, literature_basis, literature_spec_for, validated_basis


class TestLiteratureBases:
    @pytest.mark.parametrize('spec', sorted(LITERATURE_BASES))
    def test_every_basis_validates(self, spec):
        assert len(validated_basis(spec)) == cohomology(spec_form(spec)).h(2)

    def test_lookup_by_form(self):
        assert literature_spec_for(spec_form('d2*')) == 'd2*'
        assert literature_spec_for(spec_form('d2#')) is None

    def test_missing_key(self):
        assert literature_basis('d2#') is None
        with pytest.raises(KeyError):
            validated_basis('d2#')

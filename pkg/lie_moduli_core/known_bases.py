"""
H^2 bases from the literature, written against the catalog forms of
`catalog.spec_form` at the literal parameters of each key. Deformation runs
may inject them instead of the computed complement basis, so that relations
come out in the published variables t1, t2, ...
"""
from typing import Dict, List, Optional

from .catalog import spec_form
from .cochains import Cochain, Codifferential, parse_cochain
from .cohomology import h2_basis

LITERATURE_BASES: Dict[str, List[str]] = {
    'd1(1:-1)': ['psi^{14}_1 + psi^{24}_2', 'psi^{23}_4'],
    'd1(1:0)': ['psi^{14}_1 + psi^{34}_3', 'psi^{13}_2'],
    'd1(1:2)': ['psi^{14}_1 + psi^{24}_2'],
    'd1#': ['psi^{24}_3', 'psi^{34}_2', 'psi^{14}_1 + psi^{34}_3'],
    'd3(1:1:0)': ['psi^{24}_3 + psi^{14}_3', 'psi^{14}_3', 'psi^{13}_1 + psi^{23}_2'],
    'd3(1:3:0)': ['psi^{24}_3 + psi^{14}_3', 'psi^{14}_3', 'psi^{13}_1 + psi^{23}_2'],
    'd3(1:2:-3)': ['psi^{14}_1', 'psi^{24}_2'],
    'd3(1:2:5)': ['psi^{24}_3', 'psi^{14}_3'],
    # Sum line at (1:2:3). The first class is e1∧e2 -> 2·u3 in the eigenbasis
    # u1 = e1, u2 = e1 + e2, u3 = e1 + 2e2 + 2e3; the printed one does not close.
    'd3(1:2:3)': ['2*psi^{12}_1 + 4*psi^{12}_2 + 4*psi^{12}_3 - 2*psi^{13}_1 - 4*psi^{13}_2 - 4*psi^{13}_3'
                  ' + psi^{23}_1 + 2*psi^{23}_2 + 2*psi^{23}_3',
                  'psi^{14}_1', 'psi^{14}_2'],
    'd3(1:-1:0)': ['psi^{24}_2', 'psi^{14}_3',
                   'psi^{12}_3 - psi^{13}_3 - psi^{23}_3 + psi^{14}_4 + psi^{24}_4',
                   'psi^{23}_1 - 2*psi^{23}_2', 'psi^{12}_4 - psi^{13}_4 - psi^{23}_4'],
    # Printed with psi^{24}_2 in the first vector; psi^{24}_4 is the cocycle.
    'd3(1:0)': ['-psi^{12}_1 + psi^{24}_4 + psi^{34}_4', 'psi^{12}_2 + psi^{14}_4', 'psi^{23}_1', 'psi^{34}_3',
                'psi^{24}_1', 'psi^{24}_2', 'psi^{14}_3'],
    # Printed with the sign of the first vector flipped on psi^{13}; this one is a cocycle.
    'd3(1:2)': ['-psi^{12}_2 - psi^{12}_3 + psi^{13}_2 + psi^{13}_3', 'psi^{34}_3', 'psi^{14}_2',
                'psi^{14}_1 + psi^{34}_3', 'psi^{24}_1'],
    'd3(1:3)': ['psi^{34}_3', 'psi^{14}_2', 'psi^{24}_1', 'psi^{24}_2'],
    'd3(1:1)': ['psi^{14}_3', 'psi^{14}_1', 'psi^{24}_1', 'psi^{24}_3'],
    'd3(1:-2)': ['psi^{14}_2', 'psi^{24}_3', 'psi^{34}_3', 'psi^{24}_1'],
    'd3(0:1)': ['-psi^{12}_2 + psi^{13}_2', 'psi^{14}_1', 'psi^{14}_2', 'psi^{24}_1', 'psi^{24}_2',
                'psi^{12}_1 - psi^{13}_1'],
    'd3*': ['psi^{14}_2', 'psi^{14}_3', 'psi^{34}_3', 'psi^{24}_3', 'psi^{14}_1', 'psi^{34}_2', 'psi^{34}_1',
            'psi^{24}_1'],
    'd2*': ['psi^{24}_2', 'psi^{13}_1 + psi^{23}_2', 'psi^{24}_3', 'psi^{23}_4', 'psi^{14}_3',
            'psi^{12}_1 + psi^{13}_2 + psi^{23}_3'],
    'd1': ['-psi^{23}_3', 'psi^{23}_4', 'psi^{14}_1', 'psi^{14}_2', 'psi^{14}_3', 'psi^{12}_3', 'psi^{34}_3',
           'psi^{24}_4', 'psi^{34}_2', 'psi^{12}_4', 'psi^{13}_1 + psi^{23}_2', 'psi^{14}_4 - psi^{12}_2',
           'psi^{34}_4 - psi^{13}_1'],
}


def literature_basis(spec: str) -> Optional[List[Cochain]]:
    """Parsed cochains for a key of LITERATURE_BASES, unvalidated; None if absent."""
    texts = LITERATURE_BASES.get(spec)
    if texts is None:
        return None
    return [parse_cochain(text, 4) for text in texts]


def validated_basis(spec: str) -> List[Cochain]:
    """
    The literature basis for `spec`, checked against H^2 of spec_form(spec).
    Raises KeyError for specs without one and InvalidBasisError if the check fails.
    """
    basis = literature_basis(spec)
    if basis is None:
        raise KeyError(f"No literature H^2 basis for {spec}")
    return h2_basis(spec_form(spec), override=basis)


def literature_spec_for(d: Codifferential) -> Optional[str]:
    """The key whose catalog form is exactly d, if any."""
    for spec in LITERATURE_BASES:
        if spec_form(spec) == d:
            return spec
    return None

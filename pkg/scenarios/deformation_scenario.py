#!/usr/bin/env python3
"""
Computes versal deformations with the literature H^2 bases and prints the
relations on the base of each.
"""
import sys
from typing import Optional, Sequence

from lie_moduli_core.catalog import spec_form
from lie_moduli_core.deformation import extend
from lie_moduli_core.known_bases import LITERATURE_BASES, validated_basis
from lie_moduli_core import config as core_config


def run_deformation_scenario(specs: Optional[Sequence[str]] = None,
                             max_order: int = core_config.DEFAULT_MAX_ORDER) -> bool:
    print("--- Starting Versal Deformation Scenario ---")
    ok = True
    for spec in (specs if specs is not None else list(LITERATURE_BASES)):
        result = extend(spec_form(spec), basis=validated_basis(spec), max_order=max_order)
        print(f"\n{spec}: {len(result.variables)} parameters, order {result.max_order}, "
              f"converged={result.converged}")
        for relation in result.relations:
            print(f"  relation: {relation}")
        if not result.relations:
            print("  no relations")
        if result.unexplained_residuals:
            print(f"ERROR: {spec}: {len(result.unexplained_residuals)} brackets left the 3-cocycles before any relation")
            ok = False
    return ok


if __name__ == "__main__":
    # To run: python -m scenarios.deformation_scenario
    sys.exit(0 if run_deformation_scenario() else 1)

#!/usr/bin/env python3
"""
Recomputes the cohomology table of the three dimensional moduli space.
"""
import sys

from lie_moduli_core.tables import format_table, mismatches, table3


def run_table3_scenario() -> bool:
    print("--- Starting Table 3 Scenario ---")
    df = table3()
    print(format_table(df))
    bad = mismatches(df)
    if not bad.empty:
        print(f"ERROR: mismatched rows: {', '.join(bad['row'])}")
    else:
        print(f"INFO: all {len(df)} rows match")
    return bad.empty


if __name__ == "__main__":
    # To run: python -m scenarios.table3_scenario
    sys.exit(0 if run_table3_scenario() else 1)

#!/usr/bin/env python3
"""
Recomputes the cohomology table of the four dimensional moduli space and
compares every row with the stored values.
"""
import sys

from lie_moduli_core.tables import format_table, mismatches, table2


def run_table2_scenario() -> bool:
    print("--- Starting Table 2 Scenario ---")
    df = table2()
    print(format_table(df))
    bad = mismatches(df)
    print("\n--- Table 2 Scenario Results ---")
    if bad.empty:
        print(f"INFO: all {len(df)} rows match")
        return True
    for row in bad['row']:
        print(f"ERROR: row {row} does not match")
    return False


if __name__ == "__main__":
    # To run: python -m scenarios.table2_scenario
    sys.exit(0 if run_table2_scenario() else 1)

"""
Recomputes the cohomology tables of the 3 and 4 dimensional moduli spaces
from the catalog representatives and compares them with the stored values.
"""
from typing import List, Optional

import pandas as pd

from .catalog import CatalogEntry, match_row, table_entries
from .classifier import classify
from .cohomology import cohomology
from . import config as core_config


def _row(entry: CatalogEntry) -> dict:
    d = entry.codifferential
    summary = cohomology(d)
    computed = summary.table_row()
    classified = match_row(classify(d))
    record = {
        'row': entry.row,
        'representative': entry.representative,
        'bs_name': entry.bs_name,
        'agaoka_name': entry.agaoka_name,
        'h0': summary.h(0),
    }
    for k, value in enumerate(computed, start=1):
        record[f'h{k}'] = value
    record['expected'] = ' '.join(str(x) for x in entry.expected)
    record['computed'] = ' '.join(str(x) for x in computed)
    # The representative must also fall back into its own row under precedence matching.
    record['row_match'] = classified is entry
    record['match'] = tuple(computed) == entry.expected and classified is entry
    return record


def cohomology_table(dimension: int = 4, entries: Optional[List[CatalogEntry]] = None) -> pd.DataFrame:
    """One row per catalog entry with expected and computed (h^1, ..., h^n) and a match flag."""
    rows = []
    for entry in (entries if entries is not None else table_entries(dimension)):
        print(f"INFO: computing cohomology of {entry.row} at {entry.representative}")
        record = _row(entry)
        if not record['match']:
            print(f"WARN: row {entry.row}: expected {record['expected']}, computed {record['computed']}"
                  f"{'' if record['row_match'] else ', representative matched another row'}")
        elif core_config.LOG_LEVEL == "DEBUG":
            print(f"DEBUG: row {entry.row} matches ({record['computed']})")
        rows.append(record)
    return pd.DataFrame(rows)


def table2() -> pd.DataFrame:
    return cohomology_table(4)


def table3() -> pd.DataFrame:
    return cohomology_table(3)


def mismatches(df: pd.DataFrame) -> pd.DataFrame:
    return df[~df['match']]


def format_table(df: pd.DataFrame) -> str:
    columns = ['row', 'bs_name'] + [c for c in df.columns if c.startswith('h') and c != 'h0'] + ['expected', 'match']
    return df[columns].to_string(index=False)

#!/usr/bin/env python3
"""
Round trip of the classifier over GL(4) orbits: every catalog representative
is moved by seeded random integer basis changes and must classify back to
the same point.
"""
import sys
from typing import Dict

from lie_moduli_core.catalog import TABLE2
from lie_moduli_core.classifier import classify
from lie_moduli_core.transform import random_orbit_sample
from lie_moduli_core import config as core_config


def run_orbit_scenario(count: int = core_config.DEFAULT_ORBIT_SAMPLES,
                       seed: int = core_config.DEFAULT_ORBIT_SEED) -> bool:
    print("--- Starting Orbit Round-Trip Scenario ---")
    print(f"Samples per point: {count}, seed: {seed}")
    failures: Dict[str, int] = {}
    for entry in TABLE2:
        expected = entry.point
        wrong = sum(1 for image in random_orbit_sample(entry.codifferential, seed, count)
                    if classify(image) != expected)
        print(f"INFO: {entry.representative}: {count - wrong}/{count} transforms classify to {expected.label}")
        if wrong:
            failures[entry.representative] = wrong

    print("\n--- Orbit Round-Trip Results ---")
    if failures:
        for spec, wrong in failures.items():
            print(f"ERROR: {spec}: {wrong} transforms classified elsewhere")
        return False
    print("All transforms classified back to their point.")
    return True


if __name__ == "__main__":
    # To run: python -m scenarios.orbit_scenario
    sys.exit(0 if run_orbit_scenario() else 1)

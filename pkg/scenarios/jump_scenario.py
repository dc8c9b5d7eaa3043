#!/usr/bin/env python3
"""
Checks the moduli graph: level ordering, the closure of deformation sets
under jumps, and each edge witness re-classified from scratch.
"""
import sys

from lie_moduli_core.moduli_graph import DEFAULT_GRAPH


def run_jump_scenario() -> bool:
    print("--- Starting Jump Deformation Scenario ---")
    graph = DEFAULT_GRAPH
    print(f"Nodes: {len(graph.nodes)}, edges: {len(graph.edges)}")

    downward = graph.check_levels()
    for edge in downward:
        print(f"ERROR: {edge!r} goes down in level")
    open_jumps = graph.check_closure()
    for source, via, missing in open_jumps:
        print(f"ERROR: {source} jumps to {via}, which deforms to {missing}, but {source} does not")

    witnessed = [e for e in graph.edges if e.witness is not None]
    print(f"INFO: checking {len(witnessed)} edge witnesses")
    failed = graph.verify_edge_witnesses()

    print("\n--- Jump Deformation Results ---")
    ok = not downward and not open_jumps and not failed
    print(f"{len(witnessed) - len(failed)}/{len(witnessed)} witnesses confirmed; "
          f"{'graph consistent' if ok else 'graph inconsistent'}")
    return ok


if __name__ == "__main__":
    # To run: python -m scenarios.jump_scenario
    sys.exit(0 if run_jump_scenario() else 1)

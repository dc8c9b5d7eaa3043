# lie_moduli_core/__init__.py

# This file makes the directory a Python package.
# Modules are imported directly by callers, e.g.:
# from lie_moduli_core.cochains import Codifferential, nr_bracket
# from lie_moduli_core.cohomology import cohomology
# from lie_moduli_core.classifier import classify
# from lie_moduli_core.deformation import extend
# from lie_moduli_core import config

# lie_moduli/scenarios/__init__.py

# Runnable end-to-end checks, one run_*_scenario() per module.
# Run with: python -m scenarios.<module_name>

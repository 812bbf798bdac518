"""
A seeded verification run
=========================

Run every family a few times and print the report.  The same seed gives
the same JSON byte for byte.
"""

from g2theta.harness import SuiteConfig, run_suite

config = SuiteConfig(trials=20, seed=42, tol=1e-7)
report = run_suite(config)
print(report.summary())

again = run_suite(config)
print("identical JSON on rerun:", report.to_json() == again.to_json())

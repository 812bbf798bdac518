"""
Checking the quadratic theta relations
======================================

Each relation is stored as data: signed sums of products of thetas with
affine arguments.  Evaluate a few at random points and look at the
residual relative to the largest single term.
"""

import numpy as np

import g2theta as gt

rng = np.random.default_rng(0)
omega = gt.make_period_matrix(0.1 + 1.3j, 0.2 + 1.1j, 0.3j)

spec = gt.builtin_identity("theta-add-1")
print(gt.export_catalog(["theta-add-1"]))

binding = {s: complex(rng.uniform(-1, 1), rng.uniform(-0.2, 0.2)) for s in spec.free_symbols}
res = gt.evaluate_identity(spec, binding, omega)
print(f"theta-add-1: |LHS-RHS| = {res.absolute:.2e}, scale = {res.scale:.2e}, relative = {res.relative:.2e}")

# The same relation with its last factor unsquared, as printed, does not hold.
printed = gt.printed_identity("theta-add-1")
print(f"unsquared variant: relative = {gt.evaluate_identity(printed, binding, omega).relative:.2e}")

# Relations 2 and 3 of the fundamental triple need theta[0000](alpha, beta) = 0;
# the six odd half-periods supply such points.
kossak = gt.builtin_identity("kossak-2")
for k, (alpha, beta) in enumerate(gt.odd_half_periods(omega)):
    b = dict(binding, alpha=alpha, beta=beta)
    print(f"kossak-2 at zero {k}: relative = {gt.evaluate_identity(kossak, b, omega).relative:.2e}")

# Off the zero set the precondition guard refuses to evaluate.
try:
    gt.evaluate_identity(kossak, dict(binding, alpha=0.1, beta=0.2), omega)
except gt.PreconditionViolated as exc:
    print("rejected:", exc)

"""
Addition formulas for the hyperelliptic functions
=================================================

``F[ch] = theta[ch] / theta[0011]``.  Each formula predicts F at a sum of
points from F-values at the two points and at the origin.
"""

import g2theta as gt

omega = gt.make_period_matrix(0.2 + 1.2j, -0.3 + 1.6j, 0.15 + 0.45j)
y, z = 0.31 + 0.12j, -0.4 + 0.05j
y2, z2 = -0.2 - 0.1j, 0.7 + 0.08j

print(f"B0 = {gt.B0(y, z, y2, z2, omega):.12f}")
for i in range(1, 16):
    spec = gt.f_addition_spec(i)
    predicted = gt.f_addition_rhs(i, y, z, y2, z2, omega)
    direct = gt.F(spec.target, y + y2, z + z2, omega)
    print(f"{i:2d}  F[{spec.target}]  predicted {predicted:.10f}  direct {direct:.10f}")

# At a zero of theta[0011](y - y', z - z') the shared denominator B0
# vanishes; the formula refuses rather than returning noise.
try:
    gt.f_addition_rhs(1, y, z, y - omega.tau1 / 2, z - omega.tau12 / 2, omega)
except gt.PoleEncountered as exc:
    print("pole:", exc)

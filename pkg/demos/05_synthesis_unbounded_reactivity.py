"""Reactivity is unbounded for any fixed asymptotics.

Holding the eigenvalues (or the eigenlines) of an attractor fixed, one
can make the transient reactivity as large as desired: the amplitude
grows while the eigenvectors squeeze together to compensate.
"""

import math

from reactlin import (
    attractor_with_eigenvalues,
    attractor_with_eigenvectors,
    decompose,
    eigen_structure,
    transient_summary,
)

print("attractors with eigenvalues fixed at (-1, -3):")
print(f"  {'requested rho':>14} {'rho1':>12} {'lambda1':>10} {'lambda2':>10} {'delta_T':>10}")
for rho in (0.5, 2.0, 10.0, 100.0, 1000.0):
    a = attractor_with_eigenvalues(-1.0, -3.0, rho)
    rt = decompose(a)
    eig = eigen_structure(rt)
    print(
        f"  {rho:14.1f} {rt.rho1:12.4f} {eig.lambda1:10.5f} {eig.lambda2:10.5f}"
        f" {eig.delta_t:10.6f}"
    )
print()
print("as rho grows the eigenline separation delta_T shrinks toward zero;")
print("strong transients and nearly parallel eigenvectors go hand in hand.")
print()

print("attractor with eigenlines pinned at 60 and 30 degrees, rho = 5:")
b = attractor_with_eigenvectors(math.pi / 3, math.pi / 6, 5.0)
rtb = decompose(b)
eigb = eigen_structure(rtb)
print(f"  matrix [[{b.a11:.4f}, {b.a12:.4f}], [{b.a21:.4f}, {b.a22:.4f}]]")
print(f"  eigenlines at {math.degrees(eigb.theta1.value):.2f} and "
      f"{math.degrees(eigb.theta2.value):.2f} degrees")
print(f"  eigenvalues {eigb.lambda1:.4f}, {eigb.lambda2:.4f} (both negative)")
print(f"  reactivity {rtb.rho1:.4f}, classification "
      f"{transient_summary(rtb).classification.value}")
print()
print("orthogonal eigenlines are the one forbidden request: a symmetric-type")
print("attractor can never be reactive.")

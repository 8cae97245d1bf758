"""Eigenvectors and orthovectors read off the two curves.

Zeros of the tangential curve T are eigendirections (no angular motion
there); zeros of the radial curve R are orthovector directions, where
the field is purely tangential and which bound the reactive arc.  The
orthovectors of A are just the eigenvectors of the quarter-turned
system, so both structures share one classification scheme.
"""

import math

from reactlin import (
    Mat2,
    QUARTER_TURN,
    angular_phase_line,
    decompose,
    eigen_structure,
    ortho_structure,
)

MINUS_J = Mat2(0.0, 1.0, -1.0, 0.0)

for a in (Mat2(-2.0, 1.0, 2.0, 1.0), Mat2(-1.0, -8.0, 0.0, -3.0), Mat2(0.7, -4.0, 4.0, -4.7)):
    rt = decompose(a)
    print(f"A = [[{a.a11}, {a.a12}], [{a.a21}, {a.a22}]]")
    eig = eigen_structure(rt)
    print(f"  eigen: {type(eig).__name__}")
    if hasattr(eig, "lambda1"):
        print(f"    lambda1 = {eig.lambda1:8.4f} on the line at {eig.theta1.value:.4f} rad")
        print(f"    lambda2 = {eig.lambda2:8.4f} on the line at {eig.theta2.value:.4f} rad")
        print(f"    half separation of the eigenlines: delta_T = {eig.delta_t:.4f}")
    elif hasattr(eig, "re"):
        period = 2 * math.pi / eig.im
        print(f"    {eig.re:.4f} +/- {eig.im:.4f} i, angular period {period:.4f}")
    ortho = ortho_structure(rt)
    print(f"  ortho: {type(ortho).__name__}")
    if hasattr(ortho, "mu1"):
        print(f"    mu1 = {ortho.mu1:8.4f} at {ortho.phi1.value:.4f} rad (arc entrance)")
        print(f"    mu2 = {ortho.mu2:8.4f} at {ortho.phi2.value:.4f} rad (arc exit)")
        print(f"    reactive-arc radius: delta_R = {ortho.delta_r:.4f}")
    line = angular_phase_line(rt)
    if line.equilibria:
        desc = ", ".join(
            f"{e.angle.value:.4f} ({e.stability.value})" for e in line.equilibria
        )
        print(f"  angular phase line equilibria: {desc}")
    else:
        print("  angular phase line: no equilibria, perpetual rotation")
    print()

a = Mat2(-1.0, -8.0, 0.0, -3.0)
dual = eigen_structure(decompose(MINUS_J @ a))
mine = ortho_structure(decompose(a))
print("duality: orthovalues of A are eigenvalues of the quarter-turned system")
print(f"  mu1, mu2          = {mine.mu1:.6f}, {mine.mu2:.6f}")
print(f"  lambda(J^-1 A)    = {dual.lambda1:.6f}, {dual.lambda2:.6f}")

"""Reactivity, attenuation, and the reactive arc.

A stable system can still push perturbations away from the origin for a
while: that happens exactly where the radial curve R is positive.  The
maximum of R is the reactivity, its minimum the attenuation, and the
arc where R > 0 is the reactive region.
"""

import math

from reactlin import Mat2, decompose, symmetric_part_reactivity, transient_summary

systems = {
    "reactive attractor": Mat2(-1.0, -8.0, 0.0, -3.0),
    "non-reactive attractor": Mat2(-3.0, 0.1, 0.0, -3.0),
    "reactive spiral sink": Mat2(0.7, -4.0, 4.0, -4.7),
    "saddle": Mat2(-2.0, 1.0, 2.0, 1.0),
    "center": Mat2(0.0, -2.0, 1.0, 0.0),
}

for name, a in systems.items():
    rt = decompose(a)
    s = transient_summary(rt)
    print(f"{name}:  [[{a.a11}, {a.a12}], [{a.a21}, {a.a22}]]")
    print(f"  reactivity  rho1 = {s.rho1:8.4f}   (reactive:    {s.is_reactive})")
    print(f"  attenuation rho2 = {s.rho2:8.4f}   (attenuating: {s.is_attenuating})")
    print(f"  classification   = {s.classification.value}")
    if s.reactive_set is not None:
        lo, hi = s.reactive_set
        frac = (hi - lo) / math.pi
        print(f"  reactive arc     = ({lo:.4f}, {hi:.4f}), {100 * frac:.1f}% of directions")
    else:
        print("  reactive arc     = empty")
    print()

print("cross-check: reactivity equals the top eigenvalue of the symmetric part")
for name, a in systems.items():
    rt = decompose(a)
    lhs = rt.m_r + rt.p
    rhs = symmetric_part_reactivity(a)
    print(f"  {name:24s} m_R + p = {lhs:9.5f}   max eig H = {rhs:9.5f}")

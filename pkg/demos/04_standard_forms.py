"""Four rotation-conjugate standard forms of one system.

Diagonalizing destroys transient structure (a diagonal matrix never has
a reactive attractor).  Rotating the coordinate frame instead slides
the R and T curves without changing any of their vertical features, so
reactivity, attenuation, eigenvalues and orthovalues all survive.  Each
form parks a different landmark on the positive x-axis.
"""

from reactlin import (
    Mat2,
    decompose,
    to_r_centered,
    to_r_zeroed,
    to_t_centered,
    to_t_zeroed,
    verify_form,
)

a = Mat2(-1.0, -5.0, 0.0, -3.0)
rt = decompose(a)
print(f"original: [[{a.a11}, {a.a12}], [{a.a21}, {a.a22}]]")
print(f"  m_R = {rt.m_r}, m_T = {rt.m_t}, p = {rt.p:.6f}")
print()

for label, build, note in (
    ("R-centered", to_r_centered, "max of R on the x-axis: [[rho1, -m_T], [m_T, rho2]]"),
    ("T-centered", to_t_centered, "max of T on the x-axis: [[m_R, -tau2], [tau1, m_R]]"),
    ("R-zeroed", to_r_zeroed, "reactive arc starts on the x-axis: [[0, -mu2], [mu1, 2 m_R]]"),
    ("T-zeroed", to_t_zeroed, "eigenline on the x-axis: [[lambda2, -2 m_T], [0, lambda1]]"),
):
    res = build(a)
    m = res.matrix
    rt2 = decompose(m)
    print(f"{label} (rotated by gamma = {res.gamma:+.4f}):   {note}")
    print(f"  [{m.a11:9.4f} {m.a12:9.4f}]")
    print(f"  [{m.a21:9.4f} {m.a22:9.4f}]")
    print(
        f"  invariants preserved: m_R = {rt2.m_r:.10f}, m_T = {rt2.m_t:.10f}, "
        f"p = {rt2.p:.10f}"
    )
    print(f"  verify_form: {verify_form(m, res.kind)}")
    print()

print("note the T-zeroed form is triangular: the familiar textbook shape")
print("for demonstrating reactivity is one rotation away from any such system.")

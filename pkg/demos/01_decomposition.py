"""Linear planar fields split into radial and tangential sinusoids.

The field AX decomposes as R(theta) X + T(theta) X_perp, where both
coefficients are pi-periodic sinusoids with shared amplitude.  The four
numbers (m_R, m_T, p, theta_R) carry exactly the same information as
the matrix, and the matrix can be read back off the two curves at the
coordinate axes.
"""

import math

from reactlin import Mat2, decompose, eval_radial, eval_tangential, reconstruct

a = Mat2(-1.0, -8.0, 0.0, -3.0)
rt = decompose(a)

print("matrix:")
print(f"  [{a.a11:7.3f} {a.a12:7.3f}]")
print(f"  [{a.a21:7.3f} {a.a22:7.3f}]")
print()
print("decomposition parameters:")
print(f"  m_R     = {rt.m_r:.6f}   (mean radial growth rate, = trace/2)")
print(f"  m_T     = {rt.m_t:.6f}   (mean angular velocity)")
print(f"  p       = {rt.p:.6f}   (shared sinusoid amplitude)")
print(f"  theta_R = {rt.theta_r.value:.6f}   (angle of fastest radial growth)")
print()

print("the curves sampled over half a turn:")
print(f"  {'theta':>8} {'R':>9} {'T':>9}")
for i in range(9):
    th = i * math.pi / 8
    print(f"  {th:8.4f} {eval_radial(rt, th):9.4f} {eval_tangential(rt, th):9.4f}")
print()

print("reading the matrix back off the curves (columns at the axes):")
print(f"  R(0)     = {eval_radial(rt, 0.0):8.4f}  -> a11 = {a.a11}")
print(f"  T(0)     = {eval_tangential(rt, 0.0):8.4f}  -> a21 = {a.a21}")
print(f"  R(pi/2)  = {eval_radial(rt, math.pi / 2):8.4f}  -> a22 = {a.a22}")
print(f"  -T(pi/2) = {-eval_tangential(rt, math.pi / 2):8.4f}  -> a12 = {a.a12}")
print()

b = reconstruct(rt)
err = max(abs(b.a11 - a.a11), abs(b.a12 - a.a12), abs(b.a21 - a.a21), abs(b.a22 - a.a22))
print(f"reconstruct(decompose(A)) reproduces A to {err:.2e}")

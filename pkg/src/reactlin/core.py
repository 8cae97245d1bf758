"""Radial/tangential decomposition of planar linear vector fields.

A real 2x2 matrix A defines the linear system X' = AX.  On the unit
circle the field splits into a component along X and a component along
the counter-clockwise normal X-perp,

    A X = R(theta) X + T(theta) X_perp,

and both coefficients are pi-periodic sinusoids sharing one amplitude:

    R(theta) = m_R + p cos(2 (theta - theta_R))
    T(theta) = m_T - p sin(2 (theta - theta_R))

The four numbers (m_R, m_T, p, theta_R) encode A exactly, and this
module owns that bijection plus the small set of exact matrix moves
(rotation conjugation, axis reflection) the rest of the package is
built on.  R is the instantaneous radial growth rate, T the angular
velocity, so everything about transient amplification is readable from
these two curves.

All types are immutable values and all functions are pure; they are
safe to call concurrently without synchronization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "AngleModPi",
    "Mat2",
    "RTParams",
    "QUARTER_TURN",
    "angle_distance_mod_pi",
    "decompose",
    "reconstruct",
    "eval_radial",
    "eval_tangential",
    "eval_radial_slope",
    "eval_tangential_slope",
    "rotate_conjugate",
    "reflect_conjugate",
    "rotation_matrix",
    "symmetric_part_reactivity",
]

# Relative scale below which the shared amplitude p is treated as zero
# (theta_R is undefined there).
P_ZERO_RTOL = 1e-12


def _norm_mod_pi(x: float) -> float:
    """Reduce an angle to [0, pi).  Idempotent under repetition."""
    y = math.fmod(x, math.pi)
    if y < 0.0:
        y += math.pi
    # fmod of a tiny negative can round up to pi itself; fold it back.
    if y >= math.pi:
        y -= math.pi
    return y


def angle_distance_mod_pi(a: float, b: float) -> float:
    """Distance between two angles identified modulo pi, in [0, pi/2]."""
    d = _norm_mod_pi(a - b)
    return min(d, math.pi - d)


@dataclass(frozen=True)
class AngleModPi:
    """An angle of a pi-periodic quantity, normalized to [0, pi).

    Directions (eigenlines, orthovector lines, sinusoid maxima) are only
    defined up to a half turn, so they live here.  Trajectory phases, by
    contrast, are kept unnormalized so that winding stays observable.
    """

    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise InvalidInputError(f"angle must be finite, got {self.value}")
        object.__setattr__(self, "value", _norm_mod_pi(self.value))

    def shifted(self, delta: float) -> "AngleModPi":
        return AngleModPi(self.value + delta)

    def distance(self, other: "AngleModPi | float") -> float:
        o = other.value if isinstance(other, AngleModPi) else other
        return angle_distance_mod_pi(self.value, o)


@dataclass(frozen=True)
class Mat2:
    """Real 2x2 coefficient matrix of the system X' = AX.

    Entries are plain rates (units 1/time) and must be finite.  Entries
    of any magnitude are accepted; double precision keeps the closed
    forms used throughout this package accurate for |entries| up to
    about 1e6, which is the supported (documented, unenforced) range.
    """

    a11: float
    a12: float
    a21: float
    a22: float

    def __post_init__(self) -> None:
        for name in ("a11", "a12", "a21", "a22"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise InvalidInputError(f"matrix entry {name}={v!r} is not finite")
            object.__setattr__(self, name, float(v))

    @classmethod
    def from_array(cls, arr) -> "Mat2":
        a = np.asarray(arr, dtype=float)
        if a.shape != (2, 2):
            raise InvalidInputError(f"expected a 2x2 array, got shape {a.shape}")
        return cls(a[0, 0], a[0, 1], a[1, 0], a[1, 1])

    def as_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]])

    def trace(self) -> float:
        return self.a11 + self.a22

    def det(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21

    def transpose(self) -> "Mat2":
        return Mat2(self.a11, self.a21, self.a12, self.a22)

    def apply(self, x1: float, x2: float) -> tuple[float, float]:
        """Matrix-vector product A (x1, x2)."""
        return (self.a11 * x1 + self.a12 * x2, self.a21 * x1 + self.a22 * x2)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a11 + other.a11, self.a12 + other.a12,
                    self.a21 + other.a21, self.a22 + other.a22)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def scaled(self, c: float) -> "Mat2":
        return Mat2(c * self.a11, c * self.a12, c * self.a21, c * self.a22)

    def max_abs(self) -> float:
        return max(abs(self.a11), abs(self.a12), abs(self.a21), abs(self.a22))


#: Counter-clockwise quarter turn; maps X to X-perp.
QUARTER_TURN = Mat2(0.0, -1.0, 1.0, 0.0)


@dataclass(frozen=True)
class RTParams:
    """The four decomposition parameters of a planar linear field.

    m_r, m_t   midlines of R and T (1/time); m_r is half the trace.
    p          shared sinusoid amplitude, p >= 0 (1/time).
    theta_r    angle of the maximum of R, present exactly when p > 0
               (for p = 0 both curves are flat and no phase exists).
    """

    m_r: float
    m_t: float
    p: float
    theta_r: AngleModPi | None = None

    def __post_init__(self) -> None:
        for name in ("m_r", "m_t", "p"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise InvalidInputError(f"{name}={v!r} is not finite")
            object.__setattr__(self, name, float(v))
        if self.p < 0.0:
            raise InvalidInputError(f"amplitude p must be >= 0, got {self.p}")
        if (self.theta_r is None) != (self.p == 0.0):
            raise InvalidInputError("theta_r must be present exactly when p > 0")

    # Extremes of the two sinusoids.  rho1 is the reactivity (fastest
    # instantaneous radial growth), rho2 the attenuation; tau1/tau2 are
    # the extreme angular velocities.
    @property
    def rho1(self) -> float:
        return self.m_r + self.p

    @property
    def rho2(self) -> float:
        return self.m_r - self.p

    @property
    def tau1(self) -> float:
        return self.m_t + self.p

    @property
    def tau2(self) -> float:
        return self.m_t - self.p

    @property
    def theta_t(self) -> AngleModPi | None:
        """Angle of the maximum of T, a quarter turn's half behind theta_r."""
        if self.theta_r is None:
            return None
        return self.theta_r.shifted(-math.pi / 4)


def decompose(a: Mat2) -> RTParams:
    """Split A into its radial/tangential parameters.

    The amplitude is snapped to exactly zero when it falls below
    1e-12 * (1 + |m_R| + |m_T|); at that scale the phase theta_R is
    numerically meaningless and is reported as absent.
    """
    m_r = 0.5 * (a.a11 + a.a22)
    m_t = 0.5 * (a.a21 - a.a12)
    cos_part = a.a11 - a.a22        # 2p cos(2 theta_R)
    sin_part = a.a12 + a.a21        # 2p sin(2 theta_R)
    p = 0.5 * math.hypot(cos_part, sin_part)
    if p <= P_ZERO_RTOL * (1.0 + abs(m_r) + abs(m_t)):
        return RTParams(m_r, m_t, 0.0, None)
    theta_r = AngleModPi(0.5 * math.atan2(sin_part, cos_part))
    return RTParams(m_r, m_t, p, theta_r)


def reconstruct(rt: RTParams) -> Mat2:
    """Inverse of :func:`decompose`: the unique matrix with these curves.

    Columns come from evaluating the field at the two coordinate axes:
    A = [[R(0), -T(pi/2)], [T(0), R(pi/2)]].
    """
    half_pi = math.pi / 2
    return Mat2(
        eval_radial(rt, 0.0),
        -eval_tangential(rt, half_pi),
        eval_tangential(rt, 0.0),
        eval_radial(rt, half_pi),
    )


def eval_radial(rt: RTParams, theta: float) -> float:
    """Radial velocity R(theta) on the unit circle."""
    if rt.theta_r is None:
        return rt.m_r
    return rt.m_r + rt.p * math.cos(2.0 * (theta - rt.theta_r.value))


def eval_tangential(rt: RTParams, theta: float) -> float:
    """Angular velocity T(theta) on the unit circle."""
    if rt.theta_r is None:
        return rt.m_t
    return rt.m_t - rt.p * math.sin(2.0 * (theta - rt.theta_r.value))


def eval_radial_slope(rt: RTParams, theta: float) -> float:
    """dR/dtheta."""
    if rt.theta_r is None:
        return 0.0
    return -2.0 * rt.p * math.sin(2.0 * (theta - rt.theta_r.value))


def eval_tangential_slope(rt: RTParams, theta: float) -> float:
    """dT/dtheta; equals -2 (R(theta) - m_R)."""
    if rt.theta_r is None:
        return 0.0
    return -2.0 * rt.p * math.cos(2.0 * (theta - rt.theta_r.value))


def rotation_matrix(gamma: float) -> Mat2:
    """Counter-clockwise rotation by gamma radians."""
    c, s = math.cos(gamma), math.sin(gamma)
    return Mat2(c, -s, s, c)


def rotate_conjugate(a: Mat2, gamma: float) -> Mat2:
    """Conjugate by rotation: M_gamma^-1 A M_gamma.

    In decomposition terms this is a pure horizontal shift, moving both
    curves by gamma: R_B(theta) = R_A(theta + gamma) and likewise for T.
    Midlines, amplitude, eigenvalues and orthovalues are all unchanged.
    """
    if not math.isfinite(gamma):
        raise InvalidInputError(f"rotation angle must be finite, got {gamma!r}")
    m = rotation_matrix(gamma)
    m_inv = rotation_matrix(-gamma)
    return m_inv @ a @ m


def reflect_conjugate(a: Mat2) -> Mat2:
    """Conjugate by the x-axis reflection diag(1, -1).

    Solution norms are preserved while the sense of rotation flips:
    the result decomposes with m_T negated and m_R, p unchanged.  Used
    to canonicalize m_T >= 0 before amplification formulas.
    """
    return Mat2(a.a11, -a.a12, -a.a21, a.a22)


def symmetric_part_reactivity(a: Mat2) -> float:
    """Largest eigenvalue of the symmetric part (A + A^T)/2.

    Classical definition of reactivity; computed through LAPACK so it
    stays an oracle independent of the m_R + p route.
    """
    h = 0.5 * (a.as_array() + a.as_array().T)
    return float(np.linalg.eigvalsh(h)[-1])

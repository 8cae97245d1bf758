"""Maximal transient amplification of a reactive attractor.

A perturbation gains radius only while its angle is inside the reactive
arc, and the largest total gain is earned by entering exactly at the
arc's boundary orthovector and riding it to the far side.  Three
equivalent closed forms give that gain from different ingredients
(eigen/orthovalues; midlines and separations; the two arc radii), two
strict upper bounds come from each arc radius alone, and an independent
fixed-step RK4 oracle reproduces the value, the time it takes, and the
entry angle.

Orthovalue signs are canonicalized first: conjugating by diag(1, -1)
preserves every solution norm while flipping the sense of rotation, so
m_T >= 0 may be assumed and both orthovalues are then positive.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    AngleModPi,
    Mat2,
    RTParams,
    decompose,
    reflect_conjugate,
)
from .dynamics import default_step
from .errors import (
    ClosedFormUnavailableError,
    InapplicableError,
    InvalidInputError,
    NumericFailureError,
)
from .spectra import (
    Classification,
    ComplexPairEigen,
    DistinctRealEigen,
    DistinctRealOrtho,
    eigen_structure,
    ortho_structure,
    transient_summary,
)

__all__ = [
    "AmplificationMethod",
    "AmplificationResult",
    "rho_max_closed",
    "rho_max_numeric",
    "rho_max_bound_ortho",
    "rho_max_bound_eigen",
    "rho_max_from_eigen_ortho",
    "rho_max_from_midlines",
    "rho_max_from_separations",
]

CONCORDANCE_RTOL = 1e-9
CROSS_CHECK_RTOL = 1e-3
EXIT_ANGLE_TOL = 1e-12
MAX_STEPS = 20_000_000


class AmplificationMethod(Enum):
    CLOSED_LAMBDA_MU = "closed_lambda_mu"
    CLOSED_MS = "closed_ms"
    CLOSED_DELTAS = "closed_deltas"
    NUMERIC_SWEEP = "numeric_sweep"


@dataclass(frozen=True)
class AmplificationResult:
    """Maximal amplification and, for the numeric route, how it is hit.

    rho_max is dimensionless and at least 1; t_max and theta_entry are
    produced only by the numeric method (no closed form exists for the
    arg max).
    """

    rho_max: float
    t_max: float | None
    theta_entry: AngleModPi | None
    method: AmplificationMethod


# ---------------------------------------------------------------------------
# closed-form evaluators (each usable on its own ingredients)


def rho_max_from_eigen_ortho(
    lambda1: float, lambda2: float, mu1: float, mu2: float
) -> float:
    """Amplification from eigenvalues and orthovalues (mu2 > 0 required)."""
    base = (lambda1 * mu2 + lambda2 * mu1) / (lambda1 * mu1 + lambda2 * mu2)
    expo = (lambda1 + lambda2) / (lambda1 - lambda2)
    return math.sqrt(base**expo * (mu1 / mu2))


def rho_max_from_midlines(m_r: float, m_t: float, p_r: float, p_t: float) -> float:
    """Amplification from the midlines and the two separation radii."""
    base = (m_r * m_t - p_r * p_t) / (m_r * m_t + p_r * p_t)
    return math.sqrt(base ** (m_r / p_r) * (m_t + p_t) / (m_t - p_t))


def rho_max_from_separations(delta_r: float, delta_t: float) -> float:
    """Amplification from the reactive and eigenline arc radii alone."""
    c2r, s2r = math.cos(2 * delta_r), math.sin(2 * delta_r)
    c2t, s2t = math.cos(2 * delta_t), math.sin(2 * delta_t)
    base = math.cos(2 * delta_r + 2 * delta_t) / math.cos(2 * delta_r - 2 * delta_t)
    expo = -c2r / s2t
    return math.sqrt(base**expo * (c2t - s2r) / (c2t + s2r))


def _rho_max_complex_midlines(m_r: float, m_t: float, p: float, p_t: float) -> float:
    """Principal-branch evaluation of the midline form for a spiral.

    The eigenvalue separation is imaginary; the base then has unit
    modulus and the power collapses to a real exponential, so the
    principal branch is the natural (but unproven) reading.
    """
    p_r = complex(0.0, math.sqrt(m_t * m_t - p * p))
    base = (m_r * m_t - p_r * p_t) / (m_r * m_t + p_r * p_t)
    val = cmath.sqrt(base ** (m_r / p_r) * (m_t + p_t) / (m_t - p_t))
    if abs(val.imag) > 1e-9 * abs(val.real):
        raise NumericFailureError(
            f"complex-arithmetic amplification came out non-real: {val!r}"
        )
    return val.real


# ---------------------------------------------------------------------------
# applicability plumbing


def _require_reactive_attractor(a: Mat2) -> RTParams:
    rt = decompose(a)
    summary = transient_summary(rt)
    if summary.classification is not Classification.REACTIVE_ATTRACTOR:
        raise InapplicableError(
            "maximal amplification is defined for reactive attractors only; "
            f"system classifies as {summary.classification.value}"
        )
    return rt


def _canonical_orientation(a: Mat2) -> tuple[Mat2, RTParams, bool]:
    """Reflect if needed so m_T >= 0; solution norms are unaffected."""
    rt = decompose(a)
    if rt.m_t < 0.0:
        b = reflect_conjugate(a)
        return b, decompose(b), True
    return a, rt, False


def rho_max_bound_ortho(a: Mat2) -> float:
    """Strict upper bound -p/m_R = 1/cos(2 delta_R) from the arc width."""
    rt = _require_reactive_attractor(a)
    return -rt.p / rt.m_r


def rho_max_bound_eigen(a: Mat2) -> float:
    """Weaker strict upper bound p/p_R = 1/sin(2 delta_T); real spectra only."""
    rt = _require_reactive_attractor(a)
    eig = eigen_structure(rt)
    if not isinstance(eig, DistinctRealEigen):
        raise InapplicableError(
            "eigenvector-separation bound needs two distinct real eigenvalues"
        )
    return rt.p / eig.p_r


def rho_max_closed(a: Mat2, *, complex_mode: str = "strict") -> AmplificationResult:
    """Closed-form maximal amplification of a reactive attractor.

    For real distinct eigenvalues all three formula routes are evaluated
    and must agree to 1e-9 relative (an internal concordance check).
    Complex eigenvalues are handled per complex_mode: "strict" declines
    (the formulas' derivation is stated for real spectra), while
    "experimental" evaluates the midline form with principal-branch
    complex powers and cross-checks it against the numeric oracle to
    1e-3, failing loudly on disagreement.
    """
    if complex_mode not in ("strict", "experimental"):
        raise InvalidInputError(f"complex_mode must be strict|experimental, got {complex_mode!r}")
    _require_reactive_attractor(a)
    b, rt, _ = _canonical_orientation(a)
    ortho = ortho_structure(rt)
    if not isinstance(ortho, DistinctRealOrtho):
        raise InapplicableError("reactive arc is degenerate within tolerance")
    eig = eigen_structure(rt)

    if isinstance(eig, ComplexPairEigen):
        if complex_mode == "strict":
            raise ClosedFormUnavailableError(
                "closed-form amplification is not established for complex "
                "eigenvalues; use the numeric oracle"
            )
        val = _rho_max_complex_midlines(rt.m_r, rt.m_t, rt.p, ortho.p_t)
        oracle = rho_max_numeric(b, step=default_step(rt, 1e-3)).rho_max
        if abs(val - oracle) > CROSS_CHECK_RTOL * oracle:
            raise NumericFailureError(
                f"experimental complex closed form {val} disagrees with "
                f"numeric oracle {oracle} beyond {CROSS_CHECK_RTOL:g} relative"
            )
        return AmplificationResult(
            rho_max=val, t_max=None, theta_entry=None,
            method=AmplificationMethod.CLOSED_MS,
        )

    if not isinstance(eig, DistinctRealEigen):
        # Repeated eigenvalue: the exponent (l1+l2)/(l1-l2) degenerates
        # to an indeterminate 1^inf; no stated formula covers it.
        raise ClosedFormUnavailableError(
            "closed-form amplification is indeterminate for a repeated "
            "eigenvalue; use the numeric oracle"
        )

    v_lambda_mu = rho_max_from_eigen_ortho(
        eig.lambda1, eig.lambda2, ortho.mu1, ortho.mu2
    )
    v_midlines = rho_max_from_midlines(rt.m_r, rt.m_t, eig.p_r, ortho.p_t)
    v_deltas = rho_max_from_separations(ortho.delta_r, eig.delta_t)
    for other, name in ((v_midlines, "midline"), (v_deltas, "separation")):
        if abs(other - v_lambda_mu) > CONCORDANCE_RTOL * abs(v_lambda_mu):
            raise NumericFailureError(
                f"closed-form routes disagree: eigen/ortho {v_lambda_mu} vs "
                f"{name} {other}"
            )
    if not v_lambda_mu >= 1.0 - 1e-9:
        raise NumericFailureError(f"amplification {v_lambda_mu} fell below 1")
    return AmplificationResult(
        rho_max=v_lambda_mu, t_max=None, theta_entry=None,
        method=AmplificationMethod.CLOSED_LAMBDA_MU,
    )


# ---------------------------------------------------------------------------
# numeric oracle


def _polar_log_step(
    m_r: float, m_t: float, p: float, phase: float,
    lnr: float, th: float, h: float,
) -> tuple[float, float]:
    """One RK4 step of d(ln r) = R(theta) dt, d(theta) = T(theta) dt."""
    cos, sin = math.cos, math.sin
    u = 2.0 * (th - phase)
    d1r = m_r + p * cos(u)
    d1t = m_t - p * sin(u)
    u = 2.0 * (th + 0.5 * h * d1t - phase)
    d2r = m_r + p * cos(u)
    d2t = m_t - p * sin(u)
    u = 2.0 * (th + 0.5 * h * d2t - phase)
    d3r = m_r + p * cos(u)
    d3t = m_t - p * sin(u)
    u = 2.0 * (th + h * d3t - phase)
    d4r = m_r + p * cos(u)
    d4t = m_t - p * sin(u)
    return (
        lnr + h / 6.0 * (d1r + 2.0 * d2r + 2.0 * d3r + d4r),
        th + h / 6.0 * (d1t + 2.0 * d2t + 2.0 * d3t + d4t),
    )


def _refine_crossing(
    m_r: float, m_t: float, p: float, phase: float,
    lnr0: float, th0: float, h: float, target: float,
) -> tuple[float, float]:
    """Bisect the step length until theta lands on target.

    The pre-step state must satisfy th0 < target and a full step must
    overshoot.  Returns (lnr, dt) at the crossing.
    """
    lo, hi = 0.0, h
    lnr, dt = lnr0, 0.0
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        lnr_m, th_m = _polar_log_step(m_r, m_t, p, phase, lnr0, th0, mid)
        if abs(th_m - target) <= EXIT_ANGLE_TOL:
            return lnr_m, mid
        if th_m < target:
            lo = mid
        else:
            hi = mid
        lnr, dt = lnr_m, mid
        if hi - lo <= 1e-18 * h:
            break
    return lnr, dt


def _sweep_initial_angles(
    rt: RTParams, duration: float, h: float, n_angles: int, seed: int
) -> float:
    """Vectorized safety net: max gain over many unit starting states."""
    rng = np.random.default_rng(seed)
    th = rng.uniform(0.0, 2.0 * math.pi / n_angles) + np.arange(n_angles) * (
        2.0 * math.pi / n_angles
    )
    lnr = np.zeros(n_angles)
    best = np.zeros(n_angles)
    m_r, m_t, p = rt.m_r, rt.m_t, rt.p
    phase = rt.theta_r.value if rt.theta_r is not None else 0.0
    n_steps = int(math.ceil(duration / h))

    def deriv(th):
        u = 2.0 * (th - phase)
        return m_r + p * np.cos(u), m_t - p * np.sin(u)

    for _ in range(n_steps):
        d1r, d1t = deriv(th)
        d2r, d2t = deriv(th + 0.5 * h * d1t)
        d3r, d3t = deriv(th + 0.5 * h * d2t)
        d4r, d4t = deriv(th + h * d3t)
        lnr = lnr + h / 6.0 * (d1r + 2.0 * d2r + 2.0 * d3r + d4r)
        th = th + h / 6.0 * (d1t + 2.0 * d2t + 2.0 * d3t + d4t)
        np.maximum(best, lnr, out=best)
    return float(np.exp(best.max()))


def rho_max_numeric(
    a: Mat2,
    step: float | None = None,
    *,
    seed: int = 0,
    n_sweep_angles: int = 360,
) -> AmplificationResult:
    """Measure maximal amplification by integrating the polar system.

    Starts a unit perturbation on the entrance orthovector and rides it
    across the reactive arc, refining the exit crossing by bisection to
    1e-12 in angle.  With real eigenvalues one traversal is the answer;
    a spiral (complex pair) keeps circulating, so per-revolution peaks
    are tracked until they decay, and a vectorized sweep of starting
    angles (seeded jitter) guards the result from below.

    step is the RK4 time step; the default scales 1e-4 by the system's
    fastest rate.
    """
    _require_reactive_attractor(a)
    b, rt, reflected = _canonical_orientation(a)
    ortho = ortho_structure(rt)
    if not isinstance(ortho, DistinctRealOrtho):
        raise InapplicableError("reactive arc is degenerate within tolerance")
    if ortho.mu2 <= 0.0:
        raise NumericFailureError("orthovalues not positive after canonicalization")
    if step is None:
        step = default_step(rt)
    if not (step > 0.0 and math.isfinite(step)):
        raise InvalidInputError(f"step must be a positive real, got {step}")

    m_r, m_t, p = rt.m_r, rt.m_t, rt.p
    assert rt.theta_r is not None
    phase = rt.theta_r.value
    entry = ortho.phi1.value
    arc = 2.0 * ortho.delta_r
    is_spiral = isinstance(eigen_structure(rt), ComplexPairEigen)

    lnr, th = 0.0, entry
    t = 0.0
    peaks: list[tuple[float, float]] = []  # (lnr, t) at successive arc exits
    target = entry + arc
    # One arc suffices for real spectra; a spiral needs the next pass to
    # confirm the peaks are falling.
    needed = 2 if is_spiral else 1
    steps = 0
    while len(peaks) < needed:
        lnr_new, th_new = _polar_log_step(m_r, m_t, p, phase, lnr, th, step)
        steps += 1
        if steps > MAX_STEPS:
            raise NumericFailureError(
                f"amplification oracle exceeded {MAX_STEPS} steps without "
                "completing the required arc traversals"
            )
        if th_new >= target:
            lnr_x, dt = _refine_crossing(m_r, m_t, p, phase, lnr, th, step, target)
            peaks.append((lnr_x, t + dt))
            target += math.pi
        lnr, th, t = lnr_new, th_new, t + step

    if is_spiral and peaks[1][0] >= peaks[0][0]:
        raise NumericFailureError(
            "per-revolution peaks are not decaying; system is not behaving "
            "as an attractor numerically"
        )
    best_lnr, t_max = peaks[0]
    rho = math.exp(best_lnr)

    if is_spiral:
        period = 2.0 * math.pi / math.sqrt(rt.tau1 * rt.tau2)
        sweep_rho = _sweep_initial_angles(
            rt,
            duration=2.0 * period,
            h=min(default_step(rt, 1e-2), period / 512.0),
            n_angles=n_sweep_angles,
            seed=seed,
        )
        rho = max(rho, sweep_rho)

    if not rho >= 1.0 - 1e-9:
        raise NumericFailureError(f"numeric amplification {rho} fell below 1")
    theta_entry = AngleModPi(-entry if reflected else entry)
    return AmplificationResult(
        rho_max=rho, t_max=t_max, theta_entry=theta_entry,
        method=AmplificationMethod.NUMERIC_SWEEP,
    )

"""Eigen- and ortho-structure read off the radial/tangential curves.

Zeros of T are eigendirections (the field there is purely radial) and
zeros of R are orthovector directions (the field there is purely
tangential, A V = mu V_perp).  Both follow the same four-way split:

    eigen:  p vs |m_T|   (T crosses zero twice / never / identically / once)
    ortho:  p vs |m_R|   (same cases for R)

with separations p_R = sqrt(p^2 - m_T^2) and p_T = sqrt(p^2 - m_R^2).
The ortho case additionally pins the reactive set: R > 0 exactly on the
open arc between the two orthovector angles around theta_R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import AngleModPi, RTParams

__all__ = [
    "DistinctRealEigen",
    "ComplexPairEigen",
    "RepeatedFullEigen",
    "RepeatedDefectiveEigen",
    "EigenStructure",
    "DistinctRealOrtho",
    "NoRealOrtho",
    "AllOrtho",
    "RepeatedOrtho",
    "OrthoStructure",
    "Classification",
    "TransientSummary",
    "AngularEquilibrium",
    "AngularPhaseLine",
    "Stability",
    "eigen_structure",
    "ortho_structure",
    "transient_summary",
    "angular_phase_line",
    "CASE_RTOL",
]

# Relative tolerance for all degeneracy decisions (p vs |m_T|, p vs
# |m_R|, eigenvalue vs 0).  Ties are resolved toward the repeated /
# degenerate variant so classification is deterministic.
CASE_RTOL = 1e-10


# ---------------------------------------------------------------------------
# eigen structure


@dataclass(frozen=True)
class DistinctRealEigen:
    """Two real eigenvalues lambda1 > lambda2 on eigenlines theta1/theta2.

    The eigenlines sit symmetrically around the maximum of T at angular
    radius delta_T, and lambda_i = R(theta_i) with lambda1 on the side
    theta_T + delta_T.
    """

    lambda1: float
    lambda2: float
    theta1: AngleModPi
    theta2: AngleModPi
    delta_t: float
    p_r: float


@dataclass(frozen=True)
class ComplexPairEigen:
    """Conjugate pair re +/- i*im, im > 0; T never vanishes.

    re is the mean radial velocity m_R and im = sqrt(tau1 tau2), the
    geometric mean of the extreme angular velocities.
    """

    re: float
    im: float


@dataclass(frozen=True)
class RepeatedFullEigen:
    """T identically zero: every direction is an eigenline."""

    lam: float


@dataclass(frozen=True)
class RepeatedDefectiveEigen:
    """T tangent to zero: one eigenline, algebraic multiplicity two."""

    lam: float
    theta0: AngleModPi


EigenStructure = (
    DistinctRealEigen | ComplexPairEigen | RepeatedFullEigen | RepeatedDefectiveEigen
)


def eigen_structure(rt: RTParams) -> EigenStructure:
    """Classify the spectrum from the decomposition parameters."""
    p, m_t = rt.p, rt.m_t
    tol = CASE_RTOL * (1.0 + p + abs(m_t))
    if abs(p - abs(m_t)) <= tol:
        if p <= tol:
            return RepeatedFullEigen(lam=rt.m_r)
        # T touches zero at its extremum nearest the axis crossing.
        assert rt.theta_r is not None
        shift = math.pi / 4 if m_t > 0 else -math.pi / 4
        return RepeatedDefectiveEigen(lam=rt.m_r, theta0=rt.theta_r.shifted(shift))
    if p < abs(m_t):
        return ComplexPairEigen(re=rt.m_r, im=math.sqrt(m_t * m_t - p * p))
    # p > |m_T|: two zeros of T, symmetric around theta_T.
    p_r = math.sqrt((p - m_t) * (p + m_t))
    delta_t = 0.5 * math.atan2(p_r, -m_t)
    theta_t = rt.theta_t
    assert theta_t is not None
    return DistinctRealEigen(
        lambda1=rt.m_r + p_r,
        lambda2=rt.m_r - p_r,
        theta1=theta_t.shifted(delta_t),
        theta2=theta_t.shifted(-delta_t),
        delta_t=delta_t,
        p_r=p_r,
    )


# ---------------------------------------------------------------------------
# ortho structure


@dataclass(frozen=True)
class DistinctRealOrtho:
    """Two orthovector lines phi1/phi2 bounding the reactive arc.

    mu_i = T(phi_i) with mu1 >= mu2; phi1 = theta_R - delta_R is the
    side carrying the larger orthovalue.
    """

    mu1: float
    mu2: float
    phi1: AngleModPi
    phi2: AngleModPi
    delta_r: float
    p_t: float


@dataclass(frozen=True)
class NoRealOrtho:
    """R single-signed: no orthovectors, no reactive boundary."""


@dataclass(frozen=True)
class AllOrtho:
    """R identically zero: every direction is an orthovector."""

    mu: float


@dataclass(frozen=True)
class RepeatedOrtho:
    """R tangent to zero: a single orthovector line."""

    mu: float
    phi0: AngleModPi


OrthoStructure = DistinctRealOrtho | NoRealOrtho | AllOrtho | RepeatedOrtho


def ortho_structure(rt: RTParams) -> OrthoStructure:
    """Classify the orthovectors; mirrors eigen_structure with m_R."""
    p, m_r = rt.p, rt.m_r
    tol = CASE_RTOL * (1.0 + p + abs(m_r))
    if abs(p - abs(m_r)) <= tol:
        if p <= tol:
            return AllOrtho(mu=rt.m_t)
        assert rt.theta_r is not None
        # R touches zero at its maximum (m_R < 0) or minimum (m_R > 0).
        shift = 0.0 if m_r < 0 else math.pi / 2
        return RepeatedOrtho(mu=rt.m_t, phi0=rt.theta_r.shifted(shift))
    if p < abs(m_r):
        return NoRealOrtho()
    p_t = math.sqrt((p - m_r) * (p + m_r))
    delta_r = 0.5 * math.atan2(p_t, -m_r)
    assert rt.theta_r is not None
    return DistinctRealOrtho(
        mu1=rt.m_t + p_t,
        mu2=rt.m_t - p_t,
        phi1=rt.theta_r.shifted(-delta_r),
        phi2=rt.theta_r.shifted(delta_r),
        delta_r=delta_r,
        p_t=p_t,
    )


# ---------------------------------------------------------------------------
# transient summary


class Classification(Enum):
    REACTIVE_ATTRACTOR = "reactive_attractor"
    NONREACTIVE_ATTRACTOR = "nonreactive_attractor"
    ATTENUATING_REPELLER = "attenuating_repeller"
    NONATTENUATING_REPELLER = "nonattenuating_repeller"
    SADDLE = "saddle"
    CENTER = "center"
    CIRCULAR_CENTER = "circular_center"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class TransientSummary:
    """Reactivity data of the system in one record.

    reactive_set is the open arc of angles where R > 0, stored as
    (lo, hi) with hi possibly beyond pi so the arc stays contiguous
    (consumers reduce mod pi on read); None when the set is empty, and
    a full period (lo, lo + pi) when R > 0 everywhere.
    """

    rho1: float
    rho2: float
    reactive_set: tuple[float, float] | None
    classification: Classification
    is_reactive: bool
    is_attenuating: bool


def _reactive_set(rt: RTParams, ortho: OrthoStructure) -> tuple[float, float] | None:
    if isinstance(ortho, DistinctRealOrtho):
        lo = ortho.phi1.value
        hi = lo + 2.0 * ortho.delta_r
        return (lo, hi)
    if isinstance(ortho, AllOrtho):
        return None
    if isinstance(ortho, RepeatedOrtho):
        # R touches zero from below (m_R < 0, empty interior) or from
        # above (m_R > 0, everything but the touch point).
        if rt.m_r > 0:
            return (ortho.phi0.value, ortho.phi0.value + math.pi)
        return None
    # NoRealOrtho: single-signed R.
    if rt.rho2 > 0:
        return (0.0, math.pi)
    return None


def transient_summary(rt: RTParams) -> TransientSummary:
    """Reactivity, attenuation, reactive arc and orbit classification."""
    rho1, rho2 = rt.rho1, rt.rho2
    eig = eigen_structure(rt)
    ortho = ortho_structure(rt)
    eig_tol = CASE_RTOL * (1.0 + abs(rt.m_r) + rt.p)

    if isinstance(ortho, AllOrtho):
        # R identically zero: concentric circles, or the zero matrix.
        cls = (
            Classification.CIRCULAR_CENTER
            if abs(rt.m_t) > eig_tol
            else Classification.DEGENERATE
        )
    elif isinstance(eig, ComplexPairEigen):
        if abs(eig.re) <= eig_tol:
            cls = Classification.CENTER
        elif eig.re < 0:
            cls = (
                Classification.REACTIVE_ATTRACTOR
                if rho1 > 0
                else Classification.NONREACTIVE_ATTRACTOR
            )
        else:
            cls = (
                Classification.ATTENUATING_REPELLER
                if rho2 < 0
                else Classification.NONATTENUATING_REPELLER
            )
    else:
        if isinstance(eig, DistinctRealEigen):
            lam1, lam2 = eig.lambda1, eig.lambda2
        else:
            lam1 = lam2 = eig.lam
        if min(abs(lam1), abs(lam2)) <= eig_tol:
            cls = Classification.DEGENERATE
        elif lam1 < 0 and lam2 < 0:
            cls = (
                Classification.REACTIVE_ATTRACTOR
                if rho1 > 0
                else Classification.NONREACTIVE_ATTRACTOR
            )
        elif lam1 > 0 and lam2 > 0:
            cls = (
                Classification.ATTENUATING_REPELLER
                if rho2 < 0
                else Classification.NONATTENUATING_REPELLER
            )
        else:
            cls = Classification.SADDLE

    return TransientSummary(
        rho1=rho1,
        rho2=rho2,
        reactive_set=_reactive_set(rt, ortho),
        classification=cls,
        is_reactive=rho1 > 0,
        is_attenuating=rho2 < 0,
    )


# ---------------------------------------------------------------------------
# angular phase line


class Stability(Enum):
    ATTRACTING = "attracting"
    REPELLING = "repelling"
    SEMI_STABLE = "semi_stable"


@dataclass(frozen=True)
class AngularEquilibrium:
    angle: AngleModPi
    stability: Stability


@dataclass(frozen=True)
class AngularPhaseLine:
    """Equilibria of the angular flow dtheta/dt = T(theta) on [0, pi).

    all_angles marks the degenerate T == 0 case where every direction
    is at rest (then equilibria is empty).
    """

    equilibria: tuple[AngularEquilibrium, ...]
    all_angles: bool


def angular_phase_line(rt: RTParams) -> AngularPhaseLine:
    """Phase line of the angular dynamics.

    Eigendirections are the rest angles; the one carrying the larger
    eigenvalue attracts (T' = -2 (R - m_R) is negative there), the
    other repels.  A defective eigenline is semi-stable.
    """
    eig = eigen_structure(rt)
    if isinstance(eig, RepeatedFullEigen):
        return AngularPhaseLine(equilibria=(), all_angles=True)
    if isinstance(eig, ComplexPairEigen):
        return AngularPhaseLine(equilibria=(), all_angles=False)
    if isinstance(eig, RepeatedDefectiveEigen):
        eq = AngularEquilibrium(angle=eig.theta0, stability=Stability.SEMI_STABLE)
        return AngularPhaseLine(equilibria=(eq,), all_angles=False)
    eqs = sorted(
        [
            AngularEquilibrium(angle=eig.theta1, stability=Stability.ATTRACTING),
            AngularEquilibrium(angle=eig.theta2, stability=Stability.REPELLING),
        ],
        key=lambda e: e.angle.value,
    )
    return AngularPhaseLine(equilibria=tuple(eqs), all_angles=False)

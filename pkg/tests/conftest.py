import math

import numpy as np
import pytest

from reactlin import Mat2, decompose


def angle_close(a: float, b: float, tol: float = 1e-10) -> bool:
    """Equality of angles identified modulo pi."""
    d = (a - b) % math.pi
    return min(d, math.pi - d) <= tol


def mat_close(a: Mat2, b: Mat2, tol: float) -> bool:
    return (
        abs(a.a11 - b.a11) <= tol
        and abs(a.a12 - b.a12) <= tol
        and abs(a.a21 - b.a21) <= tol
        and abs(a.a22 - b.a22) <= tol
    )


def random_mat2(rng: np.random.Generator, lo: float = -10.0, hi: float = 10.0) -> Mat2:
    e = rng.uniform(lo, hi, size=4)
    return Mat2(e[0], e[1], e[2], e[3])


def random_reactive_attractor(rng: np.random.Generator) -> Mat2:
    """Random reactive attractor with real eigenvalues, rotated randomly."""
    from reactlin import attractor_with_eigenvalues, rotate_conjugate

    lam1 = rng.uniform(-3.0, -0.1)
    lam2 = rng.uniform(lam1 - 3.0, lam1)
    rho = rng.uniform(0.1, 10.0)
    a = attractor_with_eigenvalues(lam1, lam2, rho)
    return rotate_conjugate(a, rng.uniform(0.0, math.pi))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260810)


# Canonical example systems used across the suite.
A_TRIANGULAR = Mat2(-1.0, -8.0, 0.0, -3.0)     # reactive attractor, real spectrum
A_SADDLE = Mat2(-2.0, 1.0, 2.0, 1.0)           # saddle
A_SPIRAL = Mat2(0.7, -4.0, 4.0, -4.7)          # reactive spiral sink
A_MILD = Mat2(-1.0, -5.0, 0.0, -3.0)           # reactive attractor, small rho_max


def max_speed(a: Mat2) -> float:
    rt = decompose(a)
    return max(abs(rt.rho1), abs(rt.rho2), abs(rt.tau1), abs(rt.tau2))

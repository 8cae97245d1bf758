import math

import numpy as np
import pytest

from reactlin import (
    Classification,
    DistinctRealEigen,
    DistinctRealOrtho,
    InvalidInputError,
    Mat2,
    RepeatedDefectiveEigen,
    attractor_with_eigenvalues,
    attractor_with_eigenvectors,
    decompose,
    eigen_structure,
    from_deltas,
    ortho_structure,
    transient_summary,
)
from conftest import angle_close, mat_close


class TestFromDeltas:
    def test_eighth_turn_example(self):
        a = from_deltas(math.pi / 8, math.pi / 8, 1.0)
        want = Mat2(
            -2.414213562373096, 5.828427124746192, 1.0, -2.414213562373096
        )
        assert mat_close(a, want, 1e-12)

    def test_output_is_t_centered(self):
        a = from_deltas(0.4, 0.9, 2.0)
        rt = decompose(a)
        # diagonal entries equal m_R, lower-left is tau1
        assert a.a11 == pytest.approx(a.a22, abs=1e-14)
        assert a.a21 == pytest.approx(rt.tau1, rel=1e-12)
        assert a.a12 == pytest.approx(-rt.tau2, rel=1e-12)

    def test_wide_arc_limit_stays_bounded(self):
        a = from_deltas(math.pi / 2 - 1e-9, 0.3, 1.0)
        assert a.max_abs() < 2.0
        assert decompose(a).p == pytest.approx(0.5, rel=1e-6)

    def test_zero_eigen_separation_is_defective(self):
        a = from_deltas(math.pi / 8, 0.0, 1.0)
        eig = eigen_structure(decompose(a))
        assert isinstance(eig, RepeatedDefectiveEigen)

    @pytest.mark.parametrize(
        "args",
        [
            (0.0, 0.3, 1.0),
            (math.pi / 2, 0.3, 1.0),
            (0.3, math.pi / 2, 1.0),
            (0.3, -0.1, 1.0),
            (0.3, 0.3, 0.0),
            (0.3, 0.3, -2.0),
            (float("nan"), 0.3, 1.0),
        ],
    )
    def test_rejects_out_of_range(self, args):
        with pytest.raises(InvalidInputError):
            from_deltas(*args)

    def test_round_trip_measured_by_spectra(self, rng):
        for _ in range(400):
            delta_r = rng.uniform(0.01, math.pi / 2 - 0.01)
            delta_t = rng.uniform(0.01, math.pi / 2 - 0.01)
            rho = math.exp(rng.uniform(math.log(0.1), math.log(100.0)))
            a = from_deltas(delta_r, delta_t, rho)
            rt = decompose(a)
            ortho = ortho_structure(rt)
            eig = eigen_structure(rt)
            assert isinstance(ortho, DistinctRealOrtho)
            assert isinstance(eig, DistinctRealEigen)
            assert rt.rho1 == pytest.approx(rho, rel=1e-9)
            assert ortho.delta_r == pytest.approx(delta_r, rel=1e-9, abs=1e-12)
            assert eig.delta_t == pytest.approx(delta_t, rel=1e-9, abs=1e-12)


class TestAttractorWithEigenvalues:
    def test_matches_requested_spectrum_and_reactivity(self):
        a = attractor_with_eigenvalues(-1.0, -3.0, 2.1231)
        rt = decompose(a)
        eig = eigen_structure(rt)
        assert eig.lambda1 == pytest.approx(-1.0, abs=1e-9)
        assert eig.lambda2 == pytest.approx(-3.0, abs=1e-9)
        assert rt.rho1 == pytest.approx(2.1231, rel=1e-12)
        assert transient_summary(rt).classification is Classification.REACTIVE_ATTRACTOR

    def test_repeated_eigenvalue(self):
        a = attractor_with_eigenvalues(-1.0, -1.0, 5.0)
        rt = decompose(a)
        eig = eigen_structure(rt)
        assert isinstance(eig, RepeatedDefectiveEigen)
        assert eig.lam == pytest.approx(-1.0, abs=1e-12)
        assert rt.rho1 == pytest.approx(5.0, rel=1e-12)

    def test_unbounded_reactivity_witness(self):
        a = attractor_with_eigenvalues(-1.0, -3.0, 1000.0)
        rt = decompose(a)
        eig = eigen_structure(rt)
        assert eig.lambda1 == pytest.approx(-1.0, abs=1e-8)
        assert eig.lambda2 == pytest.approx(-3.0, abs=1e-8)
        assert rt.rho1 == pytest.approx(1000.0, rel=1e-12)

    @pytest.mark.parametrize(
        "args", [(0.0, -1.0, 1.0), (1.0, -1.0, 1.0), (-1.0, -0.5, 1.0), (-1.0, -3.0, 0.0)]
    )
    def test_rejects_bad_parameters(self, args):
        with pytest.raises(InvalidInputError):
            attractor_with_eigenvalues(*args)

    def test_always_reactive_attractor(self, rng):
        for _ in range(300):
            lam1 = rng.uniform(-3.0, -0.1)
            lam2 = rng.uniform(lam1 - 3.0, lam1)
            rho = rng.uniform(0.1, 10.0)
            a = attractor_with_eigenvalues(lam1, lam2, rho)
            rt = decompose(a)
            s = transient_summary(rt)
            assert s.classification is Classification.REACTIVE_ATTRACTOR
            eig = eigen_structure(rt)
            tol = 1e-9 * (1 + abs(lam2))
            if isinstance(eig, DistinctRealEigen):
                assert abs(eig.lambda1 - lam1) <= tol
                assert abs(eig.lambda2 - lam2) <= tol
            else:
                assert abs(eig.lam - lam1) <= tol


class TestAttractorWithEigenvectors:
    def test_places_requested_eigenlines(self):
        a = attractor_with_eigenvectors(math.pi / 3, math.pi / 6, 5.0)
        rt = decompose(a)
        eig = eigen_structure(rt)
        angles = sorted([eig.theta1.value, eig.theta2.value])
        assert angle_close(angles[0], math.pi / 6, 1e-9)
        assert angle_close(angles[1], math.pi / 3, 1e-9)
        assert rt.rho1 == pytest.approx(5.0, rel=1e-12)
        assert transient_summary(rt).classification is Classification.REACTIVE_ATTRACTOR

    def test_eigenline_residuals(self, rng):
        for _ in range(200):
            t2 = rng.uniform(0.0, math.pi)
            gap = rng.uniform(0.05, math.pi - 0.05)
            if abs(gap - math.pi / 2) < 0.02:
                continue
            t1 = t2 + gap
            rho = rng.uniform(0.1, 10.0)
            a = attractor_with_eigenvectors(t1, t2, rho)
            arr = a.as_array()
            eig = eigen_structure(decompose(a))
            assert eig.lambda1 < 0 and eig.lambda2 < 0
            for th in (t1, t2):
                v = np.array([math.cos(th), math.sin(th)])
                av = arr @ v
                lam = float(av @ v)
                assert np.linalg.norm(av - lam * v) <= 1e-9 * a.max_abs()

    def test_rejects_orthogonal_pair(self):
        with pytest.raises(InvalidInputError):
            attractor_with_eigenvectors(math.pi / 2, 0.0, 2.0)

    def test_rejects_parallel_pair(self):
        with pytest.raises(InvalidInputError):
            attractor_with_eigenvectors(0.7, 0.7, 2.0)

    def test_delta_r_override_validated(self):
        # delta_t = pi/12, so the admissible radii are (0, pi/6)
        attractor_with_eigenvectors(math.pi / 3, math.pi / 6, 1.0, delta_r=0.1)
        with pytest.raises(InvalidInputError):
            attractor_with_eigenvectors(math.pi / 3, math.pi / 6, 1.0, delta_r=0.6)

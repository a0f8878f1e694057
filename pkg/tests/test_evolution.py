import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadwalk import (
    InitialVector,
    SpinorField,
    eigen_residual,
    measure_of,
    step,
    stationarity_report,
    transfer_eigenfunction,
    verify_stationary,
)
from hadwalk.errors import NotOnUnitCircleError, WindowTooSmallError

SQ2 = 1.0 / np.sqrt(2.0)

finite_complex = st.complex_numbers(
    min_magnitude=1e-50, max_magnitude=1e50,
    allow_nan=False, allow_infinity=False, allow_subnormal=False,
)


def _field(xmin, rows):
    return SpinorField(xmin, np.array(rows, dtype=np.complex128))


class TestStep:
    def test_identity_coin_fixes_constant_field(self, I2):
        f = _field(-2, [[1, 1]] * 5)
        out = step(I2, f)
        assert out.xmin == -1 and out.xmax == 1
        assert np.array_equal(out.values, np.tile([1, 1], (3, 1)))

    def test_hadamard_first_step(self, H):
        # hand-applied update: the point seed (1,0) at the origin splits
        # into (1/sqrt2, 0) at -1 and (0, 1/sqrt2) at +1
        f = _field(-2, [[0, 0], [0, 0], [1, 0], [0, 0], [0, 0]])
        out = step(H, f)
        assert np.allclose(out.at(-1), [SQ2, 0], atol=1e-15)
        assert np.allclose(out.at(0), [0, 0], atol=0)
        assert np.allclose(out.at(1), [0, SQ2], atol=1e-15)

    def test_zero_field_stays_zero(self, H):
        out = step(H, _field(-3, [[0, 0]] * 7))
        assert not out.values.any()

    def test_window_too_small(self, H):
        with pytest.raises(WindowTooSmallError):
            step(H, _field(0, [[1, 0]]))

    def test_boundary_sites_never_read(self, H):
        # two fields differing only at the edges step to the same interior
        base = np.zeros((7, 2), dtype=complex)
        base[3] = (0.3, -1j)
        spiked = base.copy()
        spiked[0] = (5, 5)
        spiked[6] = (-7j, 1)
        out1 = step(H, SpinorField(-3, base))
        out2 = step(H, SpinorField(-3, spiked))
        assert np.array_equal(out1.values[1:-1], out2.values[1:-1])

    @given(entries=st.lists(finite_complex, min_size=6, max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_norm_conservation_interior_support(self, H, entries):
        # support two sites clear of the edges: everything the step
        # scatters still lands inside the shrunken output window
        values = np.zeros((7, 2), dtype=np.complex128)
        values[2:5] = np.array(entries).reshape(3, 2)
        total_in = measure_of(SpinorField(-3, values)).values.sum()
        total_out = measure_of(step(H, SpinorField(-3, values))).values.sum()
        assert abs(total_out - total_in) <= 1e-12 * max(1.0, total_in)


class TestVerifyStationary:
    def test_hadamard_pi_6_passes(self, H):
        report = verify_stationary(H, np.exp(1j * np.pi / 6), InitialVector(1, 0),
                                   L=64, n_steps=10, tol=1e-10)
        assert report.passed
        assert report.max_eigen_residual <= 1e-10
        assert len(report.per_step_dev) == 10

    def test_identity_constant_eigenfunction(self, I2):
        report = verify_stationary(I2, 1.0, InitialVector(1, 1),
                                   L=16, n_steps=5, tol=1e-10)
        assert report.passed
        assert report.max_measure_dev == 0.0

    def test_exponential_angle_passes_scaled(self, H):
        report = verify_stationary(H, np.exp(1j * np.pi / 2), InitialVector(1, 1),
                                   L=64, n_steps=10, tol=1e-10)
        assert report.passed

    def test_perturbed_field_fails(self, H):
        lam = np.exp(1j * np.pi / 6)
        field = transfer_eigenfunction(H, lam, InitialVector(1, 0), -32, 32)
        values = field.values.copy()
        values[32, 0] += 1e-3
        report = stationarity_report(H, lam, SpinorField(-32, values),
                                     n_steps=5, tol=1e-10)
        assert not report.passed
        assert report.max_eigen_residual >= 1e-4

    def test_off_circle_rejected(self, H):
        with pytest.raises(NotOnUnitCircleError):
            verify_stationary(H, 1.01, InitialVector(1, 0))

    def test_window_precondition(self, H):
        with pytest.raises(WindowTooSmallError):
            verify_stationary(H, 1.0, InitialVector(1, 0), L=10, n_steps=10)


class TestEigenResidual:
    def test_transfer_eigenfunctions_satisfy_relation(self, H, rng):
        for _ in range(10):
            theta = rng.uniform(0, 2 * np.pi)
            z = rng.normal(size=4)
            phi = InitialVector(complex(z[0], z[1]), complex(z[2], z[3]))
            f = transfer_eigenfunction(H, np.exp(1j * theta), phi, -30, 30)
            assert eigen_residual(H, np.exp(1j * theta), f).max() <= 1e-10

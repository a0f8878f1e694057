import numpy as np
import pytest

from hadwalk import (
    InitialVector,
    boundary_values,
    build_transfer,
    closed_form_field,
    kls_eigenfunction,
    measure_of,
    step,
    transfer_eigenfunction,
)
from hadwalk.errors import (
    AmplitudeOverflowError,
    NotOnUnitCircleError,
    ZeroCornerEntryError,
    ZeroInputError,
)
from hadwalk import rotation_coin

LAM_PI4 = np.exp(1j * np.pi / 4)


class TestBuildTransfer:
    def test_hadamard_at_pi_4_frozen_entries(self, H):
        # (2*lam^2-1)/(sqrt2*lam) etc. evaluated by hand at lam = e^{i pi/4}
        pair = build_transfer(H, LAM_PI4)
        expected_plus = np.array(
            [[0.5 + 1.5j, 0.5 - 0.5j], [0.5 - 0.5j, -0.5 + 0.5j]]
        )
        assert np.allclose(pair.t_plus, expected_plus, atol=1e-14)

    def test_unitary_at_lambda_one(self, H):
        pair = build_transfer(H, 1.0)
        dev = np.abs(pair.t_plus @ pair.t_plus.conj().T - np.eye(2)).max()
        assert dev <= 1e-12

    def test_identity_coin_gives_identity(self, I2):
        pair = build_transfer(I2, 1.0)
        assert np.allclose(pair.t_plus, np.eye(2), atol=1e-15)
        assert np.allclose(pair.t_minus, np.eye(2), atol=1e-15)

    def test_inverse_pair_on_grid(self, H):
        for j in range(360):
            pair = build_transfer(H, np.exp(2j * np.pi * j / 360))
            assert np.abs(pair.t_plus @ pair.t_minus - np.eye(2)).max() <= 1e-12

    def test_unitarity_only_at_zero_and_pi(self, H):
        hits = []
        for j in range(360):
            theta = 2 * np.pi * j / 360
            pair = build_transfer(H, np.exp(1j * theta))
            dev = np.abs(pair.t_plus @ pair.t_plus.conj().T - np.eye(2)).max()
            if dev <= 1e-12:
                hits.append(theta)
            else:
                assert dev >= 1e-3
        assert hits == pytest.approx([0.0, np.pi], abs=1e-15)

    def test_zero_corner_rejected(self):
        with pytest.raises(ZeroCornerEntryError):
            build_transfer(rotation_coin(np.pi / 2), 1.0)

    def test_off_circle_rejected(self, H):
        with pytest.raises(NotOnUnitCircleError):
            build_transfer(H, 0.5)


class TestBoundaryValues:
    def test_frozen_values_at_pi_4(self, H):
        plus, minus = boundary_values(H, LAM_PI4, InitialVector(1, 0))
        assert np.allclose(plus, [0.5 + 1.5j, 0.5 - 0.5j], atol=1e-14)
        assert np.allclose(minus, [0.5 - 0.5j, 0.5 - 0.5j], atol=1e-14)

    def test_matches_transfer_pair_action(self, H, rng):
        # dual route: explicit first-step formulas vs matrix application
        for _ in range(20):
            theta = rng.uniform(0, 2 * np.pi)
            z = rng.normal(size=4)
            phi = InitialVector(complex(z[0], z[1]), complex(z[2], z[3]))
            lam = np.exp(1j * theta)
            pair = build_transfer(H, lam)
            plus, minus = boundary_values(H, lam, phi)
            assert np.abs(plus - pair.t_plus @ phi.as_array()).max() <= 1e-12
            assert np.abs(minus - pair.t_minus @ phi.as_array()).max() <= 1e-12

    def test_identity_coin_passthrough(self, I2):
        plus, minus = boundary_values(I2, 1.0, InitialVector(0.3 + 1j, -2))
        assert np.allclose(plus, [0.3 + 1j, -2], atol=0)
        assert np.allclose(minus, [0.3 + 1j, -2], atol=0)


class TestTransferEigenfunction:
    def test_quadratic_measure_window(self, H):
        f = transfer_eigenfunction(H, LAM_PI4, InitialVector(1, 0), -3, 3)
        assert measure_of(f).values == pytest.approx([7, 3, 1, 1, 3, 7, 13], abs=1e-12)

    def test_uniform_seed_gives_constant_measure(self, H):
        f = transfer_eigenfunction(H, LAM_PI4, InitialVector(1, -1j), -10, 10)
        assert measure_of(f).values == pytest.approx(np.full(21, 2.0), abs=1e-12)

    def test_identity_coin_constant_field(self, I2):
        f = transfer_eigenfunction(I2, 1.0, InitialVector(2, 3j), -5, 5)
        assert np.allclose(f.values, np.tile([2, 3j], (11, 1)), atol=0)

    def test_agrees_with_closed_form_at_pi_6(self, H):
        lam = np.exp(1j * np.pi / 6)
        phi = InitialVector(1, -1)
        tf = transfer_eigenfunction(H, lam, phi, -5, 5)
        cf = closed_form_field(H, lam, phi, -5, 5)
        assert np.abs(tf.values - cf.values).max() <= 1e-12

    def test_window_must_contain_origin(self, H):
        with pytest.raises(ValueError):
            transfer_eigenfunction(H, LAM_PI4, InitialVector(1, 0), 1, 5)

    def test_site_cap(self, H):
        with pytest.raises(ValueError):
            transfer_eigenfunction(H, LAM_PI4, InitialVector(1, 0), 0, 10 ** 6 + 1)

    def test_exponential_overflow_detected(self, H):
        # amplitude norm grows by sqrt(3+2*sqrt2) ~ 2.414 per site, so
        # doubles give out around |x| ~ 800 at this angle
        with pytest.raises(AmplitudeOverflowError):
            transfer_eigenfunction(H, np.exp(1j * np.pi / 2), InitialVector(1, 1),
                                   -900, 900)


class TestKlsEigenfunction:
    @pytest.mark.parametrize("sigma", [1, -1])
    @pytest.mark.parametrize("tau", [1, -1])
    def test_walk_eigenvalue_relation(self, H, sigma, tau):
        f = kls_eigenfunction(sigma, tau, -1j, -16, 16)
        lam = (sigma + tau * 1j) / np.sqrt(2.0)
        stepped = step(H, f)
        assert np.abs(stepped.values - lam * f.values[1:-1]).max() <= 1e-12

    @pytest.mark.parametrize("sigma,tau", [(1, 1), (1, -1), (-1, 1), (-1, -1)])
    def test_sitewise_transfer_eigenvalue_is_double_root(self, H, sigma, tau):
        # the sign-pair fields are sitewise eigenvectors of the transfer
        # pair with eigenvalue tau*i (the double characteristic root),
        # while the walk eigenvalue is (sigma + tau*i)/sqrt(2)
        lam = (sigma + tau * 1j) / np.sqrt(2.0)
        f = kls_eigenfunction(sigma, tau, 0.7 - 0.2j, -8, 8)
        pair = build_transfer(H, lam)
        for x in range(-8, 9):
            v = f.at(x)
            assert np.abs(pair.t_plus @ v - (tau * 1j) * v).max() <= 1e-12
            assert np.abs(pair.t_minus @ v - (-tau * 1j) * v).max() <= 1e-12

    def test_uniform_measure(self):
        f = kls_eigenfunction(1, 1, -1j, -12, 12)
        assert measure_of(f).values == pytest.approx(np.full(25, 2.0), abs=1e-14)

    def test_matches_transfer_iteration(self, H):
        # with the same seed, the iterated field reproduces the closed one
        f = kls_eigenfunction(1, 1, -1j, -6, 6)
        g = transfer_eigenfunction(H, LAM_PI4, InitialVector(1, -1j), -6, 6)
        assert np.abs(f.values - g.values).max() <= 1e-12

    def test_zero_seed_rejected(self):
        with pytest.raises(ZeroInputError):
            kls_eigenfunction(1, 1, 0, -4, 4)

    def test_bad_signs_rejected(self):
        with pytest.raises(ValueError):
            kls_eigenfunction(2, 1, 1.0, -4, 4)

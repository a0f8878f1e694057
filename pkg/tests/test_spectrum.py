import numpy as np
import pytest

from hadwalk import (
    dispersion_table,
    fourier_symbol,
    hadamard_symbol_eigenvalues,
    identity_coin,
    lambda_moduli,
    rotation_coin,
    spectrum_arcs,
    symbol_eigenvalues,
    symbol_eigenvector,
)

TWO_PI = 2 * np.pi
SQ2 = 1.0 / np.sqrt(2.0)


class TestFourierSymbol:
    def test_hadamard_at_zero_momentum(self, H):
        assert np.allclose(fourier_symbol(H, 0.0), H.matrix, atol=0)

    def test_hadamard_displayed_form(self, H, rng):
        for k in rng.uniform(-np.pi, np.pi, size=10):
            expected = np.array(
                [[np.exp(1j * k) * SQ2, np.exp(1j * k) * SQ2],
                 [np.exp(-1j * k) * SQ2, -np.exp(-1j * k) * SQ2]]
            )
            assert np.allclose(fourier_symbol(H, k), expected, atol=1e-15)

    def test_identity_coin_is_diagonal(self, I2):
        m = fourier_symbol(I2, 0.7)
        assert np.allclose(m, np.diag([np.exp(0.7j), np.exp(-0.7j)]), atol=1e-15)

    def test_unitary_for_all_momenta(self, H):
        for k in np.linspace(-np.pi, np.pi, 256, endpoint=False):
            m = fourier_symbol(H, k)
            assert np.abs(m @ m.conj().T - np.eye(2)).max() <= 1e-12


class TestSymbolEigenvalues:
    def test_momentum_zero(self, H):
        ev = symbol_eigenvalues(H, 0.0)
        assert ev.lambda1 == pytest.approx(1.0, abs=1e-12)
        assert ev.lambda2 == pytest.approx(-1.0, abs=1e-12)

    def test_momentum_half_pi(self, H):
        ev = symbol_eigenvalues(H, np.pi / 2)
        assert ev.lambda1 == pytest.approx(np.exp(1j * np.pi / 4), abs=1e-12)

    def test_unimodular(self, H):
        for k in np.linspace(-np.pi, np.pi, 128, endpoint=False):
            ev = symbol_eigenvalues(H, k)
            assert abs(ev.lambda1) == pytest.approx(1.0, abs=1e-12)
            assert abs(ev.lambda2) == pytest.approx(1.0, abs=1e-12)

    def test_closed_form_matches_generic_solver(self, H):
        for k in np.linspace(-np.pi, np.pi, 512, endpoint=False):
            ev = symbol_eigenvalues(H, k)
            c1, c2 = hadamard_symbol_eigenvalues(k)
            assert abs(ev.lambda1 - c1) <= 1e-12
            assert abs(ev.lambda2 - c2) <= 1e-12

    def test_eigenvector_residual(self, H):
        for k in np.linspace(-np.pi, np.pi, 64, endpoint=False):
            ev = symbol_eigenvalues(H, k)
            m = fourier_symbol(H, k)
            for lam in (ev.lambda1, ev.lambda2):
                v = symbol_eigenvector(H, k, lam)
                assert np.linalg.norm(m @ v - lam * v) <= 1e-12

    def test_product_is_coin_determinant(self, H, rng):
        for k in rng.uniform(-np.pi, np.pi, size=20):
            ev = symbol_eigenvalues(H, k)
            assert ev.lambda1 * ev.lambda2 == pytest.approx(H.delta, abs=1e-12)


class TestSpectrumArcs:
    def test_hadamard_arcs_cover_bounded_region(self, H):
        arcs = spectrum_arcs(H, 4096)
        tol = 3 * TWO_PI / 4096
        expected = [(0, np.pi / 4), (3 * np.pi / 4, 5 * np.pi / 4),
                    (7 * np.pi / 4, TWO_PI)]
        assert len(arcs) == 3
        for (lo, hi), (elo, ehi) in zip(arcs, expected):
            assert abs(lo - elo) <= tol and abs(hi - ehi) <= tol

    def test_gaps_have_no_spectral_points(self, H):
        table = dispersion_table(H, 4096)
        args = np.concatenate([table[:, 1], table[:, 2]])
        margin = 3 * TWO_PI / 4096
        for glo, ghi in ((np.pi / 4, 3 * np.pi / 4), (5 * np.pi / 4, 7 * np.pi / 4)):
            assert not np.any((args > glo + margin) & (args < ghi - margin))

    def test_identity_coin_fills_circle(self, I2):
        arcs = spectrum_arcs(I2, 4096)
        assert len(arcs) == 1
        lo, hi = arcs[0]
        assert hi - lo >= TWO_PI - 3 * TWO_PI / 4096

    def test_rotation_coin_arcs_conjugation_symmetric(self):
        # eigenvalues come in conjugate pairs under k -> -k, so the arc
        # set must be invariant under arg -> 2*pi - arg
        coin = rotation_coin(np.pi / 6)
        grid = 8192
        arcs = spectrum_arcs(coin, grid)
        tol = 3 * TWO_PI / grid

        def covered(angle):
            angle %= TWO_PI
            return any(lo - tol <= angle <= hi + tol for lo, hi in arcs)

        for lo, hi in arcs:
            for probe in np.linspace(lo, hi, 9):
                assert covered(TWO_PI - probe)

    def test_endpoint_error_halves_when_grid_doubles(self, H):
        expected = np.array([0, np.pi / 4, 3 * np.pi / 4, 5 * np.pi / 4,
                             7 * np.pi / 4, TWO_PI])

        def worst_err(grid):
            arcs = spectrum_arcs(H, grid)
            ends = np.sort(np.array(arcs).ravel())
            return np.abs(ends - expected).max()

        e1, e2, e4 = worst_err(1001), worst_err(2002), worst_err(4004)
        assert e2 <= 1.5 * e1 + 1e-12
        assert e4 <= 1.5 * e2 + 1e-12

    def test_cross_module_arc_points_are_unimodular(self, H, rng):
        arcs = spectrum_arcs(H, 4096)
        margin = 3 * TWO_PI / 4096
        inside, outside = [], []
        while len(inside) < 100 or len(outside) < 100:
            theta = rng.uniform(0, TWO_PI)
            if any(lo + margin < theta < hi - margin for lo, hi in arcs):
                inside.append(theta)
            elif all(theta < lo - margin or theta > hi + margin for lo, hi in arcs):
                outside.append(theta)
        for theta in inside[:100]:
            assert lambda_moduli(theta) == pytest.approx((1.0, 1.0), abs=1e-12)
        for theta in outside[:100]:
            mp, mm = lambda_moduli(theta)
            assert max(mp, mm) - 1.0 >= 1e-3

    def test_minimum_grid_size(self, H):
        with pytest.raises(ValueError):
            spectrum_arcs(H, 8)

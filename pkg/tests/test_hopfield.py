"""Hamiltonian assembly and Bogoliubov diagonalization."""

from __future__ import annotations

import dataclasses

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from helpers import G05, decompose, random_stable_params
from polariton_rates import (
    DegenerateSpectrum,
    InvalidParams,
    ModelParams,
    Variant,
    build_hopfield_matrix,
    diagonalize,
    matter_completeness,
    photon_completeness,
)
from polariton_rates.hopfield import PolaritonBranch, quadratic_form
from polariton_rates.oracle import oracle_diagonalize

stable_variants = st.sampled_from(
    [(Variant.FULL_HOPFIELD, True), (Variant.FULL_HOPFIELD, False),
     (Variant.NO_A2, True), (Variant.NO_A2, False)]
)


def try_params(omega_c, g, variant, anti):
    try:
        params = ModelParams(omega_c, 1.0, g, variant=variant, include_antiresonant=anti)
        return params, decompose(params)
    except (InvalidParams, DegenerateSpectrum):
        assume(False)


class TestMatrixAssembly:
    def test_uncoupled_matrix_is_diagonal(self):
        m = build_hopfield_matrix(ModelParams(1.0, 1.0, 0.0, variant=Variant.NO_A2)).m
        np.testing.assert_array_equal(m, np.diag([1.0, 1.0, -1.0, -1.0]))

    def test_rwa_matrix_mixes_no_sectors(self):
        params = ModelParams(
            1.0, 1.0, 0.3, variant=Variant.NO_A2, include_antiresonant=False
        )
        m = build_hopfield_matrix(params).m
        np.testing.assert_array_equal(m[:2, 2:], 0.0)
        np.testing.assert_array_equal(m[2:, :2], 0.0)
        assert m[0, 1] == 0.3 and m[1, 0] == 0.3
        assert m[2, 3] == -0.3 and m[3, 2] == -0.3

    def test_full_hopfield_diamagnetic_entries(self):
        m = build_hopfield_matrix(ModelParams(1.0, 1.0, 0.3)).m
        # D = g^2/omega_ex = 0.09 enters as 2D on the photon quadrature entries
        assert m[0, 0] == pytest.approx(1.18, abs=1e-15)
        assert m[0, 2] == pytest.approx(0.18, abs=1e-15)
        assert m[2, 0] == pytest.approx(-0.18, abs=1e-15)
        # eigenvalues confirmed by the independent root finder
        roots, _ = oracle_diagonalize(build_hopfield_matrix(ModelParams(1.0, 1.0, 0.3)))
        lapack = np.sort(np.linalg.eigvals(m).real)
        np.testing.assert_allclose(roots, lapack, atol=1e-10)

    @given(omega_c=st.floats(0.5, 2.0), g=st.floats(0.0, 1.0), va=stable_variants)
    @settings(deadline=None)
    def test_quadratic_form_symmetric_psd(self, omega_c, g, va):
        variant, anti = va
        try:
            matrix = build_hopfield_matrix(
                ModelParams(omega_c, 1.0, g, variant=variant, include_antiresonant=anti)
            )
        except InvalidParams:
            assume(False)
        h = quadratic_form(matrix)
        np.testing.assert_allclose(h, h.T, atol=1e-12)
        assert np.min(np.linalg.eigvalsh(h)) > -1e-12

    def test_rejects_nonpositive_frequencies(self):
        with pytest.raises(InvalidParams):
            ModelParams(0.0, 1.0, 0.1)
        with pytest.raises(InvalidParams):
            ModelParams(1.0, -1.0, 0.1)
        with pytest.raises(InvalidParams):
            ModelParams(1.0, 1.0, -0.1)
        with pytest.raises(InvalidParams):
            ModelParams(1.0, 1.0, 0.1, kappa0=-1.0)

    def test_antiresonant_stability_bound(self):
        # bound is sqrt(omega_c*omega_ex)/2 = 0.5 at resonance, rejected inclusively
        kwargs = dict(variant=Variant.NO_A2, include_antiresonant=True)
        ModelParams(1.0, 1.0, 0.49, **kwargs)
        with pytest.raises(InvalidParams):
            ModelParams(1.0, 1.0, 0.5, **kwargs)
        with pytest.raises(InvalidParams):
            ModelParams(1.0, 1.0, 0.6, **kwargs)

    def test_rwa_positivity_bound(self):
        kwargs = dict(variant=Variant.NO_A2, include_antiresonant=False)
        build_hopfield_matrix(ModelParams(1.0, 1.0, 0.99, **kwargs))
        with pytest.raises(InvalidParams):
            build_hopfield_matrix(ModelParams(1.0, 1.0, 1.0, **kwargs))


class TestDiagonalize:
    def test_resonant_uncoupled_is_degenerate(self):
        params = ModelParams(1.0, 1.0, 0.0)
        with pytest.raises(DegenerateSpectrum):
            decompose(params)

    def test_uncoupled_off_resonance(self):
        dec = decompose(ModelParams(0.8, 1.0, 0.0))
        assert dec.lower.omega_pol == pytest.approx(0.8, abs=1e-14)
        assert dec.upper.omega_pol == pytest.approx(1.0, abs=1e-14)
        assert dec.lower.w == 1.0 and dec.lower.x == 0.0
        assert dec.upper.x == 1.0 and dec.upper.w == 0.0
        assert dec.lower.y == dec.lower.z == dec.upper.y == dec.upper.z == 0.0

    def test_resonant_rwa_beam_splitter(self):
        params = ModelParams(
            1.0, 1.0, 0.2, variant=Variant.NO_A2, include_antiresonant=False
        )
        dec = decompose(params)
        assert dec.lower.omega_pol == pytest.approx(0.8, abs=1e-12)
        assert dec.upper.omega_pol == pytest.approx(1.2, abs=1e-12)
        assert abs(dec.lower.w) ** 2 == pytest.approx(0.5, abs=1e-12)
        assert abs(dec.upper.w) ** 2 == pytest.approx(0.5, abs=1e-12)
        assert dec.lower.y == dec.upper.y == dec.lower.z == dec.upper.z == 0.0

    def test_full_hopfield_g05_matches_frozen_oracle(self):
        dec = decompose(ModelParams(1.0, 1.0, 0.5))
        assert dec.lower.omega_pol == pytest.approx(G05["omega_L"], abs=1e-9)
        assert dec.upper.omega_pol == pytest.approx(G05["omega_U"], abs=1e-9)
        for tag, branch in (("L", dec.lower), ("U", dec.upper)):
            for name in "wxyz":
                got = getattr(branch, name)
                assert got.imag == 0.0
                assert got.real == pytest.approx(G05[f"{name}_{tag}"], abs=1e-9), (
                    f"{name}_{tag}"
                )

    def test_phase_convention_photon_weight_nonnegative(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            dec = decompose(random_stable_params(rng))
            for b in dec.branches:
                assert b.w.real >= 0.0 and b.w.imag == 0.0

    @given(omega_c=st.floats(0.5, 2.0), g=st.floats(0.0, 1.0), va=stable_variants)
    @settings(deadline=None)
    def test_completeness_invariants(self, omega_c, g, va):
        _, dec = try_params(omega_c, g, *va)
        assert photon_completeness(dec) < 1e-10
        assert matter_completeness(dec) < 1e-10
        for b in dec.branches:
            norm = abs(b.w) ** 2 + abs(b.x) ** 2 - abs(b.y) ** 2 - abs(b.z) ** 2
            assert norm == pytest.approx(1.0, abs=1e-10)
        assert 0.0 < dec.lower.omega_pol <= dec.upper.omega_pol

    @given(omega_c=st.floats(0.5, 2.0), g=st.floats(0.0, 1.0), va=stable_variants)
    @settings(deadline=None)
    def test_eigenvalue_pairing(self, omega_c, g, va):
        params, dec = try_params(omega_c, g, *va)
        evals = np.sort(np.linalg.eigvals(build_hopfield_matrix(params).m).real)
        expected = np.sort(
            [-dec.upper.omega_pol, -dec.lower.omega_pol,
             dec.lower.omega_pol, dec.upper.omega_pol]
        )
        np.testing.assert_allclose(evals, expected, atol=1e-10)

    @given(
        omega_c=st.floats(0.5, 2.0),
        g=st.floats(0.0, 1.0),
        variant=st.sampled_from(list(Variant)),
    )
    @settings(deadline=None)
    def test_rwa_antiresonant_weights_exactly_zero(self, omega_c, g, variant):
        _, dec = try_params(omega_c, g, variant, False)
        assert dec.lower.y == 0.0 and dec.lower.z == 0.0
        assert dec.upper.y == 0.0 and dec.upper.z == 0.0

    def test_small_g_limit(self):
        dec = decompose(ModelParams(0.8, 1.0, 1e-8))
        weights = sorted(abs(b.w) for b in dec.branches)
        assert weights[1] > 1.0 - 1e-6
        assert weights[0] < 1e-6
        for b in dec.branches:
            assert abs(b.y) < 1e-6 and abs(b.z) < 1e-6

    @pytest.mark.parametrize("omega_c", [1.0, 0.8])
    def test_continuity_along_g_sweep(self, omega_c):
        base = ModelParams(omega_c, 1.0, 0.0)
        gs = np.linspace(0.0, 1.0, 201)
        if omega_c == 1.0:
            gs = gs[1:]  # resonant g = 0 is degenerate
        step = gs[1] - gs[0]
        coeffs = []
        for g in gs:
            dec = decompose(dataclasses.replace(base, g=float(g)))
            coeffs.append(
                np.concatenate(
                    [dec.lower.coefficients(), dec.upper.coefficients()]
                ).real
            )
        jumps = np.abs(np.diff(np.array(coeffs), axis=0))
        assert np.max(jumps) < 10.0 * step


class TestCompleteness:
    def test_uncoupled_residual_zero(self):
        dec = decompose(ModelParams(0.8, 1.0, 0.0))
        assert photon_completeness(dec) == 0.0
        assert matter_completeness(dec) == 0.0

    def test_truncating_antiresonant_weights_breaks_completeness(self):
        # keeping |w| from the g = 0.5 solve while zeroing y leaves the
        # photon expansion non-bosonic; the residual equals sum_j |y_j|^2
        dec = decompose(ModelParams(1.0, 1.0, 0.5))
        truncated = dataclasses.replace(
            dec,
            lower=dataclasses.replace(dec.lower, y=0j),
            upper=dataclasses.replace(dec.upper, y=0j),
        )
        residual = photon_completeness(truncated)
        assert residual > 0.0
        assert residual == pytest.approx(G05["sum_y2"], abs=1e-9)

    def test_branch_types_accept_truncated_coefficients(self):
        # hand-built branches are representable even when invariants fail
        b = PolaritonBranch(
            branch=decompose(ModelParams(0.8, 1.0, 0.0)).lower.branch,
            omega_pol=1.0, w=1.0 + 0j, x=0j, y=0j, z=0j,
        )
        assert b.omega_pol == 1.0

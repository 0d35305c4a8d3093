"""Shared test utilities: stable-parameter sampling and frozen reference values."""

from __future__ import annotations

import numpy as np

from polariton_rates import ModelParams, Variant, build_hopfield_matrix, diagonalize

# Reference decomposition at resonance, g = 0.5, full Hopfield model,
# frozen from the independent characteristic-polynomial oracle.  The
# frequencies also satisfy the closed form Omega^2 = (3 -+ sqrt(5))/2.
G05 = {
    "omega_L": 0.6180339887498949,
    "omega_U": 1.618033988749895,
    "w_L": 0.5410222715494105,
    "x_L": -0.8753924240376215,
    "y_L": -0.12771803342701132,
    "z_L": 0.2066521190611996,
    "w_U": 0.8753924240376217,
    "x_U": 0.5410222715494106,
    "y_U": 0.20665211906119968,
    "z_U": 0.12771803342701138,
    "sum_w2": 1.0590169943749475,
    "sum_y2": 0.05901699437494744,
    "w_L_sq": 0.2927050983124841,
    "w_U_sq": 0.7663118960624633,
    "frac_L": 0.2763932022500209,
    "frac_U": 0.723606797749979,
}


def random_stable_params(rng: np.random.Generator, kappa0: float = 0.01) -> ModelParams:
    """One random parameter set inside the stability domain of its variant.

    Detuning omega_c/omega_ex is uniform on [0.5, 2], g on [0, g_max] where
    g_max is 1 clipped below the variant's stability bound.
    """
    omega_c = rng.uniform(0.5, 2.0)
    variant = Variant.FULL_HOPFIELD if rng.random() < 0.5 else Variant.NO_A2
    anti = bool(rng.random() < 0.5)
    g_hi = 1.0
    if variant is Variant.NO_A2:
        bound = np.sqrt(omega_c) / 2.0 if anti else np.sqrt(omega_c)
        g_hi = min(1.0, 0.98 * bound)
    g = rng.uniform(0.0, g_hi)
    return ModelParams(
        omega_c=omega_c,
        omega_ex=1.0,
        g=g,
        variant=variant,
        include_antiresonant=anti,
        kappa0=kappa0,
    )


def decompose(params: ModelParams):
    return diagonalize(build_hopfield_matrix(params), params)

"""Polariton dissipation rates under four loss models.

Given the photon weights w_j of the two polariton branches and the bare
cavity rate kappa0, four per-branch rates are compared:

* naive RWA:        kappa_j = |w_j|^2 kappa0
* normalized RWA:   kappa_j = |w_j|^2 / (|w_L|^2 + |w_U|^2) kappa0
* dielectric-mirror Maxwell boundary conditions, evaluated at the branch
  frequency:        kappa(Omega) = kappa0 / (1 + (Omega/omega_ex)^2)
* metallic-mirror Maxwell boundary conditions (permittivity falling as
  omega^-2):        kappa(Omega) = kappa0 / (1 + (omega_ex/Omega)^2)

The naive and normalized RWA rates differ exactly by the factor
|w_L|^2 + |w_U|^2 >= 1, which exceeds one as soon as the antiresonant
weights y_j are nonzero; this factor is reported alongside the rates.
The two mirror profiles are complementary, kappa_diel + kappa_metal =
kappa0 at every frequency, and order the branches oppositely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError, ZeroPhotonWeight
from .hopfield import Branch, HopfieldDecomposition

__all__ = [
    "WeightingMode",
    "RateSet",
    "naive_rwa_rate",
    "normalized_rwa_rate",
    "mbc_dielectric_rate",
    "mbc_metallic_rate",
    "compute_rateset",
]


class WeightingMode(enum.Enum):
    """How mirror-boundary-condition rates map onto polariton branches.

    BARE evaluates the loss profile at the branch frequency as is;
    PHOTON_WEIGHTED additionally multiplies by the normalized photon
    fraction |w_j|^2 / (|w_L|^2 + |w_U|^2).
    """

    BARE = "bare"
    PHOTON_WEIGHTED = "photon-weighted"


@dataclass(frozen=True)
class RateSet:
    """All four dissipation rates for both branches at one coupling strength.

    Field order matches the CSV column order of the sweep output.  Rates
    are in absolute units (same unit as kappa0); ratio_naive_over_norm =
    |w_L|^2 + |w_U|^2 is the branch-independent naive/normalized quotient.
    """

    g: float
    omega_L: float
    omega_U: float
    kappa_naive_L: float
    kappa_naive_U: float
    kappa_norm_L: float
    kappa_norm_U: float
    kappa_mbc_diel_L: float
    kappa_mbc_diel_U: float
    kappa_mbc_metal_L: float
    kappa_mbc_metal_U: float
    ratio_naive_over_norm: float


def naive_rwa_rate(w_j: complex, kappa_m: float) -> float:
    """Branch rate |w_j|^2 kappa_m from the non-renormalized photon weight."""
    return abs(w_j) ** 2 * kappa_m


def normalized_rwa_rate(w_l: complex, w_u: complex, branch: Branch, kappa_m: float) -> float:
    """Branch rate with photon weights renormalized to sum to one.

    Raises ZeroPhotonWeight when both weights vanish.
    """
    total = abs(w_l) ** 2 + abs(w_u) ** 2
    if total <= 0.0:
        raise ZeroPhotonWeight("both branches carry zero photon weight")
    numerator = abs(w_l) ** 2 if branch is Branch.LOWER else abs(w_u) ** 2
    return numerator / total * kappa_m


def mbc_dielectric_rate(omega: float, omega_ex: float, kappa0: float) -> float:
    """Dielectric-mirror loss profile kappa0 / (1 + (omega/omega_ex)^2)."""
    return kappa0 / (1.0 + (omega / omega_ex) ** 2)


def mbc_metallic_rate(omega: float, omega_ex: float, kappa0: float) -> float:
    """Metallic-mirror loss profile kappa0 / (1 + (omega_ex/omega)^2).

    Raises DomainError for omega <= 0, where the profile is singular.
    """
    if omega <= 0.0:
        raise DomainError(f"metallic-mirror rate is singular at omega = {omega}")
    return kappa0 / (1.0 + (omega_ex / omega) ** 2)


def compute_rateset(
    dec: HopfieldDecomposition,
    weighting: WeightingMode = WeightingMode.PHOTON_WEIGHTED,
) -> RateSet:
    """Evaluate all four rate models for both branches of a decomposition."""
    p = dec.params
    lo, up = dec.lower, dec.upper
    total = abs(lo.w) ** 2 + abs(up.w) ** 2

    diel = [mbc_dielectric_rate(b.omega_pol, p.omega_ex, p.kappa0) for b in (lo, up)]
    metal = [mbc_metallic_rate(b.omega_pol, p.omega_ex, p.kappa0) for b in (lo, up)]
    if weighting is WeightingMode.PHOTON_WEIGHTED:
        fractions = [abs(lo.w) ** 2 / total, abs(up.w) ** 2 / total]
        diel = [r * f for r, f in zip(diel, fractions)]
        metal = [r * f for r, f in zip(metal, fractions)]

    return RateSet(
        g=float(p.g),
        omega_L=float(lo.omega_pol),
        omega_U=float(up.omega_pol),
        kappa_naive_L=float(naive_rwa_rate(lo.w, p.kappa0)),
        kappa_naive_U=float(naive_rwa_rate(up.w, p.kappa0)),
        kappa_norm_L=float(normalized_rwa_rate(lo.w, up.w, Branch.LOWER, p.kappa0)),
        kappa_norm_U=float(normalized_rwa_rate(lo.w, up.w, Branch.UPPER, p.kappa0)),
        kappa_mbc_diel_L=float(diel[0]),
        kappa_mbc_diel_U=float(diel[1]),
        kappa_mbc_metal_L=float(metal[0]),
        kappa_mbc_metal_U=float(metal[1]),
        ratio_naive_over_norm=float(total),
    )

"""Single-mode cavity-matter Hamiltonian and its Bogoliubov diagonalization.

One cavity mode (annihilation operator a, frequency omega_c) couples to one
bosonic matter mode (b, frequency omega_ex) with vacuum Rabi frequency g.
Two model variants are supported:

* ``Variant.NO_A2``: bilinear coupling g (a†b + b†a), plus the antiresonant
  pair g (a†b† + ab) when ``include_antiresonant`` is set.  With the
  antiresonant terms the model develops a zero-frequency mode at
  g = sqrt(omega_c * omega_ex) / 2 and is unstable beyond it.
* ``Variant.FULL_HOPFIELD``: additionally includes the diamagnetic term
  D (a + a†)^2 with D = g^2 / omega_ex, which keeps the spectrum real and
  positive for every coupling strength.

``include_antiresonant = False`` applies the rotating wave approximation to
the full Hamiltonian: every term that mixes annihilation and creation
sectors is dropped, i.e. the a†b† + ab coupling and, for FULL_HOPFIELD,
the a^2 + a†^2 part of the diamagnetic term (its a†a part survives as a
shift of the cavity frequency).

Conventions
-----------
Operator basis ordering is (a, b, a†, b†).  The dynamical matrix M is
defined by the commutator action [v_i, H] = sum_j M_ij v_j, so the
coefficient row (w, x, y, z) of a polariton annihilation operator

    p = w a + x b + y a† + z b†,   [p, H] = Omega p,

is an eigenvector of M^T with eigenvalue +Omega, normalized to the bosonic
commutator [p, p†] = |w|^2 + |x|^2 - |y|^2 - |z|^2 = 1.  Phases are fixed
by making w real and nonnegative; when the photon weight vanishes the
matter weight x is made real and nonnegative instead.  The bare photon
operator then expands over the two branches as

    a = sum_j (w_j* p_j - y_j p_j†),

whose commutator-preservation identity sum_j (|w_j|^2 - |y_j|^2) = 1 is
exposed through :func:`photon_completeness`.

Frequencies and rates are plain numbers; conventionally omega_ex = 1 sets
the unit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSpectrum, InvalidParams, UnstableSystem

__all__ = [
    "Variant",
    "Branch",
    "ModelParams",
    "BogoliubovMatrix",
    "PolaritonBranch",
    "HopfieldDecomposition",
    "build_hopfield_matrix",
    "diagonalize",
    "photon_completeness",
    "matter_completeness",
    "quadratic_form",
    "bogoliubov_norm",
    "EIGENVALUE_REALITY_TOL",
    "DEGENERACY_TOL",
]

BASIS_LABELS = ("a", "b", "a_dag", "b_dag")

# Bosonic metric: [v_i, v_j^dag] = SYMPLECTIC_SIGNS[i] delta_ij in the
# (a, b, a_dag, b_dag) ordering.
SYMPLECTIC_SIGNS = np.array([1.0, 1.0, -1.0, -1.0])

EIGENVALUE_REALITY_TOL = 1e-9
DEGENERACY_TOL = 1e-12
_ZERO_WEIGHT_TOL = 1e-12


class Variant(enum.Enum):
    """Hamiltonian variant selector."""

    NO_A2 = "no-a2"
    FULL_HOPFIELD = "full-hopfield"


class Branch(enum.Enum):
    """Polariton branch label, ordered by frequency."""

    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the coupled cavity-matter system.

    omega_c, omega_ex and g share one frequency unit; kappa0 is the bare
    dissipation rate of the cavity mode in the same unit.
    """

    omega_c: float
    omega_ex: float
    g: float
    variant: Variant = Variant.FULL_HOPFIELD
    include_antiresonant: bool = True
    kappa0: float = 0.01

    def __post_init__(self):
        if not self.omega_c > 0:
            raise InvalidParams(f"omega_c must be positive, got {self.omega_c}")
        if not self.omega_ex > 0:
            raise InvalidParams(f"omega_ex must be positive, got {self.omega_ex}")
        if self.g < 0:
            raise InvalidParams(f"g must be nonnegative, got {self.g}")
        if self.kappa0 < 0:
            raise InvalidParams(f"kappa0 must be nonnegative, got {self.kappa0}")
        if self.variant is Variant.NO_A2 and self.include_antiresonant:
            bound = np.sqrt(self.omega_c * self.omega_ex) / 2.0
            if self.g >= bound:
                raise InvalidParams(
                    "unstable parameters: the antiresonantly coupled two-oscillator "
                    f"model requires g < sqrt(omega_c*omega_ex)/2 = {bound:.6g}, "
                    f"got g = {self.g:.6g}"
                )


@dataclass(frozen=True, eq=False)
class BogoliubovMatrix:
    """4x4 dynamical matrix acting on the operator vector (a, b, a†, b†).

    Satisfies m = J h with J = diag(+1, +1, -1, -1) and h symmetric
    positive semidefinite, so eigenvalues come in (+Omega, -Omega) pairs.
    """

    m: np.ndarray
    basis_labels: tuple = field(default=BASIS_LABELS)


@dataclass(frozen=True)
class PolaritonBranch:
    """One polariton eigenmode p = w a + x b + y a† + z b†.

    Invariants (guaranteed by :func:`diagonalize`, not enforced here so
    that deliberately truncated coefficient sets can be represented):
    omega_pol > 0 and |w|^2 + |x|^2 - |y|^2 - |z|^2 = 1.
    """

    branch: Branch
    omega_pol: float
    w: complex
    x: complex
    y: complex
    z: complex

    def coefficients(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=complex)


@dataclass(frozen=True)
class HopfieldDecomposition:
    """Both polariton branches of one parameter set, lower.omega_pol <= upper.omega_pol."""

    params: ModelParams
    lower: PolaritonBranch
    upper: PolaritonBranch

    @property
    def branches(self) -> tuple[PolaritonBranch, PolaritonBranch]:
        return (self.lower, self.upper)


def build_hopfield_matrix(params: ModelParams) -> BogoliubovMatrix:
    """Assemble the dynamical matrix of the selected Hamiltonian variant.

    Raises InvalidParams for parameter sets whose quadratic form is not
    positive semidefinite (no stable bosonic spectrum exists).
    """
    wc, wex, g = params.omega_c, params.omega_ex, params.g
    if params.variant is Variant.NO_A2:
        d = 0.0
        if params.include_antiresonant:
            bound = np.sqrt(wc * wex) / 2.0
            if g >= bound:
                raise InvalidParams(
                    f"unstable parameters: g = {g:.6g} >= sqrt(omega_c*omega_ex)/2 = {bound:.6g}"
                )
        elif g * g >= wc * wex:
            # RWA block loses positive definiteness at g^2 = omega_c*omega_ex.
            raise InvalidParams(
                f"unstable parameters: g = {g:.6g} >= sqrt(omega_c*omega_ex) = "
                f"{np.sqrt(wc * wex):.6g} makes the coupled-oscillator RWA "
                "Hamiltonian unbounded below"
            )
    else:
        d = g * g / wex

    wc_eff = wc + 2.0 * d
    g_anti = g if params.include_antiresonant else 0.0
    d_anti = 2.0 * d if params.include_antiresonant else 0.0

    m = np.array(
        [
            [wc_eff, g, d_anti, g_anti],
            [g, wex, g_anti, 0.0],
            [-d_anti, -g_anti, -wc_eff, -g],
            [-g_anti, 0.0, -g, -wex],
        ]
    )
    return BogoliubovMatrix(m=m)


def quadratic_form(matrix: BogoliubovMatrix) -> np.ndarray:
    """Return the symmetric quadratic form h with m = J h."""
    return SYMPLECTIC_SIGNS[:, None] * matrix.m


def bogoliubov_norm(coeffs: np.ndarray) -> float:
    """Bosonic commutator [p, p†] of the operator with coefficient row coeffs."""
    return float(np.sum(SYMPLECTIC_SIGNS * np.abs(np.asarray(coeffs)) ** 2))


def _fix_phase(coeffs: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the photon weight (or, failing that, the
    matter weight) is real and nonnegative."""
    ref = coeffs[0] if abs(coeffs[0]) > _ZERO_WEIGHT_TOL else coeffs[1]
    if abs(ref) == 0.0:
        return coeffs
    return coeffs * (np.conj(ref) / abs(ref))


def _make_branch(label: Branch, omega: float, coeffs: np.ndarray) -> PolaritonBranch:
    c = _fix_phase(np.asarray(coeffs, dtype=complex))
    return PolaritonBranch(
        branch=label,
        omega_pol=float(omega),
        w=complex(c[0]),
        x=complex(c[1]),
        y=complex(c[2]),
        z=complex(c[3]),
    )


def _diagonalize_sector_preserving(m: np.ndarray, params: ModelParams) -> HopfieldDecomposition:
    # Annihilation and creation sectors decouple; the 2x2 annihilation block
    # is real symmetric, so its orthonormal eigenbasis already satisfies the
    # Bogoliubov norm with y = z = 0 exactly.
    block = m[:2, :2]
    evals, evecs = np.linalg.eigh(block)
    if evals[0] <= _ZERO_WEIGHT_TOL:
        raise UnstableSystem(
            f"nonpositive eigenfrequency {evals[0]:.6g} in the sector-preserving Hamiltonian"
        )
    if evals[1] - evals[0] < DEGENERACY_TOL:
        raise DegenerateSpectrum(
            f"polariton branches coincide at Omega = {evals[0]:.12g}"
        )
    lower = _make_branch(Branch.LOWER, evals[0], [evecs[0, 0], evecs[1, 0], 0.0, 0.0])
    upper = _make_branch(Branch.UPPER, evals[1], [evecs[0, 1], evecs[1, 1], 0.0, 0.0])
    return HopfieldDecomposition(params=params, lower=lower, upper=upper)


def diagonalize(matrix: BogoliubovMatrix, params: ModelParams) -> HopfieldDecomposition:
    """Solve the Bogoliubov eigenproblem and return both polariton branches.

    Raises UnstableSystem when eigenvalues are complex beyond
    EIGENVALUE_REALITY_TOL, when positive-norm annihilation modes cannot be
    found, and DegenerateSpectrum when the branch frequencies coincide
    within DEGENERACY_TOL.
    """
    m = matrix.m
    if not np.any(m[:2, 2:]) and not np.any(m[2:, :2]):
        return _diagonalize_sector_preserving(m, params)

    evals, evecs = np.linalg.eig(m.T)
    if np.iscomplexobj(evals):
        worst = float(np.max(np.abs(evals.imag)))
        if worst > EIGENVALUE_REALITY_TOL:
            raise UnstableSystem(
                f"complex eigenvalue (|Im| = {worst:.3g}); the system has no stable "
                "normal-mode expansion"
            )
        evals = evals.real
        evecs = evecs.real if np.isrealobj(m) else evecs

    pos = np.nonzero(evals > _ZERO_WEIGHT_TOL)[0]
    if len(pos) != 2:
        raise UnstableSystem(
            f"expected two positive eigenfrequencies, found {len(pos)} "
            f"(eigenvalues {np.sort(evals)})"
        )
    pos = pos[np.argsort(evals[pos])]
    omega_lo, omega_hi = evals[pos[0]], evals[pos[1]]
    if omega_hi - omega_lo < DEGENERACY_TOL:
        raise DegenerateSpectrum(
            f"polariton branches coincide at Omega = {omega_lo:.12g}"
        )

    branches = []
    for label, idx in ((Branch.LOWER, pos[0]), (Branch.UPPER, pos[1])):
        c = np.asarray(evecs[:, idx], dtype=complex)
        norm = bogoliubov_norm(c)
        if norm <= _ZERO_WEIGHT_TOL:
            raise UnstableSystem(
                "positive-frequency mode with nonpositive Bogoliubov norm "
                f"({norm:.3g}); the quadratic form is indefinite"
            )
        branches.append(_make_branch(label, evals[idx], c / np.sqrt(norm)))
    return HopfieldDecomposition(params=params, lower=branches[0], upper=branches[1])


def photon_completeness(dec: HopfieldDecomposition) -> float:
    """Residual |sum_j (|w_j|^2 - |y_j|^2) - 1| of the photon-operator expansion."""
    total = sum(abs(b.w) ** 2 - abs(b.y) ** 2 for b in dec.branches)
    return abs(total - 1.0)


def matter_completeness(dec: HopfieldDecomposition) -> float:
    """Residual |sum_j (|x_j|^2 - |z_j|^2) - 1| of the matter-operator expansion."""
    total = sum(abs(b.x) ** 2 - abs(b.z) ** 2 for b in dec.branches)
    return abs(total - 1.0)

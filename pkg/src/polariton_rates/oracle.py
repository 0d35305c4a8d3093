"""Independent verification path for the Bogoliubov diagonalization.

Everything here avoids the main path's LAPACK eigensolver on purpose:
frequencies come from the explicit quartic characteristic polynomial
(Faddeev-LeVerrier recursion) solved by sign-change bracketing, bisection
and Newton polishing; coefficient rows come from Gauss-Jordan null-space
extraction at each root.  The results feed residual audits and the
committed golden records.

Golden-record format: plain text, one parameter set per block, a fixed
field order, 15 significant digits, blocks separated by blank lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import Error, NoConvergence, UnstableSystem
from .hopfield import (
    SYMPLECTIC_SIGNS,
    BogoliubovMatrix,
    Branch,
    HopfieldDecomposition,
    ModelParams,
    PolaritonBranch,
    Variant,
    build_hopfield_matrix,
)

__all__ = [
    "OracleReport",
    "characteristic_polynomial",
    "oracle_diagonalize",
    "oracle_decomposition",
    "audit",
    "canonical_parameter_sets",
    "golden_text",
    "write_golden",
]

_ROOT_RESIDUAL_TOL = 1e-12
_SCAN_POINTS = 1 << 16
_PIVOT_TOL = 1e-9


@dataclass(frozen=True)
class OracleReport:
    """Residuals recomputed from scratch for one decomposition.

    eig_residual is max |det(M - Omega I)| over the reported +-Omega,
    normalized by (1 + root bound)^4; pairing_residual is the worst
    |Omega_k + Omega_k'| over the matched (+, -) eigenvalue pairs;
    coeff_max_abs_diff compares coefficient magnitudes against an
    independent re-derivation.  Failures surface as infinite residuals,
    never as exceptions.
    """

    params: ModelParams
    eig_residual: float
    pairing_residual: float
    completeness_residual_photon: float
    completeness_residual_matter: float
    coeff_max_abs_diff: float


def characteristic_polynomial(m: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial of a 4x4 matrix via Faddeev-LeVerrier.

    Returns the five coefficients [1, c3, c2, c1, c0] of
    lambda^4 + c3 lambda^3 + c2 lambda^2 + c1 lambda + c0 = det(lambda I - m).
    """
    m = np.asarray(m, dtype=float)
    coeffs = np.empty(5)
    coeffs[0] = 1.0
    mk = m.copy()
    for k in range(1, 5):
        ck = -np.trace(mk) / k
        coeffs[k] = ck
        if k < 4:
            mk = m @ (mk + ck * np.eye(4))
    return coeffs


def _root_bound(coeffs: np.ndarray) -> float:
    # Cauchy bound: every root of the monic quartic lies in |x| <= 1 + max|c_i|.
    return 1.0 + float(np.max(np.abs(coeffs[1:])))


def _bisect(coeffs, lo, hi, f_lo):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = np.polyval(coeffs, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _polish(coeffs, dcoeffs, x):
    for _ in range(4):
        d = np.polyval(dcoeffs, x)
        if d == 0.0:
            break
        step = np.polyval(coeffs, x) / d
        x -= step
        if abs(step) <= 1e-17 * max(1.0, abs(x)):
            break
    return x


def _real_roots(coeffs: np.ndarray) -> np.ndarray:
    """All four real roots of the quartic, isolated by grid scan.

    Raises UnstableSystem when four simple real roots cannot be isolated
    (complex or degenerate spectrum) and NoConvergence when a bracketed
    root fails the residual tolerance.
    """
    bound = _root_bound(coeffs)
    dcoeffs = np.polyder(coeffs)
    scale = max(1.0, bound) ** 4

    for refine in (1, 16):
        xs = np.linspace(-bound, bound, _SCAN_POINTS * refine + 1)
        vals = np.polyval(coeffs, xs)
        roots = list(xs[vals == 0.0])
        signs = np.sign(vals)
        signs[signs == 0.0] = 1.0
        brackets = np.nonzero(signs[:-1] * signs[1:] < 0.0)[0]
        for i in brackets:
            r = _bisect(coeffs, xs[i], xs[i + 1], vals[i])
            roots.append(_polish(coeffs, dcoeffs, r))
        if len(roots) == 4:
            break
    if len(roots) != 4:
        raise UnstableSystem(
            f"isolated {len(roots)} real characteristic roots instead of 4; "
            "spectrum is complex or degenerate"
        )

    roots = np.sort(np.array(roots))
    worst = float(np.max(np.abs(np.polyval(coeffs, roots)))) / scale
    if worst > _ROOT_RESIDUAL_TOL:
        raise NoConvergence(
            f"root residual {worst:.3g} exceeds {_ROOT_RESIDUAL_TOL:g}"
        )
    return roots


def _null_vector(a: np.ndarray) -> np.ndarray:
    """One-dimensional null space of a 4x4 matrix by Gauss-Jordan elimination
    with partial pivoting.  Raises NoConvergence unless exactly one free
    column remains."""
    u = np.array(a, dtype=float)
    tol = _PIVOT_TOL * max(1.0, float(np.max(np.abs(u))))
    n = 4
    pivot_cols = []
    row = 0
    for col in range(n):
        p = row + int(np.argmax(np.abs(u[row:, col])))
        if abs(u[p, col]) <= tol:
            continue
        u[[row, p]] = u[[p, row]]
        u[row] /= u[row, col]
        for r in range(n):
            if r != row:
                u[r] -= u[r, col] * u[row]
        pivot_cols.append(col)
        row += 1
        if row == n:
            break
    free = [c for c in range(n) if c not in pivot_cols]
    if len(free) != 1:
        raise NoConvergence(
            f"null space of dimension {len(free)} at a characteristic root "
            "(expected 1; root inaccurate or spectrum degenerate)"
        )
    x = np.zeros(n)
    x[free[0]] = 1.0
    for r, c in enumerate(pivot_cols):
        x[c] = -u[r, free[0]]
    return x


def _normalize_mode(coeffs: np.ndarray, positive_frequency: bool) -> np.ndarray:
    norm = float(np.sum(SYMPLECTIC_SIGNS * coeffs**2))
    if positive_frequency:
        if norm <= 0.0:
            raise UnstableSystem(
                "positive-frequency oracle mode with nonpositive Bogoliubov norm"
            )
        c = coeffs / np.sqrt(norm)
        ref = c[0] if abs(c[0]) > 1e-12 else c[1]
    else:
        if norm >= 0.0:
            raise UnstableSystem(
                "negative-frequency oracle mode with nonnegative Bogoliubov norm"
            )
        c = coeffs / np.sqrt(-norm)
        ref = c[2] if abs(c[2]) > 1e-12 else c[3]
    if ref < 0.0:
        c = -c
    return c


def oracle_diagonalize(matrix: BogoliubovMatrix) -> tuple[list[float], np.ndarray]:
    """Frequencies and coefficient rows of all four eigenmodes, derived
    without the main path's eigensolver.

    Returns the four frequencies in ascending order and a 4x4 complex array
    whose k-th row holds the (w, x, y, z) coefficients of the k-th mode,
    Bogoliubov-normalized with the same phase convention as the main path
    (annihilation modes: photon weight real >= 0; creation modes: the
    conjugate convention on the antiresonant weight).
    """
    m = np.asarray(matrix.m, dtype=float)
    coeffs = characteristic_polynomial(m)
    roots = _real_roots(coeffs)

    modes = np.zeros((4, 4), dtype=complex)
    for k, omega in enumerate(roots):
        # Coefficient rows are eigenvectors of M^T.
        nv = _null_vector(m.T - omega * np.eye(4))
        modes[k] = _normalize_mode(nv, positive_frequency=omega > 0.0)
    return [float(r) for r in roots], modes


def oracle_decomposition(params: ModelParams) -> HopfieldDecomposition:
    """Full decomposition of one parameter set built purely from the oracle."""
    roots, modes = oracle_diagonalize(build_hopfield_matrix(params))
    branches = []
    for label, k in ((Branch.LOWER, 2), (Branch.UPPER, 3)):
        c = modes[k]
        branches.append(
            PolaritonBranch(
                branch=label,
                omega_pol=roots[k],
                w=complex(c[0]),
                x=complex(c[1]),
                y=complex(c[2]),
                z=complex(c[3]),
            )
        )
    return HopfieldDecomposition(params=params, lower=branches[0], upper=branches[1])


def audit(dec: HopfieldDecomposition) -> OracleReport:
    """Recompute every invariant of a decomposition from scratch.

    Never raises: when the independent path itself fails (for instance on
    hand-built inconsistent input), the affected residuals are infinite.
    """
    photon = abs(
        sum(abs(b.w) ** 2 - abs(b.y) ** 2 for b in dec.branches) - 1.0
    )
    matter = abs(
        sum(abs(b.x) ** 2 - abs(b.z) ** 2 for b in dec.branches) - 1.0
    )

    eig_res = pairing_res = coeff_diff = np.inf
    try:
        m = build_hopfield_matrix(dec.params).m
        coeffs = characteristic_polynomial(m)
        scale = max(1.0, _root_bound(coeffs)) ** 4
        reported = [
            -dec.upper.omega_pol,
            -dec.lower.omega_pol,
            dec.lower.omega_pol,
            dec.upper.omega_pol,
        ]
        eig_res = float(np.max(np.abs(np.polyval(coeffs, reported)))) / scale

        roots, modes = oracle_diagonalize(BogoliubovMatrix(m=m))
        pairing_res = max(abs(roots[0] + roots[3]), abs(roots[1] + roots[2]))
        diffs = []
        for k, branch in ((2, dec.lower), (3, dec.upper)):
            diffs.append(np.abs(np.abs(modes[k]) - np.abs(branch.coefficients())))
        coeff_diff = float(np.max(diffs))
    except Error:
        pass

    return OracleReport(
        params=dec.params,
        eig_residual=float(eig_res),
        pairing_residual=float(pairing_res),
        completeness_residual_photon=float(photon),
        completeness_residual_matter=float(matter),
        coeff_max_abs_diff=float(coeff_diff),
    )


# Canonical resonant parameter sets recorded in the golden file.  Points
# outside a variant's stability domain are left out: at resonance the
# antiresonantly coupled NO_A2 model turns unstable at g = 0.5 and its RWA
# form loses positivity at g = 1.
_CANONICAL_G = (0.1, 0.25, 0.5, 0.75, 1.0)


def canonical_parameter_sets() -> list[ModelParams]:
    sets = []
    for variant, anti in (
        (Variant.FULL_HOPFIELD, True),
        (Variant.NO_A2, False),
        (Variant.NO_A2, True),
    ):
        for g in _CANONICAL_G:
            try:
                params = ModelParams(
                    omega_c=1.0,
                    omega_ex=1.0,
                    g=g,
                    variant=variant,
                    include_antiresonant=anti,
                )
                build_hopfield_matrix(params)
            except Error:
                continue
            sets.append(params)
    return sets


def _format_params(p: ModelParams) -> str:
    anti = "on" if p.include_antiresonant else "off"
    return (
        f"set: variant={p.variant.value} antiresonant={anti} "
        f"omega_c={p.omega_c:g} omega_ex={p.omega_ex:g} g={p.g:g}"
    )


def golden_text() -> str:
    """Render the canonical oracle decompositions in the golden-record format."""
    lines = []
    for params in canonical_parameter_sets():
        dec = oracle_decomposition(params)
        lines.append(_format_params(params))
        lines.append(f"omega_L= {dec.lower.omega_pol:.14e}")
        lines.append(f"omega_U= {dec.upper.omega_pol:.14e}")
        for tag, branch in (("L", dec.lower), ("U", dec.upper)):
            for name, value in (
                ("w", branch.w),
                ("x", branch.x),
                ("y", branch.y),
                ("z", branch.z),
            ):
                lines.append(f"{name}_{tag}_re= {value.real:.14e}")
                lines.append(f"{name}_{tag}_im= {value.imag:.14e}")
        lines.append("")
    return "\n".join(lines)


def write_golden(path) -> Path:
    """Write the canonical golden records to path (used to regenerate the
    committed file after an intentional change)."""
    p = Path(path)
    p.write_text(golden_text(), encoding="utf-8")
    return p

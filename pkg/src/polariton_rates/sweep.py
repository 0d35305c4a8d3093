"""Coupling-strength sweeps and their CSV/JSON serialization.

A sweep evaluates the four rate models on a uniform g grid.  Grid points
whose Hamiltonian is unstable or degenerate are skipped and recorded as
warnings rather than aborting the run.  Emitted rates are expressed in
units of kappa0; frequencies and g stay in the frequency unit of the
parameters.  Output is byte-stable for identical configurations: floats
are rendered with repr (shortest round-trip form) and no timestamps or
environment details are embedded.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .errors import (
    DegenerateSpectrum,
    InvalidParams,
    NoStablePoints,
    UnstableSystem,
    WriteError,
)
from .hopfield import ModelParams, build_hopfield_matrix, diagonalize
from .rates import RateSet, WeightingMode, compute_rateset

__all__ = [
    "Mirror",
    "OutputFormat",
    "SweepConfig",
    "SweepSummary",
    "SkippedPoint",
    "SweepResult",
    "evaluate_grid",
    "run_sweep",
    "summarize",
    "rows_in_output_units",
    "render_csv",
    "render_json",
    "emit",
]

CSV_COLUMNS = (
    "g",
    "omega_L",
    "omega_U",
    "kappa_naive_L",
    "kappa_naive_U",
    "kappa_norm_L",
    "kappa_norm_U",
    "kappa_mbc_diel_L",
    "kappa_mbc_diel_U",
    "kappa_mbc_metal_L",
    "kappa_mbc_metal_U",
    "ratio_naive_over_norm",
)

# Fields divided by kappa0 on output.
_RATE_FIELDS = tuple(c for c in CSV_COLUMNS if c.startswith("kappa_"))


class Mirror(enum.Enum):
    """Which mirror loss profile the summary compares against."""

    DIELECTRIC = "dielectric"
    METALLIC = "metallic"
    BOTH = "both"


class OutputFormat(enum.Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class SweepConfig:
    """Validated sweep request; params_base.g is ignored."""

    params_base: ModelParams
    g_min: float = 0.0
    g_max: float = 1.0
    steps: int = 201
    weighting: WeightingMode = WeightingMode.PHOTON_WEIGHTED
    mirror: Mirror = Mirror.BOTH
    output_format: OutputFormat = OutputFormat.CSV
    output_path: Path = Path("sweep.csv")

    def __post_init__(self):
        if not 0.0 <= self.g_min < self.g_max:
            raise InvalidParams(
                f"need 0 <= g_min < g_max, got g_min={self.g_min}, g_max={self.g_max}"
            )
        if self.steps < 2:
            raise InvalidParams(f"steps must be >= 2, got {self.steps}")

    def g_grid(self) -> np.ndarray:
        return np.linspace(self.g_min, self.g_max, self.steps)


@dataclass(frozen=True)
class SkippedPoint:
    """Grid point dropped from the sweep, with the reason."""

    g: float
    reason: str


@dataclass(frozen=True)
class SweepSummary:
    max_ratio_naive_over_norm: float
    g_at_max: float
    max_rel_dev_norm_vs_metal: float
    ordering_agreement_fraction: float

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class SweepResult:
    rows: list[RateSet]
    skipped: list[SkippedPoint]
    metadata: dict
    summary: SweepSummary


def evaluate_grid(
    params_base: ModelParams,
    g_values,
    weighting: WeightingMode = WeightingMode.PHOTON_WEIGHTED,
) -> tuple[list[RateSet], list[SkippedPoint]]:
    """Rate sets for every stable point of an explicit g grid.

    Unstable parameter sets and degenerate spectra become SkippedPoint
    entries instead of exceptions.
    """
    rows: list[RateSet] = []
    skipped: list[SkippedPoint] = []
    for g in g_values:
        try:
            params = dataclasses.replace(params_base, g=float(g))
            dec = diagonalize(build_hopfield_matrix(params), params)
        except (InvalidParams, UnstableSystem) as exc:
            skipped.append(SkippedPoint(g=float(g), reason=f"unstable: {exc}"))
            continue
        except DegenerateSpectrum as exc:
            skipped.append(SkippedPoint(g=float(g), reason=f"degenerate: {exc}"))
            continue
        rows.append(compute_rateset(dec, weighting))
    return rows, skipped


def summarize(rows: list[RateSet], mirror: Mirror, kappa0: float) -> SweepSummary:
    """Comparison metrics over the valid rows of a sweep.

    ordering_agreement_fraction counts rows where the normalized RWA and
    the selected mirror model agree on which branch is lossier (metallic is
    used when mirror is BOTH); agreement means (kappa_U >= kappa_L) holds
    for both or for neither.
    """
    ratios = [r.ratio_naive_over_norm for r in rows]
    i_max = int(np.argmax(ratios))
    scale = kappa0 if kappa0 > 0 else 1.0

    max_dev = max(
        max(
            abs(r.kappa_norm_L - r.kappa_mbc_metal_L),
            abs(r.kappa_norm_U - r.kappa_mbc_metal_U),
        )
        for r in rows
    ) / scale

    use_metal = mirror in (Mirror.METALLIC, Mirror.BOTH)
    agree = 0
    for r in rows:
        if use_metal:
            mbc_up = r.kappa_mbc_metal_U >= r.kappa_mbc_metal_L
        else:
            mbc_up = r.kappa_mbc_diel_U >= r.kappa_mbc_diel_L
        if (r.kappa_norm_U >= r.kappa_norm_L) == mbc_up:
            agree += 1

    return SweepSummary(
        max_ratio_naive_over_norm=float(ratios[i_max]),
        g_at_max=float(rows[i_max].g),
        max_rel_dev_norm_vs_metal=float(max_dev),
        ordering_agreement_fraction=agree / len(rows),
    )


def _config_echo(config: SweepConfig) -> dict:
    p = config.params_base
    return {
        "omega_c": p.omega_c,
        "omega_ex": p.omega_ex,
        "kappa0": p.kappa0,
        "variant": p.variant.value,
        "antiresonant": p.include_antiresonant,
        "g_min": config.g_min,
        "g_max": config.g_max,
        "steps": config.steps,
        "weighting": config.weighting.value,
        "mirror": config.mirror.value,
    }


def run_sweep(config: SweepConfig) -> SweepResult:
    """Evaluate the configured g grid and attach metadata and summary.

    Raises NoStablePoints when every grid point was rejected.
    """
    rows, skipped = evaluate_grid(
        config.params_base, config.g_grid(), config.weighting
    )
    if not rows:
        raise NoStablePoints(
            f"no stable grid point in g range [{config.g_min}, {config.g_max}] "
            f"({len(skipped)} points rejected)"
        )
    summary = summarize(rows, config.mirror, config.params_base.kappa0)
    metadata = {
        "config": _config_echo(config),
        "version": __version__,
        "variant": config.params_base.variant.value,
    }
    return SweepResult(rows=rows, skipped=skipped, metadata=metadata, summary=summary)


def rows_in_output_units(result: SweepResult) -> list[dict]:
    """Rows as emitted: rate fields divided by kappa0, everything else as is.

    For kappa0 = 0 the rates (all zero) are passed through unscaled.
    """
    kappa0 = result.metadata["config"]["kappa0"]
    out = []
    for row in result.rows:
        d = {}
        for name in CSV_COLUMNS:
            value = getattr(row, name)
            if name in _RATE_FIELDS and kappa0 > 0:
                value = value / kappa0
            d[name] = float(value)
        out.append(d)
    return out


def _merged_lines(result: SweepResult) -> list[tuple[float, str]]:
    lines = [
        (row["g"], ",".join(repr(row[c]) for c in CSV_COLUMNS))
        for row in rows_in_output_units(result)
    ]
    lines += [
        (s.g, f"# skipped g={s.g!r}: {s.reason}") for s in result.skipped
    ]
    lines.sort(key=lambda item: item[0])
    return lines


def render_csv(result: SweepResult) -> str:
    """CSV text: mandatory header, one line per grid point in ascending g,
    skipped points as '#' comment lines."""
    body = [",".join(CSV_COLUMNS)]
    body += [text for _, text in _merged_lines(result)]
    return "\n".join(body) + "\n"


def render_json(result: SweepResult) -> str:
    payload = {
        "metadata": result.metadata,
        "summary": result.summary.as_dict(),
        "rows": rows_in_output_units(result),
        "skipped": [{"g": s.g, "reason": s.reason} for s in result.skipped],
    }
    return json.dumps(payload, indent=2) + "\n"


def emit(result: SweepResult, config: SweepConfig) -> Path:
    """Write the sweep to config.output_path in the configured format."""
    text = (
        render_csv(result)
        if config.output_format is OutputFormat.CSV
        else render_json(result)
    )
    path = Path(config.output_path)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise WriteError(f"cannot write {path}: {exc}") from exc
    return path

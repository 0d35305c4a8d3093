"""Command-line front end for coupling-strength sweeps.

Configuration comes from defaults, an optional key=value config file
(UTF-8, one entry per line, '#' starts a comment) and command-line flags,
in increasing order of precedence.  Config-file keys equal the flag names
without the leading dashes.  Exit codes: 0 success, 1 I/O or numerical
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import Error, NoStablePoints, UsageError, WriteError
from .hopfield import ModelParams, Variant
from .rates import WeightingMode
from .sweep import Mirror, OutputFormat, SweepConfig, emit, run_sweep

__all__ = ["parse_config", "main", "entry_point"]

_VARIANTS = {v.value: v for v in Variant}
_WEIGHTINGS = {w.value: w for w in WeightingMode}
_MIRRORS = {m.value: m for m in Mirror}
_FORMATS = {f.value: f for f in OutputFormat}
_SWITCH = {"on": True, "off": False}


def _choice(table, label):
    def convert(text):
        try:
            return table[text]
        except KeyError:
            raise ValueError(
                f"{label} must be one of {', '.join(sorted(table))}, got {text!r}"
            ) from None

    return convert


# key -> (converter, help); keys double as config-file keys.
_OPTION_SPECS = {
    "omega-c": (float, "cavity frequency (default 1.0)"),
    "omega-ex": (float, "matter frequency, the reference scale (default 1.0)"),
    "g-min": (float, "lower end of the vacuum Rabi frequency grid (default 0)"),
    "g-max": (float, "upper end of the grid (default 1)"),
    "steps": (int, "number of grid points, >= 2 (default 201)"),
    "kappa0": (float, "bare cavity dissipation rate (default 0.01)"),
    "variant": (_choice(_VARIANTS, "variant"), "no-a2 | full-hopfield (default full-hopfield)"),
    "antiresonant": (_choice(_SWITCH, "antiresonant"), "on | off (default on)"),
    "weighting": (
        _choice(_WEIGHTINGS, "weighting"),
        "bare | photon-weighted (default photon-weighted)",
    ),
    "mirror": (_choice(_MIRRORS, "mirror"), "dielectric | metallic | both (default both)"),
    "format": (_choice(_FORMATS, "format"), "csv | json (default csv)"),
    "out": (Path, "output file path (default sweep.csv / sweep.json)"),
}

_DEFAULTS = {
    "omega-c": 1.0,
    "omega-ex": 1.0,
    "g-min": 0.0,
    "g-max": 1.0,
    "steps": 201,
    "kappa0": 0.01,
    "variant": Variant.FULL_HOPFIELD,
    "antiresonant": True,
    "weighting": WeightingMode.PHOTON_WEIGHTED,
    "mirror": Mirror.BOTH,
    "format": OutputFormat.CSV,
    "out": None,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="polariton-sweep",
        description="Sweep the vacuum Rabi frequency and tabulate polariton "
        "dissipation rates under four loss models.",
    )
    for key, (convert, help_text) in _OPTION_SPECS.items():
        parser.add_argument(
            f"--{key}", dest=key.replace("-", "_"), type=convert,
            default=None, help=help_text,
        )
    parser.add_argument(
        "--config", type=Path, default=None,
        help="key=value configuration file; flags override file entries",
    )
    return parser


def _parse_config_text(text: str) -> dict:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _OPTION_SPECS:
            raise UsageError(f"config line {lineno}: unknown key {key!r}")
        convert = _OPTION_SPECS[key][0]
        try:
            values[key] = convert(value)
        except ValueError as exc:
            raise UsageError(f"config key {key!r}: {exc}") from None
    return values


def parse_config(argv=None, config_text: str | None = None) -> SweepConfig:
    """Resolve flags, optional config file and defaults into a SweepConfig.

    config_text stands in for a config file in tests; a --config flag in
    argv takes its place.  Raises UsageError on any bad flag, key or value.
    """
    ns = _build_parser().parse_args(argv)

    if ns.config is not None:
        try:
            config_text = ns.config.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"--config: cannot read {ns.config}: {exc}") from exc

    merged = dict(_DEFAULTS)
    if config_text is not None:
        merged.update(_parse_config_text(config_text))
    for key in _OPTION_SPECS:
        flag_value = getattr(ns, key.replace("-", "_"))
        if flag_value is not None:
            merged[key] = flag_value

    if merged["steps"] < 2:
        raise UsageError(f"--steps must be >= 2, got {merged['steps']}")
    if not 0.0 <= merged["g-min"] < merged["g-max"]:
        raise UsageError(
            f"--g-min/--g-max must satisfy 0 <= g_min < g_max, got "
            f"{merged['g-min']} and {merged['g-max']}"
        )

    try:
        params = ModelParams(
            omega_c=merged["omega-c"],
            omega_ex=merged["omega-ex"],
            g=0.0,
            variant=merged["variant"],
            include_antiresonant=merged["antiresonant"],
            kappa0=merged["kappa0"],
        )
    except Error as exc:
        raise UsageError(str(exc)) from exc

    out = merged["out"]
    if out is None:
        out = Path(f"sweep.{merged['format'].value}")

    try:
        return SweepConfig(
            params_base=params,
            g_min=merged["g-min"],
            g_max=merged["g-max"],
            steps=merged["steps"],
            weighting=merged["weighting"],
            mirror=merged["mirror"],
            output_format=merged["format"],
            output_path=out,
        )
    except Error as exc:
        raise UsageError(str(exc)) from exc


def main(argv=None) -> int:
    """Run a sweep; returns the process exit code instead of raising."""
    try:
        config = parse_config(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        result = run_sweep(config)
        path = emit(result, config)
    except (NoStablePoints, WriteError, Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    s = result.summary
    print(f"wrote {path} ({len(result.rows)} rows, {len(result.skipped)} skipped)")
    print(
        f"max ratio naive/normalized = {s.max_ratio_naive_over_norm!r} "
        f"at g = {s.g_at_max!r}"
    )
    print(f"max |normalized - metallic| / kappa0 = {s.max_rel_dev_norm_vs_metal!r}")
    print(f"branch-ordering agreement fraction = {s.ordering_agreement_fraction!r}")
    return 0


def entry_point():
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()

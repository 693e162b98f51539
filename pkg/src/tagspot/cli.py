"""Command-line front end: reproducible experiment runs and IQ file I/O.

Subcommands: modulate, impair, spot, curves, leakage, sweep, range,
overhead, codebook-verify. Every command accepts --config pointing at a
JSON document (stamped with config_version) whose keys are the command's
parameter names; explicit flags override document fields. Stochastic
commands demand an explicit --seed, and identical config plus seed
produces byte-identical primary output: tables carry no timestamps and
every float is formatted with a fixed precision.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .analysis import (
    AnalysisModel,
    FADING_ANALYSIS_MODELS,
    build_roc,
    expected_offset_leak,
    leakage_block,
    leakage_single,
    overhead,
    pm_mc,
    range_gain,
    sweep_active_carriers,
    sweep_argmin,
)
from .carriers import CarrierLayout, REFERENCE_LAYOUT, layout_from_dict
from .channel import FADING_MODELS, apply_awgn, apply_cfo, apply_fading, gain_for_sir, mix, noise_power_for_snr
from .codebook import Codebook, CodebookError, builtin_codebook, codeword_to_mask, load_codebook, verify_min_distance
from .detector import DetectorConfig, STRENGTH_DENOMINATORS, serialize_events, spot_report
from .iqfile import layout_from_metadata, read_iq, write_iq
from .waveform import (
    IqFrame,
    build_tag_spectrum,
    mean_power,
    papr,
    synthesize_data_interference,
    synthesize_tag,
    synthesize_tag_papr_limited,
)

CONFIG_VERSION = 1


class CliError(Exception):
    """Carries the process exit code alongside the message."""

    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract reserves 2 for I/O
    def error(self, message: str) -> None:
        raise CliError(1, f"{self.prog}: {message}")


def _fmt(value) -> str:
    """Deterministic scalar formatting for tables and summaries."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.9g}"
    return str(value)


def _load_config(path: "str | None") -> dict:
    if path is None:
        return {}
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise CliError(2, f"cannot read config: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CliError(1, f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CliError(1, "config must be a JSON object")
    if doc.get("config_version") != CONFIG_VERSION:
        raise CliError(
            1, f"config must declare config_version: {CONFIG_VERSION}"
        )
    return doc


def _resolve(args: argparse.Namespace, config: dict, name: str, default=None):
    """Flag value if given, else config document field, else default."""
    value = getattr(args, name, None)
    if value is not None:
        return value
    if name in config:
        return config[name]
    return default


def _config_layout(config: dict) -> CarrierLayout:
    if "layout" in config:
        try:
            return layout_from_dict(config["layout"])
        except (TypeError, ValueError) as exc:
            raise CliError(1, f"bad layout in config: {exc}") from exc
    return REFERENCE_LAYOUT


def _parse_grid(text: str, name: str) -> "list[float]":
    try:
        values = [float(part) for part in str(text).split(",") if part.strip()]
    except ValueError as exc:
        raise CliError(1, f"bad {name} grid {text!r}: {exc}") from exc
    if not values:
        raise CliError(1, f"{name} grid is empty")
    return values


def _require_seed(seed: "int | None", why: str) -> int:
    if seed is None:
        raise CliError(1, f"--seed is required: {why}")
    return int(seed)


def _get_codebook(path: "str | None") -> Codebook:
    if path is None:
        return builtin_codebook()
    try:
        return load_codebook(path)
    except OSError as exc:
        raise CliError(2, f"cannot read codebook: {exc}") from exc
    except CodebookError as exc:
        raise CliError(1, f"bad codebook: {exc}") from exc


def _read_iq_input(path: str) -> "tuple[IqFrame, dict]":
    try:
        return read_iq(path)
    except OSError as exc:
        raise CliError(2, f"cannot read IQ input: {exc}") from exc
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc


def _header_lines(command: str, fields: "list[tuple[str, object]]") -> "list[str]":
    lines = [f"# command: {command}", f"# config_version: {CONFIG_VERSION}"]
    lines.extend(f"# {key}: {_fmt(value)}" for key, value in fields)
    return lines


def _layout_summary(layout: CarrierLayout) -> str:
    nulls = ",".join(str(i) for i in sorted(layout.null_wide))
    return (
        f"fft_size={layout.fft_size} wide_total={layout.wide_total} "
        f"thin_per_wide={layout.thin_per_wide} "
        f"active_thin_per_wide={layout.active_thin_per_wide} "
        f"groups={layout.groups} cp_fraction={_fmt(layout.cp_fraction)} "
        f"null_wide={nulls}"
    )


def _emit(out: "str | None", text: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise CliError(2, f"cannot write output: {exc}") from exc


# ---------------------------------------------------------------------------
# commands


def _cmd_modulate(args: argparse.Namespace, config: dict) -> int:
    layout = _config_layout(config)
    codebook = _get_codebook(_resolve(args, config, "codebook"))
    seed = _require_seed(_resolve(args, config, "seed"), "tone phases are random")
    power = float(_resolve(args, config, "power", 1.0))
    papr_cap = _resolve(args, config, "papr_cap")
    max_attempts = int(_resolve(args, config, "max_attempts", 100))
    sample_rate = float(_resolve(args, config, "sample_rate", 1.0))
    out = _resolve(args, config, "out")
    if out is None:
        raise CliError(1, "--out is required")

    rng = np.random.default_rng(seed)
    want_random = bool(_resolve(args, config, "random", False))
    word_index = _resolve(args, config, "word")
    if want_random and word_index is not None:
        raise CliError(1, "--word and --random are mutually exclusive")
    if want_random:
        word_index = int(rng.integers(codebook.size))
    elif word_index is None:
        word_index = 0
    word_index = int(word_index)
    if not 0 <= word_index < codebook.size:
        raise CliError(
            1, f"codeword index {word_index} out of range 0..{codebook.size - 1}"
        )

    mask = codeword_to_mask(codebook.words[word_index], layout)
    try:
        if papr_cap is not None:
            limited = synthesize_tag_papr_limited(
                mask, layout, power, float(papr_cap), rng, max_attempts
            )
            frame = limited.frame
            cap_met = limited.met_cap
            attempts = limited.attempts
        else:
            frame = synthesize_tag(build_tag_spectrum(mask, layout, power, rng), layout)
            cap_met = None
            attempts = 1
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc
    if sample_rate != 1.0:
        frame = IqFrame(frame.samples, sample_rate)

    extra = {
        "command": "modulate",
        "codebook": codebook.name,
        "codeword_index": word_index,
        "seed": seed,
        "total_power": power,
        "papr_db": round(papr(frame), 9),
    }
    if papr_cap is not None:
        extra["papr_cap_db"] = float(papr_cap)
        extra["papr_cap_met"] = bool(cap_met)
        extra["attempts"] = attempts
    try:
        write_iq(out, frame, layout=layout, extra=extra)
    except OSError as exc:
        raise CliError(2, f"cannot write IQ output: {exc}") from exc

    print(f"codeword_index: {word_index}")
    print(f"samples: {len(frame)}")
    print(f"total_power: {_fmt(power)}")
    print(f"papr_db: {_fmt(papr(frame))}")
    if papr_cap is not None:
        print(f"papr_cap_met: {_fmt(bool(cap_met))}")
    print(f"out: {out}")
    return 0


def _cmd_impair(args: argparse.Namespace, config: dict) -> int:
    in_path = _resolve(args, config, "in_path")
    out = _resolve(args, config, "out")
    if in_path is None:
        raise CliError(1, "--in is required")
    if out is None:
        raise CliError(1, "--out is required")
    frame, meta = _read_iq_input(in_path)
    layout = layout_from_metadata(meta) or _config_layout(config)

    snr_db = _resolve(args, config, "snr")
    cfo = float(_resolve(args, config, "cfo", 0.0))
    fading = _resolve(args, config, "fading", "none")
    sir_db = _resolve(args, config, "sir")
    intf_offset = int(_resolve(args, config, "interference_offset", 0))
    if fading not in FADING_MODELS:
        raise CliError(1, f"fading must be one of {FADING_MODELS}")
    if intf_offset < 0:
        raise CliError(1, "interference offset must be nonnegative")
    stochastic = snr_db is not None or sir_db is not None or fading != "none"
    seed = _resolve(args, config, "seed")
    if stochastic:
        seed = _require_seed(seed, "noise, fading and interference draw randomness")
    rng = np.random.default_rng(seed if seed is not None else 0)

    in_power = mean_power(frame)
    try:
        # documented order: fading, then cfo, then interference, then noise
        if fading != "none":
            frame = apply_fading(frame, fading, rng, layout)
        if cfo:
            frame = apply_cfo(frame, cfo, layout)
        if sir_db is not None:
            n_frames = math.ceil(max(len(frame) - intf_offset, 1) / 80)
            interference = synthesize_data_interference(layout, n_frames, 1.0, rng)
            gain = gain_for_sir(frame, interference, intf_offset, float(sir_db))
            frame = mix([(frame, 0, 1.0), (interference, intf_offset, gain)])
        if snr_db is not None:
            tones = layout.active_thin_per_wide * layout.groups
            p_tone = mean_power(frame) * layout.fft_size / tones
            frame = apply_awgn(frame, noise_power_for_snr(float(snr_db), p_tone, layout), rng)
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc

    extra = {
        "command": "impair",
        "snr_db": None if snr_db is None else float(snr_db),
        "cfo": cfo,
        "fading": fading,
        "sir_db": None if sir_db is None else float(sir_db),
        "interference_offset": intf_offset,
        "seed": seed,
        "source": str(in_path),
    }
    try:
        write_iq(out, frame, layout=layout, extra=extra)
    except OSError as exc:
        raise CliError(2, f"cannot write IQ output: {exc}") from exc

    out_power = mean_power(frame)
    print(f"in_power: {_fmt(in_power)}")
    print(f"out_power: {_fmt(out_power)}")
    if in_power > 0 and out_power > 0:
        print(f"power_ratio_db: {_fmt(10.0 * math.log10(out_power / in_power))}")
    print(f"out: {out}")
    return 0


def _cmd_spot(args: argparse.Namespace, config: dict) -> int:
    in_path = _resolve(args, config, "in_path")
    if in_path is None:
        raise CliError(1, "--in is required")
    frame, meta = _read_iq_input(in_path)
    layout = layout_from_metadata(meta) or _config_layout(config)
    codebook = _get_codebook(_resolve(args, config, "codebook"))
    gamma = float(_resolve(args, config, "gamma", 0.62))
    carrier_sense = float(_resolve(args, config, "carrier_sense", -1.0))
    denominator = _resolve(args, config, "denominator", "band")
    out = _resolve(args, config, "out")

    try:
        detector = DetectorConfig(
            layout=layout,
            codebook=codebook,
            gamma=gamma,
            carrier_sense_snr_db=carrier_sense,
            denominator=denominator,
        )
        report = spot_report(frame, detector)
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc

    header = _header_lines(
        "spot",
        [
            ("in", in_path),
            ("codebook", codebook.name),
            ("gamma", gamma),
            ("carrier_sense_snr_db", carrier_sense),
            ("denominator", denominator),
            ("layout", _layout_summary(layout)),
            ("windows_total", report.windows_total),
            ("windows_gated", report.windows_gated),
            ("events", len(report.events)),
        ],
    )
    text = "\n".join(header) + "\n" + serialize_events(list(report.events))
    _emit(out, text)
    if out is not None:
        print(f"windows_total: {report.windows_total}")
        print(f"windows_gated: {report.windows_gated}")
        print(f"events: {len(report.events)}")
        print(f"out: {out}")
    return 0


def _cmd_curves(args: argparse.Namespace, config: dict) -> int:
    layout = _config_layout(config)
    codebook = _get_codebook(_resolve(args, config, "codebook"))
    snr_grid = _parse_grid(_resolve(args, config, "snr", "0"), "snr")
    gamma_grid = sorted(_parse_grid(_resolve(args, config, "gamma", "0.62"), "gamma"))
    fading = _resolve(args, config, "fading", "wideband")
    trials = int(_resolve(args, config, "trials", 0))
    include_null = bool(_resolve(args, config, "include_null_noise", False))
    out = _resolve(args, config, "out")
    if fading not in FADING_ANALYSIS_MODELS:
        raise CliError(1, f"fading must be one of {FADING_ANALYSIS_MODELS}")
    seed = _resolve(args, config, "seed")
    if trials > 0:
        seed = _require_seed(seed, "Monte Carlo columns are requested")

    rows = []
    for snr_db in snr_grid:
        model = AnalysisModel(layout=layout, snr_db=float(snr_db), fading=fading)
        try:
            curve = build_roc(
                model,
                gamma_grid,
                codebook=codebook if trials > 0 else None,
                trials=trials,
                seed=seed if trials > 0 else 0,
                include_null_noise=include_null,
            )
            if trials > 0:
                pm = pm_mc(float(snr_db), codebook, layout, fading, trials, seed)[0]
            else:
                pm = float("nan")
        except ValueError as exc:
            raise CliError(1, str(exc)) from exc
        for pt in curve.points:
            rows.append(
                (pt.gamma, float(snr_db), pt.pd, pt.pf, pm, trials,
                 pt.pf_ci95[0], pt.pf_ci95[1], pt.flagged)
            )

    header = _header_lines(
        "curves",
        [
            ("model", fading),
            ("codebook", codebook.name),
            ("layout", _layout_summary(layout)),
            ("include_null_noise", include_null),
            ("trials", trials),
            ("seed", "none" if seed is None else seed),
            ("columns", "gamma snr_db pd pf pm trials pf_ci_low pf_ci_high flagged"),
        ],
    )
    body = [" ".join(_fmt(v) for v in row) for row in rows]
    _emit(out, "\n".join(header + body) + "\n")
    return 0


def _cmd_leakage(args: argparse.Namespace, config: dict) -> int:
    layout = _config_layout(config)
    max_offset = int(_resolve(args, config, "max_offset", 8))
    out = _resolve(args, config, "out")
    if max_offset < 1:
        raise CliError(1, "max offset must be at least 1")
    header = _header_lines(
        "leakage",
        [
            ("layout", _layout_summary(layout)),
            ("max_offset", max_offset),
            ("block_leak_k1", np.pi**2 / 6.0),
            ("columns", "k single_leak_half_bin block_leak expected_offset_leak"),
        ],
    )
    rows = []
    for k in range(1, max_offset + 1):
        rows.append(
            (k, float(leakage_single(k, 0.5)), leakage_block(k),
             expected_offset_leak(k, layout))
        )
    body = [" ".join(_fmt(v) for v in row) for row in rows]
    _emit(out, "\n".join(header + body) + "\n")
    return 0


def _cmd_sweep(args: argparse.Namespace, config: dict) -> int:
    carriers = int(_resolve(args, config, "carriers", 56))
    snr_db = float(_resolve(args, config, "snr", 0.0))
    trials = int(_resolve(args, config, "trials", 0))
    out = _resolve(args, config, "out")
    seed = _resolve(args, config, "seed")
    if trials > 0:
        seed = _require_seed(seed, "Monte Carlo columns are requested")
    try:
        points = sweep_active_carriers(
            carriers, snr_db, trials=trials, seed=seed if seed is not None else 0
        )
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc
    best = sweep_argmin(points)
    header = _header_lines(
        "sweep",
        [
            ("carriers", carriers),
            ("snr_db", snr_db),
            ("trials", trials),
            ("seed", "none" if seed is None else seed),
            ("argmin_q", best.q),
            ("argmin_pf", best.pf),
            ("columns", "q gamma0 pf pf_mc pf_mc_ci_low pf_mc_ci_high"),
        ],
    )
    rows = []
    for pt in points:
        if pt.pf_mc is None:
            rows.append((pt.q, pt.gamma0, pt.pf, "nan", "nan", "nan"))
        else:
            rows.append(
                (pt.q, pt.gamma0, pt.pf, pt.pf_mc, pt.pf_mc_ci95[0], pt.pf_mc_ci95[1])
            )
    body = [" ".join(_fmt(v) for v in row) for row in rows]
    _emit(out, "\n".join(header + body) + "\n")
    return 0


def _cmd_range(args: argparse.Namespace, config: dict) -> int:
    snr_gap = float(_resolve(args, config, "snr_gap", 20.0))
    exponents = _parse_grid(_resolve(args, config, "exponents", "3,6"), "exponents")
    out = _resolve(args, config, "out")
    header = _header_lines(
        "range",
        [
            ("snr_gap_db", snr_gap),
            ("columns", "path_loss_exponent range_gain"),
        ],
    )
    try:
        rows = [(d, range_gain(snr_gap, d)) for d in exponents]
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc
    body = [" ".join(_fmt(v) for v in row) for row in rows]
    _emit(out, "\n".join(header + body) + "\n")
    return 0


def _cmd_overhead(args: argparse.Namespace, config: dict) -> int:
    payload = int(_resolve(args, config, "payload_bytes", 1500))
    sync_frames = int(_resolve(args, config, "sync_frames", 6))
    tag_frames = int(_resolve(args, config, "tag_frames", 8))
    out = _resolve(args, config, "out")
    try:
        fraction = overhead(payload, sync_frames=sync_frames, tag_frames=tag_frames)
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc
    payload_frames = math.ceil(payload / 12)
    header = _header_lines(
        "overhead",
        [("columns", "payload_bytes payload_frames sync_frames tag_frames overhead")],
    )
    row = (payload, payload_frames, sync_frames, tag_frames, fraction)
    _emit(out, "\n".join(header + [" ".join(_fmt(v) for v in row)]) + "\n")
    return 0


def _cmd_codebook_verify(args: argparse.Namespace, config: dict) -> int:
    path = _resolve(args, config, "codebook")
    codebook = _get_codebook(path)
    verified = verify_min_distance(codebook.words)
    print(f"name: {codebook.name}")
    print(f"size: {codebook.size}")
    print(f"word_length: {codebook.word_length}")
    print(f"declared_min_distance: {codebook.min_distance}")
    print(f"verified_min_distance: {verified}")
    if verified < codebook.min_distance:
        print("status: FAIL")
        return 1
    print("status: ok")
    return 0


# ---------------------------------------------------------------------------
# parser plumbing


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="JSON config document; flags override its fields")
    sub.add_argument("--seed", type=int, help="randomness seed (required for stochastic runs)")
    sub.add_argument("--out", help="output path (tables default to stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tagspot", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("modulate", parents=[], help="synthesize one tag frame to an IQ file")
    _add_common(p)
    p.add_argument("--word", type=int, help="codeword index (default 0)")
    p.add_argument("--random", action="store_true", default=None, help="pick the codeword from the seed")
    p.add_argument("--power", type=float, help="total spectral power (default 1)")
    p.add_argument("--papr-cap", dest="papr_cap", type=float, help="redraw phases until PAPR <= cap dB")
    p.add_argument("--max-attempts", dest="max_attempts", type=int, help="draw budget for --papr-cap")
    p.add_argument("--sample-rate", dest="sample_rate", type=float, help="metadata sample rate")
    p.add_argument("--codebook", help="codebook file (default: built-in family)")
    p.set_defaults(func=_cmd_modulate)

    p = commands.add_parser("impair", help="apply fading, cfo, interference and noise to an IQ file")
    _add_common(p)
    p.add_argument("--in", dest="in_path", help="input IQ file")
    p.add_argument("--snr", type=float, help="target SNR in dB (input treated as one tag)")
    p.add_argument("--cfo", type=float, help="carrier offset in thin-carrier widths")
    p.add_argument("--fading", choices=FADING_MODELS, help="fading model (default none)")
    p.add_argument("--sir", type=float, help="add data-like interference at this SIR dB")
    p.add_argument("--interference-offset", dest="interference_offset", type=int,
                   help="interference start sample (default 0)")
    p.set_defaults(func=_cmd_impair)

    p = commands.add_parser("spot", help="run the detector over an IQ file")
    _add_common(p)
    p.add_argument("--in", dest="in_path", help="input IQ file")
    p.add_argument("--gamma", type=float, help="detection threshold (default 0.62)")
    p.add_argument("--carrier-sense", dest="carrier_sense", type=float,
                   help="carrier sense gate in dB over the noise floor (default -1)")
    p.add_argument("--denominator", choices=STRENGTH_DENOMINATORS,
                   help="strength denominator convention (default band)")
    p.add_argument("--codebook", help="codebook file (default: built-in family)")
    p.set_defaults(func=_cmd_spot)

    p = commands.add_parser("curves", help="detection and false-alarm tables over snr/gamma grids")
    _add_common(p)
    p.add_argument("--snr", help="comma-separated SNR grid in dB "
                   "(write --snr=-4,0,4 when the grid starts negative)")
    p.add_argument("--gamma", help="comma-separated threshold grid")
    p.add_argument("--fading", choices=FADING_ANALYSIS_MODELS, help="analysis fading model")
    p.add_argument("--trials", type=int, help="Monte Carlo trials per point (0: closed forms only)")
    p.add_argument("--include-null-noise", dest="include_null_noise", action="store_true",
                   default=None, help="use the all-carrier strength denominator")
    p.add_argument("--codebook", help="codebook file (default: built-in family)")
    p.set_defaults(func=_cmd_curves)

    p = commands.add_parser("leakage", help="off-grid tone leakage tables")
    _add_common(p)
    p.add_argument("--max-offset", dest="max_offset", type=int, help="largest offset row (default 8)")
    p.set_defaults(func=_cmd_leakage)

    p = commands.add_parser("sweep", help="active-carrier count optimization table")
    _add_common(p)
    p.add_argument("--carriers", type=int, help="total wide carriers (default 56)")
    p.add_argument("--snr", type=float, help="per-tone SNR in dB (default 0)")
    p.add_argument("--trials", type=int, help="Monte Carlo cross-check trials per split")
    p.set_defaults(func=_cmd_sweep)

    p = commands.add_parser("range", help="range gain from an SNR advantage")
    _add_common(p)
    p.add_argument("--snr-gap", dest="snr_gap", type=float, help="SNR advantage in dB (default 20)")
    p.add_argument("--exponents", help="comma-separated path loss exponents (default 3,6)")
    p.set_defaults(func=_cmd_range)

    p = commands.add_parser("overhead", help="tag airtime overhead for a payload size")
    _add_common(p)
    p.add_argument("--payload-bytes", dest="payload_bytes", type=int, help="payload size (default 1500)")
    p.add_argument("--sync-frames", dest="sync_frames", type=int, help="sync frames per packet (default 6)")
    p.add_argument("--tag-frames", dest="tag_frames", type=int, help="frames a tag occupies (default 8)")
    p.set_defaults(func=_cmd_overhead)

    p = commands.add_parser("codebook-verify", help="re-verify a codebook's declared distance")
    _add_common(p)
    p.add_argument("--codebook", help="codebook file (default: built-in family)")
    p.set_defaults(func=_cmd_codebook_verify)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _load_config(args.config)
        if "command" in config and config["command"] != args.command:
            raise CliError(
                1,
                f"config is for {config['command']!r}, not {args.command!r}",
            )
        return args.func(args, config)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

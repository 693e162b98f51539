"""Command-line interface: workflows, config documents, and exit codes."""

import json

import numpy as np
import pytest

from tagspot.analysis import AnalysisModel, pd_single, pf_single
from tagspot.carriers import REFERENCE_LAYOUT
from tagspot.channel import noise_power_for_snr
from tagspot.cli import main as cli_main
from tagspot.detector import parse_events
from tagspot.iqfile import read_iq, sidecar_path
from tagspot.waveform import mean_power

LAY = REFERENCE_LAYOUT


def _table_rows(text):
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(line.split())
    return rows


def _modulate(tmp_path, name="tag.iq", word=0, seed=5, extra=()):
    out = tmp_path / name
    argv = ["modulate", "--word", str(word), "--seed", str(seed), "--out", str(out)]
    argv.extend(extra)
    assert cli_main(argv) == 0
    return out


def test_modulate_is_deterministic_and_documented(tmp_path, capsys):
    a = _modulate(tmp_path, "a.iq", word=3, seed=11)
    b = _modulate(tmp_path, "b.iq", word=3, seed=11)
    assert a.read_bytes() == b.read_bytes()
    frame, meta = read_iq(a)
    assert len(frame) == 640
    assert meta["codeword_index"] == 3
    assert meta["command"] == "modulate"
    assert meta["seed"] == 11
    out = capsys.readouterr().out
    assert "codeword_index: 3" in out
    assert "samples: 640" in out


def test_modulate_validates_input(tmp_path, capsys):
    out = tmp_path / "x.iq"
    assert cli_main(["modulate", "--out", str(out)]) == 1  # seed required
    assert "seed" in capsys.readouterr().err
    assert cli_main(["modulate", "--seed", "1", "--word", "99", "--out", str(out)]) == 1
    assert cli_main(["modulate", "--seed", "1"]) == 1  # --out required
    assert (
        cli_main(["modulate", "--seed", "1", "--word", "0", "--random", "--out", str(out)])
        == 1
    )


def test_modulate_random_word_comes_from_the_seed(tmp_path):
    out = tmp_path / "r.iq"
    assert cli_main(["modulate", "--random", "--seed", "29", "--out", str(out)]) == 0
    _, meta = read_iq(out)
    assert 0 <= meta["codeword_index"] < 56
    again = tmp_path / "r2.iq"
    assert cli_main(["modulate", "--random", "--seed", "29", "--out", str(again)]) == 0
    assert read_iq(again)[1]["codeword_index"] == meta["codeword_index"]


def test_modulate_papr_cap_is_reported(tmp_path):
    out = tmp_path / "capped.iq"
    assert (
        cli_main(
            ["modulate", "--seed", "3", "--papr-cap", "20", "--out", str(out)]
        )
        == 0
    )
    _, meta = read_iq(out)
    assert meta["papr_cap_met"] is True
    assert meta["papr_db"] <= 20.0


def test_impair_without_impairments_is_byte_identical(tmp_path):
    source = _modulate(tmp_path)
    out = tmp_path / "same.iq"
    assert cli_main(["impair", "--in", str(source), "--out", str(out)]) == 0
    assert out.read_bytes() == source.read_bytes()


def test_impair_adds_calibrated_noise(tmp_path):
    source = _modulate(tmp_path)
    out = tmp_path / "noisy.iq"
    assert (
        cli_main(["impair", "--in", str(source), "--snr", "0", "--seed", "7", "--out", str(out)])
        == 0
    )
    clean, _ = read_iq(source)
    noisy, meta = read_iq(out)
    assert meta["snr_db"] == 0.0
    tones = LAY.active_thin_per_wide * LAY.groups
    p_tone = mean_power(clean) * LAY.fft_size / tones
    n = noise_power_for_snr(0.0, p_tone, LAY)
    assert abs(mean_power(noisy) - mean_power(clean) - n) < 0.2 * n
    # stochastic impairments refuse to run without a seed
    assert cli_main(["impair", "--in", str(source), "--snr", "0", "--out", str(out)]) == 1


def test_impair_interference_and_reruns(tmp_path):
    source = _modulate(tmp_path)
    first, second = tmp_path / "i1.iq", tmp_path / "i2.iq"
    argv = ["impair", "--in", str(source), "--sir", "0", "--seed", "9"]
    assert cli_main(argv + ["--out", str(first)]) == 0
    assert cli_main(argv + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    mixed, _ = read_iq(first)
    clean, _ = read_iq(source)
    # 0 dB interference roughly doubles the mean power
    assert mean_power(mixed) == pytest.approx(2 * mean_power(clean), rel=0.2)
    assert (
        cli_main(
            ["impair", "--in", str(source), "--sir", "0", "--seed", "9",
             "--interference-offset", "-4", "--out", str(first)]
        )
        == 1
    )


def test_spot_finds_the_modulated_word(tmp_path, capsys):
    source = _modulate(tmp_path, word=17, seed=23)
    out = tmp_path / "events.txt"
    assert cli_main(["spot", "--in", str(source), "--out", str(out)]) == 0
    text = out.read_text()
    events = parse_events(text)
    assert len(events) == 1
    assert events[0].codeword_index == 17
    assert "# gamma: 0.62" in text
    assert "# windows_total:" in text
    summary = capsys.readouterr().out
    assert "events: 1" in summary


def test_spot_threshold_comes_from_config_unless_overridden(tmp_path):
    # a noiseless tag has strength exactly 1, so add noise to give the
    # threshold something to reject
    clean = _modulate(tmp_path, word=2, seed=31)
    source = tmp_path / "noisy.iq"
    assert (
        cli_main(["impair", "--in", str(clean), "--snr", "10", "--seed", "37",
                  "--out", str(source)])
        == 0
    )
    config = tmp_path / "spot.json"
    config.write_text(json.dumps({"config_version": 1, "gamma": 0.999}))
    out = tmp_path / "events.txt"
    argv = ["spot", "--in", str(source), "--config", str(config), "--out", str(out)]
    assert cli_main(argv) == 0
    assert parse_events(out.read_text()) == []  # config gamma too strict
    assert cli_main(argv + ["--gamma", "0.62"]) == 0  # flag wins
    events = parse_events(out.read_text())
    assert len(events) == 1 and events[0].codeword_index == 2


def test_curves_closed_forms_match_the_library(tmp_path):
    out = tmp_path / "curves.txt"
    assert (
        cli_main(
            ["curves", "--snr", "0,1", "--gamma", "0.62,0.5", "--out", str(out)]
        )
        == 0
    )
    rows = _table_rows(out.read_text())
    assert len(rows) == 4
    for gamma_s, snr_s, pd_s, pf_s, pm_s, trials_s, *_ in rows:
        model = AnalysisModel(snr_db=float(snr_s), fading="wideband")
        assert float(pd_s) == pytest.approx(pd_single(float(gamma_s), model), rel=1e-8)
        assert float(pf_s) == pytest.approx(pf_single(float(gamma_s)), rel=1e-8)
        assert pm_s == "nan" and trials_s == "0"


def test_curves_monte_carlo_rerun_is_byte_identical(tmp_path):
    first, second = tmp_path / "c1.txt", tmp_path / "c2.txt"
    argv = ["curves", "--snr", "0", "--gamma", "0.55,0.62", "--trials", "500",
            "--seed", "13"]
    assert cli_main(argv + ["--out", str(first)]) == 0
    assert cli_main(argv + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert "# seed: 13" in first.read_text()


def test_leakage_table_matches_the_closed_forms(tmp_path):
    out = tmp_path / "leak.txt"
    assert cli_main(["leakage", "--max-offset", "3", "--out", str(out)]) == 0
    rows = _table_rows(out.read_text())
    assert [int(r[0]) for r in rows] == [1, 2, 3]
    from tagspot.analysis import expected_offset_leak, leakage_block, leakage_single

    for k_s, single_s, block_s, expected_s in rows:
        k = int(k_s)
        assert float(single_s) == pytest.approx(float(leakage_single(k, 0.5)), rel=1e-8)
        assert float(block_s) == pytest.approx(leakage_block(k), rel=1e-8)
        assert float(expected_s) == pytest.approx(expected_offset_leak(k), rel=1e-8)


def test_sweep_table_reports_the_argmin(tmp_path):
    out = tmp_path / "sweep.txt"
    assert cli_main(["sweep", "--carriers", "16", "--snr", "0", "--out", str(out)]) == 0
    text = out.read_text()
    assert "# argmin_q:" in text
    rows = _table_rows(text)
    assert len(rows) == 15


def test_range_and_overhead_tables(tmp_path, capsys):
    assert cli_main(["range", "--snr-gap", "20", "--exponents", "3,6"]) == 0
    rows = _table_rows(capsys.readouterr().out)
    assert float(rows[0][1]) == pytest.approx(4.64158883, abs=1e-6)
    assert float(rows[1][1]) == pytest.approx(2.15443469, abs=1e-6)

    assert cli_main(["overhead", "--payload-bytes", "1500"]) == 0
    out = capsys.readouterr().out
    assert "0.0610687023" in out


def test_codebook_verify_builtin(capsys):
    assert cli_main(["codebook-verify"]) == 0
    out = capsys.readouterr().out
    assert "status: ok" in out
    assert "declared_min_distance: 13" in out
    assert "verified_min_distance: 13" in out


def test_codebook_verify_rejects_overclaimed_distance(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("name: bad\nword_length: 4\nmin_distance: 4\n0000\n0011\n")
    assert cli_main(["codebook-verify", "--codebook", str(bad)]) == 1


def test_config_document_rules(tmp_path):
    source = _modulate(tmp_path)
    out = tmp_path / "o.iq"

    unversioned = tmp_path / "nover.json"
    unversioned.write_text(json.dumps({"snr": 0}))
    argv = ["impair", "--in", str(source), "--out", str(out), "--config"]
    assert cli_main(argv + [str(unversioned)]) == 1

    mismatched = tmp_path / "wrongcmd.json"
    mismatched.write_text(json.dumps({"config_version": 1, "command": "spot"}))
    assert cli_main(argv + [str(mismatched)]) == 1

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert cli_main(argv + [str(broken)]) == 1

    assert cli_main(argv + [str(tmp_path / "missing.json")]) == 2

    # config may carry command-specific fields; flags stay optional
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"config_version": 1, "command": "impair", "cfo": 0.5}))
    assert cli_main(argv + [str(good)]) == 0
    _, meta = read_iq(out)
    assert meta["cfo"] == 0.5


def test_io_errors_exit_with_code_2(tmp_path):
    assert cli_main(["impair", "--in", str(tmp_path / "absent.iq"),
                     "--out", str(tmp_path / "o.iq")]) == 2
    assert cli_main(["spot", "--in", str(tmp_path / "absent.iq")]) == 2


def test_unknown_flags_and_commands_exit_with_code_1(capsys):
    assert cli_main(["modulate", "--bogus"]) == 1
    assert cli_main(["frobnicate"]) == 1
    capsys.readouterr()

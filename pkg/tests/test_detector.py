"""Spotter pipeline: folding, strength, gating, suppression, serialization."""

import numpy as np
import pytest

from tagspot.carriers import REFERENCE_LAYOUT, WideCarrierMask
from tagspot.channel import apply_awgn, mix, noise_power_for_snr
from tagspot.codebook import codeword_to_mask, generate_fallback_family
from tagspot.detector import (
    DetectionEvent,
    DetectorConfig,
    center_of_mass,
    fold_spectrum,
    noise_tracker_update,
    parse_events,
    serialize_events,
    spot,
    spot_report,
    tag_strength,
    tag_strength_banded,
)
from tagspot.waveform import IqFrame, build_tag_spectrum, synthesize_tag

LAY = REFERENCE_LAYOUT


def _stream_with_tag(codebook, word_index, offset, snr_db, total=2560, seed=0):
    """Tag embedded in calibrated noise; per-tone power 1."""
    rng = np.random.default_rng(seed)
    mask = codeword_to_mask(codebook.words[word_index], LAY)
    power = float(LAY.active_thin_per_wide * LAY.groups)
    tag = synthesize_tag(build_tag_spectrum(mask, LAY, power, rng), LAY)
    quiet = IqFrame(np.zeros(total, dtype=complex))
    stream = mix([(quiet, 0, 1.0), (tag, offset, 1.0)])
    n = noise_power_for_snr(snr_db, 1.0, LAY)
    return apply_awgn(stream, n, rng)


def test_fold_conserves_power():
    rng = np.random.default_rng(40)
    bins = rng.normal(size=512) + 1j * rng.normal(size=512)
    wide = fold_spectrum(bins, LAY)
    assert wide.shape == (64,)
    total = float(np.sum(np.abs(bins) ** 2))
    assert abs(float(wide.sum()) - total) < 1e-12 * total
    with pytest.raises(ValueError):
        fold_spectrum(bins[:100], LAY)


def test_flat_spectrum_strength_is_the_mask_fraction():
    powers = np.ones(64)
    mask = codeword_to_mask("0" * 28, LAY)
    assert tag_strength(powers, mask) == 28 / 64
    assert tag_strength_banded(powers, mask, LAY) == 0.5


def test_strength_scale_invariance_is_exact():
    rng = np.random.default_rng(41)
    powers = rng.chisquare(16, size=64)
    mask = codeword_to_mask("10" * 14, LAY)
    # power-of-two scaling is lossless in floating point
    assert tag_strength(4.0 * powers, mask) == tag_strength(powers, mask)
    assert tag_strength_banded(0.25 * powers, mask, LAY) == tag_strength_banded(
        powers, mask, LAY
    )


def test_strength_input_validation():
    mask = codeword_to_mask("0" * 28, LAY)
    with pytest.raises(ValueError):
        tag_strength(np.full(64, -1.0), mask)
    with pytest.raises(ValueError):
        tag_strength(np.zeros(64), mask)
    with pytest.raises(ValueError):
        tag_strength_banded(np.zeros(64), mask, LAY)


def test_center_of_mass_positions():
    delta = np.zeros(64)
    delta[40] = 2.0
    position, ok = center_of_mass(delta, LAY)
    assert position == LAY.centered_wide_index(40) == 8.5
    assert not ok  # outside the central quarter

    delta = np.zeros(64)
    delta[39] = 1.0
    position, ok = center_of_mass(delta, LAY)
    assert position == 7.5 and ok

    symmetric = np.zeros(64)
    symmetric[10] = symmetric[53] = 3.0
    position, ok = center_of_mass(symmetric, LAY)
    assert position == 0.0 and ok
    with pytest.raises(ValueError):
        center_of_mass(np.zeros(64), LAY)


def test_noise_tracker_update():
    assert noise_tracker_update(None, 3.0, 0.05) == 3.0
    assert noise_tracker_update(2.0, 4.0, 0.25) == pytest.approx(2.5, rel=1e-12)
    with pytest.raises(ValueError):
        noise_tracker_update(1.0, 1.0, 0.0)


def test_detector_config_validation(codebook):
    config = DetectorConfig(layout=LAY, codebook=codebook)
    assert config.com_bound == 8.0
    assert DetectorConfig(layout=LAY, codebook=codebook, com_limit=3.0).com_bound == 3.0
    with pytest.raises(ValueError):
        DetectorConfig(layout=LAY, codebook=codebook, gamma=1.0)
    with pytest.raises(ValueError):
        DetectorConfig(layout=LAY, codebook=codebook, denominator="mask")
    with pytest.raises(ValueError):
        short = generate_fallback_family(10, 3, rng_seed=1, max_words=4)
        DetectorConfig(layout=LAY, codebook=short)


def test_single_clean_tag_yields_one_correct_event(codebook):
    stream = _stream_with_tag(codebook, 7, offset=777, snr_db=30.0, seed=50)
    config = DetectorConfig(layout=LAY, codebook=codebook)
    events = spot(stream, config)
    assert len(events) == 1
    event = events[0]
    assert event.codeword_index == 7
    # the winning interval lies fully inside the tag frame
    assert 777 <= event.interval_start <= 777 + LAY.cp_len
    assert event.strength > 0.9
    assert event.com_valid


def test_two_separated_tags_give_two_events(codebook):
    a = _stream_with_tag(codebook, 3, offset=1000, snr_db=30.0, total=6000, seed=51)
    mask = codeword_to_mask(codebook.words[12], LAY)
    power = float(LAY.active_thin_per_wide * LAY.groups)
    tag_b = synthesize_tag(
        build_tag_spectrum(mask, LAY, power, np.random.default_rng(52)), LAY
    )
    stream = mix([(a, 0, 1.0), (tag_b, 4000, 1.0)])
    events = spot(stream, DetectorConfig(layout=LAY, codebook=codebook))
    assert [e.codeword_index for e in events] == [3, 12]


def test_overlapping_candidates_are_suppressed_to_one(codebook):
    # a tag aligned to the interval grid fills two intervals completely;
    # only the stronger one may survive
    stream = _stream_with_tag(codebook, 0, offset=1280, snr_db=30.0, seed=53)
    report = spot_report(stream, DetectorConfig(layout=LAY, codebook=codebook))
    assert len(report.events) == 1
    assert report.windows_total == (len(stream) - LAY.fft_size) // LAY.cp_len + 1


def test_carrier_sense_gates_quiet_intervals(codebook):
    # leading silence seeds the tracker at zero power and is gated
    stream = _stream_with_tag(codebook, 5, offset=1400, snr_db=30.0, seed=54)
    silent = np.concatenate([np.zeros(640, dtype=complex), stream.samples])
    report = spot_report(IqFrame(silent), DetectorConfig(layout=LAY, codebook=codebook))
    assert report.windows_gated >= 1
    assert len(report.events) == 1
    assert report.events[0].codeword_index == 5


def test_band_denominator_reads_higher_than_all(codebook):
    stream = _stream_with_tag(codebook, 9, offset=600, snr_db=10.0, seed=55)
    banded = spot(stream, DetectorConfig(layout=LAY, codebook=codebook, denominator="band"))
    allwide = spot(stream, DetectorConfig(layout=LAY, codebook=codebook, denominator="all"))
    assert len(banded) == 1 and len(allwide) == 1
    # null carriers only ever add noise to the denominator
    assert banded[0].strength > allwide[0].strength


def test_spot_rejects_short_streams(codebook):
    with pytest.raises(ValueError):
        spot(IqFrame(np.ones(100, dtype=complex)), DetectorConfig(layout=LAY, codebook=codebook))


def test_event_serialization_roundtrip():
    events = [
        DetectionEvent(128, 7, 0.73125, -0.25, True, 3.5),
        DetectionEvent(512, 41, 0.951234567, 1.0, False, 12.25),
    ]
    parsed = parse_events(serialize_events(events))
    assert len(parsed) == 2
    for original, back in zip(events, parsed):
        assert back.interval_start == original.interval_start
        assert back.codeword_index == original.codeword_index
        assert back.com_valid == original.com_valid
        assert back.strength == pytest.approx(original.strength, rel=1e-8)
        assert back.com_position == pytest.approx(original.com_position, rel=1e-8)
        assert back.snr_estimate_db == pytest.approx(original.snr_estimate_db, rel=1e-8)
    with pytest.raises(ValueError):
        DetectionEvent.from_line("1\t2\t3")

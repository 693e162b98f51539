"""IQ file format: interleaved float32 samples plus a JSON sidecar."""

import numpy as np
import pytest

from tagspot.carriers import REFERENCE_LAYOUT
from tagspot.iqfile import layout_from_metadata, read_iq, sidecar_path, write_iq
from tagspot.waveform import IqFrame


def _random_frame(seed, size=256, sample_rate=1.0):
    rng = np.random.default_rng(seed)
    samples = rng.normal(size=size) + 1j * rng.normal(size=size)
    return IqFrame(samples, sample_rate)


def test_roundtrip_is_exact_after_float32_quantization(tmp_path):
    frame = _random_frame(1)
    path = tmp_path / "frame.iq"
    side = write_iq(path, frame)
    assert side == sidecar_path(path)
    back, meta = read_iq(path)
    expected = frame.samples.real.astype(np.float32).astype(
        np.float64
    ) + 1j * frame.samples.imag.astype(np.float32).astype(np.float64)
    assert np.array_equal(back.samples, expected)
    assert meta["sample_rate"] == 1.0


def test_rewrite_is_byte_identical(tmp_path):
    frame = _random_frame(2)
    first, second = tmp_path / "a.iq", tmp_path / "b.iq"
    write_iq(first, frame, layout=REFERENCE_LAYOUT)
    back, meta = read_iq(first)
    write_iq(second, back, layout=layout_from_metadata(meta))
    assert first.read_bytes() == second.read_bytes()
    assert sidecar_path(first).read_text() == sidecar_path(second).read_text()


def test_sidecar_carries_layout_and_extra_fields(tmp_path):
    frame = _random_frame(3, sample_rate=2e6)
    path = tmp_path / "frame.iq"
    write_iq(path, frame, layout=REFERENCE_LAYOUT, extra={"origin": "unit-test"})
    back, meta = read_iq(path)
    assert back.sample_rate == 2e6
    assert meta["origin"] == "unit-test"
    assert layout_from_metadata(meta) == REFERENCE_LAYOUT
    assert layout_from_metadata({}) is None


def test_extra_fields_cannot_shadow_core_metadata(tmp_path):
    with pytest.raises(ValueError):
        write_iq(tmp_path / "x.iq", _random_frame(4), extra={"sample_rate": 9.0})


def test_missing_sidecar_defaults(tmp_path):
    path = tmp_path / "bare.iq"
    write_iq(path, _random_frame(5))
    sidecar_path(path).unlink()
    back, meta = read_iq(path)
    assert meta == {}
    assert back.sample_rate == 1.0


def test_read_rejects_ragged_or_empty_files(tmp_path):
    ragged = tmp_path / "ragged.iq"
    ragged.write_bytes(b"\x00" * 12)  # one and a half sample pairs
    with pytest.raises(ValueError):
        read_iq(ragged)
    empty = tmp_path / "empty.iq"
    empty.write_bytes(b"")
    with pytest.raises(ValueError):
        read_iq(empty)

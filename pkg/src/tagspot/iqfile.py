"""IQ sample file I/O.

Format: headerless little-endian 32-bit floats, interleaved I then Q per
sample. Metadata travels in a JSON sidecar at ``<path>.json`` holding the
sample rate, optionally the carrier layout, and any extra fields the writer
supplies. Reading a file and writing it back reproduces the bytes exactly;
note the float32 quantization happens once, on the first write.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .carriers import CarrierLayout, layout_from_dict, layout_to_dict
from .waveform import IqFrame


def sidecar_path(path: "str | Path") -> Path:
    return Path(str(path) + ".json")


def write_iq(
    path: "str | Path",
    frame: IqFrame,
    layout: "CarrierLayout | None" = None,
    extra: "dict | None" = None,
) -> Path:
    """Write samples and sidecar; returns the sidecar path."""
    path = Path(path)
    samples = frame.samples
    interleaved = np.empty(2 * samples.size, dtype="<f4")
    interleaved[0::2] = samples.real.astype(np.float32)
    interleaved[1::2] = samples.imag.astype(np.float32)
    path.write_bytes(interleaved.tobytes())
    meta: dict = {"sample_rate": frame.sample_rate}
    if layout is not None:
        meta["layout"] = layout_to_dict(layout)
    if extra:
        overlap = set(extra) & set(meta)
        if overlap:
            raise ValueError(f"extra metadata collides with {sorted(overlap)}")
        meta.update(extra)
    side = sidecar_path(path)
    side.write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    return side


def read_iq(path: "str | Path") -> "tuple[IqFrame, dict]":
    """Read samples plus sidecar metadata (empty dict when absent)."""
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) % 8 != 0:
        raise ValueError(
            f"{path}: length {len(raw)} is not a whole number of float32 I/Q pairs"
        )
    if len(raw) == 0:
        raise ValueError(f"{path}: empty IQ file")
    interleaved = np.frombuffer(raw, dtype="<f4")
    samples = interleaved[0::2].astype(np.float64) + 1j * interleaved[1::2].astype(
        np.float64
    )
    meta: dict = {}
    side = sidecar_path(path)
    if side.exists():
        meta = json.loads(side.read_text())
    frame = IqFrame(samples, sample_rate=float(meta.get("sample_rate", 1.0)))
    return frame, meta


def layout_from_metadata(meta: dict) -> "CarrierLayout | None":
    if "layout" not in meta:
        return None
    return layout_from_dict(meta["layout"])

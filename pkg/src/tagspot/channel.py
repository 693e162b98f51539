"""Calibrated channel impairments: noise, frequency offset, fading, mixing.

SNR convention, used by every dB figure in this package: with per-tone
signal power p on the beta active thin carriers of each active wide carrier
and per-thin-carrier noise power n,

    SNR = beta * p / (alpha * n)

i.e. signal and noise powers are both accounted per wide carrier. For the
reference layout (beta 4, alpha 8) this makes p/n = 2 * 10^(snr_db/10).
Noise is calibrated per FFT bin: under the unitary transform, adding
complex Gaussian samples of variance n puts expected power n in every thin
carrier.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .carriers import CarrierLayout, REFERENCE_LAYOUT
from .waveform import IqFrame, TagSpectrum

FADING_MODELS = ("none", "narrowband", "wideband-rayleigh")


@dataclass(frozen=True)
class InterferenceSpec:
    """Additive interference riding on top of the signal.

    sir_db is measured over the overlapping time support only. kind names
    the interference source; only "data" (payload-like frames) is built in.
    """

    kind: str = "data"
    sir_db: float = 0.0
    offset_samples: int = 0

    def __post_init__(self) -> None:
        if self.kind != "data":
            raise ValueError(f"unknown interference kind {self.kind!r}")


@dataclass(frozen=True)
class ChannelSpec:
    """One channel condition: SNR, frequency offset, fading, interference.

    cfo is in thin-carrier widths. The detector tolerates offsets up to two
    thin carriers; cfo_limit exists so configs reject accidental units
    errors, not as a physical bound.
    """

    snr_db: float = 0.0
    cfo: float = 0.0
    fading: str = "none"
    interference: "InterferenceSpec | None" = None
    cfo_limit: float = 16.0

    def __post_init__(self) -> None:
        if self.fading not in FADING_MODELS:
            raise ValueError(
                f"fading must be one of {FADING_MODELS}, got {self.fading!r}"
            )
        if not np.isfinite(self.cfo) or abs(self.cfo) > self.cfo_limit:
            raise ValueError(f"cfo {self.cfo} outside +-{self.cfo_limit}")

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.interference is None:
            del out["interference"]
        return out

    @staticmethod
    def from_dict(data: dict) -> "ChannelSpec":
        kwargs = dict(data)
        if "interference" in kwargs and kwargs["interference"] is not None:
            kwargs["interference"] = InterferenceSpec(**kwargs["interference"])
        return ChannelSpec(**kwargs)


def noise_power_for_snr(
    snr_db: float, per_active_thin_power: float, layout: CarrierLayout
) -> float:
    """Per-thin-carrier noise power n giving the requested SNR."""
    if not per_active_thin_power > 0:
        raise ValueError("per-tone signal power must be positive")
    beta = layout.active_thin_per_wide
    alpha = layout.thin_per_wide
    return beta * per_active_thin_power / (alpha * 10.0 ** (snr_db / 10.0))


def apply_awgn(frame: IqFrame, n: float, rng: np.random.Generator) -> IqFrame:
    """Add circular complex Gaussian noise with per-thin-carrier power n."""
    if n < 0:
        raise ValueError("noise power must be nonnegative")
    if n == 0:
        return frame
    scale = np.sqrt(n / 2.0)
    noise = rng.normal(scale=scale, size=(len(frame), 2))
    samples = frame.samples + noise[:, 0] + 1j * noise[:, 1]
    return IqFrame(samples, frame.sample_rate)


def apply_cfo(
    frame: IqFrame, cfo: float, layout: CarrierLayout = REFERENCE_LAYOUT
) -> IqFrame:
    """Rotate sample k by exp(2j pi cfo k / fft_size); cfo in thin widths.

    A pure per-sample phase spin, so power is preserved exactly; integer
    cfo shifts every thin carrier by that many bins.
    """
    if cfo == 0:
        return frame
    k = np.arange(len(frame))
    rotation = np.exp(2j * np.pi * cfo * k / layout.fft_size)
    return IqFrame(frame.samples * rotation, frame.sample_rate)


def _fading_gains(
    model: str, layout: CarrierLayout, rng: np.random.Generator
) -> np.ndarray:
    if model == "narrowband":
        # constant amplitude, circularly uniform phase, common to all carriers
        phase = rng.random() * 2.0 * np.pi
        return np.full(layout.fft_size, np.exp(1j * phase))
    # wideband-rayleigh: independent unit-mean-square complex Gaussian per thin
    pairs = rng.normal(scale=np.sqrt(0.5), size=(layout.fft_size, 2))
    return pairs[:, 0] + 1j * pairs[:, 1]


def apply_fading(
    x: "TagSpectrum | IqFrame",
    model: str,
    rng: np.random.Generator,
    layout: CarrierLayout = REFERENCE_LAYOUT,
) -> "TagSpectrum | IqFrame":
    """Apply a fading draw in the frequency domain.

    Spectra take per-thin-carrier gains directly. Frames must be exactly one
    tag frame long: the body is transformed, scaled, transformed back, and
    the cyclic prefix is rebuilt from the faded body so the prefix property
    survives.
    """
    if model not in FADING_MODELS:
        raise ValueError(f"fading must be one of {FADING_MODELS}, got {model!r}")
    if model == "none":
        return x
    if isinstance(x, TagSpectrum):
        if len(x) != layout.fft_size:
            raise ValueError("spectrum length does not match layout")
        return TagSpectrum(x.amplitudes * _fading_gains(model, layout, rng))
    if model == "narrowband":
        phase = rng.random() * 2.0 * np.pi
        return IqFrame(x.samples * np.exp(1j * phase), x.sample_rate)
    if len(x) != layout.frame_len:
        raise ValueError(
            f"frame length {len(x)} != one tag frame ({layout.frame_len}); "
            "wideband fading is defined per tag frame"
        )
    body = x.samples[layout.cp_len :]
    spectrum = np.fft.fftshift(np.fft.fft(body)) / np.sqrt(layout.fft_size)
    spectrum = spectrum * _fading_gains(model, layout, rng)
    faded = np.fft.ifft(np.fft.ifftshift(spectrum)) * np.sqrt(layout.fft_size)
    samples = np.concatenate([faded[-layout.cp_len :], faded])
    return IqFrame(samples, x.sample_rate)


def mix(frames: "list[tuple[IqFrame, int, complex]]") -> IqFrame:
    """Sample-wise sum of gain-scaled frames placed at sample offsets.

    The result is zero-padded to the longest extent. Sample rates must
    agree.
    """
    if not frames:
        raise ValueError("nothing to mix")
    rate = frames[0][0].sample_rate
    total = 0
    for frame, offset, _ in frames:
        if offset < 0:
            raise ValueError("offsets must be nonnegative")
        if frame.sample_rate != rate:
            raise ValueError("sample rates differ")
        total = max(total, offset + len(frame))
    out = np.zeros(total, dtype=np.complex128)
    for frame, offset, gain in frames:
        out[offset : offset + len(frame)] += gain * frame.samples
    return IqFrame(out, rate)


def gain_for_sir(
    signal: IqFrame,
    interference: IqFrame,
    interference_offset: int,
    sir_db: float,
) -> float:
    """Scale factor for the interference so the signal-to-interference power
    ratio over the overlapping time support equals sir_db.

    interference_offset is the interferer's start relative to the signal's
    start and may be negative.
    """
    lo = max(0, interference_offset)
    hi = min(len(signal), interference_offset + len(interference))
    if hi <= lo:
        raise ValueError("signal and interference do not overlap")
    p_sig = float(np.mean(np.abs(signal.samples[lo:hi]) ** 2))
    seg = interference.samples[lo - interference_offset : hi - interference_offset]
    p_int = float(np.mean(np.abs(seg) ** 2))
    if p_int == 0 or p_sig == 0:
        raise ValueError("zero power in the overlap region")
    return float(np.sqrt(p_sig / (p_int * 10.0 ** (sir_db / 10.0))))

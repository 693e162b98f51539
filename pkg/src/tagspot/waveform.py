"""Time-domain synthesis of tags and of data-like interference.

Transform convention, relied on by the detector and all power accounting:
spectra are arrays in ascending frequency order (see carriers), and the
forward/inverse transform pair is unitary, so the sum of |amplitude|^2 over
a spectrum equals the sum of |sample|^2 over the transform body (Parseval
with unit factor). ``total_power`` arguments below always mean that spectral
sum for one frame.

A tag frame is the unitary inverse transform of its spectrum with the last
``cp_len`` samples repeated in front as a cyclic prefix. Any window of
``fft_size`` consecutive samples taken from within one frame therefore holds
a cyclic rotation of the transform body and has the same power spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .carriers import CarrierLayout, WideCarrierMask


@dataclass(frozen=True, eq=False)
class IqFrame:
    """A finite run of complex baseband samples.

    sample_rate is carried as metadata only; all processing is in samples.
    """

    samples: np.ndarray
    sample_rate: float = 1.0

    def __post_init__(self) -> None:
        s = np.asarray(self.samples, dtype=np.complex128)
        if s.ndim != 1 or s.size == 0:
            raise ValueError("samples must be a nonempty 1-D array")
        if not np.all(np.isfinite(s)):
            raise ValueError("samples must be finite")
        if not self.sample_rate > 0:
            raise ValueError("sample_rate must be positive")
        object.__setattr__(self, "samples", s)

    def __len__(self) -> int:
        return self.samples.size


@dataclass(frozen=True, eq=False)
class TagSpectrum:
    """Per-thin-carrier complex amplitudes, ascending frequency order."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.amplitudes, dtype=np.complex128)
        if a.ndim != 1 or a.size == 0:
            raise ValueError("amplitudes must be a nonempty 1-D array")
        if not np.all(np.isfinite(a)):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amplitudes", a)

    def __len__(self) -> int:
        return self.amplitudes.size

    @property
    def total_power(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def mean_power(frame: IqFrame) -> float:
    """Mean per-sample power of a frame."""
    return float(np.mean(np.abs(frame.samples) ** 2))


def active_thin_bins(mask: WideCarrierMask, layout: CarrierLayout) -> np.ndarray:
    """Thin-carrier indices carrying tones for a mask, ascending."""
    offsets = np.asarray(layout.active_thin_offsets)
    wides = np.asarray(mask.sorted_indices())
    return (wides[:, None] * layout.thin_per_wide + offsets[None, :]).ravel()


def build_tag_spectrum(
    mask: WideCarrierMask,
    layout: CarrierLayout,
    total_power: float,
    rng: np.random.Generator,
) -> TagSpectrum:
    """Equal-magnitude tones with independent uniform phases on the mask's
    central thin carriers; the squared magnitudes sum to total_power."""
    mask.validate(layout)
    if total_power < 0:
        raise ValueError("total_power must be nonnegative")
    bins = active_thin_bins(mask, layout)
    amplitude = np.sqrt(total_power / bins.size)
    phases = rng.random(bins.size) * (2.0 * np.pi)
    amplitudes = np.zeros(layout.fft_size, dtype=np.complex128)
    amplitudes[bins] = amplitude * np.exp(1j * phases)
    return TagSpectrum(amplitudes)


def synthesize_tag(spectrum: TagSpectrum, layout: CarrierLayout) -> IqFrame:
    """Unitary inverse transform of the spectrum plus cyclic prefix."""
    if len(spectrum) != layout.fft_size:
        raise ValueError(
            f"spectrum length {len(spectrum)} != fft_size {layout.fft_size}"
        )
    body = np.fft.ifft(np.fft.ifftshift(spectrum.amplitudes)) * np.sqrt(
        layout.fft_size
    )
    samples = np.concatenate([body[-layout.cp_len :], body])
    return IqFrame(samples)


def spectrum_of_body(body: np.ndarray, layout: CarrierLayout) -> np.ndarray:
    """Forward unitary transform of one transform body, ascending order.

    Inverse of synthesize_tag restricted to the body samples.
    """
    body = np.asarray(body, dtype=np.complex128)
    if body.size != layout.fft_size:
        raise ValueError(f"body length {body.size} != fft_size {layout.fft_size}")
    return np.fft.fftshift(np.fft.fft(body)) / np.sqrt(layout.fft_size)


def papr(frame: IqFrame) -> float:
    """Peak-to-average power ratio in dB."""
    power = np.abs(frame.samples) ** 2
    mean = power.mean()
    if mean == 0:
        raise ValueError("PAPR undefined for an all-zero frame")
    return float(10.0 * np.log10(power.max() / mean))


@dataclass(frozen=True)
class PaprLimitedTag:
    """Result of the redraw-until-compliant synthesis loop."""

    frame: IqFrame
    papr_db: float
    attempts: int
    met_cap: bool


def synthesize_tag_papr_limited(
    mask: WideCarrierMask,
    layout: CarrierLayout,
    total_power: float,
    papr_cap_db: float,
    rng: np.random.Generator,
    max_attempts: int = 100,
) -> PaprLimitedTag:
    """Redraw tag phases until the frame PAPR is at or below the cap.

    After max_attempts draws the lowest-PAPR attempt is returned with
    met_cap False. total_power must be positive (PAPR is undefined at zero).
    """
    if max_attempts < 1:
        raise ValueError("max_attempts must be at least 1")
    if not total_power > 0:
        raise ValueError("total_power must be positive")
    best_frame = None
    best_papr = np.inf
    for attempt in range(1, max_attempts + 1):
        frame = synthesize_tag(
            build_tag_spectrum(mask, layout, total_power, rng), layout
        )
        value = papr(frame)
        if value < best_papr:
            best_frame, best_papr = frame, value
        if value <= papr_cap_db:
            return PaprLimitedTag(frame, value, attempt, True)
    return PaprLimitedTag(best_frame, best_papr, max_attempts, False)


def interference_occupied_carriers(layout: CarrierLayout) -> tuple[int, ...]:
    """Wide carriers occupied by the data-like interferer: 48 of 64 for the
    reference layout, symmetric around the silent DC carrier."""
    occupied = 3 * layout.wide_total // 4
    dc = layout.wide_total // 2
    half = occupied // 2
    return tuple(range(dc - half, dc)) + tuple(range(dc + 1, dc + 1 + half))


def synthesize_data_interference(
    layout: CarrierLayout,
    n_frames: int,
    total_power: float,
    rng: np.random.Generator,
) -> IqFrame:
    """A stream of payload-like frames with a flat occupied spectrum.

    Each frame rides the wide-carrier grid directly: a transform of length
    wide_total (one bin per wide carrier), 4-point constellation symbols of
    equal magnitude on the occupied carriers, and the same 1/4 cyclic prefix
    fraction as tags. total_power is the spectral power of ONE frame, so a
    frame is wide_total * (1 + cp_fraction) samples, 80 for the reference
    layout, and 8 frames span exactly one tag frame.
    """
    if n_frames < 1:
        raise ValueError("n_frames must be at least 1")
    if total_power < 0:
        raise ValueError("total_power must be nonnegative")
    body_len = layout.wide_total
    cp = int(body_len * layout.cp_fraction)
    occupied = np.asarray(interference_occupied_carriers(layout))
    amplitude = np.sqrt(total_power / occupied.size)
    frames = []
    for _ in range(n_frames):
        phases = rng.integers(0, 4, occupied.size) * (np.pi / 2) + np.pi / 4
        spectrum = np.zeros(body_len, dtype=np.complex128)
        spectrum[occupied] = amplitude * np.exp(1j * phases)
        body = np.fft.ifft(np.fft.ifftshift(spectrum)) * np.sqrt(body_len)
        frames.append(np.concatenate([body[-cp:], body]))
    return IqFrame(np.concatenate(frames))

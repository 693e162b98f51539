"""The sliding-window tag spotter.

Detection intervals are fft_size samples long and start every cp_len
samples, so a tag frame fully contained in the stream always covers at
least one interval completely (the cyclic prefix absorbs the residual
misalignment, leaving a cyclic rotation of the transform body with an
identical power spectrum).

Per interval the pipeline is: carrier-sense gate on total power against a
tracked noise floor, unitary FFT, fold to wide-carrier powers, tag strength
for every codeword, then a candidate requires max strength above gamma and
a valid center of mass. A candidate becomes an event only when no
overlapping interval produced a candidate of strictly larger strength
(ties resolve to the earliest interval, then the lowest codeword index).

Two denominator conventions exist for the strength ratio and both are
implemented: "all" divides by the power in all wide carriers, "band"
divides by the non-null carriers only. The null carriers contribute pure
noise to the ratio, so "band" reaches a given detection probability at a
lower SNR; it is the operational default. The analysis module quantifies
the gap between the two conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .carriers import CarrierLayout, WideCarrierMask
from .codebook import Codebook, mask_matrix
from .waveform import IqFrame

STRENGTH_DENOMINATORS = ("band", "all")


@dataclass(frozen=True)
class DetectorConfig:
    layout: CarrierLayout
    codebook: Codebook
    gamma: float = 0.62
    carrier_sense_snr_db: float = -1.0
    com_limit: "float | None" = None  # defaults to wide_total / 8
    noise_smoothing: float = 0.05
    denominator: str = "band"

    def __post_init__(self) -> None:
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must lie strictly between 0 and 1")
        if not 0 < self.noise_smoothing <= 1:
            raise ValueError("noise_smoothing must lie in (0, 1]")
        if self.denominator not in STRENGTH_DENOMINATORS:
            raise ValueError(
                f"denominator must be one of {STRENGTH_DENOMINATORS}, "
                f"got {self.denominator!r}"
            )
        if self.codebook.word_length != self.layout.groups:
            raise ValueError("codebook word length does not match layout groups")

    @property
    def com_bound(self) -> float:
        if self.com_limit is not None:
            return self.com_limit
        return self.layout.wide_total / 8.0


@dataclass(frozen=True)
class DetectionEvent:
    interval_start: int
    codeword_index: int
    strength: float
    com_position: float
    com_valid: bool
    snr_estimate_db: float

    def to_line(self) -> str:
        return (
            f"{self.interval_start}\t{self.codeword_index}\t"
            f"{self.strength:.9g}\t{self.com_position:.9g}\t"
            f"{self.snr_estimate_db:.9g}\t{int(self.com_valid)}"
        )

    @staticmethod
    def from_line(line: str) -> "DetectionEvent":
        parts = line.split("\t")
        if len(parts) != 6:
            raise ValueError(f"malformed event line: {line!r}")
        return DetectionEvent(
            interval_start=int(parts[0]),
            codeword_index=int(parts[1]),
            strength=float(parts[2]),
            com_position=float(parts[3]),
            snr_estimate_db=float(parts[4]),
            com_valid=bool(int(parts[5])),
        )


def fold_spectrum(fft_bins: np.ndarray, layout: CarrierLayout) -> np.ndarray:
    """Wide-carrier powers from one FFT, natural (numpy) bin order in,
    ascending frequency order out. Sums are exact regroupings, so total
    power is conserved bit for bit up to float summation order."""
    bins = np.asarray(fft_bins)
    if bins.shape != (layout.fft_size,):
        raise ValueError(f"expected {layout.fft_size} bins, got {bins.shape}")
    ascending = np.fft.fftshift(bins)
    power = np.abs(ascending) ** 2
    return power.reshape(layout.wide_total, layout.thin_per_wide).sum(axis=1)


def tag_strength(wide_powers: np.ndarray, mask: WideCarrierMask) -> float:
    """In-mask power over total power across ALL wide carriers."""
    powers = np.asarray(wide_powers, dtype=np.float64)
    if np.any(powers < 0):
        raise ValueError("powers must be nonnegative")
    total = powers.sum()
    if total == 0:
        raise ValueError("tag strength undefined for all-zero powers")
    return float(powers[list(mask.sorted_indices())].sum() / total)


def tag_strength_banded(
    wide_powers: np.ndarray, mask: WideCarrierMask, layout: CarrierLayout
) -> float:
    """In-mask power over the power in non-null carriers only."""
    powers = np.asarray(wide_powers, dtype=np.float64)
    if np.any(powers < 0):
        raise ValueError("powers must be nonnegative")
    total = powers[list(layout.band_wide)].sum()
    if total == 0:
        raise ValueError("tag strength undefined for all-zero powers")
    return float(powers[list(mask.sorted_indices())].sum() / total)


def center_of_mass(
    wide_powers: np.ndarray, layout: CarrierLayout
) -> "tuple[float, bool]":
    """Power-weighted mean carrier position, centered on the band midpoint.

    Valid when the position lies in the central quarter of the band,
    |position| <= wide_total / 8.
    """
    powers = np.asarray(wide_powers, dtype=np.float64)
    total = powers.sum()
    if total == 0:
        raise ValueError("center of mass undefined for all-zero powers")
    centered = np.arange(layout.wide_total) - (layout.wide_total - 1) / 2.0
    position = float((centered * powers).sum() / total)
    return position, abs(position) <= layout.wide_total / 8.0


def noise_tracker_update(
    current_estimate: "float | None", interval_power: float, smoothing: float
) -> float:
    """Exponential moving average of interval power; None seeds directly."""
    if not 0 < smoothing <= 1:
        raise ValueError("smoothing must lie in (0, 1]")
    if current_estimate is None:
        return interval_power
    return (1.0 - smoothing) * current_estimate + smoothing * interval_power


@dataclass(frozen=True)
class SpotReport:
    """Events plus interval accounting from one spotter run."""

    events: "tuple[DetectionEvent, ...]"
    windows_total: int
    windows_gated: int


def spot_report(samples: IqFrame, config: DetectorConfig) -> SpotReport:
    """Run the spotter over a sample stream.

    The noise tracker seeds on the first interval and is updated by every
    interval that fails the candidate test (including carrier-sense-gated
    ones, whose power is already in hand); candidate intervals leave it
    frozen so tag power is not absorbed into the floor.
    """
    layout = config.layout
    n = layout.fft_size
    if len(samples) < n:
        raise ValueError(f"need at least {n} samples, got {len(samples)}")
    stream = samples.samples
    masks = mask_matrix(config.codebook, layout).astype(np.float64)
    band = np.asarray(layout.band_wide)
    root_n = np.sqrt(n)

    candidates: "list[tuple[int, int, float, float, float]]" = []
    noise_estimate: "float | None" = None
    windows_total = 0
    windows_gated = 0
    for start in range(0, len(stream) - n + 1, layout.cp_len):
        windows_total += 1
        window = stream[start : start + n]
        power = float(np.mean(np.abs(window) ** 2))
        if noise_estimate is None or noise_estimate == 0:
            # no floor yet, or a floor seeded by pure silence
            snr_estimate_db = np.inf
        elif power == 0:
            snr_estimate_db = -np.inf
        else:
            # carrier-sense SNR estimate: interval power over tracked floor
            snr_estimate_db = 10.0 * np.log10(power / noise_estimate)
        if snr_estimate_db <= config.carrier_sense_snr_db or power == 0:
            windows_gated += 1
            noise_estimate = noise_tracker_update(
                noise_estimate, power, config.noise_smoothing
            )
            continue
        wide = fold_spectrum(np.fft.fft(window) / root_n, layout)
        numerators = masks @ wide
        denominator = wide.sum() if config.denominator == "all" else wide[band].sum()
        best = int(np.argmax(numerators))
        strength = float(numerators[best] / denominator)
        position, com_ok = center_of_mass(wide, layout)
        com_ok = abs(position) <= config.com_bound
        if strength > config.gamma and com_ok:
            candidates.append((start, best, strength, position, snr_estimate_db))
        else:
            noise_estimate = noise_tracker_update(
                noise_estimate, power, config.noise_smoothing
            )

    events = []
    for i, (start, idx, strength, position, snr_db) in enumerate(candidates):
        suppressed = False
        for j, other in enumerate(candidates):
            if j == i or abs(other[0] - start) >= n:
                continue
            if other[2] > strength or (other[2] == strength and other[0] < start):
                suppressed = True
                break
        if not suppressed:
            events.append(
                DetectionEvent(
                    interval_start=start,
                    codeword_index=idx,
                    strength=strength,
                    com_position=position,
                    com_valid=True,
                    snr_estimate_db=snr_db,
                )
            )
    return SpotReport(
        events=tuple(events),
        windows_total=windows_total,
        windows_gated=windows_gated,
    )


def spot(samples: IqFrame, config: DetectorConfig) -> "list[DetectionEvent]":
    """Events from spot_report, for callers without accounting needs."""
    return list(spot_report(samples, config).events)


def serialize_events(events: "list[DetectionEvent]") -> str:
    """Line-delimited event stream with a column header comment."""
    lines = ["# interval_start\tcodeword_index\tstrength\tcom_position\t"
             "snr_estimate_db\tcom_valid"]
    lines.extend(e.to_line() for e in events)
    return "\n".join(lines) + "\n"


def parse_events(text: str) -> "list[DetectionEvent]":
    events = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        events.append(DetectionEvent.from_line(line))
    return events

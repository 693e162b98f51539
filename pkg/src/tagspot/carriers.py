"""Carrier geometry shared by the waveform, detector, and analysis code.

Frequency indexing convention, used everywhere in this package: spectra are
arrays in ascending frequency order, so index 0 is the most negative
frequency and DC sits at ``fft_size // 2``. Thin carrier ``j`` belongs to
wide carrier ``j // thin_per_wide``. The DC wide carrier is therefore
``wide_total // 2``.

Signaling occupies wide carriers. A handful of wide carriers are kept
permanently silent (the DC carrier plus guard bands at both spectrum edges,
mirroring common OFDM practice); the remaining ones are paired into groups
of two adjacent carriers, and a transmitted tag activates exactly one
carrier of every group.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CarrierLayout:
    """Static description of the carrier grid.

    thin_per_wide: thin carriers folded into one wide carrier.
    active_thin_per_wide: thin carriers that actually carry tones inside an
        active wide carrier (the central block; the rest act as guards).
    groups: number of two-carrier groups available for signaling.
    wide_total: number of wide carriers across the whole band.
    null_wide: wide carrier indices that are never activated.
    fft_size: transform length in thin-carrier bins.
    cp_fraction: cyclic prefix length as a fraction of fft_size.
    """

    thin_per_wide: int = 8
    active_thin_per_wide: int = 4
    groups: int = 28
    wide_total: int = 64
    null_wide: frozenset[int] = field(
        default_factory=lambda: frozenset({0, 1, 2, 32, 60, 61, 62, 63})
    )
    fft_size: int = 512
    cp_fraction: float = 0.25

    def __post_init__(self) -> None:
        if self.thin_per_wide <= 0 or self.fft_size <= 0 or self.wide_total <= 0:
            raise ValueError("carrier counts must be positive")
        if not 0 < self.active_thin_per_wide <= self.thin_per_wide:
            raise ValueError(
                "active_thin_per_wide must lie in [1, thin_per_wide], got "
                f"{self.active_thin_per_wide} of {self.thin_per_wide}"
            )
        if self.wide_total * self.thin_per_wide != self.fft_size:
            raise ValueError(
                f"wide_total * thin_per_wide = {self.wide_total * self.thin_per_wide}"
                f" must equal fft_size = {self.fft_size}"
            )
        if 2 * self.groups + len(self.null_wide) != self.wide_total:
            raise ValueError(
                "2 * groups + null carriers must cover all wide carriers: "
                f"2*{self.groups} + {len(self.null_wide)} != {self.wide_total}"
            )
        if any(not 0 <= w < self.wide_total for w in self.null_wide):
            raise ValueError("null_wide contains out-of-range indices")
        cp = self.fft_size * self.cp_fraction
        if cp != int(cp) or cp <= 0:
            raise ValueError(
                f"cp_fraction {self.cp_fraction} must yield a whole, positive "
                f"number of samples for fft_size {self.fft_size}"
            )

    @property
    def cp_len(self) -> int:
        """Cyclic prefix length in samples."""
        return int(self.fft_size * self.cp_fraction)

    @property
    def frame_len(self) -> int:
        """Samples in one tag frame (prefix plus transform body)."""
        return self.fft_size + self.cp_len

    @property
    def band_wide(self) -> tuple[int, ...]:
        """Non-null wide carrier indices in ascending frequency order."""
        return tuple(w for w in range(self.wide_total) if w not in self.null_wide)

    @property
    def group_map(self) -> tuple[tuple[int, int], ...]:
        """Two-carrier groups: consecutive non-null carriers, paired in
        ascending frequency order. Group g holds (first, second); a codeword
        bit of 0 activates the first carrier, 1 the second."""
        band = self.band_wide
        return tuple((band[2 * g], band[2 * g + 1]) for g in range(self.groups))

    @property
    def active_thin_offsets(self) -> tuple[int, ...]:
        """Offsets of the active (central) thin carriers inside a wide
        carrier's span of thin_per_wide bins."""
        start = (self.thin_per_wide - self.active_thin_per_wide) // 2
        return tuple(range(start, start + self.active_thin_per_wide))

    def wide_of_thin(self, thin_index: int) -> int:
        return thin_index // self.thin_per_wide

    def thin_bins_of_wide(self, wide_index: int) -> range:
        lo = wide_index * self.thin_per_wide
        return range(lo, lo + self.thin_per_wide)

    def centered_wide_index(self, wide_index: int) -> float:
        """Wide carrier index re-centered so the band midpoint is zero."""
        return wide_index - (self.wide_total - 1) / 2.0


@dataclass(frozen=True)
class WideCarrierMask:
    """The set of wide carriers activated by one codeword.

    Valid masks contain exactly one carrier from every group, hence exactly
    ``layout.groups`` carriers, and never touch a null carrier.
    """

    active: frozenset[int]

    def __post_init__(self) -> None:
        if any(not isinstance(w, int) or w < 0 for w in self.active):
            raise ValueError("mask indices must be nonnegative integers")

    def validate(self, layout: CarrierLayout) -> None:
        if len(self.active) != layout.groups:
            raise ValueError(
                f"mask weight {len(self.active)} != groups {layout.groups}"
            )
        bad = self.active & layout.null_wide
        if bad:
            raise ValueError(f"mask activates null carriers {sorted(bad)}")
        for g, (a, b) in enumerate(layout.group_map):
            hit = len(self.active & {a, b})
            if hit != 1:
                raise ValueError(
                    f"group {g} ({a},{b}) must contribute exactly one active "
                    f"carrier, found {hit}"
                )

    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.active))


#: The layout used by every numeric claim in this package's docs and tests.
REFERENCE_LAYOUT = CarrierLayout()


def layout_to_dict(layout: CarrierLayout) -> dict:
    """Plain-data form for config documents and IQ sidecar metadata."""
    return {
        "thin_per_wide": layout.thin_per_wide,
        "active_thin_per_wide": layout.active_thin_per_wide,
        "groups": layout.groups,
        "wide_total": layout.wide_total,
        "null_wide": sorted(layout.null_wide),
        "fft_size": layout.fft_size,
        "cp_fraction": layout.cp_fraction,
    }


def layout_from_dict(data: dict) -> CarrierLayout:
    known = {
        "thin_per_wide",
        "active_thin_per_wide",
        "groups",
        "wide_total",
        "null_wide",
        "fft_size",
        "cp_fraction",
    }
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown layout fields: {sorted(unknown)}")
    kwargs = dict(data)
    if "null_wide" in kwargs:
        kwargs["null_wide"] = frozenset(int(w) for w in kwargs["null_wide"])
    return CarrierLayout(**kwargs)

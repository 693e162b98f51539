"""Closed-form and Monte Carlo performance mathematics for the detector.

Statistical model, in per-thin-carrier noise units (every power below is
divided by n/2 so noise-only bins are chi-square with 2 degrees of freedom
per complex bin): over the 2c non-null wide carriers of a layout with c
groups, a transmitted tag splits the alpha*2c in-band thin carriers into

    P: the beta*c tone-bearing bins of the active carriers,
    Q: the (alpha-beta)*c guard bins of the active carriers,
    R: the alpha*c bins of the inactive carriers,

so with r = p/n (per-tone signal power over per-bin noise power),

    sum(P) ~ (1+r) chi2(2 beta c)          wideband (per-carrier Rayleigh)
    sum(P) ~ ncx2(2 beta c, 2 beta c r)    narrowband (constant amplitude)
    sum(Q) ~ chi2(2 (alpha-beta) c)
    sum(R) ~ chi2(2 alpha c)

and a detection fires when (P+Q)/(P+Q+R) exceeds gamma, equivalently
(P+Q)/R > gamma/(1-gamma). The "include_null_noise" switches add the null
carriers' noise (chi2 with 2*alpha*len(null_wide) degrees of freedom) to
the denominator, modeling the strength convention that divides by all wide
carriers rather than band-only ones; both conventions are exposed so their
gap is measured rather than assumed away.

SNR follows the channel convention SNR = beta p / (alpha n), so
r = (alpha/beta) * 10^(snr_db/10).

All Monte Carlo estimators draw with numpy's seeded Generator in fixed-size
chunks whose seeds derive from (seed, chunk index); results are therefore
reproducible and independent of how the chunks would be scheduled. Binomial
uncertainties are 95% Wilson intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special, stats

from .carriers import CarrierLayout, REFERENCE_LAYOUT
from .codebook import Codebook, mask_matrix

FADING_ANALYSIS_MODELS = ("wideband", "narrowband")

_MC_CHUNK = 1 << 15


@dataclass(frozen=True)
class AnalysisModel:
    """One operating point of the statistical model."""

    layout: CarrierLayout = REFERENCE_LAYOUT
    snr_db: float = 0.0
    fading: str = "wideband"
    gamma: float = 0.62

    def __post_init__(self) -> None:
        if self.fading not in FADING_ANALYSIS_MODELS:
            raise ValueError(
                f"fading must be one of {FADING_ANALYSIS_MODELS}, "
                f"got {self.fading!r}"
            )
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must lie strictly between 0 and 1")

    @property
    def p_over_n(self) -> float:
        """Per-tone signal power over per-thin-carrier noise power."""
        lay = self.layout
        return (
            lay.thin_per_wide
            / lay.active_thin_per_wide
            * 10.0 ** (self.snr_db / 10.0)
        )


def _wilson_ci(hits: int, trials: int) -> "tuple[float, float]":
    ci = stats.binomtest(hits, trials).proportion_ci(
        confidence_level=0.95, method="wilson"
    )
    return float(ci.low), float(ci.high)


def _unit_gauss_nodes(n: int) -> "tuple[np.ndarray, np.ndarray]":
    """Gauss-Legendre nodes and weights mapped to (0, 1)."""
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


# ---------------------------------------------------------------------------
# leakage of off-grid tones


def leakage_single(k: "float | np.ndarray", delta: "float | np.ndarray"):
    """Power fraction a unit tone leaks into a bin k carriers away when the
    tone sits delta bins off the grid. sinc^2(k + delta); 1 at k = delta = 0
    by continuity, 0 at integer spacings, bounded by 1/(k+delta)^2."""
    return np.sinc(np.asarray(k, dtype=np.float64) + delta) ** 2


def leakage_block(k: int) -> float:
    """Bound on the power a half-line block of unit carriers leaks into a
    bin k positions outside it: pi^2/6 minus the first k-1 Basel terms."""
    if k < 1:
        raise ValueError("k must be at least 1")
    partial = sum(1.0 / (c * c) for c in range(1, k))
    return np.pi**2 / 6.0 - partial


def expected_offset_leak(
    max_offset: float,
    layout: CarrierLayout = REFERENCE_LAYOUT,
    offset_nodes: int = 64,
) -> float:
    """Expected fraction of tag power landing outside the tag's own active
    carriers, for a frequency offset uniform on (0, max_offset] thin widths.

    Expectation is over the offset AND over random codewords: power leaking
    into the active carrier of another group is not lost, and each group's
    two carriers are active with probability 1/2 each. Destination weights
    per source carrier: own span 1, group partner 0, other groups' spans
    1/2, null carriers and off-grid bins 0. The per-tone leak concentrates
    in the source carrier's immediate neighborhood, so this tag-level figure
    sits well below the single-tone out-of-carrier leak.
    """
    if not max_offset > 0:
        raise ValueError("max_offset must be positive")
    u, wu = _unit_gauss_nodes(offset_nodes)
    deltas = max_offset * u
    partner: "dict[int, int]" = {}
    for a, b in layout.group_map:
        partner[a] = b
        partner[b] = a
    k_grid = np.arange(layout.fft_size, dtype=np.float64)
    offsets = np.asarray(layout.active_thin_offsets, dtype=np.float64)
    alpha = layout.thin_per_wide
    retained = np.zeros(offset_nodes)
    for w in layout.band_wide:
        weights = np.zeros(layout.fft_size)
        for v in layout.band_wide:
            weights[v * alpha : (v + 1) * alpha] = 0.5
        weights[w * alpha : (w + 1) * alpha] = 1.0
        pw = partner[w]
        weights[pw * alpha : (pw + 1) * alpha] = 0.0
        sources = w * alpha + offsets
        # args: (delta, tone, bin)
        args = k_grid[None, None, :] - sources[None, :, None] - deltas[:, None, None]
        spread = np.sinc(args) ** 2
        retained += (spread * weights[None, None, :]).sum(axis=2).mean(axis=1)
    retained /= len(layout.band_wide)
    return float(np.sum(wu * (1.0 - retained)))


# ---------------------------------------------------------------------------
# single-tag closed forms


def _denominator_dof(layout: CarrierLayout, include_null_noise: bool) -> int:
    dof = 2 * layout.thin_per_wide * 2 * layout.groups
    if include_null_noise:
        dof += 2 * layout.thin_per_wide * len(layout.null_wide)
    return dof


def pf_single(
    gamma: float,
    layout: CarrierLayout = REFERENCE_LAYOUT,
    include_null_noise: bool = False,
) -> float:
    """Per-interval false alarm probability for one codeword.

    Noise only, in-mask and out-of-mask powers are independent chi-squares
    U ~ chi2(dof_num) and V ~ chi2(dof_den), so the strength U/(U+V) is
    Beta(dof_num/2, dof_den/2) distributed and the test is equivalently an
    F(dof_num, dof_den) tail. Evaluated as the regularized incomplete beta
    upper tail at gamma itself, which keeps the symmetric reference-layout
    band case exact: pf_single(0.5) = 0.5 (median of F(448, 448) is 1).
    """
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie strictly between 0 and 1")
    dof_num = 2 * layout.thin_per_wide * layout.groups
    dof_den = _denominator_dof(layout, include_null_noise) - dof_num
    return float(special.betaincc(dof_num / 2, dof_den / 2, gamma))


def _numerator_mixture(
    model: AnalysisModel, dof_x: int, dof_y: int
) -> "tuple[np.ndarray, np.ndarray]":
    """Weights and dofs expressing the in-mask power sum as a mixture of
    central chi-square distributions.

    With per-tone Rayleigh fading the tone sum is (1 + r) * chi2(dof_x),
    whose expansion over chi2(dof_x + 2k) has negative-binomial weights
    nbinom(k; dof_x / 2, 1 / (1 + r)). With a flat channel it is
    noncentral chi-square ncx2(dof_x, dof_x * r), whose expansion has
    Poisson(dof_x * r / 2) weights. Adding the independent guard-bin sum
    chi2(dof_y) shifts every component's dof by dof_y. Weights are
    positive and sum to 1, so truncating at cumulative mass 1 - 2e-16
    bounds the error at machine level.
    """
    r = model.p_over_n
    base = float(dof_x + dof_y)
    if r == 0:
        return np.ones(1), np.asarray([base])
    if model.fading == "narrowband":
        comp = stats.poisson(0.5 * dof_x * r)
    else:
        comp = stats.nbinom(0.5 * dof_x, 1.0 / (1.0 + r))
    k_lo = max(int(comp.ppf(1e-16)) - 2, 0)
    k_hi = int(comp.isf(1e-16)) + 3
    k = np.arange(k_lo, k_hi)
    weights = comp.pmf(k)
    # renormalize: pmf rounding at large means drifts the sum off 1
    return weights / weights.sum(), base + 2.0 * k


def pd_single(
    gamma: float,
    model: AnalysisModel,
    include_null_noise: bool = False,
) -> float:
    """Per-interval detection probability for the transmitted codeword.

    Evaluates P((X + Y) / (X + Y + Z) > gamma) exactly, where X is the
    tone-bin power sum, Y the guard-bin sum and Z the out-of-mask noise
    sum: conditioned on the mixture index of _numerator_mixture, X + Y is
    a central chi-square independent of Z, so each component's strength is
    Beta distributed and its exceedance a regularized incomplete beta
    tail, exactly as in pf_single. At p/n = 0 the mixture collapses to a
    single term and the value reduces to pf_single identically.
    """
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie strictly between 0 and 1")
    lay = model.layout
    dof_x = 2 * lay.active_thin_per_wide * lay.groups
    dof_y = 2 * (lay.thin_per_wide - lay.active_thin_per_wide) * lay.groups
    dof_z = _denominator_dof(lay, include_null_noise) - dof_x - dof_y
    weights, dofs = _numerator_mixture(model, dof_x, dof_y)
    tails = special.betaincc(dofs / 2.0, dof_z / 2.0, gamma)
    # rounding in the mixture can overshoot 1 by a few ulp-scale terms
    return min(float(weights @ tails), 1.0)


def gamma_equivalent_snr_db(
    gamma: float,
    layout: CarrierLayout = REFERENCE_LAYOUT,
    include_null_noise: bool = True,
) -> float:
    """SNR at which the expected tag strength equals gamma, treating every
    bin as carrying its mean power (the naive equal-noise-per-bin balance):

        gamma = (beta c r + alpha c) / (beta c r + D)

    where D counts the denominator's noise bins (all fft_size bins for the
    all-carrier strength convention, the in-band ones otherwise). Solved
    for r = p/n and converted through SNR = beta p / (alpha n).
    """
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie strictly between 0 and 1")
    lay = layout
    beta_c = lay.active_thin_per_wide * lay.groups
    alpha_c = lay.thin_per_wide * lay.groups
    d_bins = lay.fft_size if include_null_noise else 2 * alpha_c
    r = (gamma * d_bins - alpha_c) / (beta_c * (1.0 - gamma))
    if r <= 0:
        raise ValueError(
            f"gamma {gamma} is at or below the flat-spectrum baseline; "
            "no positive SNR balances it"
        )
    snr_linear = lay.active_thin_per_wide / lay.thin_per_wide * r
    return float(10.0 * np.log10(snr_linear))


# ---------------------------------------------------------------------------
# family Monte Carlo

def _band_mask_matrix(codebook: Codebook, layout: CarrierLayout) -> np.ndarray:
    masks = mask_matrix(codebook, layout)
    band = np.asarray(layout.band_wide)
    return masks[:, band].astype(np.float64)


def _chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    return np.random.default_rng([seed, chunk_index])


def pf_family_mc(
    gamma: float,
    codebook: Codebook,
    layout: CarrierLayout,
    trials: int,
    seed: int,
) -> "tuple[float, tuple[float, float]]":
    """Noise-only false alarm probability of the whole family.

    Per draw the in-band wide-carrier powers are independent chi2(2 alpha)
    and the detector fires when any codeword's in-mask/out-of-mask ratio
    clears gamma/(1-gamma). Returns (estimate, 95% Wilson interval).
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    t = gamma / (1.0 - gamma)
    masks = _band_mask_matrix(codebook, layout)
    dof_wide = 2 * layout.thin_per_wide
    hits = 0
    for chunk_index, lo in enumerate(range(0, trials, _MC_CHUNK)):
        m = min(_MC_CHUNK, trials - lo)
        rng = _chunk_rng(seed, chunk_index)
        draws = rng.chisquare(dof_wide, size=(m, 2 * layout.groups))
        in_mask = draws @ masks.T
        total = draws.sum(axis=1)
        ratios = in_mask / (total[:, None] - in_mask)
        hits += int(np.count_nonzero(ratios.max(axis=1) > t))
    return hits / trials, _wilson_ci(hits, trials)


def pf_pairs_bound(
    gamma: float,
    layout: CarrierLayout,
    trials: int,
    seed: int,
) -> "tuple[float, tuple[float, float]]":
    """False alarm probability of the full exponential-size code: per group
    take the stronger carrier into the numerator and the weaker into the
    denominator. Upper-bounds pf_family_mc for every codebook, draw by draw
    when run with the same seed and trial count (the draws coincide)."""
    if trials < 1:
        raise ValueError("trials must be positive")
    t = gamma / (1.0 - gamma)
    dof_wide = 2 * layout.thin_per_wide
    hits = 0
    for chunk_index, lo in enumerate(range(0, trials, _MC_CHUNK)):
        m = min(_MC_CHUNK, trials - lo)
        rng = _chunk_rng(seed, chunk_index)
        draws = rng.chisquare(dof_wide, size=(m, 2 * layout.groups))
        pairs = draws.reshape(m, layout.groups, 2)
        numerator = pairs.max(axis=2).sum(axis=1)
        denominator = pairs.min(axis=2).sum(axis=1)
        hits += int(np.count_nonzero(numerator / denominator > t))
    return hits / trials, _wilson_ci(hits, trials)


def pm_mc(
    snr_db: float,
    codebook: Codebook,
    layout: CarrierLayout,
    fading: str,
    trials: int,
    seed: int,
) -> "tuple[float, tuple[float, float]]":
    """Misclassification probability: transmit a uniformly random codeword,
    decode by argmax strength over the family with no threshold, count
    wrong argmax. Noise units as in the module docstring."""
    if trials < 1:
        raise ValueError("trials must be positive")
    if fading not in FADING_ANALYSIS_MODELS:
        raise ValueError(f"fading must be one of {FADING_ANALYSIS_MODELS}")
    model = AnalysisModel(layout=layout, snr_db=snr_db, fading=fading)
    r = model.p_over_n
    masks = _band_mask_matrix(codebook, layout).astype(bool)
    beta2 = 2 * layout.active_thin_per_wide
    guard2 = 2 * (layout.thin_per_wide - layout.active_thin_per_wide)
    wides = 2 * layout.groups
    misses = 0
    for chunk_index, lo in enumerate(range(0, trials, _MC_CHUNK)):
        m = min(_MC_CHUNK, trials - lo)
        rng = _chunk_rng(seed, chunk_index)
        sent = rng.integers(0, codebook.size, size=m)
        tone_noise = rng.chisquare(beta2, size=(m, wides))
        guard = (
            rng.chisquare(guard2, size=(m, wides)) if guard2 > 0 else 0.0
        )
        if fading == "wideband":
            tone_active = (1.0 + r) * tone_noise
        else:
            tone_active = rng.noncentral_chisquare(beta2, beta2 * r, size=(m, wides))
        active_rows = masks[sent]
        powers = np.where(active_rows, tone_active, tone_noise) + guard
        scores = powers @ masks.T
        decoded = np.argmax(scores, axis=1)
        misses += int(np.count_nonzero(decoded != sent))
    return misses / trials, _wilson_ci(misses, trials)


# ---------------------------------------------------------------------------
# active-carrier count optimization


@dataclass(frozen=True)
class SweepPoint:
    q: int
    gamma0: float
    pf: float
    pf_mc: "float | None" = None
    pf_mc_ci95: "tuple[float, float] | None" = None


def sweep_active_carriers(
    n_carriers: int,
    snr_db: float,
    trials: int = 0,
    seed: int = 0,
    thin_per_wide: int = 8,
) -> "list[SweepPoint]":
    """How many of n_carriers wide carriers should a tag activate?

    Simplified fully-active model (every thin carrier of an active wide
    carrier carries a tone, so beta = alpha = thin_per_wide and p/n is the
    SNR directly). For each split q the threshold gamma0(q) is set so the
    wideband detection probability is exactly 1/2 at snr_db; the figure of
    merit is the false alarm probability at that threshold,

        pf(q) = P(F' > (1 + p/n) median(F')),  F' ~ F(2 a q, 2 a (n-q)).

    The per-carrier SNR is held fixed across q: activating more carriers
    spends proportionally more transmit power. Optional Monte Carlo columns
    cross-check the closed form when trials > 0.
    """
    if n_carriers < 2:
        raise ValueError("need at least two carriers")
    r = 10.0 ** (snr_db / 10.0)
    points = []
    for q in range(1, n_carriers):
        dfn = 2 * thin_per_wide * q
        dfd = 2 * thin_per_wide * (n_carriers - q)
        median = stats.f.ppf(0.5, dfn, dfd)
        t0 = (1.0 + r) * median
        gamma0 = t0 / (1.0 + t0)
        pf = float(stats.f.sf(t0, dfn, dfd))
        pf_mc = None
        ci = None
        if trials > 0:
            hits = 0
            for chunk_index, lo in enumerate(range(0, trials, _MC_CHUNK)):
                m = min(_MC_CHUNK, trials - lo)
                rng = _chunk_rng(seed + q, chunk_index)
                num = rng.chisquare(dfn, size=m) / dfn
                den = rng.chisquare(dfd, size=m) / dfd
                hits += int(np.count_nonzero(num / den > t0))
            pf_mc = hits / trials
            ci = _wilson_ci(hits, trials)
        points.append(SweepPoint(q, float(gamma0), pf, pf_mc, ci))
    return points


def sweep_argmin(points: "list[SweepPoint]") -> SweepPoint:
    return min(points, key=lambda pt: pt.pf)


# ---------------------------------------------------------------------------
# deterministic calculators


def range_gain(snr_gap_db: float, path_loss_exponent: float) -> float:
    """Range multiplier bought by an SNR advantage under power-law path
    loss: 10^(gap / (10 d))."""
    if not path_loss_exponent > 0:
        raise ValueError("path loss exponent must be positive")
    return float(10.0 ** (snr_gap_db / (10.0 * path_loss_exponent)))


def overhead(
    payload_bytes: int,
    frames_for_payload=None,
    sync_frames: int = 6,
    tag_frames: int = 8,
) -> float:
    """Airtime fraction a tag adds to a packet.

    Default frame accounting: one data frame carries 12 payload bytes, six
    synchronization frames precede the payload, and a tag spans the
    equivalent of eight data frames.
    """
    if payload_bytes <= 0:
        raise ValueError("payload must be positive")
    if frames_for_payload is None:
        payload_frames = math.ceil(payload_bytes / 12)
    else:
        payload_frames = int(frames_for_payload(payload_bytes))
    return tag_frames / (payload_frames + sync_frames)


# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class RocPoint:
    gamma: float
    pd: float
    pf: float
    pf_ci95: "tuple[float, float]"
    flagged: bool = False


@dataclass(frozen=True)
class RocCurve:
    """Operating curve over a gamma grid; pd and pf are each monotone
    nonincreasing in gamma (enforced; Monte Carlo points share draws across
    the grid, so the property holds exactly there too)."""

    points: "tuple[RocPoint, ...]"
    trials: int
    seed: int

    def __post_init__(self) -> None:
        gammas = [pt.gamma for pt in self.points]
        if sorted(gammas) != gammas:
            raise ValueError("curve points must be sorted by gamma")
        for left, right in zip(self.points, self.points[1:]):
            if right.pd > left.pd + 1e-12 or right.pf > left.pf + 1e-12:
                raise ValueError(
                    f"pd/pf must be nonincreasing in gamma; violated between "
                    f"gamma {left.gamma} and {right.gamma}"
                )


def build_roc(
    model: AnalysisModel,
    gammas: "list[float]",
    codebook: "Codebook | None" = None,
    trials: int = 0,
    seed: int = 0,
    include_null_noise: bool = False,
) -> RocCurve:
    """Detection curve on a gamma grid: closed-form pd for the transmitted
    codeword plus either closed-form single-codeword pf or, with a codebook
    and trials, the family false alarm Monte Carlo (same seed at every grid
    point, hence monotone)."""
    points = []
    for gamma in sorted(gammas):
        pd = pd_single(gamma, model, include_null_noise=include_null_noise)
        if codebook is not None and trials > 0:
            pf, ci = pf_family_mc(gamma, codebook, model.layout, trials, seed)
        else:
            pf = pf_single(gamma, model.layout, include_null_noise)
            ci = (pf, pf)
        # an all-miss Monte Carlo point (pf = 0, CI reaching above it) is
        # unresolved and flags too; exact points have zero width and never do
        half_width = (ci[1] - ci[0]) / 2.0
        flagged = half_width > 0.2 * pf
        points.append(RocPoint(gamma, pd, pf, ci, flagged))
    return RocCurve(tuple(points), trials, seed)

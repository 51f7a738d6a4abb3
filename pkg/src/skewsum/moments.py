"""Moments of the word-position distribution and the boundary positions
derived from them.

Vocabulary positions are 1-based. Sums are carried out exactly (the float
probabilities are dyadic rationals, so integer arithmetic over a common
denominator is lossless) and every reported field is rounded to float once.
That keeps the raw-moment form of the third central moment free of
cancellation error: a mirror-symmetric distribution gives exactly zero
skewness, and reversing a distribution exactly negates it.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import DegenerateDistribution, EmptyInput, InvalidConfig

ROUNDINGS = ("nearest", "floor", "ceil")


@dataclass(frozen=True)
class DistributionStats:
    n: int
    E: float
    D: float
    sigma: float
    E2: float
    E3: float
    mu3: float
    As: float | None
    k_idx: int | None
    m_idx: int | None
    degenerate: bool

    @property
    def E1(self) -> float:
        return self.E

    @property
    def sigma3(self) -> float:
        return self.sigma ** 3

    def to_dict(self) -> dict:
        d = asdict(self)
        d["E1"] = self.E
        d["sigma3"] = self.sigma3
        return d


def _integer_masses(probs: Sequence[float]) -> tuple[list[int], int]:
    """Express ``probs`` as integers over one common denominator."""
    if len(probs) == 0:
        raise EmptyInput("empty distribution")
    ratios = [p.as_integer_ratio() for p in probs]
    if any(num < 0 for num, _ in ratios):
        raise ValueError("probabilities must be non-negative")
    den = math.lcm(*{d for _, d in ratios})
    return [num * (den // d) for num, d in ratios], den


def raw_moment(probs: Sequence[float], order: int) -> float:
    """``sum(p_i * i**order)`` over 1-based positions ``i``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    nums, den = _integer_masses(probs)
    return float(Fraction(sum(m * i ** order for i, m in enumerate(nums, 1)), den))


def third_central_moment(E1, E2, E3) -> float:
    """``E3 - 3*E1*E2 + 2*E1**3``, evaluated exactly on the given values."""
    e1, e2, e3 = Fraction(E1), Fraction(E2), Fraction(E3)
    return float(e3 - 3 * e1 * e2 + 2 * e1 ** 3)


def skewness(mu3: float, sigma: float) -> float:
    if sigma < 0:
        raise ValueError("sigma must be non-negative")
    if sigma == 0:
        raise DegenerateDistribution("skewness is undefined for zero spread")
    return mu3 / sigma ** 3


def round_position(x: float, mode: str = "nearest") -> int:
    """Round a real position to an integer.

    ``nearest`` rounds halves away from zero (so 376.5 -> 377, -1.5 -> -2).
    """
    if mode == "floor":
        return math.floor(x)
    if mode == "ceil":
        return math.ceil(x)
    if mode != "nearest":
        raise InvalidConfig(f"rounding must be one of {', '.join(ROUNDINGS)}; got {mode!r}")
    if x < 0:
        return -round_position(-x)
    f = math.floor(x)
    return f + 1 if x - f >= 0.5 else f


def distribution_stats(probs, *, rounding: str = "nearest") -> DistributionStats:
    """Expectation, dispersion, raw moments, skewness and boundary positions.

    ``probs`` is a WeightedVocabulary or a plain sequence of probabilities.
    Moments are taken of the mass-normalized distribution, so the float
    rounding of the probabilities (which may sum to 1 +- ulp) cannot bias them.
    The boundary positions are ``E - sigma`` and ``E + sigma`` rounded and
    clamped to ``[1, n]``; they and the skewness are None when sigma is zero.
    """
    if hasattr(probs, "probs"):
        probs = probs.probs
    if rounding not in ROUNDINGS:
        raise InvalidConfig(f"rounding must be one of {', '.join(ROUNDINGS)}; got {rounding!r}")
    nums, _ = _integer_masses(probs)
    n = len(nums)
    s0 = sum(nums)
    if s0 == 0:
        raise DegenerateDistribution("distribution has zero total mass")
    s1 = s2 = s3 = 0
    for i, m in enumerate(nums, 1):
        s1 += i * m
        s2 += i * i * m
        s3 += i * i * i * m
    e1, e2, e3 = Fraction(s1, s0), Fraction(s2, s0), Fraction(s3, s0)
    var = e2 - e1 * e1
    mu3 = e3 - 3 * e1 * e2 + 2 * e1 ** 3

    E, D = float(e1), float(var)
    sigma = math.sqrt(D)
    degenerate = var == 0
    if degenerate:
        As = k_idx = m_idx = None
    else:
        As = skewness(float(mu3), sigma)
        k_idx = min(max(round_position(E - sigma, rounding), 1), n)
        m_idx = min(max(round_position(E + sigma, rounding), 1), n)
    return DistributionStats(n, E, D, sigma, float(e2), float(e3), float(mu3),
                             As, k_idx, m_idx, degenerate)

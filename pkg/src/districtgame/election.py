"""Threshold elections over a districting: classification, expectations, draws.

The election takes a threshold m in [1/2, 1). A party wins a district
outright only with strictly more than an m fraction of its votes; districts
where neither side clears the bar are awarded randomly. Exact ties therefore
always land in the randomized regime. Outcomes are computed exactly; the
only randomness lives in :func:`run_election`, which is deterministic in its
seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BreakpointAmbiguity, EmptyStrategySpace, InvalidArgs, OutOfRange
from .model import (
    DistrictingFunction,
    JumpDiscontinuity,
    RatioLike,
    VoterMap,
    as_ratio,
    eval_g,
)

HALF = Fraction(1, 2)
ONE = Fraction(1)


class DistrictStatus(Enum):
    CHOOSER_WIN = "chooser"
    CUTTER_WIN = "cutter"
    RANDOMIZED = "randomized"


class AllocationMode(Enum):
    """How randomized districts are awarded.

    ``INDEPENDENT_COIN_FLIPS`` gives each randomized district to either party
    with equal probability, independently. ``PAIRED_SPLIT`` splits them
    evenly between the parties and flips a single coin only for an odd
    leftover; expectations are identical, variance is not.
    """

    INDEPENDENT_COIN_FLIPS = "coins"
    PAIRED_SPLIT = "paired"


@dataclass(frozen=True)
class Threshold:
    """A chooser threshold m in [1/2, 1), with its integer form when n is known.

    With n voters per district, outcomes depend on m only through
    ``effective`` = floor(m*n): a party wins a district exactly when it holds
    at least ``effective + 1`` votes, so every m in [k/n, (k+1)/n) behaves
    identically. With ``n`` unset (share mode) the rule is the strict share
    comparison itself.
    """

    m: Fraction
    n: int | None = None

    def __post_init__(self):
        m = as_ratio(self.m)
        if not HALF <= m < 1:
            raise OutOfRange(f"threshold {m} outside [1/2, 1)")
        if self.n is not None and (not isinstance(self.n, int) or self.n < 1):
            raise InvalidArgs("district size n must be a positive integer")
        object.__setattr__(self, "m", m)

    @property
    def effective(self) -> int | None:
        """Integer vote bar: winning takes at least ``effective + 1`` votes."""
        if self.n is None:
            return None
        return math.floor(self.m * self.n)


def canonicalize_threshold(m: RatioLike, n: int | None = None) -> Threshold:
    """Validate m in [1/2, 1) and attach the effective integer form for n."""
    return Threshold(as_ratio(m), n)


def _as_threshold(d: VoterMap, m) -> Threshold:
    if isinstance(m, Threshold):
        return m
    return Threshold(as_ratio(m), getattr(d, "n", None))


@dataclass(frozen=True)
class ElectionOutcome:
    """Result of one election: statuses, exact expectations, optional draw."""

    statuses: tuple[DistrictStatus, ...]
    expected_chooser_seats: Fraction
    expected_cutter_seats: Fraction
    mode: AllocationMode | None = None
    seed: int | None = None
    realized_chooser_seats: int | None = None
    realized_cutter_seats: int | None = None


def classify(d: VoterMap, m) -> tuple[DistrictStatus, ...]:
    """Status of every district at threshold m, in canonical district order.

    A district goes to the chooser when its chooser share strictly exceeds
    m, to the cutter when the cutter share does; with m >= 1/2 at most one
    party can clear the bar, and everything else (ties included) is
    randomized.
    """
    t = _as_threshold(d, m)
    out = []
    for s in d.shares:
        if s > t.m:
            out.append(DistrictStatus.CHOOSER_WIN)
        elif 1 - s > t.m:
            out.append(DistrictStatus.CUTTER_WIN)
        else:
            out.append(DistrictStatus.RANDOMIZED)
    return tuple(out)


def expected_seats(d: VoterMap, m) -> tuple[Fraction, Fraction]:
    """Exact expected (chooser, cutter) seats at threshold m.

    Chooser seats are the outright wins plus half of the randomized
    districts; the two components always sum to D. This direct count is the
    ground truth; the curve formula of :func:`u_b_from_g` agrees with it
    whenever m and 1-m avoid the curve's jumps.
    """
    statuses = classify(d, m)
    wins = sum(1 for s in statuses if s is DistrictStatus.CHOOSER_WIN)
    randomized = sum(1 for s in statuses if s is DistrictStatus.RANDOMIZED)
    chooser = wins + Fraction(randomized, 2)
    return chooser, d.D - chooser


def run_election(
    d: VoterMap,
    m,
    mode: AllocationMode = AllocationMode.INDEPENDENT_COIN_FLIPS,
    seed: int = 0,
) -> ElectionOutcome:
    """Hold the election and realize the randomized districts.

    Deterministic in (d, m, mode, seed); the seed is recorded in the outcome
    for replay. Under ``PAIRED_SPLIT`` the first half of the randomized
    districts (in canonical order) goes to the chooser, the second half to
    the cutter, and a single odd leftover is coin-flipped, so the realized
    chooser seats never differ from expectation by more than 1/2.
    """
    t = _as_threshold(d, m)
    statuses = classify(d, t)
    wins = sum(1 for s in statuses if s is DistrictStatus.CHOOSER_WIN)
    randomized = sum(1 for s in statuses if s is DistrictStatus.RANDOMIZED)
    rng = random.Random(seed)
    if mode is AllocationMode.PAIRED_SPLIT:
        realized = wins + randomized // 2
        if randomized % 2:
            realized += rng.randint(0, 1)
    elif mode is AllocationMode.INDEPENDENT_COIN_FLIPS:
        realized = wins + sum(rng.randint(0, 1) for _ in range(randomized))
    else:
        raise InvalidArgs(f"unknown allocation mode {mode!r}")
    expected = wins + Fraction(randomized, 2)
    return ElectionOutcome(
        statuses=statuses,
        expected_chooser_seats=expected,
        expected_cutter_seats=d.D - expected,
        mode=mode,
        seed=seed,
        realized_chooser_seats=realized,
        realized_cutter_seats=d.D - realized,
    )


def u_b_from_g(f: DistrictingFunction, m: RatioLike) -> Fraction:
    """Expected chooser fraction (g(m) + g(1-m)) / 2, valid off breakpoints.

    Raises :class:`BreakpointAmbiguity` when m or 1-m sits on a jump; use
    :func:`expected_seats` there, which resolves ties by direct counting.
    """
    m = as_ratio(m)
    if not HALF <= m < 1:
        raise OutOfRange(f"threshold {m} outside [1/2, 1)")
    values = []
    for point in (m, 1 - m):
        value = eval_g(f, point)
        if isinstance(value, JumpDiscontinuity):
            raise BreakpointAmbiguity(
                f"curve has a jump at {point}; evaluate by direct counting instead"
            )
        values.append(value)
    return (values[0] + values[1]) / 2


def threshold_cells(d: VoterMap, cap: RatioLike = ONE) -> list[tuple[Fraction, Fraction]]:
    """Half-open cells [lo, hi) covering [1/2, cap) with constant outcomes.

    District statuses flip only where m crosses a district's chooser share
    or its complement, and the strict win rule makes every status constant
    on the half-open interval between consecutive crossings. In integer mode
    the cell edges all lie on the 1/n lattice, so this is the merged form of
    the [k/n, (k+1)/n) decomposition. Evaluating any quantity at each cell's
    left endpoint therefore covers the whole strategy space.
    """
    cap = as_ratio(cap)
    if cap > 1:
        raise InvalidArgs(f"threshold cap {cap} above 1")
    if cap <= HALF:
        raise EmptyStrategySpace(f"no thresholds available below cap {cap}")
    edges = {HALF}
    for s in d.shares:
        for point in (s, 1 - s):
            if HALF < point < cap:
                edges.add(point)
    ordered = sorted(edges)
    return list(zip(ordered, ordered[1:] + [cap]))


def chooser_value_integral(d: VoterMap) -> Fraction:
    """Exact integral of the expected chooser seat fraction over m in [1/2, 1).

    Summed piece by piece over the constant cells of the threshold. For
    every districting this equals half the chooser's overall share, a fact
    the best-response analysis leans on.
    """
    total = Fraction(0)
    for lo, hi in threshold_cells(d):
        chooser, _ = expected_seats(d, lo)
        total += (chooser / d.D) * (hi - lo)
    return total

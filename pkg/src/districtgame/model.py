"""Exact-arithmetic types for district vote profiles and their step curves.

A :class:`Districting` assigns an integer count of chooser-party voters to
each of D equal-size districts; a :class:`ShareProfile` carries per-district
vote fractions for real-world data where district populations are only
approximately equal. Either object induces a step curve g, the
:class:`DistrictingFunction`: g(m) is the fraction of districts in which the
chooser's vote share is at least m. The curve is a nonincreasing staircase
taking values on multiples of 1/D, and the area under it equals the
chooser party's overall vote share.

Every quantity in this module is a ``fractions.Fraction``. No floating point
enters any comparison; lattice checks at resolution 1/(2D) cannot tolerate
rounding error.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidArgs

#: All real-valued quantities are exact rationals.
Ratio = Fraction

RatioLike = Union[Fraction, int, str]


def as_ratio(value: RatioLike) -> Fraction:
    """Parse an exact rational from ``p/q`` or decimal notation.

    Decimal strings are read exactly (``"0.63"`` becomes 63/100). Floats are
    refused: they would smuggle binary rounding into exact comparisons.
    """
    if isinstance(value, float):
        raise InvalidArgs(f"refusing to build an exact ratio from float {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgs(f"not a rational: {value!r}") from exc


def round_up_to(a: RatioLike, b: RatioLike) -> Fraction:
    """Round ``a`` up to the nearest integer multiple of ``b`` (``b`` > 0)."""
    a, b = as_ratio(a), as_ratio(b)
    if b <= 0:
        raise InvalidArgs("rounding step must be positive")
    return b * math.ceil(a / b)


def round_down_to(a: RatioLike, b: RatioLike) -> Fraction:
    """Round ``a`` down to the nearest integer multiple of ``b`` (``b`` > 0)."""
    a, b = as_ratio(a), as_ratio(b)
    if b <= 0:
        raise InvalidArgs("rounding step must be positive")
    return b * math.floor(a / b)


@dataclass(frozen=True)
class Districting:
    """A multiset of districts, each holding exactly ``n`` voters.

    ``districts[i]`` counts the chooser-party voters in district i; the
    remaining ``n - districts[i]`` voters back the cutter. Districts are
    exchangeable, so the tuple is canonicalized to nonincreasing order:
    two districtings differing only by district order compare equal.
    """

    n: int
    districts: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidArgs("district size n must be a positive integer")
        votes = tuple(sorted(self.districts, reverse=True))
        if not votes:
            raise InvalidArgs("need at least one district")
        for b in votes:
            if not isinstance(b, int) or not 0 <= b <= self.n:
                raise InvalidArgs(f"district vote count {b!r} outside [0, {self.n}]")
        object.__setattr__(self, "districts", votes)

    @property
    def D(self) -> int:
        return len(self.districts)

    @property
    def b_total(self) -> int:
        """Total chooser-party voters across all districts."""
        return sum(self.districts)

    @property
    def share(self) -> Fraction:
        """Chooser party's share of the D*n voters."""
        return Fraction(self.b_total, self.D * self.n)

    @property
    def shares(self) -> tuple[Fraction, ...]:
        """Per-district chooser shares, nonincreasing."""
        return tuple(Fraction(b, self.n) for b in self.districts)


@dataclass(frozen=True)
class ShareProfile:
    """Per-district chooser vote shares, for data with unequal district sizes.

    Each district counts as one unit regardless of turnout, so the mean of
    the shares (the area under the induced step curve) can differ from the
    true statewide vote share; analysis reports carry both numbers.
    """

    shares: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(sorted((as_ratio(s) for s in self.shares), reverse=True))
        if not values:
            raise InvalidArgs("need at least one district share")
        for s in values:
            if not 0 <= s <= 1:
                raise InvalidArgs(f"district share {s} outside [0, 1]")
        object.__setattr__(self, "shares", values)

    @property
    def D(self) -> int:
        return len(self.shares)

    @property
    def share(self) -> Fraction:
        """Mean district share; equals the area under the step curve."""
        return sum(self.shares, Fraction(0)) / self.D


#: Either input mode; both expose ``D``, ``share`` and nonincreasing ``shares``.
VoterMap = Union[Districting, ShareProfile]


@dataclass(frozen=True)
class JumpDiscontinuity:
    """Both one-sided limits of a step curve at one of its jump points."""

    location: Fraction
    left: Fraction
    right: Fraction


@dataclass(frozen=True)
class DistrictingFunction:
    """Nonincreasing staircase m -> fraction of districts with share >= m.

    ``breakpoints`` are the distinct district shares in ascending order.
    ``levels[i]`` is the constant value on the open interval left of
    ``breakpoints[i]``, and ``levels[-1]`` is the value to the right of the
    last breakpoint (always 0). The curve has no single value at a
    breakpoint; :func:`eval_g` reports both one-sided limits there.

    Instances are derived from a :class:`Districting` or
    :class:`ShareProfile` via :func:`districting_function`, never built
    free-form.
    """

    D: int
    breakpoints: tuple[Fraction, ...]
    levels: tuple[Fraction, ...]

    def left_limit(self, m: RatioLike) -> Fraction:
        """Limit of the curve from below; equals the count of shares >= m."""
        return self.levels[bisect_left(self.breakpoints, as_ratio(m))]

    def right_limit(self, m: RatioLike) -> Fraction:
        """Limit of the curve from above; equals the count of shares > m."""
        return self.levels[bisect_right(self.breakpoints, as_ratio(m))]


def districting_function(d: VoterMap) -> DistrictingFunction:
    """Build the step curve of a districting or share profile.

    For every non-jump m, the curve value is ``|{i : shares[i] >= m}| / D``;
    the breakpoints are exactly the distinct share values.
    """
    shares = d.shares
    points = sorted(set(shares))
    levels = [Fraction(sum(1 for s in shares if s >= p), d.D) for p in points]
    levels.append(Fraction(0))
    return DistrictingFunction(D=d.D, breakpoints=tuple(points), levels=tuple(levels))


def eval_g(f: DistrictingFunction, m: RatioLike) -> Fraction | JumpDiscontinuity:
    """Evaluate the step curve at m in [0, 1].

    Returns the constant level when m lies inside a constant piece, and a
    :class:`JumpDiscontinuity` carrying both one-sided limits when m is a
    breakpoint; callers needing a value at a jump must pick a side
    explicitly.
    """
    m = as_ratio(m)
    if not 0 <= m <= 1:
        raise InvalidArgs(f"curve argument {m} outside [0, 1]")
    lo = bisect_left(f.breakpoints, m)
    hi = bisect_right(f.breakpoints, m)
    if lo != hi:
        return JumpDiscontinuity(location=m, left=f.levels[lo], right=f.levels[hi])
    return f.levels[lo]


def integral_g(f: DistrictingFunction) -> Fraction:
    """Exact area under the step curve over [0, 1].

    Equals the chooser party's overall vote share of the source districting.
    """
    total = Fraction(0)
    previous = Fraction(0)
    for i, point in enumerate(f.breakpoints):
        total += f.levels[i] * (point - previous)
        previous = point
    # levels[-1] is 0, so the piece right of the last breakpoint adds nothing
    return total

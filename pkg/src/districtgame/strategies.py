"""Optimal play for both sides of the districting game.

The chooser's side is a finite search: expected seats are constant on the
threshold cells, so the best response is found by scanning one
representative per cell. The cutter's side is the equalizing construction:
stack unanimous districts, add one exact tie when the rounded share demands
it, and hide the rounded-away votes inside the stacked districts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .election import HALF, ONE, expected_seats, threshold_cells
from .errors import InfeasibleConstruction, InvalidArgs
from .model import (
    Districting,
    DistrictingFunction,
    RatioLike,
    VoterMap,
    as_ratio,
    eval_g,
    round_up_to,
)


@dataclass(frozen=True)
class StackingCap:
    """Upper bound on how lopsided any district may be.

    When no district can be stacked beyond a majority of ``limit``, the
    chooser is restricted to thresholds in [1/2, limit) in return.
    """

    limit: Fraction = ONE

    def __post_init__(self):
        limit = as_ratio(self.limit)
        if not HALF <= limit <= 1:
            raise InvalidArgs(f"stacking cap {limit} outside [1/2, 1]")
        object.__setattr__(self, "limit", limit)

    def allows(self, d: Districting) -> bool:
        """Whether every district's winning majority stays within the cap."""
        return all(max(b, d.n - b) <= self.limit * d.n for b in d.districts)


def _as_cap(cap) -> StackingCap:
    if isinstance(cap, StackingCap):
        return cap
    return StackingCap(as_ratio(cap))


@dataclass(frozen=True)
class BestResponse:
    """The chooser's optimal thresholds against one districting.

    ``value`` is the maximal expected chooser seats; ``optimal_intervals``
    is the union of half-open threshold cells attaining it (adjacent cells
    merged, ascending). ``contains_half`` records whether m = 1/2 is among
    the optima.
    """

    value: Fraction
    optimal_intervals: tuple[tuple[Fraction, Fraction], ...]
    contains_half: bool

    @property
    def representative(self) -> Fraction:
        """Canonical single choice: left endpoint of the lowest optimal cell."""
        return self.optimal_intervals[0][0]


def best_response(d: VoterMap, cap: StackingCap | RatioLike = ONE) -> BestResponse:
    """Exhaustively maximize expected chooser seats over m in [1/2, cap).

    Evaluates one representative per constant cell; exact throughout.
    """
    cap = _as_cap(cap)
    cells = threshold_cells(d, cap.limit)
    values = [expected_seats(d, lo)[0] for lo, _ in cells]
    best = max(values)
    merged: list[list[Fraction]] = []
    for (lo, hi), value in zip(cells, values):
        if value != best:
            continue
        if merged and merged[-1][1] == lo:
            merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    intervals = tuple((lo, hi) for lo, hi in merged)
    contains_half = any(lo <= HALF < hi for lo, hi in intervals)
    return BestResponse(value=best, optimal_intervals=intervals, contains_half=contains_half)


def cut_optimal(D: int, n: int, b_total: int) -> Districting:
    """The cutter's canonical optimal districting for the given totals.

    Rounds the chooser's share up to the next multiple of 1/(2D), realizes
    that many half-district units as fully stacked chooser districts plus at
    most one exact tie, fills the rest with unanimous cutter districts, and
    buries the rounded-away "pretend" chooser votes (actually cutter voters)
    inside the stacked chooser districts. The chooser's best response is
    then worth exactly D * round_up_to(share, 1/(2D)) seats, m = 1/2 attains
    it, and when no rounding was needed the seat value is flat across all
    thresholds.

    Two degenerate regimes exist. When the construction calls for a tie
    district and n is odd, no exact tie exists and
    :class:`InfeasibleConstruction` is raised; exhaustive search still
    reports those instances. When 0 < b_total < n/2, every district is
    cutter-majority at m = 1/2 no matter how the votes are arranged, so no
    districting makes m = 1/2 optimal; the returned pure stacking
    [b_total, 0, ...] still attains the game value, but only at thresholds
    of at least (n - b_total)/n.
    """
    if not isinstance(D, int) or D <= 1:
        raise InvalidArgs("the construction needs at least two districts")
    if not isinstance(n, int) or n < 1:
        raise InvalidArgs("district size n must be a positive integer")
    if not isinstance(b_total, int) or not 0 <= b_total <= D * n:
        raise InvalidArgs(f"chooser total {b_total!r} outside [0, {D * n}]")
    share = Fraction(b_total, D * n)
    rounded = round_up_to(share, Fraction(1, 2 * D))
    units = int(rounded * 2 * D)  # half-district units of rounded chooser support
    stacked, tie = divmod(units, 2)
    if tie and n % 2:
        raise InfeasibleConstruction(
            f"an exact tie district is required but n = {n} is odd"
        )
    pretend = int(rounded * D * n) - b_total  # cutter votes dressed up as chooser votes
    votes = [n] * stacked + [n // 2] * tie + [0] * (D - stacked - tie)
    if pretend:
        # pretend < n/2, so a diluted stacked district keeps a strict majority;
        # with no stacked district the tie absorbs them and m = 1/2 is lost.
        votes[0] -= pretend
    return Districting(n=n, districts=tuple(votes))


def is_equalizing(d: VoterMap) -> bool:
    """True when expected chooser seats are flat across all of [1/2, 1)."""
    cells = threshold_cells(d)
    first = expected_seats(d, cells[0][0])[0]
    return all(expected_seats(d, lo)[0] == first for lo, _ in cells[1:])


def check_symmetry(f: DistrictingFunction, v_b: RatioLike) -> bool:
    """Half-turn symmetry of the step curve about the point (1/2, v_b).

    Checks g(x) + g(1 - x) == 2*v_b at the midpoints of the grid refined by
    the breakpoints and their reflections; the refined grid is closed under
    x -> 1 - x, so both evaluation points always avoid the jumps.
    """
    target = 2 * as_ratio(v_b)
    points = {Fraction(0), ONE}
    for b in f.breakpoints:
        points.add(b)
        points.add(1 - b)
    ordered = sorted(points)
    for lo, hi in zip(ordered, ordered[1:]):
        x = (lo + hi) / 2
        if eval_g(f, x) + eval_g(f, 1 - x) != target:
            return False
    return True


def exploitability(d: VoterMap) -> tuple[Fraction, Fraction, Fraction]:
    """How much a threshold-picking chooser gains over the plain m = 1/2 rule.

    Returns (seats at m = 1/2, best-response seats, their difference). The
    difference is zero exactly when nothing is gained by moving the
    threshold, as with an equalizing districting.
    """
    at_half = expected_seats(d, HALF)[0]
    best = best_response(d)
    return at_half, best.value, best.value - at_half

"""Exhaustive equilibrium search over every districting of a small instance.

Districts are exchangeable, so the cutter's strategy space is the set of
multisets: nonincreasing integer tuples summing to the chooser total with
entries in [0, n]. The solver walks all of them, takes each chooser best
response, and minimizes. It is the ground-truth oracle the analytic
construction is checked against; it refuses instances beyond a counting
guard rather than sampling, because the laws under test are universally
quantified.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import EmptyStrategySpace, InvalidArgs, TheoremViolation, TooLarge
from .model import Districting, round_down_to, round_up_to
from .strategies import BestResponse, StackingCap, _as_cap, best_response

DEFAULT_GUARD = 10**6


def _validate_instance(D: int, n: int, b_total: int) -> None:
    if not isinstance(D, int) or D < 1:
        raise InvalidArgs("need at least one district")
    if not isinstance(n, int) or n < 1:
        raise InvalidArgs("district size n must be a positive integer")
    if not isinstance(b_total, int) or not 0 <= b_total <= D * n:
        raise InvalidArgs(f"chooser total {b_total!r} outside [0, {D * n}]")


def count_districtings(D: int, n: int, b_total: int) -> int:
    """Number of distinct districtings, computed without enumerating them."""
    _validate_instance(D, n, b_total)
    # dp[j][s]: partitions of s into exactly j nonzero parts, every part <= n.
    # In-place ascending update lets each part value repeat, once per slot.
    dp = [[0] * (b_total + 1) for _ in range(D + 1)]
    dp[0][0] = 1
    for value in range(1, n + 1):
        for j in range(1, D + 1):
            for s in range(value, b_total + 1):
                dp[j][s] += dp[j - 1][s - value]
    return sum(dp[j][b_total] for j in range(D + 1))


def enumerate_districtings(D: int, n: int, b_total: int) -> Iterator[Districting]:
    """Yield every districting exactly once, in descending lexicographic order."""
    _validate_instance(D, n, b_total)

    def parts(slots: int, remaining: int, high: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        least = -(-remaining // slots)  # nonincreasing tail must cover the rest
        for v in range(min(high, remaining), least - 1, -1):
            for tail in parts(slots - 1, remaining - v, v):
                yield (v,) + tail

    for votes in parts(D, b_total, n):
        yield Districting(n=n, districts=votes)


@dataclass(frozen=True)
class MinimaxResult:
    """Exact game value of one instance with the full set of cutter optima."""

    D: int
    n: int
    b_total: int
    cap: Fraction
    value: Fraction
    optimal_districtings: tuple[Districting, ...]
    best_responses: tuple[BestResponse, ...]
    prediction: Fraction
    matches_prediction: bool
    half_is_optimal_somewhere: bool

    def to_dict(self) -> dict:
        return {
            "D": self.D,
            "n": self.n,
            "b_total": self.b_total,
            "cap": str(self.cap),
            "value": str(self.value),
            "prediction": str(self.prediction),
            "matches_prediction": self.matches_prediction,
            "half_is_optimal_somewhere": self.half_is_optimal_somewhere,
            "optimal_districtings": [list(d.districts) for d in self.optimal_districtings],
            "best_responses": [
                {
                    "value": str(br.value),
                    "intervals": [[str(lo), str(hi)] for lo, hi in br.optimal_intervals],
                    "contains_half": br.contains_half,
                }
                for br in self.best_responses
            ],
        }


def minimax(
    D: int,
    n: int,
    b_total: int,
    cap: StackingCap | Fraction | int | str = 1,
    guard: int = DEFAULT_GUARD,
) -> MinimaxResult:
    """Solve one instance exactly by scanning every districting.

    The cutter minimizes the chooser's best-response value. ``prediction``
    is the rounded-share law D * round_up_to(share, 1/(2D)); with a cap
    below 1 the comparison against it is reported but loses its meaning,
    since the law describes the uncapped game. Raises :class:`TooLarge`
    when the instance exceeds ``guard`` districtings.
    """
    _validate_instance(D, n, b_total)
    cap = _as_cap(cap)
    total = count_districtings(D, n, b_total)
    if total > guard:
        raise TooLarge(f"{total} districtings exceed the guard of {guard}")
    value: Fraction | None = None
    optima: list[Districting] = []
    responses: list[BestResponse] = []
    for d in enumerate_districtings(D, n, b_total):
        if not cap.allows(d):
            continue
        br = best_response(d, cap)
        if value is None or br.value < value:
            value = br.value
            optima = [d]
            responses = [br]
        elif br.value == value:
            optima.append(d)
            responses.append(br)
    if value is None:
        raise EmptyStrategySpace(f"no districting satisfies the stacking cap {cap.limit}")
    share = Fraction(b_total, D * n)
    prediction = D * round_up_to(share, Fraction(1, 2 * D))
    return MinimaxResult(
        D=D,
        n=n,
        b_total=b_total,
        cap=cap.limit,
        value=value,
        optimal_districtings=tuple(optima),
        best_responses=tuple(responses),
        prediction=prediction,
        matches_prediction=value == prediction,
        half_is_optimal_somewhere=any(br.contains_half for br in responses),
    )


@dataclass(frozen=True)
class InstanceRecord:
    """One verified instance; ``asserted`` marks the rows expected to obey the laws."""

    D: int
    n: int
    b_total: int
    value: Fraction
    prediction: Fraction
    matches_prediction: bool
    half_is_optimal_somewhere: bool
    asserted: bool

    def to_row(self) -> dict:
        return {
            "D": self.D,
            "n": self.n,
            "b_total": self.b_total,
            "value": str(self.value),
            "prediction": str(self.prediction),
            "matches_prediction": self.matches_prediction,
            "half_is_optimal_somewhere": self.half_is_optimal_somewhere,
            "asserted": self.asserted,
        }


@dataclass(frozen=True)
class TheoremReport:
    """Machine-readable sweep results with the violating instances called out."""

    records: tuple[InstanceRecord, ...]

    @property
    def value_violations(self) -> tuple[InstanceRecord, ...]:
        return tuple(r for r in self.records if r.asserted and not r.matches_prediction)

    @property
    def half_violations(self) -> tuple[InstanceRecord, ...]:
        return tuple(
            r for r in self.records if r.asserted and not r.half_is_optimal_somewhere
        )

    def to_dict(self) -> dict:
        return {
            "records": [r.to_row() for r in self.records],
            "value_violations": [r.to_row() for r in self.value_violations],
            "half_violations": [r.to_row() for r in self.half_violations],
        }


def _solve_instance(args: tuple[int, int, int, int]) -> InstanceRecord:
    D, n, b_total, guard = args
    result = minimax(D, n, b_total, guard=guard)
    return InstanceRecord(
        D=D,
        n=n,
        b_total=b_total,
        value=result.value,
        prediction=result.prediction,
        matches_prediction=result.matches_prediction,
        half_is_optimal_somewhere=result.half_is_optimal_somewhere,
        asserted=n % 2 == 0,
    )


def verify_theorems(
    d_values: Iterable[int],
    n_values: Iterable[int],
    b_totals: Iterable[int] | None = None,
    guard: int = DEFAULT_GUARD,
    strict: bool = False,
    jobs: int = 1,
) -> TheoremReport:
    """Sweep instances and compare each game value to the rounded-share law.

    Single-district instances are excluded (the half-threshold law only
    claims D > 1). Even-n rows are marked ``asserted``; odd-n rows are
    recorded without assertion because exact ties need not exist there.
    With ``strict`` the sweep raises :class:`TheoremViolation` when any
    asserted row breaks either law; by default violations are only listed
    in the report. ``jobs`` > 1 solves instances in parallel processes with
    a deterministic, ordered reduction.
    """
    if not isinstance(jobs, int) or jobs < 1:
        raise InvalidArgs("jobs must be a positive integer")
    tasks = []
    for D in sorted(set(d_values)):
        if D <= 1:
            continue
        for n in sorted(set(n_values)):
            totals = range(D * n + 1) if b_totals is None else sorted(set(b_totals))
            for b_total in totals:
                if 0 <= b_total <= D * n:
                    tasks.append((D, n, b_total, guard))
    if jobs == 1:
        records = [_solve_instance(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_solve_instance, tasks))
    report = TheoremReport(records=tuple(records))
    if strict and (report.value_violations or report.half_violations):
        offenders = [
            (r.D, r.n, r.b_total)
            for r in report.value_violations + report.half_violations
        ]
        raise TheoremViolation(f"asserted instances failed: {sorted(set(offenders))}")
    return report

"""Load district vote tables, measure their exploitability, draw step curves.

Input is a CSV with header ``district,votes_a,votes_b`` (cutter votes first,
chooser votes second). Real data violates the equal-population assumption,
so each district counts as one unit of the curve while the true statewide
vote share is carried alongside and divergence between the two is flagged.
All rationals serialize as ``"p/q"`` strings; decimals appear only inside
rendered diagrams.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, fields
from fractions import Fraction
from importlib.resources import files
from pathlib import Path

from .errors import EmptyFile, InvalidArgs, ParseError, UnsupportedFormat
from .model import (
    DistrictingFunction,
    RatioLike,
    ShareProfile,
    VoterMap,
    as_ratio,
    districting_function,
    integral_g,
    round_down_to,
    round_up_to,
)
from .election import HALF, expected_seats
from .strategies import best_response, check_symmetry

CSV_HEADER = ["district", "votes_a", "votes_b"]


@dataclass(frozen=True)
class ElectionRecord:
    """One district's raw vote totals."""

    district_id: str
    votes_cutter: int
    votes_chooser: int

    def __post_init__(self):
        for v in (self.votes_cutter, self.votes_chooser):
            if not isinstance(v, int) or v < 0:
                raise InvalidArgs(f"vote count {v!r} must be a nonnegative integer")
        if self.votes_cutter + self.votes_chooser == 0:
            raise InvalidArgs(f"district {self.district_id!r} recorded no votes")

    @property
    def chooser_share(self) -> Fraction:
        return Fraction(self.votes_chooser, self.votes_cutter + self.votes_chooser)


def load_csv(path: str | Path) -> list[ElectionRecord]:
    """Parse a vote table, preserving file order and exact totals."""
    with open(path, newline="", encoding="utf-8") as handle:
        rows = list(csv.reader(handle))
    if not rows or rows[0] != CSV_HEADER:
        raise ParseError(f"expected header {','.join(CSV_HEADER)!r}", line=1)
    records = []
    for index, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 3:
            raise ParseError(f"expected 3 fields, got {len(row)}", line=index)
        district, raw_a, raw_b = (field.strip() for field in row)
        try:
            votes_a, votes_b = int(raw_a), int(raw_b)
        except ValueError:
            raise ParseError(f"vote counts must be integers, got {raw_a!r},{raw_b!r}",
                             line=index) from None
        try:
            records.append(ElectionRecord(district, votes_a, votes_b))
        except InvalidArgs as exc:
            raise ParseError(str(exc), line=index) from None
    if not records:
        raise EmptyFile(f"{path} contains no data rows")
    return records


def to_share_profile(records: list[ElectionRecord]) -> ShareProfile:
    """Per-district chooser shares, canonically sorted."""
    if not records:
        raise EmptyFile("no records to convert")
    return ShareProfile(tuple(r.chooser_share for r in records))


def statewide_share(records: list[ElectionRecord]) -> Fraction:
    """True chooser vote share: total chooser votes over total votes."""
    if not records:
        raise EmptyFile("no records to total")
    chooser = sum(r.votes_chooser for r in records)
    total = sum(r.votes_cutter + r.votes_chooser for r in records)
    return Fraction(chooser, total)


def _ratio_from(text: str | None) -> Fraction | None:
    return None if text is None else as_ratio(text)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analysis derives from one profile, exactly.

    ``v_b_votes`` is the true statewide chooser share when turnout data was
    available, ``v_b_districts`` the area under the step curve (the mean
    district share); the two coincide for equal-turnout data and
    ``divergence_flagged`` marks when they drift apart materially. Seat
    predictions come from the rounded-share law applied to the vote share
    when known, otherwise to the district mean.
    """

    D: int
    v_b_votes: Fraction | None
    v_b_districts: Fraction
    divergence_flagged: bool
    breakpoints: tuple[Fraction, ...]
    levels: tuple[Fraction, ...]
    seats_at_half: Fraction
    best_value: Fraction
    best_intervals: tuple[tuple[Fraction, Fraction], ...]
    contains_half: bool
    delta: Fraction
    symmetric: bool
    prediction_chooser: Fraction
    prediction_cutter: Fraction

    @property
    def representative(self) -> Fraction:
        """Canonical best-response threshold: lowest optimal cell's left edge."""
        return self.best_intervals[0][0]

    @property
    def curve(self) -> DistrictingFunction:
        return DistrictingFunction(D=self.D, breakpoints=self.breakpoints, levels=self.levels)

    def to_dict(self) -> dict:
        return {
            "D": self.D,
            "v_b_votes": None if self.v_b_votes is None else str(self.v_b_votes),
            "v_b_districts": str(self.v_b_districts),
            "divergence_flagged": self.divergence_flagged,
            "breakpoints": [str(b) for b in self.breakpoints],
            "levels": [str(level) for level in self.levels],
            "seats_at_half": str(self.seats_at_half),
            "best_value": str(self.best_value),
            "best_intervals": [[str(lo), str(hi)] for lo, hi in self.best_intervals],
            "contains_half": self.contains_half,
            "delta": str(self.delta),
            "symmetric": self.symmetric,
            "prediction_chooser": str(self.prediction_chooser),
            "prediction_cutter": str(self.prediction_cutter),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        missing = {f.name for f in fields(cls)} - set(data)
        if missing:
            raise InvalidArgs(f"report is missing fields: {sorted(missing)}")
        return cls(
            D=int(data["D"]),
            v_b_votes=_ratio_from(data["v_b_votes"]),
            v_b_districts=as_ratio(data["v_b_districts"]),
            divergence_flagged=bool(data["divergence_flagged"]),
            breakpoints=tuple(as_ratio(b) for b in data["breakpoints"]),
            levels=tuple(as_ratio(level) for level in data["levels"]),
            seats_at_half=as_ratio(data["seats_at_half"]),
            best_value=as_ratio(data["best_value"]),
            best_intervals=tuple(
                (as_ratio(lo), as_ratio(hi)) for lo, hi in data["best_intervals"]
            ),
            contains_half=bool(data["contains_half"]),
            delta=as_ratio(data["delta"]),
            symmetric=bool(data["symmetric"]),
            prediction_chooser=as_ratio(data["prediction_chooser"]),
            prediction_cutter=as_ratio(data["prediction_cutter"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def analyze(
    profile: VoterMap,
    vote_share: RatioLike | None = None,
    divergence_threshold: RatioLike = Fraction(1, 100),
) -> AnalysisReport:
    """Full exploitability work-up of a profile or districting.

    ``vote_share`` is the true statewide chooser share when turnout data is
    available; pass it so the report can flag disagreement with the
    district-mean share beyond ``divergence_threshold``.
    """
    curve = districting_function(profile)
    district_share = integral_g(curve)
    votes = None if vote_share is None else as_ratio(vote_share)
    flagged = votes is not None and abs(votes - district_share) > as_ratio(divergence_threshold)
    seats_at_half = expected_seats(profile, HALF)[0]
    response = best_response(profile)
    basis = district_share if votes is None else votes
    step = Fraction(1, 2 * profile.D)
    return AnalysisReport(
        D=profile.D,
        v_b_votes=votes,
        v_b_districts=district_share,
        divergence_flagged=flagged,
        breakpoints=curve.breakpoints,
        levels=curve.levels,
        seats_at_half=seats_at_half,
        best_value=response.value,
        best_intervals=response.optimal_intervals,
        contains_half=response.contains_half,
        delta=response.value - seats_at_half,
        symmetric=check_symmetry(curve, district_share),
        prediction_chooser=profile.D * round_up_to(basis, step),
        prediction_cutter=profile.D * round_down_to(1 - basis, step),
    )


def analyze_csv(path: str | Path, divergence_threshold: RatioLike = Fraction(1, 100)) -> AnalysisReport:
    """Load a vote table and analyze it, carrying the true vote share along."""
    records = load_csv(path)
    return analyze(
        to_share_profile(records),
        vote_share=statewide_share(records),
        divergence_threshold=divergence_threshold,
    )


def sample_data_path() -> Path:
    """Path of the packaged reconstruction of a real 8-district election.

    The shipped file is a constrained reconstruction (exact statewide share,
    per-district majorities consistent with the published narrative), not
    the original dataset.
    """
    return Path(str(files("districtgame").joinpath("data/wisconsin_2012_reconstruction.csv")))


# --- diagram rendering -----------------------------------------------------

_CHOOSER_FILL = "#dbe7f6"
_CUTTER_FILL = "#f6dbdb"


def _px(value: Fraction, size: int) -> str:
    return f"{float(value) * size:.3f}"


def _staircase_path(report: AnalysisReport, size: int) -> str:
    curve = report.curve
    commands = [f"M 0.000 {_px(1 - curve.levels[0], size)}"]
    for i, point in enumerate(curve.breakpoints):
        commands.append(f"H {_px(point, size)}")
        commands.append(f"V {_px(1 - curve.levels[i + 1], size)}")
    commands.append(f"H {_px(Fraction(1), size)}")
    return " ".join(commands)


def emit_diagram(
    report: AnalysisReport,
    format: str = "svg",
    m: RatioLike | None = None,
    size: int = 400,
) -> bytes:
    """Render a report as a staircase diagram (or as its JSON form).

    The SVG shows the step curve on the unit square, the horizontal level of
    the district-mean share, a vertical line at the threshold ``m`` (the
    best-response representative by default), and the three bands of
    districts that threshold produces: certain chooser wins at the bottom,
    certain cutter wins at the top, randomized between. Output bytes are
    deterministic for fixed inputs.
    """
    if format == "json":
        return report.to_json().encode("utf-8")
    if format != "svg":
        raise UnsupportedFormat(f"format {format!r} (expected 'svg' or 'json')")
    threshold = report.representative if m is None else as_ratio(m)
    if not HALF <= threshold < 1:
        raise InvalidArgs(f"diagram threshold {threshold} outside [1/2, 1)")
    curve = report.curve
    chooser_level = curve.right_limit(threshold)      # certain chooser wins
    cutter_level = curve.left_limit(1 - threshold)    # everything above is a cutter win
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>',
        f'<rect x="0" y="{_px(1 - chooser_level, size)}" width="{size}" '
        f'height="{_px(chooser_level, size)}" fill="{_CHOOSER_FILL}"/>',
        f'<rect x="0" y="0" width="{size}" height="{_px(1 - cutter_level, size)}" '
        f'fill="{_CUTTER_FILL}"/>',
        f'<path d="{_staircase_path(report, size)}" fill="none" stroke="#000000" '
        f'stroke-width="2"/>',
        f'<line x1="0" y1="{_px(1 - report.v_b_districts, size)}" x2="{size}" '
        f'y2="{_px(1 - report.v_b_districts, size)}" stroke="#555555" '
        f'stroke-dasharray="6 4" stroke-width="1"/>',
        f'<line x1="{_px(threshold, size)}" y1="0" x2="{_px(threshold, size)}" '
        f'y2="{size}" stroke="#1a7a1a" stroke-dasharray="6 4" stroke-width="1"/>',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="none" '
        f'stroke="#000000" stroke-width="1"/>',
        "</svg>",
    ]
    return "\n".join(parts).encode("utf-8")

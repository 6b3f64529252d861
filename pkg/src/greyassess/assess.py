"""Group assessment: grade distributions to mean grey numbers and reports.

The mean performance of a group of n graded objects is the count-weighted
average of the per-grade intervals, itself a grey number. Whitening that
mean yields a single representative score, which classifies back to a
linguistic grade. Raw numeric score sheets are supported by first
classifying every score into a grade distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .grey import GreyNumber
from .scale import GradeScale, OutOfDomainError, UnknownGradeError

#: Whitened values closer than this compare as tied.
TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class GradeDistribution:
    """Per-grade object counts for one assessed group.

    Labels absent from the mapping count as zero. An all-zero distribution
    is constructible but cannot be assessed.
    """

    counts: Mapping[str, int]

    def __post_init__(self) -> None:
        counts: dict[str, int] = {}
        for label, count in self.counts.items():
            if not isinstance(count, int) or isinstance(count, bool):
                raise ValueError(f"count for grade {label!r} must be an integer, got {count!r}")
            if count < 0:
                raise ValueError(f"count for grade {label!r} is negative: {count}")
            counts[str(label)] = count
        object.__setattr__(self, "counts", counts)

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    def count(self, label: str) -> int:
        return self.counts.get(label, 0)


@dataclass(frozen=True)
class ScoreSheet:
    """Raw numeric scores grouped per subject, in first-appearance order."""

    subjects: tuple[tuple[str, tuple[float, ...]], ...]

    def __post_init__(self) -> None:
        normalized = tuple(
            (str(subject), tuple(float(s) for s in scores)) for subject, scores in self.subjects
        )
        if not normalized:
            raise ValueError("score sheet has no subjects")
        for subject, scores in normalized:
            if not scores:
                raise ValueError(f"subject {subject!r} has no scores")
        object.__setattr__(self, "subjects", normalized)

    def all_scores(self) -> list[float]:
        """Every score of every subject, pooled in subject order."""
        return [s for _, scores in self.subjects for s in scores]


@dataclass(frozen=True)
class AssessmentReport:
    """Assessment outcome for one group: mean grey number, whitened value,
    assigned grade, and the distribution it came from."""

    group_id: str
    n: int
    mean_gn: GreyNumber
    whitened: float
    grade: str
    distribution: GradeDistribution
    t: float
    scale: GradeScale

    def to_dict(self) -> dict:
        """Full-precision JSON-serializable form."""
        return {
            "group": self.group_id,
            "n": self.n,
            "mean_gn": {"lower": self.mean_gn.lower, "upper": self.mean_gn.upper},
            "whitened": self.whitened,
            "grade": self.grade,
            "t": self.t,
            "distribution": {label: self.distribution.count(label) for label in self.scale.labels},
        }


def mean_gn(dist: GradeDistribution, scale: GradeScale) -> GreyNumber:
    """Count-weighted mean grey number (1/n) * sum(count_g * interval_g).

    Accumulation runs in scale order, so the result does not depend on the
    mapping order of the distribution.
    """
    _check_labels(dist, scale)
    n = dist.n
    if n == 0:
        raise ValueError("empty distribution: no graded objects")
    total: GreyNumber | None = None
    for label, gn in scale.entries:
        count = dist.count(label)
        if count == 0:
            continue
        term = gn.scale(count)
        total = term if total is None else total + term
    assert total is not None
    return total.scale(1.0 / n)


def assess(
    dist: GradeDistribution,
    scale: GradeScale,
    t: float = 0.5,
    group_id: str = "group",
) -> AssessmentReport:
    """Assess one group: mean grey number, whitened value, linguistic grade."""
    mean = mean_gn(dist, scale)
    whitened = mean.whiten(t)
    grade = scale.classify(whitened)
    full = GradeDistribution({label: dist.count(label) for label in scale.labels})
    return AssessmentReport(group_id, dist.n, mean, whitened, grade, full, t, scale)


def scores_to_distribution(sheet: ScoreSheet, scale: GradeScale) -> GradeDistribution:
    """Pool every subject's scores and classify each into a grade count."""
    counts = {label: 0 for label in scale.labels}
    for subject, scores in sheet.subjects:
        for score in scores:
            try:
                grade = scale.classify(score)
            except OutOfDomainError as exc:
                raise OutOfDomainError(f"subject {subject!r}: {exc}") from None
            counts[grade] += 1
    return GradeDistribution(counts)


def raw_mean(sheet: ScoreSheet) -> float:
    """Arithmetic mean of all pooled scores."""
    scores = sheet.all_scores()
    if not scores:
        raise ValueError("score sheet has no scores")
    return sum(scores) / len(scores)


def compare_groups(
    reports: Sequence[AssessmentReport], tie_tolerance: float = TIE_TOLERANCE
) -> list[list[AssessmentReport]]:
    """Rank reports by whitened value, best first.

    Returns tie groups: each inner list holds reports whose whitened values
    differ by less than ``tie_tolerance``. All reports must share the same
    scale and whitening parameter.
    """
    if not reports:
        return []
    head = reports[0]
    for report in reports[1:]:
        if report.scale != head.scale or report.t != head.t:
            raise ValueError(
                "cannot compare reports produced under different scales "
                "or whitening parameters"
            )
    ordered = sorted(reports, key=lambda r: -r.whitened)
    groups: list[list[AssessmentReport]] = [[ordered[0]]]
    for report in ordered[1:]:
        if abs(groups[-1][-1].whitened - report.whitened) < tie_tolerance:
            groups[-1].append(report)
        else:
            groups.append([report])
    return groups


def _check_labels(dist: GradeDistribution, scale: GradeScale) -> None:
    known = set(scale.labels)
    unknown = [label for label in dist.counts if label not in known]
    if unknown:
        raise UnknownGradeError(
            f"distribution uses grades not in the scale: {', '.join(sorted(unknown))}"
        )

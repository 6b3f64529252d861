"""Triangular fuzzy number counterpart of the grey-number assessment.

Each grade interval [a, b] maps to the triangular fuzzy number
(a, (a+b)/2, b). Averaging those componentwise and defuzzifying with
(a+c)/2 gives the same representative value as whitening the mean grey
number at t=1/2; ``check_equivalence`` verifies that identity through two
independent computation paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assess import GradeDistribution, mean_gn
from .scale import GradeScale, UnknownGradeError

#: The two assessment routes must agree within this absolute tolerance.
EQUIVALENCE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Triple (a, b, c): support [a, c] with peak membership at b."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        a, b, c = float(self.a), float(self.b), float(self.c)
        if not a <= b <= c:
            raise ValueError(f"components must satisfy a <= b <= c, got ({a}, {b}, {c})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)


@dataclass(frozen=True)
class EquivalenceCheck:
    """Agreement report between the grey-number and fuzzy-number routes."""

    gn_value: float  # mean grey number whitened at t=1/2
    tfn_value: float  # defuzzified mean fuzzy number, (a+c)/2
    peak: float  # mean fuzzy number's peak component
    difference: float
    passed: bool


def grade_tfn(scale: GradeScale, label: str) -> TriangularFuzzyNumber:
    """The grade's interval endpoints with the midpoint as peak."""
    gn = scale.interval(label)
    return TriangularFuzzyNumber(gn.lower, gn.midpoint, gn.upper)


def tfn_mean(dist: GradeDistribution, scale: GradeScale) -> TriangularFuzzyNumber:
    """Componentwise count-weighted average of the grade fuzzy numbers.

    Computed with plain scalar arithmetic, independently of the grey-number
    operations, so the two assessment routes can cross-check each other.
    """
    known = set(scale.labels)
    unknown = [label for label in dist.counts if label not in known]
    if unknown:
        raise UnknownGradeError(
            f"distribution uses grades not in the scale: {', '.join(sorted(unknown))}"
        )
    n = dist.n
    if n == 0:
        raise ValueError("empty distribution: no graded objects")
    sum_a = sum_b = sum_c = 0.0
    for label in scale.labels:
        count = dist.count(label)
        if count == 0:
            continue
        t = grade_tfn(scale, label)
        sum_a += count * t.a
        sum_b += count * t.b
        sum_c += count * t.c
    return TriangularFuzzyNumber(sum_a / n, sum_b / n, sum_c / n)


def defuzzify(tfn: TriangularFuzzyNumber) -> float:
    """Representative real value (a + c) / 2.

    This equals the peak b only for symmetric triples; the two are reported
    separately by :func:`check_equivalence`.
    """
    return (tfn.a + tfn.c) / 2


def check_equivalence(dist: GradeDistribution, scale: GradeScale) -> EquivalenceCheck:
    """Compare whiten(mean_gn, 1/2) against defuzzify(tfn_mean)."""
    gn_value = mean_gn(dist, scale).whiten(0.5)
    mean_tfn = tfn_mean(dist, scale)
    tfn_value = defuzzify(mean_tfn)
    difference = abs(gn_value - tfn_value)
    return EquivalenceCheck(
        gn_value=gn_value,
        tfn_value=tfn_value,
        peak=mean_tfn.b,
        difference=difference,
        passed=difference <= EQUIVALENCE_TOLERANCE,
    )

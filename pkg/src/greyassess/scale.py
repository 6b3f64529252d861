"""Grade scales: ordered linguistic grades mapped to disjoint score intervals.

A scale assigns each linguistic grade (A, B, ...) a closed score interval,
ordered from highest to lowest, covering a score domain (0-100 by default).
Classification of a real score uses the contiguous partition induced by the
grade lower bounds, so values falling in the real-valued gaps between grade
intervals (e.g. 84.5 between B [75, 84] and A [85, 100]) still classify.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .grey import GreyNumber, IntervalError


class UnknownGradeError(ValueError):
    """A grade label that does not exist in the scale."""


class OutOfDomainError(ValueError):
    """A score outside the scale's score domain."""


class ScaleFormatError(ValueError):
    """A scale definition file that cannot be parsed."""


@dataclass(frozen=True)
class GradeScale:
    """Ordered (label, interval) pairs, highest grade first, over a domain.

    Construction is permissive; use :meth:`validate` to check the structural
    invariants (disjoint descending intervals covering the domain, unique
    labels) and get back a list of violations.
    """

    entries: tuple[tuple[str, GreyNumber], ...]
    domain_min: float = 0.0
    domain_max: float = 100.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple((str(l), gn) for l, gn in self.entries))
        object.__setattr__(self, "domain_min", float(self.domain_min))
        object.__setattr__(self, "domain_max", float(self.domain_max))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    def interval(self, label: str) -> GreyNumber:
        """The grey number registered for a grade label (case-sensitive)."""
        for entry_label, gn in self.entries:
            if entry_label == label:
                return gn
        raise UnknownGradeError(
            f"unknown grade {label!r}; scale defines {', '.join(self.labels)}"
        )

    def classify(self, score: float) -> str:
        """Grade containing the score under the contiguous-partition rule.

        A score belongs to a grade iff it is >= that grade's lower bound and
        below the next-higher grade's lower bound; the top grade is closed
        above at the domain maximum.
        """
        if not self.domain_min <= score <= self.domain_max:
            raise OutOfDomainError(
                f"score {score} outside domain [{self.domain_min:g}, {self.domain_max:g}]"
            )
        for label, gn in self.entries:
            if score >= gn.lower:
                return label
        # a valid scale starts at domain_min, so this is only reachable for
        # unvalidated scales; the lowest grade absorbs the remainder
        return self.entries[-1][0]

    def validate(self) -> list[str]:
        """All invariant violations, empty when the scale is well formed."""
        violations: list[str] = []
        if len(self.entries) < 2:
            violations.append(f"scale must define at least 2 grades, has {len(self.entries)}")
        if not self.domain_min < self.domain_max:
            violations.append(
                f"score domain is empty: [{self.domain_min:g}, {self.domain_max:g}]"
            )
        seen: set[str] = set()
        for label, gn in self.entries:
            if not label:
                violations.append("empty grade label")
            elif label in seen:
                violations.append(f"duplicate grade label {label!r}")
            seen.add(label)
            if gn.lower < self.domain_min or gn.upper > self.domain_max:
                violations.append(
                    f"grade {label!r} interval {gn} leaves the score domain "
                    f"[{self.domain_min:g}, {self.domain_max:g}]"
                )
        for i, (label_a, gn_a) in enumerate(self.entries):
            for label_b, gn_b in self.entries[i + 1 :]:
                if max(gn_a.lower, gn_b.lower) <= min(gn_a.upper, gn_b.upper):
                    violations.append(
                        f"grades {label_a!r} and {label_b!r} overlap: {gn_a} vs {gn_b}"
                    )
        for (label_hi, gn_hi), (label_lo, gn_lo) in zip(self.entries, self.entries[1:]):
            if gn_hi.upper < gn_lo.lower:
                violations.append(
                    f"grades {label_hi!r} and {label_lo!r} are not in descending order"
                )
        if self.entries:
            bottom_label, bottom = self.entries[-1]
            top_label, top = self.entries[0]
            if bottom.lower != self.domain_min:
                violations.append(
                    f"lowest grade {bottom_label!r} starts at {bottom.lower:g}, "
                    f"not at the domain minimum {self.domain_min:g}"
                )
            if top.upper != self.domain_max:
                violations.append(
                    f"highest grade {top_label!r} ends at {top.upper:g}, "
                    f"not at the domain maximum {self.domain_max:g}"
                )
        return violations


def default_scale() -> GradeScale:
    """The five-grade scale A [85,100], B [75,84], C [60,74], D [50,59], F [0,49]."""
    return GradeScale(
        (
            ("A", GreyNumber(85, 100)),
            ("B", GreyNumber(75, 84)),
            ("C", GreyNumber(60, 74)),
            ("D", GreyNumber(50, 59)),
            ("F", GreyNumber(0, 49)),
        )
    )


def strict_scale() -> GradeScale:
    """A stricter alternative: A [90,100], B [80,89], C [70,79], D [60,69], F [0,59]."""
    return GradeScale(
        (
            ("A", GreyNumber(90, 100)),
            ("B", GreyNumber(80, 89)),
            ("C", GreyNumber(70, 79)),
            ("D", GreyNumber(60, 69)),
            ("F", GreyNumber(0, 59)),
        )
    )


def validate_scale(scale: GradeScale) -> list[str]:
    return scale.validate()


def parse_scale_text(text: str) -> GradeScale:
    """Parse a scale definition.

    One entry per line, ``<LABEL> <lower> <upper>``, highest grade first.
    Lines starting with ``#`` are comments. An optional leading line
    ``domain <min> <max>`` overrides the default domain 0 100.
    """
    entries: list[tuple[str, GreyNumber]] = []
    domain = (0.0, 100.0)
    domain_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "domain":
            if entries or domain_seen:
                raise ScaleFormatError(
                    f"line {lineno}: domain line must come before any grade entry"
                )
            if len(parts) != 3:
                raise ScaleFormatError(f"line {lineno}: expected 'domain <min> <max>'")
            domain = (_parse_num(parts[1], lineno), _parse_num(parts[2], lineno))
            domain_seen = True
            continue
        if len(parts) != 3:
            raise ScaleFormatError(
                f"line {lineno}: expected '<LABEL> <lower> <upper>', got {line!r}"
            )
        label = parts[0]
        lo = _parse_num(parts[1], lineno)
        hi = _parse_num(parts[2], lineno)
        try:
            entries.append((label, GreyNumber(lo, hi)))
        except IntervalError as exc:
            raise ScaleFormatError(f"line {lineno}: {exc}") from None
    if not entries:
        raise ScaleFormatError("no grade entries found")
    return GradeScale(tuple(entries), domain[0], domain[1])


def _parse_num(cell: str, lineno: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise ScaleFormatError(f"line {lineno}: not a number: {cell!r}") from None


def format_scale_text(scale: GradeScale) -> str:
    """Render a scale in the definition file format (parse round-trips)."""
    lines: list[str] = []
    if (scale.domain_min, scale.domain_max) != (0.0, 100.0):
        lines.append(f"domain {_num(scale.domain_min)} {_num(scale.domain_max)}")
    for label, gn in scale.entries:
        lines.append(f"{label} {_num(gn.lower)} {_num(gn.upper)}")
    return "\n".join(lines) + "\n"


def _num(x: float) -> str:
    return str(int(x)) if x == int(x) else repr(x)


def read_scale_file(path: str | Path) -> GradeScale:
    return parse_scale_text(Path(path).read_text(encoding="utf-8"))


def write_scale_file(scale: GradeScale, path: str | Path) -> None:
    Path(path).write_text(format_scale_text(scale), encoding="utf-8")

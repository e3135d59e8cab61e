"""Postulation characters of ACM space curves and the four cubic-surface families.

A character is a finite integer sequence ``gamma[0], gamma[1], ...``. It is accepted
when it sums to zero, opens with a run of ``s0 >= 1`` entries equal to -1 followed by
non-negative entries, and its strictly positive entries form one contiguous block.
Zeros are allowed between the -1 run and the positive block.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb

from .errors import ClassificationFailure, InvalidCharacter, NotCubicCharacter


@dataclass(frozen=True)
class GammaCharacter:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = [int(v) for v in self.values]
        while vals and vals[-1] == 0:
            vals.pop()
        if not vals:
            raise InvalidCharacter("character is empty after trimming trailing zeros")
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def of(cls, *values: int) -> GammaCharacter:
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> GammaCharacter:
        try:
            return cls(tuple(int(tok) for tok in text.split()))
        except ValueError as exc:
            raise InvalidCharacter(f"cannot parse character {text!r}: {exc}") from None

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    s0: int | None
    violations: tuple[str, ...] = field(default=())


def validate(g: GammaCharacter) -> ValidityReport:
    vals = g.values
    violations = []
    total = sum(vals)
    if total != 0:
        violations.append(f"entries sum to {total}, not 0")

    s0 = 0
    while s0 < len(vals) and vals[s0] == -1:
        s0 += 1
    if s0 == 0:
        violations.append("does not start with -1")
    elif any(v < 0 for v in vals[s0:]):
        violations.append(f"negative entry after the leading run of {s0} entries equal to -1")

    positive = [n for n, v in enumerate(vals) if v > 0]
    if not positive:
        violations.append("no positive entries")
    elif positive[-1] - positive[0] + 1 != len(positive):
        violations.append("positive entries are not contiguous")

    if violations:
        return ValidityReport(False, None, tuple(violations))
    return ValidityReport(True, s0, ())


def _require_valid(g: GammaCharacter) -> ValidityReport:
    report = validate(g)
    if not report.valid:
        raise InvalidCharacter(f"invalid character {g}: " + "; ".join(report.violations))
    return report


def degree_of(g: GammaCharacter) -> int:
    _require_valid(g)
    return sum(n * v for n, v in enumerate(g.values))


def _binom2(k: int) -> int:
    return comb(k, 2) if k >= 2 else 0


def genus_of(g: GammaCharacter) -> int:
    _require_valid(g)
    return sum(_binom2(n - 1) * v for n, v in enumerate(g.values))


class Family(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


# positive tail after the -1 -1 -1 0^a prefix
PATTERNS: dict[Family, tuple[int, ...]] = {
    Family.A: (3,),
    Family.B: (2, 1),
    Family.C: (1, 2),
    Family.D: (1, 1, 1),
}


@dataclass(frozen=True)
class AcmCubicType:
    family: Family
    shift: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family.upper()))
        if isinstance(self.shift, bool) or not isinstance(self.shift, int) or self.shift < 0:
            raise ValueError(f"shift must be a non-negative int, got {self.shift!r}")

    def __str__(self) -> str:
        return f"{self.family.value}{self.shift}"


def classify_acm_cubic(g: GammaCharacter) -> AcmCubicType:
    report = _require_valid(g)
    if report.s0 != 3:
        raise NotCubicCharacter(f"s0 = {report.s0}, not a cubic-surface ACM character")
    rest = g.values[3:]
    shift = 0
    while shift < len(rest) and rest[shift] == 0:
        shift += 1
    tail = tuple(rest[shift:])
    for fam, pattern in PATTERNS.items():
        if tail == pattern:
            return AcmCubicType(fam, shift)
    raise ClassificationFailure(f"valid s0=3 character {g} matches none of the four patterns")


def gamma_of_type(t: AcmCubicType) -> GammaCharacter:
    return GammaCharacter((-1, -1, -1) + (0,) * t.shift + PATTERNS[t.family])


def biliaison_on_type(t: AcmCubicType) -> AcmCubicType:
    return AcmCubicType(t.family, t.shift + 1)

"""Brute-force cross-checks of the closed forms.

Each oracle compares a closed-form code path against an exhaustive computation
that only uses lattice pairings or character sums, never the path it checks.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import kernels
from . import lattice as lat
from .character import (
    PATTERNS, AcmCubicType, Family, GammaCharacter, classify_acm_cubic, degree_of, gamma_of_type,
    genus_of, validate,
)
from .engine import gonality_acm_cubic, multisecant_order_acm_cubic, representative_class
from .family import cubic_induction_chain, plane_induction_chain, quadric_induction_chain, verify_chain
from .lattice import CubicClass, SurfaceKind

DEFAULT_LINE_BOUND = 6
DEFAULT_MAX_LEN = 12
DEFAULT_MAX_SHIFT = 12


@dataclass
class OracleReport:
    oracle_id: str
    instances: int = 0
    mismatches: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def add(self, inp, expected, got):
        self.mismatches.append((str(inp), str(expected), str(got)))

    def finish(self) -> OracleReport:
        self.mismatches.sort()
        return self

    def to_dict(self) -> dict:
        return {
            "oracle": self.oracle_id,
            "instances": self.instances,
            "passed": self.passed,
            "mismatches": [list(m) for m in self.mismatches],
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.mismatches)} mismatches)"
        return f"{self.oracle_id:<28} {self.instances:>12}  {status}"


def o1_lines_exhaustive(bound: int = DEFAULT_LINE_BOUND, lines=None) -> OracleReport:
    """Every class in the box with L.L = -1, L.K = -1, L.H = 1 must be one of the 27 lines."""
    if bound < 3:
        raise ValueError("bound must be >= 3")
    report = OracleReport("O1 lines exhaustive")
    H = lat.hyperplane_class(SurfaceKind.CUBIC).as_tuple()
    K = lat.canonical_class(SurfaceKind.CUBIC).as_tuple()
    instances, found = kernels.exceptional_classes(bound, H, K)
    report.instances = instances
    expected = [line.cls.as_tuple() for line in (lat.lines_on_cubic() if lines is None else lines)]
    found_set, expected_set = set(found), set(expected)
    if len(expected) != len(expected_set):
        report.add("closed-form list", "27 distinct", f"{len(expected)} with duplicates")
    for sol in sorted(found_set - expected_set):
        report.add(CubicClass(sol[0], sol[1:]), "in closed-form list", "missing")
    for cls in sorted(expected_set - found_set):
        report.add(CubicClass(cls[0], cls[1:]), "exceptional class", "not found by search")
    if len(found_set) != 27:
        report.add("solution count", 27, len(found_set))
    return report.finish()


def _decompose(values: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # zeros after the -1 -1 -1 prefix, then the positive block
    rest = values[3:]
    a = 0
    while a < len(rest) and rest[a] == 0:
        a += 1
    return a, tuple(rest[a:])


def o2_character_classification(max_len: int = DEFAULT_MAX_LEN) -> OracleReport:
    """Every valid s0 = 3 character up to ``max_len`` entries in [-1, 3] must be one of the four types."""
    if max_len < 6:
        raise ValueError("max_len must be >= 6")
    report = OracleReport("O2 character classification")
    instances, raw = kernels.s0_characters(max_len, -1, 3, 3)
    report.instances = instances
    seen = set()
    for seq in raw:
        g = GammaCharacter(seq)
        v = validate(g)
        if not v.valid or v.s0 != 3:
            report.add(g, "valid with s0=3", f"valid={v.valid} s0={v.s0}")
            continue
        shift, tail = _decompose(g.values)
        family = next((f for f, p in PATTERNS.items() if p == tail), None)
        if family is None:
            report.add(g, "one of the four patterns", f"positive block {tail}")
            continue
        try:
            t = classify_acm_cubic(g)
        except Exception as exc:  # any failure here is a finding, not a crash
            report.add(g, f"{family.value}{shift}", repr(exc))
            continue
        if (t.family, t.shift) != (family, shift):
            report.add(g, f"{family.value}{shift}", str(t))
        if gamma_of_type(t) != g:
            report.add(t, g, gamma_of_type(t))
        seen.add((family, shift))
    # every type short enough to fit must have been found
    for fam, pattern in PATTERNS.items():
        for shift in range(max_len):
            if 3 + shift + len(pattern) <= max_len and (fam, shift) not in seen:
                report.add(f"{fam.value}{shift}", "found by enumeration", "absent")
    return report.finish()


def o3_secant_closed_forms(max_shift: int = DEFAULT_MAX_SHIFT) -> OracleReport:
    """Closed-form secant order versus a direct scan of the enumerated lines."""
    report = OracleReport("O3 secant closed forms")
    H = lat.hyperplane_class(SurfaceKind.CUBIC).as_tuple()
    K = lat.canonical_class(SurfaceKind.CUBIC).as_tuple()
    _, lines = kernels.exceptional_classes(3, H, K)
    lines = [CubicClass(x[0], x[1:]) for x in lines]
    for fam in Family:
        for n in range(max_shift + 1):
            t = AcmCubicType(fam, n)
            c = representative_class(t)
            direct = max(lat.pair_cubic(c, line) for line in lines)
            report.instances += 1
            closed = multisecant_order_acm_cubic(t)
            if closed != direct:
                report.add(t, direct, closed)
            gon = gonality_acm_cubic(t)[0]
            d = 3 * c.a - sum(c.m)
            if gon != d - direct:
                report.add(f"{t} gon", d - direct, gon)
    return report.finish()


# (d, g) pairs printed for the base curves, checked through both pipelines
PRINTED_PAIRS = [
    ("quadric-level a", GammaCharacter.of(-1, -1, 2), CubicClass(1, (0,) * 6), (3, 0)),
    ("quadric-level b", GammaCharacter.of(-1, -1, 1, 1), CubicClass(3, (1, 1, 1, 1, 1, 0)), (4, 1)),
    ("quadric-level c", GammaCharacter.of(-1, -1, 0, 2), CubicClass(4, (2, 1, 1, 1, 1, 1)), (5, 2)),
    ("quadric-level d", GammaCharacter.of(-1, -1, 0, 1, 1), CubicClass(6, (2,) * 6), (6, 4)),
    ("A0 plane quartic image", GammaCharacter.of(-1, -1, -1, 3), CubicClass(4, (1,) * 6), (6, 3)),
    ("D0 cubic complete intersection", GammaCharacter.of(-1, -1, -1, 1, 1, 1), CubicClass(9, (3,) * 6), (9, 10)),
]


def _char_degree(vals) -> int:
    return sum(n * v for n, v in enumerate(vals))


def _char_genus(vals) -> int:
    return sum((n - 1) * (n - 2) // 2 * v for n, v in enumerate(vals) if n >= 3)


def o4_degree_genus_cross(max_shift: int = DEFAULT_MAX_SHIFT) -> OracleReport:
    """Character sums and lattice adjunction must give the same (d, g)."""
    report = OracleReport("O4 degree/genus cross")
    for fam in Family:
        for n in range(max_shift + 1):
            t = AcmCubicType(fam, n)
            g = gamma_of_type(t)
            c = representative_class(t)
            via_char = (degree_of(g), genus_of(g))
            via_sums = (_char_degree(g.values), _char_genus(g.values))
            via_lattice = (lat.degree(c), lat.genus(c))
            report.instances += 1
            if via_char != via_lattice:
                report.add(t, f"lattice {via_lattice}", f"character {via_char}")
            if via_char != via_sums:
                report.add(t, f"direct sums {via_sums}", f"character {via_char}")
    for label, g, c, printed in PRINTED_PAIRS:
        report.instances += 1
        if (degree_of(g), genus_of(g)) != printed:
            report.add(f"{label} character", printed, (degree_of(g), genus_of(g)))
        if (lat.degree(c), lat.genus(c)) != printed:
            report.add(f"{label} class", printed, (lat.degree(c), lat.genus(c)))
    return report.finish()


def chain_suite(plane_max: int = 15, quadric_max: int = 10, cubic_max_shift: int = 10) -> OracleReport:
    """Generate and verify every induction chain; the family-D chain opened at the quadric level must fail."""
    report = OracleReport("chains")
    chains = [plane_induction_chain(d) for d in range(2, plane_max + 1)]
    chains += [quadric_induction_chain(a, b)
               for b in range(1, quadric_max + 1) for a in range(1, b + 1)]
    chains += [cubic_induction_chain(AcmCubicType(f, n))
               for f in Family for n in range(cubic_max_shift + 1)]
    chains += [cubic_induction_chain(AcmCubicType(f, 0), start="quadric")
               for f in (Family.A, Family.B, Family.C)]
    for chain in chains:
        report.instances += 1
        r = verify_chain(chain)
        if not r.passed:
            report.add(chain.chain_id, "pass", f"step {r.failed_step}: {r.reason}")
            continue
        for i, (lo, hi) in enumerate(r.bounds[1:], start=1):
            if lo != hi:
                report.add(f"{chain.chain_id} step {i}", "lower == upper", f"{lo} != {hi}")
    bad = cubic_induction_chain(AcmCubicType(Family.D, 0), start="quadric")
    r = verify_chain(bad)
    report.instances += 1
    if r.passed or r.failed_step != 1 or r.bounds[-1] != (5, 6):
        report.add(bad.chain_id, "fail at step 1 with bounds (5, 6)",
                   f"passed={r.passed} step={r.failed_step} bounds={r.bounds}")
    return report.finish()


def run_all(line_bound=DEFAULT_LINE_BOUND, max_len=DEFAULT_MAX_LEN, max_shift=DEFAULT_MAX_SHIFT):
    return [
        o1_lines_exhaustive(line_bound),
        o2_character_classification(max_len),
        o3_secant_closed_forms(max_shift),
        o4_degree_genus_cross(max_shift),
        chain_suite(),
    ]


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)

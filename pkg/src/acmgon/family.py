"""Degeneration lower bound for gonality and checkable induction chains.

A flat family whose general member degenerates to ``C1 u C2`` (two smooth curves
meeting transversally in ``s`` points) satisfies::

    gon(C_t) >= min(s, gon(C1) + gon(C2))

for general ``t``. A :class:`DerivationChain` records one such degeneration per step
together with a multisecant witness ``k`` giving the opposite bound
``gon <= d - k``. :func:`verify_chain` re-checks every step from the stored data,
recomputing intersection numbers from the lattice wherever classes are present.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional

from . import lattice as lat
from .character import AcmCubicType, Family
from .errors import InvalidInput
from .lattice import CubicClass, QuadricClass, SurfaceKind

BASE_TAG_PREFIXES = ("theorem", "curated", "derived")


@dataclass(frozen=True)
class Degeneration:
    s: int
    gon1: int
    gon2: int

    def __post_init__(self):
        for name in ("s", "gon1", "gon2"):
            if getattr(self, name) < 1:
                raise InvalidInput(f"degeneration needs {name} >= 1, got {getattr(self, name)}")


def family_lower_bound(dg: Degeneration) -> int:
    return min(dg.s, dg.gon1 + dg.gon2)


def corollary_condition(dg: Degeneration, gon_t: int) -> bool:
    """True when ``gon_t = gon1 + gon2 < s``, the regime where the two pencils must agree on the nodes."""
    return gon_t == dg.gon1 + dg.gon2 and dg.gon1 + dg.gon2 < dg.s


def corollary_certificate(dg: Degeneration) -> str:
    return (
        f"there exist maps C1 -> P^1 of degree {dg.gon1} and C2 -> P^1 of degree {dg.gon2} "
        f"agreeing on the {dg.s} points of C1 n C2"
    )


@dataclass(frozen=True)
class CurveDescriptor:
    surface: str  # "plane", "quadric" or "cubic"
    cls: Optional[tuple[int, ...]] = None

    def surface_class(self):
        if self.cls is None:
            return None
        if self.surface == "cubic":
            return CubicClass(self.cls[0], tuple(self.cls[1:]))
        if self.surface == "quadric":
            return QuadricClass(*self.cls)
        return None

    @classmethod
    def of(cls, c) -> CurveDescriptor:
        if isinstance(c, CubicClass):
            return cls("cubic", c.as_tuple())
        return cls("quadric", c.as_tuple())

    def __str__(self) -> str:
        c = self.surface_class()
        return f"{self.surface} {c}" if c is not None else self.surface


@dataclass(frozen=True)
class Witness:
    """Upper-bound witness: a ``k``-secant whose pencil of planes cuts a g^1_{d-k}."""

    k: int
    line: Optional[str] = None
    tag: str = "line-on-surface"


@dataclass(frozen=True)
class ChainStep:
    curve: CurveDescriptor
    d: int
    claimed_gon: int
    degeneration: Optional[Degeneration] = None
    witness: Optional[Witness] = None
    base_tag: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "curve": {"surface": self.curve.surface,
                      "class": list(self.curve.cls) if self.curve.cls is not None else None},
            "d": self.d,
            "claimed_gon": self.claimed_gon,
            "degeneration": None if self.degeneration is None else {
                "s": self.degeneration.s,
                "gon1": self.degeneration.gon1,
                "gon2": self.degeneration.gon2,
            },
            "upper_bound_witness": None if self.witness is None else {
                "k": self.witness.k, "line": self.witness.line, "tag": self.witness.tag,
            },
            "base_tag": self.base_tag,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> ChainStep:
        curve = obj["curve"]
        dg = obj.get("degeneration")
        w = obj.get("upper_bound_witness")
        return cls(
            curve=CurveDescriptor(curve["surface"],
                                  tuple(curve["class"]) if curve.get("class") is not None else None),
            d=obj["d"],
            claimed_gon=obj["claimed_gon"],
            degeneration=None if dg is None else Degeneration(dg["s"], dg["gon1"], dg["gon2"]),
            witness=None if w is None else Witness(w["k"], w.get("line"), w.get("tag", "")),
            base_tag=obj.get("base_tag"),
        )


@dataclass(frozen=True)
class DerivationChain:
    chain_id: str
    steps: tuple[ChainStep, ...]

    @property
    def final_gon(self) -> int:
        return self.steps[-1].claimed_gon

    def to_json_obj(self) -> list[dict]:
        return [step.to_dict() for step in self.steps]

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_json_obj(), **kwargs)

    @classmethod
    def from_json(cls, data, chain_id: str = "") -> DerivationChain:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(chain_id, tuple(ChainStep.from_dict(obj) for obj in data))

    def tampered(self, index: int, delta: int = 1) -> DerivationChain:
        """Copy with ``claimed_gon`` shifted by ``delta`` at one step; used to probe the checker."""
        steps = list(self.steps)
        steps[index] = replace(steps[index], claimed_gon=steps[index].claimed_gon + delta)
        return DerivationChain(self.chain_id + "-tampered", tuple(steps))


@dataclass
class VerificationReport:
    chain_id: str
    passed: bool
    failed_step: Optional[int] = None
    reason: str = ""
    bounds: list[tuple[Optional[int], Optional[int]]] = field(default_factory=list)
    certificates: list[str] = field(default_factory=list)


def _resolve_line(surface: str, name: str):
    if surface == "cubic":
        return lat.line_by_name(name).cls
    for r in lat.RULINGS:
        if lat.ruling_name(r) == name:
            return r
    raise KeyError(name)


def _partner_gonality(partner) -> Optional[int]:
    # only rational and elliptic partners have a gonality fixed by their genus
    g = lat.genus(partner)
    if g == 0:
        return 1
    if g == 1:
        return 2
    return None


def _check_step_data(step: ChainStep) -> Optional[str]:
    c = step.curve.surface_class()
    if c is not None and lat.degree(c) != step.d:
        return f"stored degree {step.d} but class {c} has degree {lat.degree(c)}"
    w = step.witness
    if w is not None and w.line is not None and c is not None:
        try:
            line = _resolve_line(step.curve.surface, w.line)
        except KeyError:
            return f"unknown witness line {w.line!r}"
        actual = lat.pair(c, line)
        if actual != w.k:
            return f"witness {w.line} meets {c} in {actual} points, not {w.k}"
    return None


def verify_chain(chain: DerivationChain) -> VerificationReport:
    report = VerificationReport(chain.chain_id, passed=False)

    def fail(i: int, why: str) -> VerificationReport:
        report.failed_step = i
        report.reason = why
        return report

    if not chain.steps:
        return fail(0, "empty chain")

    base = chain.steps[0]
    if base.degeneration is not None:
        return fail(0, "base step must not carry a degeneration")
    if not base.base_tag or not base.base_tag.startswith(BASE_TAG_PREFIXES):
        return fail(0, f"base gonality lacks a theorem/curation tag: {base.base_tag!r}")
    why = _check_step_data(base)
    if why:
        return fail(0, why)
    upper = None if base.witness is None else base.d - base.witness.k
    if upper is not None and upper < base.claimed_gon:
        return fail(0, f"base claims gon {base.claimed_gon} above its own upper bound {upper}")
    report.bounds.append((None, upper))

    for i in range(1, len(chain.steps)):
        prev, step = chain.steps[i - 1], chain.steps[i]
        dg = step.degeneration
        if dg is None:
            return fail(i, "non-base step without a degeneration")
        if step.witness is None:
            return fail(i, "non-base step without an upper-bound witness")
        why = _check_step_data(step)
        if why:
            return fail(i, why)
        if dg.gon1 != prev.claimed_gon:
            return fail(i, f"gon1 = {dg.gon1} does not match previous claimed gonality {prev.claimed_gon}")

        pc, sc = prev.curve.surface_class(), step.curve.surface_class()
        if pc is not None and sc is not None:
            partner = sc - pc
            s_expected = lat.pair(pc, partner)
            g2 = _partner_gonality(partner)
            if g2 is not None and g2 != dg.gon2:
                return fail(i, f"partner {partner} has gonality {g2}, chain says {dg.gon2}")
        elif step.curve.surface == "plane" and prev.curve.surface == "plane":
            s_expected = prev.d * (step.d - prev.d)  # Bezout
        else:
            s_expected = dg.s
        if dg.s != s_expected:
            return fail(i, f"s = {dg.s} but the components meet in {s_expected} points")

        lower = family_lower_bound(dg)
        upper = step.d - step.witness.k
        report.bounds.append((lower, upper))
        if lower < step.claimed_gon:
            return fail(i, f"lower bound {lower} < claimed gonality {step.claimed_gon} (upper bound {upper})")
        if upper > step.claimed_gon:
            return fail(i, f"upper bound {upper} > claimed gonality {step.claimed_gon} (lower bound {lower})")
        if corollary_condition(dg, step.claimed_gon):
            report.certificates.append(f"step {i}: " + corollary_certificate(dg))

    report.passed = True
    return report


# -- chain builders ---------------------------------------------------------

def plane_induction_chain(d: int) -> DerivationChain:
    if d < 2:
        raise InvalidInput(f"plane chain needs d >= 2, got {d}")
    pencil = "pencil of lines through a point of C"
    steps = [ChainStep(CurveDescriptor("plane"), 2, 1, None, Witness(1, None, pencil),
                       base_tag="theorem:conic-is-rational")]
    for j in range(3, d + 1):
        prev = steps[-1]
        dg = Degeneration(s=j - 1, gon1=prev.claimed_gon, gon2=1)
        steps.append(ChainStep(CurveDescriptor("plane"), j, j - 1, dg, Witness(1, None, pencil)))
    return DerivationChain(f"plane-d{d}", tuple(steps))


def _quadric_witness(c: QuadricClass) -> Witness:
    sec = lat.max_secant_on_surface(c)
    return Witness(sec.k, sec.witnesses[0], "ruling")


def quadric_induction_chain(a: int, b: int) -> DerivationChain:
    if not 1 <= a <= b:
        raise InvalidInput(f"quadric chain needs 1 <= a <= b, got ({a},{b})")
    conic = lat.hyperplane_class(SurfaceKind.QUADRIC)
    c = QuadricClass(1, b - a + 1)
    steps = [ChainStep(CurveDescriptor.of(c), lat.degree(c), 1, None, _quadric_witness(c),
                       base_tag="theorem:rational")]
    while c.a < a:
        prev, prev_gon = c, steps[-1].claimed_gon
        c = c + conic
        s = lat.pair_quadric(prev, conic)
        if s < c.a:
            raise AssertionError(f"s = {s} < a = {c.a}")
        w = _quadric_witness(c)
        d = lat.degree(c)
        steps.append(ChainStep(CurveDescriptor.of(c), d, d - w.k, Degeneration(s, prev_gon, 1), w))
    return DerivationChain(f"quadric-{a}-{b}", tuple(steps))


@dataclass(frozen=True)
class BaseCase:
    cls: CubicClass
    gon: int
    tag: str
    witness: Optional[Witness] = None  # set when the best secant is off the surface


# shift-0 members of the four families
CUBIC_BASES: dict[Family, BaseCase] = {
    Family.A: BaseCase(CubicClass(4, (1,) * 6), 3, "theorem:smooth-plane-quartic"),
    Family.B: BaseCase(CubicClass(6, (2, 2, 2, 2, 2, 1)), 4, "derived:elliptic-base-plus-one-biliaison"),
    Family.C: BaseCase(CubicClass(7, (3, 2, 2, 2, 2, 2)), 4, "derived:genus-2-base-plus-one-biliaison"),
    Family.D: BaseCase(CubicClass(9, (3,) * 6), 6, "curated:complete-intersection-of-two-cubics"),
}

# the curves on a quadric surface one biliaison below
QUADRIC_LEVEL_BASES: dict[Family, BaseCase] = {
    Family.A: BaseCase(CubicClass(1, (0,) * 6), 1, "theorem:rational"),
    Family.B: BaseCase(CubicClass(3, (1, 1, 1, 1, 1, 0)), 2, "theorem:genus-1"),
    Family.C: BaseCase(CubicClass(4, (2, 1, 1, 1, 1, 1)), 2, "theorem:genus-2"),
    Family.D: BaseCase(CubicClass(6, (2,) * 6), 3, "curated:quadric-(3,3)-curve",
                       Witness(3, None, "trisecant off the surface")),
}


def _cubic_witness(c: CubicClass) -> Witness:
    sec = lat.max_secant_on_surface(c)
    return Witness(sec.k, sec.witnesses[0], "line-on-surface")


def cubic_induction_chain(t: AcmCubicType, start: str = "base") -> DerivationChain:
    """Chain for family ``t.family`` up to ``t.shift``.

    ``start="base"`` opens at the shift-0 member; ``start="quadric"`` opens one
    biliaison lower, at the curve on a quadric surface. For family D the latter
    chain does not verify.
    """
    if start == "base":
        base, n_steps, suffix = CUBIC_BASES[t.family], t.shift, ""
    elif start == "quadric":
        base, n_steps, suffix = QUADRIC_LEVEL_BASES[t.family], t.shift + 1, "-from-quadric"
    else:
        raise ValueError(f"unknown start {start!r}")

    H = lat.hyperplane_class(SurfaceKind.CUBIC)
    c = base.cls
    witness = base.witness or _cubic_witness(c)
    steps = [ChainStep(CurveDescriptor.of(c), lat.degree(c), base.gon, None, witness, base_tag=base.tag)]
    for _ in range(n_steps):
        prev, prev_gon = c, steps[-1].claimed_gon
        c = lat.biliaison_up(prev)
        s = lat.pair_cubic(prev, H)
        w = _cubic_witness(c)
        d = lat.degree(c)
        # plane cubic sections are elliptic, gonality 2
        steps.append(ChainStep(CurveDescriptor.of(c), d, d - w.k, Degeneration(s, prev_gon, 2), w))
    return DerivationChain(f"cubic-{t.family.value}{t.shift}{suffix}", tuple(steps))

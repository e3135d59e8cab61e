"""Gonality, Clifford index and multisecant data for the curve families with known answers.

Every value produced here is either a closed form backed by a verifiable
:class:`~acmgon.family.DerivationChain`, a classical theorem, or a curated fact.
Anything else is reported as ``LowerUpperGap`` instead of being guessed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from . import lattice as lat
from .character import AcmCubicType, Family
from .errors import CliffordUndefined, InvalidCurveClass, InvalidInput
from .family import QUADRIC_LEVEL_BASES, DerivationChain, cubic_induction_chain
from .lattice import CubicClass, QuadricClass, SurfaceKind


class GonStatus(enum.Enum):
    EXACT = "Exact"
    EXACT_GENERAL_MEMBER = "ExactGeneralMember"
    LOWER_UPPER_GAP = "LowerUpperGap"


class CliffStatus(enum.Enum):
    EXACT = "Exact"
    UPPER_BOUND_ONLY = "UpperBoundOnly"


class Provenance(enum.Enum):
    PLANE_THEOREM = "PlaneTheorem"
    QUADRIC_FORMULA = "QuadricFormula"
    CUBIC_BILIAISON_INDUCTION = "CubicBiliaisonInduction"
    CURATED_BASE_CASE = "CuratedBaseCase"
    ATLAS_FACT = "AtlasFact"


@dataclass(frozen=True)
class LinearSeries:
    """A g^r_d."""

    d: int
    r: int

    @property
    def clifford_index(self) -> int:
        return self.d - 2 * self.r


RECORD_FIELDS = (
    "surface", "class", "d", "g", "gon", "gon_status", "k_on_surface", "k_effective",
    "cliff", "cliff_status", "cliff_dim", "rho_pencil", "computed_by_multisecants",
    "provenance", "trace_id",
)


@dataclass(frozen=True)
class CurveRecord:
    surface: Optional[SurfaceKind]
    cls: object  # CubicClass | QuadricClass | int (plane degree) | None
    d: int
    g: int
    gon: Optional[int]
    gon_status: GonStatus
    k_on_surface: Optional[int]
    k_effective: Optional[int]
    cliff: Optional[int]
    cliff_status: Optional[CliffStatus]
    cliff_dim: Optional[int]
    rho_pencil: Optional[int]
    computed_by_multisecants: bool
    provenance: Provenance
    trace_id: Optional[str] = None
    # kept out of the serialized form
    witnesses: tuple[str, ...] = field(default=(), compare=False)
    gon_bounds: Optional[tuple[int, int]] = field(default=None, compare=False)
    trace: Optional[DerivationChain] = field(default=None, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {
            "surface": None if self.surface is None else self.surface.value,
            "class": None if self.cls is None else str(self.cls),
            "d": self.d,
            "g": self.g,
            "gon": self.gon,
            "gon_status": self.gon_status.value,
            "k_on_surface": self.k_on_surface,
            "k_effective": self.k_effective,
            "cliff": self.cliff,
            "cliff_status": None if self.cliff_status is None else self.cliff_status.value,
            "cliff_dim": self.cliff_dim,
            "rho_pencil": self.rho_pencil,
            "computed_by_multisecants": self.computed_by_multisecants,
            "provenance": self.provenance.value,
            "trace_id": self.trace_id,
        }


def brill_noether_rho(g: int, d: int, r: int) -> int:
    return g - (r + 1) * (g - d + r)


def gonality_range(g: int) -> tuple[int, int]:
    if g < 0:
        raise InvalidInput(f"genus must be >= 0, got {g}")
    if g == 0:
        return (1, 1)
    if g <= 2:
        return (2, 2)
    return (2, (g + 3) // 2)


def gonality_plane(d: int) -> int:
    if d < 1:
        raise InvalidInput(f"plane curve degree must be >= 1, got {d}")
    return 1 if d == 1 else d - 1


def plane_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def gonality_quadric(a: int, b: int) -> tuple[int, GonStatus]:
    if a < 1 or b < 1:
        raise InvalidInput(f"bidegree must be positive, got ({a},{b})")
    return min(a, b), GonStatus.EXACT


# closed forms in the shift n: gonality, on-surface secant order, class
_GON_OFFSET = {Family.A: 3, Family.B: 4, Family.C: 4, Family.D: 6}
_K_OFFSET = {Family.A: 3, Family.B: 3, Family.C: 4, Family.D: 3}


def representative_class(t: AcmCubicType) -> CubicClass:
    n = t.shift
    if t.family is Family.A:
        return CubicClass(4 + 3 * n, (1 + n,) * 6)
    if t.family is Family.B:
        return CubicClass(6 + 3 * n, (2 + n,) * 5 + (1 + n,))
    if t.family is Family.C:
        return CubicClass(7 + 3 * n, (3 + n,) + (2 + n,) * 5)
    return CubicClass(9 + 3 * n, (3 + n,) * 6)


def multisecant_order_acm_cubic(t: AcmCubicType) -> int:
    return _K_OFFSET[t.family] + t.shift


def gonality_acm_cubic(t: AcmCubicType) -> tuple[int, GonStatus, DerivationChain]:
    gon = _GON_OFFSET[t.family] + 2 * t.shift
    return gon, GonStatus.EXACT_GENERAL_MEMBER, cubic_induction_chain(t)


def clifford_index(
    g: int,
    gon: int,
    *,
    plane_degree: int | None = None,
    acm_type: AcmCubicType | None = None,
    cubic_class: CubicClass | None = None,
) -> tuple[int, int, CliffStatus]:
    """Return ``(cliff, cliff_dim, status)`` for a curve whose gonality is known.

    ``plane_degree`` marks a curve isomorphic to a smooth plane curve of that degree.
    """
    if g < 4:
        raise CliffordUndefined(f"Clifford index needs genus >= 4, got {g}")
    if plane_degree is not None and plane_degree >= 5:
        return plane_degree - 4, 2, CliffStatus.EXACT
    if acm_type is None and cubic_class is not None:
        acm_type = _match_acm_class(cubic_class)
    if acm_type is not None and acm_type.family is Family.D:
        if acm_type.shift == 0:
            # the g^3_9 of the canonical complete intersection of two cubics
            return 3, 3, CliffStatus.EXACT
        return gon - 2, 1, CliffStatus.UPPER_BOUND_ONLY
    return gon - 2, 1, CliffStatus.EXACT


def elms_record(r: int) -> CurveRecord:
    """Curves in P^r of degree 4r-3, genus 4r-2 and Clifford dimension r."""
    if r < 3:
        raise InvalidInput(f"needs r >= 3, got {r}")
    d, g, gon = 4 * r - 3, 4 * r - 2, 2 * r
    surface, cls, k_on, witnesses = None, None, None, ()
    if r == 3:
        # in P^3 this is the complete intersection of two cubics
        cls = CubicClass(9, (3,) * 6)
        surface = SurfaceKind.CUBIC
        sec = lat.max_secant_on_surface(cls)
        k_on, witnesses = sec.k, sec.witnesses
    return CurveRecord(
        surface=surface, cls=cls, d=d, g=g, gon=gon, gon_status=GonStatus.EXACT,
        k_on_surface=k_on, k_effective=d - gon,
        cliff=2 * r - 3, cliff_status=CliffStatus.EXACT, cliff_dim=r,
        rho_pencil=brill_noether_rho(g, gon, 1), computed_by_multisecants=True,
        provenance=Provenance.ATLAS_FACT, trace_id=f"elms-r{r}", witnesses=witnesses,
    )


@dataclass(frozen=True)
class CompleteIntersectionResult:
    gon: Optional[int]
    k: Optional[int]
    status: GonStatus
    possible_k: tuple[int, ...] = ()


def ci_gonality(a: int, b: int, general: bool = True) -> CompleteIntersectionResult:
    """Gonality of a smooth complete intersection of surfaces of degrees ``a <= b``."""
    if a < 2 or a > b:
        raise InvalidInput(f"needs 2 <= a <= b, got ({a},{b})")
    d = a * b
    if a <= 3:
        return CompleteIntersectionResult(d - b, b, GonStatus.EXACT, (b,))
    if general:
        return CompleteIntersectionResult(d - 4, 4, GonStatus.EXACT_GENERAL_MEMBER, (4,))
    ks = tuple(sorted(set(range(4, a + 1)) | {b}))
    return CompleteIntersectionResult(None, None, GonStatus.LOWER_UPPER_GAP, ks)


def ci_genus(a: int, b: int) -> int:
    return a * b * (a + b - 4) // 2 + 1


# -- record assembly --------------------------------------------------------

def _match_acm_class(c: CubicClass) -> AcmCubicType | None:
    for fam, offset in ((Family.A, 4), (Family.B, 6), (Family.C, 7), (Family.D, 9)):
        n, rem = divmod(c.a - offset, 3)
        if rem == 0 and n >= 0:
            t = AcmCubicType(fam, n)
            if representative_class(t) == c:
                return t
    return None


def _cliff_fields(g, gon, **kw):
    try:
        return clifford_index(g, gon, **kw)
    except CliffordUndefined:
        return None, None, None


def _pencil_rho(g: int, gon: Optional[int]) -> Optional[int]:
    return None if gon is None else brill_noether_rho(g, gon, 1)


def record_plane(d: int) -> CurveRecord:
    gon = gonality_plane(d)
    g = plane_genus(d)
    # the codimension-2 linear spaces of P^2 are points; a point of C is a 1-secant
    k = 1 if d >= 2 else None
    cliff, cdim, cstat = _cliff_fields(g, gon, plane_degree=d)
    return CurveRecord(
        surface=SurfaceKind.PLANE, cls=d, d=d, g=g, gon=gon, gon_status=GonStatus.EXACT,
        k_on_surface=k, k_effective=k, cliff=cliff, cliff_status=cstat, cliff_dim=cdim,
        rho_pencil=_pencil_rho(g, gon),
        computed_by_multisecants=k is not None and gon == d - k,
        provenance=Provenance.PLANE_THEOREM,
        trace_id=f"plane-d{d}" if d >= 2 else None,
    )


def record_quadric(a: int, b: int) -> CurveRecord:
    c = QuadricClass(a, b)
    gon, status = gonality_quadric(a, b)
    d, g = lat.degree(c), lat.genus(c)
    sec = lat.max_secant_on_surface(c)
    cliff, cdim, cstat = _cliff_fields(g, gon)
    lo, hi = min(a, b), max(a, b)
    return CurveRecord(
        surface=SurfaceKind.QUADRIC, cls=c, d=d, g=g, gon=gon, gon_status=status,
        k_on_surface=sec.k, k_effective=sec.k, cliff=cliff, cliff_status=cstat, cliff_dim=cdim,
        rho_pencil=_pencil_rho(g, gon), computed_by_multisecants=gon == d - sec.k,
        provenance=Provenance.QUADRIC_FORMULA, trace_id=f"quadric-{lo}-{hi}",
        witnesses=sec.witnesses,
    )


def record_acm(t: AcmCubicType) -> CurveRecord:
    c = representative_class(t)
    gon, status, trace = gonality_acm_cubic(t)
    if t == AcmCubicType(Family.D, 0):
        # every smooth member is a complete intersection of two cubics
        status = ci_gonality(3, 3).status
    d, g = lat.degree(c), lat.genus(c)
    sec = lat.max_secant_on_surface(c)
    cliff, cdim, cstat = _cliff_fields(g, gon, acm_type=t)
    return CurveRecord(
        surface=SurfaceKind.CUBIC, cls=c, d=d, g=g, gon=gon, gon_status=status,
        k_on_surface=sec.k, k_effective=sec.k, cliff=cliff, cliff_status=cstat, cliff_dim=cdim,
        rho_pencil=_pencil_rho(g, gon), computed_by_multisecants=gon == d - sec.k,
        provenance=Provenance.CUBIC_BILIAISON_INDUCTION, trace_id=trace.chain_id,
        witnesses=sec.witnesses, trace=trace,
    )


def _quadric_level_gonality(c: CubicClass):
    for fam, base in QUADRIC_LEVEL_BASES.items():
        if base.cls == c:
            return fam, base
    return None


def record_cubic(c: CubicClass) -> CurveRecord:
    d = lat.degree(c)
    if d <= 0:
        raise InvalidCurveClass(f"{c} has non-positive degree {d}")
    g = lat.genus(c)
    if g < 0:
        raise InvalidCurveClass(f"{c} has negative genus {g}; not a smooth irreducible curve")

    t = _match_acm_class(c)
    if t is not None:
        return record_acm(t)

    sec = lat.max_secant_on_surface(c)
    common = dict(surface=SurfaceKind.CUBIC, cls=c, d=d, g=g, k_on_surface=sec.k,
                  witnesses=sec.witnesses)

    if c.a >= 1 and c.m == (0,) * 6:
        # proper transform of a smooth plane curve of degree a missing the six points
        a = c.a
        gon = gonality_plane(a)
        cliff, cdim, cstat = _cliff_fields(g, gon, plane_degree=a)
        return CurveRecord(
            **common, gon=gon, gon_status=GonStatus.EXACT, k_effective=sec.k,
            cliff=cliff, cliff_status=cstat, cliff_dim=cdim, rho_pencil=_pencil_rho(g, gon),
            computed_by_multisecants=gon == d - sec.k,
            provenance=Provenance.PLANE_THEOREM if a > 1 else Provenance.CURATED_BASE_CASE,
            trace_id=f"plane-image-a{a}",
        )

    hit = _quadric_level_gonality(c)
    if hit is not None:
        fam, base = hit
        k_eff = base.witness.k if base.witness is not None else sec.k
        cliff, cdim, cstat = _cliff_fields(g, base.gon)
        return CurveRecord(
            **common, gon=base.gon, gon_status=GonStatus.EXACT, k_effective=k_eff,
            cliff=cliff, cliff_status=cstat, cliff_dim=cdim, rho_pencil=_pencil_rho(g, base.gon),
            computed_by_multisecants=base.gon == d - k_eff,
            provenance=Provenance.CURATED_BASE_CASE, trace_id=f"quadric-level-{fam.value}",
        )

    lo, hi = gonality_range(g)
    upper = min(hi, d - sec.k) if d - sec.k >= 1 else hi
    return CurveRecord(
        **common, gon=None, gon_status=GonStatus.LOWER_UPPER_GAP, k_effective=sec.k,
        cliff=None, cliff_status=None, cliff_dim=None, rho_pencil=None,
        computed_by_multisecants=False, provenance=Provenance.ATLAS_FACT, trace_id=None,
        gon_bounds=(lo, upper),
    )


def build_record(obj) -> CurveRecord:
    """Dispatch on input: plane degree (int), QuadricClass, CubicClass, or AcmCubicType."""
    if isinstance(obj, AcmCubicType):
        return record_acm(obj)
    if isinstance(obj, CubicClass):
        return record_cubic(obj)
    if isinstance(obj, QuadricClass):
        return record_quadric(obj.a, obj.b)
    if isinstance(obj, int) and not isinstance(obj, bool):
        return record_plane(obj)
    raise TypeError(f"cannot build a record from {obj!r}")


def record_invariant_violations(rec: CurveRecord) -> list[str]:
    """Check the structural invariants every record must satisfy."""
    out = []
    if rec.gon is not None:
        if rec.gon < 1:
            out.append("gon < 1")
        if rec.g >= 3 and rec.gon > (rec.g + 3) // 2:
            out.append(f"gon {rec.gon} exceeds floor((g+3)/2) = {(rec.g + 3) // 2}")
        if rec.k_effective is not None and rec.gon > rec.d - rec.k_effective:
            out.append(f"gon {rec.gon} > d - k_effective = {rec.d - rec.k_effective}")
    expected = rec.gon is not None and rec.k_effective is not None and rec.gon == rec.d - rec.k_effective
    if rec.computed_by_multisecants != expected:
        out.append("computed_by_multisecants disagrees with gon == d - k_effective")
    if rec.cliff is not None and rec.cliff_status is CliffStatus.EXACT:
        if rec.g >= 4 and rec.gon is not None and rec.cliff > rec.gon - 2:
            out.append(f"cliff {rec.cliff} > gon - 2")
        if rec.cliff < 0:
            out.append("negative Clifford index")
    return out

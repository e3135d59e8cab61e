"""Curated example records, the small-genus taxonomy, and tables over the ACM families."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from . import engine
from .character import AcmCubicType, Family, degree_of, gamma_of_type
from .engine import (
    CliffStatus, CurveRecord, GonStatus, Provenance, build_record, brill_noether_rho, ci_genus,
    ci_gonality, elms_record,
)
from .errors import InvalidInput
from .family import QUADRIC_LEVEL_BASES
from .lattice import CubicClass, QuadricClass


@dataclass(frozen=True)
class GenusStratum:
    genus: int
    label: str
    gonality: int
    series: str
    count: str  # "unique", "finitely many" or "infinitely many"
    note: str = ""


_TAXONOMY: dict[int, list[GenusStratum]] = {
    0: [GenusStratum(0, "rational", 1, "g^1_1", "unique")],
    1: [GenusStratum(1, "elliptic", 2, "g^1_2", "infinitely many")],
    2: [GenusStratum(2, "hyperelliptic", 2, "g^1_2", "unique")],
    3: [
        GenusStratum(3, "hyperelliptic", 2, "g^1_2", "unique"),
        GenusStratum(3, "trigonal (smooth plane quartic)", 3, "g^1_3", "infinitely many",
                     "cut out by lines through a point of the canonical plane quartic"),
    ],
    4: [
        GenusStratum(4, "hyperelliptic", 2, "g^1_2", "unique"),
        GenusStratum(4, "trigonal", 3, "g^1_3", "finitely many",
                     "two g^1_3 from the rulings of a smooth quadric; one if the quadric is a cone"),
    ],
    5: [
        GenusStratum(5, "hyperelliptic", 2, "g^1_2", "unique"),
        GenusStratum(5, "trigonal", 3, "g^1_3", "unique",
                     "cut out by the rulings of a rational normal cubic scroll in P^4"),
        GenusStratum(5, "general (intersection of three quadrics in P^4)", 4, "g^1_4", "infinitely many"),
    ],
    6: [
        GenusStratum(6, "hyperelliptic", 2, "g^1_2", "unique"),
        GenusStratum(6, "trigonal", 3, "g^1_3", "unique"),
        GenusStratum(6, "smooth plane quintic", 4, "g^2_5", "unique",
                     "infinitely many g^1_4 from lines through a point; stored as degree 5, "
                     "the source labels this stratum 'plane quartic'"),
        GenusStratum(6, "bielliptic (double cover of an elliptic curve)", 4, "g^1_4", "infinitely many",
                     "no g^2_5"),
        GenusStratum(6, "general", 4, "g^1_4", "finitely many", "exactly five for the general curve"),
    ],
}


def genus_taxonomy(g: int) -> list[GenusStratum]:
    if g < 0 or g > 6:
        raise InvalidInput(f"taxonomy covers genus 0..6, got {g}")
    return list(_TAXONOMY[g])


@dataclass(frozen=True)
class AtlasEntry:
    entry_id: str
    record: CurveRecord
    citation: str
    note: str = ""
    existential: bool = False


def _rational_general(d: int, k: int) -> CurveRecord:
    # smooth rational curve of degree d whose longest multisecant has order k
    return CurveRecord(
        surface=None, cls=None, d=d, g=0, gon=1, gon_status=GonStatus.EXACT,
        k_on_surface=None, k_effective=k, cliff=None, cliff_status=None, cliff_dim=None,
        rho_pencil=brill_noether_rho(0, 1, 1), computed_by_multisecants=(1 == d - k),
        provenance=Provenance.ATLAS_FACT, trace_id=None,
    )


def _ci_record(a: int, b: int) -> CurveRecord:
    res = ci_gonality(a, b, general=True)
    d, g = a * b, ci_genus(a, b)
    if a == 3 and b == 3:
        cliff, cdim, cstat = 3, 3, CliffStatus.EXACT
    elif a == 2:
        cliff, cdim, cstat = res.gon - 2, 1, CliffStatus.EXACT
    else:
        cliff, cdim, cstat = res.gon - 2, 1, CliffStatus.UPPER_BOUND_ONLY
    if g < 4:
        cliff = cdim = cstat = None
    return CurveRecord(
        surface=None, cls=None, d=d, g=g, gon=res.gon, gon_status=res.status,
        k_on_surface=None, k_effective=res.k, cliff=cliff, cliff_status=cstat, cliff_dim=cdim,
        rho_pencil=brill_noether_rho(g, res.gon, 1),
        computed_by_multisecants=res.gon == d - res.k,
        provenance=Provenance.ATLAS_FACT, trace_id=f"ci-{a}-{b}",
    )


def builtin_examples() -> list[AtlasEntry]:
    entries = [
        AtlasEntry("ex-2.2", build_record(CubicClass(4, (1,) * 6)), "ex-2.2",
                   "sextic of genus 3 off any quadric; a general projection to the plane has 7 nodes "
                   "and pencils through a node give only a g^1_4"),
        AtlasEntry("ex-2.4-ci-2-3", _ci_record(2, 3), "ex-2.4",
                   "every minimal pencil comes from a multisecant (not verified computationally)"),
        AtlasEntry("ex-2.4-ci-3-4", _ci_record(3, 4), "ex-2.4"),
        AtlasEntry("ex-2.4-ci-4-5-general", _ci_record(4, 5), "ex-2.4",
                   "general member; special members may carry k-secants for 4 <= k <= a or k = b"),
        AtlasEntry("ex-2.5-2-5", build_record(QuadricClass(2, 5)), "ex-2.5"),
        AtlasEntry("ex-2.5-4-6", build_record(QuadricClass(4, 6)), "ex-2.5"),
        AtlasEntry("ex-2.8-r3", elms_record(3), "ex-2.8"),
        AtlasEntry("ex-2.8-r4", elms_record(4), "ex-2.8"),
        AtlasEntry("ex-2.9-bideg-1-5", build_record(QuadricClass(1, 5)), "ex-2.9"),
    ]
    for d in (6, 7, 8):
        entries.append(AtlasEntry(
            f"ex-2.9-general-d{d}", _rational_general(d, 4), "ex-2.9",
            "existential: smooth rational curves with only 4-secants exist", existential=True,
        ))
    for a in (3, 4, 5):
        entries.append(AtlasEntry(f"ex-2.10-a{a}", build_record(CubicClass(a, (0,) * 6)), "ex-2.10",
                                  "plane curve of degree a, six blown-up points off the curve"))
    for fam in Family:
        entries.append(AtlasEntry(f"acm-base-{fam.value}", build_record(QUADRIC_LEVEL_BASES[fam].cls),
                                  "acm-cubic-bases"))
    entries.append(AtlasEntry("acm-d-prime", build_record(CubicClass(9, (3,) * 6)), "acm-cubic-bases",
                              "complete intersection of two cubics; Clifford dimension 3"))
    return entries


def acm_table(max_degree: int) -> list[CurveRecord]:
    if max_degree < 6:
        raise InvalidInput(f"max_degree must be >= 6, got {max_degree}")
    rows = []
    for fam in Family:
        n = 0
        while degree_of(gamma_of_type(AcmCubicType(fam, n))) <= max_degree:
            rows.append((fam, n))
            n += 1
    records = [engine.record_acm(AcmCubicType(f, n)) for f, n in rows]
    order = {fam: i for i, fam in enumerate(Family)}
    keyed = sorted(zip(rows, records), key=lambda x: (x[1].d, order[x[0][0]]))
    return [rec for _, rec in keyed]


CSV_HEADER = ["id", "surface", "class", "d", "g", "gon", "gon_status", "k_on_surface", "k_effective",
              "cliff", "cliff_status", "cliff_dim", "by_multisecants", "citation"]


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def records_to_csv(rows: list[tuple[str, CurveRecord, str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rid, rec, citation in rows:
        d = rec.to_dict()
        w.writerow([_csv_cell(x) for x in (
            rid, d["surface"], d["class"], d["d"], d["g"], d["gon"], d["gon_status"], d["k_on_surface"],
            d["k_effective"], d["cliff"], d["cliff_status"], d["cliff_dim"], d["computed_by_multisecants"],
            citation,
        )])
    return buf.getvalue()


def table_csv(records: list[CurveRecord]) -> str:
    return records_to_csv([(r.trace_id or "", r, "acm-cubic") for r in records])


def entries_csv(entries: list[AtlasEntry]) -> str:
    return records_to_csv([(e.entry_id, e.record, e.citation) for e in entries])


def records_to_json(records: list[CurveRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2)


def entries_to_json(entries: list[AtlasEntry]) -> str:
    out = []
    for e in entries:
        obj = {"id": e.entry_id, **e.record.to_dict(), "citation": e.citation, "note": e.note,
               "existential": e.existential}
        out.append(obj)
    return json.dumps(out, indent=2)

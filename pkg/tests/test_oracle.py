import time

import pytest

from acmgon import _pykernels, kernels, oracle
from acmgon import lattice as lat
from acmgon.character import GammaCharacter, validate
from acmgon.lattice import SurfaceKind

H = lat.hyperplane_class(SurfaceKind.CUBIC).as_tuple()
K = lat.canonical_class(SurfaceKind.CUBIC).as_tuple()

needs_compiled = pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")


def test_o1_default_passes():
    r = oracle.o1_lines_exhaustive()
    assert r.passed, r.mismatches
    assert r.instances == 13 ** 7


def test_o1_small_bound():
    r = oracle.o1_lines_exhaustive(3)
    assert r.passed and r.instances == 7 ** 7


def test_o1_reports_a_dropped_line():
    lines = lat.lines_on_cubic()[:-1]
    r = oracle.o1_lines_exhaustive(3, lines=lines)
    assert not r.passed
    assert any("(2;1,1,1,1,1,0)" in m[0] for m in r.mismatches)


def test_o1_reports_a_corrupted_canonical_class(monkeypatch):
    bad = lat.CubicClass(-3, (-1, -1, -1, -1, -1, 0))
    monkeypatch.setattr(lat, "canonical_class", lambda kind: bad)
    assert not oracle.o1_lines_exhaustive(3).passed


def test_o1_bound_guard():
    with pytest.raises(ValueError):
        oracle.o1_lines_exhaustive(2)


def test_o2_default_passes():
    r = oracle.o2_character_classification()
    assert r.passed, r.mismatches


def test_o2_short_characters_by_hand():
    # up to length 6 the valid s0 = 3 characters are A0 = (-1,-1,-1,3), A1, B0, C0, D0
    _, raw = kernels.s0_characters(6, -1, 3, 3)
    trimmed = {GammaCharacter(seq).values for seq in raw}
    assert trimmed == set([
        (-1, -1, -1, 3), (-1, -1, -1, 0, 3), (-1, -1, -1, 2, 1), (-1, -1, -1, 1, 2),
        (-1, -1, -1, 1, 1, 1), (-1, -1, -1, 0, 0, 3), (-1, -1, -1, 0, 2, 1), (-1, -1, -1, 0, 1, 2),
    ])
    assert len(raw) == 13  # trailing-zero padded copies count as separate sequences
    for seq in raw:
        assert validate(GammaCharacter(seq)).valid
    assert oracle.o2_character_classification(6).passed


def test_o3_o4_pass():
    assert oracle.o3_secant_closed_forms().passed
    r = oracle.o4_degree_genus_cross()
    assert r.passed, r.mismatches
    assert r.instances == 4 * 13 + len(oracle.PRINTED_PAIRS)


def test_chain_suite_passes():
    r = oracle.chain_suite()
    assert r.passed, r.mismatches
    assert r.instances == 14 + 55 + 44 + 3 + 1


def test_reports_json():
    import json
    reports = oracle.run_all(3, 8, 3)
    data = json.loads(oracle.reports_to_json(reports))
    assert [d["passed"] for d in data] == [True] * 5


@pytest.mark.parametrize("bound", [3, 4, 5])
@needs_compiled
def test_box_scan_backends_agree(bound):
    c = kernels.compiled_backend.exceptional_classes(bound, H, K)
    p = _pykernels.exceptional_classes(bound, H, K)
    assert c[0] == p[0] == (2 * bound + 1) ** 7
    assert sorted(c[1]) == sorted(p[1])


@pytest.mark.parametrize("max_len", [6, 8, 10])
@needs_compiled
def test_character_scan_backends_agree(max_len):
    c = kernels.compiled_backend.s0_characters(max_len, -1, 3, 3)
    p = _pykernels.s0_characters(max_len, -1, 3, 3)
    # every sequence of length 1..max_len over five values
    assert c[0] == p[0] == (5 ** (max_len + 1) - 5) // 4
    assert sorted(c[1]) == sorted(p[1])


def test_python_backend_box_scan():
    n, sols = _pykernels.exceptional_classes(4, H, K)
    assert n == 9 ** 7
    assert sorted(sols) == sorted(line.cls.as_tuple() for line in lat.lines_on_cubic())


def test_runtime_budget():
    t0 = time.perf_counter()
    oracle.o1_lines_exhaustive(6)
    t1 = time.perf_counter()
    oracle.o2_character_classification(12)
    t2 = time.perf_counter()
    assert t1 - t0 < 2.0
    assert t2 - t1 < 5.0

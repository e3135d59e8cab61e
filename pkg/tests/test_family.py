import json

import pytest
from hypothesis import given, strategies as st

from acmgon.character import AcmCubicType, Family
from acmgon.errors import InvalidInput
from acmgon.family import (
    CUBIC_BASES, ChainStep, CurveDescriptor, Degeneration, DerivationChain, Witness,
    corollary_condition, cubic_induction_chain, family_lower_bound, plane_induction_chain,
    quadric_induction_chain, verify_chain,
)


def test_lower_bound_examples():
    assert family_lower_bound(Degeneration(4, 2, 1)) == 3
    assert family_lower_bound(Degeneration(2, 3, 3)) == 2
    assert family_lower_bound(Degeneration(6, 3, 2)) == 5


def test_degeneration_rejects_zero():
    with pytest.raises(InvalidInput):
        Degeneration(0, 1, 1)


@given(st.integers(1, 50), st.integers(1, 50), st.integers(1, 50), st.integers(0, 5))
def test_lower_bound_monotone(s, g1, g2, inc):
    base = family_lower_bound(Degeneration(s, g1, g2))
    assert family_lower_bound(Degeneration(s + inc, g1, g2)) >= base
    assert family_lower_bound(Degeneration(s, g1 + inc, g2)) >= base
    assert family_lower_bound(Degeneration(s, g1, g2 + inc)) >= base
    assert base <= s and base <= g1 + g2


def test_corollary_condition():
    assert corollary_condition(Degeneration(6, 3, 2), 5)
    assert not corollary_condition(Degeneration(5, 3, 2), 5)
    assert not corollary_condition(Degeneration(6, 3, 2), 4)


@pytest.mark.parametrize("d", range(2, 16))
def test_plane_chains(d):
    chain = plane_induction_chain(d)
    r = verify_chain(chain)
    assert r.passed, r.reason
    assert chain.final_gon == d - 1
    assert all(lo == hi for lo, hi in r.bounds[1:])


@pytest.mark.parametrize("a,b", [(a, b) for b in range(1, 11) for a in range(1, b + 1)])
def test_quadric_chains(a, b):
    chain = quadric_induction_chain(a, b)
    r = verify_chain(chain)
    assert r.passed, r.reason
    assert chain.final_gon == a
    assert all(lo == hi for lo, hi in r.bounds[1:])


@pytest.mark.parametrize("fam", list(Family))
def test_cubic_chains(fam):
    for n in range(11):
        chain = cubic_induction_chain(AcmCubicType(fam, n))
        r = verify_chain(chain)
        assert r.passed, (chain.chain_id, r.reason)
        assert all(lo == hi for lo, hi in r.bounds[1:])


def test_quadric_chain_3_3_steps():
    chain = quadric_induction_chain(3, 3)
    assert [s.claimed_gon for s in chain.steps] == [1, 2, 3]
    assert [s.degeneration.s for s in chain.steps[1:]] == [2, 4]
    assert verify_chain(chain).bounds[1:] == [(2, 2), (3, 3)]


def test_cubic_b1_step():
    chain = cubic_induction_chain(AcmCubicType(Family.B, 1))
    step = chain.steps[1]
    assert step.degeneration == Degeneration(7, 4, 2)
    assert step.witness.k == 4
    assert verify_chain(chain).bounds[1] == (6, 6)


@pytest.mark.parametrize("fam", [Family.A, Family.B, Family.C])
def test_from_quadric_chains_pass(fam):
    r = verify_chain(cubic_induction_chain(AcmCubicType(fam, 0), start="quadric"))
    assert r.passed, r.reason


def test_wrong_d_chain_fails():
    chain = cubic_induction_chain(AcmCubicType(Family.D, 0), start="quadric")
    assert chain.steps[0].claimed_gon == 3
    r = verify_chain(chain)
    assert not r.passed
    assert r.failed_step == 1
    assert r.bounds[-1] == (5, 6)


def test_d_base_is_curated():
    assert CUBIC_BASES[Family.D].gon == 6
    assert CUBIC_BASES[Family.D].tag.startswith("curated")


@pytest.mark.parametrize("maker", [
    lambda: plane_induction_chain(7),
    lambda: quadric_induction_chain(4, 6),
    lambda: cubic_induction_chain(AcmCubicType(Family.C, 3)),
])
def test_tampered_chain_is_caught(maker):
    chain = maker()
    for i in range(len(chain.steps)):
        for delta in (-1, 1):
            r = verify_chain(chain.tampered(i, delta))
            assert not r.passed
            assert r.failed_step in (i, i + 1)


def test_wrong_intersection_count_is_caught():
    chain = cubic_induction_chain(AcmCubicType(Family.A, 2))
    steps = list(chain.steps)
    s1 = steps[1]
    steps[1] = ChainStep(s1.curve, s1.d, s1.claimed_gon,
                         Degeneration(s1.degeneration.s + 3, s1.degeneration.gon1, s1.degeneration.gon2),
                         s1.witness)
    r = verify_chain(DerivationChain("bad-s", tuple(steps)))
    assert not r.passed and r.failed_step == 1


def test_untagged_base_is_rejected():
    step = ChainStep(CurveDescriptor("plane"), 2, 1, None, Witness(1, None, "x"), base_tag="")
    assert not verify_chain(DerivationChain("x", (step,))).passed
    assert not verify_chain(DerivationChain("empty", ())).passed


def test_witness_must_match_surface():
    chain = cubic_induction_chain(AcmCubicType(Family.D, 1))
    steps = list(chain.steps)
    s1 = steps[1]
    steps[1] = ChainStep(s1.curve, s1.d, s1.claimed_gon, s1.degeneration, Witness(5, "E1", "fake"))
    r = verify_chain(DerivationChain("bad-w", tuple(steps)))
    assert not r.passed and r.failed_step == 1


def test_json_round_trip():
    for chain in (plane_induction_chain(5), quadric_induction_chain(2, 7),
                  cubic_induction_chain(AcmCubicType(Family.D, 4))):
        text = chain.to_json()
        back = DerivationChain.from_json(text, chain.chain_id)
        assert back == chain
        assert verify_chain(back).passed


def test_json_keys():
    obj = json.loads(cubic_induction_chain(AcmCubicType(Family.A, 1)).to_json())
    assert set(obj[1]) == {"curve", "d", "claimed_gon", "degeneration", "upper_bound_witness", "base_tag"}
    assert obj[1]["curve"] == {"surface": "cubic", "class": [7, 2, 2, 2, 2, 2, 2]}
    assert obj[0]["degeneration"] is None


def test_verification_is_deterministic():
    chain = cubic_induction_chain(AcmCubicType(Family.B, 5))
    assert verify_chain(chain) == verify_chain(chain)
    assert chain.to_json() == cubic_induction_chain(AcmCubicType(Family.B, 5)).to_json()


def test_certificates_in_corollary_regime():
    r = verify_chain(cubic_induction_chain(AcmCubicType(Family.A, 3)))
    assert r.passed
    # each step has gon_t = gon1 + 2 and s = d_prev, which is larger
    assert len(r.certificates) == 3

import json
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings

from sweff.model import Lottery, UtilityProfile
from sweff.report import SCHEMA, analyze, format_text, from_dict, to_dict, verify_report

from .strategies import profile_and_lotteries

HALF = Fraction(1, 2)


def test_p1_report_contents(p1):
    report = analyze(p1, Lottery((HALF, HALF)))
    data = to_dict(report)
    assert data["schema"] == SCHEMA
    assert data["alternatives"] == ["a", "b"]
    assert data["lottery"] == {"a": "1/2", "b": "1/2"}
    assert data["efficiency"] == {
        "ex_post": True, "interesting": True, "degenerate": False,
        "sd_efficient": True, "sw_efficient": False, "sw_by_enumeration": False,
    }
    assert data["witnesses"]["sw_dominating_support"] == ["a"]
    sep = data["witnesses"]["separating_utilities"]["a"]
    assert sep["utilities"] == [["5/4", "0"], ["1", "5/4"]]
    assert sep["margins"] == {"b": "1"}
    assert data["conventions"] == {"consistency": "weak", "enumeration_cap": 12}


def test_p2_report_has_sd_witness(p2):
    data = to_dict(analyze(p2, Lottery((HALF, HALF))))
    assert data["efficiency"]["ex_post"] is False
    assert data["witnesses"]["sd_dominating_lottery"] == {"a": "1"}


def test_enumeration_skipped_note(p1):
    report = analyze(p1, Lottery((1, 0)), cap=1)
    assert report.efficiency.sw_by_enumeration is None
    assert any("enumeration skipped" in n for n in report.notes)
    assert "skipped" in format_text(report)


def test_strict_consistency_note(p3):
    report = analyze(p3, Lottery((0, 0, 1)), strict_consistency=True)
    assert report.consistency == "strict"
    assert not verify_report(report)


@settings(deadline=None, max_examples=40)
@given(profile_and_lotteries(k=1, max_n=3, max_m=3))
def test_json_round_trip(case):
    profile, p = case
    report = analyze(profile, p)
    data = json.loads(json.dumps(to_dict(report)))
    back = from_dict(data)
    assert to_dict(back) == data
    assert back.lottery.probs == p.probs
    assert back.efficiency == report.efficiency
    assert verify_report(back) == []


def test_tampered_report_is_caught(p1):
    data = to_dict(analyze(p1, Lottery((HALF, HALF))))
    data["witnesses"]["separating_utilities"]["a"]["utilities"] = [["0", "0"], ["0", "0"]]
    data["witnesses"]["sw_dominating_support"] = ["a", "b"]
    problems = verify_report(from_dict(data))
    assert any("do not put it ahead" in s for s in problems)
    assert any("dominating support" in s for s in problems)


def test_round_trip_keeps_columns_when_reparse_reorders(p1):
    from sweff.model import PreferenceProfile, WeakOrder

    # unnamed profile whose first line lists b before a
    profile = PreferenceProfile((WeakOrder((frozenset({1}), frozenset({0}))), p1.orders[1]))
    report = analyze(profile, Lottery((Fraction(1, 4), Fraction(3, 4))))
    back = from_dict(json.loads(json.dumps(to_dict(report))))
    assert back.profile.orders == profile.orders
    assert back.efficiency == report.efficiency


def test_mismatched_alternatives_rejected(p1):
    data = to_dict(analyze(p1, Lottery((1, 0))))
    data["alternatives"] = ["a", "z"]
    with pytest.raises(ValueError):
        from_dict(data)


def test_unknown_schema_rejected():
    with pytest.raises(ValueError):
        from_dict({"schema": "other/9"})


def test_fake_sd_witness_caught(p1):
    report = analyze(p1, Lottery((HALF, HALF)))
    report.efficiency = replace(report.efficiency, sd_witness=Lottery((1, 0)))
    problems = verify_report(report)
    assert any("SD witness" in s for s in problems)
    report.efficiency = replace(report.efficiency, separating={0: UtilityProfile(((0, 1), (0, 1)))})
    assert any("inconsistent" in s for s in verify_report(report))

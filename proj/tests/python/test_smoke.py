import cgtengine as cgt


def test_eval_worked_examples():
    assert cgt.value_of(cgt.parse("{1|2}")) == "3/2"
    assert cgt.value_of(cgt.parse("{*|*}")) == "0"
    assert cgt.value_of(cgt.parse("1/2+1/2+1/2")) == "3/2"
    assert cgt.value_of(cgt.parse("*")) is None


def test_compare_and_canonicalize():
    assert cgt.compare(cgt.parse("^"), cgt.parse("0")) == ">"
    assert cgt.compare(cgt.parse("*"), cgt.parse("0")) == "||"
    assert cgt.canonicalize(cgt.parse("{*|*}")) == cgt.parse("0")
    assert str(cgt.canonicalize(cgt.parse("1/2+1/2"))) == "1"


def test_game_algebra():
    one = cgt.parse("1")
    assert (one + (-one)).birthday == 2
    assert cgt.compare(one + (-one), cgt.parse("0")) == "="
    star = cgt.parse("*")
    assert star.left_options == [cgt.parse("0")]


def test_classify():
    c = cgt.classify(cgt.parse("{*|*}"))
    assert c["is_number"] is True
    assert c["value"] == "0"
    assert c["is_zugzwang"] is False
    assert c["outcome"] == "P"


def test_fitting():
    assert cgt.simplest_fitting(cgt.parse("{1|2}")) == "3/2"
    assert cgt.simplest_fitting(cgt.parse("*")) is None
    assert cgt.fitting_contains(cgt.parse("{1|2}"), "3/2")
    assert not cgt.fitting_contains(cgt.parse("{1|2}"), "1")


def test_rulesets():
    assert cgt.value_of(cgt.toppling("LRL")) == "1/2"
    assert cgt.value_of(cgt.hackenbush("BR")) == "1/2"
    assert cgt.value_of(cgt.hackenbush("B B")) == "2"


def test_enumeration_and_scans():
    assert len(cgt.enumerate_forms(1)) == 4
    assert len(cgt.enumerate_forms(2)) == 121
    assert cgt.scan_weak_zugzwangs(2) == []
    assert cgt.scan_infinitesimal_right_gap(2) == []


def test_parse_error():
    import pytest

    with pytest.raises(ValueError):
        cgt.parse("{0|")

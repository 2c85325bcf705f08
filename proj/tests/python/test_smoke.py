import pytest

import iinf


def test_parse_and_compose():
    swap = iinf.parse("{1>2,2>1}")
    assert swap * swap == iinf.Element()
    assert str(iinf.evaluate("inv({1>3,-3})")) == "{3>1, -1}"
    assert iinf.parse("{1>3,-3}")(1) == 3
    assert iinf.parse("{-3}")(3) is None
    assert iinf.parse("{-3}").holes == [3]


def test_element_constructor_and_hash():
    a = iinf.Element([(1, 2), (2, 1)])
    assert a == iinf.parse("{1>2,2>1}")
    assert len({a, iinf.parse("{2>1,1>2}")}) == 1


def test_errors_carry_kind():
    with pytest.raises(iinf.IinfError) as info:
        iinf.parse("{1>2,1>3}")
    assert info.value.kind == "NonInjective"
    with pytest.raises(ValueError):
        iinf.separate(iinf.Element(), iinf.Element(), "F")


def test_relations_and_congruences():
    assert iinf.green("D", iinf.parse("{-1}"), iinf.parse("{-2}"))
    assert not iinf.green("R", iinf.parse("{-1}"), iinf.parse("{-2}"))
    assert iinf.principal_congruence(iinf.Element(), iinf.parse("{1>2,2>1}")) == "S:0"
    assert iinf.sign(iinf.parse("{1>2,2>1}")) == "odd"


def test_solvers():
    fiber = iinf.solve_left(iinf.parse("{-1}"), iinf.parse("{-1}"))
    assert [str(x) for x in fiber] == ["id", "{-1}"]
    assert iinf.fiber_count(iinf.parse("{-1}"), iinf.parse("{-1}")) == 2
    assert iinf.f_solver([1], [1, 2]) == [[1, 2], [2]]


def test_topology():
    assert iinf.member("F", iinf.Element(), [3], iinf.parse("{1>2,2>1}"))
    assert iinf.separate(iinf.parse("{-1}"), iinf.parse("{-2}"), "WF") == ([2], [1])
    assert iinf.common_member("F", iinf.Element(), [1], iinf.parse("{1>2,2>1}"), [1]) is None


def test_enumerate_and_verify():
    assert len(iinf.enumerate_window([0, 1, 2])) == 34
    assert iinf.window_count(4) == 209
    report = iinf.verify("green", 2)
    assert report["passed"]
    assert all(p["passed"] for p in report["properties"])

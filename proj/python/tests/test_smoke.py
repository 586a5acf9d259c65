import json

import pytest

import beauville as bv

X1 = "(2,9,5,6)(3,4,7,8)"
Y1 = "(1,3,8,5)(2,6,10,4)"
X2 = "(1,9,4,6,2)(3,5,7,10,8)"
Y2 = "(1,3,2,5,7)(4,8,6,10,9)"
OUTER = "(1,10)(2,8)(3,6)(4,5)(7,9)"


def P(s, n=10):
    return bv.Permutation.from_cycles(s, n)


def test_permutation_basics():
    p = bv.Permutation.from_images([2, 3, 1])
    assert str(p) == "(1,2,3)"
    assert p.order() == 3
    assert (p * p * p).is_identity()
    assert p.inverse().images == [3, 1, 2]
    assert p == P("(1,2,3)", 3)
    assert len({p, P("(1,2,3)", 3)}) == 1


def test_bundled_groups():
    assert "M11" in bv.bundled_names()
    m11 = bv.bundled("M11")
    assert m11.degree == 11
    assert m11.group.order() == 7920
    assert bv.bundled("M24").group.order() == 244823040
    with pytest.raises(bv.DatasetError):
        bv.bundled("HN")
    a6 = bv.bundled("A6")
    assert a6.overgroup == "PGammaL2(9)"
    assert P(X1) in a6.group
    assert P(OUTER) not in a6.group


def test_parse_group_and_words():
    ds = bv.parse_group("degree 4\na: (1,2)\nb: (1,2,3,4)\n")
    assert ds.group.order() == 24
    assert str(ds.evaluate("ab^2")) == "(1,4,2,3)"
    assert ds.evaluate("a^b") == ds.evaluate("b^-1ab")
    assert ds.evaluate("a^b^2") == ds.evaluate("(a^b)^2")
    with pytest.raises(bv.WordParseError):
        ds.evaluate("a(")
    with pytest.raises(bv.DatasetError):
        bv.parse_group("degree 3\na: 1 1 2\n")


def test_verify_unmixed_a6():
    a6 = bv.bundled("A6")
    t1, t2 = bv.make_triple(P(X1), P(Y1)), bv.make_triple(P(X2), P(Y2))
    assert t1.type == (4, 4, 4) and t2.type == (5, 5, 5)
    r = bv.verify_unmixed(a6.group, t1, t2, "A6")
    assert r.passed and r.verdict == "verified"
    doc = json.loads(r.to_json())
    assert doc["group"] == "A6"
    assert not bv.verify_unmixed(a6.group, t1, t1).passed
    sr = bv.verify_strongly_real(a6, t1, t2, P(OUTER))
    assert sr.passed


def test_searches():
    assert bv.search_unmixed(bv.bundled("A5"))["status"] == "absent"
    res = bv.search_unmixed(bv.bundled("A6"), strongly_real=True)
    assert res["status"] == "found"
    t1, t2 = res["structure"]
    assert bv.verify_unmixed(bv.bundled("A6").group, t1, t2).passed
    assert bv.search_unmixed(bv.bundled("M11"), strongly_real=True)["status"] == "absent"
    mixed = bv.search_mixed(bv.bundled("M10").group)
    assert mixed["status"] == "absent"
    assert mixed["index_two_subgroups"] == 1


def test_table_rows():
    row = bv.table_row("J1")
    assert row["x1"] == "aa^b" and row["j"] == (8, 10)
    t1, t2 = bv.evaluate_row("J1")
    assert t1.type == (19, 19, 11)
    assert t2.x.order() == 15


def test_hyperbolic_and_conjugacy():
    assert bv.is_hyperbolic(2, 3, 7)
    assert not bv.is_hyperbolic(2, 3, 6)
    g = bv.bundled("S5").group
    u, v = P("(1,2)", 5), P("(4,5)", 5)
    w = bv.is_conjugate(g, u, v)
    assert w is not None and u.conjugated_by(w) == v
    assert bv.is_conjugate(g, u, P("(1,2,3)", 5)) is None

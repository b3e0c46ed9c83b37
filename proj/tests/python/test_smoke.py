from fractions import Fraction

import pytest

import lensurg


def test_trefoil_coefficients():
    d = lensurg.delta(7, 2)
    assert d == {-1: Fraction(1), 0: Fraction(-1), 1: Fraction(1)}
    assert lensurg.delta(7, 2, route="torus") == d


def test_counterexample():
    assert lensurg.check_alternating(22, 5)
    assert not lensurg.check_pos(22, 5)
    t = lensurg.torsion_sequence(22, 5)
    assert t[11 + 11] == (-2, 1)


def test_quadratic_anchors():
    assert lensurg.associated_relation(43, 12) == (2, 1, 1, 7)
    dec = lensurg.decompose(191, 15)
    assert (dec["a"], dec["n"], dec["tau"], dec["q2"]) == (22, 26, 0, -73)
    assert lensurg.underline_involution(191, 15) == (102, 11)


def test_classify_record():
    rec = lensurg.classify(22, 17)
    assert rec["k1"] == 5
    assert rec["dual_class"] == [5, 9, 13, 17]
    assert "A2-point" in rec["anomalies"]
    assert any(m["family"] == "A1" for m in rec["matches"])


def test_enumerate_and_verify():
    recs = lensurg.enumerate_classes(40, "stable", threads=2)
    assert recs and all(r["decomposition"]["stable"] for r in recs)
    report = lensurg.verify(150)
    assert report["holds"]
    assert report["exceptions"] == []


def test_tables_and_grid():
    assert lensurg.table_csv("tau1").startswith("p,k1,types")
    assert len(lensurg.grid_ascii(22, 5, 9, -1, 1).splitlines()) == 3


def test_domain_error():
    with pytest.raises(ValueError):
        lensurg.classify(10, 4)

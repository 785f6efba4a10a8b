"""Smoke tests for the hgp python module (built extension on PYTHONPATH)."""

import pytest

hgp = pytest.importorskip("hgp")


def test_cyclotomic():
    assert hgp.cyclotomic(1) == [-1, 1]
    assert hgp.cyclotomic(12) == [1, 0, -1, 0, 1]
    assert hgp.cyclotomic(14) == [1, -1, 1, -1, 1, -1, 1]
    with pytest.raises(hgp.HgpError):
        hgp.cyclotomic(0)


def test_parse_and_char_poly():
    assert hgp.parse_tuple("2/6, 0") == ["1/3", "0"]
    assert hgp.char_poly("0,0,0,0,0,0") == [1, -6, 15, -20, 15, -6, 1]
    assert hgp.char_poly("1/3,2/3,1/12,5/12,7/12,11/12") == [1, 1, 0, -1, 0, 1, 1]
    with pytest.raises(hgp.HgpError):
        hgp.char_poly("1/3,1/3,1/3,1/3")


def test_parameter_condition():
    assert hgp.parameter_condition("0,0,0,0,0,0", "1/3,1/3,1/3,2/3,2/3,2/3")
    assert not hgp.parameter_condition("0,0,1/2,1/2", "1/2,1/4,3/4,0")


def test_group_and_omega():
    g = hgp.Group("0,0,0,0,0,0", "1/3,2/3,1/12,5/12,7/12,11/12")
    assert g.n == 3 and g.dim == 6
    omega = g.omega()
    assert all(omega[i][j] == -omega[j][i] for i in range(6) for j in range(6))
    ident = g.eval_word("AA^{-1}")
    assert ident == [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    t = g.transvection()
    assert sum(l * r for l, r in zip(t["v_L"], t["v_R"])) == 0


def test_catalog():
    labels = hgp.catalog_labels()
    assert len(labels) == 19
    assert "A-24" in labels and "30" in labels
    entry = hgp.catalog_entry("C-42")
    assert entry["suspect"] is True
    assert entry["beta_corrected"][-1] == "11/12"


def test_verify_label():
    report = hgp.verify_label("A-24")
    assert report["verdict"] == "pass"
    assert report["orthogonality_value"] == 0
    assert report["assumed_zariski_dense"] is True
    assert hgp.verify_label("A-24", "")["verdict"] == "fail"


def test_search_label():
    report = hgp.search_label("C-42")
    assert report["found_word"] is not None
    assert report["verdict"] == "pass"
    found = hgp.verify("0,0,1/4,1/4,3/4,3/4", "1/3,2/3,1/12,5/12,7/12,11/12",
                       report["found_word"])
    assert found["verdict"] == "pass"


def test_witness_label():
    wit = hgp.witness_label("30")
    assert wit["ok"] is True
    assert wit["a"] > 0 and wit["b"] > 0
    assert len(wit["W_basis"]) == 3

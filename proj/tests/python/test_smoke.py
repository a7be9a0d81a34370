import pytest

binomid = pytest.importorskip("binomid")


def test_catalog_size_and_membership():
    ids = binomid.catalog_ids()
    assert len(ids) >= 45
    for known in ("knuth", "knuth-gen", "complement1", "complement2"):
        assert known in ids


def test_catalog_entry_shape():
    e = binomid.catalog_entry("knuth")
    assert e["id"] == "knuth"
    assert e["params"] == [("n", "nat")]
    assert e["text"].startswith("identity knuth(n: nat)")


def test_verify_exact_instance():
    r = binomid.verify("knuth", {"n": 2})
    assert r["status"] == "ExactEqual"
    assert r["lhs"] == "1/2"


def test_verify_numeric_instance():
    r = binomid.verify("hdj69wz", {"n": 4, "v": "3/10"}, numeric=True, digits=30)
    assert r["status"] == "NumericEqual"
    assert r["relerr"] <= 1e-20


def test_spot_values():
    assert binomid.eval_lhs("complement2", {"n": 2}) == "16"
    assert binomid.eval_lhs("knuth", {"n": 4}) == "3/8"


def test_sweep_catalog():
    s = binomid.sweep_catalog("knuth", jobs=2)
    assert s["mismatch"] == 0
    assert s["exact"] == s["total"]


def test_parse_and_roundtrip():
    text = binomid.catalog_entry("complement2")["text"]
    assert binomid.parse_canonical(text) == text


def test_parse_error():
    with pytest.raises(binomid.ParseError):
        binomid.parse_canonical("identity broken(n: nat) : 1 ==")


def test_bind_error():
    with pytest.raises(binomid.BindError):
        binomid.parse_canonical("identity bad(n: nat) : sum(k=0..n) C(n,j) == 0")


def test_transform_emission():
    out = binomid.transform("binomial", "beta01", u="0", v="0")
    assert len(out) == 1
    assert out[0].startswith("identity")
    # it parses back
    binomid.parse_canonical(out[0])


def test_quadrature_cross_check():
    assert binomid.quad_relerr("K", "1", "1", 30) <= 1e-26
    assert binomid.quad_relerr("beta01", "1/2", "3/2", 30) <= 1e-26

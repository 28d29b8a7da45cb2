import itertools

import pytest
import sympy

import shv

VERMA = {"type": "verma", "h": "2", "c0": "1"}
WHITTAKER = {"type": "whittaker", "k": 1, "phi": {"I1": "1"}, "c0": "1"}


def element(family, index, coeff="1"):
    return {"terms": [{"coeff": coeff, "family": family, "index": index}]}


# Operators on pairs (even, odd) of functions of t: L_m = t^{m+1} d/dt,
# I_n = t^n, G_n = t^n ξ with ξ odd and ξ² = 1.
t = sympy.Symbol("t", positive=True)
s = sympy.Symbol("s")


def act(family, n, pair):
    even, odd = pair
    if family == "L":
        return (t ** (n + 1) * sympy.diff(even, t), t ** (n + 1) * sympy.diff(odd, t))
    if family == "I":
        return (t ** n * even, t ** n * odd)
    return (t ** n * odd, t ** n * even)


def act_element(doc, pair):
    total = (0, 0)
    for term in doc["terms"]:
        c = sympy.Rational(term["coeff"])
        out = act(term["family"], sympy.Rational(term["index"]), pair)
        total = (total[0] + c * out[0], total[1] + c * out[1])
    return total


def supercommutator(x, y, pair):
    (fx, nx), (fy, ny) = x, y
    sign = 1 if fx == "G" and fy == "G" else -1
    xy = act(fx, nx, act(fy, ny, pair))
    yx = act(fy, ny, act(fx, nx, pair))
    return (xy[0] + sign * yx[0], xy[1] + sign * yx[1])


def test_bracket_matches_operator_realization():
    generators = [(f, n) for f in "LIG" for n in range(-3, 4)]
    for x, y in itertools.product(generators, repeat=2):
        result = shv.bracket(element(*x), element(*y))
        assert result.ok
        for pair in [(t ** s, 0), (0, t ** s)]:
            expected = supercommutator(x, y, pair)
            got = act_element(result.doc, pair)
            assert all(sympy.simplify(sympy.powsimp(sympy.expand(a - b))) == 0 for a, b in zip(expected, got)), (x, y)


def test_bracket_example_and_canonical_order():
    r = shv.bracket(element("L", 2), element("L", 3))
    assert r.doc == {"terms": [{"coeff": "1", "family": "L", "index": 5}]}
    r = shv.bracket('{"terms":[{"coeff":"1","family":"L","index":1}]}',
                    {"algebra": "ns", "terms": [{"coeff": "1", "family": "G", "index": "3/2"}]}, algebra="ns")
    assert {"coeff": "3/2", "family": "G", "index": "5/2"} in r.doc["terms"]


def test_parse_errors_raise_document_error():
    with pytest.raises(shv.DocumentError):
        shv.bracket('{"terms": [', element("L", 1))
    with pytest.raises(ValueError):
        shv.bracket({"terms": [{"family": "Q", "index": 1}]}, element("L", 1))


def test_conformal():
    assert shv.conformal_check().ok
    bad = shv.conformal_check({"a": "1", "b": "1", "c": "0", "phi": "0", "psi": "1"})
    assert not bad.ok
    families = shv.conformal_classify(3).doc["families"]
    assert {"a": "1", "b": "0", "c": "0", "phi": "0", "psi": "Δ"} in families
    assert shv.conformal_classify(3, c_nonzero=True).doc["families"] == []
    assert len(shv.conformal_products().doc["tables"]) == 9


def test_lie_of_ns_and_quotient():
    assert shv.lie_of(6).doc["matches_S"] is True
    assert shv.ns_check(6).ok
    assert not shv.ns_check(4, corrupt=True).ok
    q = shv.quotient(2, 1, 1)
    assert q.ok and q.doc["jacobi"] == "pass"
    with pytest.raises(shv.UsageError):
        shv.quotient(1, 1, 0)


def test_induced_modules():
    r = shv.normal_form(VERMA, word="L1 L-1")
    assert r.doc == {"terms": [{"base": "v", "coeff": "-4", "word": []}]}
    assert shv.normal_form(VERMA, word="G-1 G-1").doc["terms"][0]["word"] == ["I-2"]
    left = shv.normal_form(VERMA, word="L2 G-1 I-1 L-3", strategy="leftmost").doc
    right = shv.normal_form(VERMA, word="L2 G-1 I-1 L-3").doc
    assert left == right
    v = {"terms": [{"coeff": "1", "word": ["L-1"], "base": "v"}]}
    assert shv.act(VERMA, v, "L1").doc == r.doc
    with pytest.raises(shv.FuelExhausted):
        shv.normal_form(VERMA, word="L3 L-1 L-1 L-1", fuel=3)


def test_probe_and_validation():
    v = {"terms": [{"coeff": "1", "word": ["I-1"], "base": "v"}]}
    r = shv.probe(VERMA, v)
    assert r.ok and r.doc["probes"][0]["terminal_text"] == "-1·v"
    assert shv.validate_module(WHITTAKER).ok
    degenerate = shv.probe({"type": "verma", "h": "2", "c0": "0"}, v)
    assert not degenerate.ok and degenerate.diagnostics
    a = shv.probe(WHITTAKER, random=5, seed=7)
    b = shv.probe(WHITTAKER, random=5, seed=7)
    assert a.ok and a.doc == b.doc

import warnings

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from mfcat import (
    BigradedLabel,
    Polynomial,
    ReesChart,
    leading_form,
    make_mf,
    polynomial_ring,
    rees_degenerate,
    segal_canonicalize,
    segal_hom_dimension,
)
from mfcat.errors import FiltrationTooShallow
from mfcat.segal import coordinate_ring, hom_table

from oracles import rees_fiber, segal_dimension


def test_canonicalize_examples():
    assert segal_canonicalize(BigradedLabel(5, 4, 3)) == BigradedLabel(11, 0, 3)
    assert segal_canonicalize(BigradedLabel(2, 0, 3)) == BigradedLabel(2, 0, 3)
    assert segal_canonicalize(BigradedLabel(2, 1, 3)) == BigradedLabel(2, 1, 3)


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 5))
def test_canonicalize_properties(a, b, N):
    c = segal_canonicalize(BigradedLabel(a, b, N))
    assert c.is_canonical()
    assert segal_canonicalize(c) == c
    # the relation (a, b) ~ (a - N, b + 2) preserves a + N*b/2 and b mod 2
    assert 2 * c.a + N * c.b == 2 * a + N * b
    assert c.b % 2 == b % 2


def test_hom_dimension_examples():
    R = coordinate_ring(3)
    assert segal_hom_dimension(BigradedLabel(0, 1, 3), BigradedLabel(2, 0, 3), R) == 6
    assert segal_hom_dimension(BigradedLabel(1, 0, 3), BigradedLabel(4, 0, 3), R) == 0
    assert segal_hom_dimension(BigradedLabel(0, 0, 3), BigradedLabel(0, 1, 3), R) == 1
    with pytest.raises(ValueError):
        segal_hom_dimension(BigradedLabel(0, 3, 3), BigradedLabel(0, 0, 3), R)


def test_hom_table_matches_counts():
    table = hom_table(3, [0, 1, 2])
    for (a, b, a2, b2), d in table.items():
        assert d == segal_dimension(3, (a, b), (a2, b2))


@given(st.integers(0, 3), st.integers(0, 1), st.integers(0, 3), st.integers(0, 1), st.integers(-4, 4))
def test_hom_dimension_twist_invariant(a, b, a2, b2, k):
    src, tgt = BigradedLabel(a, b, 2), BigradedLabel(a2, b2, 2)
    assert segal_hom_dimension(src, tgt) == segal_hom_dimension(src.twist(k), tgt.twist(k))


# Rees degenerations

S = polynomial_ring(["x", "p"], [0, 2])
CHART = ReesChart({"x": 1, "p": 1}, 2)


def test_rees_example():
    W = S("p*(x + x^2)")
    fam = rees_degenerate(W, CHART)
    assert fam.potential_at(1) == W
    assert fam.potential_at(0) == S("p*x")
    assert {k: str(v) for k, v in fam.potential.items()} == {0: "x*p", 1: "x^2*p"}
    for c in [0, 1, 2, sp.Rational(1, 3)]:
        expected = rees_fiber("p*(x + x**2)", {"x": 1, "p": 1}, 2, c)
        assert sp.expand(sp.sympify(str(fam.potential_at(c)).replace("^", "**")) - expected) == 0


def test_rees_family_brane_fibers():
    W = S("p*(x + x^2)")
    K = make_mf(S, W, [0], [2], [["p"]], [["x + x^2"]])
    fam = rees_degenerate(W, CHART, K)
    assert fam.brane_at(0).is_valid() and fam.brane_at(1).is_valid()
    assert fam.brane_at(1).same_data(K)
    assert fam.brane_at(0).beta.tolist() == [["x"]]


def test_rees_fixed_point():
    W = S("p*x")
    fam = rees_degenerate(W, CHART)
    assert fam.potential == {0: W}


def test_rees_vanishing_leading_form_warns():
    with pytest.warns(UserWarning, match="vanishes"):
        fam = rees_degenerate(S("p*x^3"), CHART)
    assert fam.potential_at(0).is_zero()


def test_rees_too_shallow():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with pytest.raises(FiltrationTooShallow):
            rees_degenerate(S("p"), CHART)
        K = make_mf(S, S("p*x"), [0], [2], [["p"]], [["x"]])
        with pytest.raises(FiltrationTooShallow):
            rees_degenerate(S("p*x"), ReesChart({"x": 1, "p": 1}, 2, alpha_order=2), K)


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-3, 3), min_size=1, max_size=5),
       st.integers(0, 3), st.integers(0, 3))
def test_rees_properties(terms, mx, mp):
    R = polynomial_ring(["x", "p"], [1, 1])
    W = Polynomial(R, {m: c for m, c in terms.items() if c})
    if not W:
        return
    weights = {"x": mx, "p": mp}
    d = min(mx * a + mp * b for (a, b) in W.terms)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        fam = rees_degenerate(W, ReesChart(weights, d))
    assert fam.potential_at(1) == W
    assert fam.potential_at(0) == leading_form(W, weights)

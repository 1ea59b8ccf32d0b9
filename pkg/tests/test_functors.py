import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfcat import (
    Polynomial,
    coker_presentation,
    direct_sum,
    dual,
    ext_table,
    knorrer_lift,
    koszul_brane,
    koszul_data,
    make_mf,
    monomial_basis,
    polynomial_ring,
    reorder,
    tensor_product,
    twist,
    unit_brane,
)
from mfcat.errors import ContractionMismatch, DegreeMismatch, NoSlicingChannel, RingMismatch, VariableLeak
from mfcat.library import a_n_brane, sample_library, xy_brane

from oracles import quotient_hilbert

R = polynomial_ring("x y")


def _sq(ring, v, shift=0):
    return make_mf(ring, ring(f"{v}^2"), [shift], [shift + 1], [[v]], [[v]])


def test_tensor_of_squares():
    T = tensor_product(_sq(R, "x"), _sq(R, "y"))
    assert T.rank == (2, 2)
    assert T.W == R("x^2 + y^2")
    assert T.is_valid()
    # rows (P0⊗Q1, P1⊗Q0), columns (P0⊗Q0, P1⊗Q1); sigma puts -1 on P1⊗Q1 -> P1⊗Q0
    assert T.alpha.tolist() == [["y", "x"], ["x", "-y"]]
    assert T.beta.tolist() == [["y", "x"], ["x", "-y"]]


def test_tensor_errors():
    with pytest.raises(RingMismatch):
        tensor_product(_sq(R, "x"), a_n_brane(1, 1))
    with pytest.raises(DegreeMismatch):
        tensor_product(_sq(R, "x"), make_mf(R, R("y^3"), [0], [1], [["y"]], [["y^2"]]))


@pytest.mark.parametrize("side", ["left", "right"])
def test_unit_law(side):
    K = xy_brane()
    U = unit_brane(K.ring, K.w)
    T = tensor_product(U, K) if side == "left" else tensor_product(K, U)
    assert T.same_data(K)


def _labels(parity_even, left, right):
    # parity labels of tensor basis vectors, in the order tensor_product uses
    def even(ls):
        return ls[0]

    def odd(ls):
        return ls[1]
    if parity_even:
        return [a + b for a in even(left) for b in even(right)] + [a + b for a in odd(left) for b in odd(right)]
    return [a + b for a in even(left) for b in odd(right)] + [a + b for a in odd(left) for b in even(right)]


def test_tensor_associativity_after_reordering():
    S = polynomial_ring("x y z")
    A, B, C = (_sq(S, v) for v in "xyz")
    single = (["0"], ["1"])
    ab = (_labels(True, single, single), _labels(False, single, single))
    bc = ab
    left_even, left_odd = _labels(True, ab, single), _labels(False, ab, single)
    right_even, right_odd = _labels(True, single, bc), _labels(False, single, bc)
    perm0 = [left_even.index(l) for l in right_even]
    perm1 = [left_odd.index(l) for l in right_odd]
    L = tensor_product(tensor_product(A, B), C)
    Rt = tensor_product(A, tensor_product(B, C))
    assert reorder(L, perm0, perm1).same_data(Rt)


def test_koszul_tensor_is_concatenated_koszul():
    S = polynomial_ring("x y u v")
    K1 = koszul_brane(koszul_data(S, ["x"], ["u"]))
    K2 = koszul_brane(koszul_data(S, ["y"], ["v"]))
    K = koszul_brane(koszul_data(S, ["x", "y"], ["u", "v"]))
    # e_S (x) e_T -> e_{S u (T+1)}: the odd basis comes out as ({1}, {0})
    assert reorder(tensor_product(K1, K2), [0, 1], [1, 0]).same_data(K)


def test_koszul_examples():
    K = xy_brane()
    assert K.alpha.tolist() == [["x"]] and K.beta.tolist() == [["y"]]
    S = polynomial_ring("x y z p")
    C = koszul_brane(koszul_data(S, ["x^3 + y^3 + z^3"], ["p"]))
    assert C.rank == (1, 1) and C.W == S("p*x^3 + p*y^3 + p*z^3")
    T = polynomial_ring("x y u v")
    K2 = koszul_brane(koszul_data(T, ["x", "y"], ["u", "v"], W="u*x + v*y"))
    assert K2.rank == (2, 2) and K2.is_valid()


def test_koszul_contraction_mismatch():
    with pytest.raises(ContractionMismatch):
        koszul_data(R, ["x"], ["y"], W="x^2")


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(2, 4), st.integers(0, 10 ** 6))
def test_random_koszul_branes(r, D, seed):
    rng = random.Random(seed)
    S = polynomial_ring("x y z")

    def rand_poly(d):
        basis = monomial_basis(S, d)
        return Polynomial(S, {m: rng.randint(-2, 2) for m in rng.sample(basis, min(3, len(basis)))})

    degs = [rng.randint(1, D - 1) for _ in range(r)]
    s = [rand_poly(a) for a in degs]
    s_Y = [rand_poly(D - a) for a in degs]
    data = koszul_data(S, s, s_Y, w=D, slot_degrees=[D - a for a in degs])
    K = koszul_brane(data)
    assert K.rank == (2 ** (r - 1), 2 ** (r - 1))
    assert K.is_valid()


def test_knorrer_point_base():
    data = koszul_data(R, ["y"], ["x"])
    assert knorrer_lift([0], data).same_data(xy_brane())
    two = knorrer_lift([0, 1], data)
    assert two.same_data(direct_sum(xy_brane(), twist(xy_brane(), 1)))
    E = knorrer_lift([0], data)
    assert ext_table(E, E).totals() == (1, 0)


def test_knorrer_with_base_variable():
    S = polynomial_ring("u x y")
    data = koszul_data(S, ["y"], ["x"])
    base = polynomial_ring("u")
    E = knorrer_lift([0], data, base)
    dims = ext_table(E, E, (0, 3)).dims()
    # End(Phi(O_Z)) = O_Z = Q[u]
    assert [dims[(k,)] for k in range(4)] == [(1, 0)] * 4


def test_knorrer_variable_leak():
    S = polynomial_ring("u x y")
    data = koszul_data(S, ["y"], ["x"])
    with pytest.raises(VariableLeak):
        knorrer_lift([0], data, polynomial_ring("x"))
    with pytest.raises(VariableLeak):
        knorrer_lift([0], data, polynomial_ring("q"))
    with pytest.raises(VariableLeak):
        knorrer_lift([0], data, polynomial_ring(["u"], [2]))


def test_coker_xy():
    pres = coker_presentation(xy_brane())
    assert pres.hilbert_series(0, 10) == [1] * 11
    assert pres.hilbert_series(0, 10) == [quotient_hilbert(["x*y", "y"], ["x", "y"], d) for d in range(11)]


def test_coker_trivial_brane_is_zero():
    # the presentation matrix is beta, so the trivial brane with beta = 1 has zero cokernel
    triv = make_mf(R, R("x*y"), [0], [2], [["x*y"]], [["1"]])
    assert coker_presentation(triv).hilbert_series(-2, 6) == [0] * 9
    # with the roles swapped the cokernel is R/(W) instead
    swapped = make_mf(R, R("x*y"), [0], [0], [["1"]], [["x*y"]])
    assert coker_presentation(swapped).hilbert_series(0, 4) == [1, 2, 2, 2, 2]


@pytest.mark.parametrize("w", [3, 4, 5])
def test_coker_x_power(w):
    S = polynomial_ring("x")
    mf = make_mf(S, S(f"x^{w}"), [0], [1], [["x"]], [[f"x^{w - 1}"]])
    assert coker_presentation(mf).hilbert_series(0, 8) == [1 if d <= w - 2 else 0 for d in range(9)]


def test_coker_additive():
    a, b = xy_brane(), twist(xy_brane(), 2)
    s = coker_presentation(direct_sum(a, b)).hilbert_series(-3, 6)
    pa = coker_presentation(a).hilbert_series(-3, 6)
    pb = coker_presentation(b).hilbert_series(-3, 6)
    assert s == [u + v for u, v in zip(pa, pb)]


def test_coker_needs_slicing():
    S = polynomial_ring(["x", "y"], [0, 0])
    mf = make_mf(S, S("x*y"), [0], [0], [["x"]], [["y"]], w=0)
    with pytest.raises(NoSlicingChannel):
        coker_presentation(mf).hilbert_function(0)


@pytest.mark.parametrize("pair", [("xy", "xy"), ("A3_a1", "A3_a2"), ("A4_a2", "A4_a4")])
def test_hom_equals_dual_tensor_after_regrading(pair):
    lib = sample_library()
    E, F = lib[pair[0]], lib[pair[1]]
    w = E.w[0]
    T = tensor_product(dual(E), F)
    U = unit_brane(T.ring, T.w)
    hom = {s.degree[0]: s for s in ext_table(E, F, (-6, 6))}
    ten = {s.degree[0]: s for s in ext_table(U, T, (-6, 6 + w))}
    for k in range(-6, 7):
        # Hom-even degree k is tensor-odd degree k; Hom-odd degree k is tensor-even degree k + w
        assert ten[k].dim_odd_space == hom[k].dim_even_space
        assert ten[k + w].dim_even_space == hom[k].dim_odd_space
        assert ten[k].dim_H_odd == hom[k].dim_H_even
        assert ten[k + w].dim_H_even == hom[k].dim_H_odd

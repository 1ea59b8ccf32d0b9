import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfcat import (
    HomComplex,
    MatrixFactorization,
    MFMorphism,
    cohomology_slice,
    cone,
    direct_sum,
    ext_table,
    find_nullhomotopy,
    hom_complex,
    is_nullhomotopic,
    leibniz_homotopy,
    make_mf,
    multiplication,
    polynomial_ring,
    suspension,
    twist,
    tyurina_annihilation,
)
from mfcat.errors import NoSlicingChannel, NotClosed, PotentialMismatch, SliceInfinite
from mfcat.library import sample_library, same_potential_pairs, xy_brane

from oracles import RawMF, hom_table

LIB = sample_library()


def _raw(mf):
    return RawMF.from_mfcat_dict(list(mf.ring.names), [d[0] for d in mf.ring.degrees], mf.to_dict())


def test_end_xy_shape():
    hc = hom_complex(xy_brane(), xy_brane())
    assert hc.rank(0) == 2 and hc.rank(1) == 2
    assert hc.d_squared_zero


def test_end_xy_slices():
    K = xy_brane()
    table = ext_table(K, K, (-3, 3))
    assert [s.degree for s in table.nonzero()] == [(0,)]
    assert table[0].dim_H_even == 1 and table[0].dim_H_odd == 0
    assert table.totals() == (1, 0)


@pytest.mark.parametrize("pair", [("xy", "xy"), ("A1_a1", "A1_a1"), ("A3_a1", "A3_a2"), ("A3_a2", "A3_a2"),
                                  ("A4_a1", "A4_a3"), ("A4_a4", "A4_a2"), ("koszul_r2", "koszul_r2")])
def test_matches_dense_oracle(pair):
    E, F = LIB[pair[0]], LIB[pair[1]]
    lo, hi = -3, 3
    ours = {k[0]: v for k, v in ext_table(E, F, (lo, hi)).dims().items()}
    assert ours == hom_table(_raw(E), _raw(F), lo, hi)


def test_potential_mismatch():
    with pytest.raises(PotentialMismatch):
        HomComplex(LIB["A1_a1"], LIB["A2_a1"])


def test_slicing_errors():
    S = polynomial_ring(["x", "y"], [0, 0])
    K = make_mf(S, S("x*y"), [0], [0], [["x"]], [["y"]], w=0)
    with pytest.raises(SliceInfinite):
        ext_table(K, K, (0, 0))
    T = polynomial_ring(["x", "y"], [1, -1])
    L = make_mf(T, T("x*y"), [0], [1], [["x"]], [["y"]], w=0)
    with pytest.raises(NoSlicingChannel):
        ext_table(L, L, (0, 0))


def test_additivity():
    K = xy_brane()
    single = ext_table(K, K, (-3, 3)).dims()
    double = ext_table(K, direct_sum(K, K), (-3, 3)).dims()
    assert double == {k: (2 * e, 2 * o) for k, (e, o) in single.items()}


@pytest.mark.parametrize("name", ["xy", "A3_a1", "A4_a2", "quadric"])
def test_suspension_swaps_parity(name):
    E = LIB[name]
    w = E.w[0]
    base = ext_table(E, E, (-4, 4 + w)).dims()
    shifted = ext_table(E, suspension(E), (-4, 4)).dims()
    for k in range(-4, 5):
        even, odd = shifted[(k,)]
        assert even == base[(k,)][1]
        assert odd == base[(k + w,)][0]


def test_window_monotone():
    E = LIB["A4_a2"]
    small = ext_table(E, E, (-2, 2))
    big = ext_table(E, E, (-5, 5))
    for s in small:
        b = big[s.degree]
        assert (s.dim_even_space, s.dim_odd_space, s.dim_H_even, s.dim_H_odd) == \
               (b.dim_even_space, b.dim_odd_space, b.dim_H_even, b.dim_H_odd)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["xy", "A2_a1", "A3_a2", "A4_a3"]), st.integers(-3, 3), st.integers(-2, 2))
def test_twist_equivariance(name, a, k):
    E = LIB[name]
    lhs = cohomology_slice(hom_complex(E, E), k)
    rhs = cohomology_slice(hom_complex(twist(E, a), twist(E, a)), k)
    assert (lhs.dim_H_even, lhs.dim_H_odd) == (rhs.dim_H_even, rhs.dim_H_odd)


def test_rank_nullity_on_every_slice():
    for p, q in same_potential_pairs(LIB)[:20]:
        for s in ext_table(LIB[p], LIB[q]):
            assert s.rank_nullity_holds()


def test_euler_slice_identity_counterexample():
    # E_0 -> O_0 -> E_2 is not a 2-periodic complex when w != 0, so the naive
    # slice Euler identity need not hold
    s = cohomology_slice(hom_complex(xy_brane(), xy_brane()), 0)
    assert (s.dim_even_space, s.dim_odd_space, s.dim_H_even, s.dim_H_odd) == (2, 4, 1, 0)
    assert not s.euler_identity_holds()
    assert s.rank_nullity_holds()


def test_representatives_are_closed_classes():
    E = LIB["A4_a2"]
    hc = hom_complex(E, E)
    for k in range(-3, 3):
        rep = cohomology_slice(hc, k, representatives=True)
        assert len(rep.even_representatives) == rep.dim_H_even
        assert len(rep.odd_representatives) == rep.dim_H_odd
        for phi in rep.even_representatives + rep.odd_representatives:
            assert phi.is_closed()
            assert not is_nullhomotopic(phi, hc)


def test_identity_on_cone_of_identity_is_nullhomotopic():
    C = cone(MFMorphism.identity(xy_brane()))
    h = find_nullhomotopy(MFMorphism.identity(C))
    assert h is not None
    assert h.differential() == MFMorphism.identity(C)


def test_identity_on_xy_not_nullhomotopic():
    assert not is_nullhomotopic(MFMorphism.identity(xy_brane()))


@pytest.mark.parametrize("name", list(LIB))
def test_partials_act_nullhomotopically_with_leibniz_witness(name):
    E = LIB[name]
    for v in E.ring.names:
        dW = E.W.derivative(v)
        if not dW:
            continue
        phi = multiplication(E, dW)
        da, db, ok = leibniz_homotopy(E, v)
        # the odd map with blocks (d alpha, d beta) is an explicit witness
        witness = MFMorphism(E, E, (phi.weight[0] - E.w[0],), 1, da.entries, db.entries)
        assert witness.differential() == phi
        assert is_nullhomotopic(phi)


def test_nullhomotopy_requires_closed():
    K = xy_brane()
    with pytest.raises(NotClosed):
        find_nullhomotopy(MFMorphism(K, K, 0, 0, [[1]], [[0]]))


def test_homotopy_invariance():
    E = LIB["A3_a2"]
    null = multiplication(E, E.W.derivative("x"))
    for k in range(-2, 2):
        for phi in cohomology_slice(hom_complex(E, E), k, representatives=True).even_representatives:
            assert is_nullhomotopic(phi.compose(null))
            assert is_nullhomotopic(null.compose(phi))


def test_tyurina_annihilation_xy():
    report = tyurina_annihilation(xy_brane())
    assert report.ok
    assert [str(g) for g in report.generators] == ["y", "x", "x*y"]


def test_potential_itself_annihilates():
    for name in ["A4_a2", "quadric", "koszul_r2"]:
        E = LIB[name]
        assert tyurina_annihilation(E, generators=[E.W]).ok


def test_corrupted_negative_control():
    R = polynomial_ring("x y")
    # a genuine factorization of x^2 mislabelled as one of x*y: y does not act nullhomotopically
    bad = MatrixFactorization.unchecked(R, R("x*y"), [0], [1], [["x"]], [["x"]])
    report = tyurina_annihilation(bad, window=(-2, 2))
    assert not report.ok
    assert any(f.get("generator") == "y" for f in report.failures)
    assert not report.d_squared_zero

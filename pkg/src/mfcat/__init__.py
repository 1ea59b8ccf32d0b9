"""Exact graded matrix factorizations over Q.

Quick tour::

    >>> from mfcat import polynomial_ring, make_mf, ext_table
    >>> R = polynomial_ring("x y")
    >>> K = make_mf(R, R("x*y"), [0], [1], [["x"]], [["y"]])
    >>> ext_table(K, K, (-3, 3)).totals()
    (1, 0)
"""
from .cohomology import (
    ExtTable,
    HomComplex,
    SliceReport,
    cohomology_slice,
    ext_table,
    find_nullhomotopy,
    hom_complex,
    is_nullhomotopic,
    tyurina_annihilation,
)
from .errors import *  # noqa: F401,F403
from .functors import (
    CokerPresentation,
    KoszulData,
    coker_presentation,
    exterior_basis,
    knorrer_lift,
    koszul_brane,
    koszul_data,
    reorder,
    tensor_product,
    unit_brane,
)
from .groebner import (
    INFINITE,
    GroebnerBasis,
    Ideal,
    MonomialOrder,
    buchberger,
    colength,
    groebner,
    ideal_membership,
    lex_order,
    normal_form,
    s_pairs_reduce_to_zero,
    standard_monomials,
)
from .mfcore import (
    GradedMatrix,
    MatrixFactorization,
    MFMorphism,
    cone,
    direct_sum,
    dual,
    leibniz_homotopy,
    make_mf,
    multiplication,
    suspension,
    twist,
    zero_mf,
)
from .rees import ReesChart, ReesFamily, leading_form, rees_degenerate
from .ring import (
    ANY_DEGREE,
    GradedRing,
    Polynomial,
    homogeneity_check,
    monomial_basis,
    parse_poly,
    partial_derivative,
    poly_arith,
    polynomial_ring,
)
from .segal import BigradedLabel, hom_table, segal_canonicalize, segal_hom_dimension
from .singularity import (
    euler_identity_check,
    jacobi_ideal,
    milnor_number,
    tyurina_ideal,
    tyurina_number,
)

__version__ = "0.1.0"

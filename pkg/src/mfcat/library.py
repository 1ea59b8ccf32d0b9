"""A small shipped library of graded factorizations used by tests and demos."""
from __future__ import annotations

import random
from functools import lru_cache

from .errors import CurvatureMismatch, HomogeneityViolation
from .functors import koszul_brane, koszul_data, tensor_product
from .mfcore import MatrixFactorization, make_mf
from .ring import polynomial_ring


@lru_cache(maxsize=None)
def _rings():
    return {
        "x": polynomial_ring(["x"]),
        "xy": polynomial_ring(["x", "y"]),
        "xyz": polynomial_ring(["x", "y", "z"]),
        "xyzp": polynomial_ring(["x", "y", "z", "p"]),
        "xyuv": polynomial_ring(["x", "y", "u", "v"]),
    }


def a_n_brane(n: int, a: int, ring=None) -> MatrixFactorization:
    """(x^a, x^(n+1-a)) over x^(n+1)."""
    if not 1 <= a <= n:
        raise ValueError(f"need 1 <= a <= n, got a={a}, n={n}")
    R = ring or _rings()["x"]
    return make_mf(R, R(f"x^{n + 1}"), [0], [a], [[f"x^{a}"]], [[f"x^{n + 1 - a}"]])


def xy_brane() -> MatrixFactorization:
    R = _rings()["xy"]
    return koszul_brane(koszul_data(R, ["y"], ["x"]))


def quadric_brane() -> MatrixFactorization:
    """x^2 + y^2 + z^2 as the tensor of three (x, x)-type branes."""
    R = _rings()["xyz"]
    parts = [make_mf(R, R(f"{v}^2"), [0], [1], [[v]], [[v]]) for v in "xyz"]
    return tensor_product(tensor_product(parts[0], parts[1]), parts[2])


def cubic_cone_brane() -> MatrixFactorization:
    """Koszul brane with s = x^3+y^3+z^3 and s_Y = p, all variables of degree 1."""
    R = _rings()["xyzp"]
    return koszul_brane(koszul_data(R, ["x^3 + y^3 + z^3"], ["p"]))


def rank_two_koszul_brane() -> MatrixFactorization:
    R = _rings()["xyuv"]
    return koszul_brane(koszul_data(R, ["x", "y"], ["u", "v"]))


def sample_library() -> dict:
    """Name -> verified factorization, in a fixed order."""
    lib = {}
    for n in range(1, 5):
        for a in range(1, n + 1):
            lib[f"A{n}_a{a}"] = a_n_brane(n, a)
    lib["xy"] = xy_brane()
    lib["quadric"] = quadric_brane()
    lib["cubic_cone"] = cubic_cone_brane()
    lib["koszul_r2"] = rank_two_koszul_brane()
    return lib


def same_potential_pairs(lib: dict) -> list:
    """All ordered pairs (name_E, name_F) whose members share W and w."""
    names = list(lib)
    return [(p, q) for p in names for q in names
            if lib[p].ring == lib[q].ring and lib[p].W == lib[q].W and lib[p].w == lib[q].w]


def _raw(mf: MatrixFactorization) -> dict:
    return {
        "ring": mf.ring,
        "W": mf.W,
        "shifts0": list(mf.shifts0),
        "shifts1": list(mf.shifts1),
        "alpha": [list(r) for r in mf.alpha.entries],
        "beta": [list(r) for r in mf.beta.entries],
        "w": mf.w,
    }


def mutate(mf: MatrixFactorization, rng: random.Random) -> tuple:
    """Change one nonzero entry of alpha or beta; returns (description, raw data).

    The entry is either doubled (breaks curvature) or multiplied by a
    variable (breaks homogeneity as well as curvature).
    """
    data = _raw(mf)
    spots = [(blk, i, j) for blk in ("alpha", "beta")
             for i, row in enumerate(data[blk]) for j, e in enumerate(row) if e]
    blk, i, j = rng.choice(spots)
    old = data[blk][i][j]
    if rng.random() < 0.5:
        new, how = old * 2, "doubled"
    else:
        v = rng.choice(mf.ring.gens())
        new, how = old * v, f"times {v}"
    data[blk][i][j] = new
    return f"{blk}[{i}][{j}] {how}", data


def mutation_suite(lib: dict, count: int = 10, seed: int = 0) -> list:
    """``count`` single-entry corruptions drawn from the library with a fixed seed."""
    rng = random.Random(seed)
    names = list(lib)
    out = []
    for _ in range(count):
        name = rng.choice(names)
        desc, data = mutate(lib[name], rng)
        out.append((name, desc, data))
    return out


def build_raw(data: dict) -> MatrixFactorization:
    return make_mf(data["ring"], data["W"], data["shifts0"], data["shifts1"],
                   data["alpha"], data["beta"], data["w"])


EXPECTED_MUTATION_ERRORS = (CurvatureMismatch, HomogeneityViolation)

"""Randomized property suites, each over at least 100 seeded cases."""

import random

from factories import (
    PRESET_POOL,
    random_poly,
    random_preset_algebra,
    random_vector,
)
from lieshift.construct import construct_theorem, mf_subalgebra
from lieshift.fields import QQ
from lieshift.invariants import b_of, index_of, is_regular, sample_point, trdeg_jacobian
from lieshift.liealg import LinearForm, bracket, direct_sum, vec
from lieshift.pbw import EnvelopingAlgebra, commutator, principal_symbol, symmetrize
from lieshift.polyring import PolyElement, poisson
from lieshift.presets import preset


def test_bracket_antisymmetry_and_jacobi():
    rng = random.Random(101)
    cases = 0
    while cases < 100:
        _, L = random_preset_algebra(rng)
        a = random_vector(rng, L.field, L.dim)
        b = random_vector(rng, L.field, L.dim)
        c = random_vector(rng, L.field, L.dim)
        ab = bracket(L, a, b)
        ba = bracket(L, b, a)
        assert ab == tuple(-x for x in ba)
        s = bracket(L, ab, c)
        s = tuple(x + y for x, y in zip(s, bracket(L, bracket(L, b, c), a)))
        s = tuple(x + y for x, y in zip(s, bracket(L, bracket(L, c, a), b)))
        assert all(x.is_zero for x in s)
        cases += 1
    assert cases == 100


def test_poisson_leibniz_and_jacobi():
    rng = random.Random(202)
    cases = 0
    while cases < 100:
        _, L = random_preset_algebra(rng)
        n = L.dim
        F = random_poly(rng, n, 2, terms=3)
        G = random_poly(rng, n, 2, terms=3)
        H = random_poly(rng, n, 2, terms=3)
        assert poisson(L, F, G) == -poisson(L, G, F)
        assert poisson(L, F, G * H) == poisson(L, F, G) * H + G * poisson(L, F, H)
        s = poisson(L, poisson(L, F, G), H)
        s = s + poisson(L, poisson(L, G, H), F)
        s = s + poisson(L, poisson(L, H, F), G)
        assert s.is_zero
        cases += 1
    assert cases == 100


def test_symbol_of_symmetrization_is_identity():
    rng = random.Random(303)
    cases = 0
    while cases < 100:
        _, L = random_preset_algebra(rng)
        A = EnvelopingAlgebra(L)
        p = random_poly(rng, L.dim, 4, terms=3)
        top = p.top_part()
        assert principal_symbol(symmetrize(A, top)) == top
        cases += 1
    assert cases == 100


def test_symmetrization_equivariance():
    rng = random.Random(404)
    cases = 0
    while cases < 100:
        _, L = random_preset_algebra(rng)
        A = EnvelopingAlgebra(L)
        F = random_poly(rng, L.dim, 3, terms=3)
        i = rng.randrange(L.dim)
        xi_poly = PolyElement.variable(QQ, L.dim, i)
        lhs = symmetrize(A, poisson(L, xi_poly, F))
        rhs = commutator(A.gen(i), symmetrize(A, F))
        assert lhs == rhs
        cases += 1
    assert cases == 100


def test_symbol_multiplicativity():
    rng = random.Random(505)
    cases = 0
    while cases < 100:
        _, L = random_preset_algebra(rng)
        A = EnvelopingAlgebra(L)
        u = symmetrize(A, random_poly(rng, L.dim, 3, terms=2))
        v = symmetrize(A, random_poly(rng, L.dim, 3, terms=2))
        if u.is_zero or v.is_zero:
            continue
        assert principal_symbol(u * v) == principal_symbol(u) * principal_symbol(v)
        cases += 1
    assert cases == 100


def test_trdeg_bounded_by_b_on_certified_sets():
    cases = 0
    # every full construction stays within the bound
    for name in PRESET_POOL:
        P = preset(name)
        cert = construct_theorem(P.algebra, casimirs=P.casimirs or None)
        assert cert.trdeg.value <= b_of(P.algebra)
        cases += 1
    # shifted families at randomized regular forms do too
    rng = random.Random(606)
    reductive = ("sl2", "so3", "gl2", "so4", "sl3")
    while cases < 105:
        name = reductive[rng.randrange(len(reductive))]
        P = preset(name)
        L = P.algebra
        gamma = LinearForm(QQ, random_vector(rng, QQ, L.dim, bound=50))
        if not is_regular(L, gamma):
            continue
        out = mf_subalgebra(L, P.casimirs, gamma)
        assert trdeg_jacobian(out).value <= b_of(L)
        cases += 1
    assert cases >= 105


def test_index_additivity_on_direct_sums():
    rng = random.Random(707)
    pool = [n for n in PRESET_POOL if preset(n).algebra.dim <= 6]
    cases = 0
    while cases < 100:
        n1 = pool[rng.randrange(len(pool))]
        n2 = pool[rng.randrange(len(pool))]
        L1, L2 = preset(n1).algebra, preset(n2).algebra
        s = direct_sum(L1, L2)
        assert index_of(s).value == index_of(L1).value + index_of(L2).value, (n1, n2)
        cases += 1
    assert cases == 100

import random
from fractions import Fraction as F
from itertools import permutations
from math import lcm

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polynomials, variables
from poleorder.groebner import (
    buchberger,
    normal_form_with_cofactors,
    quotient_basis,
    supported_only_at_origin,
)
from poleorder.linalg import EchelonSpace
from poleorder.polyalg import Polynomial, TermOrder, monomial_lcm, monomial_quotient, monomials_of_degree


def expand(cofactors, gens, n):
    total = Polynomial.zero(n)
    for c, g in zip(cofactors, gens):
        total = total + c * g
    return total


def s_polynomial(g, h, order):
    mg, mh = g.leading_monomial(order), h.leading_monomial(order)
    lcm = monomial_lcm(mg, mh)
    return (g.mul_term(monomial_quotient(lcm, mg), 1 / g.leading_coefficient(order))
            - h.mul_term(monomial_quotient(lcm, mh), 1 / h.leading_coefficient(order)))


def assert_groebner(gb):
    for i, g in enumerate(gb.basis):
        for h in gb.basis[i + 1:]:
            assert gb.normal_form(s_polynomial(g, h, gb.order)).is_zero()
    for row, g in zip(gb.transform, gb.basis):
        assert expand(row, gb.generators, gb.n) == g
    leads = gb.leading_monomials()
    for g in gb.basis:
        assert g.leading_coefficient(gb.order) == 1
        lm = g.leading_monomial(gb.order)
        for m in g.monomials():
            # auto-reduced: no term divisible by another element's leading monomial
            assert not any(all(a <= b for a, b in zip(o, m)) for o in leads if o != lm)


def test_buchberger_examples(xyz):
    x, y, z = xyz
    gb = buchberger([3 * x**2, 3 * y**2, 3 * z**2])
    assert set(gb.basis) == {x**2, y**2, z**2}
    assert_groebner(gb)
    assert buchberger([x]).basis == (x,)
    gb = buchberger([2 * x**2, 2 * y**3, 2 * z**5])
    assert set(gb.basis) == {x**2, y**3, z**5}


def test_buchberger_nontrivial_ideal(xyz):
    x, y, z = xyz
    f = x**3 * y + y**3 * z + z**3 * x
    jac = [f.diff(i) for i in range(3)]
    gb = buchberger(jac, TermOrder([F(1, 4)] * 3))
    assert_groebner(gb)
    assert len(quotient_basis(gb)) == 27


def test_normal_form_examples():
    x, y = variables(2)
    gb = buchberger([x**2, y**2])
    res = normal_form_with_cofactors(x**2 * y + y, gb)
    assert res.remainder == y
    assert res.cofactors == (y, Polynomial.zero(2))
    res = normal_form_with_cofactors(Polynomial.zero(2), gb)
    assert res.remainder.is_zero() and all(c.is_zero() for c in res.cofactors)
    res = normal_form_with_cofactors(x**2 + y**2, gb)
    assert res.remainder.is_zero()
    assert res.cofactors == (Polynomial.constant(1, 2), Polynomial.constant(1, 2))


def test_quotient_basis_examples(xyz):
    x, y, z = xyz
    stair = quotient_basis(buchberger([x**2, y**2, z**2]))
    assert sorted(stair) == sorted((a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1))
    assert quotient_basis(buchberger([x, y, z])) == [(0, 0, 0)]
    assert quotient_basis(buchberger([x * y, x**2])) is None


def test_supported_only_at_origin_examples(xyz):
    x, y, z = xyz
    assert supported_only_at_origin([3 * x**2, 3 * y**2, 3 * z**2])
    assert not supported_only_at_origin([x - 1, y, z])
    assert not supported_only_at_origin([x * y, x**2])
    # finite quotient but a second point (1, 0, 0)
    assert not supported_only_at_origin([x**2 - x, y, z])


IDEALS = [
    lambda x, y, z: [x**2 + y * z, y**2 - x * z, z**3],
    lambda x, y, z: [x * y - z, x**2 + y, z**2 - x],
    lambda x, y, z: [x**3 + y**3 + z**3 + x * y * z],
    lambda x, y, z: [x**2 * y + y**3, x**3, z**2 + x * y],
]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(IDEALS))), polynomials(max_exp=4, max_terms=6))
def test_division_identity_and_idempotence(which, p):
    gens = IDEALS[which](*variables(3))
    gb = buchberger(gens)
    res = normal_form_with_cofactors(p, gb)
    assert expand(res.cofactors, gens, 3) + res.remainder == p
    leads = gb.leading_monomials()
    for m in res.remainder.monomials():
        assert not any(all(a <= b for a, b in zip(lm, m)) for lm in leads)
    assert gb.normal_form(res.remainder) == res.remainder


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(IDEALS))), st.lists(polynomials(max_exp=2, max_terms=3), min_size=4, max_size=4))
def test_ideal_membership_soundness(which, mults):
    gens = IDEALS[which](*variables(3))
    p = expand(mults, gens, 3)
    assert buchberger(gens).normal_form(p).is_zero()


def test_permutation_invariance():
    for make in IDEALS:
        gens = make(*variables(3))
        ref = buchberger(gens).basis
        for perm in permutations(gens):
            assert buchberger(list(perm)).basis == ref


def graded_quotient_dim(gens, w, max_degree):
    """dim R/I by linear algebra degree by degree, for w-homogeneous gens."""
    step = F(1, lcm(*(x.denominator for x in w)))
    total = 0
    d = F(0)
    while d <= max_degree:
        monos = monomials_of_degree(d, w)
        index = {m: i for i, m in enumerate(monos)}
        space = EchelonSpace()
        for g in gens:
            (dg,) = g.weighted_degrees(w)
            for m in monomials_of_degree(d - dg, w):
                space.insert({index[t]: c for t, c in g.mul_term(m, 1).items()})
        total += len(monos) - space.rank
        d += step
    return total


def test_quotient_size_matches_linear_algebra():
    x, y, z = variables(3)
    cases = [
        ([F(1, 2), F(1, 3), F(1, 5)], x**2 + y**3 + z**5),
        ([F(1, 3)] * 3, x**3 + y**3 + z**3 + x * y * z),
        ([F(1, 4)] * 3, x**3 * y + y**3 * z + z**3 * x),
        ([F(1, 3), F(1, 3), F(1, 2)], x**2 * y + y**3 + z**2),
    ]
    for w, f in cases:
        jac = [f.diff(i) for i in range(3)]
        staircase = quotient_basis(buchberger(jac, TermOrder(w)))
        # the socle sits in degree n - 2 * sum(w); nothing survives above it
        top = 3 - 2 * sum(w)
        assert graded_quotient_dim(jac, w, top + 1) == len(staircase)


def test_deterministic_output():
    rng = random.Random(7)
    x, y, z = variables(3)
    gens = [x**2 + rng.randint(1, 5) * y * z, y**2 - x * z, z**3]
    assert buchberger(gens).basis == buchberger(list(gens)).basis

import random
import warnings

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from charp.errors import DegenerateInputWarning, UnsupportedRing
from charp.groebner import (
    Ideal,
    buchberger,
    colon_ideal,
    frobenius_power_ideal,
    ideal_intersect,
    ideal_member,
    normal_form,
    quotient_colon,
    quotient_member,
)
from charp.polyarith import Polynomial, RingCtx, exact_divide, multivariate_divide, random_polynomial
from charp.polygcd import poly_gcd
from strategies import ring_and_polys

Q11 = RingCtx(11, tuple("xyzuv"))
x, y, z, u, v = Q11.gens()
FERMAT = x**5 + y**5 + z**5 + u**5 + v**5
A = Q11.with_modulus(FERMAT)


def spoly(f, g):
    m = tuple(map(max, f.lm, g.lm))
    a = f.mul_term(tuple(i - j for i, j in zip(m, f.lm)), pow(f.lc, -1, f.ring.p))
    b = g.mul_term(tuple(i - j for i, j in zip(m, g.lm)), pow(g.lc, -1, g.ring.p))
    return a - b


def assert_groebner(G, gens):
    """Buchberger criterion, reducedness, and generator reduction, via plain division."""
    els = list(G.elements)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            _, r = multivariate_divide(spoly(els[i], els[j]), els)
            assert r.is_zero()
    for g in els:
        assert g.lc == 1
        for h in els:
            if h is not g:
                assert not any(all(a >= b for a, b in zip(m, h.lm)) for m in g.terms)
    for g in gens:
        _, r = multivariate_divide(g, els)
        assert r.is_zero()


def sympy_basis(gens, ring):
    syms = sympy.symbols(ring.vars)
    exprs = [
        sum(c * sympy.prod(s**e for s, e in zip(syms, m)) for m, c in g.terms.items()) for g in gens
    ]
    G = sympy.groebner(exprs, *syms, modulus=ring.p, order=ring.order)
    out = set()
    for g in G.exprs:
        terms = sympy.Poly(g, *syms, modulus=ring.p).terms()
        out.add(Polynomial(ring, {m: int(c) for m, c in terms}))
    return out


class TestBuchberger:
    def test_singleton(self):
        R = RingCtx(2, ("x", "y", "z"))
        a, b, c = R.gens()
        G = buchberger(Ideal([a * b - c**2]))
        assert G.elements == (a * b + c**2,)

    def test_fermat_with_linear_forms(self):
        G = buchberger(Ideal([y, z, u, v, FERMAT]))
        assert set(G.elements) == {y, z, u, v, x**5}

    def test_s_pair_reduces(self):
        R = RingCtx(2, ("x", "y"))
        a, b = R.gens()
        assert set(buchberger(Ideal([a**2, a * b])).elements) == {a**2, a * b}

    def test_unit_and_zero_ideals(self):
        R = RingCtx(3, ("x", "y"))
        a, b = R.gens()
        assert Ideal([a + 1, a]).is_unit()
        assert buchberger(Ideal([], R)).elements == ()
        assert ideal_member(R.zero(), Ideal([], R))
        assert not ideal_member(a, Ideal([], R))

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_matches_sympy(self, data):
        ring, *gens = data.draw(ring_and_polys(3, max_exp=2, max_terms=3))
        gens = [g for g in gens if g]
        if not gens:
            return
        G = buchberger(Ideal(gens, ring))
        assert_groebner(G, gens)
        assert set(G.elements) == sympy_basis(gens, ring)

    def test_lex_order_matches_sympy(self):
        R = RingCtx(7, ("x", "y", "z"), order="lex")
        a, b, c = R.gens()
        gens = [a**2 + b * c, a * b - c**2 + 1, b**3 - a]
        G = buchberger(Ideal(gens))
        assert_groebner(G, gens)
        assert set(G.elements) == sympy_basis(gens, R)


class TestNormalForm:
    G = buchberger(Ideal([y, z, u, v, x**5]))

    def test_x4_survives(self):
        assert normal_form(x**4, self.G) == x**4

    def test_generators_vanish(self):
        for g in self.G:
            assert normal_form(g, self.G).is_zero()
        assert normal_form(x**5, self.G).is_zero()

    @settings(max_examples=40, deadline=None)
    @given(ring_and_polys(4, max_exp=2, max_terms=3))
    def test_idempotent(self, data):
        ring, f, *gens = data
        G = Ideal(gens, ring).gb
        r = normal_form(f, G)
        assert normal_form(r, G) == r
        assert ideal_member(f - r, Ideal(gens, ring))


class TestMembership:
    I = Ideal([y, z, u, v, FERMAT])

    def test_examples(self):
        assert not ideal_member(x**4, self.I)
        assert ideal_member(x**5, self.I)
        assert ideal_member(Q11.zero(), self.I)

    def test_quotient(self):
        J = Ideal([y, z, u, v])
        assert quotient_member(x**5, J, A)
        assert not quotient_member(x**4, J, A)
        assert quotient_member(FERMAT, Ideal([], Q11), A)

    def test_quotient_needs_modulus(self):
        with pytest.raises(UnsupportedRing):
            quotient_member(x, Ideal([y]), Q11)


R2 = RingCtx(2, ("x", "y"))
a2, b2 = R2.gens()


class TestIntersectColon:
    def test_intersections(self):
        assert ideal_intersect(Ideal([a2]), Ideal([b2])) == Ideal([a2 * b2])
        assert ideal_intersect(Ideal([a2 * b2**2]), Ideal([a2**2 * b2])) == Ideal([a2**2 * b2**2])
        f = a2**2 + a2 * b2 + 1
        assert ideal_intersect(Ideal([f]), Ideal([f])) == Ideal([f])

    def test_colons(self):
        assert colon_ideal(Ideal([a2 * b2]), a2) == Ideal([b2])
        # lcm(xy^2, x^2y) / x^2y = y
        assert colon_ideal(Ideal([a2 * b2**2]), a2**2 * b2) == Ideal([b2])
        K = colon_ideal(Ideal([y, z, u, v, FERMAT]), x**4)
        assert K == Ideal([x, y, z, u, v])

    def test_colon_by_zero_is_unit(self):
        with pytest.warns(DegenerateInputWarning):
            assert colon_ideal(Ideal([a2]), R2.zero()).is_unit()

    def test_quotient_colon(self):
        R = RingCtx(2, ("x", "y", "z"))
        X, Y, Z = R.gens()
        Q = R.with_modulus(X * Y + Z**2)
        assert quotient_colon(Ideal([X]), Z, Q) == Ideal([X, Z, X * Y + Z**2])

    @settings(max_examples=30, deadline=None)
    @given(ring_and_polys(3, max_exp=2, max_terms=2))
    def test_intersection_commutes(self, data):
        ring, f, g, h = data
        I, J = Ideal([f, g], ring), Ideal([h], ring)
        K1, K2 = ideal_intersect(I, J), ideal_intersect(J, I)
        assert K1 == K2
        assert ideal_intersect(I, I) == I
        for k in K1.gens:
            assert ideal_member(k, I) and ideal_member(k, J)

    @settings(max_examples=40, deadline=None)
    @given(ring_and_polys(2, max_exp=2, max_terms=3))
    def test_principal_colon_matches_gcd(self, data):
        ring, f, g = data
        if f.is_zero() or g.is_zero():
            return
        expected = exact_divide(f, poly_gcd(f, g))
        assert colon_ideal(Ideal([f], ring), g) == Ideal([expected], ring)


class TestFrobeniusIdeal:
    def test_examples(self):
        R = RingCtx(2, ("x", "y", "z"))
        X, Y, Z = R.gens()
        assert frobenius_power_ideal(Ideal([Y, Z]), 2).gens == (Y**4, Z**4)
        assert frobenius_power_ideal(Ideal([y, z, u, v]), 1).gens == (y**11, z**11, u**11, v**11)
        assert frobenius_power_ideal(Ideal([a2 + b2]), 1).gens == (a2**2 + b2**2,)
        with pytest.raises(ValueError):
            frobenius_power_ideal(Ideal([a2]), 0)

    @settings(max_examples=30, deadline=None)
    @given(ring_and_polys(3, max_exp=2, max_terms=2), st.integers(0, 10**6))
    def test_independent_of_generators(self, data, seed):
        ring, f, g, h = data
        rng = random.Random(seed)
        I = Ideal([f, g], ring)
        # same ideal, other generators: add a combination, change basis
        c = random_polynomial(ring, rng, 1, 2)
        J = Ideal([f + c * g, g, h * f], ring)
        assert I == J
        assert frobenius_power_ideal(I, 1) == frobenius_power_ideal(J, 1)


def test_remark_identity_in_polynomial_ring():
    R = RingCtx(2, ("x", "y", "z"))
    rng = random.Random(7)
    for _ in range(25):
        f = random_polynomial(R, rng, 3)
        g = random_polynomial(R, rng, 3)
        lhs = frobenius_power_ideal(colon_ideal(Ideal([f]), g), 1)
        rhs = colon_ideal(Ideal([f**2]), g**2)
        assert lhs == rhs


def test_gb_cache_consistent_across_threads():
    from concurrent.futures import ThreadPoolExecutor

    I = Ideal([y, z, u, v, FERMAT])
    with ThreadPoolExecutor(4) as pool:
        bases = list(pool.map(lambda _: I.gb, range(8)))
    assert all(b is bases[0] for b in bases)


def test_no_warning_for_nonzero_colon():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        colon_ideal(Ideal([a2]), b2)

"""Hypothesis strategies for polynomials over small prime fields."""

from hypothesis import strategies as st

from charp.polyarith import Polynomial, RingCtx

RINGS = {p: RingCtx(p, ("x", "y", "z")) for p in (2, 3, 5)}
RINGS2 = {p: RingCtx(p, ("x", "y")) for p in (2, 3, 5)}


def polys(ring: RingCtx, max_exp: int = 3, max_terms: int = 4, nonzero: bool = False):
    mono = st.tuples(*[st.integers(0, max_exp)] * ring.nvars)
    terms = st.dictionaries(mono, st.integers(1, ring.p - 1), min_size=1 if nonzero else 0, max_size=max_terms)
    return terms.map(lambda t: Polynomial(ring, t))


def ring_and_polys(n: int, rings=RINGS, **kw):
    """A ring from ``rings`` together with n polynomials in it."""
    return st.sampled_from(sorted(rings)).flatmap(
        lambda p: st.tuples(st.just(rings[p]), *[polys(rings[p], **kw)] * n)
    )

"""Multivariate GCD over GF(p) by recursive primitive polynomial remainder sequences.

The polynomial is viewed as univariate in its highest-index variable with
coefficients in GF(p)[remaining variables]; contents are handled recursively.
"""

from __future__ import annotations

from .polyarith import Polynomial, exact_divide


def _split(f: Polynomial, v: int) -> dict[int, Polynomial]:
    """Coefficients of f as a polynomial in variable v."""
    parts: dict[int, dict] = {}
    for m, c in f.terms.items():
        k = m[v]
        parts.setdefault(k, {})[m[:v] + (0,) + m[v + 1 :]] = c
    return {k: Polynomial._raw(f.ring, t) for k, t in parts.items()}


def _lead_in(f: Polynomial, v: int) -> tuple[int, Polynomial]:
    d = f.degree_in(v)
    return d, Polynomial._raw(
        f.ring, {m[:v] + (0,) + m[v + 1 :]: c for m, c in f.terms.items() if m[v] == d}
    )


def _content(f: Polynomial, v: int) -> Polynomial:
    coeffs = sorted(_split(f, v).values(), key=lambda c: (len(c), c.degree()))
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd(g, c)
    return g


def _primitive_part(f: Polynomial, v: int) -> Polynomial:
    return exact_divide(f, _content(f, v))


def _prem(a: Polynomial, b: Polynomial, v: int) -> Polynomial:
    # pseudo-remainder without the trailing lc(b)^k factor; callers take primitive parts
    n, lcb = _lead_in(b, v)
    shift = [0] * a.ring.nvars
    r = a
    while r and r.degree_in(v) >= n:
        dr, lcr = _lead_in(r, v)
        shift[v] = dr - n
        r = lcb * r - (lcr * b).mul_term(shift)
    return r


def _gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """A gcd of f and g, defined up to a nonzero constant."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    one = f.ring.one()
    if f.is_constant() or g.is_constant():
        return one
    fv, gv = f.used_vars(), g.used_vars()
    v = max(fv | gv)
    if v not in fv:
        return _gcd(f, _content(g, v))
    if v not in gv:
        return _gcd(_content(f, v), g)
    cf, cg = _content(f, v), _content(g, v)
    c = _gcd(cf, cg)
    a, b = exact_divide(f, cf), exact_divide(g, cg)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while True:
        r = _prem(a, b, v)
        if r.is_zero():
            break
        if r.degree_in(v) == 0:
            b = one
            break
        a, b = b, _primitive_part(r, v)
    return c * b


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor in GF(p)[vars].

    gcd(f, 0) is f made monic and gcd(0, 0) is 0.  Only defined for
    polynomial rings; quotient contexts raise UnsupportedRing.
    """
    f._check(g)
    f.ring.require_polynomial_ring("poly_gcd")
    return _gcd(f, g).monic()


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return f.ring.zero()
    return exact_divide(f * g, poly_gcd(f, g)).monic()

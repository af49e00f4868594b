"""Buchberger's algorithm and the ideal operations built on it.

Everything here works in the ambient polynomial ring of the context.  A
hypersurface quotient S/(F) is handled by adjoining F to the ideal, see
:func:`quotient_member` and :func:`quotient_colon`.
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInputWarning, ResourceBoundExceeded, UnsupportedRing
from .polyarith import (
    Monomial,
    Polynomial,
    RingCtx,
    _reduce,
    exact_divide,
    frobenius_power,
)

DEFAULT_MAX_PAIRS = 200_000


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _reducer_order(polys: Iterable[Polynomial]) -> list[Polynomial]:
    # Short reducers first: monomials kill terms in one step.
    polys = list(polys)
    if not polys:
        return polys
    key = polys[0].ring.desc_key
    return sorted(polys, key=lambda g: (len(g), key(g.lm)))


def _nf(f: Polynomial, reducers: Sequence[Polynomial]) -> Polynomial:
    if not reducers or not f:
        return f
    return Polynomial._raw(f.ring, _reduce(f, reducers, track=False)[1])


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis: monic, auto-reduced, sorted by descending leading monomial."""

    elements: tuple[Polynomial, ...]
    order: str

    def __post_init__(self):
        object.__setattr__(self, "_reducers", _reducer_order(self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def __str__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"


class Ideal:
    """A finitely generated ideal of a polynomial ring.

    Zero generators are dropped, so the zero ideal has an empty generator
    list.  The reduced Gröbner basis is computed on first use and cached.
    """

    def __init__(self, gens: Iterable[Polynomial], ring: RingCtx | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("the ring is required for an ideal without generators")
            ring = gens[0].ring
        ring = ring.ambient
        for g in gens:
            if g.ring.p != ring.p or g.ring.vars != ring.vars:
                raise ValueError(f"generator {g} is not in {ring}")
        self.ring = ring
        self.gens = tuple(g.rename_ring(ring) for g in gens if g)
        self._gb: GroebnerBasis | None = None
        self._lock = threading.Lock()

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = buchberger(self)
        return self._gb

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring.compatible(other.ring) and self.gb.elements == other.gb.elements

    def __hash__(self):
        return hash(self.gb.elements)

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.gens + other.gens, self.ring)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gb.is_unit()

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"

    __repr__ = __str__


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    # f, g monic
    m = _lcm(f.lm, g.lm)
    sf = tuple(a - b for a, b in zip(m, f.lm))
    sg = tuple(a - b for a, b in zip(m, g.lm))
    return f.mul_term(sf) - g.mul_term(sg)


def buchberger(I: Ideal, max_pairs: int = DEFAULT_MAX_PAIRS) -> GroebnerBasis:
    """Reduced Gröbner basis of I under its ring's order.

    Normal selection strategy with the Gebauer-Möller update, which applies
    the coprime and chain criteria.
    """
    ring = I.ring
    key = ring.desc_key
    basis: list[Polynomial] = []
    active: list[int] = []
    pairs: list[tuple[int, int, Monomial]] = []

    def update(h: int) -> None:
        nonlocal pairs, active
        lh = basis[h].lm
        cand = [(g, _lcm(lh, basis[g].lm)) for g in active]
        kept = []
        for idx, (g, l) in enumerate(cand):
            if _coprime(lh, basis[g].lm):
                kept.append((g, l))
                continue
            others = cand[idx + 1 :] + kept
            if not any(_divides(l2, l) for _, l2 in others):
                kept.append((g, l))
        new = [(g, h, l) for g, l in kept if not _coprime(lh, basis[g].lm)]
        pairs = [
            (a, b, l)
            for a, b, l in pairs
            if not (
                _divides(lh, l)
                and _lcm(basis[a].lm, lh) != l
                and _lcm(basis[b].lm, lh) != l
            )
        ] + new
        active = [g for g in active if not _divides(lh, basis[g].lm)] + [h]

    def add(h: Polynomial) -> None:
        basis.append(h.monic())
        update(len(basis) - 1)

    for g in I.gens:
        h = _nf(g, _reducer_order(basis[i] for i in active))
        if h:
            add(h)
    processed = 0
    while pairs:
        processed += 1
        if processed > max_pairs:
            raise ResourceBoundExceeded(f"Buchberger exceeded {max_pairs} S-pairs")
        best = max(range(len(pairs)), key=lambda k: key(pairs[k][2]))
        a, b, _ = pairs.pop(best)
        h = _nf(_spoly(basis[a], basis[b]), _reducer_order(basis[i] for i in active))
        if h:
            add(h)
    return _reduce_basis([basis[i] for i in active], ring)


def _reduce_basis(G: list[Polynomial], ring: RingCtx) -> GroebnerBasis:
    key = ring.desc_key
    G = sorted(G, key=lambda g: key(g.lm))
    minimal: list[Polynomial] = []
    for i, g in enumerate(G):
        if any(_divides(h.lm, g.lm) for j, h in enumerate(G) if j != i and (h.lm != g.lm or j < i)):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = _reducer_order(minimal[:i] + minimal[i + 1 :])
        lead = Polynomial._raw(ring, {g.lm: g.lc})
        reduced.append((lead + _nf(g - lead, others)).monic())
    reduced.sort(key=lambda g: key(g.lm))
    return GroebnerBasis(tuple(reduced), ring.order)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of f modulo a Gröbner basis; zero iff f lies in the ideal."""
    if G.elements:
        f._check(G.elements[0])
    return _nf(f, G._reducers)


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    if f.is_zero():
        return True
    return normal_form(f.rename_ring(I.ring), I.gb).is_zero()


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return I == J


def _elimination_ring(ring: RingCtx) -> RingCtx:
    name = "t"
    while name in ring.vars:
        name = "_" + name
    order = "lex" if ring.order == "lex" else "elim"
    return RingCtx(ring.p, (name,) + ring.vars, order, None, ring.max_degree)


def _embed(f: Polynomial, ring: RingCtx, t_exp: int = 0) -> Polynomial:
    return Polynomial._raw(ring, {(t_exp,) + m: c for m, c in f.terms.items()})


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    if not I.ring.compatible(J.ring):
        raise ValueError("ideals live in different rings")
    base = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal([], base)
    R = _elimination_ring(base)
    t = R.var(0)
    one_minus_t = R.one() - t
    gens = [t * _embed(g, R) for g in I.gens] + [one_minus_t * _embed(g, R) for g in J.gens]
    G = buchberger(Ideal(gens, R))
    out = [
        Polynomial._raw(base, {m[1:]: c for m, c in g.terms.items()})
        for g in G
        if all(m[0] == 0 for m in g.terms)
    ]
    return Ideal(out, base)


def colon_ideal(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = (I ∩ (f)) / f.  By convention (I : 0) is the unit ideal."""
    ring = I.ring
    if f.is_zero():
        warnings.warn("(I : 0) taken to be the unit ideal", DegenerateInputWarning, stacklevel=2)
        return Ideal([ring.one()], ring)
    f = f.rename_ring(ring)
    K = ideal_intersect(I, Ideal([f], ring))
    return Ideal([exact_divide(k, f) for k in K.gens], ring)


def frobenius_power_ideal(I: Ideal, e: int) -> Ideal:
    """The bracket power I^[p^e], generated by the p^e-th powers of the generators."""
    if e < 1:
        raise ValueError("e must be at least 1")
    return Ideal([frobenius_power(g, e) for g in I.gens], I.ring)


def _require_modulus(ctx: RingCtx) -> Polynomial:
    if ctx.modulus is None:
        raise UnsupportedRing("this operation needs a ring context with a modulus")
    return ctx.modulus


def lift_to_ambient(I: Ideal, ctx: RingCtx) -> Ideal:
    """Preimage I + (F) of an ideal of S/(F) in the ambient ring S."""
    F = _require_modulus(ctx)
    return Ideal(I.gens + (F.rename_ring(I.ring),), I.ring)


def quotient_member(f: Polynomial, I: Ideal, ctx: RingCtx) -> bool:
    """f ∈ I in S/(F), i.e. f ∈ I + (F) in S."""
    return ideal_member(f, lift_to_ambient(I, ctx))


def quotient_colon(I: Ideal, f: Polynomial, ctx: RingCtx) -> Ideal:
    """Preimage in S of the colon (I : f) computed in S/(F)."""
    return colon_ideal(lift_to_ambient(I, ctx), f)

"""Sparse multivariate polynomials over a prime field GF(p).

A polynomial is a map from exponent tuples to coefficients in ``range(1, p)``;
zero coefficients are never stored, so the zero polynomial has no terms.

    >>> R = RingCtx(2, ("x", "y"))
    >>> x, y = R.gens()
    >>> (x + y) * (x + y)
    x^2+y^2

Values are immutable once built; every operation returns a new polynomial.
"""

from __future__ import annotations

import heapq
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Mapping, Sequence

from .errors import CharPError, ContextMismatch, ResourceBoundExceeded, UnsupportedRing

Monomial = tuple[int, ...]

ORDERS = ("grevlex", "lex", "elim")
DEFAULT_MAX_DEGREE = 600


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class NotAPthPower(CharPError):
    """Raised by :func:`pth_root` when some exponent is not divisible by p."""


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p), always stored fully reduced."""

    value: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ContextMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        return FieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(pow(self.value, k, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        return self * FieldElement(v, self.p).inverse()

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p)")
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def pth_root(self) -> FieldElement:
        # Fermat: c^p = c, so every element is its own p-th root.
        return self

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0


def _grevlex_key(m: Monomial):
    return (-sum(m), m[::-1])


def _lex_key(m: Monomial):
    return tuple(-e for e in m)


def _elim_key(m: Monomial):
    return (-m[0], -sum(m) + m[0], m[:0:-1])


_DESC_KEYS: dict[str, Callable[[Monomial], object]] = {
    "grevlex": _grevlex_key,
    "lex": _lex_key,
    "elim": _elim_key,
}


@dataclass(frozen=True)
class RingCtx:
    """GF(p)[vars], optionally modulo a single polynomial ``modulus``.

    ``order`` is ``"grevlex"`` (default) or ``"lex"``; ``"elim"`` is the
    internal block order used for elimination (first variable dominates,
    grevlex on the rest).  ``max_degree`` caps the total degree of any
    product or Frobenius power built in this ring.
    """

    p: int
    vars: tuple[str, ...]
    order: str = "grevlex"
    modulus: Polynomial | None = None
    max_degree: int = DEFAULT_MAX_DEGREE

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if not self.vars:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")
        if self.max_degree < 1:
            raise ValueError("max_degree must be positive")
        if self.modulus is not None:
            F = self.modulus
            if F.ring.p != self.p or F.ring.vars != self.vars:
                raise ContextMismatch("modulus lives in a different ring")
            if F.is_zero() or F.is_constant():
                raise ValueError("modulus must be nonzero and non-constant")
            if F.ring.modulus is not None or F.ring.order != self.order:
                object.__setattr__(self, "modulus", Polynomial(self.ambient, F.terms))

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @cached_property
    def ambient(self) -> RingCtx:
        """The polynomial ring underlying this context (modulus dropped)."""
        if self.modulus is None:
            return self
        return RingCtx(self.p, self.vars, self.order, None, self.max_degree)

    @property
    def desc_key(self) -> Callable[[Monomial], object]:
        """Sort key under which larger monomials come first."""
        return _DESC_KEYS[self.order]

    def compatible(self, other: RingCtx) -> bool:
        return self.p == other.p and self.vars == other.vars and self.order == other.order

    def with_modulus(self, F: Polynomial | None) -> RingCtx:
        return RingCtx(self.p, self.vars, self.order, F, self.max_degree)

    def with_order(self, order: str) -> RingCtx:
        mod = None if self.modulus is None else self.modulus.terms
        ring = RingCtx(self.p, self.vars, order, None, self.max_degree)
        if mod is None:
            return ring
        return ring.with_modulus(Polynomial(ring, mod))

    def require_polynomial_ring(self, what: str) -> None:
        if self.modulus is not None:
            raise UnsupportedRing(f"{what} is only defined over a polynomial ring (no modulus)")

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: int) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str | int) -> Polynomial:
        i = name if isinstance(name, int) else self.vars.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {tuple(exps)}")
        return Polynomial(self, {tuple(exps): coeff})

    def monomials_of_degree(self, d: int) -> Iterator[Monomial]:
        """All exponent vectors of total degree d, largest first under the order."""
        yield from sorted(_compositions(d, self.nvars), key=self.desc_key)

    def __str__(self):
        s = f"GF({self.p})[{','.join(self.vars)}]"
        if self.modulus is not None:
            s += f"/({self.modulus})"
        return s


def _compositions(d: int, n: int) -> Iterator[Monomial]:
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


class Polynomial:
    """An element of ``ring`` (for quotient contexts: a representative in the ambient ring)."""

    def __init__(self, ring: RingCtx, terms: Mapping[Monomial, int] | None = None):
        self.ring = ring
        p = ring.p
        n = ring.nvars
        clean: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            c %= p
            if c:
                if len(m) != n:
                    raise ValueError(f"exponent vector {m} does not match {n} variables")
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring: RingCtx, terms: dict[Monomial, int]) -> Polynomial:
        # terms must already be canonical (reduced, no zeros)
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    @cached_property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return min(self.terms, key=self.ring.desc_key)

    @property
    def lc(self) -> int:
        return self.terms[self.lm]

    def coefficient(self, m: Sequence[int]) -> int:
        return self.terms.get(tuple(m), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending monomial order."""
        key = self.ring.desc_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def used_vars(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if not self.ring.compatible(other.ring):
            raise ContextMismatch(f"{self.ring} vs {other.ring}")

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.const(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero()
        deg = self.degree() + other.degree()
        if deg > self.ring.max_degree:
            raise ResourceBoundExceeded(
                f"product degree {deg} exceeds max_degree {self.ring.max_degree}"
            )
        a, b = (self, other) if len(self.terms) >= len(other.terms) else (other, self)
        p = self.ring.p
        out: dict[Monomial, int] = {}
        add = operator.add
        for mb, cb in b.terms.items():
            for ma, ca in a.terms.items():
                m = tuple(map(add, ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._raw(self.ring, {m: c % p for m, c in out.items() if c % p})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> Polynomial:
        c %= self.ring.p
        if not c:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: v * c % p for m, v in self.terms.items()})

    def mul_term(self, mono: Sequence[int], c: int = 1) -> Polynomial:
        c %= self.ring.p
        if not c or not self.terms:
            return self.ring.zero()
        if self.degree() + sum(mono) > self.ring.max_degree:
            raise ResourceBoundExceeded("product degree exceeds max_degree")
        p = self.ring.p
        add = operator.add
        return Polynomial._raw(
            self.ring, {tuple(map(add, m, mono)): v * c % p for m, v in self.terms.items()}
        )

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(pow(self.lc, -1, self.ring.p))

    def rename_ring(self, ring: RingCtx) -> Polynomial:
        """Reinterpret the same terms in a compatible-shape ring (e.g. another order)."""
        if ring.p != self.ring.p or ring.vars != self.ring.vars:
            raise ContextMismatch(f"{self.ring} vs {ring}")
        return Polynomial._raw(ring, self.terms)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.p == other.ring.p
            and self.ring.vars == other.ring.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.p, self.ring.vars, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        return "+".join(_term_str(m, c, self.ring.vars) for m, c in self.sorted_terms())

    __repr__ = __str__


def _term_str(m: Monomial, c: int, names: Sequence[str]) -> str:
    factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
    if not factors:
        return str(c)
    mono = "*".join(factors)
    return mono if c == 1 else f"{c}*{mono}"


def monomial_str(m: Monomial, names: Sequence[str]) -> str:
    return _term_str(m, 1, names)


def poly_arith(f: Polynomial, g: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def frobenius_power(f: Polynomial, e: int) -> Polynomial:
    """f^(p^e): scale every exponent by p^e (coefficients are fixed by Fermat)."""
    if e < 0:
        raise ValueError("e must be non-negative")
    if e == 0 or not f.terms:
        return f
    q = f.ring.p**e
    if f.degree() * q > f.ring.max_degree:
        raise ResourceBoundExceeded(
            f"Frobenius power of degree {f.degree() * q} exceeds max_degree {f.ring.max_degree}"
        )
    return Polynomial._raw(f.ring, {tuple(a * q for a in m): c for m, c in f.terms.items()})


def is_pth_power(f: Polynomial) -> bool:
    p = f.ring.p
    return all(a % p == 0 for m in f.terms for a in m)


def pth_root(f: Polynomial) -> Polynomial:
    """The unique g with g^p == f; raises NotAPthPower otherwise."""
    p = f.ring.p
    out = {}
    for m, c in f.terms.items():
        if any(a % p for a in m):
            raise NotAPthPower(f"{f} is not a {p}-th power")
        out[tuple(a // p for a in m)] = c
    return Polynomial._raw(f.ring, out)


# -- division ---------------------------------------------------------------


def _divides_mono(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _reduce(
    f: Polynomial, divisors: Sequence[Polynomial], track: bool
) -> tuple[list[dict[Monomial, int]] | None, dict[Monomial, int]]:
    """Division engine: reduce terms largest-first, first matching divisor wins."""
    ring = f.ring
    p = ring.p
    key = ring.desc_key
    work = dict(f.terms)
    heap = [(key(m), m) for m in work]
    heapq.heapify(heap)
    info = []
    for d in divisors:
        lm = d.lm
        support = tuple((j, v) for j, v in enumerate(lm) if v)
        tail = [(m, c) for m, c in d.terms.items() if m != lm]
        info.append((support, lm, pow(d.lc, -1, p), tail))
    quots: list[dict[Monomial, int]] | None = [{} for _ in divisors] if track else None
    rem: dict[Monomial, int] = {}
    add, sub = operator.add, operator.sub
    push, pop = heapq.heappush, heapq.heappop
    while heap:
        m = pop(heap)[1]
        c = work.pop(m, 0)
        if not c:
            continue
        for i, (support, lm, lcinv, tail) in enumerate(info):
            for j, v in support:
                if m[j] < v:
                    break
            else:
                break
        else:
            rem[m] = c
            continue
        q = c * lcinv % p
        shift = tuple(map(sub, m, lm))
        if quots is not None:
            quots[i][shift] = (quots[i].get(shift, 0) + q) % p
        for tm, tc in tail:
            nm = tuple(map(add, tm, shift))
            old = work.get(nm)
            if old is None:
                work[nm] = -q * tc % p
                push(heap, (key(nm), nm))
            else:
                v = (old - q * tc) % p
                if v:
                    work[nm] = v
                else:
                    del work[nm]
    return quots, rem


def multivariate_divide(
    f: Polynomial, divisors: Sequence[Polynomial]
) -> tuple[list[Polynomial], Polynomial]:
    """Division with remainder by an ordered list: f == sum(q_i * d_i) + r."""
    for d in divisors:
        f._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
    quots, rem = _reduce(f, divisors, track=True)
    ring = f.ring
    return [Polynomial(ring, q) for q in quots], Polynomial._raw(ring, rem)


def remainder(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    for d in divisors:
        f._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
    return Polynomial._raw(f.ring, _reduce(f, divisors, track=False)[1])


def divides(g: Polynomial, f: Polynomial) -> bool:
    """True iff g | f in the polynomial ring."""
    if g.is_zero():
        return f.is_zero()
    return remainder(f, [g]).is_zero()


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g, raising ValueError unless the division is exact."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    (q,), r = multivariate_divide(f, [g])
    if r:
        raise ValueError(f"{g} does not divide {f}")
    return q


def monomials_up_to(ring: RingCtx, D: int) -> Iterator[Monomial]:
    """Exponent vectors of degree 0..D, by degree then descending monomial order."""
    for d in range(D + 1):
        yield from ring.monomials_of_degree(d)


def random_polynomial(ring: RingCtx, rng, max_degree: int, max_terms: int = 4) -> Polynomial:
    """A random polynomial with up to ``max_terms`` terms of degree <= max_degree."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        m = [0] * ring.nvars
        for _ in range(d):
            m[rng.randrange(ring.nvars)] += 1
        terms[tuple(m)] = rng.randrange(1, ring.p)
    return Polynomial(ring, terms)

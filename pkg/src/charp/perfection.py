"""Arithmetic in the perfection of GF(p)[vars].

An element is stored as a pair (body, level) meaning body^(1/p^level).  Every
element of the perfect closure has this shape, and the pair is kept in normal
form: the level is 0 or the body is not a p-th power.  Two normal forms are
equal exactly when the elements are.

GCDs and colons are computed by lifting both operands to their common level,
where they are ordinary polynomials, and using polynomial gcd there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DegenerateInput, ResourceBoundExceeded
from .groebner import Ideal, frobenius_power_ideal, ideal_member, quotient_member
from .polyarith import (
    NotAPthPower,
    Polynomial,
    RingCtx,
    divides,
    exact_divide,
    frobenius_power,
    is_pth_power,
    pth_root,
)
from .polygcd import poly_gcd

DEFAULT_MAX_LEVEL = 6
DEFAULT_CLOSURE_BOUND = 4


@dataclass(frozen=True)
class PerfElement:
    """body^(1/p^level) in the perfection; construction normalizes."""

    body: Polynomial
    level: int = 0

    def __post_init__(self):
        self.body.ring.require_polynomial_ring("perfection arithmetic")
        if self.level < 0:
            raise ValueError("level must be non-negative")
        body, level = self.body, self.level
        if body.is_zero():
            level = 0
        while level and is_pth_power(body):
            body = pth_root(body)
            level -= 1
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "level", level)

    @property
    def ring(self) -> RingCtx:
        return self.body.ring

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def lift(self, N: int) -> Polynomial:
        """The body representing this element at level N >= self.level."""
        return frobenius_power(self.body, N - self.level)

    def __add__(self, other: PerfElement) -> PerfElement:
        return perf_arith(self, other, "add")

    def __sub__(self, other: PerfElement) -> PerfElement:
        return perf_arith(self, other, "sub")

    def __mul__(self, other: PerfElement) -> PerfElement:
        return perf_arith(self, other, "mul")

    def __neg__(self) -> PerfElement:
        return PerfElement(-self.body, self.level)

    def __str__(self):
        return f"root({self.body},{self.level})"

    __repr__ = __str__


def perf_normalize(f: Polynomial, e: int, max_level: int = DEFAULT_MAX_LEVEL) -> PerfElement:
    if e > max_level:
        raise ResourceBoundExceeded(f"level {e} exceeds max_level {max_level}")
    return PerfElement(f, e)


def _common(a: PerfElement, b: PerfElement, max_level: int) -> tuple[int, Polynomial, Polynomial]:
    a.body._check(b.body)
    N = max(a.level, b.level)
    if N > max_level:
        raise ResourceBoundExceeded(f"level {N} exceeds max_level {max_level}")
    return N, a.lift(N), b.lift(N)


def perf_arith(
    a: PerfElement, b: PerfElement, kind: str, max_level: int = DEFAULT_MAX_LEVEL
) -> PerfElement:
    """Add, subtract or multiply at the common level, then normalize.

    Addition is valid at the common level because p-th powers are additive.
    """
    N, A, B = _common(a, b, max_level)
    if kind == "add":
        body = A + B
    elif kind == "sub":
        body = A - B
    elif kind == "mul":
        body = A * B
    else:
        raise ValueError(f"unknown arithmetic kind {kind!r}")
    return PerfElement(body, N)


def perf_frobenius(a: PerfElement) -> PerfElement:
    """a^p."""
    if a.level:
        return PerfElement(a.body, a.level - 1)
    return PerfElement(frobenius_power(a.body, 1), 0)


def perf_root(a: PerfElement, max_level: int = DEFAULT_MAX_LEVEL) -> PerfElement:
    """a^(1/p)."""
    return perf_normalize(a.body, a.level + 1, max_level)


def perf_divides(a: PerfElement, b: PerfElement, max_level: int = DEFAULT_MAX_LEVEL) -> bool:
    """Whether a | b in the perfection.

    Reduces to divisibility of the lifted bodies: if A * h = B with h in the
    fraction field, a power of h lies in R and R is normal, so h lies in R.
    """
    if a.is_zero():
        return b.is_zero()
    _, A, B = _common(a, b, max_level)
    return divides(A, B)


def _gcd_lifted(f: Polynomial, e: int, g: Polynomial) -> Polynomial:
    """gcd(f^(p^e), g) without running a gcd at degree p^e * deg(f).

    Peels common factors one power at a time: for each prime factor the
    multiplicity min(p^e * v(f), v(g)) is reached after at most v(g) rounds.
    """
    result = g.ring.one()
    rest = g
    for _ in range(f.ring.p**e):
        d = poly_gcd(f, rest)
        if d.is_constant():
            break
        result = result * d
        rest = exact_divide(rest, d)
    return result.monic()


def _body_gcd(a: PerfElement, b: PerfElement, N: int, A: Polynomial, B: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return poly_gcd(A, B)
    if a.level < N:
        return _gcd_lifted(a.body, N - a.level, B)
    if b.level < N:
        return _gcd_lifted(b.body, N - b.level, A)
    return poly_gcd(A, B)


def perf_gcd(a: PerfElement, b: PerfElement, max_level: int = DEFAULT_MAX_LEVEL) -> PerfElement:
    """Monic gcd in the perfection; gcd(0, 0) = 0."""
    N, A, B = _common(a, b, max_level)
    return PerfElement(_body_gcd(a, b, N, A, B), N)


def perf_exact_divide(
    a: PerfElement, b: PerfElement, max_level: int = DEFAULT_MAX_LEVEL
) -> PerfElement:
    """a / b, raising ValueError unless b divides a."""
    N, A, B = _common(a, b, max_level)
    return PerfElement(exact_divide(A, B), N)


def perf_lcm(a: PerfElement, b: PerfElement, max_level: int = DEFAULT_MAX_LEVEL) -> PerfElement:
    if a.is_zero() or b.is_zero():
        return PerfElement(a.ring.zero(), 0)
    g = perf_gcd(a, b, max_level)
    lcm = perf_exact_divide(perf_arith(a, b, "mul", max_level), g, max_level)
    return PerfElement(lcm.body.monic(), lcm.level)


def perf_colon(a: PerfElement, b: PerfElement, max_level: int = DEFAULT_MAX_LEVEL) -> PerfElement:
    """Generator of the principal ideal (a : b) in the perfection.

    At the common level N the colon of bodies is generated by A / gcd(A, B);
    its p^N-th root generates the colon upstairs.  (0 : b) = 0 and (a : 0) = 1.
    """
    if a.is_zero() and b.is_zero():
        raise DegenerateInput("(0 : 0) is not a principal-ideal question")
    ring = a.ring
    if b.is_zero():
        return PerfElement(ring.one(), 0)
    if a.is_zero():
        return PerfElement(ring.zero(), 0)
    N, A, B = _common(a, b, max_level)
    c = exact_divide(A, _body_gcd(a, b, N, A, B))
    return PerfElement(c.monic(), N)


def perf_associates(a: PerfElement, b: PerfElement) -> bool:
    """Equal up to a nonzero constant."""
    return a.level == b.level and a.body.monic() == b.body.monic()


@dataclass(frozen=True)
class Found:
    e: int


@dataclass(frozen=True)
class NotFoundUpTo:
    """Inconclusive: no exponent up to ``bound`` certifies membership."""

    bound: int


ClosureResult = Union[Found, NotFoundUpTo]


def frobenius_closure_member(
    r: Polynomial, I: Ideal, ctx: RingCtx | None = None, E: int = DEFAULT_CLOSURE_BOUND
) -> ClosureResult:
    """Least e <= E with r^(p^e) in I^[p^e] (in S/(F) when ctx has a modulus).

    A Found answer certifies r ∈ I^F; NotFoundUpTo says nothing either way.
    """
    if E < 1:
        raise ValueError("E must be at least 1")
    ctx = ctx or r.ring
    for e in range(1, E + 1):
        f = frobenius_power(r, e)
        J = frobenius_power_ideal(I, e)
        ok = quotient_member(f, J, ctx) if ctx.modulus is not None else ideal_member(f, J)
        if ok:
            return Found(e)
    return NotFoundUpTo(E)


__all__ = [
    "PerfElement",
    "Found",
    "NotFoundUpTo",
    "NotAPthPower",
    "perf_normalize",
    "perf_arith",
    "perf_frobenius",
    "perf_root",
    "perf_divides",
    "perf_gcd",
    "perf_lcm",
    "perf_colon",
    "perf_exact_divide",
    "perf_associates",
    "frobenius_closure_member",
]

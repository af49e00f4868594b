"""Text forms: polynomials, ring descriptors, ideals and perfection elements.

Polynomial grammar (whitespace ignored)::

    poly    := [sign] term (sign term)*
    term    := factor ('*' factor)*
    factor  := INT | NAME ['^' INT]

so ``3*x^2*y - 4 + z`` is accepted.  Integer literals are reduced mod p.
Printing is canonical: terms in descending monomial order, explicit ``*``
and ``^``, every coefficient in 1..p-1 (hence only ``+`` separators).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .groebner import Ideal
from .perfection import PerfElement
from .polyarith import Polynomial, RingCtx

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    return tokens


def parse_poly(text: str, ctx: RingCtx) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ctx``'s ambient ring."""
    ring = ctx.ambient
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", text, 0)
    index = {name: i for i, name in enumerate(ring.vars)}
    p = ring.p
    terms: dict[tuple[int, ...], int] = {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else ("end", "", len(text))

    def expect(kind: str):
        nonlocal i
        tok = peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", text, tok[2])
        i += 1
        return tok

    sign = 1
    if peek()[0] in "+-":
        sign = -1 if peek()[0] == "-" else 1
        i += 1
    while True:
        coeff = sign
        exps = [0] * ring.nvars
        while True:
            tok = peek()
            if tok[0] == "int":
                i += 1
                coeff *= int(tok[1])
            elif tok[0] == "name":
                i += 1
                if tok[1] not in index:
                    raise ParseError(f"unknown variable {tok[1]!r}", text, tok[2])
                k = 1
                if peek()[0] == "^":
                    i += 1
                    k = int(expect("int")[1])
                exps[index[tok[1]]] += k
            else:
                what = "end of input" if tok[0] == "end" else repr(tok[1])
                raise ParseError(f"expected a coefficient or variable, found {what}", text, tok[2])
            if peek()[0] == "*":
                i += 1
                continue
            break
        m = tuple(exps)
        terms[m] = (terms.get(m, 0) + coeff) % p
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] not in "+-":
            raise ParseError(f"expected '+' or '-', found {tok[1]!r}", text, tok[2])
        sign = -1 if tok[0] == "-" else 1
        i += 1
    return Polynomial(ring, terms)


def format_poly(f: Polynomial) -> str:
    return str(f)


def parse_ideal(text: str, ctx: RingCtx) -> Ideal:
    """Comma-separated generators; an empty string or ``0`` is the zero ideal."""
    parts = [s for s in (t.strip() for t in text.split(",")) if s]
    return Ideal([parse_poly(s, ctx) for s in parts], ctx.ambient)


def format_ideal(I: Ideal) -> list[str]:
    return [str(g) for g in I.gens]


_ROOT = re.compile(r"^\s*root\s*\((.*),\s*(\d+)\s*\)\s*$", re.S)


def parse_perf(text: str, ctx: RingCtx) -> PerfElement:
    """``root(<poly>, <e>)`` meaning poly^(1/p^e); a bare polynomial is level 0."""
    m = _ROOT.match(text)
    if m:
        return PerfElement(parse_poly(m.group(1), ctx), int(m.group(2)))
    if text.strip().startswith("root"):
        raise ParseError("malformed root(<poly>, <e>) expression", text, 0)
    return PerfElement(parse_poly(text, ctx), 0)


def format_perf(a: PerfElement) -> str:
    return f"root({a.body},{a.level})"


_RING = re.compile(r"^\s*GF\(\s*(\d+)\s*\)\s*\[([^\]]*)\]\s*(?:/\s*\((.*)\)\s*)?$", re.S)
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingDescriptor:
    """Textual description of a RingCtx: ``GF(p)[v1,...]`` plus optional ``/(F)``."""

    p: int
    vars: tuple[str, ...]
    order: str = "grevlex"
    modulus: str | None = None

    @classmethod
    def parse(cls, text: str, order: str = "grevlex", modulus: str | None = None) -> RingDescriptor:
        m = _RING.match(text)
        if not m:
            raise ParseError("ring must look like GF(p)[x,y,...]", text, 0)
        names = tuple(v.strip() for v in m.group(2).split(",") if v.strip())
        for name in names:
            if not _NAME.match(name):
                raise ParseError(f"bad variable name {name!r}", text, text.find(name))
        inline = m.group(3)
        if inline is not None and modulus is not None:
            raise ParseError("modulus given twice (inline and separately)", text, text.find("/"))
        desc = cls(int(m.group(1)), names, order, inline if inline is not None else modulus)
        return desc.canonical()

    def to_ctx(self, max_degree: int | None = None) -> RingCtx:
        kw = {} if max_degree is None else {"max_degree": max_degree}
        try:
            ring = RingCtx(self.p, self.vars, self.order, **kw)
        except ValueError as exc:
            raise ParseError(str(exc), self.to_text()) from exc
        if self.modulus is None:
            return ring
        F = parse_poly(self.modulus, ring)
        try:
            return ring.with_modulus(F)
        except ValueError as exc:
            raise ParseError(str(exc), self.modulus) from exc

    def canonical(self) -> RingDescriptor:
        if self.modulus is None:
            self.to_ctx()
            return self
        ctx = self.to_ctx()
        return RingDescriptor(self.p, self.vars, self.order, str(ctx.modulus))

    def to_text(self) -> str:
        s = f"GF({self.p})[{','.join(self.vars)}]"
        if self.modulus is not None:
            s += f"/({self.modulus})"
        return s

    def to_dict(self) -> dict:
        return {"p": self.p, "vars": list(self.vars), "order": self.order, "modulus": self.modulus}

    @classmethod
    def from_ctx(cls, ctx: RingCtx) -> RingDescriptor:
        mod = None if ctx.modulus is None else str(ctx.modulus)
        return cls(ctx.p, ctx.vars, ctx.order, mod)

"""F-singularity checks for hypersurfaces S/(F) over GF(p).

Fedder's criterion decides F-purity at the origin.  Tight closure is only
ever *supported* here: ``c * r^(p^e) ∈ I^[p^e]`` can be verified for finitely
many e, which is evidence for, not a proof of, membership in I*.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import factorial
from typing import Sequence

from .errors import UnsupportedRing
from .groebner import (
    GroebnerBasis,
    Ideal,
    colon_ideal,
    frobenius_power_ideal,
    lift_to_ambient,
    normal_form,
    quotient_colon,
)
from .perfection import Found, frobenius_closure_member
from .polyarith import (
    Monomial,
    Polynomial,
    RingCtx,
    frobenius_power,
    monomial_str,
    monomials_up_to,
    random_polynomial,
    remainder,
)

DEFAULT_TIGHT_BOUND = 2
DEFAULT_WITNESS_DEGREE = 20
EVIDENCE_NOTE = "finitely many exponents checked; supports but does not prove membership for all e >> 0"


# -- Fedder ------------------------------------------------------------------


@dataclass(frozen=True)
class FedderResult:
    f_pure: bool
    witness: Monomial | None  # a monomial of F^(p-1) outside m^[p]
    coefficient: int | None
    method: str


def _hypersurface(ctx: RingCtx) -> Polynomial:
    if ctx.modulus is None:
        raise UnsupportedRing("Fedder's criterion needs a hypersurface context (modulus)")
    F = ctx.modulus
    if F.coefficient((0,) * ctx.nvars):
        raise ValueError("the hypersurface does not pass through the origin")
    return F


def _diagonal_data(F: Polynomial) -> list[tuple[int, int, int]] | None:
    """[(variable, exponent, coefficient)] if F = sum a_i x_i^d_i over distinct variables."""
    out = []
    for m, c in F.terms.items():
        nz = [(i, e) for i, e in enumerate(m) if e]
        if len(nz) != 1:
            return None
        out.append((nz[0][0], nz[0][1], c))
    if len({i for i, _, _ in out}) != len(out):
        return None
    return out


def fedder_expansion(F: Polynomial) -> FedderResult:
    """Expand F^(p-1) term by term and look for a monomial with all exponents < p."""
    p = F.ring.p
    power = F.ring.one()
    for _ in range(p - 1):
        power = power * F
    key = F.ring.desc_key
    hits = sorted((m for m in power.terms if max(m) <= p - 1), key=key)
    if not hits:
        return FedderResult(False, None, None, "expansion")
    return FedderResult(True, hits[0], power.terms[hits[0]], "expansion")


def fedder_multinomial(F: Polynomial) -> FedderResult:
    """Closed form for diagonal F = sum a_i x_i^d_i.

    The monomial prod x_i^(d_i k_i) of F^(p-1) has coefficient
    (p-1)!/prod k_i! * prod a_i^k_i, with sum k_i = p-1.
    """
    data = _diagonal_data(F)
    if data is None:
        raise ValueError("the multinomial shortcut needs a diagonal polynomial")
    ring = F.ring
    p = ring.p
    caps = [(p - 1) // d for _, d, _ in data]
    hits = []
    for ks in product(*(range(c + 1) for c in caps)):
        if sum(ks) != p - 1:
            continue
        coeff = factorial(p - 1)
        for k in ks:
            coeff //= factorial(k)
        for (_, _, a), k in zip(data, ks):
            coeff *= pow(a, k, p)
        coeff %= p
        if coeff:
            m = [0] * ring.nvars
            for (i, d, _), k in zip(data, ks):
                m[i] = d * k
            hits.append((tuple(m), coeff))
    if not hits:
        return FedderResult(False, None, None, "multinomial")
    m, c = min(hits, key=lambda t: ring.desc_key(t[0]))
    return FedderResult(True, m, c, "multinomial")


def fedder_check(ctx: RingCtx, method: str = "auto") -> FedderResult:
    """Fedder's criterion at the origin: F-pure iff F^(p-1) is not in m^[p]."""
    F = _hypersurface(ctx)
    if method == "auto":
        method = "multinomial" if _diagonal_data(F) is not None else "expansion"
    if method == "multinomial":
        return fedder_multinomial(F)
    if method == "expansion":
        return fedder_expansion(F)
    raise ValueError(f"unknown Fedder method {method!r}")


def fedder_is_fpure(ctx: RingCtx, method: str = "auto") -> bool:
    return fedder_check(ctx, method).f_pure


# -- tight closure -----------------------------------------------------------


@dataclass
class TightClosureEvidence:
    """Outcome of a bounded tight-closure check of r against I with witness c.

    ``verdict`` is one of ``Verified`` (every e in ``checked_e`` passed, up to
    ``bound``), ``FailedAt`` (the witness failed at ``trace[-1]``),
    ``WitnessNotFound`` or ``NotApplicable`` (c lies in (F)).
    """

    element: Polynomial
    ideal: Ideal
    witness: Polynomial | None
    verdict: str
    bound: int
    checked_e: list[int] = field(default_factory=list)
    trace: list[dict] = field(default_factory=list)
    candidates_tried: int = 0
    note: str = EVIDENCE_NOTE

    @property
    def verified(self) -> bool:
        return self.verdict == "Verified"

    def to_dict(self) -> dict:
        return {
            "element": str(self.element),
            "ideal": [str(g) for g in self.ideal.gens],
            "witness": None if self.witness is None else str(self.witness),
            "verdict": self.verdict,
            "bound": self.bound,
            "checked_e": list(self.checked_e),
            "trace": list(self.trace),
            "note": self.note,
        }


class _FrobeniusTests:
    """Per-e Gröbner data for the membership tests c * r^(p^e) ∈ I^[p^e] + (F)."""

    def __init__(self, r: Polynomial, I: Ideal, ctx: RingCtx):
        self.r, self.I, self.ctx = r, I, ctx
        self._cache: dict[int, tuple[GroebnerBasis, Polynomial]] = {}

    def data(self, e: int) -> tuple[GroebnerBasis, Polynomial]:
        if e not in self._cache:
            J = frobenius_power_ideal(self.I, e)
            if self.ctx.modulus is not None:
                J = lift_to_ambient(J, self.ctx)
            G = J.gb
            # NF(c * f) = NF(c * NF(f)), so reduce r^(p^e) once per e
            self._cache[e] = (G, normal_form(frobenius_power(self.r, e).rename_ring(J.ring), G))
        return self._cache[e]

    def member(self, c: Polynomial, e: int) -> bool:
        G, rq = self.data(e)
        return normal_form(c.rename_ring(rq.ring) * rq, G).is_zero()


def _in_minimal_prime(c: Polynomial, ctx: RingCtx) -> bool:
    # hypersurface domain: the only minimal prime is (F)
    if ctx.modulus is None:
        return c.is_zero()
    return remainder(c.rename_ring(ctx.ambient), [ctx.modulus]).is_zero()


def _run(tests: _FrobeniusTests, c: Polynomial, E: int) -> TightClosureEvidence:
    ev = TightClosureEvidence(tests.r, tests.I, c, "Verified", E)
    for e in range(1, E + 1):
        ok = tests.member(c, e)
        ev.trace.append({"e": e, "member": ok})
        if not ok:
            ev.verdict = "FailedAt"
            return ev
        ev.checked_e.append(e)
    return ev


def tight_closure_verify(
    c: Polynomial, r: Polynomial, I: Ideal, ctx: RingCtx, E: int = DEFAULT_TIGHT_BOUND
) -> TightClosureEvidence:
    """Check c * r^(p^e) ∈ I^[p^e] in S/(F) for e = 1..E."""
    if E < 1:
        raise ValueError("E must be at least 1")
    if _in_minimal_prime(c, ctx):
        return TightClosureEvidence(r, I, c, "NotApplicable", E)
    return _run(_FrobeniusTests(r, I, ctx), c, E)


def tight_witness_search(
    r: Polynomial,
    I: Ideal,
    ctx: RingCtx,
    E: int = DEFAULT_TIGHT_BOUND,
    D: int = DEFAULT_WITNESS_DEGREE,
) -> TightClosureEvidence:
    """First monomial witness c (by degree, then descending order) verified up to E."""
    if E < 1:
        raise ValueError("E must be at least 1")
    tests = _FrobeniusTests(r, I, ctx)
    ring = ctx.ambient
    tried = 0
    for m in monomials_up_to(ring, D):
        c = ring.monomial(m)
        if _in_minimal_prime(c, ctx):
            continue
        tried += 1
        ev = _run(tests, c, E)
        if ev.verified:
            ev.candidates_tried = tried
            return ev
    return TightClosureEvidence(r, I, None, "WitnessNotFound", E, candidates_tried=tried)


# -- cyclic F-purity ---------------------------------------------------------


@dataclass
class SpotCheckReport:
    ideals: list[dict]

    @property
    def failure_certified(self) -> bool:
        return any(entry["failures"] for entry in self.ideals)

    @property
    def verdict(self) -> str:
        return "failure_certified" if self.failure_certified else "no_failure_found_up_to_bounds"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "ideals": self.ideals}


def standard_monomials(J: Ideal, D: int) -> list[Monomial]:
    """Monomials of degree <= D outside the initial ideal of J."""
    lms = [g.lm for g in J.gb]
    return [
        m
        for m in monomials_up_to(J.ring, D)
        if not any(all(a <= b for a, b in zip(l, m)) for l in lms)
    ]


def cyclic_fpurity_spot_check(
    ctx: RingCtx, ideals: Sequence[Ideal], E: int = 2, degree_cap: int = 3
) -> SpotCheckReport:
    """Look for monomials in I^F outside I among normal-form monomials of degree <= degree_cap."""
    entries = []
    for I in ideals:
        J = lift_to_ambient(I, ctx) if ctx.modulus is not None else I
        failures = []
        cands = standard_monomials(J, degree_cap)
        for m in cands:
            r = J.ring.monomial(m)
            res = frobenius_closure_member(r, I, ctx, E)
            if isinstance(res, Found):
                failures.append({"element": str(r), "e": res.e})
        entries.append(
            {
                "ideal": [str(g) for g in I.gens],
                "tested": [monomial_str(m, J.ring.vars) for m in cands],
                "failures": failures,
            }
        )
    return SpotCheckReport(entries)


# -- colon / Frobenius-power experiment ---------------------------------------


@dataclass
class ExperimentReport:
    ring: str
    e: int
    mode: str
    seed: int | None
    pairs_tested: int = 0
    violations: int = 0
    first_violation: dict | None = None

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "e": self.e,
            "mode": self.mode,
            "seed": self.seed,
            "pairs_tested": self.pairs_tested,
            "violations": self.violations,
            "first_violation": self.first_violation,
        }


def colon_frobenius_sides(f: Polynomial, g: Polynomial, ctx: RingCtx, e: int) -> tuple[Ideal, Ideal]:
    """Both sides of (f : g)^[p^e] = (f^(p^e) : g^(p^e)), as ideals of the ambient ring."""
    ring = ctx.ambient
    f, g = f.rename_ring(ring), g.rename_ring(ring)
    fq, gq = frobenius_power(f, e), frobenius_power(g, e)
    if ctx.modulus is None:
        lhs = frobenius_power_ideal(colon_ideal(Ideal([f], ring), g), e)
        rhs = colon_ideal(Ideal([fq], ring), gq)
    else:
        lhs = lift_to_ambient(frobenius_power_ideal(quotient_colon(Ideal([f], ring), g, ctx), e), ctx)
        rhs = quotient_colon(Ideal([fq], ring), gq, ctx)
    return lhs, rhs


def replay_pair(ctx: RingCtx, seed: int, trial: int, max_degree: int) -> tuple[Polynomial, Polynomial]:
    """The (f, g) pair drawn for a given seed and trial index."""
    rng = random.Random(f"{seed}:{trial}")
    ring = ctx.ambient
    while True:
        f = random_polynomial(ring, rng, max_degree)
        g = random_polynomial(ring, rng, max_degree)
        if not _in_minimal_prime(f, ctx) and not _in_minimal_prime(g, ctx):
            return f, g


def colon_frobenius_experiment(
    ctx: RingCtx,
    trials: int = 100,
    seed: int = 0,
    e: int = 1,
    max_degree: int = 3,
    exhaustive: bool = False,
) -> ExperimentReport:
    """Test (f : g)^[p^e] = (f^(p^e) : g^(p^e)) on sampled or enumerated pairs.

    Random mode draws ``trials`` pairs of degree <= max_degree, each replayable
    from (seed, trial).  Exhaustive mode runs over all ordered pairs of
    monomials of degree <= max_degree.
    """
    report = ExperimentReport(str(ctx), e, "exhaustive" if exhaustive else "random", None if exhaustive else seed)
    ring = ctx.ambient
    if exhaustive:
        monos = [ring.monomial(m) for m in monomials_up_to(ring, max_degree)]
        pairs = (((f, g), None) for f in monos for g in monos)
    else:
        pairs = ((replay_pair(ctx, seed, t, max_degree), t) for t in range(trials))
    for (f, g), trial in pairs:
        lhs, rhs = colon_frobenius_sides(f, g, ctx, e)
        report.pairs_tested += 1
        if lhs != rhs:
            report.violations += 1
            if report.first_violation is None:
                report.first_violation = {
                    "f": str(f),
                    "g": str(g),
                    "trial": trial,
                    "lhs": [str(h) for h in lhs.gb],
                    "rhs": [str(h) for h in rhs.gb],
                }
    return report

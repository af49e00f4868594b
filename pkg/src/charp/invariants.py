"""Invariants of a cyclic permutation of the variables.

Orbit sums of monomials span the invariants in every characteristic, so the
degree-d invariant dimension is the number of monomial orbits.  It is
computed three ways: orbit enumeration, Burnside counting, and the kernel
rank of (sigma - id) over GF(p).  No Molien series: it breaks when p divides
the group order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotInvariant
from .polyarith import Monomial, Polynomial, RingCtx


@dataclass(frozen=True)
class CyclicAction:
    """sigma: x_i -> x_perm[i], acting on ``ring`` by automorphisms."""

    ring: RingCtx
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(self.ring.nvars)):
            raise ValueError(f"{self.perm} is not a permutation of the variables")

    @classmethod
    def shift(cls, ring: RingCtx) -> CyclicAction:
        """x_i -> x_{i+1}, indices mod the number of variables."""
        n = ring.nvars
        return cls(ring, tuple((i + 1) % n for i in range(n)))

    @property
    def order(self) -> int:
        k, q = 1, self.perm
        while q != tuple(range(len(q))):
            q = tuple(self.perm[i] for i in q)
            k += 1
        return k

    def power(self, k: int) -> tuple[int, ...]:
        q = tuple(range(len(self.perm)))
        for _ in range(k % self.order):
            q = tuple(self.perm[i] for i in q)
        return q

    def cycle_lengths(self, k: int) -> list[int]:
        q = self.power(k)
        seen, out = set(), []
        for i in range(len(q)):
            if i in seen:
                continue
            j, n = i, 0
            while j not in seen:
                seen.add(j)
                j = q[j]
                n += 1
            out.append(n)
        return out


def _act_mono(m: Monomial, q: tuple[int, ...]) -> Monomial:
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[q[i]] = e
    return tuple(out)


def apply_action(f: Polynomial, act: CyclicAction, k: int = 1) -> Polynomial:
    q = act.power(k)
    return Polynomial._raw(f.ring, {_act_mono(m, q): c for m, c in f.terms.items()})


def is_invariant(f: Polynomial, act: CyclicAction) -> bool:
    return apply_action(f, act) == f


def _orbit(m: Monomial, act: CyclicAction) -> set[Monomial]:
    orbit = {m}
    cur = m
    while True:
        cur = _act_mono(cur, act.perm)
        if cur in orbit:
            return orbit
        orbit.add(cur)


def _degree_monomials(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _degree_monomials(n - 1, d - first):
            yield (first,) + rest


def orbit_sum_basis(act: CyclicAction, d: int) -> list[Polynomial]:
    """One orbit sum per orbit of degree-d monomials.

    Orbits are represented by their lexicographically least exponent vector
    and listed in increasing order of that representative.
    """
    ring = act.ring
    seen: set[Monomial] = set()
    reps = []
    for m in sorted(_degree_monomials(ring.nvars, d)):
        if m in seen:
            continue
        orbit = _orbit(m, act)
        seen |= orbit
        reps.append(orbit)
    return [Polynomial(ring, {m: 1 for m in orbit}) for orbit in reps]


def _count_fixed(cycles: tuple[int, ...], d: int) -> int:
    # exponents constant on each cycle: number of solutions of sum len_j * a_j = d
    @lru_cache(maxsize=None)
    def ways(i: int, rest: int) -> int:
        if i == len(cycles):
            return int(rest == 0)
        return sum(ways(i + 1, rest - a * cycles[i]) for a in range(rest // cycles[i] + 1))

    return ways(0, d)


def hilbert_burnside(act: CyclicAction, d: int) -> int:
    """Number of monomial orbits in degree d, by averaging fixed points."""
    n = act.order
    total = sum(_count_fixed(tuple(act.cycle_lengths(k)), d) for k in range(n))
    if total % n:
        raise ArithmeticError("Burnside count is not an integer")
    return total // n


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination."""
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [(x - factor * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def hilbert_linear(act: CyclicAction, d: int) -> int:
    """dim ker(sigma - id) on degree-d forms, by exact rank over GF(p)."""
    p = act.ring.p
    basis = list(_degree_monomials(act.ring.nvars, d))
    index = {m: i for i, m in enumerate(basis)}
    N = len(basis)
    rows = []
    for m in basis:
        row = [0] * N
        row[index[_act_mono(m, act.perm)]] += 1
        row[index[m]] -= 1
        rows.append(row)
    return N - rank_mod_p(rows, p)


@dataclass(frozen=True)
class GenerationReport:
    success: bool
    bound: int
    first_deficient_degree: int | None
    span_dims: tuple[int, ...]
    invariant_dims: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "success": self.success,
            "bound": self.bound,
            "first_deficient_degree": self.first_deficient_degree,
            "span_dims": list(self.span_dims),
            "invariant_dims": list(self.invariant_dims),
        }


def _products_of_degree(gens: list[Polynomial], d: int, one: Polynomial) -> list[Polynomial]:
    """All products of gens (with repetition) of total degree d."""
    out = []

    def rec(start: int, rest: int, acc: Polynomial):
        if rest == 0:
            out.append(acc)
            return
        for i in range(start, len(gens)):
            dg = gens[i].degree()
            if dg <= rest:
                rec(i, rest - dg, acc * gens[i])

    rec(0, d, one)
    return out


def generates_up_to(act: CyclicAction, gens: list[Polynomial], D: int) -> GenerationReport:
    """Compare the degree-d span of products of ``gens`` with the invariant dimension, d <= D.

    Generators must be homogeneous invariants of positive degree.
    """
    ring = act.ring
    for g in gens:
        if not is_invariant(g, act):
            raise NotInvariant(f"{g} is not invariant")
        if not g.is_homogeneous() or g.degree() < 1:
            raise ValueError(f"generator {g} must be homogeneous of positive degree")
    span_dims, inv_dims = [], []
    deficient = None
    for d in range(D + 1):
        basis = list(_degree_monomials(ring.nvars, d))
        prods = _products_of_degree(list(gens), d, ring.one())
        rows = [[f.coefficient(m) for m in basis] for f in prods]
        span = rank_mod_p(rows, ring.p) if rows else 0
        target = len(orbit_sum_basis(act, d))
        span_dims.append(span)
        inv_dims.append(target)
        if span < target and deficient is None:
            deficient = d
            break
    return GenerationReport(deficient is None, D, deficient, tuple(span_dims), tuple(inv_dims))

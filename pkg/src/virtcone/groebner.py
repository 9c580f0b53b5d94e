"""Buchberger's algorithm with Gebauer-Moeller pair elimination.

Produces reduced Groebner bases (monic, auto-reduced), which are canonical
for a given ideal and monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import Budget, Context, DEFAULT_CONTEXT
from .errors import BudgetExceededError, RingMismatchError
from .poly import Polynomial, PolyRing
from .rationals import Q


def _div(m1, m2):
    """m1 / m2 if m2 divides m1, else None."""
    out = []
    for a, b in zip(m1, m2):
        if a < b:
            return None
        out.append(a - b)
    return tuple(out)


def _lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def _shift(p: Polynomial, m, c) -> Polynomial:
    return Polynomial(p.ring, {_mul(mm, m): cc * c for mm, cc in p.terms.items()})


def reduce_poly(p: Polynomial, divisors, budget: Budget | None = None) -> Polynomial:
    """Remainder of multivariate division of p by the list of divisors."""
    if not divisors:
        return p
    ring = p.ring
    for g in divisors:
        if g.ring != ring:
            raise RingMismatchError("division across rings")
    leads = [(g.lead()[0], g.lead()[1], g) for g in divisors if g]
    work = dict(p.terms)
    remainder: dict = {}
    key = ring.key
    max_deg = budget.max_degree if budget else None
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if max_deg is not None and sum(m) > max_deg:
            raise BudgetExceededError("degree budget exceeded during reduction")
        for lm, lc, g in leads:
            q = _div(m, lm)
            if q is not None:
                factor = c / lc
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    mm = _mul(gm, q)
                    s = work.get(mm, 0) - factor * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return Polynomial(ring, remainder)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    (lmf, lcf), (lmg, lcg) = f.lead(), g.lead()
    lcm = _lcm(lmf, lmg)
    return _shift(f, _div(lcm, lmf), Q(1) / lcf) - _shift(g, _div(lcm, lmg), Q(1) / lcg)


def _update_pairs(G, lmG, P, f, elimination=True):
    """Add f to the basis, pruning S-pairs Gebauer-Moeller style."""
    lmf = f.lead()[0]
    t = len(G)
    if not elimination:
        return G + [f], lmG + [lmf], P | {(i, t) for i in range(t)}
    P = {p for p in P
         if (_div(_lcm(lmG[p[0]], lmG[p[1]]), lmf) is None
             or _lcm(lmG[p[0]], lmG[p[1]]) == _lcm(lmG[p[0]], lmf)
             or _lcm(lmG[p[0]], lmG[p[1]]) == _lcm(lmG[p[1]], lmf))}
    lcm_groups: dict = {}
    for i in range(t):
        lcm_groups.setdefault(_lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for L in sorted(lcm_groups, key=sum):
        if all(_div(L, M) is None for M in minimal):
            minimal.append(L)
    new_pairs = set()
    for L in minimal:
        # drop coprime pairs (Buchberger's first criterion)
        if any(_lcm(lmG[i], lmf) == _mul(lmG[i], lmf) for i in lcm_groups[L]):
            continue
        new_pairs.add((min(lcm_groups[L]), t))
    return G + [f], lmG + [lmf], P | new_pairs


def _interreduce(G):
    """Minimal + reduced basis from a Groebner basis."""
    if not G:
        return []
    ring = G[0].ring
    Gmin = []
    for f in sorted((g for g in G if g), key=lambda h: ring.key(h.lead()[0])):
        if all(_div(f.lead()[0], g.lead()[0]) is None for g in Gmin):
            Gmin.append(f)
    Gred = []
    for i, g in enumerate(Gmin):
        r = reduce_poly(g, Gmin[:i] + Gmin[i + 1:])
        if r:
            Gred.append(r.monic())
    return sorted(Gred, key=lambda h: ring.key(h.lead()[0]))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    basis: tuple

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].total_degree() == 0

    def lead_monomials(self):
        return [g.lead()[0] for g in self.basis]

    def contains(self, p: Polynomial) -> bool:
        return not reduce_poly(p, list(self.basis))


def buchberger(generators, ring: PolyRing | None = None,
               ctx: Context = DEFAULT_CONTEXT) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by the generators."""
    gens = [g for g in generators if g]
    if ring is None:
        if not gens:
            raise RingMismatchError("cannot infer ring for the zero ideal")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators in different rings")
    G: list = []
    lmG: list = []
    P: set = set()
    for f in gens:
        f = reduce_poly(f, G)
        if f:
            G, lmG, P = _update_pairs(G, lmG, P, f.monic())
    while P:
        if len(G) > ctx.budget.max_basis:
            raise BudgetExceededError("basis size budget exceeded")
        # normal selection: smallest lcm in the ring order
        pair = min(P, key=lambda p: ring.key(_lcm(lmG[p[0]], lmG[p[1]])))
        P.discard(pair)
        s = spoly(G[pair[0]], G[pair[1]])
        r = reduce_poly(s, G, ctx.budget)
        if r:
            G, lmG, P = _update_pairs(G, lmG, P, r.monic())
    return GroebnerBasis(ring, tuple(_interreduce(G)))


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of p modulo the reduced basis; zero iff p lies in the ideal."""
    if p.ring != G.ring:
        raise RingMismatchError("polynomial and basis in different rings")
    return reduce_poly(p, list(G.basis))

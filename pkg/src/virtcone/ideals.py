"""Ideal-level operations on top of the Groebner kernel.

Quotient, saturation, elimination, dimension/degree from lead terms,
and exact point counts of zero-dimensional schemes in generic charts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .context import COEFF_RANGE, Context, DEFAULT_CONTEXT, with_redraws
from .errors import (
    GeometryError,
    PositiveDimensionalError,
    RingMismatchError,
    VirtconeError,
)
from .groebner import GroebnerBasis, buchberger, normal_form, reduce_poly, _div, _mul
from .poly import Block, Grevlex, Polynomial, PolyRing
from .rationals import Q


@dataclass(frozen=True)
class Ideal:
    ring: PolyRing
    generators: tuple

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError("generator outside the stated ring")

    @property
    def is_zero(self) -> bool:
        return all(not g for g in self.generators)


def ideal(ring: PolyRing, *gens) -> Ideal:
    return Ideal(ring, tuple(g for g in gens if g))


def rehome(p: Polynomial, ring: PolyRing) -> Polynomial:
    """Move p to a ring with the same variable names (new order/extra vars allowed)."""
    if p.ring.names == ring.names:
        return Polynomial(ring, p.terms)
    idx = [ring.index(n) for n in p.ring.names]
    terms = {}
    for m, c in p.terms.items():
        e = [0] * len(ring.names)
        for i, a in enumerate(m):
            if a:
                e[idx[i]] = a
        terms[tuple(e)] = c
    return Polynomial(ring, terms)


def rehome_ideal(I: Ideal, ring: PolyRing) -> Ideal:
    return ideal(ring, *(rehome(g, ring) for g in I.generators))


def ideal_sum(I: Ideal, *more) -> Ideal:
    gens = list(I.generators)
    for J in more:
        if isinstance(J, Ideal):
            if J.ring != I.ring:
                raise RingMismatchError("ideal sum across rings")
            gens.extend(J.generators)
        else:
            gens.append(J)
    return ideal(I.ring, *gens)


@lru_cache(maxsize=4096)
def _gb_cached(ring: PolyRing, gens: tuple, budget) -> GroebnerBasis:
    ctx = Context(budget=budget)
    return buchberger(list(gens), ring, ctx)


def groebner_basis(I: Ideal, ctx: Context = DEFAULT_CONTEXT,
                   order=None) -> GroebnerBasis:
    ring = I.ring if order is None else I.ring.with_order(order)
    gens = tuple(rehome(g, ring) for g in I.generators if g)
    return _gb_cached(ring, gens, ctx.budget)


def contains(I: Ideal, p: Polynomial, ctx: Context = DEFAULT_CONTEXT) -> bool:
    G = groebner_basis(I, ctx)
    return not normal_form(rehome(p, G.ring), G)


def ideal_equal(I: Ideal, J: Ideal, ctx: Context = DEFAULT_CONTEXT) -> bool:
    if I.ring != J.ring:
        return False
    return groebner_basis(I, ctx).basis == groebner_basis(J, ctx).basis


def canonical(I: Ideal, ctx: Context = DEFAULT_CONTEXT) -> Ideal:
    """Replace generators by the reduced Groebner basis in the ring's own order."""
    G = groebner_basis(I, ctx)
    return ideal(I.ring, *(rehome(g, I.ring) for g in G.basis))


def is_unit_ideal(I: Ideal, ctx: Context = DEFAULT_CONTEXT) -> bool:
    gens = [g for g in I.generators if g]
    if not gens:
        return False
    return groebner_basis(I, ctx).is_unit


# ---------------------------------------------------------------------------
# elimination, intersection, quotient, saturation


def eliminate(I: Ideal, drop, ctx: Context = DEFAULT_CONTEXT) -> Ideal:
    """I intersected with the subring omitting the `drop` variables."""
    drop = tuple(drop)
    didx = {I.ring.index(v) for v in drop}
    G = groebner_basis(I, ctx, order=Block(drop))
    small = I.ring.drop_variables(drop)
    keep = [i for i in range(len(I.ring.names)) if i not in didx]
    gens = []
    for g in G.basis:
        if all(all(m[i] == 0 for i in didx) for m in g.terms):
            gens.append(Polynomial(small, {tuple(m[i] for i in keep): c
                                           for m, c in g.terms.items()}))
    return ideal(small, *gens)


def intersect(I: Ideal, J: Ideal, ctx: Context = DEFAULT_CONTEXT) -> Ideal:
    """I ∩ J via the one-variable elimination trick."""
    if I.ring != J.ring:
        raise RingMismatchError("intersection across rings")
    aux = _fresh_name(I.ring, "t_")
    big = I.ring.with_variables((aux,), extra_weights=(0,))
    t = big.var(aux)
    gens = [t * rehome(g, big) for g in I.generators if g]
    gens += [(big.one() - t) * rehome(g, big) for g in J.generators if g]
    E = eliminate(ideal(big, *gens), (aux,), ctx)
    return rehome_ideal(E, I.ring)


def divide_exact(p: Polynomial, f: Polynomial) -> Polynomial:
    """p / f for f dividing p exactly."""
    ring = p.ring
    lm, lc = f.lead()
    work = dict(p.terms)
    quot: dict = {}
    while work:
        m = max(work, key=ring.key)
        c = work.pop(m)
        q = _div(m, lm)
        if q is None:
            raise VirtconeError("inexact division")
        factor = c / lc
        quot[q] = quot.get(q, 0) + factor
        for gm, gc in f.terms.items():
            if gm == lm:
                continue
            mm = _mul(gm, q)
            s = work.get(mm, 0) - factor * gc
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    return Polynomial(ring, quot)


def quotient_by_poly(I: Ideal, f: Polynomial, ctx: Context = DEFAULT_CONTEXT) -> Ideal:
    """(I : f) = (I ∩ (f)) / f."""
    if not f:
        return ideal(I.ring, I.ring.one())
    if f.total_degree() == 0:
        return I
    meet = intersect(I, ideal(I.ring, f), ctx)
    return ideal(I.ring, *(divide_exact(g, f) for g in meet.generators))


def ideal_quotient(I: Ideal, J: Ideal, ctx: Context = DEFAULT_CONTEXT) -> Ideal:
    """(I : J), intersecting the single-polynomial quotients."""
    if I.ring != J.ring:
        raise RingMismatchError("quotient across rings")
    gens = [g for g in J.generators if g]
    if not gens:
        return ideal(I.ring, I.ring.one())
    result = None
    for g in gens:
        q = quotient_by_poly(I, g, ctx)
        result = q if result is None else intersect(result, q, ctx)
    return canonical(result, ctx)


def saturate(I: Ideal, J: Ideal, ctx: Context = DEFAULT_CONTEXT) -> Ideal:
    """(I : J^infinity), iterating quotients until the reduced basis stabilizes."""
    current = canonical(I, ctx)
    while True:
        nxt = ideal_quotient(current, J, ctx)
        if ideal_equal(nxt, current, ctx):
            return current
        current = nxt


def _fresh_name(ring: PolyRing, prefix: str) -> str:
    k = 0
    while f"{prefix}{k}" in ring.names:
        k += 1
    return f"{prefix}{k}"


def irrelevant_ideal(ring: PolyRing, factor: int) -> Ideal:
    gens = [ring.var(n) for n, f, w in zip(ring.names, ring.factors, ring.weights)
            if f == factor and w > 0]
    return Ideal(ring, tuple(gens))


# ---------------------------------------------------------------------------
# dimension and degree from lead terms


def _minimalize_monomials(mons):
    out = []
    for m in sorted(mons, key=sum):
        if all(_div(m, g) is None for g in out):
            out.append(m)
    return out


def _series_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _hilbert_numerator(mons) -> list:
    """Numerator of the Hilbert series of R/(mons) over (1-t)^n, as int coefficients."""
    mons = _minimalize_monomials(mons)
    if not mons:
        return [1]
    if any(sum(m) == 0 for m in mons):
        return [0]
    supports = [tuple(i for i, e in enumerate(m) if e) for m in mons]
    if all(len(set(supports[i]) & set(supports[j])) == 0
           for i in range(len(mons)) for j in range(i + 1, len(mons))):
        out = [1]
        for m in mons:
            f = [0] * (sum(m) + 1)
            f[0], f[-1] = 1, -1
            out = _series_mul(out, f)
        return out
    counts: dict = {}
    for s in supports:
        if len(s) > 1:
            for i in s:
                counts[i] = counts.get(i, 0) + 1
    j = max(counts, key=counts.get)
    n = len(mons[0])
    pivot = tuple(1 if i == j else 0 for i in range(n))
    plus = [m for m in mons if _div(m, pivot) is None] + [pivot]
    colon = [(_div(m, pivot) or m) for m in mons]
    a = _hilbert_numerator(plus)
    b = _hilbert_numerator(colon)
    b = [0] + list(b)  # multiply by t
    size = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(size)]


def _monomial_dimension(mons, n: int) -> int:
    """Affine Krull dimension of R/(mons): largest variable subset meeting no support."""
    mons = _minimalize_monomials(mons)
    if any(sum(m) == 0 for m in mons):
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in mons]
    best = 0
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if len(s) <= best:
            continue
        if all(not sup <= s for sup in supports):
            best = len(s)
    return best


def hilbert_dim_deg(I: Ideal, mode: str = "projective",
                    ctx: Context = DEFAULT_CONTEXT):
    """(dimension, degree) of V(I) from the lead-term ideal.

    Projective mode reports projective dimension (affine minus one); degree is
    the normalized leading coefficient of the Hilbert polynomial.  The unit
    ideal gives (-1, 0).
    """
    n = len(I.ring.names)
    gens = [g for g in I.generators if g]
    if not gens:
        dim = n if mode == "affine" else n - 1
        return dim, 1
    G = groebner_basis(I, ctx)
    if G.is_unit:
        return -1, 0
    mons = G.lead_monomials()
    adim = _monomial_dimension(mons, n)
    num = _hilbert_numerator(mons)
    # strip (1-t) factors: N(t) = (1-t)^k M(t), M(1) != 0
    k = 0
    cur = list(num)
    while True:
        total = sum(cur)
        if total != 0:
            break
        # divide by (1 - t)
        out = []
        acc = 0
        for c in cur[:-1]:
            acc += c
            out.append(acc)
        cur = out if out else [0]
        k += 1
        if k > n:
            break
    if n - k != adim:
        raise VirtconeError("internal: Hilbert-series and combinatorial dimensions disagree")
    deg = abs(sum(cur))
    dim = adim if mode == "affine" else adim - 1
    return dim, deg


# ---------------------------------------------------------------------------
# generic charts and zero-dimensional counting


def generic_linear_form(ring: PolyRing, factor: int, rng) -> Polynomial:
    names = [n for n, f, w in zip(ring.names, ring.factors, ring.weights)
             if f == factor and w > 0]
    if not names:
        raise GeometryError(f"no variables in factor {factor}")
    while True:
        coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in names]
        if any(coeffs):
            break
    form = ring.zero()
    for n, c in zip(names, coeffs):
        form = form + ring.var(n).scale(c)
    return form


def count_standard_monomials(G: GroebnerBasis, max_count: int) -> int:
    """Q-dimension of R/I for zero-dimensional I given by a reduced basis."""
    n = len(G.ring.names)
    leads = G.lead_monomials()
    for i in range(n):
        if not any(all(e == 0 for j, e in enumerate(m) if j != i) and m[i] > 0
                   for m in leads):
            raise PositiveDimensionalError(
                f"no pure power of {G.ring.names[i]!r} in the lead-term ideal")
    seen = {(0,) * n}
    queue = [(0,) * n]
    while queue:
        m = queue.pop()
        for i in range(n):
            mm = list(m)
            mm[i] += 1
            mm = tuple(mm)
            if mm in seen:
                continue
            if any(_div(mm, l) is not None for l in leads):
                continue
            seen.add(mm)
            queue.append(mm)
            if len(seen) > max_count:
                raise PositiveDimensionalError("standard-monomial count exceeds budget")
    return len(seen)


def zero_dim_count(I: Ideal, projective_factors=(1,),
                   ctx: Context = DEFAULT_CONTEXT) -> int:
    """Total length of the zero-dimensional scheme V(I).

    Each projective factor is dehomogenized on a generic affine chart (a
    seeded random linear form set to 1); the chart automatically discards
    components supported on that factor's irrelevant locus.  The count is
    recomputed with independent draws and must agree.
    """

    return with_redraws(
        ctx, lambda rng: zero_dim_count_once(I, projective_factors, rng, ctx))


def zero_dim_count_once(I: Ideal, projective_factors, rng,
                        ctx: Context = DEFAULT_CONTEXT) -> int:
    """Single-draw core of zero_dim_count; callers handle redraw agreement."""
    gens = list(I.generators)
    for factor in projective_factors:
        gens.append(generic_linear_form(I.ring, factor, rng) - I.ring.one())
    J = ideal(I.ring, *gens)
    G = groebner_basis(J, ctx)
    if G.is_unit:
        return 0
    return count_standard_monomials(G, ctx.budget.max_length)

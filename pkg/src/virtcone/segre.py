"""Segre classes pushed forward to the ambient projective space.

Two independent routes are provided and cross-checked in the test corpus:

* segre_ambient -- projective degrees of the blow-up graph of X in P^n,
  measured by direct generic slicing and saturation, folded into the
  closed form  i_* s(X, P^n) = 1 - sum_j g_j H^j (1 + dH)^-(j+1).
  The closed form comes from summing the exceptional-divisor powers of the
  blow-up with the divisor-class identity E = dH - h on the graph
  (see docs/segre-formulas.md).

* segre_in -- bidegrees of the projectivized exceptional divisor for a
  general Y, folded into
  deg s_p = (-1)^(D-p) sum_j C(D-p, j) (-1)^j d^(D-p-j) n_{D-j, j},
  with D = dim Y - 1.
"""

from __future__ import annotations

from math import comb

from .chow import ChowClass
from .cones import (
    ConePresentation,
    SchemePresentation,
    bidegrees,
    exceptional_ideal,
    pad_generators,
    projectivized_cycle,
)
from .context import Context, DEFAULT_CONTEXT, with_redraws
from .errors import GeometryError
from .ideals import (
    generic_linear_form,
    ideal,
    ideal_sum,
    is_unit_ideal,
    saturate,
    zero_dim_count_once,
)
from .rationals import Q


def _random_member(generators, ring, rng):
    """A random element of the linear system spanned by the generators."""
    while True:
        coeffs = [rng.randint(-1000, 1000) for _ in generators]
        if any(coeffs):
            break
    out = ring.zero()
    for g, c in zip(generators, coeffs):
        out = out + g.scale(c)
    return out


def projective_degrees(X: SchemePresentation, generators,
                       ctx: Context = DEFAULT_CONTEXT):
    """(g_0, ..., g_n): residual slice counts of the linear system of generators."""
    if X.mode != "projective" or X.ambient_relations.generators:
        raise GeometryError("projective degrees are defined for X inside P^n")
    gens, d = pad_generators(X, generators, ctx)
    if len(gens) < 2:
        raise GeometryError("need at least two generators after padding")
    n = len(X.ambient.names) - 1
    full = X.full_ideal
    if is_unit_ideal(full, ctx):
        raise GeometryError("X is empty")
    if X.dim_x(ctx) >= n:
        raise GeometryError("X must be a proper subscheme of P^n")
    r = len(gens) - 1
    ring = X.ambient

    def g_i(i: int) -> int:
        if i == 0:
            return 1
        if i > r:
            return 0

        def run(rng):
            slice_gens = [generic_linear_form(ring, 1, rng) for _ in range(n - i)]
            slice_gens += [_random_member(gens, ring, rng) for _ in range(i)]
            J = saturate(ideal(ring, *slice_gens), full, ctx)
            if is_unit_ideal(J, ctx):
                return 0
            return zero_dim_count_once(J, (1,), rng, ctx)

        return with_redraws(ctx, run)

    return [g_i(i) for i in range(n + 1)]


def _segre_from_degrees(degrees, d: int, n: int) -> ChowClass:
    """1 - sum_j g_j H^j (1+dH)^-(j+1), truncated at H^n."""
    coeffs = [Q(0)] * (n + 1)
    coeffs[0] = Q(1)
    for j, g in enumerate(degrees):
        if g == 0:
            continue
        # (1+dH)^-(j+1) has H^k coefficient (-1)^k C(j+k, k) d^k
        for k in range(n + 1 - j):
            coeffs[j + k] -= Q(g) * Q((-1) ** k) * comb(j + k, k) * Q(d) ** k
    return ChowClass(n, tuple(coeffs))


def segre_ambient(X: SchemePresentation, generators,
                  ctx: Context = DEFAULT_CONTEXT) -> ChowClass:
    """Push-forward of s(X, P^n) to P^n via projective degrees."""
    gens, d = pad_generators(X, generators, ctx)
    degrees = projective_degrees(X, gens, ctx)
    n = len(X.ambient.names) - 1
    return _segre_from_degrees(degrees, d, n)


def _fold_bidegrees(ns, d: int, m: int) -> ChowClass:
    """deg s_p = (-1)^(D-p) sum_j C(D-p, j) (-1)^j d^(D-p-j) n_{D-j, j}."""
    D = len(ns) - 1
    coeffs = [Q(0)] * (m + 1)
    for p in range(min(D, m) + 1):
        k = D - p
        total = Q(0)
        for j in range(k + 1):
            total += Q((-1) ** j) * comb(k, j) * Q(d) ** (k - j) * Q(ns[j])
        coeffs[m - p] = Q((-1) ** k) * total
    return ChowClass(m, tuple(coeffs))


def segre_of_cone(C: ConePresentation, ctx: Context = DEFAULT_CONTEXT) -> ChowClass:
    """Segre class of a cone over a projective base, pushed to the ambient P^m.

    The cone sits in a sum of O(twist) line bundles; its class is read off
    the bidegrees of the projectivized cycle P(C).
    """
    if C.base.mode != "projective":
        raise GeometryError("cone Segre classes require a projective base")
    W = projectivized_cycle(C, ctx)
    m = len(C.base.ambient.names) - 1
    return _fold_bidegrees(bidegrees(W, ctx), C.twist, m)


def segre_in(X: SchemePresentation, generators,
             ctx: Context = DEFAULT_CONTEXT) -> ChowClass:
    """Push-forward of s(X, Y) to the ambient P^m, via exceptional bidegrees."""
    if X.mode != "projective":
        raise GeometryError("segre_in works on projective presentations")
    m = len(X.ambient.names) - 1
    dim_y = X.dim_y(ctx)
    if X.dim_x(ctx) >= dim_y:
        raise GeometryError("X must be a proper closed subscheme of Y")
    ex = exceptional_ideal(X, generators, ctx=ctx)
    ns = bidegrees(ex, ctx)
    if len(ns) != dim_y:
        raise GeometryError("exceptional divisor has unexpected dimension")
    return _fold_bidegrees(ns, ex.twist, m)

"""Rees-algebra, normal-cone and exceptional-divisor presentations.

A subscheme X of Y (itself inside projective or affine space) is given by
generators of its ideal modulo Y; the blow-up graph, the normal cone inside
the direct sum of twisting bundles, and the projectivized exceptional
divisor are presented by bihomogeneous ideals in base and fiber variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .context import Context, DEFAULT_CONTEXT, with_redraws
from .errors import GeometryError, VirtconeError
from .ideals import (
    Ideal,
    canonical,
    contains,
    eliminate,
    generic_linear_form,
    groebner_basis,
    hilbert_dim_deg,
    ideal,
    ideal_sum,
    irrelevant_ideal,
    is_unit_ideal,
    rehome,
    rehome_ideal,
    saturate,
    zero_dim_count_once,
)
from .poly import Polynomial, PolyRing, multi_degree


@dataclass(frozen=True)
class SchemePresentation:
    """X inside Y inside the ambient space.

    ambient_relations cuts out Y (empty for Y = ambient space); the ideal's
    generators define X modulo Y, so every computation appends the relations.
    """

    ambient: PolyRing
    ideal: Ideal
    ambient_relations: Ideal
    mode: str = "projective"  # or "affine"

    def __post_init__(self):
        if self.mode not in ("projective", "affine"):
            raise VirtconeError("mode must be projective or affine")
        if self.mode == "projective":
            for g in list(self.ideal.generators) + list(self.ambient_relations.generators):
                if g and not g.is_homogeneous():
                    raise VirtconeError("projective presentations need homogeneous generators")

    @property
    def full_ideal(self) -> Ideal:
        return ideal_sum(self.ideal, self.ambient_relations)

    def dim_y(self, ctx: Context = DEFAULT_CONTEXT) -> int:
        return hilbert_dim_deg(self.ambient_relations, self.mode, ctx)[0]

    def dim_x(self, ctx: Context = DEFAULT_CONTEXT) -> int:
        return hilbert_dim_deg(self.full_ideal, self.mode, ctx)[0]


def scheme(ambient: PolyRing, gens, relations=(), mode: str = "projective") -> SchemePresentation:
    return SchemePresentation(ambient, ideal(ambient, *gens),
                              ideal(ambient, *relations), mode)


@dataclass(frozen=True)
class ConePresentation:
    """Bihomogeneous ideal in base (factor 1) and fiber (factor 2) variables."""

    base: SchemePresentation
    fiber_vars: tuple
    twist: int
    ideal: Ideal
    warnings: tuple = field(default=())

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def check_bihomogeneous(self):
        for g in self.ideal.generators:
            if g and not g.is_homogeneous():
                raise VirtconeError("cone ideal must be bihomogeneous")

    def total_dim(self, ctx: Context = DEFAULT_CONTEXT) -> int:
        """Dimension of the cycle in P^m x P^r (or A^m x P^r in affine mode)."""
        adim, _ = hilbert_dim_deg(self.ideal, "affine", ctx)
        return adim - 2 if self.base.mode == "projective" else adim - 1

    def purity_defect(self, ctx: Context = DEFAULT_CONTEXT):
        """None when the saturated cone has dimension dim Y, else a message.

        The cone (fibers kept affine) must have the dimension of Y; in
        projective mode both sides are measured through the affine cone over
        the base, so the saturated ideal's affine dimension drops by one.
        """
        sat = _saturate_cone(self.ideal, self.base.mode, ctx)
        adim, _ = hilbert_dim_deg(sat, "affine", ctx)
        cone_dim = adim - 1 if self.base.mode == "projective" else adim
        dim_y = self.base.dim_y(ctx)
        if cone_dim != dim_y:
            return (f"cone dimension {cone_dim} differs from dim Y = {dim_y}; "
                    "embedded behavior may be present")
        return None


def _cone_ring(X: SchemePresentation, fiber_vars) -> PolyRing:
    return X.ambient.with_variables(tuple(fiber_vars),
                                    extra_factors=(2,) * len(fiber_vars))


def _saturate_cone(I: Ideal, mode: str, ctx: Context) -> Ideal:
    out = saturate(I, irrelevant_ideal(I.ring, 2), ctx)
    if mode == "projective":
        out = saturate(out, irrelevant_ideal(I.ring, 1), ctx)
    return out


def _monomials_of_degree(ring: PolyRing, k: int):
    """All degree-k monomials in the factor-1, weight-1 variables."""
    idx = [i for i, (f, w) in enumerate(zip(ring.factors, ring.weights))
           if f == 1 and w == 1]
    out = []

    def rec(pos, left, e):
        if pos == len(idx) - 1:
            e2 = list(e)
            e2[idx[pos]] = left
            out.append(ring.monomial(tuple(e2)))
            return
        for a in range(left + 1):
            e2 = list(e)
            e2[idx[pos]] = a
            rec(pos + 1, left - a, e2)

    rec(0, k, [0] * len(ring.names))
    return out


def pad_generators(X: SchemePresentation, generators, ctx: Context = DEFAULT_CONTEXT):
    """Bring projective generators to a common degree d; returns (padded, d).

    A generator of lower degree is replaced by its products with every
    monomial of the complementary degree, so the padded ideal is a degree
    truncation of the original one and defines the same subscheme after
    saturation.
    """
    gens = [g for g in generators if g]
    if not gens:
        raise GeometryError("no generators supplied")
    if X.mode == "affine":
        return list(gens), max(g.total_degree() for g in gens)
    degs = [multi_degree(g)[0] for g in gens]
    d = max(degs)
    if all(dg == d for dg in degs):
        return list(gens), d
    out = []
    for g, dg in zip(gens, degs):
        if dg == d:
            out.append(g)
        else:
            out.extend(g * m for m in _monomials_of_degree(X.ambient, d - dg))
    seen = []
    for g in out:
        if g not in seen:
            seen.append(g)
    return seen, d


def _check_generators(X: SchemePresentation, generators, ctx: Context):
    full = X.full_ideal
    for g in generators:
        if not contains(full, g, ctx):
            raise GeometryError("generator does not lie in the ideal of X")


def rees_ideal(X: SchemePresentation, generators, fiber_vars=None,
               ctx: Context = DEFAULT_CONTEXT) -> ConePresentation:
    """Defining ideal of the blow-up graph of X in Y, inside base x P^r."""
    gens, d = pad_generators(X, generators, ctx)
    _check_generators(X, gens, ctx)
    if fiber_vars is None:
        fiber_vars = tuple(f"e{i}" for i in range(len(gens)))
    fiber_vars = tuple(fiber_vars)
    if len(fiber_vars) != len(gens):
        raise VirtconeError("one fiber variable per generator")
    ring = _cone_ring(X, fiber_vars)
    aux = "t_elim"
    big = ring.with_variables((aux,), extra_weights=(0,))
    t = big.var(aux)
    J = [rehome(ring.var(v), big) - t * rehome(g, big)
         for v, g in zip(fiber_vars, gens)]
    J += [rehome(r, big) for r in X.ambient_relations.generators]
    graph = rehome_ideal(eliminate(ideal(big, *J), (aux,), ctx), ring)
    if X.mode == "projective":
        graph = saturate(graph, irrelevant_ideal(ring, 1), ctx)
    graph = canonical(graph, ctx)
    return ConePresentation(X, fiber_vars, d, graph)


def normal_cone_ideal(X: SchemePresentation, generators, fiber_vars=None,
                      ctx: Context = DEFAULT_CONTEXT) -> ConePresentation:
    """Associated-graded presentation of C_{X/Y} inside the sum of O(d) twists."""
    graph = rees_ideal(X, generators, fiber_vars, ctx)
    ring = graph.ring
    gens, _ = pad_generators(X, generators, ctx)
    cone = ideal_sum(graph.ideal, *(rehome(g, ring) for g in gens))
    cone = canonical(cone, ctx)
    cp = ConePresentation(X, graph.fiber_vars, graph.twist, cone)
    defect = cp.purity_defect(ctx)
    if defect is not None:
        cp = ConePresentation(X, graph.fiber_vars, graph.twist, cone, (defect,))
    return cp


def exceptional_ideal(X: SchemePresentation, generators, fiber_vars=None,
                      ctx: Context = DEFAULT_CONTEXT) -> ConePresentation:
    """The exceptional divisor P(C_{X/Y}) of the blow-up, as a cycle in base x P^r."""
    cone = normal_cone_ideal(X, generators, fiber_vars, ctx)
    sat = _saturate_cone(cone.ideal, X.mode, ctx)
    if is_unit_ideal(sat, ctx):
        raise GeometryError("exceptional divisor is empty: X equals Y or X is empty")
    return ConePresentation(X, cone.fiber_vars, cone.twist, canonical(sat, ctx),
                            cone.warnings)


def projectivized_cycle(C: ConePresentation, ctx: Context = DEFAULT_CONTEXT) -> ConePresentation:
    """P(C) as a cycle: the cone ideal with vertex and base junk saturated away."""
    sat = _saturate_cone(C.ideal, C.base.mode, ctx)
    if is_unit_ideal(sat, ctx):
        raise GeometryError("projectivized cone is empty")
    return ConePresentation(C.base, C.fiber_vars, C.twist, canonical(sat, ctx),
                            C.warnings)


def bidegrees(W: ConePresentation, ctx: Context = DEFAULT_CONTEXT):
    """Slice counts n_{a,b} (a base forms, b fiber forms), a + b = dim W."""
    if W.base.mode != "projective":
        raise GeometryError("bidegrees require a projective base")
    D = W.total_dim(ctx)
    if D < 0:
        raise GeometryError("empty cycle has no bidegrees")
    ring = W.ring

    def slice_count(a: int, b: int):
        def run(rng):
            gens = list(W.ideal.generators)
            gens += [generic_linear_form(ring, 1, rng) for _ in range(a)]
            gens += [generic_linear_form(ring, 2, rng) for _ in range(b)]
            return zero_dim_count_once(ideal(ring, *gens), (1, 2), rng, ctx)

        return with_redraws(ctx, run)

    return [slice_count(D - b, b) for b in range(D + 1)]

"""One-parameter families of ideals: blow-up charts, bundle-sequence
deformations of cones, and flat limits.

A FamilyIdeal is relative over the line of its parameter variable, which is
an ordinary weight-0 variable of the ring so that homogeneity (where it
applies) is measured fiberwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import Context, DEFAULT_CONTEXT
from .cones import ConePresentation, SchemePresentation
from .errors import GeometryError, VirtconeError
from .ideals import Ideal, canonical, eliminate, ideal, is_unit_ideal, rehome, saturate
from .poly import PolyRing, Polynomial, substitute
from .rationals import Q


@dataclass(frozen=True)
class FamilyIdeal:
    """An ideal together with a distinguished parameter variable."""

    ideal: Ideal
    param: str

    def __post_init__(self):
        ring = self.ideal.ring
        i = ring.index(self.param)
        if ring.weights[i] != 0 or ring.factors[i] != 1:
            raise VirtconeError("family parameter must be a weight-0 base variable")

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring


def deformation_chart(X: SchemePresentation, generators=None, param: str = "t",
                      fiber_names=None, ctx: Context = DEFAULT_CONTEXT) -> FamilyIdeal:
    """The standard chart of the blow-up of Y x A^1 along X x {0}.

    Introduces the parameter and one fiber coordinate per generator; on the
    chart where the coordinate dual to the parameter is set to 1 the graph
    relations f_i = param * beta_i hold, and the output is the strict
    transform (the elimination ideal saturated by the parameter).
    """
    if X.mode != "affine":
        raise GeometryError("deformation charts are built on an affine chart of Y")
    gens = list(generators) if generators is not None else list(X.ideal.generators)
    gens = [g for g in gens if g]
    if not gens:
        raise GeometryError("no generators supplied")
    if fiber_names is None:
        fiber_names = tuple(f"b{i}" for i in range(len(gens)))
    fiber_names = tuple(fiber_names)
    if len(fiber_names) != len(gens):
        raise VirtconeError("one fiber coordinate per generator")
    ring = X.ambient.with_variables((param,) + fiber_names,
                                    extra_weights=(0,) + (1,) * len(fiber_names))
    aux = "u_inv"
    big = ring.with_variables((aux,), extra_weights=(0,))
    u = big.var(aux)
    J = [big.var(v) - u * rehome(g, big) for v, g in zip(fiber_names, gens)]
    J.append(big.one() - u * big.var(param))
    J += [rehome(r, big) for r in X.ambient_relations.generators]
    chart = eliminate(ideal(big, *J), (aux,), ctx)
    chart = Ideal(ring, tuple(rehome(g, ring) for g in chart.generators))
    chart = saturate(chart, ideal(ring, ring.var(param)), ctx)
    return FamilyIdeal(canonical(chart, ctx), param)


def defvb_family(C: ConePresentation, sub_block, param: str = "t",
                 prime_names=None, ctx: Context = DEFAULT_CONTEXT) -> FamilyIdeal:
    """Deform a cone C in F along the sequence 0 -> E -> F -> G -> 0.

    sub_block lists the fiber variables spanning the sub-bundle E.  Each of
    them acquires a primed duplicate; substituting v by v - v'/param in the
    cone ideal and clearing the minimal power of the parameter presents the
    closure of C x (A^1 minus 0) in the cokernel family.
    """
    sub_block = tuple(sub_block)
    fiber = set(C.fiber_vars)
    for v in sub_block:
        if v not in fiber:
            raise VirtconeError(f"{v!r} is not a fiber variable of the cone")
    old = C.ring
    if prime_names is None:
        prime_names = tuple(f"{v}p" for v in sub_block)
    prime_names = tuple(prime_names)
    if len(prime_names) != len(sub_block):
        raise VirtconeError("one primed duplicate per sub-bundle variable")
    idx = [old.index(v) for v in sub_block]
    ring = old.with_variables(prime_names + (param,),
                              extra_factors=tuple(old.factors[i] for i in idx) + (1,),
                              extra_weights=tuple(old.weights[i] for i in idx) + (0,))
    aux = "u_inv"
    big = ring.with_variables((aux,), extra_weights=(0,),
                              extra_factors=(ring.factors[ring.index(sub_block[0])],)
                              if sub_block else (1,))
    u = big.var(aux)
    bindings = {v: big.var(v) - big.var(p) * u
                for v, p in zip(sub_block, prime_names)}
    t = ring.var(param)
    out = []
    for g in C.ideal.generators:
        moved = substitute(g, bindings, big)
        k = big.index(aux)
        n = max((m[k] for m in moved.terms), default=0)
        cleared = ring.zero()
        j = ring.index(param)
        for m, c in moved.terms.items():
            e = list(m[:len(ring.names)])
            e[j] += n - m[k]
            cleared = cleared + ring.monomial(tuple(e), c)
        out.append(cleared)
    return FamilyIdeal(ideal(ring, *out), param)


def family_fiber(F: FamilyIdeal, value) -> Ideal:
    """The naive fiber at param = value, in the ring without the parameter."""
    small = F.ring.drop_variables((F.param,))
    binding = {F.param: small.const(Q(value))}
    return Ideal(small, tuple(substitute(g, binding, small)
                              for g in F.ideal.generators if g))


def flat_limit(F: FamilyIdeal, ctx: Context = DEFAULT_CONTEXT,
               saturate_first: bool = True) -> Ideal:
    """Special fiber of the flat closure over the parameter line.

    Saturates by the parameter (the definition of the flat closure), then
    restricts to param = 0.  saturate_first=False skips the closure step and
    exposes the naive, possibly non-flat, restriction for diagnostics.
    """
    I = F.ideal
    t = I.ring.var(F.param)
    if saturate_first:
        I = saturate(I, ideal(I.ring, t), ctx)
    small = I.ring.drop_variables((F.param,))
    binding = {F.param: small.zero()}
    out = Ideal(small, tuple(g2 for g2 in
                             (substitute(g, binding, small) for g in I.generators)
                             if g2))
    if is_unit_ideal(out, ctx):
        raise GeometryError("family is supported on the special fiber")
    return canonical(out, ctx)

"""Virtual fundamental classes via the Gysin cap formula.

Given X inside a pure-dimensional Y and an obstruction bundle E = sum O(a_i)
containing the normal cone, the virtual class is the virtual-dimension part
of c(E) cap s(X, Y), pushed forward to the ambient projective space.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .chow import (
    ChernSeries,
    ChowClass,
    cap,
    chern_of_twists,
    dim_part,
    series_inverse,
    series_mul,
)
from .cones import SchemePresentation, pad_generators
from .context import Context, DEFAULT_CONTEXT
from .errors import GeometryError
from .segre import segre_in


@dataclass(frozen=True)
class ObstructionTwists:
    """E = sum of O(a_i) restricted to X; one twist per global generator."""

    twists: tuple

    def __post_init__(self):
        if len(self.twists) < 1:
            raise GeometryError("an obstruction bundle needs at least one summand")

    @property
    def rank(self) -> int:
        return len(self.twists)

    def chern(self, ambient_dim: int) -> ChernSeries:
        return chern_of_twists(self.twists, ambient_dim)


def virtual_class(X: SchemePresentation, E: ObstructionTwists,
                  ctx: Context = DEFAULT_CONTEXT,
                  attest_containment: bool = False) -> ChowClass:
    """{c(E) cap s(X, Y)}_(dim Y - rank E), pushed forward to P^m."""
    generators = list(X.ideal.generators)
    _, d = pad_generators(X, generators, ctx)
    degrees = sorted(E.twists)
    gen_degrees = sorted([d] * len(generators))
    if degrees != gen_degrees and not attest_containment:
        raise GeometryError(
            "twists differ from the generator degrees; cone containment is only "
            "guaranteed for the global-generator bundle (pass attest_containment "
            "to accept responsibility for C being contained in E)")
    m = len(X.ambient.names) - 1
    k = X.dim_y(ctx)
    vd = k - E.rank
    if vd < 0:
        warnings.warn("negative virtual dimension: returning the zero class")
        return ChowClass.zero(m)
    s = segre_in(X, generators, ctx)
    return dim_part(cap(E.chern(m), s), vd)


def excess_virtual_class(c_normal: ChernSeries, normal_rank: int,
                         E: ObstructionTwists,
                         fundamental: ChowClass) -> ChowClass:
    """Regular-embedding route: c_top(E/N) cap [X] via c(E) c(N)^-1.

    The caller supplies the total Chern class of the normal bundle (restricted
    to X and written in the ambient hyperplane class) together with its rank.
    """
    if E.rank < normal_rank:
        raise GeometryError("obstruction bundle must contain the normal bundle")
    dim_x = fundamental.top_dimension()
    if dim_x < 0:
        raise GeometryError("zero fundamental class")
    vd = dim_x - (E.rank - normal_rank)
    if vd < 0:
        warnings.warn("negative virtual dimension: returning the zero class")
        return ChowClass.zero(fundamental.ambient_dim)
    series = series_mul(E.chern(fundamental.ambient_dim), series_inverse(c_normal))
    return dim_part(cap(series, fundamental), vd)


def component_subbundle(c_sub: ChernSeries, sub_rank: int, support: ChowClass,
                        E: ObstructionTwists) -> ChowClass:
    """Contribution of a cone component that is a vector subbundle of E.

    The component W (total class c_sub, rank sub_rank over its support)
    contributes {c(E) c(W)^-1 cap [support]} in the virtual dimension.
    """
    if sub_rank > E.rank:
        raise GeometryError("subbundle rank exceeds the obstruction rank")
    dim_s = support.top_dimension()
    if dim_s < 0:
        raise GeometryError("zero support class")
    vd = dim_s - (E.rank - sub_rank)
    if vd < 0:
        warnings.warn("negative virtual dimension: returning the zero class")
        return ChowClass.zero(support.ambient_dim)
    series = series_mul(E.chern(support.ambient_dim), series_inverse(c_sub))
    return dim_part(cap(series, support), vd)


def component_point_fiber(multiplicity: int, ambient_dim: int,
                          E: ObstructionTwists) -> ChowClass:
    """Contribution of a component equal to the full fiber of E over a point."""
    return ChowClass.point(ambient_dim, multiplicity)

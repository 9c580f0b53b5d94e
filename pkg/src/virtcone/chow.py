"""Chow classes and Chern/Segre series on projective space.

Cycle classes are stored as push-forwards to the ambient P^m: a vector of
exact rationals indexed by codimension, coefficient of H^k.  Chern series
are truncated total classes with unit constant term.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import GeometryError, VirtconeError
from .rationals import Q, rat_str


def _qtuple(coeffs):
    return tuple(Q(c) for c in coeffs)


@dataclass(frozen=True)
class ChowClass:
    """Push-forward of a cycle class to P^m; coeffs[k] multiplies H^k."""

    ambient_dim: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _qtuple(self.coeffs))
        if len(self.coeffs) != self.ambient_dim + 1:
            raise VirtconeError("class length must be ambient_dim + 1")

    @staticmethod
    def zero(m: int) -> "ChowClass":
        return ChowClass(m, (0,) * (m + 1))

    @staticmethod
    def hyperplane_power(m: int, k: int, coeff=1) -> "ChowClass":
        c = [Q(0)] * (m + 1)
        c[k] = Q(coeff)
        return ChowClass(m, tuple(c))

    @staticmethod
    def fundamental(m: int) -> "ChowClass":
        return ChowClass.hyperplane_power(m, 0)

    @staticmethod
    def point(m: int, coeff=1) -> "ChowClass":
        return ChowClass.hyperplane_power(m, m, coeff)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if self.ambient_dim != other.ambient_dim:
            raise VirtconeError("ambient dimension mismatch")
        return ChowClass(self.ambient_dim,
                         tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + other.scale(-1)

    def scale(self, c) -> "ChowClass":
        return ChowClass(self.ambient_dim, tuple(Q(c) * a for a in self.coeffs))

    def coefficient(self, codim: int):
        return self.coeffs[codim]

    def dim_coefficient(self, p: int):
        return self.coeffs[self.ambient_dim - p]

    def top_dimension(self) -> int:
        """Dimension of the largest nonzero piece; -1 for the zero class."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return self.ambient_dim - k
        return -1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if k == 0 else ("H" if k == 1 else f"H^{k}")
            parts.append(f"{rat_str(c)}*{mono}" if k else rat_str(c))
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ChernSeries:
    """Truncated total Chern/Segre series; coeffs[0] must be 1."""

    ambient_dim: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _qtuple(self.coeffs))
        if len(self.coeffs) != self.ambient_dim + 1:
            raise VirtconeError("series length must be ambient_dim + 1")
        if self.coeffs[0] != 1:
            raise VirtconeError("total classes are units: constant term must be 1")

    @staticmethod
    def one(m: int) -> "ChernSeries":
        return ChernSeries(m, (1,) + (0,) * m)

    @staticmethod
    def line_bundle(m: int, a) -> "ChernSeries":
        c = [Q(0)] * (m + 1)
        c[0] = Q(1)
        if m >= 1:
            c[1] = Q(a)
        return ChernSeries(m, tuple(c))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if k == 0 else ("H" if k == 1 else f"H^{k}")
            parts.append(f"{rat_str(c)}*{mono}" if k else rat_str(c))
        return " + ".join(parts) if parts else "0"


def series_mul(a: ChernSeries, b: ChernSeries) -> ChernSeries:
    if a.ambient_dim != b.ambient_dim:
        raise VirtconeError("ambient dimension mismatch")
    m = a.ambient_dim
    out = [Q(0)] * (m + 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j in range(m + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return ChernSeries(m, tuple(out))


def series_inverse(a: ChernSeries) -> ChernSeries:
    m = a.ambient_dim
    out = [Q(0)] * (m + 1)
    out[0] = Q(1)
    for k in range(1, m + 1):
        out[k] = -sum(a.coeffs[i] * out[k - i] for i in range(1, k + 1))
    return ChernSeries(m, tuple(out))


def series_power(a: ChernSeries, k: int) -> ChernSeries:
    if k < 0:
        return series_power(series_inverse(a), -k)
    out = ChernSeries.one(a.ambient_dim)
    for _ in range(k):
        out = series_mul(out, a)
    return out


def cap(c: ChernSeries, z: ChowClass) -> ChowClass:
    """Coefficientwise convolution, truncated at the ambient dimension."""
    if c.ambient_dim != z.ambient_dim:
        raise VirtconeError("ambient dimension mismatch")
    m = c.ambient_dim
    out = [Q(0)] * (m + 1)
    for i, x in enumerate(c.coeffs):
        if x == 0:
            continue
        for j in range(m + 1 - i):
            out[i + j] += x * z.coeffs[j]
    return ChowClass(m, tuple(out))


def dim_part(z: ChowClass, p: int) -> ChowClass:
    """The dimension-p component (codimension m-p) of z."""
    if not 0 <= p <= z.ambient_dim:
        raise GeometryError(f"dimension {p} out of range for P^{z.ambient_dim}")
    k = z.ambient_dim - p
    out = [Q(0)] * (z.ambient_dim + 1)
    out[k] = z.coeffs[k]
    return ChowClass(z.ambient_dim, tuple(out))


def chern_of_twists(twists, ambient_dim: int) -> ChernSeries:
    """Total Chern class of a direct sum of O(a_i)."""
    out = ChernSeries.one(ambient_dim)
    for a in twists:
        out = series_mul(out, ChernSeries.line_bundle(ambient_dim, a))
    return out


def residual_contribution(normal_classes, c_tangent_ambient_restricted: ChernSeries,
                          c_tangent_z: ChernSeries, fundamental: ChowClass):
    """Degree of the dimension-0 part of prod(c(N_i)) c(T_amb|Z)^-1 c(T_Z) cap [Z]."""
    m = fundamental.ambient_dim
    series = ChernSeries.one(m)
    for cn in normal_classes:
        if cn.ambient_dim != m:
            raise VirtconeError("ambient dimension mismatch")
        series = series_mul(series, cn)
    series = series_mul(series, series_inverse(c_tangent_ambient_restricted))
    series = series_mul(series, c_tangent_z)
    return cap(series, fundamental).dim_coefficient(0)


def blowup_pairing(m: int, k: int):
    """Intersection numbers of Bl_{P^k}(P^m) along a linear center.

    Returns {(a, b): integral of (f*H)^a . E^b} for a + b = m, from the
    projective-bundle relation on the exceptional divisor E = P(N) with
    N = O(1)^(m-k) on P^k.
    """
    if not 0 <= k < m:
        raise GeometryError("center must satisfy 0 <= k < m")
    table = {}
    for a in range(m + 1):
        b = m - a
        if b == 0:
            table[(a, b)] = Q(1)
        elif a > k:
            table[(a, b)] = Q(0)
        else:
            # (-1)^(b-1) * deg(H^a s_{k-a}(N)) with s(N) = (1+H)^-(m-k) on P^k
            i = k - a
            s_i = Q((-1) ** i) * comb(m - a - 1, i)
            table[(a, b)] = Q((-1) ** (b - 1)) * s_i
    return table

"""Multidegrees of complete intersections and their exact invariants.

A smooth complete intersection in complex projective space is determined,
as an oriented manifold, by its complex dimension n and the multiset of
degrees of the defining hypersurfaces.  Degrees equal to 1 slice the
ambient space by a hyperplane without changing the manifold, so
multidegrees are canonicalised by dropping 1s; the empty canonical
multidegree is projective n-space itself.

Everything here is integer-exact.  The total Chern and Pontryagin classes
live in the subring generated by the degree-2 hyperplane class x, so they
are truncated integer power series; the Euler characteristic pairs the top
Chern coefficient with the fundamental class, which is the total degree
times the ambient generator.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable

from .series import TruncSeries


@dataclass(frozen=True, eq=False)
class Multidegree:
    """A finite multiset of hypersurface degrees.

    ``raw`` keeps the degrees as given; ``canonical`` drops the 1s and
    sorts descending.  Two multidegrees describe the same manifold (in
    every dimension) exactly when their canonical forms agree, so equality
    and hashing are canonical-based.

    >>> Multidegree.of([3, 1, 2, 1]).canonical
    (3, 2)
    >>> Multidegree.of([3, 1, 2, 1]) == Multidegree.of([2, 3])
    True
    """

    raw: tuple[int, ...]
    canonical: tuple[int, ...]
    total_degree: int

    @classmethod
    def of(cls, degrees: Iterable[int]) -> Multidegree:
        raw = tuple(int(d) for d in degrees)
        if not raw:
            raise ValueError("a multidegree needs at least one degree (use [1] for projective space)")
        bad = [d for d in raw if d < 1]
        if bad:
            raise ValueError(f"degrees must be >= 1, got {bad[0]}")
        canonical = tuple(sorted((d for d in raw if d > 1), reverse=True))
        return cls(raw, canonical, prod(raw))

    @property
    def k(self) -> int:
        """Number of defining hypersurfaces, 1s included."""
        return len(self.raw)

    @property
    def even_degree_count(self) -> int:
        return sum(1 for d in self.raw if d % 2 == 0)

    def degree_counts(self) -> Counter[int]:
        return Counter(self.raw)

    def literal(self) -> str:
        """Canonical text form, e.g. ``"25^130,15,9^65"``; ``"1"`` for projective space."""
        if not self.canonical:
            return "1"
        parts = []
        for deg, count in sorted(Counter(self.canonical).items(), reverse=True):
            parts.append(f"{deg}^{count}" if count > 1 else f"{deg}")
        return ",".join(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multidegree):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        return f"Multidegree({self.literal()!r})"


def canonicalize(degrees: Iterable[int]) -> Multidegree:
    """Validate raw degrees and build the canonical multidegree."""
    return Multidegree.of(degrees)


@dataclass(frozen=True)
class SullivanData:
    """The tuple (total degree, Pontryagin integers, Euler characteristic).

    ``pontryagin[i-1]`` is the x^{2i} coefficient of the total Pontryagin
    series in the convention used throughout this package, where the
    hyperplane line bundle contributes 1 - x^2.  That convention flips the
    sign of the odd-index classes relative to the classical one; equality
    comparisons are unaffected, and ``classical_pontryagin`` restores the
    classical signs.
    """

    n: int
    total_degree: int
    pontryagin: tuple[int, ...]
    euler: int

    @property
    def classical_pontryagin(self) -> tuple[int, ...]:
        return tuple(p if i % 2 == 0 else -p for i, p in enumerate(self.pontryagin, start=1))


@dataclass(frozen=True)
class WuProfile:
    """Mod-2 characteristic data of a 4-dimensional complete intersection.

    ``w2_nu`` and ``w4_nu`` are the Stiefel-Whitney classes of the stable
    normal bundle, ``w4_x`` the w4 of the manifold itself, and v2/v4 the Wu
    classes; all are bits attached to the power of the hyperplane class.
    """

    p_count: int
    w2_nu: int
    w4_nu: int
    v2: int
    v4: int
    w4_x: int

    @property
    def p_count_mod_4(self) -> int:
        return self.p_count % 4

    @property
    def spin(self) -> bool:
        return self.v2 == 0


def chern_total_xi(n: int, md: Multidegree, precision: int) -> TruncSeries:
    """Total Chern class of the stable bundle whose pullback is the normal bundle.

    With k hypersurfaces this is (1+x)^-(n+k+1) * prod(1 + d*x) over the raw
    degrees, truncated at ``precision``.
    """
    _check_dimension(n)
    if precision < 0:
        raise ValueError("precision must be non-negative")
    s = TruncSeries.one(precision)
    for deg, count in md.degree_counts().items():
        s = s * TruncSeries.linear(1, deg, precision) ** count
    return s * TruncSeries.linear(1, 1, precision) ** (-(n + md.k + 1))


def chern_total_X(n: int, md: Multidegree, precision: int) -> TruncSeries:
    """Total Chern class of the manifold: (1+x)^(n+k+1) * prod(1 + d*x)^-1."""
    _check_dimension(n)
    if precision < 0:
        raise ValueError("precision must be non-negative")
    s = TruncSeries.linear(1, 1, precision) ** (n + md.k + 1)
    for deg, count in md.degree_counts().items():
        s = s * TruncSeries.linear(1, deg, precision) ** (-count)
    return s


def pontryagin_total(n: int, md: Multidegree) -> TruncSeries:
    """Total Pontryagin series (1-x^2)^(n+k+1) * prod(1 - d^2 x^2)^-1.

    Truncated at 2*floor(n/2), the degree of the last Pontryagin class
    that can be nonzero on a 2n-manifold.
    """
    _check_dimension(n)
    precision = 2 * (n // 2)
    s = _quadratic(1, precision) ** (n + md.k + 1)
    for deg, count in md.degree_counts().items():
        s = s * _quadratic(deg, precision) ** (-count)
    return s


def euler_char(n: int, md: Multidegree) -> int:
    """Euler characteristic: total degree times the top Chern coefficient."""
    return md.total_degree * chern_total_X(n, md, n).coeff(n)


def sullivan_data(n: int, md: Multidegree) -> SullivanData:
    """Assemble (d, p_1..p_{floor(n/2)}, chi) for the given dimension."""
    _check_dimension(n)
    p = pontryagin_total(n, md)
    pontryagin = tuple(p.coeff(2 * i) for i in range(1, n // 2 + 1))
    return SullivanData(n, md.total_degree, pontryagin, euler_char(n, md))


# Columns indexed by the number of even degrees mod 4.
_W2_NU_BY_RESIDUE = (1, 0, 1, 0)
_W4_NU_BY_RESIDUE = (1, 1, 0, 0)
_W4_X_BY_RESIDUE = (0, 1, 1, 0)


def wu_profile(md: Multidegree) -> WuProfile:
    """Wu and Stiefel-Whitney bits of the 4-dimensional complete intersection.

    The bits depend only on the number of even degrees mod 4; the table
    lookup is cross-checked against the mod-2 reduction of the Chern
    series on every call, since w_{2i} is the mod-2 image of c_i.
    """
    p_count = md.even_degree_count
    r = p_count % 4
    w2_nu = _W2_NU_BY_RESIDUE[r]
    w4_nu = _W4_NU_BY_RESIDUE[r]
    w4_x = _W4_X_BY_RESIDUE[r]

    c = chern_total_xi(4, md, 2).reduce_mod2()
    # w4(X) = w2(nu)^2 + w4(nu), and squaring a bit is the identity.
    direct = (c.coeff(1), c.coeff(2), (c.coeff(1) + c.coeff(2)) % 2)
    if direct != (w2_nu, w4_nu, w4_x):
        raise ArithmeticError(
            f"Wu table disagrees with the mod-2 Chern series for {md!r}: "
            f"table {(w2_nu, w4_nu, w4_x)}, series {direct}"
        )
    return WuProfile(p_count, w2_nu, w4_nu, v2=w2_nu, v4=w4_nu, w4_x=w4_x)


def _quadratic(d: int, precision: int) -> TruncSeries:
    """The series 1 - d^2 x^2 at the given precision."""
    coeffs = [1, 0, -d * d][: precision + 1]
    return TruncSeries(coeffs, precision=precision)


def _check_dimension(n: int) -> None:
    if n < 1:
        raise ValueError(f"complex dimension must be >= 1, got {n}")

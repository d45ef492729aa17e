"""Truncated formal power series in one variable over the integers.

This is the computational substrate for all characteristic-class
arithmetic in the package: a series is known exactly up to an explicit
truncation degree, and coefficients are Python ints, so values with
hundreds of digits stay exact.

Precision is explicit state.  Operations on operands of different
precisions truncate to the smaller one, and reading a coefficient beyond
the tracked range raises instead of returning zero: a silently missing
term would corrupt every downstream invariant.
"""

from __future__ import annotations

from typing import Iterable


class TruncSeries:
    """A series ``sum(c_i * x^i, 0 <= i <= precision)`` with integer c_i.

    Instances are immutable and hashable; every operation returns a new
    value, so sharing between threads is safe.

    >>> a = TruncSeries([1, 1], precision=3)        # 1 + x
    >>> (a ** 5).coeffs
    (1, 5, 10, 10)
    >>> (a * TruncSeries([1, -1], precision=3)).coeffs
    (1, 0, -1, 0)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], precision: int | None = None):
        cs = [int(c) for c in coeffs]
        if precision is None:
            if not cs:
                raise ValueError("a series needs at least its constant coefficient")
        else:
            if precision < 0:
                raise ValueError("precision must be non-negative")
            if len(cs) > precision + 1:
                raise ValueError(
                    f"{len(cs)} coefficients do not fit in precision {precision}"
                )
            cs.extend([0] * (precision + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls, precision: int) -> TruncSeries:
        return cls([0], precision=precision)

    @classmethod
    def one(cls, precision: int) -> TruncSeries:
        return cls([1], precision=precision)

    @classmethod
    def linear(cls, c0: int, c1: int, precision: int) -> TruncSeries:
        """The series c0 + c1*x at the given precision."""
        return cls([c0, c1] if precision >= 1 else [c0], precision=precision)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def precision(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> int:
        """The x^i coefficient; raises if i is outside the tracked range."""
        if not 0 <= i <= self.precision:
            raise IndexError(
                f"coefficient of x^{i} is outside the tracked range 0..{self.precision}"
            )
        return self._coeffs[i]

    def truncate(self, precision: int) -> TruncSeries:
        if precision > self.precision:
            raise ValueError("cannot raise precision: the missing terms are unknown")
        return TruncSeries(self._coeffs[: precision + 1])

    def __add__(self, other: TruncSeries) -> TruncSeries:
        p = min(self.precision, other.precision)
        return TruncSeries(
            [a + b for a, b in zip(self._coeffs[: p + 1], other._coeffs[: p + 1])]
        )

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-a for a in self._coeffs])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        p = min(self.precision, other.precision)
        a, b = self._coeffs, other._coeffs
        out = [0] * (p + 1)
        for i in range(min(len(a), p + 1)):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b), p + 1 - i)):
                out[i + j] += ai * b[j]
        return TruncSeries(out)

    def inv(self) -> TruncSeries:
        """Multiplicative inverse up to the precision.

        Only defined over the integers when the constant term is +1 or -1.
        """
        c0 = self._coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(
                f"constant term {c0} is not a unit; need +1 or -1 to invert over the integers"
            )
        p = self.precision
        out = [0] * (p + 1)
        out[0] = c0
        for n in range(1, p + 1):
            acc = 0
            for k in range(1, n + 1):
                acc += self._coeffs[k] * out[n - k]
            out[n] = -c0 * acc
        return TruncSeries(out)

    def __pow__(self, e: int) -> TruncSeries:
        """Integer power by square-and-multiply; negative e inverts first."""
        if e < 0:
            return self.inv() ** (-e)
        result = TruncSeries.one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reduce_mod2(self) -> TruncSeries:
        """Coefficientwise image in Z/2, kept as a series with 0/1 entries."""
        return TruncSeries([c & 1 for c in self._coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({list(self._coeffs)!r})"

"""Finitely generated abelian groups, exactly.

Groups are presented as Z^g modulo the column lattice of an integer
relation matrix; Smith normal form over plain Python ints supplies
canonical forms, kernels, images, cokernels, exactness checks and lattice
membership.  Nothing here ever rounds or overflows.

>>> cokernel(GroupHom.between(Presentation.free(1), Presentation.free(1), [[2]]))
FinAbGroup(free_rank=0, torsion=(2,))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; entries are tuples of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry shape does not match the declared dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise ValueError("column count is ambiguous for a matrix with no rows")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        entries = tuple(tuple(int(col[i]) for col in columns) for i in range(rows))
        return cls(rows, len(columns), entries)

    def at(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix(
            self.rows,
            self.cols + other.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def top_rows(self, count: int) -> IntMatrix:
        return IntMatrix(count, self.cols, self.entries[:count])

    def __mul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        out = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return IntMatrix(self.rows, other.cols, out)

    def mulvec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length differs from column count")
        return tuple(sum(row[j] * v[j] for j in range(self.cols)) for row in self.entries)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Diagonalise by unimodular row and column operations.

    Returns (U, D, V) with U*m*V = D, U and V unimodular, and the diagonal
    of D non-negative with each entry dividing the next.
    """
    r, c = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        while True:
            pivot = None
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best):
                        best = abs(x)
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (t, t):
                if pivot[0] != t:
                    swap_rows(t, pivot[0])
                if pivot[1] != t:
                    swap_cols(t, pivot[1])
            dirty = False
            for i in range(t + 1, r):
                q = a[i][t] // a[t][t]
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, c):
                q = a[t][j] // a[t][t]
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    dirty = True
            if dirty:
                continue
            offender = next(
                (
                    i
                    for i in range(t + 1, r)
                    if any(a[i][j] % a[t][t] for j in range(t + 1, c))
                ),
                None,
            )
            if offender is not None:
                add_row(t, offender, 1)
                continue
            break
        if t < min(r, c) and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return (
        IntMatrix.from_rows(u, cols=r),
        IntMatrix.from_rows(a, cols=c),
        IntMatrix.from_rows(v, cols=c),
    )


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel lattice {x : m*x = 0}, as columns."""
    _, d, v = smith_normal_form(m)
    zero_cols = [
        j
        for j in range(m.cols)
        if j >= m.rows or d.entries[j][j] == 0
    ]
    return IntMatrix.from_columns([v.column(j) for j in zero_cols], rows=m.cols)


class ColumnLattice:
    """Membership tests against the column lattice of a fixed matrix."""

    def __init__(self, m: IntMatrix):
        self._rows = m.rows
        self._cols = m.cols
        self._u, self._d, _ = smith_normal_form(m)

    def contains(self, v: Sequence[int]) -> bool:
        w = self._u.mulvec(v)
        for i in range(self._rows):
            di = self._d.entries[i][i] if i < self._cols else 0
            if di:
                if w[i] % di:
                    return False
            elif w[i]:
                return False
        return True

    def contains_all(self, m: IntMatrix) -> bool:
        return all(self.contains(col) for col in m.columns())


def lattice_contains(m: IntMatrix, v: Sequence[int]) -> bool:
    return ColumnLattice(m).contains(v)


@dataclass(frozen=True)
class Presentation:
    """Z^gens modulo the column lattice of ``relations``."""

    gens: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.gens:
            raise ValueError("relation matrix must have one row per generator")

    @classmethod
    def free(cls, rank: int) -> Presentation:
        return cls(rank, IntMatrix.zeros(rank, 0))

    @classmethod
    def of_invariants(cls, torsion: Sequence[int], free_rank: int = 0) -> Presentation:
        """Torsion generators first (diagonal relations), then free ones."""
        gens = len(torsion) + free_rank
        cols = [
            [torsion[j] if i == j else 0 for i in range(gens)]
            for j in range(len(torsion))
        ]
        return cls(gens, IntMatrix.from_columns(cols, rows=gens))


@dataclass(frozen=True)
class FinAbGroup:
    """Canonical form Z^free_rank + Z/d1 + ... + Z/dm with d1 | d2 | ... | dm.

    Two finitely generated abelian groups are isomorphic exactly when their
    canonical forms are equal.

    >>> canonical_form(Presentation.of_invariants([2, 3]))
    FinAbGroup(free_rank=0, torsion=(6,))
    >>> str(FinAbGroup.cyclic(4))
    'Z/4'
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficients must be >= 2, got {d}")
        for x, y in itertools.pairwise(self.torsion):
            if y % x:
                raise ValueError(f"torsion coefficients must form a divisibility chain, got {self.torsion}")

    @classmethod
    def trivial(cls) -> FinAbGroup:
        return cls(0, ())

    @classmethod
    def cyclic(cls, m: int) -> FinAbGroup:
        """Z/m; m = 0 means the infinite cyclic group."""
        if m < 0:
            raise ValueError("cyclic order must be >= 0")
        if m == 0:
            return cls(1, ())
        if m == 1:
            return cls.trivial()
        return cls(0, (m,))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int:
        if not self.is_finite:
            raise ValueError("infinite group has no order")
        return prod(self.torsion)

    def exponent(self) -> int:
        if not self.is_finite:
            raise ValueError("infinite group has no exponent")
        return self.torsion[-1] if self.torsion else 1

    def order_dividing(self, m: int) -> int:
        """Number of elements x with m*x = 0, for m >= 1 and finite groups."""
        if m < 1:
            raise ValueError("m must be >= 1")
        if not self.is_finite:
            raise ValueError("count is infinite for groups with free rank")
        out = 1
        for d in self.torsion:
            g = _gcd(m, d)
            out *= g
        return out

    def direct_sum(self, other: FinAbGroup) -> FinAbGroup:
        pres = Presentation.of_invariants(self.torsion + other.torsion)
        summed = canonical_form(pres)
        return FinAbGroup(
            self.free_rank + other.free_rank + summed.free_rank, summed.torsion
        )

    def presentation(self) -> Presentation:
        return Presentation.of_invariants(self.torsion, self.free_rank)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


def canonical_form(pres: Presentation) -> FinAbGroup:
    """Invariant-factor decomposition of a presented group."""
    _, d, _ = smith_normal_form(pres.relations)
    diag = [x for x in d.diagonal() if x]
    torsion = tuple(x for x in diag if x > 1)
    return FinAbGroup(pres.gens - len(diag), torsion)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by an integer matrix on generators.

    Column j of ``matrix`` is the image of the j-th source generator,
    written in the target generators.  The map is well defined exactly
    when it sends every source relation into the target relation lattice.
    """

    source: Presentation
    target: Presentation
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.target.gens or self.matrix.cols != self.source.gens:
            raise ValueError("matrix shape does not match the presentations")

    @classmethod
    def between(
        cls,
        source: Presentation,
        target: Presentation,
        matrix: Sequence[Sequence[int]],
    ) -> GroupHom:
        return cls(source, target, IntMatrix.from_rows(matrix, cols=source.gens))

    def is_well_defined(self) -> bool:
        moved = self.matrix * self.source.relations
        return ColumnLattice(self.target.relations).contains_all(moved)


def _require_well_defined(h: GroupHom) -> None:
    if not h.is_well_defined():
        raise ValueError(
            "ill-defined homomorphism: a source relation leaves the target relation lattice"
        )


def _preimage_lattice(h: GroupHom) -> IntMatrix:
    """Generators of {x in Z^src_gens : matrix*x lies in the target relations}."""
    block = h.matrix.hstack(h.target.relations)
    basis = kernel_basis(block)
    return basis.top_rows(h.source.gens)


def cokernel(h: GroupHom) -> FinAbGroup:
    """Target modulo the image, in canonical form."""
    _require_well_defined(h)
    return canonical_form(
        Presentation(h.target.gens, h.matrix.hstack(h.target.relations))
    )


def kernel(h: GroupHom) -> FinAbGroup:
    """Kernel subgroup, in canonical form."""
    _require_well_defined(h)
    k = _preimage_lattice(h)
    # Relations among the kernel generators: combinations landing in the
    # source relation lattice.
    w = kernel_basis(k.hstack(h.source.relations)).top_rows(k.cols)
    return canonical_form(Presentation(k.cols, w))


def image(h: GroupHom) -> FinAbGroup:
    """Image subgroup, in canonical form."""
    _require_well_defined(h)
    return canonical_form(Presentation(h.source.gens, _preimage_lattice(h)))


def verify_exact(segment: Iterable[GroupHom]) -> bool:
    """Whether image equals kernel at every interior node of the segment."""
    homs = list(segment)
    if len(homs) < 2:
        raise ValueError("exactness needs at least two consecutive homomorphisms")
    for f, g in itertools.pairwise(homs):
        if f.target != g.source:
            raise ValueError("mismatched composition shapes")
    for h in homs:
        _require_well_defined(h)
    for f, g in itertools.pairwise(homs):
        image_lattice = f.matrix.hstack(f.target.relations)
        kernel_lattice = _preimage_lattice(g)
        if not ColumnLattice(kernel_lattice).contains_all(image_lattice):
            return False
        if not ColumnLattice(image_lattice).contains_all(kernel_lattice):
            return False
    return True


def classify_cyclic_extension(sub: FinAbGroup, quot: FinAbGroup, bracket) -> FinAbGroup:
    """Middle group of a cyclic-by-cyclic extension decided by a bracket datum.

    ``bracket`` is any object with a ``contains_zero`` attribute; the
    extension splits exactly when the bracket contains zero.  A non-split
    answer is only unambiguous when both ends are Z/2 (the middle must
    then be Z/4); every other non-split request is rejected because the
    bracket alone does not pin down the extension class.
    """
    for grp, role in ((sub, "subgroup"), (quot, "quotient")):
        if grp.free_rank or len(grp.torsion) != 1:
            raise ValueError(f"{role} must be a nontrivial finite cyclic group, got {grp}")
    if bracket.contains_zero:
        return sub.direct_sum(quot)
    if sub.torsion == (2,) and quot.torsion == (2,):
        return FinAbGroup.cyclic(4)
    raise ValueError(
        "ambiguous extension: a nonzero bracket only determines the Z/2-by-Z/2 case"
    )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)

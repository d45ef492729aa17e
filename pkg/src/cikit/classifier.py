"""Diffeomorphism verdicts for pairs of complete intersections.

The decision procedure encodes the published classification results as a
small, auditable rule table.  For n >= 3 the Sullivan data is a complete
diffeomorphism invariant in the dimensions where a theorem says so
(n = 3 by Wall-Jupp, n = 4 by the dimension-4 Sullivan conjecture, any
n >= 3 under the Kreck-Traving divisibility criterion), a homeomorphism
invariant for 5 <= n <= 7 (Fang-Wang), and always a diffeomorphism
*invariant* in the converse direction.  For n = 2 only Freedman's
topological classification is available.

Every verdict carries a citation tag naming the result it relies on, and
conjectural outputs are structurally flagged, never folded into
theorem-backed statuses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .invariants import Multidegree, pontryagin_total, sullivan_data, wu_profile


class Status(str, enum.Enum):
    DIFFEOMORPHIC = "diffeomorphic"
    NOT_DIFFEOMORPHIC = "not_diffeomorphic"
    HOMEOMORPHIC_ONLY = "homeomorphic_only"
    SD_EQUAL_CONJECTURAL = "sd_equal_conjectural"
    UNSUPPORTED = "unsupported"


class Rigidity(str, enum.Enum):
    STRONGLY_THETA_FLEXIBLE = "strongly_theta_flexible"
    THETA_RIGID = "theta_rigid"
    CONJECTURED_FLEXIBLE = "conjectured_flexible"
    CONJECTURED_RIGID = "conjectured_rigid"


TAG_IDENTICAL = "identical canonical multidegrees"
TAG_DIM4 = "Sullivan conjecture in complex dimension 4 (theorem)"
TAG_WALL_JUPP = "Wall-Jupp classification in complex dimension 3"
TAG_KRECK_TRAVING = "Kreck-Traving divisibility criterion"
TAG_FANG_WANG = "Fang-Wang homeomorphism classification, complex dimensions 5 to 7"
TAG_SD_INVARIANT = "Sullivan data is a diffeomorphism invariant for n >= 3"
TAG_SD_OPEN = "Sullivan data equal; smooth classification open in this dimension"
TAG_FREEDMAN = "Freedman topological classification by p1 and Euler characteristic"
TAG_DIM2_OPEN = "no smooth classification is available in complex dimension 2"
TAG_SPIN_FLEXIBLE = "spin complete intersections are strongly Theta-flexible (theorem)"
TAG_V4_ZERO_RIGID = "non-spin with v4 = 0 is Theta-rigid (theorem)"
TAG_INERTIA_CONJECTURE = "inertia-group conjecture, decided by p1 mod 8 (conjecture)"

_RIGIDITY_TAGS = {
    Rigidity.STRONGLY_THETA_FLEXIBLE: TAG_SPIN_FLEXIBLE,
    Rigidity.THETA_RIGID: TAG_V4_ZERO_RIGID,
    Rigidity.CONJECTURED_FLEXIBLE: TAG_INERTIA_CONJECTURE,
    Rigidity.CONJECTURED_RIGID: TAG_INERTIA_CONJECTURE,
}

_DIM2_NOTE = (
    "p1 is compared as the evaluated Pontryagin number p1*d; "
    "the total degree itself is not a diffeomorphism invariant in this dimension"
)


@dataclass(frozen=True)
class CaseRow:
    """Row of the dimension-4 rigidity table for a single multidegree."""

    v2: int
    v4: int
    d_parity: int
    p1_mod8: int
    rigidity: Rigidity
    is_conjecture: bool

    @property
    def tag(self) -> str:
        return _RIGIDITY_TAGS[self.rigidity]


@dataclass(frozen=True)
class Verdict:
    status: Status
    justification: str
    sd_equal: bool
    case_row: CaseRow | None = None
    note: str | None = None

    @property
    def is_conjecture(self) -> bool:
        return self.status is Status.SD_EQUAL_CONJECTURAL


def nu_p(d: int, p: int) -> int:
    """The p-adic valuation of d: the largest e with p^e dividing d."""
    if d < 1:
        raise ValueError(f"valuation needs d >= 1, got {d}")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while d % p == 0:
        d //= p
        e += 1
    return e


def kreck_traving_applies(n: int, d: int) -> bool:
    """Whether the total degree is divisible enough for the general criterion.

    For every prime p with p*(p-1) <= n+1 the valuation nu_p(d) must reach
    ceil((2n+1) / (2(p-1))) + 1.  At n = 4 the only qualifying prime is 2
    and the condition is exactly 64 | d.
    """
    if n < 3:
        raise ValueError(f"the criterion is stated for n >= 3, got {n}")
    if d < 1:
        raise ValueError(f"total degree must be >= 1, got {d}")
    for p in _qualifying_primes(n):
        threshold = -((2 * n + 1) // -(2 * (p - 1))) + 1  # ceil + 1
        if nu_p(d, p) < threshold:
            return False
    return True


def case_row(md: Multidegree) -> CaseRow:
    """Classify a 4-dimensional multidegree into the rigidity table.

    Spin rows are strongly Theta-flexible; non-spin rows with v4 = 0 are
    Theta-rigid (the {2,2} case included); for v2 = v4 = 1 the rigidity is
    conjectural and decided by p1 mod 8, which is always 3 mod 4 there.
    """
    w = wu_profile(md)
    p1 = pontryagin_total(4, md).coeff(2)
    m8 = p1 % 8
    parity = md.total_degree % 2
    if w.v2 == 0:
        rigidity, conjecture = Rigidity.STRONGLY_THETA_FLEXIBLE, False
    elif w.v4 == 0:
        rigidity, conjecture = Rigidity.THETA_RIGID, False
    elif m8 == 3:
        rigidity, conjecture = Rigidity.CONJECTURED_FLEXIBLE, True
    elif m8 == 7:
        rigidity, conjecture = Rigidity.CONJECTURED_RIGID, True
    else:
        raise ArithmeticError(
            f"p1 = {p1} with v2 = v4 = 1 contradicts p1 = 3 mod 4; multidegree {md!r}"
        )
    return CaseRow(w.v2, w.v4, parity, m8, rigidity, conjecture)


def classify(n: int, a: Multidegree, b: Multidegree) -> Verdict:
    """Decide the diffeomorphism status of two complete intersections.

    Symmetric in a and b.  Equal canonical multidegrees are diffeomorphic
    outright, which also settles the three exceptional multidegrees {1},
    {2} and {2,2}: their Sullivan data pins down the multidegree, so no
    other multidegree ever reaches the surgery-backed branches against
    them.
    """
    if n < 2:
        raise ValueError(f"verdicts are defined for n >= 2, got {n}")
    sd_a = sullivan_data(n, a)
    sd_b = sullivan_data(n, b)
    sd_equal = sd_a == sd_b

    row = None
    if n == 4:
        row_a, row_b = case_row(a), case_row(b)
        if row_a == row_b:
            row = row_a

    if a == b:
        return Verdict(Status.DIFFEOMORPHIC, TAG_IDENTICAL, sd_equal=True, case_row=row)

    if n == 2:
        key_a = (sd_a.pontryagin[0] * a.total_degree, sd_a.euler)
        key_b = (sd_b.pontryagin[0] * b.total_degree, sd_b.euler)
        if key_a == key_b:
            return Verdict(
                Status.HOMEOMORPHIC_ONLY, TAG_FREEDMAN, sd_equal, note=_DIM2_NOTE
            )
        return Verdict(Status.UNSUPPORTED, TAG_DIM2_OPEN, sd_equal, note=_DIM2_NOTE)

    if not sd_equal:
        return Verdict(Status.NOT_DIFFEOMORPHIC, TAG_SD_INVARIANT, False, case_row=row)

    status, tag = _sd_equal_rule(n, a.total_degree)
    return Verdict(status, tag, True, case_row=row)


def _sd_equal_rule(n: int, d: int) -> tuple[Status, str]:
    """Verdict for distinct multidegrees with equal Sullivan data, n >= 3."""
    if n == 3:
        return Status.DIFFEOMORPHIC, TAG_WALL_JUPP
    if n == 4:
        return Status.DIFFEOMORPHIC, TAG_DIM4
    if kreck_traving_applies(n, d):
        return Status.DIFFEOMORPHIC, TAG_KRECK_TRAVING
    if 5 <= n <= 7:
        return Status.HOMEOMORPHIC_ONLY, TAG_FANG_WANG
    return Status.SD_EQUAL_CONJECTURAL, TAG_SD_OPEN


def _qualifying_primes(n: int):
    p = 2
    while p * (p - 1) <= n + 1:
        if _is_prime(p):
            yield p
        p += 1


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for f in range(3, isqrt(p) + 1, 2):
        if p % f == 0:
            return False
    return True

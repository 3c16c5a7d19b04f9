"""The 3x3 matrix sequences M_J(n) and M_j(n) for any signed index.

Four independent evaluation routes are provided and are expected to agree
exactly wherever each is defined:

RECURRENCE
    ``M(n+3) = M(n+2) + M(n+1) + 2 M(n)`` from the three seed matrices,
    run backwards (halving) for negative ``n``.
EXPLICIT
    The entry pattern built from five consecutive scalar terms.
POWER
    ``M_J(n) = M_J(1)**n`` by square-and-multiply; ``M_j(n) = M_j(1) M_J(n-1)``.
BINET
    ``c1 2^n + c2 omega^n + c3 conj(omega)^n`` with coefficient matrices
    solved exactly over Q(omega) from the seeds.
"""
from __future__ import annotations

import enum
import functools
from fractions import Fraction

from .exact import (
    Cyclo,
    CycloMat3,
    Mat3,
    cyc_pow_omega,
    cyc_pow_omega_bar,
    mat_pow,
    pow2,
)
from .exceptions import BadRange, IdentityMismatch
from .scalar import SeqId, term_range


class MatFamily(enum.Enum):
    MJ = "J"
    Mj = "j"

    @classmethod
    def parse(cls, text) -> "MatFamily":
        if isinstance(text, cls):
            return text
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise ValueError(f"unknown matrix family {text!r}")

    @property
    def scalar(self) -> SeqId:
        return SeqId.J3 if self is MatFamily.MJ else SeqId.j3


class MatMethod(enum.Enum):
    RECURRENCE = "recurrence"
    EXPLICIT = "explicit"
    POWER = "power"
    BINET = "binet"

    @classmethod
    def parse(cls, text) -> "MatMethod":
        if isinstance(text, cls):
            return text
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise ValueError(f"unknown matrix method {text!r}")


class LucasVariant(enum.Enum):
    SHIFT4 = "shift4"  # M_J(n) + 4 M_J(n-1) + 4 M_J(n-2)
    SHIFT2 = "shift2"  # 2 M_J(n+1) - M_J(n) + 2 M_J(n-1)


MJ_1 = Mat3(((1, 1, 2), (1, 0, 0), (0, 1, 0)))

# M_J(2) is fixed by M_J(1)**2 = [[2,3,2],[1,1,2],[1,0,0]]; its (1,1) entry is J3(3) = 2.
SEEDS: dict[MatFamily, tuple[Mat3, Mat3, Mat3]] = {
    MatFamily.MJ: (
        Mat3.identity(),
        MJ_1,
        Mat3(((2, 3, 2), (1, 1, 2), (1, 0, 0))),
    ),
    MatFamily.Mj: (
        Mat3(((1, 4, 4), (2, -1, 2), (1, 1, -2))),
        Mat3(((5, 5, 2), (1, 4, 4), (2, -1, 2))),
        Mat3(((10, 7, 10), (5, 5, 2), (1, 4, 4))),
    ),
}

#: Beyond this |n| the default method switches from EXPLICIT to POWER.
EXPLICIT_CUTOFF = 64


class MatrixTable:
    """Growable cache of recurrence matrices for one family.

    Extends forward or backward by the recurrence as indices are
    requested, so sweeping many indices costs one linear pass overall.
    """

    def __init__(self, family):
        self.family = MatFamily.parse(family)
        m0, m1, m2 = SEEDS[self.family]
        self._fwd: list[Mat3] = [m0, m1, m2]  # indices 0, 1, 2, ...
        self._back: list[Mat3] = []           # indices -1, -2, ...

    def __getitem__(self, n: int) -> Mat3:
        if n >= 0:
            fwd = self._fwd
            while len(fwd) <= n:
                fwd.append(fwd[-1] + fwd[-2] + fwd[-3].scale(2))
            return fwd[n]
        back = self._back
        while len(back) < -n:
            k = -len(back) - 1  # index being produced
            m3, m2, m1 = self._at(k + 3), self._at(k + 2), self._at(k + 1)
            back.append((m3 - m2 - m1).scale(Fraction(1, 2)))
        return back[-n - 1]

    def _at(self, n: int) -> Mat3:
        return self._fwd[n] if n >= 0 else self._back[-n - 1]

    def range(self, lo: int, hi: int) -> list[Mat3]:
        return [self[n] for n in range(lo, hi + 1)]


def matrix_range(family, lo: int, hi: int) -> list[Mat3]:
    """Recurrence matrices for ``n = lo..hi`` in a single pass."""
    if lo > hi:
        raise BadRange(f"empty range [{lo}, {hi}]")
    return MatrixTable(family).range(lo, hi)


def recurrence_matrix(family, n: int) -> Mat3:
    """Run the matrix recurrence from the seeds to ``n`` with a 3-term window."""
    family = MatFamily.parse(family)
    a, b, c = SEEDS[family]
    if 0 <= n <= 2:
        return (a, b, c)[n]
    if n > 2:
        for _ in range(n - 2):
            a, b, c = b, c, c + b + a.scale(2)
        return c
    half = Fraction(1, 2)
    for _ in range(-n):
        a, b, c = (c - b - a).scale(half), a, b
    return a


def explicit_matrix(family, n: int) -> Mat3:
    """Assemble the matrix from scalar terms n-3 .. n+1."""
    family = MatFamily.parse(family)
    s3, s2, s1, s0, sp = term_range(family.scalar, n - 3, n + 1)
    return Mat3((
        (sp, s0 + 2 * s1, 2 * s0),
        (s0, s1 + 2 * s2, 2 * s1),
        (s1, s2 + 2 * s3, 2 * s2),
    ))


def power_matrix(family, n: int, stats: dict | None = None) -> Mat3:
    family = MatFamily.parse(family)
    if family is MatFamily.MJ:
        return mat_pow(MJ_1, n, stats)
    return SEEDS[MatFamily.Mj][1] @ mat_pow(MJ_1, n - 1, stats)


def _solve_cyclo(a: list[list[Cyclo]], rhs: list[CycloMat3]) -> list[CycloMat3]:
    """Gauss-Jordan over Q(omega) for a 3x3 scalar system with matrix-valued unknowns."""
    n = len(a)
    a = [list(map(Cyclo.coerce, row)) for row in a]
    rhs = list(rhs)
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != Cyclo(0))
        a[col], a[pivot] = a[pivot], a[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        rhs[col] = rhs[col].scale(inv)
        for r in range(n):
            if r != col and a[r][col] != Cyclo(0):
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                rhs[r] = rhs[r] - rhs[col].scale(f)
    return rhs


@functools.lru_cache(maxsize=None)
def binet_coefficients(family) -> tuple[CycloMat3, CycloMat3, CycloMat3]:
    """(c1, c2, c3) with M(n) = c1 2^n + c2 omega^n + c3 conj(omega)^n."""
    family = MatFamily.parse(family)
    w, wb = cyc_pow_omega(1), cyc_pow_omega_bar(1)
    vandermonde = [
        [Cyclo(1), Cyclo(1), Cyclo(1)],
        [Cyclo(2), w, wb],
        [Cyclo(4), w * w, wb * wb],
    ]
    seeds = [CycloMat3.from_mat3(m) for m in SEEDS[family]]
    c1, c2, c3 = _solve_cyclo(vandermonde, seeds)
    return c1, c2, c3


def binet_matrix(family, n: int) -> Mat3:
    c1, c2, c3 = binet_coefficients(MatFamily.parse(family))
    total = c1.scale(pow2(n)) + c2.scale(cyc_pow_omega(n)) + c3.scale(cyc_pow_omega_bar(n))
    return total.to_mat3()


def matrix_term(family, n: int, method=None) -> Mat3:
    """M_J(n) or M_j(n) by the requested method.

    With ``method=None`` EXPLICIT is used for ``|n| <= 64`` and POWER above.
    """
    family = MatFamily.parse(family)
    if method is None:
        method = MatMethod.POWER if abs(n) > EXPLICIT_CUTOFF else MatMethod.EXPLICIT
    method = MatMethod.parse(method)
    if method is MatMethod.RECURRENCE:
        return recurrence_matrix(family, n)
    if method is MatMethod.EXPLICIT:
        return explicit_matrix(family, n)
    if method is MatMethod.POWER:
        return power_matrix(family, n)
    return binet_matrix(family, n)


def _require(label: str, got: Mat3, want: Mat3) -> None:
    if got != want:
        raise IdentityMismatch(f"{label}: {got!r} != {want!r}")


def semigroup_product(n: int, m: int) -> Mat3:
    """M_J(n) M_J(m), checked against M_J(m) M_J(n) and M_J(n+m)."""
    a, b = matrix_term(MatFamily.MJ, n), matrix_term(MatFamily.MJ, m)
    prod = a @ b
    _require("M_J(n)M_J(m) = M_J(m)M_J(n)", prod, b @ a)
    _require("M_J(n)M_J(m) = M_J(n+m)", prod, matrix_term(MatFamily.MJ, n + m))
    return prod


def mixed_product(n: int) -> Mat3:
    """M_j(n+1), computed as M_j(1) M_J(n) and checked against the related products."""
    mj1 = SEEDS[MatFamily.Mj][1]
    mjn = matrix_term(MatFamily.MJ, n)
    target = matrix_term(MatFamily.Mj, n + 1)
    left = mj1 @ mjn
    _require("M_j(1)M_J(n) = M_j(n+1)", left, target)
    _require("M_J(n)M_j(1) = M_j(n+1)", mjn @ mj1, target)
    ljn = matrix_term(MatFamily.Mj, n)
    _require("M_j(n)M_J(1) = M_j(n+1)", ljn @ MJ_1, target)
    _require("M_J(1)M_j(n) = M_j(n+1)", MJ_1 @ ljn, target)
    _require("M_J(n)M_j(n+1) = M_j(2n+1)", mjn @ target, matrix_term(MatFamily.Mj, 2 * n + 1))
    return left


def lucas_from_jacobsthal(n: int, variant=LucasVariant.SHIFT4) -> Mat3:
    """M_j(n) as a linear combination of M_J terms."""
    variant = variant if isinstance(variant, LucasVariant) else LucasVariant(str(variant).lower())
    mj = functools.partial(matrix_term, MatFamily.MJ)
    if variant is LucasVariant.SHIFT4:
        return mj(n) + mj(n - 1).scale(4) + mj(n - 2).scale(4)
    return mj(n + 1).scale(2) - mj(n) + mj(n - 1).scale(2)


def lucas_power(n: int, m: int) -> Mat3:
    """(M_j(n+1))**m, checked against M_j(1)**m M_J(mn)."""
    if m < 0:
        raise ValueError(f"exponent must be >= 0, got {m}")
    direct = mat_pow(matrix_term(MatFamily.Mj, n + 1), m)
    via_jacobsthal = mat_pow(SEEDS[MatFamily.Mj][1], m) @ matrix_term(MatFamily.MJ, m * n)
    _require("(M_j(n+1))^m = M_j(1)^m M_J(mn)", direct, via_jacobsthal)
    return direct

"""Exact numeric foundations: rationals, the field Q(omega), and 3x3 matrices.

Rationals are plain Python ``int`` / :class:`fractions.Fraction` values.
Whenever a value is produced here it is normalised so that an integral
rational comes back as ``int``; this keeps the big-integer hot paths
(matrix powers with 10^5-bit entries) out of ``Fraction`` overhead while
preserving exact equality and hashing across both types.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .exceptions import DivisionByZero, NonRationalResult, SingularMatrix

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def as_rational(x) -> Rational:
    """Coerce ``x`` to canonical form (``int`` when integral, else ``Fraction``)."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, _RationalABC):
        return as_rational(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x: Rational) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse ``"p"``, ``"p/q"``, ``"-p/q"``; no embedded whitespace allowed."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num, den = m.groups()
    if den is None:
        return int(num)
    if int(den) == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return as_rational(Fraction(int(num), int(den)))


def rat_add(x: Rational, y: Rational) -> Rational:
    return as_rational(x + y)


def rat_mul(x: Rational, y: Rational) -> Rational:
    return as_rational(x * y)


def rat_neg(x: Rational) -> Rational:
    return as_rational(-x)


def rat_inv(x: Rational) -> Rational:
    if x == 0:
        raise DivisionByZero("inverse of zero")
    return as_rational(Fraction(1) / x)


def pow2(n: int) -> Rational:
    """2**n as an exact (dyadic for n < 0) rational."""
    return 1 << n if n >= 0 else Fraction(1, 1 << -n)


# --------------------------------------------------------------------------
# Q(omega), omega a primitive cube root of unity: omega^2 = -1 - omega
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Cyclo:
    """The element ``a + b*omega`` of Q(omega)."""

    a: Rational = 0
    b: Rational = 0

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @classmethod
    def coerce(cls, x) -> "Cyclo":
        return x if isinstance(x, Cyclo) else cls(x, 0)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        other = Cyclo.coerce(other)
        return Cyclo(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = Cyclo.coerce(other)
        return Cyclo(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return Cyclo.coerce(other) - self

    def __neg__(self):
        return Cyclo(-self.a, -self.b)

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            return Cyclo(self.a * other, self.b * other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        bb = b1 * b2
        return Cyclo(a1 * a2 - bb, a1 * b2 + a2 * b1 - bb)

    __rmul__ = __mul__

    def conj(self) -> "Cyclo":
        # omega <-> omega^2 = -1 - omega
        return Cyclo(self.a - self.b, -self.b)

    def norm(self) -> Rational:
        """``x * conj(x)``, always rational: a^2 - ab + b^2."""
        return as_rational(self.a * self.a - self.a * self.b + self.b * self.b)

    def inverse(self) -> "Cyclo":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("inverse of zero in Q(omega)")
        c = self.conj()
        return Cyclo(Fraction(c.a) / n, Fraction(c.b) / n)

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            return self * other.inverse()
        return self * rat_inv(other)

    def __rtruediv__(self, other):
        return Cyclo.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Cyclo":
        base = self if n >= 0 else self.inverse()
        result = Cyclo(1)
        for bit in bin(abs(n))[2:]:
            result = result * result
            if bit == "1":
                result = result * base
        return result

    def __repr__(self):
        return f"Cyclo({format_rational(self.a)}, {format_rational(self.b)})"


OMEGA = Cyclo(0, 1)
_OMEGA_POWERS = (Cyclo(1), Cyclo(0, 1), Cyclo(-1, -1))


def cyc_add(x: Cyclo, y: Cyclo) -> Cyclo:
    return x + y


def cyc_mul(x: Cyclo, y: Cyclo) -> Cyclo:
    return x * y


def cyc_conj(x: Cyclo) -> Cyclo:
    return x.conj()


def cyc_pow_omega(n: int) -> Cyclo:
    """omega**n for any signed ``n``, by reduction mod 3."""
    return _OMEGA_POWERS[n % 3]


def cyc_pow_omega_bar(n: int) -> Cyclo:
    """conj(omega)**n, i.e. omega**(-n)."""
    return _OMEGA_POWERS[-n % 3]


# --------------------------------------------------------------------------
# 3x3 matrices over the rationals
# --------------------------------------------------------------------------

_IDX = range(3)


class Mat3:
    """Immutable 3x3 matrix of exact rationals, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_rational(v) for v in r) for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3 needs exactly 3 rows of 3 entries")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Mat3 is immutable")

    @classmethod
    def _raw(cls, rows) -> "Mat3":
        # trusted constructor: rows already canonical
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        return m

    @classmethod
    def identity(cls) -> "Mat3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def zero(cls) -> "Mat3":
        return cls(((0, 0, 0),) * 3)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[Rational]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(v) for v in r) + "]" for r in self.rows)
        return f"Mat3([{body}])"

    def __add__(self, other: "Mat3") -> "Mat3":
        if not isinstance(other, Mat3):
            return NotImplemented
        return Mat3._raw(tuple(
            tuple(as_rational(x + y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: "Mat3") -> "Mat3":
        if not isinstance(other, Mat3):
            return NotImplemented
        return Mat3._raw(tuple(
            tuple(as_rational(x - y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __neg__(self) -> "Mat3":
        return Mat3._raw(tuple(tuple(-x for x in r) for r in self.rows))

    def scale(self, c: Rational) -> "Mat3":
        return Mat3._raw(tuple(tuple(as_rational(c * x) for x in r) for r in self.rows))

    def __mul__(self, c):
        if isinstance(c, Mat3):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(rat_inv(c))

    def __matmul__(self, other: "Mat3") -> "Mat3":
        a, b = self.rows, other.rows
        return Mat3._raw(tuple(
            tuple(as_rational(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]) for j in _IDX)
            for i in _IDX
        ))

    def det(self) -> Rational:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return as_rational(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))

    def adjugate(self) -> "Mat3":
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return Mat3((
            (e * i - f * h, c * h - b * i, b * f - c * e),
            (f * g - d * i, a * i - c * g, c * d - a * f),
            (d * h - e * g, b * g - a * h, a * e - b * d),
        ))

    def inverse(self) -> "Mat3":
        d = self.det()
        if d == 0:
            raise SingularMatrix("matrix has zero determinant")
        return self.adjugate().scale(Fraction(1) / d)

    def __pow__(self, n: int) -> "Mat3":
        return mat_pow(self, n)


def mat_add(a: Mat3, b: Mat3) -> Mat3:
    return a + b


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return a @ b


def mat_scale(c: Rational, a: Mat3) -> Mat3:
    return a.scale(c)


def mat_det(a: Mat3) -> Rational:
    return a.det()


def mat_inv(a: Mat3) -> Mat3:
    return a.inverse()


def mat_pow(a: Mat3, n: int, stats: dict | None = None) -> Mat3:
    """``a**n`` by left-to-right square-and-multiply.

    Negative exponents go through the exact inverse. When ``stats`` is
    given, ``stats["multiplications"]`` is incremented once per 3x3 product,
    which is at most ``2 * (n.bit_length() - 1)``.
    """
    if n == 0:
        return Mat3.identity()
    base = a if n > 0 else a.inverse()
    k = abs(n)
    result = base
    count = 0
    for bit in bin(k)[3:]:
        result = result @ result
        count += 1
        if bit == "1":
            result = result @ base
            count += 1
    if stats is not None:
        stats["multiplications"] = stats.get("multiplications", 0) + count
    return result


class CycloMat3:
    """3x3 matrix over Q(omega); used for Binet coefficient matrices."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(Cyclo.coerce(v) for v in r) for r in rows)

    @classmethod
    def from_mat3(cls, m: Mat3) -> "CycloMat3":
        return cls(m.rows)

    def __eq__(self, other):
        if not isinstance(other, CycloMat3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CycloMat3({self.rows!r})"

    def __add__(self, other: "CycloMat3") -> "CycloMat3":
        return CycloMat3(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))

    def __sub__(self, other: "CycloMat3") -> "CycloMat3":
        return CycloMat3(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))

    def scale(self, c) -> "CycloMat3":
        return CycloMat3(tuple(x * c for x in r) for r in self.rows)

    def conj(self) -> "CycloMat3":
        return CycloMat3(tuple(x.conj() for x in r) for r in self.rows)

    @property
    def is_rational(self) -> bool:
        return all(x.is_rational for r in self.rows for x in r)

    def to_mat3(self) -> Mat3:
        if not self.is_rational:
            raise NonRationalResult(f"omega-component survived: {self!r}")
        return Mat3(tuple(x.a for x in r) for r in self.rows)


def as_mat3(rows: Sequence[Sequence]) -> Mat3:
    return rows if isinstance(rows, Mat3) else Mat3(rows)

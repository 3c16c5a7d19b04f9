"""Scalar Jacobsthal-type sequences for any signed index.

Five sequences are supported:

* ``JACOBSTHAL`` (J) and ``JACOBSTHAL_LUCAS`` (j): order 2,
  ``a[n+1] = a[n] + 2 a[n-1]`` with seeds (0, 1) and (2, 1).
* ``J3`` and ``j3``: order 3, ``a[n+3] = a[n+2] + a[n+1] + 2 a[n]`` with
  seeds (0, 1, 1) and (2, 1, 5).
* ``V3``: the period-3 sequence (2, -3, 1) carrying the omega-part of the
  closed forms. It satisfies the same order-3 recurrence, so
  :func:`term_recurrence` evaluates it that way while :func:`v3` uses the
  residue rule; the two are independent routes to the same numbers.

The lowest coefficient of every recurrence is 2, so walking backwards
divides by 2 and negative-index terms are dyadic rationals.
"""
from __future__ import annotations

import enum
from fractions import Fraction

from .exact import Cyclo, Rational, as_rational, cyc_pow_omega, cyc_pow_omega_bar, pow2
from .exceptions import BadRange, NonRationalResult, UnsupportedSequence


class SeqId(enum.Enum):
    JACOBSTHAL = "J"
    JACOBSTHAL_LUCAS = "j"
    J3 = "J3"
    j3 = "j3"
    V3 = "V3"

    @classmethod
    def parse(cls, text) -> "SeqId":
        if isinstance(text, cls):
            return text
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise UnsupportedSequence(f"unknown sequence {text!r}")


# (seeds, recurrence coefficients for a[n+k] in terms of a[n+k-1], ..., a[n])
_DEFS: dict[SeqId, tuple[tuple[int, ...], tuple[int, ...]]] = {
    SeqId.JACOBSTHAL: ((0, 1), (1, 2)),
    SeqId.JACOBSTHAL_LUCAS: ((2, 1), (1, 2)),
    SeqId.J3: ((0, 1, 1), (1, 1, 2)),
    SeqId.j3: ((2, 1, 5), (1, 1, 2)),
    SeqId.V3: ((2, -3, 1), (1, 1, 2)),
}

_V_RESIDUES = (2, -3, 1)


def _coerce(seq) -> SeqId:
    return seq if isinstance(seq, SeqId) else SeqId.parse(seq)


def order(seq) -> int:
    return len(_DEFS[_coerce(seq)][0])


def _walk(seq: SeqId, lo: int, hi: int) -> list[Rational]:
    """Values for ``n = lo..hi``; only a k-term window is held while walking."""
    seeds, coeffs = _DEFS[seq]
    k = len(seeds)
    out: list[Rational] = []
    # backward from the seeds: a[m] = (a[m+k] - sum_{i<k-1} c_i a[m+k-1-i]) / 2
    if lo < 0:
        window = list(seeds)  # window[0] is the lowest index currently known
        below: list[Rational] = []
        for m in range(-1, lo - 1, -1):
            rest = sum(c * window[k - 2 - i] for i, c in enumerate(coeffs[:-1]))
            val = as_rational(Fraction(window[k - 1] - rest, coeffs[-1]))
            if m <= hi:
                below.append(val)
            window = [val] + window[:-1]
        out.extend(reversed(below))
    # forward: plain ints
    window = list(seeds)
    for m in range(max(lo, 0), min(hi, k - 1) + 1):
        out.append(seeds[m])
    for m in range(k, hi + 1):
        val = sum(c * v for c, v in zip(coeffs, reversed(window)))
        window = window[1:] + [val]
        if m >= lo:
            out.append(val)
    return out


def term_range(seq, lo: int, hi: int) -> list[Rational]:
    """Exact values for ``n = lo..hi`` inclusive."""
    if lo > hi:
        raise BadRange(f"empty range [{lo}, {hi}]")
    return _walk(_coerce(seq), lo, hi)


def term_recurrence(seq, n: int) -> Rational:
    """Iterate the defining recurrence from the seeds (backwards for ``n < 0``)."""
    return term_range(seq, n, n)[0]


def v3(n: int) -> int:
    """V3 by residue of ``n`` mod 3 (nonnegative-residue convention)."""
    return _V_RESIDUES[n % 3]


def term_binet(seq, n: int) -> Rational:
    """Closed form with the rational V-term: (2^(n+1) - V)/7 or (2^(n+3) + 3V)/7."""
    seq = _coerce(seq)
    if seq is SeqId.J3:
        return as_rational(Fraction(pow2(n + 1) - v3(n)) / 7)
    if seq is SeqId.j3:
        return as_rational(Fraction(pow2(n + 3) + 3 * v3(n)) / 7)
    raise UnsupportedSequence(f"no closed form for {seq.value}")


# i*sqrt(3) = 2*omega + 1, so 3 +- 2i*sqrt(3) = 5 + 4*omega and 1 - 4*omega.
_I_SQRT3 = Cyclo(1, 2)
_BINET_COEFFS: dict[SeqId, tuple[Rational, Cyclo, Cyclo]] = {
    SeqId.J3: (
        Fraction(2, 7),
        -(3 + 2 * _I_SQRT3) / 21,
        -(3 - 2 * _I_SQRT3) / 21,
    ),
    SeqId.j3: (
        Fraction(8, 7),
        (3 + 2 * _I_SQRT3) / 7,
        (3 - 2 * _I_SQRT3) / 7,
    ),
}


def term_binet_cyclotomic(seq, n: int) -> Rational:
    """Evaluate c1*2^n + c2*omega^n + c3*conj(omega)^n inside Q(omega)."""
    seq = _coerce(seq)
    if seq not in _BINET_COEFFS:
        raise UnsupportedSequence(f"no closed form for {seq.value}")
    c1, c2, c3 = _BINET_COEFFS[seq]
    total = c2 * cyc_pow_omega(n) + c3 * cyc_pow_omega_bar(n) + c1 * pow2(n)
    if not total.is_rational:
        raise NonRationalResult(f"{seq.value}({n}) left {total!r}")
    return total.a


def partial_sum_closed(n: int) -> Rational:
    """J3(n+1), minus 1 when n = 0 (mod 3). Valid for every signed ``n``
    under the signed-sum convention sum_{0..n} = -sum_{n+1..-1} for n < 0."""
    value = term_recurrence(SeqId.J3, n + 1)
    return value - 1 if n % 3 == 0 else value


def partial_sum_J3(n: int) -> Rational:
    """sum_{k=0..n} J3(k) by the closed form."""
    if n < 0:
        raise BadRange(f"partial sum needs n >= 0, got {n}")
    return partial_sum_closed(n)


class ScalarTable:
    """Growable cache of recurrence values for one sequence.

    Used by sweeps that touch many nearby indices; grows in either
    direction on demand.
    """

    def __init__(self, seq):
        self.seq = _coerce(seq)
        seeds, self._coeffs = _DEFS[self.seq]
        self._k = len(seeds)
        self._fwd: list[Rational] = list(seeds)
        self._back: list[Rational] = []  # indices -1, -2, ...

    def __getitem__(self, n: int) -> Rational:
        k, coeffs = self._k, self._coeffs
        if n >= 0:
            fwd = self._fwd
            while len(fwd) <= n:
                fwd.append(sum(c * v for c, v in zip(coeffs, fwd[-1:-k - 1:-1])))
            return fwd[n]
        back = self._back
        while len(back) < -n:
            m = -len(back) - 1
            rest = sum(c * self._at(m + k - 1 - i) for i, c in enumerate(coeffs[:-1]))
            back.append(as_rational(Fraction(self._at(m + k) - rest, coeffs[-1])))
        return back[-n - 1]

    def _at(self, n: int) -> Rational:
        return self._fwd[n] if n >= 0 else self._back[-n - 1]

"""Executable catalogue of the third-order Jacobsthal identities.

Each :class:`IdentitySpec` evaluates a left-hand side and one or more
right-hand forms at an index ``n`` (plus optional parameters) and the
engine compares them exactly. Left-hand sides are computed by brute force
wherever there is something to brute-force: direct summation, direct
matrix multiplication, or straight recurrence values from
:class:`~jacobsthal3.scalar.ScalarTable` / :class:`~jacobsthal3.matrix.MatrixTable`.

Two identities are known to be misprinted. They are kept verbatim with
``expected=FAILS_AS_PRINTED`` next to a ``-corrected`` sibling that is
expected to hold:

* the weighted sum of matrices over ``x**k`` has the wrong sign in its
  denominator; ``2 + x + x**2 - x**3`` is correct, ``x**3 - x**2 - x - 2``
  is printed.
* the squared Lucas-entry identity is shifted by one index.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .exact import (
    CycloMat3,
    Mat3,
    Rational,
    as_rational,
    cyc_pow_omega,
    cyc_pow_omega_bar,
    format_rational,
    parse_rational,
    pow2,
)
from .exceptions import BadParams, UnknownIdentity
from .matrix import SEEDS, MatFamily, MatrixTable, explicit_matrix
from .scalar import ScalarTable, SeqId, term_binet, term_binet_cyclotomic

MAX_COUNTEREXAMPLES = 25


class Expected(enum.Enum):
    HOLDS = "HOLDS"
    FAILS_AS_PRINTED = "FAILS_AS_PRINTED"


class Status(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"


class Degenerate(Exception):
    """Raised by an evaluator when the identity is undefined at this point."""


class Context:
    """Shared lazily-grown tables for one verification run."""

    def __init__(self):
        self._scalars = {SeqId.J3: ScalarTable(SeqId.J3), SeqId.j3: ScalarTable(SeqId.j3)}
        self._mats = {f: MatrixTable(f) for f in MatFamily}
        self._prefix: dict[tuple, list] = {}

    def J(self, n: int) -> Rational:
        return self._scalars[SeqId.J3][n]

    def j(self, n: int) -> Rational:
        return self._scalars[SeqId.j3][n]

    def M(self, family: MatFamily, n: int) -> Mat3:
        return self._mats[family][n]

    def prefix_sum(self, key: tuple, term: Callable[[int], Mat3], n: int) -> Mat3:
        """sum_{k=0..n} term(k), memoised per ``key`` and extended incrementally."""
        sums = self._prefix.setdefault(key, [])
        while len(sums) <= n:
            k = len(sums)
            t = term(k)
            sums.append(t if k == 0 else sums[-1] + t)
        return sums[n]


Evaluator = Callable[[Context, int, Mapping], "tuple[object, Sequence[object]]"]


@dataclass(frozen=True)
class ParamDomain:
    name: str
    kind: str  # "int" or "rational"
    check: Callable[[object, Mapping], str | None] = lambda v, p: None

    def coerce(self, value):
        try:
            if self.kind == "int":
                if isinstance(value, str):
                    return int(value)
                if isinstance(value, Fraction) and value.denominator != 1:
                    raise ValueError
                return int(value)
            return parse_rational(value) if isinstance(value, str) else as_rational(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise BadParams(f"parameter {self.name}={value!r} is not a valid {self.kind}") from None

    def render(self, value):
        return value if self.kind == "int" else format_rational(value)


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    description: str
    evaluate: Evaluator
    expected: Expected = Expected.HOLDS
    params: tuple[ParamDomain, ...] = ()
    sweep: Callable[[Mapping], list[dict]] = lambda fixed: [dict(fixed)]
    n_min: int | None = None

    def validate(self, assignment: Mapping) -> dict:
        known = {p.name: p for p in self.params}
        extra = set(assignment) - set(known)
        if extra:
            raise BadParams(f"{self.id} takes no parameter(s) {sorted(extra)}")
        out = {}
        for name, dom in known.items():
            if name not in assignment:
                raise BadParams(f"{self.id} needs parameter {name!r}")
            out[name] = dom.coerce(assignment[name])
        for name, dom in known.items():
            problem = dom.check(out[name], out)
            if problem:
                raise BadParams(f"{self.id}: {problem}")
        return out

    def assignments(self, fixed: Mapping | None = None) -> list[dict]:
        known = {p.name: p for p in self.params}
        fixed = dict(fixed or {})
        extra = set(fixed) - set(known)
        if extra:
            raise BadParams(f"{self.id} takes no parameter(s) {sorted(extra)}")
        fixed = {k: known[k].coerce(v) for k, v in fixed.items()}
        return [self.validate(a) for a in self.sweep(fixed)]

    def render_params(self, assignment: Mapping) -> dict:
        known = {p.name: p for p in self.params}
        return {k: known[k].render(v) for k, v in assignment.items()}


def _serialize(value):
    if isinstance(value, Mat3):
        return [[format_rational(v) for v in row] for row in value.rows]
    return format_rational(value)


@dataclass
class IdentityReport:
    id: str
    expected: Expected
    range: tuple[int, int]
    params: list[dict] = field(default_factory=list)
    checked: int = 0
    mismatches: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    degenerate: list[dict] = field(default_factory=list)

    @property
    def status(self) -> Status:
        return Status.PASS if not self.counterexamples else Status.FAIL

    @property
    def matches_expected(self) -> bool:
        if self.checked == 0:
            return True  # vacuous
        if self.expected is Expected.HOLDS:
            return self.status is Status.PASS
        return self.status is Status.FAIL

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "range": list(self.range),
            "status": self.status.value,
            "expected": self.expected.value,
            "matches_expected": self.matches_expected,
            "checked": self.checked,
            "mismatches": self.mismatches,
            "counterexamples": self.counterexamples,
            "degenerate": self.degenerate,
        }


def _counterexample(n, params, lhs, rhs, form) -> dict:
    rec = {"n": n, "params": params, "lhs": _serialize(lhs), "rhs": _serialize(rhs), "form": form}
    if isinstance(lhs, Mat3) and isinstance(rhs, Mat3):
        for i in range(3):
            for j in range(3):
                if lhs[i, j] != rhs[i, j]:
                    rec["entry"] = {
                        "row": i + 1,
                        "col": j + 1,
                        "lhs": format_rational(lhs[i, j]),
                        "rhs": format_rational(rhs[i, j]),
                    }
                    return rec
    return rec


# ---------------------------------------------------------------------------
# catalogue
# ---------------------------------------------------------------------------

_CATALOG: dict[str, IdentitySpec] = {}


def _register(spec: IdentitySpec) -> IdentitySpec:
    if spec.id in _CATALOG:
        raise ValueError(f"duplicate identity {spec.id}")
    _CATALOG[spec.id] = spec
    return spec


def _scalar(id_, description, fn, **kw):
    _register(IdentitySpec(id_, description, fn, **kw))


_scalar("eq04", "3 J(n) + j(n) = 2^(n+1)",
        lambda c, n, p: (3 * c.J(n) + c.j(n), [pow2(n + 1)]))
_scalar("eq05", "j(n) - 3 J(n) = 2 j(n-3)",
        lambda c, n, p: (c.j(n) - 3 * c.J(n), [2 * c.j(n - 3)]))
_scalar("eq06", "J(n+2) - 4 J(n) = -2 if n = 1 (mod 3) else 1",
        lambda c, n, p: (c.J(n + 2) - 4 * c.J(n), [-2 if n % 3 == 1 else 1]))
_scalar("eq07", "j(n) - 4 J(n) = 2, -3, 1 by n mod 3",
        lambda c, n, p: (c.j(n) - 4 * c.J(n), [(2, -3, 1)[n % 3]]))
_scalar("eq08", "j(n+1) + j(n) = 3 J(n+2)",
        lambda c, n, p: (c.j(n + 1) + c.j(n), [3 * c.J(n + 2)]))
_scalar("eq09", "j(n) - J(n+2) = 1, -1, 0 by n mod 3",
        lambda c, n, p: (c.j(n) - c.J(n + 2), [(1, -1, 0)[n % 3]]))
_scalar("eq10", "j(n-3)^2 + 3 J(n) j(n) = 4^n",
        lambda c, n, p: (c.j(n - 3) ** 2 + 3 * c.J(n) * c.j(n), [pow2(2 * n)]))


def _signed_partial_sum(c: Context, n: int) -> Rational:
    # sum_{k=0..n} for n >= 0, and -sum_{k=n+1..-1} otherwise (empty at n = -1)
    if n >= 0:
        return as_rational(sum(c.J(k) for k in range(n + 1)))
    return as_rational(-sum(c.J(k) for k in range(n + 1, 0)))


_scalar("eq11", "sum_{k=0..n} J(k) = J(n+1), less 1 when n = 0 (mod 3)",
        lambda c, n, p: (_signed_partial_sum(c, n), [c.J(n + 1) - (1 if n % 3 == 0 else 0)]))
_scalar("eq12", "j(n)^2 - 9 J(n)^2 = 2^(n+2) j(n-3)",
        lambda c, n, p: (c.j(n) ** 2 - 9 * c.J(n) ** 2, [pow2(n + 2) * c.j(n - 3)]))
_scalar("eq13", "J(n) by its closed forms over Q(omega) and with V(n)",
        lambda c, n, p: (c.J(n), [term_binet_cyclotomic(SeqId.J3, n), term_binet(SeqId.J3, n)]))
_scalar("eq14", "j(n) by its closed forms over Q(omega) and with V(n)",
        lambda c, n, p: (c.j(n), [term_binet_cyclotomic(SeqId.j3, n), term_binet(SeqId.j3, n)]))


# -- matrix closed forms ------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _printed_binet_coefficients(family: MatFamily) -> tuple[CycloMat3, CycloMat3, CycloMat3]:
    """(A, B, C) with M(n) = A 2^n - B w1^n + C w2^n, coefficients as written out."""
    w1, w2 = cyc_pow_omega(1), cyc_pow_omega_bar(1)
    m0, m1, m2 = (CycloMat3.from_mat3(m) for m in SEEDS[family])
    a = (m2 + m1 + m0).scale(((2 - w1) * (2 - w2)).inverse())
    b = (m2 - m1.scale(2 + w2) + m0.scale(2 * w2)).scale(((2 - w1) * (w1 - w2)).inverse())
    cc = (m2 - m1.scale(2 + w1) + m0.scale(2 * w1)).scale(((2 - w2) * (w1 - w2)).inverse())
    return a, b, cc


def printed_binet_matrix(family, n: int) -> Mat3:
    a, b, cc = _printed_binet_coefficients(MatFamily.parse(family))
    total = a.scale(pow2(n)) - b.scale(cyc_pow_omega(n)) + cc.scale(cyc_pow_omega_bar(n))
    return total.to_mat3()


for _fam, _eq in ((MatFamily.MJ, "eq17"), (MatFamily.Mj, "eq18")):
    _register(IdentitySpec(
        _eq, f"M_{_fam.value}(n) by the coefficient-matrix closed form",
        lambda c, n, p, f=_fam: (c.M(f, n), [printed_binet_matrix(f, n)]),
    ))
for _fam, _eq in ((MatFamily.MJ, "eq19"), (MatFamily.Mj, "eq20")):
    _register(IdentitySpec(
        _eq, f"M_{_fam.value}(n) entry pattern from scalar terms n-3..n+1",
        lambda c, n, p, f=_fam: (c.M(f, n), [explicit_matrix(f, n)]),
    ))


# -- weighted sums over x^k ---------------------------------------------------

WEIGHTED_SUM_XS: tuple[Rational, ...] = (1, -1, 3, Fraction(1, 2), Fraction(-5, 2), Fraction(7, 3))


def nu(x: Rational) -> Rational:
    """x^3 - x^2 - x - 2, the characteristic polynomial."""
    return as_rational(x ** 3 - x ** 2 - x - 2)


def _x_ok(x, params):
    if x == 0:
        return "x = 0 is excluded"
    if nu(x) == 0:
        return f"x = {format_rational(x)} is a root of x^3 - x^2 - x - 2"
    return None


_X = ParamDomain("x", "rational", _x_ok)


def weighted_direct_sum(c: Context, family: MatFamily, x: Rational, n: int) -> Mat3:
    """sum_{k=0..n} M(k) / x^k by plain accumulation."""
    return c.prefix_sum(("weighted", family, x), lambda k: c.M(family, k).scale(Fraction(1) / Fraction(x) ** k), n)


def weighted_closed_form(c: Context, family: MatFamily, x: Rational, n: int, denominator: Rational) -> Mat3:
    m = lambda k: c.M(family, k)
    tail = m(2) - m(1) - m(0) - (m(0) - m(1)).scale(x) + m(0).scale(x * x)
    numer = m(n).scale(2) + (m(n + 2) - m(n + 1)).scale(x) + m(n + 1).scale(x * x) - tail.scale(x ** (n + 1))
    return numer.scale(Fraction(1) / (Fraction(x) ** n * denominator))


def _weighted_sweep(fixed):
    return [dict(fixed)] if "x" in fixed else [{"x": x} for x in WEIGHTED_SUM_XS]


for _fam in MatFamily:
    _register(IdentitySpec(
        f"thm2.4-{_fam.value}",
        f"sum M_{_fam.value}(k)/x^k, closed form over x^n (x^3 - x^2 - x - 2) as printed",
        lambda c, n, p, f=_fam: (weighted_direct_sum(c, f, p["x"], n),
                                 [weighted_closed_form(c, f, p["x"], n, nu(p["x"]))]),
        expected=Expected.FAILS_AS_PRINTED, params=(_X,), sweep=_weighted_sweep, n_min=0,
    ))
    _register(IdentitySpec(
        f"thm2.4-{_fam.value}-corrected",
        f"sum M_{_fam.value}(k)/x^k, closed form over x^n (2 + x + x^2 - x^3)",
        lambda c, n, p, f=_fam: (weighted_direct_sum(c, f, p["x"], n),
                                 [weighted_closed_form(c, f, p["x"], n, -nu(p["x"]))]),
        params=(_X,), sweep=_weighted_sweep, n_min=0,
    ))


# -- strided sums -------------------------------------------------------------

def omega_power_sum(m: int) -> int:
    """w1^m + w2^m: 2 when 3 | m, else -1."""
    s = cyc_pow_omega(m) + cyc_pow_omega_bar(m)
    assert s.is_rational
    return s.a


def strided_sigma(m: int) -> Rational:
    return as_rational(pow2(m + 1) + (1 - pow2(m)) * omega_power_sum(m) - 2)


def strided_mu(m: int) -> Rational:
    return as_rational(pow2(m) + omega_power_sum(m))


def strided_direct_sum(c: Context, family: MatFamily, m: int, r: int, n: int) -> Mat3:
    return c.prefix_sum(("strided", family, m, r), lambda k: c.M(family, m * k + r), n)


def strided_closed_form(c: Context, family: MatFamily, m: int, r: int, n: int) -> Mat3:
    sigma = strided_sigma(m)
    if sigma == 0:
        raise Degenerate("sigma(m)=0")
    mu, p2 = strided_mu(m), pow2(m)
    M = lambda k: c.M(family, k)
    top = M(m * (n + 1) + r)
    numer = (top - M(r) + M(m * n + r).scale(p2) - M(r - m).scale(p2)
             - top.scale(mu) + M(r).scale(mu) + M(m * (n + 2) + r) - M(r + m))
    return numer.scale(Fraction(1, 1) / sigma)


def _m_ok(m, params):
    return None if m >= 1 else f"m must be >= 1, got {m}"


def _r_ok(r, params):
    m = params.get("m")
    return None if m is None or r >= m else f"r must be >= m, got r={r}, m={m}"


def _strided_sweep(fixed):
    ms = [fixed["m"]] if "m" in fixed else range(1, 7)
    out = []
    for m in ms:
        rs = [fixed["r"]] if "r" in fixed else range(m, m + 6)
        out.extend({"m": m, "r": r} for r in rs)
    return out


def _strided(c, n, p, family):
    closed = strided_closed_form(c, family, p["m"], p["r"], n)
    return strided_direct_sum(c, family, p["m"], p["r"], n), [closed]


for _fam in MatFamily:
    _register(IdentitySpec(
        f"thm2.5-{_fam.value}",
        f"sum_{{k=0..n}} M_{_fam.value}(mk + r) in closed form (undefined when sigma(m) = 0)",
        lambda c, n, p, f=_fam: _strided(c, n, p, f),
        params=(ParamDomain("m", "int", _m_ok), ParamDomain("r", "int", _r_ok)),
        sweep=_strided_sweep, n_min=0,
    ))


# -- products -----------------------------------------------------------------

def _int_sweep(name, values):
    return lambda fixed: [dict(fixed)] if name in fixed else [{name: v} for v in values]


def _nonneg(m, params):
    return None if m >= 0 else f"exponent m must be >= 0, got {m}"


_M_ANY = ParamDomain("m", "int")
_M_EXP = ParamDomain("m", "int", _nonneg)
_M_SAMPLES = range(-8, 33)
_EXP_SAMPLES = range(0, 9)

_MJ, _Mj = MatFamily.MJ, MatFamily.Mj
_LJ1 = SEEDS[_Mj][1]


def _times(a: Mat3, m: int) -> Mat3:
    """a multiplied by itself m times, one product at a time."""
    out = Mat3.identity()
    for _ in range(m):
        out = out @ a
    return out


_register(IdentitySpec(
    "eq26", "M_J(n) M_J(m) = M_J(m) M_J(n) = M_J(n+m)",
    lambda c, n, p: (c.M(_MJ, n) @ c.M(_MJ, p["m"]),
                     [c.M(_MJ, p["m"]) @ c.M(_MJ, n), c.M(_MJ, n + p["m"])]),
    params=(_M_ANY,), sweep=_int_sweep("m", _M_SAMPLES),
))
_register(IdentitySpec(
    "eq27", "M_j(n) M_j(m) = M_j(m) M_j(n)",
    lambda c, n, p: (c.M(_Mj, n) @ c.M(_Mj, p["m"]), [c.M(_Mj, p["m"]) @ c.M(_Mj, n)]),
    params=(_M_ANY,), sweep=_int_sweep("m", _M_SAMPLES),
))
_register(IdentitySpec(
    "eq28", "M_j(1) M_J(n) = M_J(n) M_j(1) = M_j(n+1)",
    lambda c, n, p: (_LJ1 @ c.M(_MJ, n), [c.M(_MJ, n) @ _LJ1, c.M(_Mj, n + 1)]),
))
_register(IdentitySpec(
    "eq29", "M_j(n) M_J(1) = M_J(1) M_j(n) = M_j(n+1)",
    lambda c, n, p: (c.M(_Mj, n) @ c.M(_MJ, 1), [c.M(_MJ, 1) @ c.M(_Mj, n), c.M(_Mj, n + 1)]),
))
_register(IdentitySpec(
    "eq30", "M_J(n) M_j(n+1) = M_j(2n+1)",
    lambda c, n, p: (c.M(_MJ, n) @ c.M(_Mj, n + 1), [c.M(_Mj, 2 * n + 1)]),
))
_register(IdentitySpec(
    "eq31", "M_j(n) = M_J(n) + 4 M_J(n-1) + 4 M_J(n-2)",
    lambda c, n, p: (c.M(_Mj, n), [c.M(_MJ, n) + c.M(_MJ, n - 1).scale(4) + c.M(_MJ, n - 2).scale(4)]),
))
_register(IdentitySpec(
    "eq32", "M_j(n) = 2 M_J(n+1) - M_J(n) + 2 M_J(n-1)",
    lambda c, n, p: (c.M(_Mj, n), [c.M(_MJ, n + 1).scale(2) - c.M(_MJ, n) + c.M(_MJ, n - 1).scale(2)]),
))
_register(IdentitySpec(
    "eq33", "M_j(1) M_J(n) = M_J(n+2) + 3 M_J(n) + 2 M_J(n-1)",
    lambda c, n, p: (_LJ1 @ c.M(_MJ, n),
                     [c.M(_MJ, n + 2) + c.M(_MJ, n).scale(3) + c.M(_MJ, n - 1).scale(2)]),
))
_register(IdentitySpec(
    "eq36", "M_J(m) M_j(n+1) = M_j(n+1) M_J(m) = M_j(m+n+1)",
    lambda c, n, p: (c.M(_MJ, p["m"]) @ c.M(_Mj, n + 1),
                     [c.M(_Mj, n + 1) @ c.M(_MJ, p["m"]), c.M(_Mj, p["m"] + n + 1)]),
    params=(_M_ANY,), sweep=_int_sweep("m", _M_SAMPLES),
))
_register(IdentitySpec(
    "eq37", "(M_j(n+1))^m = (M_j(1))^m M_J(mn)",
    lambda c, n, p: (_times(c.M(_Mj, n + 1), p["m"]), [_times(_LJ1, p["m"]) @ c.M(_MJ, p["m"] * n)]),
    params=(_M_EXP,), sweep=_int_sweep("m", _EXP_SAMPLES),
))
_register(IdentitySpec(
    "eq38", "(M_j(n+1))^2 = (M_j(1))^2 M_J(2n) = M_j(1) M_j(2n+1)",
    lambda c, n, p: (_times(c.M(_Mj, n + 1), 2),
                     [_times(_LJ1, 2) @ c.M(_MJ, 2 * n), _LJ1 @ c.M(_Mj, 2 * n + 1)]),
))
_register(IdentitySpec(
    "eq39", "(M_j(n+1))^3 = (M_j(1))^3 M_J(3n) = (M_j(1))^2 M_j(3n+1)",
    lambda c, n, p: (_times(c.M(_Mj, n + 1), 3),
                     [_times(_LJ1, 3) @ c.M(_MJ, 3 * n), _times(_LJ1, 2) @ c.M(_Mj, 3 * n + 1)]),
))


# -- squared Lucas entries ------------------------------------------------------

def _lucas_square_lhs(c: Context, n: int) -> Rational:
    return c.j(n + 1) ** 2 + c.j(n) ** 2 + 4 * c.j(n) * c.j(n - 1)


_register(IdentitySpec(
    "cor3.5",
    "j(n+1)^2 + j(n)^2 + 4 j(n) j(n-1) = 34 J(2n+1) + 43 J(2n) + 34 J(2n-1) "
    "= 5 j(2n+2) + 5 j(2n+1) + 2 j(2n), as printed",
    lambda c, n, p: (_lucas_square_lhs(c, n), [
        34 * c.J(2 * n + 1) + 43 * c.J(2 * n) + 34 * c.J(2 * n - 1),
        5 * c.j(2 * n + 2) + 5 * c.j(2 * n + 1) + 2 * c.j(2 * n),
    ]),
    expected=Expected.FAILS_AS_PRINTED,
))
_register(IdentitySpec(
    "cor3.5-corrected",
    "j(n+1)^2 + j(n)^2 + 4 j(n) j(n-1) = 34 J(2n-1) + 43 J(2n-2) + 34 J(2n-3) "
    "= 5 j(2n) + 5 j(2n-1) + 2 j(2n-2) = (1,1) entry of M_j(n)^2",
    lambda c, n, p: (_lucas_square_lhs(c, n), [
        34 * c.J(2 * n - 1) + 43 * c.J(2 * n - 2) + 34 * c.J(2 * n - 3),
        5 * c.j(2 * n) + 5 * c.j(2 * n - 1) + 2 * c.j(2 * n - 2),
        _times(c.M(_Mj, n), 2)[0, 0],
    ]),
))


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------

def catalog() -> dict[str, IdentitySpec]:
    return dict(_CATALOG)


def get_spec(identity_id: str) -> IdentitySpec:
    try:
        return _CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def verify(identity_id: str, lo: int, hi: int, params: Mapping | None = None,
           context: Context | None = None) -> IdentityReport:
    """Check one identity for every ``n`` in ``[lo, hi]`` (empty when lo > hi).

    ``params`` pins some or all parameters; the rest follow the identity's
    default sweep. Indices below the identity's domain are skipped.
    """
    spec = get_spec(identity_id)
    assignments = spec.assignments(params)
    ctx = context or Context()
    report = IdentityReport(spec.id, spec.expected, (lo, hi),
                            params=[spec.render_params(a) for a in assignments])
    start = lo if spec.n_min is None else max(lo, spec.n_min)
    for a in assignments:
        shown = spec.render_params(a)
        for n in range(start, hi + 1):
            try:
                lhs, forms = spec.evaluate(ctx, n, a)
            except Degenerate as exc:
                report.degenerate.append({"params": shown, "reason": str(exc)})
                break
            report.checked += 1
            for k, rhs in enumerate(forms):
                if lhs != rhs:
                    report.mismatches += 1
                    if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
                        report.counterexamples.append(_counterexample(n, shown, lhs, rhs, k))
                    break
    return report


def verify_all(lo: int, hi: int, ids: Iterable[str] | None = None) -> list[IdentityReport]:
    """Run every catalogued identity (default sweeps), ordered by id."""
    ctx = Context()
    chosen = sorted(_CATALOG) if ids is None else list(ids)
    return [verify(i, lo, hi, context=ctx) for i in chosen]


def all_match_expected(reports: Iterable[IdentityReport]) -> bool:
    return all(r.matches_expected for r in reports)


def verify_weighted_sum(family, x, n: int) -> tuple[IdentityReport, IdentityReport]:
    """(as-printed report, corrected report) for the x^k-weighted matrix sum at ``n``."""
    family = MatFamily.parse(family)
    ctx = Context()
    printed = verify(f"thm2.4-{family.value}", n, n, {"x": x}, ctx)
    corrected = verify(f"thm2.4-{family.value}-corrected", n, n, {"x": x}, ctx)
    return printed, corrected


def verify_strided_sum(family, m: int, r: int, n: int) -> IdentityReport:
    family = MatFamily.parse(family)
    return verify(f"thm2.5-{family.value}", n, n, {"m": m, "r": r})


def verify_lucas_square(n: int) -> tuple[IdentityReport, IdentityReport]:
    """(as-printed report, corrected report) for the squared Lucas-entry identity."""
    ctx = Context()
    return verify("cor3.5", n, n, context=ctx), verify("cor3.5-corrected", n, n, context=ctx)

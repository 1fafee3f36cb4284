"""Exact scalars: unit monomials, Laurent polynomials over Q and their fraction field.

Exponent vectors are stored doubled (``t^(1/2)`` is stored as ``1``) so that the
square roots needed for twisting stay inside the representation.  Trailing zero
exponents are trimmed, so scalars in different numbers of parameters combine
freely.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from itertools import zip_longest
from typing import Iterable, Mapping, Sequence

from . import config

Exps = tuple  # doubled integer exponents, trailing zeros trimmed


class NeedsFieldExtension(ArithmeticError):
    """A square root (or other root) does not exist over Q(t^(1/2))."""


def _trim(e: Sequence[int]) -> Exps:
    e = tuple(e)
    n = len(e)
    while n and e[n - 1] == 0:
        n -= 1
    return e[:n]


def _add(e: Exps, f: Exps) -> Exps:
    if not e:
        return f
    if not f:
        return e
    return _trim([a + b for a, b in zip_longest(e, f, fillvalue=0)])


def _sub(e: Exps, f: Exps) -> Exps:
    return _trim([a - b for a, b in zip_longest(e, f, fillvalue=0)])


def _scale(e: Exps, k: int) -> Exps:
    if k == 0:
        return ()
    return tuple(a * k for a in e)


def _pad(e: Exps, n: int) -> Exps:
    return e + (0,) * (n - len(e))


def _lexkey(n: int):
    return lambda e: _pad(e, n)


def _to_doubled(x) -> int:
    x = Fraction(x)
    d = 2 * x
    if d.denominator != 1:
        raise ValueError(f"exponent {x} is not a half-integer")
    return int(d)


# ---------------------------------------------------------------------------
# Monomials


class Monomial:
    """``coeff * t1^e1 * ... * tm^em`` with ``coeff`` a nonzero rational."""

    __slots__ = ("coeff", "exps2")

    def __init__(self, coeff=1, exponents: Iterable = ()):
        coeff = Fraction(coeff)
        if coeff == 0:
            raise ValueError("monomial coefficient must be nonzero")
        self.coeff = coeff
        self.exps2 = _trim([_to_doubled(x) for x in exponents])

    @classmethod
    def raw(cls, coeff: Fraction, exps2: Exps) -> "Monomial":
        m = object.__new__(cls)
        m.coeff = coeff
        m.exps2 = exps2
        return m

    @classmethod
    def var(cls, k: int, power=1) -> "Monomial":
        """The parameter ``t_{k+1}`` (0-based ``k``) raised to ``power``."""
        e = [0] * (k + 1)
        e[k] = _to_doubled(power)
        return cls.raw(Fraction(1), _trim(e))

    @property
    def exponents(self) -> tuple:
        return tuple(Fraction(a, 2) if a % 2 else a // 2 for a in self.exps2)

    @property
    def nvars(self) -> int:
        return len(self.exps2)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Monomial.raw(self.coeff * other.coeff, _add(self.exps2, other.exps2))
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly.zero()
            return Monomial.raw(self.coeff * other, self.exps2)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Monomial":
        return Monomial.raw(1 / self.coeff, tuple(-a for a in self.exps2))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Monomial(other)
        if isinstance(other, Monomial):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n):
        n = Fraction(n)
        if n.denominator == 1:
            n = int(n)
            if n >= 0:
                return Monomial.raw(self.coeff ** n, _scale(self.exps2, n))
            return Monomial.raw(self.coeff ** n, _scale(self.exps2, n))
        if n.denominator == 2:
            return self.sqrt() ** (2 * n)
        raise NeedsFieldExtension(f"power {n} of {self}")

    def sqrt(self) -> "Monomial":
        """Square root with positive coefficient; needs a rational root and even exponents."""
        if self.coeff < 0:
            raise NeedsFieldExtension(f"square root of negative coefficient in {self}")
        num, den = self.coeff.numerator, self.coeff.denominator
        rn, rd = _isqrt_exact(num), _isqrt_exact(den)
        if rn is None or rd is None:
            raise NeedsFieldExtension(f"coefficient {self.coeff} has no rational square root")
        if any(a % 2 for a in self.exps2):
            raise NeedsFieldExtension(f"exponents of {self} are not all integers")
        return Monomial.raw(Fraction(rn, rd), tuple(a // 2 for a in self.exps2))

    def __neg__(self):
        return Monomial.raw(-self.coeff, self.exps2)

    def __eq__(self, other):
        if isinstance(other, Monomial):
            return self.coeff == other.coeff and self.exps2 == other.exps2
        if isinstance(other, (int, Fraction)):
            return not self.exps2 and self.coeff == other
        if isinstance(other, (LaurentPoly, ScalarFraction)):
            return other == self
        return NotImplemented

    def __hash__(self):
        if not self.exps2:
            return hash(self.coeff)
        return hash((self.coeff, self.exps2))

    def is_one(self) -> bool:
        return not self.exps2 and self.coeff == 1

    def is_root_of_unity(self) -> bool:
        # over Q the only roots of unity are +-1; a formal parameter has infinite order
        return not self.exps2 and self.coeff in (1, -1)

    def is_positive(self) -> bool:
        return self.coeff > 0

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r})"

    def __str__(self):
        return format_monomial(self)


def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = int(n ** 0.5)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == n:
            return c
    import math

    c = math.isqrt(n)
    return c if c * c == n else None


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def is_root_of_unity(a: Monomial) -> bool:
    return a.is_root_of_unity()


def is_positive(a: Monomial) -> bool:
    return a.is_positive()


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Finite sum of monomials with rational coefficients; immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Fraction] | None = None, *, _clean=False):
        if terms is None:
            terms = {}
        elif not _clean:
            clean = {}
            for e, c in terms.items():
                if c:
                    k = _trim(e)
                    clean[k] = clean.get(k, 0) + Fraction(c)
            terms = {k: v for k, v in clean.items() if v}
        self.terms = terms
        self._hash = None
        if len(terms) > config.term_limit():
            raise config.ResourceLimitError(
                f"polynomial with {len(terms)} terms exceeds term limit {config.term_limit()}"
            )

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = Fraction(c)
        return cls({(): c}, _clean=True) if c else _ZERO

    @classmethod
    def from_monomial(cls, m: Monomial) -> "LaurentPoly":
        return cls({m.exps2: m.coeff}, _clean=True)

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, Monomial):
            return cls.from_monomial(x)
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(()) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def monomial(self) -> Monomial | None:
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        return Monomial.raw(c, e)

    def __len__(self):
        return len(self.terms)

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def variables(self) -> set:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def leading(self) -> tuple:
        n = self.nvars
        e = max(self.terms, key=_lexkey(n))
        return e, self.terms[e]

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def at_one(self) -> Fraction:
        """Specialize every parameter to 1."""
        return sum(self.terms.values(), Fraction(0))

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        """Value with ``t_k^(1/2)`` set to ``point[k]`` (rational, nonzero)."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for k, a in enumerate(e):
                if a:
                    v *= point[k] ** a
            total += v
        return total

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _maybe_poly(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v += c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return LaurentPoly(t, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = _maybe_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _maybe_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return self.mul_monomial(other)
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return LaurentPoly({e: c * other for e, c in self.terms.items()}, _clean=True)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self.terms) < len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        if len(b.terms) == 1:
            (e, c), = b.terms.items()
            return a.mul_monomial(Monomial.raw(c, e))
        limit = config.term_limit()
        t: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = _add(e1, e2)
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
            if len(t) > limit:
                raise config.ResourceLimitError(f"product exceeds term limit {limit}")
        return LaurentPoly({e: c for e, c in t.items() if c}, _clean=True)

    __rmul__ = __mul__

    def mul_monomial(self, m: Monomial) -> "LaurentPoly":
        if not m.exps2:
            if m.coeff == 1:
                return self
            return LaurentPoly({e: c * m.coeff for e, c in self.terms.items()}, _clean=True)
        return LaurentPoly(
            {_add(e, m.exps2): c * m.coeff for e, c in self.terms.items()}, _clean=True
        )

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            m = self.monomial()
            if m is None:
                raise ArithmeticError("negative power of a non-monomial Laurent polynomial")
            return LaurentPoly.from_monomial(m ** n)
        result, base = _ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, Monomial)):
            return self.terms == LaurentPoly.coerce(other).terms
        if isinstance(other, ScalarFraction):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            m = self.monomial()
            if m is not None:
                self._hash = hash(m)
            elif not self.terms:
                self._hash = 0
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly | None":
        """Quotient ``self / d`` when it is a Laurent polynomial, else ``None``."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return _ZERO
        m = d.monomial()
        if m is not None:
            return self.mul_monomial(m.inverse())
        n = max(self.nvars, d.nvars)
        p_lo, p_hi = _box(self, n)
        d_lo, d_hi = _box(d, n)
        q_lo = [a - b for a, b in zip(p_lo, d_lo)]
        q_hi = [a - b for a, b in zip(p_hi, d_hi)]
        if any(a > b for a, b in zip(q_lo, q_hi)):
            return None
        key = _lexkey(n)
        dl = max(d.terms, key=key)
        dc = d.terms[dl]
        r = dict(self.terms)
        q = {}
        limit = config.term_limit()
        while r:
            lk = max(r, key=key)
            t = _sub(lk, dl)
            tp = _pad(t, n)
            if any(x < lo or x > hi for x, lo, hi in zip(tp, q_lo, q_hi)):
                return None
            c = r[lk] / dc
            q[t] = c
            for e, v in d.terms.items():
                k = _add(e, t)
                w = r.get(k, 0) - c * v
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
            if len(q) > limit or len(r) > limit:
                raise config.ResourceLimitError("exact division exceeds term limit")
        return LaurentPoly(q, _clean=True)

    def content(self) -> Fraction:
        """Positive rational gcd of the coefficients."""
        from math import gcd

        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = reduce(gcd, nums, 0)
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens, 1)
        return Fraction(abs(g), lcm) if g else Fraction(1)

    def min_exponents(self) -> Exps:
        n = self.nvars
        lo, _ = _box(self, n)
        return _trim(lo)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _box(p: LaurentPoly, n: int):
    lo = [None] * n
    hi = [None] * n
    for e in p.terms:
        e = _pad(e, n)
        for k in range(n):
            a = e[k]
            if lo[k] is None or a < lo[k]:
                lo[k] = a
            if hi[k] is None or a > hi[k]:
                hi[k] = a
    return [x or 0 for x in lo], [x or 0 for x in hi]


def _maybe_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Monomial):
        return LaurentPoly.from_monomial(x)
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return None


_ZERO = LaurentPoly({}, _clean=True)
_ONE = LaurentPoly({(): Fraction(1)}, _clean=True)


# -- univariate gcd (only used for normalizing one-parameter fractions) -----


def _univariate(p: LaurentPoly, var: int):
    """Coefficient list (ascending) in ``s = t_var^(1/2)`` after shifting, plus the shift."""
    exps = [e[var] if len(e) > var else 0 for e in p.terms]
    lo = min(exps)
    coeffs = [Fraction(0)] * (max(exps) - lo + 1)
    for e, c in p.terms.items():
        coeffs[(e[var] if len(e) > var else 0) - lo] = c
    return coeffs, lo


def _poly_divmod(a: list, b: list):
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        c = a[-1] / lb
        q[shift] = c
        for i, v in enumerate(b):
            a[i + shift] -= c * v
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _ugcd(a: list, b: list) -> list:
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def _from_univariate(coeffs: list, shift: int, var: int) -> LaurentPoly:
    t = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * (var + 1)
            e[var] = i + shift
            t[_trim(e)] = c
    return LaurentPoly(t, _clean=True)


# ---------------------------------------------------------------------------
# Fractions


_HASH_POINT = tuple(Fraction(p, p + 1) + 1 for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37))


class ScalarFraction:
    """Element ``num/den`` of the fraction field; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, *, _norm=True):
        num = LaurentPoly.coerce(num) if not isinstance(num, LaurentPoly) else num
        if den is None:
            den = _ONE
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        if _norm and not den.is_one():
            self._normalize()

    @classmethod
    def coerce(cls, x) -> "ScalarFraction":
        if isinstance(x, ScalarFraction):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x, _ONE, _norm=False)
        if isinstance(x, Monomial):
            return cls(LaurentPoly.from_monomial(x), _ONE, _norm=False)
        if isinstance(x, (int, Fraction)):
            return cls(LaurentPoly.const(x), _ONE, _norm=False)
        raise TypeError(f"cannot coerce {type(x).__name__} to a scalar")

    def _normalize(self):
        num, den = self.num, self.den
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
            return
        m = den.monomial()
        if m is not None:
            self.num, self.den = num.mul_monomial(m.inverse()), _ONE
            return
        q = num.exact_div(den)
        if q is not None:
            self.num, self.den = q, _ONE
            return
        vs = num.variables() | den.variables()
        if len(vs) == 1:
            (v,) = vs
            a, sa = _univariate(num, v)
            b, sb = _univariate(den, v)
            g = _ugcd(b, a) if len(b) >= len(a) else _ugcd(a, b)
            if len(g) > 1:
                a, _ = _poly_divmod(a, g)
                b, _ = _poly_divmod(b, g)
                num = _from_univariate(a, sa, v)
                den = _from_univariate(b, sb, v)
                m = den.monomial()
                if m is not None:
                    self.num, self.den = num.mul_monomial(m.inverse()), _ONE
                    return
        # shift the denominator to have zero minimal exponents, monic leading coefficient
        lo = den.min_exponents()
        _, lc = den.leading()
        shift = Monomial.raw(1 / lc, tuple(-a for a in lo))
        self.num = num.mul_monomial(shift)
        self.den = den.mul_monomial(shift)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one() or (
            not self.den.is_one() and self.num == self.den
        )

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> LaurentPoly | None:
        if self.den.is_one():
            return self.num
        return self.num.exact_div(self.den)

    def as_monomial(self) -> Monomial | None:
        p = self.as_poly()
        return None if p is None else p.monomial()

    def nterms(self) -> int:
        return len(self.num) + (0 if self.den.is_one() else len(self.den))

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return self.num.evaluate(point) / self.den.evaluate(point)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = _maybe_frac(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den.is_one() and o.den.is_one():
            return ScalarFraction(self.num + o.num, _ONE, _norm=False)
        if self.den == o.den:
            return ScalarFraction(self.num + o.num, self.den)
        return ScalarFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarFraction(-self.num, self.den, _norm=False)

    def __sub__(self, other):
        o = _maybe_frac(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _maybe_frac(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return ScalarFraction(self.num.mul_monomial(other), self.den, _norm=False)
        o = _maybe_frac(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return ScalarFraction(self.num * o.num, _ONE, _norm=False)
        return ScalarFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarFraction":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return ScalarFraction(self.den, self.num)

    def __truediv__(self, other):
        o = _maybe_frac(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return ScalarFraction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _maybe_frac(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return ScalarFraction(self.num ** n, self.den ** n, _norm=False)

    def __eq__(self, other):
        o = _maybe_frac(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        q = self.num.exact_div(self.den)
        if q is not None:
            return hash(q)
        try:
            return hash(("frac", self.evaluate(_HASH_POINT)))
        except ZeroDivisionError:
            return 0

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"ScalarFraction({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _maybe_frac(x):
    if isinstance(x, ScalarFraction):
        return x
    try:
        return ScalarFraction.coerce(x)
    except TypeError:
        return None


Scalar = ScalarFraction
ZERO = ScalarFraction(_ZERO, _ONE, _norm=False)
ONE = ScalarFraction(_ONE, _ONE, _norm=False)


def S(x) -> ScalarFraction:
    """Coerce ints, rationals, monomials, polynomials or literal strings to a scalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    return ScalarFraction.coerce(x)


def frac_add(a, b):
    return S(a) + S(b)


def frac_sub(a, b):
    return S(a) - S(b)


def frac_mul(a, b):
    return S(a) * S(b)


def frac_div(a, b):
    return S(a) / S(b)


# ---------------------------------------------------------------------------
# q-combinatorics


def q_integer(n: int, q) -> LaurentPoly:
    """``(n)_q = 1 + q + ... + q^(n-1)``."""
    q = LaurentPoly.coerce(q)
    total, p = _ZERO, _ONE
    for _ in range(n):
        total = total + p
        p = p * q
    return total


def q_factorial(n: int, q) -> LaurentPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    result = _ONE
    for k in range(1, n + 1):
        result = result * q_integer(k, q)
    return result


def q_binomial(n: int, l: int, q) -> LaurentPoly:
    """Gaussian binomial ``binom(n, l)_q`` via ``binom(n-1, l-1) + q^l binom(n-1, l)``."""
    if n < 0 or l < 0:
        raise ValueError("q_binomial needs nonnegative arguments")
    if l > n:
        raise ValueError(f"q_binomial: l={l} exceeds n={n}")
    q = LaurentPoly.coerce(q)
    row = [_ONE]
    for m in range(1, n + 1):
        new = [_ONE] * (m + 1)
        for k in range(1, m):
            new[k] = row[k - 1] + (q ** k) * row[k]
        row = new
    return row[l]


# ---------------------------------------------------------------------------
# literal syntax


def default_names(n: int) -> list:
    return [f"t{k + 1}" for k in range(n)]


def _fmt_exp(a: int) -> str:
    if a % 2:
        return f"{a}/2"
    return str(a // 2)


def _fmt_power(name: str, a: int) -> str:
    if a == 2:
        return name
    return f"{name}^{_fmt_exp(a)}"


def _name(k: int, names) -> str:
    if names is not None and k < len(names):
        return names[k]
    return f"t{k + 1}"


def _fmt_unsigned(coeff: Fraction, exps2: Exps, names) -> str:
    factors = [_fmt_power(_name(k, names), a) for k, a in enumerate(exps2) if a]
    c = abs(coeff)
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    return "*".join([str(c)] + factors)


def format_monomial(m: Monomial, names=None) -> str:
    s = _fmt_unsigned(m.coeff, m.exps2, names)
    return "-" + s if m.coeff < 0 else s


def format_poly(p: LaurentPoly, names=None) -> str:
    if p.is_zero():
        return "0"
    n = p.nvars
    keys = sorted(p.terms, key=_lexkey(n), reverse=True)
    out = []
    for i, e in enumerate(keys):
        c = p.terms[e]
        body = _fmt_unsigned(c, e, names)
        if i == 0:
            out.append("-" + body if c < 0 else body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def format_scalar(x, names=None) -> str:
    x = S(x) if not isinstance(x, ScalarFraction) else x
    if x.den.is_one():
        return format_poly(x.num, names)
    return f"({format_poly(x.num, names)})/({format_poly(x.den, names)})"


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^()/]))"
)


def _tokens(text: str):
    pos, out = 0, []
    text = text.replace("−", "-")
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad scalar literal near {text[pos:]!r}")
        pos = m.end()
        for kind in ("num", "name", "op"):
            if m.group(kind) is not None:
                out.append((kind, m.group(kind)))
                break
    return out


def _var_index(name: str, names) -> int:
    if names is not None and name in names:
        return list(names).index(name)
    m = re.fullmatch(r"t(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return int(m.group(1)) - 1
    raise ValueError(f"unknown parameter {name!r}")


class _Parser:
    def __init__(self, text, names):
        self.toks = _tokens(text)
        self.i = 0
        self.names = names

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        k, v = self.take()
        if v != op:
            raise ValueError(f"expected {op!r}, got {v!r}")

    def parse(self):
        val = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in scalar literal: {self.toks[self.i:]}")
        return val

    def expr(self):
        sign = 1
        k, v = self.peek()
        if v in ("+", "-"):
            self.take()
            sign = -1 if v == "-" else 1
        val = self.term() * sign
        while True:
            k, v = self.peek()
            if v not in ("+", "-"):
                return val
            self.take()
            t = self.term()
            val = val + t if v == "+" else val - t

    def term(self):
        val = self.factor()
        while True:
            k, v = self.peek()
            if v == "*":
                self.take()
                val = val * self.factor()
            elif v == "/" :
                self.take()
                val = val / self.factor()
            else:
                return val

    def factor(self):
        k, v = self.take()
        if v == "-":
            return -self.factor()
        if k == "num":
            base = ScalarFraction.coerce(Fraction(v))
        elif k == "name":
            base = ScalarFraction.coerce(Monomial.var(_var_index(v, self.names)))
        elif v == "(":
            base = self.expr()
            self.expect(")")
        else:
            raise ValueError(f"unexpected token {v!r} in scalar literal")
        k, v = self.peek()
        if v == "^":
            self.take()
            e = self.exponent()
            m = base.as_monomial()
            if e.denominator != 1:
                if m is None:
                    raise ValueError("fractional power of a non-monomial")
                return ScalarFraction.coerce(m ** e)
            if m is not None:
                return ScalarFraction.coerce(m ** int(e))
            return base ** int(e)
        return base

    def exponent(self) -> Fraction:
        k, v = self.take()
        paren = v == "("
        if paren:
            k, v = self.take()
        sign = 1
        if v == "-":
            sign = -1
            k, v = self.take()
        if k != "num":
            raise ValueError(f"bad exponent {v!r}")
        e = Fraction(v) * sign
        if paren:
            self.expect(")")
        if (2 * e).denominator != 1:
            raise ValueError(f"exponent {e} is not a half-integer")
        return e


def parse_scalar(text: str, names=None) -> ScalarFraction:
    """Parse ``"3/2 * t1^2 * t2^-1"`` style literals (sums and quotients allowed)."""
    return _Parser(str(text), names).parse()


def parse_monomial(text: str, names=None) -> Monomial:
    m = parse_scalar(text, names).as_monomial()
    if m is None:
        raise ValueError(f"{text!r} is not a unit monomial")
    return m

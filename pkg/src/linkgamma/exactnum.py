"""Exact scalar arithmetic: rationals, polynomials, truncated power series,
and reduced rational functions.

Every value here is immutable and every operation is exact; there is no
floating point on any code path.  ``Rational`` is the standard library
``fractions.Fraction``, which already maintains the reduced-form invariants
(coprime numerator/denominator, positive denominator).  Coefficients are
stored as plain ``int`` whenever the value is integral, so integer-heavy
computations run at native integer speed; the two types mix freely.

``RatFn`` values are kept in a canonical form -- numerator and denominator
coprime, denominator an integer-primitive polynomial with positive leading
coefficient -- so that equality is a structural comparison.  Laurent
polynomials need no separate type: a monomial denominator ``t^m`` covers
negative exponents.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def _coeff(c):
    """Normalize an exact coefficient: integral Fractions collapse to int."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


def _div(a, b):
    """Exact scalar division (never the float ``/``)."""
    return _coeff(Fraction(a) / Fraction(b))


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the degree-k coefficient; trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple and is falsy.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({self.coeffs!r})"

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly((-other,)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree() < other.degree():
            return Poly(()), self
        rem = list(self.coeffs)
        db = other.degree()
        lead = other.coeffs[-1]
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = _div(c, lead)
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] -= q * other.coeffs[j]
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate at an exact point by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (Euclidean algorithm)."""
    while b:
        a, b = b, a % b
    if not a:
        return a
    return a * _div(1, a.coeffs[-1])


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("polynomial division left a remainder")
    return q


def _valuation(p: Poly) -> int:
    # index of the lowest nonzero coefficient; caller guarantees p != 0
    for k, c in enumerate(p.coeffs):
        if c != 0:
            return k
    raise ValueError("zero polynomial has no valuation")


def _mul_tpow(p: Poly, n: int) -> Poly:
    if not p or n == 0:
        return p
    return Poly((0,) * n + p.coeffs)


def _mag_str(c) -> str:
    s = str(c)
    return f"({s})" if "/" in s else s


def poly_str(p: Poly, var: str = "t") -> str:
    """Human-readable form with ascending powers, e.g. ``-3 + 2t``."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _mag_str(mag)
        else:
            vp = var if k == 1 else f"{var}^{k}"
            body = vp if mag == 1 else f"{_mag_str(mag)}{vp}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


class Series:
    """Truncated power series: coefficients for indices ``0..order`` are
    exact, nothing is claimed beyond the order.  Operations never silently
    extend a truncation."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(_coeff(c) for c in coeffs)
        if not cs:
            raise ValueError("a series carries at least its constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Series", self.coeffs))

    def __repr__(self):
        return f"Series({self.coeffs!r})"


class RatFn:
    """Reduced rational function ``num/den`` in the variable t.

    The constructor establishes the canonical form: the polynomial gcd is
    divided out, then both parts are scaled so the denominator has integer,
    collectively coprime coefficients and a positive leading coefficient.
    Structural equality of two RatFn values is therefore equality in Q(t).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly((1,))):
        if not isinstance(num, Poly):
            num = Poly((num,))
        if not isinstance(den, Poly):
            den = Poly((den,))
        if not den:
            raise ZeroDivisionError("division by zero polynomial")
        if not num:
            self.num = Poly(())
            self.den = Poly((1,))
            return
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num = poly_exact_div(num, g)
            den = poly_exact_div(den, g)
        fracs = [Fraction(c) for c in den.coeffs]
        mult = math.lcm(*(f.denominator for f in fracs))
        ints = [int(f * mult) for f in fracs]
        scale = Fraction(mult, math.gcd(*ints))
        if ints[-1] < 0:
            scale = -scale
        self.num = num * scale
        self.den = den * scale

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFn):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash(("RatFn", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"({poly_str(self.num)})/({poly_str(self.den)})"


def ratfn_reduce(num: Poly, den: Poly) -> RatFn:
    """Canonical reduced form of ``num/den``; scaling both arguments by a
    common nonzero polynomial does not change the result."""
    return RatFn(num, den)


def ratfn_mul_tpow(f: RatFn, n: int) -> RatFn:
    """``t**n * f`` for any integer n, renormalized."""
    if n >= 0:
        return RatFn(_mul_tpow(f.num, n), f.den)
    return RatFn(f.num, _mul_tpow(f.den, -n))


def ratfn_eval(f: RatFn, x) -> Fraction:
    """Exact value ``f(x)``; raises at a pole."""
    d = f.den(x)
    if d == 0:
        raise ZeroDivisionError("pole at evaluation point")
    return Fraction(f.num(x)) / Fraction(d)


def _taylor_shift_one(p: Poly) -> Poly:
    # coefficients of p(1 + x) in x, by Horner over the base 1 + x
    base = Poly((1, 1))
    acc = Poly(())
    for c in reversed(p.coeffs):
        acc = acc * base + c
    return acc


def _mul_trunc(a, b, order):
    out = [0] * min(len(a) + len(b) - 1, order + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > order:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def series_expand_at_one(f: RatFn, order: int) -> Series:
    """Exact Taylor coefficients of ``f`` at t = 1, indices ``0..order``.

    Substitutes t = 1 + x and multiplies the shifted numerator by the
    reciprocal power series of the shifted denominator.
    """
    if order < 0:
        raise ValueError("expansion order must be nonnegative")
    p = _taylor_shift_one(f.num)
    q = _taylor_shift_one(f.den)
    if not q.coeffs or q.coeffs[0] == 0:
        raise ZeroDivisionError("expansion center is a pole")
    q0_inv = _div(1, q.coeffs[0])
    recip = [q0_inv]
    for k in range(1, order + 1):
        acc = 0
        for j in range(1, min(k, q.degree()) + 1):
            acc += q.coeffs[j] * recip[k - j]
        recip.append(_coeff(-q0_inv * acc))
    prod = _mul_trunc(p.coeffs, recip, order)
    prod += [0] * (order + 1 - len(prod))
    return Series(prod)


def series_compose(outer: Series, inner: Series, order: int) -> Series:
    """Truncation to ``order`` of ``outer(inner(x))``.

    Both inputs must already be exact to at least ``order``, and the inner
    series must have zero constant term (otherwise the truncated
    composition is not determined by finitely many coefficients).
    """
    if order < 0:
        raise ValueError("composition order must be nonnegative")
    if outer.order < order or inner.order < order:
        raise ValueError("series order insufficient for requested truncation")
    if inner.coeffs[0] != 0:
        raise ValueError("composition requires zero constant term")
    inner_c = inner.coeffs[: order + 1]
    acc = [outer.coeffs[order]]
    for k in range(order - 1, -1, -1):
        acc = _mul_trunc(acc, inner_c, order)
        acc[0] += outer.coeffs[k]
    acc += [0] * (order + 1 - len(acc))
    return Series(acc)


def power_of_t_quotient(f: RatFn, g: RatFn):
    """The integer n with ``f == t**n * g`` exactly, or None.

    This decides equality under the relation that identifies a rational
    function with all its t-power multiples.  A zero ``f`` against a
    nonzero ``g`` yields None; a zero ``g`` is an error.
    """
    if not g:
        raise ZeroDivisionError("comparison against zero")
    if not f:
        return None
    left = f.num * g.den
    right = g.num * f.den
    vl = _valuation(left)
    vr = _valuation(right)
    if left.coeffs[vl:] != right.coeffs[vr:]:
        return None
    return vl - vr

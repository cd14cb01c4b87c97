"""Exact scalar arithmetic over Q and Q(i).

Rationals are gmpy2.mpq values (arbitrary precision, always in lowest
terms, positive denominator).  Gaussian rationals are pairs of mpq with
componentwise arithmetic; conjugation is the involution fixing Q.  Nothing
in this module (or anything built on it) ever rounds.
"""

from __future__ import annotations

from gmpy2 import mpq

Rational = mpq

RAT_ZERO = mpq(0)
RAT_ONE = mpq(1)


def rational(numerator, denominator=1) -> mpq:
    """Exact rational from integers; reduced, denominator > 0."""
    return mpq(numerator, denominator)


def rat_to_string(q) -> str:
    """Canonical "p/q" form, always including the denominator."""
    q = mpq(q)
    return f"{q.numerator}/{q.denominator}"


def rat_from_string(s: str) -> mpq:
    """Parse "p/q" (or a bare integer "p")."""
    return mpq(s.strip())


class GaussianRational:
    """An element re + im*i of Q(i), with exact mpq components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> mpq:
        """re^2 + im^2, the multiplicative norm to Q."""
        return self.re * self.re + self.im * self.im

    def is_rational(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(RAT_ZERO))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other) if isinstance(other, GaussianRational) \
            else self + GaussianRational(-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, type(RAT_ZERO))):
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            n = other.norm()
            if n == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            c = other.conjugate()
            return (self * c) / n
        return NotImplemented

    def __rtruediv__(self, other):
        return GaussianRational(other) / self

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


GAUSS_ZERO = GaussianRational(0, 0)
GAUSS_ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def gaussian(re=0, im=0) -> GaussianRational:
    return GaussianRational(re, im)


def gauss_to_record(z: GaussianRational) -> dict:
    """Serialize as {re, im} of "p/q" strings."""
    return {"re": rat_to_string(z.re), "im": rat_to_string(z.im)}


def gauss_from_record(rec: dict) -> GaussianRational:
    return GaussianRational(rat_from_string(rec["re"]), rat_from_string(rec["im"]))


class Field:
    """One of the two coefficient fields, Q or Q(i).

    Carries the coercion, conjugation and zero/one needed generically by
    the matrix layer, so matrices can stay field-agnostic.
    """

    def __init__(self, name, zero, one):
        self.name = name
        self.zero = zero
        self.one = one

    def __repr__(self):
        return f"Field({self.name})"


QQ = Field("Q", RAT_ZERO, RAT_ONE)
QI = Field("Q(i)", GAUSS_ZERO, GAUSS_ONE)


def coerce(field: Field, x):
    """Coerce x into the field; rejects genuinely complex values over Q."""
    if field is QQ:
        if isinstance(x, GaussianRational):
            if x.im != 0:
                raise ValueError("cannot coerce non-real Gaussian rational into Q")
            return x.re
        return mpq(x)
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def conj_scalar(field: Field, x):
    return x.conjugate() if field is QI else x

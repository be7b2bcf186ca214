"""Exact arithmetic in the golden field Q(sqrt(5)).

Every irrationality in the H-family diagram data is of the form
a + b*sqrt(5) with rational a, b: the golden ratio tau = (1+sqrt5)/2, its
conjugate sigma = (1-sqrt5)/2, and anything built from them by field
operations.  Keeping these values exact (arbitrary-precision rationals,
no floats) is what allows the folding code to assert that off-block
entries are *identically* zero instead of merely small.

The Coxeter-plane eigenvalue c = 2cos(pi/30) is deliberately NOT
represented here; it lives outside Q(sqrt5) and is handled in floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

_SQRT5 = math.sqrt(5.0)

#: Default absolute tolerance for floating comparisons across the package.
DEFAULT_TOL = 1e-9


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"rational part must be int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GoldenNumber:
    """Element a + b*sqrt(5) of Q(sqrt5) with exact rational a, b.

    Closed under +, -, *, and / (division by any nonzero element is exact
    because the field norm a^2 - 5 b^2 vanishes only at zero).
    """

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "GoldenNumber | None":
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenNumber(Fraction(x))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b r)(c + d r) = ac + 5bd + (ad + bc) r,  r = sqrt 5
        return GoldenNumber(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        # multiply by the conjugate: 1/(c + d r) = (c - d r)/(c^2 - 5 d^2)
        return GoldenNumber(
            (self.a * o.a - 5 * self.b * o.b) / n,
            (self.b * o.a - self.a * o.b) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GoldenNumber(Fraction(1)) / self ** (-n)
        out = GoldenNumber(Fraction(1))
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ------------------------------------------------------

    def conjugate(self) -> "GoldenNumber":
        """Galois conjugate a - b*sqrt(5); maps tau to sigma."""
        return GoldenNumber(self.a, -self.b)

    def field_norm(self) -> Fraction:
        """a^2 - 5 b^2; zero iff the element is zero."""
        return self.a * self.a - 5 * self.b * self.b

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        # Integral values must hash like plain numbers (b == 0 case).
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def _sign(self) -> int:
        """Exact sign of a + b*sqrt(5)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a^2 with 5 b^2, the larger magnitude wins
        s = 1 if a > 0 else -1  # sign of the rational part
        return s if a * a > 5 * b * b else -s

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() >= 0

    # -- conversion -----------------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * _SQRT5

    def __repr__(self):
        if self.b == 0:
            return f"GoldenNumber({self.a})"
        return f"GoldenNumber({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt5"


ZERO = GoldenNumber(Fraction(0))
ONE = GoldenNumber(Fraction(1))
SQRT5 = GoldenNumber(Fraction(0), Fraction(1))
#: golden ratio tau = (1 + sqrt5)/2, the positive root of x^2 = x + 1
TAU = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
#: conjugate root sigma = (1 - sqrt5)/2; tau*sigma = -1, tau + sigma = 1
SIGMA = GoldenNumber(Fraction(1, 2), Fraction(-1, 2))


@dataclass(frozen=True, eq=False)
class Approx:
    """A float with an absolute comparison tolerance."""

    value: float
    tol: float = DEFAULT_TOL

    def __eq__(self, other):
        if isinstance(other, Approx):
            return abs(self.value - other.value) <= max(self.tol, other.tol)
        if isinstance(other, (int, float)):
            return abs(self.value - float(other)) <= self.tol
        return NotImplemented

    def __repr__(self):
        return f"Approx({self.value!r}, tol={self.tol!r})"

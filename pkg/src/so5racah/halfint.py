"""Half-integer quantum numbers stored as doubled ints.

Angular momentum labels are integers or half-odd integers.  Keeping
2j as a plain int (the usual "jdouble" trick in shell-model codes)
makes all label arithmetic exact and hashable without dragging
Fraction objects through the hot loops.
"""

from fractions import Fraction
from functools import total_ordering


@total_ordering
class HalfInt:
    """A value j with 2j integer, stored as ``twice = 2j``."""

    __slots__ = ("twice",)

    def __init__(self, twice):
        if isinstance(twice, bool) or not isinstance(twice, int):
            raise TypeError("twice must be an int, got %r" % (twice,))
        self.twice = twice

    # -- construction helpers

    @staticmethod
    def make(x):
        """Coerce an int, Fraction, or HalfInt to a HalfInt."""
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, bool):
            raise TypeError("cannot make a HalfInt from a bool")
        if isinstance(x, int):
            return HalfInt(2 * x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return HalfInt(2 * x.numerator)
            if x.denominator == 2:
                return HalfInt(x.numerator)
            raise ValueError("%s is not a half-integer" % x)
        raise TypeError("cannot make a HalfInt from %r" % (x,))

    @staticmethod
    def parse(s):
        """Parse "2", "-1/2", "3/2"."""
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return HalfInt.make(Fraction(int(num), int(den)))
        return HalfInt.make(int(s))

    # -- arithmetic (results are HalfInt; other may be int or HalfInt)

    def _twice_of(self, other):
        if isinstance(other, HalfInt):
            return other.twice
        if isinstance(other, int) and not isinstance(other, bool):
            return 2 * other
        return None

    def __add__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return HalfInt(self.twice + t)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return HalfInt(self.twice - t)

    def __rsub__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return HalfInt(t - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __eq__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return self.twice == t

    def __lt__(self, other):
        t = self._twice_of(other)
        if t is None:
            return NotImplemented
        return self.twice < t

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def __bool__(self):
        return self.twice != 0

    # -- views

    @property
    def is_integer(self):
        return self.twice % 2 == 0

    def as_fraction(self):
        return Fraction(self.twice, 2)

    def as_int(self):
        """The value as a plain int; raises if half-odd."""
        if self.twice % 2:
            raise ValueError("%s is not an integer" % self)
        return self.twice // 2

    def __float__(self):
        return self.twice / 2.0

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return "%d/2" % self.twice

    def __repr__(self):
        return "HalfInt(%s)" % self


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


def hi(x):
    """Shorthand coercion to HalfInt."""
    return HalfInt.make(x)


def jrange(lo, hi_):
    """HalfInts from lo to hi_ inclusive in steps of 1."""
    lo = HalfInt.make(lo)
    hi_ = HalfInt.make(hi_)
    return [HalfInt(t) for t in range(lo.twice, hi_.twice + 1, 2)]


def mrange(j):
    """Weights -j, -j+1, ..., +j."""
    j = HalfInt.make(j)
    return [HalfInt(t) for t in range(-j.twice, j.twice + 1, 2)]


def triangle(j1, j2, j3):
    """Triangle condition, including the integer perimeter requirement."""
    t1, t2, t3 = HalfInt.make(j1).twice, HalfInt.make(j2).twice, HalfInt.make(j3).twice
    if (t1 + t2 + t3) % 2:
        return False
    return abs(t1 - t2) <= t3 <= t1 + t2


def trirange(j1, j2):
    """All j3 coupling with j1 and j2."""
    j1 = HalfInt.make(j1)
    j2 = HalfInt.make(j2)
    return jrange(abs(j1 - j2), j1 + j2)


def sign_pow(n):
    """(-1)**n for integer n (negative n allowed)."""
    return -1 if n % 2 else 1


def phase(*js):
    """(-1)**(j1+j2+...) where the sum must come out integer."""
    t = sum(HalfInt.make(j).twice for j in js)
    if t % 2:
        raise ValueError("phase exponent %s/2 is not an integer" % t)
    return sign_pow(t // 2)


def idim(j):
    """2j+1 as an int."""
    return HalfInt.make(j).twice + 1

"""Exact rational arithmetic helpers shared by the symbolic modules.

Every coefficient formula in this package reduces, after bookkeeping of
sqrt(pi) factors coming from half-integer gamma values, either to a plain
rational number or to a rational multiple of 1/pi.  ``SqrtPiRational``
carries that bookkeeping explicitly so each formula can assert the
expected residual power at construction time.

Conventions used throughout:

* ``1/n! == 0`` for negative integers ``n`` (``recip_factorial``), and
  ``1/Gamma(n) == 0`` for integers ``n <= 0`` (``recip_gamma``).  These
  extend finite coefficient sums past factorial poles.
* Half-integer gamma values are exact:  Gamma(n + 1/2) is a rational
  multiple of sqrt(pi) for every integer n, positive or negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def recip_factorial(n: int) -> Fraction:
    """1/n! with the convention that reciprocals of negative factorials vanish."""
    if n < 0:
        return ZERO
    return Fraction(1, math.factorial(n))


def gamma_int(n: int) -> Fraction:
    """Gamma(n) = (n-1)! for a positive integer n."""
    if n <= 0:
        raise ValueError(f"gamma_int: pole at nonpositive integer {n}")
    return Fraction(math.factorial(n - 1))


def recip_gamma_int(n: int) -> Fraction:
    """1/Gamma(n) for integer n; zero at the poles n <= 0."""
    if n <= 0:
        return ZERO
    return Fraction(1, math.factorial(n - 1))


def gamma_half_rational(n: int) -> Fraction:
    """Gamma(n + 1/2) / sqrt(pi), exact for any integer n.

    Gamma(n + 1/2) is finite and nonzero for every integer n, so this never
    hits a pole.
    """
    if n >= 0:
        return Fraction(math.factorial(2 * n), 4**n * math.factorial(n))
    m = -n
    return Fraction((-4) ** m * math.factorial(m), math.factorial(2 * m))


@dataclass(frozen=True)
class SqrtPiRational:
    """A value of the form ``ratio * sqrt(pi)**sqrt_pi_power``.

    Addition requires matching powers (zero adds to anything); asserting a
    final power of 0 or -2 is how the coefficient formulas check that their
    sqrt(pi) factors cancelled as expected.
    """

    ratio: Fraction
    sqrt_pi_power: int = 0

    def __post_init__(self) -> None:
        if self.ratio == 0 and self.sqrt_pi_power != 0:
            object.__setattr__(self, "sqrt_pi_power", 0)

    @property
    def is_zero(self) -> bool:
        return self.ratio == 0

    def __add__(self, other: "SqrtPiRational") -> "SqrtPiRational":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.sqrt_pi_power != other.sqrt_pi_power:
            raise ValueError(
                f"cannot add sqrt(pi) powers {self.sqrt_pi_power} and {other.sqrt_pi_power}"
            )
        return SqrtPiRational(self.ratio + other.ratio, self.sqrt_pi_power)

    def __sub__(self, other: "SqrtPiRational") -> "SqrtPiRational":
        return self + SqrtPiRational(-other.ratio, other.sqrt_pi_power)

    def __mul__(self, other: "SqrtPiRational | Fraction | int") -> "SqrtPiRational":
        if isinstance(other, SqrtPiRational):
            return SqrtPiRational(self.ratio * other.ratio, self.sqrt_pi_power + other.sqrt_pi_power)
        return SqrtPiRational(self.ratio * other, self.sqrt_pi_power)

    __rmul__ = __mul__

    def reciprocal(self) -> "SqrtPiRational":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return SqrtPiRational(1 / self.ratio, -self.sqrt_pi_power)

    def as_rational(self) -> Fraction:
        """The value as a plain rational; fails if sqrt(pi) did not cancel."""
        if not self.is_zero and self.sqrt_pi_power != 0:
            raise ValueError(f"residual sqrt(pi) power {self.sqrt_pi_power}")
        return self.ratio

    def as_rational_over_pi(self) -> Fraction:
        """The value as r with self == r / pi; fails unless the power is -2."""
        if self.is_zero:
            return ZERO
        if self.sqrt_pi_power != -2:
            raise ValueError(f"expected power -2, found {self.sqrt_pi_power}")
        return self.ratio

    def to_float(self) -> float:
        return float(self.ratio) * math.pi ** (self.sqrt_pi_power / 2.0)


SQRT_PI = SqrtPiRational(ONE, 1)

_ZERO_SPR = SqrtPiRational(ZERO, 0)


def gamma_exact(twice_x: int) -> SqrtPiRational:
    """Gamma(twice_x / 2) for integer or half-integer argument, exactly.

    Raises at the poles (nonpositive integer argument); use ``recip_gamma``
    where the vanishing-reciprocal convention applies.
    """
    if twice_x % 2 == 0:
        return SqrtPiRational(gamma_int(twice_x // 2), 0)
    return SqrtPiRational(gamma_half_rational((twice_x - 1) // 2), 1)


def recip_gamma(twice_x: int) -> SqrtPiRational:
    """1/Gamma(twice_x / 2); zero at the integer poles."""
    if twice_x % 2 == 0:
        n = twice_x // 2
        if n <= 0:
            return _ZERO_SPR
        return SqrtPiRational(Fraction(1, math.factorial(n - 1)), 0)
    return SqrtPiRational(1 / gamma_half_rational((twice_x - 1) // 2), -1)


def pochhammer(a: Fraction, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1) with (a)_0 = 1."""
    out = ONE
    for i in range(n):
        out *= a + i
    return out


def j1z_series_coeff(n: int) -> Fraction:
    """Coefficient of z^(2n) in the ascending series of J1(z)/z."""
    sign = -1 if n % 2 else 1
    return Fraction(sign, 2 ** (2 * n + 1) * math.factorial(n) * math.factorial(n + 1))


def h1z_series_coeff(n: int) -> Fraction:
    """Coefficient of z^(2n+1) in pi * H1(z)/z (rational part of the series)."""
    # 1/(Gamma(n+3/2) Gamma(n+5/2)) = rational / pi
    r = gamma_half_rational(n + 1) * gamma_half_rational(n + 2)
    sign = -1 if n % 2 else 1
    return Fraction(sign, 1) / (Fraction(2 ** (2 * n + 2)) * r)

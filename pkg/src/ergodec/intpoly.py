"""Exact univariate polynomials over the integers and rationals.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros.  Coefficients are Python ints or fractions.Fraction, so all
arithmetic is exact.  This module also provides the number-theoretic
helpers used by the root-of-unity tests: Euler's totient, cyclotomic
polynomials, and the lcm of all root-of-unity orders that can occur as
eigenvalue orders of a rational matrix of a given size.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

Scalar = "int | Fraction"


def _norm_scalar(x):
    """Collapse integral Fractions to plain ints."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, int):
        return x
    raise TypeError(f"exact scalar expected, got {type(x).__name__}")


@dataclass(frozen=True)
class Polynomial:
    """Dense exact polynomial, coefficients lowest degree first."""

    coeffs: tuple

    @staticmethod
    def from_coeffs(coeffs) -> "Polynomial":
        c = [_norm_scalar(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return Polynomial(tuple(c))

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def x_power_minus_one(n: int) -> "Polynomial":
        return Polynomial.from_coeffs([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Polynomial.from_coeffs(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial.from_coeffs([-x for x in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial.from_coeffs(out)

    def scale(self, c) -> "Polynomial":
        return Polynomial.from_coeffs([c * x for x in self.coeffs])

    def __divmod__(self, other: "Polynomial"):
        """Exact rational division with remainder."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = Fraction(other.leading)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial.zero(), self
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top == 0:
                continue
            q = _norm_scalar(Fraction(top) / lead)
            quo[k] = q
            for j, y in enumerate(other.coeffs):
                rem[k + j] -= q * y
        return Polynomial.from_coeffs(quo), Polynomial.from_coeffs(rem)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def divides(self, other: "Polynomial") -> bool:
        if self.is_zero:
            return other.is_zero
        _, r = divmod(other, self)
        return r.is_zero

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = Fraction(self.leading)
        return Polynomial.from_coeffs([Fraction(x) / lead for x in self.coeffs])

    def pow(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        y = 0
        for c in reversed(self.coeffs):
            y = y * x + c
        return y

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = f"{mag}"
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (f"-{first_body}" if first_sign == "-" else first_body)
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over the rationals, by the Euclidean algorithm."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero:
        _, r = divmod(a, b)
        a, b = b, r
    return a.monic()


def euler_phi(d: int) -> int:
    """Euler's totient of a positive integer."""
    if d < 1:
        raise ValueError("totient is defined for positive integers")
    n, result, q = d, d, 2
    while q * q <= n:
        if n % q == 0:
            while n % q == 0:
                n //= q
            result -= result // q
        q += 1
    if n > 1:
        result -= result // n
    return result


def orders_with_totient_at_most(r: int) -> list[int]:
    """All d >= 1 with euler_phi(d) <= r, in increasing order.

    phi(d) >= sqrt(d/2), so scanning d up to 2*r*r + 1 is exhaustive.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    return [d for d in range(1, 2 * r * r + 2) if euler_phi(d) <= r]


def root_of_unity_lcm(r: int) -> int:
    """lcm of all orders of roots of unity that satisfy a rational
    polynomial of degree at most r.

    Raising an r-by-r rational matrix to this power turns every
    root-of-unity eigenvalue into 1.
    """
    return math.lcm(*orders_with_totient_at_most(r))


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> Polynomial:
    """The d-th cyclotomic polynomial, by iterated exact division of
    x^d - 1 by the cyclotomic polynomials of the proper divisors of d."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    f = Polynomial.x_power_minus_one(d)
    for e in range(1, d):
        if d % e == 0:
            f = f.exact_div(cyclotomic(e))
    return f

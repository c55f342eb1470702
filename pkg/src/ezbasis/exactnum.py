"""Exact scalar arithmetic: rationals, Bernoulli numbers, zeta values at
non-positive integers, generalized binomial coefficients, and power-sum
(Faulhaber) polynomials.

Everything in this module is exact.  Rationals are `fractions.Fraction`
throughout; no float ever enters or leaves.  The Bernoulli cache grows
deterministically and is guarded by a lock, so concurrent readers always
see a consistent table.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

Rational = Fraction

_ARITH_OPS = ("add", "sub", "mul", "div")


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply one of the four field operations to two rationals.

    `op` is one of "add", "sub", "mul", "div".  Division by zero raises
    ZeroDivisionError; an unknown op raises ValueError.
    """
    a = Fraction(a)
    b = Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}, expected one of {_ARITH_OPS}")


def rat_to_str(x: Fraction) -> str:
    """Canonical string form: "p/q" in lowest terms, or "p" when q == 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    """Parse the "p/q" / "p" forms produced by `rat_to_str`."""
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {s!r}") from exc


_bern_lock = threading.Lock()
_bern_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention.

    Computed by the defining recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0
    and cached, so a call for B_n fills the table up to n once.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    with _bern_lock:
        while len(_bern_cache) <= n:
            m = len(_bern_cache)
            # sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m
            acc = Fraction(0)
            for k in range(m):
                acc += comb(m + 1, k) * _bern_cache[k]
            _bern_cache.append(-acc / (m + 1))
        return _bern_cache[n]


def zeta_neg(k: int) -> Fraction:
    """zeta(-k) for an integer k >= 0, as an exact rational.

    zeta(0) = -1/2, and zeta(-k) = -B_{k+1}/(k+1) for k >= 1; in
    particular zeta(-2k) = 0 for k >= 1.
    """
    if k < 0:
        raise ValueError("argument must be a non-positive integer point, got -k with k < 0")
    if k == 0:
        return Fraction(-1, 2)
    return -bernoulli(k + 1) / (k + 1)


def gen_binomial(x: Fraction | int, k: int) -> Fraction:
    """Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k!.

    Defined for any rational x and integer k >= 0; C(x, 0) = 1.
    Negative integer tops are routine here, e.g. C(-2, 1) = -2.
    """
    if k < 0:
        raise ValueError("lower index must be >= 0")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num / den


@dataclass(frozen=True)
class FaulhaberPoly:
    """Closed form of the power sum S_c(n) = sum_{m=1}^{n-1} m^c.

    `coeffs` lists the coefficients of the degree-(c+1) polynomial in n,
    highest degree first, so coeffs[0] multiplies n^(c+1).  Construction
    validates the three anchors that pin the polynomial down: leading
    coefficient 1/(c+1), value 0 at n = 1, and value 1 at n = 2.
    """

    c: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.c < 0:
            raise ValueError("exponent must be >= 0")
        if len(self.coeffs) != self.c + 2:
            raise ValueError("coefficient vector must have length c + 2")
        if self.coeffs[0] != Fraction(1, self.c + 1):
            raise ValueError("leading coefficient must be 1/(c+1)")
        if self.eval_at(1) != 0:
            raise ValueError("empty sum at n = 1 must vanish")
        if self.eval_at(2) != 1:
            raise ValueError("sum at n = 2 must equal 1")

    def eval_at(self, n: int) -> Fraction:
        acc = Fraction(0)
        for coef in self.coeffs:
            acc = acc * n + coef
        return acc


def faulhaber(c: int) -> FaulhaberPoly:
    """Power-sum polynomial for exponent c >= 0.

    The coefficient of n^(c+1-i) is C(c+1, i) B_i / (c+1) for
    i = 0..c, with constant term 0; for c = 0 the constant is adjusted
    by -1 because the m = 0 term does not appear in S_0(n) = n - 1.
    """
    if c < 0:
        raise ValueError("exponent must be >= 0")
    coeffs = [Fraction(0)] * (c + 2)
    for i in range(c + 1):
        coeffs[i] = Fraction(comb(c + 1, i)) * bernoulli(i) / (c + 1)
    if c == 0:
        coeffs[1] -= 1
    return FaulhaberPoly(c=c, coeffs=tuple(coeffs))

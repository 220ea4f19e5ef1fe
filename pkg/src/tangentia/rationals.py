"""Exact rational arithmetic helpers.

``Rat`` is an alias for :class:`fractions.Fraction`: values are always stored
in lowest terms with a positive denominator, so equality is structural and
``str()`` prints ``"num/den"`` (or just ``"num"`` for integers), which is the
serialization used everywhere in this package.
"""
from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction

ZERO = Rat(0)
ONE = Rat(1)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for arbitrary integer n, k >= 0.

    Defined through the falling factorial n(n-1)...(n-k+1)/k! so that
    negative upper arguments are allowed, e.g. C(-1, 2) = 1.  Returns 0
    for k < 0.
    """
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    quot, rem = divmod(num, math.factorial(k))
    # k! divides any product of k consecutive integers, so this is exact
    assert rem == 0
    return quot


def parse_rat(text: str) -> Rat:
    """Parse ``"num/den"`` or ``"num"`` into a Rat.  Raises ValueError on junk."""
    return Rat(text.strip())


def format_rat(q: Rat) -> str:
    """Inverse of :func:`parse_rat`; integers print without a denominator."""
    return str(q)


def rat_arith(a: Rat, b: Rat, op: str) -> Rat:
    """Apply one of ``+ - * /`` to two rationals.

    Division by zero raises ZeroDivisionError; an unknown operator raises
    ValueError.
    """
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operator {op!r}")

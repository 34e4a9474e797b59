"""The three classic gcd algorithms the normalized solver is compared against.

Each algorithm has a plain form used for timing and a ``*_steps`` form that
also counts main-loop iterations, a hardware-independent work measure.
Inputs are nonnegative; gcd(x, 0) = x by convention.
"""

from __future__ import annotations

from enum import Enum

__all__ = [
    "GcdAlgorithmId",
    "binary_gcd",
    "binary_gcd_steps",
    "euclid_gcd",
    "euclid_gcd_steps",
    "mixed_euclid_gcd",
    "mixed_euclid_gcd_steps",
]


class GcdAlgorithmId(str, Enum):
    """Stable algorithm names used by the CLI and in benchmark reports."""

    EUCLID = "euclid"
    BINARY = "binary"
    MIXED = "mixed"
    WWL2 = "wwl2"


def euclid_gcd(a: int, b: int) -> int:
    """gcd by repeated Euclidean division."""
    while a > 0:
        a, b = b % a, a
    return b


def euclid_gcd_steps(a: int, b: int) -> tuple[int, int]:
    """euclid_gcd plus the number of division steps taken."""
    n = 0
    while a > 0:
        a, b = b % a, a
        n += 1
    return b, n


def binary_gcd(a: int, b: int) -> int:
    """gcd by subtraction and halving only, no division.

    The shared power of two comes out first and is restored at the end.
    Each operand is then stripped to its odd part (halving an even operand
    is free once the other is odd), so every subtraction in the loop
    produces an even value and triggers at least one halving; the loop
    runs O(bits) times.
    """
    if a == 0:
        return b
    if b == 0:
        return a
    m = 0
    while (a | b) & 1 == 0:
        a >>= 1
        b >>= 1
        m += 1
    while a & 1 == 0:
        a >>= 1
    while b & 1 == 0:
        b >>= 1
    r1, r2 = (a, b) if a < b else (b, a)
    while r1 > 0:
        r2 -= r1
        while r2 != 0 and r2 & 1 == 0:
            r2 >>= 1
        if r2 < r1:
            r1, r2 = r2, r1
    return r2 << m


def binary_gcd_steps(a: int, b: int) -> tuple[int, int]:
    """binary_gcd plus the number of subtract-and-halve iterations."""
    if a == 0:
        return b, 0
    if b == 0:
        return a, 0
    m = 0
    while (a | b) & 1 == 0:
        a >>= 1
        b >>= 1
        m += 1
    while a & 1 == 0:
        a >>= 1
    while b & 1 == 0:
        b >>= 1
    r1, r2 = (a, b) if a < b else (b, a)
    n = 0
    while r1 > 0:
        r2 -= r1
        while r2 != 0 and r2 & 1 == 0:
            r2 >>= 1
        if r2 < r1:
            r1, r2 = r2, r1
        n += 1
    return r2 << m, n


def mixed_euclid_gcd(a: int, b: int) -> int:
    """One Euclidean division, then the binary algorithm.

    The shared power of two is taken out before the division, so the inner
    binary pass never finds another one; the factor is restored exactly
    once, here.
    """
    if a == 0:
        return b
    if b == 0:
        return a
    m = 0
    while (a | b) & 1 == 0:
        a >>= 1
        b >>= 1
        m += 1
    r1, r2 = (a, b) if a < b else (b, a)
    r1, r2 = r2 % r1, r1
    return binary_gcd(r1, r2) << m


def mixed_euclid_gcd_steps(a: int, b: int) -> tuple[int, int]:
    """mixed_euclid_gcd plus the subtract-and-halve count of its binary phase."""
    if a == 0:
        return b, 0
    if b == 0:
        return a, 0
    m = 0
    while (a | b) & 1 == 0:
        a >>= 1
        b >>= 1
        m += 1
    r1, r2 = (a, b) if a < b else (b, a)
    r1, r2 = r2 % r1, r1
    g, n = binary_gcd_steps(r1, r2)
    return g << m, n

"""Extended gcd by normalization of the Bezout v coordinate.

Every intermediate solution of u*a + v*b = c is kept "normal": its v
coordinate stays inside [0, a-1].  That pins down a single representative
per c (unique when gcd(a, b) = 1), bounds the stored values by the inputs
themselves, and lets the descent replace Euclidean divisions with
subtractions and halvings.

``wwl1`` solves the coprime case, ``wwl2`` any positive pair with odd
first operand, and ``ext_gcd`` is the total entry point covering signs,
zeros, and pairs with a shared power of two.
"""

from __future__ import annotations

import math
from typing import NamedTuple

__all__ = [
    "BezoutTriple",
    "NormalState",
    "Normalizer",
    "NotRepresentableError",
    "canonical_min_v",
    "div1",
    "div2",
    "ext_gcd",
    "normalize_solution",
    "normalizer_of",
    "wwl1",
    "wwl1_trace",
    "wwl2",
    "wwl2_trace",
]


class BezoutTriple(NamedTuple):
    """Solution (u, v, g) of u*a + v*b = g = gcd(a, b) for some pair (a, b)."""

    u: int
    v: int
    g: int


class NormalState(NamedTuple):
    """A solution (u, v) of u*a + v*b = c with v normalized into [0, a-1]."""

    u: int
    v: int
    c: int


class Normalizer(NamedTuple):
    """The two distinguished residues attached to u*a + v*b = c.

    ``value`` is a v in [0, a-1] with a | (c - v*b), unique when
    gcd(a, b) = 1.  ``conormalizer`` is the t in [0, a-1] such that
    (x, -t) solves the same equation for some integer x, i.e.
    a | (c + t*b).
    """

    value: int
    conormalizer: int


class NotRepresentableError(ValueError):
    """u*a + v*b = c has no integer solution: gcd(a, b) does not divide c."""


def _require_odd_positive(a: int) -> None:
    if a < 1:
        raise ValueError(f"first operand must be positive, got {a}")
    if a % 2 == 0:
        raise ValueError(f"first operand must be odd, got {a}")


def normalize_solution(a: int, b: int, u: int, v: int) -> NormalState:
    """Shift (u, v) along the solution family until v lands in [0, a-1].

    The input solves u*a + v*b = c for whatever c it implies; the returned
    state solves the same equation.  Requires a >= 1.
    """
    if a < 1:
        raise ValueError(f"first operand must be positive, got {a}")
    vn = v % a
    return NormalState(u + (v - vn) // a * b, vn, u * a + v * b)


def div1(a: int, c: int, v: int) -> tuple[int, int]:
    """Halve c down to its odd part, updating v so it stays a normalizer of c.

    Each halving maps v to v/2 when v is even and to (v + a)/2 otherwise;
    a must be odd and positive.  c = 0 is returned untouched (it has no odd
    part, and halving the zero solution would loop forever).
    """
    _require_odd_positive(a)
    while c != 0 and c % 2 == 0:
        c //= 2
        v = v // 2 if v % 2 == 0 else (v + a) // 2
    return c, v


def div2(a: int, b: int, state: NormalState) -> NormalState:
    """Halve state.c down to its odd part, keeping u*a + v*b = c normal.

    Even v forces even u and the whole triple halves; odd v maps to
    ((u - b)/2, (v + a)/2).  a must be odd and positive; c = 0 is returned
    untouched.
    """
    _require_odd_positive(a)
    u, v, c = state
    while c != 0 and c % 2 == 0:
        if v % 2 == 0:
            u, v, c = u // 2, v // 2, c // 2
        else:
            u, v, c = (u - b) // 2, (v + a) // 2, c // 2
    return NormalState(u, v, c)


def wwl1(a: int, b: int) -> tuple[int, int]:
    """Solve u*a + v*b = 1 for coprime positive a, b with a odd.

    Returns the unique solution whose v lies in [0, a-1].  Runs a
    subtract-and-halve descent on two normalized values seeded from the
    residues of b and -b modulo a; u is reconstructed once at the end from
    u = -v*q + (1 - v*r)/a where b = a*q + r.
    """
    _require_odd_positive(a)
    if b < 1:
        raise ValueError(f"second operand must be positive, got {b}")
    g = math.gcd(a, b)
    if g != 1:
        raise ValueError(f"operands must be coprime, got gcd({a}, {b}) = {g}")
    if a == 1:
        return 1, 0
    q, r = divmod(b, a)
    c1, v1 = div1(a, r, 1)
    c2, v2 = div1(a, a - r, a - 1)
    if c2 < c1:
        c1, v1, c2, v2 = c2, v2, c1, v1
    while c1 > 1:
        c2 -= c1
        v2 = v2 - v1 if v2 >= v1 else v2 - v1 + a
        c2, v2 = div1(a, c2, v2)
        if c2 < c1:
            c1, v1, c2, v2 = c2, v2, c1, v1
    v = v1
    return -v * q + (1 - v * r) // a, v


def wwl1_trace(a: int, b: int) -> tuple[tuple[int, int], list[tuple[int, int]]]:
    """wwl1 plus the (c1, c2) pair at loop entry and after every iteration.

    The sum c1 + c2 strictly decreases along the returned list and
    gcd(c1, c2) = 1 holds at every index.
    """
    _require_odd_positive(a)
    if b < 1:
        raise ValueError(f"second operand must be positive, got {b}")
    g = math.gcd(a, b)
    if g != 1:
        raise ValueError(f"operands must be coprime, got gcd({a}, {b}) = {g}")
    if a == 1:
        return (1, 0), [(0, 1)]
    q, r = divmod(b, a)
    c1, v1 = div1(a, r, 1)
    c2, v2 = div1(a, a - r, a - 1)
    if c2 < c1:
        c1, v1, c2, v2 = c2, v2, c1, v1
    trace = [(c1, c2)]
    while c1 > 1:
        c2 -= c1
        v2 = v2 - v1 if v2 >= v1 else v2 - v1 + a
        c2, v2 = div1(a, c2, v2)
        if c2 < c1:
            c1, v1, c2, v2 = c2, v2, c1, v1
        trace.append((c1, c2))
    v = v1
    return (-v * q + (1 - v * r) // a, v), trace


def wwl2(a: int, b: int) -> BezoutTriple:
    """Extended gcd for positive a, b with a odd: u*a + v*b = g, 0 <= v <= a-1.

    Maintains two normal solutions and descends by one subtraction plus a
    run of halvings per iteration; when one c reaches 0 the other triple
    carries gcd(a, b).
    """
    _require_odd_positive(a)
    if b < 1:
        raise ValueError(f"second operand must be positive, got {b}")
    if a == 1:
        return BezoutTriple(1, 0, 1)
    q, r = divmod(b, a)
    u1, v1, c1 = -q, 1, r
    u2, v2, c2 = 1 + q - b, a - 1, a - r
    # c1 = 0 when a | b; it must skip the halving loop (0 stays even forever)
    while c1 != 0 and c1 % 2 == 0:
        if v1 % 2 == 0:
            u1, v1, c1 = u1 // 2, v1 // 2, c1 // 2
        else:
            u1, v1, c1 = (u1 - b) // 2, (v1 + a) // 2, c1 // 2
    while c2 % 2 == 0:
        if v2 % 2 == 0:
            u2, v2, c2 = u2 // 2, v2 // 2, c2 // 2
        else:
            u2, v2, c2 = (u2 - b) // 2, (v2 + a) // 2, c2 // 2
    if c2 < c1:
        u1, v1, c1, u2, v2, c2 = u2, v2, c2, u1, v1, c1
    while c1 > 0:
        c2 -= c1
        if v2 < v1:
            v2 += a - v1
            u2 -= u1 + b
        else:
            v2 -= v1
            u2 -= u1
        while c2 != 0 and c2 % 2 == 0:
            if v2 % 2 == 0:
                u2, v2, c2 = u2 // 2, v2 // 2, c2 // 2
            else:
                u2, v2, c2 = (u2 - b) // 2, (v2 + a) // 2, c2 // 2
        if c2 < c1:
            u1, v1, c1, u2, v2, c2 = u2, v2, c2, u1, v1, c1
    return BezoutTriple(u2, v2, c2)


def wwl2_trace(a: int, b: int) -> tuple[BezoutTriple, list[tuple[int, int]]]:
    """wwl2 plus the (c1, c2) pair at loop entry and after every iteration.

    len(trace) - 1 is the number of descent iterations.  The sum c1 + c2
    strictly decreases along the list and gcd(c1, c2) = gcd(a, b) holds at
    every index.
    """
    _require_odd_positive(a)
    if b < 1:
        raise ValueError(f"second operand must be positive, got {b}")
    if a == 1:
        return BezoutTriple(1, 0, 1), [(0, 1)]
    q, r = divmod(b, a)
    s1 = div2(a, b, NormalState(-q, 1, r))
    s2 = div2(a, b, NormalState(1 + q - b, a - 1, a - r))
    if s2.c < s1.c:
        s1, s2 = s2, s1
    trace = [(s1.c, s2.c)]
    while s1.c > 0:
        u2, v2, c2 = s2
        c2 -= s1.c
        if v2 < s1.v:
            v2 += a - s1.v
            u2 -= s1.u + b
        else:
            v2 -= s1.v
            u2 -= s1.u
        s2 = div2(a, b, NormalState(u2, v2, c2))
        if s2.c < s1.c:
            s1, s2 = s2, s1
        trace.append((s1.c, s2.c))
    return BezoutTriple(s2.u, s2.v, s2.c), trace


def ext_gcd(a: int, b: int) -> BezoutTriple:
    """Extended gcd of any two integers: u*a + v*b = g = gcd(|a|, |b|) >= 0.

    Total function.  Zeros yield the obvious triples, signs are folded into
    the returned coefficients, a shared power of two is split off by bit
    shifts and restored into g, and an even first operand is handled by
    swapping the pair through the odd-first solver.
    """
    if a == 0 and b == 0:
        return BezoutTriple(0, 0, 0)
    if a == 0:
        return BezoutTriple(0, 1 if b > 0 else -1, abs(b))
    if b == 0:
        return BezoutTriple(1 if a > 0 else -1, 0, abs(a))
    x, y = abs(a), abs(b)
    low = (x | y) & -(x | y)
    m = low.bit_length() - 1
    x >>= m
    y >>= m
    if x % 2 == 1:
        u, v, g = wwl2(x, y)
    else:
        # y is odd once the shared twos are out
        uy, vx, g = wwl2(y, x)
        u, v = vx, uy
    if a < 0:
        u = -u
    if b < 0:
        v = -v
    return BezoutTriple(u, v, g << m)


def normalizer_of(a: int, b: int, c: int) -> Normalizer:
    """Residues v, t in [0, a-1] with a | (c - v*b) and a | (c + t*b).

    Solvable only when g = gcd(a, b) divides c; raises
    NotRepresentableError otherwise.  Built as v = (c/g) * v_g mod a from
    the gcd-level solution, which makes the result additive and
    multiplicative in c (mod a) and compatible with exact halving of even
    c when a is odd.
    """
    if a < 1:
        raise ValueError(f"first operand must be positive, got {a}")
    if b < 1:
        raise ValueError(f"second operand must be positive, got {b}")
    _, vg, g = ext_gcd(a, b)
    if c % g != 0:
        raise NotRepresentableError(
            f"no solution: gcd({a}, {b}) = {g} does not divide c = {c}"
        )
    value = (c // g) * vg % a
    return Normalizer(value, (a - value) % a)


def canonical_min_v(a: int, b: int, t: BezoutTriple) -> BezoutTriple:
    """The Bezout solution for positive (a, b) with the smallest nonnegative v.

    Steps t along the solution family (u, v) -> (u + b/g, v - a/g).  For
    coprime inputs the normalized solver output is already canonical.
    Rejects g <= 0 and triples that do not solve the pair.
    """
    if a < 1 or b < 1:
        raise ValueError(f"operands must be positive, got ({a}, {b})")
    u, v, g = t
    if g <= 0:
        raise ValueError(f"g must be positive, got {g}")
    if u * a + v * b != g or a % g != 0 or b % g != 0:
        raise ValueError(f"{t!r} does not solve u*{a} + v*{b} = gcd")
    step = a // g
    vn = v % step
    return BezoutTriple(u + (v - vn) // step * (b // g), vn, g)

"""Dense univariate polynomials over a Field, as coefficient lists (constant first)."""

from __future__ import annotations


def trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def deg(p) -> int:
    return len(p) - 1


def add(F, a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else F.zero) + (b[i] if i < len(b) else F.zero) for i in range(n)])


def sub(F, a, b):
    return add(F, a, [-x for x in b])


def mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return trim(out)


def monic(F, p):
    inv = F.one / p[-1]
    return [inv * c for c in p]


def divmod_(F, a, b):
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = F.one / b[-1]
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * inv
        q[i] = c
        if c:
            for j, y in enumerate(b):
                r[i + j] = r[i + j] - c * y
    return trim(q), trim(r[: len(b) - 1])


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def gcd(F, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a) if a else []


def lcm(F, a, b):
    g = gcd(F, a, b)
    return monic(F, divmod_(F, mul(F, a, b), g)[0])


def power(F, p, k):
    out = [F.one]
    for _ in range(k):
        out = mul(F, out, p)
    return out


def from_ints(F, coeffs):
    return trim([F(c) for c in coeffs])


def x_power_minus_one(F, r):
    p = [F.zero] * (r + 1)
    p[0] = -F.one
    p[r] = F.one
    return p


def derivative(F, p):
    return trim([F(i) * c for i, c in enumerate(p)][1:])


def squarefree(F, p) -> bool:
    return deg(gcd(F, p, derivative(F, p))) == 0

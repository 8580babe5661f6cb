"""Hilbert series of graded algebras as integer polynomials.

(k)_t denotes 1 + t + ... + t^(k-1) throughout, and (k)_{t^2} the same
polynomial in t^2.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


class NotDivisible(ArithmeticError):
    pass


@dataclass(frozen=True)
class HilbertSeries:
    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, *coeffs) -> "HilbertSeries":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def total(self) -> int:
        """Value at t = 1, the total dimension."""
        return sum(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return HilbertSeries(tuple(out))

    def __pow__(self, k: int) -> "HilbertSeries":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        return format_series(self.coeffs)


ONE = HilbertSeries((1,))


def q_poly(k: int, step: int = 1) -> HilbertSeries:
    """(k)_t for step 1, (k)_{t^2} for step 2."""
    if k < 1:
        raise ValueError("k must be positive")
    c = [0] * ((k - 1) * step + 1)
    for j in range(k):
        c[j * step] = 1
    return HilbertSeries(tuple(c))


def expand(alphas=(), betas=()) -> HilbertSeries:
    out = ONE
    for a in alphas:
        out = out * q_poly(a)
    for b in betas:
        out = out * q_poly(b, 2)
    return out


def hilbert(algebra) -> HilbertSeries:
    if not algebra.complete:
        from .algebra import IncompleteAlgebra
        raise IncompleteAlgebra("Hilbert series of an incomplete build")
    return HilbertSeries(tuple(algebra.dims))


def _divide(num, den, nonneg=False):
    """Exact integer quotient of integer polynomials, else None.

    With ``nonneg`` a quotient with a negative coefficient also counts as
    failure; factor searches use this to prune early.
    """
    num = list(num)
    if den[-1] == 0:
        raise ZeroDivisionError
    if len(den) > len(num):
        return None if any(num) else (0,)
    lead = den[-1]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            return None
        c //= lead
        if nonneg and c < 0:
            return None
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        return None
    return tuple(q)


def divide(h: HilbertSeries, g: HilbertSeries) -> HilbertSeries:
    q = _divide(h.coeffs, g.coeffs)
    if q is None:
        raise NotDivisible(f"{h} is not divisible by {g}")
    return HilbertSeries(q)


def divide_cyclic(h: HilbertSeries, k: int) -> HilbertSeries:
    return divide(h, q_poly(k))


def divides(g: HilbertSeries, h: HilbertSeries) -> bool:
    return _divide(h.coeffs, g.coeffs) is not None


def balanced_set(h: HilbertSeries) -> set:
    return {k for k in range(2, h.degree + 2) if divides(q_poly(k), h)}


def cyclic_class_sums(h: HilbertSeries, k: int) -> list:
    out = [0] * k
    for j, c in enumerate(h.coeffs):
        out[j % k] += c
    return out


def balanced_set_by_classes(h: HilbertSeries) -> set:
    """Same set as balanced_set, computed from equality of the C_k class sums."""
    return {k for k in range(2, h.degree + 2) if len(set(cyclic_class_sums(h, k))) == 1}


# ---------------------------------------------------------------------------
# factorization into (a)_t and (b)_{t^2}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    alphas: tuple
    betas: tuple

    def expand(self) -> HilbertSeries:
        return expand(self.alphas, self.betas)

    def __str__(self):
        parts = []
        for a, e in sorted(Counter(self.alphas).items()):
            parts.append(f"({a})" + (f"^{e}" if e > 1 else ""))
        for b, e in sorted(Counter(self.betas).items()):
            parts.append(f"({b})_{{t^2}}" + (f"^{e}" if e > 1 else ""))
        return "".join(parts) or "1"


def _beta_choices(coeffs: tuple, s: int, cap: int):
    """Yield (betas, remaining coeffs) with s nonincreasing betas <= cap."""
    if s == 0:
        yield (), coeffs
        return
    deg = len(coeffs) - 1
    for b in range(min(cap, deg // 2 + 1), 1, -1):
        q = _divide(coeffs, q_poly(b, 2).coeffs, nonneg=True)
        if q is None:
            continue
        for rest, rem in _beta_choices(q, s - 1, b):
            yield (b,) + rest, rem


def factorize(h: HilbertSeries, all_solutions: bool = False, limit: int = 1000):
    """A factorization h = prod (a)_t prod (b)_{t^2} with the fewest (b) factors.

    Factorizations are not unique.  Among those with the fewest (b) factors
    the one with the smallest largest factor is returned, ties broken
    towards the lexicographically largest sorted alpha tuple.  Returns None
    when there is none; ``all_solutions`` returns the (capped) list instead.
    """
    if h.coeffs[0] != 1:
        return [] if all_solutions else None
    found = []
    for s in range(h.degree // 2 + 1):
        for betas, rem in _beta_choices(h.coeffs, s, h.degree):
            for alphas in _all_alpha(rem, len(rem)):
                found.append(Factorization(alphas, betas))
                if len(found) >= limit:
                    break
        if found:
            break
    if all_solutions:
        return found
    if not found:
        return None
    return min(found, key=_preference)


def _preference(f: Factorization):
    return (max(f.alphas + f.betas, default=0), tuple(-a for a in f.alphas), tuple(-b for b in f.betas))


def _all_alpha(coeffs: tuple, cap: int):
    if coeffs == (1,):
        yield ()
        return
    deg = len(coeffs) - 1
    for a in range(min(cap, deg + 1), 1, -1):
        q = _divide(coeffs, q_poly(a).coeffs, nonneg=True)
        if q is not None:
            for rest in _all_alpha(q, a):
                yield (a,) + rest


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def format_series(coeffs) -> str:
    parts = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
        if not mono:
            term = str(abs(c))
        elif abs(c) == 1:
            term = mono
        else:
            term = f"{abs(c)}{mono}"
        if parts:
            parts.append(("-" if c < 0 else "+") + term)
        else:
            parts.append(("-" if c < 0 else "") + term)
    return "".join(parts) or "0"


_TERM = re.compile(r"([+-]?)(\d*)(t(?:\^(\d+))?)?")


def parse_series(text: str) -> HilbertSeries:
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty series")
    coeffs: dict = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse series {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        j = 0 if not m.group(3) else int(m.group(4) or 1)
        coeffs[j] = coeffs.get(j, 0) + sign * c
        pos = m.end()
    top = max(coeffs)
    return HilbertSeries(tuple(coeffs.get(j, 0) for j in range(top + 1)))

"""The fourteen named Nichols algebras and their reference values."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Limits, NicholsAlgebra, build
from .cocycles import Cocycle, catalog_cocycle
from .racks import Rack, catalog_quandle
from .series import HilbertSeries, expand


@dataclass(frozen=True)
class NamedAlgebra:
    name: str
    quandle: str
    cocycle: str
    field: str
    n: int
    m: int
    dim: int
    alphas: tuple
    betas: tuple = ()
    balanced: frozenset = frozenset()
    desk: bool = True
    char_note: str = "*"

    @property
    def hilbert(self) -> HilbertSeries:
        return expand(self.alphas, self.betas)

    def rack(self) -> Rack:
        return catalog_quandle(self.quandle)

    def make_cocycle(self, field: str | None = None) -> Cocycle:
        return catalog_cocycle(self.cocycle, self.rack(), field or self.field)


def _b(*ks):
    return frozenset(ks)


ALGEBRAS = {a.name: a for a in [
    NamedAlgebra("3A", "Q3_1", "const(-1)", "Q", 2, 2, 12, (2, 2, 3), (), _b(2, 3)),
    NamedAlgebra("3B", "Q3_1", "const(E3)", "GF(4)", 2, 3, 432, (3, 4, 6), (6,), _b(2, 3, 4, 6), char_note="2"),
    NamedAlgebra("4A", "Q4_1", "const(-1)", "GF(2)", 3, 2, 36, (2, 2, 3, 3), (), _b(2, 3), char_note="2"),
    NamedAlgebra("4B", "Q4_1", "const(-1)", "Q", 3, 2, 72, (2, 2, 3, 6), (), _b(2, 3, 6), char_note="!=2"),
    NamedAlgebra("4C", "Q4_1", "chi4", "Q(zeta3)", 3, 3, 5184, (6, 6, 6, 6), (2, 2), _b(2, 3, 4, 6)),
    NamedAlgebra("5A", "Q5_2", "const(-1)", "Q", 4, 2, 1280, (4, 4, 4, 4, 5), (), _b(2, 4, 5)),
    NamedAlgebra("5B", "Q5_3", "const(-1)", "Q", 4, 2, 1280, (4, 4, 4, 4, 5), (), _b(2, 4, 5)),
    NamedAlgebra("6A", "Q6_1", "const(-1)", "Q", 2, 2, 576, (2, 2, 3, 3, 4, 4), (), _b(2, 3, 4)),
    NamedAlgebra("6B", "Q6_1", "chi6", "Q", 2, 2, 576, (2, 2, 3, 3, 4, 4), (), _b(2, 3, 4)),
    NamedAlgebra("6C", "Q6_2", "const(-1)", "Q", 4, 2, 576, (2, 2, 3, 3, 4, 4), (), _b(2, 3, 4)),
    NamedAlgebra("7A", "Q7_4", "const(-1)", "Q", 6, 2, 326592, (6,) * 6 + (7,), (), _b(2, 3, 6, 7), desk=False),
    NamedAlgebra("7B", "Q7_5", "const(-1)", "Q", 6, 2, 326592, (6,) * 6 + (7,), (), _b(2, 3, 6, 7), desk=False),
    NamedAlgebra("10A", "Q10_1", "const(-1)", "Q", 2, 2, 8294400, (4,) * 4 + (5, 5) + (6,) * 4, (),
                 _b(2, 3, 4, 5, 6), desk=False),
    NamedAlgebra("10B", "Q10_1", "chi10", "Q", 2, 2, 8294400, (4,) * 4 + (5, 5) + (6,) * 4, (),
                 _b(2, 3, 4, 5, 6), desk=False),
]}

# the reference balance sets list k from 2 to 7 only
BALANCE_WINDOW = range(2, 8)

DESK = tuple(name for name, a in ALGEBRAS.items() if a.desk)

# dim B = #Inn X * dim B' * dim(B(e) cap K) for these (algebra, subrack) pairs;
# the subrack is given by its size, the quotient is the last factor
QUOTIENTS = {"3A": (1, 1), "4C": (1, 144), "6A": (3, 2), "10A": (6, 120)}

# graded dimensions of the 72-dimensional algebra
INN_4B = {"identity": 12, "involutions": (3, 4), "three_cycles": (8, 6)}
ENV_4B = {5: 2, 3: 8, 2: 8, 1: 22}


class LargeAlgebraError(RuntimeError):
    pass


def named(name: str) -> NamedAlgebra:
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; known: {', '.join(ALGEBRAS)}") from None


def build_named(name: str, limits: Limits | None = None, allow_large: bool = False,
                field: str | None = None) -> NicholsAlgebra:
    a = named(name)
    if not a.desk and not allow_large:
        raise LargeAlgebraError(f"{name} (dim {a.dim}) exceeds desk scale")
    rack = a.rack()
    A = build(rack, a.make_cocycle(field), limits, name=name)
    return A


@lru_cache(maxsize=None)
def cached(name: str) -> NicholsAlgebra:
    """Process-wide cache of desk-scale builds with default limits."""
    return build_named(name)

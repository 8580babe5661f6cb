"""Rack 2-cocycles with values in a field."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .racks import Rack, is_indecomposable
from .scalars import Field, make_field, quantum_order


class CocycleError(ValueError):
    pass


@dataclass(frozen=True)
class FailingTriple:
    t: int
    s: int
    r: int
    lhs: object
    rhs: object

    def __str__(self):
        return (f"chi({self.t + 1}, {self.s + 1}|>{self.r + 1}) chi({self.s + 1},{self.r + 1}) = {self.lhs}"
                f" but chi({self.t + 1}|>{self.s + 1}, {self.t + 1}|>{self.r + 1}) chi({self.t + 1},{self.r + 1})"
                f" = {self.rhs}")


class Cocycle:
    """chi(t, s) is the scalar with g_t(e_s) = chi(t, s) e_{t |> s}."""

    def __init__(self, rack: Rack, field: Field, matrix, name: str | None = None):
        field = make_field(field)
        n = rack.size
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise CocycleError(f"cocycle matrix must be {n}x{n}")
        rows = []
        for row in matrix:
            out = []
            for x in row:
                x = field(x)
                if not x:
                    raise CocycleError("cocycle entries must be nonzero")
                out.append(x)
            rows.append(tuple(out))
        self.rack = rack
        self.field = field
        self.matrix = tuple(rows)
        self.name = name

    def __call__(self, t: int, s: int):
        return self.matrix[t][s]

    def __repr__(self):
        return f"Cocycle({self.name or '?'} on {self.rack!r} over {self.field})"

    @property
    def diagonal(self):
        return [self.matrix[t][t] for t in range(self.rack.size)]

    @property
    def q(self):
        """The common diagonal value."""
        diag = self.diagonal
        if any(d != diag[0] for d in diag):
            raise CocycleError("diagonal of the cocycle is not constant")
        return diag[0]

    def restrict(self, subset) -> "Cocycle":
        elems = sorted(subset)
        sub = self.rack.restrict(elems)
        matrix = [[self.matrix[t][s] for s in elems] for t in elems]
        return Cocycle(sub, self.field, matrix, name=f"{self.name}|{[e + 1 for e in elems]}")

    def to_json(self) -> dict:
        F = self.field
        return {"field": str(F), "matrix": [[F.format(x) for x in row] for row in self.matrix]}

    @classmethod
    def from_json(cls, data, rack: Rack, name=None) -> "Cocycle":
        if isinstance(data, str):
            data = json.loads(data)
        F = make_field(data["field"])
        matrix = [[F.parse(str(x)) for x in row] for row in data["matrix"]]
        return cls(rack, F, matrix, name=name)


def validate_cocycle(cocycle: Cocycle) -> FailingTriple | None:
    """First (t, s, r) violating chi(t, s|>r) chi(s, r) = chi(t|>s, t|>r) chi(t, r), or None."""
    tab = cocycle.rack.table
    chi = cocycle.matrix
    n = cocycle.rack.size
    for t in range(n):
        for s in range(n):
            ts = tab[t][s]
            for r in range(n):
                lhs = chi[t][tab[s][r]] * chi[s][r]
                rhs = chi[ts][tab[t][r]] * chi[t][r]
                if lhs != rhs:
                    return FailingTriple(t, s, r, lhs, rhs)
    return None


def cocycle_order(cocycle: Cocycle):
    """Quantum order of the common diagonal value (None when infinite)."""
    if not is_indecomposable(cocycle.rack):
        raise CocycleError("cocycle order needs an indecomposable rack")
    return quantum_order(cocycle.q)


def extended_cocycle(cocycle: Cocycle, word, s: int):
    """(lambda, u|>s) with g_u(e_s) = lambda e_{u|>s} for the word u = u_1 ... u_d."""
    tab = cocycle.rack.table
    chi = cocycle.matrix
    lam = cocycle.field.one
    cur = s
    for x in reversed(tuple(word)):
        lam = lam * chi[x][cur]
        cur = tab[x][cur]
    return lam, cur


# ---------------------------------------------------------------------------
# catalog cocycles
# ---------------------------------------------------------------------------

# entries: 1, -1 or "E" / "-E" for a primitive third root of unity
_CHI4 = [
    ["E", "-E", "-E", "E"],
    ["-E", "E", "-E", "E"],
    ["-E", "-E", "E", "E"],
    ["E", "E", "E", "E"],
]

_CHI6 = [
    [-1, 1, -1, 1, -1, 1],
    [1, -1, 1, -1, -1, 1],
    [1, 1, -1, 1, 1, 1],
    [1, 1, 1, -1, 1, 1],
    [1, 1, 1, 1, -1, 1],
    [-1, -1, -1, -1, 1, -1],
]

_CHI10 = [
    [-1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [-1, -1, 1, 1, 1, 1, -1, 1, 1, 1],
    [-1, -1, -1, 1, -1, 1, 1, -1, 1, 1],
    [-1, -1, -1, -1, 1, -1, 1, 1, -1, -1],
    [1, 1, 1, 1, -1, 1, -1, -1, 1, 1],
    [1, 1, 1, 1, -1, -1, -1, 1, -1, -1],
    [1, 1, 1, 1, 1, 1, -1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, -1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, -1, 1],
    [1, 1, 1, 1, 1, 1, 1, -1, -1, -1],
]

_TABLES = {"chi4": (_CHI4, "Q4_1"), "chi6": (_CHI6, "Q6_1"), "chi10": (_CHI10, "Q10_1")}


def constant_cocycle(rack: Rack, field, q) -> Cocycle:
    F = make_field(field)
    q = F(q)
    return Cocycle(rack, F, [[q] * rack.size for _ in range(rack.size)], name=f"const({F.format(q)})")


def catalog_cocycle(name: str, rack: Rack, field) -> Cocycle:
    """One of const(q) (e.g. 'const(-1)', 'const(E3)'), chi4, chi6, chi10."""
    F = make_field(field)
    if name.startswith("const"):
        arg = name[len("const"):].strip("() ")
        if arg.upper().startswith("E"):
            q = F.root_of_unity(int(arg[1:]))
        else:
            q = F.parse(arg)
        return constant_cocycle(rack, F, q)
    if name not in _TABLES:
        raise KeyError(f"unknown cocycle {name!r}")
    table, qname = _TABLES[name]
    if len(table) != rack.size:
        raise CocycleError(f"{name} lives on {qname}, not on a rack of size {rack.size}")
    if name == "chi4":
        try:
            e = F.root_of_unity(3)
        except ValueError as exc:
            raise CocycleError(f"chi4 needs a primitive third root of unity in {F}") from exc
        conv = {"E": e, "-E": -e}
        matrix = [[conv[x] for x in row] for row in table]
    else:
        matrix = [[F(x) for x in row] for row in table]
    return Cocycle(rack, F, matrix, name=name)

"""Reference tables recomputed from scratch, each row with expected vs computed values."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from .algebra import kernel_intersection
from .catalog import ALGEBRAS, BALANCE_WINDOW, DESK, ENV_4B, QUOTIENTS, named
from .racks import format_cycles, perm_order, rack_degree, subracks
from .series import Factorization, balanced_set, factorize, hilbert

log = logging.getLogger(__name__)


@dataclass
class Table:
    name: str
    columns: list
    rows: list = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(r.get("match") is not False for r in self.rows)

    def to_json(self) -> dict:
        return {"name": self.name, "columns": self.columns, "rows": self.rows, "all_match": self.all_match}

    def render(self) -> str:
        cells = [[str(c) for c in self.columns]]
        for r in self.rows:
            cells.append([_cell(r.get(c)) for c in self.columns])
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines = [self.name]
        for k, row in enumerate(cells):
            lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
            if k == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines)


def _cell(x):
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "NO"
    if isinstance(x, (set, frozenset, list, tuple)):
        return "{" + ",".join(str(v) for v in sorted(x)) + "}"
    return str(x)


class AlgebraSource:
    """Hands out builds by name, reusing them across tables."""

    def __init__(self, loader=None, allow_large: bool = False):
        from .catalog import build_named
        self._loader = loader or (lambda name: build_named(name, allow_large=allow_large))
        self._cache = {}
        self.allow_large = allow_large

    def available(self, name: str) -> bool:
        return ALGEBRAS[name].desk or self.allow_large

    def get(self, name: str):
        if name not in self._cache:
            log.info("building %s", name)
            self._cache[name] = self._loader(name)
        return self._cache[name]


def algebra_table(src: AlgebraSource, names=None) -> Table:
    t = Table("algebras", ["algebra", "char", "n", "m", "dim_expected", "dim", "series_expected", "series",
                           "factorization", "match"])
    for name in names or ALGEBRAS:
        a = named(name)
        row = {"algebra": name, "char": a.char_note, "dim_expected": a.dim,
               "series_expected": str(Factorization(a.alphas, a.betas))}
        if not src.available(name):
            row.update(n=a.n, m=a.m, match=None, dim="not built")
            t.rows.append(row)
            continue
        A = src.get(name)
        h = hilbert(A)
        f = factorize(h)
        row.update(n=rack_degree(A.rack), m=A.m, dim=A.dim, series=str(h), factorization=str(f),
                   match=A.dim == a.dim and h == a.hilbert and (rack_degree(A.rack), A.m) == (a.n, a.m))
        t.rows.append(row)
    return t


def quotient_table(src: AlgebraSource) -> Table:
    t = Table("quotients", ["algebra", "m", "dim", "inn_order", "subrack", "sub_dim", "inn_order*sub_dim",
                            "quotient_expected", "quotient", "match"])
    for name, (size, expected) in QUOTIENTS.items():
        a = named(name)
        row = {"algebra": name, "m": a.m, "quotient_expected": expected}
        if not src.available(name):
            row.update(dim=a.dim, match=None, quotient="not built")
            t.rows.append(row)
            continue
        A = src.get(name)
        subset = _admissible_subrack(A.rack, size)
        from .verify import sub_algebra
        B1 = sub_algebra(A, subset)
        q = kernel_intersection(A, subset)["identity_dim"]
        order = A.rack.inner.order
        row.update(dim=A.dim, inn_order=order, subrack=[s + 1 for s in sorted(subset)], sub_dim=B1.dim,
                   quotient=q, match=q == expected and order * B1.dim * q == A.dim)
        row["inn_order*sub_dim"] = order * B1.dim
        t.rows.append(row)
    return t


def _admissible_subrack(rack, size):
    if size == 1:
        return {0}
    for s in subracks(rack):
        if s.size == size and s.complement_generates_inn:
            return set(s.elements)
    raise ValueError(f"no admissible subrack of size {size} in {rack.name}")


def balance_table(src: AlgebraSource, names=None) -> Table:
    """Balanced k per algebra; ``match`` compares k in BALANCE_WINDOW, the full sets are shown too."""
    t = Table("cyclic_balance", ["algebra", "n", "m", "dim", "expected", "by_division", "by_class_sums",
                                 "in_window", "match"])
    for name in names or ALGEBRAS:
        a = named(name)
        row = {"algebra": name, "n": a.n, "m": a.m, "dim": a.dim, "expected": set(a.balanced)}
        if not src.available(name):
            # the series itself is known, so the division side is still meaningful
            div = balanced_set(a.hilbert)
            win = {k for k in div if k in BALANCE_WINDOW}
            row.update(by_division=div, in_window=win, match=win == set(a.balanced))
            t.rows.append(row)
            continue
        A = src.get(name)
        h = hilbert(A)
        div = balanced_set(h)
        cls = {k for k in range(2, h.degree + 2) if len(set(A.graded_dims(("cyclic", k)).values())) == 1}
        win = {k for k in div if k in BALANCE_WINDOW}
        row.update(dim=A.dim, by_division=div, by_class_sums=cls, in_window=win,
                   match=div == cls and win == set(a.balanced))
        t.rows.append(row)
    return t


def inn_table(src: AlgebraSource) -> Table:
    t = Table("inn_grading_4B", ["element", "order", "dim_expected", "dim", "match"])
    A = src.get("4B")
    dims = A.graded_dims("inn")
    expected = {1: 12, 2: 4, 3: 6}
    for g in sorted(A.rack.inner.elements, key=lambda g: (perm_order(g), g)):
        o = perm_order(g)
        d = dims.get(g, 0)
        t.rows.append({"element": format_cycles(g), "order": o, "dim_expected": expected[o], "dim": d,
                       "match": d == expected[o]})
    return t


def env_table(src: AlgebraSource) -> Table:
    t = Table("env_grading_4B", ["dim", "classes_expected", "classes", "example", "match"])
    A = src.get("4B")
    dims = A.graded_dims("env")
    counts = Counter(dims.values())
    examples = {}
    for c, d in sorted(dims.items(), key=lambda kv: (len(kv[0]), kv[0])):
        examples.setdefault(d, c)
    for d in sorted(set(counts) | set(ENV_4B), reverse=True):
        ex = examples.get(d)
        t.rows.append({"dim": d, "classes_expected": ENV_4B.get(d, 0), "classes": counts.get(d, 0),
                       "example": "".join(f"g{x + 1}" for x in ex) if ex else "1",
                       "match": counts.get(d, 0) == ENV_4B.get(d, 0)})
    return t


TABLES = {
    "algebras": algebra_table,
    "quotients": quotient_table,
    "balance": balance_table,
    "inn": inn_table,
    "env": env_table,
}


def all_tables(src: AlgebraSource, which=None) -> list:
    return [TABLES[name](src) for name in (which or TABLES)]


__all__ = ["Table", "AlgebraSource", "TABLES", "all_tables", "DESK"]

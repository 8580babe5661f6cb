"""Finite racks and quandles.

Labels are 0-based inside the package (``table[t][s]`` is ``t |> s``); the
catalog, the JSON rack format and the command line use the 1-based labels
of the usual quandle tables.
"""

from __future__ import annotations

import itertools
import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

GROUP_CAP = 10**6
ENV_CLASS_CAP = 10**6
SUBRACK_ENUM_LIMIT = 16


class RackError(ValueError):
    pass


Perm = tuple  # images of 0..n-1


def compose(a: Perm, b: Perm) -> Perm:
    """a o b, i.e. apply b first."""
    return tuple(a[x] for x in b)


def invert(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_order(a: Perm) -> int:
    ident = tuple(range(len(a)))
    k, cur = 1, a
    while cur != ident:
        cur = compose(a, cur)
        k += 1
    return k


def parse_cycles(text: str, n: int) -> Perm:
    """Parse 1-based cycle notation such as '(2,3)(4,5)' into a permutation of range(n)."""
    img = list(range(n))
    for cyc in re.findall(r"\(([^)]*)\)", text):
        pts = [int(x) - 1 for x in cyc.split(",") if x.strip()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def format_cycles(a: Perm) -> str:
    """1-based cycle notation; the identity is '()'."""
    seen = set()
    out = []
    for start in range(len(a)):
        if start in seen or a[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = a[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = a[x]
        out.append("(" + ",".join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "()"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str  # "bijective" | "distributive"
    where: tuple
    message: str


def validate_rack(table) -> Violation | None:
    """Check the rack axioms; returns None when they hold, else the first violation."""
    n = len(table)
    for t, row in enumerate(table):
        if len(row) != n:
            raise RackError(f"row {t + 1} has length {len(row)}, expected {n}")
        for x in row:
            if not (isinstance(x, int) and 0 <= x < n):
                raise RackError(f"entry {x!r} in row {t + 1} out of range")
    for t, row in enumerate(table):
        if len(set(row)) != n:
            return Violation("bijective", (t,), f"row {t + 1} is not a permutation")
    for t in range(n):
        rt = table[t]
        for s in range(n):
            ts = rt[s]
            rs = table[s]
            rts = table[ts]
            for r in range(n):
                if rt[rs[r]] != rts[rt[r]]:
                    return Violation(
                        "distributive", (t, s, r),
                        f"{t + 1}>({s + 1}>{r + 1}) != ({t + 1}>{s + 1})>({t + 1}>{r + 1})",
                    )
    return None


# ---------------------------------------------------------------------------
# permutation groups
# ---------------------------------------------------------------------------

@dataclass
class PermGroup:
    generators: list
    elements: list
    index: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    def __contains__(self, g):
        return g in self.index


def generate_group(generators, degree: int, cap: int = GROUP_CAP) -> PermGroup:
    ident = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in index:
                if len(elements) >= cap:
                    raise RackError(f"group closure exceeds cap {cap}")
                index[h] = len(elements)
                elements.append(h)
                queue.append(h)
    return PermGroup(gens, elements, index)


# ---------------------------------------------------------------------------
# racks
# ---------------------------------------------------------------------------

class Rack:
    """A finite rack given by its full operation table (0-based)."""

    def __init__(self, table, name: str | None = None, check: bool = True):
        table = tuple(tuple(int(x) for x in row) for row in table)
        if check:
            bad = validate_rack(table)
            if bad is not None:
                raise RackError(bad.message)
        self.table = table
        self.size = len(table)
        self.name = name

    def __repr__(self):
        return f"Rack({self.name or self.size})"

    def __eq__(self, other):
        return isinstance(other, Rack) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def op(self, t: int, s: int) -> int:
        return self.table[t][s]

    def g(self, t: int) -> Perm:
        return self.table[t]

    @cached_property
    def inverse_table(self):
        """inverse_table[t][s] = t |>^{-1} s."""
        return tuple(invert(row) for row in self.table)

    @property
    def is_quandle(self) -> bool:
        return all(self.table[t][t] == t for t in range(self.size))

    @cached_property
    def inner(self) -> PermGroup:
        return inner_group(self)

    def word_perm(self, word) -> Perm:
        """g_{w1} o g_{w2} o ... o g_{wd}."""
        p = tuple(range(self.size))
        for x in word:
            p = compose(p, self.table[x])
        return p

    def to_json(self) -> dict:
        return {"size": self.size, "table": [[x + 1 for x in row] for row in self.table]}

    @classmethod
    def from_json(cls, data, name=None) -> "Rack":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["size"])
        table = [[int(x) - 1 for x in row] for row in data["table"]]
        if len(table) != n:
            raise RackError(f"table has {len(table)} rows, size says {n}")
        return cls(table, name=name or data.get("name"))

    def restrict(self, subset) -> "Rack":
        """The subrack on ``subset`` relabelled 0..k-1 in increasing label order."""
        elems = sorted(subset)
        pos = {x: i for i, x in enumerate(elems)}
        try:
            table = [[pos[self.table[t][s]] for s in elems] for t in elems]
        except KeyError:
            raise RackError(f"{[x + 1 for x in elems]} is not closed under the operation")
        return Rack(table, name=None)


def trivial_quandle(n: int) -> Rack:
    return Rack([list(range(n)) for _ in range(n)], name=f"T{n}")


def inner_group(rack: Rack, cap: int = GROUP_CAP) -> PermGroup:
    return generate_group([rack.g(t) for t in range(rack.size)], rack.size, cap)


def is_indecomposable(rack: Rack) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for t in range(rack.size):
            for y in (rack.table[t][x], rack.inverse_table[t][x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return len(seen) == rack.size


def is_faithful(rack: Rack) -> bool:
    return len(set(rack.table)) == rack.size


def rack_degree(rack: Rack) -> int:
    orders = {perm_order(rack.g(t)) for t in range(rack.size)}
    if len(orders) != 1:
        raise RackError(f"g_t orders are not constant: {sorted(orders)}")
    if not is_indecomposable(rack):
        # constant orders on a decomposable rack are accepted but flagged by callers
        pass
    return orders.pop()


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

# name: (size, {label: cycles}, #Inn X, deg X)
CATALOG_DATA = {
    "Q3_1": (3, {1: "(2,3)", 2: "(1,3)"}, 6, 2),
    "Q4_1": (4, {1: "(2,3,4)", 2: "(1,4,3)"}, 12, 3),
    "Q5_2": (5, {1: "(2,4,5,3)", 2: "(1,4,3,5)"}, 20, 4),
    "Q5_3": (5, {1: "(2,3,5,4)", 2: "(1,5,3,4)"}, 20, 4),
    "Q6_1": (6, {1: "(3,5)(4,6)", 2: "(3,6)(4,5)", 3: "(1,5)(2,6)"}, 24, 2),
    "Q6_2": (6, {1: "(3,5,4,6)", 3: "(1,6,2,5)"}, 24, 4),
    "Q7_4": (7, {1: "(2,6,5,7,3,4)", 2: "(1,4,5,3,7,6)"}, 42, 6),
    "Q7_5": (7, {1: "(2,4,3,7,5,6)", 2: "(1,6,7,3,5,4)"}, 42, 6),
    "Q10_1": (10, {1: "(2,7)(3,5)(4,6)", 2: "(1,7)(3,8)(4,10)",
                   3: "(1,5)(2,8)(4,9)", 4: "(1,6)(2,10)(3,9)"}, 120, 2),
}

CATALOG_NAMES = tuple(CATALOG_DATA)


def rack_from_generators(size: int, rows: dict) -> Rack:
    """Complete a rack from some rows g_t using g_{t|>s} = g_t g_s g_t^{-1}."""
    known = {t: tuple(p) for t, p in rows.items()}
    changed = True
    while changed:
        changed = False
        for t, gt in list(known.items()):
            gti = invert(gt)
            for s, gs in list(known.items()):
                u = gt[s]
                h = compose(compose(gt, gs), gti)
                if u in known:
                    if known[u] != h:
                        raise RackError(f"inconsistent generator data at {u + 1}")
                else:
                    known[u] = h
                    changed = True
    if len(known) != size:
        raise RackError("generators do not determine every row")
    return Rack([known[t] for t in range(size)])


def catalog_quandle(name: str) -> Rack:
    key = name.replace(",", "_").replace("Q_", "Q").replace("{", "").replace("}", "")
    if key not in CATALOG_DATA:
        raise KeyError(f"unknown quandle {name!r}; known: {', '.join(CATALOG_NAMES)}")
    size, gens, inn_order, degree = CATALOG_DATA[key]
    rows = {t - 1: parse_cycles(c, size) for t, c in gens.items()}
    rack = rack_from_generators(size, rows)
    rack.name = key
    if rack.inner.order != inn_order:
        raise RackError(f"{key}: inner group order {rack.inner.order} != {inn_order}")
    if rack_degree(rack) != degree:
        raise RackError(f"{key}: degree mismatch")
    return rack


# ---------------------------------------------------------------------------
# subracks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subrack:
    elements: tuple  # sorted 0-based labels
    complement_generates_inn: bool

    @property
    def size(self):
        return len(self.elements)

    def labels(self):
        return [x + 1 for x in self.elements]


def is_subrack(rack: Rack, subset) -> bool:
    s = set(subset)
    return bool(s) and all(rack.table[t][u] in s for t in s for u in s)


def complement_generates_inn(rack: Rack, subset) -> bool:
    rest = [t for t in range(rack.size) if t not in set(subset)]
    if not rest:
        return rack.inner.order == 1
    target = rack.inner.order
    grp = generate_group([rack.g(t) for t in rest], rack.size, cap=target + 1)
    return grp.order == target


def subracks(rack: Rack, limit: int = SUBRACK_ENUM_LIMIT) -> list[Subrack]:
    """All non-empty proper subracks, smallest first."""
    if rack.size > limit:
        raise RackError(f"refusing exhaustive subrack enumeration for size {rack.size} > {limit}")
    out = []
    n = rack.size
    for k in range(1, n):
        for combo in itertools.combinations(range(n), k):
            if is_subrack(rack, combo):
                out.append(Subrack(combo, complement_generates_inn(rack, combo)))
    return out


# ---------------------------------------------------------------------------
# positive words modulo the enveloping relations s t = (s|>t) s
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnvWordClass:
    length: int
    canonical: tuple
    size: int


def env_class_members(rack: Rack, word, cap: int = ENV_CLASS_CAP) -> set:
    word = tuple(word)
    for x in word:
        if not 0 <= x < rack.size:
            raise RackError(f"letter {x} out of range")
    tab = rack.table
    inv = rack.inverse_table
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            for pair in ((tab[a][b], a), (b, inv[b][a])):
                v = w[:i] + pair + w[i + 2:]
                if v not in seen:
                    if len(seen) >= cap:
                        raise RackError(f"enveloping class exceeds cap {cap}")
                    seen.add(v)
                    queue.append(v)
    return seen


def env_class(rack: Rack, word, cap: int = ENV_CLASS_CAP) -> EnvWordClass:
    members = env_class_members(rack, word, cap)
    return EnvWordClass(len(tuple(word)), min(members), len(members))


def env_classes(rack: Rack, length: int) -> list[EnvWordClass]:
    """Partition of all words of the given length into enveloping classes."""
    seen = set()
    out = []
    for w in itertools.product(range(rack.size), repeat=length):
        if w in seen:
            continue
        members = env_class_members(rack, w)
        seen |= members
        out.append(EnvWordClass(length, min(members), len(members)))
    return out

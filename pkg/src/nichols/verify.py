"""Executable checks of divisibility and balance statements on built algebras.

Every check returns a :class:`Check` whose ``computed`` field holds the raw
numbers the verdict was derived from, so a report can be re-verified by
hand without rebuilding anything.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field

from . import linalg
from .algebra import BuildError, Limits, NicholsAlgebra, build, kernel_intersection
from .racks import Rack, complement_generates_inn, format_cycles, is_subrack, rack_degree
from .series import HilbertSeries, NotDivisible, balanced_set, balanced_set_by_classes, divide, hilbert, q_poly

log = logging.getLogger(__name__)

PASS, FAIL = "pass", "fail"


def skipped(reason: str) -> str:
    return f"skipped({reason})"


@dataclass
class Check:
    name: str
    inputs: dict
    expected: object
    computed: object
    verdict: str
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def is_skipped(self) -> bool:
        return self.verdict.startswith("skipped")


@dataclass
class VerificationReport:
    algebra: str
    checks: list = field(default_factory=list)

    def add(self, check: Check):
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed or c.is_skipped for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.verdict == FAIL]

    def to_json(self) -> dict:
        return {"algebra": self.algebra, "ok": self.ok,
                "checks": [_jsonable(asdict(c)) for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"{c.verdict:<8} {c.name} {json.dumps(_jsonable(c.inputs), sort_keys=True)}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=str) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, HilbertSeries):
        return str(x)
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def _labels(subset):
    return [s + 1 for s in sorted(subset)]


def _id(A: NicholsAlgebra) -> str:
    return A.name or f"B({A.rack.name}, {A.cocycle.name})"


# ---------------------------------------------------------------------------
# balance of the inner-group grading
# ---------------------------------------------------------------------------

def inn_component_dims(A: NicholsAlgebra) -> dict:
    """dim B(g) for every g in Inn X, zeros included."""
    dims = A.graded_dims("inn")
    return {g: dims.get(g, 0) for g in A.rack.inner.elements}


def check_inner_balanced(A: NicholsAlgebra, force: bool = False) -> Check:
    """All Inn X-components of equal dimension, asserted only when deg X divides m
    (or when ``force`` is set, which is how the unbalanced case is exhibited)."""
    A.require_complete()
    n = rack_degree(A.rack)
    m = A.m
    comps = inn_component_dims(A)
    values = sorted(set(comps.values()))
    order = A.rack.inner.order
    computed = {"n": n, "m": m, "inn_order": order, "dim": A.dim,
                "component_dims": {format_cycles(g): d for g, d in sorted(comps.items())}}
    balanced = len(values) == 1 and A.dim % order == 0
    inputs = {"algebra": _id(A)}
    if m % n and not force:
        return Check("inner_balanced", inputs, "not asserted (deg X does not divide m)", computed,
                     skipped("n does not divide m"), {"balanced": balanced, "distinct_dims": values})
    verdict = PASS if balanced else FAIL
    witness = None if balanced else {"distinct_dims": values}
    return Check("inner_balanced", inputs, {"each": A.dim // order if balanced else "equal"},
                 computed, verdict, witness)


# ---------------------------------------------------------------------------
# subracks and sub-Nichols algebras
# ---------------------------------------------------------------------------

def check_subrack_admissibility(rack: Rack, subset) -> Check:
    sub = frozenset(subset)
    if not sub or len(sub) >= rack.size or not sub <= set(range(rack.size)):
        raise ValueError("subset must be a non-empty proper subset of X")
    closed = is_subrack(rack, sub)
    tab = rack.table
    stable = all(tab[t][s] not in sub for t in sub for s in range(rack.size) if s not in sub)
    generates = complement_generates_inn(rack, sub)
    computed = {"subrack": closed, "complement_stable": stable, "complement_generates_inn": generates}
    verdict = PASS if closed and stable and generates else FAIL
    return Check("subrack_admissible", {"rack": rack.name, "subset": _labels(sub)},
                 {"subrack": True, "complement_stable": True, "complement_generates_inn": True},
                 computed, verdict)


def sub_algebra(A: NicholsAlgebra, subset, limits: Limits | None = None) -> NicholsAlgebra:
    """Fresh Nichols algebra on the subrack with the restricted cocycle."""
    coc = A.cocycle.restrict(sorted(subset))
    return build(coc.rack, coc, limits or A.limits, name=f"{_id(A)}|{_labels(subset)}")


def word_span_dims(A: NicholsAlgebra, subset) -> list:
    """Graded dimensions of the subalgebra of A generated by e_t, t in subset."""
    one = A.field.one
    current = [{0: one}]
    dims = [1]
    d = 0
    while current and d + 1 < len(A.degrees):
        ech = linalg.Echelon(one)
        nxt = []
        for v in current:
            for u in sorted(subset):
                w = A.right_mul_vec(d, v, u)
                if w and ech.add(w) is None:
                    nxt.append(w)
        d += 1
        if not nxt:
            break
        dims.append(len(nxt))
        current = nxt
    return dims


def check_embedding(A: NicholsAlgebra, subset, B1: NicholsAlgebra) -> Check:
    span = word_span_dims(A, subset)
    verdict = PASS if span == B1.dims else FAIL
    return Check("subalgebra_embedding", {"algebra": _id(A), "subset": _labels(subset)},
                 B1.dims, span, verdict)


def _prepare(A, subset, B1):
    if B1 is None:
        B1 = sub_algebra(A, subset)
    return B1


def check_dim_divisibility(A: NicholsAlgebra, subset, B1: NicholsAlgebra | None = None) -> Check:
    """dim B = #Inn X * dim B' * dim(B(e) cap K), K the common kernel of d_t, t in subset."""
    A.require_complete()
    inputs = {"algebra": _id(A), "subset": _labels(subset)}
    n = rack_degree(A.rack)
    if A.m % n:
        return Check("dim_divisibility", inputs, None, None, skipped("n does not divide m"))
    adm = check_subrack_admissibility(A.rack, subset)
    if not adm.passed:
        return Check("dim_divisibility", inputs, None, adm.computed, skipped("subrack not admissible"))
    try:
        B1 = _prepare(A, subset, B1)
    except BuildError as exc:
        return Check("dim_divisibility", inputs, None, None, skipped(str(exc)))
    if not B1.complete:
        return Check("dim_divisibility", inputs, None, None, skipped("sub-algebra build incomplete"))
    K = kernel_intersection(A, subset)
    order = A.rack.inner.order
    product = order * B1.dim * K["identity_dim"]
    computed = {"dim": A.dim, "inn_order": order, "sub_dim": B1.dim, "quotient": K["identity_dim"],
                "product": product}
    return Check("dim_divisibility", inputs, A.dim, computed, PASS if product == A.dim else FAIL)


def check_hilbert_divisibility(A: NicholsAlgebra, subset, B1: NicholsAlgebra | None = None) -> Check:
    """(m)_t * H_{B'} divides H_B in Z[t]; whether the quotient is nonnegative is reported too."""
    inputs = {"algebra": _id(A), "subset": _labels(subset)}
    try:
        B1 = _prepare(A, subset, B1)
    except BuildError as exc:
        return Check("hilbert_divisibility", inputs, None, None, skipped(str(exc)))
    if not B1.complete:
        return Check("hilbert_divisibility", inputs, None, None, skipped("sub-algebra build incomplete"))
    h = hilbert(A)
    g = q_poly(A.m) * hilbert(B1)
    try:
        quo = divide(h, g)
    except NotDivisible:
        return Check("hilbert_divisibility", inputs, "divisible", {"series": h, "divisor": g}, FAIL)
    return Check("hilbert_divisibility", inputs, "divisible",
                 {"series": h, "divisor": g, "quotient": quo,
                  "quotient_nonnegative": all(c >= 0 for c in quo.coeffs)}, PASS)


def check_grana_factorization(A: NicholsAlgebra, subset, B1: NicholsAlgebra | None = None) -> Check:
    """H_B = H_K * H_{B'} coefficient-wise."""
    inputs = {"algebra": _id(A), "subset": _labels(subset)}
    try:
        B1 = _prepare(A, subset, B1)
    except BuildError as exc:
        return Check("grana_factorization", inputs, None, None, skipped(str(exc)))
    if not B1.complete:
        return Check("grana_factorization", inputs, None, None, skipped("sub-algebra build incomplete"))
    hk = HilbertSeries(tuple(kernel_intersection(A, subset)["dims"]))
    prod = hk * hilbert(B1)
    h = hilbert(A)
    return Check("grana_factorization", inputs, h, {"kernel": hk, "sub": hilbert(B1), "product": prod},
                 PASS if prod == h else FAIL)


def check_cyclic_balance(A: NicholsAlgebra, expected=None, window=None) -> Check:
    """Balanced-k set by division and by class sums; both must agree.

    ``expected`` is compared with the computed set restricted to ``window``
    (all k when None); the full set is always reported.
    """
    h = hilbert(A)
    by_div = balanced_set(h)
    by_cls = {k for k in range(2, h.degree + 2)
              if len(set(A.graded_dims(("cyclic", k)).values())) == 1}
    ok = by_div == by_cls == balanced_set_by_classes(h) and A.m in by_div
    seen = by_div if window is None else {k for k in by_div if k in window}
    if expected is not None:
        ok = ok and seen == set(expected)
    computed = {"division": sorted(by_div), "class_sums": sorted(by_cls)}
    if window is not None:
        computed["window"] = [min(window), max(window)]
        computed["in_window"] = sorted(seen)
    return Check("cyclic_balance", {"algebra": _id(A)}, sorted(expected) if expected else "consistent",
                 computed, PASS if ok else FAIL)


def check_square_divisibility(A: NicholsAlgebra) -> Check:
    """(m)_t^2 divides H_B."""
    h = hilbert(A)
    g = q_poly(A.m) ** 2
    try:
        quo = divide(h, g)
        return Check("square_divisibility", {"algebra": _id(A)}, "divisible",
                     {"divisor": g, "quotient": quo}, PASS)
    except NotDivisible:
        return Check("square_divisibility", {"algebra": _id(A)}, "divisible", {"divisor": g}, FAIL)


def subrack_report(A: NicholsAlgebra, subset, dim_check: bool = True) -> VerificationReport:
    rep = VerificationReport(_id(A))
    rep.add(check_subrack_admissibility(A.rack, subset))
    try:
        B1 = sub_algebra(A, subset)
    except BuildError as exc:
        for name in ("subalgebra_embedding", "hilbert_divisibility", "grana_factorization"):
            rep.add(Check(name, {"algebra": _id(A), "subset": _labels(subset)}, None, None, skipped(str(exc))))
        return rep
    rep.add(check_embedding(A, subset, B1))
    rep.add(check_hilbert_divisibility(A, subset, B1))
    rep.add(check_grana_factorization(A, subset, B1))
    if dim_check:
        rep.add(check_dim_divisibility(A, subset, B1))
    return rep


def full_report(names=None, limits: Limits | None = None, allow_large: bool = False,
                subracks: dict | None = None) -> VerificationReport:
    """Every applicable check on each named catalog algebra, in a deterministic order.

    ``subracks`` maps algebra names to extra subsets (0-based) to check in
    addition to every singleton.
    """
    from .catalog import ALGEBRAS, BALANCE_WINDOW, DESK, build_named, named

    names = list(DESK if names is None else names)
    rep = VerificationReport(",".join(names))
    for name in names:
        a = named(name)
        if not a.desk and not allow_large:
            rep.add(Check("build", {"algebra": name}, a.dim, None, skipped("exceeds desk scale")))
            continue
        A = build_named(name, limits, allow_large=allow_large)
        if not A.complete:
            rep.add(Check("build", {"algebra": name}, a.dim, A.dims, skipped("build incomplete")))
            continue
        rep.add(Check("dimension", {"algebra": name}, a.dim, A.dim, PASS if A.dim == a.dim else FAIL))
        rep.add(Check("hilbert_series", {"algebra": name}, a.hilbert, hilbert(A),
                      PASS if hilbert(A) == a.hilbert else FAIL))
        rep.add(check_cyclic_balance(A, ALGEBRAS[name].balanced, BALANCE_WINDOW))
        rep.add(check_square_divisibility(A))
        rep.add(check_inner_balanced(A))
        for t in range(A.n):
            rep.extend(subrack_report(A, {t}))
        for subset in (subracks or {}).get(name, []):
            rep.extend(subrack_report(A, subset))
    return rep

"""Degree-by-degree construction of Nichols algebras B(X, chi) with dim V_0 = 1.

A homogeneous element of degree d >= 1 vanishes in the Nichols algebra iff
all its braided derivations vanish.  Degree d+1 is therefore obtained from
degree d by writing down the derivations of every candidate product b e_u
(b a basis word of degree d) through

    d_t(b e_u) = delta_{t,u} b + chi(t, u) d_t(b) e_{t |> u}

and keeping a lexicographically first maximal independent set of
candidates.  Every basis vector is a monomial (a word in the e_t), which
makes the enveloping and inner-group gradings visible on the basis.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from . import linalg
from .cocycles import Cocycle, cocycle_order, extended_cocycle
from .racks import Rack, env_class, is_indecomposable

log = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 64
DEFAULT_MAX_TOTAL_DIM = 10**6


class BuildError(ValueError):
    pass


class IncompleteAlgebra(RuntimeError):
    """Raised by operations that need the whole algebra on a truncated build."""


@dataclass(frozen=True)
class Limits:
    max_degree: int = DEFAULT_MAX_DEGREE
    max_total_dim: int = DEFAULT_MAX_TOTAL_DIM

    def __post_init__(self):
        if self.max_degree < 1 or self.max_total_dim < 1:
            raise ValueError("limits must be positive")


@dataclass
class Degree:
    """Data of one homogeneous component B(d); maps are lists of image columns."""

    basis: list
    rmul: list = field(default_factory=list)      # [u][i]: B(d-1)_i * e_u in B(d)
    deriv: list = field(default_factory=list)     # [t][i]: d_t B(d)_i in B(d-1)
    opderiv: list = field(default_factory=list)   # [t][i]: d^op_t B(d)_i in B(d-1)
    gact: list = field(default_factory=list)      # [t][i]: g_t B(d)_i in B(d)
    ginv: list = field(default_factory=list)      # [t][i]: g_t^{-1} B(d)_i in B(d)
    lam: list = field(default_factory=list)       # [i]: tuple of chi-extension scalars, g_b(e_s)
    perm: list = field(default_factory=list)      # [i]: g_b as a permutation of X

    @property
    def dim(self) -> int:
        return len(self.basis)


class NicholsAlgebra:
    def __init__(self, rack: Rack, cocycle: Cocycle, limits: Limits):
        self.rack = rack
        self.cocycle = cocycle
        self.field = cocycle.field
        self.limits = limits
        self.q = cocycle.q
        self.m = cocycle_order(cocycle)
        self.degrees: list[Degree] = []
        self.complete = False
        self.build_seconds = 0.0
        self._index: list[dict] | None = None
        self._lmul: dict = {}
        self.name = None

    # -- basic data -----------------------------------------------------------

    def __repr__(self):
        state = "complete" if self.complete else "incomplete"
        return f"<NicholsAlgebra {self.name or ''} dim={self.dim} top={self.top_degree} {state}>"

    @property
    def n(self) -> int:
        return self.rack.size

    @property
    def dims(self) -> list[int]:
        """Graded dimensions dim B(0), dim B(1), ..., up to the top degree."""
        out = [d.dim for d in self.degrees]
        while out and out[-1] == 0:
            out.pop()
        return out

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def basis(self, d: int) -> list:
        if d < 0 or d >= len(self.degrees):
            return []
        return self.degrees[d].basis

    def index(self, d: int) -> dict:
        if self._index is None:
            self._index = [{w: i for i, w in enumerate(deg.basis)} for deg in self.degrees]
        return self._index[d]

    def require_complete(self):
        if not self.complete:
            raise IncompleteAlgebra("operation needs a complete build")

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for dd in self.dims:
            out.append(acc)
            acc += dd
        return out

    def inn_degree(self, d: int, i: int) -> tuple:
        """Inner-group degree g_{w_1} ... g_{w_d} of basis word i of degree d."""
        return self.degrees[d].perm[i]

    # -- elements ---------------------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {0: {0: self.field.one}})

    def e(self, t: int) -> "Element":
        return self.reduce_word((t,))

    def from_vector(self, d: int, vec: dict) -> "Element":
        return Element(self, {d: dict(vec)} if vec else {})

    def reduce_word(self, word) -> "Element":
        """The image of the monomial e_{w_1} ... e_{w_d}."""
        vec = {0: self.field.one}
        d = 0
        for u in word:
            if not 0 <= u < self.n:
                raise ValueError(f"letter {u} out of range")
            d += 1
            if d >= len(self.degrees):
                self._check_beyond(d)
                return self.zero()
            vec = linalg.matvec(self.degrees[d].rmul[u], vec)
            if not vec:
                return self.zero()
        return self.from_vector(d, vec)

    def _check_beyond(self, d):
        if not self.complete:
            raise IncompleteAlgebra(f"degree {d} was not computed")

    # -- linear maps on homogeneous vectors ------------------------------------

    def right_mul_vec(self, d: int, vec: dict, u: int) -> dict:
        if d + 1 >= len(self.degrees):
            self._check_beyond(d + 1)
            return {}
        return linalg.matvec(self.degrees[d + 1].rmul[u], vec)

    def left_mul_vec(self, d: int, vec: dict, t: int) -> dict:
        cols = self.lmul_matrix(d, t)
        if cols is None:
            return {}
        return linalg.matvec(cols, vec)

    def lmul_matrix(self, d: int, t: int):
        """Columns of v -> e_t v on B(d), or None beyond the top degree."""
        if d + 1 >= len(self.degrees):
            self._check_beyond(d + 1)
            return None
        key = (d, t)
        if key in self._lmul:
            return self._lmul[key]
        one = self.field.one
        if d == 0:
            cols = [linalg.matvec(self.degrees[1].rmul[t], {0: one})]
        else:
            prev = self.lmul_matrix(d - 1, t)
            rm = self.degrees[d + 1].rmul
            cols = []
            for w in self.degrees[d].basis:
                i = self.index(d - 1)[w[:-1]]
                cols.append(linalg.matvec(rm[w[-1]], prev[i]) if prev is not None else {})
        self._lmul[key] = cols
        return cols

    # -- building -------------------------------------------------------------

    def _init_degree_zero(self):
        F = self.field
        n = self.n
        deg0 = Degree(basis=[()])
        deg0.deriv = [[{}] for _ in range(n)]
        deg0.opderiv = [[{}] for _ in range(n)]
        deg0.gact = [[{0: F.one}] for _ in range(n)]
        deg0.ginv = [[{0: F.one}] for _ in range(n)]
        deg0.lam = [tuple(F.one for _ in range(n))]
        deg0.perm = [tuple(range(n))]
        self.degrees = [deg0]

    def _next_degree(self) -> Degree:
        F = self.field
        one = F.one
        n = self.n
        tab = self.rack.table
        inv_tab = self.rack.inverse_table
        chi = self.cocycle.matrix
        d = len(self.degrees) - 1
        cur = self.degrees[d]
        D = cur.dim
        rmul_cur = cur.rmul if d >= 1 else None

        ech = linalg.Echelon(one, track=True)
        new_basis = []
        new_rmul = [[None] * D for _ in range(n)]
        deriv_rows = []
        parents = []
        for i in range(D):
            dcols = [cur.deriv[t][i] for t in range(n)]
            for u in range(n):
                vec: dict = {}
                for t in range(n):
                    if t == u:
                        key = t * D + i
                        vec[key] = vec.get(key, F.zero) + one
                        if not vec[key]:
                            del vec[key]
                    dt = dcols[t]
                    if dt:
                        coef = chi[t][u]
                        cols = rmul_cur[tab[t][u]]
                        base = t * D
                        for k, a in dt.items():
                            ca = coef * a
                            for j, b in cols[k].items():
                                key = base + j
                                w = vec.get(key)
                                if w is None:
                                    vec[key] = ca * b
                                else:
                                    w = w + ca * b
                                    if w:
                                        vec[key] = w
                                    else:
                                        del vec[key]
                res = ech.add(vec)
                if res is None:
                    k = len(new_basis)
                    new_basis.append(cur.basis[i] + (u,))
                    new_rmul[u][i] = {k: one}
                    deriv_rows.append(vec)
                    parents.append((i, u))
                else:
                    new_rmul[u][i] = res
        nxt = Degree(basis=new_basis, rmul=new_rmul)
        K = len(new_basis)
        # derivations of the new basis words
        nxt.deriv = [[{} for _ in range(K)] for _ in range(n)]
        for k, vec in enumerate(deriv_rows):
            for key, a in vec.items():
                t, j = divmod(key, D)
                nxt.deriv[t][k][j] = a
        # g-action data and opposite derivations
        nxt.gact = [[None] * K for _ in range(n)]
        nxt.ginv = [[None] * K for _ in range(n)]
        nxt.opderiv = [[None] * K for _ in range(n)]
        nxt.lam = [None] * K
        nxt.perm = [None] * K
        for k, (i, u) in enumerate(parents):
            lam_b = cur.lam[i]
            perm_b = cur.perm[i]
            nxt.lam[k] = tuple(chi[u][s] * lam_b[tab[u][s]] for s in range(n))
            nxt.perm[k] = tuple(perm_b[tab[u][s]] for s in range(n))
            for t in range(n):
                s = tab[t][u]
                nxt.gact[t][k] = linalg.scale(chi[t][u], linalg.matvec(new_rmul[s], cur.gact[t][i]))
                s = inv_tab[t][u]
                nxt.ginv[t][k] = linalg.scale(one / chi[t][s], linalg.matvec(new_rmul[s], cur.ginv[t][i]))
                # d^op_t(b e_u) = d^op_t(b) e_u + lambda(b, u) delta_{t, b|>u} b
                od = linalg.matvec(rmul_cur[u], cur.opderiv[t][i]) if d >= 1 else {}
                if perm_b[u] == t:
                    linalg.axpy(od, lam_b[u], {i: one})
                nxt.opderiv[t][k] = od
        return nxt

    def _build(self):
        start = time.perf_counter()
        self._init_degree_zero()
        total = 1
        while True:
            d = len(self.degrees)
            if d > self.limits.max_degree:
                break
            nxt = self._next_degree()
            self.degrees.append(nxt)
            total += nxt.dim
            log.debug("degree %d: dim %d (total %d)", d, nxt.dim, total)
            if nxt.dim == 0:
                self.complete = True
                break
            if total > self.limits.max_total_dim:
                break
        self._index = None
        self.build_seconds = time.perf_counter() - start

    # -- gradings ------------------------------------------------------------

    def graded_dims(self, scheme="Z") -> dict:
        """Dimensions of the homogeneous components for a grading scheme.

        ``scheme`` is "Z", ("cyclic", k), "inn" or "env".  Inner-group
        degrees are permutations (tuples); enveloping degrees are the
        canonical (lexicographically least) words of the rewrite classes.
        """
        if scheme == "Z":
            return {d: dd for d, dd in enumerate(self.dims)}
        if isinstance(scheme, tuple) and scheme[0] == "cyclic":
            k = scheme[1]
            out = {j: 0 for j in range(k)}
            for d, dd in enumerate(self.dims):
                out[d % k] += dd
            return out
        if scheme == "inn":
            out: dict = {}
            for d in range(len(self.dims)):
                for p in self.degrees[d].perm:
                    out[p] = out.get(p, 0) + 1
            return out
        if scheme == "env":
            out = {}
            for d in range(len(self.dims)):
                for w in self.degrees[d].basis:
                    c = env_class(self.rack, w).canonical
                    out[c] = out.get(c, 0) + 1
            return out
        raise ValueError(f"unknown grading scheme {scheme!r}")

    def inn_component(self, d: int, g) -> list[int]:
        return [i for i, p in enumerate(self.degrees[d].perm) if p == g]


class Element:
    """An element of a Nichols algebra: {degree: sparse coordinate vector}."""

    __slots__ = ("algebra", "comps")

    def __init__(self, algebra: NicholsAlgebra, comps: dict):
        self.algebra = algebra
        self.comps = {d: v for d, v in comps.items() if v}

    def _same(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        one = self.algebra.field.one
        comps = {d: dict(v) for d, v in self.comps.items()}
        for d, v in other.comps.items():
            linalg.axpy(comps.setdefault(d, {}), one, v)
        return Element(self.algebra, comps)

    def __neg__(self):
        return Element(self.algebra, {d: {k: -a for k, a in v.items()} for d, v in self.comps.items()})

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def scaled(self, c) -> "Element":
        c = self.algebra.field(c)
        return Element(self.algebra, {d: linalg.scale(c, v) for d, v in self.comps.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.comps)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return other.algebra is self.algebra and self.comps == other.comps

    def __hash__(self):  # pragma: no cover - elements are mutable-looking values
        return hash(tuple(sorted((d, tuple(sorted(v))) for d, v in self.comps.items())))

    @property
    def is_homogeneous(self) -> bool:
        return len(self.comps) <= 1

    @property
    def degree(self):
        if not self.comps:
            return None
        if len(self.comps) > 1:
            raise ValueError("inhomogeneous element")
        return next(iter(self.comps))

    def component(self, d: int) -> "Element":
        return Element(self.algebra, {d: self.comps.get(d, {})})

    def terms(self):
        """(word, coefficient) pairs over the monomial basis."""
        A = self.algebra
        for d in sorted(self.comps):
            for i in sorted(self.comps[d]):
                yield A.degrees[d].basis[i], self.comps[d][i]

    def __repr__(self):
        F = self.algebra.field
        parts = []
        for w, c in self.terms():
            mono = "*".join(f"e{x + 1}" for x in w) or "1"
            parts.append(f"({F.format(c)}){mono}")
        return " + ".join(parts) or "0"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def build(rack: Rack, cocycle: Cocycle, limits: Limits | None = None, name: str | None = None) -> NicholsAlgebra:
    if cocycle.rack != rack:
        raise BuildError("cocycle lives on a different rack")
    if not is_indecomposable(rack):
        raise BuildError("decomposable racks are not supported")
    A = NicholsAlgebra(rack, cocycle, limits or Limits())
    A.name = name
    if A.m is None:
        raise BuildError("cocycle order is infinite")
    A._build()
    return A


def multiply(x: Element, y: Element) -> Element:
    if y.algebra is not x.algebra:
        raise ValueError("elements of different algebras")
    A = x.algebra
    out: dict = {}
    for dy, vy in y.comps.items():
        for k, cy in vy.items():
            word = A.degrees[dy].basis[k]
            for dx, vx in x.comps.items():
                vec = vx
                d = dx
                for u in word:
                    vec = A.right_mul_vec(d, vec, u)
                    d += 1
                    if not vec:
                        break
                if vec:
                    linalg.axpy(out.setdefault(d, {}), cy, vec)
    return Element(A, out)


def _apply(x: Element, mats_attr: str, t: int, shift: int) -> Element:
    A = x.algebra
    out = {}
    for d, v in x.comps.items():
        if d + shift < 0:
            continue
        cols = getattr(A.degrees[d], mats_attr)[t]
        r = linalg.matvec(cols, v)
        if r:
            out[d + shift] = r
    return Element(A, out)


def derivation(t: int, x: Element) -> Element:
    return _apply(x, "deriv", t, -1)


def op_derivation(t: int, x: Element) -> Element:
    return _apply(x, "opderiv", t, -1)


def g_action(t: int, x: Element) -> Element:
    return _apply(x, "gact", t, 0)


def g_action_inv(t: int, x: Element) -> Element:
    return _apply(x, "ginv", t, 0)


def left_mul(t: int, x: Element) -> Element:
    A = x.algebra
    out = {}
    for d, v in x.comps.items():
        r = A.left_mul_vec(d, v, t)
        if r:
            out[d + 1] = r
    return Element(A, out)


def braided_commutator(x: Element, y: Element) -> Element:
    """[x, y]_c = x y - (g_x y) x for homogeneous x.

    Homogeneity is with respect to the inner-group grading, so each term of
    x must act on y through the same permutation and scalars; we apply the
    braiding term by term over the monomial basis.
    """
    A = x.algebra
    if not x.is_homogeneous:
        raise ValueError("braided commutator needs a homogeneous first argument")
    if not x:
        return A.zero()
    total = multiply(x, y)
    for w, c in x.terms():
        gy = y
        for letter in reversed(w):
            gy = g_action(letter, gy)
        total = total - multiply(gy, A.from_vector(len(w), {A.index(len(w))[w]: c}))
    return total


def nilpotency_order(x: Element):
    """Minimal k with x^k = 0, or None when x has a nonzero degree-0 part."""
    A = x.algebra
    A.require_complete()
    if not x:
        return 1
    if 0 in x.comps:
        return None
    p = x
    k = 1
    while p:
        p = p * x
        k += 1
        if k > A.top_degree + 2:  # pragma: no cover - positive degree elements are nilpotent
            raise AssertionError("nilpotency bound exceeded")
    return k


def kernel_intersection(A: NicholsAlgebra, subset, identity=None) -> dict:
    """Graded dimensions of K = intersection of ker d_t over t in ``subset``.

    Returns {"dims": [...], "identity_dim": dim(K cap B(e))} where e is the
    identity of the inner group (or the element ``identity``).
    """
    A.require_complete()
    subset = sorted(set(subset))
    if not subset:
        raise ValueError("subset must be non-empty")
    if any(not 0 <= t < A.n for t in subset):
        raise ValueError("subset is not contained in X")
    e = identity if identity is not None else tuple(range(A.n))
    one = A.field.one
    dims = []
    e_dim = 0
    for d, dd in enumerate(A.dims):
        if d == 0:
            dims.append(1)
            e_dim += 1 if A.degrees[0].perm[0] == e else 0
            continue
        D = A.dims[d - 1]
        cols = []
        for i in range(dd):
            col = {}
            for pos, t in enumerate(subset):
                for j, a in A.degrees[d].deriv[t][i].items():
                    col[pos * D + j] = a
            cols.append(col)
        dims.append(dd - linalg.rank(cols, one))
        comp = A.inn_component(d, e)
        if comp:
            e_dim += len(comp) - linalg.rank([cols[i] for i in comp], one)
    return {"dims": dims, "identity_dim": e_dim}


def kernel_basis(A: NicholsAlgebra, d: int, subset, op: bool = False) -> list[dict]:
    """Basis (sparse vectors over B(d)) of the common kernel of d_t (or d^op_t), t in subset."""
    if d == 0:
        return [{0: A.field.one}]
    attr = "opderiv" if op else "deriv"
    D = A.dims[d - 1] if d - 1 < len(A.dims) else 0
    cols = []
    for i in range(A.degrees[d].dim):
        col = {}
        for pos, t in enumerate(subset):
            for j, a in getattr(A.degrees[d], attr)[t][i].items():
                col[pos * D + j] = a
        cols.append(col)
    return linalg.nullspace(cols, A.field.one)

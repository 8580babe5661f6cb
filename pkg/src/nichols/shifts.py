"""Shift operators on a finite-dimensional Nichols algebra.

All maps here are assembled as matrices on the full algebra, indexed by the
global basis (degree 0 first, then degree 1, ...).  For t in X with
m = ord chi every element decomposes uniquely as x = sum_j v_j e_t^j with
v_j in ker d_t, and

    phi_t(x) = v_{m-1} + sum_{j >= 1} v_{j-1} e_t^j
    psi_t(x) = d_t^{m-1}(x) + e_t g_t^{-1}(x)
    xi_t(x)  = (d^op_t)^{m-1}(x) + e_t x
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg, polys
from .algebra import Element, NicholsAlgebra, derivation, g_action_inv, left_mul, op_derivation
from .scalars import q_factorial


class ShiftError(RuntimeError):
    pass


@dataclass
class GradedLinearMap:
    """A linear endomorphism of B stored by global image columns."""

    algebra: NicholsAlgebra
    cols: list
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.cols)

    def apply(self, x: Element) -> Element:
        A = self.algebra
        return from_global(A, linalg.matvec(self.cols, to_global(x)))

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    def __matmul__(self, other: "GradedLinearMap") -> "GradedLinearMap":
        return GradedLinearMap(self.algebra, linalg.compose(self.cols, other.cols),
                               f"{self.name}{other.name}")

    def __pow__(self, k: int) -> "GradedLinearMap":
        out = identity_map(self.algebra)
        for _ in range(k):
            out = self @ out
        return out

    def is_identity(self) -> bool:
        one = self.algebra.field.one
        return all(c == {i: one} for i, c in enumerate(self.cols))

    def block(self, d: int, d2: int) -> list:
        """Component B(d) -> B(d2) as local columns."""
        off = self.algebra.offsets()
        dims = self.algebra.dims
        lo, hi = off[d2], off[d2] + dims[d2]
        return [{k - lo: a for k, a in self.cols[off[d] + i].items() if lo <= k < hi}
                for i in range(dims[d])]

    def image(self, vectors) -> list:
        return [linalg.matvec(self.cols, v) for v in vectors]

    def rank(self) -> int:
        return linalg.rank(self.cols, self.algebra.field.one)


def to_global(x: Element) -> dict:
    off = x.algebra.offsets()
    out = {}
    for d, v in x.comps.items():
        for i, a in v.items():
            out[off[d] + i] = a
    return out


def from_global(A: NicholsAlgebra, vec: dict) -> Element:
    off = A.offsets()
    dims = A.dims
    comps: dict = {}
    d = 0
    for k in sorted(vec):
        while k >= off[d] + dims[d]:
            d += 1
        comps.setdefault(d, {})[k - off[d]] = vec[k]
    return Element(A, comps)


def basis_elements(A: NicholsAlgebra):
    for d, dd in enumerate(A.dims):
        for i in range(dd):
            yield A.from_vector(d, {i: A.field.one})


def identity_map(A: NicholsAlgebra) -> GradedLinearMap:
    return GradedLinearMap(A, linalg.identity(A.dim, A.field.one), "1")


def map_from_function(A: NicholsAlgebra, fn, name="") -> GradedLinearMap:
    A.require_complete()
    return GradedLinearMap(A, [to_global(fn(b)) for b in basis_elements(A)], name)


# ---------------------------------------------------------------------------
# e_t-adic decompositions
# ---------------------------------------------------------------------------

def _normalizer(A: NicholsAlgebra):
    return _inv_factorial(A, A.m - 1)


def right_power(x: Element, t: int, j: int) -> Element:
    e = x.algebra.e(t)
    for _ in range(j):
        x = x * e
    return x


def left_power(x: Element, t: int, j: int) -> Element:
    for _ in range(j):
        x = left_mul(t, x)
    return x


def _iterate(fn, t, x, k):
    for _ in range(k):
        x = fn(t, x)
    return x


def decompose_right(x: Element, t: int) -> list:
    """[v_0, ..., v_{m-1}] with x = sum v_j e_t^j and d_t v_j = 0."""
    A = x.algebra
    A.require_complete()
    out = [None] * A.m
    rest = x
    for j in range(A.m - 1, -1, -1):
        v = _iterate(derivation, t, rest, j).scaled(_inv_factorial(A, j))
        out[j] = v
        rest = rest - right_power(v, t, j)
    if rest:
        raise ShiftError("right decomposition did not terminate")
    return out


def decompose_left(x: Element, t: int) -> list:
    """[v_0, ..., v_{m-1}] with x = sum e_t^j v_j and d^op_t v_j = 0."""
    A = x.algebra
    A.require_complete()
    out = [None] * A.m
    rest = x
    for j in range(A.m - 1, -1, -1):
        v = _iterate(op_derivation, t, rest, j).scaled(_inv_factorial(A, j))
        out[j] = v
        rest = rest - left_power(v, t, j)
    if rest:
        raise ShiftError("left decomposition did not terminate")
    return out


def _inv_factorial(A, j):
    c = q_factorial(A.q, j)
    if not c:
        raise ShiftError(f"({j})_q! vanishes below the cocycle order")
    return A.field.one / c


# ---------------------------------------------------------------------------
# the shifts
# ---------------------------------------------------------------------------

def _phi_apply(x: Element, t: int) -> Element:
    vs = decompose_right(x, t)
    out = vs[-1]
    for j in range(1, len(vs)):
        out = out + right_power(vs[j - 1], t, j)
    return out


def phi_closed_form(x: Element, t: int) -> Element:
    A = x.algebra
    return _iterate(derivation, t, x, A.m - 1).scaled(_normalizer(A)) + x * A.e(t)


def phi(A: NicholsAlgebra, t: int, check: bool = True) -> GradedLinearMap:
    cols = []
    for b in basis_elements(A):
        y = _phi_apply(b, t)
        if check and y != phi_closed_form(b, t):
            raise ShiftError(f"phi_{t + 1} disagrees with its closed form on {b}")
        cols.append(to_global(y))
    return GradedLinearMap(A, cols, f"phi{t + 1}")


def psi(A: NicholsAlgebra, t: int) -> GradedLinearMap:
    def fn(x):
        return _iterate(derivation, t, x, A.m - 1) + left_mul(t, g_action_inv(t, x))
    return map_from_function(A, fn, f"psi{t + 1}")


def xi(A: NicholsAlgebra, t: int) -> GradedLinearMap:
    def fn(x):
        return _iterate(op_derivation, t, x, A.m - 1) + left_mul(t, x)
    return map_from_function(A, fn, f"xi{t + 1}")


SHIFT_KINDS = {"phi": phi, "psi": psi, "xi": xi}


def shifts(A: NicholsAlgebra, kind: str = "phi") -> list:
    return [SHIFT_KINDS[kind](A, t) for t in range(A.n)]


def word_map(A: NicholsAlgebra, word, kind: str = "phi", cache=None) -> GradedLinearMap:
    """The product s_{w_1} ... s_{w_k} of shifts (rightmost applied first)."""
    gens = cache if cache is not None else {}
    out = identity_map(A)
    for t in reversed(tuple(word)):
        if t not in gens:
            gens[t] = SHIFT_KINDS[kind](A, t)
        out = gens[t] @ out
    out.name = "".join(f"{kind}{t + 1}" for t in word)
    return out


def orbit_span_dim(maps, start: dict, one) -> int:
    """Dimension of the span of the orbit of ``start`` under the monoid generated by ``maps``."""
    ech = linalg.Echelon(one)
    queue = [start]
    ech.add(start)
    while queue:
        v = queue.pop()
        for M in maps:
            w = linalg.matvec(M.cols, v)
            if w and ech.add(w) is None:
                queue.append(w)
    return ech.rank


# ---------------------------------------------------------------------------
# shift algebra
# ---------------------------------------------------------------------------

@dataclass
class ShiftAlgebraResult:
    """Dimension of a shift algebra with the bounds that certify it.

    ``lower`` comes from linear independence of word matrices (reduced mod p
    when ``method`` is "modp+bicommutant"), ``upper`` from the bicommutant
    (or equals ``lower`` for a direct closure).  ``dim`` is set only when
    the bounds meet.
    """

    dim: int | None
    by_class: dict
    lower: int
    upper: int
    method: str
    words: list = field(default_factory=list)


def _modp_value(F, x, p):
    if F.characteristic:
        return x.v % p
    num, den = int(x.numerator), int(x.denominator)
    if den % p == 0:
        raise ShiftError(f"denominator divisible by {p}")
    return num * pow(den, p - 2, p) % p


def _closure_exact(A, gens, maps):
    F = A.field
    N = A.dim
    m = A.m
    one = F.one

    def flat(cols):
        return {j * N + i: a for j, c in enumerate(cols) for i, a in c.items()}

    echs = [linalg.Echelon(one) for _ in range(m)]
    words = [()]
    identity = linalg.identity(N, one)
    echs[0].add(flat(identity))
    frontier = [((), identity)]
    while frontier:
        nxt = []
        for word, cols in frontier:
            for t in gens:
                prod = linalg.compose(maps[t].cols, cols)
                w = (t,) + word
                if echs[len(w) % m].add(flat(prod)) is None:
                    nxt.append((w, prod))
                    words.append(w)
        frontier = nxt
    return {k: echs[k].rank for k in range(m)}, words


def _closure_modp(A, gens, maps, p):
    import numpy as np

    from .modp import ModPEchelon, _matmul_mod

    F = A.field
    N = A.dim
    m = A.m
    dense = {}
    for t in gens:
        M = np.zeros((N, N))
        for j, c in enumerate(maps[t].cols):
            for i, a in c.items():
                M[i, j] = _modp_value(F, a, p)
        dense[t] = M
    # a word of length k has entries only in rows of class [j + k] against columns of class [j]
    cls = np.array([d % m for d, dd in enumerate(A.dims) for _ in range(dd)])
    support = [np.flatnonzero(((cls[:, None] - cls[None, :]) % m == k).reshape(-1)) for k in range(m)]
    echs = [ModPEchelon(len(support[k]), p) for k in range(m)]
    I = np.eye(N)
    echs[0].add_rows(I.reshape(1, -1)[:, support[0]])
    words = [()]
    frontier = [((), I)]
    length = 0
    while frontier:
        length += 1
        k = length % m
        cands = [((t,) + w, _matmul_mod(dense[t], M, p)) for w, M in frontier for t in gens]
        batch = np.array([M.reshape(-1)[support[k]] for _, M in cands])
        keep = echs[k].add_rows(batch)
        frontier = [cands[i] for i in keep]
        words.extend(cands[i][0] for i in keep)
    return {k: echs[k].rank for k in range(m)}, words


def shift_algebra_dim(A: NicholsAlgebra, generators=None, maps=None, method: str = "auto",
                      p: int | None = None) -> ShiftAlgebraResult:
    """Dimension of the unital algebra generated by phi_t, t in ``generators``.

    phi_t moves the class of B(d) modulo m to the next class, so a product of
    k shifts only has entries in the blocks [j] -> [j + k].  The algebra is
    therefore the direct sum over k mod m of the spans of words of length
    congruent to k; each span is closed breadth-first under left
    multiplication.

    ``method``: "exact" closes over the base field; "modp" closes with dense
    arithmetic modulo a prime (exact over a prime field, a lower bound over
    Q) and, over Q, adds the exact bicommutant dimension as upper bound.
    "auto" uses "modp" over Q and prime fields and "exact" otherwise.
    """
    from .modp import DEFAULT_PRIME

    A.require_complete()
    gens = sorted(range(A.n) if generators is None else generators)
    if maps is None:
        maps = {t: phi(A, t) for t in gens}
    F = A.field
    prime_field = F.characteristic and getattr(F, "k", 1) == 1 and F.characteristic < 2**21
    if method == "auto":
        method = "modp" if (prime_field or F.characteristic == 0 and not hasattr(F, "degree")) else "exact"
    if method == "exact":
        by_class, words = _closure_exact(A, gens, maps)
        d = sum(by_class.values())
        return ShiftAlgebraResult(d, by_class, d, d, "exact", words)
    if method != "modp":
        raise ValueError(f"unknown method {method!r}")
    if prime_field:
        by_class, words = _closure_modp(A, gens, maps, F.characteristic)
        d = sum(by_class.values())
        return ShiftAlgebraResult(d, by_class, d, d, "modp", words)
    if F.characteristic or hasattr(F, "degree"):
        raise ValueError("modular closure needs Q or a prime field")
    by_class, words = _closure_modp(A, gens, maps, p or DEFAULT_PRIME)
    lower = sum(by_class.values())
    upper = bicommutant_dim(A, [maps[t] for t in gens])
    return ShiftAlgebraResult(lower if lower == upper else None, by_class, lower, upper,
                              "modp+bicommutant", words)


def bicommutant_dim(A: NicholsAlgebra, maps) -> int:
    """dim C(C(S)) for a set S of maps; bounds the algebra generated by S from above."""
    one = A.field.one
    C = linalg.commutant([M.cols for M in maps], A.dim, one)
    return linalg.commutant(C, A.dim, one, basis=False)


# ---------------------------------------------------------------------------
# order diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Finite:
    order: int

    def __str__(self):
        return f"Finite({self.order})"


@dataclass(frozen=True)
class Infinite:
    """Either r with M^r - I nilpotent of index ``nilpotency`` >= 2, or a non-cyclotomic factor."""

    r: int | None = None
    nilpotency: int | None = None
    eigenspaces: dict | None = None  # d -> dim of generalized kernel of Phi_d(M)
    witness: tuple | None = None

    def __str__(self):
        if self.r is not None:
            return f"Infinite(r={self.r}, (M^{self.r}-I)^{self.nilpotency}=0)"
        return f"Infinite(non-cyclotomic factor {self.witness})"


@dataclass(frozen=True)
class Unknown:
    bound: int

    def __str__(self):
        return f"Unknown(bound={self.bound})"


def _poly_eval_matvec(F, p, cols, v):
    """p(M) v by Horner."""
    out: dict = {}
    for c in reversed(p):
        out = linalg.matvec(cols, out)
        if c:
            linalg.axpy(out, c, v)
    return out


def _local_minpoly(F, cols, v):
    """Monic minimal polynomial of M restricted to the cyclic subspace of v."""
    one = F.one
    ech = linalg.Echelon(one, track=True)
    w = v
    k = 0
    while True:
        res = ech.add(w)
        if res is not None:
            # w = M^k v = sum res[j] M^j v
            p = [F.zero] * (k + 1)
            for j, a in res.items():
                p[j] = -a
            p[k] = one
            return polys.trim(p)
        w = linalg.matvec(cols, w)
        k += 1


def minimal_polynomial(F, cols) -> list:
    N = len(cols)
    p = [F.one]
    for i in range(N):
        e = {i: F.one}
        if _poly_eval_matvec(F, p, cols, e):
            p = polys.lcm(F, p, _local_minpoly(F, cols, e))
    return p


def _mat_poly(F, p, cols):
    N = len(cols)
    return [_poly_eval_matvec(F, p, cols, {i: F.one}) for i in range(N)]


def _order_of_x(F, p, bound):
    """Multiplicative order of x modulo p, or None beyond ``bound``."""
    if not p[0]:
        return None
    r = polys.mod(F, [F.zero, F.one], p)
    cur = r
    for k in range(1, bound + 1):
        if cur == [F.one]:
            return k
        cur = polys.mod(F, polys.mul(F, cur, r), p)
    return None


def _phi_bound(D: int) -> int:
    """Largest d with euler_phi(d) <= D, or 0."""
    from .scalars import euler_phi
    best = 0
    for d in range(1, 2 * D * D + 3):
        if euler_phi(d) <= D:
            best = d
    return best


def order_diagnostic(M, field=None, bound: int = 1000):
    """Finite(order) / Infinite(certificate) / Unknown(bound) for a square matrix.

    ``M`` is a GradedLinearMap or a list of image columns (then ``field`` is
    required).  In characteristic 0 the minimal polynomial decides: finite
    order iff it is squarefree with all irreducible factors cyclotomic.
    """
    if isinstance(M, GradedLinearMap):
        F = M.algebra.field
        cols = M.cols
    else:
        F = field
        cols = M
    N = len(cols)
    p = minimal_polynomial(F, cols)
    if F.characteristic:
        k = _order_of_x(F, p, max(bound, 10**6))
        return Finite(k) if k is not None else Unknown(max(bound, 10**6))
    from .scalars import cyclotomic_polynomial, euler_phi
    # cyclotomic part of the minimal polynomial
    r = 1
    cyc = {}
    D = polys.deg(p)
    for d in range(1, bound + 1):
        if euler_phi(d) > D:
            continue
        phid = polys.from_ints(F, cyclotomic_polynomial(d))
        if polys.deg(polys.gcd(F, p, phid)) > 0:
            cyc[d] = phid
            r = r * d // _gcd(r, d)
    big = polys.power(F, polys.x_power_minus_one(F, r), polys.deg(p))
    if polys.mod(F, big, p):
        rest = p
        for phid in cyc.values():
            while True:
                g = polys.gcd(F, rest, phid)
                if polys.deg(g) == 0:
                    break
                rest = polys.divmod_(F, rest, g)[0]
        ext = getattr(F, "degree", 1)
        if _phi_bound(polys.deg(rest) * ext) <= bound:
            return Infinite(witness=tuple(F.format(c) for c in polys.monic(F, rest)))
        return Unknown(bound)
    if polys.squarefree(F, p):
        return Finite(_order_of_x(F, p, r))
    # M^r is unipotent but not the identity
    Mr = _matrix_power(F, cols, r)
    U = [linalg.add(c, {i: -F.one}, F.one) for i, c in enumerate(Mr)]
    k = 1
    P = U
    while any(P):
        P = linalg.compose(U, P)
        k += 1
    eig = {}
    for d, phid in cyc.items():
        Q = _mat_poly(F, polys.power(F, phid, polys.deg(p)), cols)
        eig[d] = linalg.kernel_dim(Q, F.one)
    return Infinite(r=r, nilpotency=k, eigenspaces=eig)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _matrix_power(F, cols, r):
    out = linalg.identity(len(cols), F.one)
    for _ in range(r):
        out = linalg.compose(cols, out)
    return out

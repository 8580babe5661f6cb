"""Sparse exact linear algebra over the fields of :mod:`nichols.scalars`.

Vectors are dicts ``{index: nonzero scalar}``.  A linear map is stored as a
list of image vectors, one per source basis vector ("columns").
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush


def axpy(y: dict, a, x: dict) -> None:
    """y += a * x in place, dropping cancelled entries."""
    if not a:
        return
    for k, v in x.items():
        w = y.get(k)
        if w is None:
            y[k] = a * v
        else:
            w = w + a * v
            if w:
                y[k] = w
            else:
                del y[k]


def scale(a, x: dict) -> dict:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def add(x: dict, y: dict, one) -> dict:
    out = dict(x)
    axpy(out, one, y)
    return out


def matvec(cols, v: dict) -> dict:
    """Apply the map given by its image columns to the sparse vector v."""
    out: dict = {}
    for j, a in v.items():
        col = cols[j]
        if col:
            axpy(out, a, col)
    return out


class Echelon:
    """Incrementally maintained row echelon form.

    Rows are reduced against pivots by leading (smallest) column.  With
    ``track=True`` every pivot row remembers its expression in terms of
    the accepted input rows, so a dependent row is returned as coordinates
    with respect to the accepted rows, in acceptance order.
    """

    def __init__(self, one, track: bool = False):
        self.one = one
        self.track = track
        self.pivots: dict = {}  # column -> (row, combo)
        self.accepted = 0

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: dict):
        row = dict(row)
        combo: dict = {}
        heap = list(row)
        heapify(heap)
        pivots = self.pivots
        track = self.track
        while heap:
            c = heappop(heap)
            if c not in row:
                continue
            while heap and heap[0] == c:
                heappop(heap)
            piv = pivots.get(c)
            if piv is None:
                return row, combo, c
            a = row[c]
            prow, pcombo = piv
            for k, v in prow.items():
                w = row.get(k)
                if w is None:
                    row[k] = -a * v
                    heappush(heap, k)
                else:
                    w = w - a * v
                    if w:
                        row[k] = w
                    else:
                        del row[k]
            if track:
                axpy(combo, a, pcombo)
        return row, combo, None

    def contains(self, row: dict) -> bool:
        return self._reduce(row)[2] is None

    def add(self, row: dict):
        """Insert a row.

        Returns ``None`` when the row is independent (it becomes accepted row
        number ``self.accepted - 1``), else its coordinates over the accepted
        rows (``{}`` when ``track`` is off).
        """
        red, combo, lead = self._reduce(row)
        if lead is None:
            return combo
        inv = self.one / red[lead]
        red = {k: inv * v for k, v in red.items()}
        if self.track:
            t = {k: -inv * v for k, v in combo.items()}
            t[self.accepted] = inv
            self.pivots[lead] = (red, t)
        else:
            self.pivots[lead] = (red, None)
        self.accepted += 1
        return None


def rank(rows, one) -> int:
    ech = Echelon(one)
    for r in rows:
        if r:
            ech.add(r)
    return ech.rank


def sparse_rank(rows, one) -> int:
    """Rank by elimination with minimal-degree pivots (rows and pivot order chosen for sparsity).

    Unlike :class:`Echelon` this does not keep pivot rows, so it only
    answers the rank, but fill-in stays small on very sparse systems.
    """
    rows = {r: dict(v) for r, v in enumerate(rows) if v}
    cols: dict = {}
    for r, v in rows.items():
        for c in v:
            cols.setdefault(c, set()).add(r)
    heap = [(len(v), r) for r, v in rows.items()]
    heapify(heap)
    rank = 0
    while heap:
        size, r = heappop(heap)
        v = rows.get(r)
        if v is None or len(v) != size:
            continue
        if not v:
            del rows[r]
            continue
        c = min(v, key=lambda k: (len(cols[k]), k))
        del rows[r]
        for k in v:
            cols[k].discard(r)
        rank += 1
        inv = one / v[c]
        for r2 in list(cols[c]):
            w = rows[r2]
            f = -w[c] * inv
            for k, a in v.items():
                x = w.get(k)
                if x is None:
                    w[k] = f * a
                    cols[k].add(r2)
                else:
                    x = x + f * a
                    if x:
                        w[k] = x
                    else:
                        del w[k]
                        cols[k].discard(r2)
            heappush(heap, (len(w), r2))
        del cols[c]
    return rank


def kernel_dim(cols, one) -> int:
    """Dimension of the kernel of the map with the given image columns."""
    return len(cols) - rank(cols, one)


def nullspace(cols, one) -> list[dict]:
    """Basis of {x : sum_j x_j cols[j] = 0}, as sparse vectors over column indices."""
    ech = Echelon(one, track=True)
    order = []  # accepted column indices
    basis = []
    for j, c in enumerate(cols):
        res = ech.add(c)
        if res is None:
            order.append(j)
            continue
        v = {order[k]: -a for k, a in res.items()}
        v[j] = one
        basis.append(v)
    return basis


def column_space_basis(cols, one) -> list[int]:
    """Indices of a lexicographically first maximal independent subset of the columns."""
    ech = Echelon(one)
    out = []
    for j, c in enumerate(cols):
        if c and ech.add(c) is None:
            out.append(j)
    return out


def compose(a_cols, b_cols) -> list[dict]:
    """Columns of A o B."""
    return [matvec(a_cols, col) for col in b_cols]


def identity(n: int, one) -> list[dict]:
    return [{i: one} for i in range(n)]


def same_span(rows_a, rows_b, one) -> bool:
    ra = rank(rows_a, one)
    rb = rank(rows_b, one)
    return ra == rb == rank(list(rows_a) + list(rows_b), one)


def commutant(mats, n: int, one, basis: bool = True):
    """Basis of {X : X M = M X for all M in mats}; matrices are n column lists.

    With ``basis=False`` only the dimension is returned.
    """
    rows_of = []
    for cols in mats:
        rows = [{} for _ in range(n)]
        for k, c in enumerate(cols):
            for i, a in c.items():
                rows[i][k] = a
        rows_of.append(rows)
    # unknown x_{ik} has index i * n + k; equation (XM - MX)_{ij} has index
    # (mat, i, j).  Collect the system by unknowns (columns).
    zero = one - one
    system = [{} for _ in range(n * n)]
    base = 0
    for cols, rows in zip(mats, rows_of):
        for i in range(n):
            for j in range(n):
                eq = base + i * n + j
                for k, a in cols[j].items():
                    col = system[i * n + k]
                    col[eq] = col.get(eq, zero) + a
                for k, a in rows[i].items():
                    col = system[k * n + j]
                    col[eq] = col.get(eq, zero) - a
        base += n * n
    system = [{e: a for e, a in c.items() if a} for c in system]
    if not basis:
        return n * n - sparse_rank(system, one)
    out = []
    for v in nullspace(system, one):
        X = [{} for _ in range(n)]
        for u, a in v.items():
            i, k = divmod(u, n)
            X[k][i] = a
        out.append(X)
    return out

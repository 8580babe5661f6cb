"""Deterministic JSON snapshots of built algebras.

Bytes depend only on the inputs and limits: keys are sorted, sparse
matrices are written as [row, col, scalar] triplets in column order, and
scalars use the canonical text encoding of their field.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .algebra import Degree, Limits, NicholsAlgebra
from .cocycles import Cocycle
from .racks import Rack

FORMAT = "nichols-snapshot/1"
MATRICES = ("rmul", "deriv", "opderiv", "gact", "ginv")


def _triplets(F, cols):
    return [[i, j, F.format(a)] for j, c in enumerate(cols) for i, a in sorted(c.items())]


def _untriplets(F, trip, ncols):
    cols = [{} for _ in range(ncols)]
    for i, j, a in trip:
        cols[j][i] = F.parse(a)
    return cols


def to_json(A: NicholsAlgebra, matrices: bool = True) -> dict:
    F = A.field
    header = {
        "format": FORMAT,
        "name": A.name,
        "quandle": {"name": A.rack.name, **A.rack.to_json()},
        "cocycle": {"name": A.cocycle.name, **A.cocycle.to_json()},
        "field": str(F),
        "limits": {"max_degree": A.limits.max_degree, "max_total_dim": A.limits.max_total_dim},
        "complete": A.complete,
        "dim": A.dim,
        "dims": A.dims,
    }
    degrees = []
    for d, deg in enumerate(A.degrees):
        entry = {"degree": d, "dim": deg.dim, "basis": [[x + 1 for x in w] for w in deg.basis]}
        if matrices:
            prev = A.degrees[d - 1].dim if d else 0
            for key in MATRICES:
                mats = getattr(deg, key)
                if key == "rmul":
                    entry[key] = [_triplets(F, cols) for cols in mats] if d else []
                    entry["rmul_cols"] = prev
                else:
                    entry[key] = [_triplets(F, cols) for cols in mats]
        degrees.append(entry)
    return {"header": header, "degrees": degrees}


def dumps(A: NicholsAlgebra, matrices: bool = True) -> str:
    return json.dumps(to_json(A, matrices), sort_keys=True, separators=(",", ":")) + "\n"


def save(A: NicholsAlgebra, path, matrices: bool = True) -> Path:
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(dumps(A, matrices), encoding="utf-8")
    os.replace(tmp, path)
    return path


def from_json(data) -> NicholsAlgebra:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    h = data["header"]
    if h.get("format") != FORMAT:
        raise ValueError(f"not a snapshot: {h.get('format')!r}")
    rack = Rack.from_json(h["quandle"], name=h["quandle"].get("name"))
    coc = Cocycle.from_json(h["cocycle"], rack, name=h["cocycle"].get("name"))
    A = NicholsAlgebra(rack, coc, Limits(**h["limits"]))
    A.name = h.get("name")
    F = A.field
    degs = data["degrees"]
    if "deriv" not in degs[0]:
        # header-only snapshot: rebuild and compare
        from .algebra import build
        B = build(rack, coc, A.limits, name=A.name)
        if [[list(w) for w in d.basis] for d in B.degrees] != [[[x - 1 for x in w] for w in e["basis"]] for e in degs]:
            raise ValueError("rebuilt bases differ from the snapshot")
        return B
    A.degrees = []
    tab = rack.table
    chi = coc.matrix
    n = rack.size
    for d, e in enumerate(degs):
        basis = [tuple(x - 1 for x in w) for w in e["basis"]]
        K = len(basis)
        deg = Degree(basis=basis)
        deg.rmul = [_untriplets(F, t, e["rmul_cols"]) for t in e["rmul"]] if d else []
        for key in MATRICES[1:]:
            setattr(deg, key, [_untriplets(F, t, K) for t in e[key]])
        deg.lam, deg.perm = [], []
        for w in basis:
            lam = [F.one] * n
            perm = list(range(n))
            for s in range(n):
                cur = s
                for x in reversed(w):
                    lam[s] = lam[s] * chi[x][cur]
                    cur = tab[x][cur]
                perm[s] = cur
            deg.lam.append(tuple(lam))
            deg.perm.append(tuple(perm))
        A.degrees.append(deg)
    A.complete = h["complete"]
    return A


def load(path) -> NicholsAlgebra:
    return from_json(Path(path).read_text(encoding="utf-8"))


def cache_dir() -> Path | None:
    d = os.environ.get("NICHOLS_CACHE_DIR")
    return Path(d) if d else None


def cache_key(quandle: str, cocycle: str, field: str, limits: Limits) -> str:
    safe = "".join(ch if ch.isalnum() else "_" for ch in f"{quandle}-{cocycle}-{field}")
    return f"{safe}-d{limits.max_degree}-n{limits.max_total_dim}.json"

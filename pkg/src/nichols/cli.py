"""Command-line front end: ``nichols <command> ...``.

Machine output is JSON on stdout, human output is aligned text.  Exit codes:
0 success, 1 a check failed, 2 limits reached (incomplete build), 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, fields, replace
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from . import snapshot
from .algebra import BuildError, IncompleteAlgebra, Limits, build
from .catalog import ALGEBRAS, BALANCE_WINDOW, DESK, LargeAlgebraError, build_named, named
from .cocycles import Cocycle, CocycleError, catalog_cocycle, cocycle_order, validate_cocycle
from .racks import (CATALOG_NAMES, Rack, RackError, catalog_quandle, format_cycles, perm_order,
                    rack_degree, subracks)
from .series import balanced_set, factorize, hilbert

log = logging.getLogger("nichols")

EXIT_OK, EXIT_CHECK, EXIT_INCOMPLETE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class BuildConfig:
    quandle: str | None = None
    cocycle: str | None = None
    field: str | None = None
    algebra: str | None = None
    max_degree: int = 64
    max_total_dim: int = 10**6
    out: str | None = None
    allow_large: bool = False
    matrices: bool = True

    def __post_init__(self):
        if self.max_degree <= 0 or self.max_total_dim <= 0:
            raise InputError("limits must be positive")

    @property
    def limits(self) -> Limits:
        return Limits(max_degree=self.max_degree, max_total_dim=self.max_total_dim)

    @classmethod
    def from_toml(cls, path) -> "BuildConfig":
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        data = data.get("build", data)
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise InputError(f"unknown config keys: {', '.join(sorted(extra))}")
        return cls(**data)


# ---------------------------------------------------------------------------
# input resolution
# ---------------------------------------------------------------------------

def _read_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def resolve_quandle(src: str) -> Rack:
    if Path(src).is_file():
        return Rack.from_json(_read_json(src), name=Path(src).stem)
    return catalog_quandle(src)


def resolve_cocycle(src: str, rack: Rack, field: str | None) -> Cocycle:
    if Path(src).is_file():
        data = _read_json(src)
        if field:
            data = dict(data, field=field)
        try:
            return Cocycle.from_json(data, rack, name=Path(src).stem)
        except KeyError as exc:
            raise InputError(f"{src}: missing key {exc.args[0]!r}") from None
    if not field:
        raise InputError("a catalog cocycle needs --field")
    return catalog_cocycle(src, rack, field)


def build_from_config(cfg: BuildConfig):
    if cfg.algebra:
        a = named(cfg.algebra)
        if not a.desk and cfg.allow_large:
            log.warning("%s has dimension %d; building beyond desk scale", a.name, a.dim)
        return build_named(cfg.algebra, cfg.limits, allow_large=cfg.allow_large, field=cfg.field)
    if not (cfg.quandle and cfg.cocycle):
        raise InputError("give --algebra or both --quandle and --cocycle")
    rack = resolve_quandle(cfg.quandle)
    coc = resolve_cocycle(cfg.cocycle, rack, cfg.field)
    return build(rack, coc, cfg.limits)


def _catalog_cache_path(cache: Path, name: str, limits: Limits) -> Path:
    a = named(name)
    return cache / snapshot.cache_key(a.quandle, a.cocycle, a.field, limits)


def load_algebra(src: str, allow_large: bool = False):
    """A snapshot file, or a catalog name (cached under NICHOLS_CACHE_DIR when set)."""
    if Path(src).is_file():
        return snapshot.load(src)
    if src not in ALGEBRAS:
        raise InputError(f"{src!r} is neither a snapshot file nor a catalog algebra")
    cache = snapshot.cache_dir()
    if cache is not None:
        path = _catalog_cache_path(cache, src, Limits())
        if path.is_file():
            log.info("loading %s from %s", src, path)
            return snapshot.load(path)
    A = build_named(src, allow_large=allow_large)
    if cache is not None and A.complete:
        cache.mkdir(parents=True, exist_ok=True)
        snapshot.save(A, path)
    return A


def parse_labels(text: str) -> list:
    try:
        labels = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"bad label list {text!r}") from None
    if not labels or min(labels) < 1:
        raise InputError("labels are 1-based positive integers")
    return [x - 1 for x in labels]


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_quandle(args) -> int:
    if args.action == "list":
        rows = []
        for name in CATALOG_NAMES:
            r = catalog_quandle(name)
            rows.append((name, r.size, r.inner.order, rack_degree(r)))
        print(f"{'name':<8}{'size':>6}{'|Inn|':>8}{'n':>4}")
        for name, size, inn, deg in rows:
            print(f"{name:<8}{size:>6}{inn:>8}{deg:>4}")
        return EXIT_OK
    if not args.name:
        raise InputError(f"quandle {args.action} needs a name or file")
    rack = resolve_quandle(args.name)
    if args.action == "show":
        _emit({"name": rack.name, **rack.to_json(), "inner_order": rack.inner.order,
               "degree": rack_degree(rack), "g": [format_cycles(rack.g(t)) for t in range(rack.size)]})
    else:
        _emit([{"labels": s.labels(), "complement_generates_inn": s.complement_generates_inn}
               for s in subracks(rack)])
    return EXIT_OK


def cmd_cocycle(args) -> int:
    rack = resolve_quandle(args.quandle)
    coc = resolve_cocycle(args.source, rack, args.field)
    bad = validate_cocycle(coc)
    out = {"quandle": rack.name, "field": str(coc.field), "valid": bad is None}
    if bad is not None:
        F = coc.field
        out["failing_triple"] = [bad.t + 1, bad.s + 1, bad.r + 1]
        out["lhs"], out["rhs"] = F.format(bad.lhs), F.format(bad.rhs)
    else:
        try:
            m = cocycle_order(coc)
            out["m"] = m if m is not None else "infinite"
        except CocycleError as exc:
            out["m"] = None
            out["note"] = str(exc)
    if args.action == "show":
        out.update(coc.to_json())
    _emit(out)
    return EXIT_OK if bad is None else EXIT_CHECK


def cmd_build(args) -> int:
    cfg = BuildConfig.from_toml(args.config) if args.config else BuildConfig()
    overrides = {k: v for k, v in {
        "quandle": args.quandle, "cocycle": args.cocycle, "field": args.field, "algebra": args.algebra,
        "max_degree": args.max_degree, "max_total_dim": args.max_dim, "out": args.out}.items() if v is not None}
    if args.allow_large:
        overrides["allow_large"] = True
    if args.no_matrices:
        overrides["matrices"] = False
    cfg = replace(cfg, **overrides)
    t0 = time.perf_counter()
    A = build_from_config(cfg)
    elapsed = time.perf_counter() - t0
    out = cfg.out
    if out is None and snapshot.cache_dir() is not None:
        d = snapshot.cache_dir()
        d.mkdir(parents=True, exist_ok=True)
        if cfg.algebra and not cfg.field:
            out = _catalog_cache_path(d, cfg.algebra, cfg.limits)
        else:
            out = d / snapshot.cache_key(A.rack.name or "rack", A.cocycle.name or "cocycle", str(A.field),
                                         cfg.limits)
    if out is not None:
        snapshot.save(A, out, matrices=cfg.matrices)
    name = A.name or f"{A.rack.name}/{A.cocycle.name}"
    if A.complete:
        print(f"{name} dim={A.dim} top={A.top_degree} H={hilbert(A)} time={elapsed:.2f}s")
    else:
        print(f"{name} INCOMPLETE dims={list(A.dims)} time={elapsed:.2f}s")
    return EXIT_OK if A.complete else EXIT_INCOMPLETE


def cmd_hilbert(args) -> int:
    A = load_algebra(args.source)
    A.require_complete()
    h = hilbert(A)
    out = {"series": str(h), "dims": list(h.coeffs), "dim": h.total}
    if args.factorize:
        f = factorize(h)
        out["factorization"] = str(f) if f is not None else None
    if args.balanced:
        out["balanced_set"] = sorted(balanced_set(h))
    _emit(out)
    return EXIT_OK


def _scheme(text: str):
    if text in ("Z", "inn", "env"):
        return text
    if text.startswith("cyclic"):
        try:
            return ("cyclic", int(text.split(":", 1)[1] if ":" in text else text[6:].strip("()")))
        except ValueError:
            pass
    raise InputError(f"unknown scheme {text!r}; use Z, cyclic:k, inn or env")


def cmd_grading(args) -> int:
    A = load_algebra(args.source)
    A.require_complete()
    scheme = _scheme(args.scheme)
    dims = A.graded_dims(scheme)
    if scheme == "inn":
        rows = [{"element": format_cycles(g), "order": perm_order(g), "dim": dims.get(g, 0)}
                for g in sorted(A.rack.inner.elements, key=lambda g: (perm_order(g), g))]
    elif scheme == "env":
        rows = [{"class": [x + 1 for x in c], "dim": d}
                for c, d in sorted(dims.items(), key=lambda kv: (len(kv[0]), kv[0]))]
    else:
        rows = [{"degree": k, "dim": d} for k, d in sorted(dims.items())]
    _emit({"scheme": args.scheme, "components": rows, "total": sum(dims.values())})
    return EXIT_OK


def cmd_shifts(args) -> int:
    from . import shifts as sh

    A = load_algebra(args.source)
    A.require_complete()
    out = {"algebra": A.name, "dim": A.dim, "m": A.m}
    status = EXIT_OK
    if args.algebra_dim:
        r = sh.shift_algebra_dim(A, method=args.method)
        out["shift_algebra"] = {"dim": r.dim, "lower": r.lower, "upper": r.upper, "method": r.method,
                                "by_class": {str(k): v for k, v in r.by_class.items()}}
        if r.dim is None:
            status = EXIT_CHECK
    if args.word:
        word = parse_labels(args.word)
        if max(word) >= A.n:
            raise InputError(f"labels must be at most {A.n}")
        M = sh.word_map(A, word, args.kind)
        entry = {"word": [t + 1 for t in word], "kind": args.kind}
        if args.order:
            verdict = sh.order_diagnostic(M)
            entry["order"] = str(verdict)
            if isinstance(verdict, sh.Infinite) and verdict.eigenspaces:
                entry["eigenspaces"] = {f"Phi_{d}": k for d, k in verdict.eigenspaces.items()}
        out["word_map"] = entry
    if args.check_invariants:
        checks = {}
        one = A.field.one
        unit = {0: one}
        phis = sh.shifts(A, "phi")
        checks["phi_power_m_is_identity"] = all((M ** A.m).is_identity() for M in phis)
        for kind in ("phi", "psi", "xi"):
            maps = phis if kind == "phi" else sh.shifts(A, kind)
            checks[f"{kind}_bijective"] = all(M.rank() == A.dim for M in maps)
            checks[f"{kind}_orbit_of_one_spans"] = sh.orbit_span_dim(maps, unit, one) == A.dim
        out["invariants"] = checks
        if not all(checks.values()):
            status = EXIT_CHECK
    _emit(out)
    return status


def cmd_verify(args) -> int:
    from . import verify as vf

    if args.catalog or args.source is None:
        names = [s.strip() for s in args.names.split(",")] if args.names else None
        rep = vf.full_report(names, allow_large=args.allow_large)
    else:
        A = load_algebra(args.source, allow_large=args.allow_large)
        A.require_complete()
        rep = vf.VerificationReport(A.name or "algebra")
        if args.subrack:
            rep.extend(vf.subrack_report(A, set(parse_labels(args.subrack))))
        if args.all or not args.subrack:
            if A.name in ALGEBRAS:
                rep.add(vf.check_cyclic_balance(A, ALGEBRAS[A.name].balanced, BALANCE_WINDOW))
            else:
                rep.add(vf.check_cyclic_balance(A))
            rep.add(vf.check_square_divisibility(A))
            rep.add(vf.check_inner_balanced(A))
            for t in range(A.n):
                rep.extend(vf.subrack_report(A, {t}))
    text = rep.dumps()
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(rep.summary())
    else:
        print(text)
    return EXIT_OK if rep.ok else EXIT_CHECK


def cmd_tables(args) -> int:
    from .tables import TABLES, AlgebraSource, all_tables

    which = args.which.split(",") if args.which else None
    for w in which or []:
        if w not in TABLES:
            raise InputError(f"unknown table {w!r}; known: {', '.join(TABLES)}")
    src = AlgebraSource(loader=lambda name: load_algebra(name, args.allow_large), allow_large=args.allow_large)
    tables = all_tables(src, which)
    if args.json:
        _emit([t.to_json() for t in tables])
    else:
        print("\n\n".join(t.render() for t in tables))
    return EXIT_OK if all(t.all_match for t in tables) else EXIT_CHECK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nichols", description="Finite-dimensional Nichols algebras over racks.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quandle", help="catalog quandles")
    q.add_argument("action", choices=["list", "show", "subracks"])
    q.add_argument("name", nargs="?", help="catalog name or JSON file")
    q.set_defaults(func=cmd_quandle)

    c = sub.add_parser("cocycle", help="validate or show a 2-cocycle")
    c.add_argument("action", choices=["validate", "show"])
    c.add_argument("source", help="cocycle JSON file or catalog name")
    c.add_argument("--quandle", required=True)
    c.add_argument("--field")
    c.set_defaults(func=cmd_cocycle)

    b = sub.add_parser("build", help="build a Nichols algebra and write a snapshot")
    b.add_argument("--algebra", help="catalog name such as 3A")
    b.add_argument("--quandle")
    b.add_argument("--cocycle")
    b.add_argument("--field")
    b.add_argument("--max-degree", type=int)
    b.add_argument("--max-dim", type=int)
    b.add_argument("--out")
    b.add_argument("--config", help="TOML file with build settings")
    b.add_argument("--allow-large", action="store_true")
    b.add_argument("--no-matrices", action="store_true", help="write bases only")
    b.set_defaults(func=cmd_build)

    h = sub.add_parser("hilbert", help="Hilbert series of a snapshot or catalog algebra")
    h.add_argument("source")
    h.add_argument("--factorize", action="store_true")
    h.add_argument("--balanced", action="store_true")
    h.set_defaults(func=cmd_hilbert)

    g = sub.add_parser("grading", help="graded dimensions")
    g.add_argument("source")
    g.add_argument("--scheme", default="Z", help="Z, cyclic:k, inn or env")
    g.set_defaults(func=cmd_grading)

    s = sub.add_parser("shifts", help="shift operators")
    s.add_argument("source")
    s.add_argument("--algebra-dim", action="store_true")
    s.add_argument("--method", default="auto", choices=["auto", "exact", "modp"])
    s.add_argument("--word", help="comma separated labels, e.g. 1,2")
    s.add_argument("--kind", default="phi", choices=["phi", "psi", "xi"])
    s.add_argument("--order", action="store_true")
    s.add_argument("--check-invariants", action="store_true")
    s.set_defaults(func=cmd_shifts)

    v = sub.add_parser("verify", help="divisibility and balance checks")
    v.add_argument("source", nargs="?")
    v.add_argument("--subrack", help="comma separated labels")
    v.add_argument("--all", action="store_true")
    v.add_argument("--catalog", action="store_true", help="check every desk-scale catalog algebra")
    v.add_argument("--names", help="restrict --catalog to these algebras")
    v.add_argument("--allow-large", action="store_true")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="recompute the reference tables")
    t.add_argument("--which", help=f"comma separated subset of: {', '.join(['algebras', 'quotients', 'balance', 'inn', 'env'])}")
    t.add_argument("--json", action="store_true")
    t.add_argument("--allow-large", action="store_true")
    t.set_defaults(func=cmd_tables)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except IncompleteAlgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except (InputError, LargeAlgebraError, BuildError, RackError, CocycleError, KeyError, ValueError,
            FileNotFoundError, tomllib.TOMLDecodeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


__all__ = ["BuildConfig", "main", "make_parser", "DESK"]

"""Command-line interface: ``monoidtab <subcommand> [options]``.

Exit status is 0 when every asserted check passes, 1 when a check fails or is
inconclusive, and 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import threading
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, cache
from .partitions import Partition, ShapeError, SkewShape
from .report import REPORT_SCHEMA, Report, combine

_print_lock = threading.Lock()

GOLDEN_VERSION = "v1"


class ConfigError(ValueError):
    pass


# -- argument helpers ------------------------------------------------------

def _kind(text: str):
    from .monoids import MonoidKind

    try:
        return MonoidKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _shape_from(args, default_mu: bool = True) -> SkewShape:
    shape = getattr(args, "shape", None)
    lam = getattr(args, "lam", None)
    if shape:
        try:
            return SkewShape.parse(shape)
        except ShapeError as exc:
            raise ConfigError(str(exc)) from None
    if lam is None:
        raise ConfigError("a shape is required: give --lambda (and optionally --mu) or --shape")
    mu = getattr(args, "mu", None) or Partition()
    if not lam.contains(mu):
        raise ConfigError(f"--mu {mu} is not contained in --lambda {lam}")
    return SkewShape(lam, mu)


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ConfigError(f"--{name} is required for '{args.command}'")


def _positive(args, *names, upper: int | None = None):
    for name in names:
        v = getattr(args, name)
        if v < 0 or (name != "r" and v < 1):
            raise ConfigError(f"--{name} must be positive, got {v}")
        if upper is not None and v > upper:
            raise ConfigError(f"--{name} must be at most {upper}, got {v}")


# -- subcommands -------------------------------------------------------------

def cmd_tableaux(args) -> Report:
    from .tableaux import enumerate_tableaux

    _need(args, "n")
    shape = _shape_from(args)
    kind = args.tableau_kind
    try:
        tabs = enumerate_tableaux(shape, args.n, kind)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return Report("tableaux", {"shape": str(shape), "n": args.n, "kind": kind}, "pass",
                  {"count": len(tabs), "tableaux": [t.to_json() for t in tabs]})


def cmd_dims(args) -> Report:
    from .functor import build_R_module, expected_R_dim

    _need(args, "n")
    _positive(args, "n", upper=6)
    shape = _shape_from(args)
    kind = args.kind or _kind("is")
    R = build_R_module(kind, args.n, shape, args.variant)
    expected = expected_R_dim(args.n, shape)
    return Report("dimension", {"kind": str(kind), "n": args.n, "shape": str(shape), "variant": args.variant},
                  "pass" if R.dim == expected else "fail", {"dim": R.dim, "closed_form": expected})


def cmd_monoid(args) -> Report:
    from .monoids import cardinality_formula, closure, enumerate_monoid, generators

    _need(args, "n")
    _positive(args, "n", upper=6)
    kind = args.kind or _kind("is")
    elems = enumerate_monoid(kind, args.n)
    gens = generators(kind, args.n)
    closed = closure(gens, args.n)
    ok = len(elems) == cardinality_formula(kind, args.n) == len(closed)
    data = {"size": len(elems), "closed_form": cardinality_formula(kind, args.n),
            "generators": [str(g) for g in gens], "generated_size": len(closed)}
    if args.list:
        data["elements"] = [str(e) for e in elems]
    return Report("monoid", {"kind": str(kind), "n": args.n}, "pass" if ok else "fail", data)


def _module(args):
    from .functor import build_R_module
    from .schur import build_schur_module, build_weyl_module

    shape = _shape_from(args)
    if args.family == "R":
        return build_R_module(args.kind or _kind("is"), args.n, shape, args.variant)
    if args.family == "L":
        return build_schur_module(shape, args.n)
    return build_weyl_module(shape, args.n)


def cmd_module(args) -> Report:
    from .monoids import PartialTransformation, generators

    _need(args, "n")
    _positive(args, "n", upper=6)
    m = _module(args)
    if args.element:
        try:
            elems = [PartialTransformation.parse(e) for e in args.element]
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    else:
        kind = (args.kind or _kind("is")) if args.family == "R" else _kind("pt")
        elems = generators(kind, args.n)
    gens = []
    for g in elems:
        if g.n != args.n:
            raise ConfigError(f"element {g} acts on [{g.n}], expected [{args.n}]")
        try:
            gens.append({"element": str(g), "matrix": m.act(g).to_lists()})
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    labels = [lbl.to_json() if hasattr(lbl, "to_json") else str(lbl) for lbl in m.labels]
    shape = str(_shape_from(args))
    kind = str(args.kind) if args.kind else None
    return Report("module", {"family": args.family, "n": args.n, "shape": shape, "kind": kind,
                             "variant": args.variant},
                  "pass", {"name": m.name, "kind": kind, "n": args.n, "shape": shape, "dim": m.dim,
                           "basis": labels, "generators": gens})


def cmd_branch1(args) -> Report:
    from .characters import verify_symmetric_restriction

    _need(args, "n", "lam")
    if args.lam.size() > args.n:
        raise ConfigError("need |lambda| <= n")
    return verify_symmetric_restriction(args.lam, args.n, args.kind or "IS")


def cmd_branch2(args) -> Report:
    from .characters import verify_block_restriction

    _need(args, "n", "s")
    if not 1 <= args.s < args.n:
        raise ConfigError("need 1 <= s < n")
    return verify_block_restriction(args.kind or "IS", _shape_from(args), args.n, args.s, structural=not args.no_structural)


def cmd_branch3(args) -> Report:
    from .characters import verify_last_point_restriction

    _need(args, "n")
    return verify_last_point_restriction(args.kind or "IS", _shape_from(args), args.n, structural=not args.no_structural)


def cmd_distinct(args) -> Report:
    from .characters import nonisomorphism_table

    _need(args, "n")
    _positive(args, "n", upper=5)
    rmax = args.r if args.r is not None else args.n
    if rmax > args.n:
        raise ConfigError("need r <= n")
    return nonisomorphism_table(args.kind or "IS", args.n, rmax)


def cmd_irreducible(args) -> Report:
    from .characters import verify_irreducible

    _need(args, "n", "lam")
    return verify_irreducible(args.kind or "IS", args.n, args.lam, args.rounds, args.seed)


def cmd_cauchy(args) -> Report:
    from .cauchy import graded_quotient_dim, cauchy_chain_check

    _need(args, "m", "n", "r")
    _positive(args, "m", "n", "r", upper=6)
    kind = args.kind or _kind("is")
    rep = cauchy_chain_check(kind, args.m, args.n, args.r, characters=not args.no_characters)
    piece = graded_quotient_dim(kind, args.m, args.n, args.r)
    rep.data["graded_dim"] = piece.dim
    rep.data["graded_closed_form"] = piece.closed_form
    if not piece.ok:
        rep.status = "fail"
    return rep


def cmd_skew_cauchy(args) -> Report:
    from .skew import skew_chain_check

    _need(args, "m", "n", "r")
    _positive(args, "m", "n", "r", upper=6)
    return skew_chain_check(args.kind or "IS", args.m, args.n, args.r, characters=not args.no_characters,
                               samples=args.samples, seed=args.seed)


def cmd_harmonics(args) -> Report:
    from .harmonics import check_gr_equals_J

    _need(args, "n")
    _positive(args, "n", upper=4)
    if args.n == 4 and not args.slow:
        raise ConfigError("n = 4 is part of the slow suite; pass --slow")
    rep = check_gr_equals_J(args.kind or "IS", args.n, args.dmax)
    return rep


def _criterion_job(k: int, slow: bool, cache_path: str | None) -> dict:
    from .acceptance import CRITERIA

    if cache_path:
        cache.set_cache_dir(cache_path)
    return CRITERIA[k](slow=slow).to_dict()


def _emit_line(text: str, stream=None):
    stream = stream or sys.stderr
    with _print_lock:
        stream.write(text + "\n")
        stream.flush()


def cmd_verify_all(args) -> Report:
    from .acceptance import CRITERIA

    slow = bool(args.slow)
    keys = sorted(CRITERIA)
    results: dict[int, Report] = {}

    def done(k, d):
        rep = Report.from_dict(d)
        results[k] = rep
        _emit_line(f"criterion {k:2d} {rep.claim:<34} {rep.status.upper():<12} "
                   f"{rep.data.get('elapsed_seconds', 0):.1f}s")

    cache_path = str(cache.cache_dir()) if cache.cache_dir() else None
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futs = {k: pool.submit(_criterion_job, k, slow, cache_path) for k in keys}
            for k in keys:
                done(k, futs[k].result())
    else:
        for k in keys:
            done(k, _criterion_job(k, slow, cache_path))
    return combine("acceptance", {"slow": slow}, [results[k] for k in keys])


def golden_fixtures() -> dict[str, dict]:
    """Deterministic exact values regenerated by ``fixtures`` and compared by the tests."""
    from .cauchy import hilbert_series_terms
    from .characters import specht_character
    from .functor import build_R_module, restricted_character
    from .harmonics import hilbert_function
    from .monoids import enumerate_monoid
    from .partitions import enumerate_partitions
    from .schur import build_schur_module, build_standard_schur_module, build_weyl_module
    from .skew import skew_quotient_dim

    kinds = ("IS", "PT", "T")
    out: dict[str, dict] = {}
    out["monoid_sizes"] = {f"{k}_{n}": len(enumerate_monoid(k, n)) for k in kinds for n in range(1, 5)}
    out["schur_weyl_dims"] = {
        f"{fam}{lam}_V{n}": (build_schur_module(lam, n) if fam == "L" else build_weyl_module(lam, n)).dim
        for fam in "LK" for n in range(1, 4) for r in range(0, 4) for lam in enumerate_partitions(r)}
    out["standard_schur_dims"] = {f"L{lam}_U{m}": build_standard_schur_module(lam, m).dim
                                  for m in range(1, 4) for r in range(0, 4) for lam in enumerate_partitions(r)}
    out["specht_characters"] = {str(lam): specht_character(lam).to_json()
                                for r in range(1, 5) for lam in enumerate_partitions(r)}
    out["R_restricted_characters"] = {
        f"R({n})^{lam}": {str(k): int(v) for k, v in restricted_character(build_R_module("IS", n, lam)).items()}
        for n in range(1, 4) for r in range(0, n + 1) for lam in enumerate_partitions(r)}
    out["cauchy_hilbert"] = {f"{k}_{m}x{n}": hilbert_series_terms(k, m, n)
                             for k in kinds for m in range(1, 4) for n in range(1, 4)}
    out["skew_cauchy_dims"] = {f"{k}_{m}x{n}": [skew_quotient_dim(k, m, n, r) for r in range(0, n + 2)]
                               for k in kinds for m in range(1, 4) for n in range(1, 4)}
    out["orbit_harmonics_hilbert"] = {f"{k}_{n}": hilbert_function(k, n) for k in kinds for n in range(1, 4)}
    return out


def cmd_fixtures(args) -> Report:
    out = Path(args.out) / GOLDEN_VERSION
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, payload in golden_fixtures().items():
        path = out / f"{name}.json"
        path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8")
        written.append(str(path))
    (out / "report_schema.json").write_text(json.dumps(REPORT_SCHEMA, indent=1) + "\n", encoding="utf-8")
    return Report("fixtures", {"out": str(out)}, "pass", {"written": written})


COMMANDS = {
    "tableaux": cmd_tableaux, "dims": cmd_dims, "monoid": cmd_monoid, "module": cmd_module,
    "branch1": cmd_branch1, "branch2": cmd_branch2, "branch3": cmd_branch3, "distinct": cmd_distinct,
    "irreducible": cmd_irreducible, "cauchy": cmd_cauchy, "skew-cauchy": cmd_skew_cauchy,
    "harmonics": cmd_harmonics, "verify-all": cmd_verify_all, "fixtures": cmd_fixtures,
}


# -- output ------------------------------------------------------------------

def _rows_of(data: dict) -> tuple[str | None, list[dict] | None]:
    for key in ("steps", "degrees", "chain", "checks"):
        v = data.get(key)
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            return key, v
    return None, None


def _flat(v) -> str:
    return v if isinstance(v, str) else json.dumps(v)


def render(rep: Report, fmt: str) -> str:
    d = rep.to_dict()
    if fmt == "json":
        return json.dumps(d, indent=2)
    rows_key, rows = _rows_of(d["data"])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows:
            cols = list(dict.fromkeys(k for r in rows for k in r))
            w.writerow(cols)
            for r in rows:
                w.writerow([_flat(r.get(c, "")) for c in cols])
        else:
            w.writerow(["key", "value"])
            for k, v in d["data"].items():
                w.writerow([k, _flat(v)])
        return buf.getvalue().rstrip("\n")
    lines = [f"{d['claim']}  {json.dumps(d['parameters'])}  status: {d['status']}"]
    scalar = {k: v for k, v in d["data"].items() if not isinstance(v, (list, dict))}
    for k, v in scalar.items():
        lines.append(f"  {k}: {v}")
    if rows:
        cols = list(dict.fromkeys(k for r in rows for k in r if not isinstance(r[k], (list, dict))))
        width = {c: max(len(c), *(len(_flat(r.get(c, ""))) for r in rows)) for c in cols}
        lines.append("  " + "  ".join(c.ljust(width[c]) for c in cols))
        for r in rows:
            lines.append("  " + "  ".join(_flat(r.get(c, "")).ljust(width[c]) for c in cols))
    for k, v in d["data"].items():
        if isinstance(v, (list, dict)) and k != rows_key:
            text = json.dumps(v)
            lines.append(f"  {k}: {text if len(text) <= 200 else text[:197] + '...'}")
    return "\n".join(lines)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--m", type=int)
    base.add_argument("--n", type=int)
    base.add_argument("--r", type=int)
    base.add_argument("--s", type=int)
    base.add_argument("--lambda", dest="lam", type=_partition, help="partition such as 2,1")
    base.add_argument("--mu", type=_partition, help="inner partition of a skew shape")
    base.add_argument("--shape", help="shape string such as 2,1 or 3,2/1")
    base.add_argument("--format", choices=("json", "table", "csv"), default="json")
    base.add_argument("--seed", type=int, default=0)
    base.add_argument("--slow", action="store_true", help="include the slow suite (n = 4 harmonics)")
    base.add_argument("--cache-dir", help=f"module cache directory (overrides ${cache.ENV_VAR})")
    base.add_argument("--jobs", type=int, default=1)
    common = argparse.ArgumentParser(add_help=False, parents=[base])
    common.add_argument("--kind", type=_kind, help="monoid: is, pt, t or sym")

    p = argparse.ArgumentParser(prog="monoidtab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tableaux", parents=[base], help="enumerate tableaux of a shape")
    t.add_argument("--kind", dest="tableau_kind", default="semistandard",
                   help="all, semistandard, co_semistandard, distinct_entries, standard_distinct, row_strict, row_weak")
    sub.add_parser("dims", parents=[common], help="dimension of R(n)^shape or R(n)_shape").add_argument(
        "--variant", choices=("upper", "lower"), default="upper")
    sub.add_parser("monoid", parents=[common], help="enumerate a monoid").add_argument("--list", action="store_true")
    mod = sub.add_parser("module", parents=[common], help="build a module and print action matrices")
    mod.add_argument("--family", choices=("R", "L", "K"), default="R")
    mod.add_argument("--variant", choices=("upper", "lower"), default="upper")
    mod.add_argument("--element", action="append", help="partial map such as 2,-,1 (repeatable)")
    sub.add_parser("branch1", parents=[common], help="restriction to S_n")
    for name in ("branch2", "branch3"):
        sub.add_parser(name, parents=[common], help="block restriction" if name == "branch2" else
                       "restriction to the last-point stabiliser").add_argument(
            "--no-structural", action="store_true", help="skip the explicit chain")
    sub.add_parser("distinct", parents=[common], help="non-isomorphism table")
    sub.add_parser("irreducible", parents=[common], help="Norton irreducibility test").add_argument(
        "--rounds", type=int, default=25)
    for name in ("cauchy", "skew-cauchy"):
        sp = sub.add_parser(name, parents=[common], help=f"{'skew ' if name != 'cauchy' else ''}Cauchy quotient chain")
        sp.add_argument("--no-characters", action="store_true")
        if name == "skew-cauchy":
            sp.add_argument("--samples", type=int, default=0, help="random membership samples")
    sub.add_parser("harmonics", parents=[common], help="orbit harmonics of a monoid locus").add_argument(
        "--dmax", type=int)
    va = sub.add_parser("verify-all", parents=[common], help="run every acceptance criterion")
    va.add_argument("--fast", action="store_true", help="default; excludes the slow suite")
    sub.add_parser("fixtures", parents=[common], help="write golden JSON fixtures").add_argument(
        "--out", default="tests/golden")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        cache.set_cache_dir(args.cache_dir)
    try:
        rep = COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"monoidtab {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ShapeError, ValueError) as exc:
        print(f"monoidtab {args.command}: {exc}", file=sys.stderr)
        return 2
    out = render(rep, args.format)
    with _print_lock:
        sys.stdout.write(out + "\n")
        sys.stdout.flush()
    if rep.status != "pass":
        print(f"monoidtab {args.command}: check status {rep.status}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: field-info, eval, verify, table.

Exit codes: 0 success, 1 a verified identity failed, 2 usage or domain error.
Machine-readable output goes to stdout (or --out); progress and summary lines
go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .characters import has_char, special_char
from .field import FieldError, build_field, parse_q
from .identities import (
    BudgetError, ConstraintError, IdentityError, admissible_params, expand_ids,
    exhaustive_size, get_identity, scan, tabulate_value,
)
from .series import SeriesError, SeriesSpec, evaluate
from .value_domain import COMPLEX, MODULAR, BackendError, format_value, make_backend

SCHEMA_VERSION = 1
DEFAULT_SUITE = (5, 9, 13, 17, 25, 29, 37, 41, 49, 53, 61, 73, 81)
EXHAUSTIVE_MAX_Q = 13
# below this many raw parameter tuples a full sweep is cheaper than sampling
EXHAUSTIVE_SMALL = 20_000
DEFAULT_SAMPLES = 200

FAMILY_ALIASES = {
    "greene": "greene", "mccarthy": "mccarthy", "star": "mccarthy",
    "fuselier-p": "fuselier_P", "fuselier_p": "fuselier_P", "2p1": "fuselier_P",
    "fuselier": "fuselier_F", "fuselier-f": "fuselier_F", "fuselier_f": "fuselier_F",
    "appell": "appell_F4", "f4": "appell_F4", "appell_f4": "appell_F4",
}
REPORT_FIELDS = ("schema", "id", "q", "backend", "strategy", "checked", "passed",
                 "skipped", "pass", "residual", "branches", "failures")
TABLE_FIELDS = ("schema", "id", "q", "backend", "params", "branch", "lhs", "rhs",
                "residual", "pass")


class UsageError(Exception):
    pass


@lru_cache(maxsize=None)
def _field(q: int):
    p, r = parse_q(q)
    return build_field(p, r)


@lru_cache(maxsize=None)
def _backend(kind: str, q: int, seed: int):
    ctx = _field(q)
    return make_backend(kind, ctx.p, q - 1, seed=seed)


def _q_list(text: str | None) -> list[int]:
    if not text:
        return list(DEFAULT_SUITE)
    try:
        qs = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad --q list {text!r}") from None
    for q in qs:
        try:
            _field(q)
        except FieldError as exc:
            raise UsageError(str(exc)) from None
    return qs


def _backends(kind: str) -> list[str]:
    return [COMPLEX, MODULAR] if kind == "both" else [kind]


def parse_char(token: str, ctx) -> int:
    """Dual exponent from an integer or an alias (eps, phi, chi3, chi4; '-' negates)."""
    token = token.strip()
    sign = 1
    if token.startswith("-") and not token[1:].isdigit():
        sign, token = -1, token[1:]
    m = ctx.q - 1
    if token in ("eps", "phi", "chi3", "chi4"):
        if not has_char(ctx, token):
            raise UsageError(f"{token} does not exist over F_{ctx.q}")
        return sign * special_char(ctx, token) % m
    try:
        return sign * int(token) % m
    except ValueError:
        raise UsageError(f"bad character {token!r}") from None


def _chars(text: str | None, ctx) -> list[int]:
    if not text:
        return []
    return [parse_char(t, ctx) for t in text.split(",")]


def parse_point(text: str, ctx) -> int:
    """A field element: an integer code, or a rational a/b of integers."""
    try:
        if "/" in text:
            a, b = text.split("/")
            den = ctx.elem(int(b))
            if den == 0:
                raise UsageError(f"{text}: zero denominator in F_{ctx.q}")
            return ctx.div(ctx.elem(int(a)), den)
        v = int(text)
    except ValueError:
        raise UsageError(f"bad field element {text!r}") from None
    if ctx.r == 1:
        return v % ctx.p
    if not 0 <= v < ctx.q:
        raise UsageError(f"{v} is not an element code of F_{ctx.q}")
    return v


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- field-info ----------------------------------------------------------------

def _monomial(c: int, i: int) -> str:
    if i == 0:
        return str(c)
    x = "x" if i == 1 else f"x^{i}"
    return x if c == 1 else f"{c}*{x}"


def cmd_field_info(args) -> int:
    try:
        ctx = build_field(args.p, args.r)
    except FieldError as exc:
        raise UsageError(str(exc)) from None
    m = ctx.q - 1
    modulus = " + ".join(_monomial(c, i) for i, c in reversed(list(enumerate(ctx.modulus)))
                         if c) if ctx.r > 1 else ""
    print(f"q = {ctx.q} (p = {ctx.p}, r = {ctx.r})")
    if ctx.r > 1:
        print(f"modulus: {modulus}")
    print(f"generator: {ctx.format(ctx.g)}")
    print(f"character group order: {m}")
    for name in ("phi", "chi3", "chi4"):
        if has_char(ctx, name):
            print(f"{name}: available (T^{special_char(ctx, name)})")
        else:
            print(f"{name}: unavailable")
    return 0


# -- eval -------------------------------------------------------------------------

def _spec_for(family: str, ctx, args) -> SeriesSpec:
    ups = _chars(args.up, ctx)
    lows = _chars(args.low, ctx)
    if family == "appell_F4":
        # unspecified parameters default to the trivial character
        ups = ups or [0, 0]
        lows = lows or [0, 0]
        if args.y is None:
            raise UsageError("appell needs --y")
    elif not ups:
        raise UsageError(f"{family} needs --up")
    x = parse_point(args.x, ctx)
    y = parse_point(args.y, ctx) if args.y is not None else None
    return SeriesSpec(family, tuple(ups), tuple(lows), x, y)


def cmd_eval(args) -> int:
    family = FAMILY_ALIASES.get(args.family.lower())
    if family is None:
        raise UsageError(f"unknown family {args.family!r}; choose from "
                         + ", ".join(sorted(FAMILY_ALIASES)))
    (q,) = _q_list(str(args.q))
    ctx = _field(q)
    try:
        spec = _spec_for(family, ctx, args)
        for kind in _backends(args.backend):
            b = _backend(kind, q, args.seed)
            print(f"{b.label}\t{format_value(evaluate(ctx, b, spec))}")
    except SeriesError as exc:
        raise UsageError(str(exc)) from None
    return 0


# -- verify -----------------------------------------------------------------------

def _strategy_for(args, ident_id: str, q: int):
    if args.strategy:
        return args.strategy
    if q <= EXHAUSTIVE_MAX_Q or exhaustive_size(get_identity(ident_id), _field(q)) <= EXHAUSTIVE_SMALL:
        return "exhaustive"
    return f"random:{args.samples}:{args.seed}"


def _run_one(task):
    ident_id, q, kind, seed, strategy = task
    ctx = _field(q)
    b = _backend(kind, q, seed)
    return scan(ident_id, ctx, b, strategy).as_dict()


def _report_csv(reports: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for r in reports:
        branches = ";".join(f"{k}={v}" for k, v in r["branches"].items())
        failures = ";".join(
            ",".join(f"{k}={v}" for k, v in f.items()) for f in r["failures"])
        w.writerow([SCHEMA_VERSION, r["id"], r["q"], r["backend"], r["strategy"],
                    r["checked"], r["passed"], r["skipped"], int(r["pass"]),
                    r["residual"], branches, failures])
    return buf.getvalue()


def _report_json(reports: list[dict]) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, "kind": "verify", "reports": reports},
                      indent=2, sort_keys=True) + "\n"


def cmd_verify(args) -> int:
    try:
        ids = expand_ids(args.ids)
    except IdentityError as exc:
        raise UsageError(str(exc)) from None
    explicit = len(args.ids) == 1 and ids == args.ids
    qs = _q_list(args.q)
    tasks = []
    for q in qs:
        ctx = _field(q)
        for ident_id in ids:
            ident = get_identity(ident_id)
            if not ident.field_ok(ctx):
                if explicit:
                    raise UsageError(f"{ident_id} requires {ident.constraint_text()}; "
                                     f"got q = {q}")
                print(f"skip {ident_id} q={q}: requires {ident.constraint_text()}",
                      file=sys.stderr)
                continue
            for kind in _backends(args.backend):
                tasks.append((ident_id, q, kind, args.seed, _strategy_for(args, ident_id, q)))
    try:
        if args.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_run_one, tasks, chunksize=1))
        else:
            reports = [_run_one(t) for t in tasks]
    except (BudgetError, ConstraintError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    failed = 0
    for r in reports:
        status = "PASS" if r["pass"] else "FAIL"
        failed += not r["pass"]
        print(f"{status} {r['id']} q={r['q']} {r['backend']}: checked {r['checked']}, "
              f"passed {r['passed']}, skipped {r['skipped']}", file=sys.stderr)
    print(f"{len(reports) - failed}/{len(reports)} scans passed", file=sys.stderr)
    text = _report_csv(reports) if args.format == "csv" else _report_json(reports)
    _emit(text, args.out)
    return 1 if failed else 0


# -- table ------------------------------------------------------------------------

def _param_text(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def cmd_table(args) -> int:
    try:
        ident = get_identity(args.id)
    except IdentityError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for q in _q_list(args.q):
        ctx = _field(q)
        if not ident.field_ok(ctx):
            raise UsageError(f"{ident.id} requires {ident.constraint_text()}; got q = {q}")
        for kind in _backends(args.backend):
            b = _backend(kind, q, args.seed)
            try:
                for params in admissible_params(ident.id, ctx):
                    rows.append((kind, tabulate_value(ident.id, ctx, b, params)))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_FIELDS)
    failed = 0
    for kind, row in rows:
        failed += not row["pass"]
        w.writerow([SCHEMA_VERSION, row["id"], row["q"], kind, _param_text(row["params"]),
                    row["branch"] or "", format_value(row["lhs"]), format_value(row["rhs"]),
                    row["residual"], int(row["pass"])])
    _emit(buf.getvalue(), args.out)
    print(f"{len(rows) - failed}/{len(rows)} rows agree", file=sys.stderr)
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffhyper", description="Finite-field hypergeometric series and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe F_{p^r}")
    p.add_argument("p", type=int)
    p.add_argument("r", type=int, nargs="?", default=1)
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("eval", help="evaluate one series")
    p.add_argument("family", help="greene, mccarthy, fuselier-p, fuselier, appell")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--up", help="upper characters, comma separated")
    p.add_argument("--low", help="lower characters, comma separated")
    p.add_argument("--x", required=True)
    p.add_argument("--y")
    p.add_argument("--backend", choices=("complex", "modular", "both"), default="complex")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="verify catalog identities")
    p.add_argument("ids", nargs="+", help="identity ids, group names, or 'all'")
    p.add_argument("--q", help="comma-separated field sizes (default suite if omitted)")
    p.add_argument("--backend", choices=("complex", "modular", "both"), default="modular")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", help="exhaustive or random:N:SEED (default: exhaustive "
                                      "for q <= 13 or small parameter spaces, else "
                                      "random:SAMPLES:SEED)")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate a special-value identity")
    p.add_argument("id")
    p.add_argument("--q", help="comma-separated field sizes")
    p.add_argument("--backend", choices=("complex", "modular", "both"), default="complex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, BackendError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

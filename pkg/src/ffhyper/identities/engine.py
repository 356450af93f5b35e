"""Identity descriptors, the evaluation environment, and the verification engine."""

from __future__ import annotations

import itertools
import math
import os
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from ..char_sums import sum_tables
from ..characters import order as char_order
from ..characters import sign_at_minus_one
from ..field import FieldCtx
from ..series import evaluator
from ..value_domain import Backend, CycValue, make_backend, values_equal

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "FFHYPER_BUDGET"
MAX_WITNESSES = 10
UNDEFINED = "undefined"

TRANSFORMATION, VALUE, LEMMA = "transformation", "value", "lemma"


class IdentityError(LookupError):
    pass


class ConstraintError(ValueError):
    """The field does not satisfy the identity's congruence requirement."""


class BudgetError(RuntimeError):
    pass


class Env:
    """Everything an identity evaluator needs over one (field, backend).

    Characters are dual exponents; products of characters are sums of
    exponents and inverses are negations.  ``conj`` swaps the fixed quartic
    and cubic characters for their conjugates.
    """

    def __init__(self, ctx: FieldCtx, b: Backend, conj: bool = False):
        self.ctx, self.b, self.conj = ctx, b, conj
        self.q = ctx.q
        self.m = m = ctx.q - 1
        self.p = ctx.p
        self.series = evaluator(ctx, b)
        self.tables = sum_tables(ctx, b)
        self.phi = m // 2
        self.chi4 = None if m % 4 else (3 * m // 4 if conj else m // 4)
        self.chi3 = None if m % 3 else (2 * m // 3 if conj else m // 3)
        self.zero = b.zero()
        self.one = b.one()
        self._g = [b.wrap(v) for v in self.tables.gauss]
        self._binom = None

    # -- field -------------------------------------------------------------
    def e(self, n: int) -> int:
        return n % self.p

    def add(self, a, c):
        return self.ctx.add(a, c)

    def sub(self, a, c):
        return self.ctx.sub(a, c)

    def mul(self, *xs):
        out = 1
        for x in xs:
            out = self.ctx.mul(out, x)
        return out

    def div(self, a, c):
        return self.ctx.div(a, c)

    def neg(self, a):
        return self.ctx.neg(a)

    def sqrt(self, x):
        return self.ctx.sqrt(x)

    # -- characters --------------------------------------------------------
    def ch(self, k: int, x: int) -> CycValue:
        if x == 0:
            return self.zero
        return self.b.wrap(self.tables.zm[k * self.ctx.dlog[x] % self.m])

    def chn(self, k: int, n: int) -> CycValue:
        return self.ch(k, n % self.p)

    def sgn(self, k: int) -> int:
        return sign_at_minus_one(self.ctx, k)

    def dc(self, k: int) -> int:
        return 1 if k % self.m == 0 else 0

    @staticmethod
    def dx(x: int) -> int:
        return 1 if x == 0 else 0

    def nz(self, *ks: int) -> bool:
        """True when every listed character is nontrivial."""
        return all(k % self.m for k in ks)

    def order(self, k: int) -> int:
        return char_order(self.ctx, k)

    # -- sums --------------------------------------------------------------
    def g(self, k: int) -> CycValue:
        return self._g[k % self.m]

    def J(self, a: int, c: int) -> CycValue:
        return self.b.wrap(self.tables.jacobi_raw(a % self.m, c % self.m))

    def C(self, a: int, c: int) -> CycValue:
        if self._binom is None:
            self._binom = [[self.b.wrap(v) for v in row] for row in self.tables.binom_rows]
        return self._binom[a % self.m][c % self.m]

    # -- series ------------------------------------------------------------
    def F(self, ups: Sequence[int], lows: Sequence[int], x: int) -> CycValue:
        return self.series.greene(ups, lows, x)

    def Fs(self, ups: Sequence[int], lows: Sequence[int], x: int) -> CycValue:
        return self.series.mccarthy(ups, lows, x)

    def FF(self, a: int, bb: int, c: int, x: int) -> CycValue:
        return self.series.fuselier_F(a, bb, c, x)

    def F4(self, a: int, bb: int, c: int, c2: int, x: int, y: int) -> CycValue:
        return self.series.appell_f4(a, bb, c, c2, x, y)


@lru_cache(maxsize=64)
def env_for(ctx: FieldCtx, b: Backend, conj: bool = False) -> Env:
    return Env(ctx, b, conj)


Predicate = Callable[..., bool]


@dataclass(frozen=True)
class Identity:
    """One catalog entry.

    ``lhs``/``rhs`` take ``(env, **params)`` and return a CycValue or a list
    of CycValues compared pairwise.  ``hypotheses`` are named predicates with
    the same signature; an instance is admissible when all of them hold.
    """

    id: str
    summary: str
    chars: tuple[str, ...]
    points: tuple[str, ...]
    hypotheses: tuple[tuple[str, Predicate], ...]
    lhs: Callable
    rhs: Callable
    kind: str = TRANSFORMATION
    congruence: tuple[int, tuple[int, ...]] | None = None
    branch: Callable | None = None
    fixed_chars: bool = False
    group: str | None = None

    @property
    def params(self) -> tuple[str, ...]:
        return self.chars + self.points

    def constraint_text(self) -> str:
        if self.congruence is None:
            return ""
        mod, res = self.congruence
        return f"q = {' or '.join(str(r) for r in res)} mod {mod}"

    def field_ok(self, ctx: FieldCtx) -> bool:
        if self.congruence is None:
            return True
        mod, res = self.congruence
        return ctx.q % mod in res

    def admissible(self, ev: Env, params: dict, relax: Sequence[str] = ()) -> bool:
        if not self.hypotheses:
            return True
        return all(pred(ev, **params) for name, pred in self.hypotheses
                   if name not in relax)


CATALOG: dict[str, Identity] = {}


def register(ident: Identity) -> Identity:
    if ident.id in CATALOG:
        raise ValueError(f"duplicate identity id {ident.id}")
    CATALOG[ident.id] = ident
    return ident


def get_identity(ident_id: str) -> Identity:
    try:
        return CATALOG[ident_id]
    except KeyError:
        raise IdentityError(f"unknown identity {ident_id!r}") from None


def expand_ids(names: Sequence[str] | str) -> list[str]:
    """Resolve ids, group names (e.g. LEMMA_PACK) and 'all'."""
    if isinstance(names, str):
        names = [names]
    out = []
    for name in names:
        if name == "all":
            out.extend(CATALOG)
            continue
        if name in CATALOG:
            out.append(name)
            continue
        members = [i for i, d in CATALOG.items() if d.group == name]
        if not members:
            raise IdentityError(f"unknown identity {name!r}")
        out.extend(members)
    return list(dict.fromkeys(out))


def list_identities() -> list[dict]:
    return [{"id": d.id, "kind": d.kind, "chars": list(d.chars),
             "points": list(d.points), "constraint": d.constraint_text(),
             "hypotheses": [n for n, _ in d.hypotheses], "summary": d.summary}
            for d in CATALOG.values()]


# -- reports -----------------------------------------------------------------

@dataclass
class VerificationReport:
    id: str
    q: int
    backend: str
    params: dict
    residual: str
    passed: bool
    branch: str | None = None
    skipped: bool = False
    strategy: str | None = None
    checked: int = 0
    skipped_count: int = 0
    passed_count: int = 0
    failures: list = field(default_factory=list)
    branches: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"id": self.id, "q": self.q, "backend": self.backend,
                "strategy": self.strategy, "params": self.params,
                "residual": self.residual, "pass": self.passed,
                "branch": self.branch, "checked": self.checked,
                "passed": self.passed_count, "skipped": self.skipped_count,
                "branches": dict(sorted(self.branches.items())),
                "failures": self.failures}


_SEQ = (list, tuple)


def _as_list(v):
    return v if isinstance(v, (list, tuple)) else [v]


# Residuals are floats while scanning: |lhs - rhs| for complex, 0 or inf
# ("nonzero") for modular, nan when a side was undefined.

def _worse(r1: float, r2: float) -> float:
    if r1 != r1 or r2 != r2:
        return math.nan
    return r1 if r1 >= r2 else r2


def residual_text(r: float) -> str:
    if r != r:
        return UNDEFINED
    if r == math.inf:
        return "nonzero"
    if r == 0:
        return "0"
    return f"{r:.3e}"


def _compare(b: Backend, lhs, rhs) -> tuple[bool, float]:
    if type(lhs) not in _SEQ and type(rhs) not in _SEQ:
        same = values_equal(b, lhs, rhs)
        if b.exact:
            return same, 0.0 if same else math.inf
        return same, abs(complex(lhs) - complex(rhs))
    ls, rs = _as_list(lhs), _as_list(rhs)
    if len(ls) != len(rs):
        raise ValueError("lhs/rhs value lists differ in length")
    ok, worst = True, 0.0
    for a, c in zip(ls, rs):
        same = values_equal(b, a, c)
        ok = ok and same
        if b.exact:
            if not same:
                worst = math.inf
        else:
            worst = _worse(worst, abs(complex(a) - complex(c)))
    return ok, worst


def _check_field(ident: Identity, ctx: FieldCtx):
    if not ident.field_ok(ctx):
        raise ConstraintError(
            f"{ident.id} requires {ident.constraint_text()}; got q = {ctx.q}")


def _envs(ident: Identity, ctx: FieldCtx, b: Backend) -> list:
    envs = [env_for(ctx, b, False)]
    if ident.fixed_chars:
        envs.append(env_for(ctx, b, True))
    return envs


def _evaluate(ident: Identity, envs: list, params: dict, relax: Sequence[str] = ()):
    """Returns (admissible, passed, residual, branch)."""
    b = envs[0].b
    if not ident.admissible(envs[0], params, relax):
        return False, None, None, None
    branch = ident.branch(envs[0], **params) if ident.branch is not None else None
    passed, residual = True, 0.0
    for ev in envs:
        try:
            ok, res = _compare(b, ident.lhs(ev, **params), ident.rhs(ev, **params))
        except ZeroDivisionError:
            # only reachable when a pole-guarding hypothesis was relaxed
            ok, res = False, math.nan
        passed = passed and ok
        residual = res if len(envs) == 1 else _worse(residual, res)
    return True, passed, residual, branch


def verify_instance(ident_id: str, ctx: FieldCtx, b: Backend, params: dict | None = None,
                    relax: Sequence[str] = ()) -> VerificationReport:
    ident = get_identity(ident_id)
    _check_field(ident, ctx)
    params = dict(params or {})
    missing = [n for n in ident.params if n not in params]
    if missing:
        raise ValueError(f"{ident_id}: missing parameters {missing}")
    m = ctx.q - 1
    for n in ident.chars:
        params[n] %= m
    for n in ident.points:
        if not 0 <= params[n] < ctx.q:
            raise ValueError(f"{n} = {params[n]} is not a field element of F_{ctx.q}")
    adm, passed, residual, branch = _evaluate(ident, _envs(ident, ctx, b), params, relax)
    if not adm:
        return VerificationReport(ident_id, ctx.q, b.label, params, "", True,
                                  skipped=True, skipped_count=1)
    return VerificationReport(ident_id, ctx.q, b.label, params, residual_text(residual), passed,
                              branch=branch, checked=1, passed_count=int(passed),
                              branches={branch: 1} if branch else {})


def exhaustive_size(ident: Identity, ctx: FieldCtx) -> int:
    return (ctx.q - 1) ** len(ident.chars) * ctx.q ** len(ident.points)


def budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def _exhaustive_params(ident: Identity, ctx: FieldCtx):
    ranges = [range(ctx.q - 1)] * len(ident.chars) + [range(ctx.q)] * len(ident.points)
    for combo in itertools.product(*ranges):
        yield dict(zip(ident.params, combo))


def _random_params(ident: Identity, ctx: FieldCtx, seed):
    rng = random.Random(f"{seed}:{ident.id}:{ctx.q}")
    while True:
        combo = [rng.randrange(ctx.q - 1) for _ in ident.chars]
        combo += [rng.randrange(ctx.q) for _ in ident.points]
        yield dict(zip(ident.params, combo))


def parse_strategy(text) -> tuple:
    """'exhaustive' or 'random:N:SEED' (also accepts tuples)."""
    if isinstance(text, tuple):
        return text
    if text == "exhaustive":
        return ("exhaustive",)
    parts = text.split(":")
    if parts[0] == "random" and len(parts) in (2, 3):
        n = int(parts[1])
        seed = int(parts[2]) if len(parts) == 3 else 0
        return ("random", n, seed)
    raise ValueError(f"bad strategy {text!r}; use exhaustive or random:N:SEED")


def strategy_text(strategy: tuple) -> str:
    return ":".join(str(s) for s in strategy)


def scan(ident_id: str, ctx: FieldCtx, b: Backend, strategy="exhaustive",
         relax: Sequence[str] = (), max_budget: int | None = None) -> VerificationReport:
    """Check every admissible instance (exhaustive) or n admissible samples.

    Inadmissible tuples are skipped and counted.  Random sampling draws from
    the raw parameter cube until n admissible instances were checked or the
    draw cap (50 n + 1000) is reached.
    """
    ident = get_identity(ident_id)
    _check_field(ident, ctx)
    strategy = parse_strategy(strategy)
    report = VerificationReport(ident_id, ctx.q, b.label, {}, "0", True,
                                strategy=strategy_text(strategy))
    envs = _envs(ident, ctx, b)
    worst = 0.0
    if not ident.params:
        source, target = iter([{}]), None
    elif strategy[0] == "exhaustive":
        limit = budget() if max_budget is None else max_budget
        size = exhaustive_size(ident, ctx)
        if size > limit:
            raise BudgetError(
                f"{ident_id} over F_{ctx.q}: {size} instances exceed the budget "
                f"{limit}; use a random strategy")
        source, target = _exhaustive_params(ident, ctx), None
    else:
        _, n, seed = strategy
        source, target = _random_params(ident, ctx, seed), n
    draws_cap = None if target is None else 50 * target + 1000
    branches: Counter = Counter()
    draws = 0
    for params in source:
        if target is not None and (report.checked >= target or draws >= draws_cap):
            break
        draws += 1
        adm, passed, residual, branch = _evaluate(ident, envs, params, relax)
        if not adm:
            report.skipped_count += 1
            continue
        report.checked += 1
        if branch:
            branches[branch] += 1
        worst = _worse(worst, residual)
        if passed:
            report.passed_count += 1
        else:
            report.passed = False
            if len(report.failures) < MAX_WITNESSES:
                report.failures.append(dict(params))
    report.branches = dict(branches)
    report.residual = residual_text(worst)
    return report


def tabulate_value(ident_id: str, ctx: FieldCtx, b: Backend, params: dict | None = None) -> dict:
    """Both sides of a special-value identity, with the branch taken."""
    ident = get_identity(ident_id)
    if ident.kind != VALUE:
        raise ValueError(f"{ident_id} is a {ident.kind}, not a special value")
    _check_field(ident, ctx)
    params = dict(params or {})
    ev = env_for(ctx, b)
    if not ident.admissible(ev, params):
        return {"id": ident_id, "q": ctx.q, "params": params, "admissible": False}
    lhs, rhs = ident.lhs(ev, **params), ident.rhs(ev, **params)
    ok, residual = _compare(b, lhs, rhs)
    return {"id": ident_id, "q": ctx.q, "params": params, "admissible": True,
            "lhs": _as_list(lhs)[0], "rhs": _as_list(rhs)[0],
            "branch": ident.branch(ev, **params) if ident.branch else None,
            "residual": residual_text(residual), "pass": ok}


def admissible_params(ident_id: str, ctx: FieldCtx) -> list[dict]:
    """All admissible parameter tuples (exhaustive enumeration)."""
    ident = get_identity(ident_id)
    ev = env_for(ctx, make_backend("complex", ctx.p, ctx.q - 1))
    return [params for params in _exhaustive_params(ident, ctx)
            if ident.admissible(ev, params)]

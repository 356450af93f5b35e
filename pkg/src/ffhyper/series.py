"""Finite-field hypergeometric series.

Four families are evaluated over a fixed (field, backend) pair:

* Greene's  n+1Fn  = q/(q-1) sum_chi (A0 chi choose chi) prod (Ai chi choose Bi chi) chi(x)
* McCarthy's starred n+1Fn*, built from normalized Gauss sums
* the period-normalized 2P1 / 2F1 pair (the q^2-scaled 2P1 and its quotient)
* the Appell-type double sum F4*

Each single-variable series is a discrete Fourier transform in the argument:
``value(g^u) = sum_k c_k zeta^(k u)``.  :class:`SeriesEvaluator` caches the
coefficient vector per parameter tuple and switches to the full transform on
the second request with the same parameters, which makes exhaustive scans over
the argument cheap while one-off evaluations stay O(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .char_sums import binom, sum_tables
from .characters import sign_at_minus_one
from .field import FieldCtx
from .value_domain import Backend, CycValue

GREENE, MCCARTHY, FUSELIER_P, FUSELIER_F, APPELL_F4 = (
    "greene", "mccarthy", "fuselier_P", "fuselier_F", "appell_F4")
FAMILIES = (GREENE, MCCARTHY, FUSELIER_P, FUSELIER_F, APPELL_F4)

CACHE_LIMIT = 50_000


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesSpec:
    family: str
    uppers: tuple[int, ...]
    lowers: tuple[int, ...]
    x: int
    y: int | None = None

    def __post_init__(self):
        n_up, n_low = len(self.uppers), len(self.lowers)
        if self.family in (GREENE, MCCARTHY):
            ok = n_up == n_low + 1
        elif self.family in (FUSELIER_P, FUSELIER_F):
            ok = n_up == 2 and n_low == 1
        elif self.family == APPELL_F4:
            ok = n_up == 2 and n_low == 2 and self.y is not None
        else:
            raise SeriesError(f"unknown family {self.family!r}")
        if not ok:
            raise SeriesError(
                f"{self.family}: {n_up} upper / {n_low} lower parameters is not a valid arity")


class SeriesEvaluator:
    """Series evaluation over one (field, backend) pair."""

    def __init__(self, ctx: FieldCtx, b: Backend):
        self.ctx = ctx
        self.b = b
        self.q = ctx.q
        self.m = ctx.q - 1
        self.tables = sum_tables(ctx, b)
        self.zm = self.tables.zm
        g = self.tables.gauss
        self.gauss = g
        if b.exact:
            self.ginv = [pow(v, -1, b.ell) for v in g]
        else:
            self.ginv = [1 / v for v in g]
        m, half = self.m, self.m // 2
        # T^k(-1)
        self.sign = [self.zm[k * half % m] for k in range(m)]
        self._coef: dict = {}
        self._vec: dict = {}

    # -- plumbing -----------------------------------------------------------
    def _check_cache(self):
        if len(self._coef) > CACHE_LIMIT:
            self._coef.clear()
            self._vec.clear()

    def _transform_at(self, key, coef_fn, u: int):
        """sum_k c_k zeta^(k u), cached per key."""
        vec = self._vec.get(key)
        if vec is not None:
            return vec[u]
        coef = self._coef.get(key)
        m, zm = self.m, self.zm
        if coef is None:
            self._check_cache()
            coef = coef_fn()
            self._coef[key] = coef
            return self.b.reduce(sum(c * zm[k * u % m] for k, c in enumerate(coef) if c))
        vec = [self.b.reduce(sum(c * zm[k * w % m] for k, c in enumerate(coef) if c))
               for w in range(m)]
        self._vec[key] = vec
        return vec[u]

    # -- Greene -------------------------------------------------------------
    def _greene_coef(self, ups, lows):
        m, rows = self.m, self.tables.binom_rows
        pairs = [(ups[0], 0)] + list(zip(ups[1:], lows))
        coef = []
        for k in range(m):
            t = 1
            for a, c in pairs:
                t *= rows[(a + k) % m][(c + k) % m]
            coef.append(self.b.reduce(t))
        return coef

    def greene(self, uppers: Sequence[int], lowers: Sequence[int], x: int) -> CycValue:
        if len(uppers) != len(lowers) + 1:
            raise SeriesError("Greene series needs len(uppers) == len(lowers) + 1")
        if x == 0:
            return self.b.zero()
        m = self.m
        ups = tuple(a % m for a in uppers)
        lows = tuple(c % m for c in lowers)
        key = (GREENE, ups, lows)
        s = self._transform_at(key, lambda: self._greene_coef(ups, lows), self.ctx.dlog[x])
        return self.b.wrap(s) * Fraction(self.q, m)

    # -- McCarthy -----------------------------------------------------------
    def _mccarthy_coef(self, ups, lows):
        m, g, gi, sign = self.m, self.gauss, self.ginv, self.sign
        n1 = len(ups)
        norm = 1
        for a in ups:
            norm *= gi[a]
        for c in lows:
            norm *= gi[-c % m]
        norm = self.b.reduce(norm)
        coef = []
        for k in range(m):
            t = norm * g[-k % m]
            for a in ups:
                t *= g[(a + k) % m]
            for c in lows:
                t *= g[-(c + k) % m]
            if n1 % 2 and k % 2:
                t *= sign[k]
            coef.append(self.b.reduce(t))
        return coef

    def mccarthy(self, uppers: Sequence[int], lowers: Sequence[int], x: int) -> CycValue:
        if len(uppers) != len(lowers) + 1:
            raise SeriesError("McCarthy series needs len(uppers) == len(lowers) + 1")
        if x == 0:
            return self.b.zero()
        m = self.m
        ups = tuple(a % m for a in uppers)
        lows = tuple(c % m for c in lowers)
        key = (MCCARTHY, ups, lows)
        s = self._transform_at(key, lambda: self._mccarthy_coef(ups, lows), self.ctx.dlog[x])
        return self.b.wrap(s) * Fraction(1, m)

    # -- period-normalized 2P1 / 2F1 ----------------------------------------
    def _fuselier_coef(self, a, bb, c):
        m, rows = self.m, self.tables.binom_rows
        return [self.b.reduce(rows[(a + k) % m][k] * rows[(bb + k) % m][(c + k) % m])
                for k in range(m)]

    def fuselier_P(self, a: int, bb: int, c: int, x: int) -> CycValue:
        m, q = self.m, self.q
        a, bb, c = a % m, bb % m, c % m
        jac = self.b.wrap(self.tables.jacobi_raw(bb, (c - bb) % m))
        if x == 0:
            return jac
        key = (FUSELIER_P, a, bb, c)
        s = self._transform_at(key, lambda: self._fuselier_coef(a, bb, c), self.ctx.dlog[x])
        return self.b.wrap(s) * (Fraction(q * q, m) * sign_at_minus_one(self.ctx, bb + c))

    def fuselier_F(self, a: int, bb: int, c: int, x: int) -> CycValue:
        m = self.m
        jac = self.b.wrap(self.tables.jacobi_raw(bb % m, (c - bb) % m))
        if not jac:
            raise SeriesError("J(B, conj(B) C) vanishes; 2F1 is undefined")
        return self.fuselier_P(a, bb, c, x) / jac

    # -- Appell F4* ---------------------------------------------------------
    def _f4_coef(self, a, bb, c, c2):
        m, g, gi = self.m, self.gauss, self.ginv
        norm = self.b.reduce(gi[a] * gi[bb] * gi[-c % m] * gi[-c2 % m])
        first = [g[-(c + i) % m] * g[-i % m] for i in range(m)]
        second = [g[-(c2 + j) % m] * g[-j % m] for j in range(m)]
        pair = [norm * g[(a + s) % m] * g[(bb + s) % m] for s in range(m)]
        red = self.b.reduce
        return [[red(pair[(i + j) % m] * first[i] * second[j]) for j in range(m)]
                for i in range(m)]

    def _f4_grid(self, coef):
        """2-D transform: grid[u][v] = sum_ij c_ij zeta^(iu + jv)."""
        m, zm, red = self.m, self.zm, self.b.reduce
        # transform rows over j for every v
        half = [[red(sum(row[j] * zm[j * v % m] for j in range(m))) for v in range(m)]
                for row in coef]
        return [[red(sum(half[i][v] * zm[i * u % m] for i in range(m))) for v in range(m)]
                for u in range(m)]

    def appell_f4(self, a: int, bb: int, c: int, c2: int, x: int, y: int) -> CycValue:
        if x == 0 or y == 0:
            return self.b.zero()
        m = self.m
        a, bb, c, c2 = a % m, bb % m, c % m, c2 % m
        key = (APPELL_F4, a, bb, c, c2)
        u, v = self.ctx.dlog[x], self.ctx.dlog[y]
        grid = self._vec.get(key)
        if grid is not None:
            return self.b.wrap(grid[u][v]) * Fraction(1, m * m)
        coef = self._coef.get(key)
        if coef is None:
            self._check_cache()
            coef = self._f4_coef(a, bb, c, c2)
            self._coef[key] = coef
            zm = self.zm
            s = sum(coef[i][j] * zm[(i * u + j * v) % m]
                    for i in range(m) for j in range(m))
            return self.b.wrap(self.b.reduce(s)) * Fraction(1, m * m)
        grid = self._f4_grid(coef)
        self._vec[key] = grid
        return self.b.wrap(grid[u][v]) * Fraction(1, m * m)


@lru_cache(maxsize=32)
def evaluator(ctx: FieldCtx, b: Backend) -> SeriesEvaluator:
    return SeriesEvaluator(ctx, b)


# -- functional surface ------------------------------------------------------

def greene_F(ctx: FieldCtx, b: Backend, spec: SeriesSpec) -> CycValue:
    if spec.family != GREENE:
        raise SeriesError(f"expected a greene spec, got {spec.family}")
    return evaluator(ctx, b).greene(spec.uppers, spec.lowers, spec.x)


def mccarthy_F_star(ctx: FieldCtx, b: Backend, spec: SeriesSpec) -> CycValue:
    if spec.family != MCCARTHY:
        raise SeriesError(f"expected a mccarthy spec, got {spec.family}")
    return evaluator(ctx, b).mccarthy(spec.uppers, spec.lowers, spec.x)


def fuselier_P(ctx: FieldCtx, b: Backend, a: int, bb: int, c: int, x: int) -> CycValue:
    return evaluator(ctx, b).fuselier_P(a, bb, c, x)


def fuselier_F(ctx: FieldCtx, b: Backend, a: int, bb: int, c: int, x: int) -> CycValue:
    return evaluator(ctx, b).fuselier_F(a, bb, c, x)


def appell_F4_star(ctx: FieldCtx, b: Backend, a: int, bb: int, c: int, c2: int,
                   x: int, y: int) -> CycValue:
    return evaluator(ctx, b).appell_f4(a, bb, c, c2, x, y)


def evaluate(ctx: FieldCtx, b: Backend, spec: SeriesSpec) -> CycValue:
    ev = evaluator(ctx, b)
    if spec.family == GREENE:
        return ev.greene(spec.uppers, spec.lowers, spec.x)
    if spec.family == MCCARTHY:
        return ev.mccarthy(spec.uppers, spec.lowers, spec.x)
    if spec.family == FUSELIER_P:
        return ev.fuselier_P(*spec.uppers, *spec.lowers, spec.x)
    if spec.family == FUSELIER_F:
        return ev.fuselier_F(*spec.uppers, *spec.lowers, spec.x)
    return ev.appell_f4(*spec.uppers, *spec.lowers, spec.x, spec.y)


def greene_mccarthy_relation_check(ctx: FieldCtx, b: Backend, spec: SeriesSpec):
    """Residual of starred = prod (Ai choose Bi)^-1 * Greene.

    Returns None when the relation's hypotheses (A0 nontrivial, Ai != Bi) fail.
    """
    m = ctx.q - 1
    ups, lows = spec.uppers, spec.lowers
    if ups[0] % m == 0 or any((a - c) % m == 0 for a, c in zip(ups[1:], lows)):
        return None
    ev = evaluator(ctx, b)
    star = ev.mccarthy(ups, lows, spec.x)
    greene = ev.greene(ups, lows, spec.x)
    factor = b.one()
    for a, c in zip(ups[1:], lows):
        factor = factor * binom(ctx, b, a, c)
    return star - greene / factor

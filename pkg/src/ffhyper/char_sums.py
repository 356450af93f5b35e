"""Gauss sums, Jacobi sums and Greene binomial coefficients.

All sums are cached per (field, backend) pair in a :class:`SumTables`.  The
binomial coefficients come from the Jacobi-sum definition

    (A choose B) = B(-1)/q * J(A, conj(B)),

not from the Gauss-sum factorization, so the latter stays an independent check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .characters import char_eval, root_tables, sign_at_minus_one, theta
from .field import FieldCtx
from .value_domain import Backend, CycValue


class SumTables:
    """Raw-payload caches for one (field, backend) pair.

    ``gauss[k]`` is g(T^k); ``binom_rows[a][c]`` is (T^a choose T^c), built on
    first use since it costs O(q^3) exponent additions.
    """

    def __init__(self, ctx: FieldCtx, b: Backend):
        self.ctx = ctx
        self.b = b
        self.q = ctx.q
        self.m = ctx.q - 1
        rt = root_tables(ctx, b)
        self.zm = rt.mult
        self.full = rt.full
        self.gauss = self._gauss_sums()
        self._binom = None
        self._pairs = None

    def _gauss_sums(self) -> list:
        ctx, m, p = self.ctx, self.m, self.ctx.p
        n = p * m
        full = self.full
        out = []
        for k in range(m):
            acc = 0
            for x in range(1, self.q):
                acc += full[(p * k * ctx.dlog[x] + m * ctx.trace_table[x]) % n]
            out.append(self.b.reduce(acc))
        return out

    def log_pairs(self) -> list[tuple[int, int]]:
        """(dlog x, dlog(1-x)) for x not in {0, 1}."""
        if self._pairs is None:
            ctx = self.ctx
            self._pairs = [(ctx.dlog[x], ctx.dlog[ctx.sub(1, x)])
                           for x in range(2, self.q)
                           if ctx.sub(1, x) != 0]
        return self._pairs

    def jacobi_raw(self, a: int, c: int):
        """Raw J(T^a, T^c) = sum_x T^a(x) T^c(1-x)."""
        m, zm = self.m, self.zm
        counts = [0] * m
        for u, v in self.log_pairs():
            counts[(a * u + c * v) % m] += 1
        return self.b.reduce(sum(n * zm[j] for j, n in enumerate(counts) if n))

    @property
    def binom_rows(self) -> list[list]:
        if self._binom is None:
            self._binom = self._build_binom()
        return self._binom

    def _build_binom(self) -> list[list]:
        m, b = self.m, self.b
        qinv = b.raw(b.const(Fraction(1, self.q)))
        rows = []
        for a in range(m):
            row = []
            for c in range(m):
                sign = sign_at_minus_one(self.ctx, c)
                row.append(b.reduce(sign * qinv * self.jacobi_raw(a, -c % m)))
            rows.append(row)
        return rows


@lru_cache(maxsize=32)
def sum_tables(ctx: FieldCtx, b: Backend) -> SumTables:
    return SumTables(ctx, b)


def gauss_sum(ctx: FieldCtx, b: Backend, k: int) -> CycValue:
    return b.wrap(sum_tables(ctx, b).gauss[k % (ctx.q - 1)])


def gauss_sum_direct(ctx: FieldCtx, b: Backend, k: int) -> CycValue:
    """Defining sum evaluated through char_eval/theta (no cache)."""
    acc = b.zero()
    for x in ctx.nonzero():
        acc = acc + char_eval(ctx, b, k, x) * theta(ctx, b, x)
    return acc


def jacobi_sum(ctx: FieldCtx, b: Backend, a: int, c: int) -> CycValue:
    m = ctx.q - 1
    return b.wrap(sum_tables(ctx, b).jacobi_raw(a % m, c % m))


def binom(ctx: FieldCtx, b: Backend, a: int, c: int) -> CycValue:
    m = ctx.q - 1
    t = sum_tables(ctx, b)
    if t._binom is not None:
        return b.wrap(t._binom[a % m][c % m])
    sign = sign_at_minus_one(ctx, c)
    return sign * jacobi_sum(ctx, b, a, -c) / ctx.q


def build_binom_table(ctx: FieldCtx, b: Backend) -> list[list]:
    """Full (q-1)x(q-1) table of binomial coefficients as CycValues."""
    rows = sum_tables(ctx, b).binom_rows
    return [[b.wrap(v) for v in row] for row in rows]

"""Brute-force reference implementations, straight from the definitions.

Everything here uses plain complex arithmetic and only the field operations
of FieldCtx (add/mul/pow); no tables, transforms or caches from the package.
Slow on purpose; use only with small q.
"""

import cmath
import math
from functools import lru_cache


def zeta(n, k):
    return cmath.exp(2j * math.pi * (k % n) / n)


@lru_cache(maxsize=None)
def _walk_logs(ctx):
    # discrete logs by walking powers of g
    logs, y = {}, 1
    for e in range(ctx.q - 1):
        logs[y] = e
        y = ctx.mul(y, ctx.g)
    return logs


def chi(ctx, k, x):
    if x == 0:
        return 0
    return zeta(ctx.q - 1, k * _walk_logs(ctx)[x])


def trace(ctx, x):
    t, y = 0, x
    for _ in range(ctx.r):
        t = ctx.add(t, y)
        y = ctx.pow(y, ctx.p)
    assert t < ctx.p
    return t


def theta(ctx, x):
    return zeta(ctx.p, trace(ctx, x))


def gauss(ctx, k):
    return sum(chi(ctx, k, x) * theta(ctx, x) for x in range(1, ctx.q))


def jacobi(ctx, a, c):
    return sum(chi(ctx, a, x) * chi(ctx, c, ctx.sub(1, x)) for x in range(ctx.q))


def binom(ctx, a, c):
    return chi(ctx, c, ctx.neg(1)) / ctx.q * jacobi(ctx, a, -c)


def greene(ctx, ups, lows, x):
    q, m = ctx.q, ctx.q - 1
    total = 0
    for k in range(m):
        term = binom(ctx, ups[0] + k, k)
        for a, c in zip(ups[1:], lows):
            term *= binom(ctx, a + k, c + k)
        total += term * chi(ctx, k, x)
    return q / m * total


def mccarthy(ctx, ups, lows, x):
    m = ctx.q - 1
    n = len(lows)
    g = {k % m: gauss(ctx, k) for k in range(m)}
    total = 0
    for k in range(m):
        term = g[-k % m] * chi(ctx, k, ctx.neg(1)) ** (n + 1) * chi(ctx, k, x)
        for a in ups:
            term *= g[(a + k) % m] / g[a % m]
        for c in lows:
            term *= g[(-c - k) % m] / g[-c % m]
        total += term
    return total / m


def f4_star(ctx, a, bb, c, c2, x, y):
    m = ctx.q - 1
    g = {k: gauss(ctx, k) for k in range(m)}
    norm = g[a % m] * g[bb % m] * g[-c % m] * g[-c2 % m]
    total = 0
    for k in range(m):
        for j in range(m):
            total += (g[(a + k + j) % m] * g[(bb + k + j) % m] * g[(-c - k) % m]
                      * g[(-c2 - j) % m] * g[-j % m] * g[-k % m]
                      * chi(ctx, k, x) * chi(ctx, j, y))
    return total / (norm * m * m)


def close(a, c, tol=1e-7):
    a, c = complex(a), complex(c)
    return abs(a - c) <= tol * max(1.0, abs(a), abs(c))

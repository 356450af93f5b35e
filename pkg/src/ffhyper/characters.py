"""Multiplicative and additive characters of F_q.

A multiplicative character is named by its dual exponent k (mod q-1): the
character T^k with T(g) = zeta_{q-1} for the field's primitive element g.
Every character is extended by chi(0) = 0, the trivial one included.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .field import FieldCtx
from .value_domain import Backend, CycValue

EPS, PHI, CHI3, CHI4 = "eps", "phi", "chi3", "chi4"


class CharacterError(ValueError):
    """A requested character does not exist over this field."""


@dataclass(frozen=True)
class RootTables:
    """Raw payloads of zeta_{p(q-1)}^j, zeta_{q-1}^j and zeta_p^j."""

    full: tuple
    mult: tuple
    add: tuple


@lru_cache(maxsize=64)
def root_tables(ctx: FieldCtx, b: Backend) -> RootTables:
    if b.p != ctx.p or b.m != ctx.q - 1:
        raise CharacterError(
            f"backend built for p={b.p}, m={b.m} cannot serve F_{ctx.q}")
    full = b.raw_roots(ctx.p * (ctx.q - 1))
    m = ctx.q - 1
    return RootTables(full=tuple(full),
                      mult=tuple(full[ctx.p * j] for j in range(m)),
                      add=tuple(full[m * j] for j in range(ctx.p)))


def char_eval(ctx: FieldCtx, b: Backend, k: int, x: int) -> CycValue:
    """T^k(x), with the value 0 at x = 0 for every k."""
    if x == 0:
        return b.zero()
    m = ctx.q - 1
    return b.wrap(root_tables(ctx, b).mult[k * ctx.dlog[x] % m])


def theta(ctx: FieldCtx, b: Backend, x: int) -> CycValue:
    """Canonical additive character zeta_p^tr(x)."""
    return b.wrap(root_tables(ctx, b).add[ctx.trace_table[x]])


def special_char(ctx: FieldCtx, which: str) -> int:
    m = ctx.q - 1
    if which == EPS:
        return 0
    if which == PHI:
        return m // 2
    if which == CHI4:
        if m % 4:
            raise CharacterError(f"no quartic character: q = {ctx.q} is not 1 mod 4")
        return m // 4
    if which == CHI3:
        if m % 3:
            raise CharacterError(f"no cubic character: q = {ctx.q} is not 1 mod 3")
        return m // 3
    raise CharacterError(f"unknown character name {which!r}")


def has_char(ctx: FieldCtx, which: str) -> bool:
    try:
        special_char(ctx, which)
    except CharacterError:
        return False
    return True


def order(ctx: FieldCtx, k: int) -> int:
    m = ctx.q - 1
    return m // gcd(k % m, m)


def is_square(ctx: FieldCtx, k: int) -> bool:
    return k % 2 == 0


def char_sqrt(ctx: FieldCtx, k: int) -> int:
    """Canonical square root T^(k/2), k reduced into [0, q-1)."""
    k %= ctx.q - 1
    if k % 2:
        raise CharacterError(f"T^{k} is not a square")
    return k // 2


def sign_at_minus_one(ctx: FieldCtx, k: int) -> int:
    """T^k(-1) as +1/-1; computed from dlog(-1) = (q-1)/2."""
    m = ctx.q - 1
    return -1 if (k * (m // 2)) % m else 1


@dataclass(frozen=True)
class CharInfo:
    k: int
    order: int
    is_square: bool
    sqrt: int | None
    inverse: int
    sign_at_minus_one: int


def char_algebra(ctx: FieldCtx, k: int) -> CharInfo:
    m = ctx.q - 1
    k %= m
    sq = k % 2 == 0
    return CharInfo(k=k, order=order(ctx, k), is_square=sq,
                    sqrt=k // 2 if sq else None, inverse=-k % m,
                    sign_at_minus_one=sign_at_minus_one(ctx, k))


def sign_by_order(ctx: FieldCtx, k: int) -> int:
    """T^k(-1) from the order criterion: -1 iff the order n is even and
    (q-1)/n is odd."""
    n = order(ctx, k)
    if n > 1 and n % 2 == 0 and ((ctx.q - 1) // n) % 2 == 1:
        return -1
    return 1


def delta_char(ctx: FieldCtx, k: int) -> int:
    return 1 if k % (ctx.q - 1) == 0 else 0


def delta_point(x: int) -> int:
    return 1 if x == 0 else 0

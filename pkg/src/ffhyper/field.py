"""Finite fields F_q, q = p^r, with discrete-log and trace tables.

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{r-1} p^{r-1}`` where
``(c_0, ..., c_{r-1})`` is the coordinate vector over F_p in the power basis of
the modulus.  With that encoding the integer n embeds in F_q as ``n % p``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .value_domain import is_probable_prime

MAX_Q = 10**5


class FieldError(ValueError):
    pass


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Product of coefficient lists (low to high) modulo a monic ``mod``."""
    r = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for d in range(len(prod) - 1, r - 1, -1):
        c = prod[d] % p
        if c:
            for i in range(r + 1):
                prod[d - r + i] -= c * mod[i]
    out = [c % p for c in prod[:r]]
    return out + [0] * (r - len(out))


def _has_root_factor(f: list[int], p: int) -> bool:
    """True when some monic polynomial of degree 1..deg(f)//2 divides f."""
    r = len(f) - 1
    for d in range(1, r // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _divides(list(low) + [1], f, p):
                return True
    return False


def _divides(g: list[int], f: list[int], p: int) -> bool:
    rem = list(f)
    dg = len(g) - 1
    for d in range(len(rem) - 1, dg - 1, -1):
        c = rem[d] % p
        if c:
            for i in range(dg + 1):
                rem[d - dg + i] = (rem[d - dg + i] - c * g[i]) % p
    return not any(c % p for c in rem[:dg])


def canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r.

    Coefficient tuples are compared constant term first; the leading 1 is
    included in the returned tuple.
    """
    for low in itertools.product(range(p), repeat=r):
        f = list(low) + [1]
        if f[0] == 0:
            continue
        if not _has_root_factor(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {r} over F_{p}")


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """A materialized finite field.

    ``exp[m]`` is the encoding of g^m, ``dlog[x]`` its inverse (``dlog[0]`` is
    -1), ``trace_table[x]`` the absolute trace as an integer in [0, p), and
    ``succ[x]`` the encoding of x + 1.
    """

    p: int
    r: int
    q: int
    modulus: tuple[int, ...] | None
    g: int
    exp: tuple[int, ...] = field(repr=False)
    dlog: tuple[int, ...] = field(repr=False)
    trace_table: tuple[int, ...] = field(repr=False)
    succ: tuple[int, ...] = field(repr=False)

    # -- encoding helpers -------------------------------------------------
    def coords(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def from_coords(self, cs) -> int:
        x = 0
        for c in reversed(list(cs)):
            x = x * self.p + c % self.p
        return x

    def elem(self, n: int) -> int:
        """Image of the integer n in F_q."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def format(self, x: int) -> str:
        if self.r == 1:
            return str(x)
        terms = []
        for i, c in enumerate(self.coords(x)):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(str(c) if i == 0 else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(reversed(terms)) or "0"

    # -- arithmetic ---------------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.dlog[a] + self.dlog[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_q")
        return self.exp[-self.dlog[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return 0
        return self.exp[self.dlog[a] * e % (self.q - 1)]

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        # a + b = a * (1 + b/a)
        return self.mul(a, self.succ[self.div(b, a)])

    def neg(self, a: int) -> int:
        if a == 0:
            return 0
        return self.exp[(self.dlog[a] + (self.q - 1) // 2) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- convenience methods----------------------------------------------------
    def log(self, x: int) -> int:
        return dlog(self, x)

    def trace(self, x: int) -> int:
        return self.trace_table[x]

    def sqrt(self, x: int) -> int | None:
        return sqrt_elem(self, x)


def build_field(p: int, r: int = 1) -> FieldCtx:
    """Construct F_{p^r} with canonical modulus and primitive element."""
    if p == 2 or not is_probable_prime(p):
        raise FieldError(f"p = {p} must be an odd prime")
    if r < 1:
        raise FieldError("extension degree must be at least 1")
    q = p**r
    if q > MAX_Q:
        raise FieldError(f"q = {q} exceeds the supported bound {MAX_Q}")

    if r == 1:
        modulus = None
        mulvec = None
    else:
        modulus = canonical_modulus(p, r)
        mod = list(modulus)

        def mulvec(a, b):
            return _poly_mulmod(a, b, mod, p)

    def encode(cs):
        x = 0
        for c in reversed(cs):
            x = x * p + c
        return x

    def powers(cs):
        """Encodings of cs^0, cs^1, ... until the cycle closes (at most q-1)."""
        seq = []
        if r == 1:
            a, acc = cs[0], 1
            for _ in range(q - 1):
                seq.append(acc)
                acc = acc * a % p
                if acc == 1:
                    break
            return seq
        acc = [1] + [0] * (r - 1)
        for _ in range(q - 1):
            seq.append(encode(acc))
            acc = mulvec(acc, cs)
            if acc[0] == 1 and not any(acc[1:]):
                break
        return seq

    g = None
    exp: list[int] = []
    # candidates ordered lexicographically on (c_0, c_1, ...)
    for cs in itertools.product(range(p), repeat=r):
        if not any(cs):
            continue
        seq = powers(list(cs))
        if len(seq) == q - 1:
            g, exp = encode(list(cs)), seq
            break
    if g is None:
        raise FieldError("no primitive element found")

    dl = [-1] * q
    for m, x in enumerate(exp):
        dl[x] = m

    # x + 1 touches only the constant coordinate
    succ = [x - x % p + (x % p + 1) % p for x in range(q)]

    # trace(x) = sum of conjugates x^(p^i), accumulated with Zech-free addition
    def add_raw(a, b):
        out, mult = 0, 1
        for _ in range(r):
            a, ca = divmod(a, p)
            b, cb = divmod(b, p)
            out += ((ca + cb) % p) * mult
            mult *= p
        return out

    tr = [0] * q
    for x in range(1, q):
        m = dl[x]
        s = 0
        for i in range(r):
            s = add_raw(s, exp[m * p**i % (q - 1)])
        if s >= p:
            raise FieldError("trace left the prime field")
        tr[x] = s

    return FieldCtx(p=p, r=r, q=q, modulus=modulus, g=g, exp=tuple(exp),
                    dlog=tuple(dl), trace_table=tuple(tr), succ=tuple(succ))


def dlog(ctx: FieldCtx, x: int) -> int:
    """Exponent m in [0, q-1) with g^m = x."""
    if x == 0:
        raise FieldError("discrete log of 0 is undefined")
    return ctx.dlog[x]


def trace(ctx: FieldCtx, x: int) -> int:
    return ctx.trace_table[x]


def sqrt_elem(ctx: FieldCtx, x: int) -> int | None:
    """Canonical square root g^(dlog(x)/2), or None for a non-residue."""
    if x == 0:
        return 0
    m = ctx.dlog[x]
    if m % 2:
        return None
    return ctx.exp[m // 2]


def parse_q(q: int) -> tuple[int, int]:
    """Split an odd prime power into (p, r)."""
    if q < 3:
        raise FieldError(f"q = {q} is not an odd prime power")
    for p in range(3, int(q**0.5) + 2, 2):
        if q % p == 0:
            r, n = 0, q
            while n % p == 0:
                n //= p
                r += 1
            if n != 1 or not is_probable_prime(p):
                raise FieldError(f"q = {q} is not a prime power")
            return p, r
    if q % 2 == 0:
        raise FieldError(f"q = {q} is even")
    return q, 1

"""Cyclotomic value arithmetic.

Every character sum lives in Q(zeta_N) with N = p*(q-1).  Two backends realize
that field:

* ``complex``: the usual embedding zeta_N -> exp(2*pi*i/N), values are Python
  ``complex`` numbers compared with a relative tolerance.
* ``modular``: a ring homomorphism Z[zeta_N, 1/q] -> Z/lZ for a prime
  l = 1 (mod N), values are :class:`ModValue` residues compared exactly.

An identity that holds in Q(zeta_N) holds under every such homomorphism, so a
nonzero residual modulo any l disproves it.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

COMPLEX = "complex"
MODULAR = "modular"

DEFAULT_TOL = 1e-7
LOW_BOUND = 1 << 31
HIGH_BOUND = 1 << 40
SEARCH_STEPS = 200_000


class BackendError(ValueError):
    """Raised on misuse of a backend (mismatch, bad root order, failed search)."""


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class ModValue:
    """Residue modulo the auxiliary prime of a modular backend."""

    __slots__ = ("v", "ell")

    def __init__(self, v: int, ell: int):
        self.v = v % ell
        self.ell = ell

    def _coerce(self, other) -> int:
        if type(other) is ModValue and other.ell == self.ell:
            return other.v
        if isinstance(other, ModValue):
            if other.ell != self.ell:
                raise BackendError("values from different modular backends")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.ell)
        return NotImplemented

    def __add__(self, other):
        if type(other) is ModValue and other.ell == self.ell:
            return ModValue(self.v + other.v, self.ell)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModValue(self.v + o, self.ell)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is ModValue and other.ell == self.ell:
            return ModValue(self.v - other.v, self.ell)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModValue(self.v - o, self.ell)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModValue(o - self.v, self.ell)

    def __mul__(self, other):
        if type(other) is ModValue and other.ell == self.ell:
            return ModValue(self.v * other.v, self.ell)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModValue(self.v * o, self.ell)

    __rmul__ = __mul__

    def __neg__(self):
        return ModValue(-self.v, self.ell)

    def __pos__(self):
        return self

    def inverse(self) -> "ModValue":
        if self.v == 0:
            raise ZeroDivisionError("division by a zero residue")
        return ModValue(pow(self.v, -1, self.ell), self.ell)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        o %= self.ell
        if o == 0:
            raise ZeroDivisionError("division by a zero residue")
        return ModValue(self.v * pow(o, -1, self.ell), self.ell)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModValue(o, self.ell) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModValue(pow(self.v, e, self.ell), self.ell)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self.v - o) % self.ell == 0

    def __hash__(self):
        return hash((self.v, self.ell))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.ell})"


CycValue = Union[complex, ModValue]


@dataclass(frozen=True, eq=False)
class Backend:
    """Realization of Q(zeta_{p*m}); ``m`` is q-1.

    For the modular kind, ``ell``, ``omega_p`` (order p) and ``omega_m``
    (order m) are fixed at construction.  zeta_{p*m} maps to omega_p*omega_m.
    """

    kind: str
    p: int
    m: int
    seed: int | None = None
    ell: int | None = None
    omega_p: int | None = None
    omega_m: int | None = None
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        # plain attribute: this flag is read on every arithmetic step
        object.__setattr__(self, "exact", self.kind == MODULAR)

    @property
    def order(self) -> int:
        return self.p * self.m

    @property
    def label(self) -> str:
        if self.exact:
            return f"modular[{self.ell}]"
        return "complex"

    # raw payloads: int residues (modular) or complex numbers
    def wrap(self, raw) -> CycValue:
        if self.exact:
            return ModValue(raw, self.ell)
        return complex(raw)

    def raw(self, value) -> int | complex:
        if self.exact:
            if isinstance(value, ModValue):
                return value.v
            return ModValue(0, self.ell)._coerce(value) % self.ell
        return complex(value)

    def reduce(self, raw):
        return raw % self.ell if self.exact else raw

    def const(self, c: int | Fraction) -> CycValue:
        if self.exact:
            return ModValue(0, self.ell) + c
        return complex(c)

    def zero(self) -> CycValue:
        return self.const(0)

    def one(self) -> CycValue:
        return self.const(1)

    def raw_roots(self, n: int) -> list:
        """Raw payloads of zeta_n^j for j = 0..n-1."""
        if self.order % n:
            raise BackendError(f"{n} does not divide p*(q-1) = {self.order}")
        if self.exact:
            z = pow(self.omega_p * self.omega_m % self.ell, self.order // n, self.ell)
            out, acc = [], 1
            for _ in range(n):
                out.append(acc)
                acc = acc * z % self.ell
            return out
        return [cmath.exp(2j * math.pi * j / n) for j in range(n)]


def make_backend(kind: str, p: int, m: int, seed: int | None = 0,
                 tol: float = DEFAULT_TOL) -> Backend:
    """Build a backend for Q(zeta_{p*m}).

    The modular search starts at a seed-derived offset in [2^31, 2^40] and
    returns the first prime l = 1 (mod p*m) above it.
    """
    if not is_probable_prime(p):
        raise BackendError(f"p = {p} is not prime")
    if m < 1:
        raise BackendError("m must be positive")
    if kind == COMPLEX:
        return Backend(COMPLEX, p, m, seed=seed, tol=tol)
    if kind != MODULAR:
        raise BackendError(f"unknown backend kind {kind!r}")
    n = p * m
    rng = random.Random(seed)
    start = rng.randrange(LOW_BOUND, HIGH_BOUND)
    ell = start - (start % n) + 1
    if ell <= start:
        ell += n
    for _ in range(SEARCH_STEPS):
        if ell % p and is_probable_prime(ell):
            break
        ell += n
    else:
        raise BackendError(
            f"no prime l = 1 mod {n} within {SEARCH_STEPS} steps above {start}")
    omega_p = _element_of_order(ell, p, rng)
    omega_m = _element_of_order(ell, m, rng)
    return Backend(MODULAR, p, m, seed=seed, ell=ell, omega_p=omega_p,
                   omega_m=omega_m, tol=tol)


def _element_of_order(ell: int, n: int, rng: random.Random) -> int:
    if n == 1:
        return 1
    factors = prime_factors(n)
    while True:
        h = rng.randrange(2, ell - 1)
        w = pow(h, (ell - 1) // n, ell)
        if all(pow(w, n // f, ell) != 1 for f in factors):
            return w


def root_of_unity(b: Backend, n: int, k: int) -> CycValue:
    """zeta_n^k for n dividing p*(q-1)."""
    if n <= 0 or b.order % n:
        raise BackendError(f"{n} does not divide p*(q-1) = {b.order}")
    k %= n
    if b.exact:
        z = pow(b.omega_p * b.omega_m % b.ell, b.order // n, b.ell)
        return ModValue(pow(z, k, b.ell), b.ell)
    return cmath.exp(2j * math.pi * k / n)


def values_equal(b: Backend, a, c, tol: float | None = None) -> bool:
    """Exact residue comparison (modular) or relative-tolerance test (complex)."""
    if b.exact:
        if type(a) is ModValue and type(c) is ModValue and a.ell == c.ell == b.ell:
            return a.v == c.v
        for v in (a, c):
            if isinstance(v, ModValue) and v.ell != b.ell:
                raise BackendError("value does not belong to this backend")
            if isinstance(v, (complex, float)):
                raise BackendError("complex value compared under a modular backend")
        return (b.raw(a) - b.raw(c)) % b.ell == 0
    for v in (a, c):
        if isinstance(v, ModValue):
            raise BackendError("modular value compared under the complex backend")
    tol = b.tol if tol is None else tol
    a, c = complex(a), complex(c)
    return abs(a - c) <= tol * max(1.0, abs(a), abs(c))


def residual_text(b: Backend, a, c) -> str:
    """Printable residual: magnitude for complex, '0'/'nonzero' for modular."""
    if b.exact:
        return "0" if values_equal(b, a, c) else "nonzero"
    return f"{abs(complex(a) - complex(c)):.3e}"


def format_value(value) -> str:
    if isinstance(value, ModValue):
        return str(value.v)
    z = complex(value)
    # clear float noise so that exact zeros print as 0 rather than -1e-17
    re_, im = (0.0 if abs(t) < 1e-12 else t for t in (z.real, z.imag))
    return f"{re_ + 0.0:.10g}{im + 0.0:+.10g}j"

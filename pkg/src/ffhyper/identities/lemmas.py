"""Gauss/Jacobi-sum and binomial-coefficient identities (the LEMMA_PACK group)."""

from fractions import Fraction

from ..characters import sign_by_order
from .engine import LEMMA, Identity, register

GROUP = "LEMMA_PACK"


def _lemma(name, summary, chars=(), points=(), hypotheses=(), congruence=None,
           fixed_chars=False):
    def deco(fn):
        lhs, rhs = fn()
        register(Identity(id=f"{GROUP}:{name}", summary=summary, chars=chars,
                          points=points, hypotheses=hypotheses, lhs=lhs, rhs=rhs,
                          kind=LEMMA, congruence=congruence, group=GROUP,
                          fixed_chars=fixed_chars))
        return fn
    return deco


@_lemma("g1", "g(T^k) g(T^-k) = q T^k(-1) - (q-1) delta(T^k)", chars=("k",))
def _g1():
    def lhs(ev, k):
        return ev.g(k) * ev.g(-k)

    def rhs(ev, k):
        return ev.one * (ev.q * ev.sgn(k) - (ev.q - 1) * ev.dc(k))
    return lhs, rhs


@_lemma("g3", "1/g(conj A) = A(-1) g(A)/q - (q-1)/q delta(A)", chars=("A",))
def _g3():
    def lhs(ev, A):
        return 1 / ev.g(-A)

    def rhs(ev, A):
        return ev.sgn(A) * ev.g(A) / ev.q - Fraction(ev.q - 1, ev.q) * ev.dc(A)
    return lhs, rhs


@_lemma("gj1", "J(A,B) = g(A)g(B)/g(AB) + (q-1) B(-1) delta(AB)", chars=("A", "B"))
def _gj1():
    def lhs(ev, A, B):
        return ev.J(A, B)

    def rhs(ev, A, B):
        return ev.g(A) * ev.g(B) / ev.g(A + B) + (ev.q - 1) * ev.sgn(B) * ev.dc(A + B)
    return lhs, rhs


@_lemma("g8", "binomial coefficient through Gauss sums", chars=("A", "B"))
def _g8():
    def lhs(ev, A, B):
        return ev.C(A, B)

    def rhs(ev, A, B):
        q = ev.q
        return (ev.sgn(B) * ev.g(A) * ev.g(-B) / (q * ev.g(A - B))
                + Fraction(q - 1, q) * ev.dc(A - B))
    return lhs, rhs


@_lemma("g5", "sum_chi chi(x) = (q-1) delta(1-x) for x != 0", points=("x",),
        hypotheses=(("x!=0", lambda ev, x: x != 0),))
def _g5():
    def lhs(ev, x):
        acc = ev.zero
        for k in range(ev.m):
            acc = acc + ev.ch(k, x)
        return acc

    def rhs(ev, x):
        return ev.one * ((ev.q - 1) * ev.dx(ev.sub(1, x)))
    return lhs, rhs


@_lemma("b5", "(A choose eps) = (A choose A) = -1/q + (q-1)/q delta(A)", chars=("A",))
def _b5():
    def lhs(ev, A):
        return [ev.C(A, 0), ev.C(A, A)]

    def rhs(ev, A):
        v = ev.one * (Fraction(-1, ev.q) + Fraction(ev.q - 1, ev.q) * ev.dc(A))
        return [v, v]
    return lhs, rhs


@_lemma("b7", "(eps choose A) = -A(-1)/q + (q-1)/q delta(A)", chars=("A",))
def _b7():
    def lhs(ev, A):
        return ev.C(0, A)

    def rhs(ev, A):
        return ev.one * (Fraction(-ev.sgn(A), ev.q) + Fraction(ev.q - 1, ev.q) * ev.dc(A))
    return lhs, rhs


@_lemma("b6", "(A choose B)(C choose A) product rule", chars=("A", "B", "C"))
def _b6():
    def lhs(ev, A, B, C):
        return ev.C(A, B) * ev.C(C, A)

    def rhs(ev, A, B, C):
        out = ev.C(C, B) * ev.C(C - B, A - B)
        # delta terms only when active; this lemma has the largest scan
        if ev.dc(A) or ev.dc(B - C):
            q = ev.q
            k = Fraction(q - 1, q * q)
            out = out - k * ev.sgn(B) * ev.dc(A) + k * ev.sgn(A + B) * ev.dc(B - C)
        return out
    return lhs, rhs


@_lemma("DH2", "g(A) g(phi A) = g(A^2) g(phi) conj(A)(4)", chars=("A",))
def _dh2():
    def lhs(ev, A):
        return ev.g(A) * ev.g(A + ev.phi)

    def rhs(ev, A):
        return ev.g(2 * A) * ev.g(ev.phi) * ev.chn(-A, 4)
    return lhs, rhs


@_lemma("DH3", "cubic Davenport-Hasse product", chars=("A",), congruence=(3, (1,)),
        fixed_chars=True)
def _dh3():
    def lhs(ev, A):
        c = ev.chi3
        return ev.g(A) * ev.g(A + c) * ev.g(A + 2 * c)

    def rhs(ev, A):
        c = ev.chi3
        return ev.g(3 * A) * ev.g(c) * ev.g(2 * c) * ev.chn(-A, 27)
    return lhs, rhs


@_lemma("DH4", "quartic Davenport-Hasse product", chars=("A",), congruence=(4, (1,)),
        fixed_chars=True)
def _dh4():
    def lhs(ev, A):
        c = ev.chi4
        return ev.g(A) * ev.g(A + c) * ev.g(A + ev.phi) * ev.g(A + 3 * c)

    def rhs(ev, A):
        c = ev.chi4
        return (ev.g(4 * A) * ev.g(c) * ev.g(ev.phi) * ev.g(3 * c)
                * ev.chn(-A, 256))
    return lhs, rhs


@_lemma("g2", "four-Gauss-sum convolution over chi", chars=("A", "B", "C", "D"))
def _g2():
    def lhs(ev, A, B, C, D):
        g, m = ev.tables.gauss, ev.m
        acc = 0
        for k in range(m):
            acc += (g[(A + k) % m] * g[(B + k) % m] * g[(C - k) % m]
                    * g[(D - k) % m])
        return ev.b.wrap(ev.b.reduce(acc)) / (ev.q - 1)

    def rhs(ev, A, B, C, D):
        q = ev.q
        return (ev.g(A + C) * ev.g(A + D) * ev.g(B + C) * ev.g(B + D) / ev.g(A + B + C + D)
                + q * (q - 1) * ev.sgn(A + B) * ev.dc(A + B + C + D))
    return lhs, rhs


@_lemma("sq-1", "A(-1) = -1 iff ord(A) even and (q-1)/ord(A) odd", chars=("A",),
        hypotheses=(("A!=eps", lambda ev, A: ev.nz(A)),))
def _sq1():
    def lhs(ev, A):
        return ev.ch(A, ev.neg(1))

    def rhs(ev, A):
        return ev.one * sign_by_order(ev.ctx, A)
    return lhs, rhs


@_lemma("sq-2", "A(-1) = -1 for a non-square A", chars=("A",),
        hypotheses=(("A non-square", lambda ev, A: A % 2 == 1),))
def _sq2():
    def lhs(ev, A):
        return ev.ch(A, ev.neg(1))

    def rhs(ev, A):
        return -ev.one
    return lhs, rhs

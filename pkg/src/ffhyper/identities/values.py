"""Closed-form evaluations of special 3F2 and 4F3 values."""

from fractions import Fraction

from .engine import VALUE, Identity, register


def _value(**kw):
    kw.setdefault("kind", VALUE)
    for name in ("chars", "points", "hypotheses"):
        kw.setdefault(name, ())
    return register(Identity(**kw))


def _half_sq(ev, x):
    """(1 + phi(x)) / 2: 1 on nonzero squares, 0 on non-squares."""
    return (1 + ev.ch(ev.phi, x)) / 2


def _root_pair(ev, k, r):
    """chi(1 + r) + chi(1 - r) for chi = T^k, or 0 when the root is missing."""
    if r is None:
        return ev.zero
    return ev.ch(k, ev.add(1, r)) + ev.ch(k, ev.sub(1, r))


def _branch_q(mod):
    def branch(ev, **_):
        return f"q = {ev.q % mod} mod {mod}"
    return branch


# -- quadratic-shift 4F3 values --------------------------------------------------

def _v41_ups(ev, A):
    return ([2 * A, 2 * A + ev.phi, 2 * A + ev.chi4, 2 * A - ev.chi4],
            [4 * A + ev.phi, 4 * A, ev.phi])


def _v41_pref(ev, A):
    return ev.chn(-4 * A + ev.phi, 2) / (ev.g(ev.phi) * ev.g(2 * A + ev.chi4)
                                        * ev.g(-2 * A + ev.chi4))


def _v41_corr(ev, A, x):
    """Common shape of the point-mass corrections."""
    return (ev.ch(2 * A + ev.phi, x) * ev.chn(-4 * A + ev.phi, 2) * ev.g(ev.phi)
            / (ev.q * ev.g(2 * A + ev.chi4) * ev.g(-2 * A + ev.chi4)))


_V41_CHAR_HYP = (
    ("A^2!=eps", lambda ev, A, **_: ev.nz(2 * A)),
    ("A^2!=phi", lambda ev, A, **_: ev.nz(2 * A - ev.phi)),
    ("A^2!=chi4", lambda ev, A, **_: ev.nz(2 * A - ev.chi4)),
    ("A^2!=conj(chi4)", lambda ev, A, **_: ev.nz(2 * A + ev.chi4)),
)
_V41_HYP = _V41_CHAR_HYP + (
    ("x!=0", lambda ev, A, x: x != 0),
    ("x!=1", lambda ev, A, x: x != 1),
)


def _v41i_lhs(ev, A, x):
    ups, lows = _v41_ups(ev, A)
    return ev.F(ups, lows, ev.mul(ev.e(4), x, ev.sub(1, x)))


def _v41i_rhs(ev, A, x):
    one_x = ev.sub(1, x)
    val = (_v41_pref(ev, A) * _half_sq(ev, one_x) * _half_sq(ev, x)
           * _root_pair(ev, -4 * A, ev.sqrt(one_x)) * _root_pair(ev, -4 * A, ev.sqrt(x)))
    if ev.mul(ev.e(2), x) == 1:
        val = val - _v41_corr(ev, A, x) * ev.ch(-6 * A, ev.sub(x, 1))
    return val


def _sq_branch(ev, A, x):
    s1 = ev.sqrt(x) is not None
    s2 = ev.sqrt(ev.sub(1, x)) is not None
    return "x, 1-x squares" if s1 and s2 else "not both squares"


_value(id="VALUE41_I",
       summary="4F3(A^2, phi A^2, chi4 A^2, conj(chi4) A^2; ... | 4x(1-x)) in closed form",
       chars=("A",), points=("x",), hypotheses=_V41_HYP,
       lhs=_v41i_lhs, rhs=_v41i_rhs, congruence=(4, (1,)), fixed_chars=True,
       branch=_sq_branch)


def _v41ii_lhs(ev, A, x):
    ups, lows = _v41_ups(ev, A)
    one_x = ev.sub(1, x)
    return ev.F(ups, lows, ev.div(ev.mul(ev.e(-4), x), ev.mul(one_x, one_x)))


def _v41ii_rhs(ev, A, x):
    one_x = ev.sub(1, x)
    x_1 = ev.sub(x, 1)
    r1 = ev.sqrt(one_x)
    r1 = ev.div(1, r1) if r1 is not None else None
    val = (_v41_pref(ev, A) * _half_sq(ev, one_x) * _half_sq(ev, ev.mul(x, x_1))
           * _root_pair(ev, -4 * A, r1)
           * _root_pair(ev, -4 * A, ev.sqrt(ev.div(x, x_1))))
    if ev.mul(x, x) == 1:
        val = val - _v41_corr(ev, A, x) * ev.ch(4 * A + ev.phi, x_1)
    return val


def _sq_branch_ii(ev, A, x):
    s1 = ev.sqrt(ev.sub(1, x)) is not None
    s2 = ev.sqrt(ev.sub(ev.mul(x, x), x)) is not None
    return "1-x, x^2-x squares" if s1 and s2 else "not both squares"


_value(id="VALUE41_II",
       summary="the same 4F3 at -4x/(1-x)^2 in closed form",
       chars=("A",), points=("x",), hypotheses=_V41_HYP,
       lhs=_v41ii_lhs, rhs=_v41ii_rhs, congruence=(4, (1,)), fixed_chars=True,
       branch=_sq_branch_ii)


def _v41c1_lhs(ev, A):
    ups, lows = _v41_ups(ev, A)
    return ev.F(ups, lows, 1)


def _v41c1_rhs(ev, A):
    g, q, c4 = ev.g, ev.q, ev.chi4
    val = -g(ev.phi) / (q * g(2 * A + c4) * g(-2 * A + c4))
    if q % 8 == 1:
        r = ev.sqrt(ev.e(2))
        val = val + ((2 + _root_pair(ev, -8 * A, r))
                     / (g(ev.phi) * g(2 * A + c4) * g(-2 * A + c4)))
    return val


_value(id="V41C1",
       summary="the quadratic-shift 4F3 at 1",
       chars=("A",), hypotheses=_V41_CHAR_HYP,
       lhs=_v41c1_lhs, rhs=_v41c1_rhs, congruence=(4, (1,)), fixed_chars=True,
       branch=_branch_q(8))


# -- 3F2 values at -8, -1, 1/4, 4 ----------------------------------------------------

def _v44_lhs(ev, A):
    return ev.F([2 * A, 6 * A, 4 * A + ev.phi], [8 * A, 4 * A], ev.e(-8))


def _v44_rhs(ev, A):
    g, q, phi = ev.g, ev.q, ev.phi
    s = ev.C(3 * A, 2 * A) + ev.C(3 * A + phi, 2 * A)
    c = ev.chn(-A, 4096)
    val = ev.chn(-A, 256) * g(2 * A) * g(2 * A) * g(-6 * A) / (q * g(-2 * A)) * s * s - c / q
    if ev.dc(4 * A + phi):
        val = val - ((q - 1) * c * ev.chn(phi, 2) * g(-2 * A + phi) * g(2 * A + phi)
                     / (q * q * q))
    return val


_value(id="VALUE44",
       summary="3F2(A^2, A^6, phi A^4; A^8, A^4 | -8)",
       chars=("A",),
       hypotheses=(("A^2!=eps", lambda ev, A: ev.nz(2 * A)),
                   ("A^6!=eps", lambda ev, A: ev.nz(6 * A))),
       lhs=_v44_lhs, rhs=_v44_rhs)


def _ono8_lhs(ev):
    return ev.F([ev.phi] * 3, [0, 0], ev.e(-8))


def _ono8_rhs(ev):
    s = ev.C(ev.chi4, ev.phi) + ev.C(-ev.chi4, ev.phi)
    return s * s - ev.one / ev.q


_value(id="ONO8",
       summary="3F2(phi, phi, phi; eps, eps | -8)",
       lhs=_ono8_lhs, rhs=_ono8_rhs, congruence=(4, (1,)), fixed_chars=True)


def _re_times_two(x, x_conj):
    return x + x_conj


def _v45_lhs(ev, C):
    v = ev.F([ev.phi, 2 * C + ev.phi, C + ev.phi], [2 * C, C], ev.neg(1))
    return [v, v]


def _v45_rhs(ev, C):
    q, phi, c4 = ev.q, ev.phi, ev.chi4
    base = ev.one / q
    if (C + c4) % 2:
        return [base, base]
    out = []
    for D in ((C + c4) // 2, (C + c4) // 2 + phi):
        x = ev.J(D, phi) * ev.J(-D + c4, phi)
        xc = ev.J(-D, phi) * ev.J(D - c4, phi)
        out.append(base + _re_times_two(x, xc) / (q * q))
    return out


def _v45_branch(ev, C):
    return "C chi4 square" if (C + ev.chi4) % 2 == 0 else "C chi4 non-square"


_value(id="VALUE45",
       summary="3F2(phi, phi C^2, phi C; C^2, C | -1)",
       chars=("C",),
       hypotheses=(("ord(C) not in {1,2,4}", lambda ev, C: ev.order(C) not in (1, 2, 4)),),
       lhs=_v45_lhs, rhs=_v45_rhs, congruence=(8, (1,)), fixed_chars=True,
       branch=_v45_branch)


_EVEN_ORDER_GT4 = (
    ("square", lambda ev, **kw: next(iter(kw.values())) % 2 == 0),
    ("ord>4", lambda ev, **kw: ev.order(next(iter(kw.values()))) > 4),
)


def _v46_lhs(ev, C):
    return ev.F([-C, 3 * C, C], [2 * C, C + ev.phi], ev.div(1, ev.e(4)))


def _v46_rhs(ev, C):
    q = ev.q
    c4 = ev.chn(C, 4)
    if q % 12 == 11:
        return -c4 / q
    c3 = ev.chi3
    x = ev.J(C, c3) * ev.J(-C, c3)
    xc = ev.J(-C, 2 * c3) * ev.J(C, 2 * c3)
    return c4 / (q * q) * (q + _re_times_two(x, xc))


_value(id="VALUE46",
       summary="3F2(conj(C), C^3, C; C^2, phi C | 1/4)",
       chars=("C",), hypotheses=_EVEN_ORDER_GT4,
       lhs=_v46_lhs, rhs=_v46_rhs, congruence=(12, (1, 11)), fixed_chars=True,
       branch=_branch_q(12))


def _v43_lhs(ev, A):
    return ev.F([-2 * A, 2 * A, ev.phi], [4 * A, -4 * A], ev.e(-8))


def _v43_rhs(ev, A):
    g, q, phi, C = ev.g, ev.q, ev.phi, ev.C
    binv = 1 / C(-2 * A, -4 * A)
    gg = g(ev.phi) / (g(-4 * A) * g(4 * A + phi))
    val = (gg * binv * (C(-A, 2 * A) + C(phi - A, 2 * A))
           * (C(A, -2 * A) + C(phi + A, -2 * A)))
    d = ev.dc(-4 * A)
    if d:
        val = val + Fraction(q - 1, q) * binv * ev.F([2 * A, -2 * A, phi], [0, -4 * A], ev.e(-8))
    val = val - C(phi, -4 * A) * binv / (q * q)
    val = val - (q - 1) * gg / (q * q * q) * binv * (d + q)
    return val


_value(id="VALUE43",
       summary="3F2(conj(A^2), A^2, phi; A^4, conj(A^4) | -8)",
       chars=("A",),
       hypotheses=(("A^2!=eps", lambda ev, A: ev.nz(2 * A)),
                   ("A^6!=eps", lambda ev, A: ev.nz(6 * A)),
                   ("A^4!=phi", lambda ev, A: ev.nz(4 * A - ev.phi))),
       lhs=_v43_lhs, rhs=_v43_rhs)


def _eg43_lhs(ev, A):
    return ev.F([ev.phi, 2 * A, -2 * A], [4 * A, -4 * A], ev.e(-8))


def _eg43_rhs(ev, A):
    J, q = ev.J, ev.q
    a = J(2 * A, A)
    b = J(2 * A, A + ev.phi)
    return (ev.one / q + ev.chn(-2 * A, 4) * J(-2 * A, 6 * A) / (q * q * J(2 * A, 2 * A))
            * (a * a + b * b))


_value(id="EG_FROM_43",
       summary="3F2(phi, A^2, conj(A^2); A^4, conj(A^4) | -8) through Jacobi sums",
       chars=("A",),
       hypotheses=(("ord(A) not in {1,2,3,4,6,8}",
                    lambda ev, A: ev.order(A) not in (1, 2, 3, 4, 6, 8)),),
       lhs=_eg43_lhs, rhs=_eg43_rhs)


def _v49_lhs(ev, S):
    return ev.F([-3 * S, -S, -2 * S + ev.phi], [-4 * S, -2 * S], ev.e(4))


def _v49_rhs(ev, S):
    q = ev.q
    c16 = ev.chn(S, 16)
    val = -ev.sgn(ev.phi) * c16 / q
    if q % 12 == 1:
        s = ev.C(S, ev.chi3) + ev.C(S, 2 * ev.chi3)
        val = val + (c16 * ev.chn(-S, 27) * ev.J(-S, -S) / ev.J(-3 * S, S)) * s * s
    return val


_value(id="VALUE49",
       summary="3F2(conj(S^3), conj(S), phi conj(S^2); conj(S^4), conj(S^2) | 4)",
       chars=("S",), hypotheses=_EVEN_ORDER_GT4,
       lhs=_v49_lhs, rhs=_v49_rhs, congruence=(12, (1, 11)), fixed_chars=True,
       branch=_branch_q(12))

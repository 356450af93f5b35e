"""Product formulas: pairs of 2F1 series expressed through 4F3, 3F2 and F4*.

Parameter names follow the displayed statements; a "squared" character such
as A^2 is passed as the exponent 2*A.
"""

from fractions import Fraction

from .engine import Identity, register


def _x_ne_1(ev, x=None, **_):
    return x != 1


def _quad_arg(ev, x):
    """4x(1-x)."""
    return ev.mul(ev.e(4), x, ev.sub(1, x))


def _x_minus_x2(ev, x):
    return ev.sub(x, ev.mul(x, x))


def _not_half(ev, x):
    return ev.mul(ev.e(2), x) != 1


# -- F4* product ---------------------------------------------------------------

_F4_HYP = (
    ("A!=eps", lambda ev, A, B, C, **_: ev.nz(A)),
    ("B!=eps", lambda ev, A, B, C, **_: ev.nz(B)),
    ("B!=C", lambda ev, A, B, C, **_: ev.nz(B - C)),
    ("A!=C", lambda ev, A, B, C, **_: ev.nz(A - C)),
)


def _f4p_lhs(ev, A, B, C, x, y):
    den = ev.mul(ev.sub(1, x), ev.sub(1, y))
    X = ev.div(ev.neg(x), den)
    Y = ev.div(ev.neg(y), den)
    return ev.F4(A, B, C, A + B - C, X, Y)


def _f4p_rhs(ev, A, B, C, x, y):
    g, q = ev.g, ev.q
    first = ev.Fs([A, B], [C], ev.div(ev.neg(x), ev.sub(1, x)))
    second = ev.Fs([A, B], [A + B - C], ev.div(ev.neg(y), ev.sub(1, y)))
    corr = (q * q * ev.sgn(A + C) * ev.ch(C - B, y) * ev.ch(A, ev.sub(1, x))
            * ev.ch(B, ev.sub(1, y)) / (g(A) * g(B) * g(-C) * g(C - A - B))
            * ev.dx(ev.sub(1, ev.mul(x, y))))
    return first * second - corr


register(Identity(
    id="F4_PRODUCT",
    summary="F4*(A;B;C,AB conj(C)) at a rational change of variables as a product "
            "of two starred 2F1",
    chars=("A", "B", "C"), points=("x", "y"),
    hypotheses=_F4_HYP + (("x!=1", lambda ev, x, **_: x != 1),
                          ("y!=1", lambda ev, y, **_: y != 1)),
    lhs=_f4p_lhs, rhs=_f4p_rhs))


def _f4g_lhs(ev, A, B, C, z, w):
    return ev.F([A, B], [C], z) * ev.F([A, B], [A + B - C], w)


def _f4g_rhs(ev, A, B, C, z, w):
    g, q = ev.g, ev.q
    one_z, one_w = ev.sub(1, z), ev.sub(1, w)
    main = (ev.sgn(A) * g(B) * g(-C) * g(C - A - B)
            / (q * g(-B) * g(B - C) * g(C - A))
            * ev.F4(A, B, C, A + B - C, ev.mul(z, one_w), ev.mul(w, one_z)))
    corr = (q * ev.sgn(B) * ev.ch(-A, one_z) * ev.ch(C - B, w) * ev.ch(-C, one_w)
            / (g(A) * g(-B) * g(B - C) * g(C - A))
            * ev.dx(ev.sub(one_w, z)))
    return main + corr


register(Identity(
    id="F4_GREENE",
    summary="product of two Greene 2F1 at independent arguments through F4*",
    chars=("A", "B", "C"), points=("z", "w"),
    hypotheses=_F4_HYP + (("z!=1", lambda ev, z, **_: z != 1),
                          ("w!=1", lambda ev, w, **_: w != 1)),
    lhs=_f4g_lhs, rhs=_f4g_rhs))


# -- 2F1 * 2F1 = 4F3 at 4x(1-x) --------------------------------------------------

def _mt41_lhs(ev, A, B, C, x):
    return ev.F([2 * A, 2 * B], [C], x) * ev.F([2 * A, 2 * B], [2 * A + 2 * B - C], x)


def _mt41_factor(ev, A, B, C):
    g, phi = ev.g, ev.phi
    return (ev.chn(A + B, 4) * g(-2 * A) * g(A + B - C) * g(C - A - B + phi)
            / (g(-2 * B) * g(2 * B - C) * g(C - 2 * A) * g(phi)))


def _mt41_main(ev, A, B, C, X):
    return ev.F([2 * A, 2 * B, A + B, A + B + ev.phi],
                [2 * A + 2 * B, C, 2 * A + 2 * B - C], X)


def _mt41_rhs(ev, A, B, C, x):
    g, q, phi, dc, sgn = ev.g, ev.q, ev.phi, ev.dc, ev.sgn
    X = _quad_arg(ev, x)
    K = _mt41_factor(ev, A, B, C)
    val = q * K * _mt41_main(ev, A, B, C, X)
    inner = ev.zero
    if dc(A + B - C):
        inner = inner + ev.F([2 * A, 2 * B, A + B + phi], [2 * A + 2 * B, 2 * A + 2 * B - C], X)
    if dc(C - A - B + phi):
        inner = inner + ev.F([2 * A, 2 * B, A + B], [2 * A + 2 * B, C], X)
    val = val - (q - 1) * K * inner
    D = g(2 * A) * g(-2 * B) * g(2 * B - C) * g(C - 2 * A)
    one_x = ev.sub(1, x)
    if x != 1 and ev.mul(ev.e(2), x) == 1:
        val = val + q * ev.ch(-C - 2 * A, one_x) * ev.ch(C - 2 * B, x) / D
    xx = _x_minus_x2(ev, x)
    bracket1 = ((q - 1) * dc(A + B) * dc(A + B - C) - q * sgn(A + B) * dc(A + B - C)
                - q * sgn(A + B + C) * dc(A + B))
    if bracket1:
        val = val - ((q - 1) * g(A - B) * g(B - A) * ev.ch(-A - B, xx)
                     / (q * q * D) * bracket1)
    bracket2 = ((q - 1) * dc(A + B - C + phi) * dc(A + B + phi)
                - q * sgn(A + B + phi) * dc(A + B - C + phi)
                - q * sgn(A + B + C + phi) * dc(A + B + phi))
    if bracket2:
        val = val - ((q - 1) * g(B - A + phi) * g(A - B + phi) * ev.ch(-A - B + phi, xx)
                     / (q * q * D) * bracket2)
    return val


_MT41_HYP = (
    ("A^2!=eps", lambda ev, A, B, C, x: ev.nz(2 * A)),
    ("B^2!=eps", lambda ev, A, B, C, x: ev.nz(2 * B)),
    ("A^2!=C", lambda ev, A, B, C, x: ev.nz(2 * A - C)),
    ("B^2!=C", lambda ev, A, B, C, x: ev.nz(2 * B - C)),
    ("x!=1", lambda ev, A, B, C, x: x != 1),
)

register(Identity(
    id="MT41",
    summary="2F1(A^2,B^2;C|x) 2F1(A^2,B^2;A^2B^2 conj(C)|x) as a 4F3 at 4x(1-x) "
            "with all boundary corrections",
    chars=("A", "B", "C"), points=("x",), hypotheses=_MT41_HYP,
    lhs=_mt41_lhs, rhs=_mt41_rhs))


_MT41_COR_HYP = (
    ("A^2!=eps", lambda ev, A, B, C, x: ev.nz(2 * A)),
    ("B^2!=eps", lambda ev, A, B, C, x: ev.nz(2 * B)),
    ("A^2B^2!=eps", lambda ev, A, B, C, x: ev.nz(2 * A + 2 * B)),
    ("A^2B^2conj(C^2)!=eps", lambda ev, A, B, C, x: ev.nz(2 * A + 2 * B - 2 * C)),
    ("A^2!=C", lambda ev, A, B, C, x: ev.nz(2 * A - C)),
    ("B^2!=C", lambda ev, A, B, C, x: ev.nz(2 * B - C)),
    ("x!=1", lambda ev, A, B, C, x: x != 1),
    ("x!=1/2", lambda ev, A, B, C, x: _not_half(ev, x)),
)


def _mt41_cor_rhs(ev, A, B, C, x):
    return ev.q * _mt41_factor(ev, A, B, C) * _mt41_main(ev, A, B, C, _quad_arg(ev, x))


register(Identity(
    id="MT41_COR",
    summary="the 4F3 product formula without correction terms",
    chars=("A", "B", "C"), points=("x",), hypotheses=_MT41_COR_HYP,
    lhs=_mt41_lhs, rhs=_mt41_cor_rhs))


def _mt41_star_lhs(ev, A, B, C, x):
    return ev.Fs([2 * A, 2 * B], [C], x) * ev.Fs([2 * A, 2 * B], [2 * A + 2 * B - C], x)


def _mt41_star_rhs(ev, A, B, C, x):
    return ev.Fs([2 * A, 2 * B, A + B, A + B + ev.phi],
                 [2 * A + 2 * B, C, 2 * A + 2 * B - C], _quad_arg(ev, x))


register(Identity(
    id="MT41_COR_STAR",
    summary="starred form: 2F1* 2F1* = 4F3*(...|4x(1-x))",
    chars=("A", "B", "C"), points=("x",), hypotheses=_MT41_COR_HYP,
    lhs=_mt41_star_lhs, rhs=_mt41_star_rhs))


# -- C = AB phi specialization and the Clausen analogue -------------------------

def _c1_lhs(ev, A, B, x):
    v = ev.F([2 * A, 2 * B], [A + B + ev.phi], x)
    return v * v


def _c1_rhs(ev, A, B, x):
    g, q, phi, dc, sgn = ev.g, ev.q, ev.phi, ev.dc, ev.sgn
    X = _quad_arg(ev, x)
    xx = _x_minus_x2(ev, x)
    gb = g(B - A + phi)
    val = (q * ev.chn(A + B, 4) * g(-2 * A) / (g(-2 * B) * gb * gb)
           * ev.F([2 * A, 2 * B, A + B], [2 * A + 2 * B, A + B + phi], X))
    val = val + (g(A + B + phi) * g(-A - B + phi) * g(A - B + phi)
                 / (q * q * g(-2 * B) * g(2 * A) * gb) * ev.ch(-A - B + phi, xx))
    if x != 1 and ev.mul(ev.e(2), x) == 1:
        val = val + (q * ev.ch(-3 * A - B + phi, ev.sub(1, x)) * ev.ch(A - B + phi, x)
                     / (g(2 * A) * g(-2 * B) * gb * gb))
    if dc(A + B):
        val = val + ((q - 1) * sgn(phi) * g(A - B) * g(B - A) * ev.ch(-A - B, xx)
                     / (q * g(2 * A) * g(-2 * B) * gb * gb))
    val = val + ((q - 1) * g(A - B + phi) * ev.ch(-A - B + phi, xx)
                 / (q * q * g(2 * A) * g(-2 * B) * gb)
                 * (dc(A + B + phi) + q * sgn(A + B + phi)))
    return val


register(Identity(
    id="MT41C1",
    summary="square of 2F1(A^2,B^2;AB phi|x) as a 3F2 at 4x(1-x) with corrections",
    chars=("A", "B"), points=("x",),
    hypotheses=(("A^2!=eps", lambda ev, A, B, x: ev.nz(2 * A)),
                ("B^2!=eps", lambda ev, A, B, x: ev.nz(2 * B)),
                ("A conj(B) phi!=eps", lambda ev, A, B, x: ev.nz(A - B + ev.phi)),
                ("x!=1", lambda ev, A, B, x: x != 1)),
    lhs=_c1_lhs, rhs=_c1_rhs))


def _clausen_lhs(ev, A, B, x):
    v = ev.F([A, B], [A + B + ev.phi], _quad_arg(ev, x))
    return v * v


def _clausen_rhs(ev, A, B, x):
    g, q, phi = ev.g, ev.q, ev.phi
    X = _quad_arg(ev, x)
    num = g(B) * g(B) * g(A + phi) * g(A + phi)
    return (ev.chn(A + B, 4) * num / (q * g(2 * A) * g(2 * B))
            * ev.F([2 * A, 2 * B, A + B], [2 * A + 2 * B, A + B + phi], X)
            + num * ev.ch(-A - B + phi, _x_minus_x2(ev, x)) / (q * q * g(2 * A) * g(2 * B)))


register(Identity(
    id="CLAUSEN",
    summary="square of 2F1(A,B;AB phi|4x(1-x)) as a 3F2 (Clausen analogue)",
    chars=("A", "B"), points=("x",),
    hypotheses=(("A^2!=eps", lambda ev, A, B, x: ev.nz(2 * A)),
                ("B^2!=eps", lambda ev, A, B, x: ev.nz(2 * B)),
                ("A conj(B) phi!=eps", lambda ev, A, B, x: ev.nz(A - B + ev.phi)),
                ("AB!=eps", lambda ev, A, B, x: ev.nz(A + B)),
                ("AB phi!=eps", lambda ev, A, B, x: ev.nz(A + B + ev.phi)),
                ("x!=1", lambda ev, A, B, x: x != 1),
                ("x!=1/2", lambda ev, A, B, x: _not_half(ev, x))),
    lhs=_clausen_lhs, rhs=_clausen_rhs))


# -- 2F1 * 2F1 = 4F3 at -4z/(1-z)^2 --------------------------------------------

def _mt42_arg(ev, z):
    one_z = ev.sub(1, z)
    return ev.div(ev.mul(ev.e(-4), z), ev.mul(one_z, one_z))


def _mt42_lhs(ev, A, D, E, z):
    return (ev.F([2 * A, 2 * E], [2 * D], z)
            * ev.F([2 * D - 2 * E, -2 * E], [2 * A - 2 * E], z))


def _mt42_upper(ev, A, D, E):
    s = A + D - E
    return ([2 * A, 2 * D - 2 * E, s, s + ev.phi], [2 * A + 2 * D - 2 * E, 2 * D, 2 * A - 2 * E])


def _mt42_rhs(ev, A, D, E, z):
    g, q, phi = ev.g, ev.q, ev.phi
    ups, lows = _mt42_upper(ev, A, D, E)
    val = (ev.chn(A + D - E, 4) * ev.ch(-2 * A - 2 * D + 2 * E, ev.sub(1, z))
           * g(A - E - D) * g(-A + E + D + phi) / g(phi)
           * ev.F(ups, lows, _mt42_arg(ev, z)))
    if ev.mul(z, z) == 1:
        val = val + ev.ch(2 * E, z) / q
    return val


_MT42_HYP = (
    ("A^2!=eps", lambda ev, A, D, E, z: ev.nz(2 * A)),
    ("E^2!=eps", lambda ev, A, D, E, z: ev.nz(2 * E)),
    ("A^2conj(D^2E^2)!=eps", lambda ev, A, D, E, z: ev.nz(2 * A - 2 * D - 2 * E)),
    ("A^2D^2conj(E^2)!=eps", lambda ev, A, D, E, z: ev.nz(2 * A + 2 * D - 2 * E)),
    ("A^2!=D^2", lambda ev, A, D, E, z: ev.nz(2 * A - 2 * D)),
    ("D^2!=E^2", lambda ev, A, D, E, z: ev.nz(2 * D - 2 * E)),
    ("z!=1", lambda ev, A, D, E, z: z != 1),
)

register(Identity(
    id="MT42",
    summary="2F1(A^2,E^2;D^2|z) 2F1(D^2conj(E^2),conj(E^2);A^2conj(E^2)|z) "
            "as a 4F3 at -4z/(1-z)^2",
    chars=("A", "D", "E"), points=("z",), hypotheses=_MT42_HYP,
    lhs=_mt42_lhs, rhs=_mt42_rhs))


def _mt42_star_lhs(ev, A, D, E, z):
    return (ev.Fs([2 * A, 2 * E], [2 * D], z)
            * ev.Fs([2 * D - 2 * E, -2 * E], [2 * A - 2 * E], z))


def _mt42_star_rhs(ev, A, D, E, z):
    ups, lows = _mt42_upper(ev, A, D, E)
    return (ev.ch(-2 * A - 2 * D + 2 * E, ev.sub(1, z))
            * ev.Fs(ups, lows, _mt42_arg(ev, z)))


register(Identity(
    id="MT42_STAR",
    summary="starred form of the -4z/(1-z)^2 product formula (z^2 != 1)",
    chars=("A", "D", "E"), points=("z",),
    hypotheses=_MT42_HYP + (("z^2!=1", lambda ev, A, D, E, z: ev.mul(z, z) != 1),),
    lhs=_mt42_star_lhs, rhs=_mt42_star_rhs))


# -- 2F1 * 2F1 = 4F3 at -x^2/(4(1-x)) -------------------------------------------

def _mt43_arg(ev, x):
    return ev.div(ev.neg(ev.mul(x, x)), ev.mul(ev.e(4), ev.sub(1, x)))


def _mt43_lhs(ev, A, B, C, x):
    return ev.F([A, B], [2 * C], x) * ev.F([A, 2 * C - B], [2 * C], x)


def _mt43_delta_term(ev, A, B, C, x):
    """Term carried by delta((x-2)/(x-1))."""
    g, q = ev.g, ev.q
    if x == 1 or x != ev.e(2):
        return ev.zero
    return (q * ev.sgn(A + B) * ev.ch(-2 * A + B, ev.sub(1, x)) * ev.ch(-2 * C, x)
            / (g(A) * g(-B) * g(2 * C - A) * g(B - 2 * C)))


def _mt43_series(ev, A, B, C, Y):
    return ev.F([A, B, 2 * C - A, 2 * C - B], [2 * C, C, C + ev.phi], Y)


def _mt43_rhs(ev, A, B, C, x):
    g, q, phi, dc, sgn = ev.g, ev.q, ev.phi, ev.dc, ev.sgn
    Y = _mt43_arg(ev, x)
    one_x = ev.sub(1, x)
    K = (ev.ch(-A, one_x) * g(C - A) * g(C - B + phi)
         / (sgn(phi) * ev.chn(C, 4) * g(phi) * g(2 * C - A) * g(-B)))
    val = _mt43_delta_term(ev, A, B, C, x) + q * K * _mt43_series(ev, A, B, C, Y)
    inner = ev.zero
    if dc(C - A) and dc(C - B + phi):
        inner = inner + Fraction(q - 1, q) * ev.F([A, B], [2 * C], Y)
    if dc(C - A):
        inner = inner - ev.F([A, B, 2 * C - B], [2 * C, C + phi], Y)
    if dc(C - B + phi):
        inner = inner - ev.F([A, B, 2 * C - A], [2 * C, C], Y)
    val = val + (q - 1) * K * inner
    x_minus_1 = ev.sub(x, 1)
    phi_1x = ev.ch(phi, one_x)
    phi_x1 = ev.ch(phi, x_minus_1)
    bracket = (((q - 1) * dc(A - C) * dc(B - C) - q * sgn(B + C) * dc(A - C)
                - q * sgn(A + C) * dc(B - C)) * ev.one
               + (q - 1) * phi_1x * dc(A - C + phi) * dc(B - C + phi)
               - q * sgn(B + C) * phi_x1 * dc(A - C + phi)
               - q * sgn(A + C) * phi_x1 * dc(B - C + phi))
    val = val - ((q - 1) * ev.ch(-A, one_x) * ev.ch(-C, ev.mul(x, x)) * ev.ch(C, one_x)
                 / (q * g(A) * g(-B) * g(B - 2 * C) * g(2 * C - A)) * bracket)
    return val


_MT43_HYP = (
    ("A!=eps", lambda ev, A, B, C, x: ev.nz(A)),
    ("B!=eps", lambda ev, A, B, C, x: ev.nz(B)),
    ("C^2!=eps", lambda ev, A, B, C, x: ev.nz(2 * C)),
    ("A!=C^2", lambda ev, A, B, C, x: ev.nz(A - 2 * C)),
    ("B!=C^2", lambda ev, A, B, C, x: ev.nz(B - 2 * C)),
    ("x!=1", lambda ev, A, B, C, x: x != 1),
)

register(Identity(
    id="MT43",
    summary="2F1(A,B;C^2|x) 2F1(A,C^2 conj(B);C^2|x) as a 4F3 at -x^2/(4(1-x)) "
            "with all boundary corrections",
    chars=("A", "B", "C"), points=("x",), hypotheses=_MT43_HYP,
    lhs=_mt43_lhs, rhs=_mt43_rhs))


_MT43_COR_HYP = _MT43_HYP[:3] + (
    ("A^2conj(C^2)!=eps", lambda ev, A, B, C, x: ev.nz(2 * A - 2 * C)),
    ("B^2conj(C^2)!=eps", lambda ev, A, B, C, x: ev.nz(2 * B - 2 * C)),
) + _MT43_HYP[3:]


def _mt43_cor_rhs(ev, A, B, C, x):
    g, q, phi = ev.g, ev.q, ev.phi
    Y = _mt43_arg(ev, x)
    return (_mt43_delta_term(ev, A, B, C, x)
            + q * ev.sgn(phi) * ev.chn(-C, 4) * ev.ch(-A, ev.sub(1, x))
            * g(C - A) * g(C - B + phi) / (g(phi) * g(2 * C - A) * g(-B))
            * _mt43_series(ev, A, B, C, Y))


register(Identity(
    id="MT43_COR",
    summary="the -x^2/(4(1-x)) product formula under extra conditions",
    chars=("A", "B", "C"), points=("x",), hypotheses=_MT43_COR_HYP,
    lhs=_mt43_lhs, rhs=_mt43_cor_rhs))


def _mt43_star_lhs(ev, A, B, C, x):
    return ev.Fs([A, B], [2 * C], x) * ev.Fs([A, 2 * C - B], [2 * C], x)


def _mt43_star_rhs(ev, A, B, C, x):
    return (ev.ch(-A, ev.sub(1, x))
            * ev.Fs([A, B, 2 * C - A, 2 * C - B], [2 * C, C, C + ev.phi], _mt43_arg(ev, x)))


register(Identity(
    id="MT43_COR_STAR",
    summary="starred form of the -x^2/(4(1-x)) product formula (x != 2)",
    chars=("A", "B", "C"), points=("x",),
    hypotheses=_MT43_COR_HYP + (("x!=2", lambda ev, A, B, C, x: x != ev.e(2)),),
    lhs=_mt43_star_lhs, rhs=_mt43_star_rhs))

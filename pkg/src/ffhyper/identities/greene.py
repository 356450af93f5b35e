"""Classical transformations and evaluations of the 2F1 series."""

from .engine import VALUE, Identity, register


def _x_over_x_minus_1(ev, x):
    return ev.div(x, ev.sub(x, 1))


def _t1_lhs(ev, A, B, C, x):
    return ev.F([A, B], [C], x)


def _t1_rhs(ev, A, B, C, x):
    return (ev.sgn(A) * ev.F([A, B], [A + B - C], ev.sub(1, x))
            + ev.sgn(A) * ev.C(B, C - A) * ev.dx(ev.sub(1, x))
            - ev.C(B, C) * ev.dx(x))


def _t2_rhs(ev, A, B, C, x):
    tail = ev.sgn(A) * ev.C(B, C - A) * ev.dx(ev.sub(1, x))
    if x == 1:
        return tail
    return (ev.sgn(C) * ev.ch(-A, ev.sub(1, x))
            * ev.F([A, C - B], [C], _x_over_x_minus_1(ev, x)) + tail)


def _t3_rhs(ev, A, B, C, x):
    tail = ev.sgn(A) * ev.C(B, C - A) * ev.dx(ev.sub(1, x))
    if x == 1:
        return tail
    return ev.ch(-B, ev.sub(1, x)) * ev.F([C - A, B], [C], _x_over_x_minus_1(ev, x)) + tail


register(Identity(
    id="GREENE_T1", summary="2F1(A,B;C|x) in terms of 2F1(A,B;AB conj(C)|1-x)",
    chars=("A", "B", "C"), points=("x",), hypotheses=(),
    lhs=_t1_lhs, rhs=_t1_rhs))

register(Identity(
    id="GREENE_T2", summary="2F1(A,B;C|x) in terms of 2F1(A,C conj(B);C|x/(x-1))",
    chars=("A", "B", "C"), points=("x",), hypotheses=(),
    lhs=_t1_lhs, rhs=_t2_rhs))

register(Identity(
    id="GREENE_T3", summary="2F1(A,B;C|x) in terms of 2F1(C conj(A),B;C|x/(x-1))",
    chars=("A", "B", "C"), points=("x",), hypotheses=(),
    lhs=_t1_lhs, rhs=_t3_rhs))


def _inv_rhs(ev, A, B, C, x):
    return (ev.sgn(A + B + C) * ev.ch(-A, x)
            * ev.F([A, A - C], [A - B], ev.div(1, x)))


register(Identity(
    id="INVERSION", summary="2F1 at x related to 2F1 at 1/x",
    chars=("A", "B", "C"), points=("x",),
    hypotheses=(("x!=0", lambda ev, A, B, C, x: x != 0),
                ("x!=1", lambda ev, A, B, C, x: x != 1)),
    lhs=_t1_lhs, rhs=_inv_rhs))


def _mc1_lhs(ev, A, B, C):
    return ev.Fs([A, B], [C], 1)


def _mc1_rhs(ev, A, B, C):
    q, g = ev.q, ev.g
    return (g(A - C) * g(B - C) / (g(-C) * g(A + B - C))
            + q * (q - 1) * ev.sgn(A + B) * ev.dc(A + B - C) / (g(A) * g(B) * g(-C)))


register(Identity(
    id="MC_AT_1", summary="starred 2F1(A,B;C|1) as a Gauss-sum quotient",
    chars=("A", "B", "C"), points=(), hypotheses=(),
    lhs=_mc1_lhs, rhs=_mc1_rhs, kind=VALUE))


def _fl_lhs(ev, A, x):
    return ev.FF(A, A + ev.phi, ev.phi, x)


def _fl_rhs(ev, A, x):
    r = ev.sqrt(x)
    if r is None:
        return ev.zero
    return ((1 + ev.ch(ev.phi, x)) / 2
            * (ev.ch(-2 * A, ev.add(1, r)) + ev.ch(-2 * A, ev.sub(1, r))))


def _square_branch(ev, A, x=None):
    r = ev.sqrt(x)
    return "x square" if r is not None else "x non-square"


register(Identity(
    id="FL_VALUE", summary="period-normalized 2F1(A, A phi; phi | x) in closed form",
    chars=("A",), points=("x",),
    hypotheses=(("A!=eps", lambda ev, A, x: ev.nz(A)),
                ("A!=phi", lambda ev, A, x: ev.nz(A - ev.phi)),
                ("x!=0", lambda ev, A, x: x != 0)),
    lhs=_fl_lhs, rhs=_fl_rhs, kind=VALUE, branch=_square_branch))


def _root_sum(ev, A, B):
    """(C choose A) + (phi C choose A) for B = C^2, or 0 for non-square B."""
    if B % 2:
        return ev.zero
    c = B // 2
    return ev.C(c, A) + ev.C(c + ev.phi, A)


def _b_branch(ev, A, B):
    return "B square" if B % 2 == 0 else "B non-square"


register(Identity(
    id="G_NEG1", summary="2F1(A,B; conj(A)B | -1)",
    chars=("A", "B"), points=(), hypotheses=(),
    lhs=lambda ev, A, B: ev.F([A, B], [B - A], ev.neg(1)),
    rhs=_root_sum, kind=VALUE, branch=_b_branch))

register(Identity(
    id="G_AT2", summary="2F1(A,B; A^2 | 2)",
    chars=("A", "B"), points=(), hypotheses=(),
    lhs=lambda ev, A, B: ev.F([A, B], [2 * A], ev.e(2)),
    rhs=lambda ev, A, B: ev.sgn(A) * _root_sum(ev, A, B), kind=VALUE, branch=_b_branch))

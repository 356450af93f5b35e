import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffhyper.characters import (
    CHI3, CHI4, EPS, PHI, CharacterError, char_algebra, char_eval, char_sqrt,
    has_char, order, sign_at_minus_one, sign_by_order, special_char, theta,
)
from ffhyper.value_domain import values_equal

import oracle
from conftest import backend, field

FIELDS = [5, 7, 9, 13, 25, 27, 49]


def test_quadratic_character_f5():
    ctx, b = field(5), backend("complex", 5)
    phi = special_char(ctx, PHI)
    assert phi == 2
    assert [round(char_eval(ctx, b, phi, x).real) for x in range(5)] == [0, 1, -1, -1, 1]


def test_epsilon_vanishes_at_zero():
    ctx = field(13)
    for kind in ("complex", "modular"):
        b = backend(kind, 13)
        assert values_equal(b, char_eval(ctx, b, 0, 0), 0)
        assert values_equal(b, char_eval(ctx, b, 0, 5), 1)


def test_special_characters_exist_by_congruence():
    assert special_char(field(13), CHI4) == 3
    assert special_char(field(13), CHI3) == 4
    assert special_char(field(9), CHI4) == 2
    assert not has_char(field(7), CHI4)
    assert not has_char(field(5), CHI3)
    with pytest.raises(CharacterError):
        special_char(field(11), CHI4)
    with pytest.raises(CharacterError):
        special_char(field(5), "nope")
    assert special_char(field(5), EPS) == 0


def test_char_algebra_example():
    info = char_algebra(field(13), 3)
    assert info.order == 4 and not info.is_square and info.sqrt is None
    assert info.inverse == 9
    assert info.sign_at_minus_one == -1
    assert char_sqrt(field(13), 4) == 2
    with pytest.raises(CharacterError):
        char_sqrt(field(13), 3)


@pytest.mark.parametrize("q", FIELDS)
def test_against_oracle(q):
    ctx, b = field(q), backend("complex", q)
    for k in range(q - 1):
        for x in range(q):
            assert oracle.close(char_eval(ctx, b, k, x), oracle.chi(ctx, k, x))
    for x in range(q):
        assert oracle.close(theta(ctx, b, x), oracle.theta(ctx, x))


@pytest.mark.parametrize("q", FIELDS)
def test_multiplicativity(q, kind):
    ctx, b = field(q), backend(kind, q)
    for k in range(0, q - 1, max(1, (q - 1) // 6)):
        for x in range(1, q):
            for y in range(1, q, 3):
                assert values_equal(b, char_eval(ctx, b, k, ctx.mul(x, y)),
                                    char_eval(ctx, b, k, x) * char_eval(ctx, b, k, y))


@pytest.mark.parametrize("q", FIELDS)
def test_orthogonality(q, kind):
    ctx, b = field(q), backend(kind, q)
    for k in range(q - 1):
        s = b.zero()
        for x in range(1, q):
            s = s + char_eval(ctx, b, k, x)
        assert values_equal(b, s, q - 1 if k == 0 else 0)
    for x in range(1, q):
        s = b.zero()
        for k in range(q - 1):
            s = s + char_eval(ctx, b, k, x)
        assert values_equal(b, s, q - 1 if x == 1 else 0)


@pytest.mark.parametrize("q", FIELDS)
def test_additive_character(q, kind):
    ctx, b = field(q), backend(kind, q)
    s = b.zero()
    for x in range(q):
        s = s + theta(ctx, b, x)
    assert values_equal(b, s, 0)
    for x in range(0, q, 2):
        for y in range(q):
            assert values_equal(b, theta(ctx, b, ctx.add(x, y)),
                                theta(ctx, b, x) * theta(ctx, b, y))


@pytest.mark.parametrize("q", FIELDS + [81, 121, 125])
def test_sign_at_minus_one_matches_order_law(q):
    ctx, b = field(q), backend("modular", q)
    minus = ctx.neg(1)
    for k in range(q - 1):
        s = sign_at_minus_one(ctx, k)
        assert s == sign_by_order(ctx, k)
        assert values_equal(b, char_eval(ctx, b, k, minus), s)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(-200, 200), st.integers(-200, 200))
def test_character_group_law(q, j, k):
    ctx, b = field(q), backend("modular", q)
    for x in (1, 2, q - 1, q // 2 + 1):
        x %= q
        if not x:
            continue
        assert values_equal(b, char_eval(ctx, b, j + k, x),
                            char_eval(ctx, b, j, x) * char_eval(ctx, b, k, x))
    assert (q - 1) % order(ctx, j) == 0

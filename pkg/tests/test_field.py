import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint

from qmds.field import (
    PrimePower,
    SubfieldError,
    TowerCtx,
    build_field,
    embed,
    field_tower,
    primitive_root_of_unity,
    subfield_project,
)

FIELDS = {
    "GF(3)": (3, 1),
    "GF(9)": (3, 2),
    "GF(81)": (3, 4),
    "GF(961)": (31, 2),
    "GF(31^4)": (31, 4),
}


def field(name):
    q, k = FIELDS[name]
    return build_field(q, k)


def elements(ctx, nonzero=False):
    return st.integers(1 if nonzero else 0, ctx.order - 1).map(ctx.from_int)


def test_gf9_modulus_is_lex_first():
    F = build_field(3, 2)
    assert F.order == 9
    assert F.modulus == (1, 0, 1)  # x^2 + 1


def test_gf961_modulus_has_no_root():
    F = build_field(31, 2)
    c0, c1, c2 = F.modulus
    assert c2 == 1
    assert all((c0 + c1 * x + x * x) % 31 for x in range(31))


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        PrimePower(4, 1)
    with pytest.raises(ValueError):
        build_field(PrimePower(4, 1), 2)


def test_prime_power_from_q():
    assert PrimePower.from_q(9) == PrimePower(3, 2)
    assert PrimePower.from_q(125).q == 125
    with pytest.raises(ValueError):
        PrimePower.from_q(12)


def test_bad_extension_degree():
    with pytest.raises(ValueError):
        build_field(3, 3)


def test_cached_contexts_are_shared():
    assert build_field(31, 2) is build_field(31, 2)
    F2, F4 = field_tower(31)
    assert F4.subfield is F2


@pytest.mark.parametrize("name", list(FIELDS))
def test_algebra_laws(name):
    ctx = field(name)

    @settings(max_examples=300)
    @given(elements(ctx), elements(ctx), elements(ctx))
    def laws(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == ctx.zero
        assert a - b == a + (-b)
        if b:
            assert (a / b) * b == a

    laws()


@pytest.mark.parametrize("name", list(FIELDS))
def test_frobenius(name):
    ctx = field(name)

    @settings(max_examples=200)
    @given(elements(ctx), elements(ctx))
    def frob(a, b):
        p = ctx.p
        assert (a + b) ** p == a**p + b**p

    frob()


@pytest.mark.parametrize("name", ["GF(9)", "GF(961)", "GF(31^4)"])
def test_lagrange_and_inverse(name):
    ctx = field(name)

    @settings(max_examples=100)
    @given(elements(ctx, nonzero=True))
    def check(a):
        assert a ** (ctx.order - 1) == ctx.one
        assert a * a.inverse() == ctx.one
        assert a**-1 == a.inverse()

    check()


def test_gf9_conjugation_is_an_involution():
    F = build_field(3, 2)
    for a in F.elements():
        assert a.conj() == a**3
        assert a.conj().conj() == a


def test_division_by_zero():
    F = build_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        build_field(3, 2).one + build_field(31, 2).one


@pytest.mark.parametrize("name", list(FIELDS))
def test_generator_is_smallest_primitive(name):
    ctx = field(name)
    g = ctx.generator
    assert g.multiplicative_order() == ctx.order - 1
    if ctx.order < 10**4:
        start = ctx.subfield.order if isinstance(ctx, TowerCtx) else 1
        for v in range(start, int(g)):
            assert ctx.from_int(v).multiplicative_order() < ctx.order - 1


def exact_order_ok(w, order, one):
    if w**order != one:
        return False
    return all(w ** (order // prime) != one for prime in factorint(order))


@pytest.mark.parametrize(
    "name, order",
    [("GF(81)", 20), ("GF(31^4)", 2368), ("GF(961)", 32), ("GF(9)", 4), ("GF(31^4)", 923520)],
)
def test_root_of_unity_exact_order(name, order):
    ctx = field(name)
    w = primitive_root_of_unity(ctx, order)
    assert exact_order_ok(w, order, ctx.one)
    assert w.multiplicative_order() == order


def test_gf81_root_of_order_20_by_hand():
    F = build_field(3, 4)
    w = primitive_root_of_unity(F, 20)
    assert w**20 == F.one and w**4 != F.one and w**10 != F.one


def test_root_of_unity_order_must_divide():
    with pytest.raises(ValueError):
        primitive_root_of_unity(build_field(3, 2), 7)


@pytest.mark.parametrize("q", [3, 5, 31])
def test_embed_project_round_trip(q):
    F2, F4 = field_tower(q)
    for v in range(0, F2.order, max(1, F2.order // 200)):
        b = F2.from_int(v)
        assert subfield_project(embed(b, F4)) == b
    assert subfield_project(F4.zero) == F2.zero


def test_embed_is_a_homomorphism():
    F2, F4 = field_tower(5)
    for a, b in itertools.product(list(F2.elements())[::3], repeat=2):
        assert F4.embed(a * b) == F4.embed(a) * F4.embed(b)
        assert F4.embed(a + b) == F4.embed(a) + F4.embed(b)


def test_project_rejects_exactly_non_subfield_gf81():
    F2, F4 = field_tower(3)
    for a in F4.elements():
        fixed = a**9 == a
        if fixed:
            assert F4.embed(F4.project(a)) == a
        else:
            with pytest.raises(SubfieldError):
                F4.project(a)


def test_project_rejects_primitive_rn_root():
    F2, F4 = field_tower(31)
    w = primitive_root_of_unity(F4, 2368)
    assert w ** (31 * 31) != w
    with pytest.raises(SubfieldError):
        subfield_project(w)


@given(st.integers(0, 31**4 - 1))
@settings(max_examples=300)
def test_project_rejects_exactly_non_subfield_gf31_4(v):
    F2, F4 = field_tower(31)
    a = F4.from_int(v)
    if a ** (31 * 31) == a:
        assert F4.embed(F4.project(a)) == a
    else:
        with pytest.raises(SubfieldError):
            F4.project(a)


@pytest.mark.parametrize("name", ["GF(9)", "GF(961)", "GF(81)"])
def test_tables_agree_with_scalar_arithmetic(name):
    ctx = field(name)
    t = ctx.tables
    rng = np.random.default_rng(7)
    xs = rng.integers(0, ctx.order, 300)
    ys = rng.integers(0, ctx.order, 300)
    for x, y, s, pr, c in zip(xs, ys, t.add(xs, ys), t.mul(xs, ys), t.conj(xs)):
        a, b = ctx.from_int(int(x)), ctx.from_int(int(y))
        assert int(a + b) == s
        assert int(a * b) == pr
        assert int(a ** ctx.conj_exponent()) == c


def test_int_encoding_round_trip():
    F = build_field(31, 2)
    for v in (0, 1, 30, 31, 500, 960):
        assert int(F.from_int(v)) == v
    with pytest.raises(ValueError):
        F.from_int(961)

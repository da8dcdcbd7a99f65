import random

import pytest

from hermgenus.gf import ZERO, CapacityError, DomainError, make_ctx
from hermgenus.numthy import factorize


def test_make_ctx_examples():
    ctx = make_ctx(2, 2)
    assert (ctx.q, ctx.q2) == (4, 16)
    assert ctx.element_order(1) == 15  # g has full order
    ctx = make_ctx(13, 1)
    assert (ctx.q, ctx.q2) == (13, 169)
    assert ctx.element_order(1) == 168
    ctx = make_ctx(5, 3)
    assert (ctx.q, ctx.q2) == (125, 15625)


def test_capacity_error():
    with pytest.raises(CapacityError):
        make_ctx(2, 13)  # q^2 = 2^52


def test_element_order():
    ctx = make_ctx(3, 2)
    q = ctx.q
    assert ctx.element_order(0) == 1
    assert ctx.element_order(ctx.q - 1) == q + 1  # g^(q-1) has order q+1
    with pytest.raises(DomainError):
        ctx.element_order(ZERO)


def test_root_of_unity():
    ctx = make_ctx(5, 1)
    q = ctx.q
    assert ctx.root_of_unity(1) == 0
    assert ctx.root_of_unity(q + 1) == q - 1
    minus_one = ctx.root_of_unity(2)
    assert ctx.add(minus_one, 0) == ZERO  # -1 + 1 = 0
    with pytest.raises(DomainError):
        ctx.root_of_unity(7)  # 7 does not divide 24
    for m in (2, 3, 4, 6, 8, 12, 24):
        x = ctx.root_of_unity(m)
        assert ctx.element_order(x) == m
        assert ctx.pow(x, m) == 0
        for ell in {p for p, _ in factorize(m)}:
            assert ctx.pow(x, m // ell) != 0


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_field_axioms_random(p, n):
    ctx = make_ctx(p, n)
    rng = random.Random(100 * p + n)
    els = [ZERO] + list(range(ctx.order))
    for _ in range(250):
        x, y, z = rng.choice(els), rng.choice(els), rng.choice(els)
        assert ctx.add(x, y) == ctx.add(y, x)
        assert ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z))
        assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
        assert ctx.add(x, ZERO) == x
        assert ctx.mul(x, 0) == x
        assert ctx.add(x, ctx.neg(x)) == ZERO
        if x != ZERO:
            assert ctx.mul(x, ctx.inv(x)) == 0


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1), (3, 2), (2, 4), (5, 2), (2, 5)])
def test_conj_fixes_exactly_fq(p, n):
    # exhaustive for q <= 32
    ctx = make_ctx(p, n)
    fixed = [x for x in [ZERO] + list(range(ctx.order)) if ctx.conj(x) == x]
    assert len(fixed) == ctx.q
    assert sorted(fixed) == sorted(ctx.fq_elements())
    rng = random.Random(9)
    for _ in range(100):
        x = rng.randrange(ctx.order)
        assert ctx.conj(ctx.conj(x)) == x
        # the norm x * x^q lands in GF(q)
        assert ctx.in_fq(ctx.mul(x, ctx.conj(x)))


def test_zech_addition_against_polynomials():
    # independent oracle: coefficient-vector addition via the code tables
    ctx = make_ctx(3, 1)
    p = ctx.p

    def code_add(c1, c2):
        out = 0
        mult = 1
        for _ in range(2 * ctx.n):
            out += ((c1 % p + c2 % p) % p) * mult
            c1 //= p
            c2 //= p
            mult *= p
        return out

    els = [ZERO] + list(range(ctx.order))
    for x in els:
        for y in els:
            expect = code_add(ctx.code_of(x), ctx.code_of(y))
            got = ctx.code_of(ctx.add(x, y))
            assert got == expect


def test_subfield_elements():
    ctx = make_ctx(2, 3)  # q = 8, q^2 = 64
    f2 = ctx.subfield_elements(1)
    assert sorted(f2) == [ZERO, 0]
    f8 = ctx.subfield_elements(3)
    assert len(f8) == 8
    assert all(ctx.in_fq(x) for x in f8)
    with pytest.raises(DomainError):
        ctx.subfield_elements(4)  # 4 does not divide 6


def test_literals_roundtrip():
    ctx = make_ctx(2, 2)
    for x in [ZERO] + list(range(ctx.order)):
        assert ctx.parse_elt(ctx.format_elt(x)) == x
    assert ctx.parse_elt("g") == 1
    with pytest.raises(DomainError):
        ctx.parse_elt("h^2")


def test_determinism():
    make_ctx.cache_clear()
    a = make_ctx(3, 2)
    mod_a, gen_a, zech_a = list(a.modulus), list(a.generator_poly), list(a.zech)
    make_ctx.cache_clear()
    b = make_ctx(3, 2)
    assert (mod_a, gen_a, zech_a) == (list(b.modulus), list(b.generator_poly), list(b.zech))

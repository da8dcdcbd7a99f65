import random

import pytest

from hermgenus.gf import ZERO, DomainError, make_ctx
from hermgenus.pgu import (
    classify,
    fixed_points_on_curve,
    format_matrix,
    identity,
    is_unitary,
    make_gram,
    mat_inv,
    mat_mul,
    normalize,
    parse_matrix,
    pgu_generator_matrices,
    proj_order,
    random_unitary,
)


def _diag(x, y, z):
    return (x, ZERO, ZERO, ZERO, y, ZERO, ZERO, ZERO, z)


def test_normalize_basics():
    ctx = make_ctx(5, 1)
    one = 0
    ident = identity(ctx)
    assert normalize(ctx, ident) == ident
    two = ctx.parse_elt("g^8")  # some scalar
    assert normalize(ctx, tuple(ctx.mul(two, x) for x in ident)) == ident
    g = 1
    assert normalize(ctx, _diag(g, g, ctx.pow(g, 2))) == _diag(one, one, g)


@pytest.mark.parametrize("p,n", [(2, 2), (3, 1), (5, 1), (2, 3)])
def test_normalize_scalar_invariant_random(p, n):
    ctx = make_ctx(p, n)
    rng = random.Random(17)
    for _ in range(150):
        M = random_unitary(ctx, rng, 7)
        s = rng.randrange(ctx.order)
        assert normalize(ctx, tuple(ctx.mul(s, x) for x in M)) == M
        # idempotence
        assert normalize(ctx, M) == M


def test_is_unitary_examples():
    ctx = make_ctx(3, 1)
    q = ctx.q
    gram = make_gram(ctx, "MODEL1")
    assert is_unitary(ctx, gram, identity(ctx))
    lam = ctx.root_of_unity(q + 1)
    assert is_unitary(ctx, gram, _diag(lam, ctx.pow(lam, 2), 0))
    # primitive g has g^(q+1) != 1: not unitary in the Fermat model
    assert not is_unitary(ctx, gram, _diag(1, 0, 0))


def test_proj_order_examples():
    ctx = make_ctx(3, 1)
    q = ctx.q
    assert proj_order(ctx, identity(ctx)) == 1
    lam = ctx.root_of_unity(q + 1)
    assert proj_order(ctx, _diag(lam, 0, 0)) == q + 1
    one = 0
    cyc = (ZERO, one, ZERO, ZERO, ZERO, one, one, ZERO, ZERO)
    assert proj_order(ctx, cyc) == 3


@pytest.mark.parametrize("p,n", [(2, 2), (3, 1), (5, 1), (3, 2), (2, 3), (13, 1)])
def test_classify_homology_and_b1(p, n):
    ctx = make_ctx(p, n)
    q = ctx.q
    gram = make_gram(ctx, "MODEL1")
    one = 0
    lam = ctx.root_of_unity(q + 1)
    hom = _diag(lam, lam, one)
    assert is_unitary(ctx, gram, hom)
    cls = classify(ctx, hom)
    assert (cls.kind, cls.i, cls.order) == ("A", q + 1, q + 1)
    assert cls.center == (ZERO, ZERO, one)
    assert fixed_points_on_curve(ctx, hom, gram) == q + 1
    if q + 1 >= 4:
        b1 = _diag(lam, ctx.pow(lam, 2), one)
        cls = classify(ctx, b1)
        assert (cls.kind, cls.i) == ("B1", 0)
        assert fixed_points_on_curve(ctx, b1, gram) == 0


@pytest.mark.parametrize("p,n", [(2, 2), (5, 1), (3, 2), (2, 3), (13, 1)])
def test_classify_b2_model3(p, n):
    ctx = make_ctx(p, n)
    q = ctx.q
    gram = make_gram(ctx, "MODEL3")
    t = ctx.root_of_unity(q - 1)
    m = _diag(t, ctx.inv(t), 0)
    assert is_unitary(ctx, gram, m)
    cls = classify(ctx, m)
    assert (cls.kind, cls.i) == ("B2", 2)
    assert fixed_points_on_curve(ctx, m, gram) == 2


@pytest.mark.parametrize("p,n", [(2, 1), (5, 1), (2, 3)])
def test_classify_b3_twisted_cycle(p, n):
    # monomial sigma with char poly x^3 - t: irreducible over GF(q^2) when t
    # is a non-cube, and then sigma fixes a Frobenius triangle on the curve
    ctx = make_ctx(p, n)
    q = ctx.q
    one = 0
    gram = make_gram(ctx, "MODEL1")
    t = ctx.root_of_unity(q + 1)  # order q+1; a non-cube since 3 | q^2-1, 3 nmid exp
    m = normalize(ctx, (ZERO, t, ZERO, ZERO, ZERO, one, one, ZERO, ZERO))
    assert is_unitary(ctx, gram, m)
    cls = classify(ctx, m)
    assert cls.kind == "B3" and cls.i == 3
    assert fixed_points_on_curve(ctx, m, gram) == 3


def test_classify_elation_and_wild():
    for p, n in [(2, 2), (3, 1), (5, 1), (7, 1), (3, 2)]:
        ctx = make_ctx(p, n)
        q = ctx.q
        gram = make_gram(ctx, "MODEL1")
        gens = pgu_generator_matrices(ctx)
        ela = gens[4]  # the curve-point elation; gens[5] is the off-triangle homology
        assert is_unitary(ctx, gram, ela)
        assert proj_order(ctx, ela) == p
        cls = classify(ctx, ela)
        assert (cls.kind, cls.i) == ("C", q + 2)
        with pytest.raises(DomainError):
            fixed_points_on_curve(ctx, ela, gram)
        refl = classify(ctx, gens[5])
        assert (refl.kind, refl.i) == ("A", q + 1)


def test_q_even_order2_is_C_order4_is_D():
    # exhaustive over a dihedral-type subgroup containing both orders
    from hermgenus import families, oracle

    ctx = make_ctx(2, 3)
    q = 8
    gram, gens = families.generators(ctx, q, "M2_PSL22_SPLIT", {"omega": 9})
    clo = oracle.close_group(ctx, gram, gens, check_fixed_points=False)
    seen2 = seen4 = 0
    for M in clo.elements:
        if M == identity(ctx):
            continue
        cls = classify(ctx, M)
        if cls.order == 2:
            assert cls.kind == "C"
            seen2 += 1
        if cls.order == 4:
            assert cls.kind == "D"
            seen4 += 1
    assert seen2 > 0


def test_classify_conjugation_invariance():
    for p, n in [(2, 2), (3, 1), (5, 1)]:
        ctx = make_ctx(p, n)
        rng = random.Random(1000 * p + n)
        gram = make_gram(ctx, "MODEL1")
        for _ in range(60):
            M = random_unitary(ctx, rng, 8)
            if M == identity(ctx):
                continue
            N = random_unitary(ctx, rng, 8)
            conj = normalize(ctx, mat_mul(ctx, mat_inv(ctx, N), mat_mul(ctx, M, N)))
            a, b = classify(ctx, M), classify(ctx, conj)
            assert (a.kind, a.i, a.order) == (b.kind, b.i, b.order)


def test_fixed_points_match_contribution_on_samples():
    for p, n in [(2, 2), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]:
        ctx = make_ctx(p, n)
        samples = 60 if ctx.q <= 9 else 25
        rng = random.Random(ctx.q)
        gram = make_gram(ctx, "MODEL1")
        for _ in range(samples):
            M = random_unitary(ctx, rng, 9)
            if M == identity(ctx):
                continue
            cls = classify(ctx, M)
            if cls.order % p != 0:
                assert fixed_points_on_curve(ctx, M, gram) == cls.i, (ctx.q, cls)


def test_matrix_literals():
    ctx = make_ctx(2, 2)
    m = parse_matrix(ctx, "g^3,0,0;0,g^3,0;0,0,1")
    # canonical representative: scaled so the first nonzero entry is 1
    assert m == normalize(ctx, _diag(3, 3, 0)) == _diag(0, 0, ctx.inv(3))
    assert parse_matrix(ctx, format_matrix(ctx, m)) == m
    with pytest.raises(DomainError):
        parse_matrix(ctx, "1,0;0,1")
    with pytest.raises(DomainError):
        parse_matrix(ctx, "0,0,0;0,1,0;0,0,1")  # singular


def test_gram_model3_constant():
    for p, n in [(2, 2), (3, 1), (5, 1), (3, 2)]:
        ctx = make_ctx(p, n)
        gram = make_gram(ctx, "MODEL3")
        # w3^(q+1) = -1
        assert ctx.pow(gram.w3, ctx.q + 1) == ctx.neg(0)


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1)])
def test_generator_set_spans_pgu(p, n):
    from hermgenus.oracle import close_group

    ctx = make_ctx(p, n)
    q = ctx.q
    gram = make_gram(ctx, "MODEL1")
    gens = pgu_generator_matrices(ctx)
    full = (q**3 + 1) * q**3 * (q * q - 1)
    clo = close_group(ctx, gram, gens, cap=full + 8, check_fixed_points=False)
    assert clo.order == full


def test_order4_elements_classify_as_D():
    ctx = make_ctx(2, 1)
    rng = random.Random(0)
    hits = 0
    for _ in range(800):
        M = random_unitary(ctx, rng, 8)
        if M == identity(ctx):
            continue
        if proj_order(ctx, M) == 4:
            cls = classify(ctx, M)
            assert (cls.kind, cls.i) == ("D", 2)
            hits += 1
    assert hits > 0

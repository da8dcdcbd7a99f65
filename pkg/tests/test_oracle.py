import pytest

from hermgenus import families, oracle
from hermgenus.gf import ZERO, CapacityError, DomainError, make_ctx
from hermgenus.oracle import GroupClosure, close_group, genus_from_census
from hermgenus.pgu import make_gram


def _diag(x, y, z):
    return (x, ZERO, ZERO, ZERO, y, ZERO, ZERO, ZERO, z)


def test_trivial_group():
    ctx = make_ctx(3, 1)
    gram = make_gram(ctx, "MODEL1")
    clo = close_group(ctx, gram, [])
    assert clo.order == 1 and clo.census == {}
    assert genus_from_census(3, clo) == 3  # q(q-1)/2


def test_cyclic_homology_group():
    ctx = make_ctx(5, 1)
    q = 5
    gram = make_gram(ctx, "MODEL1")
    lam = ctx.root_of_unity(q + 1)
    clo = close_group(ctx, gram, [_diag(lam, lam, 0)])
    assert clo.order == q + 1
    assert clo.census == {"A": q}
    assert clo.centers == {(ZERO, ZERO, 0): q}


def test_full_torus_gives_zero():
    ctx = make_ctx(2, 2)
    q = 4
    gram = make_gram(ctx, "MODEL1")
    lam = ctx.root_of_unity(q + 1)
    gens = [_diag(lam, 0, 0), _diag(0, lam, 0)]
    clo = close_group(ctx, gram, gens)
    assert clo.order == (q + 1) ** 2
    assert clo.census["A"] == 3 * q
    assert genus_from_census(q, clo) == 0


def test_p34_closure_census():
    ctx = make_ctx(13, 1)
    gram, gens = families.generators(ctx, 13, "P34", {"a": 2, "e": 28, "m": 3})
    clo = close_group(ctx, gram, gens)
    assert clo.order == 84
    assert clo.census == {"A": 3, "B1": 24, "B2": 56}
    assert clo.fixed_point_mismatches == 0
    assert genus_from_census(13, clo) == 1


def test_p32_closure_census():
    ctx = make_ctx(2, 3)
    gram, gens = families.generators(ctx, 8, "P32", {"a": 1, "c": 3, "e": 3})
    clo = close_group(ctx, gram, gens)
    assert clo.order == 6
    assert clo.census == {"A": 2, "C": 1, "E": 2}
    assert genus_from_census(8, clo) == 3


def test_t31_closure_census():
    ctx = make_ctx(5, 1)
    gram, gens = families.generators(ctx, 5, "T31", {"a": 2, "b": 2, "c": 2, "e": 12})
    clo = close_group(ctx, gram, gens)
    assert clo.order == 12
    assert clo.census == {"A": 3, "B1": 8}
    assert genus_from_census(5, clo) == 1


def test_a5_closure_census():
    ctx = make_ctx(2, 2)
    gram, gens = families.generators(ctx, 4, "M2_A5", {"omega": 1})
    clo = close_group(ctx, gram, gens)
    assert clo.order == 60
    # 15 involutions are elations; the 20 order-3 elements are B2 (3 | q-1);
    # the 24 order-5 elements are B1 since 5 | q+1
    assert clo.census == {"C": 15, "B2": 20, "B1": 24}
    assert genus_from_census(4, clo) == 0


def test_close_group_rejects_non_unitary():
    ctx = make_ctx(5, 1)
    gram = make_gram(ctx, "MODEL1")
    with pytest.raises(DomainError):
        close_group(ctx, gram, [_diag(1, 0, 0)])  # g^(q+1) != 1


def test_close_group_cap():
    ctx = make_ctx(5, 1)
    gram = make_gram(ctx, "MODEL1")
    lam = ctx.root_of_unity(6)
    with pytest.raises(CapacityError):
        close_group(ctx, gram, [_diag(lam, 0, 0), _diag(0, lam, 0)], cap=10)


def test_closure_is_group():
    import random

    ctx = make_ctx(2, 3)
    gram, gens = families.generators(ctx, 8, "P32", {"a": 3, "c": 3, "e": 27})
    clo = close_group(ctx, gram, gens, check_fixed_points=False)
    from hermgenus.pgu import mat_inv, mat_mul, normalize

    elems = set(clo.elements)
    rng = random.Random(5)
    sample = rng.sample(clo.elements, 20)
    for a in sample:
        assert mat_inv(ctx, a) in elems
        for b in rng.sample(clo.elements, 10):
            assert normalize(ctx, mat_mul(ctx, a, b)) in elems


def test_genus_from_census_integrality_guard():
    clo = GroupClosure([], 5, {"A": 1}, {}, {})
    with pytest.raises(Exception):
        genus_from_census(5, clo)


def test_verify_family_reports():
    ctx = make_ctx(13, 1)
    r = oracle.verify_family(ctx, 13, "P34", {"a": 2, "e": 28, "m": 3})
    assert r.status == "ok" and r.order_ok and r.census_ok and r.genus_ok
    r = oracle.verify_family(ctx, 13, "T31", {"a": 14, "b": 14, "c": 14, "e": 196}, budget=100)
    assert r.status == "skipped"


def test_verify_q_small():
    for q in (3, 4):
        reports = oracle.verify_q(q)
        assert reports, q
        assert all(r.status == "ok" for r in reports), [
            (r.family, r.params, r.detail) for r in reports if r.status != "ok"
        ]


def test_element_order_census_t31_structure():
    # Sylow structure of pointwise stabilizers is visible in element orders:
    # a=b=c=3, e=27 at q=8 is C_9 x C_3, not C_3 x C_3 x C_3
    ctx = make_ctx(2, 3)
    gram, gens = families.generators(ctx, 8, "T31", {"a": 3, "b": 3, "c": 3, "e": 27})
    clo = close_group(ctx, gram, gens, check_fixed_points=False)
    assert clo.order == 27
    assert clo.order_census == {3: 8, 9: 18}


def _t31_order_census_model(q, params):
    """Element-order census predicted by the Sylow structure of a pointwise
    triangle stabilizer: per prime, cyclic of order p^(v+max) when p divides
    at most one of a,b,c, else C_(p^(v+max)) x C_(p^(min))."""
    from hermgenus.numthy import factorize, valuation

    a, b, c, e = params["a"], params["b"], params["c"], params["e"]
    from math import gcd as _gcd

    w = e // (a * b * c // _gcd(a, b))
    per_prime = []
    for p, _ in factorize(q + 1):
        s, t, u = valuation(a, p), valuation(b, p), valuation(c, p)
        v = valuation(w, p)
        big, small = v + max(s, t, u), min(s, t, u)
        if (s > 0) + (t > 0) + (u > 0) <= 1:
            small = 0
        counts = {}
        for j in range(0, big + 1):
            le_j = p ** min(j, big) * p ** min(j, small)
            le_prev = p ** min(j - 1, big) * p ** min(j - 1, small) if j else 0
            if le_j - le_prev:
                counts[p**j] = le_j - le_prev
        per_prime.append(counts)
    census = {1: 1}
    for counts in per_prime:
        census = {
            o1 * o2: sum(
                n1 * n2
                for o1a, n1 in census.items()
                for o2a, n2 in counts.items()
                if o1a * o2a == o1 * o2
            )
            for o1 in census
            for o2 in counts
        }
    return census


@pytest.mark.parametrize("q", [5, 8, 9, 11])
def test_t31_sylow_structure_via_order_census(q):
    from hermgenus.numthy import prime_power

    ctx = make_ctx(*prime_power(q))
    for params in families.enumerate_family(q, "T31"):
        gram, gens = families.generators(ctx, q, "T31", params)
        clo = close_group(ctx, gram, gens, check_fixed_points=False)
        model = _t31_order_census_model(q, params)
        got = dict(clo.order_census)
        got[1] = 1
        assert got == model, (params, got, model)

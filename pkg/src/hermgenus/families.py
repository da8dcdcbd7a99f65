"""Catalog of quotient-genus construction families.

Each family couples four things: a pure-integer validity predicate on its
parameter tuple, a closed-form genus (an exact integer division; a
non-exact division is an internal-consistency error, never a rounding),
the group order, and a generator recipe that produces explicit projective
matrices for the brute-force oracle.

Triangle-stabilizer families (Fermat model):
    T31  pointwise stabilizer of the fundamental self-polar triangle
    P32  index 2 over the pointwise stabilizer, q even
    P33  index 2, q odd
    P34  index 3, 3 not dividing q+1
    P35  index 3, 3 | q+1
    P36  index 6

Pole-polar-pair families (q even, model XY^q - X^qY + Z^(q+1)):
    M2_OMEGA, M2_CYC_QP, M2_DIH_QP    reductions to T31 / P32
    M2_PSL22_EVEN_N / _SPLIT / _NONSPLIT,
    M2_CYC_QM, M2_EAB, M2_DIH_QM, M2_A4, M2_A5, M2_EABSD, M2_PSL2F

Parameter dictionaries use plain ints; the string syntax is
"a=2,b=2,c=2,e=12" with an optional informational "v=0:1" vector for T31
(exponents of e/(abc/gcd(a,b)) at the ascending primes of q+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .gf import ZERO, DomainError, FieldCtx
from .numthy import divisors, factorize, prime_power, valuation
from .pgu import GramForm, InternalConsistencyError, Mat, make_gram, normalize

__all__ = [
    "FAMILY_ORDER",
    "GenusRecord",
    "InvalidParams",
    "FamilyDomainError",
    "applicable",
    "validate",
    "genus",
    "group_order",
    "enumerate_family",
    "generators",
    "expected_census",
    "expected_vertex_centers",
    "params_to_str",
    "parse_params",
]

FAMILY_ORDER = [
    "T31",
    "P32",
    "P33",
    "P34",
    "P35",
    "P36",
    "M2_OMEGA",
    "M2_CYC_QP",
    "M2_DIH_QP",
    "M2_PSL22_EVEN_N",
    "M2_PSL22_SPLIT",
    "M2_PSL22_NONSPLIT",
    "M2_CYC_QM",
    "M2_EAB",
    "M2_DIH_QM",
    "M2_A4",
    "M2_A5",
    "M2_EABSD",
    "M2_PSL2F",
]

_PARAM_KEYS = {
    "T31": ("a", "b", "c", "e"),
    "P32": ("a", "c", "e"),
    "P33": ("l", "a", "c", "e"),
    "P34": ("a", "e", "m"),
    "P35": ("a", "e", "l", "m"),
    "P36": ("a", "e"),
    "M2_OMEGA": ("omega",),
    "M2_CYC_QP": ("d", "omega"),
    "M2_DIH_QP": ("d", "omega"),
    "M2_PSL22_EVEN_N": ("omega",),
    "M2_PSL22_SPLIT": ("omega",),
    "M2_PSL22_NONSPLIT": ("omega",),
    "M2_CYC_QM": ("d", "omega"),
    "M2_EAB": ("f", "omega"),
    "M2_DIH_QM": ("d", "omega"),
    "M2_A4": ("omega",),
    "M2_A5": ("omega",),
    "M2_EABSD": ("f", "d", "omega"),
    "M2_PSL2F": ("f", "omega"),
}

ENUMERATION_CAP = 10**7


class InvalidParams(ValueError):
    """Parameters fail the family's validity conditions; .reason explains."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class FamilyDomainError(ValueError):
    """The family does not apply to this q at all (wrong parity/congruence)."""


@dataclass(frozen=True)
class GenusRecord:
    genus: int
    group_order: int
    family: str
    params: dict

    def params_str(self, q: int) -> str:
        return params_to_str(q, self.family, self.params)


def _pn(q: int) -> tuple[int, int]:
    pp = prime_power(q)
    if pp is None:
        raise DomainError(f"{q} is not a prime power")
    return pp


def applicable(q: int, family: str) -> bool:
    """Whether the family makes sense at this q (parity / congruence gates)."""
    p, n = _pn(q)
    if family in ("T31", "P36"):
        return True
    if family == "P32":
        return p == 2
    if family == "P33":
        return p != 2
    if family == "P34":
        return (q + 1) % 3 != 0
    if family == "P35":
        return (q + 1) % 3 == 0
    if family.startswith("M2_"):
        return p == 2
    raise DomainError(f"unknown family {family!r}")


def _check_applicable(q: int, family: str) -> None:
    if not applicable(q, family):
        raise FamilyDomainError(f"family {family} is not applicable at q={q}")


# ---------------------------------------------------------------------------
# T31: pointwise triangle stabilizer
# ---------------------------------------------------------------------------


def _t31_validate(q: int, params: dict) -> str | None:
    a, b, c, e = params["a"], params["b"], params["c"], params["e"]
    fac = factorize(q + 1)
    for name, val in (("a", a), ("b", b), ("c", c)):
        if val < 1 or (q + 1) % val != 0:
            return f"{name}={val} does not divide q+1"
    for p, r in fac:
        s, t, u = valuation(a, p), valuation(b, p), valuation(c, p)
        if s != t:
            if u != min(s, t):
                return f"at prime {p}: u={u} must equal min(s,t)={min(s, t)}"
        elif not (s <= u <= r):
            return f"at prime {p}: u={u} outside [s,t]..r = [{s},{r}]"
    k = a * b * c // gcd(a, b)
    if e < 1 or e % k != 0:
        return f"e={e} is not a multiple of abc/gcd(a,b)={k}"
    w = e // k
    rem = w
    for p, r in fac:
        s, t, u = valuation(a, p), valuation(b, p), valuation(c, p)
        v = valuation(w, p)
        rem //= p**v
        if v > r - max(s, t, u):
            return f"at prime {p}: v={v} exceeds r-max(s,t,u)={r - max(s, t, u)}"
        if p == 2 and v > 0:
            even_count = (s > 0) + (t > 0) + (u > 0)
            assert even_count in (0, 1, 3), "2-adic trichotomy violated"
            if even_count != 1:
                return "2-adic clause forces v=0 (2 divides none or all of a,b,c)"
    if rem != 1:
        return f"e/(abc/gcd(a,b)) = {w} has a prime factor outside q+1"
    return None


def _t31_genus(q: int, params: dict) -> tuple[int, int, int]:
    a, b, c, e = params["a"], params["b"], params["c"], params["e"]
    d = a + b + c - 3
    return (q + 1) * (q - 2 - d) + 2 * e, 2 * e, e


def _t31_enumerate(q: int):
    fac = factorize(q + 1)
    per_prime = []
    for p, r in fac:
        opts = []
        for s in range(r + 1):
            for t in range(r + 1):
                us = [min(s, t)] if s != t else range(s, r + 1)
                for u in us:
                    vmax = r - max(s, t, u)
                    if p == 2 and ((s > 0) + (t > 0) + (u > 0)) != 1:
                        vs = (0,)
                    else:
                        vs = range(vmax + 1)
                    opts.extend((s, t, u, v) for v in vs)
        per_prime.append((p, opts))
    total = 1
    for _, opts in per_prime:
        total *= len(opts)
    if total > ENUMERATION_CAP:
        raise InternalConsistencyError(
            f"T31 enumeration at q={q} would exceed {ENUMERATION_CAP} tuples"
        )

    def rec(i, a, b, c, w):
        if i == len(per_prime):
            if a <= b:  # (a, b) unordered: canonical representative
                yield {"a": a, "b": b, "c": c, "e": a * b * c // gcd(a, b) * w}
            return
        p, opts = per_prime[i]
        for s, t, u, v in opts:
            yield from rec(i + 1, a * p**s, b * p**t, c * p**u, w * p**v)

    yield from rec(0, 1, 1, 1, 1)


def _t31_census(q: int, params: dict) -> dict:
    a, b, c, e = params["a"], params["b"], params["c"], params["e"]
    d = a + b + c - 3
    return _strip({"A": d, "B1": e - 1 - d})


def _t31_generators(ctx: FieldCtx, q: int, params: dict):
    a, b, c, e = params["a"], params["b"], params["c"], params["e"]
    one = 0
    gens: list[Mat] = []
    if a > 1:
        gens.append(_diag(ctx.root_of_unity(a), one, one))
    if b > 1:
        gens.append(_diag(one, ctx.root_of_unity(b), one))
    if c > 1:
        xc = ctx.root_of_unity(c)
        gens.append(_diag(xc, xc, one))
    w = e // (a * b * c // gcd(a, b))
    for p, _ in factorize(q + 1):
        v = valuation(w, p)
        if v == 0:
            continue
        s, t, u = valuation(a, p), valuation(b, p), valuation(c, p)
        # supplement of order p^(v+max(s,t,u)) meeting K in p^max(s,t,u);
        # chosen so the subgroup it generates over K acquires no homologies
        # beyond the three axis groups
        if s != t:
            gens.append(
                _diag(ctx.root_of_unity(p ** (v + s)), ctx.root_of_unity(p ** (v + t)), one)
            )
        else:  # u >= s here; 1 + p^(u-s) stays a unit avoiding the diagonal
            mu = ctx.root_of_unity(p ** (v + u))
            gens.append(_diag(mu, ctx.pow(mu, 1 + p ** (u - s)), one))
    return "MODEL1", gens


# ---------------------------------------------------------------------------
# P32 / P33: index 2 over the pointwise stabilizer
# ---------------------------------------------------------------------------


def _idx2_validate_core(q: int, a: int, c: int, e: int) -> str | None:
    q1 = q + 1
    if c < 1 or q1 % c != 0:
        return f"c={c} does not divide q+1"
    if a < 1 or c % a != 0:
        return f"a={a} does not divide c={c}"
    if e < 1 or e % (a * c) != 0:
        return f"ac={a * c} does not divide e={e}"
    if (q1 * q1) % e != 0:
        return f"e={e} does not divide (q+1)^2"
    if (e // a) < 1 or q1 % (e // a) != 0:
        return f"e/a={e // a} does not divide q+1"
    if gcd(e // (a * c), c // a) != 1:
        return f"gcd(e/ac, c/a) = gcd({e // (a * c)},{c // a}) != 1"
    return None


def _p32_validate(q: int, params: dict) -> str | None:
    return _idx2_validate_core(q, params["a"], params["c"], params["e"])


def _p32_genus(q: int, params: dict) -> tuple[int, int, int]:
    a, c, e = params["a"], params["c"], params["e"]
    num = (q + 1) * (q - 2 * a - c - e // c + 1) + 3 * e
    return num, 4 * e, 2 * e


def _p32_enumerate(q: int):
    for c in divisors(q + 1):
        for a in divisors(c):
            for w in divisors((q + 1) // c):
                if gcd(w, c // a) == 1:
                    yield {"a": a, "c": c, "e": a * c * w}


def _p32_census(q: int, params: dict) -> dict:
    a, c, e = params["a"], params["c"], params["e"]
    return _strip(
        {
            "A": 2 * a + c - 3,
            "B1": e - 2 * a - c + 2,
            "C": e // c,
            "E": e - e // c,
        }
    )


def _p33_validate(q: int, params: dict) -> str | None:
    a, c, e, l = params["a"], params["c"], params["e"], params["l"]
    reason = _idx2_validate_core(q, a, c, e)
    if reason:
        return reason
    if l < 1 or c % l != 0:
        return f"l={l} does not divide c={c}"
    if (a % 2 == 0 or c % 2 != 0) and (e // (a * c)) % 2 == 0:
        return "2 | e/(ac) is forbidden when 2|a or c is odd"
    return None


def _p33_hk(q: int, params: dict) -> tuple[int, int]:
    a, c, e, l = params["a"], params["c"], params["e"], params["l"]
    if (q + 1) % (2 * a) != 0:
        return e // c, e // 2
    if c % (2 * a) != 0:
        return e // c, 0
    if (q + 1) % (2 * l) != 0:
        return 0, e
    if c % (2 * l) != 0:
        return 0, 0
    return 2 * e // c, 0


def _p33_genus(q: int, params: dict) -> tuple[int, int, int]:
    a, c, e = params["a"], params["c"], params["e"]
    h, k = _p33_hk(q, params)
    num = (q + 1) * (q - 2 * a - c + 1 - h) - 2 * k + 4 * e
    return num, 4 * e, 2 * e


def _p33_enumerate(q: int):
    for base in _p32_enumerate(q):
        a, c, e = base["a"], base["c"], base["e"]
        if (a % 2 == 0 or c % 2 != 0) and (e // (a * c)) % 2 == 0:
            continue
        for l in divisors(c):
            yield {"l": l, "a": a, "c": c, "e": e}


def _p33_census(q: int, params: dict) -> dict:
    a, c, e = params["a"], params["c"], params["e"]
    h, k = _p33_hk(q, params)
    return _strip(
        {
            "A": 2 * a + c - 3 + h,
            "B1": (e - 2 * a - c + 2) + (e - h - k),
            "B2": k,
        }
    )


def _idx2_s_generators(ctx: FieldCtx, q: int, a: int, c: int, e: int) -> list[Mat]:
    """A, C and the diagonal supplement D of the order-e subgroup S = ACD.

    D is cyclic diag(rho, rho^-1) with o(rho) = w * prod_{p | w} p^(val_p(c)),
    w = e/(ac): per prime of w the supplement must reach the full 2-step
    exponent v+u over K, while the stated order e/a makes |ACD| overshoot e.
    """
    one = 0
    gens: list[Mat] = []
    if a > 1:
        gens.append(_diag(ctx.root_of_unity(a), one, one))
    if c > 1:
        xc = ctx.root_of_unity(c)
        gens.append(_diag(xc, xc, one))
    w = e // (a * c)
    if w > 1:
        o_rho = w
        for p, _ in factorize(w):
            o_rho *= p ** valuation(c, p)
        rho = ctx.root_of_unity(o_rho)
        gens.append(_diag(rho, ctx.inv(rho), one))
    return gens


def _p32_generators(ctx: FieldCtx, q: int, params: dict):
    a, c, e = params["a"], params["c"], params["e"]
    gens = _idx2_s_generators(ctx, q, a, c, e)
    gens.append(_swap(ctx))
    return "MODEL1", gens


def _p33_generators(ctx: FieldCtx, q: int, params: dict):
    a, c, e, l = params["a"], params["c"], params["e"], params["l"]
    one = 0
    gens = _idx2_s_generators(ctx, q, a, c, e)
    t = ctx.root_of_unity(l)
    gens.append(normalize(ctx, (ZERO, t, ZERO, one, ZERO, ZERO, ZERO, ZERO, one)))
    return "MODEL1", gens


# ---------------------------------------------------------------------------
# P34 / P35: index 3
# ---------------------------------------------------------------------------


def _smallest_m(w: int) -> int | None:
    for m in range(1, w + 1):
        if (m * m - m + 1) % w == 0:
            return m
    return None


def _idx3_validate_core(q: int, a: int, e: int, m: int | None) -> str | None:
    q1 = q + 1
    if a < 1 or q1 % a != 0:
        return f"a={a} does not divide q+1"
    if e < 1 or e % (a * a) != 0:
        return f"a^2={a * a} does not divide e={e}"
    if (q1 * q1) % e != 0:
        return f"e={e} does not divide (q+1)^2"
    if q1 % (e // a) != 0:
        return f"e/a={e // a} does not divide q+1"
    w = e // (a * a)
    if w % 2 == 0:
        return f"e/a^2={w} must be odd"
    if gcd(w, a) != 1:
        return f"gcd(e/a^2, a) = gcd({w},{a}) != 1"
    best = _smallest_m(w)
    if best is None:
        return f"no m <= {w} with e/a^2 | m^2-m+1"
    if m is not None and not (1 <= m <= w and (m * m - m + 1) % w == 0):
        return f"m={m} is not a valid witness for e/a^2={w}"
    return None


def _p34_validate(q: int, params: dict) -> str | None:
    return _idx3_validate_core(q, params["a"], params["e"], params.get("m"))


def _p35_validate(q: int, params: dict) -> str | None:
    reason = _idx3_validate_core(q, params["a"], params["e"], params.get("m"))
    if reason:
        return reason
    l = params["l"]
    if l < 1 or (q + 1) % l != 0:
        return f"l={l} does not divide q+1"
    return None


def _idx3_genus(q: int, a: int, e: int, h: int) -> tuple[int, int, int]:
    return (q + 1) * (q - 3 * a + 1) + h * e, 6 * e, 3 * e


def _p34_genus(q: int, params: dict) -> tuple[int, int, int]:
    return _idx3_genus(q, params["a"], params["e"], 2)


def _p35_h(q: int, params: dict) -> int:
    a, l = params["a"], params["l"]
    third = (q + 1) // 3
    if third % a != 0:
        return 2
    return 0 if third % l != 0 else 6


def _p35_genus(q: int, params: dict) -> tuple[int, int, int]:
    return _idx3_genus(q, params["a"], params["e"], _p35_h(q, params))


def _idx3_enumerate(q: int):
    for a in divisors(q + 1):
        for w in divisors((q + 1) // a):
            if w % 2 == 0 or gcd(w, a) != 1:
                continue
            m = _smallest_m(w)
            if m is not None:
                yield a, a * a * w, m


def _p34_enumerate(q: int):
    for a, e, m in _idx3_enumerate(q):
        yield {"a": a, "e": e, "m": m}


def _p35_enumerate(q: int):
    for a, e, m in _idx3_enumerate(q):
        for l in divisors(q + 1):
            yield {"a": a, "e": e, "l": l, "m": m}


def _p34_census(q: int, params: dict) -> dict:
    a, e = params["a"], params["e"]
    coset_kind = "D" if q % 3 == 0 else "B2"
    return _strip({"A": 3 * (a - 1), "B1": e - 3 * a + 2, coset_kind: 2 * e})


def _p35_census(q: int, params: dict) -> dict:
    a, e = params["a"], params["e"]
    h = _p35_h(q, params)
    if h == 2:
        b1_coset, b3 = 2 * e // 3, 4 * e // 3
    elif h == 6:
        b1_coset, b3 = 2 * e, 0
    else:
        b1_coset, b3 = 0, 2 * e
    return _strip({"A": 3 * (a - 1), "B1": e - 3 * a + 2 + b1_coset, "B3": b3})


def _idx3_s_generators(ctx: FieldCtx, a: int, e: int, m: int) -> list[Mat]:
    one = 0
    gens: list[Mat] = []
    if a > 1:
        xa = ctx.root_of_unity(a)
        gens.append(_diag(xa, one, one))
        gens.append(_diag(one, xa, one))
    w = e // (a * a)
    if w > 1:
        rho = ctx.root_of_unity(w)
        gens.append(_diag(rho, ctx.pow(rho, m), one))
    return gens


def _p34_generators(ctx: FieldCtx, q: int, params: dict):
    one = 0
    gens = _idx3_s_generators(ctx, params["a"], params["e"], params["m"])
    gens.append((ZERO, one, ZERO, ZERO, ZERO, one, one, ZERO, ZERO))
    return "MODEL1", gens


def _p35_generators(ctx: FieldCtx, q: int, params: dict):
    one = 0
    gens = _idx3_s_generators(ctx, params["a"], params["e"], params["m"])
    t = ctx.root_of_unity(params["l"])
    gens.append(normalize(ctx, (ZERO, t, ZERO, ZERO, ZERO, one, one, ZERO, ZERO)))
    return "MODEL1", gens


# ---------------------------------------------------------------------------
# P36: index 6
# ---------------------------------------------------------------------------


def _p36_validate(q: int, params: dict) -> str | None:
    a, e = params["a"], params["e"]
    if a < 1 or (q + 1) % a != 0:
        return f"a={a} does not divide q+1"
    if (q + 1) % 3 != 0 or a % 3 == 0:
        if e != a * a:
            return f"e must equal a^2={a * a} here"
    elif e not in (a * a, 3 * a * a):
        return f"e must be a^2 or 3a^2, got {e}"
    return None


def _p36_rst(q: int, a: int, e: int) -> tuple[int, int, int]:
    odd = q % 2 == 1
    half_ok = not odd or ((q + 1) // 2) % a == 0  # q even, or a | (q+1)/2
    if q % 3 in (0, 1):
        r = 2 * e if half_ok else 7 * e // 2
    else:
        r = 0 if half_ok else 3 * e // 2
    s = 4 * e // 3 if (q % 3 == 2 and ((q + 1) // 3) % a != 0) else 0
    t = 0 if odd else 3 * e
    return r, s, t


def _p36_genus(q: int, params: dict) -> tuple[int, int, int]:
    a, e = params["a"], params["e"]
    r, s, t = _p36_rst(q, a, e)
    num = (q + 1) * (q - 3 * a + 1 - 3 * e // a) - 2 * r - 3 * s - t + 12 * e
    return num, 12 * e, 6 * e


def _p36_enumerate(q: int):
    for a in divisors(q + 1):
        yield {"a": a, "e": a * a}
        if (q + 1) % 3 == 0 and a % 3 != 0:
            yield {"a": a, "e": 3 * a * a}


def _p36_census(q: int, params: dict) -> dict:
    a, e = params["a"], params["e"]
    census: dict[str, int] = {}
    b3 = 4 * e // 3 if (q % 3 == 2 and ((q + 1) // 3) % a != 0) else 0
    if q % 2 == 0:
        census["A"] = 3 * (a - 1)
        census["C"] = 3 * e // a
        census["E"] = 3 * (e - e // a)
        census["B2"] = 2 * e if q % 3 == 1 else 0
        census["B3"] = b3
    else:
        census["A"] = 3 * (a - 1) + 3 * e // a
        k2 = e // 2 if ((q + 1) // 2) % a != 0 else 0
        census["B2"] = 3 * k2 + (2 * e if q % 3 == 1 else 0)
        census["D"] = 2 * e if q % 3 == 0 else 0
        census["B3"] = b3
    census["B1"] = (6 * e - 1) - sum(census.values())
    return _strip(census)


def _p36_generators(ctx: FieldCtx, q: int, params: dict):
    a, e = params["a"], params["e"]
    one = 0
    gens: list[Mat] = []
    if a > 1:
        xa = ctx.root_of_unity(a)
        gens.append(_diag(xa, one, one))
        gens.append(_diag(one, xa, one))
    if e == 3 * a * a:
        rho = ctx.root_of_unity(3)
        gens.append(_diag(rho, ctx.inv(rho), one))
    gens.append((ZERO, one, ZERO, ZERO, ZERO, one, one, ZERO, ZERO))  # 3-cycle
    gens.append(_swap(ctx))
    return "MODEL1", gens


# ---------------------------------------------------------------------------
# Pole-polar-pair families, q even
# ---------------------------------------------------------------------------


def _m2_parity(q: int, params: dict) -> str | None:
    omega = params["omega"]
    if omega < 1 or (q + 1) % omega != 0:
        return f"omega={omega} does not divide q+1"
    return None


def _n_of(q: int) -> int:
    return _pn(q)[1]


def _m2_omega_validate(q, params):
    return _m2_parity(q, params)


def _m2_omega_genus(q, params):
    w = params["omega"]
    num, den, _ = _t31_genus(q, {"a": 1, "b": 1, "c": w, "e": w})
    return num, den, w


def _m2_omega_enumerate(q):
    for w in divisors(q + 1):
        yield {"omega": w}


def _m2_omega_census(q, params):
    w = params["omega"]
    return _strip({"A": w - 1, "B1": 0})


def _m2_omega_generators(ctx, q, params):
    w = params["omega"]
    gens = []
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, 0))
    return "MODEL3", gens


def _m2_cyc_qp_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    d = params["d"]
    if d < 2 or (q + 1) % d != 0:
        return f"d={d} must be a divisor of q+1 with d >= 2"
    return None


def _m2_cyc_qp_genus(q, params):
    d, w = params["d"], params["omega"]
    g = gcd(d, w)
    num, den, _ = _t31_genus(q, {"a": g, "b": g, "c": w, "e": d * w})
    return num, den, d * w


def _m2_cyc_qp_enumerate(q):
    for d in divisors(q + 1):
        if d >= 2:
            for w in divisors(q + 1):
                yield {"d": d, "omega": w}


def _m2_cyc_qp_census(q, params):
    d, w = params["d"], params["omega"]
    g = gcd(d, w)
    hom = 2 * g + w - 3
    return _strip({"A": hom, "B1": d * w - 1 - hom})


def _m2_cyc_qp_generators(ctx, q, params):
    d, w = params["d"], params["omega"]
    one = 0
    lam = ctx.root_of_unity(d)
    theta = ctx.add(lam, ctx.inv(lam))  # trace of an order-d torus element
    h = (ZERO, one, ZERO, one, theta, ZERO, ZERO, ZERO, one)
    gens = [h]
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, one))
    return "MODEL3", gens


def _m2_dih_qp_validate(q, params):
    return _m2_cyc_qp_validate(q, params)


def _m2_dih_qp_genus(q, params):
    d, w = params["d"], params["omega"]
    g = gcd(d, w)
    num, den, _ = _p32_genus(q, {"a": g, "c": w, "e": d * w})
    return num, den, 2 * d * w


def _m2_dih_qp_enumerate(q):
    yield from _m2_cyc_qp_enumerate(q)


def _m2_dih_qp_census(q, params):
    d, w = params["d"], params["omega"]
    g = gcd(d, w)
    return _p32_census(q, {"a": g, "c": w, "e": d * w})


def _m2_dih_qp_generators(ctx, q, params):
    model, gens = _m2_cyc_qp_generators(ctx, q, params)
    gens.append(_swap(ctx))
    return model, gens


def _m2_psl22_evenn_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    if _n_of(q) % 2 != 0:
        return "requires even n (3 | q-1)"
    return None


def _m2_psl22_evenn_genus(q, params):
    w = params["omega"]
    return q * q - w * q - 3 * q + 4 * w - 4, 12 * w, 6 * w


def _m2_psl22_evenn_census(q, params):
    w = params["omega"]
    return _strip({"A": w - 1, "B2": 2 * w, "C": 3, "E": 3 * (w - 1)})


def _m2_psl22_split_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    if _n_of(q) % 2 == 0:
        return "requires odd n (3 | q+1)"
    return None


def _psl22_split_a(w: int) -> int:
    # product homologies (order-3 in H times order-3 in Omega) exist iff 3 | omega
    return 3 if w % 3 == 0 else 1


def _m2_psl22_split_genus(q, params):
    w = params["omega"]
    num, den, _ = _p32_genus(q, {"a": _psl22_split_a(w), "c": w, "e": 3 * w})
    return num, den, 6 * w


def _m2_psl22_split_census(q, params):
    w = params["omega"]
    return _p32_census(q, {"a": _psl22_split_a(w), "c": w, "e": 3 * w})


def _m2_psl22_nonsplit_validate(q, params):
    reason = _m2_psl22_split_validate(q, params)
    if reason:
        return reason
    w = params["omega"]
    k = valuation(w, 3)
    if k < 1:
        return "requires 3 | omega"
    if (q + 1) % 3 ** (k + 1) != 0:
        return f"3^(k+1)={3 ** (k + 1)} does not divide q+1"
    return None


def _m2_psl22_nonsplit_genus(q, params):
    w = params["omega"]
    k = valuation(w, 3)
    num = (q + 1) * (q - 2 * 3**k - w - 2) + 9 * w
    return num, 12 * w, 6 * w


def _m2_psl22_nonsplit_census(q, params):
    w = params["omega"]
    k = valuation(w, 3)
    return _p32_census(q, {"a": 3**k, "c": w, "e": 3 * w})


def _m2_psl22_generators(ctx, q, params):
    # S3 = PSL(2,2) inside H, optionally times the omega homology group
    w = params["omega"]
    one = 0
    trans1 = (one, one, ZERO, ZERO, one, ZERO, ZERO, ZERO, one)
    gens = [trans1, _swap(ctx)]
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, one))
    return "MODEL3", gens


def _m2_cyc_qm_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    d = params["d"]
    if d < 2 or (q - 1) % d != 0:
        return f"d={d} must be a divisor of q-1 with d >= 2"
    return None


def _m2_cyc_qm_genus(q, params):
    d, w = params["d"], params["omega"]
    return (q + 1) * (q - w - 1) + 2 * w, 2 * d * w, d * w


def _m2_cyc_qm_enumerate(q):
    for d in divisors(q - 1):
        if d >= 2:
            for w in divisors(q + 1):
                yield {"d": d, "omega": w}


def _m2_cyc_qm_census(q, params):
    d, w = params["d"], params["omega"]
    return _strip({"A": w - 1, "B2": (d - 1) * w})


def _m2_cyc_qm_generators(ctx, q, params):
    d, w = params["d"], params["omega"]
    one = 0
    t = ctx.root_of_unity(d)  # lies in GF(q) since d | q-1
    gens = [_diag(t, ctx.inv(t), one)]
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, one))
    return "MODEL3", gens


def _m2_eab_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    f = params["f"]
    if not 1 <= f <= _n_of(q):
        return f"f={f} outside 1..n"
    return None


def _m2_eab_genus(q, params):
    f, w = params["f"], params["omega"]
    num = (q + 1) * (q - w - 2**f) + w * (2**f + 1)
    return num, 2 ** (f + 1) * w, 2**f * w


def _m2_eab_enumerate(q):
    for f in range(1, _n_of(q) + 1):
        for w in divisors(q + 1):
            yield {"f": f, "omega": w}


def _m2_eab_census(q, params):
    f, w = params["f"], params["omega"]
    t = 2**f - 1
    return _strip({"A": w - 1, "C": t, "E": t * (w - 1)})


def _m2_eab_generators(ctx, q, params):
    f, w = params["f"], params["omega"]
    basis = _f2_span_basis(ctx, f)
    gens = [_transvection(ctx, b) for b in basis]
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, 0))
    return "MODEL3", gens


def _m2_dih_qm_validate(q, params):
    return _m2_cyc_qm_validate(q, params)


def _m2_dih_qm_genus(q, params):
    d, w = params["d"], params["omega"]
    num = q * q - q * w - q * d + w * d + w - d - 1
    return num, 4 * d * w, 2 * d * w


def _m2_dih_qm_census(q, params):
    d, w = params["d"], params["omega"]
    return _strip({"A": w - 1, "B2": (d - 1) * w, "C": d, "E": d * (w - 1)})


def _m2_dih_qm_generators(ctx, q, params):
    model, gens = _m2_cyc_qm_generators(ctx, q, params)
    gens.append(_swap(ctx))
    return model, gens


def _m2_a4_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    if _n_of(q) % 2 != 0:
        return "requires even n"
    return None


def _m2_a4_genus(q, params):
    w = params["omega"]
    return q * q - q * w + 4 * w - 3 * q - 4, 24 * w, 12 * w


def _m2_a4_census(q, params):
    w = params["omega"]
    return _strip({"A": w - 1, "B2": 8 * w, "C": 3, "E": 3 * (w - 1)})


def _m2_a4_generators(ctx, q, params):
    w = params["omega"]
    one = 0
    t = ctx.root_of_unity(3)  # generator of GF(4)* inside GF(q)
    gens = [_transvection(ctx, one), _transvection(ctx, t), _diag(t, ctx.inv(t), one)]
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, one))
    return "MODEL3", gens


def _m2_a5_validate(q, params):
    return _m2_a4_validate(q, params)


def _m2_a5_epsilon(q, params) -> int:
    w = params["omega"]
    if (q - 1) % 5 == 0:
        return w
    return q + 1 if w % 5 == 0 else 0


def _m2_a5_genus(q, params):
    w = params["omega"]
    num = (q + 1) * (q - w - 16) + 65 * w - 48 * _m2_a5_epsilon(q, params)
    return num, 120 * w, 60 * w


def _m2_a5_census(q, params):
    w = params["omega"]
    census = {"A": w - 1, "C": 15, "E": 15 * (w - 1), "B2": 20 * w}
    if (q - 1) % 5 == 0:
        census["B2"] += 24 * w
    elif w % 5 != 0:
        census["B1"] = 24 * w
    else:
        census["A"] += 48
        census["B1"] = 24 + 24 * (w - 3)
    return _strip(census)


def _m2_a5_generators(ctx, q, params):
    w = params["omega"]
    one = 0
    t = ctx.root_of_unity(3)  # GF(4) = {0, 1, t, t^2} inside GF(q)
    gens = [_transvection(ctx, one), _transvection(ctx, t), _swap(ctx)]
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, one))
    return "MODEL3", gens


def _m2_eabsd_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    f, d = params["f"], params["d"]
    if not 1 <= f <= _n_of(q):
        return f"f={f} outside 1..n"
    if d < 2 or gcd(2**f - 1, q - 1) % d != 0:
        return f"d={d} must divide gcd(2^f-1, q-1) with d >= 2"
    return None


def _m2_eabsd_genus(q, params):
    f, d, w = params["f"], params["d"], params["omega"]
    num = (q + 1) * (q - w - 2**f) + w * (2**f + 1)
    return num, 2 ** (f + 1) * d * w, 2**f * d * w


def _m2_eabsd_enumerate(q):
    for f in range(1, _n_of(q) + 1):
        for d in divisors(gcd(2**f - 1, q - 1)):
            if d >= 2:
                for w in divisors(q + 1):
                    yield {"f": f, "d": d, "omega": w}


def _m2_eabsd_census(q, params):
    f, d, w = params["f"], params["d"], params["omega"]
    t = 2**f - 1
    return _strip({"A": w - 1, "C": t, "E": t * (w - 1), "B2": 2**f * (d - 1) * w})


def _m2_eabsd_generators(ctx, q, params):
    f, d, w = params["f"], params["d"], params["omega"]
    one = 0
    s = _mult_order_of_2(d)
    basis = _f2s_span_basis(ctx, s, f)
    t = ctx.root_of_unity(d)  # lies in GF(2^s), so it stabilizes the span
    gens = [_transvection(ctx, b) for b in basis]
    gens.append(_diag(t, ctx.inv(t), one))
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, one))
    return "MODEL3", gens


def _m2_psl2f_validate(q, params):
    reason = _m2_parity(q, params)
    if reason:
        return reason
    f = params["f"]
    if f <= 1 or _n_of(q) % f != 0:
        return f"f={f} must be a divisor of n with f > 1"
    return None


def _m2_psl2f_genus(q, params):
    f, w = params["f"], params["omega"]
    n = _n_of(q)
    two_f = 2**f
    den = 2 ** (f + 1) * (two_f + 1) * (two_f - 1) * w
    if (n // f) % 2 == 1:
        num = (q + 1) * (q - w - two_f * (two_f - 1) * gcd(two_f + 1, w) - two_f) + (
            two_f + 1
        ) * w * (two_f * two_f - two_f + 1)
    else:
        num = (q + 1) * (q - two_f * two_f - w) - w * (
            2 * two_f**3 - two_f**2 - 2 * two_f - 1
        ) + den
    return num, den, 2**f * (two_f * two_f - 1) * w


def _m2_psl2f_enumerate(q):
    for f in divisors(_n_of(q)):
        if f > 1:
            for w in divisors(q + 1):
                yield {"f": f, "omega": w}


def _m2_psl2f_census(q, params):
    f, w = params["f"], params["omega"]
    n = _n_of(q)
    two_f = 2**f
    census = {
        "A": w - 1,
        "C": two_f * two_f - 1,
        "E": (two_f * two_f - 1) * (w - 1),
        "B2": two_f // 2 * (two_f + 1) * (two_f - 2) * w,
    }
    qp_family = two_f * two_f // 2 * (two_f - 1) * w  # orders dividing 2^f + 1
    if (n // f) % 2 == 1:
        extra_a = (two_f * two_f - two_f) * (gcd(two_f + 1, w) - 1)
        census["A"] += extra_a
        census["B1"] = qp_family - extra_a
    else:
        census["B2"] += qp_family
    return _strip(census)


def _m2_psl2f_generators(ctx, q, params):
    f, w = params["f"], params["omega"]
    basis = _subfield_f2_basis(ctx, f)
    gens = [_transvection(ctx, b) for b in basis]
    gens.append(_swap(ctx))
    if w > 1:
        x = ctx.root_of_unity(w)
        gens.append(_diag(x, x, 0))
    return "MODEL3", gens


# ---------------------------------------------------------------------------
# generator building blocks
# ---------------------------------------------------------------------------


def _diag(x: int, y: int, z: int) -> Mat:
    return (x, ZERO, ZERO, ZERO, y, ZERO, ZERO, ZERO, z)


def _swap(ctx: FieldCtx) -> Mat:
    one = 0
    return (ZERO, one, ZERO, one, ZERO, ZERO, ZERO, ZERO, one)


def _transvection(ctx: FieldCtx, b: int) -> Mat:
    one = 0
    return (one, b, ZERO, ZERO, one, ZERO, ZERO, ZERO, one)


def _mult_order_of_2(d: int) -> int:
    """Multiplicative order of 2 modulo odd d (1 for d = 1)."""
    s, acc = 1, 2 % d
    while acc != 1 % d:
        acc = acc * 2 % d
        s += 1
    return s


def _subfield_f2_basis(ctx: FieldCtx, f: int) -> list[int]:
    """GF(2)-basis of the subfield GF(2^f) of GF(q^2) (requires f | 2n)."""
    elems = [x for x in ctx.subfield_elements(f) if x != ZERO]
    return _greedy_f2_basis(ctx, elems, f)


def _greedy_f2_basis(ctx: FieldCtx, candidates: list[int], dim: int) -> list[int]:
    basis: list[int] = []
    echelon: list[int] = []
    for x in candidates:
        vec = ctx.code_of(x)
        for e in echelon:
            vec = min(vec, vec ^ e)
        if vec:
            basis.append(x)
            echelon.append(vec)
            echelon.sort(reverse=True)
            if len(basis) == dim:
                return basis
    raise InternalConsistencyError("GF(2)-basis extraction fell short")


def _f2_span_basis(ctx: FieldCtx, f: int) -> list[int]:
    """Basis of an f-dimensional GF(2)-subspace of GF(q): the subfield when
    f | n, else the first f vectors of the greedy basis of GF(q)."""
    if ctx.n % f == 0:
        return _subfield_f2_basis(ctx, f)
    fq = [x for x in ctx.fq_elements() if x != ZERO]
    return _greedy_f2_basis(ctx, fq, f)


def _f2s_span_basis(ctx: FieldCtx, s: int, f: int) -> list[int]:
    """GF(2)-basis of an f-dim GF(2^s)-stable subspace of GF(q) (s | f)."""
    if f % s != 0:
        raise InternalConsistencyError("subspace dimension incompatible with acting field")
    sub_basis = _subfield_f2_basis(ctx, s)
    # greedy GF(2^s)-independent elements of GF(q)
    chosen: list[int] = []
    echelon: list[int] = []
    for x in ctx.fq_elements():
        if x == ZERO:
            continue
        vec = ctx.code_of(x)
        for e in echelon:
            vec = min(vec, vec ^ e)
        if vec:
            chosen.append(x)
            for b in sub_basis:
                v = ctx.code_of(ctx.mul(x, b))
                for e in echelon:
                    v = min(v, v ^ e)
                if v:
                    echelon.append(v)
                    echelon.sort(reverse=True)
            if len(chosen) == f // s:
                break
    if len(chosen) < f // s:
        raise InternalConsistencyError("GF(2^s)-basis extraction fell short")
    return [ctx.mul(c, b) for c in chosen for b in sub_basis]


# ---------------------------------------------------------------------------
# dispatch tables
# ---------------------------------------------------------------------------

_VALIDATE = {
    "T31": _t31_validate,
    "P32": _p32_validate,
    "P33": _p33_validate,
    "P34": _p34_validate,
    "P35": _p35_validate,
    "P36": _p36_validate,
    "M2_OMEGA": _m2_omega_validate,
    "M2_CYC_QP": _m2_cyc_qp_validate,
    "M2_DIH_QP": _m2_dih_qp_validate,
    "M2_PSL22_EVEN_N": _m2_psl22_evenn_validate,
    "M2_PSL22_SPLIT": _m2_psl22_split_validate,
    "M2_PSL22_NONSPLIT": _m2_psl22_nonsplit_validate,
    "M2_CYC_QM": _m2_cyc_qm_validate,
    "M2_EAB": _m2_eab_validate,
    "M2_DIH_QM": _m2_dih_qm_validate,
    "M2_A4": _m2_a4_validate,
    "M2_A5": _m2_a5_validate,
    "M2_EABSD": _m2_eabsd_validate,
    "M2_PSL2F": _m2_psl2f_validate,
}

_GENUS = {
    "T31": _t31_genus,
    "P32": _p32_genus,
    "P33": _p33_genus,
    "P34": _p34_genus,
    "P35": _p35_genus,
    "P36": _p36_genus,
    "M2_OMEGA": _m2_omega_genus,
    "M2_CYC_QP": _m2_cyc_qp_genus,
    "M2_DIH_QP": _m2_dih_qp_genus,
    "M2_PSL22_EVEN_N": _m2_psl22_evenn_genus,
    "M2_PSL22_SPLIT": _m2_psl22_split_genus,
    "M2_PSL22_NONSPLIT": _m2_psl22_nonsplit_genus,
    "M2_CYC_QM": _m2_cyc_qm_genus,
    "M2_EAB": _m2_eab_genus,
    "M2_DIH_QM": _m2_dih_qm_genus,
    "M2_A4": _m2_a4_genus,
    "M2_A5": _m2_a5_genus,
    "M2_EABSD": _m2_eabsd_genus,
    "M2_PSL2F": _m2_psl2f_genus,
}

_ENUM = {
    "T31": _t31_enumerate,
    "P32": _p32_enumerate,
    "P33": _p33_enumerate,
    "P34": _p34_enumerate,
    "P35": _p35_enumerate,
    "P36": _p36_enumerate,
    "M2_OMEGA": _m2_omega_enumerate,
    "M2_CYC_QP": _m2_cyc_qp_enumerate,
    "M2_DIH_QP": _m2_dih_qp_enumerate,
    "M2_PSL22_EVEN_N": _m2_omega_enumerate,
    "M2_PSL22_SPLIT": _m2_omega_enumerate,
    "M2_PSL22_NONSPLIT": _m2_omega_enumerate,
    "M2_CYC_QM": _m2_cyc_qm_enumerate,
    "M2_EAB": _m2_eab_enumerate,
    "M2_DIH_QM": _m2_cyc_qm_enumerate,
    "M2_A4": _m2_omega_enumerate,
    "M2_A5": _m2_omega_enumerate,
    "M2_EABSD": _m2_eabsd_enumerate,
    "M2_PSL2F": _m2_psl2f_enumerate,
}

_GENERATORS = {
    "T31": _t31_generators,
    "P32": _p32_generators,
    "P33": _p33_generators,
    "P34": _p34_generators,
    "P35": _p35_generators,
    "P36": _p36_generators,
    "M2_OMEGA": _m2_omega_generators,
    "M2_CYC_QP": _m2_cyc_qp_generators,
    "M2_DIH_QP": _m2_dih_qp_generators,
    "M2_PSL22_EVEN_N": _m2_psl22_generators,
    "M2_PSL22_SPLIT": _m2_psl22_generators,
    "M2_PSL22_NONSPLIT": _m2_psl22_generators,
    "M2_CYC_QM": _m2_cyc_qm_generators,
    "M2_EAB": _m2_eab_generators,
    "M2_DIH_QM": _m2_dih_qm_generators,
    "M2_A4": _m2_a4_generators,
    "M2_A5": _m2_a5_generators,
    "M2_EABSD": _m2_eabsd_generators,
    "M2_PSL2F": _m2_psl2f_generators,
}

_CENSUS = {
    "T31": _t31_census,
    "P32": _p32_census,
    "P33": _p33_census,
    "P34": _p34_census,
    "P35": _p35_census,
    "P36": _p36_census,
    "M2_OMEGA": _m2_omega_census,
    "M2_CYC_QP": _m2_cyc_qp_census,
    "M2_DIH_QP": _m2_dih_qp_census,
    "M2_PSL22_EVEN_N": _m2_psl22_evenn_census,
    "M2_PSL22_SPLIT": _m2_psl22_split_census,
    "M2_PSL22_NONSPLIT": _m2_psl22_nonsplit_census,
    "M2_CYC_QM": _m2_cyc_qm_census,
    "M2_EAB": _m2_eab_census,
    "M2_DIH_QM": _m2_dih_qm_census,
    "M2_A4": _m2_a4_census,
    "M2_A5": _m2_a5_census,
    "M2_EABSD": _m2_eabsd_census,
    "M2_PSL2F": _m2_psl2f_census,
}


def _strip(census: dict) -> dict:
    return {k: v for k, v in census.items() if v}


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def validate(q: int, family: str, params: dict) -> tuple[bool, str]:
    """Check the family's numeric conditions; returns (ok, reason)."""
    _check_applicable(q, family)
    missing = [k for k in _PARAM_KEYS[family] if k not in params and k != "m"]
    if missing:
        return False, f"missing parameters: {', '.join(missing)}"
    reason = _VALIDATE[family](q, params)
    return (reason is None), (reason or "ok")


def _checked(q: int, family: str, params: dict) -> dict:
    ok, reason = validate(q, family, params)
    if not ok:
        raise InvalidParams(reason)
    if family in ("P34", "P35") and "m" not in params:
        params = dict(params)
        params["m"] = _smallest_m(params["e"] // params["a"] ** 2)
    return params


def genus(q: int, family: str, params: dict) -> GenusRecord:
    """Closed-form genus and group order for a validated parameter tuple."""
    params = _checked(q, family, params)
    num, den, order = _GENUS[family](q, params)
    if num % den != 0:
        raise InternalConsistencyError(
            f"non-integer genus {num}/{den} for {family} {params} at q={q}"
        )
    g = num // den
    if g < 0 or 2 * g > q * (q - 1):
        raise InternalConsistencyError(
            f"genus {g} outside [0, q(q-1)/2] for {family} {params} at q={q}"
        )
    return GenusRecord(g, order, family, dict(params))


def group_order(q: int, family: str, params: dict) -> int:
    return genus(q, family, params).group_order


def enumerate_family(q: int, family: str) -> list[dict]:
    """All valid parameter tuples of the family at q, deduplicated & sorted.

    An inapplicable family (wrong parity/congruence) enumerates to nothing.
    """
    if not applicable(q, family):
        return []
    seen = set()
    out = []
    for params in _ENUM[family](q):
        ok, _ = validate(q, family, params)
        if not ok:
            continue
        if family in ("P34", "P35"):
            params = dict(params)
            params.setdefault("m", _smallest_m(params["e"] // params["a"] ** 2))
        key = tuple(params[k] for k in _PARAM_KEYS[family])
        if key not in seen:
            seen.add(key)
            out.append(params)
    out.sort(key=lambda ps: tuple(ps[k] for k in _PARAM_KEYS[family]))
    return out


def generators(ctx: FieldCtx, q: int, family: str, params: dict) -> tuple[GramForm, list[Mat]]:
    """Explicit unitary generators of a group realizing the parameter tuple."""
    if ctx.q != q:
        raise DomainError("field context does not match q")
    params = _checked(q, family, params)
    model, gens = _GENERATORS[family](ctx, q, params)
    gram = make_gram(ctx, model)
    return gram, [normalize(ctx, g) for g in gens]


def expected_census(q: int, family: str, params: dict) -> dict:
    """Element-type counts stated by the construction (keys with count > 0)."""
    params = _checked(q, family, params)
    return _CENSUS[family](q, params)


def expected_vertex_centers(q: int, family: str, params: dict):
    """Expected homology counts at distinguished centers, or None.

    Triangle families: counts at the fundamental vertices e1, e2, e3.
    Pole-polar families: count at the pole (0,0,1).
    """
    params = _checked(q, family, params)
    e1, e2, e3 = (0, ZERO, ZERO), (ZERO, 0, ZERO), (ZERO, ZERO, 0)
    if family == "T31":
        a, b, c = params["a"], params["b"], params["c"]
        return {e1: a - 1, e2: b - 1, e3: c - 1}
    if family in ("P32", "P33"):
        a, c = params["a"], params["c"]
        return {e1: a - 1, e2: a - 1, e3: c - 1}
    if family in ("P34", "P35", "P36"):
        a = params["a"]
        return {e1: a - 1, e2: a - 1, e3: a - 1}
    if family.startswith("M2_"):
        return {e3: params["omega"] - 1}
    return None


# ---------------------------------------------------------------------------
# parameter string syntax
# ---------------------------------------------------------------------------


def params_to_str(q: int, family: str, params: dict) -> str:
    parts = [f"{k}={params[k]}" for k in _PARAM_KEYS[family] if k in params]
    if family == "T31":
        kk = params["a"] * params["b"] * params["c"] // gcd(params["a"], params["b"])
        w = params["e"] // kk
        vs = ":".join(str(valuation(w, p)) for p, _ in factorize(q + 1))
        parts.append(f"v={vs}")
    return ",".join(parts)


def parse_params(q: int, family: str, text: str) -> dict:
    """Parse "a=2,c=3,e=12" (T31 may carry an informational v=0:1 vector)."""
    if family not in _PARAM_KEYS:
        raise DomainError(f"unknown family {family!r}")
    params: dict = {}
    vvec = None
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise InvalidParams(f"bad parameter chunk {chunk!r}")
        key, _, val = chunk.partition("=")
        key = key.strip()
        if key == "v":
            vvec = tuple(int(x) for x in val.split(":"))
            continue
        if key not in _PARAM_KEYS[family]:
            raise InvalidParams(f"parameter {key!r} not used by {family}")
        try:
            params[key] = int(val)
        except ValueError:
            raise InvalidParams(f"non-integer value in {chunk!r}") from None
    if vvec is not None and family == "T31" and "e" in params:
        fac = factorize(q + 1)
        if len(vvec) != len(fac):
            raise InvalidParams("v vector length does not match the primes of q+1")
        kk = params["a"] * params["b"] * params["c"] // gcd(params["a"], params["b"])
        w = 1
        for (p, _), v in zip(fac, vvec):
            w *= p**v
        if kk * w != params["e"]:
            raise InvalidParams("v vector inconsistent with e")
    elif vvec is not None and family == "T31":
        # e omitted: reconstruct it from the v vector
        fac = factorize(q + 1)
        if len(vvec) != len(fac):
            raise InvalidParams("v vector length does not match the primes of q+1")
        kk = params["a"] * params["b"] * params["c"] // gcd(params["a"], params["b"])
        w = 1
        for (p, _), v in zip(fac, vvec):
            w *= p**v
        params["e"] = kk * w
    return params

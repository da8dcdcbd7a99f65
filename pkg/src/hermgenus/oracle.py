"""Brute-force verification of the closed-form genera.

A generated matrix group is closed by breadth-first multiplication with
canonical projective normalization as the dedup key, every nontrivial
element is classified, and the quotient genus is recomputed from the
census via Riemann-Hurwitz:

    g = ((q^2 - q - 2) - Delta) / (2|G|) + 1,   Delta = sum of i(sigma).

This path shares no code with the closed forms in `families`, so an
agreement (order, census and genus) is a genuine cross-check.  For tame
elements the classifier's contribution is additionally recounted as the
number of fixed points on the curve.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import families, pgu
from .gf import CapacityError, DomainError, FieldCtx, make_ctx
from .numthy import prime_power
from .pgu import GramForm, InternalConsistencyError, Mat

__all__ = [
    "GroupClosure",
    "VerifyReport",
    "close_group",
    "genus_from_census",
    "verify_family",
    "verify_q",
    "triangle_necessity_check",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 20000


@dataclass
class GroupClosure:
    elements: list[Mat]
    order: int
    census: dict[str, int]
    centers: dict[tuple, int]
    order_census: dict[int, int]
    fixed_point_mismatches: int = 0


def close_group(
    ctx: FieldCtx,
    gram: GramForm,
    generators: list[Mat],
    cap: int = DEFAULT_BUDGET,
    check_fixed_points: bool = True,
) -> GroupClosure:
    """Full closure of the generated group with a per-element type census."""
    gens = []
    for g in generators:
        g = pgu.normalize(ctx, g)
        if not pgu.is_unitary(ctx, gram, g):
            raise DomainError(f"generator is not unitary: {pgu.format_matrix(ctx, g)}")
        gens.append(g)
    ident = pgu.identity(ctx)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                M = pgu.normalize(ctx, pgu.mat_mul(ctx, A, g))
                if M not in seen:
                    if len(seen) >= cap:
                        raise CapacityError(f"group closure exceeded cap {cap}")
                    seen.add(M)
                    nxt.append(M)
        frontier = nxt

    census: Counter[str] = Counter()
    centers: Counter[tuple] = Counter()
    order_census: Counter[int] = Counter()
    mismatches = 0
    for M in seen:
        if M == ident:
            continue
        cls = pgu.classify(ctx, M)
        census[cls.kind] += 1
        order_census[cls.order] += 1
        if cls.center is not None:
            centers[cls.center] += 1
        if check_fixed_points and cls.order % ctx.p != 0:
            if pgu.fixed_points_on_curve(ctx, M, gram) != cls.i:
                mismatches += 1
    elements = sorted(seen)
    return GroupClosure(elements, len(seen), dict(census), dict(centers), dict(order_census), mismatches)


def genus_from_census(q: int, closure: GroupClosure) -> int:
    """Riemann-Hurwitz genus of the quotient from the element-type census."""
    delta = sum(n * pgu.contribution(kind, q) for kind, n in closure.census.items())
    num = (q * q - q - 2) - delta
    den = 2 * closure.order
    if num % den != 0:
        raise InternalConsistencyError(
            f"Riemann-Hurwitz count is not an integer: ({num})/({den})"
        )
    g = num // den + 1
    if g < 0:
        raise InternalConsistencyError(f"negative quotient genus {g}")
    return g


@dataclass
class VerifyReport:
    q: int
    family: str
    params: dict
    status: str  # "ok", "fail", "skipped"
    claimed_genus: int
    claimed_order: int
    order_ok: bool | None = None
    census_ok: bool | None = None
    genus_ok: bool | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def verify_family(
    ctx: FieldCtx,
    q: int,
    family: str,
    params: dict,
    budget: int = DEFAULT_BUDGET,
    check_fixed_points: bool = True,
) -> VerifyReport:
    """Close the generated group and compare order, census and RH-genus."""
    rec = families.genus(q, family, params)
    report = VerifyReport(q, family, dict(rec.params), "ok", rec.genus, rec.group_order)
    if rec.group_order > budget:
        report.status = "skipped"
        report.detail = f"group order {rec.group_order} over budget {budget}"
        return report
    gram, gens = families.generators(ctx, q, family, params)
    try:
        closure = close_group(
            ctx,
            gram,
            gens,
            cap=min(max(budget, rec.group_order), 4 * rec.group_order + 16),
            check_fixed_points=check_fixed_points,
        )
    except CapacityError:
        report.status = "fail"
        report.order_ok = False
        report.detail = "closure overshoots the claimed group order"
        return report

    report.order_ok = closure.order == rec.group_order
    expected = families.expected_census(q, family, rec.params)
    report.census_ok = expected == closure.census
    detail = []
    if not report.order_ok:
        detail.append(f"order {closure.order} != {rec.group_order}")
    if not report.census_ok:
        detail.append(f"census {closure.census} != expected {expected}")
    if closure.fixed_point_mismatches:
        report.census_ok = False
        detail.append(f"{closure.fixed_point_mismatches} fixed-point/i mismatches")
    centers = families.expected_vertex_centers(q, family, rec.params)
    if centers is not None:
        for point, count in centers.items():
            if closure.centers.get(point, 0) != count:
                report.census_ok = False
                detail.append(
                    f"homology count at {point} is {closure.centers.get(point, 0)}, expected {count}"
                )
    if report.order_ok:
        rh = genus_from_census(q, closure)
        report.genus_ok = rh == rec.genus
        if not report.genus_ok:
            detail.append(f"RH genus {rh} != formula {rec.genus}")
    else:
        report.genus_ok = False
    if not (report.order_ok and report.census_ok and report.genus_ok):
        report.status = "fail"
    report.detail = "; ".join(detail)
    return report


def verify_q(
    q: int,
    budget: int = DEFAULT_BUDGET,
    family_filter: list[str] | None = None,
    check_fixed_points: bool = True,
) -> list[VerifyReport]:
    """Verify every enumerated tuple of every applicable family at q."""
    pp = prime_power(q)
    if pp is None:
        raise DomainError(f"{q} is not a prime power")
    ctx = make_ctx(*pp)
    reports = []
    for fam in families.FAMILY_ORDER:
        if family_filter is not None and fam not in family_filter:
            continue
        if not families.applicable(q, fam):
            continue
        for params in families.enumerate_family(q, fam):
            reports.append(
                verify_family(ctx, q, fam, params, budget, check_fixed_points)
            )
    return reports


# ---------------------------------------------------------------------------
# exhaustive subgroup sweep of the full triangle stabilizer (small q)
# ---------------------------------------------------------------------------


@dataclass
class NecessityReport:
    q: int
    stabilizer_order: int
    subgroup_count: int
    missing: list[tuple[int, int]] = field(default_factory=list)  # (|G|, genus)

    @property
    def ok(self) -> bool:
        return not self.missing


def _m1_closure(ctx: FieldCtx) -> tuple[GramForm, GroupClosure]:
    one = 0
    eta = ctx.root_of_unity(ctx.q + 1)
    gens = [
        (eta, pgu.ZERO, pgu.ZERO, pgu.ZERO, one, pgu.ZERO, pgu.ZERO, pgu.ZERO, one),
        (one, pgu.ZERO, pgu.ZERO, pgu.ZERO, eta, pgu.ZERO, pgu.ZERO, pgu.ZERO, one),
        (pgu.ZERO, one, pgu.ZERO, pgu.ZERO, pgu.ZERO, one, one, pgu.ZERO, pgu.ZERO),
        (pgu.ZERO, one, pgu.ZERO, one, pgu.ZERO, pgu.ZERO, pgu.ZERO, pgu.ZERO, one),
    ]
    gram = pgu.make_gram(ctx, "MODEL1")
    cap = 6 * (ctx.q + 1) ** 2 + 8
    closure = close_group(ctx, gram, gens, cap=cap, check_fixed_points=False)
    return gram, closure


def _all_subgroups(table: list[list[int]]) -> list[frozenset[int]]:
    """All subgroups of a small group given by its multiplication table."""
    n = len(table)

    def close(base: set[int]) -> frozenset[int]:
        elems = set(base)
        frontier = list(base)
        while frontier:
            new = []
            for a in frontier:
                row = table[a]
                for b in list(elems):
                    for c in (row[b], table[b][a]):
                        if c not in elems:
                            elems.add(c)
                            new.append(c)
            frontier = new
        return frozenset(elems)

    cyclics = {close({0, g}) for g in range(n)}
    known = set(cyclics)
    queue = list(cyclics)
    while queue:
        H = queue.pop()
        for C in cyclics:
            if not C.issubset(H):
                joined = close(set(H) | set(C))
                if joined not in known:
                    known.add(joined)
                    queue.append(joined)
    return sorted(known, key=lambda s: (len(s), sorted(s)))


def triangle_necessity_check(q: int) -> NecessityReport:
    """Exhaustively check that every subgroup of the full triangle stabilizer
    has its Riemann-Hurwitz genus among the triangle-family values at q."""
    pp = prime_power(q)
    if pp is None:
        raise DomainError(f"{q} is not a prime power")
    ctx = make_ctx(*pp)
    gram, m1 = _m1_closure(ctx)
    expected_order = 6 * (q + 1) ** 2
    if m1.order != expected_order:
        raise InternalConsistencyError(
            f"triangle stabilizer closure has order {m1.order}, expected {expected_order}"
        )
    elems = m1.elements
    ident = pgu.identity(ctx)
    elems = [ident] + [e for e in elems if e != ident]
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [index[pgu.normalize(ctx, pgu.mat_mul(ctx, a, b))] for b in elems] for a in elems
    ]
    classes = [None] + [pgu.classify(ctx, e) for e in elems[1:]]

    allowed: set[int] = set()
    for fam in ("T31", "P32", "P33", "P34", "P35", "P36"):
        if not families.applicable(q, fam):
            continue
        for params in families.enumerate_family(q, fam):
            allowed.add(families.genus(q, fam, params).genus)

    subgroups = _all_subgroups(table)
    missing = []
    for H in subgroups:
        census: Counter[str] = Counter()
        for i in H:
            if i != 0:
                census[classes[i].kind] += 1
        closure = GroupClosure([], len(H), dict(census), {}, {})
        g = genus_from_census(q, closure)
        if g not in allowed:
            missing.append((len(H), g))
    return NecessityReport(q, m1.order, len(subgroups), sorted(set(missing)))

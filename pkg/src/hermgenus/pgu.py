"""Projective 3x3 unitary matrix machinery over GF(q^2).

Matrices are 9-tuples of field elements (discrete-log ints, row major),
always kept in canonical projective form: the first nonzero entry in
row-major order equals 1, so equality of tuples is equality in PGU(3,q).

The element classifier sorts a nontrivial unitary element into one of the
types A, B1, B2, B3, C, D, E by its order and the factorization pattern of
its characteristic polynomial, and attaches the ramification contribution
i of that type:

    A -> q+1   B1 -> 0   B2 -> 2   B3 -> 3   C -> q+2   D -> 2   E -> 1

For tame elements the independent cross-check `fixed_points_on_curve`
recounts i geometrically: eigenvector directions are tested for curve
membership (through GF(q^6) polynomial arithmetic when the characteristic
cubic is irreducible), and for homologies the axis/curve intersection is
counted as the number of distinct roots of the restriction polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .gf import ZERO, DomainError, FieldCtx

__all__ = [
    "GramForm",
    "ElementClass",
    "InternalConsistencyError",
    "make_gram",
    "identity",
    "mat_mul",
    "mat_inv",
    "mat_det",
    "normalize",
    "is_unitary",
    "proj_order",
    "classify",
    "fixed_points_on_curve",
    "curve_value",
    "format_matrix",
    "parse_matrix",
    "pgu_generator_matrices",
    "random_unitary",
]

Mat = tuple[int, ...]

TYPE_CONTRIBUTION = {"A": None, "B1": 0, "B2": 2, "B3": 3, "C": None, "D": 2, "E": 1}


class InternalConsistencyError(RuntimeError):
    """A mathematically impossible state was reached; signals a real bug."""


def contribution(kind: str, q: int) -> int:
    """Different-degree contribution i of one nontrivial element of a type."""
    if kind == "A":
        return q + 1
    if kind == "C":
        return q + 2
    return TYPE_CONTRIBUTION[kind]


@dataclass(frozen=True)
class GramForm:
    """Hermitian form B of a plane model; sigma-sesquilinear w.r.t. x -> x^q."""

    model: str  # "MODEL1" (Fermat) or "MODEL3"
    matrix: Mat
    w3: int  # MODEL3 constant with w3^(q+1) = -1; 1 in MODEL1/char 2


def make_gram(ctx: FieldCtx, model: str = "MODEL1") -> GramForm:
    one = 0
    if model == "MODEL1":
        return GramForm("MODEL1", (one, ZERO, ZERO, ZERO, one, ZERO, ZERO, ZERO, one), one)
    if model == "MODEL3":
        if ctx.p == 2:
            w3 = one  # 1^(q+1) = 1 = -1 in characteristic 2
        else:
            w3 = (ctx.q - 1) // 2 % ctx.order  # g^((q-1)/2), (q+1)-power = -1
        neg_one = ctx.neg(one)
        return GramForm("MODEL3", (ZERO, one, ZERO, neg_one, ZERO, ZERO, ZERO, ZERO, w3), w3)
    raise DomainError(f"unknown model {model!r}")


def identity(ctx: FieldCtx) -> Mat:
    one = 0
    return (one, ZERO, ZERO, ZERO, one, ZERO, ZERO, ZERO, one)


def mat_mul(ctx: FieldCtx, A: Mat, B: Mat) -> Mat:
    add = ctx.add
    mul = ctx.mul
    out = []
    for i in (0, 3, 6):
        a0, a1, a2 = A[i], A[i + 1], A[i + 2]
        for j in (0, 1, 2):
            out.append(add(add(mul(a0, B[j]), mul(a1, B[3 + j])), mul(a2, B[6 + j])))
    return tuple(out)


def mat_transpose(M: Mat) -> Mat:
    return (M[0], M[3], M[6], M[1], M[4], M[7], M[2], M[5], M[8])


def mat_conj(ctx: FieldCtx, M: Mat) -> Mat:
    c = ctx.conj
    return tuple(c(x) for x in M)


def mat_det(ctx: FieldCtx, M: Mat) -> int:
    mul, sub = ctx.mul, ctx.sub
    a, b, c, d, e, f, g, h, i = M
    t1 = mul(a, sub(mul(e, i), mul(f, h)))
    t2 = mul(b, sub(mul(d, i), mul(f, g)))
    t3 = mul(c, sub(mul(d, h), mul(e, g)))
    return ctx.add(sub(t1, t2), t3)


def mat_inv(ctx: FieldCtx, M: Mat) -> Mat:
    """Projective inverse via the adjugate (scalars are irrelevant)."""
    mul, sub = ctx.mul, ctx.sub
    a, b, c, d, e, f, g, h, i = M
    adj = (
        sub(mul(e, i), mul(f, h)),
        sub(mul(c, h), mul(b, i)),
        sub(mul(b, f), mul(c, e)),
        sub(mul(f, g), mul(d, i)),
        sub(mul(a, i), mul(c, g)),
        sub(mul(c, d), mul(a, f)),
        sub(mul(d, h), mul(e, g)),
        sub(mul(b, g), mul(a, h)),
        sub(mul(a, e), mul(b, d)),
    )
    return normalize(ctx, adj)


def normalize(ctx: FieldCtx, M: Mat) -> Mat:
    """Canonical projective representative: first nonzero entry scaled to 1."""
    for x in M:
        if x >= 0:
            if x == 0:
                return M if isinstance(M, tuple) else tuple(M)
            s = ctx.inv(x)
            mul = ctx.mul
            return tuple(mul(s, y) for y in M)
    raise DomainError("zero matrix cannot be normalized")


def scale_vec(ctx: FieldCtx, v: tuple[int, int, int]) -> tuple[int, int, int]:
    """Canonical projective representative of a nonzero vector."""
    for x in v:
        if x >= 0:
            s = ctx.inv(x)
            return tuple(ctx.mul(s, y) for y in v)  # type: ignore[return-value]
    raise DomainError("zero vector")


def is_unitary(ctx: FieldCtx, gram: GramForm, M: Mat) -> bool:
    """True iff M^T * B * conj(M) is a nonzero scalar multiple of B."""
    if mat_det(ctx, M) == ZERO:
        return False
    T = mat_mul(ctx, mat_mul(ctx, mat_transpose(M), gram.matrix), mat_conj(ctx, M))
    lam = None
    for t, b in zip(T, gram.matrix):
        if b == ZERO:
            if t != ZERO:
                return False
        else:
            scale = ctx.mul(t, ctx.inv(b)) if t != ZERO else ZERO
            if scale == ZERO:
                return False
            if lam is None:
                lam = scale
            elif scale != lam:
                return False
    return lam is not None


def _mat_pow(ctx: FieldCtx, M: Mat, e: int) -> Mat:
    result = identity(ctx)
    base = M
    while e:
        if e & 1:
            result = mat_mul(ctx, result, base)
        base = mat_mul(ctx, base, base)
        e >>= 1
    return result


def proj_order(ctx: FieldCtx, M: Mat, cap: int | None = None) -> int:
    """Least k >= 1 with M^k scalar; M must be in canonical form."""
    if cap is None:
        cap = ctx.q**3 + 1
    ident = identity(ctx)
    X = M
    k = 1
    while X != ident:
        X = normalize(ctx, mat_mul(ctx, X, M))
        k += 1
        if k > cap:
            raise InternalConsistencyError("projective order exceeds the PGU cap")
    return k


def charpoly(ctx: FieldCtx, M: Mat) -> tuple[int, int, int]:
    """(c2, c1, c0) with char(x) = x^3 - c2 x^2 + c1 x - c0."""
    add, mul, sub = ctx.add, ctx.mul, ctx.sub
    a, b, c, d, e, f, g, h, i = M
    c2 = add(add(a, e), i)
    m1 = sub(mul(e, i), mul(f, h))
    m2 = sub(mul(a, i), mul(c, g))
    m3 = sub(mul(a, e), mul(b, d))
    c1 = add(add(m1, m2), m3)
    c0 = mat_det(ctx, M)
    return c2, c1, c0


def _chi_eval(ctx: FieldCtx, coeffs: tuple[int, int, int], x: int) -> int:
    c2, c1, c0 = coeffs
    # x^3 - c2 x^2 + c1 x - c0, Horner
    acc = ctx.sub(x, c2)
    acc = ctx.add(ctx.mul(acc, x), c1)
    acc = ctx.sub(ctx.mul(acc, x), c0)
    return acc


def _eigenvalue_candidates(ctx: FieldCtx, M: Mat, m: int) -> list[int]:
    """All x in GF(q^2) with x^m = s, where M^m = s*I (m = proj order)."""
    P = _mat_pow(ctx, M, m)
    if not (P[1] == P[2] == P[3] == P[5] == P[6] == P[7] == ZERO and P[0] == P[4] == P[8]):
        raise InternalConsistencyError("M^ord is not scalar")
    s = P[0]
    order = ctx.order
    g0 = gcd(m, order)
    if s % g0 != 0:
        return []
    step = order // g0
    x0 = (s // g0) * pow(m // g0, -1, step) % step
    return [(x0 + t * step) % order for t in range(g0)]


def _rational_roots(ctx: FieldCtx, coeffs: tuple[int, int, int], candidates: list[int]) -> list[int]:
    """Roots of the characteristic cubic in GF(q^2), with multiplicity."""
    # little-endian dense form of x^3 - c2 x^2 + c1 x - c0
    c2, c1, c0 = coeffs
    poly = [ctx.neg(c0), c1, ctx.neg(c2), 0]
    roots: list[int] = []
    for x in candidates:
        while len(poly) > 1 and _poly_eval(ctx, poly, x) == ZERO:
            poly = _synth_div(ctx, poly, x)
            roots.append(x)
    return roots


# -- dense polynomial helpers over GF(q^2) (little-endian exponent lists) --


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == ZERO:
        f.pop()
    return f


def _poly_eval(ctx: FieldCtx, f: list[int], x: int) -> int:
    acc = ZERO
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def _synth_div(ctx: FieldCtx, f: list[int], r: int) -> list[int]:
    """f / (x - r) assuming r is a root."""
    out = [ZERO] * (len(f) - 1)
    acc = ZERO
    for k in range(len(f) - 1, 0, -1):
        acc = ctx.add(ctx.mul(acc, r), f[k])
        out[k - 1] = acc
    return out


def _poly_deriv(ctx: FieldCtx, f: list[int]) -> list[int]:
    out = []
    for k in range(1, len(f)):
        kk = k % ctx.p
        out.append(ctx.mul(f[k], ctx.int_embed[kk]) if kk else ZERO)
    return _poly_trim(out)


def _poly_divmod(ctx: FieldCtx, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    a = list(a)
    db = len(b) - 1
    inv_lead = ctx.inv(b[-1])
    quo = [ZERO] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = ctx.mul(a[-1], inv_lead)
        k = len(a) - 1 - db
        quo[k] = c
        for i, bi in enumerate(b):
            a[k + i] = ctx.sub(a[k + i], ctx.mul(c, bi))
        _poly_trim(a)
    return quo, a


def _poly_gcd(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_divmod(ctx, a, b)[1]
    return a


# -- GF(q^6) as GF(q^2)[x]/(chi), chi the irreducible characteristic cubic --


class _CubicExt:
    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, int, int]):
        c2, c1, c0 = coeffs
        self.ctx = ctx
        # x^3 = r2 x^2 + r1 x + r0
        self.red = (c2, ctx.neg(c1), c0)
        self.zero = (ZERO, ZERO, ZERO)
        self.one = (0, ZERO, ZERO)
        self.theta = (ZERO, 0, ZERO)
        self.chi = [ctx.neg(c0), c1, ctx.neg(c2), 0]

    def embed(self, x: int) -> tuple[int, int, int]:
        return (x, ZERO, ZERO)

    def is_zero(self, a: tuple[int, int, int]) -> bool:
        return a[0] == ZERO and a[1] == ZERO and a[2] == ZERO

    def add(self, a, b):
        add = self.ctx.add
        return (add(a[0], b[0]), add(a[1], b[1]), add(a[2], b[2]))

    def sub(self, a, b):
        sub = self.ctx.sub
        return (sub(a[0], b[0]), sub(a[1], b[1]), sub(a[2], b[2]))

    def mul(self, a, b):
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        d = [ZERO] * 5
        for i, ai in enumerate(a):
            if ai != ZERO:
                for j, bj in enumerate(b):
                    d[i + j] = add(d[i + j], mul(ai, bj))
        r2, r1, r0 = self.red
        for k in (4, 3):
            t = d[k]
            if t != ZERO:
                d[k] = ZERO
                d[k - 1] = add(d[k - 1], mul(t, r2))
                d[k - 2] = add(d[k - 2], mul(t, r1))
                d[k - 3] = add(d[k - 3], mul(t, r0))
        return (d[0], d[1], d[2])

    def pow(self, a, e: int):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        """Inverse via extended Euclid of a (as a poly) against chi."""
        ctx = self.ctx
        r0, r1 = list(self.chi), _poly_trim(list(a))
        s0: list[int] = [ZERO]
        s1: list[int] = [0]
        while len(r1) - 1 > 0:
            q, r = _poly_divmod(ctx, r0, r1)
            s = _poly_sub(ctx, s0, _poly_mul(ctx, q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        if not r1:
            raise DomainError("non-invertible element in cubic extension")
        c = ctx.inv(r1[0])
        out = [ctx.mul(c, x) for x in s1]
        out += [ZERO] * (3 - len(out))
        return (out[0], out[1], out[2])


def _poly_mul(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai != ZERO:
            for j, bj in enumerate(b):
                out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
    return _poly_trim(out)


def _poly_sub(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    out = [ZERO] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = ctx.sub(out[i], y)
    return _poly_trim(out)


# -- kernels over an arbitrary field given as an ops object -----------------


class _BaseOps:
    def __init__(self, ctx: FieldCtx):
        self.add, self.sub, self.mul = ctx.add, ctx.sub, ctx.mul
        self.inv = ctx.inv
        self.zero, self.one = ZERO, 0

    def is_zero(self, x):
        return x == ZERO


def _kernel3(rows, F) -> list[list]:
    """Kernel basis of a 3x3 matrix over the field described by ops F."""
    rows = [list(r) for r in rows]
    cols = [0, 1, 2]
    pivots = []
    rank = 0
    for col in cols:
        piv = None
        for r in range(rank, 3):
            if not F.is_zero(rows[r][col]):
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(inv, x) for x in rows[rank]]
        for r in range(3):
            if r != rank and not F.is_zero(rows[r][col]):
                c = rows[r][col]
                rows[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == 3:
            break
    free = [c for c in cols if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero, F.zero, F.zero]
        v[fc] = F.one
        for prow, pcol in enumerate(pivots):
            v[pcol] = F.sub(F.zero, rows[prow][fc])
        basis.append(v)
    return basis


def _eigenspace(ctx: FieldCtx, M: Mat, lam: int) -> list[list[int]]:
    rows = [
        [ctx.sub(M[0], lam), M[1], M[2]],
        [M[3], ctx.sub(M[4], lam), M[5]],
        [M[6], M[7], ctx.sub(M[8], lam)],
    ]
    return _kernel3(rows, _BaseOps(ctx))


# -- curve membership -------------------------------------------------------


def curve_value(ctx: FieldCtx, gram: GramForm, v: tuple[int, int, int]) -> int:
    """Value of the model's defining form at a point of PG(2, q^2)."""
    q = ctx.q
    if gram.model == "MODEL1":
        acc = ZERO
        for x in v:
            acc = ctx.add(acc, ctx.pow(x, q + 1) if x != ZERO else ZERO)
        return acc
    x, y, z = v
    t1 = ctx.mul(x, ctx.conj(y))
    t2 = ctx.mul(ctx.conj(x), y)
    t3 = ctx.mul(gram.w3, ctx.pow(z, q + 1) if z != ZERO else ZERO)
    return ctx.add(ctx.sub(t1, t2), t3)


def _line_restriction(ctx: FieldCtx, gram: GramForm, P, Q) -> tuple[int, int, int, int]:
    """Coefficients (A,B,C,D) of F(uP+vQ) = A u^(q+1) + B u^q v + C u v^q + D v^(q+1)."""
    conj, mul, add, sub = ctx.conj, ctx.mul, ctx.add, ctx.sub
    A = curve_value(ctx, gram, tuple(P))
    D = curve_value(ctx, gram, tuple(Q))
    if gram.model == "MODEL1":
        B = ZERO
        C = ZERO
        for pi, qi in zip(P, Q):
            B = add(B, mul(conj(pi), qi))
            C = add(C, mul(pi, conj(qi)))
        return A, B, C, D
    w3 = gram.w3
    B = add(sub(mul(Q[0], conj(P[1])), mul(conj(P[0]), Q[1])), mul(w3, mul(conj(P[2]), Q[2])))
    C = add(sub(mul(P[0], conj(Q[1])), mul(conj(Q[0]), P[1])), mul(w3, mul(P[2], conj(Q[2]))))
    return A, B, C, D


def _distinct_points_on_line(ctx: FieldCtx, gram: GramForm, P, Q) -> int:
    """Number of distinct curve points (over the closure) on the line <P, Q>."""
    q = ctx.q
    A, B, C, D = _line_restriction(ctx, gram, P, Q)
    f = [ZERO] * (q + 2)
    f[0] = D
    f[1] = C
    f[q] = B
    f[q + 1] = A
    f = _poly_trim(f)
    if not f:
        raise InternalConsistencyError("line contained in the curve")
    fp = _poly_deriv(ctx, f)
    if not fp:
        # f is a q-th power: B t^q + D, a single root when B != 0
        distinct = 1 if B != ZERO else 0
    else:
        g = _poly_gcd(ctx, f, fp)
        distinct = (len(f) - 1) - (len(g) - 1)
    return distinct + (1 if A == ZERO else 0)


# -- element classification --------------------------------------------------


@dataclass(frozen=True)
class ElementClass:
    kind: str  # A, B1, B2, B3, C, D, E
    i: int  # contribution to the different degree
    order: int
    fixdesc: str  # eigenvalue multiplicity pattern / rationality flags
    center: tuple[int, int, int] | None = None  # homology center (type A)


def classify(ctx: FieldCtx, M: Mat, q: int | None = None) -> ElementClass:
    """Classify a nontrivial unitary element per its order and eigen-data."""
    q = ctx.q if q is None else q
    if q != ctx.q:
        raise DomainError("q does not match the field context")
    if M == identity(ctx):
        raise DomainError("identity element has no classification")
    p = ctx.p
    m = proj_order(ctx, M)

    if m % p != 0:
        # tame: factor the characteristic cubic over GF(q^2)
        coeffs = charpoly(ctx, M)
        roots = _rational_roots(ctx, coeffs, _eigenvalue_candidates(ctx, M, m))
        if not roots:
            if (q * q - q + 1) % m != 0 and not (m == 3 and (q + 1) % 3 == 0):
                raise InternalConsistencyError(
                    f"irreducible-cubic element of order {m} violates B3 order divisibility"
                )
            return ElementClass("B3", 3, m, "irreducible-cubic")
        if len(roots) != 3:
            raise InternalConsistencyError(
                "quadratic-times-linear characteristic split on a unitary element"
            )
        distinct = set(roots)
        if len(distinct) == 2:
            if (q + 1) % m != 0:
                raise InternalConsistencyError("homology order does not divide q+1")
            simple = next(r for r in distinct if roots.count(r) == 1)
            vecs = _eigenspace(ctx, M, simple)
            if len(vecs) != 1:
                raise InternalConsistencyError("homology center is not 1-dimensional")
            center = scale_vec(ctx, tuple(vecs[0]))
            return ElementClass("A", q + 1, m, "repeated+simple", center)
        if len(distinct) == 1:
            raise InternalConsistencyError("scalar matrix escaped normalization")
        if (q + 1) % m == 0:
            return ElementClass("B1", 0, m, "three-rational")
        if (q * q - 1) % m == 0:
            return ElementClass("B2", 2, m, "three-rational")
        raise InternalConsistencyError(f"tame order {m} divides neither q+1 nor q^2-1")

    # wild part present
    if m == p:
        if p == 2:
            return ElementClass("C", q + 2, m, "unipotent-dim2")
        r = _unique_unipotent_eigenvalue(ctx, M)
        dim = len(_eigenspace(ctx, M, r))
        if dim == 2:
            return ElementClass("C", q + 2, m, "unipotent-dim2")
        if dim == 1:
            return ElementClass("D", 2, m, "unipotent-dim1")
        raise InternalConsistencyError("order-p element with full eigenspace")
    if p == 2 and m == 4:
        return ElementClass("D", 2, m, "unipotent-dim1")
    d = m // p
    if m == p * d and d > 1 and d % p != 0 and (q + 1) % d == 0:
        return ElementClass("E", 1, m, "mixed-wild")
    raise InternalConsistencyError(f"impossible PGU(3,q) element order {m}")


def _unique_unipotent_eigenvalue(ctx: FieldCtx, M: Mat) -> int:
    """The triple eigenvalue of an order-p element (p odd)."""
    c2, c1, c0 = charpoly(ctx, M)
    if ctx.p == 3:
        # char(x) = (x - r)^3 = x^3 - r^3: unique cube root since 3 coprime to q^2-1
        if c0 == ZERO:
            raise InternalConsistencyError("singular unipotent representative")
        return c0 * pow(3, -1, ctx.order) % ctx.order
    # 3r = c2, and 3 is invertible in the prime field
    return ctx.mul(c2, ctx.inv(ctx.int_embed[3 % ctx.p]))


def fixed_points_on_curve(ctx: FieldCtx, M: Mat, gram: GramForm) -> int:
    """Number of fixed points of a tame element lying on the curve (closure).

    Independent of the classifier's table: eigen-directions are tested for
    curve membership directly, and a homology axis is intersected with the
    curve by counting distinct roots of the restriction polynomial.
    """
    m = proj_order(ctx, M)
    if m % ctx.p == 0:
        raise DomainError("fixed_points_on_curve is defined for tame elements only")
    coeffs = charpoly(ctx, M)
    roots = _rational_roots(ctx, coeffs, _eigenvalue_candidates(ctx, M, m))
    if not roots:
        # B3: work in GF(q^6) = GF(q^2)[x]/chi
        ext = _CubicExt(ctx, coeffs)
        rows = [
            [ext.sub(ext.embed(M[0]), ext.theta), ext.embed(M[1]), ext.embed(M[2])],
            [ext.embed(M[3]), ext.sub(ext.embed(M[4]), ext.theta), ext.embed(M[5])],
            [ext.embed(M[6]), ext.embed(M[7]), ext.sub(ext.embed(M[8]), ext.theta)],
        ]
        vecs = _kernel3(rows, _ExtOps(ext))
        if len(vecs) != 1:
            raise InternalConsistencyError("non-simple eigenvalue for irreducible cubic")
        on = _on_curve_ext(ctx, ext, gram, vecs[0])
        # the other two fixed points are Frobenius conjugates of this one
        return 3 if on else 0
    if len(roots) != 3:
        raise InternalConsistencyError("unexpected characteristic split")
    distinct = sorted(set(roots))
    if len(distinct) == 3:
        count = 0
        for lam in distinct:
            vecs = _eigenspace(ctx, M, lam)
            if len(vecs) != 1:
                raise InternalConsistencyError("non-simple eigenspace for distinct eigenvalue")
            if curve_value(ctx, gram, tuple(vecs[0])) == ZERO:
                count += 1
        return count
    # homology: axis = 2-dim eigenspace, center = remaining eigenline
    rep = next(r for r in distinct if roots.count(r) == 2)
    simple = next(r for r in distinct if roots.count(r) == 1)
    plane = _eigenspace(ctx, M, rep)
    if len(plane) != 2:
        raise InternalConsistencyError("tame repeated eigenvalue without 2-dim eigenspace")
    centers = _eigenspace(ctx, M, simple)
    count = _distinct_points_on_line(ctx, gram, plane[0], plane[1])
    if curve_value(ctx, gram, tuple(centers[0])) == ZERO:
        count += 1
    return count


class _ExtOps:
    def __init__(self, ext: _CubicExt):
        self.ext = ext
        self.add, self.sub, self.mul = ext.add, ext.sub, ext.mul
        self.inv = ext.inv
        self.zero, self.one = ext.zero, ext.one
        self.is_zero = ext.is_zero


def _on_curve_ext(ctx: FieldCtx, ext: _CubicExt, gram: GramForm, v) -> bool:
    q = ctx.q
    if gram.model == "MODEL1":
        acc = ext.zero
        for x in v:
            acc = ext.add(acc, ext.mul(ext.pow(x, q), x))
        return ext.is_zero(acc)
    x, y, z = v
    t1 = ext.mul(x, ext.pow(y, q))
    t2 = ext.mul(ext.pow(x, q), y)
    t3 = ext.mul(ext.embed(gram.w3), ext.mul(ext.pow(z, q), z))
    return ext.is_zero(ext.add(ext.sub(t1, t2), t3))


# -- literals ----------------------------------------------------------------


def format_matrix(ctx: FieldCtx, M: Mat) -> str:
    rows = []
    for i in (0, 3, 6):
        rows.append(",".join(ctx.format_elt(x) for x in M[i : i + 3]))
    return ";".join(rows)


def parse_matrix(ctx: FieldCtx, s: str) -> Mat:
    rows = s.strip().split(";")
    if len(rows) != 3:
        raise DomainError("matrix literal needs 3 rows separated by ';'")
    out = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 3:
            raise DomainError("matrix literal needs 3 entries per row")
        out.extend(ctx.parse_elt(c) for c in cells)
    M = tuple(out)
    if mat_det(ctx, M) == ZERO:
        raise DomainError("matrix literal is singular")
    return normalize(ctx, M)


# -- sampling PGU(3,q) in the Fermat model -----------------------------------


def pgu_generator_matrices(ctx: FieldCtx) -> list[Mat]:
    """Generators of PGU(3,q) in MODEL1.

    Torus and monomial generators span the triangle stabilizer; an elation
    at a rational curve point and a homology centered off the fundamental
    triangle take the generated group out of it (the elation alone is
    monomial at q = 2, where every rational point has a zero coordinate).
    """
    one = 0
    eta = ctx.root_of_unity(ctx.q + 1)
    diag1 = (eta, ZERO, ZERO, ZERO, one, ZERO, ZERO, ZERO, one)
    diag2 = (one, ZERO, ZERO, ZERO, eta, ZERO, ZERO, ZERO, one)
    cyc = (ZERO, one, ZERO, ZERO, ZERO, one, one, ZERO, ZERO)
    swp = (ZERO, one, ZERO, one, ZERO, ZERO, ZERO, ZERO, one)
    # elation: x -> x + t0 <x, P0> P0 with P0 on the curve, t0 + t0^q = 0
    if ctx.p == 2:
        P0 = (one, one, ZERO)
        t0 = one
    else:
        P0 = ((ctx.q - 1) // 2 % ctx.order, one, ZERO)  # x with x^(q+1) = -1
        t0 = (ctx.q + 1) // 2 % ctx.order  # t with t^q = -t
    ela = _perspectivity(ctx, P0, t0)
    # homology: x -> x + ((lam-1)/<v,v>) <x, v> v at an anisotropic v
    v = (one, one, one) if ctx.p != 3 else (one, one, ZERO)
    norm_v = ZERO
    for x in v:
        norm_v = ctx.add(norm_v, ctx.pow(x, ctx.q + 1) if x != ZERO else ZERO)
    lam_minus_1 = ctx.sub(eta, one)
    refl = _perspectivity(ctx, v, ctx.mul(lam_minus_1, ctx.inv(norm_v)))
    mats = [diag1, diag2, cyc, swp, ela, refl]
    return [normalize(ctx, m) for m in mats]


def _perspectivity(ctx: FieldCtx, v, coeff: int) -> Mat:
    """Matrix of x -> x + coeff * <x, v> * v for the standard Hermitian form."""
    one = 0
    out = []
    for i in range(3):
        for j in range(3):
            delta = one if i == j else ZERO
            out.append(ctx.add(delta, ctx.mul(coeff, ctx.mul(v[i], ctx.conj(v[j])))))
    return tuple(out)


def random_unitary(ctx: FieldCtx, rng, word_length: int = 10) -> Mat:
    """A pseudo-random element of PGU(3,q) as a word in the generators."""
    gens = pgu_generator_matrices(ctx)
    M = identity(ctx)
    for _ in range(word_length):
        M = mat_mul(ctx, M, rng.choice(gens))
    return normalize(ctx, M)

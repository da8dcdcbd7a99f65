"""Arithmetic in GF(q^2) in discrete-log form with a Zech-logarithm table.

An element is a plain int: the sentinel ZERO = -1, or an exponent k in
[0, q^2-1) standing for g^k, where g is the canonical primitive element.
Multiplication, inversion, conjugation x -> x^q and order computations are
then modular integer arithmetic on exponents; addition goes through the
Zech table Z[d] = log(1 + g^d).

Determinism: the defining polynomial is the lexicographically smallest
irreducible monic polynomial of degree 2n over GF(p) (coefficient order
c_0, c_1, ..., monic), and g is the smallest residue, in the same
coefficient order, of multiplicative order q^2 - 1.  Two runs therefore
produce bit-identical tables and literals.

Table size is q^2 entries, acceptable at oracle scale (q^2 <= 2^24); the
closed-form genus machinery never builds a context at all.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd

from .numthy import factorize, is_prime

__all__ = ["ZERO", "FieldCtx", "make_ctx", "CapacityError", "DomainError"]

ZERO = -1

# Hard cap on q^2: beyond this the exp/log/Zech tables stop being a
# reasonable in-memory representation.
TABLE_BUDGET = 1 << 24


class CapacityError(Exception):
    """A configured size budget (field table, group closure) was exceeded."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


# -- polynomial helpers over GF(p), coefficient lists little-endian --------


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) - 1 >= dm and a:
        k = len(a) - 1 - dm
        c = (a[-1] * inv_lead) % p
        for i, mi in enumerate(mod):
            a[k + i] = (a[k + i] - c * mi) % p
        _ptrim(a)
    return a


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    return _pmod(_pmul(a, b, p), mod, p)


def _ppowmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _poly_irreducible(f: list[int], p: int) -> bool:
    """Rabin irreducibility test for monic f over GF(p)."""
    d = len(f) - 1
    x = [0, 1]
    # x^(p^d) == x mod f
    xp = x
    for _ in range(d):
        xp = _ppowmod(xp, p, f, p)
    probe = list(xp)
    if len(probe) < 2:
        probe += [0] * (2 - len(probe))
    probe[1] = (probe[1] - 1) % p
    if _ptrim(probe):
        return False
    for ell in {e for e, _ in factorize(d)}:
        xp = x
        for _ in range(d // ell):
            xp = _ppowmod(xp, p, f, p)
        probe = list(xp)
        if len(probe) < 2:
            probe += [0] * (2 - len(probe))
        probe[1] = (probe[1] - 1) % p
        probe = _ptrim(probe)
        g = _pgcd(f, probe, p) if probe else list(f)
        if len(g) - 1 > 0:
            return False
    return True


def _find_modulus(p: int, deg: int) -> list[int]:
    """Lex-smallest monic irreducible polynomial of degree deg over GF(p)."""
    for tail in itertools.product(range(p), repeat=deg):
        if tail[0] == 0:  # divisible by x
            continue
        f = list(tail) + [1]
        if _poly_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """Immutable arithmetic context for GF(q^2), q = p^n."""

    def __init__(self, p: int, n: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if n < 1:
            raise DomainError("n must be >= 1")
        q = p**n
        q2 = q * q
        if q2 > TABLE_BUDGET:
            raise CapacityError(
                f"q^2 = {q2} exceeds the field-table budget {TABLE_BUDGET}"
            )
        self.p = p
        self.n = n
        self.q = q
        self.q2 = q2
        self.order = q2 - 1
        self.modulus = _find_modulus(p, 2 * n)

        # Canonical generator: smallest residue of order q^2-1 in the
        # (c_0, c_1, ...) coefficient order.
        order_primes = [e for e, _ in factorize(self.order)]
        gen = None
        for tail in itertools.product(range(p), repeat=2 * n):
            cand = _ptrim(list(tail))
            if not cand:
                continue
            if all(
                _ptrim(
                    [
                        (c - (1 if i == 0 else 0)) % p
                        for i, c in enumerate(
                            _ppowmod(cand, self.order // ell, self.modulus, p)
                            + [0] * 4
                        )
                    ]
                )
                for ell in order_primes
            ):
                gen = cand
                break
        assert gen is not None
        self.generator_poly = gen

        def code(poly: list[int]) -> int:
            c = 0
            for coeff in reversed(poly):
                c = c * p + coeff
            return c

        exp = [0] * self.order
        log = [-1] * q2
        cur = [1]
        for k in range(self.order):
            ccode = code(cur)
            exp[k] = ccode
            log[ccode] = k
            cur = _pmulmod(cur, gen, self.modulus, p)
        assert code(cur) == 1, "generator order defect"
        self.exp = exp
        self.log = log

        # zech[d] = log(1 + g^d), -1 when 1 + g^d = 0
        zech = [0] * self.order
        for d in range(self.order):
            c = exp[d]
            c0 = c % p
            plus = c - c0 + (c0 + 1) % p
            zech[d] = log[plus] if plus != 0 else -1
        self.zech = zech

        # log of the small integers 0..p-1 (field embedding of GF(p))
        self.int_embed = [ZERO] + [log[c] for c in range(1, p)]

    # -- core element operations (elements are exponent ints, ZERO = -1) --

    def mul(self, x: int, y: int) -> int:
        if x < 0 or y < 0:
            return ZERO
        r = x + y
        return r - self.order if r >= self.order else r

    def add(self, x: int, y: int) -> int:
        if x < 0:
            return y
        if y < 0:
            return x
        d = y - x
        if d < 0:
            d += self.order
        z = self.zech[d]
        if z < 0:
            return ZERO
        r = x + z
        return r - self.order if r >= self.order else r

    def neg(self, x: int) -> int:
        if x < 0 or self.p == 2:
            return x
        r = x + self.order // 2
        return r - self.order if r >= self.order else r

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def inv(self, x: int) -> int:
        if x < 0:
            raise DomainError("inverse of zero")
        return (-x) % self.order

    def conj(self, x: int) -> int:
        """Frobenius-q conjugation x -> x^q."""
        if x < 0:
            return ZERO
        return (x * self.q) % self.order

    def pow(self, x: int, e: int) -> int:
        if x < 0:
            if e == 0:
                raise DomainError("0^0 undefined")
            return ZERO
        return (x * e) % self.order

    def element_order(self, x: int) -> int:
        if x < 0:
            raise DomainError("order of zero")
        return self.order // gcd(x, self.order)

    def root_of_unity(self, m: int) -> int:
        """Canonical element g^((q^2-1)/m) of exact order m, for m | q^2-1."""
        if m < 1 or self.order % m != 0:
            raise DomainError(f"{m} does not divide q^2-1 = {self.order}")
        return (self.order // m) % self.order

    def in_fq(self, x: int) -> bool:
        """Membership in the subfield GF(q), the fixed field of conj."""
        return x < 0 or x * (self.q - 1) % self.order == 0

    def fq_elements(self) -> list[int]:
        """All q elements of GF(q), ZERO first then by ascending exponent."""
        return [ZERO] + list(range(0, self.order, self.q + 1))

    def subfield_elements(self, s: int) -> list[int]:
        """Elements of GF(p^s) inside GF(q^2); requires s | 2n."""
        if (2 * self.n) % s != 0:
            raise DomainError(f"GF({self.p}^{s}) is not a subfield of GF(q^2)")
        step = self.order // (self.p**s - 1)
        return [ZERO] + list(range(0, self.order, step))

    def code_of(self, x: int) -> int:
        """Polynomial-coefficient code of an element (base-p digit vector)."""
        return 0 if x < 0 else self.exp[x]

    # -- literals ---------------------------------------------------------

    def format_elt(self, x: int) -> str:
        if x < 0:
            return "0"
        if x == 0:
            return "1"
        return f"g^{x}"

    def parse_elt(self, s: str) -> int:
        s = s.strip()
        if s == "0":
            return ZERO
        if s == "1":
            return 0
        if s == "g":
            return 1 % self.order
        if s.startswith("g^"):
            try:
                return int(s[2:]) % self.order
            except ValueError:
                pass
        raise DomainError(f"bad field element literal {s!r}")

    def __repr__(self) -> str:  # pragma: no cover
        return f"FieldCtx(p={self.p}, n={self.n}, q={self.q})"


@lru_cache(maxsize=32)
def make_ctx(p: int, n: int) -> FieldCtx:
    """Build (and cache) the canonical GF(q^2) context for q = p^n."""
    return FieldCtx(p, n)

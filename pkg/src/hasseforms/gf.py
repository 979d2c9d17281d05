"""Deterministic arithmetic in small finite fields of odd characteristic.

A FieldCtx models F_{p^n} as F_p[t] modulo the lexicographically smallest
monic irreducible polynomial of degree n, so two contexts built from the
same (p, n) agree coefficient for coefficient, print identically and hash
identically.  Elements are immutable coefficient vectors of length n over
F_p, constant term first.

The lex order used throughout ranks an element by its coefficient tuple
read from the constant term down, i.e. rank(x) = sum(c_i * p**(n-1-i)).
Enumeration, generator selection and every "first match wins" rule in the
rest of the package build on this single ordering.

Scale guard: q = p**n must stay below 2**32 at construction time.  All of
this is plain integer arithmetic on small objects; none of it is constant
time and none of it is meant for cryptographic use.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterator, Sequence, Union

from .errors import (
    CtxMismatchError,
    DegreeTooLargeError,
    EvenCharacteristicError,
    FieldTooLargeError,
    NotPrimeError,
    ZeroElementError,
)

MAX_ORDER = 2**32
SWEEP_MAX = 2**20       # exhaustive per-element sweeps stop here
RANK_TABLE_MAX = 1024   # dense q-by-q tables only below this order

CoeffsLike = Union[int, Sequence[int], "FieldElement"]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _prime_factors(m: int) -> tuple[int, ...]:
    """Distinct prime divisors of m, ascending."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


def smallest_prime_factor(m: int) -> int:
    if m < 2:
        raise ValueError(f"{m} has no prime factor")
    f = 2
    while f * f <= m:
        if m % f == 0:
            return f
        f += 1 if f == 2 else 2
    return m


def _poly_rem_ints(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    # remainder of num modulo a monic den, coefficients as plain ints
    num = [c % p for c in num]
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            off = i - dd
            for j in range(dd):
                num[off + j] = (num[off + j] - c * den[j]) % p
            num[i] = 0
    out = num[:dd]
    while out and out[-1] == 0:
        out.pop()
    return out


def _is_irreducible_ints(f: Sequence[int], p: int) -> bool:
    """Trial division of a monic f by every monic divisor of degree <= deg/2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for rank in range(p**d):
            div = [(rank // p**i) % p for i in range(d)] + [1]
            if not _poly_rem_ints(f, div, p):
                return False
    return True


class FieldCtx:
    """Immutable description of F_{p^n} plus lazily built lookup tables.

    Two contexts compare equal iff they have the same (p, n); the modulus
    is then forced to be identical by the deterministic search.
    """

    def __init__(self, p: int, n: int = 1):
        if not isinstance(p, int) or not isinstance(n, int):
            raise TypeError("p and n must be plain integers")
        if p == 2:
            raise EvenCharacteristicError(
                "characteristic 2 is not supported; use an odd prime")
        if not _is_prime(p):
            raise NotPrimeError(f"characteristic must be prime, got {p}")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        q = p**n
        if q > MAX_ORDER:
            raise DegreeTooLargeError(
                f"field order p**n = {q} exceeds the 2**32 guard")
        self.p = p
        self.n = n
        self.q = q
        # lex weights: constant coefficient is the most significant digit
        self._weights = tuple(p ** (n - 1 - i) for i in range(n))
        self.modulus: tuple[int, ...] | None
        if n == 1:
            self.modulus = None
            self._red_rows = None
        else:
            self.modulus = self._find_modulus()
            self._red_rows = self._reduction_rows()

    # -- construction details -------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        # first monic irreducible of degree n in lex order on
        # (constant, ..., leading-1 coefficient)
        p, n = self.p, self.n
        for rank in range(p**n):
            free = self._tuple_from_rank(rank)
            cand = free + (1,)
            if _is_irreducible_ints(cand, p):
                return cand
        raise RuntimeError("no irreducible polynomial found")  # unreachable

    def _reduction_rows(self) -> tuple[tuple[int, ...], ...]:
        # rows[k] holds t**(n+k) reduced mod the modulus, k = 0 .. n-2
        p, n, m = self.p, self.n, self.modulus
        row = tuple((-m[i]) % p for i in range(n))
        rows = [row]
        for _ in range(n - 2):
            top = row[-1]
            shifted = (0,) + row[:-1]
            row = tuple((shifted[i] + top * rows[0][i]) % p for i in range(n))
            rows.append(row)
        return tuple(rows)

    # -- raw coefficient-tuple kernels ----------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p = self.p
        n = self.n
        if n == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        rows = self._red_rows
        for k in range(n - 2, -1, -1):
            c = conv[n + k] % p
            if c:
                row = rows[k]
                for i in range(n):
                    conv[i] += c * row[i]
        return tuple(c % p for c in conv[:n])

    def _pow(self, a, e: int):
        result = (1,) + (0,) * (self.n - 1)
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError(f"division by zero in {self}")
        if self.n == 1:
            return (pow(a[0], self.p - 2, self.p),)
        return self._pow(a, self.q - 2)

    # -- element construction and enumeration ---------------------------

    def element(self, value: CoeffsLike) -> "FieldElement":
        """Coerce an int, a coefficient sequence or an element of self."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise CtxMismatchError(
                    f"element of {value.ctx} used in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.n - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.n:
            raise ValueError(
                f"{len(coeffs)} coefficients given but {self} has degree {self.n}")
        coeffs += [0] * (self.n - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def __call__(self, value: CoeffsLike) -> "FieldElement":
        return self.element(value)

    def _tuple_from_rank(self, rank: int) -> tuple[int, ...]:
        p = self.p
        return tuple((rank // w) % p for w in self._weights)

    def from_rank(self, rank: int) -> "FieldElement":
        if not 0 <= rank < self.q:
            raise ValueError(f"rank {rank} out of range for {self}")
        return FieldElement(self, self._tuple_from_rank(rank))

    def iter_elements(self) -> Iterator["FieldElement"]:
        """All q elements in lex order, starting with zero."""
        for rank in range(self.q):
            yield FieldElement(self, self._tuple_from_rank(rank))

    @cached_property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.n)

    @cached_property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    @cached_property
    def generator(self) -> "FieldElement":
        """The lex-smallest element of multiplicative order q - 1."""
        target = self.q - 1
        primes = _prime_factors(target)
        one = self.one
        for x in self.iter_elements():
            if x and all(x ** (target // ell) != one for ell in primes):
                return x
        raise RuntimeError("no generator found")  # unreachable in a field

    # -- cached sweep tables --------------------------------------------

    @cached_property
    def _chi_by_rank(self) -> list[int]:
        # quadratic character indexed by lex rank: 0 at zero, else +1 / -1
        if self.q > SWEEP_MAX:
            raise FieldTooLargeError(
                f"character table needs q <= 2**20, got q = {self.q}")
        table = [-1] * self.q
        table[0] = 0
        weights = self._weights
        for rank in range(1, self.q):
            sq = self._mul(self._tuple_from_rank(rank), self._tuple_from_rank(rank))
            table[sum(c * w for c, w in zip(sq, weights))] = 1
        return table

    @cached_property
    def _rank_tables(self):
        # dense add / mul / square / cube tables indexed by lex rank, used
        # by the point-counting sweep on small extension fields
        q = self.q
        if q > RANK_TABLE_MAX:
            raise FieldTooLargeError(
                f"rank tables need q <= {RANK_TABLE_MAX}, got q = {q}")
        tuples = [self._tuple_from_rank(r) for r in range(q)]
        weights = self._weights
        rank_of = {t: r for r, t in enumerate(tuples)}
        add = [[rank_of[self._add(a, b)] for b in tuples] for a in tuples]
        mul = [[rank_of[self._mul(a, b)] for b in tuples] for a in tuples]
        sq = [mul[i][i] for i in range(q)]
        cube = [mul[sq[i]][i] for i in range(q)]
        return add, mul, sq, cube

    @cached_property
    def _gen_pows(self) -> dict:
        return {}

    def gen_pow(self, e: int) -> "FieldElement":
        """generator**e with memoisation (class representatives reuse this)."""
        tbl = self._gen_pows
        v = tbl.get(e)
        if v is None:
            v = self.generator**e
            tbl[e] = v
        return v

    @cached_property
    def _bsgs_table(self):
        g = self.generator
        order = self.q - 1
        m = math.isqrt(order - 1) + 1 if order > 1 else 1
        baby: dict[tuple[int, ...], int] = {}
        cur = self.one
        for j in range(m):
            baby.setdefault(cur.coeffs, j)
            cur = cur * g
        giant = (g**m).inverse()
        return m, baby, giant

    # -- identity and printing ------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.p == other.p and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.p, self.n))

    def modulus_str(self, var: str = "t") -> str | None:
        if self.modulus is None:
            return None
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}{var}" if i == 1 else f"{head}{var}^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        if self.n == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, n={self.n}, modulus={self.modulus_str()})"

    def __str__(self) -> str:
        return f"F_{self.q}" if self.n == 1 else f"F_{self.q} = F_{self.p}[t]/({self.modulus_str()})"


class FieldElement:
    """An element of a FieldCtx, stored as a reduced coefficient tuple.

    Arithmetic accepts plain ints on either side (coerced through the
    prime subfield) and refuses to mix distinct contexts.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        # assumes coeffs are already reduced; go through ctx.element()
        # when normalisation is needed
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise CtxMismatchError(
                    f"cannot combine elements of {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(other.coeffs, self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, self.ctx._inv(other.coeffs)))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(other.coeffs, self.ctx._inv(self.coeffs)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.coeffs))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return FieldElement(self.ctx, self.ctx._pow(self.ctx._inv(self.coeffs), -e))
        return FieldElement(self.ctx, self.ctx._pow(self.coeffs, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._inv(self.coeffs))

    # -- structure -------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.ctx.element(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.n, self.coeffs))

    def __int__(self) -> int:
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not in the prime subfield")
        return self.coeffs[0]

    @property
    def rank(self) -> int:
        """Position in the lex enumeration of the field (zero is 0)."""
        return sum(c * w for c, w in zip(self.coeffs, self.ctx._weights))

    def __str__(self) -> str:
        if self.ctx.n == 1:
            return str(self.coeffs[0])
        terms = []
        for i in range(self.ctx.n - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}t" if i == 1 else f"{head}t^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"<{self} in F_{self.ctx.q}>"


def make_field(p: int, n: int = 1) -> FieldCtx:
    """Construct F_{p**n} with the canonical modulus.  p must be an odd prime."""
    return FieldCtx(p, n)


def quadratic_character(x: FieldElement) -> int:
    """x**((q-1)/2) collapsed to an int: 0 at zero, +1 squares, -1 otherwise."""
    if not x:
        return 0
    r = x ** ((x.ctx.q - 1) // 2)
    return 1 if r == x.ctx.one else -1


def norm_to_prime(x: FieldElement) -> FieldElement:
    """Multiplicative norm down to F_p, i.e. x**((q-1)/(p-1)).

    The result always lies in the prime subfield; on F_p itself this is
    the identity map.
    """
    ctx = x.ctx
    return x ** ((ctx.q - 1) // (ctx.p - 1))


def primitive_element(ctx: FieldCtx) -> FieldElement:
    """Deterministic generator of the multiplicative group (lex-smallest)."""
    return ctx.generator


def discrete_log(x: FieldElement) -> int:
    """Exponent e with primitive_element(ctx)**e == x, via baby-step giant-step."""
    if not x:
        raise ZeroElementError("zero has no discrete logarithm")
    ctx = x.ctx
    m, baby, giant = ctx._bsgs_table
    y = x
    for i in range(m + 1):
        j = baby.get(y.coeffs)
        if j is not None:
            return (i * m + j) % (ctx.q - 1)
        y = y * giant
    raise RuntimeError("discrete logarithm search exhausted")  # unreachable

"""Univariate polynomials over a FieldCtx.

Coefficients are stored low degree first with trailing zeros stripped, so
the zero polynomial has an empty coefficient tuple and degree -1.  The two
workhorses are pow_truncated, which raises a polynomial to a power while
discarding every coefficient above a cap (this is how curve invariants are
extracted without ever building the full power), and factor, which is a
fully deterministic factorisation into monic irreducibles.

Determinism of factor: the squarefree split and the distinct-degree split
are deterministic as written; separating several irreducible factors of
the same degree additionally sweeps splitting polynomials in lex order
until one works, so repeated runs always take the same path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroPolynomialError
from .gf import RANK_TABLE_MAX, FieldCtx, FieldElement, _poly_rem_ints

__all__ = [
    "Polynomial",
    "Factorization",
    "poly_pow_truncated",
    "coeff",
    "gcd",
    "factor",
]


class Polynomial:
    __slots__ = ("ctx", "_coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        norm = [ctx.element(c) for c in coeffs]
        while norm and not norm[-1]:
            norm.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "_coeffs", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Polynomial":
        return cls(ctx, (0, 1))

    @classmethod
    def const(cls, ctx: FieldCtx, c) -> "Polynomial":
        return cls(ctx, (c,))

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._coeffs) - 1

    @property
    def lead(self) -> FieldElement:
        return self._coeffs[-1] if self._coeffs else self.ctx.zero

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == self.ctx.one

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.n, tuple(c.coeffs for c in self._coeffs)))

    def __getitem__(self, i: int) -> FieldElement:
        """Coefficient of x**i; zero beyond the degree."""
        if i < 0:
            raise IndexError("coefficient index must be >= 0")
        return self._coeffs[i] if i < len(self._coeffs) else self.ctx.zero

    # -- ring operations -------------------------------------------------

    def _wrap(self, coeffs) -> "Polynomial":
        return Polynomial(self.ctx, coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return self._wrap([-c for c in self._coeffs])

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ValueError("polynomials over different contexts")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.ctx, (self.ctx.element(other),))
        return None

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return self._wrap(())
        out = [self.ctx.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return self._wrap(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return self._wrap(()), self
        inv_lead = other.lead.inverse()
        rem = list(self._coeffs)
        quo = [self.ctx.zero] * (self.degree - other.degree + 1)
        db = other.degree
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * inv_lead
            if c:
                quo[i - db] = c
                for j, bj in enumerate(other._coeffs):
                    rem[i - db + j] = rem[i - db + j] - c * bj
        return self._wrap(quo), self._wrap(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = Polynomial(self.ctx, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- helpers ---------------------------------------------------------

    def evaluate(self, x) -> FieldElement:
        x = self.ctx.element(x)
        acc = self.ctx.zero
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return self._wrap([i * c for i, c in enumerate(self._coeffs)][1:])

    def monic(self) -> tuple[FieldElement, "Polynomial"]:
        """Split off the leading coefficient: returns (unit, monic part)."""
        if not self or self.is_monic:
            return self.ctx.one, self
        u = self.lead
        return u, self * u.inverse()

    def pow_truncated(self, e: int, cap: int) -> "Polynomial":
        """self**e with every coefficient above degree cap dropped.

        Exact on degrees 0..cap.  Picks between repeated multiplication
        by self and truncated square-and-multiply, whichever is cheaper
        for the given shape; both give the same answer.
        """
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        if cap < 0:
            raise ValueError("cap must be >= 0")
        if e == 0:
            return Polynomial(self.ctx, (1,))
        if not self:
            return self._wrap(())
        ctx = self.ctx
        if ctx.n == 1:
            f = [c.coeffs[0] for c in self._coeffs]
            out = _pow_trunc_ints(f, e, cap, ctx.p)
            return self._wrap(out)
        f = [c.coeffs for c in self._coeffs]
        out = _pow_trunc_tuples(f, e, cap, ctx)
        return self._wrap([FieldElement(ctx, t) for t in out])

    def to_str(self, var: str = "x") -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            cs = str(c)
            if self.ctx.n > 1 and (" " in cs or "*" in cs):
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                head = "" if cs == "1" else f"{cs}*"
                terms.append(f"{head}{var}" if i == 1 else f"{head}{var}^{i}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r} over F_{self.ctx.q})"


# -- truncated powering kernels ----------------------------------------
#
# These work on raw coefficient lists for speed; they are the inner loop
# of every exhaustive curve sweep.  The int variants are for prime
# fields, the tuple variants for extensions.

def _mul_trunc_ints(a, b, p, cap):
    L = min(len(a) + len(b) - 1, cap + 1)
    if len(b) > len(a):
        a, b = b, a
    rows = []
    for d, c in enumerate(b):
        if c and d < L:
            seg = a[: L - d]
            if c != 1:
                seg = [v * c for v in seg]
            rows.append([0] * d + list(seg) + [0] * (L - d - len(seg)))
    if not rows:
        return []
    if len(rows) == 1:
        return [v % p for v in rows[0]]
    acc = rows[0]
    for row in rows[1:]:
        acc = [x + y for x, y in zip(acc, row)]
    return [v % p for v in acc]


def _strip_ints(a):
    while a and not a[-1]:
        a.pop()
    return a


def _pow_trunc_cubic_ints(f, e, cap, p):
    # f is monic cubic: x^3 + c2 x^2 + c1 x + c0; repeated multiplication
    # with a fully fused sliding-window pass per step
    c0 = f[0] % p
    c1 = f[1] % p
    c2 = f[2] % p
    acc = [v % p for v in f[: cap + 1]]
    for _ in range(e - 1):
        L = min(len(acc) + 3, cap + 1)
        A = [0, 0, 0] + acc + [0, 0, 0]
        w3 = A[:L]
        w2 = A[1:L + 1]
        w1 = A[2:L + 2]
        w0 = A[3:L + 3]
        if c2:
            acc = [(x3 + c2 * x2 + c1 * x1 + c0 * x0) % p
                   for x3, x2, x1, x0 in zip(w3, w2, w1, w0)]
        elif c1:
            acc = [(x3 + c1 * x1 + c0 * x0) % p
                   for x3, x1, x0 in zip(w3, w1, w0)]
        else:
            acc = [(x3 + c0 * x0) % p for x3, x0 in zip(w3, w0)]
    return _strip_ints(acc)


def _pow_trunc_ints(f, e, cap, p):
    f = [v % p for v in f]
    monic_cubic = len(f) == 4 and f[3] == 1
    if monic_cubic:
        iter_cost = (e - 1) * (cap + 1) * 4
        sq_cost = 2 * e.bit_length() * (cap + 1) ** 2
        if iter_cost <= sq_cost:
            return _pow_trunc_cubic_ints(f, e, cap, p)
    # truncated square-and-multiply
    result = [1]
    base = f[: cap + 1]
    while e:
        if e & 1:
            result = _mul_trunc_ints(result, base, p, cap)
        e >>= 1
        if e:
            base = _mul_trunc_ints(base, base, p, cap)
    return _strip_ints(result)


def _mul_trunc_tuples(a, b, ctx, cap):
    L = min(len(a) + len(b) - 1, cap + 1)
    if len(b) > len(a):
        a, b = b, a
    zero = (0,) * ctx.n
    mul = ctx._mul
    add = ctx._add
    out = [zero] * L
    for d, c in enumerate(b):
        if any(c) and d < L:
            for i in range(min(len(a), L - d)):
                ai = a[i]
                if any(ai):
                    out[i + d] = add(out[i + d], mul(c, ai))
    return out


def _strip_tuples(a):
    while a and not any(a[-1]):
        a.pop()
    return a


def _pow_trunc_cubic_ranks(f, e, cap, ctx):
    # same sliding-window pass as the int kernel, but coefficients are
    # lex ranks and arithmetic is dense table lookup
    add, mul, _sq, _cube = ctx._rank_tables
    ranks = [sum(c * w for c, w in zip(t, ctx._weights)) for t in f]
    c0, c1, c2 = ranks[0], ranks[1], ranks[2]
    m0 = mul[c0]
    acc = ranks[: cap + 1]
    for _ in range(e - 1):
        L = min(len(acc) + 3, cap + 1)
        A = [0, 0, 0] + acc + [0, 0, 0]
        w3 = A[:L]
        w2 = A[1:L + 1]
        w1 = A[2:L + 2]
        w0 = A[3:L + 3]
        if c2:
            m2 = mul[c2]
            m1 = mul[c1]
            acc = [add[add[add[x3][m2[x2]]][m1[x1]]][m0[x0]]
                   for x3, x2, x1, x0 in zip(w3, w2, w1, w0)]
        elif c1:
            m1 = mul[c1]
            acc = [add[add[x3][m1[x1]]][m0[x0]]
                   for x3, x1, x0 in zip(w3, w1, w0)]
        else:
            acc = [add[x3][m0[x0]] for x3, x0 in zip(w3, w0)]
    while acc and not acc[-1]:
        acc.pop()
    return [ctx._tuple_from_rank(r) for r in acc]


def _pow_trunc_tuples(f, e, cap, ctx):
    zero = (0,) * ctx.n
    monic_cubic = len(f) == 4 and f[3] == (1,) + (0,) * (ctx.n - 1)
    if monic_cubic and e > 1 and ctx.q <= RANK_TABLE_MAX:
        iter_cost = (e - 1) * (cap + 1) * 4
        sq_cost = 2 * e.bit_length() * (cap + 1) ** 2
        if iter_cost <= sq_cost:
            return _pow_trunc_cubic_ranks(f, e, cap, ctx)
    if monic_cubic:
        iter_cost = (e - 1) * (cap + 1) * 4
        sq_cost = 2 * e.bit_length() * (cap + 1) ** 2
        if iter_cost <= sq_cost:
            mul = ctx._mul
            add = ctx._add
            c0, c1, c2 = f[0], f[1], f[2]
            use2 = any(c2)
            use1 = any(c1)
            acc = list(f[: cap + 1])
            for _ in range(e - 1):
                L = min(len(acc) + 3, cap + 1)
                A = [zero, zero, zero] + acc + [zero, zero, zero]
                nxt = []
                for i in range(L):
                    v = A[i]
                    if use2:
                        v = add(v, mul(c2, A[i + 1]))
                    if use1:
                        v = add(v, mul(c1, A[i + 2]))
                    v = add(v, mul(c0, A[i + 3]))
                    nxt.append(v)
                acc = nxt
            return _strip_tuples(acc)
    result = [(1,) + (0,) * (ctx.n - 1)]
    base = list(f[: cap + 1])
    while e:
        if e & 1:
            result = _mul_trunc_tuples(result, base, ctx, cap)
        e >>= 1
        if e:
            base = _mul_trunc_tuples(base, base, ctx, cap)
    return _strip_tuples(result)


def poly_pow_truncated(f: Polynomial, e: int, cap: int) -> Polynomial:
    """Functional spelling of Polynomial.pow_truncated."""
    return f.pow_truncated(e, cap)


def coeff(f: Polynomial, i: int) -> FieldElement:
    """Coefficient of x^i, zero beyond the degree."""
    return f[i]


# -- factorisation ------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """unit * product(poly**mult) equals the input polynomial.

    Factors are monic irreducibles sorted by (degree, coefficient ranks),
    so equal inputs always serialize identically.
    """

    unit: FieldElement
    factors: tuple[tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        out = Polynomial(self.unit.ctx, (self.unit,))
        for poly, mult in self.factors:
            out = out * poly**mult
        return out

    @property
    def degree_multiset(self) -> tuple[int, ...]:
        """Degrees of the irreducible factors with multiplicity, sorted."""
        out: list[int] = []
        for poly, mult in self.factors:
            out.extend([poly.degree] * mult)
        return tuple(sorted(out))


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    while g:
        f, g = g, f % g
    return f.monic()[1]


def _mul_ints_full(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return [v % p for v in out]


def _pow_mod(base: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    # modular exponentiation; over prime fields this drops to raw int
    # lists because it is the inner loop of the distinct-degree and
    # equal-degree splits
    ctx = base.ctx
    if ctx.n == 1 and mod.is_monic:
        p = ctx.p
        m = [c.coeffs[0] for c in mod.coeffs]
        b = _poly_rem_ints([c.coeffs[0] for c in base.coeffs], m, p)
        result = [1]
        while e:
            if e & 1:
                result = _poly_rem_ints(_mul_ints_full(result, b, p), m, p)
            b = _poly_rem_ints(_mul_ints_full(b, b, p), m, p)
            e >>= 1
        return Polynomial(ctx, result)
    result = Polynomial(ctx, (1,))
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _pth_root(f: Polynomial) -> Polynomial:
    # f has zero derivative, so only exponents divisible by p occur;
    # coefficient-wise p-th roots are c**(q/p)
    ctx = f.ctx
    p = ctx.p
    root_exp = p ** (ctx.n - 1)
    return Polynomial(ctx, [f[i * p] ** root_exp for i in range(f.degree // p + 1)])


def _squarefree_parts(g: Polynomial) -> list[tuple[Polynomial, int]]:
    # monic g -> [(monic squarefree, multiplicity)], Yun's split adapted
    # to characteristic p
    p = g.ctx.p
    out: list[tuple[Polynomial, int]] = []
    scale = 1
    while g.degree > 0:
        d = g.derivative()
        if not d:
            g = _pth_root(g)
            scale *= p
            continue
        c = gcd(g, d)
        w = g // c
        i = 1
        while w.degree > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z, i * scale))
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            g = _pth_root(c)
            scale *= p
        else:
            break
    return out


def _iter_polys_below(ctx: FieldCtx, degree: int):
    # every polynomial of degree 1 <= deg < degree in a fixed order; the
    # deterministic supply of splitting elements.  Constants are omitted
    # because a constant can never separate two factors.
    q = ctx.q
    for rank in range(q, q**degree):
        digits = []
        r = rank
        for _ in range(degree):
            digits.append(ctx.from_rank(r % q))
            r //= q
        yield Polynomial(ctx, digits)


def _equal_degree_split(h: Polynomial, d: int) -> list[Polynomial]:
    # h is monic, squarefree, every irreducible factor of degree exactly d
    if h.degree == d:
        return [h]
    ctx = h.ctx
    one = Polynomial(ctx, (1,))
    exponent = (ctx.q**d - 1) // 2
    for u in _iter_polys_below(ctx, h.degree):
        g = gcd(h, u)
        if 0 < g.degree < h.degree:
            return _equal_degree_split(g, d) + _equal_degree_split(h // g, d)
        t = _pow_mod(u, exponent, h)
        g = gcd(h, t - one)
        if 0 < g.degree < h.degree:
            return _equal_degree_split(g, d) + _equal_degree_split(h // g, d)
    raise RuntimeError("equal-degree split exhausted its search space")


def _split_squarefree(sq: Polynomial) -> list[Polynomial]:
    # monic squarefree -> monic irreducibles: strip roots by exhaustive
    # evaluation, then split by distinct degree
    ctx = sq.ctx
    X = Polynomial.x(ctx)
    out: list[Polynomial] = []
    rem = sq
    for x in ctx.iter_elements():
        if rem.degree < 1:
            break
        if not rem.evaluate(x):
            lin = X - x
            out.append(lin)
            rem = rem // lin
    if rem.degree > 0:
        frob = _pow_mod(X, ctx.q, rem)
        d = 1
        while rem.degree > 0:
            d += 1
            if 2 * d > rem.degree:
                out.append(rem)
                break
            frob = _pow_mod(frob, ctx.q, rem)
            gd = gcd(rem, frob - X)
            if gd.degree > 0:
                out.extend(_equal_degree_split(gd, d))
                rem = rem // gd
                frob = frob % rem
    return out


def _sort_key(poly: Polynomial):
    return (poly.degree, tuple(c.rank for c in poly.coeffs))


def factor(f: Polynomial) -> Factorization:
    """Deterministic factorisation into monic irreducibles over F_q."""
    if not f:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    unit, g = f.monic()
    if g.degree == 0:
        return Factorization(unit, ())
    pairs: list[tuple[Polynomial, int]] = []
    for sq, mult in _squarefree_parts(g):
        for irr in _split_squarefree(sq):
            pairs.append((irr, mult))
    pairs.sort(key=lambda pm: _sort_key(pm[0]))
    total = sum(poly.degree * mult for poly, mult in pairs)
    if total != f.degree:
        raise RuntimeError("factor lost degree, this is a bug")
    return Factorization(unit, tuple(pairs))

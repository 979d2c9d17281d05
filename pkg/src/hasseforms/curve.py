"""Weierstrass models y^2 = x^3 + a2 x^2 + a4 x + a6 over odd-order fields.

The a2 term is only allowed in characteristic 3, where the short form
cannot always reach every curve; for p >= 5 construction insists on
a2 = 0.  Nonsingularity is checked at construction time.

Invariants follow the b-style formulas specialised to this shape:

    b2 = 4 a2        b4 = 2 a4        b6 = 4 a6
    b8 = -a4^2 + 4 a2 a6
    disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    c4 = b2^2 - 24 b4
    j = c4^3 / disc

The coefficient of x^(p-1) in (x^3 + a2 x^2 + a4 x + a6)^((p-1)/2) is the
Hasse invariant A_p; it vanishes exactly on the supersingular curves, and
the level-q variant A_q is the analogous coefficient of x^(q-1) in the
((q-1)/2) power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadCongruenceError,
    FieldTooLargeError,
    SingularModelError,
    WrongJInvariantError,
    ZeroTwistParameterError,
)
from .gf import RANK_TABLE_MAX, SWEEP_MAX, FieldCtx, FieldElement
from .poly import Polynomial, _pow_trunc_ints, _pow_trunc_tuples

__all__ = [
    "WeierstrassCurve",
    "FrobeniusData",
    "point_count",
    "hasse_invariant",
    "is_ordinary",
    "twist",
    "TWIST_KINDS",
]

TWIST_KINDS = ("quadratic", "quartic", "sextic")


class WeierstrassCurve:
    __slots__ = ("ctx", "a2", "a4", "a6", "discriminant")

    def __init__(self, ctx: FieldCtx, a4, a6, a2=0):
        a2 = ctx.element(a2)
        a4 = ctx.element(a4)
        a6 = ctx.element(a6)
        if a2 and ctx.p >= 5:
            raise ValueError(
                f"a2 must be zero for p >= 5 (got a2 = {a2} over {ctx}); "
                "complete the square away")
        disc = _discriminant(a2, a4, a6)
        if not disc:
            raise SingularModelError(
                f"y^2 = {_rhs_str(a2, a4, a6)} over {ctx} is singular")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "a4", a4)
        object.__setattr__(self, "a6", a6)
        object.__setattr__(self, "discriminant", disc)

    def __setattr__(self, name, value):
        raise AttributeError("WeierstrassCurve is immutable")

    @property
    def j_invariant(self) -> FieldElement:
        b2 = 4 * self.a2
        b4 = 2 * self.a4
        c4 = b2 * b2 - 24 * b4
        return c4**3 / self.discriminant

    def f_polynomial(self) -> Polynomial:
        """The right-hand side x^3 + a2 x^2 + a4 x + a6."""
        return Polynomial(self.ctx, (self.a6, self.a4, self.a2, self.ctx.one))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return (self.ctx == other.ctx and self.a2 == other.a2
                and self.a4 == other.a4 and self.a6 == other.a6)

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.n, self.a2.coeffs,
                     self.a4.coeffs, self.a6.coeffs))

    def __repr__(self) -> str:
        return f"WeierstrassCurve(y^2 = {_rhs_str(self.a2, self.a4, self.a6)} over F_{self.ctx.q})"


def discriminant_general(a2, a4, a6) -> FieldElement:
    """The b-invariant discriminant formula, term by term."""
    b2 = 4 * a2
    b4 = 2 * a4
    b6 = 4 * a6
    b8 = -(a4 * a4) + 4 * a2 * a6
    return -(b2 * b2) * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def _discriminant(a2, a4, a6) -> FieldElement:
    # the general formula with the vanishing terms dropped; this runs on
    # every candidate model in a sweep, so it works on raw tuples.
    # tests pin it against discriminant_general exhaustively.
    ctx = a4.ctx
    mul = ctx._mul
    sub = ctx._sub
    p = ctx.p
    t4, t6 = a4.coeffs, a6.coeffs
    if p == 3:
        # reduces to a2^2 a4^2 - a2^3 a6 - a4^3
        t2 = a2.coeffs
        s2 = mul(t2, t2)
        s4 = mul(t4, t4)
        out = sub(sub(mul(s2, s4), mul(mul(s2, t2), t6)), mul(s4, t4))
        return FieldElement(ctx, out)
    if a2:
        return discriminant_general(a2, a4, a6)
    # short model: -16 (4 a4^3 + 27 a6^2)
    k4 = (-64) % p
    k6 = (-432) % p
    c4 = mul(mul(t4, t4), t4)
    c6 = mul(t6, t6)
    out = tuple((k4 * x + k6 * y) % p for x, y in zip(c4, c6))
    return FieldElement(ctx, out)


def _rhs_str(a2, a4, a6) -> str:
    def head(c):
        s = str(c)
        if s == "1":
            return ""
        if " " in s or "*" in s:
            return f"({s})*"
        return f"{s}*"

    parts = ["x^3"]
    if a2:
        parts.append(f"{head(a2)}x^2")
    if a4:
        parts.append(f"{head(a4)}x")
    if a6:
        s = str(a6)
        parts.append(f"({s})" if (" " in s or "*" in s) else s)
    return " + ".join(parts)


@dataclass(frozen=True)
class FrobeniusData:
    """Point count over the base field and derived Frobenius trace.

    count is the number of projective points including the one at
    infinity; beta = q + 1 - count satisfies beta^2 <= 4q, strictly so
    when p does not divide beta; ordinary means p does not divide beta.
    """

    count: int
    beta: int
    ordinary: bool


def point_count(curve: WeierstrassCurve) -> FrobeniusData:
    """Exhaustive point count (q <= 2**20) via the quadratic character.

    Each affine x contributes 1 + chi(f(x)) points, plus one at infinity.
    """
    ctx = curve.ctx
    q = ctx.q
    if q > SWEEP_MAX:
        raise FieldTooLargeError(
            f"point counting sweeps the field and needs q <= 2**20, got {q}")
    chi = ctx._chi_by_rank
    if ctx.n == 1:
        p = ctx.p
        b = curve.a4.coeffs[0]
        c = curve.a6.coeffs[0]
        if curve.a2:
            a = curve.a2.coeffs[0]
            s = sum(chi[(((x + a) * x + b) * x + c) % p] for x in range(p))
        else:
            s = sum(chi[(x * x * x + b * x + c) % p] for x in range(p))
    elif q <= RANK_TABLE_MAX:
        add, mul, sq, cube = ctx._rank_tables
        rb = curve.a4.rank
        rc = curve.a6.rank
        mb = mul[rb]
        if curve.a2:
            ma = mul[curve.a2.rank]
            s = sum(chi[add[add[add[cube[x]][ma[sq[x]]]][mb[x]]][rc]]
                    for x in range(q))
        else:
            s = sum(chi[add[add[cube[x]][mb[x]]][rc]] for x in range(q))
    else:
        mul_ = ctx._mul
        add_ = ctx._add
        weights = ctx._weights
        a2t, a4t, a6t = curve.a2.coeffs, curve.a4.coeffs, curve.a6.coeffs
        s = 0
        for r in range(q):
            x = ctx._tuple_from_rank(r)
            v = add_(x, a2t)
            v = add_(mul_(v, x), a4t)
            v = add_(mul_(v, x), a6t)
            s += chi[sum(cc * w for cc, w in zip(v, weights))]
    count = 1 + q + s
    beta = q + 1 - count
    ordinary = beta % ctx.p != 0
    # equality in the trace bound only happens at supersingular curves
    # over fields of square order
    if beta * beta > 4 * q or (ordinary and beta * beta == 4 * q):
        raise RuntimeError(
            f"trace bound violated for {curve!r}: beta = {beta}, this is a bug")
    return FrobeniusData(count=count, beta=beta, ordinary=ordinary)


def hasse_invariant(curve: WeierstrassCurve, level: str = "p") -> FieldElement:
    """Coefficient of x^(p-1) in f^((p-1)/2), or of x^(q-1) at level "q".

    Runs the truncated-power kernels directly on raw coefficients; tests
    pin this against f_polynomial().pow_truncated on whole sweeps.
    """
    ctx = curve.ctx
    if level == "p":
        m = ctx.p
    elif level == "q":
        m = ctx.q
    else:
        raise ValueError(f'level must be "p" or "q", got {level!r}')
    cap = m - 1
    e = (m - 1) // 2
    if ctx.n == 1:
        f = [curve.a6.coeffs[0], curve.a4.coeffs[0], curve.a2.coeffs[0], 1]
        out = _pow_trunc_ints(f, e, cap, ctx.p)
        return FieldElement(ctx, (out[cap] if len(out) > cap else 0,))
    f = [curve.a6.coeffs, curve.a4.coeffs, curve.a2.coeffs, ctx.one.coeffs]
    out = _pow_trunc_tuples(f, e, cap, ctx)
    return FieldElement(ctx, out[cap] if len(out) > cap else (0,) * ctx.n)


def is_ordinary(curve: WeierstrassCurve) -> bool:
    """True when the Hasse invariant A_p is nonzero."""
    return bool(hasse_invariant(curve))


def twist(curve: WeierstrassCurve, d, kind: str = "quadratic") -> WeierstrassCurve:
    """Twist by a nonzero parameter d.

    quadratic: any model; scales (a2, a4, a6) by (d, d^2, d^3).
    quartic:   j = 1728 and p = 1 mod 4 only; (a4, 0) -> (d*a4, 0).
    sextic:    j = 0 and p = 1 mod 3 only; (0, a6) -> (0, d*a6).
    """
    ctx = curve.ctx
    d = ctx.element(d)
    if not d:
        raise ZeroTwistParameterError("twist parameter must be nonzero")
    if kind == "quadratic":
        return WeierstrassCurve(ctx, d * d * curve.a4, d**3 * curve.a6,
                                a2=d * curve.a2)
    if kind == "quartic":
        if curve.j_invariant != ctx.element(1728):
            raise WrongJInvariantError(
                f"quartic twists need j = 1728, got j = {curve.j_invariant}")
        if ctx.p % 4 != 1:
            raise BadCongruenceError(
                f"quartic twists need p = 1 mod 4, got p = {ctx.p}")
        return WeierstrassCurve(ctx, d * curve.a4, ctx.zero)
    if kind == "sextic":
        if curve.j_invariant != ctx.zero:
            raise WrongJInvariantError(
                f"sextic twists need j = 0, got j = {curve.j_invariant}")
        if ctx.p % 3 != 1:
            raise BadCongruenceError(
                f"sextic twists need p = 1 mod 3, got p = {ctx.p}")
        return WeierstrassCurve(ctx, ctx.zero, d * curve.a6)
    raise ValueError(f"kind must be one of {TWIST_KINDS}, got {kind!r}")

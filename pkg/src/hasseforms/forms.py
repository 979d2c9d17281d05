"""Unit classes modulo (p-1)-th powers and what they classify.

Over k = F_q with q = p^n the quotient k^x / (k^x)^(p-1) has exactly
p - 1 classes; writing g for the canonical generator of k^x, the class of
g^e depends only on e mod (p-1), so a class is stored as that exponent.
The map phi(x) = x^((q-1)/(p-1)) lands in the prime subfield and induces
an isomorphism from the class group onto F_p^x.

An ordinary curve attaches to its Frobenius kernel the class of its Hasse
invariant; a supersingular curve has no unit class (the kernel sits in
the single self-dual position instead).  The p-torsion group scheme of an
ordinary curve splits off a multiplicative part twisted by that same
class together with an etale part whose coordinate ring factors into
equal-degree pieces; the supersingular p-torsion is the familiar
non-split thickening, reported here under the label M2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd, isqrt

from .curve import WeierstrassCurve, hasse_invariant
from .errors import (
    BadCongruenceError,
    NotPrimeError,
    ZeroElementError,
    ZeroTwistParameterError,
)
from .gf import (
    FieldCtx,
    FieldElement,
    _is_prime,
    discrete_log,
    norm_to_prime,
    primitive_element,
)
from .poly import Polynomial, factor

__all__ = [
    "UnitClass",
    "unit_class_of",
    "enumerate_classes",
    "phi",
    "realizable_set",
    "twist_class_action",
    "FrobeniusKernelClass",
    "kernel_of_frobenius",
    "PTorsionDescription",
    "ptorsion_description",
]


class UnitClass:
    """A coset of (k^x)^(p-1) in k^x, named by an exponent mod p-1."""

    __slots__ = ("ctx", "exp", "rep")

    def __init__(self, ctx: FieldCtx, exp: int):
        exp %= ctx.p - 1
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "exp", exp)
        object.__setattr__(self, "rep", ctx.gen_pow(exp))

    def __setattr__(self, name, value):
        raise AttributeError("UnitClass is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitClass):
            return NotImplemented
        return self.ctx == other.ctx and self.exp == other.exp

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.n, self.exp))

    def __mul__(self, other: "UnitClass") -> "UnitClass":
        if not isinstance(other, UnitClass):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ValueError("classes over different contexts")
        return UnitClass(self.ctx, self.exp + other.exp)

    def __pow__(self, k: int) -> "UnitClass":
        return UnitClass(self.ctx, self.exp * k)

    def inverse(self) -> "UnitClass":
        return UnitClass(self.ctx, -self.exp)

    @property
    def order(self) -> int:
        """Order in the class group, i.e. (p-1) / gcd(exp, p-1)."""
        return (self.ctx.p - 1) // int_gcd(self.exp, self.ctx.p - 1)

    def __repr__(self) -> str:
        return f"UnitClass(exp={self.exp} mod {self.ctx.p - 1}, rep={self.rep})"


def unit_class_of(x: FieldElement) -> UnitClass:
    """The class of a nonzero element, found by discrete logarithm."""
    if not x:
        raise ZeroElementError("zero does not belong to any unit class")
    return UnitClass(x.ctx, discrete_log(x))


def enumerate_classes(ctx: FieldCtx) -> tuple[UnitClass, ...]:
    """All p - 1 classes, ordered by exponent."""
    return tuple(UnitClass(ctx, e) for e in range(ctx.p - 1))


def phi(cls: UnitClass) -> FieldElement:
    """The prime-subfield unit attached to a class by the norm-style power map.

    phi(g^e) = g^(e (q-1)/(p-1)) read in the prime subfield.  This is a
    group isomorphism onto F_p^x; use int() on the result when a plain
    residue is wanted.
    """
    return norm_to_prime(cls.rep)


def realizable_set(p: int, q: int | None = None) -> frozenset[int]:
    """Residues h mod p that occur as beta mod p for some trace beta.

    Scans the signed integers beta with 0 < beta^2 < 4q and p not
    dividing beta.  For p = 2 the answer is {1} for every q (the single
    nontrivial residue), kept here so the formula covers the degenerate
    prime as well.
    """
    if not _is_prime(p):
        raise NotPrimeError(f"p must be prime, got {p}")
    if q is None:
        q = p
    t = q
    while t % p == 0 and t > 1:
        t //= p
    if t != 1 or q < p:
        raise ValueError(f"q = {q} is not a power of p = {p}")
    if p == 2:
        return frozenset({1})
    bound = isqrt(4 * q - 1)
    return frozenset(b % p for b in range(-bound, bound + 1) if b % p)


def twist_class_action(cls: UnitClass, d: FieldElement, kind: str = "quadratic") -> UnitClass:
    """Where the class of a Hasse invariant moves under a twist by d.

    quadratic sends [h] to [h * d^((p-1)/2)], quartic to
    [h * d^((p-1)/4)] and sextic to [h * d^((p-1)/6)], subject to the
    same congruence conditions as the twists themselves.
    """
    ctx = cls.ctx
    d = ctx.element(d)
    if not d:
        raise ZeroTwistParameterError("twist parameter must be nonzero")
    p = ctx.p
    if kind == "quadratic":
        e = (p - 1) // 2
    elif kind == "quartic":
        if p % 4 != 1:
            raise BadCongruenceError(f"quartic action needs p = 1 mod 4, got {p}")
        e = (p - 1) // 4
    elif kind == "sextic":
        if p % 3 != 1:
            raise BadCongruenceError(f"sextic action needs p = 1 mod 3, got {p}")
        e = (p - 1) // 6
    else:
        raise ValueError(f"unknown twist kind {kind!r}")
    return unit_class_of(cls.rep * d**e)


@dataclass(frozen=True)
class FrobeniusKernelClass:
    """Which twisted form of the p-th roots of unity ker(Frobenius) is.

    hasse_class is None exactly in the supersingular case, where the
    kernel is the infinitesimal self-dual form instead of a twisted
    multiplicative one.  For ordinary curves the multiplicative side
    carries the class of the Hasse invariant and the dual (additive Lie)
    side carries its inverse.
    """

    hasse_class: UnitClass | None

    @property
    def supersingular(self) -> bool:
        return self.hasse_class is None

    @property
    def lie_class(self) -> UnitClass | None:
        return None if self.hasse_class is None else self.hasse_class.inverse()

    def __repr__(self) -> str:
        if self.hasse_class is None:
            return "FrobeniusKernelClass(supersingular)"
        return f"FrobeniusKernelClass(ordinary, {self.hasse_class!r})"


def kernel_of_frobenius(curve: WeierstrassCurve) -> FrobeniusKernelClass:
    a = hasse_invariant(curve)
    return FrobeniusKernelClass(None if not a else unit_class_of(a))


@dataclass(frozen=True)
class PTorsionDescription:
    """Coordinate-level description of the p-torsion group scheme E[p].

    Ordinary case: a connected multiplicative-type part twisted by
    hasse_class, plus an etale algebra whose field factors all have the
    same degree (the order of the class); etale_degrees lists them with
    multiplicity.  j_p_root is the unique p-th root of j in the base
    field, the value at which the second coordinate generator is glued.

    Supersingular case: nothing splits; the scheme is the standard
    non-split self-dual thickening, labelled M2.
    """

    supersingular: bool
    hasse_class: UnitClass | None = None
    j: FieldElement | None = None
    etale_degrees: tuple[int, ...] | None = None
    j_p_root: FieldElement | None = None

    @property
    def label(self) -> str:
        return "M2" if self.supersingular else "mu-form+etale"


def ptorsion_description(curve: WeierstrassCurve) -> PTorsionDescription:
    """Describe E[p] by factoring y^(p-1) - A_p and taking the p-th root of j."""
    ctx = curve.ctx
    a = hasse_invariant(curve)
    if not a:
        return PTorsionDescription(supersingular=True)
    p = ctx.p
    coeffs = [-a] + [ctx.zero] * (p - 2) + [ctx.one]
    fac = factor(Polynomial(ctx, coeffs))
    j = curve.j_invariant
    return PTorsionDescription(
        supersingular=False,
        hasse_class=unit_class_of(a),
        j=j,
        etale_degrees=fac.degree_multiset,
        j_p_root=j ** (p ** (ctx.n - 1)),
    )

"""Curve models, invariants, point counts, and twists.

Counts in this file were frozen from exhaustive x-sweeps done by hand or
with a throwaway script; invariants are additionally recomputed through
an independent route (the generic b-invariant discriminant, the full
polynomial power for the Hasse coefficient) so the fast paths inside the
package cannot drift.
"""

import pytest

from hasseforms import (
    hasse_invariant,
    is_ordinary,
    iter_curves,
    make_field,
    point_count,
    twist,
)
from hasseforms.curve import WeierstrassCurve, discriminant_general
from hasseforms.errors import (
    BadCongruenceError,
    FieldTooLargeError,
    SingularModelError,
    WrongJInvariantError,
    ZeroTwistParameterError,
)


@pytest.fixture(scope="module")
def f5():
    return make_field(5)


def _curve(ctx, a4, a6, a2=0):
    return WeierstrassCurve(ctx, ctx(a4), ctx(a6), ctx(a2))


def test_frozen_invariants_f5(f5):
    e1 = _curve(f5, 1, 0)
    assert e1.discriminant == 1
    assert e1.j_invariant == 3  # 1728 mod 5
    e2 = _curve(f5, 0, 1)
    assert not e2.j_invariant
    e3 = _curve(f5, 1, 1)
    assert e3.discriminant == 4
    assert e3.j_invariant == 2


def test_frozen_counts_f5(f5):
    expectations = {
        (1, 0): (4, 2, True),
        (0, 1): (6, 0, False),
        (1, 1): (9, -3, True),
        (2, 0): (2, 4, True),
    }
    for (a4, a6), (count, beta, ordinary) in expectations.items():
        fd = point_count(_curve(f5, a4, a6))
        assert (fd.count, fd.beta, fd.ordinary) == (count, beta, ordinary)
        assert fd.count == f5.q + 1 - fd.beta


def test_frozen_count_a2_model():
    ctx = make_field(3)
    fd = point_count(_curve(ctx, 0, 1, a2=1))
    assert (fd.count, fd.beta, fd.ordinary) == (6, -2, True)


def test_singular_models_rejected(f5):
    with pytest.raises(SingularModelError):
        _curve(f5, 0, 0)
    with pytest.raises(SingularModelError):
        _curve(make_field(7), -3, 2)
    with pytest.raises(SingularModelError):
        _curve(make_field(3), 0, 0, a2=0)


def test_a2_requires_characteristic_three(f5):
    with pytest.raises(ValueError):
        _curve(f5, 1, 1, a2=1)
    _curve(make_field(3), 1, 1, a2=1)  # fine there


def test_repr_frozen(f5):
    assert repr(_curve(f5, 1, 1)) == "WeierstrassCurve(y^2 = x^3 + x + 1 over F_5)"
    ctx9 = make_field(3, 2)
    t = ctx9((0, 1))
    shown = repr(WeierstrassCurve(ctx9, ctx9.one, ctx9.one, t))
    assert "x^2" in shown and "F_9" in shown and "1*" not in shown


def test_f_polynomial(f5):
    f = _curve(f5, 2, 1).f_polynomial()
    assert f.degree == 3 and f.is_monic
    assert (f[0], f[1], f[2]) == (1, 2, 0)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (7, 1), (5, 2)])
def test_discriminant_two_routes(p, n):
    """The specialized discriminant agrees with the generic formula, and
    a model is constructible exactly when the generic formula is nonzero."""
    ctx = make_field(p, n)
    a2_values = list(ctx.iter_elements()) if p == 3 else [ctx.zero]
    for a2 in a2_values:
        for a4 in ctx.iter_elements():
            for a6 in ctx.iter_elements():
                generic = discriminant_general(a2, a4, a6)
                if not generic:
                    with pytest.raises(SingularModelError):
                        WeierstrassCurve(ctx, a4, a6, a2)
                else:
                    curve = WeierstrassCurve(ctx, a4, a6, a2)
                    assert curve.discriminant == generic


@pytest.mark.parametrize("p,n", [(3, 2), (13, 1)])
def test_hasse_invariant_two_routes(p, n):
    """The raw coefficient kernel agrees with full truncated powering of
    the defining cubic, at both the p and q levels."""
    ctx = make_field(p, n)
    q = ctx.q
    for curve in iter_curves(ctx):
        f = curve.f_polynomial()
        assert hasse_invariant(curve, level="p") == f.pow_truncated((p - 1) // 2, p - 1)[p - 1]
        assert hasse_invariant(curve, level="q") == f.pow_truncated((q - 1) // 2, q - 1)[q - 1]


def test_hasse_invariant_two_routes_f25_sample():
    ctx = make_field(5, 2)
    q = ctx.q
    for i, curve in enumerate(iter_curves(ctx)):
        if i % 7:
            continue
        f = curve.f_polynomial()
        assert hasse_invariant(curve, level="q") == f.pow_truncated((q - 1) // 2, q - 1)[q - 1]


def test_trace_bound():
    boundary_seen = False
    for q, p, n in ((5, 5, 1), (7, 7, 1), (9, 3, 2), (13, 13, 1), (25, 5, 2)):
        ctx = make_field(p, n)
        for curve in iter_curves(ctx):
            fd = point_count(curve)
            assert fd.beta * fd.beta <= 4 * q
            if fd.ordinary:
                assert fd.beta * fd.beta < 4 * q
            elif fd.beta * fd.beta == 4 * q:
                boundary_seen = True
    # square-order fields really do attain the boundary trace
    assert boundary_seen


def test_supersingular_boundary_curve_frozen():
    ctx = make_field(3, 2)
    t = ctx((0, 1))
    fd = point_count(WeierstrassCurve(ctx, t, ctx.zero))
    assert (fd.count, fd.beta, fd.ordinary) == (4, 6, False)


def test_is_ordinary_frozen(f5):
    assert is_ordinary(_curve(f5, 1, 0))
    assert not is_ordinary(_curve(f5, 0, 1))
    assert is_ordinary(_curve(f5, 2, 0))


def test_point_count_guard():
    ctx = make_field(1048583)  # first prime past the sweep bound
    curve = WeierstrassCurve(ctx, ctx.one, ctx.one)
    with pytest.raises(FieldTooLargeError):
        point_count(curve)


def test_twist_frozen_example(f5):
    e = _curve(f5, 1, 1)
    twisted = twist(e, f5(2), "quadratic")
    assert (twisted.a4, twisted.a6) == (4, 3)
    assert hasse_invariant(e) == 2
    assert hasse_invariant(twisted) == 3


def test_twist_identity(f5):
    e = _curve(f5, 1, 1)
    same = twist(e, f5.one, "quadratic")
    assert (same.a2, same.a4, same.a6) == (e.a2, e.a4, e.a6)


def test_twist_error_taxonomy(f5):
    e_j1728 = _curve(f5, 1, 0)
    e_j0 = _curve(f5, 0, 1)
    with pytest.raises(ZeroTwistParameterError):
        twist(e_j1728, f5.zero, "quadratic")
    # wrong-curve check fires before the congruence check
    with pytest.raises(WrongJInvariantError):
        twist(e_j1728, f5(2), "sextic")
    with pytest.raises(WrongJInvariantError):
        twist(e_j0, f5(2), "quartic")
    # 5 = 1 mod 4 so quartic is fine here, but 5 = 2 mod 3 blocks sextic
    twist(e_j1728, f5(2), "quartic")
    with pytest.raises(BadCongruenceError):
        twist(e_j0, f5(2), "sextic")
    ctx7 = make_field(7)
    with pytest.raises(BadCongruenceError):
        twist(_curve(ctx7, 1, 0), ctx7(3), "quartic")
    with pytest.raises(ValueError):
        twist(e_j1728, f5(2), "cubic")


def test_twist_preserves_j():
    for p in (5, 13):
        ctx = make_field(p)
        j1728 = ctx(1728)
        for curve in iter_curves(ctx):
            kinds = ["quadratic"]
            if curve.j_invariant == j1728 and p % 4 == 1:
                kinds.append("quartic")
            if not curve.j_invariant and p % 3 == 1:
                kinds.append("sextic")
            for d in ctx.iter_elements():
                if not d:
                    continue
                for kind in kinds:
                    assert twist(curve, d, kind).j_invariant == curve.j_invariant


def test_quadratic_twist_by_square_preserves_count():
    for p, n in ((3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)):
        ctx = make_field(p, n)
        squares = {(x * x).rank for x in ctx.iter_elements() if x}
        for curve in iter_curves(ctx):
            fd = point_count(curve)
            for d in ctx.iter_elements():
                if not d or d.rank not in squares:
                    continue
                other = point_count(twist(curve, d, "quadratic"))
                assert (other.count, other.beta) == (fd.count, fd.beta)


def test_a2_model_twist_rule():
    ctx = make_field(3)
    e = _curve(ctx, 0, 1, a2=1)
    d = ctx(2)
    twisted = twist(e, d, "quadratic")
    assert (twisted.a2, twisted.a4, twisted.a6) == (d * e.a2, d * d * e.a4, d ** 3 * e.a6)
    assert twisted.j_invariant == e.j_invariant


def test_curves_are_immutable(f5):
    e = _curve(f5, 1, 1)
    with pytest.raises(AttributeError):
        e.a4 = f5(2)

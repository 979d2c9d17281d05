"""How twisting a curve moves its Hasse class.

Quadratic twists act on classes by multiplication with D^((p-1)/2);
quartic twists (j = 1728, p = 1 mod 4) use exponent (p-1)/4 and sweep
the orbit in smaller steps.

Run with: python3 demos/twist_orbits.py
"""

from hasseforms import hasse_invariant, make_field, twist, unit_class_of
from hasseforms.curve import WeierstrassCurve


def orbit(curve, kind):
    ctx = curve.ctx
    seen = []
    for d in ctx.iter_elements():
        if not d:
            continue
        cls = unit_class_of(hasse_invariant(twist(curve, d, kind)))
        if cls.exp not in seen:
            seen.append(cls.exp)
    return sorted(seen)


def main():
    ctx = make_field(13)
    base = WeierstrassCurve(ctx, ctx(1), ctx(1))
    h = unit_class_of(hasse_invariant(base))
    print(f"base curve {base!r}, class exp {h.exp}")
    print("quadratic orbit of class exps:", orbit(base, "quadratic"))

    square_curve = WeierstrassCurve(ctx, ctx(1), ctx.zero)  # j = 1728
    hq = unit_class_of(hasse_invariant(square_curve))
    print(f"\nj = 1728 curve {square_curve!r}, class exp {hq.exp}")
    print("quadratic orbit:", orbit(square_curve, "quadratic"))
    print("quartic orbit:  ", orbit(square_curve, "quartic"))

    zero_j = WeierstrassCurve(ctx, ctx.zero, ctx(1))  # j = 0
    if hasse_invariant(zero_j):
        hs = unit_class_of(hasse_invariant(zero_j))
        print(f"\nj = 0 curve {zero_j!r}, class exp {hs.exp}")
        print("sextic orbit:", orbit(zero_j, "sextic"))
    else:
        print(f"\nj = 0 curve {zero_j!r} is supersingular; twists stay supersingular")


if __name__ == "__main__":
    main()

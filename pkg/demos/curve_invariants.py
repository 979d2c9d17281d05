"""Invariants of a handful of curves: discriminant, j, count, trace,
Hasse invariant, and the class of the kernel of Frobenius.

Run with: python3 demos/curve_invariants.py
"""

from hasseforms import (
    hasse_invariant,
    kernel_of_frobenius,
    make_field,
    phi,
    point_count,
)
from hasseforms.curve import WeierstrassCurve


def describe(curve):
    fd = point_count(curve)
    a = hasse_invariant(curve)
    aq = hasse_invariant(curve, level="q")
    print(f"{curve!r}")
    print(f"  discriminant {curve.discriminant}, j = {curve.j_invariant}")
    print(f"  #E = {fd.count}, beta = {fd.beta}, A_p = {a}, A_q = {aq}")
    k = kernel_of_frobenius(curve)
    if k.supersingular:
        print("  supersingular: ker(F) is the infinitesimal self-dual form")
    else:
        print(f"  ker(F) class exp {k.hasse_class.exp}, residue {int(phi(k.hasse_class))}")
    print()


def main():
    f5 = make_field(5)
    for a4, a6 in ((1, 0), (0, 1), (1, 1), (3, 0)):
        describe(WeierstrassCurve(f5, f5(a4), f5(a6)))

    # an extension field with a nontrivial a2 (characteristic 3 only)
    f9 = make_field(3, 2)
    t = f9((0, 1))
    describe(WeierstrassCurve(f9, f9.one, f9.one, a2=t))
    # boundary trace: supersingular curves over square fields can reach 2*sqrt(q)
    describe(WeierstrassCurve(f9, t, f9.zero))


if __name__ == "__main__":
    main()

"""The p-torsion subgroup scheme of every curve over F_5, summarized.

Ordinary curves split into a multiplicative form (the Hasse class) plus
an etale algebra whose factor degrees all equal the order of that class;
supersingular curves give the single self-dual thickening labeled M2.

Run with: python3 demos/ptorsion_gallery.py
"""

from collections import Counter

from hasseforms import iter_curves, make_field, ptorsion_description


def main():
    ctx = make_field(5)
    shapes = Counter()
    for curve in iter_curves(ctx):
        desc = ptorsion_description(curve)
        if desc.supersingular:
            shapes["M2"] += 1
        else:
            degrees = ",".join(map(str, sorted(desc.etale_degrees)))
            shapes[f"class exp {desc.hasse_class.exp} / degrees [{degrees}]"] += 1

    print(f"p-torsion shapes over F_{ctx.q}:")
    for shape, count in sorted(shapes.items()):
        print(f"  {count:2d} curves: {shape}")

    print()
    for a4, a6 in ((3, 0), (1, 1), (0, 1)):
        curve = next(
            c for c in iter_curves(ctx) if (c.a4, c.a6) == (ctx(a4), ctx(a6)))
        desc = ptorsion_description(curve)
        print(f"{curve!r}: label {desc.label}", end="")
        if not desc.supersingular:
            print(f", degrees {sorted(desc.etale_degrees)}, "
                  f"j = {desc.j}, p-th root of j = {desc.j_p_root}")
        else:
            print()


if __name__ == "__main__":
    main()

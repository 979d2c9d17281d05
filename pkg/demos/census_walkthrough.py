"""Which unit classes are hit by curves: complete fields, gap fields,
and the failure of the realizable set to be a subgroup.

Run with: python3 demos/census_walkthrough.py
"""

import time

from hasseforms import census, make_field, realizable_set


def show(p, n=1):
    ctx = make_field(p, n)
    t0 = time.perf_counter()
    report = census(ctx)
    dt = time.perf_counter() - t0
    print(f"F_{ctx.q}: {report.verdict} ({dt:.2f}s)")
    if report.missing:
        print(f"  missing residues: {list(report.missing)}")
    hits = [e for e in report.entries if e.realizable][:3]
    for entry in hits:
        w = entry.witness
        print(f"  h = {entry.residue}: a4 = {list(w.a4)}, a6 = {list(w.a6)}, "
              f"#E = {w.count}, beta = {w.beta}")
    print()


def main():
    show(13)          # small prime fields are always complete
    show(19)          # first gap: 9 and 10 have no curve
    show(23)          # wider gap
    show(19, n=2)     # squaring the field closes every gap

    r = realizable_set(19)
    print("non-closure over F_19: 3 realizable?", 3 in r,
          " 9 = 3*3 realizable?", 9 in r)


if __name__ == "__main__":
    main()

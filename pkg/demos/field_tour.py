"""A short tour of the finite-field layer.

Run with: python3 demos/field_tour.py
"""

from hasseforms import discrete_log, make_field, norm_to_prime, quadratic_character


def main():
    for p, n in ((5, 1), (3, 2), (5, 2)):
        ctx = make_field(p, n)
        print(f"F_{ctx.q}  (p = {p}, n = {n})")
        if ctx.modulus:
            print(f"  modulus: {ctx.modulus_str()}")
        g = ctx.generator
        print(f"  generator: {g}")
        print(f"  norm of generator down to F_{p}: {norm_to_prime(g)}")
        squares = sum(1 for x in ctx.iter_elements() if quadratic_character(x) == 1)
        print(f"  nonzero squares: {squares} of {ctx.q - 1}")
        print(f"  discrete log of 2: {discrete_log(ctx(2))}")
        print()

    # characteristic 3 sample: (t+1)^k walks the whole unit group of F_9
    ctx = make_field(3, 2)
    g = ctx.generator
    cycle = " -> ".join(str(g ** k) for k in range(8))
    print(f"powers of {g} in F_9: {cycle}")


if __name__ == "__main__":
    main()

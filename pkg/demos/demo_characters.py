"""Character calculus walk-through.

Dimensions, plethysms, and the graded characters that organize everything
else: how much of Sym^l(S_3) a given locus ideal can possibly occupy.
"""

from ternary_cubics import characters as ch


def main():
    print("== irreducible dimensions ==")
    for a, b in [(1, 0), (2, 1), (3, 0), (4, 2), (5, 1), (5, 4)]:
        print(f"  S({a},{b})  dim {ch.dim_irrep(a, b)}")

    s3 = ch.weyl_character(3, 0)
    print("\n== symmetric powers of the 10-dimensional cubic space ==")
    for ell in range(1, 5):
        c = ch.sym_power(ell, s3)
        dec = ch.decompose(c)
        body = " + ".join(f"{m}({a},{b})" if m > 1 else f"({a},{b})"
                          for (a, b), m in dec)
        print(f"  Sym^{ell}: dim {c.dimension():5d} = {body}")

    print("\n== where the locus equations live ==")
    print("  cube locus:      Sym^2 contains (4,2), dim 27  -> 27 quadrics")
    print("  two-line loci:   Sym^3 contains (3,3)+(3,0), dim 20 -> 20 cubics")
    print("  triangle locus:  Sym^4 contains (5,1), dim 35  -> 35 quartics")
    sym8 = ch.sym_power(8, s3)
    print(f"  conic+line:      Sym^8 (dim {sym8.dimension()}) contains (5,4) "
          f"with multiplicity {ch.multiplicity(sym8, (5, 4))} -> 35 octics")

    print("\n== duality ==")
    for ab in [(4, 2), (5, 1), (3, 0)]:
        print(f"  ({ab[0]},{ab[1]})* = {ch.dual_weight(*ab)}")


if __name__ == "__main__":
    main()

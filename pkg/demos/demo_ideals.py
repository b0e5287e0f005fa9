"""Computing the defining equations of the decomposability loci.

For each locus, the graded piece of its ideal in a chosen degree is the
kernel of the substitution map Sym^l(S_3)* -> functions of the parameters.
The kernel is computed blockwise by torus weight, modulo two independent
primes, and decomposed into irreducibles from its character.
"""

from ternary_cubics import ideals, loci


def fmt(dec):
    return " + ".join(f"{m}({a},{b})" if m > 1 else f"({a},{b})"
                      for (a, b), m in dec) or "0"


def main():
    print("== generators of the six ideals ==")
    for lid in loci.LOCI:
        for deg in loci.GENERATOR_DEGREES[lid]:
            gp = ideals.graded_kernel(lid, deg)
            print(f"  {lid:6s} degree {deg}: dim {gp.dimension():3d} = "
                  f"{fmt(gp.decomposition)}")

    print("\n== first syzygies ==")
    for lid in ("equiv", "neq", "delta"):
        sp = ideals.syzygy_kernel(lid)
        print(f"  {lid:6s}: {sp.n_generators} generators, "
              f"{sp.dimension()} linear syzygies = {fmt(sp.decomposition)}")

    print("\n== Hilbert function by evaluation (cube locus) ==")
    for ell in range(1, 6):
        print(f"  H({ell}) = {ideals.hilbert_value('equiv', ell)}")

    print("\n== explicit relations among the 27 cube-locus quadrics ==")
    counts = ideals.syzygy_relation_check()
    print(f"  relation counts: {counts}  (total {sum(counts.values())})")


if __name__ == "__main__":
    main()

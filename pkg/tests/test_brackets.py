"""Bracket parser, expansion engine, and catalog oracles."""

import random
from math import factorial

import pytest

from ternary_cubics import brackets as br
from ternary_cubics import loci
from ternary_cubics.poly import A_EXPS, Poly


def cube_coefficients(b):
    """a-vector of (b1 x1 + b2 x2 + b3 x3)^3."""
    out = []
    for e in A_EXPS:
        c = factorial(3) // (factorial(e[0]) * factorial(e[1]) * factorial(e[2]))
        out.append(c * b[0] ** e[0] * b[1] ** e[1] * b[2] ** e[2])
    return out


# --- parser -----------------------------------------------------------------

def test_parse_simple():
    expr = br.parse("(alpha beta u)^2 alpha_x beta_x")
    assert len(expr.terms) == 1
    t = expr.terms[0]
    assert t.coeff == 1
    assert dict(t.factors) == {
        br.Det3(("alpha", "beta", "u")): 2,
        br.Pair("alpha", "x"): 1, br.Pair("beta", "x"): 1}


def test_parse_sums_and_coefficients():
    expr = br.parse("2 alpha_x^3 - 1/3 (alpha beta u) alpha_x^2 beta_x")
    assert len(expr.terms) == 2
    assert expr.terms[0].coeff == 2
    assert expr.terms[1].coeff == -br.Fraction(1, 3)


def test_syntax_errors_carry_position():
    with pytest.raises(br.BracketSyntaxError, match="position"):
        br.parse("(alpha beta u alpha_x")
    with pytest.raises(br.BracketSyntaxError, match="position"):
        br.parse("alpha_x @")
    with pytest.raises(br.BracketSyntaxError):
        br.parse("(alpha alpha u) alpha_x")   # repeated row
    with pytest.raises(br.BracketSyntaxError):
        br.parse("")


def test_type_errors():
    # greek letter must appear exactly three times
    with pytest.raises(br.BracketTypeError, match="beta"):
        br.validate(br.parse("(alpha beta u)^2 alpha_x"))
    # terms of mixed type cannot be summed
    with pytest.raises(br.BracketTypeError, match="mixed"):
        br.validate(br.parse(
            "(alpha beta u)^2 alpha_x beta_x + (alpha beta u)^3"))


# --- expansion oracles ------------------------------------------------------

def test_catalog_types_match():
    for name, declared in br.CATALOG_TYPES.items():
        conc = br.catalog_concomitant(name)
        assert not conc.is_zero, name
        assert conc.ctype.as_tuple() == declared, name
        # degrees of the expanded polynomial agree with the type
        ell, m, n = declared
        assert conc.poly.degree(families={"a"}) == ell
        assert conc.poly.degree(families={"x"}) == m
        assert conc.poly.degree(families={"u"}) == n


def test_psi_extra_degrees():
    for name in ("Psi54", "Psi51", "Psi42", "Psi21"):
        conc = br.catalog_concomitant(name)
        dy = conc.poly.degree(families={"y"})
        dv = conc.poly.degree(families={"v"})
        assert conc.ctype.extra == (dy, dv)


def test_invariants_on_cube_of_linear_form():
    """Concomitants that must die on F = L^3: the Hessian and Phi222."""
    rng = random.Random(3)
    for _ in range(5):
        b = [rng.randint(-5, 5) for _ in range(3)]
        if not any(b):
            continue
        a = cube_coefficients(b)
        for name in ("Phi330", "Phi222", "Phi400"):
            conc = br.catalog_concomitant(name)
            assert not br.evaluate_at_cubic(conc, a), (name, b)


def test_hessian_proportional_to_oracle():
    rng = random.Random(7)
    conc = br.catalog_concomitant("Phi330")
    ratio = None
    for _ in range(6):
        a = [rng.randint(-9, 9) for _ in range(10)]
        got = br.evaluate_at_cubic(conc, a)
        want = br.hessian_oracle(a)
        if not want:
            assert not got
            continue
        mo = next(iter(want.terms))
        r = br.Fraction(got.terms.get(mo, 0), want.terms[mo])
        assert got == want * r
        if ratio is None:
            ratio = r
        assert r == ratio
    assert ratio is not None and ratio != 0


def test_phi406_equals_dual_curve_variant():
    a = br.catalog_concomitant("Phi406")
    b = br.catalog_concomitant("Phi406_dualcurve")
    assert a.poly == b.poly


def test_phi400_vanishing_pattern():
    conc = br.catalog_concomitant("Phi400")
    fermat = loci.NAMED_CUBICS["fermat"]
    assert br.evaluate_at_cubic(conc, fermat) == Poly()
    assert br.evaluate_at_cubic(conc, [1] + [0] * 9) == Poly()
    rng = random.Random(11)
    a = [rng.randint(-9, 9) for _ in range(10)]
    assert br.evaluate_at_cubic(conc, a)


def test_phi400_times_phi441_type():
    p = (br.catalog_concomitant("Phi400").poly
         * br.catalog_concomitant("Phi441").poly)
    assert p.degree(families={"a"}) == 8
    assert p.degree(families={"x"}) == 4
    assert p.degree(families={"u"}) == 1
    assert p


def test_vanishes_at_cubic_matches_substitution():
    conc = br.catalog_concomitant("Phi222")
    p = 1000003
    b = [2, -3, 5]
    a = cube_coefficients(b)
    assert br.vanishes_at_cubic(conc, a, p)
    rng = random.Random(13)
    a2 = [rng.randint(1, 20) for _ in range(10)]
    assert not br.vanishes_at_cubic(conc, a2, p)


def test_catalog_unknown_name():
    with pytest.raises(KeyError):
        br.catalog("Phi999")

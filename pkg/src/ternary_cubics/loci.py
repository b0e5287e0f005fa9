"""The six decomposability loci in P^9 and their parameterizations.

Each locus is the image of a polynomial family F = (product of forms); forcing
F = sum a_r x^r gives the substitution map a_r = phi_r(params).  The families:

    equiv   F = L^3                      params b
    neq     F = L1^2 L2                  params b, c
    y       F = L1 L2 (s L1 + t L2)      params b, c, s, t
    delta   F = L1 L2 L3                 params b, c, d
    tact    F = L (L M + K^2)            params b (L), m (M), k (K)
    empty   F = Q L                      params q (conic), b

The concurrent-lines locus X_Y is parameterized through L3 = s L1 + t L2,
which forces the concurrency determinant to vanish identically; the tangency
locus X_tact through the pencil form L M + K^2 of a conic tangent to L at
{K = L = 0}.  Both families dominate their loci, which is all the kernel
computations need.

The tact invariant of a conic and a line (the tangency condition) is computed
from scratch: Res = Resultant(Q, L; x2), T' = Discriminant(Res, x1), and
T = T' / b2^2 exactly as polynomials.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .poly import (A_EXPS, Poly, Q_EXPS, generic_quadric, linear_form, monomial,
                   mono_weight, x_monomials)

LOCI = ("equiv", "neq", "y", "delta", "tact", "empty")

LOCUS_DIM = {"equiv": 2, "neq": 4, "y": 5, "delta": 6, "tact": 6, "empty": 7}

# generator degrees of the defining ideals (column 0 of the Betti tables)
GENERATOR_DEGREES = {
    "equiv": (2,), "neq": (3,), "y": (3,), "delta": (4,),
    "tact": (4, 5), "empty": (8,),
}


@dataclass
class LocusSpec:
    id: str
    params: list
    phi: list          # ten Polys, phi[r] = image of a_r
    dim: int
    families: list = field(default_factory=list)


def _coefficients_of_cubic(F):
    """Split a cubic form in x into its ten a-coefficients (graded-lex)."""
    by_x = F.collect({"x"})
    out = []
    for r, e in enumerate(A_EXPS):
        key = monomial([(f"x{i + 1}", e[i]) for i in range(3)])
        out.append(by_x.get(key, Poly()))
    return out


@lru_cache(maxsize=None)
def substitution_map(locus):
    """The LocusSpec with its ten substitution polynomials."""
    if locus not in LOCI:
        raise ValueError(f"unknown locus {locus!r}; have {LOCI}")
    L1 = linear_form("b")
    if locus == "equiv":
        F = L1 * L1 * L1
        fams = ["b"]
    elif locus == "neq":
        F = L1 * L1 * linear_form("c")
        fams = ["b", "c"]
    elif locus == "y":
        L2 = linear_form("c")
        L3 = Poly.var("s") * L1 + Poly.var("t") * L2
        F = L1 * L2 * L3
        fams = ["b", "c", "s", "t"]
    elif locus == "delta":
        F = L1 * linear_form("c") * linear_form("d")
        fams = ["b", "c", "d"]
    elif locus == "tact":
        M = linear_form("m")
        K = linear_form("k")
        F = L1 * (L1 * M + K * K)
        fams = ["b", "m", "k"]
    else:  # empty
        F = generic_quadric() * L1
        fams = ["q", "b"]
    phi = _coefficients_of_cubic(F)
    params = []
    for fam in fams:
        if fam in ("s", "t"):
            params.append(fam)
        elif fam == "q":
            params.extend(f"q{i}" for i in range(1, 7))
        else:
            params.extend(f"{fam}{i}" for i in range(1, 4))
    return LocusSpec(locus, params, phi, LOCUS_DIM[locus], fams)


def concurrency_det(b, c, d):
    """3x3 determinant with rows b, c, d (the lines-concurrent condition)."""
    return (b[0] * (c[1] * d[2] - c[2] * d[1])
            - b[1] * (c[0] * d[2] - c[2] * d[0])
            + b[2] * (c[0] * d[1] - c[1] * d[0]))


def _seed_key(seed):
    """Accept tuples and other structured seeds via a stable repr."""
    return seed if isinstance(seed, (int, str, bytes, type(None))) else repr(seed)


def sample(locus, seed, p=None, max_redraws=50):
    """A cubic point on the locus: substitute random parameters into phi.

    Integer parameters in [-20, 20] (exact mode) or uniform residues mod p.
    Redraws on the zero vector; raises after max_redraws failures.
    """
    spec = substitution_map(locus)
    rng = random.Random(_seed_key(seed))
    for _ in range(max_redraws):
        if p is None:
            vals = {v: rng.randint(-20, 20) for v in spec.params}
        else:
            vals = {v: rng.randrange(p) for v in spec.params}
        point = tuple(phi.evaluate(vals, p) for phi in spec.phi)
        if any(point):
            return point
    raise RuntimeError(f"sampler exhausted after {max_redraws} redraws")


def sample_params(locus, seed, p):
    """Random parameter values mod p (used by the Hilbert-function sampler)."""
    spec = substitution_map(locus)
    rng = random.Random(_seed_key(seed))
    return {v: rng.randrange(p) for v in spec.params}


# ---------------------------------------------------------------------------
# Tact invariant
# ---------------------------------------------------------------------------

def _affine_conic():
    """Q = q1 x1^2 + q2 x2^2 + q3 x1x2 + q4 x1 + q5 x2 + q6 (x3 = 1 chart)."""
    q = [Poly.var(f"q{i}") for i in range(1, 7)]
    x1, x2 = Poly.var("x1"), Poly.var("x2")
    return q[0] * x1 * x1 + q[1] * x2 * x2 + q[2] * x1 * x2 + q[3] * x1 + q[4] * x2 + q[5]


def _affine_line():
    b = [Poly.var(f"b{i}") for i in range(1, 4)]
    x1, x2 = Poly.var("x1"), Poly.var("x2")
    return b[0] * x1 + b[1] * x2 + b[2]


def _coeffs_in(pl, var, maxdeg):
    out = [Poly() for _ in range(maxdeg + 1)]
    for mo, c in pl.terms.items():
        d = dict(mo)
        e = d.pop(var, 0)
        out[e] = out[e] + Poly({monomial(d.items()): c})
    return out


@lru_cache(maxsize=None)
def tact_polynomial():
    """The tact invariant T(q, b) as an exact Poly.

    Res(Q, L; x2) for Q quadratic and L linear in x2 is A2 B0^2 - A1 B0 B1
    + A0 B1^2; its x1-discriminant is divisible by b2^2, and the quotient is T.
    """
    Q = _affine_conic()
    L = _affine_line()
    A = _coeffs_in(Q, "x2", 2)   # A[k]: coefficient of x2^k (Poly in x1, q)
    B = _coeffs_in(L, "x2", 1)
    res = A[2] * B[0] * B[0] - A[1] * B[0] * B[1] + A[0] * B[1] * B[1]
    C = _coeffs_in(res, "x1", 2)
    # sign convention: 4*C2*C0 - C1^2, so tangency from outside gives the
    # same signs as the classical 12-term expansion
    disc = 4 * C[2] * C[0] - C[1] * C[1]
    # exact division by b2^2
    out = Poly()
    for mo, c in disc.terms.items():
        d = dict(mo)
        if d.get("b2", 0) < 2:
            raise ArithmeticError("discriminant not divisible by b2^2")
        d["b2"] -= 2
        out = out + Poly({monomial(d.items()): c})
    return out


def tact_invariant(q, b):
    """Evaluate the tact invariant at conic coefficients q (6) and line b (3)."""
    vals = {f"q{i + 1}": q[i] for i in range(6)}
    vals.update({f"b{i + 1}": b[i] for i in range(3)})
    return tact_polynomial().evaluate(vals)


def tact_printed_formula():
    """The classical explicit 12-term expansion, for cross-checking."""
    q1, q2, q3, q4, q5, q6 = (Poly.var(f"q{i}") for i in range(1, 7))
    b1, b2, b3 = (Poly.var(f"b{i}") for i in range(1, 4))
    return (4 * q2 * q6 * b1 * b1 - 4 * q2 * q4 * b1 * b3 + 4 * q1 * q2 * b3 * b3
            - q5 * q5 * b1 * b1 - 4 * q3 * q6 * b1 * b2 + 2 * q4 * q5 * b1 * b2
            + 2 * q3 * q5 * b1 * b3 - q4 * q4 * b2 * b2 - 4 * q1 * q5 * b2 * b3
            + 2 * q3 * q4 * b2 * b3 - q3 * q3 * b3 * b3 + 4 * q1 * q6 * b2 * b2)


def on_locus_check(locus, point, p=1000003):
    """Probabilistic membership: do all degree-0 ideal generators vanish at F?

    Generators come from ideals.graded_kernel; raises if that computation is
    unavailable for the locus.
    """
    from . import ideals

    vanishes = True
    for j in GENERATOR_DEGREES[locus]:
        piece = ideals.graded_kernel(locus, j, primes=(p,), with_basis=True)
        if not piece.has_bases():
            raise RuntimeError(f"generator set for {locus} degree {j} not computed")
        if not piece.vanishes_at(point, p):
            vanishes = False
    return vanishes


NAMED_CUBICS = {
    "fermat": (1, 0, 0, 0, 0, 0, 1, 0, 0, 1),      # x1^3 + x2^3 + x3^3
    "triangle": (0, 0, 0, 0, 1, 0, 0, 0, 0, 0),    # x1 x2 x3
    "cuspidal": (1, 0, 0, 0, 0, 0, 0, -1, 0, 0),   # x1^3 - x2^2 x3
}

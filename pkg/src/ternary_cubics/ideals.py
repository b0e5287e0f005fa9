"""Graded pieces of the defining ideals of the six loci.

The degree-j piece of the ideal of a locus is the kernel of the substitution
map R_j -> k[params]: send each degree-j monomial in a0..a9 to its image under
a_r -> phi_r(params).  The map preserves torus weight, so the kernel splits
into weight blocks; each block is a small exact nullspace mod p, and the block
nullities assemble into the character of the graded piece.

Monomials in the a-variables are encoded as nondecreasing tuples of indices
(a0 a0 a3 = (0, 0, 3)); building them by appending indices >= the last one
makes the monomials of all degrees a tree, and images are computed by a
depth-first walk that keeps only the current path in memory.

Hilbert function values come from evaluation instead: the rank of the matrix
of monomial values at random points of the locus, again block by block.

Syzygies among the degree-j generators are the kernel of the multiplication
map (generators) x (linear forms) -> R_{j+1}; this needs no substitution
images in degree j+1, only monomial bookkeeping.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import brackets, linalg, loci, tableaux
from .characters import Character, decompose
from .poly import A_EXPS, monomial

_SHIFT = 6  # exponent-vector packing: 6 bits per parameter


# ---------------------------------------------------------------------------
# a-monomial bookkeeping
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def monomials_by_weight(degree):
    """Degree-`degree` monomials in a0..a9 grouped by weight.

    Returns ({weight: [index-tuple, ...]}, {weight: {index-tuple: position}}).
    Tuples are nondecreasing; order within a block is generation order.
    """
    blocks = {}
    stack = [((), (0, 0, 0), 0)]
    while stack:
        mono, w, lo = stack.pop()
        if len(mono) == degree:
            blocks.setdefault(w, []).append(mono)
            continue
        for r in range(9, lo - 1, -1):
            e = A_EXPS[r]
            stack.append((mono + (r,), (w[0] + e[0], w[1] + e[1], w[2] + e[2]), r))
    index = {w: {m: i for i, m in enumerate(ms)} for w, ms in blocks.items()}
    return blocks, index


def mono_tuple_to_poly_mono(mono):
    counts = {}
    for r in mono:
        counts[r] = counts.get(r, 0) + 1
    return monomial([(f"a{r}", e) for r, e in counts.items()])


def poly_to_block_vectors(pl, degree):
    """Split an a-polynomial into {weight: dense coefficient list} vectors."""
    blocks, index = monomials_by_weight(degree)
    out = {}
    for mo, c in pl.terms.items():
        idxs = []
        for v, e in mo:
            if not v.startswith("a"):
                raise ValueError(f"non-a variable {v} in ideal element")
            idxs.extend([int(v[1:])] * e)
        mono = tuple(sorted(idxs))
        if len(mono) != degree:
            raise ValueError("polynomial not homogeneous of the right degree")
        w = tuple(sum(A_EXPS[r][i] for r in mono) for i in range(3))
        if w not in out:
            out[w] = [0] * len(blocks[w])
        out[w][index[w][mono]] += c
    return out


# ---------------------------------------------------------------------------
# substitution images, depth first
# ---------------------------------------------------------------------------

def _encoded_phi(locus, p):
    """phi_r as {packed exponent vector: coeff mod p}, r = 0..9."""
    spec = loci.substitution_map(locus)
    pidx = {v: i for i, v in enumerate(spec.params)}
    out = []
    for phi in spec.phi:
        d = {}
        for mo, c in phi.terms.items():
            key = 0
            for v, e in mo:
                key += e << (_SHIFT * pidx[v])
            d[key] = int(c) % p
        out.append(d)
    return out


def _image_blocks(locus, degree, p):
    """Per-weight substitution matrices, transposed for nullspace extraction.

    Returns {weight: (monos, ndarray of shape (n_param_keys, n_monos))}: the
    column space is indexed by the block's monomials, so nullspace vectors are
    ideal elements.
    """
    phi = _encoded_phi(locus, p)
    rows = {}      # weight -> list of (colkeys dict is shared) sparse rows
    keyidx = {}    # weight -> {packed param key: row index}
    blocks, _ = monomials_by_weight(degree)

    # stack entries: (mono, weight, image dict); children append one index
    stack = [((), (0, 0, 0), {0: 1})]
    while stack:
        mono, w, img = stack.pop()
        if len(mono) == degree:
            ki = keyidx.setdefault(w, {})
            cols = rows.setdefault(w, [])
            entries = []
            for k, c in img.items():
                i = ki.setdefault(k, len(ki))
                entries.append((i, c))
            cols.append(entries)
            continue
        lo = mono[-1] if mono else 0
        # push descending so monomials pop in the generation order used by
        # monomials_by_weight, keeping matrix columns aligned with `monos`
        for r in range(9, lo - 1, -1):
            e = A_EXPS[r]
            child = {}
            for k1, c1 in img.items():
                for k2, c2 in phi[r].items():
                    k = k1 + k2
                    c = child.get(k, 0) + c1 * c2
                    child[k] = c % p
            child = {k: c for k, c in child.items() if c}
            stack.append((mono + (r,),
                          (w[0] + e[0], w[1] + e[1], w[2] + e[2]), child))

    out = {}
    for w, monos in blocks.items():
        cols = rows.get(w, [])
        nk = len(keyidx.get(w, {}))
        A = np.zeros((nk, len(monos)), dtype=np.int64)
        # columns were appended in the stack's generation order, which matches
        # monomials_by_weight (same traversal)
        for j, entries in enumerate(cols):
            for i, c in entries:
                A[i, j] = c
        out[w] = (monos, A)
    return out


# ---------------------------------------------------------------------------
# graded kernels
# ---------------------------------------------------------------------------

@dataclass
class GradedPiece:
    locus: str
    degree: int
    primes: tuple
    block_nullities: dict            # weight -> nullity
    character: Character
    decomposition: list              # [((a, b), mult)]
    bases: dict = None               # prime -> {weight: (monos, basis ndarray)}

    def dimension(self):
        return sum(self.block_nullities.values())

    def has_bases(self):
        return bool(self.bases)

    def vanishes_at(self, point, p):
        """Do all kernel basis vectors vanish at the cubic `point` (mod p)?"""
        basis = self.bases.get(p) or next(iter(self.bases.values()))
        pv = [x % p for x in point]
        for monos, B in basis.values():
            vals = np.array([_mono_value(m, pv, p) for m in monos], dtype=np.int64)
            if np.any((B @ vals) % p):
                return False
        return True

    def basis_polynomials(self, p=None):
        """Kernel basis as integer-coefficient Polys (coefficients mod p)."""
        from .poly import Poly

        basis = self.bases[p] if p else next(iter(self.bases.values()))
        out = []
        for w in sorted(basis):
            monos, B = basis[w]
            for row in B:
                out.append(Poly({mono_tuple_to_poly_mono(m): int(c)
                                 for m, c in zip(monos, row) if c}))
        return out


def _mono_value(mono, point_vals, p):
    acc = 1
    for r in mono:
        acc = acc * point_vals[r] % p
    return acc


_KERNEL_CACHE = {}


def graded_kernel(locus, degree, primes=linalg.DEFAULT_PRIMES, with_basis=False):
    """The degree-`degree` piece of the ideal of `locus`.

    Block nullities are computed independently modulo every prime in `primes`
    and must agree; disagreement raises UnluckyPrimeError.
    """
    primes = tuple(primes)
    cached = _KERNEL_CACHE.get((locus, degree))
    if cached is None:
        cached = _KERNEL_CACHE[(locus, degree)] = {}
    nullities = None
    bases = {}
    for p in primes:
        if p in cached:
            blocks = cached[p]
        else:
            blocks = {}
            for w, (monos, A) in _image_blocks(locus, degree, p).items():
                N = linalg.nullspace_mod(A, p)
                # basis vectors as rows over the block's monomials
                blocks[w] = (monos, N.T.copy(), N.shape[1])
            cached[p] = blocks
        nn = {w: null for w, (_, _, null) in blocks.items() if null}
        if nullities is None:
            nullities = nn
        elif nullities != nn:
            raise linalg.UnluckyPrimeError(
                f"kernel of {locus} degree {degree}: block nullities disagree "
                f"between primes {primes}")
        if with_basis:
            bases[p] = {w: (monos, B) for w, (monos, B, null) in blocks.items() if null}
    ch = Character()
    for w, n in nullities.items():
        ch.add(w, n)
    dec = decompose(ch) if ch else []
    return GradedPiece(locus, degree, primes, nullities, ch, dec,
                       bases if with_basis else None)


# ---------------------------------------------------------------------------
# Hilbert function values by evaluation
# ---------------------------------------------------------------------------

def hilbert_value(locus, degree, prime=linalg.DEFAULT_PRIMES[0], seed=0, margin=12):
    """H(locus, degree): rank of the monomial evaluation matrix at random points.

    Monte Carlo (one-sided): the result is a lower bound that equals the true
    value for generic points; `margin` extra points past the largest block
    size make undercounts vanishingly unlikely.
    """
    blocks, _ = monomials_by_weight(degree)
    npoints = max(len(ms) for ms in blocks.values()) + margin
    spec = loci.substitution_map(locus)
    pts = [loci.sample_params(locus, (seed, k), prime) for k in range(npoints)]
    phival = np.zeros((10, npoints), dtype=np.int64)
    for r in range(10):
        for k, vals in enumerate(pts):
            phival[r, k] = spec.phi[r].evaluate(vals, prime)

    mats = {w: np.zeros((len(ms), npoints), dtype=np.int64)
            for w, ms in blocks.items()}
    fill = {w: 0 for w in blocks}
    stack = [((), (0, 0, 0), np.ones(npoints, dtype=np.int64))]
    while stack:
        mono, w, vals = stack.pop()
        if len(mono) == degree:
            mats[w][fill[w]] = vals
            fill[w] += 1
            continue
        lo = mono[-1] if mono else 0
        for r in range(9, lo - 1, -1):
            e = A_EXPS[r]
            stack.append((mono + (r,),
                          (w[0] + e[0], w[1] + e[1], w[2] + e[2]),
                          vals * phival[r] % prime))
    # note: stack order differs from monomials_by_weight here, but rank does
    # not depend on row order
    return sum(linalg.rank_mod(A, prime) for A in mats.values())


# ---------------------------------------------------------------------------
# syzygies
# ---------------------------------------------------------------------------

@dataclass
class SyzygyPiece:
    locus: str
    degree: int                      # degree of the generators
    primes: tuple
    n_generators: int
    block_nullities: dict
    character: Character
    decomposition: list

    def dimension(self):
        return sum(self.block_nullities.values())


def syzygy_kernel(locus, degree=None, primes=linalg.DEFAULT_PRIMES):
    """Linear syzygies among the degree-`degree` generators of the ideal.

    The syzygy space is the kernel of (generators) (x) R_1 -> R_{degree+1},
    xi -> sum xi_{i,r} g_i a_r.  Weight-blocked; checked over every prime.
    """
    if degree is None:
        degree = loci.GENERATOR_DEGREES[locus][0]
    primes = tuple(primes)
    gp = graded_kernel(locus, degree, primes, with_basis=True)
    _, idx_up = monomials_by_weight(degree + 1)

    nullities = None
    ngens = gp.dimension()
    for p in primes:
        basis = gp.bases[p]
        # rows of the syzygy system, grouped by weight of g_i * a_r
        cols = {}           # weight -> list of {row-position: coeff}
        for w in sorted(basis):
            monos, B = basis[w]
            for gvec in B:
                for r in range(10):
                    e = A_EXPS[r]
                    wr = (w[0] + e[0], w[1] + e[1], w[2] + e[2])
                    up = idx_up[wr]
                    col = {}
                    for m, c in zip(monos, gvec):
                        if c:
                            child = tuple(sorted(m + (r,)))
                            i = up[child]
                            col[i] = (col.get(i, 0) + int(c)) % p
                    cols.setdefault(wr, []).append(col)
        nn = {}
        for wr, collist in cols.items():
            nrows = len(idx_up[wr])
            A = np.zeros((nrows, len(collist)), dtype=np.int64)
            for j, col in enumerate(collist):
                for i, c in col.items():
                    A[i, j] = c
            null = linalg.nullity_mod(A, p)
            if null:
                nn[wr] = null
        if nullities is None:
            nullities = nn
        elif nullities != nn:
            raise linalg.UnluckyPrimeError(
                f"syzygies of {locus} degree {degree}: block nullities "
                f"disagree between primes {primes}")
    ch = Character()
    for w, n in nullities.items():
        ch.add(w, n)
    dec = decompose(ch) if ch else []
    return SyzygyPiece(locus, degree, primes, ngens, nullities, ch, dec)


# ---------------------------------------------------------------------------
# concomitants versus kernels
# ---------------------------------------------------------------------------

def concomitant_coefficients(name):
    """Coefficients of a catalog concomitant on its tableau basis.

    Returns (coeffs, tableaux): Polys in the a-variables (and y, v for the
    syzygy concomitants), one per tableau of the (x, u) shape.
    """
    c = brackets.catalog_concomitant(name)
    coeffs, tabs, _ = tableaux.harmonic_project(c.poly)
    return coeffs, tabs


def isotypic_match(name, locus, degree, primes=linalg.DEFAULT_PRIMES):
    """Does the coefficient span of a concomitant lie in the degree-j kernel?

    Each tableau coefficient is reduced to its weight-block vector and tested
    for membership in the block's kernel row span, over every prime.
    """
    gp = graded_kernel(locus, degree, primes, with_basis=True)
    coeffs, tabs = concomitant_coefficients(name)
    for p in primes:
        basis = gp.bases[p]
        for f in coeffs:
            if not f:
                continue
            for w, vec in poly_to_block_vectors(f, degree).items():
                if w not in basis:
                    return False
                _, B = basis[w]
                v = np.array([int(x) % p for x in vec], dtype=np.int64)
                if not linalg.in_rowspan_mod(B, v, p):
                    return False
    return True


def syzygy_relation_check():
    """The explicit linear syzygies among the 27 cube-locus equations.

    The generators f_T are the tableau coefficients of the degree-2 symbolic
    concomitant of type (2, 2, 2).  Each relation concomitant Psi, projected
    onto the same (x, u) tableau basis and contracted with the f_T through the
    invariant pairing on that basis (coefficient-by-coefficient contraction is
    not equivariant: the pairing needs the Gram matrix of the trace-free
    representatives), yields a bihomogeneous polynomial in (y, v) whose
    harmonic coefficients all vanish identically -- one relation per tableau
    of the (y, v) shape.  Returns {name: number of relations}; raises
    AssertionError on a nonzero coefficient.
    """
    from .poly import Poly

    f, tabs = concomitant_coefficients("Phi222")
    G = tableaux.invariant_gram(2, 2)
    counts = {}
    for name in ("Psi54", "Psi51", "Psi42", "Psi21"):
        c, tabs2 = concomitant_coefficients(name)
        if tabs2 != tabs:
            raise RuntimeError(f"{name} does not share the (x,u) shape of Phi222")
        R = Poly()
        for i in range(len(tabs)):
            if not c[i]:
                continue
            for j in range(len(tabs)):
                if G[i][j]:
                    R = R + (c[i] * f[j]) * G[i][j]
        h, _, _ = tableaux.harmonic_project(R, point="y", line="v")
        for hS in h:
            assert not hS, f"{name}: nonzero syzygy coefficient {hS!r}"
        dy, dv = brackets.catalog_concomitant(name).ctype.extra
        counts[name] = len(tableaux.enumerate_tableaux(dv, dy))
    return counts


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def piece_to_dict(piece):
    return {
        "locus": piece.locus,
        "degree": piece.degree,
        "primes": list(piece.primes),
        "dimension": piece.dimension(),
        "blocks": [{"weight": list(w), "nullity": n}
                   for w, n in sorted(piece.block_nullities.items())],
        "character": [{"a": a, "b": b, "mult": m}
                      for (a, b), m in piece.decomposition],
    }

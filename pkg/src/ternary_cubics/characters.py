"""SL3 weight and character calculus.

A character is a finitely supported integer-valued function on torus weights.
Weights live in Z^3 modulo the diagonal (1,1,1); we store the normalized
representative with min coordinate 0.  Virtual characters (negative
multiplicities) are first-class, so alternating sums of complexes are directly
representable.

Irreducibles are labelled by dominant pairs (a, b) with a >= b >= 0; the pair
(a, b) names the module with highest weight (a, b, 0), of dimension
(m+1)(n+1)(m+n+2)/2 where m = a-b, n = b.  Symmetric/exterior powers of
arbitrary characters go through Adams operations and Newton recurrences; hook
shapes (a, 1^b) are the only other plethysms ever needed.
"""

from functools import lru_cache
from itertools import permutations


def normalize(w):
    m = min(w)
    return (w[0] - m, w[1] - m, w[2] - m)


def dominant_pair(w):
    """The (a, b) label of the dominant representative of a weight orbit."""
    a, b, c = sorted(normalize(w), reverse=True)
    return (a - c, b - c)


class Character(dict):
    """Weight -> multiplicity map with the arithmetic of virtual characters."""

    def __init__(self, data=None):
        super().__init__()
        if data:
            for w, m in (data.items() if isinstance(data, dict) else data):
                self.add(w, m)

    def add(self, w, mult):
        if mult == 0:
            return
        w = normalize(tuple(w))
        m = self.get(w, 0) + mult
        if m:
            self[w] = m
        else:
            self.pop(w, None)

    def dimension(self):
        return sum(self.values())

    def __add__(self, other):
        out = Character(self)
        for w, m in other.items():
            out.add(w, m)
        return out

    def __sub__(self, other):
        out = Character(self)
        for w, m in other.items():
            out.add(w, -m)
        return out

    def __neg__(self):
        return Character({w: -m for w, m in self.items()})

    def scale(self, k):
        return Character({w: k * m for w, m in self.items()})

    def exact_div(self, k):
        if any(m % k for m in self.values()):
            raise ValueError(f"character not divisible by {k}")
        return Character({w: m // k for w, m in self.items()})

    def __mul__(self, other):
        """Tensor product: convolution of weight multiplicities."""
        out = Character()
        for w1, m1 in self.items():
            for w2, m2 in other.items():
                out.add((w1[0] + w2[0], w1[1] + w2[1], w1[2] + w2[2]), m1 * m2)
        return out

    def dual(self):
        return Character({normalize((-w[0], -w[1], -w[2])): m for w, m in self.items()})

    def is_weyl_symmetric(self):
        for w, m in self.items():
            for s in permutations(w):
                if self.get(normalize(s), 0) != m:
                    return False
        return True

    def is_genuine(self):
        return all(m >= 0 for m in self.values())


def char_zero():
    return Character()


def char_trivial():
    return Character({(0, 0, 0): 1})


def dim_irrep(a, b=None):
    """Dimension of the irreducible labelled (a, b): (m+1)(n+1)(m+n+2)/2."""
    if b is None:
        a, b = a
    if not (a >= b >= 0):
        raise ValueError("need a >= b >= 0")
    m, n = a - b, b
    return (m + 1) * (n + 1) * (m + n + 2) // 2


def dual_weight(a, b=None):
    """Dual irreducible label: (a, b) -> (a, a-b)."""
    if b is None:
        a, b = a
    return (a, a - b)


@lru_cache(maxsize=None)
def _h(k):
    """Character of Sym^k of the standard 3-dimensional module."""
    c = Character()
    if k < 0:
        return c
    for i in range(k + 1):
        for j in range(k - i + 1):
            c.add((i, j, k - i - j), 1)
    return c


@lru_cache(maxsize=None)
def weyl_character(a, b=0):
    """Character of the irreducible (a, b), by Jacobi-Trudi: h_a h_b - h_{a+1} h_{b-1}."""
    if not (a >= b >= 0):
        raise ValueError("need a >= b >= 0")
    return _h(a) * _h(b) - _h(a + 1) * _h(b - 1)


def irrep(a, b=0):
    return weyl_character(a, b)


def decompose(c):
    """Greedy peel into irreducibles: list of ((a, b), multiplicity).

    Repeatedly takes the lexicographically greatest support weight on
    sorted-descending triples (dominant by Weyl symmetry) and subtracts.
    Raises on non-Weyl-symmetric input; result reassembles exactly.
    """
    rem = Character(c)
    out = []
    while rem:
        w = max(rem, key=lambda t: sorted(t, reverse=True))
        ab = dominant_pair(w)
        mult = rem.get((ab[0], ab[1], 0), 0)
        if mult == 0:
            raise ValueError("character is not Weyl-symmetric")
        rem = rem - weyl_character(*ab).scale(mult)
        out.append((ab, mult))
        if len(out) > 100000:
            raise ValueError("decomposition does not terminate; input not Weyl-symmetric?")
    # validate Weyl symmetry via exact reassembly
    check = Character()
    for ab, m in out:
        check = check + weyl_character(*ab).scale(m)
    if check != Character(c):
        raise ValueError("character is not Weyl-symmetric")
    out.sort(key=lambda t: (-t[0][0], -t[0][1]))
    return out


def multiplicity(c, ab):
    """Coefficient of the irreducible (a, b) in the decomposition of c."""
    for pair, m in decompose(c):
        if pair == tuple(ab):
            return m
    return 0


def from_modules(pairs):
    """Character of a direct sum given as [(a, b), ...] or [((a, b), mult), ...]."""
    c = Character()
    for item in pairs:
        if len(item) == 2 and isinstance(item[0], tuple):
            (a, b), m = item
        else:
            (a, b), m = item, 1
        c = c + weyl_character(a, b).scale(m)
    return c


def adams(k, c):
    """k-th Adams operation: every weight w scaled to k*w."""
    if k < 1:
        raise ValueError("k >= 1")
    return Character({(k * w[0], k * w[1], k * w[2]): m for w, m in c.items()})


def sym_powers(lmax, c):
    """Characters of Sym^0..Sym^lmax of a genuine character, by Newton recurrence."""
    if not c.is_genuine():
        raise ValueError("sym_power needs a genuine (nonvirtual) character")
    hs = [char_trivial()]
    psums = [None] + [adams(i, c) for i in range(1, lmax + 1)]
    for ell in range(1, lmax + 1):
        acc = Character()
        for i in range(1, ell + 1):
            acc = acc + psums[i] * hs[ell - i]
        hs.append(acc.exact_div(ell))
    return hs


def sym_power(ell, c):
    if ell < 0:
        raise ValueError("ell >= 0")
    return sym_powers(ell, c)[ell]


def ext_powers(kmax, c):
    """Characters of wedge^0..wedge^kmax, by the elementary Newton recurrence."""
    es = [char_trivial()]
    psums = [None] + [adams(i, c) for i in range(1, kmax + 1)]
    for k in range(1, kmax + 1):
        acc = Character()
        for i in range(1, k + 1):
            term = psums[i] * es[k - i]
            acc = acc + (term if i % 2 == 1 else -term)
        es.append(acc.exact_div(k))
    return es


def ext_power(k, c):
    if k < 0:
        raise ValueError("k >= 0")
    if k > c.dimension():
        return Character()
    return ext_powers(k, c)[k]


def hook_schur(a, b, c):
    """Schur functor of hook shape (a, 1^b): sum_i (-1)^i h_{a+i} e_{b-i}."""
    if a < 1 or b < 0:
        raise ValueError("hook shape needs a >= 1, b >= 0")
    hs = sym_powers(a + b, c)
    es = ext_powers(b, c)
    acc = Character()
    for i in range(b + 1):
        term = hs[a + i] * es[b - i]
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


def format_decomposition(c):
    """Sigma shorthand, e.g. 'sigma(5,4) + 2 sigma(4,2)'."""
    parts = []
    for (a, b), m in decompose(c):
        label = f"sigma({a},{b})"
        parts.append(label if m == 1 else f"{m} {label}")
    return " + ".join(parts) if parts else "0"

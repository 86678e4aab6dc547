"""Affine Cartan data for the six twisted diagram types.

Each algebra is identified by a tag and a rank:

    tag         rank r      twist m   dim of first fundamental
    A2t2        1 (fixed)   2         3
    A2t2even    >= 2        2         2r+1
    A2t2odd     >= 3        2         2r
    Dt2         >= 2        2         2r+2
    E6t2        4 (fixed)   2         27
    D4t3        2 (fixed)   3         8

The node set is {0, 1, ..., r} with 0 the affine node.  `Dynkin` bundles
the affine Cartan matrix, the symmetrizing weights d_i (stored as
s-exponents 2*d_i so that the half-integer d_r = 1/2 of the even-A family
stays integral), the marks a_i spanning the kernel of the Cartan matrix,
and the diagram-automorphism bookkeeping (orbit-collapsed node classes)
that the monomial layer needs.

Conventions.  q_i = q^{d_i} = s^{sd[i]} where s = q^{1/2}.  The Cartan
matrix C is normalised so that D*C is symmetric with D = diag(d_i); the
finite part (rows/columns 1..r) is the Cartan matrix of the finite-type
subalgebra (A1, B_r, C_r, B_r, F4, G2 respectively).
"""

from fractions import Fraction

TAGS = ("A2t2", "A2t2even", "A2t2odd", "Dt2", "E6t2", "D4t3")

# Fixed ranks for the types that have no rank freedom.
_FIXED_RANK = {"A2t2": 1, "E6t2": 4, "D4t3": 2}
_MIN_RANK = {"A2t2even": 2, "A2t2odd": 3, "Dt2": 2}


class Dynkin:
    """Frozen affine Cartan datum for one (tag, rank) pair."""

    __slots__ = ("tag", "r", "m", "dim", "C", "sd", "sdt", "marks",
                 "fixed", "special", "c_h")

    def __init__(self, tag, r=None):
        if tag not in TAGS:
            raise ValueError(f"unknown type tag {tag!r}")
        if tag in _FIXED_RANK:
            want = _FIXED_RANK[tag]
            if r is None:
                r = want
            if r != want:
                raise ValueError(f"{tag} has fixed rank {want}, got {r}")
        else:
            if r is None or r < _MIN_RANK[tag]:
                raise ValueError(f"{tag} needs rank >= {_MIN_RANK[tag]}, got {r}")
        self.tag = tag
        self.r = r
        self.m = 3 if tag == "D4t3" else 2
        C = {}

        def put(i, j, v):
            C[(i, j)] = v

        n = r + 1
        for i in range(n):
            put(i, i, 2)

        if tag == "A2t2":
            put(0, 1, -1); put(1, 0, -4)
            sd2 = [4, 1]
            self.dim = 3
            fixed, special = frozenset(), frozenset({1})
            c_h = (3, 3)                       # -q^3
        elif tag == "A2t2even":
            # 0 = 1 - 2 - ... - (r-1) = r with doubled arrows at both ends.
            put(0, 1, -1); put(1, 0, -2)
            for i in range(1, r):
                put(i, i + 1, -1); put(i + 1, i, -1)
            C[(r, r - 1)] = -2
            sd2 = [4] + [2] * (r - 1) + [1]
            self.dim = 2 * r + 1
            fixed, special = frozenset(), frozenset({r})
            c_h = (3, 2 * r + 1)               # -q^(2r+1)
        elif tag == "A2t2odd":
            # 0 attached to 2; finite part of type C_r.
            put(0, 2, -1); put(2, 0, -1)
            for i in range(1, r):
                put(i, i + 1, -1); put(i + 1, i, -1)
            C[(r - 1, r)] = -2
            sd2 = [2] * r + [4]
            self.dim = 2 * r
            fixed, special = frozenset({r}), frozenset()
            c_h = (3, 2 * r)                   # -q^(2r)
        elif tag == "Dt2":
            put(0, 1, -2); put(1, 0, -1)
            for i in range(1, r):
                put(i, i + 1, -1); put(i + 1, i, -1)
            C[(r - 1, r)] = -1
            C[(r, r - 1)] = -2
            sd2 = [2] + [4] * (r - 1) + [2]
            self.dim = 2 * r + 2
            fixed, special = frozenset(range(1, r)), frozenset()
            c_h = (0, 2 * r)                   # q^(2r)
        elif tag == "E6t2":
            # chain 0 - 1 - 2 => 3 - 4; finite part of type F4.
            for i in range(4):
                put(i, i + 1, -1); put(i + 1, i, -1)
            C[(2, 3)] = -2
            sd2 = [2, 2, 2, 4, 4]
            self.dim = 27
            fixed, special = frozenset({3, 4}), frozenset()
            c_h = (3, 12)                      # -q^12
        else:  # D4t3
            put(0, 1, -1); put(1, 0, -1)
            put(1, 2, -3); put(2, 1, -1)
            sd2 = [2, 2, 6]
            self.dim = 8
            fixed, special = frozenset({2}), frozenset()
            c_h = (0, 6)                       # q^6

        self.C = C
        self.sd = tuple(sd2)
        # 2*d~_i: the H10 normalisation has d~_i = 1 for the even-A family
        # and d~_i = d_i otherwise (only the finite nodes are ever used).
        if tag in ("A2t2", "A2t2even"):
            self.sdt = (2,) * n
        else:
            self.sdt = tuple(sd2)
        self.fixed = fixed
        self.special = special
        self.c_h = c_h
        self.marks = self._kernel_marks()

    # -- basic views ---------------------------------------------------

    def nodes(self):
        return range(self.r + 1)

    def finite_nodes(self):
        return range(1, self.r + 1)

    def c(self, i, j):
        return self.C.get((i, j), 0)

    def b_exp(self, i, j):
        """s-exponent of q^(B_ij): B_ij = d_i C_ij, so 2*B_ij as integer."""
        return self.sd[i] * self.c(i, j)

    def neighbors(self, i):
        """Finite nodes j != i with C_ij < 0 (folded-diagram adjacency)."""
        return [j for j in self.finite_nodes() if j != i and self.c(i, j) < 0]

    def d_frac(self, i):
        return Fraction(self.sd[i], 2)

    # -- derived data ---------------------------------------------------

    def _kernel_marks(self):
        """Positive primitive integer vector a with sum_j C_ij a_j = 0.

        Solved by back-substitution: fix a_0, read a_1 from row 0, then
        row i determines a_{i+1} (every row touches at most the next node
        for these chain-shaped diagrams, except A2t2odd whose row 0 uses
        node 2; handled by solving rows in an order that leaves one new
        unknown each).  The result is checked against every row.
        """
        from math import gcd
        n = self.r + 1
        a = [Fraction(0)] * n
        a[0] = Fraction(1)
        if self.tag == "A2t2odd":
            # row 0: 2 a0 - a2 = 0; row 1: 2 a1 - a2 = 0; rows 2.. chain on.
            a[2] = 2 * a[0]
            a[1] = a[2] / 2
            order = range(2, n - 1)
        else:
            a[1] = -2 * a[0] / self.c(0, 1)
            order = range(1, n - 1)
        for i in order:
            # row i: sum_j C_ij a_j = 0, solve for a_{i+1}
            s = sum(self.c(i, j) * a[j] for j in range(n) if j != i + 1)
            a[i + 1] = -s / self.c(i, i + 1)
        for i in range(n):
            if sum(self.c(i, j) * a[j] for j in range(n)) != 0:
                raise AssertionError(f"kernel solve failed at row {i} for {self.tag}")
        den = 1
        for x in a:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in a]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return tuple(x // g for x in ints)


_CACHE = {}


def dynkin(tag, r=None):
    key = (tag, r)
    if key not in _CACHE:
        d = Dynkin(tag, r)
        _CACHE[key] = d
        _CACHE[(tag, d.r)] = d
    return _CACHE[key]


def all_instances(max_rank=4):
    """One Dynkin per type, ranks swept up to max_rank for the families."""
    out = [dynkin("A2t2"), dynkin("E6t2"), dynkin("D4t3")]
    out += [dynkin("A2t2even", r) for r in range(2, max_rank + 1)]
    out += [dynkin("A2t2odd", r) for r in range(3, max_rank + 1)]
    out += [dynkin("Dt2", r) for r in range(2, max_rank + 1)]
    return out

"""Finite-type root systems and Weyl dimension counts.

Works directly off the finite block of the diagram data (nodes 1..r), so
the node numbering agrees with everything else in the package.  Weights
are tuples of fundamental-weight coordinates, 1-based node i at index
i-1.  Dimensions come out of the Weyl formula as exact fractions and are
asserted integral.
"""

from fractions import Fraction

_ROOT_CACHE = {}


def positive_roots(dyn):
    """Positive roots of the finite subdiagram, as coefficient tuples
    over the simple roots (index i-1 for node i)."""
    key = (dyn.tag, dyn.r)
    if key in _ROOT_CACHE:
        return _ROOT_CACHE[key]
    r = dyn.r
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for al in layer:
            for j in range(r):
                # <al, alpha_j^vee>
                pair = sum(al[i] * dyn.c(j + 1, i + 1) for i in range(r) if al[i])
                # depth of the backward j-string through al
                p = 0
                cur = list(al)
                while True:
                    cur[j] -= 1
                    if min(cur) < 0 or tuple(cur) not in roots:
                        break
                    p += 1
                if p - pair > 0:
                    up = list(al)
                    up[j] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.append(t)
        layer = nxt
    out = tuple(sorted(roots))
    _ROOT_CACHE[key] = out
    return out


def weyl_dim(dyn, lam):
    """dim of the finite irreducible with highest weight lam
    (fundamental-weight coordinates, length r, nonnegative ints)."""
    r = dyn.r
    if len(lam) != r or any(x < 0 for x in lam):
        raise ValueError(f"bad weight {lam} for rank {r}")
    ds = [dyn.d_frac(i) for i in dyn.finite_nodes()]
    dim = Fraction(1)
    for al in positive_roots(dyn):
        num = sum(Fraction(al[i]) * ds[i] * (lam[i] + 1) for i in range(r))
        den = sum(Fraction(al[i]) * ds[i] for i in range(r))
        dim *= num / den
    assert dim.denominator == 1, f"Weyl dim not integral: {lam} -> {dim}"
    return int(dim)


def decomp_dim(dyn, labels):
    """Total dimension of a multiset of highest weights."""
    return sum(weyl_dim(dyn, lam) for lam in labels)

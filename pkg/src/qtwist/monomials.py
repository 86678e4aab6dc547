"""Spectral points, Y-monomials, and q-characters as multisets.

All reducibility loci of the R-matrices live on the lattice z6^e * q^k
(z6 a fixed primitive sixth root of unity), so spectral points carry an
exact pair (e mod 6, k) instead of a complex number.  -1 = z6^3 and the
primitive cube root j = z6^2 both live in the same group, which is what
lets one lattice serve both twist orders.

A `YMon` is a finite product of variables Y_{i,p}^{n} for finite nodes i
and spectral points p, stored canonically: for a node i fixed by the
diagram automorphism the variable satisfies Y_{i,p} = Y_{i,w p} with
w = z6^3 (twist order 2) or w = z6^2 (twist order 3), and the stored
representative is the orbit member with minimal e.  Zero exponents are
never stored, so equal monomials compare equal as dicts.

`simple_lroot` produces the twisted simple-root monomials A_{i,a} from
the node classification alone (fixed / special / free), which the tests
then compare against the literal per-type tables.
"""

from .cartan import dynkin


class Pt:
    """Spectral point z6^e q^k under multiplication."""

    __slots__ = ("e", "k")

    def __init__(self, e, k):
        self.e = e % 6
        self.k = k

    def __mul__(self, other):
        return Pt(self.e + other.e, self.k + other.k)

    def __truediv__(self, other):
        return Pt(self.e - other.e, self.k - other.k)

    def inv(self):
        return Pt(-self.e, -self.k)

    def __pow__(self, n):
        return Pt(self.e * n, self.k * n)

    def __eq__(self, other):
        return isinstance(other, Pt) and self.e == other.e and self.k == other.k

    def __hash__(self):
        return hash((self.e, self.k))

    def key(self):
        return (self.e, self.k)

    def __repr__(self):
        return f"Pt({self.e},{self.k})"

    def render(self):
        # z6^4 = j^2 (= -z6), z6^5 = -j, with j = z6^2
        root = ("", "w", "j", "-", "j2", "-j")[self.e]
        if self.k == 0:
            return root + "a"
        if self.k == 1:
            return root + "aq"
        return root + "aq^" + str(self.k)


ONE = Pt(0, 0)
MINUS = Pt(3, 0)
J = Pt(2, 0)


def qpow(k):
    return Pt(0, k)


class YMon:
    """Canonical monomial in the variables Y_{i,p}^{+-1}."""

    __slots__ = ("dyn", "c", "_h")

    def __init__(self, dyn, exps):
        self.dyn = dyn
        c = {}
        for (i, p), n in exps.items():
            if n == 0:
                continue
            if not 1 <= i <= dyn.r:
                raise ValueError(f"node {i} out of range for {dyn.tag} r={dyn.r}")
            if i in dyn.fixed:
                p = Pt(p.e % (6 // dyn.m), p.k)
            key = (i, p.key())
            c[key] = c.get(key, 0) + n
            if c[key] == 0:
                del c[key]
        self.c = c
        self._h = None

    @staticmethod
    def one(dyn):
        return YMon(dyn, {})

    @staticmethod
    def var(dyn, i, p, n=1):
        return YMon(dyn, {(i, p): n})

    def _items(self):
        return {(i, Pt(e, k)): n for (i, (e, k)), n in self.c.items()}

    def _same(self, other):
        return self.dyn.tag == other.dyn.tag and self.dyn.r == other.dyn.r

    def __mul__(self, other):
        if not self._same(other):
            raise ValueError("monomials from different algebras")
        c = dict(self.c)
        for key, n in other.c.items():
            c[key] = c.get(key, 0) + n
            if c[key] == 0:
                del c[key]
        m = YMon.__new__(YMon)
        m.dyn, m.c, m._h = self.dyn, c, None
        return m

    def __pow__(self, n):
        if n == 0:
            return YMon.one(self.dyn)
        c = {key: v * n for key, v in self.c.items()}
        m = YMon.__new__(YMon)
        m.dyn, m.c, m._h = self.dyn, c, None
        return m

    def inv(self):
        return self ** (-1)

    def shift(self, p):
        """Multiply every spectral point by p (the pullback a -> p*a)."""
        return YMon(self.dyn, {(i, Pt(e, k) * p): n
                               for (i, (e, k)), n in self.c.items()})

    def __eq__(self, other):
        return isinstance(other, YMon) and self._same(other) and self.c == other.c

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.dyn.tag, self.dyn.r, frozenset(self.c.items())))
        return self._h

    def exp(self, i, p):
        """Exponent of Y_{i,p}, canonicalizing p for fixed nodes."""
        if i in self.dyn.fixed:
            p = Pt(p.e % (6 // self.dyn.m), p.k)
        return self.c.get((i, p.key()), 0)

    def is_dominant(self):
        return all(n > 0 for n in self.c.values())

    def weight(self):
        """Per-colour exponent sums, indexed by finite node (tuple, 1-based)."""
        w = [0] * self.dyn.r
        for (i, _), n in self.c.items():
            w[i - 1] += n
        return tuple(w)

    def sort_key(self):
        return tuple(sorted((i, e, k, n) for (i, (e, k)), n in self.c.items()))

    def render(self):
        if not self.c:
            return "1"
        bits = []
        for (i, (e, k)), n in sorted(self.c.items()):
            s = f"{i}_{{{Pt(e, k).render()}}}"
            if n != 1:
                s += f"^{n}"
            bits.append(s)
        return " ".join(bits)

    def __repr__(self):
        return f"<{self.render()}>"


def simple_lroot(dyn, i, a=ONE):
    """The twisted simple-root monomial A_{i,a}.

    Three node classes, read off the parent diagram:
      * sigma(i) = i ("fixed"): Y_{i,aq} Y_{i,aq^-1}, each fixed
        neighbour j contributing Y_{j,a}^-1 and each non-fixed neighbour
        the full orbit product of Y_{j, w^k a}^-1;
      * C_{i,sigma(i)} = -1 ("special", adjacent orbit): an extra
        Y_{i,-a}^-1 on top of the plain neighbour factors;
      * otherwise ("free"): plain Y_{j,a}^-1 per neighbour.
    """
    if not 1 <= i <= dyn.r:
        raise ValueError(f"node {i} out of range for {dyn.tag} r={dyn.r}")
    w = Pt(6 // dyn.m, 0)
    exps = {(i, a * qpow(1)): 1}

    def add(j, p, n):
        key = (j, p)
        exps[key] = exps.get(key, 0) + n

    add(i, a * qpow(-1), 1)
    if i in dyn.fixed:
        for j in dyn.neighbors(i):
            if j in dyn.fixed:
                add(j, a, -1)
            else:
                for k in range(dyn.m):
                    add(j, a * w ** k, -1)
    elif i in dyn.special:
        add(i, a * MINUS, -1)
        for j in dyn.neighbors(i):
            add(j, a, -1)
    else:
        for j in dyn.neighbors(i):
            add(j, a, -1)
    return YMon(dyn, exps)


class QChar:
    """Multiset of canonical monomials with positive multiplicities."""

    __slots__ = ("dyn", "terms")

    def __init__(self, dyn, terms=None):
        self.dyn = dyn
        t = {}
        if terms:
            for m, mult in (terms.items() if isinstance(terms, dict) else terms):
                if mult < 0:
                    raise ValueError("negative multiplicity")
                if mult:
                    t[m] = t.get(m, 0) + mult
        self.terms = t

    @staticmethod
    def of(mons):
        dyn = mons[0].dyn
        return QChar(dyn, [(m, 1) for m in mons])

    def __mul__(self, other):
        t = {}
        for m1, n1 in self.terms.items():
            for m2, n2 in other.terms.items():
                m = m1 * m2
                t[m] = t.get(m, 0) + n1 * n2
        return QChar(self.dyn, t)

    def __add__(self, other):
        t = dict(self.terms)
        for m, n in other.terms.items():
            t[m] = t.get(m, 0) + n
        return QChar(self.dyn, t)

    def shift(self, p):
        return QChar(self.dyn, {m.shift(p): n for m, n in self.terms.items()})

    def size(self):
        return sum(self.terms.values())

    def dominant_terms(self):
        return {m: n for m, n in self.terms.items() if m.is_dominant()}

    def multiplicity(self, m):
        return self.terms.get(m, 0)

    def __eq__(self, other):
        return isinstance(other, QChar) and self.terms == other.terms

    def render(self):
        bits = []
        for m in sorted(self.terms, key=YMon.sort_key):
            n = self.terms[m]
            bits.append(m.render() if n == 1 else f"{n}*({m.render()})")
        return " + ".join(bits) or "0"

    def __repr__(self):
        return f"<qchar {self.render()}>"

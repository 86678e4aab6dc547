"""Exact scalar arithmetic.

Three layers, bottom up:

* ``Cyclo6`` -- the field Q(zeta) with zeta a primitive sixth root of unity
  (zeta^2 = zeta - 1).  Used for spectral points on the hexagonal lattice;
  the primitive cube root j is zeta^2.
* ``Laurent`` -- Laurent polynomials in s = q^(1/2) with exact duck-typed
  coefficients (gmpy2.mpq or Cyclo6).  Everything the representation matrices
  need lands in integral powers of s, so no rational functions are required
  at this level.
* ``Rad`` -- square-root extension of a base ring by the four bracket atoms
  sqrt([2]_{1/2}), sqrt([2]), sqrt([3]), sqrt([4]), with an explicit common
  denominator.  The atoms are multiplicatively independent modulo squares
  (their radicands have pairwise distinct sets of odd-multiplicity roots:
  primitive 4th / 8th / {3rd,6th,12th} / {8th,16th} roots of unity), so the
  formal representation (atom subset -> coefficient) is faithful and equality
  is plain dictionary comparison after canonical reduction.
"""

from __future__ import annotations

import math
from gmpy2 import mpq, is_square

__all__ = [
    "Cyclo6", "Laurent", "bk", "bkh", "bki",
    "SymDomain", "PointDomain", "Rad", "SYM",
]


def _cnum(c):
    """Coefficient -> complex, for float evaluation."""
    if isinstance(c, Cyclo6):
        return complex(c)
    return complex(float(c), 0.0)


class Cyclo6:
    """a + b*zeta with zeta = exp(i*pi/3); zeta^2 = zeta - 1, conj = (a+b) - b*zeta."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = mpq(a)
        self.b = mpq(b)

    @staticmethod
    def zeta(e: int) -> "Cyclo6":
        e %= 6
        return (Cyclo6(1), Cyclo6(0, 1), Cyclo6(-1, 1),
                Cyclo6(-1), Cyclo6(0, -1), Cyclo6(1, -1))[e]

    def _co(self, x):
        if isinstance(x, Cyclo6):
            return x
        if isinstance(x, (int, type(mpq(0)))):
            return Cyclo6(x)
        return NotImplemented

    def __add__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return Cyclo6(self.a + x.a, self.b + x.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo6(-self.a, -self.b)

    def __sub__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return Cyclo6(self.a - x.a, self.b - x.b)

    def __rsub__(self, x):
        return (-self) + x

    def __mul__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        # (a+bz)(c+dz), z^2 = z-1
        a, b, c, d = self.a, self.b, x.a, x.b
        return Cyclo6(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> "Cyclo6":
        return Cyclo6(self.a + self.b, -self.b)

    def norm(self):
        """x * conj(x) = a^2 + a*b + b^2, a rational."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def inv(self) -> "Cyclo6":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Cyclo6 zero has no inverse")
        c = self.conj()
        return Cyclo6(c.a / n, c.b / n)

    def __truediv__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self * x.inv()

    def __rtruediv__(self, x):
        return self.inv() * x

    def __eq__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self.a == x.a and self.b == x.b

    def __hash__(self):
        return hash(("c6", self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __complex__(self):
        z = complex(0.5, math.sqrt(3.0) / 2.0)
        return complex(float(self.a), 0.0) + complex(float(self.b), 0.0) * z

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*w"
        return f"({self.a}+{self.b}*w)"


def _is_cf_zero(c) -> bool:
    return not c if isinstance(c, Cyclo6) else c == 0


_GCD_PRIMES = [(1 << 61) - 1]


def _gcd_prime(i: int) -> int:
    from gmpy2 import next_prime
    while len(_GCD_PRIMES) <= i:
        _GCD_PRIMES.append(int(next_prime(_GCD_PRIMES[-1])))
    return _GCD_PRIMES[i]


def _divides_int(fa: list, fc: list) -> bool:
    """Exact integer polynomial division test, little-endian lists,
    fc[0] != 0.  For primitive fc this decides divisibility over Q."""
    n = len(fa) - len(fc) + 1
    if n <= 0:
        return False
    rem = fa[:]
    c0 = fc[0]
    for t in range(n):
        v = rem[t]
        if v:
            q, r = divmod(v, c0)
            if r:
                return False
            for i, cv in enumerate(fc):
                if cv:
                    rem[t + i] -= q * cv
    return not any(rem[n:])


def _polyrem_modp(f: list, g: list, p: int) -> list:
    """Remainder of f by g in GF(p)[x]; little-endian lists, g trimmed."""
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    f = f[:]
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c:
            c = c * inv % p
            for i in range(dg):
                f[k - dg + i] = (f[k - dg + i] - c * g[i]) % p
    del f[dg:]
    while f and f[-1] == 0:
        f.pop()
    return f


class Laurent:
    """Laurent polynomial in s = q^(1/2); ``c`` maps s-exponent -> coefficient."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        d = {}
        if c:
            for k, v in c.items():
                if not isinstance(v, (Cyclo6,)):
                    v = v if isinstance(v, type(mpq(0))) else mpq(v)
                if not _is_cf_zero(v):
                    d[k] = v
        self.c = d

    # -- constructors ---------------------------------------------------
    @staticmethod
    def const(v) -> "Laurent":
        return Laurent({0: v})

    @staticmethod
    def spow(k: int, v=1) -> "Laurent":
        """v * s^k  (s = q^(1/2); use spow(2*m) for q^m)."""
        return Laurent({k: v})

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    # -- ring ops ---------------------------------------------------------
    def _co(self, x):
        if isinstance(x, Laurent):
            return x
        if isinstance(x, (int, type(mpq(0)), Cyclo6)):
            return Laurent({0: x})
        return NotImplemented

    def __add__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        d = dict(self.c)
        for k, v in x.c.items():
            w = d.get(k, 0) + v
            if _is_cf_zero(w):
                d.pop(k, None)
            else:
                d[k] = w
        out = Laurent.__new__(Laurent)
        out.c = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Laurent.__new__(Laurent)
        out.c = {k: -v for k, v in self.c.items()}
        return out

    def __sub__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self + (-x)

    def __rsub__(self, x):
        return (-self) + x

    def __mul__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        d = {}
        for k1, v1 in self.c.items():
            for k2, v2 in x.c.items():
                k = k1 + k2
                w = d.get(k, 0) + v1 * v2
                if _is_cf_zero(w):
                    d.pop(k, None)
                else:
                    d[k] = w
        out = Laurent.__new__(Laurent)
        out.c = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        r, b = Laurent.one(), self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self.c == x.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    # -- structure ------------------------------------------------------
    def dmin(self) -> int:
        return min(self.c) if self.c else 0

    def dmax(self) -> int:
        return max(self.c) if self.c else 0

    def bar(self) -> "Laurent":
        """The involution q -> q^(-1), i.e. s -> s^(-1)."""
        out = Laurent.__new__(Laurent)
        out.c = {-k: v for k, v in self.c.items()}
        return out

    def shift(self, k: int) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out.c = {kk + k: v for kk, v in self.c.items()}
        return out

    def is_term(self) -> bool:
        return len(self.c) == 1

    def lowest(self):
        """(exponent, coefficient) at the minimal degree."""
        k = self.dmin()
        return k, self.c[k]

    # -- evaluation -------------------------------------------------------
    def eval_mpq(self, s0):
        """Evaluate at a rational s0 (coefficients must be rational)."""
        s0 = mpq(s0)
        acc = mpq(0)
        for k, v in self.c.items():
            if isinstance(v, Cyclo6):
                if not v.is_rational():
                    raise ValueError("rational evaluation of a Cyclo6 coefficient")
                v = v.a
            acc += v * s0 ** k
        return acc

    def eval_complex(self, s0: complex) -> complex:
        acc = 0j
        for k, v in self.c.items():
            acc += _cnum(v) * s0 ** k
        return acc

    # -- exact division and gcd ------------------------------------------
    def divexact(self, other: "Laurent") -> "Laurent":
        """Exact quotient self/other; raises ValueError if not divisible."""
        if not other:
            raise ZeroDivisionError
        if not self:
            return Laurent.zero()
        a, b = self, other
        qout = {}
        sh = a.dmin() - b.dmin()
        tmax = a.dmax() - b.dmax()
        rem = dict(a.c)
        bl_k, bl_v = b.dmin(), b.c[b.dmin()]
        bl_inv = bl_v.inv() if isinstance(bl_v, Cyclo6) else 1 / bl_v
        while rem:
            k = min(rem)
            t = k - bl_k
            if t > tmax:
                raise ValueError("inexact Laurent division")
            cv = rem[k] * bl_inv
            qout[t] = cv
            for kk, vv in b.c.items():
                key = kk + t
                w = rem.get(key, 0) - cv * vv
                if _is_cf_zero(w):
                    rem.pop(key, None)
                else:
                    rem[key] = w
        out = Laurent.__new__(Laurent)
        out.c = {k: v for k, v in qout.items() if not _is_cf_zero(v)}
        # sanity on the shift bound
        assert not out.c or out.dmin() == sh
        return out

    def canon_unit(self) -> "Laurent":
        """The unit u = c*s^k with self/u having dmin 0 and lowest coefficient 1."""
        if not self:
            raise ZeroDivisionError("zero has no canonical unit")
        k, v = self.lowest()
        return Laurent({k: v})

    def unit_inv(self) -> "Laurent":
        """Inverse of a single-term Laurent polynomial."""
        if len(self.c) != 1:
            raise ValueError("not a unit")
        k, v = next(iter(self.c.items()))
        vi = v.inv() if isinstance(v, Cyclo6) else 1 / v
        return Laurent({-k: vi})

    @staticmethod
    def gcd(a: "Laurent", b: "Laurent") -> "Laurent":
        """Canonical gcd (dmin 0, lowest coefficient 1).

        Rational coefficients go through a small-primes modular gcd with
        CRT lifting; every candidate is certified by exact trial division,
        so unlucky primes cost retries, never correctness.  Cyclo6
        coefficients (or pathological luck) fall back to primitive-PRS
        Euclid."""
        a, b = a._primitive(), b._primitive()
        if not a and not b:
            return Laurent.zero()
        if not a:
            return b.divexact(b.canon_unit())
        if not b:
            return a.divexact(a.canon_unit())
        g = Laurent._gcd_modular(a, b)
        if g is not None:
            return g
        while b:
            a, b = b, Laurent._rem(a, b)._primitive()
        return a.divexact(a.canon_unit())

    @staticmethod
    def _gcd_modular(a: "Laurent", b: "Laurent"):
        """Modular gcd of primitive integer-coefficient inputs, or None
        when inapplicable.  Sound: a candidate is returned only after it
        exactly divides both inputs, and the degree of any mod-p image
        bounds the true degree from above, so a degree-0 image proves
        coprimality."""
        fa = a._intlist()
        fb = b._intlist()
        if fa is None or fb is None:
            return None
        gamma = math.gcd(fa[-1], fb[-1])
        best = crt = None
        mod = 1
        for i in range(30):
            p = _gcd_prime(i)
            if gamma % p == 0:
                continue
            ra = [c % p for c in fa]
            rb = [c % p for c in fb]
            if ra[-1] == 0 or rb[-1] == 0:
                continue
            while rb:
                ra, rb = rb, _polyrem_modp(ra, rb, p)
            d = len(ra) - 1
            if d == 0:
                return Laurent.one()
            u = gamma % p * pow(ra[-1], p - 2, p) % p
            gp = [c * u % p for c in ra]
            if best is None or d < best:
                best, crt, mod = d, gp, p
            elif d == best:
                minv = pow(mod % p, p - 2, p)
                crt = [x + mod * ((r - x) % p * minv % p)
                       for x, r in zip(crt, gp)]
                mod *= p
            else:
                continue
            half = mod // 2
            fc = [v if v <= half else v - mod for v in crt]
            cont = 0
            for v in fc:
                cont = math.gcd(cont, v)
            if cont > 1:
                fc = [v // cont for v in fc]
            if fc[0] and fc[-1] and _divides_int(fa, fc) \
                    and _divides_int(fb, fc):
                g = Laurent({k: mpq(v) for k, v in enumerate(fc) if v})
                return g.divexact(g.canon_unit())
        return None

    def _intlist(self):
        """Little-endian integer coefficient list after clearing the
        s-unit; None if any coefficient is not a plain integer."""
        sh = self.dmin()
        out = [0] * (self.dmax() - sh + 1)
        for k, v in self.c.items():
            if isinstance(v, Cyclo6) or v.denominator != 1:
                return None
            out[k - sh] = int(v)
        return out

    def _primitive(self) -> "Laurent":
        """Rescale by a positive rational so all numeric data are integers
        with overall gcd 1.  A unit multiple, so gcd-equivalent."""
        if not self.c:
            return self
        nums, dens = [], []
        for v in self.c.values():
            parts = (v.a, v.b) if isinstance(v, Cyclo6) else (v,)
            for p in parts:
                if p:
                    nums.append(int(p.numerator))
                    dens.append(int(p.denominator))
        scale = mpq(math.lcm(*dens), math.gcd(*nums))
        if scale == 1:
            return self
        return self * Laurent.const(scale)

    @staticmethod
    def _rem(a: "Laurent", b: "Laurent") -> "Laurent":
        # Pseudo-remainder of a by b as ordinary polynomials after clearing
        # s-units: each cancellation step scales by the leading coefficient
        # of b instead of inverting it, so integer input stays integer and
        # no rational blow-up happens inside the loop.  The result is a
        # unit multiple of the field remainder, which is all gcd needs.
        if not a:
            return a
        a = a.shift(-a.dmin())
        b = b.shift(-b.dmin())
        bl_k, bl_v = b.dmax(), b.c[b.dmax()]
        rem = dict(a.c)
        while rem and max(rem) >= bl_k:
            k = max(rem)
            cv = rem.pop(k)
            new = {kk: bl_v * vv for kk, vv in rem.items()}
            for kk, vv in b.c.items():
                if kk == bl_k:
                    continue
                key = kk + (k - bl_k)
                w = new.get(key, 0) - cv * vv
                if _is_cf_zero(w):
                    new.pop(key, None)
                else:
                    new[key] = w
            rem = new
        out = Laurent.__new__(Laurent)
        out.c = rem
        return out

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for k in sorted(self.c):
            v = self.c[k]
            if k == 0:
                bits.append(f"{v}")
            elif k == 1:
                bits.append(f"{v}*s" if v != 1 else "s")
            else:
                bits.append(f"{v}*s^{k}" if v != 1 else f"s^{k}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# q-brackets.  All take the subscript in plain q-units (integers); the
# half-integer subscript 1/2 has its own constructor.

def bk(n: int, k: int = 1) -> Laurent:
    """[n]_k = (q^(kn) - q^(-kn)) / (q^k - q^(-k)) = sum_j q^(k(n-1-2j))."""
    out = Laurent.zero()
    for j in range(n):
        out = out + Laurent.spow(2 * k * (n - 1 - 2 * j))
    return out


def bkh(n: int) -> Laurent:
    """[n]_{1/2}: the bracket with subscript one half (exponents in s-units)."""
    out = Laurent.zero()
    for j in range(n):
        out = out + Laurent.spow(n - 1 - 2 * j)
    return out


def bki(n: int, k: int = 1) -> Laurent:
    """Alternating companion bracket:
    (q^(kn) + (-1)^(n-1) q^(-kn)) / (q^k + q^(-k)) = sum_j (-1)^j q^(k(n-1-2j))."""
    out = Laurent.zero()
    for j in range(n):
        out = out + Laurent.spow(2 * k * (n - 1 - 2 * j), (-1) ** j)
    return out


# ---------------------------------------------------------------------------
# Square-root extension by bracket atoms.

ATOMS = ("h2", "b2", "b3", "b4")

_ATOM_SQ = {
    "h2": bkh(2),   # s + 1/s
    "b2": bk(2),    # q + 1/q
    "b3": bk(3),
    "b4": bk(4),
}


class SymDomain:
    """Base ring = Laurent polynomials (rational or Cyclo6 coefficients)."""

    kind = "sym"

    def atom_sq(self, name: str) -> Laurent:
        return _ATOM_SQ[name]

    one = Laurent.one()
    zero = Laurent.zero()

    def to_base(self, v) -> Laurent:
        if isinstance(v, Laurent):
            return v
        return Laurent.const(v)

    def reduce(self, terms: dict, den: Laurent):
        """Canonical form: divide out the content gcd, normalise den's unit."""
        if not terms:
            return {}, Laurent.one()
        g = den
        if g != Laurent.one():
            for v in terms.values():
                g = Laurent.gcd(g, v)
                if g == Laurent.one():
                    break
        if g and g != Laurent.one():
            den = den.divexact(g)
            terms = {A: v.divexact(g) for A, v in terms.items()}
        u = den.canon_unit()
        if u != Laurent.one():
            ui = u.unit_inv()
            den = den * ui
            terms = {A: v * ui for A, v in terms.items()}
        return terms, den


SYM = SymDomain()


class PointDomain:
    """Base ring = Q at a fixed rational point s0 for s = q^(1/2).

    Construction checks that the four atom values stay multiplicatively
    independent modulo rational squares at s0, so formal-radical equality
    remains faithful after evaluation.
    """

    kind = "point"

    def __init__(self, s0):
        self.s0 = mpq(s0)
        self.sq = {a: _ATOM_SQ[a].eval_mpq(self.s0) for a in ATOMS}
        for mask in range(1, 16):
            prod = mpq(1)
            for i, a in enumerate(ATOMS):
                if mask >> i & 1:
                    prod *= self.sq[a]
            num, den = prod.numerator, prod.denominator
            if is_square(num * den):
                raise ValueError(f"atom products degenerate at s0={s0}")

    def atom_sq(self, name: str):
        return self.sq[name]

    one = mpq(1)
    zero = mpq(0)

    def to_base(self, v):
        if isinstance(v, Laurent):
            return v.eval_mpq(self.s0)
        return mpq(v)

    def reduce(self, terms: dict, den):
        if not terms:
            return {}, mpq(1)
        if den != 1:
            terms = {A: v / den for A, v in terms.items()}
        return terms, mpq(1)


def _term_mul(dom, t1: dict, t2: dict) -> dict:
    out = {}
    for A1, v1 in t1.items():
        for A2, v2 in t2.items():
            v = v1 * v2
            for a in A1 & A2:
                v = v * dom.atom_sq(a)
            A = A1 ^ A2
            w = out.get(A)
            w = v if w is None else w + v
            if w:
                out[A] = w
            else:
                out.pop(A, None)
    return out


class Rad:
    """(sum_A c_A * sqrt(prod A)) / den over the domain's base ring.

    ``t`` maps frozenset-of-atom-names -> base coefficient; ``den`` is a base
    element.  Always kept in canonical reduced form, so ``==`` is structural.
    """

    __slots__ = ("dom", "t", "den")

    def __init__(self, dom, t: dict, den=None, _canon=False):
        self.dom = dom
        if den is None:
            den = dom.one
        if not _canon:
            t = {A: v for A, v in t.items() if v}
            t, den = dom.reduce(t, den)
        self.t = t
        self.den = den

    # -- constructors -----------------------------------------------------
    @staticmethod
    def base(v, dom=SYM) -> "Rad":
        return Rad(dom, {frozenset(): dom.to_base(v)})

    @staticmethod
    def sqrt(name: str, dom=SYM) -> "Rad":
        if name not in ATOMS:
            raise KeyError(name)
        return Rad(dom, {frozenset((name,)): dom.one})

    @staticmethod
    def zero(dom=SYM) -> "Rad":
        return Rad(dom, {}, None, _canon=True)

    @staticmethod
    def one(dom=SYM) -> "Rad":
        return Rad(dom, {frozenset(): dom.one}, None, _canon=True)

    # -- ring ops -----------------------------------------------------------
    def _co(self, x):
        if isinstance(x, Rad):
            if x.dom is not self.dom:
                raise ValueError("mixed Rad domains")
            return x
        if isinstance(x, (int, type(mpq(0)), Laurent, Cyclo6)):
            return Rad.base(x, self.dom)
        return NotImplemented

    def __add__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        if not self.t:
            return x
        if not x.t:
            return self
        if self.den == x.den:
            t = dict(self.t)
            for A, v in x.t.items():
                w = t.get(A)
                w = v if w is None else w + v
                if w:
                    t[A] = w
                else:
                    t.pop(A, None)
            return Rad(self.dom, t, self.den)
        t = {A: v * x.den for A, v in self.t.items()}
        for A, v in x.t.items():
            w = t.get(A)
            vv = v * self.den
            w = vv if w is None else w + vv
            if w:
                t[A] = w
            else:
                t.pop(A, None)
        return Rad(self.dom, t, self.den * x.den)

    __radd__ = __add__

    @staticmethod
    def accumulate(vals):
        """Sum a list of Rads with one canonicalisation at the end.

        Repeated ``+`` re-reduces (and so re-gcds) after every addend; in a
        matrix product each output entry is a sum of many structurally
        similar terms, and folding them raw before a single constructor
        call is substantially cheaper.
        """
        first = None
        for v in vals:
            if isinstance(v, Rad):
                first = v
                break
        if first is None:
            s = 0
            for v in vals:
                s = s + v
            return s
        dom = first.dom
        t = {}
        den = dom.one
        for v in vals:
            if not isinstance(v, Rad):
                v = Rad.base(v, dom)
            if not v.t:
                continue
            if v.den == den:
                for A, c in v.t.items():
                    w = t.get(A)
                    w = c if w is None else w + c
                    if w:
                        t[A] = w
                    else:
                        t.pop(A, None)
            else:
                if t:
                    t = {A: c * v.den for A, c in t.items()}
                sc = den
                den = den * v.den
                for A, c in v.t.items():
                    cc = c * sc
                    w = t.get(A)
                    w = cc if w is None else w + cc
                    if w:
                        t[A] = w
                    else:
                        t.pop(A, None)
        if not t:
            return Rad.zero(dom)
        return Rad(dom, t, den)

    def __neg__(self):
        return Rad(self.dom, {A: -v for A, v in self.t.items()}, self.den,
                   _canon=True)

    def __sub__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self + (-x)

    def __rsub__(self, x):
        return (-self) + x

    def __mul__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        if not self.t or not x.t:
            return Rad.zero(self.dom)
        return Rad(self.dom, _term_mul(self.dom, self.t, x.t),
                   self.den * x.den)

    __rmul__ = __mul__

    def inv(self) -> "Rad":
        if not self.t:
            raise ZeroDivisionError
        dom = self.dom
        num = {frozenset(): dom.one}
        cur = dict(self.t)
        while True:
            atoms = set()
            for A in cur:
                atoms |= A
            if not atoms:
                break
            a = sorted(atoms)[0]
            conj = {A: (-v if a in A else v) for A, v in cur.items()}
            num = _term_mul(dom, num, conj)
            cur = _term_mul(dom, cur, conj)
            assert all(a not in A for A in cur), "conjugation failed to clear atom"
        b = cur.get(frozenset())
        if not b:
            raise ZeroDivisionError("radical norm vanished")
        t = {A: v * self.den for A, v in num.items()}
        return Rad(dom, t, b)

    def __truediv__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self * x.inv()

    def __rtruediv__(self, x):
        return self.inv() * x

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r, b = Rad.one(self.dom), self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self.den == x.den and self.t == x.t

    def __hash__(self):
        return hash((frozenset(self.t.items()), self.den))

    def __bool__(self):
        return bool(self.t)

    # -- structure ----------------------------------------------------------
    def is_base(self) -> bool:
        return all(not A for A in self.t)

    def base_value(self):
        """The base element, if no radical term is present."""
        if not self.is_base():
            raise ValueError("radical terms present")
        if not self.t:
            return self.dom.zero
        num = self.t[frozenset()]
        if isinstance(num, Laurent):
            return num.divexact(self.den)
        return num / self.den

    def atom_support(self) -> frozenset:
        s = set()
        for A in self.t:
            s |= A
        return frozenset(s)

    def bar(self) -> "Rad":
        """q -> 1/q.  The atom squares are bar-invariant, so only the base
        coefficients move (symbolic domain only)."""
        if self.dom.kind != "sym":
            raise ValueError("bar on a point domain")
        return Rad(self.dom, {A: v.bar() for A, v in self.t.items()},
                   self.den.bar())

    # -- evaluation -----------------------------------------------------------
    def eval_point(self, pd: PointDomain) -> "Rad":
        if self.dom.kind != "sym":
            raise ValueError("already at a point")
        t = {A: v.eval_mpq(pd.s0) for A, v in self.t.items()}
        return Rad(pd, t, self.den.eval_mpq(pd.s0))

    def to_complex(self, s0: complex) -> complex:
        acc = 0j
        for A, v in self.t.items():
            val = v.eval_complex(s0) if isinstance(v, Laurent) else _cnum(v)
            for a in A:
                sq = self.dom.atom_sq(a)
                w = sq.eval_complex(s0) if isinstance(sq, Laurent) else _cnum(sq)
                if abs(w.imag) > 1e-12 * abs(w):
                    raise ValueError("complex atom square")
                val *= math.sqrt(w.real)
            acc += val
        if isinstance(self.den, Laurent):
            acc /= self.den.eval_complex(s0)
        else:
            acc /= _cnum(self.den)
        return acc

    def __repr__(self):
        if not self.t:
            return "0"
        bits = []
        for A in sorted(self.t, key=sorted):
            v = self.t[A]
            tag = "*".join(f"r{a}" for a in sorted(A))
            bits.append(f"({v})" + (f"*{tag}" if tag else ""))
        s = " + ".join(bits)
        if self.den != self.dom.one:
            s = f"[{s}] / ({self.den})"
        return s

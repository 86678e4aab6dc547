"""Polynomials and reduced rational functions in the spectral variable z.

``ZPoly`` is a Laurent polynomial in z whose coefficients live in a ``Rad``
scalar ring; ``ZRat`` is a gcd-reduced fraction of two ZPolys with the
denominator normalised so its lowest nonzero z-coefficient is 1.  ``Biv`` is
a bivariate polynomial in (z, w) used for denominator-cleared two-variable
identities.
"""

from __future__ import annotations

from .scalars import Laurent, Rad, SYM

__all__ = ["ZPoly", "ZRat", "Biv", "zpoly", "zlin"]


class ZPoly:
    __slots__ = ("dom", "c")

    def __init__(self, dom, c=None):
        self.dom = dom
        d = {}
        if c:
            for k, v in c.items():
                if not isinstance(v, Rad):
                    v = Rad.base(v, dom)
                if v:
                    d[k] = v
        self.c = d

    @staticmethod
    def zero(dom=SYM):
        return ZPoly(dom)

    @staticmethod
    def one(dom=SYM):
        return ZPoly(dom, {0: Rad.one(dom)})

    @staticmethod
    def z(dom=SYM):
        return ZPoly(dom, {1: Rad.one(dom)})

    def _co(self, x):
        if isinstance(x, ZPoly):
            return x
        if isinstance(x, Rad):
            return ZPoly(self.dom, {0: x})
        if isinstance(x, (int, Laurent)):
            return ZPoly(self.dom, {0: Rad.base(x, self.dom)})
        return NotImplemented

    def __add__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        d = dict(self.c)
        for k, v in x.c.items():
            w = d.get(k)
            w = v if w is None else w + v
            if w:
                d[k] = w
            else:
                d.pop(k, None)
        out = ZPoly.__new__(ZPoly)
        out.dom, out.c = self.dom, d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ZPoly.__new__(ZPoly)
        out.dom = self.dom
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
                w = d.get(k)
                vv = v1 * v2
                w = vv if w is None else w + vv
                if w:
                    d[k] = w
                else:
                    d.pop(k, None)
        out = ZPoly.__new__(ZPoly)
        out.dom, out.c = self.dom, d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r, b = ZPoly.one(self.dom), self
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

    def dmin(self):
        return min(self.c) if self.c else 0

    def dmax(self):
        return max(self.c) if self.c else 0

    def zinv(self):
        """z -> 1/z."""
        out = ZPoly.__new__(ZPoly)
        out.dom = self.dom
        out.c = {-k: v for k, v in self.c.items()}
        return out

    def shift(self, k):
        out = ZPoly.__new__(ZPoly)
        out.dom = self.dom
        out.c = {kk + k: v for kk, v in self.c.items()}
        return out

    def scale(self, r: Rad):
        if not r:
            return ZPoly.zero(self.dom)
        return ZPoly(self.dom, {k: v * r for k, v in self.c.items()})

    def subst_scale(self, r: Rad):
        """z -> r*z."""
        return ZPoly(self.dom, {k: v * r ** k for k, v in self.c.items()})

    def eval_rad(self, z0: Rad) -> Rad:
        acc = Rad.zero(self.dom)
        for k, v in self.c.items():
            acc = acc + v * z0 ** k
        return acc

    def eval_complex(self, s0: complex, z0: complex) -> complex:
        acc = 0j
        for k, v in self.c.items():
            acc += v.to_complex(s0) * z0 ** k
        return acc

    def eval_point(self, pd, z0) -> Rad:
        """Map coefficients into a rational PointDomain and evaluate at z0."""
        acc = Rad.zero(pd)
        z0 = Rad.base(z0, pd)
        for k, v in self.c.items():
            acc = acc + v.eval_point(pd) * z0 ** k
        return acc

    def bar(self):
        return ZPoly(self.dom, {k: v.bar() for k, v in self.c.items()})

    def divexact(self, other: "ZPoly") -> "ZPoly":
        if not other:
            raise ZeroDivisionError
        if not self:
            return ZPoly.zero(self.dom)
        tmax = self.dmax() - other.dmax()
        bl_k = other.dmin()
        bl_inv = other.c[bl_k].inv()
        rem = dict(self.c)
        qout = {}
        while rem:
            k = min(rem)
            t = k - bl_k
            if t > tmax:
                raise ValueError("inexact z-polynomial division")
            cv = rem[k] * bl_inv
            qout[t] = cv
            for kk, vv in other.c.items():
                key = kk + t
                w = rem.get(key)
                p = cv * vv
                w = -p if w is None else w - p
                if w:
                    rem[key] = w
                else:
                    rem.pop(key, None)
        return ZPoly(self.dom, qout)

    @staticmethod
    def gcd(a: "ZPoly", b: "ZPoly") -> "ZPoly":
        """Gcd up to a unit, by pseudo-division Euclid (no coefficient
        inversion inside the loop; common base content stripped each
        step).  Single-term results collapse to exactly one, since z and
        the coefficients are units here; callers that want a normalised
        denominator renormalise after dividing the gcd out."""
        a, b = a._strip(), b._strip()
        while b:
            a, b = b, ZPoly._rem(a, b)._strip()
        if a and len(a.c) == 1:
            return ZPoly.one(a.dom)
        return a

    def _strip(self) -> "ZPoly":
        """Unit-multiple normal form used by gcd: clear the coefficients'
        denominators, then divide out the common content of their numerator
        parts.  Symbolic domain only; numeric coefficients are cheap."""
        if not self.c or self.dom.kind != "sym":
            return self
        dl = Laurent.one()
        for v in self.c.values():
            if v.den != Laurent.one():
                g = Laurent.gcd(dl, v.den)
                dl = dl * v.den.divexact(g)
        p = self if dl == Laurent.one() else self.scale(Rad.base(dl, self.dom))
        cg = None
        for v in p.c.values():
            for lp in v.t.values():
                cg = lp if cg is None else Laurent.gcd(cg, lp)
                if cg == Laurent.one():
                    return p
        if cg is None or cg == Laurent.one():
            return p
        return p.scale(Rad.base(cg, self.dom).inv())

    @staticmethod
    def _rem(a: "ZPoly", b: "ZPoly") -> "ZPoly":
        # Pseudo-remainder: scales by the leading coefficient of b instead
        # of inverting it (a unit multiple of the field remainder).
        if not a:
            return a
        a = a.shift(-a.dmin())
        b = b.shift(-b.dmin())
        bl_k = b.dmax()
        bl_v = b.c[bl_k]
        rem = dict(a.c)
        while rem and max(rem) >= bl_k:
            k = max(rem)
            cv = rem.pop(k)
            new = {kk: bl_v * vv for kk, vv in rem.items()}
            for kk, vv in b.c.items():
                if kk == bl_k:
                    continue
                key = kk + (k - bl_k)
                w = new.get(key)
                p = cv * vv
                w = -p if w is None else w - p
                if w:
                    new[key] = w
                else:
                    new.pop(key, None)
            rem = new
        out = ZPoly.__new__(ZPoly)
        out.dom, out.c = a.dom, rem
        return out

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(f"({self.c[k]})*z^{k}" for k in sorted(self.c))


def zpoly(coeffs: dict, dom=SYM) -> ZPoly:
    return ZPoly(dom, coeffs)


def zlin(a, b, dom=SYM) -> ZPoly:
    """a + b*z."""
    return ZPoly(dom, {0: a, 1: b})


class ZRat:
    """Reduced fraction of z-polynomials.  Canonical form: gcd divided out,
    denominator shifted to dmin 0 with lowest coefficient 1 (the z-unit and
    scalar unit are pushed into the numerator)."""

    __slots__ = ("num", "den")

    def __init__(self, num: ZPoly, den: ZPoly = None, _canon=False):
        if den is None:
            den = ZPoly.one(num.dom)
        if not den:
            raise ZeroDivisionError
        if not _canon:
            if not num:
                den = ZPoly.one(num.dom)
            elif len(den.c) == 1:
                sh = den.dmin()
                u = den.c[sh].inv()
                num = ZPoly(num.dom, {k - sh: v * u for k, v in num.c.items()})
                den = ZPoly.one(num.dom)
            else:
                g = ZPoly.gcd(num, den)
                if g.c != {0: Rad.one(num.dom)}:
                    num = num.divexact(g)
                    den = den.divexact(g)
                sh = den.dmin()
                u = den.c[sh].inv()
                den = ZPoly(den.dom, {k - sh: v * u for k, v in den.c.items()})
                num = ZPoly(num.dom, {k - sh: v * u for k, v in num.c.items()})
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p: ZPoly) -> "ZRat":
        return ZRat(p, ZPoly.one(p.dom), _canon=True)

    def _co(self, x):
        if isinstance(x, ZRat):
            return x
        if isinstance(x, ZPoly):
            return ZRat.from_poly(x)
        if isinstance(x, (Rad, int, Laurent)):
            return ZRat.from_poly(ZPoly(self.num.dom, {0: x}))
        return NotImplemented

    def __add__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return ZRat(self.num * x.den + x.num * self.den, self.den * x.den)

    __radd__ = __add__

    def __neg__(self):
        return ZRat(-self.num, self.den, _canon=True)

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
        return ZRat(self.num * x.num, self.den * x.den)

    __rmul__ = __mul__

    def __truediv__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        if not x.num:
            raise ZeroDivisionError
        return ZRat(self.num * x.den, self.den * x.num)

    def __rtruediv__(self, x):
        return self._co(x) / self

    def __eq__(self, x):
        x = self._co(x)
        if x is NotImplemented:
            return x
        return self.num == x.num and self.den == x.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def zinv(self) -> "ZRat":
        return ZRat(self.num.zinv(), self.den.zinv())

    def bar(self) -> "ZRat":
        return ZRat(self.num.bar(), self.den.bar())

    def eval_rad(self, z0: Rad) -> Rad:
        return self.num.eval_rad(z0) / self.den.eval_rad(z0)

    def eval_complex(self, s0: complex, z0: complex) -> complex:
        return self.num.eval_complex(s0, z0) / self.den.eval_complex(s0, z0)

    def is_poly(self) -> bool:
        return self.den == ZPoly.one(self.den.dom)

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"[{self.num!r}] / [{self.den!r}]"


class Biv:
    """Bivariate polynomial in (z, w) over a Rad scalar ring."""

    __slots__ = ("dom", "c")

    def __init__(self, dom, c=None):
        self.dom = dom
        d = {}
        if c:
            for k, v in c.items():
                if v:
                    d[k] = v
        self.c = d

    @staticmethod
    def lift(p: ZPoly, which: str) -> "Biv":
        """Lift a z-polynomial: which = 'z' (z->z), 'w' (z->w), 'zw' (z->z*w)."""
        emap = {"z": lambda k: (k, 0), "w": lambda k: (0, k),
                "zw": lambda k: (k, k)}[which]
        return Biv(p.dom, {emap(k): v for k, v in p.c.items()})

    def __add__(self, x):
        if not isinstance(x, Biv):
            return NotImplemented
        d = dict(self.c)
        for k, v in x.c.items():
            w = d.get(k)
            w = v if w is None else w + v
            if w:
                d[k] = w
            else:
                d.pop(k, None)
        out = Biv.__new__(Biv)
        out.dom, out.c = self.dom, d
        return out

    def __neg__(self):
        out = Biv.__new__(Biv)
        out.dom = self.dom
        out.c = {k: -v for k, v in self.c.items()}
        return out

    def __sub__(self, x):
        return self + (-x)

    def __mul__(self, x):
        if not isinstance(x, Biv):
            return NotImplemented
        d = {}
        for (k1, l1), v1 in self.c.items():
            for (k2, l2), v2 in x.c.items():
                key = (k1 + k2, l1 + l2)
                w = d.get(key)
                vv = v1 * v2
                w = vv if w is None else w + vv
                if w:
                    d[key] = w
                else:
                    d.pop(key, None)
        out = Biv.__new__(Biv)
        out.dom, out.c = self.dom, d
        return out

    def __eq__(self, x):
        if not isinstance(x, Biv):
            return NotImplemented
        return self.c == x.c

    def __bool__(self):
        return bool(self.c)

    def eval_rad(self, z0: Rad, w0: Rad) -> Rad:
        acc = Rad.zero(self.dom)
        for (k, l), v in self.c.items():
            acc = acc + v * z0 ** k * w0 ** l
        return acc

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(f"({self.c[k]})*z^{k[0]}*w^{k[1]}"
                          for k in sorted(self.c))

"""Sparse exact linear algebra over the package's scalar rings.

Matrices are dict-of-dicts (row -> col -> entry) holding only nonzero
entries.  Entries may be ints, Laurent polynomials, radical scalars, or
rational z-functions; the only requirements are ring operations with
reflected variants and truthiness meaning "nonzero".  Elimination
(rank / kernel / solve) additionally needs division, so it runs over the
field-like layers (Rad, ZRat, Fraction) — never over bare Laurent.
"""


def _fold(vals):
    """Sum a nonempty list of ring elements.

    Uses the entry class's batch ``accumulate`` when it provides one (a
    single canonicalisation instead of one per addend); plain repeated
    addition otherwise.
    """
    if len(vals) == 1:
        return vals[0]
    acc = getattr(type(vals[0]), "accumulate", None)
    if acc is not None:
        return acc(vals)
    s = vals[0]
    for v in vals[1:]:
        s = s + v
    return s


class Mat:
    """Sparse matrix with exact entries."""

    __slots__ = ("nr", "nc", "rows")

    def __init__(self, nr, nc, rows=None):
        self.nr = nr
        self.nc = nc
        self.rows = rows if rows is not None else {}

    # -- constructors -----------------------------------------------------
    @staticmethod
    def from_entries(nr, nc, triples):
        m = Mat(nr, nc)
        for i, j, v in triples:
            m.add_at(i, j, v)
        return m

    @staticmethod
    def identity(n, one=1):
        return Mat(n, n, {i: {i: one} for i in range(n)})

    @staticmethod
    def diag(entries):
        n = len(entries)
        return Mat(n, n, {i: {i: v} for i, v in enumerate(entries) if v})

    @staticmethod
    def unit(nr, nc, i, j, v=1):
        """Matrix unit: v at (i, j), zero elsewhere.  Zero-based indices."""
        m = Mat(nr, nc)
        m.add_at(i, j, v)
        return m

    def copy(self):
        return Mat(self.nr, self.nc, {i: dict(r) for i, r in self.rows.items()})

    # -- entry access -------------------------------------------------------
    def get(self, i, j):
        return self.rows.get(i, {}).get(j, 0)

    def set_at(self, i, j, v):
        if v:
            self.rows.setdefault(i, {})[j] = v
        else:
            r = self.rows.get(i)
            if r and j in r:
                del r[j]
                if not r:
                    del self.rows[i]

    def add_at(self, i, j, v):
        if not (0 <= i < self.nr and 0 <= j < self.nc):
            raise IndexError((i, j))
        self.set_at(i, j, self.get(i, j) + v)

    def entries(self):
        for i in sorted(self.rows):
            r = self.rows[i]
            for j in sorted(r):
                yield i, j, r[j]

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def is_zero(self):
        return not self.rows

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.nr, self.nc) != (other.nr, other.nc):
            raise ValueError("shape mismatch")
        out = self.copy()
        for i, r in other.rows.items():
            for j, v in r.items():
                out.set_at(i, j, out.get(i, j) + v)
        return out

    def __neg__(self):
        return Mat(self.nr, self.nc,
                   {i: {j: -v for j, v in r.items()}
                    for i, r in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if not s:
            return Mat(self.nr, self.nc)
        out = Mat(self.nr, self.nc)
        for i, r in self.rows.items():
            nr = {}
            for j, v in r.items():
                w = s * v
                if w:
                    nr[j] = w
            if nr:
                out.rows[i] = nr
        return out

    def __mul__(self, other):
        """Mat @ Mat composition, or scaling by a ring element."""
        if not isinstance(other, Mat):
            return self.scale(other)
        if self.nc != other.nr:
            raise ValueError("shape mismatch")
        out = Mat(self.nr, other.nc)
        for i, r in self.rows.items():
            acc = {}
            for k, a in r.items():
                br = other.rows.get(k)
                if not br:
                    continue
                for j, b in br.items():
                    w = a * b
                    if j in acc:
                        acc[j].append(w)
                    else:
                        acc[j] = [w]
            row = {}
            for j, vs in acc.items():
                v = _fold(vs)
                if v:
                    row[j] = v
            if row:
                out.rows[i] = row
        return out

    def __rmul__(self, s):
        return self.scale(s)

    def T(self):
        out = Mat(self.nc, self.nr)
        for i, r in self.rows.items():
            for j, v in r.items():
                out.rows.setdefault(j, {})[i] = v
        return out

    def kron(self, other):
        """Tensor product; index (i, j) of the factors becomes i*other.n + j."""
        out = Mat(self.nr * other.nr, self.nc * other.nc)
        for i, r in self.rows.items():
            for k, a in r.items():
                for j, rr in other.rows.items():
                    row = out.rows.setdefault(i * other.nr + j, {})
                    for l, b in rr.items():
                        w = a * b
                        if w:
                            row[k * other.nc + l] = w
        for i in [i for i, r in out.rows.items() if not r]:
            del out.rows[i]
        return out

    def apply(self, vec):
        """Matrix times sparse column vector (dict index -> entry)."""
        acc = {}
        for i, r in self.rows.items():
            terms = [a * vec[j] for j, a in r.items() if j in vec]
            if terms:
                s = _fold(terms)
                if s:
                    acc[i] = s
        return acc

    def map(self, fn):
        """Entrywise map (e.g. evaluation); drops entries that map to zero."""
        out = Mat(self.nr, self.nc)
        for i, r in self.rows.items():
            nr = {}
            for j, v in r.items():
                w = fn(v)
                if w:
                    nr[j] = w
            if nr:
                out.rows[i] = nr
        return out

    def submatrix(self, rows, cols):
        """Restriction to the given index lists (order defines new indices)."""
        cpos = {c: k for k, c in enumerate(cols)}
        out = Mat(len(rows), len(cols))
        for k, i in enumerate(rows):
            r = self.rows.get(i)
            if not r:
                continue
            nr = {cpos[j]: v for j, v in r.items() if j in cpos}
            if nr:
                out.rows[k] = nr
        return out

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.nr, self.nc) != (other.nr, other.nc):
            return False
        return (self - other).is_zero()

    def __repr__(self):
        return f"Mat({self.nr}x{self.nc}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# sparse vectors as plain dicts


def vec_add(u, v):
    out = dict(u)
    for j, x in v.items():
        y = out.get(j, 0) + x
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return out

def vec_scale(u, s):
    if not s:
        return {}
    out = {}
    for j, x in u.items():
        y = s * x
        if y:
            out[j] = y
    return out

def vec_sub(u, v):
    return vec_add(u, vec_scale(v, -1))

def vec_dot(u, v):
    """Plain bilinear pairing sum_j u_j v_j (the forms here are symmetric,
    never sesquilinear)."""
    terms = [x * v[j] for j, x in u.items() if j in v]
    if not terms:
        return 0
    return _fold(terms)


def trace(m):
    t = 0
    for i, row in m.rows.items():
        if i in row:
            t = t + row[i]
    return t


# ---------------------------------------------------------------------------
# Gaussian elimination over a field


def _rref(row_iter):
    """Incremental reduced row echelon form.

    Consumes an iterable of sparse rows, returns {pivot col -> reduced row}.
    Each stored row has entry 1-like at its pivot (v/v) and is fully reduced
    against every other pivot.
    """
    piv = {}
    for row0 in row_iter:
        row = dict(row0)
        # pivot rows never contain other pivots' columns, so one sweep over
        # the pivot columns present in the incoming row reduces it fully
        for pc in [c for c in row if c in piv]:
            f = row.pop(pc)
            for cc, v in piv[pc].items():
                if cc == pc:
                    continue
                y = row.get(cc, 0) - f * v
                if y:
                    row[cc] = y
                else:
                    row.pop(cc, None)
        if not row:
            continue
        c = min(row)
        f = row[c]
        newr = {}
        for cc, v in row.items():
            w = v / f
            if w:
                newr[cc] = w
        # the new pivot column may appear as a free column of older rows
        for pc, pr in piv.items():
            if c in pr:
                g = pr.pop(c)
                for cc, v in newr.items():
                    if cc == c:
                        continue
                    y = pr.get(cc, 0) - g * v
                    if y:
                        pr[cc] = y
                    else:
                        pr.pop(cc, None)
        piv[c] = newr
    return piv


def mat_rank(m):
    return len(_rref(m.rows.values()))


def kernel_basis(m):
    """Basis of the right kernel {x : m x = 0} as sparse dicts.

    The free variable of each basis vector is set to integer 1, so the
    result stays exact whatever the entry ring.
    """
    piv = _rref(m.rows.values())
    basis = []
    for f in range(m.nc):
        if f in piv:
            continue
        v = {f: 1}
        for c, pr in piv.items():
            if f in pr:
                w = -pr[f]
                if w:
                    v[c] = w
        basis.append(v)
    return basis


def solve(m, b):
    """One solution of m x = b, or None if inconsistent.  Free variables 0."""
    aug = []
    for i in range(m.nr):
        row = dict(m.rows.get(i, {}))
        if i in b and b[i]:
            row[m.nc] = b[i]
        if row:
            aug.append(row)
    piv = _rref(aug)
    if m.nc in piv:
        return None
    x = {}
    for c, pr in piv.items():
        v = pr.get(m.nc)
        if v:
            x[c] = v
    return x


def inverse_columns(m):
    """Columns of m^(-1) as sparse dicts, via one elimination over the
    identity-augmented rows.  Returns None if m is singular."""
    n = m.nr
    aug = []
    for i in range(n):
        row = dict(m.rows.get(i, {}))
        row[n + i] = 1
        aug.append(row)
    piv = _rref(aug)
    if len([c for c in piv if c < n]) != n:
        return None
    cols = [{} for _ in range(n)]
    for c, pr in piv.items():
        for cc, v in pr.items():
            if cc >= n and v:
                cols[cc - n][c] = v
    return cols


def columns_to_mat(cols, nr):
    """Pack sparse column vectors into a matrix (column k = cols[k])."""
    m = Mat(nr, len(cols))
    for k, col in enumerate(cols):
        for i, v in col.items():
            if v:
                m.rows.setdefault(i, {})[k] = v
    return m

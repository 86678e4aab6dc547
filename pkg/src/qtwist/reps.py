"""First fundamental representations of the six twisted types.

Each representation is built from a colored lowering graph: an edge
(color j, tail t, head h, coefficient c) means F_j v_t = c v_h (plus
whatever other edges share the tail).  Raising operators are the
transposes, so the basis is orthonormal for the invariant bilinear form
and adjointness E_j^* = F_j is structural.  Cartan generators act
diagonally by integer powers of s = q^(1/2); the affine K_0 is forced by
the centrality of prod_i K_i^(a_i) over the marks a_i.

The lowering graphs of the rank families are generated; the 27-dimensional
exceptional one is read from a checksummed adjacency file shipped with the
package.  The affine raising matrices are stored literally per type, with
their spectral dependence carried as an integer degree (+1 for E_0, -1
for F_0), never as a second symbolic variable.
"""

import hashlib
from importlib import resources

from .cartan import dynkin
from .linalg import Mat
from .scalars import Laurent, Rad
from .zfunc import ZPoly


class ConstructionError(Exception):
    """Representation data failed an internal consistency check."""


def _dyn(x, r=None):
    if hasattr(x, "tag"):
        return x
    return dynkin(x, r)


# ---------------------------------------------------------------------------
# lowering graphs

_E6_COEFF = {
    "1": lambda: 1,
    "sqrt[2]": lambda: Rad.sqrt("b2"),
    "1/sqrt[2]": lambda: Rad.sqrt("b2").inv(),
    "sqrt[3]/sqrt[2]": lambda: Rad.sqrt("b3") / Rad.sqrt("b2"),
}

_e6_edge_cache = None


def parse_adjacency(text):
    """Parse a versioned adjacency file, verifying header and checksum."""
    lines = text.splitlines()
    if lines[0] != "qtwist-e6-adjacency v1":
        raise ConstructionError(f"unsupported adjacency file header: {lines[0]!r}")
    tag, _, digest = lines[1].partition("sha256:")
    if tag.strip() != "checksum":
        raise ConstructionError("missing checksum line in adjacency file")
    payload = "\n".join(lines[2:]) + "\n"
    if hashlib.sha256(payload.encode()).hexdigest() != digest.strip():
        raise ConstructionError("adjacency file checksum mismatch")
    edges = []
    for ln in lines[2:]:
        col, tail, head, coeff = ln.split()
        edges.append((int(col), int(tail), int(head), _E6_COEFF[coeff]()))
    return edges


def _load_e6_edges():
    global _e6_edge_cache
    if _e6_edge_cache is None:
        text = (resources.files("qtwist") / "data" / "e6_graph.txt").read_text()
        _e6_edge_cache = parse_adjacency(text)
    return _e6_edge_cache


def _edges(dyn):
    """Colored lowering edges (color, tail, head, coefficient), 1-based."""
    r = dyn.r
    tag = dyn.tag
    if tag == "A2t2":
        rt = Rad.sqrt("h2")
        return [(1, 1, 2, rt), (1, 2, 3, rt)]
    if tag == "A2t2odd":
        out = []
        for i in range(1, r):
            out.append((i, i, i + 1, 1))
            out.append((i, 2 * r - i, 2 * r + 1 - i, 1))
        out.append((r, r, r + 1, 1))
        return out
    if tag == "A2t2even":
        rt = Rad.sqrt("h2")
        out = []
        for i in range(1, r):
            out.append((i, i, i + 1, 1))
            out.append((i, 2 * r + 1 - i, 2 * r + 2 - i, 1))
        out.append((r, r, r + 1, rt))
        out.append((r, r + 1, r + 2, rt))
        return out
    if tag == "Dt2":
        rt = Rad.sqrt("b2")
        out = []
        for i in range(1, r):
            out.append((i, i, i + 1, 1))
            out.append((i, 2 * r + 1 - i, 2 * r + 2 - i, 1))
        out.append((r, r, r + 1, rt))
        out.append((r, r + 1, r + 2, rt))
        return out
    if tag == "D4t3":
        rt = Rad.sqrt("b2")
        return [(1, 1, 2, 1), (2, 2, 3, 1), (1, 3, 4, rt),
                (1, 4, 5, rt), (2, 5, 6, 1), (1, 6, 7, 1)]
    return _load_e6_edges()


def _singlet_vertices(dyn):
    """1-based basis indices spanning trivial summands of the restriction."""
    return {"Dt2": [2 * dyn.r + 2], "E6t2": [27], "D4t3": [8]}.get(dyn.tag, [])


# E_0(a) = a * (literal matrix); entries as (row, col, coefficient), 1-based.
def _e0_entries(dyn):
    r = dyn.r
    tag = dyn.tag
    if tag == "A2t2":
        return [(3, 1, 1)]
    if tag == "A2t2odd":
        return [(2 * r - 1, 1, 1), (2 * r, 2, 1)]
    if tag == "A2t2even":
        return [(2 * r + 1, 1, 1)]
    if tag == "Dt2":
        rt = Rad.sqrt("b2")
        return [(2 * r + 2, 1, rt), (2 * r + 1, 2 * r + 2, rt)]
    if tag == "D4t3":
        ir2 = Rad.sqrt("b2").inv()
        r32 = Rad.sqrt("b3") / Rad.sqrt("b2")
        return [(4, 1, ir2), (7, 4, ir2), (8, 1, r32), (7, 8, r32),
                (5, 2, 1), (6, 3, 1)]
    # 27-dimensional exceptional type
    r23 = Rad.sqrt("b2") / Rad.sqrt("b3")
    r43 = Rad.sqrt("b4") / Rad.sqrt("b3")
    out = [(14, 1, r23), (26, 14, r23), (27, 1, r43), (26, 27, r43)]
    out += [(15, 2, 1), (25, 12, 1), (17, 3, 1), (24, 10, 1),
            (19, 4, 1), (23, 8, 1), (21, 5, 1), (22, 6, 1)]
    return out


# ---------------------------------------------------------------------------


class Representation:
    """Frozen container for one first fundamental representation.

    Fields: ``F[i]``/``E[i]`` sparse lowering/raising matrices for finite
    nodes, ``weights`` the per-basis-vector weight tuples, ``kexp[i]`` the
    s-exponent of K_i on each basis vector (i = 0 included), ``e0``/``f0``
    the constant parts of E_0(a) = a e0 and F_0(a) = a^(-1) f0, and
    ``singlets`` the 0-based indices killed by the whole finite part.
    """

    __slots__ = ("dyn", "dim", "F", "E", "weights", "kexp",
                 "e0", "f0", "singlets")

    def __init__(self, dyn, F, weights, kexp, e0, singlets):
        self.dyn = dyn
        self.dim = dyn.dim
        self.F = F
        self.E = {i: m.T() for i, m in F.items()}
        self.weights = weights
        self.kexp = kexp
        self.e0 = e0
        self.f0 = e0.T()
        self.singlets = singlets

    def K_mat(self, i, power=1):
        return Mat.diag([Laurent.spow(power * k) for k in self.kexp[i]])

    def K_half_mat(self, i, sign=1):
        return Mat.diag([Laurent.spow(sign * (k // 2)) for k in self.kexp[i]])

    def weight_of(self, v):
        """Weight tuple of 0-based basis index v."""
        return self.weights[v]

    def __repr__(self):
        return f"Representation({self.dyn.tag}, r={self.dyn.r}, dim={self.dim})"


def _alpha(dyn, i):
    """Weight drop of one color-i lowering step, in the stored coordinates."""
    out = []
    for j in dyn.finite_nodes():
        b = dyn.b_exp(i, j)
        if b % dyn.sdt[j]:
            raise ConstructionError(f"non-integral weight step ({i}->{j})")
        out.append(b // dyn.sdt[j])
    return tuple(out)


_REP_CACHE = {}


def build_rep(type_or_dyn, r=None):
    dyn = _dyn(type_or_dyn, r)
    if dyn in _REP_CACHE:
        return _REP_CACHE[dyn]
    d = dyn.dim
    rk = dyn.r
    edges = _edges(dyn)
    singlets = [v - 1 for v in _singlet_vertices(dyn)]

    F = {i: Mat(d, d) for i in dyn.finite_nodes()}
    for col, t, h, co in edges:
        F[col].add_at(h - 1, t - 1, co)

    alpha = {i: _alpha(dyn, i) for i in dyn.finite_nodes()}
    weights = {0: (1,) + (0,) * (rk - 1)}
    for v in singlets:
        weights[v] = (0,) * rk
    pending = list(edges)
    while pending:
        rest = []
        for col, t, h, co in pending:
            if t - 1 not in weights:
                rest.append((col, t, h, co))
                continue
            wt = tuple(a - b for a, b in zip(weights[t - 1], alpha[col]))
            if h - 1 in weights and weights[h - 1] != wt:
                raise ConstructionError(
                    f"{dyn.tag}: weight clash at vertex {h} "
                    f"({weights[h - 1]} vs {wt})")
            weights[h - 1] = wt
        if len(rest) == len(pending):
            raise ConstructionError(f"{dyn.tag}: lowering graph not connected")
        pending = rest
    if len(weights) != d:
        raise ConstructionError(f"{dyn.tag}: {d - len(weights)} basis vectors "
                                "received no weight")
    weights = tuple(weights[v] for v in range(d))

    kexp = {}
    for i in dyn.finite_nodes():
        kexp[i] = tuple(dyn.sdt[i] * w[i - 1] for w in weights)
    a = dyn.marks
    k0 = []
    for v in range(d):
        tot = sum(a[i] * kexp[i][v] for i in dyn.finite_nodes())
        if tot % a[0]:
            raise ConstructionError("affine Cartan exponent not integral")
        k0.append(-tot // a[0])
    kexp[0] = tuple(k0)
    for i in dyn.nodes():
        if any(k % 2 for k in kexp[i]):
            raise ConstructionError(f"odd K exponent at node {i}")

    e0 = Mat(d, d)
    for h, t, co in _e0_entries(dyn):
        e0.add_at(h - 1, t - 1, co)
    # every affine raising entry must shift all Cartan exponents by the
    # affine column of the symmetrized matrix
    for h, t, _ in _e0_entries(dyn):
        for i in dyn.nodes():
            got = kexp[i][h - 1] - kexp[i][t - 1]
            if got != dyn.b_exp(i, 0):
                raise ConstructionError(
                    f"{dyn.tag}: affine raising entry ({h},{t}) shifts "
                    f"K_{i} by s^{got}, expected s^{dyn.b_exp(i, 0)}")

    rep = Representation(dyn, F, weights, kexp, e0, singlets)
    _REP_CACHE[dyn] = rep
    return rep


# ---------------------------------------------------------------------------
# bar involution


class BarInvolution:
    """Weight-negating involutive permutation of the chosen basis."""

    __slots__ = ("perm",)

    def __init__(self, perm):
        self.perm = tuple(perm)

    def __call__(self, v):
        return self.perm[v]

    def mat(self):
        n = len(self.perm)
        m = Mat(n, n)
        for v, u in enumerate(self.perm):
            m.add_at(u, v, 1)
        return m

    def pairs(self):
        """Sorted transpositions (v, perm v) with v < perm v, 0-based."""
        return sorted((v, u) for v, u in enumerate(self.perm) if v < u)


def build_bar_involution(rep):
    """Pair each basis vector with the opposite-weight one, fixing weight
    zero, and verify that conjugation swaps raising and lowering exactly."""
    d = rep.dim
    perm = [None] * d
    zero = (0,) * rep.dyn.r
    by_weight = {}
    for v, w in enumerate(rep.weights):
        by_weight.setdefault(w, []).append(v)
    for v, w in enumerate(rep.weights):
        if w == zero:
            perm[v] = v
            continue
        opp = by_weight.get(tuple(-x for x in w), [])
        if len(opp) != 1:
            raise ConstructionError(
                f"weight {w} has no unique opposite partner: {opp}")
        perm[v] = opp[0]
    t = BarInvolution(perm)
    tm = t.mat()
    for j, Ej in rep.E.items():
        if tm * Ej * tm != rep.F[j]:
            raise ConstructionError(
                f"bar involution fails to swap raising/lowering at node {j}")
    return t


# ---------------------------------------------------------------------------
# coproduct and invariant form


def _inv_param(x):
    if isinstance(x, int):
        if x in (1, -1):
            return x
        raise ValueError("affine parameter must be a unit")
    if isinstance(x, Rad):
        return x.inv()
    if isinstance(x, Laurent):
        return x.unit_inv()
    if isinstance(x, ZPoly):
        if len(x.c) != 1:
            raise ValueError("affine parameter must be a single term")
        (k, v), = x.c.items()
        return ZPoly(x.dom, {-k: v.inv()})
    raise TypeError(f"cannot invert parameter of type {type(x).__name__}")


def coproduct_action(rep, kind, i, a=1, b=1):
    """Action of Delta(g) on V tensor V.

    ``kind`` is "E", "F" or "K" and ``i`` a node index.  The split
    coproduct is used: Delta E_i = E_i (x) K_i^(1/2) + K_i^(-1/2) (x) E_i,
    Delta K_i = K_i (x) K_i, and likewise for F_i.  For i = 0 the two
    tensor slots carry spectral parameters ``a`` and ``b``, scaling the
    affine raising matrix by a (resp. b) and the lowering one by their
    inverses.
    """
    if kind == "K":
        ki = rep.K_mat(i)
        return ki.kron(ki)
    kp = rep.K_half_mat(i, 1)
    km = rep.K_half_mat(i, -1)
    if kind == "E":
        if i == 0:
            return (rep.e0.kron(kp)).scale(a) + (km.kron(rep.e0)).scale(b)
        g = rep.E[i]
        return g.kron(kp) + km.kron(g)
    if kind == "F":
        if i == 0:
            return ((rep.f0.kron(kp)).scale(_inv_param(a))
                    + (km.kron(rep.f0)).scale(_inv_param(b)))
        g = rep.F[i]
        return g.kron(kp) + km.kron(g)
    raise ValueError(f"unknown generator kind {kind!r}")


def shapovalov_gram(rep):
    """Invariant-form Gram matrix in the chosen basis, plus the adjointness
    flag.  The basis is orthonormal, so the Gram matrix is the identity and
    the flag just re-checks that raising matrices are transposed lowerings.
    """
    ok = all(rep.E[i] == rep.F[i].T() for i in rep.dyn.finite_nodes())
    return Mat.identity(rep.dim), ok

"""Isotypic decomposition of the tensor square of the defining module.

The finite-type subalgebra sees V (x) V as a direct sum of irreducibles
with multiplicities at most three.  This module locates the singular
(highest-weight) vectors of each component -- mechanically, as the joint
kernel of the coproduct raising operators on one weight space, or from
the recorded literal expressions -- grows each copy by breadth-first
lowering, and converts the bases into exact projectors and copy-transport
operators through per-weight-space Gram matrices of the invariant form.

Vectors of V (x) V are sparse dicts keyed by a*dim + b for v_a (x) v_b
(0-based); all entries live in the radical scalar field.
"""

from .linalg import (Mat, inverse_columns, kernel_basis, vec_add, vec_dot,
                     vec_scale)
from .qchar import tensor_square_decomposition
from .reps import build_rep, coproduct_action
from .scalars import Laurent, Rad
from .weyl import weyl_dim


class DecompositionError(Exception):
    """The tensor square failed to decompose as recorded."""


def _rep(x, r=None):
    return x if hasattr(x, "e0") else build_rep(x, r)


def _rad(x):
    return x if isinstance(x, Rad) else Rad.base(x)


def _q(k):
    """q^k as a Laurent polynomial in s = q^(1/2)."""
    return Laurent.spow(2 * k)


_OPS_CACHE = {}


def _finite_ops(rep):
    """Coproduct raising/lowering matrices for the finite nodes (cached)."""
    key = rep.dyn
    if key not in _OPS_CACHE:
        raising = {i: coproduct_action(rep, "E", i) for i in rep.dyn.finite_nodes()}
        lowering = {i: coproduct_action(rep, "F", i) for i in rep.dyn.finite_nodes()}
        _OPS_CACHE[key] = (raising, lowering)
    return _OPS_CACHE[key]


def tensor_weight(rep, n):
    """Weight of the tensor basis vector with index n = a*dim + b."""
    a, b = divmod(n, rep.dim)
    return tuple(x + y for x, y in zip(rep.weights[a], rep.weights[b]))


def label_coord(dyn, lam):
    """Internal weight coordinates of a highest-weight label.

    Component labels are fundamental-weight coordinates of the finite
    subalgebra; the internal bookkeeping scales node i by sd[i]/sdt[i]
    (the two differ only on the A-family, where the scaled exponents
    keep every K-eigenvalue an integer power of s).
    """
    out = []
    for i in dyn.finite_nodes():
        num = lam[i - 1] * dyn.sd[i]
        if num % dyn.sdt[i]:
            raise DecompositionError(
                f"label {lam} is not a weight of the scaled lattice")
        out.append(num // dyn.sdt[i])
    return tuple(out)


_WS_CACHE = {}


def tensor_weight_spaces(type_or_rep, r=None):
    """Map weight -> sorted tuple of tensor-basis indices of that weight."""
    rep = _rep(type_or_rep, r)
    key = rep.dyn
    if key not in _WS_CACHE:
        spaces = {}
        for n in range(rep.dim * rep.dim):
            spaces.setdefault(tensor_weight(rep, n), []).append(n)
        _WS_CACHE[key] = {w: tuple(v) for w, v in spaces.items()}
    return _WS_CACHE[key]


class SingularVector:
    """A vector of V (x) V annihilated by every finite raising operator.

    The constructor checks nonzeroness, homogeneity of the support weight
    and exact annihilation, so holding an instance is a certificate.  The
    provenance is "chosen" for the recorded literal expressions and
    "kernel" for mechanically computed ones.
    """

    __slots__ = ("vec", "weight", "provenance", "norm")

    def __init__(self, rep, vec, weight, provenance):
        vec = {n: _rad(v) for n, v in vec.items() if v}
        if not vec:
            raise DecompositionError("zero singular vector")
        weight = tuple(weight)
        coord = label_coord(rep.dyn, weight)
        for n in vec:
            if tensor_weight(rep, n) != coord:
                raise DecompositionError(
                    f"support index {n} has weight {tensor_weight(rep, n)}, "
                    f"expected {coord} (label {weight})")
        raising, _ = _finite_ops(rep)
        for i, m in raising.items():
            if m.apply(vec):
                raise DecompositionError(
                    f"vector of weight {weight} is not singular: raising "
                    f"operator {i} does not annihilate it")
        self.vec = vec
        self.weight = weight
        self.provenance = provenance
        # Shapovalov norm: the invariant form restricts to the plain
        # bilinear pairing in the defining basis (the basis is orthonormal).
        self.norm = vec_dot(vec, vec)

    def __repr__(self):
        return (f"SingularVector(weight={self.weight}, "
                f"support={len(self.vec)}, provenance={self.provenance!r})")


def find_singular_vectors(type_or_rep, weight, r=None):
    """Basis of the joint kernel of all raising operators on one weight
    space of V (x) V.  The count is cross-checked against the recorded
    decomposition multiplicities."""
    rep = _rep(type_or_rep, r)
    weight = tuple(weight)
    idx = tensor_weight_spaces(rep).get(label_coord(rep.dyn, weight), ())
    mult = list(tensor_square_decomposition(rep.dyn)).count(weight)
    if not idx:
        if mult:
            raise DecompositionError(
                f"{rep.dyn.tag}: weight {weight} has multiplicity {mult} "
                "but an empty weight space")
        return []
    pos = {c: k for k, c in enumerate(idx)}
    raising, _ = _finite_ops(rep)
    rows = []
    for i in rep.dyn.finite_nodes():
        # restrict the operator to the weight space: columns outside it
        # cannot appear in rows that act on weight-homogeneous vectors
        for rowd in raising[i].rows.values():
            filt = {pos[c]: _rad(v) for c, v in rowd.items() if c in pos}
            if filt:
                rows.append(filt)
    stacked = Mat(len(rows), len(idx), dict(enumerate(rows)))
    kern = kernel_basis(stacked)
    out = [SingularVector(rep, {idx[k]: v for k, v in kv.items()},
                          weight, "kernel")
           for kv in kern]
    if len(out) != mult:
        raise DecompositionError(
            f"{rep.dyn.tag}: weight {weight} has a {len(out)}-dimensional "
            f"singular space, decomposition table says {mult}")
    return out


# ---------------------------------------------------------------------------
# Recorded singular vectors
#
# Each table entry fixes a basis of the singular space of one component,
# in the order the copy labels are used everywhere downstream.  The
# constructor of SingularVector re-verifies every expression, so a typo
# here fails loudly rather than silently skewing projectors.


def _chosen_table(rep):
    dyn = rep.dyn
    r = dyn.r
    d = rep.dim

    def P(a, b):
        # 1-based tensor pair v_a (x) v_b
        return (a - 1) * d + (b - 1)

    def w(idx, n=1):
        t = [0] * r
        t[idx - 1] = n
        return tuple(t)

    zero = (0,) * r
    out = {}

    if dyn.tag == "A2t2":
        out[(4,)] = [{P(1, 1): 1}]
        out[(2,)] = [{P(1, 2): _q(1), P(2, 1): -1}]
        out[zero] = [{P(1, 3): Laurent.spow(1), P(2, 2): -1,
                      P(3, 1): Laurent.spow(-1)}]
        return out

    out[w(1, 2)] = [{P(1, 1): 1}]
    mid = w(2, 2) if r == 2 and dyn.tag in ("A2t2even", "Dt2") else w(2)
    if dyn.tag == "Dt2":
        out[mid] = [{P(1, 2): _q(1), P(2, 1): -_q(-1)}]
    else:
        out[mid] = [{P(1, 2): _q(1), P(2, 1): -1}]

    if dyn.tag == "A2t2odd":
        # pairing i <-> 2r+1-i, signs (-q)^(r+1-i) on the first half
        eps = {}
        for i in range(1, r + 1):
            k = r + 1 - i
            eps[i] = Laurent.spow(2 * k, (-1) ** k)
            eps[2 * r + 1 - i] = -eps[i].bar()
        out[zero] = [{P(i, 2 * r + 1 - i): eps[i]
                      for i in range(1, 2 * r + 1)}]

    elif dyn.tag == "A2t2even":
        eps = {r + 1: Laurent.one()}
        for i in range(1, r + 1):
            eps[i] = Laurent.spow(2 * (r - i) + 1, (-1) ** (r + 1 - i))
            eps[2 * r + 2 - i] = eps[i].bar()
        out[zero] = [{P(i, 2 * r + 2 - i): eps[i]
                      for i in range(1, 2 * r + 2)}]

    elif dyn.tag == "Dt2":
        s1 = 2 * r + 2
        out[w(1)] = [{P(1, s1): 1}, {P(s1, 1): 1}]
        eps = {r + 1: (-1) ** r}
        for i in range(1, r + 1):
            eps[i] = Laurent.spow(2 * (2 * r - 2 * i + 1), (-1) ** (i - 1))
            eps[2 * r + 2 - i] = eps[i].bar()
        w1 = {P(i, 2 * r + 2 - i): eps[i] for i in range(1, 2 * r + 2)}
        out[zero] = [w1, {P(s1, s1): 1}]

    elif dyn.tag == "E6t2":
        out[w(4)] = [{P(1, 7): _q(3), P(2, 6): -_q(2), P(3, 4): _q(1),
                      P(4, 3): -_q(-1), P(6, 2): _q(-2), P(7, 1): -_q(-3)}]
        c34 = Rad.sqrt("b3") * Rad.sqrt("b4").inv()
        c23 = Rad.sqrt("b2") * Rad.sqrt("b3").inv()
        span = [(1, 14, c23 * _q(6)), (2, 12, -Laurent.spow(9)),
                (3, 10, Laurent.spow(7)), (4, 8, -Laurent.spow(3)),
                (5, 6, Laurent.spow(-1)), (6, 5, Laurent.spow(1)),
                (8, 4, -Laurent.spow(-3)), (10, 3, Laurent.spow(-7)),
                (12, 2, -Laurent.spow(-9)), (14, 1, c23 * _q(-6))]
        u1 = {P(a, b): c34 * _rad(co) for a, b, co in span}
        out[w(1)] = [u1, {P(1, 27): 1}, {P(27, 1): 1}]
        p = {1: _q(11), 2: -_q(10), 3: _q(9), 4: -_q(7), 5: _q(5), 6: _q(6),
             7: -_q(5), 8: -_q(4), 9: _q(3), 10: _q(2), 11: -_q(1),
             12: -_q(1)}
        w1 = {P(13, 13): 1, P(14, 14): 1}
        for i in range(1, 13):
            w1[P(i, 27 - i)] = p[i]
            w1[P(27 - i, i)] = p[i].bar()
        out[zero] = [w1, {P(27, 27): 1}]

    elif dyn.tag == "D4t3":
        c3 = Rad.sqrt("b3").inv()
        c23 = Rad.sqrt("b2") * Rad.sqrt("b3").inv()
        u1 = {P(1, 4): c3 * _q(3), P(2, 3): -(c23 * Laurent.spow(3)),
              P(3, 2): c23 * Laurent.spow(-3), P(4, 1): -(c3 * _q(-3))}
        out[w(1)] = [u1, {P(1, 8): 1}, {P(8, 1): 1}]
        p = [_q(5), -_q(4), _q(1), -Laurent.one(), _q(-1), -_q(-4), _q(-5)]
        out[zero] = [{P(i, 8 - i): p[i - 1] for i in range(1, 8)},
                     {P(8, 8): 1}]

    return out


_CHOSEN_CACHE = {}


def chosen_singular_vectors(type_or_rep, weight, r=None):
    """The recorded singular vectors of this weight, in recorded order.

    Raises DecompositionError when no literal choice is recorded for the
    weight, or when a recorded expression fails its verification.
    """
    rep = _rep(type_or_rep, r)
    key = rep.dyn
    if key not in _CHOSEN_CACHE:
        _CHOSEN_CACHE[key] = _chosen_table(rep)
    table = _CHOSEN_CACHE[key]
    weight = tuple(weight)
    if weight not in table:
        raise DecompositionError(
            f"{rep.dyn.tag}: no recorded singular vectors of weight {weight}")
    return [SingularVector(rep, v, weight, "chosen") for v in table[weight]]


def norm_ratios(type_or_rep, weight, r=None):
    """Shapovalov norms of the recorded singular vectors at this weight,
    each divided by the norm of the last one (the last is the simplest
    expression in every recorded family, usually a pure tensor)."""
    vs = chosen_singular_vectors(type_or_rep, weight, r)
    ref = _rad(vs[-1].norm).inv()
    return tuple(_rad(v.norm) * ref for v in vs)


# ---------------------------------------------------------------------------
# Copy generation


class _Echelon:
    """Incremental linear-independence filter over sparse rows.

    A stored row is normalised only when its pivot entry is free of
    radical terms (base-ring inversion is cheap and bounded); otherwise
    the row is kept as-is and incoming rows are cancelled fraction-free,
    so no radical scalar is ever inverted here.  Incoming rows reduce
    against the OLDEST matching pivot first: a stored row never contains
    pivot columns older than its own, so the minimal age of the matching
    pivots strictly increases and the loop terminates.
    """

    __slots__ = ("pivots", "order")

    def __init__(self):
        self.pivots = {}
        self.order = {}

    @staticmethod
    def _plain(x):
        return not isinstance(x, Rad) or not x.atom_support()

    def add(self, vec):
        """Insert the vector if independent of the stored ones."""
        row = {c: _rad(v) for c, v in vec.items() if v}
        while row:
            hits = [c for c in row if c in self.pivots]
            if not hits:
                break
            c = min(hits, key=lambda cc: self.order[cc])
            pr = self.pivots[c]
            e = row.pop(c)
            p = pr[c]
            if p != 1:
                row = {cc: p * v for cc, v in row.items()}
            for cc, v in pr.items():
                if cc == c:
                    continue
                y = row.get(cc, 0) - e * v
                if y:
                    row[cc] = y
                else:
                    row.pop(cc, None)
        if not row:
            return False
        cols = sorted(row)
        piv = next((c for c in cols if self._plain(row[c])), cols[0])
        val = row[piv]
        if self._plain(val):
            ival = _rad(val).inv()
            row = {c: ival * v for c, v in row.items()}
        self.order[piv] = len(self.order)
        self.pivots[piv] = row
        return True

    def __len__(self):
        return len(self.pivots)


class IsotypicBlock:
    """All copies of one irreducible summand of V (x) V.

    weight is the highest-weight label (fundamental-weight units of the
    finite subalgebra).  words[k] is the lowering word (tuple of node
    colors, applied left to right) that produced basis vector k of the
    first copy from its seed; the same words applied to the other seeds
    give the remaining copies, so position k of every copy sits at one
    weight.  weight_index maps each occurring internal weight coordinate
    to the positions k lying in it, and grams[mu] is the Gram matrix of
    all copies' weight-mu vectors in copy-major order: row/column
    j*d_mu + t is copy j, position weight_index[mu][t].
    """

    __slots__ = ("weight", "dim_each", "seeds", "words", "copies",
                 "weight_index", "grams")

    def __init__(self, weight, dim_each, seeds, words, copies,
                 weight_index, grams):
        self.weight = weight
        self.dim_each = dim_each
        self.seeds = seeds
        self.words = words
        self.copies = copies
        self.weight_index = weight_index
        self.grams = grams

    @property
    def multiplicity(self):
        return len(self.seeds)

    def __repr__(self):
        return (f"IsotypicBlock(weight={self.weight}, dim={self.dim_each}, "
                f"multiplicity={len(self.seeds)})")


def generate_copies(type_or_rep, seeds, r=None):
    """Grow the isotypic block spanned by the given singular vectors.

    Breadth-first lowering on the first seed, colors tried in increasing
    node order and vectors in discovery order, keeping a candidate only
    when it is independent of everything kept so far.  The recorded words
    are then replayed verbatim on the remaining seeds.
    """
    rep = _rep(type_or_rep, r)
    if not seeds:
        raise DecompositionError("no seed vectors")
    lam = seeds[0].weight
    if any(s.weight != lam for s in seeds[1:]):
        raise DecompositionError("seeds of mixed weight")
    dim_l = weyl_dim(rep.dyn, lam)
    _, lowering = _finite_ops(rep)

    ech = _Echelon()
    vecs = [{n: _rad(v) for n, v in seeds[0].vec.items()}]
    ech.add(vecs[0])
    parent = [(-1, 0)]
    grew = True
    while grew:
        grew = False
        for color in rep.dyn.finite_nodes():
            k = 0
            while k < len(vecs):
                cand = lowering[color].apply(vecs[k])
                if cand and ech.add(cand):
                    vecs.append({n: _rad(v) for n, v in cand.items()})
                    parent.append((k, color))
                    grew = True
                k += 1
    if len(vecs) != dim_l:
        raise DecompositionError(
            f"{rep.dyn.tag}: weight {lam} copy closed at {len(vecs)} "
            f"vectors, expected {dim_l}")

    words = []
    for p, c in parent:
        words.append(() if p < 0 else words[p] + (c,))

    copies = [vecs]
    for s in seeds[1:]:
        cur = [{n: _rad(v) for n, v in s.vec.items()}]
        for p, c in parent[1:]:
            nxt = lowering[c].apply(cur[p])
            cur.append({n: _rad(v) for n, v in nxt.items()})
        copies.append(cur)

    if len(seeds) > 1:
        joint = _Echelon()
        got = sum(1 for cv in copies for v in cv if v and joint.add(v))
        if got != len(seeds) * dim_l:
            raise DecompositionError(
                f"{rep.dyn.tag}: copies of weight {lam} are dependent "
                f"({got} independent vectors, expected "
                f"{len(seeds) * dim_l})")

    # Clear denominators position by position, with one common factor
    # across all copies at a position.  A position-uniform scalar leaves
    # every derived operator (projector, copy transport) unchanged, and
    # denominator-free entries make the later Gram and product arithmetic
    # far cheaper.
    one = Laurent.one()
    for k in range(dim_l):
        dens = []
        for cv in copies:
            for e in cv[k].values():
                d = e.den
                if d != one and all(d != x for x in dens):
                    dens.append(d)
        if not dens:
            continue
        f = dens[0]
        for d in dens[1:]:
            f = f * d.divexact(Laurent.gcd(f, d))
        for cv in copies:
            cv[k] = {n: e * f for n, e in cv[k].items()}

    weight_index = {}
    for k, v in enumerate(vecs):
        mu = tensor_weight(rep, next(iter(v)))
        weight_index.setdefault(mu, []).append(k)
    weight_index = {mu: tuple(ks) for mu, ks in weight_index.items()}

    n = len(seeds)
    grams = {}
    for mu, ks in weight_index.items():
        vlist = [copies[j][k] for j in range(n) for k in ks]
        m = len(vlist)
        g = Mat(m, m)
        for a in range(m):
            for b in range(a, m):
                val = vec_dot(vlist[a], vlist[b])
                if val:
                    g.set_at(a, b, val)
                    if b != a:
                        g.set_at(b, a, val)
        grams[mu] = g

    return IsotypicBlock(lam, dim_l, tuple(seeds), tuple(words),
                         tuple(tuple(cv) for cv in copies),
                         weight_index, grams)


# ---------------------------------------------------------------------------
# Projectors and copy transport


_UNITS_CACHE = {}


def unit_operators(type_or_rep, block, r=None):
    """Matrix units of the copy algebra: units[j][k] is the equivariant
    map sending copy k of the block identically onto copy j (position by
    position) and annihilating the form-orthogonal complement.  The dual
    functionals are taken per weight space through the Gram matrices, so
    no global inversion ever happens.
    """
    rep = _rep(type_or_rep, r)
    key = (rep.dyn, block.weight)
    cached = _UNITS_CACHE.get(key)
    if cached is not None and cached[0] is block:
        return cached[1]

    n = len(block.seeds)
    d2 = rep.dim * rep.dim
    units = [[Mat(d2, d2) for _ in range(n)] for _ in range(n)]
    for mu, ks in block.weight_index.items():
        dmu = len(ks)
        vlist = [block.copies[j][k] for j in range(n) for k in ks]
        ginv = inverse_columns(block.grams[mu])
        if ginv is None:
            raise DecompositionError(
                f"degenerate Gram matrix at weight {mu}")
        for a in range(n * dmu):
            dual = {}
            for b, x in ginv[a].items():
                dual = vec_add(dual, vec_scale(vlist[b], x))
            jsrc, t = divmod(a, dmu)
            k = ks[t]
            for jdst in range(n):
                m = units[jdst][jsrc]
                for i2, uv in block.copies[jdst][k].items():
                    for c2, dv in dual.items():
                        m.add_at(i2, c2, uv * dv)

    blocks = _BLOCK_CACHE.get(rep.dyn)
    if blocks and any(b is block for b in blocks):
        _UNITS_CACHE[key] = (block, units)
    return units


def isotypic_projector(type_or_rep, block, r=None):
    """Projector of V (x) V onto the full isotypic component."""
    units = unit_operators(type_or_rep, block, r)
    tot = units[0][0]
    for j in range(1, len(units)):
        tot = tot + units[j][j]
    return tot


def multiplicity_one_projector(type_or_rep, block, r=None):
    if len(block.seeds) != 1:
        raise DecompositionError(
            f"block of weight {block.weight} has multiplicity "
            f"{len(block.seeds)}, not 1")
    return unit_operators(type_or_rep, block, r)[0][0]


_BLOCK_CACHE = {}


def decompose(type_or_rep, r=None):
    """All isotypic blocks of V (x) V, one per distinct highest weight in
    recorded order, seeded by the recorded singular vectors (falling back
    to kernel computation if a weight has no recorded choice).  The total
    dimension is audited against dim(V)^2.
    """
    rep = _rep(type_or_rep, r)
    if rep.dyn in _BLOCK_CACHE:
        return _BLOCK_CACHE[rep.dyn]
    order = []
    for lam in tensor_square_decomposition(rep.dyn):
        if lam not in order:
            order.append(lam)
    blocks = []
    for lam in order:
        try:
            seeds = chosen_singular_vectors(rep, lam)
        except DecompositionError:
            seeds = find_singular_vectors(rep, lam)
        blocks.append(generate_copies(rep, seeds))
    total = sum(len(b.seeds) * b.dim_each for b in blocks)
    if total != rep.dim * rep.dim:
        raise DecompositionError(
            f"{rep.dyn.tag}: isotypic dimensions sum to {total}, tensor "
            f"square has {rep.dim * rep.dim}")
    out = tuple(blocks)
    _BLOCK_CACHE[rep.dyn] = out
    return out


def flip_operator(type_or_rep, r=None):
    """The flip v_a (x) v_b -> v_b (x) v_a as a matrix on V (x) V."""
    rep = _rep(type_or_rep, r)
    d = rep.dim
    m = Mat(d * d, d * d)
    for a in range(d):
        for b in range(d):
            m.set_at(b * d + a, a * d + b, 1)
    return m

import pytest

from qtwist.cartan import all_instances, dynkin
from qtwist.linalg import Mat, vec_dot
from qtwist.monomials import ONE
from qtwist.qchar import fundamental_character
from qtwist.reps import (ConstructionError, build_bar_involution, build_rep,
                         coproduct_action, parse_adjacency, shapovalov_gram)
from qtwist.scalars import Laurent, Rad
from qtwist.zfunc import ZPoly


def _instances():
    return all_instances(4)


def _bk_s(n, se):
    """[n] at base q_i = s^se, as a Laurent polynomial in s."""
    out = Laurent.zero()
    for j in range(n):
        out = out + Laurent.spow(se * (n - 1 - 2 * j))
    return out


def _qbinom(n, k, se):
    num = Laurent.one()
    den = Laurent.one()
    for l in range(1, k + 1):
        num = num * _bk_s(n - l + 1, se)
        den = den * _bk_s(l, se)
    return num.divexact(den)


def _matpow(m, n):
    out = Mat.identity(m.nr)
    for _ in range(n):
        out = out * m
    return out


def _gens(rep, raising):
    g = dict(rep.E if raising else rep.F)
    g[0] = rep.e0 if raising else rep.f0
    return g


def _cartan_ratio(rep, i):
    """(K_i - K_i^-1)/(q_i - q_i^-1) as an exact diagonal matrix."""
    se = rep.dyn.sd[i]
    den = Laurent.spow(se) - Laurent.spow(-se)
    ent = []
    for k in rep.kexp[i]:
        if k == 0:
            ent.append(Laurent.zero())
        else:
            ent.append((Laurent.spow(k) - Laurent.spow(-k)).divexact(den))
    return Mat.diag(ent)


# ---------------------------------------------------------------------------
# construction basics


def test_dimensions():
    want = {("A2t2", 1): 3, ("A2t2even", 2): 5, ("A2t2even", 3): 7,
            ("A2t2even", 4): 9, ("A2t2odd", 3): 6, ("A2t2odd", 4): 8,
            ("Dt2", 2): 6, ("Dt2", 3): 8, ("Dt2", 4): 10,
            ("E6t2", 4): 27, ("D4t3", 2): 8}
    for d in _instances():
        rep = build_rep(d)
        assert rep.dim == want[(d.tag, d.r)]
        assert build_rep(d) is rep  # cached


def test_invalid_rank():
    with pytest.raises(ValueError):
        build_rep("Dt2", 1)
    with pytest.raises(ValueError):
        build_rep("A2t2odd", 2)


def test_raising_is_transposed_lowering():
    for d in _instances():
        rep = build_rep(d)
        for i in d.finite_nodes():
            assert rep.E[i] == rep.F[i].T()
        assert rep.f0 == rep.e0.T()


def test_highest_vector_and_singlets():
    for d in _instances():
        rep = build_rep(d)
        assert rep.weight_of(0) == (1,) + (0,) * (d.r - 1)
        for v in rep.singlets:
            for i in d.finite_nodes():
                assert not rep.E[i].rows.get(v) and not rep.F[i].rows.get(v)
                assert all(v not in r for r in rep.F[i].rows.values())


# ---------------------------------------------------------------------------
# defining relations


def test_cartan_conjugation():
    """K_i g K_i^-1 = q^(B_ij) g for g = E_j, including the affine node."""
    for d in _instances():
        rep = build_rep(d)
        for i in d.nodes():
            kp = rep.K_mat(i, 1)
            km = rep.K_mat(i, -1)
            for j in d.nodes():
                ej = rep.e0 if j == 0 else rep.E[j]
                want = ej.scale(Laurent.spow(d.b_exp(i, j)))
                assert kp * ej * km == want, f"{d.tag} r={d.r} ({i},{j})"


def test_ef_commutators():
    for d in _instances():
        rep = build_rep(d)
        E = _gens(rep, True)
        F = _gens(rep, False)
        for i in d.nodes():
            for j in d.nodes():
                comm = E[i] * F[j] - F[j] * E[i]
                if i != j:
                    assert comm.is_zero(), f"{d.tag} r={d.r} [E{i},F{j}]"
                else:
                    assert comm == _cartan_ratio(rep, i), \
                        f"{d.tag} r={d.r} [E{i},F{i}]"


def test_serre_relations():
    for d in _instances():
        rep = build_rep(d)
        for raising in (True, False):
            X = _gens(rep, raising)
            for i in d.nodes():
                for j in d.nodes():
                    if i == j:
                        continue
                    n = 1 - d.c(i, j)
                    acc = Mat(rep.dim, rep.dim)
                    for k in range(n + 1):
                        co = _qbinom(n, k, d.sd[i])
                        if k % 2:
                            co = -co
                        acc = acc + (_matpow(X[i], n - k) * X[j]
                                     * _matpow(X[i], k)).scale(co)
                    assert acc.is_zero(), \
                        f"{d.tag} r={d.r} serre ({i},{j}) raising={raising}"


# ---------------------------------------------------------------------------
# affine diagonal and raising data


def test_affine_cartan_diagonal():
    """The centrality-derived K_0 matches the stated per-type diagonals."""
    for d in _instances():
        rep = build_rep(d)
        r = d.r
        got = rep.kexp[0]
        if d.tag == "A2t2":
            want = (-4, 0, 4)
        elif d.tag == "A2t2even":
            want = (-4,) + (0,) * (2 * r - 1) + (4,)
        elif d.tag == "A2t2odd":
            want = (-2, -2) + (0,) * (2 * r - 4) + (2, 2)
        elif d.tag == "Dt2":
            want = (-4,) + (0,) * (2 * r - 1) + (4, 0)
        elif d.tag == "D4t3":
            want = (-4, -2, -2, 0, 2, 2, 4, 0)
        else:
            want = [0] * 27
            want[0] = -4
            for v in (2, 3, 4, 5, 6, 8, 10, 12):
                want[v - 1] = -2
            for v in (15, 17, 19, 21, 22, 23, 24, 25):
                want[v - 1] = 2
            want[26 - 1] = 4
            want = tuple(want)
        assert got == tuple(want), f"{d.tag} r={r}"


def test_affine_raising_literals():
    rep = build_rep("A2t2")
    assert rep.e0 == Mat.unit(3, 3, 2, 0)

    rep = build_rep("A2t2even", 2)
    assert rep.e0 == Mat.unit(5, 5, 4, 0)

    rep = build_rep("A2t2odd", 3)
    assert rep.e0 == Mat.unit(6, 6, 4, 0) + Mat.unit(6, 6, 5, 1)

    rep = build_rep("Dt2", 2)
    r2 = Rad.sqrt("b2")
    assert rep.e0.get(5, 0) == r2 and rep.e0.get(4, 5) == r2
    assert rep.e0.nnz() == 2

    rep = build_rep("E6t2")
    r43 = Rad.sqrt("b4") / Rad.sqrt("b3")
    r23 = Rad.sqrt("b2") / Rad.sqrt("b3")
    assert rep.e0.get(26, 0) == r43 and rep.e0.get(25, 26) == r43
    assert rep.e0.get(13, 0) == r23 and rep.e0.get(25, 13) == r23
    assert rep.e0.get(14, 1) == 1 and rep.e0.get(20, 4) == 1
    assert rep.e0.nnz() == 12

    rep = build_rep("D4t3")
    r32 = Rad.sqrt("b3") / Rad.sqrt("b2")
    ir2 = Rad.sqrt("b2").inv()
    assert rep.e0.get(7, 0) == r32 and rep.e0.get(6, 7) == r32
    assert rep.e0.get(3, 0) == ir2 and rep.e0.get(6, 3) == ir2
    assert rep.e0.get(4, 1) == 1 and rep.e0.get(5, 2) == 1
    assert rep.e0.nnz() == 6


# ---------------------------------------------------------------------------
# weights against the character engine


def test_weights_match_character_multiset():
    """Weight multiset of the matrices == weight multiset of the terms of
    the q-character: the two modules are built from independent data."""
    for d in _instances():
        rep = build_rep(d)
        mats = sorted(rep.weights)
        chars = []
        for mon, mult in fundamental_character(d, a=ONE).terms.items():
            chars.extend([mon.weight()] * mult)
        assert mats == sorted(chars), f"{d.tag} r={d.r}"


def test_zero_weight_counts():
    want = {"A2t2": 1, "A2t2even": 1, "A2t2odd": 0,
            "Dt2": 2, "E6t2": 3, "D4t3": 2}
    for d in _instances():
        rep = build_rep(d)
        zero = (0,) * d.r
        assert sum(1 for w in rep.weights if w == zero) == want[d.tag]


# ---------------------------------------------------------------------------
# bar involution


def test_bar_involution_examples():
    t = build_bar_involution(build_rep("A2t2odd", 3))
    assert t.pairs() == [(0, 5), (1, 4), (2, 3)]

    t = build_bar_involution(build_rep("Dt2", 2))
    assert t(2) == 2 and t(5) == 5
    assert t.pairs() == [(0, 4), (1, 3)]

    t = build_bar_involution(build_rep("E6t2"))
    assert t(12) == 12 and t(13) == 13 and t(26) == 26


def test_bar_involution_properties():
    for d in _instances():
        rep = build_rep(d)
        t = build_bar_involution(rep)
        for v in range(rep.dim):
            assert t(t(v)) == v
            wv = rep.weight_of(v)
            assert rep.weight_of(t(v)) == tuple(-x for x in wv)
        tm = t.mat()
        for j in d.finite_nodes():
            assert tm * rep.E[j] * tm == rep.F[j]


# ---------------------------------------------------------------------------
# coproduct and invariant form


def test_coproduct_cartan():
    for d in (dynkin("A2t2"), dynkin("D4t3")):
        rep = build_rep(d)
        for i in d.nodes():
            ki = rep.K_mat(i)
            assert coproduct_action(rep, "K", i) == ki.kron(ki)


def test_coproduct_affine_instantiation():
    rep = build_rep("D4t3")
    z = ZPoly.z()
    de0 = coproduct_action(rep, "E", 0, z, 1)
    want = rep.e0.kron(rep.K_half_mat(0, 1)).scale(z) \
        + rep.K_half_mat(0, -1).kron(rep.e0)
    assert de0 == want
    # F_0(a) carries the inverse parameter
    df0 = coproduct_action(rep, "F", 0, z, 1)
    assert df0 == rep.f0.kron(rep.K_half_mat(0, 1)).scale(z.zinv()) \
        + rep.K_half_mat(0, -1).kron(rep.f0)


def test_coproduct_is_algebra_map_on_commutators():
    """[Delta E_i, Delta F_i] = (Delta K_i - Delta K_i^-1)/(q_i - q_i^-1),
    with the affine node at a symbolic spectral point."""
    for tag, r in (("A2t2", 1), ("D4t3", 2), ("Dt2", 2)):
        d = dynkin(tag, r)
        rep = build_rep(d)
        z = ZPoly.z()
        for i in d.nodes():
            if i == 0:
                de = coproduct_action(rep, "E", 0, z, 1)
                df = coproduct_action(rep, "F", 0, z, 1)
            else:
                de = coproduct_action(rep, "E", i)
                df = coproduct_action(rep, "F", i)
            se = d.sd[i]
            den = Laurent.spow(se) - Laurent.spow(-se)
            ent = []
            for u in range(rep.dim):
                for v in range(rep.dim):
                    k = rep.kexp[i][u] + rep.kexp[i][v]
                    ent.append(Laurent.zero() if k == 0 else
                               (Laurent.spow(k) - Laurent.spow(-k)).divexact(den))
            want = Mat.diag(ent)
            assert de * df - df * de == want, f"{tag} node {i}"


def test_shapovalov():
    for d in _instances():
        rep = build_rep(d)
        g, ok = shapovalov_gram(rep)
        assert ok and g == Mat.identity(rep.dim)
        # adjointness (E_i u, v) = (u, F_i v) on a deterministic sample
        u = {0: 1, rep.dim - 1: 2}
        v = {j: 1 for j in range(rep.dim)}
        for i in d.finite_nodes():
            assert vec_dot(rep.E[i].apply(u), v) == vec_dot(u, rep.F[i].apply(v))


# ---------------------------------------------------------------------------
# adjacency file integrity


def test_adjacency_rejects_corruption():
    from importlib import resources
    text = (resources.files("qtwist") / "data" / "e6_graph.txt").read_text()
    assert len(parse_adjacency(text)) == 34
    bad = text.replace("1 1 2 1", "1 1 2 sqrt[2]", 1)
    with pytest.raises(ConstructionError):
        parse_adjacency(bad)
    with pytest.raises(ConstructionError):
        parse_adjacency("qtwist-e6-adjacency v999\n" + text.split("\n", 1)[1])

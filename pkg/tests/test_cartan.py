"""Diagram-data sanity: symmetrizability, marks, classification constants."""

import pytest
from fractions import Fraction

from qtwist.cartan import Dynkin, dynkin, all_instances, TAGS


def _all():
    return all_instances(max_rank=5)


def test_tags_cover_all_six():
    tags = {d.tag for d in _all()}
    assert tags == set(TAGS), f"missing types: {set(TAGS) - tags}"


def test_cartan_diagonal_and_sign():
    for d in _all():
        for i in d.nodes():
            assert d.c(i, i) == 2
            for j in d.nodes():
                if i == j:
                    continue
                assert d.c(i, j) <= 0
                # zero pattern is symmetric even when values are not
                assert (d.c(i, j) == 0) == (d.c(j, i) == 0), (d.tag, d.r, i, j)


def test_symmetrization():
    # d_i C_ij = d_j C_ji, checked in integers via the doubled d's
    for d in _all():
        for i in d.nodes():
            for j in d.nodes():
                assert d.sd[i] * d.c(i, j) == d.sd[j] * d.c(j, i), \
                    f"{d.tag} r={d.r}: B[{i},{j}] asymmetric"


def test_d_values_positive_and_halves():
    for d in _all():
        for i in d.nodes():
            assert d.sd[i] > 0
            di = d.d_frac(i)
            assert di.denominator in (1, 2)
        if d.tag in ("A2t2", "A2t2even"):
            assert d.d_frac(d.r) == Fraction(1, 2)
            assert all(d.sdt[i] == 2 for i in d.nodes())
        else:
            assert tuple(d.sdt) == tuple(d.sd)


# [DERIVED] these are the unique positive primitive vectors killed by the
# affine matrix; _kernel_marks re-derives them, here they are pinned.
MARKS = {
    ("A2t2", 1): (1, 2),
    ("A2t2even", 2): (1, 2, 2),
    ("A2t2even", 4): (1, 2, 2, 2, 2),
    ("A2t2odd", 3): (1, 1, 2, 1),
    ("A2t2odd", 5): (1, 1, 2, 2, 2, 1),
    ("Dt2", 2): (1, 1, 1),
    ("Dt2", 4): (1, 1, 1, 1, 1),
    ("E6t2", 4): (1, 2, 3, 2, 1),
    ("D4t3", 2): (1, 2, 1),
}


def test_marks_match_known_values():
    for (tag, r), want in MARKS.items():
        d = dynkin(tag, r)
        assert d.marks == want, f"{tag} r={r}: marks {d.marks} != {want}"


def test_marks_kernel_and_primitive():
    from math import gcd
    for d in _all():
        a = d.marks
        for i in d.nodes():
            assert sum(d.c(i, j) * a[j] for j in d.nodes()) == 0
        g = 0
        for x in a:
            assert x > 0
            g = gcd(g, x)
        assert g == 1


def test_rank_validation():
    with pytest.raises(ValueError):
        dynkin("A2t2odd", 2)   # needs r >= 3
    with pytest.raises(ValueError):
        dynkin("Dt2", 1)
    with pytest.raises(ValueError):
        dynkin("E6t2", 3)      # fixed rank 4
    with pytest.raises(ValueError):
        dynkin("A2t2", 2)
    with pytest.raises(ValueError):
        dynkin("nosuch")
    with pytest.raises(ValueError):
        dynkin("A2t2even")     # rank required for families


def test_dimensions():
    assert dynkin("A2t2").dim == 3
    assert dynkin("A2t2even", 3).dim == 7
    assert dynkin("A2t2odd", 3).dim == 6
    assert dynkin("Dt2", 3).dim == 8
    assert dynkin("E6t2").dim == 27
    assert dynkin("D4t3").dim == 8


def test_finite_part_spot_checks():
    # A2t2even r=3: finite diagram has the short root at node r
    d = dynkin("A2t2even", 3)
    assert d.c(2, 3) == -1 and d.c(3, 2) == -2
    assert d.c(1, 2) == -1 and d.c(2, 1) == -1
    # A2t2odd r=3: affine node hangs off node 2, finite part C_r short
    d = dynkin("A2t2odd", 3)
    assert d.c(0, 2) == -1 and d.c(2, 0) == -1
    assert d.c(0, 1) == 0
    assert d.c(2, 3) == -2 and d.c(3, 2) == -1
    # Dt2: both ends doubled, pointing inward
    d = dynkin("Dt2", 3)
    assert d.c(0, 1) == -2 and d.c(1, 0) == -1
    assert d.c(2, 3) == -1 and d.c(3, 2) == -2
    # E6t2 arrow between nodes 2 and 3
    d = dynkin("E6t2")
    assert d.c(2, 3) == -2 and d.c(3, 2) == -1
    assert d.c(3, 4) == -1 and d.c(4, 3) == -1
    # D4t3 triple arrow
    d = dynkin("D4t3")
    assert d.c(1, 2) == -3 and d.c(2, 1) == -1


def test_fixed_and_special_nodes():
    assert dynkin("A2t2").fixed == frozenset() and dynkin("A2t2").special == frozenset({1})
    assert dynkin("A2t2even", 3).special == frozenset({3})
    assert dynkin("A2t2odd", 4).fixed == frozenset({4})
    assert dynkin("Dt2", 4).fixed == frozenset({1, 2, 3})
    assert dynkin("E6t2").fixed == frozenset({3, 4})
    assert dynkin("D4t3").fixed == frozenset({2})


def test_dual_shift_constants():
    # (e, k) encoding of the lowest/highest monomial ratio
    assert dynkin("A2t2").c_h == (3, 3)
    assert dynkin("A2t2even", 2).c_h == (3, 5)
    assert dynkin("A2t2odd", 3).c_h == (3, 6)
    assert dynkin("Dt2", 2).c_h == (0, 4)
    assert dynkin("E6t2").c_h == (3, 12)
    assert dynkin("D4t3").c_h == (0, 6)


def test_factory_cache():
    assert dynkin("E6t2") is dynkin("E6t2", 4)
    assert dynkin("Dt2", 3) is dynkin("Dt2", 3)
    assert dynkin("Dt2", 3) is not dynkin("Dt2", 4)

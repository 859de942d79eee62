from fractions import Fraction
from math import gcd

import pytest

from reference_data import TYPE_ROWS
from toric_ldp.cones import (
    cone_params,
    hj_expansion,
    hj_value,
    index3_membership,
    local_index,
    local_K_self_intersection,
    resolution_rays,
)
from toric_ldp.lattice import LatticeError, det, socius


def coprime_pairs(qmax):
    for q in range(2, qmax + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield p, q


@pytest.mark.parametrize(
    "pq,hj",
    [((5, 12), [2, 4, 2]), ((4, 9), [2, 5]), ((7, 9), [5, 2]), ((2, 3), [3]), ((1, 4), [2, 2, 2])],
)
def test_hj_examples(pq, hj):
    assert hj_expansion(pq) == hj


def test_hj_rejects_basic_cone():
    with pytest.raises(LatticeError):
        hj_expansion((0, 1))


def test_hj_evaluates_back():
    for p, q in coprime_pairs(200):
        bs = hj_expansion((p, q))
        assert all(b >= 2 for b in bs)
        assert hj_value(bs) == Fraction(q, q - p)


@pytest.mark.parametrize("pq,l", [((2, 3), 3), ((1, 7), 1), ((5, 12), 3), ((0, 1), 1), ((3, 4), 2)])
def test_local_index_examples(pq, l):
    assert local_index(pq) == l


@pytest.mark.parametrize("pq,fam", [((2, 3), "A"), ((5, 6), "B"), ((1, 9), None), ((4, 9), "A"), ((7, 9), "B")])
def test_index3_membership_examples(pq, fam):
    assert index3_membership(pq) == fam


def test_local_index_three_iff_sets_a_or_b():
    for p, q in coprime_pairs(200):
        assert (local_index((p, q)) == 3) == (index3_membership((p, q)) is not None)


def test_local_index_two_closed_form():
    # q = 2(p - 1) with p odd
    for p, q in coprime_pairs(200):
        closed = q == 2 * (p - 1) and p % 2 == 1 and p >= 3
        assert (local_index((p, q)) == 2) == closed


def test_local_index_one_is_gorenstein():
    for p, q in coprime_pairs(200):
        assert (local_index((p, q)) == 1) == (p == 1)


def _expected_hj_a(q):
    if q % 9:
        if q == 3:
            return [3]
        if q == 12:
            return [2, 4, 2]
        return [2, 3] + [2] * ((q - 3) // 9 - 2) + [3, 2]
    if q == 9:
        return [2, 5]
    return [2, 3] + [2] * (q // 9 - 2) + [4]


def _expected_hj_b(q):
    if q % 9:
        if q == 6:
            return [6]
        return [4] + [2] * ((q - 6) // 9 - 1) + [4]
    if q == 9:
        return [5, 2]
    return [4] + [2] * (q // 9 - 2) + [3, 2]


def test_hj_closed_forms_for_index_three():
    seen = {"A": 0, "B": 0}
    for p, q in coprime_pairs(100):
        fam = index3_membership((p, q))
        if fam is None:
            continue
        seen[fam] += 1
        expected = _expected_hj_a(q) if fam == "A" else _expected_hj_b(q)
        assert hj_expansion((p, q)) == expected, (p, q)
    assert seen["A"] > 5 and seen["B"] > 5


def test_socius_closed_forms():
    for p, q in coprime_pairs(200):
        fam = index3_membership((p, q))
        if fam is None:
            continue
        ph = socius((p, q))
        if q % 9:
            assert ph == p
        elif fam == "A":
            assert ph == 2 * p - 1
        else:
            assert ph == (p + 1) // 2


@pytest.mark.parametrize(
    "pq,value",
    [((2, 3), Fraction(-1, 3)), ((5, 12), Fraction(-4, 3)), ((1, 7), 0), ((5, 6), Fraction(-8, 3)), ((0, 1), 0)],
)
def test_k_self_intersection_examples(pq, value):
    assert local_K_self_intersection(pq) == value


@pytest.mark.parametrize("tag", sorted(TYPE_ROWS))
def test_type_rows(tag):
    row, start = TYPE_ROWS[tag]
    for xi in range(start, 11):
        p, ph, q, s, (num, den) = row(xi)
        c = cone_params((p, q))
        assert (c.p_hat, c.s, c.local_index) == (ph, s, 3)
        assert -c.kE2 == Fraction(num, den)


def test_type1_and_gorenstein_rows():
    c = cone_params((2, 3))
    assert (c.p_hat, c.s, -c.kE2) == (2, 1, Fraction(1, 3))
    for q in range(2, 30):
        c = cone_params((1, q))
        assert (c.p_hat, c.s, c.kE2) == (1, q - 1, 0)


def test_resolution_examples():
    assert resolution_rays((1, 0), (2, 3)) == [(1, 0), (1, 1), (2, 3)]
    assert resolution_rays((1, 0), (0, 1)) == [(1, 0), (0, 1)]
    rays = resolution_rays((1, 0), (4, 9))
    assert len(rays) == 4
    for j, b in enumerate([2, 5], start=1):
        assert rays[j + 1] == rays[j].scale(b) - rays[j - 1]


def test_resolution_rejects_clockwise():
    with pytest.raises(LatticeError):
        resolution_rays((2, 3), (1, 0))


def test_resolution_rays_are_basic():
    shear = [((1, 0), (0, 1)), ((2, 1), (1, 1)), ((-1, 3), (1, -2))]
    for p, q in coprime_pairs(60):
        for e1, e2 in shear:
            # images of (1,0) and (p,q) under an orientation-preserving map
            a, b = e1
            c, d = e2
            if a * d - b * c != 1:
                continue
            n = (a, c)
            n2 = (a * p + b * q, c * p + d * q)
            rays = resolution_rays(n, n2)
            assert rays[0] == n and rays[-1] == n2
            assert len(rays) == len(hj_expansion((p, q))) + 2
            assert all(det(rays[j], rays[j + 1]) == 1 for j in range(len(rays) - 1))
            assert all(r.is_primitive() for r in rays)

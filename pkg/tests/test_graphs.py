from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reference_data import INDEX3_ROWS, MERGED_PAIRS, MERGED_QUADRUPLE, NAMED_TRIPLES
from toric_ldp.classification import classify, enumerate_admissible, fan_from_triple
from toric_ldp.fans import build_fan
from toric_ldp.graphs import (
    Wve2cGraph,
    canonical_key,
    fan_key,
    graph_of,
    isomorphic,
    reverse_graph,
    to_dot,
)

P2 = [(1, 0), (0, 1), (-1, -1)]


def row_fan(no):
    row = next(r for r in INDEX3_ROWS if r[0] == no)
    return fan_from_triple(row[1:4])


def test_graph_of_examples():
    g = graph_of(row_fan("i"))
    assert g.vertex_weights == (0, 0, 3)
    assert g.edge_weights == ((2, 3), (0, 1), (0, 1))
    g = graph_of(build_fan(P2))
    assert g.vertex_weights == (1, 1, 1)
    assert g.edge_weights == ((0, 1),) * 3
    g = graph_of(row_fan("ix"))
    assert g.vertex_weights == (-1, -1, -1)
    assert g.edge_weights == ((7, 9), (4, 9), (1, 9))


def test_graph_of_length_mismatch():
    with pytest.raises(ValueError):
        graph_of(build_fan(P2), [1, 2])


def test_reverse_examples():
    g = graph_of(fan_from_triple(NAMED_TRIPLES["quad_a"]))
    assert sorted(p for p, _ in reverse_graph(g).edge_weights) == [1, 2, 5]
    p2 = graph_of(build_fan(P2))
    assert reverse_graph(p2) == p2


graphs = st.integers(3, 7).flatmap(
    lambda n: st.builds(
        Wve2cGraph,
        st.tuples(*[st.integers(-4, 4)] * n),
        st.tuples(*[st.sampled_from([(0, 1), (2, 3), (1, 4), (5, 6), (4, 9), (7, 9), (3, 8)])] * n),
    )
)


@given(graphs)
def test_reverse_is_involution(g):
    assert reverse_graph(reverse_graph(g)) == g


@given(graphs, st.integers(0, 10))
def test_key_invariance(g, k):
    key = canonical_key(g)
    assert canonical_key(g.rotate(k)) == key
    assert canonical_key(reverse_graph(g)) == key
    assert canonical_key(reverse_graph(g).rotate(k)) == key


def test_key_examples():
    a = fan_key(fan_from_triple(NAMED_TRIPLES["quad_a"]))
    b = fan_key(fan_from_triple(NAMED_TRIPLES["quad_b"]))
    assert a == b
    assert fan_key(row_fan("i")) != fan_key(row_fan("v"))
    assert not isomorphic(graph_of(row_fan("iii")), graph_of(row_fan("iv")))
    g = graph_of(row_fan("iii"))
    assert isomorphic(g, g)


@pytest.mark.parametrize("a,b", MERGED_PAIRS + [(MERGED_QUADRUPLE[0], x) for x in MERGED_QUADRUPLE[1:]])
def test_listed_merges(a, b):
    ga = graph_of(fan_from_triple(NAMED_TRIPLES[a]))
    gb = graph_of(fan_from_triple(NAMED_TRIPLES[b]))
    assert isomorphic(ga, gb)


def test_dot_output():
    dot = to_dot(graph_of(row_fan("i")))
    assert 'label="0"' in dot and 'label="3"' in dot
    assert dot.count("label=\"(") == 1
    assert '[label="(2,3)"]' in dot
    assert dot.count(" -- ") == 3


def test_json_round_trip():
    g = graph_of(row_fan("xiii"))
    assert Wve2cGraph.from_dict(g.to_dict()) == g


def test_rejects_bad_graph():
    with pytest.raises(ValueError):
        Wve2cGraph((1, 2, 3), ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        Wve2cGraph((1, 2, 3), ((0, 1), (0, 1), (2, 4)))


def _unimodular_equivalent(f1, f2) -> bool:
    """Is there a GL2(Z) map taking the ray set of f1 onto that of f2?

    For each matching of rays the map is forced by two independent rays, so
    it is solved exactly and then checked.
    """
    a = f1.generators
    for perm in permutations(f2.generators):
        (x1, y1), (x2, y2) = a[0], a[1]
        d = x1 * y2 - x2 * y1
        inv = [[Fraction(y2, d), Fraction(-x2, d)], [Fraction(-y1, d), Fraction(x1, d)]]
        (u1, v1), (u2, v2) = perm[0], perm[1]
        m = [
            [u1 * inv[0][0] + u2 * inv[1][0], u1 * inv[0][1] + u2 * inv[1][1]],
            [v1 * inv[0][0] + v2 * inv[1][0], v1 * inv[0][1] + v2 * inv[1][1]],
        ]
        if any(e.denominator != 1 for row in m for e in row):
            continue
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] not in (1, -1):
            continue
        x3, y3 = a[2]
        if (m[0][0] * x3 + m[0][1] * y3, m[1][0] * x3 + m[1][1] * y3) == tuple(perm[2]):
            return True
    return False


def test_keys_agree_with_unimodular_search():
    fans = []
    for ix in (1, 2, 3):
        fans += [fan_from_triple(t) for t in enumerate_admissible(ix)]
    keys = [fan_key(f) for f in fans]
    for i, f in enumerate(fans):
        for j in range(i, len(fans)):
            assert (keys[i] == keys[j]) == _unimodular_equivalent(f, fans[j]), (f, fans[j])


def test_representatives_pairwise_distinct():
    for ix in (1, 2, 3):
        recs = classify(ix)
        for i, a in enumerate(recs):
            for b in recs[i + 1 :]:
                assert not _unimodular_equivalent(a.fan, b.fan)

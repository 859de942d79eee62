import pytest
from hypothesis import given
from hypothesis import strategies as st

from toric_ldp.snf import determinantal_factors, smith_normal_form


@pytest.mark.parametrize(
    "matrix,factors",
    [
        ([[1, 0, -1], [0, 1, -1]], [1, 1]),
        ([[1, 7, -8], [0, 9, -9]], [1, 9]),
        ([[1, 5, -11], [0, 6, -12]], [1, 6]),
        ([[2, 0, 0], [0, 3, 0]], [1, 6]),
        ([[4, 6, 8], [6, 10, 14]], [2, 2]),
    ],
)
def test_examples(matrix, factors):
    assert smith_normal_form(matrix) == factors


def test_rank_deficient():
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2, 3], [2, 4, 6]])


entry = st.integers(-40, 40)


@given(st.lists(st.lists(entry, min_size=3, max_size=3), min_size=2, max_size=2))
def test_agrees_with_minors(matrix):
    try:
        expected = determinantal_factors(matrix)
    except ValueError:
        with pytest.raises(ValueError):
            smith_normal_form(matrix)
        return
    got = smith_normal_form(matrix)
    assert got == expected
    assert got[1] % got[0] == 0

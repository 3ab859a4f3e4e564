from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautheight.exact import FractionFormatError, format_fraction, parse_fraction
from tautheight.linalg import SingularMatrixError, determinant, inverse, scaled_inverse, solve


def naive_solve(A, b):
    """Textbook Gauss-Jordan over Fraction with partial pivoting on nonzero entries."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y) for y in rhs] for row, rhs in zip(A, b)]
    for k in range(n):
        p = next(i for i in range(k, n) if M[i][k] != 0)
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        M[k] = [x / piv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    return [row[n:] for row in M]


@pytest.mark.parametrize(
    "value, text",
    [(Fraction(3, 2), "3/2"), (Fraction(-4, 6), "-2/3"), (Fraction(5), "5"), (0, "0"), (Fraction(-7, 1), "-7")],
)
def test_format_fraction(value, text):
    assert format_fraction(value) == text


@pytest.mark.parametrize("text, value", [("3/2", Fraction(3, 2)), (" -4/6 ", Fraction(-2, 3)), ("7", Fraction(7)), (5, Fraction(5))])
def test_parse_fraction(text, value):
    assert parse_fraction(text) == value


@pytest.mark.parametrize("bad", ["1/0", "1.5", "a/b", "", "1//2", True, None, 1.5])
def test_parse_fraction_rejects(bad):
    with pytest.raises(FractionFormatError):
        parse_fraction(bad)


@given(st.fractions(max_denominator=10**6))
def test_fraction_round_trip(x):
    assert parse_fraction(format_fraction(x)) == x


small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(small, min_size=2, max_size=2), min_size=n, max_size=n),
)))
def test_solve_matches_naive_gauss(data):
    A, b = data
    try:
        expected = naive_solve(A, b)
    except StopIteration:
        with pytest.raises(SingularMatrixError):
            solve(A, b)
        assert determinant(A) == 0
        return
    assert solve(A, b) == expected
    assert determinant(A) != 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_scaled_inverse_matches_inverse(A):
    if determinant(A) == 0:
        with pytest.raises(SingularMatrixError):
            scaled_inverse(A)
        return
    adj, d = scaled_inverse(A)
    assert abs(d) == abs(determinant(A))
    inv = inverse(A)
    assert [[Fraction(x, d) for x in row] for row in adj] == inv


def test_determinant_small():
    assert determinant([[2, 1], [1, 2]]) == 3
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)
    assert determinant([]) == 1
    assert determinant([[1, 2], [2, 4]]) == 0

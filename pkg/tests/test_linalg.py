import random
from fractions import Fraction

import pytest

from segrekit import (ExactMatrix, PolynomialZ, char_poly, clear_denominators,
                      mat_mul, mat_pow, matrix_from_json_dict,
                      matrix_to_json_dict, rank, rational_eigenvalues,
                      rational_roots, shift)

from oracles import gaussian_rank, poly_from_linear_factors


def jordan_block(lam, size):
    return ExactMatrix.from_rows(
        [[lam if i == j else (1 if j == i + 1 else 0) for j in range(size)]
         for i in range(size)])


# the worked 10x10 example: eigenvalue 1 with blocks (2,1), 2 with (3),
# 3 with (1), 4 with (2,1)
WORKED_10x10 = ExactMatrix.from_rows([
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 2, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 3, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 4, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4],
])


def test_construction_and_access():
    m = ExactMatrix.from_rows([[1, "1/2"], [Fraction(3, 4), 0]])
    assert m.rows == 2 and m.cols == 2
    assert m[0, 1] == Fraction(1, 2)
    assert m.entry(1, 0) == Fraction(3, 4)
    assert m.row(0) == (1, Fraction(1, 2))
    assert m.to_rows()[1] == [Fraction(3, 4), 0]


def test_construction_rejects_bad_input():
    with pytest.raises(TypeError):
        ExactMatrix.from_rows([[0.5]])
    with pytest.raises(TypeError):
        ExactMatrix.from_rows([[True]])
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([])
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        ExactMatrix(0, 1, [])
    with pytest.raises(IndexError):
        ExactMatrix.identity(2).entry(2, 0)


def test_equality_and_hash():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix(2, 2, [1, 2, 3, 4])
    assert a == b
    assert hash(a) == hash(b)
    assert a != ExactMatrix.from_rows([[1, 2, 3, 4]])


def test_mat_mul_golden():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([["1/2", 0], [0, 1]])
    assert mat_mul(a, b) == ExactMatrix.from_rows([["1/2", 2], ["3/2", 4]])
    with pytest.raises(ValueError):
        mat_mul(a, ExactMatrix.from_rows([[1, 2]]))


def test_mat_pow():
    j = jordan_block(0, 3)
    assert mat_pow(j, 0) == ExactMatrix.identity(3)
    assert rank(j) == 2
    assert rank(mat_pow(j, 2)) == 1
    assert mat_pow(j, 3) == ExactMatrix.zeros(3, 3)
    assert mat_pow(jordan_block(2, 2), 2) == ExactMatrix.from_rows([[4, 4], [0, 4]])
    with pytest.raises(ValueError):
        mat_pow(j, -1)
    with pytest.raises(ValueError):
        mat_pow(ExactMatrix.from_rows([[1, 2]]), 2)


def test_shift_golden():
    m = jordan_block(5, 2)
    assert shift(m, 5) == ExactMatrix.from_rows([[0, 1], [0, 0]])
    assert shift(m, Fraction(1, 2)) == ExactMatrix.from_rows(
        [["9/2", 1], [0, "9/2"]])
    with pytest.raises(ValueError):
        shift(ExactMatrix.from_rows([[1, 2]]), 1)


def test_rank_basics():
    assert rank(ExactMatrix.identity(10)) == 10
    assert rank(ExactMatrix.zeros(3, 4)) == 0
    assert rank(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(ExactMatrix.from_rows([[0, 1], [0, 0]])) == 1
    # rank 1 visible only after clearing row denominators exactly
    assert rank(ExactMatrix.from_rows([["1/2", "1/3"], ["1/4", "1/6"]])) == 1
    assert rank(WORKED_10x10 - ExactMatrix.identity(10)) == 8


def test_rank_matches_gaussian_oracle_randomized():
    rng = random.Random(20240817)
    for trial in range(120):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        data = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                 for _ in range(cols)] for _ in range(rows)]
        if trial % 3 == 0:
            # force singularity: repeat or scale a row
            data[rng.randrange(rows)] = [2 * e for e in data[0]]
        m = ExactMatrix.from_rows(data)
        assert rank(m) == gaussian_rank(data), data


def test_rank_of_product_bounded():
    rng = random.Random(7)
    for _ in range(40):
        a = ExactMatrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        b = ExactMatrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        assert rank(mat_mul(a, b)) <= min(rank(a), rank(b))


def test_clear_denominators():
    m = ExactMatrix.from_rows([["1/2", "1/3"], [1, 0]])
    scaled, d = clear_denominators(m)
    assert d == 6
    assert scaled == ExactMatrix.from_rows([[3, 2], [6, 0]])
    same, d1 = clear_denominators(ExactMatrix.identity(2))
    assert d1 == 1 and same == ExactMatrix.identity(2)


def test_polynomial_basics():
    p = PolynomialZ([2, -3, 1])
    assert p.degree == 2
    assert p(0) == 2 and p(1) == 0 and p(2) == 0 and p(3) == 2
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    assert str(p) == "x^2 - 3x + 2"
    assert PolynomialZ([0, 0, 0]).is_zero
    assert PolynomialZ([5, 0]).degree == 0
    assert PolynomialZ() == PolynomialZ([0])
    with pytest.raises(ValueError):
        PolynomialZ([1.5])


def test_char_poly_golden():
    diag = ExactMatrix.from_rows([[1, 0], [0, 2]])
    assert char_poly(diag) == PolynomialZ([2, -3, 1])
    assert char_poly(jordan_block(5, 2)) == PolynomialZ([25, -10, 1])
    assert char_poly(ExactMatrix.from_rows([[7]])) == PolynomialZ([-7, 1])
    with pytest.raises(ValueError):
        char_poly(ExactMatrix.from_rows([[1, 2]]))


def test_char_poly_worked_10x10():
    # (x-1)^3 (x-2)^3 (x-3) (x-4)^3, expanded by plain convolution
    expected = poly_from_linear_factors([1, 1, 1, 2, 2, 2, 3, 4, 4, 4])
    assert char_poly(WORKED_10x10) == PolynomialZ(expected)


def test_char_poly_scales_rational_input():
    # [[1/2, 0], [0, 1/2]] is scaled by 2; result is char poly of diag(1, 1)
    m = ExactMatrix.from_rows([["1/2", 0], [0, "1/2"]])
    assert char_poly(m) == PolynomialZ([1, -2, 1])


def horner_matrix(poly, a):
    n = a.rows
    acc = ExactMatrix.zeros(n, n)
    for c in reversed(poly.coefficients):
        acc = mat_mul(acc, a) + c * ExactMatrix.identity(n)
    return acc


def test_cayley_hamilton_randomized():
    rng = random.Random(99)
    for size in range(1, 7):
        for _ in range(4):
            a = ExactMatrix.from_rows(
                [[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)])
            assert horner_matrix(char_poly(a), a) == ExactMatrix.zeros(size, size)


def test_rational_roots_golden():
    assert rational_roots(PolynomialZ([2, -3, 1])) == ([(1, 1), (2, 1)], 0)
    assert rational_roots(PolynomialZ([25, -10, 1])) == ([(5, 2)], 0)
    assert rational_roots(PolynomialZ([1, 0, 1])) == ([], 2)
    assert rational_roots(PolynomialZ([-2, 0, 1])) == ([], 2)
    assert rational_roots(PolynomialZ([-1, 2])) == ([(Fraction(1, 2), 1)], 0)
    assert rational_roots(PolynomialZ([0, 0, 0, 1])) == ([(0, 3)], 0)
    assert rational_roots(PolynomialZ([7])) == ([], 0)
    with pytest.raises(ValueError):
        rational_roots(PolynomialZ())


def test_rational_roots_mixed():
    # (x^2+1)(2x-1)(x-3) = 2x^4 - 7x^3 + 5x^2 - 7x + 3
    roots, remainder = rational_roots(PolynomialZ([3, -7, 5, -7, 2]))
    assert roots == [(Fraction(1, 2), 1), (3, 1)]
    assert remainder == 2


def test_rational_roots_reconstructs_products():
    rng = random.Random(5)
    for _ in range(30):
        chosen = sorted(rng.sample(range(-5, 6), rng.randint(1, 4)))
        mults = [rng.randint(1, 3) for _ in chosen]
        flat = [r for r, m in zip(chosen, mults) for _ in range(m)]
        poly = PolynomialZ(poly_from_linear_factors(flat))
        roots, remainder = rational_roots(poly)
        assert roots == [(r, m) for r, m in zip(chosen, mults)]
        assert remainder == 0


def test_rational_eigenvalues_unscales():
    m = ExactMatrix.from_rows([["1/2", 0], [0, "1/3"]])
    roots, remainder = rational_eigenvalues(m)
    assert roots == [(Fraction(1, 3), 1), (Fraction(1, 2), 1)]
    assert remainder == 0
    roots, remainder = rational_eigenvalues(
        ExactMatrix.from_rows([[0, 1], [2, 0]]))
    assert roots == [] and remainder == 2


def test_json_round_trip():
    m = ExactMatrix.from_rows([[1, "1/2"], ["-3/4", 0]])
    d = matrix_to_json_dict(m)
    assert d == {"rows": 2, "cols": 2, "entries": [[1, "1/2"], ["-3/4", 0]]}
    assert matrix_from_json_dict(d) == m


def test_json_validation():
    good = {"rows": 1, "cols": 1, "entries": [[1]]}
    assert matrix_from_json_dict(good) == ExactMatrix.from_rows([[1]])
    bad_cases = [
        [],
        {},
        {"rows": 1, "cols": 1},
        {"rows": 0, "cols": 1, "entries": []},
        {"rows": 1, "cols": 1, "entries": [1]},
        {"rows": 2, "cols": 2, "entries": [[1, 2], [3]]},
        {"rows": 1, "cols": 1, "entries": [[0.5]]},
        {"rows": 1, "cols": 1, "entries": [[True]]},
        {"rows": 1, "cols": 1, "entries": [["1/0"]]},
        {"rows": 1, "cols": 1, "entries": [["abc"]]},
        {"rows": 1, "cols": 1, "entries": [[None]]},
    ]
    for bad in bad_cases:
        with pytest.raises(ValueError):
            matrix_from_json_dict(bad)

import random

import pytest
from sympy import QQ

from awdaha import linalg
from awdaha.errors import DimensionError, Singular


def mat(rows, field):
    return linalg.new_matrix([[field.convert(e) for e in row] for row in rows], field.domain)


def vec(values, field):
    return [field.convert(e) for e in values]


def test_new_matrix_rejects_bad_shapes(q2):
    with pytest.raises(DimensionError):
        linalg.new_matrix([[1, 2]], q2.domain)
    with pytest.raises(DimensionError):
        linalg.new_matrix([], q2.domain)
    with pytest.raises(DimensionError):
        linalg.new_matrix([[0] * 33 for _ in range(33)], q2.domain)


def test_inverse_and_determinant(q2):
    M = mat([[2, 1], [1, 1]], q2)
    assert linalg.determinant(M) == QQ(1)
    assert M * linalg.inverse(M) == linalg.identity(2, q2.domain)
    with pytest.raises(Singular):
        linalg.inverse(mat([[1, 2], [2, 4]], q2))


def test_char_poly_matches_roots(q2):
    M = mat([[2, 1], [0, 3]], q2)
    assert linalg.char_poly(M) == linalg.poly_from_roots([QQ(2), QQ(3)], q2.domain)


def test_poly_at_matrix_is_zero_on_char_poly(q_symbolic):
    M = mat([["q", 1, 0], [0, "1/q", 2], [3, 0, "q^2"]], q_symbolic)
    p = linalg.char_poly(M)
    assert linalg.poly_at_matrix(p, M) == linalg.zero_matrix(3, q_symbolic.domain)


@pytest.mark.parametrize(
    "rows, diagonalizable, multiplicity_free",
    [
        ([[2, 1], [0, 3]], True, True),
        ([[1, 1], [0, 1]], False, False),
        ([[5, 0], [0, 5]], True, False),
        ([[0, -1], [1, 0]], True, True),
    ],
)
def test_diagonalizability(q2, rows, diagonalizable, multiplicity_free):
    M = mat(rows, q2)
    assert linalg.is_diagonalizable(M) is diagonalizable
    assert linalg.is_multiplicity_free(M) is multiplicity_free


def test_min_poly(q2):
    R = linalg.polynomial_ring(q2.domain)
    x = R.gens[0]
    assert linalg.min_poly(mat([[1, 1], [0, 1]], q2)) == (x - 1) ** 2
    assert linalg.min_poly(linalg.scalar_matrix(QQ(5), 3, q2.domain)) == x - 5


def test_rational_roots(q2, q_symbolic):
    R = linalg.polynomial_ring(q2.domain)
    x = R.gens[0]
    roots = linalg.rational_roots((x - QQ(1, 2)) ** 2 * (x ** 2 + 1))
    assert roots.roots == [(QQ(1, 2), 2)]
    assert not roots.splits

    S = linalg.polynomial_ring(q_symbolic.domain)
    y = S.gens[0]
    q = q_symbolic.q
    found = linalg.rational_roots((y - q) * (y - 1 / q))
    assert found.splits
    assert {value for value, _ in found.roots} == {q, 1 / q}


def test_nullspace_and_subspace(q2):
    M = mat([[1, 2, 3], [2, 4, 6], [0, 0, 1]], q2)
    kernel = linalg.nullspace(M)
    assert len(kernel) == 1
    assert linalg.apply(M.to_list(), kernel[0], q2.domain) == [QQ(0)] * 3

    W = linalg.Subspace.span([vec(v, q2) for v in ([1, 0, 0], [2, 0, 0], [0, 1, 1])], 3, q2.domain)
    assert W.dim == 2
    assert W.is_proper()
    assert W.contains([QQ(3), QQ(2), QQ(2)])
    assert not W.contains([QQ(0), QQ(0), QQ(1)])


def test_subspace_invariance(q2):
    upper = mat([[1, 2], [0, 3]], q2)
    line = linalg.Subspace.span([vec([1, 0], q2)], 2, q2.domain)
    assert line.is_invariant([upper])
    assert not line.is_invariant([upper.transpose()])


def test_eigenspace(q2):
    M = mat([[2, 0, 0], [0, 2, 0], [0, 0, 7]], q2)
    assert linalg.eigenspace(M, QQ(2)).dim == 2
    assert linalg.eigenspace(M, QQ(7)).dim == 1


def test_scalar_value(q2):
    assert linalg.scalar_value(linalg.scalar_matrix(QQ(3, 4), 2, q2.domain)) == QQ(3, 4)
    assert linalg.scalar_value(mat([[1, 0], [0, 2]], q2)) is None


def test_matrix_text_round_trip(q_symbolic):
    M = mat([["q", "1/2"], ["-3*q^-2", 0]], q_symbolic)
    text = linalg.format_matrix(M, q_symbolic)
    assert text.splitlines()[0] == "2"
    assert linalg.parse_matrix(text, q_symbolic) == M


def test_parse_matrix_rejects_row_count(q2):
    with pytest.raises(DimensionError):
        linalg.parse_matrix("2\n1 0\n", q2)


def test_identity_and_zero_match_list_built_matrices(q2):
    M = mat([[2, 1], [1, 1]], q2)
    assert linalg.identity(2, q2.domain) == mat([[1, 0], [0, 1]], q2)
    assert linalg.zero_matrix(2, q2.domain) == mat([[0, 0], [0, 0]], q2)
    assert M - M == linalg.zero_matrix(2, q2.domain)
    assert linalg.commutator(M, linalg.identity(2, q2.domain)) == linalg.zero_matrix(2, q2.domain)


def random_matrix(field, rng, n):
    def entry():
        value = field.fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if field.is_symbolic and rng.random() < 0.5:
            value *= field.q_power(rng.randint(-2, 2))
        return value

    return mat([[entry() for _ in range(n)] for _ in range(n)], field)


@pytest.mark.parametrize("seed", range(8))
def test_random_matrix_identities(q2, seed):
    rng = random.Random(seed)
    M = random_matrix(q2, rng, rng.randint(1, 5))
    n = linalg.dimension(M)
    p = linalg.char_poly(M)
    assert linalg.poly_at_matrix(p, M) == linalg.zero_matrix(n, q2.domain)
    assert p.rem(linalg.min_poly(M)) == 0
    if linalg.determinant(M):
        I = linalg.identity(n, q2.domain)
        assert M * linalg.inverse(M) == I
        assert linalg.inverse(M) * M == I


@pytest.mark.parametrize("seed", range(3))
def test_random_matrix_identities_over_function_field(q_symbolic, seed):
    rng = random.Random(seed)
    M = random_matrix(q_symbolic, rng, rng.randint(1, 3))
    n = linalg.dimension(M)
    p = linalg.char_poly(M)
    assert linalg.poly_at_matrix(p, M) == linalg.zero_matrix(n, q_symbolic.domain)
    assert p.rem(linalg.min_poly(M)) == 0
    if linalg.determinant(M):
        assert M * linalg.inverse(M) == linalg.identity(n, q_symbolic.domain)

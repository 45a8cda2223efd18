import random

import pytest

from linkgamma.exactnum import Poly
from linkgamma.polylin import (
    NotUnimodularError,
    adjugate,
    det,
    identity,
    int_inverse,
    mat_mul,
    transpose,
)


def cofactor_det(m):
    # independent oracle: plain first-row cofactor expansion
    n = len(m)
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def rand_int_matrix(rng, n):
    return tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n))


def rand_poly_matrix(rng, n, deg=1):
    return tuple(
        tuple(Poly(tuple(rng.randint(-4, 4) for _ in range(deg + 1))) for _ in range(n))
        for _ in range(n)
    )


def rand_unimodular(rng, n):
    m = identity(n)
    for _ in range(3 * n):
        shear = [list(row) for row in identity(n)]
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        shear[i][j] = rng.choice((-2, -1, 1, 2))
        m = mat_mul(m, tuple(tuple(r) for r in shear))
    return m


# ------------------------------------------------------------------------ det


def test_det_symplectic_block():
    assert det(((0, 1), (-1, 0))) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_det_identity(n):
    assert det(identity(n)) == 1


def test_det_fixture_pencil():
    # A - xV for V = [[0,2],[1,0]]: hand expansion (1-2x)(1+x)
    m = (
        (Poly(()), Poly((1, -2))),
        (Poly((-1, -1)), Poly(())),
    )
    assert det(m) == Poly((1, -1, -2))


def test_det_requires_square():
    with pytest.raises(ValueError, match="square"):
        det(((1, 2, 3), (4, 5, 6)))


def test_det_rejects_other_entry_types():
    with pytest.raises(TypeError):
        det(((1.0, 0.0), (0.0, 1.0)))


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(5)
    for n in range(1, 6):
        for _ in range(30):
            m = rand_int_matrix(rng, n)
            assert det(m) == cofactor_det([list(r) for r in m])
    for n in range(1, 5):
        for _ in range(10):
            m = rand_poly_matrix(rng, n)
            assert det(m) == cofactor_det([list(r) for r in m])


def test_det_singular_integer_matrix():
    assert det(((1, 2), (2, 4))) == 0
    assert det(((0, 0), (0, 0))) == 0


# ------------------------------------------------------------------- adjugate


def test_adjugate_symplectic_block():
    assert adjugate(((0, 1), (-1, 0))) == ((0, -1), (1, 0))


def test_adjugate_fixture_pencil():
    m = (
        (Poly(()), Poly((1, -2))),
        (Poly((-1, -1)), Poly(())),
    )
    adj = adjugate(m)
    assert adj == (
        (Poly(()), Poly((-1, 2))),
        (Poly((1, 1)), Poly(())),
    )


@pytest.mark.parametrize("n", range(1, 6))
def test_adjugate_identity(n):
    assert adjugate(identity(n)) == identity(n)


def test_adjugate_times_matrix_is_det_times_identity():
    rng = random.Random(17)
    for n in range(1, 9):
        for _ in range(3):
            m = rand_int_matrix(rng, n)
            d = det(m)
            expected = tuple(
                tuple(d if i == j else 0 for j in range(n)) for i in range(n)
            )
            assert mat_mul(m, adjugate(m)) == expected
    for n in range(1, 5):
        m = rand_poly_matrix(rng, n)
        d = det(m)
        zero = Poly(())
        expected = tuple(
            tuple(d if i == j else zero for j in range(n)) for i in range(n)
        )
        assert mat_mul(m, adjugate(m)) == expected


# ---------------------------------------------------------------- int_inverse


def test_int_inverse_symplectic_block():
    assert int_inverse(((0, 1), (-1, 0))) == ((0, -1), (1, 0))


def test_int_inverse_identity():
    assert int_inverse(identity(4)) == identity(4)


def test_int_inverse_rejects_non_unimodular():
    with pytest.raises(NotUnimodularError) as info:
        int_inverse(((2, 0), (0, 1)))
    assert info.value.determinant == 2
    assert "not unimodular" in str(info.value)


def test_int_inverse_roundtrip_on_random_unimodular():
    rng = random.Random(29)
    for n in range(1, 7):
        for _ in range(10):
            m = rand_unimodular(rng, n)
            inv = int_inverse(m)
            assert mat_mul(inv, m) == identity(n)
            assert mat_mul(m, inv) == identity(n)


def test_transpose_involution():
    rng = random.Random(37)
    m = rand_int_matrix(rng, 5)
    assert transpose(transpose(m)) == m

import random

from sugraverify import linalg
from sugraverify.exactnum import Scalar, sqrt_scalar


def S(x):
    return Scalar(x)


def _mat(rows):
    return [[S(x) for x in r] for r in rows]


def test_rref_and_rank():
    m = _mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert linalg.rank(m) == 2
    assert linalg.rank(linalg.eye(4)) == 4


def test_nullspace_exact():
    m = _mat([[1, 2, 3], [2, 4, 6]])
    basis = linalg.nullspace(m)
    assert len(basis) == 2
    for v in basis:
        out = [sum((m[i][j] * v[j] for j in range(3)), S(0)) for i in range(2)]
        assert all(x.is_zero() for x in out)


def test_nullspace_over_radical_tower():
    r2 = sqrt_scalar(S(2))
    m = [[S(1), r2], [r2, S(2)]]          # rank 1
    basis = linalg.nullspace(m)
    assert len(basis) == 1
    v = basis[0]
    assert (m[0][0] * v[0] + m[0][1] * v[1]).is_zero()


def test_det_and_inverse():
    m = _mat([[2, 1], [1, 1]])
    assert linalg.det(m) == S(1)
    inv = linalg.inverse(m)
    assert linalg.mat_eq_zero(linalg.mat_sub(linalg.mat_mul(m, inv), linalg.eye(2)))


def test_det_singular():
    assert linalg.det(_mat([[1, 2], [2, 4]])).is_zero()


def test_solve():
    m = _mat([[1, 1], [1, -1]])
    x = linalg.solve(m, [S(3), S(1)])
    assert x == [S(2), S(1)]
    assert linalg.solve(_mat([[1, 1], [1, 1]]), [S(0), S(1)]) is None


def test_charpoly_small():
    # diag(1,2): p(x) = x^2 - 3x + 2
    c = linalg.charpoly(_mat([[1, 0], [0, 2]]))
    assert c == [S(2), S(-3), S(1)]


def test_charpoly_random_cayley_hamilton():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = _mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        coeffs = linalg.charpoly(m)
        acc = linalg.zeros(n, n)
        power = linalg.eye(n)
        for k in range(n + 1):
            acc = linalg.mat_add(acc, linalg.mat_scale(power, coeffs[k]))
            power = linalg.mat_mul(power, m)
        assert linalg.mat_eq_zero(acc)

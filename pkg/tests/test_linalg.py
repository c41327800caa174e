import random

import pytest

from lieshift.fields import QQ, FieldError
from lieshift.linalg import Matrix, kernel_basis, normalize_vector, rank, rref, solve


def _m(rows, ncols=None, field=QQ):
    conv = lambda x: x if not isinstance(x, int) else field.from_int(x)
    return Matrix(field, [[conv(x) for x in r] for r in rows], ncols=ncols)


def test_matrix_validation():
    with pytest.raises(FieldError):
        Matrix(QQ, [[QQ.one], [QQ.one, QQ.zero]])
    with pytest.raises(FieldError):
        Matrix(QQ, [[1]])  # raw ints are not field elements
    assert Matrix(QQ, [], ncols=4).ncols == 4


def test_rank_simple():
    assert rank(_m([[1, 2], [2, 4]])) == 1
    assert rank(_m([[1, 0], [0, 1]])) == 2
    assert rank(_m([[0, 0], [0, 0]])) == 0
    assert rank(_m([], ncols=3)) == 0


def test_rank_zero_head_rows():
    # regression: rows with a zero under the pivot still need rescaling,
    # or the fraction-free division at the next step is inexact
    M = _m([
        [2, 1, 1, 0],
        [0, 3, 1, 1],
        [0, 0, 5, 7],
        [2, 1, 1, 11],
    ])
    assert rank(M) == 4


def test_kernel_golden():
    # x + y + z = 0, y - z = 0  ->  kernel line through (2, -1, -1)
    M = _m([[1, 1, 1], [0, 1, -1]])
    ker = kernel_basis(M)
    assert len(ker) == 1
    assert [str(c) for c in ker[0]] == ["2", "-1", "-1"]


def test_kernel_of_zero_matrix():
    ker = kernel_basis(_m([[0, 0, 0]]))
    assert len(ker) == 3
    # canonical unit vectors
    assert [[str(c) for c in v] for v in ker] == [
        ["1", "0", "0"],
        ["0", "1", "0"],
        ["0", "0", "1"],
    ]


def test_kernel_is_exact_kernel():
    rng = random.Random(7)
    for _ in range(25):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[QQ.from_int(rng.randint(-6, 6)) for _ in range(m)] for _ in range(n)]
        M = Matrix(QQ, rows)
        ker = kernel_basis(M)
        assert rank(M) + len(ker) == m
        for v in ker:
            for r in rows:
                s = QQ.zero
                for a, x in zip(r, v):
                    s = s + a * x
                assert s.is_zero


def test_rank_over_function_field():
    F = QQ.extend("t")
    t = F.var("t")
    M = Matrix(F, [[t, F.one], [t * t, t]])
    assert rank(M) == 1
    ker = kernel_basis(M)
    assert len(ker) == 1
    v = ker[0]
    assert (t * v[0] + v[1]).is_zero


def test_kernel_canonical_over_tower():
    F = QQ.extend("t")
    t = F.var("t")
    # single equation t*x + y = 0: kernel (1, -t) after normalization
    ker = kernel_basis(Matrix(F, [[t, F.one]]))
    assert len(ker) == 1
    assert str(ker[0][0]) == "1" and str(ker[0][1]) == "-t"


def test_normalize_vector():
    v = [QQ.rational(-1, 2), QQ.rational(3, 2), QQ.zero]
    out = normalize_vector(QQ, v)
    assert [str(c) for c in out] == ["1", "-3", "0"]
    F = QQ.extend("t")
    t = F.var("t")
    out2 = normalize_vector(F, [t * 2, t * t * 2])
    assert [str(c) for c in out2] == ["1", "t"]


def test_rref_and_solve():
    rows, piv = rref(QQ, [[QQ.from_int(2), QQ.from_int(4)], [QQ.from_int(1), QQ.from_int(2)]])
    assert piv == [0]
    assert [[str(c) for c in r] for r in rows] == [["1", "2"]]
    x = solve(QQ, [[QQ.one, QQ.one], [QQ.one, -QQ.one]], [QQ.from_int(3), QQ.one])
    assert [str(c) for c in x] == ["2", "1"]
    assert solve(QQ, [[QQ.one], [QQ.one]], [QQ.one, QQ.zero]) is None
    assert solve(QQ, [], []) == []


def test_solve_underdetermined_free_vars_zero():
    x = solve(QQ, [[QQ.one, QQ.one, QQ.one]], [QQ.from_int(5)])
    assert [str(c) for c in x] == ["5", "0", "0"]


def test_rank_agrees_with_rref():
    rng = random.Random(11)
    for _ in range(30):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[QQ.rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m)] for _ in range(n)]
        _, piv = rref(QQ, [list(r) for r in rows])
        assert rank(Matrix(QQ, rows)) == len(piv)

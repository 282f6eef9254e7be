"""Exact linear algebra against independent oracles.

Rank is cross-checked by largest-nonvanishing-minor search and by
Gaussian elimination over three large primes; determinants against
recursive cofactor expansion.
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from doublesix.linalg import Matrix, determinant, inverse, kernel_basis, rank, rat, solve

PRIMES = (1073741789, 1073741783, 1073741741)


def random_matrix(rng, nrows, ncols, bound=9, denominators=False):
    def entry():
        num = rng.randint(-bound, bound)
        if denominators:
            return Fraction(num, rng.randint(1, 4))
        return Fraction(num)

    return Matrix([[entry() for _ in range(ncols)] for _ in range(nrows)])


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * cofactor_det(minor)
    return total


def minor_rank(m: Matrix) -> int:
    """Rank as the largest size of a nonvanishing minor."""
    best = 0
    for r in range(1, min(m.nrows, m.ncols) + 1):
        found = False
        for rows in combinations(range(m.nrows), r):
            for cols in combinations(range(m.ncols), r):
                sub = [[m.at(i, j) for j in cols] for i in rows]
                if cofactor_det(sub) != 0:
                    found = True
                    break
            if found:
                break
        if found:
            best = r
        else:
            break
    return best


def gf_rank(m: Matrix, p: int) -> int:
    rows = []
    for row in m.rows:
        out = []
        for x in row:
            den = x.denominator % p
            assert den != 0
            out.append(x.numerator % p * pow(den, -1, p) % p)
        rows.append(out)
    r = 0
    for col in range(m.ncols):
        piv = next((i for i in range(r, m.nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        for i in range(m.nrows):
            if i != r and rows[i][col]:
                f = rows[i][col] * inv % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == m.nrows:
            break
    return r


def test_rat_coercion():
    assert rat(3) == Fraction(3)
    assert rat("2/7") == Fraction(2, 7)
    assert rat(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        rat(0.5)


def test_constructor_rejects_ragged_and_empty():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([])


def test_rank_against_minor_oracle():
    rng = random.Random("rank-minors")
    for trial in range(30):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), denominators=trial % 3 == 0)
        assert rank(m) == minor_rank(m)


def test_rank_against_modular_oracle():
    rng = random.Random("rank-modular")
    for _ in range(20):
        m = random_matrix(rng, rng.randint(2, 7), rng.randint(2, 7))
        assert rank(m) == max(gf_rank(m, p) for p in PRIMES)


def test_rank_of_contrived_degenerate():
    row = [Fraction(1), Fraction(2), Fraction(3)]
    m = Matrix([row, [2 * x for x in row], [5 * x for x in row]])
    assert rank(m) == 1


def test_determinant_against_cofactor_oracle():
    rng = random.Random("det-cofactor")
    for trial in range(25):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n, n, denominators=trial % 2 == 0)
        assert determinant(m) == cofactor_det([list(r) for r in m.rows])


def test_determinant_multiplicative():
    rng = random.Random("det-product")
    for _ in range(10):
        a = random_matrix(rng, 4, 4)
        b = random_matrix(rng, 4, 4)
        assert determinant(a @ b) == determinant(a) * determinant(b)


def test_determinant_requires_square():
    with pytest.raises(ValueError):
        determinant(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_kernel_annihilates_and_completes_rank():
    rng = random.Random("kernel")
    zero = Fraction(0)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        basis = kernel_basis(m)
        assert rank(m) + len(basis) == m.ncols
        for vec in basis:
            assert list(m.apply(vec)) == [zero] * m.nrows
        if basis:
            assert rank(Matrix([list(v) for v in basis])) == len(basis)


def test_kernel_deterministic_shape():
    # One basis vector per free column, unit in that column.
    m = Matrix([[1, 2, 3], [0, 0, 0]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    assert basis[0][1] == 1 and basis[0][2] == 0
    assert basis[1][2] == 1 and basis[1][1] == 0


def test_solve_and_inverse():
    rng = random.Random("solve")
    for _ in range(15):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n, n)
        if determinant(m) == 0:
            continue
        rhs = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        x = solve(m, rhs)
        assert x is not None and list(m.apply(x)) == rhs
        inv = inverse(m)
        assert (m @ inv).rows == Matrix.identity(n).rows


def test_solve_inconsistent_returns_none():
    m = Matrix([[1, 1], [1, 1]])
    assert solve(m, [Fraction(0), Fraction(1)]) is None


def test_inverse_singular_raises():
    with pytest.raises(ValueError):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_matmul_apply_transpose_consistency():
    rng = random.Random("ops")
    a = random_matrix(rng, 3, 4)
    b = random_matrix(rng, 4, 2)
    v = [Fraction(rng.randint(-5, 5)) for _ in range(2)]
    assert (a @ b).apply(v) == a.apply(b.apply(v))
    assert a.transpose().rows == tuple(zip(*a.rows))

import random

from octad.fields import (FunctionField, PrimeField, RationalField,
                          extension_field)
from octad.linalg import Matrix, bareiss_det, det, kernel_basis, rank


def _cofactor_det(ctx, m):
    """Independent oracle: Laplace expansion down the first column."""
    n = m.nrows
    if n == 1:
        return m.rows[0][0]
    total = ctx.zero
    for i in range(n):
        sub = Matrix(ctx, [[m.rows[r][c] for c in range(1, n)]
                           for r in range(n) if r != i])
        term = ctx.mul(m.rows[i][0], _cofactor_det(ctx, sub))
        total = ctx.add(total, term) if i % 2 == 0 else \
            ctx.sub(total, term)
    return total


def _rand_matrix(ctx, n, rng, bound=50):
    return Matrix(ctx, [[ctx.from_int(rng.randrange(-bound, bound))
                         for _ in range(n)] for _ in range(n)])


def test_bareiss_against_cofactor_oracle():
    rng = random.Random(17)
    qq = RationalField()
    for _ in range(50):
        m = _rand_matrix(qq, 6, rng)
        assert bareiss_det(m) == _cofactor_det(qq, m)


def test_det_dispatch_matches_bareiss_over_prime_field():
    rng = random.Random(4)
    k = PrimeField(97)
    for _ in range(30):
        m = _rand_matrix(k, 5, rng)
        assert det(m) == bareiss_det(m)


def test_block_diag_multiplicativity():
    rng = random.Random(31)
    qq = RationalField()
    for _ in range(10):
        a = _rand_matrix(qq, 3, rng)
        b = _rand_matrix(qq, 4, rng)
        big = Matrix.block_diag(a, b)
        assert det(big) == qq.mul(det(a), det(b))


def test_rational_det_with_denominators():
    qq = RationalField()
    half = qq.div(qq.one, qq.from_int(2))
    m = Matrix(qq, [[half, qq.one], [qq.one, qq.from_int(4)]])
    assert det(m) == qq.one


def test_singular_matrix():
    k = PrimeField(7)
    m = Matrix(k, [[k.from_int(1), k.from_int(2)],
                   [k.from_int(2), k.from_int(4)]])
    assert k.is_zero(det(m))
    assert rank(m) == 1


def test_kernel_basis_annihilates():
    rng = random.Random(8)
    k = extension_field(3, 2)
    elems = list(k.elements())
    for _ in range(20):
        m = Matrix(k, [[rng.choice(elems) for _ in range(5)]
                       for _ in range(3)])
        basis = kernel_basis(m)
        assert len(basis) == 5 - rank(m)
        for v in basis:
            for row in m.rows:
                acc = k.zero
                for a, b in zip(row, v):
                    acc = k.add(acc, k.mul(a, b))
                assert k.is_zero(acc)


def test_function_field_det_matches_bareiss():
    ff = FunctionField(3)
    rng = random.Random(12)

    def entry():
        num = tuple(rng.randrange(3) for _ in range(rng.randrange(1, 4)))
        den = tuple(rng.randrange(3) for _ in range(rng.randrange(1, 3)))
        if not any(den):
            den = (1,)
        return ff.normalize(num, den)

    for _ in range(10):
        m = Matrix(ff, [[entry() for _ in range(4)] for _ in range(4)])
        # det() routes through evaluation/interpolation; Bareiss is the oracle
        assert det(m) == bareiss_det(m)


def test_matrix_transpose_and_mul():
    k = PrimeField(5)
    m = Matrix.from_ints(k, [[1, 2], [3, 4]])
    mt = m.transpose()
    assert mt.rows[0][1] == k.from_int(3)
    prod = m.mul(mt)
    assert prod.rows[0][0] == k.from_int(0)  # 1+4 mod 5

from fractions import Fraction

import pytest

from linstrand import GF2, QQ, ChainComplex, ConsistencyError, Field, Matrix, gf, homology_dims, rank


def test_field_validation():
    assert QQ.characteristic == 0
    assert gf(32003).characteristic == 32003
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(-3)


def test_matrix_validation():
    with pytest.raises(ValueError):
        Matrix(2, 2, ((0, 5, 1),))
    with pytest.raises(ValueError):
        Matrix(2, 2, ((0, 0, 0),))  # stored zero
    with pytest.raises(ValueError):
        Matrix(2, 2, ((0, 0, 1), (0, 0, 2)))  # duplicate slot
    m = Matrix.from_entries(2, 2, [(0, 0, 1), (1, 1, 0)])
    assert m.entries == ((0, 0, 1),)


def test_rank_small_examples():
    m = Matrix.from_entries(2, 3, [(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4), (1, 2, 1)])
    assert rank(m, QQ) == 2
    assert rank(Matrix.zero(4, 7), QQ) == 0
    ident = Matrix.from_entries(3, 3, [(i, i, 1) for i in range(3)])
    assert rank(ident, QQ) == 3


def test_rank_depends_on_characteristic():
    m = Matrix.from_entries(1, 1, [(0, 0, 2)])
    assert rank(m, QQ) == 1
    assert rank(m, GF2) == 0
    assert rank(m, gf(3)) == 1


def test_rank_equals_rank_of_transpose():
    import random

    rng = random.Random(5)
    for _ in range(20):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        entries = [
            (r, c, rng.randint(-3, 3))
            for r in range(nr)
            for c in range(nc)
            if rng.random() < 0.5
        ]
        m = Matrix.from_entries(nr, nc, entries)
        for f in (QQ, GF2, gf(32003)):
            assert rank(m, f) == rank(m.transpose(), f)


def test_fraction_free_elimination_stays_exact():
    # a matrix whose naive floating-point elimination would drift
    entries = [(i, j, (i + 1) ** j) for i in range(5) for j in range(5)]
    m = Matrix.from_entries(5, 5, entries)
    assert rank(m, QQ) == 5  # Vandermonde on 1..5


def test_compose_is_matrix_product():
    a = Matrix.from_entries(2, 3, [(0, 0, 1), (0, 2, 2), (1, 1, -1)])
    b = Matrix.from_entries(3, 2, [(0, 0, 3), (2, 1, 4), (1, 0, 5)])
    ab = a.compose(b)
    assert ab.nrows == 2 and ab.ncols == 2
    dense = [[0, 0], [0, 0]]
    for r, c, v in ab.entries:
        dense[r][c] = v
    assert dense == [[3, 8], [-5, 0]]


def test_chain_complex_rejects_nonsquaring_boundary():
    d2 = Matrix.from_entries(1, 1, [(0, 0, 1)])
    d1 = Matrix.from_entries(1, 1, [(0, 0, 1)])
    with pytest.raises(ConsistencyError):
        ChainComplex({0: 1, 1: 1, 2: 1}, {1: d1, 2: d2})


def test_chain_complex_rejects_shape_mismatch():
    # malformed shapes are a caller error, unlike a nonvanishing square
    with pytest.raises(ValueError):
        ChainComplex({0: 2, 1: 1}, {1: Matrix.zero(3, 1)})


def test_homology_of_a_circle():
    # triangle boundary: three vertices, three edges
    d1 = Matrix.from_entries(
        3,
        3,
        [
            (0, 0, -1), (1, 0, 1),
            (1, 1, -1), (2, 1, 1),
            (0, 2, -1), (2, 2, 1),
        ],
    )
    c = ChainComplex({0: 3, 1: 3}, {1: d1})
    h = homology_dims(c, QQ)
    assert h[0] == 1 and h[1] == 1


def test_homology_of_transposed_complex_matches():
    # cohomology over a field has the same dimensions; build the flipped complex
    d1 = Matrix.from_entries(3, 3, [(0, 0, -1), (1, 0, 1), (1, 1, -1), (2, 1, 1), (0, 2, -1), (2, 2, 1)])
    c = ChainComplex({0: 3, 1: 3}, {1: d1})
    flipped = ChainComplex({0: 3, -1: 3}, {0: d1.transpose()})
    h = homology_dims(c, QQ)
    hc = homology_dims(flipped, QQ)
    assert h[0] == hc[0] and h[1] == hc[-1]


def test_homology_of_exact_complex_vanishes():
    d = Matrix.from_entries(2, 2, [(0, 0, 1), (1, 1, 1)])
    c = ChainComplex({0: 2, 1: 2}, {1: d})
    h = homology_dims(c, QQ)
    assert h[0] == 0 and h[1] == 0


def test_matrix_entries_are_integers_only():
    with pytest.raises(ValueError):
        Matrix.from_entries(1, 1, [(0, 0, Fraction(1, 2))])
    # integral fractions are fine, they normalize to int
    m = Matrix.from_entries(1, 1, [(0, 0, Fraction(4, 2))])
    assert m.entries == ((0, 0, 2),)

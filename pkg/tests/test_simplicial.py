import pytest

from linstrand import (
    ConsistencyError,
    QQ,
    SimplicialComplex,
    SimplicialPair,
    VertexTable,
    chain_complex,
    complete_clutter,
    f_vector,
    homology_dims,
    independent_sets,
    part_deficient_complex,
    relative_chain_complex,
    strand_support_pair,
)

from helpers import six_of_eight_transversals


def table(n):
    return VertexTable(tuple(f"v{i}" for i in range(n)), None)


def test_faces_are_closed_downward_and_sorted():
    x = SimplicialComplex(table(3), (frozenset({0, 1}), frozenset({1, 2})))
    assert [tuple(sorted(f)) for f in x.faces(1)] == [(0, 1), (1, 2)]
    assert [tuple(sorted(f)) for f in x.faces(0)] == [(0,), (1,), (2,)]
    assert x.faces(-1) == (frozenset(),)
    assert x.dim == 1


def test_void_and_empty_complexes_are_distinct():
    void = SimplicialComplex(table(2), ())
    just_empty = SimplicialComplex(table(2), (frozenset(),))
    assert void.is_void and void.dim == -2
    assert not just_empty.is_void and just_empty.dim == -1
    assert just_empty.faces(-1) == (frozenset(),)
    assert void.faces(-1) == ()


def test_facets_must_form_antichain():
    with pytest.raises(ValueError):
        SimplicialComplex(table(3), (frozenset({0}), frozenset({0, 1})))


def test_reduced_homology_of_empty_face_complex():
    just_empty = SimplicialComplex(table(2), (frozenset(),))
    h = homology_dims(chain_complex(just_empty, reduced=True), QQ)
    assert h == {-1: 1}


def test_reduced_homology_of_triangle_boundary():
    x = SimplicialComplex(table(3), (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})))
    h = homology_dims(chain_complex(x, reduced=True), QQ)
    assert h.get(0, 0) == 0 and h[1] == 1


def test_unreduced_homology_counts_components():
    x = SimplicialComplex(table(4), (frozenset({0, 1}), frozenset({2, 3})))
    h = homology_dims(chain_complex(x, reduced=False), QQ)
    assert h[0] == 2


def test_pair_requires_subcomplex():
    x = SimplicialComplex(table(3), (frozenset({0, 1}),))
    y = SimplicialComplex(table(3), (frozenset({1, 2}),))
    with pytest.raises(ValueError):
        SimplicialPair(x, y)


def test_relative_homology_of_disc_modulo_boundary():
    x = SimplicialComplex(table(3), (frozenset({0, 1, 2}),))
    y = SimplicialComplex(table(3), (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})))
    p = SimplicialPair(x, y)
    assert f_vector(p) == (0, 0, 1)
    h = homology_dims(relative_chain_complex(p), QQ)
    assert h.get(0, 0) == 0 and h.get(1, 0) == 0 and h[2] == 1


def test_relative_over_empty_face_complex_is_unreduced():
    x = SimplicialComplex(table(3), (frozenset({0, 1}), frozenset({1, 2})))
    y = SimplicialComplex(table(3), (frozenset(),))
    p = SimplicialPair(x, y)
    assert f_vector(p) == (3, 2)
    h = homology_dims(relative_chain_complex(p), QQ)
    assert h[0] == 1


def test_relative_over_void_complex_is_reduced():
    x = SimplicialComplex(table(3), (frozenset({0, 1}), frozenset({1, 2})))
    p = SimplicialPair(x, SimplicialComplex(table(3), ()))
    h = homology_dims(relative_chain_complex(p), QQ)
    assert h.get(0, 0) == 0  # reduced: connected means nothing in degree 0


def test_part_deficient_complex_is_a_sphere():
    # complements of the d parts carry the homology of a (d-2)-sphere
    for sizes, sphere_deg in (([2], -1), ([2, 2], 0), ([3, 2], 0), ([2, 2, 2], 1), ([2, 3, 2], 1)):
        t = complete_clutter(sizes).vertices
        y = part_deficient_complex(t)
        h = homology_dims(chain_complex(y, reduced=True), QQ)
        assert h.get(sphere_deg, 0) == 1, sizes
        for k in h:
            if k != sphere_deg:
                assert h[k] == 0, (sizes, k)


def test_part_deficient_complex_single_part():
    t = complete_clutter([3]).vertices
    y = part_deficient_complex(t)
    assert not y.is_void
    assert y.dim == -1


def test_strand_support_pair_of_six_edge_fixture():
    c = six_of_eight_transversals()
    pair = strand_support_pair(c)
    assert f_vector(pair) == (0, 0, 6, 6)
    # the ambient complex has all 18 two-dimensional independent sets
    assert len(pair.x.faces(2)) == 18
    assert len(pair.y.faces(2)) == 12


def test_pair_face_counts_obey_inclusion_exclusion():
    c = six_of_eight_transversals()
    pair = strand_support_pair(c)
    for k in range(-1, pair.x.dim + 1):
        assert len(pair.faces(k)) == len(pair.x.faces(k)) - len(pair.y.faces(k))


def test_relative_chain_complex_boundaries_square_to_zero():
    # constructing the complex runs the d*d = 0 check; reaching here is the test
    c = six_of_eight_transversals()
    rel = relative_chain_complex(strand_support_pair(c))
    assert rel.degrees()
    # Euler characteristic agrees with the alternating f-vector sum
    fv = f_vector(strand_support_pair(c))
    euler_faces = sum((-1) ** k * fv[k] for k in range(len(fv)))
    h = homology_dims(rel, QQ)
    euler_hom = sum((-1) ** k * h.get(k, 0) for k in rel.degrees())
    assert euler_faces == euler_hom


def test_independence_complex_facets_are_maximal():
    c = six_of_eight_transversals()
    x = independent_sets(c)
    for f in x.facets:
        for v in range(c.n):
            if v not in f:
                assert x.has_face(f | {v}) is False

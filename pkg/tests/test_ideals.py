import pytest

from linstrand import (
    AdmissibleSequence,
    Clutter,
    SquarefreeIdeal,
    VertexTable,
    alexander_dual,
    check_admissible,
    complete_clutter,
    d_partite_complement,
    edge_ideal,
    ferrers_clutter,
    find_admissible_sequence,
    linkage_ideal,
    minimal_vertex_covers,
    parts_sequence,
    squarefree_colon,
    strand_clutter,
)

from helpers import seeded_random_instance


def names(n):
    return VertexTable(tuple(f"x{i + 1}" for i in range(n)), None)


def test_ideal_rejects_nonminimal_generators():
    with pytest.raises(ValueError):
        SquarefreeIdeal(names(3), (frozenset({0}), frozenset({0, 1})))
    with pytest.raises(ValueError):
        SquarefreeIdeal(names(3), (frozenset(),))


def test_zero_ideal_has_no_degree():
    z = SquarefreeIdeal(names(2), ())
    assert z.is_zero
    with pytest.raises(ValueError):
        z.min_degree
    with pytest.raises(ValueError):
        alexander_dual(z)


def test_dual_generators_are_minimal_covers():
    t = complete_clutter([2, 2, 2]).vertices
    edges = tuple(t.resolve(e) for e in (("a1", "b1", "c1"), ("a1", "b1", "c2"), ("a2", "b2", "c2")))
    i = edge_ideal(Clutter(t, edges))
    dual = alexander_dual(i)
    got = [tuple(sorted(t.names[v] for v in s)) for s in dual.generators]
    assert got == [
        ("a1", "a2"),
        ("a1", "b2"),
        ("a1", "c2"),
        ("a2", "b1"),
        ("b1", "b2"),
        ("b1", "c2"),
        ("c1", "c2"),
    ]


def test_dual_is_an_involution():
    for seed in range(25):
        c = seeded_random_instance(seed)
        if not c.edges:
            continue
        i = edge_ideal(c)
        assert alexander_dual(alexander_dual(i)) == i


def test_admissibility_diagnostics():
    t = names(4)
    i = SquarefreeIdeal(t, (frozenset({0, 1}), frozenset({2, 3})))
    ok = AdmissibleSequence((frozenset({0, 2}), frozenset({1, 3})))
    assert check_admissible(i, ok).ok

    out_of_range = AdmissibleSequence((frozenset({0, 9}), frozenset({1, 3})))
    r = check_admissible(i, out_of_range)
    assert not r.ok and "range" in r.reason

    wrong_length = AdmissibleSequence((frozenset({0, 2}),))
    r = check_admissible(i, wrong_length)
    assert not r.ok and "length" in r.reason

    misses_a_generator = AdmissibleSequence((frozenset({0, 1}), frozenset({2, 3})))
    r = check_admissible(i, misses_a_generator)
    assert not r.ok


def test_admissible_sequence_requires_disjoint_supports():
    with pytest.raises(ValueError):
        AdmissibleSequence((frozenset({0, 1}), frozenset({1, 2})))
    with pytest.raises(ValueError):
        AdmissibleSequence((frozenset({0}), frozenset()))


def test_strand_clutter_keeps_degree_d_generators_only():
    t = names(4)
    i = SquarefreeIdeal(t, (frozenset({0, 1}), frozenset({0, 2, 3})))
    seq = AdmissibleSequence((frozenset({0}), frozenset({1, 2})))
    c = strand_clutter(i, seq)
    assert c.d == 2
    assert c.n == 3  # vertices 0,1,2
    assert len(c.edges) == 1
    assert c.vertices.parts == (0, 1, 1)
    assert c.vertices.names == ("x1", "x2", "x3")


def test_strand_clutter_of_single_generator():
    t = names(2)
    i = SquarefreeIdeal(t, (frozenset({0, 1}),))
    seq = AdmissibleSequence((frozenset({0}), frozenset({1})))
    c = strand_clutter(i, seq)
    assert len(c.edges) == 1 and c.d == 2


def test_strand_clutter_rejects_inadmissible_sequence():
    t = names(4)
    i = SquarefreeIdeal(t, (frozenset({0, 1}), frozenset({2, 3})))
    with pytest.raises(ValueError):
        strand_clutter(i, AdmissibleSequence((frozenset({0, 1}), frozenset({2, 3}))))


def test_parts_sequence_is_admissible_for_edge_ideals():
    for seed in range(20):
        c = seeded_random_instance(seed)
        if not c.edges:
            continue
        i = edge_ideal(c)
        seq = parts_sequence(c)
        assert check_admissible(i, seq).ok
        back = strand_clutter(i, seq)
        assert back.edge_set() == c.edge_set()


def test_linkage_ideal_is_the_complement_edge_ideal():
    c = ferrers_clutter([2, 1])
    link = linkage_ideal(c)
    comp = d_partite_complement(c)
    assert set(link.generators) == comp.edge_set()


def test_linkage_matches_brute_force_colon():
    # the part products link the cover ideal of C to the cover ideal of the
    # complement: coloning one out of the part-product ideal yields the other
    for c in (ferrers_clutter([2, 1]), complete_clutter([2, 2]), seeded_random_instance(3)):
        covers = minimal_vertex_covers(c)
        comp_covers = minimal_vertex_covers(d_partite_complement(c))
        parts = [frozenset(c.vertices.part_members(j)) for j in range(c.d)]
        assert squarefree_colon(parts, covers, c.n) == comp_covers, c
        assert squarefree_colon(parts, comp_covers, c.n) == covers, c


def test_colon_can_be_the_unit_ideal():
    # when every dual generator already contains a part, the colon is (1),
    # whose only minimal squarefree multidegree is the empty one
    got = squarefree_colon([frozenset({0})], (frozenset({0, 1}),), 3)
    assert got == (frozenset(),)


def test_colon_of_the_zero_sequence_is_zero():
    assert squarefree_colon([], (frozenset({0}),), 2) == ()


def test_find_admissible_sequence_on_partitioned_input():
    c = complete_clutter([2, 2])
    seq = find_admissible_sequence(edge_ideal(c))
    assert seq is not None
    assert check_admissible(edge_ideal(c), seq).ok


def test_find_admissible_sequence_fails_on_triangle():
    # the triangle x1x2, x1x3, x2x3 admits no two disjoint covering supports
    t = names(3)
    i = SquarefreeIdeal(t, (frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})))
    assert find_admissible_sequence(i) is None


def test_find_admissible_sequence_respects_guard():
    from linstrand import SizeGuardError

    t = names(14)
    i = SquarefreeIdeal(t, (frozenset({0, 1}),))
    with pytest.raises(SizeGuardError):
        find_admissible_sequence(i, max_vertices=12)

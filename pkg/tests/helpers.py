"""Shared fixtures and independent brute-force oracles for the tests.

The oracles here deliberately reimplement things by subset enumeration so the
library is checked against a second route, not against itself.
"""

from itertools import combinations

from linstrand import Clutter, VertexTable, complete_clutter, d_partite_complement, random_clutter


def all_subsets(n):
    for k in range(n + 1):
        yield from (frozenset(s) for s in combinations(range(n), k))


def brute_minimal_covers(n, edges):
    hitting = [s for s in all_subsets(n) if all(s & e for e in edges)]
    minimal = [s for s in hitting if not any(t < s for t in hitting)]
    return sorted(minimal, key=lambda s: tuple(sorted(s)))


def brute_independent_sets(n, edges):
    return {s for s in all_subsets(n) if not any(e <= s for e in edges)}


def six_of_eight_transversals():
    """Three parts of size 2; the complement of two disjoint transversals."""
    comp = complete_clutter([2, 2, 2])
    t = comp.vertices
    two = Clutter(t, (t.resolve(("a1", "b1", "c1")), t.resolve(("a2", "b2", "c2"))))
    return d_partite_complement(two)


def corner_star_four_parts():
    """Four parts of size 2; six edges, all through a1."""
    t = complete_clutter([2, 2, 2, 2]).vertices
    edges = (
        ("a1", "b1", "c1", "d1"),
        ("a1", "b2", "c1", "d1"),
        ("a1", "b1", "c2", "d1"),
        ("a1", "b2", "c1", "d2"),
        ("a1", "b1", "c2", "d2"),
        ("a1", "b2", "c2", "d2"),
    )
    return Clutter(t, tuple(t.resolve(e) for e in edges))


def nine_edge_bipartite():
    t = complete_clutter([4, 4]).vertices
    edges = (
        ("a1", "b1"), ("a2", "b1"), ("a2", "b2"), ("a3", "b2"), ("a2", "b3"),
        ("a4", "b3"), ("a1", "b4"), ("a3", "b4"), ("a4", "b4"),
    )
    return Clutter(t, tuple(t.resolve(e) for e in edges))


def fourteen_of_sixteen_transversals():
    """Four parts of size 2; all transversals except two sharing a1."""
    comp = complete_clutter([2, 2, 2, 2])
    t = comp.vertices
    two = Clutter(t, (t.resolve(("a1", "b1", "c1", "d1")), t.resolve(("a1", "b2", "c2", "d2"))))
    return d_partite_complement(two)


def scattered_three_edges():
    """Three parts of size 2, three edges; not linear, with the certificate
    living in the rank-2 projection onto the outer parts."""
    t = complete_clutter([2, 2, 2]).vertices
    edges = (("a1", "b1", "c2"), ("a2", "b2", "c2"), ("a2", "b1", "c1"))
    return Clutter(t, tuple(t.resolve(e) for e in edges))


BUNDLED_FIXTURES = (
    six_of_eight_transversals,
    corner_star_four_parts,
    nine_edge_bipartite,
    fourteen_of_sixteen_transversals,
)


def seeded_random_instance(seed):
    """Deterministic small random partitioned clutter: d <= 3, parts of size <= 3."""
    import random

    rng = random.Random(seed)
    d = rng.randint(1, 3)
    sizes = [rng.randint(1, 3) for _ in range(d)]
    p = rng.uniform(0.2, 0.9)
    return random_clutter(sizes, p, seed=seed)

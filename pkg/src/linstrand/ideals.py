"""Squarefree monomial ideals as antichains of generator supports.

A squarefree monomial ideal is recorded by its unique minimal generating set
of squarefree monomials, each a subset of the vertex table; the polynomial
ring never appears.  The zero ideal is the empty antichain.  The two ideal
constructions the strand machinery needs are the Alexander dual (minimal
vertex covers of the generator supports) and, for an edge ideal inside a
regular sequence of disjoint covers, the reduction to the supports of the
sequence and the linkage ideal the reduction links to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .clutters import Clutter, VertexTable, d_partite_complement, minimal_sets, minimal_vertex_covers, sorted_key
from .errors import ConsistencyError

__all__ = [
    "SquarefreeIdeal",
    "AdmissibleSequence",
    "AdmissibilityReport",
    "edge_ideal",
    "alexander_dual",
    "check_admissible",
    "strand_clutter",
    "parts_sequence",
    "linkage_ideal",
    "squarefree_colon",
    "find_admissible_sequence",
]


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Minimal generators of a squarefree monomial ideal, as supports.

    The generators must form an antichain of nonempty sets; the empty tuple
    is the zero ideal.
    """

    vertices: VertexTable
    generators: tuple[frozenset[int], ...]

    def __post_init__(self):
        gens = tuple(frozenset(g) for g in self.generators)
        n = self.vertices.n
        for g in gens:
            if not g:
                raise ValueError("generators must be nonempty (the unit ideal is not squarefree-graded here)")
            if not all(0 <= v < n for v in g):
                raise ValueError("generator support out of range")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator")
        for g, h in itertools.combinations(gens, 2):
            if g <= h or h <= g:
                raise ValueError("generators must form an antichain")
        object.__setattr__(self, "generators", tuple(sorted(gens, key=sorted_key)))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def min_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero ideal has no generator degree")
        return min(len(g) for g in self.generators)

    def as_clutter(self) -> Clutter:
        """The clutter of generator supports.  The partition (if any) is
        dropped: generators of mixed degrees need not be transversals."""
        if self.is_zero:
            raise ValueError("the zero ideal has no clutter of generators")
        return Clutter(self.vertices.without_parts(), self.generators)


def edge_ideal(c: Clutter) -> SquarefreeIdeal:
    return SquarefreeIdeal(c.vertices, c.edges)


def alexander_dual(i: SquarefreeIdeal) -> SquarefreeIdeal:
    """The ideal generated by the minimal vertex covers of the generator
    supports.  An involution on nonzero squarefree ideals."""
    covers = minimal_vertex_covers(i.as_clutter())
    return SquarefreeIdeal(i.vertices, covers)


@dataclass(frozen=True)
class AdmissibleSequence:
    """Supports of a candidate regular sequence of squarefree monomials.

    The supports must be nonempty and pairwise disjoint; whether the sequence
    is admissible for a given ideal (right length, every support a vertex
    cover of the generators) is the business of check_admissible.
    """

    supports: tuple[frozenset[int], ...]

    def __post_init__(self):
        sups = tuple(frozenset(s) for s in self.supports)
        if not sups:
            raise ValueError("need at least one support")
        if any(not s for s in sups):
            raise ValueError("supports must be nonempty")
        for s, t in itertools.combinations(sups, 2):
            if s & t:
                raise ValueError("supports must be pairwise disjoint")
        object.__setattr__(self, "supports", sups)

    @property
    def d(self) -> int:
        return len(self.supports)

    def union(self) -> frozenset[int]:
        return frozenset().union(*self.supports)


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    reason: str | None = None


def check_admissible(i: SquarefreeIdeal, seq: AdmissibleSequence) -> AdmissibilityReport:
    """Is seq admissible for i: supports within range, as many of them as the
    least generator degree, and each one a vertex cover of the generators."""
    n = i.vertices.n
    for s in seq.supports:
        if not all(0 <= v < n for v in s):
            return AdmissibilityReport(False, "support out of range")
    if i.is_zero:
        return AdmissibilityReport(False, "the zero ideal admits no sequence")
    if seq.d != i.min_degree:
        return AdmissibilityReport(
            False, f"sequence has length {seq.d}, least generator degree is {i.min_degree}"
        )
    for s in seq.supports:
        for g in i.generators:
            if not (s & g):
                return AdmissibilityReport(
                    False,
                    f"support {i.vertices.label(s)} misses generator {i.vertices.label(g)}",
                )
    return AdmissibilityReport(True)


def strand_clutter(i: SquarefreeIdeal, seq: AdmissibleSequence) -> Clutter:
    """The d-partite d-uniform clutter of the least-degree generators, on the
    union of the sequence supports with one part per support.

    Every generator of degree d = len(seq) meets each of the d disjoint
    covering supports, so it takes exactly one vertex from each and lies in
    their union; that is re-checked and any violation (possible only on
    inconsistent input) raises.  The edge ideal of the result shares its
    first linear strand with i.
    """
    report = check_admissible(i, seq)
    if not report.ok:
        raise ValueError(f"sequence is not admissible: {report.reason}")
    w = seq.union()
    order = sorted(w)
    renum = {v: j for j, v in enumerate(order)}
    part_of = {}
    for k, s in enumerate(seq.supports):
        for v in s:
            part_of[v] = k
    table = VertexTable(
        tuple(i.vertices.names[v] for v in order),
        tuple(part_of[v] for v in order),
    )
    d = seq.d
    edges = []
    for g in i.generators:
        if len(g) != d:
            continue
        if not g <= w:
            raise ConsistencyError(
                f"degree-{d} generator {i.vertices.label(g)} escapes the sequence supports"
            )
        if len({part_of[v] for v in g}) != d:
            raise ConsistencyError(
                f"degree-{d} generator {i.vertices.label(g)} is not a transversal of the supports"
            )
        edges.append(frozenset(renum[v] for v in g))
    return Clutter(table, tuple(edges))


def parts_sequence(c: Clutter) -> AdmissibleSequence:
    """The sequence of part products of a partitioned clutter; admissible for
    its edge ideal by d-partiteness."""
    return AdmissibleSequence(c.part_sets())


def linkage_ideal(c: Clutter) -> SquarefreeIdeal:
    """The edge ideal of the d-partite complement of c.

    Its dual is what the sequence of part products links the cover ideal of
    c to: (parts product ideal : dual of I(C)) is generated by the minimal
    covers of the complement, and symmetrically with the two clutters
    swapped.  The brute-force squarefree_colon below is the independent
    route to those antichains.
    """
    return SquarefreeIdeal(c.vertices, d_partite_complement(c).edges)


def squarefree_colon(
    parts: Iterable[frozenset[int]],
    dual_generators: Iterable[frozenset[int]],
    n: int,
) -> tuple[frozenset[int], ...]:
    """Minimal squarefree multidegrees of the colon (a : K), where a is
    generated by the products of the parts and K by the dual generators.

    Membership by brute force: the monomial of support S multiplies every
    generator of support D into a iff some part is contained in S union D.
    Exponential in n; meant for checks and tests, so keep n small.
    """
    parts = tuple(frozenset(p) for p in parts)
    duals = tuple(frozenset(g) for g in dual_generators)
    members = []
    for bits in range(1 << n):
        s = frozenset(v for v in range(n) if bits >> v & 1)
        if all(any(p <= (s | g) for p in parts) for g in duals):
            members.append(s)
    return minimal_sets(members)


def find_admissible_sequence(i: SquarefreeIdeal, max_vertices: int = 12) -> AdmissibleSequence | None:
    """Search for an admissible sequence by backtracking over assignments of
    vertices to the d supports.  Convenience only (the strand pipeline takes
    a declared sequence); exhaustive, so gated to small n.  Returns the first
    find in scan order, or None.
    """
    from .errors import check_vertex_guard

    check_vertex_guard(i.vertices.n, max_vertices)
    if i.is_zero:
        return None
    d = i.min_degree
    n = i.vertices.n
    gens = i.generators
    assignment: list[int] = []

    def feasible(upto: int) -> bool:
        # every generator must still be able to meet every support
        for g in gens:
            for k in range(d):
                if any(v < upto and assignment[v] == k for v in g):
                    continue
                if not any(v >= upto for v in g):
                    return False
        return True

    def extend(v: int) -> AdmissibleSequence | None:
        if v == n:
            sups = [frozenset(u for u in range(n) if assignment[u] == k) for k in range(d)]
            if any(not s for s in sups):
                return None
            seq = AdmissibleSequence(tuple(sups))
            return seq if check_admissible(i, seq).ok else None
        for k in list(range(d)) + [-1]:
            assignment.append(k)
            if feasible(v + 1):
                found = extend(v + 1)
                if found is not None:
                    return found
            assignment.pop()
        return None

    return extend(0)

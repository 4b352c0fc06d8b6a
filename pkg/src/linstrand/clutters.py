"""Clutters on a fixed ordered vertex set.

A clutter is a hypergraph none of whose edges contains another.  Vertices are
numbered 0..n-1 once and for all and every vertex set in the library is a
frozenset of such numbers; the numbering is the single total order that drives
orientation signs downstream, so it lives in an explicit VertexTable rather
than being recomputed from names.

A clutter may carry a partition of the vertices into d parts.  Partitioned
clutters are d-partite d-uniform by construction: every edge takes exactly one
vertex from each part.  Unpartitioned clutters are what arbitrary squarefree
monomial ideals produce; partitioned ones are what the strand construction
consumes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DEFAULT_MAX_VERTICES, check_vertex_guard

__all__ = [
    "VertexTable",
    "Clutter",
    "minimal_sets",
    "minimal_vertex_covers",
    "independent_sets",
    "d_partite_complement",
    "restrict",
    "ranked_projection",
    "from_point_configuration",
    "complete_clutter",
    "ferrers_clutter",
    "random_clutter",
]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _part_letter(i: int) -> str:
    return _LETTERS[i] if i < len(_LETTERS) else f"p{i}_"


def sorted_key(s: frozenset[int]) -> tuple[int, ...]:
    """Canonical sort key for a vertex set: its ascending vertex tuple."""
    return tuple(sorted(s))


def minimal_sets(sets: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    """Inclusion-minimal members of a family, deduplicated, in canonical order."""
    kept: list[frozenset[int]] = []
    for s in sorted(set(sets), key=len):
        if not any(t < s for t in kept):
            kept.append(s)
    return tuple(sorted(kept, key=sorted_key))


@dataclass(frozen=True)
class VertexTable:
    """Ordered vertex names, optionally with a part label per vertex.

    ``parts[v]`` is the part index of vertex v.  Part indices must be exactly
    0..d-1 with every part nonempty; parts need not be contiguous blocks of
    the order (restriction can interleave them).
    """

    names: tuple[str, ...]
    parts: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("vertex names must be distinct")
        if any(not n for n in self.names):
            raise ValueError("vertex names must be nonempty")
        if self.parts is not None:
            object.__setattr__(self, "parts", tuple(self.parts))
            if len(self.parts) != len(self.names):
                raise ValueError("one part index per vertex")
            seen = set(self.parts)
            if not self.names:
                raise ValueError("a partitioned table needs at least one vertex")
            if seen != set(range(max(seen) + 1)):
                raise ValueError("part indices must be 0..d-1 with no gaps")
        object.__setattr__(self, "_by_name", {n: i for i, n in enumerate(self.names)})

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def d(self) -> int | None:
        """Number of parts, or None for an unpartitioned table."""
        if self.parts is None:
            return None
        return max(self.parts) + 1

    def part_members(self, i: int) -> tuple[int, ...]:
        if self.parts is None:
            raise ValueError("table has no partition")
        return tuple(v for v, p in enumerate(self.parts) if p == i)

    def index(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValueError(f"unknown vertex name {name!r}") from None

    def resolve(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(n) for n in names)

    def label(self, s: Iterable[int]) -> str:
        return "{" + ",".join(self.names[v] for v in sorted(s)) + "}"

    def without_parts(self) -> "VertexTable":
        return VertexTable(self.names, None) if self.parts is not None else self

    def restricted(self, w: frozenset[int], keep_parts: bool = True) -> "VertexTable":
        """Sub-table on w, order inherited.  Surviving parts are renumbered
        compactly in their original order; the partition is dropped when
        keep_parts is false or when there was none."""
        order = sorted(w)
        names = tuple(self.names[v] for v in order)
        if self.parts is None or not keep_parts or not order:
            return VertexTable(names, None)
        surviving = sorted({self.parts[v] for v in order})
        renum = {p: i for i, p in enumerate(surviving)}
        return VertexTable(names, tuple(renum[self.parts[v]] for v in order))


@dataclass(frozen=True)
class Clutter:
    vertices: VertexTable
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        edges = tuple(frozenset(e) for e in self.edges)
        n = self.vertices.n
        for e in edges:
            if not e:
                raise ValueError("edges must be nonempty")
            if not all(0 <= v < n for v in e):
                raise ValueError("edge vertex out of range")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        for e, f in itertools.combinations(edges, 2):
            if e <= f or f <= e:
                raise ValueError(
                    f"not an antichain: {self.vertices.label(e)} and {self.vertices.label(f)}"
                )
        if self.vertices.parts is not None:
            for e in edges:
                counts = [0] * (self.vertices.d or 0)
                for v in e:
                    counts[self.vertices.parts[v]] += 1
                if any(c != 1 for c in counts):
                    raise ValueError(
                        f"edge {self.vertices.label(e)} is not a transversal of the parts"
                    )
        object.__setattr__(self, "edges", tuple(sorted(edges, key=sorted_key)))

    @property
    def n(self) -> int:
        return self.vertices.n

    @property
    def d(self) -> int | None:
        return self.vertices.d

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.edges)

    def part_sets(self) -> tuple[frozenset[int], ...]:
        if self.vertices.parts is None:
            raise ValueError("clutter has no partition")
        return tuple(frozenset(self.vertices.part_members(i)) for i in range(self.vertices.d))

    def complete_edges(self) -> tuple[frozenset[int], ...]:
        """All transversals of the partition, in canonical order."""
        prod = itertools.product(*(self.vertices.part_members(i) for i in range(self.vertices.d)))
        return tuple(sorted((frozenset(t) for t in prod), key=sorted_key))


def minimal_vertex_covers(c: Clutter) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal transversal sets of c, in canonical order.

    Iterated expansion edge by edge: a cover of the first k+1 edges is a cover
    of the first k edges that already meets edge k+1, or one extended by a
    vertex of edge k+1.  Pruning to minimal sets after every edge keeps the
    intermediate families small.  For the empty clutter the answer is
    {emptyset}: the unit ideal, which is what makes the linkage identities
    below hold without special cases.
    """
    covers: list[frozenset[int]] = [frozenset()]
    for e in c.edges:
        grown: list[frozenset[int]] = []
        for cov in covers:
            if cov & e:
                grown.append(cov)
            else:
                grown.extend(cov | {v} for v in sorted(e))
        covers = list(minimal_sets(grown))
    return tuple(covers)


def independent_sets(c: Clutter, max_vertices: int = DEFAULT_MAX_VERTICES):
    """The independence complex of c: all vertex sets containing no edge.

    Returned as a simplicial complex whose facets are the complements of the
    minimal vertex covers.  The complex enumerates its faces eagerly, hence
    the guard.
    """
    from .simplicial import SimplicialComplex

    check_vertex_guard(c.n, max_vertices)
    everything = frozenset(range(c.n))
    facets = tuple(everything - cov for cov in minimal_vertex_covers(c))
    return SimplicialComplex(c.vertices, tuple(sorted(facets, key=sorted_key)))


def d_partite_complement(c: Clutter) -> Clutter:
    """The clutter of all transversals of the partition that are not edges of c."""
    if c.vertices.parts is None:
        raise ValueError("complement needs a partitioned clutter")
    present = c.edge_set()
    edges = tuple(e for e in c.complete_edges() if e not in present)
    return Clutter(c.vertices, edges)


def restrict(c: Clutter, w: Iterable[int]) -> Clutter:
    """The subclutter of edges lying entirely inside w, on the vertex set w.

    Parts are renumbered over the parts that stay nonempty on w; if every part
    meets w the part indices are unchanged.
    """
    w = frozenset(w)
    if not all(0 <= v < c.n for v in w):
        raise ValueError("restriction set out of range")
    table = c.vertices.restricted(w)
    order = sorted(w)
    renum = {v: i for i, v in enumerate(order)}
    edges = tuple(frozenset(renum[v] for v in e) for e in c.edges if e <= w)
    return Clutter(table, edges)


def ranked_projection(c: Clutter, parts: Iterable[int]) -> Clutter:
    """Project edges onto the union of the given parts, keeping minimal images.

    For a d-partite d-uniform clutter every projected edge has exactly one
    vertex in each chosen part, so the projection is |parts|-partite uniform;
    duplicates collapse silently.
    """
    if c.vertices.parts is None:
        raise ValueError("ranked projection needs a partitioned clutter")
    chosen = sorted(set(parts))
    if not chosen:
        raise ValueError("need at least one part")
    if not all(0 <= p < c.vertices.d for p in chosen):
        raise ValueError("part index out of range")
    w = frozenset(v for p in chosen for v in c.vertices.part_members(p))
    table = c.vertices.restricted(w)
    order = sorted(w)
    renum = {v: i for i, v in enumerate(order)}
    images = (frozenset(renum[v] for v in e & w) for e in c.edges)
    return Clutter(table, minimal_sets(images))


def _freeze(x):
    if isinstance(x, (list, tuple)):
        return tuple(_freeze(y) for y in x)
    return x


def from_point_configuration(points: Sequence[Sequence[object]]) -> Clutter:
    """The d-partite d-uniform clutter of a configuration of d-tuples.

    Coordinate i of each point is a label; distinct labels seen in coordinate
    i, in order of first appearance, become the vertices of part i.  Each
    point becomes the edge of its labels; duplicate points collapse to one
    edge.  Labels may be nested lists (they are compared structurally).
    """
    if not points:
        raise ValueError("need at least one point")
    rows = [tuple(_freeze(x) for x in p) for p in points]
    d = len(rows[0])
    if d == 0:
        raise ValueError("points must have at least one coordinate")
    if any(len(r) != d for r in rows):
        raise ValueError("ragged point configuration")
    labels: list[dict[object, int]] = [{} for _ in range(d)]
    for r in rows:
        for i, x in enumerate(r):
            if x not in labels[i]:
                labels[i][x] = len(labels[i])
    names: list[str] = []
    parts: list[int] = []
    offsets = []
    for i in range(d):
        offsets.append(len(names))
        names.extend(f"{_part_letter(i)}{j + 1}" for j in range(len(labels[i])))
        parts.extend([i] * len(labels[i]))
    table = VertexTable(tuple(names), tuple(parts))
    edges: dict[frozenset[int], None] = {}
    for r in rows:
        edges[frozenset(offsets[i] + labels[i][x] for i, x in enumerate(r))] = None
    return Clutter(table, tuple(edges))


def _partitioned_table(part_sizes: Sequence[int]) -> VertexTable:
    if not part_sizes or any(s < 1 for s in part_sizes):
        raise ValueError("part sizes must be positive")
    names: list[str] = []
    parts: list[int] = []
    for i, s in enumerate(part_sizes):
        names.extend(f"{_part_letter(i)}{j + 1}" for j in range(s))
        parts.extend([i] * s)
    return VertexTable(tuple(names), tuple(parts))


def complete_clutter(part_sizes: Sequence[int]) -> Clutter:
    """All transversals of parts of the given sizes."""
    table = _partitioned_table(part_sizes)
    prod = itertools.product(*(table.part_members(i) for i in range(len(part_sizes))))
    return Clutter(table, tuple(frozenset(t) for t in prod))


def ferrers_clutter(row_lengths: Sequence[int]) -> Clutter:
    """The bipartite clutter of a Ferrers diagram: edge (a_i, b_j) iff j < row i.

    Row lengths must be weakly decreasing and positive.
    """
    lam = tuple(row_lengths)
    if not lam or any(x < 1 for x in lam):
        raise ValueError("row lengths must be positive")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("row lengths must be weakly decreasing")
    table = _partitioned_table([len(lam), lam[0]])
    rows = table.part_members(0)
    cols = table.part_members(1)
    edges = tuple(
        frozenset((rows[i], cols[j])) for i in range(len(lam)) for j in range(lam[i])
    )
    return Clutter(table, edges)


def random_clutter(part_sizes: Sequence[int], edge_probability: float, seed: int) -> Clutter:
    """Keep each transversal independently with the given probability.

    Deterministic per seed: transversals are visited in canonical order and
    consume one uniform draw each.
    """
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    complete = complete_clutter(part_sizes)
    rng = random.Random(seed)
    edges = tuple(e for e in complete.edges if rng.random() < edge_probability)
    return Clutter(complete.vertices, edges)

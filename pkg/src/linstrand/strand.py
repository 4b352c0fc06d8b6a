"""The first linear strand of the edge ideal of a d-partite d-uniform
clutter, in closed form.

The level-i free summand has one basis element e_A for every independent set
A of the d-partite complement with |A| = i + d that meets every part; the
differential is

    e_A  |-->  sum over v in A, A minus v still meeting every part, of
               (-1)^(position of v in A) * x_v * e_{A minus v},

with positions counted from 0 in ascending vertex order.  (Removing a vertex
keeps independence for free, so the only condition on v is the part one.)
Level i corresponds to the (i+d-1)-dimensional faces of the relative pair of
the independence complex of the complement modulo the part-deficient
subcomplex, and the matrix of scalars above is exactly the relative boundary
matrix; verify_support checks that correspondence entry by entry.

Evaluating x_v at a squarefree multidegree b (keep basis elements inside b,
scalars as they are) gives the complex whose homology controls whether the
strand is a resolution there; strand_homology_at computes it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .clutters import Clutter, VertexTable, d_partite_complement, sorted_key
from .errors import DEFAULT_MAX_VERTICES, check_vertex_guard
from .linalg import ChainComplex, Field, Matrix, QQ, homology_dims
from .simplicial import SimplicialPair, relative_chain_complex

__all__ = ["StrandEntry", "StrandComplex", "SupportReport", "first_linear_strand", "verify_support", "strand_homology_at"]


class StrandEntry(NamedTuple):
    """One monomial entry of a strand differential: the coefficient of
    e_{target} in the image of e_{source} is sign * x_vertex."""

    row: int
    col: int
    sign: int
    vertex: int


@dataclass(frozen=True)
class StrandComplex:
    """Levels of basis sets and, for each level i >= 1, the entries of the
    differential from level i to level i - 1.  differentials[0] is empty by
    convention (nothing below level 0)."""

    d: int
    vertices: VertexTable
    levels: tuple[tuple[frozenset[int], ...], ...]
    differentials: tuple[tuple[StrandEntry, ...], ...]

    def __post_init__(self):
        if len(self.differentials) != len(self.levels):
            raise ValueError("one differential slot per level")
        if self.differentials and self.differentials[0]:
            raise ValueError("level 0 has no differential")
        for i, entries in enumerate(self.differentials):
            if i == 0:
                continue
            for e in entries:
                if not (0 <= e.col < len(self.levels[i]) and 0 <= e.row < len(self.levels[i - 1])):
                    raise ValueError(f"entry out of range at level {i}")
                if e.sign not in (-1, 1):
                    raise ValueError("signs must be +-1")
                a, b = self.levels[i][e.col], self.levels[i - 1][e.row]
                if b != a - {e.vertex} or e.vertex not in a:
                    raise ValueError(
                        f"entry at level {i} does not drop a single vertex: "
                        f"{self.vertices.label(a)} -> {self.vertices.label(b)}"
                    )

    @property
    def n(self) -> int:
        return self.vertices.n

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def length(self) -> int:
        return len(self.levels)

    def skeleton(self, i: int) -> Matrix:
        """The scalar matrix of the level-i differential (monomials replaced
        by their signs)."""
        if not 1 <= i < len(self.levels):
            raise ValueError(f"no differential at level {i}")
        return Matrix.from_entries(
            len(self.levels[i - 1]),
            len(self.levels[i]),
            ((e.row, e.col, e.sign) for e in self.differentials[i]),
        )

    def skeleton_complex(self) -> ChainComplex:
        """All scalar matrices as a chain complex over the level index;
        construction re-checks that consecutive differentials compose to
        zero."""
        dims = {i: len(level) for i, level in enumerate(self.levels)}
        boundaries = {i: self.skeleton(i) for i in range(1, len(self.levels))}
        return ChainComplex(dims, boundaries)


def _meets_every_part(s: frozenset[int], parts: tuple[frozenset[int], ...]) -> bool:
    return all(s & p for p in parts)


def first_linear_strand(c: Clutter, max_vertices: int = DEFAULT_MAX_VERTICES) -> StrandComplex:
    """Construct the first linear strand of the edge ideal of c.

    Basis sets are enumerated in the fixed order (ascending vertex tuples);
    a level is the independent transversal-meeting sets of one cardinality,
    starting at cardinality d, and the levels stop at the last nonempty one.
    Validates its own differential by composing consecutive skeletons.
    """
    if c.vertices.parts is None:
        raise ValueError("the strand construction needs a partitioned clutter")
    check_vertex_guard(c.n, max_vertices)
    comp = d_partite_complement(c)
    comp_edges = comp.edges
    parts = c.part_sets()
    d = c.vertices.d
    levels: list[tuple[frozenset[int], ...]] = []
    for size in range(d, c.n + 1):
        level = []
        for combo in itertools.combinations(range(c.n), size):
            s = frozenset(combo)
            if not _meets_every_part(s, parts):
                continue
            if any(e <= s for e in comp_edges):
                continue
            level.append(s)
        if not level:
            break
        levels.append(tuple(sorted(level, key=sorted_key)))
    differentials: list[tuple[StrandEntry, ...]] = [()] if levels else []
    for i in range(1, len(levels)):
        index = {s: r for r, s in enumerate(levels[i - 1])}
        entries = []
        for col, a in enumerate(levels[i]):
            for t, v in enumerate(sorted(a)):
                b = a - {v}
                row = index.get(b)
                if row is not None:
                    entries.append(StrandEntry(row, col, -1 if t % 2 else 1, v))
        differentials.append(tuple(entries))
    strand = StrandComplex(d, c.vertices, tuple(levels), tuple(differentials))
    strand.skeleton_complex()  # raises if the squares do not vanish
    return strand


@dataclass(frozen=True)
class SupportReport:
    """Outcome of checking a strand against its relative pair."""

    ok: bool
    mismatches: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok


def verify_support(s: StrandComplex, pair: SimplicialPair) -> SupportReport:
    """Check that the strand is the relative pair, shifted: the level-i basis
    must equal the (i+d-1)-dimensional pair faces in the same order, and each
    scalar skeleton must equal the corresponding relative boundary matrix
    entry by entry.  Collects every mismatch rather than stopping at the
    first."""
    problems: list[str] = []
    d = s.d
    rel = relative_chain_complex(pair)
    top_pair = pair.x.dim
    top_level = max(s.length() - 1, top_pair - d + 1)
    for i in range(0, top_level + 1):
        basis = s.levels[i] if i < s.length() else ()
        faces = pair.faces(i + d - 1)
        if basis != faces:
            problems.append(
                f"level {i}: strand basis has {len(basis)} sets, pair has {len(faces)} "
                f"faces of dimension {i + d - 1}"
                if len(basis) != len(faces)
                else f"level {i}: basis order or content differs from the pair faces"
            )
    for k in range(pair.x.dim + 1):
        if k < d - 1 and pair.faces(k):
            problems.append(f"pair has faces of dimension {k} below the strand range")
    for i in range(1, s.length()):
        mine = s.skeleton(i)
        theirs = rel.boundary(i + d - 1)
        if (mine.nrows, mine.ncols) != (theirs.nrows, theirs.ncols):
            problems.append(
                f"level {i}: skeleton is {mine.nrows}x{mine.ncols}, "
                f"relative boundary is {theirs.nrows}x{theirs.ncols}"
            )
            continue
        if mine != theirs:
            a, b = dict(), dict()
            for r, cc, v in mine.entries:
                a[(r, cc)] = v
            for r, cc, v in theirs.entries:
                b[(r, cc)] = v
            for key in sorted(a.keys() | b.keys()):
                if a.get(key) != b.get(key):
                    problems.append(
                        f"level {i}: entry {key} is {a.get(key, 0)} in the strand, "
                        f"{b.get(key, 0)} in the relative boundary"
                    )
    return SupportReport(not problems, tuple(problems))


def strand_homology_at(s: StrandComplex, b: frozenset[int], f: Field = QQ) -> dict[int, int]:
    """Homology of the strand evaluated at the squarefree multidegree b.

    In multidegree b the level-i summand keeps the basis sets contained in b,
    and every surviving entry's monomial evaluates to its sign (the dropped
    vertex lies in b whenever source and target do).  Returns {level: dim}
    for every level of s, zeros included.
    """
    b = frozenset(b)
    if not all(0 <= v < s.n for v in b):
        raise ValueError("multidegree out of range")
    kept: list[list[int]] = []
    for level in s.levels:
        kept.append([idx for idx, a in enumerate(level) if a <= b])
    dims = {i: len(k) for i, k in enumerate(kept)}
    boundaries = {}
    for i in range(1, s.length()):
        rows = {old: new for new, old in enumerate(kept[i - 1])}
        cols = {old: new for new, old in enumerate(kept[i])}
        entries = [
            (rows[e.row], cols[e.col], e.sign)
            for e in s.differentials[i]
            if e.col in cols and e.row in rows
        ]
        boundaries[i] = Matrix.from_entries(len(kept[i - 1]), len(kept[i]), entries)
    return homology_dims(ChainComplex(dims, boundaries), f)

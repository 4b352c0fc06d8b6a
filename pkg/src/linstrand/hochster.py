"""Multigraded Betti numbers of squarefree monomial ideals, by Hochster's
formula.

beta_{i,sigma}(I) is the dimension of the reduced homology in degree
|sigma| - i - 2 of the independence complex of the generator supports
restricted to sigma, over the coefficient field.  Everything here enumerates
all 2^n squarefree multidegrees directly and is therefore exponential in n;
that is the point: this module is the oracle the strand construction is
validated against, so it shares no code with the strand or the relative-pair
route beyond exact rank computation.

Faces are handled as bitmasks, enumerated once per ideal and filtered per
multidegree by mask intersection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DEFAULT_MAX_VERTICES, ConsistencyError, check_vertex_guard
from .ideals import SquarefreeIdeal
from .linalg import Field, Matrix, QQ, rank

__all__ = ["BettiTable", "betti_table", "multigraded_betti", "linear_strand_betti", "is_linear_by_betti"]


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,sigma}; graded aggregates
    beta_{i,j} = sum over |sigma| = j are derived at construction."""

    n: int
    min_degree: int
    multigraded: dict[tuple[int, frozenset[int]], int]

    def __post_init__(self):
        graded: dict[tuple[int, int], int] = {}
        for (i, sigma), v in self.multigraded.items():
            key = (i, len(sigma))
            graded[key] = graded.get(key, 0) + v
        object.__setattr__(self, "graded", graded)

    def value(self, i: int, j: int) -> int:
        return self.graded.get((i, j), 0)

    def multigraded_value(self, i: int, sigma: frozenset[int]) -> int:
        return self.multigraded.get((i, frozenset(sigma)), 0)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.graded), default=0)

    def diagram_rows(self) -> dict[int, list[int]]:
        """Rows of the Betti diagram: row r lists beta_{i, i+r} for
        i = 0..projective dimension."""
        pd = self.projective_dimension()
        rows: dict[int, list[int]] = {}
        for (i, j), v in self.graded.items():
            rows.setdefault(j - i, [0] * (pd + 1))[i] = v
        return {r: rows[r] for r in sorted(rows)}

    def is_linear(self) -> bool:
        d = self.min_degree
        return all(j == i + d for (i, j) in self.graded)


def _independent_masks(n: int, gen_masks: list[int]) -> list[list[int]]:
    """Faces of the independence complex of the generator supports, as
    bitmasks grouped by cardinality (index 0 holds the empty face)."""
    by_card: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        if any(mask & g == g for g in gen_masks):
            continue
        by_card[mask.bit_count()].append(mask)
    return by_card


def _mask_boundary(sources: list[int], targets: list[int], n: int) -> Matrix:
    index = {m: i for i, m in enumerate(targets)}
    entries = []
    for col, m in enumerate(sources):
        t = 0
        for v in range(n):
            bit = 1 << v
            if m & bit:
                row = index.get(m ^ bit)
                if row is not None:
                    entries.append((row, col, -1 if t % 2 else 1))
                t += 1
    return Matrix.from_entries(len(targets), len(sources), entries)


def _restricted_reduced_homology(
    by_card: list[list[int]], sigma: int, n: int, f: Field, only_degree: int | None = None
) -> dict[int, int]:
    """Reduced homology dimensions of the independence complex restricted to
    the multidegree sigma; keys are dimensions (cardinality minus one).
    With only_degree = k, just {k: dim}."""
    faces = [[m for m in row if m & ~sigma == 0] for row in by_card]
    top = max((c for c, row in enumerate(faces) if row), default=-1)
    if top < 0:
        return {}
    degrees = range(-1, top) if only_degree is None else (only_degree,)
    cache: dict[int, int] = {}

    def del_rank(c: int) -> int:
        # rank of the boundary from cardinality c to cardinality c - 1
        if c < 1 or c > top or not faces[c] or not faces[c - 1]:
            return 0
        if c not in cache:
            cache[c] = rank(_mask_boundary(faces[c], faces[c - 1], n), f)
        return cache[c]

    out: dict[int, int] = {}
    for k in degrees:
        if k < -1 or k > top - 1:
            out[k] = 0
            continue
        h = len(faces[k + 1]) - del_rank(k + 1) - del_rank(k + 2)
        if h < 0:
            raise ConsistencyError("negative reduced homology dimension")
        out[k] = h
    return out


def _prepare(i: SquarefreeIdeal, max_vertices: int):
    check_vertex_guard(i.vertices.n, max_vertices)
    if i.is_zero:
        raise ValueError("the zero ideal has no Betti table")
    n = i.vertices.n
    gen_masks = [sum(1 << v for v in g) for g in i.generators]
    return n, _independent_masks(n, gen_masks)


def _unmask(sigma: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if sigma >> v & 1)


def betti_table(
    i: SquarefreeIdeal,
    f: Field = QQ,
    degree_cap: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> BettiTable:
    """All nonzero beta_{i,sigma} with |sigma| at most degree_cap (all of
    them when the cap is None), over the field f."""
    n, by_card = _prepare(i, max_vertices)
    cap = n if degree_cap is None else min(degree_cap, n)
    multigraded: dict[tuple[int, frozenset[int]], int] = {}
    for sigma in range(1 << n):
        size = sigma.bit_count()
        if size > cap:
            continue
        h = _restricted_reduced_homology(by_card, sigma, n, f)
        for k, v in h.items():
            hom_i = size - k - 2
            if v and hom_i >= 0:
                multigraded[(hom_i, _unmask(sigma, n))] = v
    return BettiTable(n, i.min_degree, multigraded)


def multigraded_betti(
    i: SquarefreeIdeal,
    hom_degree: int,
    sigma: frozenset[int],
    f: Field = QQ,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> int:
    """A single beta_{i,sigma} without sweeping the whole table."""
    n, by_card = _prepare(i, max_vertices)
    smask = sum(1 << v for v in sigma)
    k = len(sigma) - hom_degree - 2
    return _restricted_reduced_homology(by_card, smask, n, f, only_degree=k).get(k, 0)


def linear_strand_betti(
    i: SquarefreeIdeal,
    f: Field = QQ,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[dict[int, int], dict[tuple[int, frozenset[int]], int]]:
    """The diagonal j = i + d of the Betti table: graded and multigraded
    first-linear-strand Betti numbers.

    Per multidegree only beta_{|sigma|-d, sigma} is wanted, which is the
    reduced homology of the restricted complex in the single degree d - 2,
    so this costs two ranks per multidegree instead of a full homology run.
    """
    n, by_card = _prepare(i, max_vertices)
    d = i.min_degree
    graded: dict[int, int] = {}
    multigraded: dict[tuple[int, frozenset[int]], int] = {}
    for sigma in range(1 << n):
        size = sigma.bit_count()
        if size < d:
            continue
        v = _restricted_reduced_homology(by_card, sigma, n, f, only_degree=d - 2).get(d - 2, 0)
        if v:
            hom_i = size - d
            multigraded[(hom_i, _unmask(sigma, n))] = v
            graded[hom_i] = graded.get(hom_i, 0) + v
    return graded, multigraded


def is_linear_by_betti(
    i: SquarefreeIdeal,
    f: Field = QQ,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> bool:
    """Linear resolution test by the oracle: one generator degree and no
    graded Betti number off the diagonal j = i + d."""
    if i.is_zero:
        raise ValueError("the zero ideal has no resolution to test")
    if any(len(g) != i.min_degree for g in i.generators):
        return False
    return betti_table(i, f, max_vertices=max_vertices).is_linear()

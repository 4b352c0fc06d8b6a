"""Shared exception types and the vertex-count guard.

Everything here enumerates subsets of the vertex set somewhere, so entry
points that are exponential in n refuse to start above a guard value instead
of hanging.  The guard is a keyword argument on those entry points; this
module only fixes the default and the exception types.
"""

DEFAULT_MAX_VERTICES = 24


class SizeGuardError(ValueError):
    """An operation would enumerate over more vertices than the guard allows."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed (negative homology rank, nonzero square
    of a boundary, a degree-d generator that is not a transversal).  These
    indicate a bug or inconsistent input, never a routine error."""


def check_vertex_guard(n: int, max_vertices: int) -> None:
    if n > max_vertices:
        raise SizeGuardError(
            f"{n} vertices exceeds the guard of {max_vertices}; "
            f"raise max_vertices explicitly if you mean it"
        )

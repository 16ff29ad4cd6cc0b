"""Dimension bounds for graphs of groups and fiber-slope arithmetic on tori.

The bounds take dimension labels rather than groups. Whether a splitting
is acylindrical is the caller's claim; :mod:`vcdim.jsj` is where that
claim gets certified for JSJ graphs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import BadDeterminant, IntMatrix2, Slope


@dataclass(frozen=True)
class GraphOfDims:
    vertex_dims: tuple[int, ...]
    edge_dims: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.vertex_dims:
            raise ValueError("a graph of groups needs at least one vertex")


def acylindrical_bound(g: GraphOfDims) -> int:
    """Upper bound on the dimension of an acylindrical splitting."""
    return max(2, max(g.vertex_dims), *(d + 1 for d in g.edge_dims))


def prime_sum_bounds(dims) -> tuple[int, int]:
    """(lower, upper) window for a connected sum given per-summand dimensions."""
    dims = list(dims)
    if not dims:
        raise ValueError("need at least one summand dimension")
    top = max(dims)
    return top, max(2, top)


def slopes_match(s_a: Slope, gluing: IntMatrix2, s_b: Slope) -> bool:
    """Whether the gluing carries slope ``s_a`` onto ``s_b`` up to sign."""
    if gluing.det not in (1, -1):
        raise BadDeterminant(f"gluing {gluing.rows()} has determinant {gluing.det}")
    image = gluing @ s_a.vector()
    target = s_b.vector()
    return image == target or image == (-target[0], -target[1])

"""Certification of JSJ graphs of non-geometric primes, and their dimension."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import refs
from .gog import GraphOfDims, acylindrical_bound, slopes_match
from .model import (
    Diagnostic,
    DimResult,
    HyperbolicPiece,
    JsjGraph,
    Justification,
    KPiece,
    OrbifoldBase,
    SeifertPiece,
    Slope,
)
from .orbifold import InvalidPiece, OrbifoldClass, classify_bounded_orbifold_interior

ACYLINDRICITY_CONSTANT = 5
K_EIGEN_SLOPES = (Slope(1, 0), Slope(0, 1))
PIECE_GDVC = 3
TORUS_GDVC = 3

REDIRECT_TORUS_BUNDLE = "use torus_bundle"
REDIRECT_DOUBLE_OF_K = "use double_of_k"

# normalized vertex kinds
HYPERBOLIC = "hyperbolic"
SEIFERT_HYP = "seifert_hyperbolic_base"
K = "k"
REJECTED = "rejected"


class InvalidJsj(ValueError):
    def __init__(self, verdict: "JsjVerdict"):
        self.verdict = verdict
        super().__init__("; ".join(str(d) for d in verdict.diagnostics))


@dataclass(frozen=True)
class JsjVerdict:
    valid: bool
    acylindricity_constant: Optional[int]
    diagnostics: tuple[Diagnostic, ...] = ()
    redirect: Optional[str] = None
    # vertex id -> normalized kind, for traces
    kinds: dict = field(default_factory=dict, compare=False)


def _is_annulus(base: OrbifoldBase) -> bool:
    return base.orientable and base.genus == 0 and base.boundary_count == 2 and not base.cone_points


def _is_k_presentation(base: OrbifoldBase) -> bool:
    disk_22 = (base.orientable and base.genus == 0 and base.boundary_count == 1
               and sorted(base.cone_orders) == [2, 2])
    moebius = not base.orientable and base.genus == 1 and base.boundary_count == 1 and not base.cone_points
    return disk_22 or moebius


def _classify_vertex(v, where: str, diags: list[Diagnostic]) -> str:
    if isinstance(v, HyperbolicPiece):
        return HYPERBOLIC
    if isinstance(v, KPiece):
        return K
    cls = classify_bounded_orbifold_interior(v.base)
    if isinstance(cls, InvalidPiece):
        diags.append(Diagnostic(
            refs.BOUNDED_BASE, where,
            f"base has orbifold Euler characteristic {cls.euler_characteristic} > 0; "
            "the piece is a fibered solid torus, not a JSJ piece",
        ))
        return REJECTED
    if cls is OrbifoldClass.HYPERBOLIC:
        return SEIFERT_HYP
    if _is_annulus(v.base):
        diags.append(Diagnostic(
            refs.TRIVIAL_PIECE, where,
            "piece is T2 x I; its tori are parallel, violating minimality",
            REDIRECT_TORUS_BUNDLE,
        ))
        return REJECTED
    if _is_k_presentation(v.base):
        # Re-expressed as a K piece: the socket basis must be the holonomy eigenbasis.
        if v.fibers[0] not in K_EIGEN_SLOPES:
            diags.append(Diagnostic(
                refs.EXCLUDED_PIECES, where,
                "piece is the twisted I-bundle over the Klein bottle; its fiber slope must be "
                "(1, 0) or (0, 1) so the socket basis is the holonomy eigenbasis",
            ))
            return REJECTED
        return K
    diags.append(Diagnostic(
        refs.EXCLUDED_PIECES, where,
        "Euclidean-base piece other than T2 x I or the twisted I-bundle over the Klein bottle",
    ))
    return REJECTED


def _fiber(graph: JsjGraph, socket) -> Slope:
    return graph.vertex(socket[0]).fibers[socket[1]]


def validate_jsj(g: JsjGraph) -> JsjVerdict:
    """Check that ``g`` is a minimal JSJ decomposition of a non-geometric prime.

    Assumes the structural checks of :func:`vcdim.model.validate_description`
    have passed. Fiber slopes are trusted to be the canonical fibers.
    """
    diags: list[Diagnostic] = []
    redirect = None
    kinds = {}
    for i, v in enumerate(g.vertices):
        kinds[v.id] = _classify_vertex(v, f"vertices[{i}] ({v.id})", diags)

    if any(isinstance(v, SeifertPiece) and _is_annulus(v.base) for v in g.vertices):
        redirect = REDIRECT_TORUS_BUNDLE

    for j, e in enumerate(g.edges):
        where = f"edges[{j}] ({e.a[0]}:{e.a[1]} -> {e.b[0]}:{e.b[1]})"
        ka, kb = kinds[e.a[0]], kinds[e.b[0]]
        if ka == K and kb == K:
            diags.append(Diagnostic(
                refs.DOUBLE_OF_K, where,
                "two K pieces glued together form a geometric manifold, not a JSJ graph",
                REDIRECT_DOUBLE_OF_K,
            ))
            redirect = REDIRECT_DOUBLE_OF_K
        elif ka == SEIFERT_HYP and kb == SEIFERT_HYP:
            if slopes_match(_fiber(g, e.a), e.gluing, _fiber(g, e.b)):
                diags.append(Diagnostic(
                    refs.MATCHING_FIBERS, where,
                    "the two fibrations match on this torus, contradicting minimality of the decomposition",
                ))
        elif {ka, kb} == {K, SEIFERT_HYP}:
            edge = e if ka == K else e.reversed()
            neighbour_fiber = _fiber(g, edge.b)
            hit = [s for s in K_EIGEN_SLOPES if slopes_match(s, edge.gluing, neighbour_fiber)]
            if hit:
                diags.append(Diagnostic(
                    refs.K_EIGEN_SLOPE, where,
                    f"neighbour fiber pulls back to K eigen-slope ({hit[0].p}, {hit[0].q}); "
                    "the fibration extends over K, contradicting minimality of the decomposition",
                ))

    if redirect is None and not any(k in (HYPERBOLIC, SEIFERT_HYP) for k in kinds.values()):
        diags.append(Diagnostic(
            refs.EXCLUDED_PIECES, "vertices",
            "no hyperbolic piece and no Seifert piece over a hyperbolic base",
        ))

    valid = not diags
    return JsjVerdict(
        valid=valid,
        acylindricity_constant=ACYLINDRICITY_CONSTANT if valid else None,
        diagnostics=tuple(diags),
        redirect=redirect,
        kinds=kinds,
    )


_TABLE_ROW = {
    HYPERBOLIC: (refs.HYPERBOLIC, "hyperbolic piece"),
    SEIFERT_HYP: (refs.BOUNDED_HYPERBOLIC_PIECE, "compact Seifert fibered piece with base orbifold modeled on H2"),
    K: (refs.BOUNDED_EUCLIDEAN_PIECE, "compact Seifert fibered piece with base orbifold modeled on E2 (K)"),
}


def jsj_gdvc(g: JsjGraph) -> DimResult:
    verdict = validate_jsj(g)
    if not verdict.valid:
        raise InvalidJsj(verdict)
    trace = [Justification(
        refs.ACYLINDRICITY,
        f"JSJ splitting is acylindrical with k = {verdict.acylindricity_constant}",
    )]
    vertex_dims = []
    for v in g.vertices:
        ref, row = _TABLE_ROW[verdict.kinds[v.id]]
        vertex_dims.append(PIECE_GDVC)
        trace.append(Justification(refs.PIECE_TABLE, f"{v.id}: {row} -> {PIECE_GDVC} ({ref})"))
    edge_dims = [TORUS_GDVC] * len(g.edges)
    trace.append(Justification(refs.CRYSTALLOGRAPHIC, f"edge group Z^2 is 2-crystallographic -> {TORUS_GDVC}"))
    lower = max(vertex_dims)
    upper = acylindrical_bound(GraphOfDims(tuple(vertex_dims), tuple(edge_dims)))
    trace.append(Justification(refs.JSJ_REDUCTION, f"window [{lower}, {upper}]"))
    value = 3
    assert lower <= value <= upper
    trace.append(Justification(refs.NON_GEOMETRIC_PRIME, f"non-geometric prime -> {value}"))
    return DimResult(value, tuple(trace))

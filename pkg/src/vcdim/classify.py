"""Per-prime dispatch and assembly of the dimension of a connected sum.

Two routes compute the answer: :func:`gdvc_manifold` works from the
group-theoretic predicates of each prime's profile, and
:func:`gdvc_corollary_geometric` works from geometry tags and orders
only. :func:`cross_check` compares them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import refs
from .geometry import (
    double_cover_monodromy,
    double_of_k_geometry,
    euler_number,
    geometry_gdvc,
    is_virtually_cyclic_geometry,
    monodromy_type,
    seifert_closed_geometry,
    torus_bundle_geometry,
)
from .gog import prime_sum_bounds
from .jsj import jsj_gdvc, validate_jsj
from .model import (
    INFINITE,
    DeclaredGeometric,
    Diagnostic,
    DimResult,
    DoubleOfK,
    Geometry,
    HyperbolicClosed,
    Jsj,
    Justification,
    ManifoldDescription,
    PrimeSummand,
    SeifertClosed,
    TorusBundle,
)
from .orbifold import classify_closed_orbifold


class MissingOrder(ValueError):
    pass


class OrderClass(enum.Enum):
    TRIVIAL = "trivial"
    TWO = "two"
    MORE_THAN_TWO = "more-than-two"
    INFINITE = "infinite"


@dataclass(frozen=True)
class PrimeProfile:
    gdvc: int
    geometry: Optional[Geometry]
    vc: bool
    pi1_order_class: OrderClass
    trace: tuple[Justification, ...] = ()

    @property
    def has_flat_summand_geometry(self) -> bool:
        return self.geometry is Geometry.E3


_GEOMETRY_ROW = {
    Geometry.S3: (refs.SPHERICAL_SEIFERT, "bad or spherical base: S3 or S2xE"),
    Geometry.S2xE: (refs.SPHERICAL_SEIFERT, "bad or spherical base: S3 or S2xE"),
    Geometry.H2xE: (refs.HYPERBOLIC_BASE_SEIFERT, "base orbifold modeled on H2: H2xE or PSLtilde"),
    Geometry.PSLtilde: (refs.HYPERBOLIC_BASE_SEIFERT, "base orbifold modeled on H2: H2xE or PSLtilde"),
    Geometry.E3: (refs.CRYSTALLOGRAPHIC, "3-crystallographic group, E3"),
    Geometry.Nil: (refs.EUCLIDEAN_BASE_SEIFERT, "modeled on Nil"),
    Geometry.Sol: (refs.TORUS_BUNDLE, "modeled on Sol"),
    Geometry.H3: (refs.HYPERBOLIC, "hyperbolic manifold, H3"),
}


def _order_class(order) -> OrderClass:
    if order == 1:
        return OrderClass.TRIVIAL
    if order == 2:
        return OrderClass.TWO
    return OrderClass.MORE_THAN_TWO


def _geometric_profile(where: str, geometry: Geometry, order, trace: list) -> PrimeProfile:
    ref, row = _GEOMETRY_ROW[geometry]
    value = geometry_gdvc(geometry)
    trace.append(Justification(refs.CLOSED_TABLE, f"{where}: {row} -> {value} ({ref})"))
    if geometry is Geometry.S3:
        if not isinstance(order, int):
            raise MissingOrder(f"{where}: spherical summand needs pi1_order")
        order_class = _order_class(order)
    else:
        order_class = OrderClass.INFINITE
    return PrimeProfile(value, geometry, is_virtually_cyclic_geometry(geometry), order_class, tuple(trace))


def gdvc_prime(p: PrimeSummand, where: str = "summand") -> PrimeProfile:
    """Dimension and predicates of one prime summand."""
    trace: list[Justification] = []
    if isinstance(p, SeifertClosed):
        g = seifert_closed_geometry(p.inv)
        cls = classify_closed_orbifold(p.inv.base)
        trace.append(Justification(
            refs.CLOSED_TABLE,
            f"{where}: Seifert fibered, {cls.value} base, e = {euler_number(p.inv)} -> {g.value}",
        ))
        return _geometric_profile(where, g, p.pi1_order, trace)
    if isinstance(p, HyperbolicClosed):
        return _geometric_profile(where, Geometry.H3, None, trace)
    if isinstance(p, TorusBundle):
        kind = monodromy_type(p.monodromy)
        g = torus_bundle_geometry(p.monodromy)
        trace.append(Justification(refs.TORUS_BUNDLE, f"{where}: {kind.value} monodromy -> {g.value}"))
        return _geometric_profile(where, g, None, trace)
    if isinstance(p, DoubleOfK):
        m = double_cover_monodromy(p.gluing)
        g = double_of_k_geometry(p.gluing)
        trace.append(Justification(
            refs.DOUBLE_OF_K, f"{where}: double cover is a torus bundle with monodromy {m.rows()} -> {g.value}",
        ))
        return _geometric_profile(where, g, None, trace)
    if isinstance(p, Jsj):
        result = jsj_gdvc(p.graph)
        trace += [Justification(j.ref, f"{where}: {j.clause}") for j in result.trace]
        return PrimeProfile(result.value, None, False, OrderClass.INFINITE, tuple(trace))
    if isinstance(p, DeclaredGeometric):
        trace.append(Justification(refs.CLOSED_TABLE, f"{where}: declared geometry {p.geometry.value}"))
        return _geometric_profile(where, p.geometry, p.pi1_order, trace)
    raise TypeError(f"not a prime summand: {p!r}")


def gdvc_manifold(m: ManifoldDescription) -> DimResult:
    profiles = [gdvc_prime(s, f"summands[{i}]") for i, s in enumerate(m.summands)]
    trace: list[Justification] = [j for p in profiles for j in p.trace]
    k = len(profiles)
    lower, upper = prime_sum_bounds(p.gdvc for p in profiles)
    trace.append(Justification(refs.PRIME_SUM_BOUNDS, f"window [{lower}, {upper}] over {k} summand(s)"))

    if any(p.has_flat_summand_geometry for p in profiles):
        value, fired = 4, (f"{refs.MAIN_THEOREM}(3)", "a prime summand is modeled on E3, so Z^3 is a subgroup")
    elif all(p.vc for p in profiles):
        if k == 1:
            value, fired = 0, (f"{refs.MAIN_THEOREM}(1)", "virtually cyclic")
        elif k == 2 and all(p.pi1_order_class is OrderClass.TWO for p in profiles):
            value, fired = 0, (f"{refs.MAIN_THEOREM}(1)", "Z/2 * Z/2 is infinite dihedral, virtually cyclic")
        else:
            value, fired = 2, (f"{refs.MAIN_THEOREM}(2)", "non-elementary free product of virtually cyclic groups")
    else:
        value, fired = 3, (f"{refs.MAIN_THEOREM}(4)", "all other cases")
    trace.append(Justification(*fired))
    assert lower <= value <= upper
    return DimResult(value, tuple(trace))


def clause_of(result: DimResult) -> str:
    """The main-theorem clause number that fired, as a string."""
    for j in reversed(result.trace):
        if j.ref.startswith(refs.MAIN_THEOREM + "("):
            return j.ref[len(refs.MAIN_THEOREM) + 1:-1]
    raise ValueError("result has no main-theorem record")


def _summand_geometry(s: PrimeSummand):
    """(geometry or None, order) for the geometric route."""
    if isinstance(s, SeifertClosed):
        return seifert_closed_geometry(s.inv), s.pi1_order
    if isinstance(s, HyperbolicClosed):
        return Geometry.H3, INFINITE
    if isinstance(s, TorusBundle):
        return torus_bundle_geometry(s.monodromy), INFINITE
    if isinstance(s, DoubleOfK):
        return double_of_k_geometry(s.gluing), INFINITE
    if isinstance(s, Jsj):
        return None, INFINITE
    return s.geometry, s.pi1_order


def _is_projective_space(g, order) -> bool:
    return g is Geometry.S3 and order == 2


def _order_exceeds_two(g, order) -> bool:
    if g is Geometry.S3:
        if not isinstance(order, int):
            raise MissingOrder("spherical summand needs pi1_order")
        return order > 2
    return True


def gdvc_corollary_geometric(m: ManifoldDescription) -> int:
    pieces = [_summand_geometry(s) for s in m.summands]
    k = len(pieces)
    round_ = {Geometry.S3, Geometry.S2xE}
    all_round = all(g in round_ for g, _ in pieces)
    # M itself modeled on S3 or S2xR: a single round prime, or RP3 # RP3.
    if all_round and (k == 1 or (k == 2 and all(_is_projective_space(g, o) for g, o in pieces))):
        return 0
    if all_round and (k > 2 or (k == 2 and any(_order_exceeds_two(g, o) for g, o in pieces))):
        return 2
    if any(g is Geometry.E3 for g, _ in pieces):
        return 4
    return 3


def cross_check(m: ManifoldDescription) -> bool:
    return gdvc_manifold(m).value == gdvc_corollary_geometric(m)


def semantic_diagnostics(m: ManifoldDescription) -> list[Diagnostic]:
    """Problems that only show up once the mathematics is consulted.

    Run on a structurally valid description; an empty list means
    :func:`gdvc_manifold` will succeed.
    """
    out = []
    for i, s in enumerate(m.summands):
        where = f"summands[{i}]"
        if isinstance(s, Jsj):
            for d in validate_jsj(s.graph).diagnostics:
                out.append(Diagnostic(d.code, f"{where}.graph.{d.where}", d.message, d.redirect))
        elif isinstance(s, SeifertClosed):
            if seifert_closed_geometry(s.inv) is Geometry.S3 and s.pi1_order is None:
                out.append(Diagnostic(
                    "pi1_order", where, "fibration has S3 geometry; pi1_order must be supplied",
                ))
    return out

"""Thurston geometry of closed geometric summands and its dimension table."""
from __future__ import annotations

import enum
from fractions import Fraction

from .model import BadDeterminant, Geometry, IntMatrix2, SeifertInvariants
from .orbifold import OrbifoldClass, classify_closed_orbifold

# Boundary holonomy of the twisted I-bundle over the Klein bottle, in the
# socket basis fixed by KPiece.
HOLONOMY = IntMatrix2(1, 0, 0, -1)

VIRTUALLY_CYCLIC_GEOMETRIES = frozenset({Geometry.S3, Geometry.S2xE})

GEOMETRY_GDVC = {
    Geometry.S3: 0,
    Geometry.S2xE: 0,
    Geometry.E3: 4,
    Geometry.Nil: 3,
    Geometry.Sol: 3,
    Geometry.H3: 3,
    Geometry.H2xE: 3,
    Geometry.PSLtilde: 3,
}


class MonodromyType(enum.Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


def euler_number(inv: SeifertInvariants) -> Fraction:
    if inv.base.boundary_count:
        raise ValueError("Euler number is only defined for closed fibrations")
    if inv.b is None:
        raise ValueError("closed fibration needs the section obstruction b")
    return -(inv.b + sum((Fraction(beta, alpha) for alpha, beta in inv.base.cone_points), Fraction(0)))


def monodromy_type(A: IntMatrix2) -> MonodromyType:
    """Trichotomy on the absolute trace; +-identity counts as elliptic."""
    if A.det != 1:
        raise BadDeterminant(f"monodromy {A.rows()} has determinant {A.det}, expected +1")
    t = abs(A.trace)
    if t < 2 or A.is_scalar_unit():
        return MonodromyType.ELLIPTIC
    if t == 2:
        return MonodromyType.PARABOLIC
    return MonodromyType.HYPERBOLIC


_BUNDLE_GEOMETRY = {
    MonodromyType.ELLIPTIC: Geometry.E3,
    MonodromyType.PARABOLIC: Geometry.Nil,
    MonodromyType.HYPERBOLIC: Geometry.Sol,
}


def torus_bundle_geometry(A: IntMatrix2) -> Geometry:
    return _BUNDLE_GEOMETRY[monodromy_type(A)]


def double_cover_monodromy(phi: IntMatrix2) -> IntMatrix2:
    """Monodromy of the torus bundle double-covering the double of K along ``phi``.

    It is the composite of the two boundary holonomies, the second one
    pulled back through the gluing.
    """
    if phi.det not in (1, -1):
        raise BadDeterminant(f"gluing {phi.rows()} has determinant {phi.det}, expected +1 or -1")
    m = HOLONOMY @ phi.inverse() @ HOLONOMY @ phi
    assert m.det == 1
    return m


def double_of_k_geometry(phi: IntMatrix2) -> Geometry:
    return torus_bundle_geometry(double_cover_monodromy(phi))


_SEIFERT_GEOMETRY = {
    # (base class, e == 0) -> geometry; bad bases share the spherical row
    (OrbifoldClass.BAD, False): Geometry.S3,
    (OrbifoldClass.BAD, True): Geometry.S2xE,
    (OrbifoldClass.SPHERICAL, False): Geometry.S3,
    (OrbifoldClass.SPHERICAL, True): Geometry.S2xE,
    (OrbifoldClass.EUCLIDEAN, True): Geometry.E3,
    (OrbifoldClass.EUCLIDEAN, False): Geometry.Nil,
    (OrbifoldClass.HYPERBOLIC, True): Geometry.H2xE,
    (OrbifoldClass.HYPERBOLIC, False): Geometry.PSLtilde,
}


def seifert_closed_geometry(inv: SeifertInvariants) -> Geometry:
    cls = classify_closed_orbifold(inv.base)
    return _SEIFERT_GEOMETRY[cls, euler_number(inv) == 0]


def is_virtually_cyclic_geometry(g: Geometry) -> bool:
    return g in VIRTUALLY_CYCLIC_GEOMETRIES


def geometry_gdvc(g: Geometry) -> int:
    return GEOMETRY_GDVC[g]

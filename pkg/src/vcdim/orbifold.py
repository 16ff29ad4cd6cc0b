"""Classification of 2-orbifold bases by exact orbifold Euler characteristic."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .model import OrbifoldBase


class OrbifoldClass(enum.Enum):
    BAD = "bad"
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


class NotClosed(ValueError):
    pass


@dataclass(frozen=True)
class InvalidPiece:
    """A bounded base with positive characteristic: it only yields a solid torus."""

    euler_characteristic: Fraction
    reason: str = "base has positive orbifold Euler characteristic"


def underlying_euler_characteristic(base: OrbifoldBase) -> int:
    if base.orientable:
        return 2 - 2 * base.genus - base.boundary_count
    return 2 - base.genus - base.boundary_count


def orbifold_euler_characteristic(base: OrbifoldBase) -> Fraction:
    chi = Fraction(underlying_euler_characteristic(base))
    for alpha in base.cone_orders:
        chi -= 1 - Fraction(1, alpha)
    return chi


def _sign_class(chi: Fraction) -> OrbifoldClass:
    if chi > 0:
        return OrbifoldClass.SPHERICAL
    if chi == 0:
        return OrbifoldClass.EUCLIDEAN
    return OrbifoldClass.HYPERBOLIC


def is_bad(base: OrbifoldBase) -> bool:
    """Teardrops and spindles with unequal cone orders over the sphere."""
    if base.boundary_count or not base.orientable or base.genus != 0:
        return False
    orders = base.cone_orders
    return len(orders) == 1 or (len(orders) == 2 and orders[0] != orders[1])


def classify_closed_orbifold(base: OrbifoldBase) -> OrbifoldClass:
    if base.boundary_count > 0:
        raise NotClosed(f"base has {base.boundary_count} boundary components")
    if is_bad(base):
        return OrbifoldClass.BAD
    return _sign_class(orbifold_euler_characteristic(base))


def classify_bounded_orbifold_interior(base: OrbifoldBase) -> Union[OrbifoldClass, InvalidPiece]:
    """Geometry of the interior of a base with at least one boundary circle.

    Such interiors are always good and never spherical; a positive
    characteristic (a disk with at most one cone point) is reported as an
    :class:`InvalidPiece` instead.
    """
    if base.boundary_count < 1:
        raise ValueError("base has no boundary")
    chi = orbifold_euler_characteristic(base)
    if chi > 0:
        return InvalidPiece(chi)
    return _sign_class(chi)

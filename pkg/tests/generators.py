"""Seeded random inputs shared by the property tests and the acceptance suite.

``random_description(rng)`` draws a structurally and semantically valid
ManifoldDescription:

* 1 to 4 summands (weighted towards short sums, so the RP3 # RP3 and
  two-summand edge cases come up often);
* each summand is one of: closed Seifert over a random base (genus 0..2,
  either orientability, 0..4 cone points of order 2..7, b in [-3, 3]),
  closed hyperbolic, torus bundle with a random SL(2, Z) monodromy, double
  of K with a random GL(2, Z) gluing, a declared geometry tag, a
  lens-space-like spherical tag, or a JSJ graph;
* spherical summands get a pi1_order from {2, 3, 4, 5, 8, 12, 120}, and
  order 1 only when the summand stands alone;
* JSJ graphs come from fixed templates (hyperbolic self-loop, two
  Seifert pieces, Seifert-hyperbolic double edge, K-hyperbolic,
  K-Seifert) with random gluings and fiber slopes, redrawn until
  ``validate_jsj`` accepts them.
"""
from __future__ import annotations

import random
from math import gcd

from vcdim.classify import semantic_diagnostics
from vcdim.geometry import seifert_closed_geometry
from vcdim.jsj import validate_jsj
from vcdim.orbifold import orbifold_euler_characteristic
from vcdim.model import (
    DeclaredGeometric,
    DoubleOfK,
    Geometry,
    HyperbolicClosed,
    HyperbolicPiece,
    IntMatrix2,
    Jsj,
    JsjEdge,
    JsjGraph,
    KPiece,
    ManifoldDescription,
    OrbifoldBase,
    SeifertClosed,
    SeifertInvariants,
    SeifertPiece,
    TorusBundle,
    canonicalize_slope,
    validate_description,
)


def _enumerate(bound: int, dets) -> list[IntMatrix2]:
    out = []
    r = range(-bound, bound + 1)
    for a in r:
        for b in r:
            for c in r:
                for det in dets:
                    # solve a*d - b*c = det for d
                    if a == 0:
                        if -b * c == det:
                            out.extend(IntMatrix2(a, b, c, d) for d in r)
                    elif (det + b * c) % a == 0:
                        d = (det + b * c) // a
                        if -bound <= d <= bound:
                            out.append(IntMatrix2(a, b, c, d))
    return out


_CACHE: dict = {}


def sl2_box(bound: int = 20) -> list[IntMatrix2]:
    """Every determinant +1 integer matrix with entries in [-bound, bound]."""
    key = ("sl", bound)
    if key not in _CACHE:
        _CACHE[key] = _enumerate(bound, (1,))
    return _CACHE[key]


def gl2_box(bound: int = 6) -> list[IntMatrix2]:
    """Every determinant +-1 integer matrix with entries in [-bound, bound]."""
    key = ("gl", bound)
    if key not in _CACHE:
        _CACHE[key] = _enumerate(bound, (1, -1))
    return _CACHE[key]


def random_slope(rng: random.Random, bound: int = 9):
    while True:
        p, q = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if (p, q) != (0, 0):
            return canonicalize_slope(p, q)


def random_cones(rng: random.Random, n: int) -> tuple[tuple[int, int], ...]:
    cones = []
    for _ in range(n):
        alpha = rng.randint(2, 7)
        beta = rng.choice([b for b in range(1, alpha) if gcd(alpha, b) == 1])
        cones.append((alpha, beta))
    return tuple(cones)


def random_base(rng: random.Random, boundary: int = 0) -> OrbifoldBase:
    orientable = rng.random() < 0.75
    genus = rng.randint(0, 2) if orientable else rng.randint(1, 3)
    return OrbifoldBase(genus, orientable, random_cones(rng, rng.choice([0, 0, 1, 2, 3, 3, 4])), boundary)


_SPHERICAL_ORDERS = (2, 2, 2, 3, 4, 5, 8, 12, 120)


def _seifert_summand(rng, alone):
    inv = SeifertInvariants(random_base(rng), rng.randint(-3, 3))
    order = None
    if seifert_closed_geometry(inv) is Geometry.S3:
        order = 1 if alone and rng.random() < 0.2 else rng.choice(_SPHERICAL_ORDERS)
    return SeifertClosed(inv, order)


def _hyperbolic_base(rng, boundary):
    # D2(2,3)-like with enough cone points or genus to be hyperbolic
    while True:
        base = OrbifoldBase(rng.randint(0, 1), True, random_cones(rng, rng.randint(0, 3)), boundary)
        if orbifold_euler_characteristic(base) < 0:
            return base


def _template(rng) -> JsjGraph:
    g = lambda: rng.choice(gl2_box(4))  # noqa: E731
    shape = rng.randrange(5)
    if shape == 0:
        return JsjGraph((HyperbolicPiece("H", 2),), (JsjEdge(("H", 0), ("H", 1), g()),))
    if shape == 1:
        a = SeifertPiece("A", _hyperbolic_base(rng, 1), (random_slope(rng),))
        b = SeifertPiece("B", _hyperbolic_base(rng, 1), (random_slope(rng),))
        return JsjGraph((a, b), (JsjEdge(("A", 0), ("B", 0), g()),))
    if shape == 2:
        a = SeifertPiece("A", _hyperbolic_base(rng, 2), (random_slope(rng), random_slope(rng)))
        h = HyperbolicPiece("H", 2)
        return JsjGraph((a, h), (JsjEdge(("A", 0), ("H", 0), g()), JsjEdge(("H", 1), ("A", 1), g())))
    if shape == 3:
        return JsjGraph((KPiece("K"), HyperbolicPiece("H", 1)), (JsjEdge(("K", 0), ("H", 0), g()),))
    a = SeifertPiece("A", _hyperbolic_base(rng, 1), (random_slope(rng),))
    return JsjGraph((KPiece("K"), a), (JsjEdge(("K", 0), ("A", 0), g()),))


def random_jsj(rng: random.Random) -> JsjGraph:
    while True:
        graph = _template(rng)
        if validate_jsj(graph).valid:
            return graph


def random_summand(rng: random.Random, alone: bool):
    kind = rng.randrange(8)
    if kind == 0:
        return _seifert_summand(rng, alone)
    if kind == 1:
        return HyperbolicClosed()
    if kind == 2:
        return TorusBundle(rng.choice(sl2_box(6)))
    if kind == 3:
        return DoubleOfK(rng.choice(gl2_box(4)))
    if kind == 4:
        return Jsj(random_jsj(rng))
    if kind == 5:
        geometry = rng.choice(list(Geometry))
        if geometry is Geometry.S3:
            return DeclaredGeometric(geometry, 1 if alone and rng.random() < 0.2 else rng.choice(_SPHERICAL_ORDERS))
        return DeclaredGeometric(geometry, rng.choice([None, "infinite"]))
    if kind == 6:
        return DeclaredGeometric(Geometry.S3, rng.choice(_SPHERICAL_ORDERS))
    return DeclaredGeometric(Geometry.S2xE, None)


def random_description(rng: random.Random) -> ManifoldDescription:
    k = rng.choice([1, 1, 2, 2, 2, 3, 4])
    m = ManifoldDescription(tuple(random_summand(rng, k == 1) for _ in range(k)))
    assert not validate_description(m), validate_description(m)
    assert not semantic_diagnostics(m), semantic_diagnostics(m)
    return m

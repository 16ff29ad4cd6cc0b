"""Domain types shared by every module, plus structural validation.

Everything here is immutable. Rationals are :class:`fractions.Fraction`,
which is always reduced with a positive denominator; no floats are used.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

Rational = Fraction

INFINITE = "infinite"


class ZeroSlope(ValueError):
    """Raised when asked for the slope of the zero vector."""


class BadDeterminant(ValueError):
    """Raised when a matrix has the wrong determinant for its role."""


class Geometry(enum.Enum):
    S3 = "S3"
    E3 = "E3"
    H3 = "H3"
    S2xE = "S2xE"
    H2xE = "H2xE"
    PSLtilde = "PSLtilde"
    Nil = "Nil"
    Sol = "Sol"


@dataclass(frozen=True)
class IntMatrix2:
    """Row-major integer 2x2 matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other):
        if isinstance(other, IntMatrix2):
            return IntMatrix2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        x, y = other
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __neg__(self) -> "IntMatrix2":
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "IntMatrix2":
        """Exact inverse; only defined for determinant +1 or -1."""
        det = self.det
        if det not in (1, -1):
            raise BadDeterminant(f"matrix {self.rows()} is not invertible over Z (det {det})")
        return IntMatrix2(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def is_scalar_unit(self) -> bool:
        """True for the identity and its negative."""
        return self.b == 0 and self.c == 0 and self.a == self.d and self.a in (1, -1)


IDENTITY = IntMatrix2(1, 0, 0, 1)


@dataclass(frozen=True)
class Slope:
    """An unoriented primitive lattice direction, stored canonically.

    Construct through :func:`canonicalize_slope` unless the pair is
    already canonical; non-canonical pairs are refused here.
    """

    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ZeroSlope("slope (0, 0) is undefined")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope ({self.p}, {self.q}) is not primitive")
        if not (self.p > 0 or (self.p == 0 and self.q == 1)):
            raise ValueError(f"slope ({self.p}, {self.q}) is not in canonical sign form")

    def vector(self) -> tuple[int, int]:
        return (self.p, self.q)


def canonicalize_slope(p: int, q: int) -> Slope:
    if p == 0 and q == 0:
        raise ZeroSlope("slope (0, 0) is undefined")
    g = gcd(p, q)
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return Slope(p, q)


@dataclass(frozen=True)
class OrbifoldBase:
    """A compact 2-orbifold with cone points and boundary circles.

    For a non-orientable base ``genus`` counts cross-caps.
    """

    genus: int
    orientable: bool = True
    cone_points: tuple[tuple[int, int], ...] = ()
    boundary_count: int = 0

    @property
    def cone_orders(self) -> tuple[int, ...]:
        return tuple(alpha for alpha, _ in self.cone_points)


@dataclass(frozen=True)
class SeifertInvariants:
    base: OrbifoldBase
    b: Optional[int] = None


# JSJ pieces

@dataclass(frozen=True)
class SeifertPiece:
    id: str
    base: OrbifoldBase
    fibers: tuple[Slope, ...]

    @property
    def socket_count(self) -> int:
        return self.base.boundary_count


@dataclass(frozen=True)
class HyperbolicPiece:
    id: str
    cusps: int

    @property
    def socket_count(self) -> int:
        return self.cusps


@dataclass(frozen=True)
class KPiece:
    """Twisted I-bundle over the Klein bottle.

    Its single socket uses the basis in which the boundary holonomy is
    ``diag(1, -1)``, so the two fibrable slopes are (1, 0) and (0, 1).
    """

    id: str

    @property
    def socket_count(self) -> int:
        return 1


JsjVertex = Union[SeifertPiece, HyperbolicPiece, KPiece]
Socket = tuple[str, int]


@dataclass(frozen=True)
class JsjEdge:
    """A torus glued from socket ``a`` to socket ``b``.

    ``gluing`` sends coordinates in the basis of torus ``a`` to
    coordinates in the basis of torus ``b``.
    """

    a: Socket
    b: Socket
    gluing: IntMatrix2

    def reversed(self) -> "JsjEdge":
        return JsjEdge(self.b, self.a, self.gluing.inverse())


@dataclass(frozen=True)
class JsjGraph:
    vertices: tuple[JsjVertex, ...]
    edges: tuple[JsjEdge, ...]

    def vertex(self, vid: str) -> JsjVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)


# Prime summands

@dataclass(frozen=True)
class SeifertClosed:
    inv: SeifertInvariants
    # Only consulted when the fibration turns out to carry S3 geometry.
    pi1_order: Optional[int] = None


@dataclass(frozen=True)
class HyperbolicClosed:
    pass


@dataclass(frozen=True)
class TorusBundle:
    monodromy: IntMatrix2


@dataclass(frozen=True)
class DoubleOfK:
    gluing: IntMatrix2


@dataclass(frozen=True)
class Jsj:
    graph: JsjGraph


@dataclass(frozen=True)
class DeclaredGeometric:
    geometry: Geometry
    # A positive int, INFINITE, or None when not supplied.
    pi1_order: Union[int, str, None] = None


PrimeSummand = Union[SeifertClosed, HyperbolicClosed, TorusBundle, DoubleOfK, Jsj, DeclaredGeometric]


@dataclass(frozen=True)
class ManifoldDescription:
    summands: tuple[PrimeSummand, ...]


@dataclass(frozen=True)
class Justification:
    ref: str
    clause: str


@dataclass(frozen=True)
class DimResult:
    value: int
    trace: tuple[Justification, ...]


@dataclass(frozen=True)
class Diagnostic:
    """One violated invariant or rule, located at ``where``."""

    code: str
    where: str
    message: str
    redirect: Optional[str] = None

    def __str__(self) -> str:
        text = f"{self.where}: {self.message} [{self.code}]"
        if self.redirect:
            text += f" ({self.redirect})"
        return text


# Structural validation

def _check_base(base: OrbifoldBase, where: str) -> list[Diagnostic]:
    out = []
    if base.genus < 0:
        out.append(Diagnostic("base.genus", where, "genus must be non-negative"))
    if not base.orientable and base.genus < 1:
        out.append(Diagnostic("base.genus", where, "non-orientable base needs at least one cross-cap"))
    if base.boundary_count < 0:
        out.append(Diagnostic("base.boundary", where, "boundary count must be non-negative"))
    for i, (alpha, beta) in enumerate(base.cone_points):
        here = f"{where}.cones[{i}]"
        if alpha < 2:
            out.append(Diagnostic("base.cone", here, f"cone order {alpha} must be at least 2"))
        elif not 0 < beta < alpha:
            out.append(Diagnostic("base.cone", here, f"cone invariant {beta} must satisfy 0 < beta < {alpha}"))
        elif gcd(alpha, beta) != 1:
            out.append(Diagnostic("base.cone", here, f"cone invariants ({alpha}, {beta}) must be coprime"))
    return out


def _check_graph(graph: JsjGraph, where: str) -> list[Diagnostic]:
    out = []
    if not graph.vertices:
        out.append(Diagnostic("jsj.vertices", where, "JSJ graph needs at least one vertex"))
        return out
    ids = [v.id for v in graph.vertices]
    seen = set()
    for vid in ids:
        if vid in seen:
            out.append(Diagnostic("jsj.vertex_id", f"{where}.vertices", f"duplicate vertex id {vid!r}"))
        seen.add(vid)

    sockets: dict[Socket, int] = {}
    oversized: dict[str, int] = {}
    for i, v in enumerate(graph.vertices):
        here = f"{where}.vertices[{i}]"
        if isinstance(v, SeifertPiece):
            out += _check_base(v.base, f"{here}.base")
            if v.base.boundary_count < 1:
                out.append(Diagnostic("jsj.seifert_boundary", here, "Seifert piece needs at least one boundary torus"))
            if len(v.fibers) != v.base.boundary_count:
                out.append(Diagnostic(
                    "jsj.fibers", here,
                    f"{len(v.fibers)} fiber slopes given for {v.base.boundary_count} boundary tori",
                ))
        elif isinstance(v, HyperbolicPiece):
            if v.cusps < 1:
                out.append(Diagnostic("jsj.cusps", here, "hyperbolic piece needs at least one cusp"))
        if v.socket_count > 2 * len(graph.edges):
            # cannot all be matched; avoid enumerating absurd socket counts
            out.append(Diagnostic(
                "jsj.closed", here,
                f"manifold not closed: {v.socket_count} sockets but only {2 * len(graph.edges)} edge ends",
            ))
            oversized[v.id] = v.socket_count
            continue
        for s in range(max(v.socket_count, 0)):
            sockets[(v.id, s)] = 0

    if not graph.edges:
        out.append(Diagnostic("jsj.edges", where, "JSJ graph needs at least one torus"))

    adjacency: dict[str, set[str]] = {vid: set() for vid in ids}
    for j, e in enumerate(graph.edges):
        here = f"{where}.edges[{j}]"
        if e.gluing.det not in (1, -1):
            out.append(Diagnostic("jsj.gluing", here, f"gluing must have determinant +1 or -1, got {e.gluing.det}"))
        for end in (e.a, e.b):
            if end in sockets:
                sockets[end] += 1
            elif not (end[0] in oversized and 0 <= end[1] < oversized[end[0]]):
                out.append(Diagnostic("jsj.socket", here, f"socket {end[0]!r}:{end[1]} does not exist"))
        if e.a[0] in adjacency and e.b[0] in adjacency:
            adjacency[e.a[0]].add(e.b[0])
            adjacency[e.b[0]].add(e.a[0])

    for (vid, s), count in sorted(sockets.items()):
        if count == 0:
            out.append(Diagnostic("jsj.closed", f"{where}", f"manifold not closed: socket {vid!r}:{s} is unmatched"))
        elif count > 1:
            out.append(Diagnostic("jsj.closed", f"{where}", f"socket {vid!r}:{s} is glued {count} times"))

    start = ids[0]
    reached = {start}
    stack = [start]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in reached:
                reached.add(nxt)
                stack.append(nxt)
    if len(reached) != len(set(ids)):
        out.append(Diagnostic("jsj.connected", where, "JSJ graph is not connected"))
    return out


def _declared_order(s: PrimeSummand):
    if isinstance(s, (SeifertClosed, DeclaredGeometric)):
        return s.pi1_order
    return None


def validate_description(m: ManifoldDescription) -> list[Diagnostic]:
    """Check every structural invariant; an empty list means valid."""
    out: list[Diagnostic] = []
    if not m.summands:
        return [Diagnostic("summands", "summands", "at least one summand required")]
    k = len(m.summands)
    for i, s in enumerate(m.summands):
        where = f"summands[{i}]"
        order = _declared_order(s)
        if order is not None and order != INFINITE and (not isinstance(order, int) or order < 1):
            out.append(Diagnostic("pi1_order", where, "pi1_order must be a positive integer or 'infinite'"))
        if order == 1 and k > 1:
            out.append(Diagnostic("summand.s3", where, "S3 is only legal as the sole summand"))

        if isinstance(s, SeifertClosed):
            out += _check_base(s.inv.base, f"{where}.base")
            if s.inv.base.boundary_count != 0:
                out.append(Diagnostic("seifert.closed", where, "closed Seifert summand must have no boundary"))
            if s.inv.b is None:
                out.append(Diagnostic("seifert.b", where, "closed Seifert summand needs the obstruction b"))
        elif isinstance(s, TorusBundle):
            if s.monodromy.det != 1:
                out.append(Diagnostic("torus_bundle.det", where, f"monodromy must have determinant +1, got {s.monodromy.det}"))
        elif isinstance(s, DoubleOfK):
            if s.gluing.det not in (1, -1):
                out.append(Diagnostic("double_of_k.det", where, f"gluing must have determinant +1 or -1, got {s.gluing.det}"))
        elif isinstance(s, Jsj):
            out += _check_graph(s.graph, f"{where}.graph")
        elif isinstance(s, DeclaredGeometric):
            if s.geometry is Geometry.S3:
                if order is None or order == INFINITE:
                    out.append(Diagnostic("pi1_order", where, "spherical summand must carry a finite pi1_order"))
            elif isinstance(order, int):
                out.append(Diagnostic("pi1_order", where, f"{s.geometry.value} summand has infinite fundamental group"))
    return out

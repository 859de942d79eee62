"""Complete fans in the plane and the invariants of the toric surfaces they
define."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import NamedTuple, Sequence

from .cones import ConeParams, cone_params, resolution_rays
from .lattice import LatticeError, LatticeVector, cone_pq, det, vec


class FanError(LatticeError):
    """The generator list does not define a complete fan."""


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction


def _half(v: LatticeVector) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if v.y > 0 or (v.y == 0 and v.x > 0) else 1


def _angle_before(u: LatticeVector, v: LatticeVector) -> bool:
    """True if the angle of u in [0, 2pi) is strictly smaller than that of v."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu < hv
    return det(u, v) > 0


def winding_number(gens: Sequence[LatticeVector]) -> int:
    """How many times the closed chain of generators wraps around the origin,
    assuming every consecutive determinant is positive."""
    nu = len(gens)
    return sum(1 for i in range(nu) if not _angle_before(gens[i], gens[(i + 1) % nu]))


@dataclass(frozen=True)
class CompleteFan:
    """Anticlockwise cycle of primitive generators ``n_1, ..., n_nu``.

    Cone ``i`` (0-based) is spanned by ``generators[i]`` and
    ``generators[i+1]``, indices taken mod nu. Build instances with
    :func:`build_fan`, which checks the invariants.
    """

    generators: tuple[LatticeVector, ...]
    cones: tuple[ConeParams, ...]

    @property
    def nu(self) -> int:
        return len(self.generators)

    @property
    def pq_pairs(self) -> list[tuple[int, int]]:
        return [tuple(c.pq) for c in self.cones]

    def cone_generators(self, i: int) -> tuple[LatticeVector, LatticeVector]:
        return self.generators[i % self.nu], self.generators[(i + 1) % self.nu]

    @cached_property
    def resolutions(self) -> tuple[tuple[LatticeVector, ...], ...]:
        return tuple(tuple(resolution_rays(*self.cone_generators(i))) for i in range(self.nu))

    def to_text(self) -> str:
        return ";".join(f"{v.x},{v.y}" for v in self.generators)

    def to_json(self) -> str:
        return json.dumps({"generators": [list(v) for v in self.generators]})


def build_fan(vectors) -> CompleteFan:
    gens = tuple(vec(v) for v in vectors)
    nu = len(gens)
    if nu < 3:
        raise FanError(f"a complete fan needs at least 3 rays, got {nu}")
    for v in gens:
        if not v.is_primitive():
            raise FanError(f"generator {v} is not primitive")
    for i in range(nu):
        a, b = gens[i], gens[(i + 1) % nu]
        if det(a, b) <= 0:
            raise FanError(f"cone ({a}, {b}) is not strictly anticlockwise")
    w = winding_number(gens)
    if w != 1:
        raise FanError(f"generators wind {w} times around the origin")
    cones = tuple(cone_params(cone_pq(gens[i], gens[(i + 1) % nu])) for i in range(nu))
    return CompleteFan(gens, cones)


def parse_generators(text: str) -> list[LatticeVector]:
    """Parse ``"x1,y1;x2,y2;..."``. Whitespace is ignored."""
    text = "".join(text.split())
    if not text:
        raise ValueError("empty generator list")
    out = []
    for chunk in text.strip(";").split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"cannot parse vector {chunk!r}")
        out.append(LatticeVector(int(parts[0]), int(parts[1])))
    return out


def fan_from_json(data) -> CompleteFan:
    if isinstance(data, str):
        data = json.loads(data)
    return build_fan([tuple(v) for v in data["generators"]])


def picard_number(fan: CompleteFan) -> int:
    return fan.nu - 2


def r_invariants(fan: CompleteFan) -> list[int]:
    """The integers ``r_i`` with ``r_i n_i = a + b``, where ``a`` and ``b``
    are the rays next to ``n_i`` in the minimal resolution."""
    res = fan.resolutions
    nu = fan.nu
    out = []
    for i, n in enumerate(fan.generators):
        a = res[(i - 1) % nu][-2]
        b = res[i][1]
        total = a + b
        k = _multiple_of(total, n)
        if k is None:
            raise AssertionError(f"{a} + {b} is not a multiple of {n}")
        out.append(k)
    return out


def _multiple_of(v: LatticeVector, n: LatticeVector) -> int | None:
    if det(v, n) != 0:
        return None
    # n is primitive, so v = k n with k integral
    return v.x // n.x if n.x else v.y // n.y


def surface_index(fan: CompleteFan) -> int:
    return lcm(*(c.local_index for c in fan.cones))


def is_ldp(fan: CompleteFan) -> bool:
    """Origin strictly inside the generator polygon and every generator a
    vertex. Given a valid fan this is strict convexity at each generator."""
    g = fan.generators
    nu = fan.nu
    return all(det(g[i] - g[i - 1], g[(i + 1) % nu] - g[i]) > 0 for i in range(nu))


def polar_vertices(fan: CompleteFan) -> list[RationalPoint]:
    """Vertex of the polar polygon dual to each edge ``[n_i, n_{i+1}]``."""
    if not is_ldp(fan):
        raise FanError("polar polygon requires an LDP fan")
    out = []
    for i in range(fan.nu):
        (a, b), (c, d) = fan.cone_generators(i)
        # solve a*x + b*y = -1, c*x + d*y = -1
        D = a * d - b * c
        out.append(RationalPoint(Fraction(b - d, D), Fraction(c - a, D)))
    return out


def polar_index(fan: CompleteFan) -> int:
    return lcm(*(t.denominator for v in polar_vertices(fan) for t in v))


def lattice_point_counts(fan: CompleteFan) -> tuple[int, int]:
    """Boundary and interior lattice points of the generator polygon."""
    if not is_ldp(fan):
        raise FanError("lattice point counts require an LDP fan")
    boundary = sum(gcd(c.q, c.p - 1) for c in fan.cones)
    twice_area = sum(c.q for c in fan.cones)
    interior = (twice_area - boundary) // 2 + 1
    return boundary, interior


def lattice_point_counts_direct(fan: CompleteFan) -> tuple[int, int]:
    """Same as :func:`lattice_point_counts`, by scanning the bounding box."""
    g = fan.generators
    nu = fan.nu
    xs = [v.x for v in g]
    ys = [v.y for v in g]
    boundary = interior = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            pt = LatticeVector(x, y)
            sides = [det(g[(i + 1) % nu] - g[i], pt - g[i]) for i in range(nu)]
            if min(sides) < 0:
                continue
            if 0 in sides:
                boundary += 1
            else:
                interior += 1
    return boundary, interior


def _cone_list(fan_or_pairs) -> list[ConeParams]:
    if isinstance(fan_or_pairs, CompleteFan):
        return list(fan_or_pairs.cones)
    return [cone_params(pq) for pq in fan_or_pairs]


def K_squared(fan_or_pairs) -> Fraction:
    cones = _cone_list(fan_or_pairs)
    total_s = sum(c.s for c in cones)
    kE2 = sum((c.kE2 for c in cones if not c.is_basic and not c.is_gorenstein), Fraction(0))
    return 10 - (total_s + len(cones) - 2) - kE2


def picard_inequality_holds(fan_or_pairs, index: int | None = None) -> bool:
    """Check ``sum s_i <= 12 - sum K(E_i)^2 - (1 + 1/index) nu``, the K(E)^2
    sum running over non-Gorenstein singular cones.

    Accepts a fan or a plain sequence of ``(p, q)`` pairs. The index
    defaults to the lcm of the local indices.
    """
    cones = _cone_list(fan_or_pairs)
    if index is None:
        index = lcm(*(c.local_index for c in cones))
    lhs = sum(c.picard_cost for c in cones)
    return lhs <= 12 - (1 + Fraction(1, index)) * len(cones)


def scott_inequality_holds(fan_or_pairs) -> bool:
    cones = _cone_list(fan_or_pairs)
    return sum(scott_term(c) for c in cones) <= 8


def scott_term(c: ConeParams) -> Fraction:
    return (Fraction(2, c.local_index) - 1) * c.q


@dataclass(frozen=True)
class SurfaceInvariants:
    rho: int
    r: tuple[int, ...]
    index: int
    K2: Fraction
    boundary_pts: int
    interior_pts: int


def surface_invariants(fan: CompleteFan) -> SurfaceInvariants:
    b, i = lattice_point_counts(fan)
    return SurfaceInvariants(
        picard_number(fan), tuple(r_invariants(fan)), surface_index(fan), K_squared(fan), b, i
    )

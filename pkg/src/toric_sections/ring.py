"""The cone over ``P_D`` and generators of the section ring.

Lattice points of the cone at height ``n`` are the points of ``P_nD``
shifted to ``x_{k+1} = n``; a Hilbert basis of the cone's semigroup gives
algebra generators of the graded ring, one per basis element, with the
height as degree.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .cones import RationalCone, dual_cone, in_cone, is_strongly_convex
from .errors import HeightLimitExceeded, NotStronglyConvex
from .lattice import clear_denominators, rank
from .polytope import build_polytope, vertices

__all__ = [
    "DEFAULT_MAX_HEIGHT", "SectionCone", "RingGenerators", "build_section_cone",
    "height_bound", "cone_points_at_height", "hilbert_basis_sections", "ring_generators",
]

DEFAULT_MAX_HEIGHT = 64


@dataclass(frozen=True)
class SectionCone:
    rank: int
    rays: tuple
    polytope: object = None

    def as_cone(self):
        return RationalCone(self.rank, self.rays)


@dataclass(frozen=True)
class RingGenerators:
    """Positive-degree generators ``(point, degree)``; the unit in degree 0 is implicit."""

    elements: tuple

    @property
    def is_trivial(self):
        """True when ``R = K``, i.e. no section in any positive degree."""
        return not self.elements

    @property
    def degrees(self):
        return tuple(deg for _, deg in self.elements)


def build_section_cone(p, rank=None):
    """Rays through ``(w, 1)`` for each vertex ``w`` of ``p``."""
    if rank is None:
        if not p.vertices:
            raise ValueError("rank is required for an empty polytope")
        rank = len(p.vertices[0])
    rays = tuple(clear_denominators(tuple(w) + (Fraction(1),)) for w in p.vertices)
    return SectionCone(rank + 1, rays, p)


def height_bound(c):
    """Largest height a Hilbert basis element of ``c`` can have.

    An irreducible point is a ray or lies in the half-open parallelepiped of
    ``dim c`` linearly independent rays, so its height is below the sum of
    the ``dim c`` largest ray heights.
    """
    heights = sorted((r[-1] for r in c.rays), reverse=True)
    if not heights:
        return 0
    d = rank(list(c.rays))
    return max(heights[0], sum(heights[:d]) - 1)


def cone_points_at_height(c, n, inequalities=None):
    """Lattice points of the cone with last coordinate ``n``, in lexicographic order."""
    if not c.rays:
        return []
    if inequalities is None:
        inequalities = dual_cone(c.as_cone()).generators
    k = c.rank - 1
    box = []
    for j in range(k):
        coords = [Fraction(r[j], r[-1]) for r in c.rays]
        box.append(range(ceil(n * min(coords)), floor(n * max(coords)) + 1))
    return [u + (n,) for u in product(*box) if in_cone(inequalities, u + (n,))]


def hilbert_basis_sections(c, max_height=DEFAULT_MAX_HEIGHT):
    """Hilbert basis of the cone's lattice points, sorted by (height, lex).

    Heights are scanned upward; a point is reducible exactly when removing
    some already-found generator leaves a point of the cone.
    """
    if not c.rays:
        return []
    cone = c.as_cone()
    if not is_strongly_convex(cone):
        raise NotStronglyConvex("section cone contains a line")
    if any(r[-1] <= 0 for r in c.rays):
        raise ValueError("section cone rays must have positive height")
    bound = height_bound(c)
    if bound > max_height:
        raise HeightLimitExceeded(bound, max_height)
    ineqs = dual_cone(cone).generators
    layers = {0: {(0,) * c.rank}}
    basis = []
    for n in range(1, bound + 1):
        pts = cone_points_at_height(c, n, ineqs)
        layers[n] = set(pts)
        for x in pts:
            if not any(tuple(a - b for a, b in zip(x, g)) in layers[n - g[-1]]
                       for g in basis):
                basis.append(x)
    return basis


def ring_generators(fan, d, max_height=DEFAULT_MAX_HEIGHT):
    p = vertices(build_polytope(fan, d, 1))
    c = build_section_cone(p, fan.rank)
    return RingGenerators(tuple((g[:-1], g[-1]) for g in hilbert_basis_sections(c, max_height)))

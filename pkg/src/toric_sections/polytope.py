"""Section polytopes ``P_nD``: H-representation, vertices, lattice points."""

from dataclasses import dataclass
from itertools import combinations, product
from math import ceil, floor

from .cones import extreme_rays
from .errors import DimensionMismatch, Unbounded
from .lattice import dot, rank, solve_rational

__all__ = [
    "HPolytope", "VPolytope", "build_polytope", "vertices", "lattice_points",
    "dim_h0", "affine_dimension",
]


@dataclass(frozen=True)
class HPolytope:
    """``{u in M_Q : <u, normal> >= rhs}`` for each ``(normal, rhs)`` constraint."""

    rank: int
    constraints: tuple

    def __post_init__(self):
        cons = tuple((tuple(int(x) for x in nv), int(b)) for nv, b in self.constraints)
        object.__setattr__(self, "constraints", cons)
        for nv, _ in cons:
            if len(nv) != self.rank:
                raise DimensionMismatch("normal %r is not in rank %d" % (nv, self.rank))

    def scaled(self, n):
        """The dilation ``n * P``."""
        return HPolytope(self.rank, tuple((nv, n * b) for nv, b in self.constraints))

    def __contains__(self, u):
        return all(dot(nv, u) >= b for nv, b in self.constraints)


@dataclass(frozen=True)
class VPolytope:
    vertices: tuple
    dim: int

    @property
    def is_empty(self):
        return self.dim < 0


def affine_dimension(points):
    if not points:
        return -1
    base = points[0]
    return rank([tuple(a - b for a, b in zip(p, base)) for p in points[1:]])


def build_polytope(fan, d, n):
    """Constraints ``<u, v_i> >= -n a_i`` over all rays of ``fan``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return HPolytope(fan.rank, tuple((v, -n * a) for v, a in zip(fan.rays, d.coefficients)))


def _recession_direction(h):
    rays, lin = extreme_rays([nv for nv, _ in h.constraints], h.rank)
    if lin:
        return lin[0]
    if rays:
        return rays[0]
    return None


def vertices(h):
    """Exact vertex set, by intersecting every ``rank``-subset of constraints.

    An empty feasible region yields ``VPolytope((), -1)``.  A nonzero
    recession cone raises :class:`Unbounded`, even if the region is empty.
    """
    direction = _recession_direction(h)
    if direction is not None:
        raise Unbounded(direction)
    found = set()
    for sub in combinations(h.constraints, h.rank):
        A = [nv for nv, _ in sub]
        if rank(A) < h.rank:
            continue
        u = solve_rational(A, [b for _, b in sub])
        if u in h:
            found.add(u)
    verts = tuple(sorted(found))
    return VPolytope(verts, affine_dimension(list(verts)))


def _box(verts, k):
    lo = [ceil(min(v[j] for v in verts)) for j in range(k)]
    hi = [floor(max(v[j] for v in verts)) for j in range(k)]
    return [range(a, b + 1) for a, b in zip(lo, hi)]


def lattice_points(h, verts=None):
    """Integer points of a bounded H-polytope, in lexicographic order.

    ``verts`` may be passed when the vertex set is already known.
    """
    if verts is None:
        verts = vertices(h).vertices
    if not verts:
        return []
    return [u for u in product(*_box(verts, h.rank)) if u in h]


def dim_h0(fan, d, n):
    """``dim H^0(X, O(nD))``: the number of lattice points of ``P_nD``."""
    return len(lattice_points(build_polytope(fan, d, n)))

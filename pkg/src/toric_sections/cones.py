"""Rational polyhedral cones, fans, duality and Gordan generators.

Cones are given by generators.  Their inequality descriptions are obtained
from the double description method in :func:`extreme_rays`; Hilbert bases
come from :func:`hilbert_basis`, which enumerates the lattice points of the
half-open parallelepipeds spanned by linearly independent extreme rays (a
finite superset of the Hilbert basis) and keeps the irreducible ones.
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from math import floor

from .errors import InvalidFan, NotStronglyConvex, ZeroVector
from .lattice import _kernel_split, dot, hnf, integer_kernel, inverse, primitive, rank, solve_rational

__all__ = [
    "RationalCone", "Fan", "SemigroupBasis", "ValidationReport",
    "extreme_rays", "hilbert_basis", "in_cone", "is_strongly_convex",
    "dual_cone", "gordan_generators", "validate_fan", "is_complete",
]


def _neg(v):
    return tuple(-x for x in v)


def _tight(rows, v):
    return frozenset(j for j, a in enumerate(rows) if dot(a, v) == 0)


def extreme_rays(inequalities, dim):
    """Double description of ``{x in Q^dim : <a, x> >= 0 for every a}``.

    Returns ``(rays, lineality)``: primitive extreme rays of the cone modulo
    its lineality space, and a basis of that lineality space.  The cone is
    ``cone(rays) + span(lineality)``.
    """
    lineality = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays = []
    done = []
    for a in inequalities:
        a = tuple(a)
        if len(a) != dim:
            raise ValueError("inequality %r does not live in rank %d" % (a, dim))
        if not any(a):
            continue
        piv = next((i for i, l in enumerate(lineality) if dot(a, l)), None)
        if piv is not None:
            # The hyperplane cuts the lineality space: one direction becomes a ray.
            l0 = lineality.pop(piv)
            s = dot(a, l0)
            if s < 0:
                l0, s = _neg(l0), -s
            lineality = [primitive(tuple(s * x - dot(a, l) * y for x, y in zip(l, l0)))
                         for l in lineality]
            rays = [primitive(tuple(s * x - dot(a, r) * y for x, y in zip(r, l0)))
                    for r in rays]
            rays.append(l0)
        else:
            vals = [dot(a, r) for r in rays]
            pos = [r for r, v in zip(rays, vals) if v > 0]
            neg = [r for r, v in zip(rays, vals) if v < 0]
            keep = [r for r, v in zip(rays, vals) if v >= 0]
            zsets = {r: _tight(done, r) for r in rays}
            for p in pos:
                for q in neg:
                    common = zsets[p] & zsets[q]
                    if any(common <= zsets[r] for r in rays if r != p and r != q):
                        continue
                    ap, aq = dot(a, p), dot(a, q)
                    keep.append(primitive(tuple(ap * y - aq * x for x, y in zip(p, q))))
            rays = keep
        done.append(a)
    return sorted(set(rays)), lineality


def in_cone(inequalities, x):
    return all(dot(a, x) >= 0 for a in inequalities)


@dataclass(frozen=True, eq=False)
class RationalCone:
    """Cone generated by primitive lattice vectors; no generators is the zero cone."""

    ambient_rank: int
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.ambient_rank < 1:
            raise ValueError("ambient rank must be positive")
        for g in gens:
            if len(g) != self.ambient_rank:
                raise ValueError("generator %r is not in rank %d" % (g, self.ambient_rank))
            if primitive(g) != g:
                raise ValueError("generator %r is not primitive" % (g,))
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generators")

    @classmethod
    def from_vectors(cls, vectors, ambient_rank=None):
        """Build a cone from arbitrary nonzero integer vectors (made primitive, deduplicated)."""
        vectors = [tuple(v) for v in vectors]
        if ambient_rank is None:
            ambient_rank = len(vectors[0])
        gens = []
        for v in vectors:
            p = primitive(v)
            if p not in gens:
                gens.append(p)
        return cls(ambient_rank, tuple(gens))

    @property
    def dim(self):
        return rank(list(self.generators))

    def inequalities(self):
        """Normals ``h`` with ``cone = {x : <h, x> >= 0}`` (equations appear as ``±h``)."""
        return dual_cone(self).generators

    def __contains__(self, x):
        return in_cone(self.inequalities(), x)

    def canonical_rays(self):
        """Sorted extreme rays; a canonical form for strongly convex cones."""
        rays, lin = extreme_rays(self.inequalities(), self.ambient_rank)
        # The double dual lists the cone's own lineality as +-pairs.
        return tuple(sorted(set(rays) | set(lin) | {_neg(l) for l in lin}))

    def __eq__(self, other):
        if not isinstance(other, RationalCone):
            return NotImplemented
        if self.ambient_rank != other.ambient_rank:
            return False
        return (all(g in other for g in self.generators)
                and all(g in self for g in other.generators))

    __hash__ = None


@dataclass(frozen=True)
class SemigroupBasis:
    ambient_rank: int
    elements: tuple


def is_strongly_convex(c):
    rays, lin = extreme_rays(c.generators, c.ambient_rank)
    return rank(rays + lin) == c.ambient_rank


def dual_cone(c):
    rays, lin = extreme_rays(c.generators, c.ambient_rank)
    gens = set(rays) | set(lin) | {_neg(l) for l in lin}
    return RationalCone(c.ambient_rank, tuple(sorted(gens)))


def _parallelepiped_points(B):
    """Nonzero lattice points ``sum lambda_i B_i`` with every ``lambda_i`` in [0, 1)."""
    d = len(B)
    H, _ = hnf(B)
    Binv = inverse(B)
    out = []
    for c in product(*(range(H[i][i]) for i in range(d))):
        if not any(c):
            continue
        lam = [sum(c[j] * Binv[j][i] for j in range(d)) for i in range(d)]
        lam = [x - floor(x) for x in lam]
        out.append(tuple(int(sum(lam[i] * B[i][j] for i in range(d))) for j in range(d)))
    return out


def _pointed_hilbert_basis(rays, ineqs):
    # rays span Z^d over Q; ineqs cut out the (pointed, full-dimensional) cone.
    d = len(rays[0])
    candidates = set(rays)
    for sub in combinations(rays, d):
        if rank(list(sub)) == d:
            candidates.update(_parallelepiped_points(list(sub)))
    weight = [sum(col) for col in zip(*ineqs)]
    basis = []
    for x in sorted(candidates, key=lambda v: (dot(weight, v), v)):
        if not any(in_cone(ineqs, tuple(a - b for a, b in zip(x, g))) for g in basis):
            basis.append(x)
    return basis


def hilbert_basis(inequalities, dim):
    """Minimal generating set of the semigroup ``{x in Z^dim : <a, x> >= 0}``.

    A lineality space contributes ``±`` a lattice basis of itself; the
    pointed part has the usual unique Hilbert basis.
    """
    A = [tuple(a) for a in inequalities if any(a)]
    comp, ker = _kernel_split(A, dim)
    out = set(ker) | {_neg(k) for k in ker}
    r = len(comp)
    if r:
        # x = c . comp ; the cone in c-coordinates is pointed.
        red = [tuple(dot(a, row) for row in comp) for a in A]
        rays, lin = extreme_rays(red, r)
        assert not lin
        if rays:
            # Restrict to the saturated lattice span(rays) ∩ Z^r.
            E = integer_kernel(integer_kernel(rays, r), r)
            coords = [tuple(int(t) for t in solve_rational(list(zip(*E)), ray)) for ray in rays]
            red_e = [tuple(dot(a, e) for e in E) for a in red]
            for e in _pointed_hilbert_basis(coords, red_e):
                c = [sum(e[i] * E[i][j] for i in range(len(E))) for j in range(r)]
                out.add(tuple(sum(c[i] * comp[i][j] for i in range(r)) for j in range(dim)))
    return sorted(out)


def gordan_generators(c):
    """Hilbert basis of the semigroup of lattice points in the dual cone."""
    if not is_strongly_convex(c):
        raise NotStronglyConvex("cone %r contains a line" % (list(c.generators),))
    return SemigroupBasis(c.ambient_rank, tuple(hilbert_basis(c.generators, c.ambient_rank)))


@dataclass(frozen=True)
class Fan:
    """Rays ``v_1..v_s`` in ``N = Z^rank`` and maximal cones as ray-index tuples."""

    rank: int
    rays: tuple
    max_cones: tuple

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(r) for r in self.rays))
        object.__setattr__(self, "max_cones", tuple(tuple(c) for c in self.max_cones))

    def cone(self, i):
        return RationalCone.from_vectors([self.rays[j] for j in self.max_cones[i]], self.rank)


@dataclass
class ValidationReport:
    non_primitive_rays: list = field(default_factory=list)
    duplicate_rays: list = field(default_factory=list)
    bad_indices: list = field(default_factory=list)
    not_strongly_convex: list = field(default_factory=list)
    improper_intersections: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems()

    def problems(self):
        out = []
        out += ["bad index in cone %d" % i for i in self.bad_indices]
        out += ["non-primitive ray %d" % i for i in self.non_primitive_rays]
        out += ["duplicate rays %d and %d" % p for p in self.duplicate_rays]
        out += ["cone %d is not strongly convex" % i for i in self.not_strongly_convex]
        out += ["cones %d and %d do not meet in a common face" % p
                for p in self.improper_intersections]
        return out


def _meets_in_face(sig_ineqs, sig_rays, tau_ineqs, inter_rays):
    # inter_rays span sigma ∩ tau; it is a face of sigma iff every ray of
    # sigma on the smallest face containing it lies in tau.
    s = tuple(map(sum, zip(*inter_rays))) if inter_rays else (0,) * len(sig_rays[0])
    tight = _tight(sig_ineqs, s)
    return all(in_cone(tau_ineqs, r) for r in sig_rays if tight <= _tight(sig_ineqs, r))


def validate_fan(f):
    rep = ValidationReport()
    s = len(f.rays)
    for i, v in enumerate(f.rays):
        if len(v) != f.rank or not any(v) or primitive(v) != v:
            rep.non_primitive_rays.append(i)
    prims = {}
    for i, v in enumerate(f.rays):
        try:
            p = primitive(v)
        except ZeroVector:
            continue
        if p in prims:
            rep.duplicate_rays.append((prims[p], i))
        else:
            prims[p] = i
    for ci, cone in enumerate(f.max_cones):
        if not cone or any(not 0 <= j < s for j in cone) or len(set(cone)) != len(cone):
            rep.bad_indices.append(ci)
    if rep.bad_indices or rep.non_primitive_rays:
        return rep
    cones = [f.cone(i) for i in range(len(f.max_cones))]
    for ci, c in enumerate(cones):
        if not is_strongly_convex(c):
            rep.not_strongly_convex.append(ci)
    if rep.not_strongly_convex:
        return rep
    ineqs = [c.inequalities() for c in cones]
    for i, j in combinations(range(len(cones)), 2):
        inter, lin = extreme_rays(ineqs[i] + ineqs[j], f.rank)
        assert not lin
        if not (_meets_in_face(ineqs[i], cones[i].generators, ineqs[j], inter)
                and _meets_in_face(ineqs[j], cones[j].generators, ineqs[i], inter)):
            rep.improper_intersections.append((i, j))
    return rep


def is_complete(f):
    """Support equals ``N_Q``: pure of full dimension, every wall in exactly two cones."""
    rep = validate_fan(f)
    if not rep.ok:
        raise InvalidFan(rep)
    walls = {}
    for ci, idx in enumerate(f.max_cones):
        c = f.cone(ci)
        if c.dim != f.rank:
            return False
        rays, _ = extreme_rays(c.generators, f.rank)
        for h in rays:
            wall = tuple(sorted(j for j in idx if dot(h, f.rays[j]) == 0))
            walls[wall] = walls.get(wall, 0) + 1
    return bool(walls) and all(n == 2 for n in walls.values())

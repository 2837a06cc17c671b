"""The series ``sum_n dim H^0(X, O(nD)) t^n``, its rational form and quasi-polynomial."""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, lcm

from .errors import RationalityCertificationFailed, VerificationFailed
from .polytope import build_polytope, lattice_points, vertices

__all__ = [
    "EhrhartSeries", "QuasiPolynomial", "count_sequence", "polytope_count_sequence",
    "ehrhart_series", "polytope_ehrhart_series", "dimension_formula",
    "polytope_dimension_formula", "expand_rational",
]


def expand_rational(numerator, period, pole_order, N):
    """First ``N + 1`` coefficients of ``numerator / (1 - t^period)^pole_order``."""
    # 1/(1-s)^e = sum_j C(j+e-1, e-1) s^j
    inv = [0] * (N + 1)
    for j in range(N // period + 1):
        inv[j * period] = comb(j + pole_order - 1, pole_order - 1) if pole_order else int(j == 0)
    return [sum(numerator[i] * inv[n - i] for i in range(min(n, len(numerator) - 1) + 1))
            for n in range(N + 1)]


@dataclass(frozen=True)
class EhrhartSeries:
    """``numerator(t) / (1 - t^period)^pole_order``; numerator in ascending powers."""

    numerator: tuple
    period: int
    pole_order: int

    def expand(self, N):
        return expand_rational(self.numerator, self.period, self.pole_order, N)

    def __str__(self):
        num = _format_poly(self.numerator, "t")
        if self.pole_order == 0:
            return num
        base = "1 - t" if self.period == 1 else "1 - t^%d" % self.period
        den = "(%s)" % base if self.pole_order == 1 else "(%s)^%d" % (base, self.pole_order)
        return "(%s) / %s" % (num, den)


@dataclass(frozen=True)
class QuasiPolynomial:
    """``L(n) = q_{n mod period}(n)`` for ``n >= start``.

    ``coefficients[r]`` lists ``q_r`` in ascending powers of ``n``.  ``start``
    is 0 except for an empty polytope, whose count vanishes only from n = 1.
    """

    period: int
    coefficients: tuple
    start: int = 0

    def __call__(self, n):
        if n < self.start:
            raise ValueError("formula is valid for n >= %d" % self.start)
        return sum(c * n ** i for i, c in enumerate(self.coefficients[n % self.period]))

    @property
    def leading_coefficients(self):
        deg = max(len(q) for q in self.coefficients) - 1
        return tuple(q[deg] if len(q) > deg else Fraction(0) for q in self.coefficients)

    def __str__(self):
        return "; ".join("n = %d mod %d: %s" % (r, self.period, _format_poly(q, "n"))
                         for r, q in enumerate(self.coefficients))


def _format_poly(coeffs, var):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else "%s^%d" % (var, i)
        if mono and c == 1:
            terms.append(mono)
        elif mono:
            terms.append("%s*%s" % (c if Fraction(c).denominator == 1 else "(%s)" % c, mono))
        else:
            terms.append(str(c))
    return " + ".join(terms) if terms else "0"


def polytope_count_sequence(h, N):
    """Lattice-point counts of the dilations ``n * P`` for ``n = 0..N``."""
    verts = vertices(h).vertices
    if not verts:
        return [1] + [0] * N
    return [len(lattice_points(h.scaled(n), [tuple(n * x for x in v) for v in verts]))
            for n in range(N + 1)]


def count_sequence(fan, d, N):
    """``[dim H^0(X, O(nD)) for n = 0..N]``."""
    return polytope_count_sequence(build_polytope(fan, d, 1), N)


def _shape(h):
    p = vertices(h)
    period = reduce(lcm, (x.denominator for v in p.vertices for x in v), 1)
    return p, period


def polytope_ehrhart_series(h):
    p, period = _shape(h)
    if p.is_empty:
        return EhrhartSeries((1,), 1, 0)
    e = p.dim + 1
    window = period * e
    counts = polytope_count_sequence(h, window + period - 1)
    factor = [0] * (window + 1)
    for j in range(e + 1):
        factor[j * period] = (-1) ** j * comb(e, j)
    prod = [sum(counts[i] * factor[n - i] for i in range(max(0, n - window), n + 1))
            for n in range(len(counts))]
    if any(prod[window:]):
        raise RationalityCertificationFailed(
            "numerator coefficients in degrees %d..%d are %r, expected zeros"
            % (window, window + period - 1, prod[window:]))
    num = prod[:window]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return EhrhartSeries(tuple(num), period, e)


def ehrhart_series(fan, d):
    return polytope_ehrhart_series(build_polytope(fan, d, 1))


def _interpolate(xs, ys):
    # Lagrange interpolation, returned in ascending powers.
    coeffs = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [a - xj * b for a, b in zip([Fraction(0)] + basis, basis + [Fraction(0)])]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    return tuple(coeffs)


def polytope_dimension_formula(h):
    p, period = _shape(h)
    if p.is_empty:
        return QuasiPolynomial(1, ((Fraction(0),),), start=1)
    d = p.dim
    counts = polytope_count_sequence(h, period * (d + 2) - 1)
    polys = []
    for r in range(period):
        xs = [r + j * period for j in range(d + 1)]
        polys.append(_interpolate(xs, [counts[x] for x in xs]))
    q = QuasiPolynomial(period, tuple(polys))
    for n in range(period * (d + 1), period * (d + 2)):
        if q(n) != counts[n]:
            raise VerificationFailed("quasi-polynomial predicts %s at n=%d, count is %d"
                                     % (q(n), n, counts[n]))
    return q


def dimension_formula(fan, d):
    return polytope_dimension_formula(build_polytope(fan, d, 1))

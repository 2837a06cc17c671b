"""T-invariant divisors on a fan and their Cartier data."""

from dataclasses import dataclass

from .errors import DimensionMismatch, NotCartier
from .lattice import solve_integer, solve_rational

__all__ = ["TDivisor", "CartierData", "cartier_data", "is_effective"]


@dataclass(frozen=True)
class TDivisor:
    """``D = sum a_i D_i`` with one integer coefficient per ray of ``fan``."""

    fan: object
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != len(self.fan.rays):
            raise DimensionMismatch(
                "divisor has %d coefficients but the fan has %d rays"
                % (len(coeffs), len(self.fan.rays)))

    def __add__(self, other):
        if other.fan != self.fan:
            raise ValueError("divisors live on different fans")
        return TDivisor(self.fan, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))


@dataclass(frozen=True)
class CartierData:
    """One character ``m_sigma`` per maximal cone, in ``fan.max_cones`` order."""

    characters: tuple

    def __iter__(self):
        return iter(self.characters)


def cartier_data(fan, d):
    """Solve ``<m_sigma, v_i> = -a_i`` for every ray ``i`` of every maximal cone.

    Raises :class:`NotCartier` for the first cone without an integral
    solution, carrying a rational witness when one exists.
    """
    out = []
    for ci, cone in enumerate(fan.max_cones):
        A = [fan.rays[i] for i in cone]
        b = [-d.coefficients[i] for i in cone]
        m = solve_integer(A, b)
        if m is None:
            raise NotCartier(ci, cone, solve_rational(A, b))
        out.append(m)
    return CartierData(tuple(out))


def is_effective(d):
    return all(a >= 0 for a in d.coefficients)

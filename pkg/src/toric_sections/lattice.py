"""Exact integer and rational linear algebra.

Vectors are tuples of ``int`` (lattice points) or ``fractions.Fraction``
(points of the rational span).  Matrices are sequences of row tuples.
Nothing in here touches floating point.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .errors import DimensionMismatch, ZeroVector

__all__ = [
    "dot", "primitive", "clear_denominators", "hnf", "integer_kernel",
    "solve_integer", "solve_rational", "rank", "inverse", "transpose",
    "as_fraction",
]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def transpose(A, ncols=None):
    if not A:
        return [() for _ in range(ncols or 0)]
    return [tuple(col) for col in zip(*A)]


def as_fraction(x):
    """Parse ints, Fractions and ``"num/den"`` strings into a canonical Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError("cannot interpret %r as an exact rational" % (x,))


def primitive(v):
    """Return the first lattice point on the ray through ``v``.

    >>> primitive((-3, -6, 9))
    (-1, -2, 3)
    """
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ZeroVector("the zero vector spans no ray")
    return tuple(x // g for x in v)


def clear_denominators(v):
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    v = [Fraction(x) for x in v]
    m = reduce(lcm, (x.denominator for x in v), 1)
    return primitive(tuple(int(x * m) for x in v))


def _ncols(A, ncols):
    widths = {len(r) for r in A}
    if len(widths) > 1:
        raise DimensionMismatch("ragged matrix")
    if widths:
        w = widths.pop()
        if ncols is not None and ncols != w:
            raise DimensionMismatch("expected %d columns, got %d" % (ncols, w))
        return w
    return ncols or 0


def hnf(A, ncols=None):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U * A``, ``U`` unimodular and ``H`` in
    row echelon form: pivots positive, entries above a pivot reduced into
    ``[0, pivot)``, zero rows last.
    """
    n = _ncols(A, ncols)
    m = len(A)
    H = [list(r) for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap(i, j):
        H[i], H[j] = H[j], H[i]
        U[i], U[j] = U[j], U[i]

    def addmul(dst, src, q):
        # row[dst] -= q * row[src]
        H[dst] = [a - q * b for a, b in zip(H[dst], H[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    row = 0
    for col in range(n):
        if row == m:
            break
        while True:
            nonzero = [i for i in range(row, m) if H[i][col]]
            if not nonzero:
                break
            piv = min(nonzero, key=lambda i: abs(H[i][col]))
            swap(row, piv)
            clean = True
            for i in range(row + 1, m):
                if H[i][col]:
                    addmul(i, row, H[i][col] // H[row][col])
                    clean = clean and H[i][col] == 0
            if clean:
                break
        if H[row][col] == 0:
            continue
        if H[row][col] < 0:
            H[row] = [-a for a in H[row]]
            U[row] = [-a for a in U[row]]
        for i in range(row):
            q = H[i][col] // H[row][col]
            if q:
                addmul(i, row, q)
        row += 1
    return [tuple(r) for r in H], [tuple(r) for r in U]


def _kernel_split(A, n):
    # Rows of U spanning the saturated kernel {x in Z^n : A x = 0}, and a
    # lattice complement; together they form a basis of Z^n.
    H, U = hnf(transpose(A, n), len(A))
    r = sum(1 for h in H if any(h))
    return U[:r], U[r:]


def integer_kernel(A, n):
    """Lattice basis (as rows) of ``{x in Z^n : A x = 0}``."""
    _ncols(A, n)
    return _kernel_split(A, n)[1]


def solve_integer(A, b):
    """Some integral ``x`` with ``A x = b``, or ``None`` when none exists."""
    if len(A) != len(b):
        raise DimensionMismatch("%d rows but right-hand side of length %d" % (len(A), len(b)))
    n = _ncols(A, None)
    if not A:
        return ()
    # U A^T = H  =>  A = H^T U^{-T}; with y = U^{-T} x we need H^T y = b.
    H, U = hnf(transpose(A, n), len(A))
    residual = list(b)
    y = [0] * n
    for i, h in enumerate(H):
        pivots = [j for j, e in enumerate(h) if e]
        if not pivots:
            break
        p = pivots[0]
        q, rem = divmod(residual[p], h[p])
        if rem:
            return None
        y[i] = q
        residual = [r - q * e for r, e in zip(residual, h)]
    if any(residual):
        return None
    # x = U^T y
    return tuple(sum(U[i][j] * y[i] for i in range(n)) for j in range(n))


def _rref(rows, ncols):
    M = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(A):
    if not A:
        return 0
    return len(_rref(A, _ncols(A, None))[1])


def solve_rational(A, b):
    """Some rational ``x`` with ``A x = b`` (free variables set to 0), or ``None``."""
    if len(A) != len(b):
        raise DimensionMismatch("%d rows but right-hand side of length %d" % (len(A), len(b)))
    n = _ncols(A, None)
    aug = [tuple(r) + (rhs,) for r, rhs in zip(A, b)]
    M, pivots = _rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(M, pivots):
        x[c] = row[n]
    return tuple(x)


def inverse(B):
    """Exact inverse of a square matrix over Q."""
    n = len(B)
    aug = [tuple(r) + tuple(int(i == j) for j in range(n)) for i, r in enumerate(B)]
    M, pivots = _rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [tuple(row[n:]) for row in M]

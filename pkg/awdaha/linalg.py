"""
Exact dense linear algebra over a ScalarField domain.

Matrices are ``sympy.polys.matrices.DomainMatrix`` instances; polynomials
are ``PolyElement`` values in the ring ``domain[x]``. Column j of a matrix
is the image of the j-th basis vector.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from sympy import Poly, degree, factor_list, fraction, sstr, together
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.rings import ring

from awdaha.config import MAX_DIMENSION
from awdaha.errors import DimensionError, Singular

logger = logging.getLogger(__name__)


# ===== construction =====

def new_matrix(rows, domain):
    """Build a square DomainMatrix from a list of rows of convertible entries."""
    n = len(rows)
    if n < 1:
        raise DimensionError("matrix must have at least one row")
    if n > MAX_DIMENSION:
        raise DimensionError(f"dimension {n} exceeds the supported maximum {MAX_DIMENSION}")
    for row in rows:
        if len(row) != n:
            raise DimensionError(f"row of length {len(row)} in a {n}x{n} matrix")
    entries = [[domain.convert(e) for e in row] for row in rows]
    return DomainMatrix(entries, (n, n), domain)


def identity(n, domain):
    return DomainMatrix.eye(n, domain).to_dense()


def zero_matrix(n, domain):
    return DomainMatrix.zeros((n, n), domain).to_dense()


def scale(M, c):
    c = M.domain.convert(c)
    rows = [[c * e for e in row] for row in M.to_list()]
    return DomainMatrix(rows, M.shape, M.domain)


def scalar_matrix(c, n, domain):
    return scale(identity(n, domain), c)


def scalar_value(M):
    """Return c if M == c*I, otherwise None."""
    n = M.shape[0]
    c = M.to_list()[0][0]
    if M == scalar_matrix(c, n, M.domain):
        return c
    return None


def dimension(M):
    return M.shape[0]


def same_shape(*mats):
    shapes = {M.shape for M in mats}
    if len(shapes) != 1:
        raise DimensionError(f"matrices of different shapes: {sorted(shapes)}")
    return mats[0].shape[0]


def commutator(X, Y):
    return X * Y - Y * X


# ===== determinant, inverse, polynomials =====

def inverse(M):
    """Exact inverse; raises Singular when det(M) == 0."""
    try:
        return M.inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as exc:
        raise Singular(f"{M.shape[0]}x{M.shape[0]} matrix is not invertible") from exc


def determinant(M):
    return M.det()


@lru_cache(maxsize=None)
def polynomial_ring(domain):
    R, _ = ring("x", domain)
    return R


def char_poly(M):
    """Monic characteristic polynomial (Berkowitz, division free)."""
    return polynomial_ring(M.domain).from_list(M.charpoly())


def poly_from_roots(roots, domain):
    R = polynomial_ring(domain)
    x = R.gens[0]
    result = R.one
    for root in roots:
        result *= x - root
    return result


def poly_at_matrix(p, M):
    """Horner evaluation of p at M."""
    n = M.shape[0]
    I = identity(n, M.domain)
    coeffs = dict(p.terms())
    result = zero_matrix(n, M.domain)
    for k in range(p.degree(), -1, -1):
        result = result * M + scale(I, coeffs.get((k,), M.domain.zero))
    return result


def _krylov_annihilator(M, vector):
    """Monic polynomial of least degree killing vector under M."""
    domain = M.domain
    n = len(vector)
    columns = [list(vector)]
    while True:
        k = len(columns)
        stacked = DomainMatrix(
            [[columns[j][i] for j in range(k)] for i in range(n)], (n, k), domain
        )
        kernel = nullspace(stacked)
        if kernel:
            relation = kernel[0]
            R = polynomial_ring(domain)
            poly = R.from_dict({(j,): c for j, c in enumerate(relation) if c})
            return poly.monic()
        columns.append(apply(M.to_list(), columns[-1], domain))


def min_poly(M):
    """Least common multiple of the Krylov annihilators of the basis vectors."""
    n = M.shape[0]
    domain = M.domain
    result = polynomial_ring(domain).one
    for j in range(n):
        e_j = [domain.one if i == j else domain.zero for i in range(n)]
        result = result.lcm(_krylov_annihilator(M, e_j))
    return result.monic()


def is_squarefree(p):
    x = p.ring.gens[0]
    return p.gcd(p.diff(x)).degree() <= 0


def is_diagonalizable(M):
    """Diagonalizable over the algebraic closure: squarefree minimal polynomial."""
    return is_squarefree(min_poly(M))


def is_multiplicity_free(M):
    return is_squarefree(char_poly(M))


class Roots(NamedTuple):
    roots: list
    splits: bool


def rational_roots(p):
    """
    Roots of p lying in its coefficient field, with multiplicities.

    Returns a Roots tuple; ``splits`` tells whether the multiplicities add
    up to deg p. Roots are sorted by their printed form.
    """
    domain = p.ring.domain
    if p.degree() <= 0:
        return Roots([], True)
    x = p.ring.symbols[0]
    numer, _ = fraction(together(p.as_expr()))
    _, factors = factor_list(numer)
    found = []
    for factor, multiplicity in factors:
        if degree(factor, x) != 1:
            continue
        lead, tail = Poly(factor, x).all_coeffs()
        found.append((domain.from_sympy(-tail / lead), multiplicity))
    found.sort(key=lambda item: sstr(domain.to_sympy(item[0])))
    splits = sum(m for _, m in found) == p.degree()
    logger.debug("polynomial of degree %d: %d roots in field, splits=%s",
                 p.degree(), len(found), splits)
    return Roots(found, splits)


# ===== vectors and subspaces =====

def apply(rows, vector, domain):
    """rows (list of lists) times a column vector."""
    support = [(j, x) for j, x in enumerate(vector) if x]
    return [sum((row[j] * x for j, x in support), domain.zero) for row in rows]


def column(M, j):
    return [row[j] for row in M.to_list()]


def nullspace(M):
    """Basis of {v : M v = 0} as a list of vectors, read off the rref."""
    domain = M.domain
    ncols = M.shape[1]
    reduced, pivots = M.rref()
    rows = reduced.to_list()
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [domain.zero] * ncols
        v[free] = domain.one
        for r, p in enumerate(pivots):
            v[p] = -rows[r][free]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of domain^ambient stored as its reduced row echelon basis."""

    ambient: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, vectors, ambient, domain):
        rows = [list(v) for v in vectors if any(v)]
        if not rows:
            return cls(ambient, (), ())
        reduced, pivots = DomainMatrix(rows, (len(rows), ambient), domain).rref()
        basis = tuple(tuple(row) for row in reduced.to_list()[: len(pivots)])
        return cls(ambient, basis, tuple(pivots))

    @property
    def dim(self):
        return len(self.basis)

    def is_proper(self):
        return 0 < self.dim < self.ambient

    def coordinates(self, vector):
        """Coordinates of a vector known to lie in the subspace."""
        return [vector[p] for p in self.pivots]

    def reduce(self, vector):
        """Remainder of vector modulo the subspace (zero at every pivot)."""
        v = list(vector)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        return v

    def contains(self, vector):
        return not any(self.reduce(vector))

    def is_invariant(self, mats):
        for M in mats:
            rows = M.to_list()
            for vector in self.basis:
                if not self.contains(apply(rows, vector, M.domain)):
                    return False
        return True

    def sort_key(self, field):
        return (
            self.dim,
            self.pivots,
            tuple(tuple(field.format(e) for e in row) for row in self.basis),
        )


class EchelonBasis:
    """Row basis kept in semi-echelon form, grown one vector at a time."""

    def __init__(self, domain, length):
        self.domain = domain
        self.length = length
        self.rows = []
        self.pivots = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector):
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        return v

    def add(self, vector):
        """Add vector if it is independent; return True when the span grew."""
        v = self.reduce(vector)
        pivot = next((i for i, e in enumerate(v) if e), None)
        if pivot is None:
            return False
        inv = self.domain.one / v[pivot]
        self.rows.append([e * inv for e in v])
        self.pivots.append(pivot)
        return True

    def subspace(self):
        return Subspace.span(self.rows, self.length, self.domain)


def eigenspace(M, value):
    n = M.shape[0]
    shifted = M - scalar_matrix(value, n, M.domain)
    return Subspace.span(nullspace(shifted), n, M.domain)


# ===== text format =====

def format_matrix(M, field):
    n = M.shape[0]
    lines = [str(n)]
    for row in M.to_list():
        lines.append(" ".join(field.format(e) for e in row))
    return "\n".join(lines)


def parse_matrix(text, field):
    """Read the text format: a line with n, then n rows of n scalars."""
    lines = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not lines or len(lines[0]) != 1:
        raise DimensionError("matrix text must start with a line holding n")
    try:
        n = int(lines[0][0])
    except ValueError as exc:
        raise DimensionError(f"bad matrix size {lines[0][0]!r}") from exc
    rows = lines[1:]
    if len(rows) != n:
        raise DimensionError(f"expected {n} rows, found {len(rows)}")
    return new_matrix([[field.parse(tok) for tok in row] for row in rows], field.domain)

"""Search for module isomorphisms X with X g1 = g2 X for every generator pair."""

import logging
import random

from sympy.polys.matrices import DomainMatrix

from awdaha import linalg
from awdaha.config import (
    DEFAULT_SEED,
    INTERTWINER_COEFF_RANGE,
    INTERTWINER_RANDOM_TRIES,
)
from awdaha.errors import DimensionError

logger = logging.getLogger(__name__)


def intertwiner_space(mats1, mats2):
    """Basis of {X : X g1 = g2 X for all pairs}, each X as a DomainMatrix."""
    if len(mats1) != len(mats2):
        raise DimensionError("both modules need the same number of generators")
    n = linalg.same_shape(*mats1, *mats2)
    domain = mats1[0].domain
    zero = domain.zero
    equations = []
    # unknown X[r][c] sits at index r*n + c
    for g1, g2 in zip(mats1, mats2):
        a, b = g1.to_list(), g2.to_list()
        for i in range(n):
            for j in range(n):
                row = [zero] * (n * n)
                for k in range(n):
                    if a[k][j]:
                        row[i * n + k] += a[k][j]
                    if b[i][k]:
                        row[k * n + j] -= b[i][k]
                equations.append(row)
    system = DomainMatrix(equations, (len(equations), n * n), domain)
    basis = linalg.nullspace(system)
    logger.debug("intertwiner space of dimension %d", len(basis))
    return [
        DomainMatrix([v[r * n:(r + 1) * n] for r in range(n)], (n, n), domain)
        for v in basis
    ]


def _invertible(X):
    return bool(linalg.determinant(X))


def find_intertwiner(mats1, mats2, seed=DEFAULT_SEED):
    """
    An invertible intertwiner from the first module to the second, or None.

    Basis elements of the solution space are tried first, then seeded
    random combinations with small integer coefficients.
    """
    basis = intertwiner_space(mats1, mats2)
    if not basis:
        return None
    for X in basis:
        if _invertible(X):
            return X
    if len(basis) == 1:
        return None
    rng = random.Random(seed)
    low, high = INTERTWINER_COEFF_RANGE
    for _ in range(INTERTWINER_RANDOM_TRIES):
        X = basis[0]
        X = linalg.scale(X, rng.randint(low, high))
        for Y in basis[1:]:
            X = X + linalg.scale(Y, rng.randint(low, high))
        if _invertible(X):
            return X
    logger.debug("no invertible intertwiner among %d random combinations",
                 INTERTWINER_RANDOM_TRIES)
    return None

"""
Absolute irreducibility.

The Burnside test spans the unital algebra generated by the matrices and
compares its dimension with n^2. When the algebra is smaller, a proper
invariant subspace is searched for by spinning up vectors (standard basis
vectors, eigenvectors of generators and of simple words in them) and by
spinning up dual vectors under the transposes.
"""

import logging
from collections import deque
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from awdaha import linalg
from awdaha.analysis.predicates import criterion
from awdaha.linalg import EchelonBasis, Subspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IrreducibilityVerdict:
    by_criterion: bool
    by_burnside: bool
    witness: Subspace = None

    @property
    def agrees(self):
        return self.by_criterion == self.by_burnside

    def to_dict(self, field):
        witness = None
        if self.witness is not None:
            witness = [[field.format(e) for e in row] for row in self.witness.basis]
        return {
            "by_criterion": self.by_criterion,
            "by_burnside": self.by_burnside,
            "witness": witness,
        }


def _flat(M):
    return [e for row in M.to_list() for e in row]


def algebra_dimension(mats):
    """Dimension of the unital algebra generated by mats (early exit at n^2)."""
    n = linalg.same_shape(*mats)
    domain = mats[0].domain
    full = n * n
    span = EchelonBasis(domain, full)
    I = linalg.identity(n, domain)
    span.add(_flat(I))
    queue = deque([I])
    while queue and len(span) < full:
        X = queue.popleft()
        for g in mats:
            Y = X * g
            if span.add(_flat(Y)):
                queue.append(Y)
                if len(span) == full:
                    break
    logger.debug("algebra generated by %d matrices has dimension %d of %d",
                 len(mats), len(span), full)
    return len(span)


def burnside_irreducible(mats):
    n = linalg.same_shape(*mats)
    return n == 1 or algebra_dimension(mats) == n * n


def spin_up(mats, vectors):
    """Smallest subspace containing vectors and invariant under every matrix."""
    n = linalg.same_shape(*mats)
    domain = mats[0].domain
    rows = [M.to_list() for M in mats]
    span = EchelonBasis(domain, n)
    queue = deque()
    for v in vectors:
        if span.add(v):
            queue.append(span.rows[-1])
    while queue and len(span) < n:
        v = queue.popleft()
        for g in rows:
            image = linalg.apply(g, v, domain)
            if span.add(image):
                queue.append(span.rows[-1])
    return span.subspace()


def annihilator(subspace, domain):
    """{v : w . v = 0 for every basis vector w}."""
    n = subspace.ambient
    if subspace.dim == 0:
        return Subspace.span(
            [[domain.one if i == j else domain.zero for i in range(n)] for j in range(n)],
            n, domain,
        )
    M = DomainMatrix([list(row) for row in subspace.basis], (subspace.dim, n), domain)
    return Subspace.span(linalg.nullspace(M), n, domain)


def dual_spin_up(mats, vector):
    """Invariant subspace annihilated by the transpose-orbit of vector."""
    domain = mats[0].domain
    transposes = [M.transpose() for M in mats]
    return annihilator(spin_up(transposes, [vector]), domain)


def standard_basis(n, domain):
    return [[domain.one if i == j else domain.zero for i in range(n)] for j in range(n)]


def eigenvectors(M):
    """All eigenspace basis vectors of M for eigenvalues lying in the field."""
    vectors = []
    for value, _ in linalg.rational_roots(linalg.char_poly(M)).roots:
        vectors.extend(linalg.eigenspace(M, value).basis)
    return vectors


def _candidate_elements(mats):
    """Generators, then pairwise sums and products: the elements whose
    eigenvectors seed the witness search."""
    candidates = list(mats)
    for i, X in enumerate(mats):
        for Y in mats[i + 1:]:
            candidates.append(X + Y)
            candidates.append(X * Y)
    return candidates


def find_invariant_subspace(mats):
    """A proper nonzero common invariant subspace, or None if none was found."""
    n = linalg.same_shape(*mats)
    domain = mats[0].domain
    if n == 1:
        return None
    for v in standard_basis(n, domain):
        W = spin_up(mats, [v])
        if W.is_proper():
            return W
    for v in standard_basis(n, domain):
        W = dual_spin_up(mats, v)
        if W.is_proper():
            return W
    for Z in _candidate_elements(mats):
        for v in eigenvectors(Z):
            W = spin_up(mats, [v])
            if W.is_proper():
                return W
        for v in eigenvectors(Z.transpose()):
            W = dual_spin_up(mats, v)
            if W.is_proper():
                return W
    logger.warning("algebra is not full but no invariant subspace was found in the field")
    return None


def irreducibility_verdict(spec, realization):
    """Closed-form criterion against the Burnside test on the generator matrices."""
    mats = realization.matrices()
    by_burnside = burnside_irreducible(mats)
    witness = None
    if not by_burnside:
        witness = find_invariant_subspace(mats)
    return IrreducibilityVerdict(criterion(spec), by_burnside, witness)

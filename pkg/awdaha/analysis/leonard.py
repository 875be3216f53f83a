"""
Leonard pair and Leonard triple detection.

An operator L is diagonalised through its eigenbasis; the partner is
re-expressed in that basis and its off-diagonal support graph must be a
single path whose edges carry two nonzero entries. The path order is the
certificate: listing the eigenvalues along it puts the partner into
irreducible tridiagonal form.
"""

import logging
from dataclasses import dataclass, field as dataclass_field

from sympy.polys.matrices import DomainMatrix

from awdaha import linalg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeonardVerdict:
    multiplicity_free: dict
    result: bool
    certificates: dict = dataclass_field(default_factory=dict)
    reason: str = None

    def to_dict(self, field):
        return {
            "multiplicity_free": dict(self.multiplicity_free),
            "result": self.result,
            "certificates": {
                name: [field.format(v) for v in order]
                for name, order in self.certificates.items()
            },
            "reason": self.reason,
        }


def _spectrum(M):
    """Eigenvalues of M if it is multiplicity free and splits, else None."""
    if not linalg.is_multiplicity_free(M):
        return None
    roots = linalg.rational_roots(linalg.char_poly(M))
    if not roots.splits:
        return None
    return [value for value, _ in roots.roots]


def _eigenbasis(M, values):
    n = M.shape[0]
    vectors = [linalg.eigenspace(M, value).basis[0] for value in values]
    return DomainMatrix([[vectors[j][i] for j in range(n)] for i in range(n)], (n, n), M.domain)


def path_order(T):
    """
    Vertex order of the off-diagonal support of T when it is one path with
    both directed entries nonzero on every edge; None otherwise.
    """
    rows = T.to_list()
    n = len(rows)
    if n == 1:
        return [0]
    neighbours = {i: [] for i in range(n)}
    edges = 0
    for i in range(n):
        for j in range(i + 1, n):
            upper, lower = rows[i][j], rows[j][i]
            if not upper and not lower:
                continue
            if not (upper and lower):
                return None
            neighbours[i].append(j)
            neighbours[j].append(i)
            edges += 1
    if edges != n - 1 or any(len(v) > 2 for v in neighbours.values()):
        return None
    ends = [i for i in range(n) if len(neighbours[i]) == 1]
    if len(ends) != 2:
        return None
    order = [ends[0]]
    previous = None
    while len(order) < n:
        step = [j for j in neighbours[order[-1]] if j != previous]
        if not step:
            return None
        previous = order[-1]
        order.append(step[0])
    return order


def _path_edges(order):
    return {frozenset(pair) for pair in zip(order, order[1:])}


def _partner_orders(L, partners):
    """Path orders of each partner in the eigenbasis of L, or a failure reason."""
    values = _spectrum(L)
    if values is None:
        return None, None, "not multiplicity free with a split spectrum"
    P = _eigenbasis(L, values)
    P_inv = linalg.inverse(P)
    orders = [path_order(P_inv * X * P) for X in partners]
    return values, orders, None


def leonard_pair_check(L, L_star):
    """Both directions: each operator diagonal where the other is irreducible tridiagonal."""
    mf = {
        "L": linalg.is_multiplicity_free(L),
        "L*": linalg.is_multiplicity_free(L_star),
    }
    certificates = {}
    for name, X, Y in (("L", L, L_star), ("L*", L_star, L)):
        values, orders, reason = _partner_orders(X, [Y])
        if reason is not None:
            return LeonardVerdict(mf, False, certificates, f"{name}: {reason}")
        if orders[0] is None:
            return LeonardVerdict(mf, False, certificates,
                                  f"partner of {name} is not irreducible tridiagonal in any order")
        certificates[name] = [values[i] for i in orders[0]]
    return LeonardVerdict(mf, True, certificates)


def leonard_triple_check(A, B, C):
    """Each of A, B, C diagonal where the other two are irreducible tridiagonal in one order."""
    mats = {"A": A, "B": B, "C": C}
    mf = {name: linalg.is_multiplicity_free(M) for name, M in mats.items()}
    certificates = {}
    for name, others in (("A", ("B", "C")), ("B", ("C", "A")), ("C", ("A", "B"))):
        values, orders, reason = _partner_orders(mats[name], [mats[o] for o in others])
        if reason is not None:
            return LeonardVerdict(mf, False, certificates, f"{name}: {reason}")
        first, second = orders
        if first is None or second is None:
            bad = others[0] if first is None else others[1]
            return LeonardVerdict(mf, False, certificates,
                                  f"{bad} is not irreducible tridiagonal in the eigenbasis of {name}")
        if _path_edges(first) != _path_edges(second):
            return LeonardVerdict(mf, False, certificates,
                                  f"{others[0]} and {others[1]} need different orders of the eigenbasis of {name}")
        certificates[name] = [values[i] for i in first]
    return LeonardVerdict(mf, True, certificates)

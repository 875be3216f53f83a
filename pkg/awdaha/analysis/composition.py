"""
Composition series of Askey-Wilson modules and matching against the
predicted factors.

A series is built by splitting off an invariant subspace and recursing on
both the subspace and the quotient until every piece is absolutely
irreducible.
"""

import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from awdaha import linalg
from awdaha.analysis.intertwiner import find_intertwiner
from awdaha.analysis.irreducibility import (
    burnside_irreducible,
    eigenvectors,
    find_invariant_subspace,
    spin_up,
    standard_basis,
)
from awdaha.analysis.predicates import predicted_factors
from awdaha.analysis.relations import central_character
from awdaha.config import INTERTWINER_CROSSCHECK_MAX_DIM
from awdaha.errors import NonSplittingSpectrum
from awdaha.realizations import AwRealization, build_vd, push_to_aw
from awdaha.reports import ReportBuilder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompositionFactor:
    dim: int
    matrices: tuple
    central: object
    charpoly_a: object
    charpoly_b: object

    def invariant(self):
        central = self.central.values if self.central is not None else None
        return (self.dim, central, self.charpoly_a, self.charpoly_b)

    def to_dict(self, field):
        return {
            "dim": self.dim,
            "central": self.central.as_dict(field) if self.central is not None else None,
            "charpoly_A": str(self.charpoly_a.as_expr()),
            "charpoly_B": str(self.charpoly_b.as_expr()),
        }


@dataclass(frozen=True)
class CompositionSeries:
    ambient: int
    factors: tuple

    @property
    def dims(self):
        return [f.dim for f in self.factors]

    def to_dict(self, field):
        return {"ambient": self.ambient, "factors": [f.to_dict(field) for f in self.factors]}


def restrict(mats, W):
    """Matrices of the action on W in the echelon basis of W."""
    domain = mats[0].domain
    k = W.dim
    restricted = []
    for M in mats:
        rows = M.to_list()
        columns = [W.coordinates(linalg.apply(rows, w, domain)) for w in W.basis]
        restricted.append(
            DomainMatrix([[columns[j][i] for j in range(k)] for i in range(k)], (k, k), domain)
        )
    return restricted


def quotient(mats, W):
    """Matrices of the action on V/W in the basis of non-pivot coordinate vectors."""
    domain = mats[0].domain
    n = W.ambient
    keep = [c for c in range(n) if c not in W.pivots]
    m = len(keep)
    result = []
    for M in mats:
        columns = []
        for c in keep:
            image = W.reduce(linalg.column(M, c))
            columns.append([image[r] for r in keep])
        result.append(
            DomainMatrix([[columns[j][i] for j in range(m)] for i in range(m)], (m, m), domain)
        )
    return result


def _minimal_candidate(mats, field):
    """Smallest proper spin-up from standard basis vectors and A-eigenvectors."""
    n = mats[0].shape[0]
    candidates = standard_basis(n, field.domain) + eigenvectors(mats[0])
    best = None
    for v in candidates:
        W = spin_up(mats, [v])
        if not W.is_proper():
            continue
        if best is None or W.sort_key(field) < best.sort_key(field):
            best = W
    return best


def _decompose(mats, field):
    n = mats[0].shape[0]
    if n == 1:
        return [mats]
    W = _minimal_candidate(mats, field)
    if W is None:
        if burnside_irreducible(mats):
            return [mats]
        W = find_invariant_subspace(mats)
        if W is None:
            raise NonSplittingSpectrum(
                f"no invariant subspace found for a reducible {n}-dimensional module "
                "and the spectra do not split over the field"
            )
    logger.debug("split %d = %d + %d", n, W.dim, n - W.dim)
    return _decompose(restrict(mats, W), field) + _decompose(quotient(mats, W), field)


def composition_series_aw(aw):
    """Composition series of the module generated by A, B, C."""
    field = aw.field
    factors = []
    for A, B, C in _decompose(aw.matrices(), field):
        piece = AwRealization(field, A, B, C)
        factors.append(CompositionFactor(
            dim=A.shape[0],
            matrices=(A, B, C),
            central=central_character(piece),
            charpoly_a=linalg.char_poly(A),
            charpoly_b=linalg.char_poly(B),
        ))
    logger.info("composition series of %s: dims %s", aw.label or "module",
                [f.dim for f in factors])
    return CompositionSeries(aw.dim, tuple(factors))


def factor_of_vd(spec):
    vd = build_vd(spec)
    return CompositionFactor(
        dim=vd.dim,
        matrices=tuple(vd.matrices()),
        central=vd.central,
        charpoly_a=linalg.char_poly(vd.A),
        charpoly_b=linalg.char_poly(vd.B),
    )


def match_predicted_factors(series, m, crosscheck=True):
    """
    Bijective match of computed factors with the predicted V_delta(a,b,c)
    on (dim, central character, char poly of A, char poly of B). Small
    matched factors are also checked with an explicit intertwiner.
    """
    field = m.field
    predicted = predicted_factors(m.spec, m.twist)
    report = ReportBuilder(
        "composition_factors",
        "the composition factors of the pushforward are the predicted V_delta(a,b,c)",
    )
    unused = list(range(len(series.factors)))
    for spec in predicted:
        expected = factor_of_vd(spec)
        match = next(
            (i for i in unused if series.factors[i].invariant() == expected.invariant()), None
        )
        report.record(f"V_{spec.d}({spec.param_text()})", match is not None)
        if match is None:
            continue
        unused.remove(match)
        if crosscheck and expected.dim <= INTERTWINER_CROSSCHECK_MAX_DIM:
            X = find_intertwiner(list(series.factors[match].matrices), list(expected.matrices))
            report.record(f"V_{spec.d}({spec.param_text()}).intertwiner", X is not None)
    report.record("no_unmatched_factors", not unused, unmatched=[series.factors[i].dim for i in unused])
    report.record("dimension_sum", sum(series.dims) == m.dim)
    return report.build(
        module=m.label,
        computed=series.to_dict(field),
        predicted=[spec.describe() for spec in predicted],
    )


def factors_report(m):
    """Series of the pushforward of m, matched against its prediction."""
    series = composition_series_aw(push_to_aw(m))
    return series, match_predicted_factors(series, m)

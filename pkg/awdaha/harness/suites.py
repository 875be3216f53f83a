"""
The suite registry.

Each suite evaluates one (spec, twist) grid point and returns a
VerificationReport. The registry also says which families a suite runs
on, whether it walks the twists, whether it needs irreducible points,
and which constructed points it adds to the random ones.
"""

import logging
from dataclasses import dataclass

from awdaha import linalg
from awdaha.analysis.composition import composition_series_aw, factors_report
from awdaha.analysis.irreducibility import burnside_irreducible, irreducibility_verdict
from awdaha.analysis.leonard import leonard_pair_check, leonard_triple_check
from awdaha.analysis.predicates import (
    criterion,
    e_factor_ladder_gaps,
    operator_property,
    predicate_claims,
)
from awdaha.analysis.relations import (
    inverse_parameter_isomorphisms,
    t0t1_ladder_check,
    t0t1_spectrum_check,
    twist_discriminant,
    verify_aw_centrality,
    verify_daha_relations,
    verify_determinants,
)
from awdaha.harness import grid
from awdaha.realizations import (
    AW_GENERATORS,
    VdSpec,
    build,
    evaluate_word,
    push_to_aw,
)
from awdaha.reports import ReportBuilder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Suite:
    """
    Args:
        name: stable check identifier
        statement: what the suite verifies, in words
        families: families the suite applies to
        evaluate: callable (spec, eps) -> VerificationReport
        twisted: walk the configured twists for E and O
        irreducible_only: resample until the irreducibility criterion holds
        boundary: callable (family, d, field, rng) -> list of constructed specs
        constructor: replaces random sampling entirely
        min_d: smallest d the suite runs at, per family
    """

    name: str
    statement: str
    families: tuple
    evaluate: object
    twisted: bool = False
    irreducible_only: bool = False
    boundary: object = None
    constructor: object = None
    min_d: tuple = ()
    fixed_twist: int = 0

    def accepts_d(self, family, d):
        return d >= dict(self.min_d).get(family, 0)


def _module(spec, eps):
    return build(spec, 0 if isinstance(spec, VdSpec) else eps)


def _aw_module(spec, eps):
    m = _module(spec, eps)
    return m if isinstance(spec, VdSpec) else push_to_aw(m)


# ===== evaluators =====

def daha_relations(spec, eps):
    return verify_daha_relations(build(spec, eps))


def aw_centrality(spec, eps):
    return verify_aw_centrality(_aw_module(spec, eps))


def determinants(spec, eps):
    return verify_determinants(build(spec, eps))


def t0t1_spectrum(spec, eps):
    m = build(spec, eps)
    report = ReportBuilder(
        "t0t1_spectrum",
        "t0t1 has the closed-form spectrum and walks the basis through the ladder operators",
    )
    report.extend(t0t1_spectrum_check(m), "spectrum")
    report.extend(t0t1_ladder_check(m), "ladder")
    return report.build(module=m.label)


def irreducibility(spec, eps):
    m = _module(spec, eps)
    verdict = irreducibility_verdict(spec, m)
    report = ReportBuilder(
        "irreducibility",
        "the closed-form irreducibility criterion agrees with the Burnside test",
    )
    report.record("criterion_matches_burnside", verdict.agrees,
                  criterion=verdict.by_criterion, burnside=verdict.by_burnside)
    if not verdict.by_burnside:
        report.record("witness_found", verdict.witness is not None)
        if verdict.witness is not None:
            report.record("witness_invariant", verdict.witness.is_invariant(m.matrices()),
                          witness_dim=verdict.witness.dim)
    return report.build(module=m.label, verdict=verdict.to_dict(spec.field))


def composition_factors(spec, eps):
    m = build(spec, eps)
    series, match = factors_report(m)
    report = ReportBuilder(
        "composition_factors",
        "the composition factors of the pushforward are irreducible and are the predicted V_delta(a,b,c)",
    )
    report.extend(match)
    for i, factor in enumerate(series.factors):
        report.record(f"factor_{i}_irreducible", burnside_irreducible(list(factor.matrices)),
                      dim=factor.dim)
    return report.build(
        module=m.label,
        computed=match.detail["computed"],
        predicted=match.detail["predicted"],
    )


def _series_and_module(spec, eps):
    aw = _aw_module(spec, eps)
    return aw, composition_series_aw(aw)


def _on_all(series, names, test):
    return all(
        test(factor.matrices[AW_GENERATORS.index(name)])
        for factor in series.factors
        for name in names
    )


def _diagonalizable_on(aw, names):
    return all(linalg.is_diagonalizable(aw.generators[name]) for name in names)


def _module_side(on_module, on_factors, gap):
    """
    Compare the module with its factors. At a factor ladder gap a
    non-diagonalizable module over multiplicity-free factors is a known
    exception, reported as such.
    """
    if on_module == on_factors:
        return True, False
    exception = gap and on_factors and not on_module
    return exception, exception


def diagonalizable_iff_factors(spec, eps):
    aw, series = _series_and_module(spec, eps)
    gaps = e_factor_ladder_gaps(spec, eps)
    report = ReportBuilder(
        "diagonalizable_iff_factors",
        "each of A, B, C is diagonalizable on the module iff it is diagonalizable "
        "on every composition factor iff it is multiplicity-free there",
    )
    for name in AW_GENERATORS:
        on_module = _diagonalizable_on(aw, (name,))
        on_factors = _on_all(series, (name,), linalg.is_diagonalizable)
        multiplicity_free = _on_all(series, (name,), linalg.is_multiplicity_free)
        agrees, exception = _module_side(on_module, on_factors, name in gaps)
        report.record(
            name, agrees and on_factors == multiplicity_free,
            diagonalizable=on_module,
            diagonalizable_on_factors=on_factors,
            multiplicity_free_on_factors=multiplicity_free,
            known_exception=exception,
        )
    return report.build(module=aw.label, factor_dims=series.dims, ladder_gaps=list(gaps))


def leonard_pairs_on_factors(spec, eps):
    aw, series = _series_and_module(spec, eps)
    gaps = e_factor_ladder_gaps(spec, eps)
    report = ReportBuilder(
        "leonard_pairs_on_factors",
        "a pair among A, B, C is diagonalizable on the module iff it is diagonalizable, "
        "multiplicity-free and a Leonard pair on every composition factor",
    )
    for first, second in (("A", "B"), ("B", "C"), ("C", "A")):
        names = (first, second)
        i, j = AW_GENERATORS.index(first), AW_GENERATORS.index(second)
        on_module = _diagonalizable_on(aw, names)
        on_factors = _on_all(series, names, linalg.is_diagonalizable)
        multiplicity_free = _on_all(series, names, linalg.is_multiplicity_free)
        verdicts = [leonard_pair_check(f.matrices[i], f.matrices[j]) for f in series.factors]
        leonard = all(v.result for v in verdicts)
        agrees, exception = _module_side(on_module, on_factors, bool(set(names) & set(gaps)))
        report.record(
            first + second, agrees and on_factors == multiplicity_free == leonard,
            diagonalizable=on_module,
            diagonalizable_on_factors=on_factors,
            multiplicity_free_on_factors=multiplicity_free,
            leonard_on_factors=leonard,
            known_exception=exception,
            reasons=[v.reason for v in verdicts if v.reason],
        )
    return report.build(module=aw.label, factor_dims=series.dims, ladder_gaps=list(gaps))


def leonard_triples_on_factors(spec, eps):
    aw, series = _series_and_module(spec, eps)
    gaps = e_factor_ladder_gaps(spec, eps)
    report = ReportBuilder(
        "leonard_triples_on_factors",
        "A, B, C are diagonalizable on the module iff they are diagonalizable, "
        "multiplicity-free and a Leonard triple on every composition factor",
    )
    on_module = _diagonalizable_on(aw, AW_GENERATORS)
    on_factors = _on_all(series, AW_GENERATORS, linalg.is_diagonalizable)
    multiplicity_free = _on_all(series, AW_GENERATORS, linalg.is_multiplicity_free)
    verdicts = [leonard_triple_check(*f.matrices) for f in series.factors]
    leonard = all(v.result for v in verdicts)
    agrees, exception = _module_side(on_module, on_factors, bool(gaps))
    report.record(
        "ABC", agrees and on_factors == multiplicity_free == leonard,
        diagonalizable=on_module,
        diagonalizable_on_factors=on_factors,
        multiplicity_free_on_factors=multiplicity_free,
        leonard_on_factors=leonard,
        known_exception=exception,
        reasons=[v.reason for v in verdicts if v.reason],
    )
    return report.build(module=aw.label, factor_dims=series.dims, ladder_gaps=list(gaps))


def predicate_battery(spec, eps=0):
    """Every closed-form predicate of spec against the matrix property it names."""
    report = ReportBuilder(
        "predicate_battery",
        "every closed-form diagonalizability predicate matches the matrix-level property it describes",
    )
    modules, series = {}, {}
    for claim in predicate_claims(spec):
        if claim.twist not in modules:
            modules[claim.twist] = _module(spec, claim.twist)
        m = modules[claim.twist]
        factor_series = None
        if claim.prop == "multiplicity_free_on_factors":
            if claim.twist not in series:
                series[claim.twist] = composition_series_aw(push_to_aw(m))
            factor_series = series[claim.twist]
        actual = operator_property(claim, m, factor_series)
        if claim.direction == "iff":
            passed = claim.holds == actual
        else:
            passed = actual or not claim.holds
        report.record(claim.name, passed, predicate=claim.holds, actual=actual,
                      direction=claim.direction, operator=claim.operator.label)
    return report.build(module=spec.describe())


def _counterexample(check, statement, m):
    aw = push_to_aw(m)
    report = ReportBuilder(check, statement)
    report.record("irreducible", criterion(m.spec))
    for word in (("t0", "t1"), ("t3", "t0")):
        label = "".join(word)
        report.record(f"{label}_not_diagonalizable",
                      not linalg.is_diagonalizable(evaluate_word(m, word)))
    for name in ("A", "B"):
        report.record(f"{name}_diagonalizable", linalg.is_diagonalizable(aw.generators[name]))
    return report.build(module=m.label)


def counterexample_even(spec, eps=2):
    return _counterexample(
        "counterexample_even",
        "on the 2-twist of this E module t0t1 and t3t0 are not diagonalizable "
        "although A and B are",
        build(spec, eps),
    )


def counterexample_odd(spec, eps=0):
    return _counterexample(
        "counterexample_odd",
        "on this O module t0t1 and t3t0 are not diagonalizable although A and B are",
        build(spec, eps),
    )


def inverse_parameters(spec, eps=0):
    return inverse_parameter_isomorphisms(spec)


def twist_discriminant_suite(spec, eps):
    return twist_discriminant(build(spec, eps))


# ===== registry =====

_DAHA = ("E", "O")
_ALL = ("Vd", "E", "O")

SUITES = {
    suite.name: suite
    for suite in (
        Suite("daha_relations", "the universal DAHA relations hold on every twist",
              _DAHA, daha_relations, twisted=True),
        Suite("aw_centrality", "alpha, beta, gamma are central and match their closed forms",
              _ALL, aw_centrality, twisted=True),
        Suite("determinants", "det t0..t3 match the closed forms",
              _DAHA, determinants, twisted=True),
        Suite("t0t1_spectrum", "t0t1 has the closed-form spectrum and ladder action",
              _DAHA, t0t1_spectrum),
        Suite("irreducibility", "criterion iff Burnside",
              _ALL, irreducibility, boundary=grid.criterion_boundary),
        Suite("composition_factors", "composition factors match the prediction",
              _DAHA, composition_factors, twisted=True, irreducible_only=True),
        Suite("diagonalizable_iff_factors", "diagonalizable iff so on factors iff multiplicity-free",
              _DAHA, diagonalizable_iff_factors, twisted=True, irreducible_only=True,
              boundary=grid.predicate_boundary),
        Suite("leonard_pairs_on_factors", "pair equivalence with Leonard pairs on factors",
              _ALL, leonard_pairs_on_factors, twisted=True, irreducible_only=True,
              boundary=grid.predicate_boundary),
        Suite("leonard_triples_on_factors", "triple equivalence with Leonard triples on factors",
              _ALL, leonard_triples_on_factors, twisted=True, irreducible_only=True,
              boundary=grid.predicate_boundary),
        Suite("predicate_battery", "closed-form predicates against matrix properties",
              _ALL, predicate_battery, irreducible_only=True, boundary=grid.predicate_boundary),
        Suite("counterexample_even", "E counterexample at twist 2",
              ("E",), counterexample_even, constructor=grid.even_counterexample, fixed_twist=2,
              min_d=(("E", 3),)),
        Suite("counterexample_odd", "O counterexample",
              ("O",), counterexample_odd, constructor=grid.odd_counterexample,
              min_d=(("O", 2),)),
        Suite("inverse_parameter_isomorphisms", "E modules under k_i -> k_i^-1",
              ("E",), inverse_parameters, irreducible_only=True),
        Suite("twist_discriminant", "determinants and central scalars identify the twist",
              _DAHA, twist_discriminant_suite, twisted=True),
    )
}

CRITERION_SUITES = tuple(name for name, suite in SUITES.items() if suite.boundary is not None)


def evaluate_point(point):
    """Run the suite a GridPoint names and tag the report with the point id."""
    suite = SUITES[point.suite]
    spec = point.spec()
    report = suite.evaluate(spec, point.eps)
    report.detail["point"] = point.id
    logger.debug("%s: %s", point.id, "pass" if report.passed else "FAIL")
    return report

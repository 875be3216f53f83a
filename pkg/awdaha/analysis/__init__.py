"""Structural analysis of realizations."""

from awdaha.analysis.composition import (
    CompositionFactor,
    CompositionSeries,
    composition_series_aw,
    match_predicted_factors,
)
from awdaha.analysis.intertwiner import find_intertwiner
from awdaha.analysis.irreducibility import (
    IrreducibilityVerdict,
    burnside_irreducible,
    find_invariant_subspace,
    irreducibility_verdict,
    spin_up,
)
from awdaha.analysis.leonard import LeonardVerdict, leonard_pair_check, leonard_triple_check
from awdaha.analysis.predicates import (
    criterion,
    criterion_e,
    criterion_o,
    criterion_vd,
    diag_predicates,
    e_factor_ladder_gaps,
    predicate_claims,
    predicted_factors,
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

__all__ = [
    "CompositionFactor",
    "CompositionSeries",
    "IrreducibilityVerdict",
    "LeonardVerdict",
    "burnside_irreducible",
    "composition_series_aw",
    "criterion",
    "criterion_e",
    "criterion_o",
    "criterion_vd",
    "diag_predicates",
    "e_factor_ladder_gaps",
    "find_intertwiner",
    "find_invariant_subspace",
    "inverse_parameter_isomorphisms",
    "irreducibility_verdict",
    "leonard_pair_check",
    "leonard_triple_check",
    "match_predicted_factors",
    "predicate_claims",
    "predicted_factors",
    "spin_up",
    "t0t1_ladder_check",
    "t0t1_spectrum_check",
    "twist_discriminant",
    "verify_aw_centrality",
    "verify_daha_relations",
    "verify_determinants",
]

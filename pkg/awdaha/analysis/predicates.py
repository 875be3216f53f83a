"""
Closed-form predicates: irreducibility criteria, diagonalizability and
multiplicity-freeness conditions, closed-form spectra and the predicted
composition factors of pushforward modules.

Every membership test has the shape "x is not among q^top, q^(top-2),
..., q^bottom"; an empty ladder (top < bottom) makes the predicate true.
"""

import logging
from dataclasses import dataclass

from awdaha import linalg
from awdaha.realizations import (
    DahaSpecE,
    DahaSpecO,
    VdSpec,
    daha_pair_sum,
    evaluate_word,
    push_to_aw,
    twist,
)

logger = logging.getLogger(__name__)


def laurent_ladder(field, top, bottom, step=2):
    return [field.q_power(e) for e in range(top, bottom - 1, -step)]


def not_among(x, values):
    return all(x != v for v in values)


# ===== irreducibility criteria =====

def criterion_vd(spec):
    """abc, a^-1bc, ab^-1c, abc^-1 avoid {q^(2i-d-1) : i = 1..d}."""
    F = spec.field
    inv = F.inv
    a, b, c = spec.params
    forbidden = laurent_ladder(F, spec.d - 1, 1 - spec.d)
    products = (a * b * c, inv(a) * b * c, a * inv(b) * c, a * b * inv(c))
    return all(not_among(p, forbidden) for p in products)


def criterion_e(spec):
    """k0k1k2k3 and the three single-inverse variants avoid q^-i, i odd <= d."""
    F = spec.field
    inv = F.inv
    k0, k1, k2, k3 = spec.params
    forbidden = [F.q_power(-i) for i in range(1, spec.d + 1, 2)]
    products = (
        k0 * k1 * k2 * k3,
        k0 * inv(k1) * k2 * k3,
        k0 * k1 * inv(k2) * k3,
        k0 * k1 * k2 * inv(k3),
    )
    return all(not_among(p, forbidden) for p in products)


def criterion_o(spec):
    """k_j^2 avoid q^-i for even i in 2..d."""
    F = spec.field
    forbidden = [F.q_power(-i) for i in range(2, spec.d + 1, 2)]
    return all(not_among(k ** 2, forbidden) for k in spec.params)


def criterion(spec):
    if isinstance(spec, VdSpec):
        return criterion_vd(spec)
    if isinstance(spec, DahaSpecE):
        return criterion_e(spec)
    return criterion_o(spec)


# ===== spectra =====

def t0t1_closed_spectrum(spec):
    """Eigenvalues of t0t1 on the untwisted E or O module, with repetition."""
    F = spec.field
    k0, k1 = spec.params[0], spec.params[1]
    d = spec.d
    low = k0 * k1
    high = F.inv(k0 * k1)
    even_top = d - 1 if isinstance(spec, DahaSpecE) else d
    odd_top = d if isinstance(spec, DahaSpecE) else d - 1
    values = [low * F.q_power(i) for i in range(0, even_top + 1, 2)]
    values += [high * F.q_power(-i - 1) for i in range(1, odd_top + 1, 2)]
    return values


# ===== operators named by predicates =====

@dataclass(frozen=True)
class Operator:
    """
    An element evaluated on a realization.

    kind "product": t_i t_j; kind "pair": t_i t_j + (t_i t_j)^-1 on the
    DAHA module; kind "aw": A, B or C of the pushforward.
    """

    kind: str
    names: tuple

    @property
    def label(self):
        if self.kind == "product":
            return "".join(self.names)
        if self.kind == "pair":
            w = "".join(self.names)
            return f"{w}+({w})^-1"
        return self.names[0]

    def matrix(self, realization):
        if self.kind == "product":
            return evaluate_word(realization, self.names)
        if self.kind == "pair":
            return daha_pair_sum(realization, *self.names)
        if hasattr(realization, "generators") and self.names[0] in realization.generators:
            return realization.generators[self.names[0]]
        return push_to_aw(realization).generators[self.names[0]]


def product(i, j):
    return Operator("product", (f"t{i}", f"t{j}"))


def pair(i, j):
    return Operator("pair", (f"t{i}", f"t{j}"))


def aw(name):
    return Operator("aw", (name,))


@dataclass(frozen=True)
class PredicateClaim:
    """
    A closed-form predicate and the matrix-level property it governs.

    ``prop`` is "diagonalizable", "multiplicity_free" or
    "multiplicity_free_on_factors"; ``direction`` is "iff" or
    "sufficient" (predicate true implies the property).
    """

    name: str
    holds: bool
    operator: Operator
    twist: int
    prop: str
    direction: str


def _vd_claims(spec):
    F = spec.field
    ladder = laurent_ladder(F, 2 * spec.d - 2, 2 - 2 * spec.d)
    claims = []
    for name, x in zip(("A", "B", "C"), spec.params):
        holds = not_among(x ** 2, ladder)
        for prop in ("diagonalizable", "multiplicity_free"):
            claims.append(PredicateClaim(f"vd_{name}_{prop}", holds, aw(name), 0, prop, "iff"))
    return claims


# (operator name, parameter index) per twist: the parameter whose square
# governs that operator on the whole E module
_E_OPERATOR_PARAMETER = {
    0: (("A", 1), ("B", 3), ("C", 2)),
    1: (("A", 3), ("B", 1), ("C", 2)),
    2: (("A", 1), ("B", 3), ("C", 2)),
    3: (("A", 3), ("B", 1), ("C", 2)),
}

# operator whose parameter moves by q^(+-1) between the two factors of E^eps
_E_SHIFTED = {1: "B", 2: "C", 3: "A"}


def multiplicity_free_on_predicted(factors, name):
    """Every predicted V_delta(a,b,c) has x^2 off its own ladder, x the parameter of name."""
    index = "ABC".index(name)
    for factor in factors:
        x = factor.params[index]
        ladder = laurent_ladder(factor.field, 2 * factor.d - 2, 2 - 2 * factor.d)
        if not not_among(x ** 2, ladder):
            return False
    return True


def _e_module_ladder_holds(spec, index):
    return not_among(spec.params[index] ** 2, laurent_ladder(spec.field, spec.d - 1, 1 - spec.d))


def e_factor_ladder_gaps(spec, eps):
    """
    The shifted operator of the E^eps pushforward when it is
    multiplicity-free on every factor while its parameter square still
    sits on the module ladder q^(d-1) .. q^(1-d).

    The shifted factor ladders k^2 q^(+-2) skip q^0 when d is 1 or 3, so
    k^2 = 1 lands here. The operator can then carry a Jordan block on the
    module although each factor is multiplicity-free.
    """
    if not isinstance(spec, DahaSpecE) or eps == 0:
        return ()
    name = _E_SHIFTED[eps]
    index = dict(_E_OPERATOR_PARAMETER[eps])[name]
    if multiplicity_free_on_predicted(predicted_factors(spec, eps), name) \
            and not _e_module_ladder_holds(spec, index):
        return (name,)
    return ()


def _e_claims(spec):
    F = spec.field
    d = spec.d
    k = spec.params
    ladders = {
        "S1": laurent_ladder(F, d - 1, 1 - d),
        "S3": laurent_ladder(F, d - 3, 3 - d),
    }
    claims = []
    for i in (1, 2, 3):
        holds = not_among(k[i] ** 2, ladders["S1"])
        for op in (product(i, 0), product(0, i)):
            for prop in ("diagonalizable", "multiplicity_free"):
                claims.append(PredicateClaim(
                    f"e_{op.label}_{prop}", holds, op, 0, prop, "iff"))
    # k1 -> t2t3, k2 -> t1t3, k3 -> t1t2 pair sums, both orders
    for i, (a, b) in ((1, (2, 3)), (2, (1, 3)), (3, (1, 2))):
        holds = not_among(k[i] ** 2, ladders["S3"])
        for op in (pair(a, b), pair(b, a)):
            claims.append(PredicateClaim(
                f"e_{op.label}_diagonalizable", holds, op, 0, "diagonalizable", "sufficient"))
    for eps, rows in _E_OPERATOR_PARAMETER.items():
        factors = predicted_factors(spec, eps)
        for name, _ in rows:
            claims.append(PredicateClaim(
                f"e{eps}_{name}_multiplicity_free_on_factors",
                multiplicity_free_on_predicted(factors, name), aw(name), eps,
                "multiplicity_free_on_factors", "iff"))
    return claims


def _o_claims(spec):
    F = spec.field
    d = spec.d
    k = spec.params
    k0sq = k[0] ** 2
    full = laurent_ladder(F, -2, -2 * d)
    short = laurent_ladder(F, -2, 2 - 2 * d)
    shifted = laurent_ladder(F, -6, 2 - 2 * d)
    claims = []
    for i in (1, 2, 3):
        holds = not_among(k0sq * k[i] ** 2, full)
        for op in (product(i, 0), product(0, i)):
            for prop in ("diagonalizable", "multiplicity_free"):
                claims.append(PredicateClaim(
                    f"o_{op.label}_{prop}", holds, op, 0, prop, "iff"))
    for name, i in (("A", 1), ("B", 3), ("C", 2)):
        holds = not_among(k0sq * k[i] ** 2, short)
        claims.append(PredicateClaim(
            f"o_{name}_diagonalizable", holds, aw(name), 0, "diagonalizable", "sufficient"))
        if k0sq == F.one:
            holds = not_among(k[i] ** 2, shifted)
        else:
            holds = not_among(k0sq * k[i] ** 2, short)
        claims.append(PredicateClaim(
            f"o_{name}_multiplicity_free_on_factors", holds, aw(name), 0,
            "multiplicity_free_on_factors", "iff"))
    return claims


def predicate_claims(spec):
    """All closed-form diagonalizability claims for a spec, paired with operators."""
    if isinstance(spec, VdSpec):
        return _vd_claims(spec)
    if isinstance(spec, DahaSpecE):
        return _e_claims(spec)
    return _o_claims(spec)


def diag_predicates(spec):
    """Named boolean set of every closed-form predicate for spec."""
    return {claim.name: claim.holds for claim in predicate_claims(spec)}


def operator_property(claim, realization, factor_series=None):
    """Evaluate the matrix-level property a claim speaks about."""
    if claim.prop == "multiplicity_free_on_factors":
        index = "ABC".index(claim.operator.names[0])
        return all(
            linalg.is_multiplicity_free(f.matrices[index]) for f in factor_series.factors
        )
    M = claim.operator.matrix(realization)
    if claim.prop == "diagonalizable":
        return linalg.is_diagonalizable(M)
    return linalg.is_multiplicity_free(M)


# ===== predicted composition factors =====

def o_untwisted_equivalent(spec, eps):
    """O(k0..k3)^eps is isomorphic to O(k_eps, k_eps+1, k_eps+2, k_eps+3)."""
    k = spec.params
    return DahaSpecO(spec.d, tuple(k[(i + eps) % 4] for i in range(4)), spec.field)


def _e_predicted(spec, eps):
    F = spec.field
    d = spec.d
    k0, k1, k2, k3 = spec.params
    h = (d + 1) // 2
    qp = F.q_power

    def V(delta, a, b, c):
        return VdSpec(delta, a, b, c, F)

    if eps == 0:
        params = (k0 * k1 * qp(h), k0 * k3 * qp(h), k0 * k2 * qp(h))
        factors = [V(h, *params)]
        if d >= 3:
            factors.append(V((d - 3) // 2, *params))
        return factors
    delta = (d - 1) // 2
    if eps == 1:
        return [
            V(delta, k0 * k3 * qp(h), k0 * k1 * qp(h + 1), k0 * k2 * qp(h)),
            V(delta, k0 * k3 * qp(h), k0 * k1 * qp(h - 1), k0 * k2 * qp(h)),
        ]
    if eps == 2:
        return [
            V(delta, k0 * k1 * qp(h), k0 * k3 * qp(h), k0 * k2 * qp(h + 1)),
            V(delta, k0 * k1 * qp(h), k0 * k3 * qp(h), k0 * k2 * qp(h - 1)),
        ]
    return [
        V(delta, k0 * k3 * qp(h - 1), k0 * k1 * qp(h), k0 * k2 * qp(h)),
        V(delta, k0 * k3 * qp(h + 1), k0 * k1 * qp(h), k0 * k2 * qp(h)),
    ]


def _o_predicted(spec):
    F = spec.field
    d = spec.d
    k0, k1, k2, k3 = spec.params
    qp = F.q_power
    base = (k0 * k1, k0 * k3, k0 * k2)
    if d == 0:
        return [VdSpec(0, *base, F)]
    half = d // 2
    upper = tuple(x * qp(half + 1) for x in base)
    if k0 ** 2 == F.one:
        return [
            VdSpec(0, *base, F),
            VdSpec(half - 1, *upper, F),
            VdSpec(half - 1, *upper, F),
        ]
    return [
        VdSpec(half, *(x * qp(half) for x in base), F),
        VdSpec(half - 1, *upper, F),
    ]


def predicted_factors(spec, eps=0):
    """Parameter records of the composition factors of the pushforward of spec^eps."""
    if isinstance(spec, DahaSpecE):
        return _e_predicted(spec, eps)
    return _o_predicted(o_untwisted_equivalent(spec, eps))


def realization_for_claim(realization, claim):
    """The twist of an untwisted realization a claim is stated on."""
    return twist(realization, claim.twist)

"""
Grid points for the harness.

A point is fully described by its id string
``suite|family|d=<d>|q=<q>|<p1>,<p2>,...|eps=<eps>`` so that any report
can be recomputed from the id alone. Parameters are sampled from seeded
per-cell generators, and the points where a closed-form predicate fails
are constructed directly since random draws essentially never land on
them.
"""

import logging
from dataclasses import dataclass, field as dataclass_field

from awdaha.analysis.predicates import criterion, laurent_ladder, not_among
from awdaha.config import LAURENT_EXPONENT_MARGIN, MAX_SAMPLE_ATTEMPTS, SAMPLE_POOL
from awdaha.errors import AwDahaError, ConfigError, UnknownPoint
from awdaha.realizations import e_k0, make_spec, o_last_parameter
from awdaha.scalar_field import ScalarField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridPoint:
    suite: str
    family: str
    d: int
    q: str
    params: tuple
    eps: int = 0
    origin: str = dataclass_field(default="sampled", compare=False)

    @property
    def id(self):
        return point_id(self.suite, self.family, self.d, self.q, self.params, self.eps)

    def field(self):
        return ScalarField.from_text(self.q)

    def spec(self):
        F = self.field()
        return make_spec(self.family, self.d, [F.parse(p) for p in self.params], F)

    def sort_key(self):
        return (self.suite, self.family, self.d, self.q, self.eps, self.params)


def point_id(suite, family, d, q, params, eps):
    return f"{suite}|{family}|d={d}|q={q}|{','.join(params)}|eps={eps}"


def _field_value(part, prefix, text):
    if not part.startswith(prefix):
        raise UnknownPoint(f"point id {text!r}: expected {prefix!r} field, got {part!r}")
    return part[len(prefix):]


def parse_point_id(text):
    """
    Read a point id back into a GridPoint.

    Raises:
        UnknownPoint: the id is malformed
    """
    parts = str(text).strip().split("|")
    if len(parts) != 6:
        raise UnknownPoint(f"point id {text!r} must have six '|'-separated fields")
    suite, family, d_part, q_part, params_part, eps_part = parts
    d_text = _field_value(d_part, "d=", text)
    eps_text = _field_value(eps_part, "eps=", text)
    q = _field_value(q_part, "q=", text)
    try:
        d, eps = int(d_text), int(eps_text)
    except ValueError as exc:
        raise UnknownPoint(f"point id {text!r}: d and eps must be integers") from exc
    params = tuple(p for p in params_part.split(",") if p)
    if not params:
        raise UnknownPoint(f"point id {text!r} carries no parameters")
    return GridPoint(suite, family, d, q, params, eps, origin="replay")


def point_from_spec(suite, spec, eps=0, origin="sampled"):
    F = spec.field
    return GridPoint(
        suite, spec.family, spec.d, F.q_text,
        tuple(F.format(p) for p in spec.params), eps, origin,
    )


# ===== samplers =====

def random_rational(field, rng):
    """+-n/m with n, m from the sample pool."""
    n = rng.choice(SAMPLE_POOL)
    m = rng.choice(SAMPLE_POOL)
    sign = rng.choice((1, -1))
    return field.fraction(sign * n, m)


def random_laurent(field, rng, d):
    """A random rational times q^e, e in [-d - margin, d + margin]."""
    e = rng.randint(-d - LAURENT_EXPONENT_MARGIN, d + LAURENT_EXPONENT_MARGIN)
    return random_rational(field, rng) * field.q_power(e)


def random_scalar(field, rng, d):
    if rng.random() < 0.5:
        return random_rational(field, rng)
    return random_laurent(field, rng, d)


def sample_params(family, d, field, rng):
    if family == "Vd":
        return tuple(random_scalar(field, rng, d) for _ in range(3))
    if family == "E":
        k0 = e_k0(field, d, sign=rng.choice((1, -1)))
        return (k0,) + tuple(random_scalar(field, rng, d) for _ in range(3))
    k0, k1, k2 = (random_scalar(field, rng, d) for _ in range(3))
    return (k0, k1, k2, o_last_parameter(field, d, k0, k1, k2))


def _first_accepted(draw, accept, what):
    """Call draw() until the spec it returns is accepted."""
    for _ in range(MAX_SAMPLE_ATTEMPTS):
        try:
            spec = draw()
        except AwDahaError:
            continue
        if spec is None:
            continue
        if accept is None or accept(spec):
            return spec
    raise ConfigError(f"no acceptable {what} after {MAX_SAMPLE_ATTEMPTS} draws")


def sample_spec(family, d, field, rng, accept=None):
    return _first_accepted(
        lambda: make_spec(family, d, sample_params(family, d, field, rng), field),
        accept,
        f"{family} parameters for d={d}",
    )


# ===== constructed points where a criterion fails =====

def criterion_boundary(family, d, field, rng):
    """
    Specs where the irreducibility criterion fails by construction:
    abc = q^(2i-d-1) for V_d, k0k1k2k3 = q^-i (i odd) for E, and
    k1^2 = q^-i (i even) for O. Empty when d is too small to host one.
    """
    if family == "Vd":
        if d < 1:
            return []
        i = rng.randint(1, d)
        a, b = random_scalar(field, rng, d), random_scalar(field, rng, d)
        c = field.q_power(2 * i - d - 1) / (a * b)
        return [make_spec("Vd", d, (a, b, c), field)]
    if family == "E":
        i = rng.choice(range(1, d + 1, 2))
        k0 = e_k0(field, d, sign=rng.choice((1, -1)))
        k1, k2 = random_scalar(field, rng, d), random_scalar(field, rng, d)
        k3 = field.q_power(-i) / (k0 * k1 * k2)
        return [make_spec("E", d, (k0, k1, k2, k3), field)]
    if d < 2:
        return []
    i = rng.choice(range(2, d + 1, 2))
    k1 = field.q_power(-i // 2) * rng.choice((1, -1))
    k0, k2 = random_scalar(field, rng, d), random_scalar(field, rng, d)
    return [make_spec("O", d, (k0, k1, k2, o_last_parameter(field, d, k0, k1, k2)), field)]


def _vd_predicate_boundary(d, field, rng):
    def draw():
        a = field.q_power(d - 1) * rng.choice((1, -1))
        b, c = random_scalar(field, rng, d), random_scalar(field, rng, d)
        return make_spec("Vd", d, (a, b, c), field)

    return [_first_accepted(draw, criterion, f"irreducible V_{d} with a^2 = q^{2 * d - 2}")]


def _e_predicate_boundary(d, field, rng):
    exponents = [d - 1] + ([d - 3] if d >= 3 else [])
    specs = []
    for exponent in exponents:
        index = rng.choice((1, 2, 3))

        def draw(exponent=exponent, index=index):
            k = [e_k0(field, d, sign=rng.choice((1, -1)))]
            k += [random_scalar(field, rng, d) for _ in range(3)]
            # k_index^2 = q^exponent
            k[index] = field.q_power(exponent // 2) * rng.choice((1, -1))
            return make_spec("E", d, tuple(k), field)

        specs.append(_first_accepted(draw, criterion, f"irreducible E with k{index}^2 = q^{exponent}"))
    return specs


def _o_predicate_boundary(d, field, rng):
    def draw_product():
        k0, k2 = random_scalar(field, rng, d), random_scalar(field, rng, d)
        k1 = field.inv(k0 * field.q)
        return make_spec("O", d, (k0, k1, k2, o_last_parameter(field, d, k0, k1, k2)), field)

    def draw_unit():
        k0 = field.convert(rng.choice((1, -1)))
        k1 = field.q_power(-3) if d >= 4 else random_scalar(field, rng, d)
        k2 = random_scalar(field, rng, d)
        return make_spec("O", d, (k0, k1, k2, o_last_parameter(field, d, k0, k1, k2)), field)

    return [
        _first_accepted(draw_product, criterion, "irreducible O with k0^2 k1^2 = q^-2"),
        _first_accepted(draw_unit, criterion, "irreducible O with k0^2 = 1"),
    ]


def predicate_boundary(family, d, field, rng):
    """
    Irreducible specs where a diagonalizability predicate fails by
    construction: a^2 = q^(2d-2) for V_d, k_i^2 = q^(d-1) and q^(d-3) for
    E, k0^2 k1^2 = q^-2 for O plus an O point with k0^2 = 1.
    """
    if family == "Vd":
        return _vd_predicate_boundary(d, field, rng) if d >= 1 else []
    if family == "E":
        return _e_predicate_boundary(d, field, rng)
    return _o_predicate_boundary(d, field, rng) if d >= 2 else []


# ===== constructed counterexamples =====

def even_counterexample(d, field, rng):
    """k0 = q^-(d+1)/2, k1 = k3 = q^(d-1)/2 and k2 off the q^((3d-3)/2) .. q^((3-3d)/2) ladder."""
    k0 = e_k0(field, d)
    k1 = field.q_power((d - 1) // 2)
    ladder = laurent_ladder(field, (3 * d - 3) // 2, (3 - 3 * d) // 2)

    def draw():
        k2 = random_scalar(field, rng, d)
        if not not_among(k2, ladder):
            return None
        return make_spec("E", d, (k0, k1, k2, k1), field)

    return [_first_accepted(draw, criterion, f"E counterexample for d={d}")]


def odd_counterexample(d, field, rng):
    """(k1, k2, k3) = (q^-d/k0, q^(d-1) k0, q^-d/k0) with k0^2 off q^-2 .. q^(2-3d)."""
    ladder = laurent_ladder(field, -2, 2 - 3 * d)

    def draw():
        k0 = random_scalar(field, rng, d)
        if not not_among(k0 ** 2, ladder):
            return None
        k1 = field.q_power(-d) / k0
        return make_spec("O", d, (k0, k1, field.q_power(d - 1) * k0, k1), field)

    return [_first_accepted(draw, criterion, f"O counterexample for d={d}")]

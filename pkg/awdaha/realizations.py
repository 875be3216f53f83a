"""
Matrix realizations of the modules under study.

  - V_d(a,b,c): (d+1)-dimensional modules of the universal Askey-Wilson
    algebra, generators A, B, C.
  - E(k0,k1,k2,k3) (d odd) and O(k0,k1,k2,k3) (d even): (d+1)-dimensional
    modules of the universal DAHA of type (C1v,C1), generators t0..t3.
  - Z/4Z twists of the DAHA modules and the pushforward
    A = t1t0 + (t1t0)^-1, B = t3t0 + (t3t0)^-1, C = t2t0 + (t2t0)^-1.

Basis vectors v_0..v_d are the standard coordinate vectors and column j
of every matrix is the image of v_j. Terms mentioning v_-1 or v_{d+1}
are dropped.
"""

import logging
import re
from dataclasses import dataclass, field as dataclass_field

from awdaha import linalg
from awdaha.config import MAX_DIMENSION
from awdaha.errors import BranchOverlap, InvalidSpec, UnknownSymbol

logger = logging.getLogger(__name__)

DAHA_GENERATORS = ("t0", "t1", "t2", "t3")
AW_GENERATORS = ("A", "B", "C")
AW_CENTRAL_NAMES = ("alpha", "beta", "gamma")
DAHA_CENTRAL_NAMES = ("c0", "c1", "c2", "c3")

# pushforward images: generator -> (i, j) meaning t_i t_j + (t_i t_j)^-1
PUSHFORWARD = {"A": ("t1", "t0"), "B": ("t3", "t0"), "C": ("t2", "t0")}

WORD_SYMBOL = re.compile(r"^([A-Za-z]\w*?)(?:\^\{?(-?\d+)\}?)?$")


# ===== parameter records =====

@dataclass(frozen=True)
class CentralCharacter:
    """Scalars by which the named central elements act."""

    names: tuple
    values: tuple

    def as_dict(self, field):
        return {name: field.format(v) for name, v in zip(self.names, self.values)}

    def permuted(self, eps):
        """Relabel c_i as c_{i+eps}; used by DAHA twists."""
        values = tuple(self.values[(i + eps) % 4] for i in range(4))
        return CentralCharacter(self.names, values)


def _check_dimension(d):
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise InvalidSpec(f"d must be a nonnegative integer, got {d!r}")
    if d + 1 > MAX_DIMENSION:
        raise InvalidSpec(f"dimension {d + 1} exceeds the supported maximum {MAX_DIMENSION}")


def _check_nonzero(field, names, values):
    for name, value in zip(names, values):
        if field.is_zero(value):
            raise InvalidSpec(f"parameter {name} must be nonzero")


@dataclass(frozen=True)
class VdSpec:
    d: int
    a: object
    b: object
    c: object
    field: object

    family = "Vd"
    param_names = ("a", "b", "c")

    def __post_init__(self):
        _check_dimension(self.d)
        _check_nonzero(self.field, self.param_names, self.params)

    @property
    def params(self):
        return (self.a, self.b, self.c)

    def param_text(self):
        return ",".join(self.field.format(p) for p in self.params)

    def describe(self):
        return f"V_{self.d}({self.param_text()}) at q={self.field.q_text}"


@dataclass(frozen=True)
class DahaSpecE:
    d: int
    k: tuple
    field: object

    family = "E"
    param_names = ("k0", "k1", "k2", "k3")

    def __post_init__(self):
        _check_dimension(self.d)
        if self.d % 2 != 1:
            raise InvalidSpec(f"E modules need odd d, got d={self.d}")
        if len(self.k) != 4:
            raise InvalidSpec(f"E modules take four parameters, got {len(self.k)}")
        _check_nonzero(self.field, self.param_names, self.k)
        if self.k[0] ** 2 != self.field.q_power(-self.d - 1):
            raise InvalidSpec(
                f"E modules need k0^2 = q^{-self.d - 1}, "
                f"got k0 = {self.field.format(self.k[0])}"
            )

    @property
    def params(self):
        return tuple(self.k)

    def param_text(self):
        return ",".join(self.field.format(p) for p in self.params)

    def describe(self):
        return f"E({self.param_text()}) with d={self.d} at q={self.field.q_text}"


@dataclass(frozen=True)
class DahaSpecO:
    d: int
    k: tuple
    field: object

    family = "O"
    param_names = ("k0", "k1", "k2", "k3")

    def __post_init__(self):
        _check_dimension(self.d)
        if self.d % 2 != 0:
            raise InvalidSpec(f"O modules need even d, got d={self.d}")
        if len(self.k) != 4:
            raise InvalidSpec(f"O modules take four parameters, got {len(self.k)}")
        _check_nonzero(self.field, self.param_names, self.k)
        k0, k1, k2, k3 = self.k
        if k0 * k1 * k2 * k3 != self.field.q_power(-self.d - 1):
            raise InvalidSpec(f"O modules need k0*k1*k2*k3 = q^{-self.d - 1}")

    @property
    def params(self):
        return tuple(self.k)

    def param_text(self):
        return ",".join(self.field.format(p) for p in self.params)

    def describe(self):
        return f"O({self.param_text()}) with d={self.d} at q={self.field.q_text}"


def e_k0(field, d, sign=1):
    """The k0 = sign * q^{-(d+1)/2} forced by k0^2 = q^{-d-1} (d odd)."""
    if d % 2 != 1:
        raise InvalidSpec(f"E modules need odd d, got d={d}")
    return field.laurent(sign, -(d + 1) // 2)


def o_last_parameter(field, d, k0, k1, k2):
    """The k3 forced by k0*k1*k2*k3 = q^{-d-1}."""
    return field.q_power(-d - 1) / (k0 * k1 * k2)


def make_spec(family, d, params, field):
    """Build VdSpec / DahaSpecE / DahaSpecO from a family name."""
    params = tuple(field.convert(p) for p in params)
    if family == "Vd":
        if len(params) != 3:
            raise InvalidSpec(f"Vd takes three parameters, got {len(params)}")
        return VdSpec(d, *params, field)
    if family == "E":
        return DahaSpecE(d, params, field)
    if family == "O":
        return DahaSpecO(d, params, field)
    raise InvalidSpec(f"unknown family {family!r} (expected Vd, E or O)")


# ===== realizations =====

def _symbol_power(symbol):
    match = WORD_SYMBOL.match(symbol.strip())
    if not match:
        raise UnknownSymbol(f"cannot read word symbol {symbol!r}")
    name, exponent = match.group(1), match.group(2)
    return name, int(exponent) if exponent is not None else 1


@dataclass(frozen=True)
class AwRealization:
    """Matrices for A, B, C and, when known, the central character."""

    field: object
    A: object
    B: object
    C: object
    central: object = None
    label: str = ""
    _inverses: dict = dataclass_field(default_factory=dict, compare=False, repr=False)

    generator_names = AW_GENERATORS

    @property
    def generators(self):
        return {"A": self.A, "B": self.B, "C": self.C}

    @property
    def dim(self):
        return self.A.shape[0]

    def matrices(self):
        return [self.A, self.B, self.C]

    def inverse_of(self, name):
        if name not in self._inverses:
            self._inverses[name] = linalg.inverse(self.generators[name])
        return self._inverses[name]


@dataclass(frozen=True)
class DahaRealization:
    """
    Matrices for t0..t3 and their inverses on a (possibly twisted) E or O
    module. ``central`` holds the scalars c0..c3 by which t_i + t_i^-1 act.
    """

    spec: object
    twist: int
    generators: dict
    inverses: dict
    central: CentralCharacter

    generator_names = DAHA_GENERATORS

    @property
    def field(self):
        return self.spec.field

    @property
    def dim(self):
        return self.spec.d + 1

    @property
    def family(self):
        return self.spec.family

    @property
    def label(self):
        return f"{self.spec.describe()} twist {self.twist}"

    def matrices(self):
        return [self.generators[name] for name in DAHA_GENERATORS]

    def inverse_of(self, name):
        return self.inverses[name]


def evaluate_word(m, word):
    """
    Product of generator matrices in the given order.

    Args:
        m: AwRealization or DahaRealization
        word: iterable of symbols such as "t0", "t1^-1", "A", "B^2"

    Raises:
        UnknownSymbol: a symbol names no generator of m
    """
    result = linalg.identity(m.dim, m.field.domain)
    for symbol in word:
        name, exponent = _symbol_power(symbol)
        if name not in m.generators:
            raise UnknownSymbol(
                f"{symbol!r} is not a generator of {m.label or 'this realization'}"
            )
        base = m.generators[name] if exponent >= 0 else m.inverse_of(name)
        for _ in range(abs(exponent)):
            result = result * base
    return result


def parse_word(text):
    """Split 't0 t1^-1' or 't0,t1^-1' or 't0*t1^-1' into symbols."""
    return [s for s in re.split(r"[\s,*]+", text.strip()) if s]


def daha_pair_sum(m, left, right):
    """t_left t_right + (t_left t_right)^-1 computed from cached inverses."""
    product = m.generators[left] * m.generators[right]
    product_inv = m.inverses[right] * m.inverses[left]
    return product + product_inv


class _BasisAction:
    """Collects v_j -> sum c_i v_i rules and turns them into a matrix."""

    def __init__(self, name, n, field):
        self.name = name
        self.n = n
        self.field = field
        self.columns = {}

    def assign(self, j, image):
        image = {i: c for i, c in image.items() if 0 <= i < self.n and c}
        previous = self.columns.get(j)
        if previous is not None and previous != image:
            raise BranchOverlap(
                f"two rules give different images of v_{j} under {self.name}"
            )
        self.columns[j] = image

    def matrix(self):
        missing = [j for j in range(self.n) if j not in self.columns]
        if missing:
            raise BranchOverlap(f"{self.name} has no rule for v_{missing[0]}")
        zero = self.field.zero
        rows = [[zero] * self.n for _ in range(self.n)]
        for j, image in self.columns.items():
            for i, c in image.items():
                rows[i][j] = c
        return linalg.new_matrix(rows, self.field.domain)


def vd_central_character(spec):
    """Closed-form alpha, beta, gamma on V_d(a,b,c)."""
    F = spec.field
    inv = F.inv
    a, b, c = spec.params
    shell = F.q_power(spec.d + 1) + F.q_power(-spec.d - 1)
    sa, sb, sc = a + inv(a), b + inv(b), c + inv(c)
    return CentralCharacter(
        AW_CENTRAL_NAMES,
        (sb * sc + sa * shell, sc * sa + sb * shell, sa * sb + sc * shell),
    )


def vd_theta(field, x, d, i):
    return x * field.q_power(2 * i - d) + field.inv(x) * field.q_power(d - 2 * i)


def vd_phi(spec, i):
    F = spec.field
    qp, inv = F.q_power, F.inv
    a, b, c = spec.params
    d = spec.d
    return (
        inv(a) * inv(b) * qp(d + 1)
        * (qp(i) - qp(-i))
        * (qp(i - d - 1) - qp(d - i + 1))
        * (qp(-i) - a * b * c * qp(i - d - 1))
        * (qp(-i) - a * b * inv(c) * qp(i - d - 1))
    )


def build_vd(spec):
    """A lower bidiagonal, B upper bidiagonal, C from the gamma identity."""
    F = spec.field
    domain = F.domain
    d = spec.d
    n = d + 1
    a, b, _ = spec.params
    q = F.q

    A_rows = [[F.zero] * n for _ in range(n)]
    B_rows = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        A_rows[i][i] = vd_theta(F, a, d, i)
        B_rows[i][i] = vd_theta(F, b, d, i)
        if i + 1 < n:
            A_rows[i + 1][i] = F.one
        if i >= 1:
            B_rows[i - 1][i] = vd_phi(spec, i)
    A = linalg.new_matrix(A_rows, domain)
    B = linalg.new_matrix(B_rows, domain)

    central = vd_central_character(spec)
    gamma = central.values[2]
    qinv = F.inv(q)
    C = linalg.scalar_matrix(gamma / (q + qinv), n, domain) - linalg.scale(
        linalg.scale(A * B, q) - linalg.scale(B * A, qinv), F.inv(q ** 2 - qinv ** 2)
    )
    logger.debug("built %s", spec.describe())
    return AwRealization(F, A, B, C, central=central, label=spec.describe())


def _daha_realization(spec, actions):
    generators = {name: action.matrix() for name, action in zip(DAHA_GENERATORS, actions)}
    inverses = {name: linalg.inverse(M) for name, M in generators.items()}
    F = spec.field
    central = CentralCharacter(
        DAHA_CENTRAL_NAMES, tuple(k + F.inv(k) for k in spec.params)
    )
    logger.debug("built %s", spec.describe())
    return DahaRealization(spec, 0, generators, inverses, central)


def build_e(spec):
    """The E(k0,k1,k2,k3) module, d odd, k0^2 = q^{-d-1}."""
    F = spec.field
    qp, inv, one = F.q_power, F.inv, F.one
    d = spec.d
    n = d + 1
    k0, k1, k2, k3 = spec.params
    K = k0 * k1 * k3

    def P(i):
        return (K * qp(i) - k2) * (K * qp(i) - inv(k2))

    t0, t1, t2, t3 = (_BasisAction(name, n, F) for name in DAHA_GENERATORS)

    t0.assign(0, {0: k0})
    t0.assign(d, {d: k0})
    for i in range(2, d, 2):
        t0.assign(i, {
            i - 1: inv(k0) * qp(-i) * (one - qp(i)) * (one - k0 ** 2 * qp(i)),
            i: k0 + inv(k0) - inv(k0) * qp(-i),
        })
    for i in range(1, d - 1, 2):
        s = inv(k0) * qp(-i - 1)
        t0.assign(i, {i: s, i + 1: -s})

    t1.assign(0, {0: k1, 1: inv(k1)})
    for i in range(2, d, 2):
        t1.assign(i, {
            i - 1: -k1 * (one - qp(i)) * (one - k0 ** 2 * qp(i)),
            i: k1,
            i + 1: inv(k1),
        })
    for i in range(1, d + 1, 2):
        t1.assign(i, {i: inv(k1)})

    for i in range(0, d, 2):
        s = inv(K) * qp(-i - 1)
        t2.assign(i, {i: s, i + 1: -s})
    for i in range(1, d + 1, 2):
        t2.assign(i, {
            i - 1: P(i) / (K * qp(i)),
            i: k2 + inv(k2) - inv(K) * qp(-i),
        })

    for i in range(0, d, 2):
        t3.assign(i, {i: k3})
    for i in range(1, d - 1, 2):
        t3.assign(i, {i - 1: -inv(k3) * P(i), i: inv(k3), i + 1: k3})
    t3.assign(d, {d - 1: -inv(k3) * P(d), d: inv(k3)})

    return _daha_realization(spec, (t0, t1, t2, t3))


def build_o(spec):
    """The O(k0,k1,k2,k3) module, d even, k0 k1 k2 k3 = q^{-d-1}."""
    F = spec.field
    qp, inv, one = F.q_power, F.inv, F.one
    d = spec.d
    n = d + 1
    k0, k1, k2, k3 = spec.params

    t0, t1, t2, t3 = (_BasisAction(name, n, F) for name in DAHA_GENERATORS)

    t0.assign(0, {0: k0})
    for i in range(2, d + 1, 2):
        t0.assign(i, {
            i - 1: inv(k0) * qp(-i) * (one - qp(i)) * (one - k0 ** 2 * qp(i)),
            i: k0 + inv(k0) - inv(k0) * qp(-i),
        })
    for i in range(1, d, 2):
        s = inv(k0) * qp(-i - 1)
        t0.assign(i, {i: s, i + 1: -s})

    t1.assign(0, {0: k1, 1: inv(k1)})
    for i in range(2, d - 1, 2):
        t1.assign(i, {
            i - 1: -k1 * (one - qp(i)) * (one - k0 ** 2 * qp(i)),
            i: k1,
            i + 1: inv(k1),
        })
    for i in range(1, d, 2):
        t1.assign(i, {i: inv(k1)})
    t1.assign(d, {d - 1: -k1 * (one - qp(d)) * (one - k0 ** 2 * qp(d)), d: k1})

    for i in range(0, d - 1, 2):
        s = k2 * qp(d - i)
        t2.assign(i, {i: s, i + 1: -s})
    for i in range(1, d, 2):
        t2.assign(i, {
            i - 1: -k2 * (one - inv(k2) ** 2 * qp(i - d - 1)) * (one - qp(d - i + 1)),
            i: k2 + inv(k2) - k2 * qp(d - i + 1),
        })
    t2.assign(d, {d: k2})

    for i in range(0, d + 1, 2):
        t3.assign(i, {i: k3})
    for i in range(1, d, 2):
        t3.assign(i, {
            i - 1: -inv(k3) * (one - inv(k2) ** 2 * qp(i - d - 1)) * (one - qp(i - d - 1)),
            i: inv(k3),
            i + 1: k3,
        })

    return _daha_realization(spec, (t0, t1, t2, t3))


def build(spec, twist_label=0):
    """Dispatch on the spec type; DAHA modules are twisted by twist_label."""
    if isinstance(spec, VdSpec):
        if twist_label:
            raise InvalidSpec("twists apply to E and O modules only")
        return build_vd(spec)
    if isinstance(spec, DahaSpecE):
        return twist(build_e(spec), twist_label)
    if isinstance(spec, DahaSpecO):
        return twist(build_o(spec), twist_label)
    raise InvalidSpec(f"cannot build a realization from {type(spec).__name__}")


def twist(m, eps):
    """On the twisted module t_i acts as t_{i+eps} did on m."""
    if eps not in (0, 1, 2, 3):
        raise InvalidSpec(f"twist label must be 0..3, got {eps!r}")
    if eps == 0:
        return m
    names = DAHA_GENERATORS
    generators = {names[i]: m.generators[names[(i + eps) % 4]] for i in range(4)}
    inverses = {names[i]: m.inverses[names[(i + eps) % 4]] for i in range(4)}
    return DahaRealization(
        m.spec, (m.twist + eps) % 4, generators, inverses, m.central.permuted(eps)
    )


def push_to_aw(m):
    """Pushforward along A -> t1t0 + (t1t0)^-1 and its B, C companions."""
    images = {name: daha_pair_sum(m, *pair) for name, pair in PUSHFORWARD.items()}
    return AwRealization(m.field, images["A"], images["B"], images["C"],
                         central=None, label=f"pushforward of {m.label}")

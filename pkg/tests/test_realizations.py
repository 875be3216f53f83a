import pytest
from sympy import QQ

from awdaha import linalg, realizations
from awdaha.errors import BranchOverlap, InvalidSpec, UnknownSymbol
from awdaha.realizations import (
    build,
    build_e,
    build_o,
    build_vd,
    evaluate_word,
    make_spec,
    parse_word,
    push_to_aw,
    twist,
)
from awdaha.scalar_field import ScalarField


def entries(M):
    return [[QQ.convert(e) for e in row] for row in M.to_list()]


@pytest.fixture
def q4():
    return ScalarField.from_text("4")


@pytest.fixture
def e_small(q4):
    """E with d = 1, q = 4, k0 = q^-1 and k1 = k2 = k3 = 1."""
    return make_spec("E", 1, ["1/4", 1, 1, 1], q4)


@pytest.fixture
def o_small(q2):
    return make_spec("O", 2, [2, 3, 5, "1/240"], q2)


def test_v0_is_scalar(q2):
    vd = build_vd(make_spec("Vd", 0, [2, 3, 5], q2))
    assert entries(vd.A) == [[QQ(5, 2)]]
    assert entries(vd.B) == [[QQ(10, 3)]]
    assert entries(vd.C) == [[QQ(26, 5)]]


def test_v1_is_bidiagonal(q2):
    vd = build_vd(make_spec("Vd", 1, [2, 3, 5], q2))
    A = entries(vd.A)
    assert A[0] == [QQ(2), QQ(0)]
    assert A[1] == [QQ(1), QQ(17, 4)]
    B = entries(vd.B)
    assert B[1][0] == 0
    assert B[0][0] == QQ(13, 6)
    assert B[1][1] == QQ(37, 6)
    assert B[0][1] != 0


def test_e_module_smallest_case(e_small):
    m = build_e(e_small)
    assert entries(m.generators["t0"]) == [[QQ(1, 4), 0], [0, QQ(1, 4)]]
    assert entries(m.generators["t1"]) == [[1, 0], [1, 1]]
    assert entries(m.generators["t2"]) == [[1, 0], [-1, 1]]
    assert entries(m.generators["t3"]) == [[1, 0], [0, 1]]


def test_inverses_are_cached_and_correct(o_small):
    m = build_o(o_small)
    I = linalg.identity(m.dim, m.field.domain)
    for name in realizations.DAHA_GENERATORS:
        assert m.generators[name] * m.inverse_of(name) == I


def test_o_determinants_are_the_parameters(o_small):
    m = build_o(o_small)
    for name, k in zip(realizations.DAHA_GENERATORS, o_small.params):
        assert linalg.determinant(m.generators[name]) == k


def test_spec_validation(q2):
    with pytest.raises(InvalidSpec):
        make_spec("E", 2, [1, 1, 1, 1], q2)
    with pytest.raises(InvalidSpec):
        make_spec("E", 1, [2, 1, 1, 1], q2)
    with pytest.raises(InvalidSpec):
        make_spec("O", 1, [1, 1, 1, 1], q2)
    with pytest.raises(InvalidSpec):
        make_spec("O", 2, [1, 1, 1, 1], q2)
    with pytest.raises(InvalidSpec):
        make_spec("Vd", 1, [0, 1, 1], q2)
    with pytest.raises(InvalidSpec):
        make_spec("Vd", -1, [1, 1, 1], q2)
    with pytest.raises(InvalidSpec):
        make_spec("Vd", 1, [1, 1], q2)
    with pytest.raises(InvalidSpec):
        make_spec("X", 1, [1, 1, 1], q2)


def test_forced_parameters(q2):
    assert realizations.e_k0(q2, 3) == QQ(1, 4)
    assert realizations.e_k0(q2, 3, sign=-1) == QQ(-1, 4)
    k3 = realizations.o_last_parameter(q2, 0, q2.convert(2), q2.convert(3), q2.convert(5))
    assert k3 == QQ(1, 60)
    with pytest.raises(InvalidSpec):
        realizations.e_k0(q2, 2)


def test_conflicting_basis_rules_are_rejected(q2):
    action = realizations._BasisAction("t0", 2, q2)
    action.assign(0, {0: q2.one})
    action.assign(0, {0: q2.one})
    with pytest.raises(BranchOverlap):
        action.assign(0, {1: q2.one})
    with pytest.raises(BranchOverlap):
        action.matrix()


def test_twist_relabels_generators(o_small):
    m = build_o(o_small)
    for eps in range(4):
        twisted = twist(m, eps)
        assert twisted.twist == eps
        for i, name in enumerate(realizations.DAHA_GENERATORS):
            source = realizations.DAHA_GENERATORS[(i + eps) % 4]
            assert twisted.generators[name] == m.generators[source]
            assert twisted.central.values[i] == m.central.values[(i + eps) % 4]
    back = twist(twist(m, 1), 3)
    assert back.twist == 0
    assert back.generators == m.generators


def test_build_rejects_twisted_vd(q2):
    with pytest.raises(InvalidSpec):
        build(make_spec("Vd", 1, [2, 3, 5], q2), 1)
    with pytest.raises(InvalidSpec):
        twist(build_e(make_spec("E", 1, ["1/2", 1, 2, 3], q2)), 4)


def test_pushforward_uses_pair_sums(o_small):
    m = build(o_small, 1)
    aw = push_to_aw(m)
    t = m.generators
    for name, (left, right) in realizations.PUSHFORWARD.items():
        product = t[left] * t[right]
        assert aw.generators[name] == product + linalg.inverse(product)


def test_evaluate_word(e_small):
    m = build_e(e_small)
    I = linalg.identity(2, m.field.domain)
    assert evaluate_word(m, ["t1", "t1^-1"]) == I
    assert evaluate_word(m, ["t1^2"]) == m.generators["t1"] * m.generators["t1"]
    assert evaluate_word(m, []) == I
    with pytest.raises(UnknownSymbol):
        evaluate_word(m, ["A"])
    with pytest.raises(UnknownSymbol):
        evaluate_word(m, ["t0^"])


def test_parse_word():
    assert parse_word("t0 t1^-1,t2*t3") == ["t0", "t1^-1", "t2", "t3"]
    assert parse_word("  ") == []


def test_symbolic_e_module_product(q_symbolic):
    spec = make_spec("E", 1, ["q^-1", 2, 3, 5], q_symbolic)
    m = build(spec)
    product = evaluate_word(m, realizations.DAHA_GENERATORS)
    assert linalg.scalar_value(product) == q_symbolic.q_power(-1)


@pytest.mark.parametrize("eps, words", [
    (1, (("t2", "t1"), ("t0", "t1"), ("t3", "t1"))),
    (2, (("t3", "t2"), ("t1", "t2"), ("t0", "t2"))),
    (3, (("t0", "t3"), ("t2", "t3"), ("t1", "t3"))),
])
def test_pushforward_aliases_on_twists(q2, eps, words):
    m = build_e(make_spec("E", 3, ["1/4", 2, 3, 5], q2))
    aw = push_to_aw(twist(m, eps))
    for name, (left, right) in zip(("A", "B", "C"), words):
        assert aw.generators[name] == realizations.daha_pair_sum(m, left, right)

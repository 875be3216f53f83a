import pytest

from awdaha import linalg
from awdaha.analysis import irreducibility
from awdaha.analysis.irreducibility import (
    algebra_dimension,
    burnside_irreducible,
    find_invariant_subspace,
    irreducibility_verdict,
    spin_up,
)
from awdaha.realizations import build, make_spec
from awdaha.scalar_field import ScalarField


def mat(rows, field):
    return linalg.new_matrix([[field.convert(e) for e in row] for row in rows], field.domain)


def vec(values, field):
    return [field.convert(e) for e in values]


def test_algebra_dimension_of_diagonal_matrix(q2):
    D = mat([[1, 0], [0, 2]], q2)
    assert algebra_dimension([D]) == 2
    assert not burnside_irreducible([D])


def test_full_matrix_algebra(q2):
    X = mat([[0, 1], [0, 0]], q2)
    Y = mat([[0, 0], [1, 0]], q2)
    assert algebra_dimension([X, Y]) == 4
    assert burnside_irreducible([X, Y])


def test_one_dimensional_modules_are_irreducible(q2):
    assert burnside_irreducible([mat([[3]], q2)])
    assert find_invariant_subspace([mat([[3]], q2)]) is None


def test_spin_up(q2):
    J = mat([[1, 0, 0], [1, 1, 0], [0, 0, 2]], q2)
    W = spin_up([J], [vec([1, 0, 0], q2)])
    assert W.dim == 2
    assert W.contains(vec([0, 1, 0], q2))
    assert not W.contains(vec([0, 0, 1], q2))
    assert W.is_invariant([J])


def test_annihilator(q2):
    W = linalg.Subspace.span([vec([1, 1, 0], q2)], 3, q2.domain)
    perp = irreducibility.annihilator(W, q2.domain)
    assert perp.dim == 2
    assert perp.contains(vec([1, -1, 0], q2))
    assert perp.contains(vec([0, 0, 1], q2))


def test_e_example_has_a_witness():
    q4 = ScalarField.from_text("4")
    spec = make_spec("E", 1, ["1/4", 1, 1, 1], q4)
    verdict = irreducibility_verdict(spec, build(spec))
    assert verdict.by_criterion is False
    assert verdict.by_burnside is False
    assert verdict.agrees
    assert verdict.witness.dim == 1
    assert verdict.witness.contains(vec([0, 1], q4))
    assert verdict.witness.is_invariant(build(spec).matrices())
    assert verdict.to_dict(q4)["witness"] == [["0", "1"]]


def test_irreducible_vd(q2):
    spec = make_spec("Vd", 1, [2, 3, 5], q2)
    verdict = irreducibility_verdict(spec, build(spec))
    assert verdict.by_criterion and verdict.by_burnside
    assert verdict.witness is None


def test_reducible_vd_keeps_the_top_vector(q2):
    # abc = 1 kills the (0, 1) entry of B
    spec = make_spec("Vd", 1, [2, 3, "1/6"], q2)
    m = build(spec)
    verdict = irreducibility_verdict(spec, m)
    assert verdict.agrees and not verdict.by_burnside
    assert verdict.witness.contains(vec([0, 1], q2))
    assert verdict.witness.is_invariant(m.matrices())


@pytest.mark.parametrize("eps", [0, 1, 2, 3])
def test_criterion_agrees_with_burnside_on_e(q2, eps):
    for k in (["1/4", 2, 3, 5], ["1/4", 2, 3, "1/3"]):
        spec = make_spec("E", 3, k, q2)
        verdict = irreducibility_verdict(spec, build(spec, eps))
        assert verdict.agrees


def test_criterion_agrees_with_burnside_on_o(q2):
    for k in ([2, 3, 5, "1/240"], [3, "1/2", 5, "1/60"]):
        spec = make_spec("O", 2, k, q2)
        verdict = irreducibility_verdict(spec, build(spec))
        assert verdict.agrees
        if not verdict.by_burnside:
            assert verdict.witness.is_proper()

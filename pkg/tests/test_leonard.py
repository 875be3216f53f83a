from sympy import QQ

from awdaha import linalg
from awdaha.analysis.leonard import leonard_pair_check, leonard_triple_check, path_order
from awdaha.realizations import build, make_spec


def mat(rows, field):
    return linalg.new_matrix([[field.convert(e) for e in row] for row in rows], field.domain)


def test_path_order_of_tridiagonal(q2):
    T = mat([[1, 2, 0], [3, 1, 4], [0, 5, 1]], q2)
    assert path_order(T) == [0, 1, 2]


def test_path_order_follows_a_permuted_path(q2):
    T = mat([[0, 0, 1], [0, 0, 1], [1, 1, 0]], q2)
    assert path_order(T) == [0, 2, 1]


def test_path_order_rejects(q2):
    assert path_order(mat([[0, 1], [0, 0]], q2)) is None
    assert path_order(mat([[1, 0], [0, 1]], q2)) is None
    assert path_order(mat([[0, 1, 1], [1, 0, 1], [1, 1, 0]], q2)) is None
    assert path_order(mat([[7]], q2)) == [0]


def test_vd_gives_a_leonard_pair(q2):
    vd = build(make_spec("Vd", 1, [2, 3, 5], q2))
    verdict = leonard_pair_check(vd.A, vd.B)
    assert verdict.result
    assert verdict.multiplicity_free == {"L": True, "L*": True}
    assert sorted(verdict.certificates["L"]) == [QQ(2), QQ(17, 4)]
    assert sorted(verdict.certificates["L*"]) == [QQ(13, 6), QQ(37, 6)]


def test_vd_gives_a_leonard_triple(q2):
    vd = build(make_spec("Vd", 2, [3, 5, 7], q2))
    verdict = leonard_triple_check(vd.A, vd.B, vd.C)
    assert verdict.result, verdict.reason
    assert set(verdict.certificates) == {"A", "B", "C"}


def test_repeated_eigenvalue_is_not_leonard(q2):
    I = linalg.identity(2, q2.domain)
    B = mat([[1, 1], [1, 2]], q2)
    verdict = leonard_pair_check(I, B)
    assert not verdict.result
    assert verdict.multiplicity_free["L"] is False
    assert verdict.reason.startswith("L:")


def test_reducible_vd_is_not_leonard(q2):
    vd = build(make_spec("Vd", 1, [2, 3, "1/6"], q2))
    assert not leonard_pair_check(vd.A, vd.B).result


def test_verdict_is_invariant_under_conjugation_and_scaling(q2):
    vd = build(make_spec("Vd", 2, [3, 5, 7], q2))
    P = mat([[1, 1, 0], [0, 1, 2], [0, 0, 1]], q2)
    P_inv = linalg.inverse(P)
    A, B = P * vd.A * P_inv, P * vd.B * P_inv
    assert leonard_pair_check(A, B).result
    assert leonard_pair_check(linalg.scale(A, q2.convert(3)), B).result
    assert leonard_pair_check(vd.A, vd.B).result


def test_to_dict_formats_certificates(q2):
    vd = build(make_spec("Vd", 1, [2, 3, 5], q2))
    data = leonard_pair_check(vd.A, vd.B).to_dict(q2)
    assert sorted(data["certificates"]["L"]) == ["17/4", "2"]
    assert data["reason"] is None

import pytest

from errors import BadParams, InputFormatError, NonTerminating, ShapeMismatch
from exactfield import CycloNumber
from tamefrob import (
    CombiPolynomial,
    bounded_tuples,
    build_tame_quotient,
    check_caseI_constraints,
    check_H_identities,
    check_vanishing_criterion,
    combi_poly,
    confluence_check,
    family_rules,
    h1,
    is_diagonal,
    k_from_json,
    k_to_json,
    normal_form,
    normal_words,
    reduce_word,
    solve_K,
)
from tensorcore import MatrixOverAlgebra, verify_axioms


@pytest.mark.parametrize(
    "family, params, expected_dim",
    [
        ("F1", {"a": CycloNumber.one()}, 4),
        ("F1", {"a": CycloNumber.zeta(3)}, 4),
        ("F2", {"a": CycloNumber.one(), "m": 1}, 4),
        ("F2", {"a": CycloNumber.rational(-1), "m": 2}, 8),
        ("F2", {"a": CycloNumber.zeta(4), "m": 3}, 12),
        ("F3", {"n": 2}, 4),
        ("F3", {"n": 4}, 8),
        ("F4", {"m": 1}, 6),
        ("F4", {"m": 2}, 10),
    ],
)
def test_quotients_are_local_frobenius(family, params, expected_dim):
    h, presented = build_tame_quotient(family, **params)
    assert h.dim == presented.dim == expected_dim
    assert presented.frobenius.is_frobenius
    assert presented.frobenius.is_local
    assert verify_axioms(h, "algebra").passed
    assert confluence_check(presented, samples=200, seed=7)


def test_f2_basis_and_rewriting():
    a = CycloNumber.zeta(4)
    h, presented = build_tame_quotient("F2", a=a, m=1)
    assert presented.nf_basis == ["", "x", "y", "yx"]
    assert h.labels == ["1", "x", "y", "yx"]
    assert normal_form(presented, "xy") == {"yx": a}
    assert normal_form(presented, "xyx") == {}
    assert normal_form(presented, "xy", rightmost=True) == {"yx": a}
    assert presented.relations() == ["xx -> 0", "yy -> 0", f"xy -> ({a})*yx"]
    assert presented.to_json()["basis"] == ["1", "x", "y", "yx"]
    assert presented.frobenius.top_word == "yx"
    with pytest.raises(BadParams):
        normal_form(presented, "xz")


@pytest.mark.parametrize(
    "family, params",
    [
        ("F5", {}),
        ("F1", {}),
        ("F1", {"a": CycloNumber.zero()}),
        ("F2", {"a": CycloNumber.one(), "m": 0}),
        ("F3", {"n": 1}),
        ("F4", {}),
    ],
)
def test_bad_family_parameters(family, params):
    with pytest.raises(BadParams):
        family_rules(family, **params)


def test_runaway_rewriting_is_stopped():
    one = CycloNumber.one()
    with pytest.raises(NonTerminating):
        reduce_word("x", [("x", "xx", one)], max_steps=50)
    with pytest.raises(NonTerminating):
        normal_words([], limit=5, letters="x")


def test_gaussian_binomial_shape():
    poly = h1(4, 2)
    assert poly.coeffs == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert str(poly) == "1*t^0 + 1*t^1 + 2*t^2 + 1*t^3 + 1*t^4"
    assert poly.to_json()["terms"][2] == [2, 2]
    assert poly.evaluate(CycloNumber.one()) == 6
    assert list(bounded_tuples(2, 1)) == [(0, 0), (0, 1), (1, 0)]


@pytest.mark.parametrize("m", range(2, 9))
def test_three_descriptions_agree(m):
    assert check_H_identities(m)
    for l in range(1, m):
        assert combi_poly("H1", m, l) == combi_poly("H2", m, l) == combi_poly("H3", m, l)


def test_identity_check_detects_a_wrong_builder():
    assert not check_H_identities(4, {"H3": lambda m, l: CombiPolynomial({0: 1})})


def test_combi_poly_arguments():
    with pytest.raises(BadParams):
        combi_poly("H4", 3, 1)
    with pytest.raises(BadParams):
        combi_poly("H1", 3, 3)
    with pytest.raises(BadParams):
        check_vanishing_criterion(1, CycloNumber.one())


@pytest.mark.parametrize("n", range(1, 9))
def test_vanishing_matches_primitivity(n):
    for m in range(2, 9):
        for k in range(n):
            z = CycloNumber.zeta(n, k)
            primitive = z != 1 and (z ** m).is_one() and all(not (z ** d).is_one() for d in range(1, m))
            assert check_vanishing_criterion(m, z) == primitive, (m, n, k)
    assert not check_vanishing_criterion(3, CycloNumber.rational(2))


def _diag(order, *entries):
    zero = CycloNumber.zero(order)
    return [[CycloNumber.coerce(entries[i], order) if i == j else zero for j in range(4)] for i in range(4)]


def test_diagonal_constraints_pass_for_f2():
    i = CycloNumber.zeta(4)
    K = _diag(4, -1, i, i, -1)
    assert is_diagonal(K)
    report = check_caseI_constraints(K, 2, CycloNumber.one(4))
    assert report.passed
    assert "alpha2 and alpha3" in report.get("scalar_a").detail


def test_diagonal_constraints_failures():
    i = CycloNumber.zeta(4)
    K = _diag(4, -1, i, i, -1)
    assert not check_caseI_constraints(K, 2, CycloNumber.one(4), family="F3").get("family").passed
    assert check_caseI_constraints(K, 2, CycloNumber.rational(-1, 4)).get("scalar_a").passed is False
    assert check_caseI_constraints(K, 4, CycloNumber.one(4)).get("primitive_root").passed is False
    bad_corner = _diag(4, 1, i, i, -1)
    assert check_caseI_constraints(bad_corner, 2, CycloNumber.one(4)).get("alpha1_alpha4").passed is False


def test_non_diagonal_k_is_not_applicable():
    K = _diag(1, -1, -1, -1, -1)
    K[0][1] = CycloNumber.one()
    report = check_caseI_constraints(K, 1, CycloNumber.one())
    assert report.get("diagonal").status == "not_applicable"
    assert report.passed


def test_k_json():
    K = _diag(4, -1, CycloNumber.zeta(4), 1, -1)
    assert k_from_json(k_to_json(K), 4) == K
    with pytest.raises(ShapeMismatch):
        k_from_json([[1, 0], [0, 1]])
    with pytest.raises(InputFormatError):
        k_from_json([[True] * 4] * 4)


def test_dual_dihedral_k_is_minus_identity(d8star):
    K = solve_K(d8star.C, d8star.X)
    assert K == _diag(d8star.hopf.order, -1, -1, -1, -1)
    report = check_caseI_constraints(K, 1, CycloNumber.rational(-1))
    assert report.get("primitive_root").passed


def test_solve_k_shapes(sweedler):
    g = MatrixOverAlgebra.from_labels(sweedler.hopf, [[{"g": 1}]])
    with pytest.raises(ShapeMismatch):
        solve_K(g, g)


def test_dual_quaternion_k_is_minus_identity(catalog):
    q8star = catalog("q8star")
    assert solve_K(q8star.C, q8star.X) == _diag(q8star.hopf.order, -1, -1, -1, -1)


@pytest.mark.parametrize(
    "family, params, expected_dim",
    [("F2", {"a": CycloNumber.rational(-1), "m": m}, 4 * m) for m in (4, 5)]
    + [("F3", {"n": n}, 2 * n) for n in (3, 5, 6)]
    + [("F4", {"m": m}, 4 * m + 2) for m in (3, 4, 5)],
)
def test_family_dimensions_across_the_range(family, params, expected_dim):
    h, presented = build_tame_quotient(family, **params)
    assert h.dim == presented.dim == expected_dim
    assert presented.frobenius.is_local

import pytest

from errors import CarrierMismatch, DimensionMismatch, InputFormatError, ShapeMismatch
from exactfield import CycloNumber, vectors_equal
from tensorcore import (
    CheckResult,
    HopfData,
    MatrixOverAlgebra,
    antipode_map,
    convolve,
    dualize,
    identity_map,
    map_from_json,
    map_to_json,
    matrix_odot,
    ordered_map,
    unit_counit_map,
    verify_axioms,
    verify_matrix_kind,
)


def test_group_algebra_is_hopf(kz2):
    report = verify_axioms(kz2, "hopf")
    assert report.passed
    assert report.get("generators").passed
    assert report.get("antipode_right").status == "passed"


def test_exhaustive_and_threaded_runs_agree(sweedler):
    h = sweedler.hopf
    plain = verify_axioms(h, "hopf")
    full = verify_axioms(h, "hopf", exhaustive=True, threads=2)
    assert plain.passed and full.passed
    assert [c.name for c in full.checks if c.name != "generators"] == \
        [c.name for c in plain.checks if c.name != "generators"]


def test_broken_antipode_reports_witness(kz2):
    one = CycloNumber.one()
    broken = kz2.with_tables(mult={**kz2.mult, (1, 1): {1: one}})
    report = verify_axioms(broken, "hopf")
    assert not report.passed
    assert report.get("associativity").passed
    assert report.get("antipode_left").witness == [1]


def test_broken_associativity_is_caught(sweedler):
    h = sweedler.hopf
    x = h.index_of("x")
    one = CycloNumber.one(h.order)
    broken = h.with_tables(mult={**h.mult, (x, x): {h.index_of("1"): one}})
    report = verify_axioms(broken, "algebra", exhaustive=True)
    check = report.get("associativity")
    assert check.status == "failed"
    assert len(check.witness) == 3
    assert len(check.witnesses) >= 1


def test_missing_tables_fail_the_level(kz2):
    algebra_only = kz2.with_tables(comult=None, counit=None, antipode=None, level="algebra")
    assert verify_axioms(algebra_only, "algebra").passed
    report = verify_axioms(algebra_only, "bialgebra")
    assert report.get("tables").passed is False


def test_missing_antipode_lowers_level(kz2):
    lowered = kz2.with_tables(antipode=None)
    assert lowered.level == "bialgebra"
    assert verify_axioms(lowered, "bialgebra").passed


def test_out_of_range_tables_are_rejected():
    one = CycloNumber.one()
    with pytest.raises(DimensionMismatch):
        HopfData(dim=1, mult={(0, 0): {3: one}}, unit={0: one}, level="algebra")


def test_from_json_rejects_malformed_documents():
    with pytest.raises(InputFormatError):
        HopfData.from_json({"n": 1, "labels": ["1"]})
    with pytest.raises(DimensionMismatch):
        HopfData.from_json({"n": 1, "dim": 2, "unit": [1], "level": "algebra", "mult": []})


def test_json_preserves_tables(sweedler):
    h = sweedler.hopf
    again = HopfData.from_json(h.to_json())
    assert again.fingerprint() == h.fingerprint()
    assert verify_axioms(again, "hopf").passed


def test_double_dual_is_the_original(sweedler):
    h = sweedler.hopf
    dual = dualize(h)
    assert dual.labels[0].endswith("*")
    assert verify_axioms(dual, "hopf").passed
    assert dualize(dual).to_json() == h.to_json()


def test_dual_of_algebra_is_coalgebra(kz2):
    algebra_only = kz2.with_tables(comult=None, counit=None, antipode=None, level="algebra")
    dual = dualize(algebra_only)
    assert dual.level == "coalgebra"
    assert verify_axioms(dual, "coalgebra").passed


def test_antipode_is_convolution_inverse_of_identity(sweedler):
    h = sweedler.hopf
    expected = unit_counit_map(h)
    for left, right in ((antipode_map(h), identity_map(h.dim, h.order)),
                        (identity_map(h.dim, h.order), antipode_map(h))):
        result = convolve(left, right, h)
        assert set(result) == set(expected)
        assert all(vectors_equal(result[i], expected[i]) for i in expected)


def test_convolution_checks_map_dimensions(kz2):
    with pytest.raises(DimensionMismatch):
        convolve(identity_map(3), identity_map(2), kz2)


def test_map_json_layout():
    f = identity_map(3)
    data = map_to_json(f, 3, 3)
    assert data["entries"][0][:2] == [0, 0]
    decoded, rows, cols = map_from_json(data)
    assert (rows, cols) == (3, 3)
    assert decoded == f
    with pytest.raises(InputFormatError):
        map_from_json({"rows": 1})


def test_matrix_odot_shapes_and_blocks(kz2):
    A = MatrixOverAlgebra.from_labels(kz2, [[{"1": 1}, {"g": 1}]])
    B = MatrixOverAlgebra.from_labels(kz2, [[{"g": 1}], [{"1": 1}], [{"g": 1}]])
    product = matrix_odot(A, B)
    assert (product.rows, product.cols) == (3, 2)
    assert product[0, 1] == {0: CycloNumber.one()}
    prime = matrix_odot(A, B, "odot_prime")
    assert (prime.rows, prime.cols) == (3, 2)
    with pytest.raises(ValueError):
        matrix_odot(A, B, "kron")


def test_matrix_products_need_a_common_carrier(kz2, sweedler):
    A = MatrixOverAlgebra.identity(kz2)
    B = MatrixOverAlgebra.identity(sweedler.hopf)
    with pytest.raises(CarrierMismatch):
        matrix_odot(A, B)


def test_ragged_matrices_are_rejected(kz2):
    with pytest.raises(ShapeMismatch):
        MatrixOverAlgebra(kz2, [[{}], [{}, {}]])


def test_multiplicative_and_basic_matrices(kz2):
    diag = MatrixOverAlgebra.from_labels(kz2, [[{"1": 1}, {}], [{}, {"g": 1}]])
    assert verify_matrix_kind(diag, "multiplicative")
    basic = verify_matrix_kind(diag, "basic_multiplicative")
    assert not basic
    assert basic.independent is False
    assert verify_matrix_kind(MatrixOverAlgebra.from_labels(kz2, [[{"g": 1}]]), "basic_multiplicative")
    not_mult = MatrixOverAlgebra.from_labels(kz2, [[{"1": 1, "g": 1}]])
    assert verify_matrix_kind(not_mult, "multiplicative").witness == [0, 0]


def test_skew_primitive_matrix(sweedler):
    h = sweedler.hopf
    g = MatrixOverAlgebra.from_labels(h, [[{"g": 1}]])
    one = MatrixOverAlgebra.from_labels(h, [[{"1": 1}]])
    x = MatrixOverAlgebra.from_labels(h, [[{"x": 1}]])
    assert verify_matrix_kind(x, "primitive", C=g, D=one)
    assert not verify_matrix_kind(x, "primitive", C=one, D=g)
    with pytest.raises(ShapeMismatch):
        verify_matrix_kind(x, "primitive", C=g)


def test_check_result_status_and_order():
    assert CheckResult(name="n/a", passed=None).status == "not_applicable"
    failing = CheckResult(name="f", passed=False, witnesses=[[2], [5]])
    assert failing.witness == [2]
    assert failing.to_dict()["witnesses"] == [[2], [5]]
    assert ordered_map(lambda v: v * v, list(range(20)), threads=4) == [v * v for v in range(20)]

import pytest

from coradical import (
    Subspace,
    check_coradically_graded,
    coradical,
    coradical_blocks,
    coradical_filtration,
    dual_chevalley_property,
    grading_report,
    is_split_block,
    is_nilpotent_ideal,
    is_subcoalgebra,
    jacobson_radical,
    restrict_coalgebra,
    simple_decomposition,
    trace_form,
    wedge,
)
from bosonize import cyclic_group, dihedral_group, dual_group_algebra, quaternion_group
from errors import (
    DimensionMismatch,
    FieldTooSmall,
    InputFormatError,
    InvalidHints,
    NonTerminating,
    NotCosemisimple,
)
from exactfield import CycloNumber


def _basis_span(h, *labels):
    return Subspace.of_basis_vectors([h.index_of(label) for label in labels], h.dim, h.order)


class TestSubspace:
    def test_span_is_canonical(self):
        one = CycloNumber.one()
        a = Subspace.span([{0: one, 1: one}, {1: one}], 3)
        b = Subspace.span([{0: one}, {1: one * 2}], 3)
        assert a == b
        assert a.pivots == (0, 1)
        assert a.contains({0: one * 5, 1: -one})
        assert not a.contains({2: one})

    def test_equal_spans_hash_alike(self):
        one = CycloNumber.one()
        a = Subspace.span([{0: one, 1: one}, {1: one}], 3)
        b = Subspace.span([{0: one}, {1: one * 2}], 3)
        c = Subspace.span([{0: one, 2: one}], 3)
        assert hash(a) == hash(b)
        assert len({a, b, c}) == 2

    def test_sum_annihilator_and_coordinates(self):
        one = CycloNumber.one()
        u = Subspace.of_basis_vectors([0], 4)
        v = Subspace.span([{1: one, 2: one}], 4)
        total = u + v
        assert total.dim == 2
        assert total.annihilator().dim == 2
        vec = {0: one * 3, 1: one * 2, 2: one * 2}
        assert total.from_coordinates(total.coordinates(vec)) == vec

    def test_json_and_bad_vectors(self):
        one = CycloNumber.one(4)
        space = Subspace.span([{0: one, 2: CycloNumber.zeta(4)}], 3, 4)
        assert Subspace.from_json(space.to_json(), 4) == space
        assert "rows" not in space.to_json(full=False)
        with pytest.raises(DimensionMismatch):
            Subspace.span([{5: one}], 3, 4)
        with pytest.raises(InputFormatError):
            Subspace.from_json({"rows": []})


def test_trace_form_of_group_algebra(kz2):
    rows = trace_form(kz2)
    assert rows[0] == {0: 2}
    assert rows[1] == {1: 2}
    assert jacobson_radical(kz2).dim == 0


def test_sweedler_radical_is_nilpotent(sweedler):
    h = sweedler.hopf
    radical = jacobson_radical(h, check=True)
    assert radical == _basis_span(h, "x", "xg")
    assert is_nilpotent_ideal(h, radical)
    assert not is_nilpotent_ideal(h, _basis_span(h, "g"))


def test_sweedler_coradical_and_filtration(sweedler):
    h = sweedler.hopf
    h0 = coradical(h)
    assert h0 == _basis_span(h, "1", "g")
    assert dual_chevalley_property(h, h0)
    chain = coradical_filtration(h)
    assert [space.dim for space in chain] == [2, 4]
    assert wedge(h, h0, h0).dim == 4


def test_subcoalgebra_membership(sweedler):
    h = sweedler.hopf
    assert is_subcoalgebra(h, _basis_span(h, "1", "g"))
    assert not is_subcoalgebra(h, _basis_span(h, "1", "x"))
    sub = restrict_coalgebra(h, _basis_span(h, "1", "g"))
    assert sub.labels == ["1", "g"]
    assert sub.level == "coalgebra"


def test_cosemisimple_filtration_is_one_step(kz2):
    assert [space.dim for space in coradical_filtration(kz2)] == [2]


def test_filtration_stalls_on_a_wrong_base(kz2):
    with pytest.raises(NonTerminating):
        coradical_filtration(kz2, _basis_span(kz2, "1"))


def test_case_ii_grading(case_ii):
    h = case_ii.hopf
    chain = coradical_filtration(h)
    assert [space.dim for space in chain] == [2, 6, 8]
    assert case_ii.expected_filtration == [2, 6, 8]
    report = grading_report(h, case_ii.grading, chain)
    assert report.passed
    assert [c.name for c in report.checks] == [
        "components_span",
        "unit_in_degree_zero",
        "multiplication_graded",
        "comultiplication_graded",
        "partial_sums_match_filtration",
    ]


def test_misordered_grading_is_rejected(case_ii):
    shuffled = [case_ii.grading[1], case_ii.grading[0], case_ii.grading[2]]
    assert not check_coradically_graded(case_ii.hopf, shuffled)
    short = grading_report(case_ii.hopf, case_ii.grading[:2])
    assert short.get("components_span").passed is False


def test_sweedler_blocks(sweedler):
    blocks = coradical_blocks(sweedler.hopf)
    assert [b.label for b in blocks] == ["k1", "kg"]
    assert all(b.comatrix_dim == 1 for b in blocks)


def test_hints_are_verified(sweedler):
    h = sweedler.hopf
    hinted = coradical_blocks(h, hints=[_basis_span(h, "g"), _basis_span(h, "1")])
    assert [b.label for b in hinted] == ["k1", "kg"]
    with pytest.raises(InvalidHints):
        coradical_blocks(h, hints=[_basis_span(h, "x")])
    with pytest.raises(InvalidHints):
        coradical_blocks(h, hints=[_basis_span(h, "1")])


def test_decomposition_needs_cosemisimple_input(sweedler):
    with pytest.raises(NotCosemisimple):
        simple_decomposition(sweedler.hopf)


def test_dual_group_coradical_has_a_matrix_block(d8star):
    blocks = coradical_blocks(d8star.hopf)
    assert [b.label for b in blocks] == ["k1", "kg1", "kg2", "kg3", "C"]
    assert [b.comatrix_dim for b in blocks] == [1, 1, 1, 1, 2]
    assert sum(b.dim for b in blocks) == d8star.coradical_dim == 8


class TestBlockSplitting:
    def test_rational_quaternions_are_rejected(self):
        with pytest.raises(FieldTooSmall):
            coradical_blocks(dual_group_algebra(quaternion_group(), 1))

    def test_quaternions_split_over_gaussian_rationals(self):
        blocks = coradical_blocks(dual_group_algebra(quaternion_group(), 4))
        assert [(b.label, b.dim, b.comatrix_dim) for b in blocks] == [
            ("k1", 1, 1), ("kg1", 1, 1), ("kg2", 1, 1), ("kg3", 1, 1), ("C", 4, 2),
        ]

    def test_dihedral_block_splits_over_the_rationals(self):
        h = dual_group_algebra(dihedral_group(), 1)
        blocks = coradical_blocks(h)
        assert [b.comatrix_dim for b in blocks] == [1, 1, 1, 1, 2]
        assert is_split_block(h, blocks[-1].space)

    def test_irreducible_central_element(self):
        with pytest.raises(FieldTooSmall):
            simple_decomposition(dual_group_algebra(cyclic_group(4), 1))
        assert [b.dim for b in simple_decomposition(dual_group_algebra(cyclic_group(4), 4))] == [1, 1, 1, 1]

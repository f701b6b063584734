from fractions import Fraction

import pytest

from basedring import build_based_ring, verify_arrow_consistency, verify_fpequation
from bosonize import (
    RadfordSplitting,
    YDData,
    bosonize,
    braided_coproduct,
    braided_coproduct_report,
    cyclic_group,
    dihedral_group,
    dual_group_algebra,
    embed_hp,
    embed_r,
    example,
    group_algebra,
    h8_algebra,
    quaternion_group,
    radford_projection,
    radford_report,
    taft_data,
    trivial_data,
    two_dim_representation,
    verify_splitting,
    verify_yd,
)
from bosonize.catalog import case_ii_data, case_iii_data
from coradical import coradical_blocks, coradical_filtration
from errors import BadParams, NotInR, SplittingViolation, YDViolation
from exactfield import CycloNumber, add_into
from quiver import link_quiver, verdict_from_quiver
from tamefrob import solve_K
from tensorcore import verify_axioms


def _outer(x, y, scale=1):
    return {(a, b): c * d * scale for a, c in x.items() for b, d in y.items()}


def _r_element(entry, label):
    return embed_r(entry.yd, entry.yd.R.basis_vector(entry.yd.R.index_of(label)))


class TestGroups:
    def test_small_groups(self):
        for group in (dihedral_group(), quaternion_group()):
            assert len(group) == 8
            assert group.identity == (0, 0)
            assert all(group.product(g, group.inverse(g)) == group.identity for g in group.elements)

    def test_two_dimensional_representations(self):
        for group in (dihedral_group(), quaternion_group()):
            rho = two_dim_representation(group)
            minus = CycloNumber.rational(-1, 4)
            zero = CycloNumber.zero(4)
            assert rho[(2, 0)] == [[minus, zero], [zero, minus]]
        with pytest.raises(BadParams):
            two_dim_representation(cyclic_group(4))

    def test_group_algebras_are_hopf(self):
        assert verify_axioms(group_algebra(dihedral_group()), "hopf").passed
        assert verify_axioms(dual_group_algebra(quaternion_group(), 4), "hopf").passed

    def test_kac_paljutkin_algebra(self):
        h = h8_algebra()
        assert h.labels == ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]
        assert verify_axioms(h, "hopf").passed


@pytest.mark.parametrize(
    "name, params, dim, graded",
    [
        ("case-ii", {"n": 2}, 8, [1, 2, 1]),
        ("case-ii", {"n": 4}, 16, [1, 2, 1]),
        ("case-iii", {}, 16, [1, 2, 1]),
        ("d8star", {}, 32, [1, 2, 1]),
        ("q8star", {}, 32, [1, 2, 1]),
        ("taft", {"sign": -1}, 4, [1, 1]),
    ],
)
def test_catalog_entries(catalog, name, params, dim, graded):
    entry = catalog(name, **params)
    assert entry.hopf.dim == dim
    assert entry.r_graded_dims == graded
    assert verify_yd(entry.yd).passed
    assert verify_axioms(entry.hopf, "hopf").passed
    assert [space.dim for space in coradical_filtration(entry.hopf)] == entry.expected_filtration


@pytest.mark.parametrize(
    "name, params",
    [("case-ii", {"n": 2}), ("case-iii", {}), ("d8star", {}), ("q8star", {}), ("taft", {"sign": -1})],
)
def test_catalog_radford_projection_and_fp_dimensions(catalog, name, params):
    entry = catalog(name, **params)
    Pi, R_H = radford_projection(entry.splitting, check=False)
    assert R_H.dim * entry.splitting.hp.dim == entry.hopf.dim
    assert radford_report(entry.splitting, Pi, R_H).passed
    table = build_based_ring(entry.hopf)
    assert all(verify_fpequation(table, k) for k in range(table.size))


def test_case_ii_labels_and_summary(case_ii):
    assert case_ii.yd.R.labels == ["1", "u", "v", "vu"]
    assert case_ii.hopf.labels == ["1", "g", "u", "ug", "v", "vg", "vu", "vug"]
    summary = case_ii.summary()
    assert summary["name"] == "case-ii(n=2)"
    assert summary["coradical_dim"] == 2
    assert summary["filtration"] == [2, 6, 8]
    assert summary["R"]["basis"] == ["1", "x", "y", "yx"]
    assert summary["fingerprint"] == case_ii.hopf.fingerprint()


def test_sweedler_labels(sweedler):
    assert sweedler.yd.R.labels == ["1", "x"]
    assert sweedler.hopf.labels == ["1", "g", "x", "xg"]


def test_yd_check_names(case_ii):
    names = [c.name for c in verify_yd(case_ii.yd).checks]
    assert "R_associativity" in names
    assert "R_coassociativity" in names
    assert names[-1] == "braided_bialgebra"


def test_threaded_yd_checks_agree(case_ii):
    serial = verify_yd(case_ii.yd, exhaustive=True)
    threaded = verify_yd(case_ii.yd, exhaustive=True, threads=2)
    assert [(c.name, c.passed) for c in serial.checks] == [(c.name, c.passed) for c in threaded.checks]


def test_yd_tables_rebuild_the_same_biproduct(case_ii):
    data = case_ii.yd.to_json()
    again = YDData.from_tables(case_ii.yd.R, case_ii.yd.hp, data["action"], data["coaction"], name=case_ii.yd.name)
    assert verify_yd(again).passed
    H = bosonize(again, check=False)
    assert H.mult == case_ii.hopf.mult
    assert H.comult == case_ii.hopf.comult
    assert H.antipode == case_ii.hopf.antipode


def test_sign_plus_one_taft_data_is_rejected():
    report = verify_yd(taft_data(1))
    assert report.get("braided_bialgebra").passed is False
    with pytest.raises(YDViolation):
        example("taft", sign=1)
    with pytest.raises(BadParams):
        taft_data(2)


def test_trivial_braided_part_gives_back_the_base(kz2):
    H = bosonize(trivial_data(kz2))
    assert H.dim == 2
    assert H.labels == kz2.labels
    assert H.mult == kz2.mult
    assert H.comult == kz2.comult
    assert H.counit == kz2.counit
    assert H.antipode == kz2.antipode


def test_radford_projection_recovers_r(case_ii):
    Pi, R_H = radford_projection(case_ii.splitting)
    assert R_H.dim == 4
    assert R_H == case_ii.r_side()
    assert radford_report(case_ii.splitting, Pi, R_H).passed
    assert braided_coproduct_report(case_ii.splitting, Pi, R_H).passed
    assert verify_splitting(case_ii.splitting, exhaustive=True).passed


@pytest.mark.parametrize("fixture", ["case_ii", "d8star"])
def test_braided_coproduct_of_generators(request, fixture):
    entry = request.getfixturevalue(fixture)
    H = entry.hopf
    Pi, _ = radford_projection(entry.splitting, check=False)
    one = H.unit_vector()
    u, v = _r_element(entry, "u"), _r_element(entry, "v")
    assert braided_coproduct(entry.splitting, u, Pi) == add_into(_outer(one, u), _outer(u, one))

    uv = H.product(u, v)
    expected = _outer(one, uv)
    add_into(expected, _outer(uv, one))
    add_into(expected, _outer(u, v))
    add_into(expected, _outer(v, u), CycloNumber.rational(-1))
    assert braided_coproduct(entry.splitting, uv, Pi) == expected


def test_coproduct_outside_r_is_refused(case_ii):
    g = embed_hp(case_ii.yd, case_ii.yd.hp.basis_vector(1))
    with pytest.raises(NotInR):
        braided_coproduct(case_ii.splitting, g)


def test_broken_splitting_is_refused(case_ii):
    s = case_ii.splitting
    one = CycloNumber.one()
    bad = RadfordSplitting(H=s.H, hp=s.hp, proj={j: {0: one} for j in range(s.H.dim)}, incl=s.incl)
    report = verify_splitting(bad)
    assert report.get("pi_after_i").passed is False
    with pytest.raises(SplittingViolation):
        radford_projection(bad)


def test_case_parameters_are_validated():
    for n in (0, 3):
        with pytest.raises(BadParams):
            case_ii_data(n)
    with pytest.raises(BadParams):
        case_iii_data(alpha=1, beta=1, m=2)
    with pytest.raises(BadParams):
        case_iii_data(n1=3)
    with pytest.raises(BadParams):
        example("nope")


def test_case_iii_scalar_note():
    _, _, notes = case_iii_data(n1=2, n2=2, alpha=-1, beta=-1, m=1)
    assert notes == []
    _, presented, notes = case_iii_data(n1=8, n2=8, alpha=CycloNumber.zeta(8), beta=CycloNumber.zeta(8, 7), m=1)
    assert presented.dim == 4
    assert len(notes) == 1
    assert "beta^(2m) = 1" in notes[0]


def test_dual_group_entries_carry_the_dimension_note(d8star):
    assert d8star.notes
    assert "dim H = 32" in d8star.notes[0]


@pytest.mark.slow
class TestKacPaljutkinBiproduct:
    @pytest.fixture(scope="class")
    def h8(self, catalog):
        return catalog("h8")

    def test_shape(self, h8):
        assert h8.hopf.dim == 64
        assert h8.coradical_dim == 8
        assert h8.r_graded_dims == [1, 2, 2, 2, 1]
        assert h8.expected_filtration == [8, 24, 40, 56, 64]
        assert verify_yd(h8.yd).passed

    def test_filtration(self, h8):
        assert [space.dim for space in coradical_filtration(h8.hopf)] == [8, 24, 40, 56, 64]

    def test_blocks_and_arrows(self, h8):
        blocks = coradical_blocks(h8.hopf)
        assert [b.label for b in blocks] == ["k1", "kx", "ky", "kxy", "C"]
        table = build_based_ring(h8.hopf, blocks)
        q = link_quiver(h8.hopf, blocks=blocks)
        assert verify_arrow_consistency(table, q).passed
        assert str(verdict_from_quiver(q)) == "TameCandidate(ii)"

    def test_k_matrix(self, h8):
        half = CycloNumber.rational(Fraction(1, 2), 4)
        i_half = CycloNumber.zeta(4) * half
        expected = [
            [-half, i_half, -i_half, half],
            [-i_half, -half, -half, -i_half],
            [i_half, -half, -half, i_half],
            [half, i_half, -i_half, -half],
        ]
        assert solve_K(h8.C, h8.X) == expected

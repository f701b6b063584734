from fractions import Fraction

import pytest

from config import config
from errors import ConductorOverflow, DivisionByZero, InputFormatError
from exactfield import (
    CycloNumber,
    common_order,
    conductor_bound,
    cyclo_arith,
    is_independent,
    left_kernel,
    nullspace,
    primitive_root_order,
    rank,
    rref,
    solve_combination,
)


def test_zeta_powers_close_up():
    assert CycloNumber.zeta(4) ** 2 == -1
    assert CycloNumber.zeta(8) ** 8 == 1
    assert CycloNumber.zeta(3) ** 2 + CycloNumber.zeta(3) + 1 == 0


def test_values_from_different_conductors_compare_after_embedding():
    assert CycloNumber.parse("zeta8^2") == CycloNumber.parse("i")
    assert CycloNumber.zeta(8, 2) * CycloNumber.zeta(4, 1) == -1
    assert CycloNumber.rational(3, 5) == 3


def test_parse_forms():
    assert CycloNumber.parse("1/2") == CycloNumber.rational(Fraction(1, 2))
    assert CycloNumber.parse("-i") == -CycloNumber.zeta(4)
    assert CycloNumber.parse("3/2*zeta5^2") == CycloNumber.zeta(5, 2) * Fraction(3, 2)
    assert CycloNumber.parse("1 + i") == CycloNumber.zeta(4) + 1
    with pytest.raises(InputFormatError):
        CycloNumber.parse("zeta")
    with pytest.raises(InputFormatError):
        CycloNumber.parse("1/0")


def test_json_round_trip_and_text():
    z = CycloNumber.zeta(8, 3) * Fraction(-2, 3) + 5
    assert CycloNumber.from_json(z.to_json()) == z
    assert CycloNumber.from_json("-1/2", 4) == CycloNumber.rational(Fraction(-1, 2), 4)
    assert str(CycloNumber.rational(Fraction(-1, 2))) == "-1/2"
    with pytest.raises(InputFormatError):
        CycloNumber.from_json(True)


def test_inverse_and_division():
    z = CycloNumber.zeta(5, 1) + 2
    assert z * z.inverse() == 1
    assert (z / z).is_one()
    with pytest.raises(DivisionByZero):
        CycloNumber.zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        CycloNumber.one(3) / 0


def test_conjugate_inverts_roots_of_unity():
    z = CycloNumber.zeta(8, 3)
    assert z * z.conjugate() == 1


def test_conductor_bound_is_enforced(monkeypatch):
    monkeypatch.setitem(config["field"], "conductor_bound", 10)
    with pytest.raises(ConductorOverflow):
        CycloNumber.zeta(3) * CycloNumber.zeta(4)
    with pytest.raises(ConductorOverflow):
        common_order([CycloNumber.zeta(3), CycloNumber.zeta(4)])


@pytest.mark.parametrize(
    "value, expected",
    [
        (CycloNumber.one(), 1),
        (CycloNumber.rational(-1), 2),
        (CycloNumber.zeta(4), 4),
        (CycloNumber.zeta(8, 2), 4),
        (CycloNumber.zeta(8, 3), 8),
        (CycloNumber.zeta(5, 1), 5),
        (-CycloNumber.zeta(5, 1), 10),
        (CycloNumber.rational(2), None),
        (CycloNumber.zeta(4) + 1, None),
        (CycloNumber.zero(), None),
    ],
)
def test_primitive_root_order(value, expected):
    assert primitive_root_order(value) == expected


def test_common_order_ignores_rationals():
    assert common_order([CycloNumber.rational(2, 8), CycloNumber.zeta(3), CycloNumber.zeta(4)]) == 12


def test_rref_nullspace_and_rank_over_q_i():
    i = CycloNumber.zeta(4)
    one = CycloNumber.one(4)
    rows = [{0: one, 1: i}, {0: i, 1: -one}, {2: one}]
    assert rank(rows, 4) == 2
    reduced, pivots = rref(rows, 4)
    assert pivots == [0, 2]
    assert reduced[0][1] == i
    kernel = nullspace(rows, 4, [0, 1, 2])
    assert len(kernel) == 1
    assert kernel[0] == {1: one, 0: -i}


def test_left_kernel_and_solve():
    one = CycloNumber.one()
    images = [{0: one}, {1: one}, {0: one, 1: one}]
    kernel = left_kernel(images, 1)
    assert len(kernel) == 1
    lam = kernel[0]
    assert lam[0] == lam[1] == -lam[2]

    solution = solve_combination(images[:2], {0: one * 3, 1: -one}, 1)
    assert solution == {0: 3, 1: -1}
    assert solve_combination([{0: one}], {1: one}, 1) is None
    assert is_independent(images[:2], 1)
    assert not is_independent(images, 1)


def test_equal_values_hash_alike_across_conductors():
    a, b = CycloNumber.zeta(4), CycloNumber.zeta(8) ** 2
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
    assert len({CycloNumber.zeta(3), CycloNumber.zeta(6) ** 2, CycloNumber.zeta(12, 4)}) == 1
    assert len({CycloNumber.rational(1, 5), CycloNumber.one(), CycloNumber.zeta(4) ** 4}) == 1


def test_minimal_polynomial():
    assert [int(c) for c in CycloNumber.zeta(4).minimal_polynomial()] == [1, 0, 1]
    assert [int(c) for c in CycloNumber.zeta(8, 2).minimal_polynomial()] == [1, 0, 1]
    assert [int(c) for c in (CycloNumber.zeta(8) + CycloNumber.zeta(8, 7)).minimal_polynomial()] == [1, 0, -2]
    assert [int(c) for c in CycloNumber.rational(3, 1).minimal_polynomial()] == [1, -3]


def test_merging_large_conductors_overflows():
    a, b = CycloNumber.zeta(128), CycloNumber.zeta(81)
    assert 128 * 81 > conductor_bound()
    with pytest.raises(ConductorOverflow):
        cyclo_arith(a, b, "mul")
    with pytest.raises(ConductorOverflow):
        cyclo_arith(a, b, "add")
    assert a != b

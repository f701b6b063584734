"""
The scalar matrix K with C odot' X = K (X odot C), and the constraints a
diagonal K places on the family parameters.
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

from errors import DependentEntries, InputFormatError, NoSolution, ShapeMismatch
from exactfield import CycloNumber, is_independent, primitive_root_order, rank, solve_combination
from tensorcore import CheckResult, MatrixOverAlgebra, VerificationReport, matrix_odot

logger = logging.getLogger(__name__)

ScalarMatrix = List[List[CycloNumber]]


def _row_vector(M: MatrixOverAlgebra, r: int) -> Dict[Tuple[int, int], CycloNumber]:
    return {(col, k): c for col, vec in enumerate(M.entries[r]) for k, c in vec.items()}


def solve_K(C: MatrixOverAlgebra, X: MatrixOverAlgebra) -> ScalarMatrix:
    """
    Solve C odot' X = K (X odot C) row by row.

    Args:
        C: basic multiplicative 2x2 matrix
        X: (C, 1)-primitive 2x1 column

    Returns:
        4x4 invertible matrix of CycloNumber

    Raises:
        ShapeMismatch: C is not 2x2 or X is not 2x1
        DependentEntries: the entries of X odot C are linearly dependent
        NoSolution: the system is inconsistent or its solution is singular
    """
    if (C.rows, C.cols) != (2, 2) or (X.rows, X.cols) != (2, 1):
        raise ShapeMismatch(f"need C 2x2 and X 2x1, got {C.rows}x{C.cols} and {X.rows}x{X.cols}")
    h = C.carrier
    left = matrix_odot(X, C, "odot")
    right = matrix_odot(C, X, "odot_prime")
    if not is_independent(left.flat(), h.order):
        raise DependentEntries("entries of X odot C are linearly dependent")

    basis = [_row_vector(left, s) for s in range(left.rows)]
    K: ScalarMatrix = []
    zero = CycloNumber.zero(h.order)
    for r in range(right.rows):
        solution = solve_combination(basis, _row_vector(right, r), h.order)
        if solution is None:
            raise NoSolution(f"row {r} of C odot' X is not a combination of the rows of X odot C")
        K.append([solution.get(s, zero) for s in range(left.rows)])

    rows = [{s: c for s, c in enumerate(row) if c} for row in K]
    if rank(rows, h.order) != len(K):
        raise NoSolution("K is singular")
    logger.info(f"Solved K: {k_to_text(K)}")
    return K


def is_diagonal(K: ScalarMatrix) -> bool:
    return all(not K[i][j] for i in range(len(K)) for j in range(len(K[i])) if i != j)


def k_to_text(K: ScalarMatrix) -> str:
    return "[" + "; ".join(", ".join(str(c) for c in row) for row in K) + "]"


def k_to_json(K: ScalarMatrix) -> List[List[Any]]:
    return [[c.to_json() for c in row] for row in K]


def k_from_json(data: List[List[Any]], order: int = 1) -> ScalarMatrix:
    try:
        K = [[CycloNumber.from_json(c, order) for c in row] for row in data]
    except (TypeError, ValueError) as e:
        raise InputFormatError(f"malformed K matrix: {e}")
    if len(K) != 4 or any(len(row) != 4 for row in K):
        raise ShapeMismatch("K must be 4x4")
    return K


def check_caseI_constraints(K: ScalarMatrix, m: int, a: CycloNumber, family: str = "F2") -> VerificationReport:
    """
    Constraints on a diagonal K = diag(a1, a2, a3, a4).

    The family must be F2, a1 = a4 = -1, a = (-1)^(m-1) a2^m or
    a = (-1)^(m-1) a3^m (the detail says which held), and a2 a3 must be a
    primitive m-th root of unity.
    """
    report = VerificationReport(subject="case (i) constraints")
    if not is_diagonal(K):
        report.add(CheckResult(name="diagonal", passed=None, detail="K is not diagonal"))
        return report
    a1, a2, a3, a4 = (K[i][i] for i in range(4))
    minus_one = CycloNumber.rational(-1, a.order)

    report.add(CheckResult(name="family", passed=family == "F2", detail=f"family {family}"))
    report.add(CheckResult(
        name="alpha1_alpha4",
        passed=a1 == minus_one and a4 == minus_one,
        detail=f"alpha1 = {a1}, alpha4 = {a4}",
    ))

    sign = minus_one ** (m - 1)
    held: List[str] = []
    if a == sign * a2 ** m:
        held.append("alpha2")
    if a == sign * a3 ** m:
        held.append("alpha3")
    report.add(CheckResult(
        name="scalar_a",
        passed=bool(held),
        detail=f"a matches (-1)^(m-1) {' and '.join(held)}^m" if held else f"a = {a} matches neither alpha2 nor alpha3",
    ))

    product = a2 * a3
    order: Optional[int] = primitive_root_order(product)
    report.add(CheckResult(
        name="primitive_root",
        passed=order == m,
        detail=f"alpha2 alpha3 = {product} has multiplicative order {order}",
    ))
    return report

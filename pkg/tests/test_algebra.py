import pytest

from zhulab.algebra import (CORPUS, ActionError, FiniteAlgebra, NoIdentity, brute_force_radical,
                           check_action, dual_numbers, find_identity, full_matrix_test, is_commutative,
                           is_semisimple, matrix_units, minimal_polynomial, rational_eigenvalues,
                           rational_roots, split_quadratic, trace_form, truncated_polynomial)
from zhulab.linalg import Q


def test_named_verdicts():
    assert not is_semisimple(dual_numbers()).semisimple
    assert is_semisimple(split_quadratic()).semisimple
    v = is_semisimple(matrix_units(2))
    assert v.semisimple and v.trace_form_rank == 4


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_trace_form_agrees_with_brute_force(name):
    A = CORPUS[name]()
    assert A.is_associative()
    if A.d <= 4:
        assert brute_force_radical(A) == is_semisimple(A).radical_dim


def test_truncated_polynomial_radical():
    # radical of Q[x]/(x^3) is (x), dimension 2
    assert is_semisimple(truncated_polynomial(3)).radical_dim == 2


def test_trace_form_of_dual_numbers():
    # L_1 = I, L_x = [[0,0],[1,0]]: tr(1)=2, tr(x)=tr(x^2)=0
    assert trace_form(dual_numbers()) == [[2, 0], [0, 0]]


def test_identity_and_commutativity():
    assert find_identity(matrix_units(2)) == [1, 0, 0, 1]
    assert not is_commutative(matrix_units(2))
    assert is_commutative(split_quadratic())
    nil = FiniteAlgebra([[[0]]])
    assert find_identity(nil) is None
    with pytest.raises(NoIdentity):
        is_semisimple(nil)


def test_minimal_polynomial_and_roots():
    M = [[Q(2), Q(1)], [Q(0), Q(2)]]
    assert minimal_polynomial(M) == [4, -4, 1]
    assert rational_roots([Q(0), Q(1, 5), Q(1)]) == ([(Q(-1, 5), 1), (Q(0), 1)], [Q(1)])
    roots, rest = rational_roots([Q(-2), Q(0), Q(1)])
    assert roots == [] and len(rest) == 3


def test_rational_eigenvalues_split_quadratic():
    rep = rational_eigenvalues(split_quadratic(), [0, 1])
    assert sorted(rep.eigenvalues) == [-1, 1] and rep.central


def test_irrational_spectrum_reported_as_residual():
    # Q[x]/(x^2 - 2) has no rational eigenvalues for x
    A = FiniteAlgebra([[[1, 0], [0, 1]], [[0, 1], [2, 0]]])
    rep = rational_eigenvalues(A, [0, 1])
    assert rep.roots == [] and rep.residual_degrees == [2]


def test_module_checks():
    A = matrix_units(2)
    E = lambda i, j: [[Q(int(r == i and c == j)) for c in range(2)] for r in range(2)]
    mats = [E(0, 0), E(0, 1), E(1, 0), E(1, 1)]
    assert full_matrix_test(A, mats) == "simple"
    with pytest.raises(ActionError):
        check_action(A, [E(0, 0), E(1, 0), E(0, 1), E(1, 1)])
    # the 1-dim trivial representation of Q x Q through the first factor
    QQ = CORPUS["rationals-squared"]()
    assert full_matrix_test(QQ, [[[Q(1)]], [[Q(0)]]]) == "simple"
    assert full_matrix_test(split_quadratic(), [[[Q(1), 0], [0, Q(1)]], [[Q(1), 0], [0, Q(-1)]]]) == "undetermined"


def test_malformed_table():
    with pytest.raises(ValueError):
        FiniteAlgebra([[[1, 0]], [[0, 1]]])

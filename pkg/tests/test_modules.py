import pytest

from zhulab.linalg import Q
from zhulab.modules import (AdmissibleModule, check_composition, check_grading, check_zhu_action, fock,
                            omega_n, verma)
from zhulab.voa import HEISENBERG, VIRASORO, VOA, CutoffExceeded
from oracles import partition_counts


@pytest.fixture(scope="module")
def F():
    return fock(VOA(HEISENBERG, 10), Q(3, 2), 3)


@pytest.fixture(scope="module")
def M():
    return verma(VOA(VIRASORO, 10, Q(1, 2)), Q(1, 16), 3)


def test_dims_are_partition_counts(F, M):
    assert [F.dim(s) for s in range(4)] == partition_counts(3)
    assert [M.dim(s) for s in range(4)] == partition_counts(3)


def test_zero_modes_on_top(F, M):
    assert F.zero_mode(F.V.omega).matrix == [[Q(9, 8)]]
    assert F.zero_mode({(1,): Q(1)}).matrix == [[Q(3, 2)]]
    assert M.zero_mode(M.V.omega).matrix == [[Q(1, 16)]]
    # L(0) on level 1 of the Verma module is h + 1
    assert M.zero_mode(M.V.omega, 1).matrix == [[Q(17, 16)]]


def test_hand_module_mode(M):
    # L(1) L(-1) v = 2h v
    v = M.module_mode(M.V.omega, 0, M.top)
    assert v == {(1,): Q(1)}
    assert M.module_mode(M.V.omega, 2, v) == {(): Q(1, 8)}


def test_identities(F, M):
    for W in (F, M):
        assert all(r.passed for r in check_zhu_action(W, cap=3, levels=2))
        assert check_grading(W, cap=3).passed
        assert check_composition(W, 1, 0, 1, cap=2).passed


def test_omega_candidates(F):
    # Fock module: only the top level is annihilated by all lowering modes
    assert omega_n(F, 0, probe_cap=2).dims[0] == 1
    assert omega_n(F, 0, probe_cap=2).dims[1:] == [0, 0, 0]


def test_kind_mismatch():
    with pytest.raises(ValueError):
        AdmissibleModule(VOA(VIRASORO, 4, Q(1, 2)), "fock", 2, lam=1)
    with pytest.raises(ValueError):
        AdmissibleModule(VOA(HEISENBERG, 4), "verma", 2, h=0)


def test_level_cap(F):
    with pytest.raises(CutoffExceeded):
        F.o_map({(1,): Q(1)}, 2, 2)


def test_level_one_does_not_factor_through_A0():
    from zhulab.modules import ideal_acts_nontrivially
    from zhulab.quotients import required_cutoff, span_o_n, truncated_quotient
    N = 4  # O_0 and O_1 first differ at weight 4
    P = VOA(HEISENBERG, required_cutoff(N, 1))
    A0 = truncated_quotient(P, span_o_n(P, 0), N)
    A1 = truncated_quotient(P, span_o_n(P, 1), N)
    W = fock(P, Q(3, 2), 1)
    top = {r: W.zero_mode({r: Q(1)}, 0).matrix for r in A1.reps}
    level1 = {r: W.zero_mode({r: Q(1)}, 1).matrix for r in A1.reps}
    assert ideal_acts_nontrivially(A1, A0, level1)[0]
    # M(0) is an A_0-module, so O_0 must act by zero there
    hit, tested = ideal_acts_nontrivially(A1, A0, top)
    assert not hit and tested > 0

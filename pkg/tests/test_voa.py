import pytest

from zhulab.expr import parse_vector
from zhulab.linalg import Q
from zhulab.voa import HEISENBERG, VIRASORO, VOA, CutoffExceeded, partitions, verify_singular
from oracles import lee_yang_counts, partition_counts

LY = "L(-2)L(-2)|0> - 3/5 L(-4)|0>"


def vec(P, text):
    return parse_vector(text, P)


def test_graded_dims_are_partition_counts():
    H = VOA(HEISENBERG, 12)
    assert [H.dim(w) for w in range(13)] == partition_counts(12, 1)
    V = VOA(VIRASORO, 12, Q(1, 2))
    assert [V.dim(w) for w in range(13)] == partition_counts(12, 2)
    assert list(partitions(4, 2)) == [(4,), (2, 2)]


def test_heisenberg_hand_modes():
    H = VOA(HEISENBERG, 6)
    a = vec(H, "a(-1)|0>")
    assert H.field_mode(a, 1, a) == H.vacuum
    assert H.field_mode(a, 0, a) == {}
    assert H.field_mode(a, -1, a) == vec(H, "a(-1)a(-1)|0>")
    assert H.translate(a) == vec(H, "a(-2)|0>")
    # omega = 1/2 a(-1)^2: L(0) a = a and L(2) omega = c/2 with c = 1
    assert H.field_mode(H.omega, 1, a) == a
    assert H.field_mode(H.omega, 3, H.omega) == {(): Q(1, 2)}


@pytest.mark.parametrize("c", [Q(1, 2), Q(-22, 5), Q(25)])
def test_virasoro_hand_modes(c):
    V = VOA(VIRASORO, 8, c)
    w = V.omega
    assert V.field_mode(w, 3, w) == {(): c / 2}
    assert V.field_mode(w, 2, w) == {}
    assert V.field_mode(w, 1, w) == {(2,): Q(2)}
    assert V.field_mode(w, 0, w) == vec(V, "L(-3)|0>")
    # L(2) L(-2)L(-2)|0> = (8 + c) L(-2)|0>, by hand
    assert V.generator_mode_apply(2, vec(V, "L(-2)L(-2)|0>")) == {(2,): 8 + c}


def test_lee_yang_singular_vector():
    V = VOA(VIRASORO, 6, Q(-22, 5))
    assert verify_singular(V, vec(V, LY))
    assert not verify_singular(V, vec(V, "L(-2)L(-2)|0> - 1/2 L(-4)|0>"))
    assert not verify_singular(VOA(VIRASORO, 6, Q(1, 2)), vec(VOA(VIRASORO, 6, Q(1, 2)), LY))
    with pytest.raises(ValueError):
        verify_singular(V, vec(V, "L(-2)|0> + L(-4)|0>"))


def test_lee_yang_quotient_dims_match_character():
    U = VOA(VIRASORO, 16, Q(-22, 5))
    P = U.quotient_by(vec(U, LY))
    assert [P.dim(w) for w in range(17)] == lee_yang_counts(16)
    # the singular vector itself vanishes in the quotient
    assert P.reduce(vec(U, LY)) == {}


def test_quotient_requires_singular():
    U = VOA(VIRASORO, 6, Q(-22, 5))
    with pytest.raises(ValueError):
        U.quotient_by(vec(U, "L(-4)|0>"))


def test_cutoff_enforced():
    H = VOA(HEISENBERG, 3)
    a = vec(H, "a(-1)|0>")
    with pytest.raises(CutoffExceeded):
        H.field_mode(vec(H, "a(-1)a(-1)|0>"), -2, a)
    with pytest.raises(ValueError):
        VOA(HEISENBERG, -1)
    with pytest.raises(ValueError):
        VOA(VIRASORO, 3)


def test_memoization_does_not_change_results():
    V = VOA(VIRASORO, 8, Q(1, 2))
    bare = VOA(VIRASORO, 8, Q(1, 2), cache=False)
    for u in V.basis_upto(4):
        for w in V.basis_upto(3):
            for k in range(-2, 4):
                if sum(u) + sum(w) - k - 1 <= 8:
                    assert V.field_mode({u: 1}, k, {w: 1}) == bare.field_mode({u: 1}, k, {w: 1})

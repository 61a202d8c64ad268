from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zhulab.linalg import (Echelon, OrderingError, Q, echelonize, fmt_rational, intersect_truncated,
                           nullspace, parse_rational, quotient_reps, solve)
from oracles import dense_rank, in_span

small = st.integers(min_value=-3, max_value=3)
keys = st.sampled_from(["a", "b", "c", "d", "e"])
vectors = st.dictionaries(keys, small.filter(bool).map(Q), max_size=4)


def test_rationals():
    assert parse_rational("-22/5") == Q(-22, 5)
    assert parse_rational(" 3 ") == 3
    assert fmt_rational(Q(-1, 5)) == "-1/5"
    assert fmt_rational(Q(4, 2)) == "2"
    for bad in ("1/0", "x", "1.5", ""):
        with pytest.raises((ValueError, ZeroDivisionError)):
            parse_rational(bad)


def test_reduce_and_contains():
    E = echelonize([{"a": Q(1), "b": Q(1)}, {"b": Q(1), "c": Q(2)}])
    assert E.rank == 2
    assert E.contains({"a": Q(1), "c": Q(-2)})[0]
    ok, residue = E.contains({"c": Q(1)})
    assert not ok and residue
    assert not E.insert({"a": Q(2), "b": Q(4), "c": Q(4)})


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors, max_size=6), vectors)
def test_contains_matches_dense_oracle(rows, v):
    E = echelonize(rows)
    assert E.contains(v)[0] == in_span(rows, v)
    keys_ = sorted({k for r in rows for k in r})
    assert E.rank == (dense_rank([[r.get(k, 0) for k in keys_] for r in rows]) if keys_ else 0)


@settings(max_examples=40, deadline=None)
@given(st.lists(vectors, max_size=6), st.randoms())
def test_echelon_is_permutation_invariant(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert echelonize(rows) == echelonize(shuffled)


@settings(max_examples=40, deadline=None)
@given(st.lists(vectors, max_size=6))
def test_span_plus_quotient_is_ambient(rows):
    ambient = ["a", "b", "c", "d", "e"]
    E = echelonize(rows)
    assert E.rank + len(quotient_reps(ambient, E)) == len(ambient)


def test_intersect_truncated():
    # order puts "hi" first, so the truncated part is read off the echelon
    order = {"hi": 0, "lo1": 1, "lo2": 2}.get
    E = echelonize([{"hi": Q(1), "lo1": Q(1)}, {"hi": Q(1), "lo2": Q(1)}], order)
    T = intersect_truncated(E, lambda k: k != "hi")
    assert T.rank == 1 and T.contains({"lo1": Q(1), "lo2": Q(-1)})[0]
    with pytest.raises(OrderingError):
        intersect_truncated(echelonize([{"hi": Q(1), "lo1": Q(1)}], {"hi": 2, "lo1": 1}.get),
                            lambda k: k != "hi")


def test_nullspace_and_solve():
    rows = [[1, 2, 3], [2, 4, 6]]
    null = nullspace(rows, 3)
    assert len(null) == 2
    for v in null:
        assert all(sum(Fraction(int(a)) * Fraction(int(x.numerator), int(x.denominator))
                       for a, x in zip(r, v)) == 0 for r in rows)
    assert nullspace([], 2) and len(nullspace([], 2)) == 2
    assert solve([[1, 1], [1, -1]], [3, 1], 2) == [2, 1]
    assert solve([[1, 1], [1, 1]], [1, 2], 2) is None


def test_empty_echelon():
    E = Echelon()
    assert E.rank == 0 and E.reduce({"a": Q(1)}) == {"a": Q(1)}

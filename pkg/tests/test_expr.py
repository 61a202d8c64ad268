import pytest
from hypothesis import given, settings, strategies as st

from zhulab.expr import ParseError, format_vector, parse_terms, parse_vector
from zhulab.linalg import Q
from zhulab.voa import HEISENBERG, VIRASORO, VOA

CORPUS = [
    ("virasoro", "L(-2)L(-2)|0> - 3/5 L(-4)|0>"),
    ("virasoro", "L(-2)|0>"),
    ("virasoro", "-1/2*L(-3)|0> + L(-6)|0>"),
    ("virasoro", "|0>"),
    ("heisenberg-rank1", "a(-1)a(-1)|0> + 2 a(-2)|0>"),
    ("heisenberg-rank1", "a(1)a(-1)|0>"),
    ("heisenberg-rank1", "a(-2)a(-1)|0> - a(-1)a(-2)|0>"),
]


def presentation(kind):
    return VOA(kind, 12, Q(-22, 5) if kind == VIRASORO else None)


@pytest.mark.parametrize("kind,text", CORPUS)
def test_round_trip(kind, text):
    P = presentation(kind)
    v = parse_vector(text, P)
    assert parse_vector(format_vector(v, P.gen), P) == v


def test_modes_act_right_to_left():
    P = presentation(HEISENBERG)
    assert parse_vector("a(1)a(-1)|0>", P) == P.vacuum
    assert parse_vector("a(-2)a(-1)|0> - a(-1)a(-2)|0>", P) == {}


@pytest.mark.parametrize("text,pos", [("L(-2", 4), ("L(-2)|0> +", 10), ("3/ L(-2)|0>", 3),
                                      ("L(-2)|0", 5), ("X(-2)|0>", 0)])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as e:
        parse_terms(text)
    assert e.value.pos == pos


def test_wrong_generator():
    with pytest.raises(ValueError):
        parse_vector("a(-1)|0>", presentation(VIRASORO))


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.sampled_from([(), (2,), (3,), (2, 2), (4,), (3, 2)]),
                       st.fractions(max_denominator=7).filter(bool), max_size=5))
def test_round_trip_random(d):
    P = presentation(VIRASORO)
    v = {k: Q(c.numerator, c.denominator) for k, c in d.items()}
    assert parse_vector(format_vector(v, "L"), P) == v

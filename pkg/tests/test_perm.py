import pytest
from hypothesis import given, strategies as st

from butsoncodes import perm as P

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(n)).map(tuple))


def test_cycle_notation():
    assert P.to_cycles((0, 1, 2)) == "()"
    assert P.to_cycles((1, 2, 0, 3)) == "(1,2,3)"
    assert P.from_cycles("(1,3,2)", 3) == (2, 0, 1)
    assert P.from_cycles("()", 4) == (0, 1, 2, 3)
    assert P.from_cycles("(1, 2)(3,4)", 4) == (1, 0, 3, 2)


@pytest.mark.parametrize("text", ["(1,2", "1,2)", "(1,1)", "(1,5)", "(1,2)(2,3)", "", "(a)"])
def test_bad_cycles(text):
    with pytest.raises(ValueError):
        P.from_cycles(text, 4)


def test_action_moves_coordinates():
    p = P.from_cycles("(1,2,3)", 3)
    assert P.apply(p, ("a", "b", "c")) == ("c", "a", "b")


@given(perms)
def test_cycle_roundtrip(p):
    assert P.from_cycles(P.to_cycles(p), len(p)) == p


@given(st.integers(1, 8).flatmap(
    lambda n: st.tuples(*[st.permutations(range(n)).map(tuple)] * 2,
                        st.lists(st.integers(0, 9), min_size=n, max_size=n))))
def test_action_is_a_left_action(args):
    p, q, v = args
    assert P.apply(P.compose(p, q), v) == P.apply(p, P.apply(q, v))
    assert P.compose(p, P.inverse(p)) == P.identity(len(p))

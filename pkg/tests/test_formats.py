import pytest

from butsoncodes.butson import LogMatrix
from butsoncodes.codes import build_codes
from butsoncodes.cocyclic import group_from_factors
from butsoncodes.formats import (
    ParseError, emit_assignment, emit_code, emit_matrix, is_code_file, parse_assignment,
    parse_code, parse_matrix,
)
from butsoncodes.propelinear import propelinear_from_cocycle
from suite import BH48, BH84, suite


def test_parse_example():
    text = "# a comment\n4 8\n0 0 0 0\n0 2 4 6\n0 4 0 4\n0 6 4 2\n"
    assert parse_matrix(text) == BH48
    assert parse_matrix("1 2\n0\n") == LogMatrix(((0,),), 2)


@pytest.mark.parametrize("text,line,col", [
    ("2 8\n0 0\n0 8\n", 3, 3),
    ("2 8\n0 0\n0 1 \n", 3, 4),
    ("2 8\n0  0\n0 1\n", 2, 3),
    ("2 8\n0 0\n0\n", 3, 2),
    ("2 8\n0 0\n", 3, 1),
    ("2 8\n0 0\n0 1\n0 1\n", 4, 1),
    ("2 x\n", 1, 3),
    ("2 8\r\n0 0\n", 1, 4),
    ("2 8\n0 -1\n0 0\n", 2, 3),
    ("", 1, 1),
])
def test_parse_errors_are_positioned(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_matrix(text)
    assert (e.value.line, e.value.col) == (line, col)


def test_matrix_roundtrip_on_suite():
    for name, M in suite().items():
        assert parse_matrix(emit_matrix(M, ["x"])) == M, name


def test_code_and_assignment_roundtrip():
    C, a = propelinear_from_cocycle(BH84, group_from_factors([8]))
    text = emit_code(C)
    assert is_code_file(text) and not is_code_file(emit_matrix(BH84))
    C2 = parse_code(text)
    assert C2.words == C.words
    a2 = parse_assignment(emit_assignment(C, a), C2)
    assert a2.perms == a.perms


def test_code_file_errors():
    with pytest.raises(ParseError):
        parse_code("2 4 2\n0 0\n0 0\n")
    with pytest.raises(ParseError):
        parse_code("2 4 2\n0 0\n")
    F, _ = build_codes(BH48)
    with pytest.raises(ParseError):
        parse_assignment("0 0 0 0 (1,5)\n", F)
    with pytest.raises(ParseError):
        parse_assignment("0 0 0 1 ()\n", F)
    with pytest.raises(ParseError):
        parse_assignment("0 0 0 0\n", F)

import pytest

from tenscat.category import SimpleLabel
from tenscat.errors import ParseError
from tenscat.homdiag import TensorShape
from tenscat.parsing import parse_diagram, parse_label, parse_shape, parse_weight
from tenscat.weightcalc import Weight
from tenscat.young import YoungDiagram


@pytest.mark.parametrize("text, rows", [("[]", ()), ("[3,1,1]", (3, 1, 1)), (" [ 2 , 2 ] ", (2, 2))])
def test_diagram(text, rows):
    assert parse_diagram(text) == YoungDiagram(rows)


@pytest.mark.parametrize("text, pos", [
    ("[1,2]", 3), ("[0]", 1), ("[2,1", 4), ("2,1]", 0), ("[2,1]x", 5), ("[a]", 1), ("[-1]", 1),
])
def test_diagram_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_diagram(text)
    assert info.value.position == pos
    lines = info.value.caret_message().splitlines()
    assert lines[-1].index("^") == lines[-2].index(text[0]) + pos


def test_round_trip_text():
    for text in ["[]", "[1]", "[4,2,2,1]"]:
        assert str(parse_diagram(text)) == text
    assert str(parse_label("([2,1],[1])")) == "([2,1],[1])"


def test_label():
    assert parse_label("([2,1],[1])") == SimpleLabel.of([2, 1], [1])
    assert parse_label("([],[])") == SimpleLabel.of()
    for bad in ["([1])", "[1],[1]", "([1],[1]", "([1],[1]))"]:
        with pytest.raises(ParseError):
            parse_label(bad)


def test_weight():
    assert parse_weight("1:1,3:-1") == Weight({1: 1, 3: -1})
    assert parse_weight("") == Weight()
    assert parse_weight("0") == Weight()
    assert parse_weight("2:+2") == Weight({2: 2})
    for bad, pos in [("0:1", 0), ("1:0", 2), ("1:1,1:2", 4), ("1", 1), ("1:1,", 4)]:
        with pytest.raises(ParseError) as info:
            parse_weight(bad)
        assert info.value.position == pos


def test_shape():
    assert parse_shape("2,1") == TensorShape(2, 1)
    assert parse_shape("(0,3)") == TensorShape(0, 3)
    with pytest.raises(ParseError):
        parse_shape("(1,2")
    with pytest.raises(ParseError):
        parse_shape("-1,2")

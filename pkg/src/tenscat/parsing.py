"""Parsers for the text literals accepted on the command line.

Formats:

* diagram: ``[3,1,1]``; ``[]`` is the empty diagram
* label: ``([2,1],[1])``
* weight: ``1:1,3:-1`` (``j:n`` pairs); the empty string or ``0`` is zero
* tensor shape: ``2,1`` or ``(2,1)``

Every failure raises :class:`ParseError` carrying the offending offset.
"""

from __future__ import annotations

from .category import SimpleLabel
from .errors import ParseError
from .homdiag import TensorShape
from .weightcalc import Weight
from .young import YoungDiagram


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error("expected an integer", digits)
        return int(self.text[start:self.pos])

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")


def _diagram(cur: _Cursor) -> YoungDiagram:
    cur.expect("[")
    rows = []
    if cur.peek() == "]":
        cur.pos += 1
        return YoungDiagram()
    while True:
        cur.skip_ws()
        start = cur.pos
        r = cur.integer()
        if r < 1:
            raise cur.error("row lengths must be positive", start)
        if rows and r > rows[-1]:
            raise cur.error("row lengths must be weakly decreasing", start)
        rows.append(r)
        if cur.peek() == ",":
            cur.pos += 1
            continue
        cur.expect("]")
        return YoungDiagram(rows)


def parse_diagram(text: str) -> YoungDiagram:
    cur = _Cursor(text)
    d = _diagram(cur)
    cur.end()
    return d


def parse_label(text: str) -> SimpleLabel:
    cur = _Cursor(text)
    cur.expect("(")
    lam = _diagram(cur)
    cur.expect(",")
    mu = _diagram(cur)
    cur.expect(")")
    cur.end()
    return SimpleLabel(lam, mu)


def parse_weight(text: str) -> Weight:
    cur = _Cursor(text)
    if cur.peek() == "":
        return Weight()
    if text.strip() == "0":
        return Weight()
    coeffs = {}
    while True:
        cur.skip_ws()
        start = cur.pos
        j = cur.integer()
        if j < 1:
            raise cur.error("weight indices must be positive", start)
        if j in coeffs:
            raise cur.error(f"index {j} repeated", start)
        cur.expect(":")
        cur.skip_ws()
        vstart = cur.pos
        n = cur.integer(signed=True)
        if n == 0:
            raise cur.error("zero coefficients are not written", vstart)
        coeffs[j] = n
        if cur.peek() == ",":
            cur.pos += 1
            continue
        cur.end()
        return Weight(coeffs)


def parse_shape(text: str) -> TensorShape:
    cur = _Cursor(text)
    paren = cur.peek() == "("
    if paren:
        cur.pos += 1
    p = cur.integer()
    cur.expect(",")
    q = cur.integer()
    if paren:
        cur.expect(")")
    cur.end()
    return TensorShape(p, q)

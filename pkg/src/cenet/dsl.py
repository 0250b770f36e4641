"""Textual network format.

A document is a sequence of tokens. Each token names 2..4 wires followed by
a terminator: '-' keeps the element as written, '=' additionally appends
its top-bottom mirror (unless the mirror coincides with the element, which
yields a single element). Wires are either a run of digits 1..9 or, for
orders past 9, a bracketed list like [2,11]. Whitespace between tokens is
ignored; the digit 0 is never a wire.

    13-123-        ->  Link(1,3), Fused2(1,2,3)
    24=            ->  Link(2,4), Link(5,7)        (at order 8)

Two endpoints make a plain link, three a fused pair, four a fused triple.
Endpoints may appear in any order in the source; the model stores them
ascending. This format is the on-disk representation (.cen files).
"""

from __future__ import annotations

from .core import Element, Fused2, Fused3, Link, Network, check_valid, mirror

_KINDS = {2: Link, 3: Fused2, 4: Fused3}

MIN_ORDER = 2
MAX_ORDER = 16


class ParseError(ValueError):
    """Syntax or range error in a network document; offset is a byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


def _check_wire(w: int, order: int, offset: int, seen: list[int]) -> None:
    if w == 0:
        raise ParseError("wire 0 is invalid (wires are numbered from 1)", offset)
    if w > order:
        raise ParseError(f"wire {w} exceeds network order {order}", offset)
    if w in seen:
        raise ParseError(f"duplicate wire {w} within token", offset)
    seen.append(w)


def _scan_bracket_list(text: str, pos: int, order: int) -> tuple[list[int], int]:
    # pos points at '['
    start = pos
    pos += 1
    wires: list[int] = []
    while True:
        if pos >= len(text):
            raise ParseError("unterminated '[' wire list", pos)
        num_start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == num_start:
            raise ParseError(f"expected wire number, found {text[pos]!r}", pos)
        if len(wires) == 4:
            raise ParseError("token lists more than 4 wires", num_start)
        _check_wire(int(text[num_start:pos]), order, num_start, wires)
        if pos >= len(text):
            raise ParseError("unterminated '[' wire list", pos)
        if text[pos] == ",":
            pos += 1
            continue
        if text[pos] == "]":
            if len(wires) < 2:
                raise ParseError("token needs at least 2 wires", start)
            return wires, pos + 1
        raise ParseError(f"expected ',' or ']', found {text[pos]!r}", pos)


def _scan_digits(text: str, pos: int, order: int) -> tuple[list[int], int]:
    start = pos
    wires: list[int] = []
    while pos < len(text) and text[pos].isdigit():
        if len(wires) == 4:
            raise ParseError("token lists more than 4 wires; expected '-' or '='", pos)
        _check_wire(int(text[pos]), order, pos, wires)
        pos += 1
    if len(wires) < 2:
        raise ParseError("token needs at least 2 wires", start)
    return wires, pos


def parse(text: str, order: int, name: str | None = None) -> Network:
    """Parse a network document for the given wire count.

    Raises ParseError (with a byte offset) on any syntax problem, out of
    range or repeated wire, or a wire list missing its terminator.
    """
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise ValueError(f"order must be in {MIN_ORDER}..{MAX_ORDER}, got {order}")
    elements: list[Element] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "[":
            wires, pos = _scan_bracket_list(text, pos, order)
        elif ch.isdigit():
            wires, pos = _scan_digits(text, pos, order)
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        if pos >= len(text):
            raise ParseError("wire list missing its '-' or '=' terminator", pos)
        term = text[pos]
        if term not in "-=":
            raise ParseError(f"expected '-' or '=', found {term!r}", pos)
        pos += 1
        element = _KINDS[len(wires)](*sorted(wires))
        elements.append(element)
        if term == "=":
            reflected = mirror(element, order)
            if reflected != element:
                elements.append(reflected)
    return Network(order, tuple(elements), name)


def serialize(network: Network) -> str:
    """Emit the canonical document: one '-' token per element, in order.

    Mirror shorthand is never reconstructed, so parse(serialize(n), n.order)
    equals n for every valid network.
    """
    check_valid(network)
    parts = []
    for el in network.elements:
        if network.order <= 9:
            parts.append("".join(str(w) for w in el.endpoints) + "-")
        else:
            parts.append("[" + ",".join(str(w) for w in el.endpoints) + "]-")
    return "".join(parts)

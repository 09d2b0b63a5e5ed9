"""Text grammars for the element types, and DOT rendering of partitions.

Grammars (sizes are inferred from the content):

    partial map   [2,_,1]          one entry per point, _ for undefined
    partition     {1 2'}{2}{1'}    blocks of points, prime marks the lower row
    normal form   {-2,-1};+2       ascending excluded list, then signed shift
    word          gege             letters over g, h, e

Parsing any canonical serialization returns an equal element, and
re-serializing a parsed element reproduces canonical text.
"""

from __future__ import annotations

from .elements import PartialMap, Partition, require_kind
from .pmonoid import NF, nf_of_word


class ParseError(ValueError):
    """A syntax or semantic error, carrying the offending position."""

    def __init__(self, message, position):
        super().__init__(f"position {position}: {message}")
        self.position = position
        self.reason = message


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def skip_spaces(self):
        while self.peek() == " ":
            self.pos += 1

    def integer(self, signed=False):
        start = self.pos
        if signed and self.peek() in "+-":
            self.pos += 1
        if not self.peek().isdigit():
            raise ParseError("expected a digit", self.pos)
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def expect_end(self):
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)


def parse_partial_map(text: str) -> PartialMap:
    sc = _Scanner(text)
    sc.take("[")
    images = []
    sc.skip_spaces()
    if sc.peek() != "]":
        while True:
            sc.skip_spaces()
            if sc.peek() == "_":
                sc.pos += 1
                images.append(None)
            else:
                at = sc.pos
                value = sc.integer()
                if value < 1:
                    raise ParseError("points are numbered from 1", at)
                images.append(value)
            sc.skip_spaces()
            if sc.peek() == ",":
                sc.pos += 1
                continue
            break
    sc.take("]")
    sc.expect_end()
    n = len(images)
    for i, v in enumerate(images):
        if v is not None and v > n:
            raise ParseError(f"image {v} exceeds the inferred size {n}", 0)
    return PartialMap(images)


def parse_partition(text: str) -> Partition:
    sc = _Scanner(text)
    blocks = []
    points_seen = {}
    max_label = 0
    while sc.peek():
        sc.take("{")
        block = []
        while True:
            sc.skip_spaces()
            at = sc.pos
            label = sc.integer()
            if label < 1:
                raise ParseError("points are numbered from 1", at)
            primed = False
            if sc.peek() == "'":
                sc.pos += 1
                primed = True
            point = -label if primed else label
            if point in points_seen:
                name = f"{label}'" if primed else str(label)
                raise ParseError(f"point {name} repeated", at)
            points_seen[point] = at
            max_label = max(max_label, label)
            block.append(point)
            sc.skip_spaces()
            if sc.peek() == "}":
                break
        sc.take("}")
        blocks.append(block)
    sc.expect_end()
    if not blocks:
        raise ParseError("expected '{'", 0)
    n = max_label
    for label in range(1, n + 1):
        for point, name in ((label, str(label)), (-label, f"{label}'")):
            if point not in points_seen:
                raise ParseError(f"point {name} missing", len(text))
    return Partition(n, blocks)


def parse_nf(text: str) -> NF:
    sc = _Scanner(text)
    sc.take("{")
    excluded = []
    sc.skip_spaces()
    if sc.peek() != "}":
        while True:
            sc.skip_spaces()
            at = sc.pos
            value = sc.integer(signed=True)
            if value in excluded:
                raise ParseError(f"excluded point {value} repeated", at)
            excluded.append(value)
            sc.skip_spaces()
            if sc.peek() == ",":
                sc.pos += 1
                continue
            break
    sc.take("}")
    sc.take(";")
    shift = sc.integer(signed=True)
    sc.expect_end()
    return NF(tuple(sorted(excluded)), shift)


def parse_word(text: str) -> NF:
    for pos, ch in enumerate(text):
        if ch not in "ghe":
            raise ParseError(f"bad symbol {ch!r} (expected g, h or e)", pos)
    return nf_of_word(text)


def parse_element(kind: str, text: str):
    """Parse by kind; T/PT/I/P are element kinds, NF and word are shift maps."""
    if kind in ("T", "PT", "I"):
        element = parse_partial_map(text)
        try:
            require_kind(element, kind)
        except ValueError:
            detail = "entries must be distinct" if kind == "I" else "no entry may be _"
            raise ParseError(f"not a {kind} element: {detail}", 0) from None
        return element
    if kind == "P":
        return parse_partition(text)
    if kind == "NF":
        return parse_nf(text)
    if kind == "word":
        return parse_word(text)
    raise ValueError(f"unknown kind {kind!r}")


def format_nf(a: NF) -> str:
    return "{%s};%+d" % (",".join(str(x) for x in a.excluded), a.shift)


def format_element(x) -> str:
    if isinstance(x, NF):
        return format_nf(x)
    return str(x)


def render_partition(a: Partition) -> str:
    """DOT text for the two-row diagram, one spanning path per block.

    The upper row is ranked above the lower row; node and edge order follow
    the canonical block order so output is stable.
    """
    n = a.n

    def node(p):
        return f"u{p}" if p <= n else f"l{p - n}"

    def label(p):
        return str(p) if p <= n else f"{p - n}'"

    lines = ["graph partition {"]
    lines.append("  rankdir=TB;")
    lines.append("  " + " ".join(f'u{x} [label="{x}"];' for x in range(1, n + 1)))
    lines.append("  " + " ".join(f'l{x} [label="{x}\'"];' for x in range(1, n + 1)))
    lines.append("  { rank=min; %s }" % "; ".join(f"u{x}" for x in range(1, n + 1)))
    lines.append("  { rank=max; %s }" % "; ".join(f"l{x}" for x in range(1, n + 1)))
    for block in a.blocks:
        for p, q in zip(block, block[1:]):
            lines.append(f"  {node(p)} -- {node(q)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

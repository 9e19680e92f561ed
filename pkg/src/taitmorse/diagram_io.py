"""
PD codes
========

Planar diagram notation for knot and link diagrams. Each crossing is a
quadruple ``X[a,b,c,d]`` of arc labels listed counterclockwise, starting
at the incoming under-strand (the Knot Atlas convention). So ``a -> c`` is
the under-strand and ``b``, ``d`` are the ends of the over-strand.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .errors import PdError

Quad = tuple[int, int, int, int]


@dataclass(frozen=True)
class PdCode:
    """An ordered list of crossings, each a counterclockwise quadruple."""

    crossings: tuple[Quad, ...]

    def __post_init__(self):
        crossings = tuple(tuple(int(a) for a in q) for q in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        _check_labels(crossings)

    def __len__(self):
        return len(self.crossings)

    @property
    def labels(self) -> list[int]:
        """Arc labels in order of first appearance."""
        seen = {}
        for quad in self.crossings:
            for a in quad:
                seen.setdefault(a, None)
        return list(seen)

    def __str__(self):
        return serialize_pd(self)


def _check_labels(crossings):
    if not crossings:
        raise PdError("empty diagram")
    for quad in crossings:
        if len(quad) != 4:
            raise PdError(f"crossing {quad} does not have four arcs")
        for a in quad:
            if a <= 0:
                raise PdError(f"arc label {a} is not a positive integer")
    counts = Counter(a for quad in crossings for a in quad)
    bad = sorted(a for a, k in counts.items() if k != 2)
    if bad:
        raise PdError(
            "arc labels must appear exactly twice; offending labels: "
            + ",".join(map(str, bad))
        )


_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<word>PD\[|X\[)|(?P<punct>[\],]))")


def _tokens(text):
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PdError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()
    yield "end", "", end


def parse_pd(text: str) -> PdCode:
    """Parse ``PD[X[a,b,c,d], ...]``; whitespace is ignored.

    >>> parse_pd("PD[X[1,1,2,2]]").crossings
    ((1, 1, 2, 2),)
    """
    toks = _tokens(text)

    def expect(kind, value=None):
        k, v, p = next(toks)
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            got = v if v else "end of input"
            raise PdError(f"expected {want!r}, found {got!r}", p)
        return v, p

    expect("word", "PD[")
    crossings = []
    k, v, p = next(toks)
    if k == "punct" and v == "]":
        expect("end")
        raise PdError("empty diagram")
    while True:
        if not (k == "word" and v == "X["):
            raise PdError(f"expected 'X[', found {v or 'end of input'!r}", p)
        quad = []
        for i in range(4):
            num, _ = expect("int")
            quad.append(int(num))
            expect("punct", "," if i < 3 else "]")
        crossings.append(tuple(quad))
        sep, p = expect("punct")
        if sep == "]":
            break
        k, v, p = next(toks)
    expect("end")
    return PdCode(tuple(crossings))


def serialize_pd(code: PdCode) -> str:
    """Canonical text: crossings in stored order, no spaces."""
    body = ",".join("X[{},{},{},{}]".format(*q) for q in code.crossings)
    return f"PD[{body}]"


# Knot Atlas PD codes; each passes map_from_pd and is alternating.
_BUILTIN = {
    "kink": "PD[X[1,1,2,2]]",
    "3_1": "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]",
    "4_1": "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]",
    "5_1": "PD[X[1,6,2,7],X[3,8,4,9],X[5,10,6,1],X[7,2,8,3],X[9,4,10,5]]",
    "5_2": "PD[X[1,4,2,5],X[3,8,4,9],X[5,10,6,1],X[9,6,10,7],X[7,2,8,3]]",
    "6_1": "PD[X[1,4,2,5],X[7,10,8,11],X[3,9,4,8],X[9,3,10,2],X[5,12,6,1],"
    "X[11,6,12,7]]",
    "6_2": "PD[X[1,4,2,5],X[5,10,6,11],X[3,9,4,8],X[9,3,10,2],X[7,12,8,1],"
    "X[11,6,12,7]]",
    "6_3": "PD[X[4,2,5,1],X[8,4,9,3],X[12,9,1,10],X[10,5,11,6],X[6,11,7,12],"
    "X[2,8,3,7]]",
    "7_1": "PD[X[1,8,2,9],X[3,10,4,11],X[5,12,6,13],X[7,14,8,1],X[9,2,10,3],"
    "X[11,4,12,5],X[13,6,14,7]]",
}

BUILTIN_NAMES = tuple(_BUILTIN)


def builtin_diagram(name: str) -> PdCode:
    """Return one of the small sample diagrams listed in ``BUILTIN_NAMES``."""
    try:
        return parse_pd(_BUILTIN[name])
    except KeyError:
        raise KeyError(
            f"unknown diagram {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None

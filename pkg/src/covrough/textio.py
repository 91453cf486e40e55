"""Plain-text covering files and set specifications.

Covering file::

    # comment
    a b c d e f      <- universe, in order
    a b              <- one block per nonblank line
    a c d

Set specifications are comma separated element names (``a,b,c``); an empty
string, ``{}`` or ``-`` denotes the empty set.  Surrounding braces and spaces
are tolerated so table output can be pasted back in.
"""

from __future__ import annotations

from typing import Iterable

from .covering import Covering, ElementSet, Universe, build_covering
from .errors import CovroughError, ParseError, UnknownElement


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def parse_covering(text: str) -> Covering:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("no universe line found")
    uline, universe_text = lines[0]
    try:
        universe = Universe(universe_text.split())
    except CovroughError as exc:
        raise ParseError(str(exc), uline) from None
    if len(lines) == 1:
        raise ParseError("no blocks after the universe line", uline)
    raw = []
    for lineno, line in lines[1:]:
        names = line.split()
        for name in names:
            if name not in universe:
                raise ParseError(f"unknown element {name!r}", lineno)
        raw.append(names)
    # remaining failure modes (empty blocks are impossible here) are whole-file properties
    return build_covering(universe, raw)


def read_covering(path) -> Covering:
    with open(path, encoding="utf-8") as fh:
        return parse_covering(fh.read())


def format_covering(cov: Covering) -> str:
    lines = [" ".join(map(str, cov.universe.elements))]
    for b in cov.blocks:
        lines.append(" ".join(map(str, b.ordered())))
    return "\n".join(lines) + "\n"


def parse_set(spec: str, universe: Universe) -> ElementSet:
    s = spec.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    if s.strip() in ("", "-", "∅"):
        return universe.empty()
    names = [t.strip() for t in s.split(",")]
    if any(not t for t in names):
        raise ParseError(f"empty element name in set {spec!r}")
    for t in names:
        if t not in universe:
            raise UnknownElement(t, f"set {spec!r}")
    return universe.subset(names)


def read_sets(text: str, universe: Universe) -> list[ElementSet]:
    """One set per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in _content_lines(text):
        try:
            out.append(parse_set(line, universe))
        except CovroughError as exc:
            raise ParseError(str(exc), lineno) from None
    return out

"""Parser for functorial expressions.

Grammar: ``expr := atom | expr "*" expr`` with ``*`` left-associative,
so ``Rp[2]*Fstar*Rp[2]`` means ``(Rp[2]*Fstar)*Rp[2]`` and the leftmost
atom is applied first.  Atoms are the builtin names; ``Rp`` and ``Op``
take a prime in square brackets.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .functorials import BUILTIN_ATOMS, Functorial, builtin_functorial, star
from .lattice import DEFAULT_LATTICE_CAP

__all__ = ["parse_functorial_expr"]

_TOKEN = re.compile(r"(?P<name>[A-Za-z]+)|(?P<number>\d+)|(?P<punct>[\[\]*])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        kind = m.lastgroup
        out.append((kind, m.group(), pos))
        pos = m.end()
    return out


def parse_functorial_expr(
    text: str, lattice_cap: int | None = DEFAULT_LATTICE_CAP
) -> Functorial:
    """Parse an expression into a single composite functorial.

    ``lattice_cap`` is handed to every ``Phi`` atom.  Unknown atoms and
    malformed syntax raise :class:`ParseError` with the offending
    position; a non-prime in brackets raises :class:`InvalidPrime`.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    cursor = 0

    def parse_atom() -> Functorial:
        nonlocal cursor
        if cursor >= len(tokens):
            raise ParseError(f"expected an atom at position {len(text)}")
        kind, value, pos = tokens[cursor]
        if kind != "name":
            raise ParseError(f"expected an atom at position {pos}, found {value!r}")
        if value not in BUILTIN_ATOMS:
            raise ParseError(f"unknown atom {value!r} at position {pos}")
        cursor += 1
        takes_prime = value in ("Rp", "Op")
        has_bracket = cursor < len(tokens) and tokens[cursor][1] == "["
        if takes_prime != has_bracket:
            want = f"{value}[<prime>]" if takes_prime else f"plain {value}"
            raise ParseError(f"{value!r} at position {pos}: expected {want}")
        if not has_bracket:
            return builtin_functorial(value, lattice_cap=lattice_cap)
        cursor += 1
        if cursor >= len(tokens) or tokens[cursor][0] != "number":
            raise ParseError(f"expected a prime after '[' at position {pos}")
        p = int(tokens[cursor][1])
        cursor += 1
        if cursor >= len(tokens) or tokens[cursor][1] != "]":
            raise ParseError(f"missing ']' in {value}[...] at position {pos}")
        cursor += 1
        return builtin_functorial(value, p)

    result = parse_atom()
    while cursor < len(tokens):
        kind, value, pos = tokens[cursor]
        if value != "*":
            raise ParseError(f"expected '*' at position {pos}, found {value!r}")
        cursor += 1
        result = star(result, parse_atom())
    return result

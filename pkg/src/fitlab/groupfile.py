"""Reader for the plain-text group file format.

A file is UTF-8 text: blank lines and lines starting with ``#`` are
ignored, the first meaningful line is ``degree N``, and every later
meaningful line is ``gen i1 i2 ... iN`` giving one generator by its
1-based images.  The group is the closure of the listed generators.
"""

from __future__ import annotations

from .errors import ParseError
from .group import Group, group_closure
from .perm import Permutation

__all__ = ["parse_group_file", "read_group_file"]


def parse_group_file(text: str, name: str | None = None) -> Group:
    degree: int | None = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if degree is None:
            if fields[0] != "degree" or len(fields) != 2:
                raise ParseError(
                    f"line {lineno}: expected 'degree N' first, found {line!r}"
                )
            try:
                degree = int(fields[1])
            except ValueError:
                raise ParseError(
                    f"line {lineno}: degree {fields[1]!r} is not an integer"
                ) from None
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be at least 1")
            continue
        if fields[0] != "gen":
            raise ParseError(
                f"line {lineno}: expected 'gen i1 ... i{degree}', found {line!r}"
            )
        if len(fields) != degree + 1:
            raise ParseError(
                f"line {lineno}: expected {degree} images, found {len(fields) - 1}"
            )
        try:
            images = [int(f) for f in fields[1:]]
        except ValueError:
            raise ParseError(f"line {lineno}: images must be integers") from None
        if not all(1 <= i <= degree for i in images):
            raise ParseError(f"line {lineno}: images must lie in 1..{degree}")
        gens.append(Permutation.from_one_based(images))
    if degree is None:
        raise ParseError("no 'degree' line found")
    if not gens:
        raise ParseError("no 'gen' lines found")
    return group_closure(gens, degree=degree, name=name)


def read_group_file(path, name: str | None = None) -> Group:
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    if name is None:
        stem = str(path).rsplit("/", 1)[-1]
        name = stem.rsplit(".", 1)[0] if "." in stem else stem
    return parse_group_file(text, name=name)

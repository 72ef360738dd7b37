"""Permutations on the points 1..n, stored as 0-based image tuples.

The composition convention throughout the package is right action: in a
product ``a * b`` the left operand acts first, so ``(a * b)(x) == b(a(x))``.
Points are 0-based internally and 1-based in every textual format.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DegreeMismatch, InvalidPermutation

__all__ = ["Permutation", "permutation_product", "identity_tuple", "compose"]


def identity_tuple(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Raw image-tuple product, left operand applied first."""
    return tuple(map(b.__getitem__, a))


class Permutation:
    """Immutable permutation of {0, .., degree-1}."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]) -> None:
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise InvalidPermutation(f"image sequence {imgs!r} is not a bijection")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles over 1-based points."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise InvalidPermutation(f"point {point} outside 1..{degree}")
                if point - 1 in seen:
                    raise InvalidPermutation(f"point {point} repeated across cycles")
                seen.add(point - 1)
            for i, point in enumerate(cycle):
                images[point - 1] = cycle[(i + 1) % len(cycle)] - 1
        return cls(images)

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Permutation":
        return cls(i - 1 for i in images)

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise DegreeMismatch(
                f"degree {len(self.images)} vs {len(other.images)}"
            )
        return Permutation.__new_unchecked(compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation.__new_unchecked(tuple(inv))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def order(self) -> int:
        n = 1
        power = self.images
        ident = identity_tuple(len(self.images))
        while power != ident:
            power = compose(power, self.images)
            n += 1
        return n

    def is_identity(self) -> bool:
        return self.images == identity_tuple(len(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles over 1-based points, each starting at its minimum."""
        out: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            out.append(tuple(p + 1 for p in cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}]"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    @staticmethod
    def __new_unchecked(images: tuple[int, ...]) -> "Permutation":
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", images)
        return p


def permutation_product(a: Permutation, b: Permutation) -> Permutation:
    """Product with the left operand applied first."""
    return a * b

"""Permutations of the six labels.

A :class:`Perm` stores 0-based images.  The product is read left to
right: (s * t)(i) = t(s(i)), i.e. apply s first.  This matches how
relabelled configurations compose, so the induced matrices on the
invariant generators multiply covariantly: M(s * t) = M(s) M(t).
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator


class Perm:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]) -> None:
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int = 6) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int = 6) -> "Perm":
        """Build from 1-based disjoint cycles, e.g. [(1, 2), (3, 4, 5)]."""
        imgs = list(range(n))
        for cycle in cycles:
            c = [i - 1 for i in cycle]
            for a, b in zip(c, c[1:] + c[:1]):
                imgs[a] = b
        return cls(imgs)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(other.images[i] for i in self.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (1-based), longest first, fixed points omitted."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(i + 1 for i in cyc))
        out.sort(key=lambda c: (-len(c), c))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self.images) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return -1 if sum(l - 1 for l in self.cycle_type()) % 2 else 1

    def fixed_points(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i == j)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "Perm(id)"
        return "Perm(" + "".join("(" + "".join(str(i) for i in c) + ")" for c in cyc) + ")"


def all_perms(n: int = 6) -> Iterator[Perm]:
    """All n! permutations in lexicographic order of their image tuples."""
    for imgs in permutations(range(n)):
        yield Perm(imgs)


def class_size(cycle_type: tuple[int, ...]) -> int:
    """Size of the conjugacy class with the given cycle type."""
    from math import factorial, prod

    n = sum(cycle_type)
    mult: dict[int, int] = {}
    for l in cycle_type:
        mult[l] = mult.get(l, 0) + 1
    centralizer = prod(l**m * factorial(m) for l, m in mult.items())
    return factorial(n) // centralizer

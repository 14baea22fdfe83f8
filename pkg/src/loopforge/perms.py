"""Permutations of {0, ..., d-1} backed by ``bytes``.

The image table of a permutation is stored as a ``bytes`` object, so
composition is a single :meth:`bytes.translate` call and runs at C speed.
That caps the degree at 256, far above the degrees this project searches.

Points are 0-indexed everywhere in memory; 1-indexed cycle notation appears
only at I/O boundaries (see :mod:`loopforge.catalog`).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence

MAX_DEGREE = 256

# Right-padding for translate tables: identity on the bytes above the degree.
_PAD = bytes(range(256))


class Perm:
    """A permutation of ``{0, ..., degree-1}``.

    Products compose left to right: ``x * (p * q) == (x * p) * q``, i.e.
    ``(p * q)[x] == q[p[x]]``. This matches the convention used for loop
    translations throughout the package.
    """

    __slots__ = ("images",)

    images: bytes

    def __init__(self, images: Sequence[int] | bytes) -> None:
        b = bytes(images)
        if len(b) > MAX_DEGREE:
            raise ValueError(f"degree {len(b)} exceeds maximum {MAX_DEGREE}")
        # Reject non-bijective tables early; sorted(bytes) is cheap at d <= 256.
        if bytes(sorted(b)) != _PAD[: len(b)]:
            raise ValueError("image table is not a permutation")
        object.__setattr__(self, "images", b)

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(_PAD[:degree])

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build a permutation from disjoint cycles of 0-indexed points."""
        images = bytearray(_PAD[:degree])
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise ValueError(f"point {point} out of range for degree {degree}")
                if point in seen:
                    raise ValueError(f"point {point} repeated across cycles")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._raw(bytes(images))

    @classmethod
    def _raw(cls, images: bytes) -> "Perm":
        """Wrap a table known to be a valid permutation (skips validation)."""
        self = object.__new__(cls)
        object.__setattr__(self, "images", images)
        return self

    # -- the group operations ----------------------------------------------

    def __mul__(self, other: "Perm") -> "Perm":
        # translate maps byte x to table[x]; padding keeps other's table total.
        return Perm._raw(self.images.translate(other.images + _PAD[len(other.images):]))

    def inverse(self) -> "Perm":
        images = self.images
        inv = bytearray(len(images))
        for i, j in enumerate(images):
            inv[j] = i
        return Perm._raw(bytes(inv))

    def conj(self, h: "Perm") -> "Perm":
        """Return ``h^-1 * self * h``."""
        return h.inverse() * self * h

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inverse() ** (-n)
        result = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- queries -------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return self.images == _PAD[: len(self.images)]

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def is_fixed_point_free(self) -> bool:
        """True when no point is fixed (the identity on degree 0 counts)."""
        return all(i != j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point,
        sorted by that point."""
        seen = bytearray(self.degree)
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = 1
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = 1
                point = self.images[point]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Nontrivial cycle lengths in decreasing order."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __reduce__(self):
        # immutability blocks slot assignment, so pickle through the ctor
        return (Perm, (self.images,))

    def __repr__(self) -> str:
        if self.is_identity():
            return f"Perm.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"<Perm deg={self.degree} {body}>"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Perm is immutable")


def orbit(generators: Sequence[Perm], point: int) -> list[int]:
    """The orbit of ``point`` under the group generated by ``generators``,
    in BFS discovery order."""
    seen = {point}
    queue = [point]
    for x in queue:
        for g in generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return queue


def orbits(generators: Sequence[Perm], degree: int) -> list[list[int]]:
    """All orbits on ``{0, ..., degree-1}``, each in BFS order from its least
    point, sorted by least point."""
    seen = bytearray(degree)
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        orb = orbit(generators, start)
        for x in orb:
            seen[x] = 1
        out.append(orb)
    return out


def orbit_with_words(
    generators: Sequence[Perm], point: int, degree: int
) -> tuple[dict[int, Perm], list[int]]:
    """Orbit of ``point`` with, for each orbit element y, a permutation u
    (a word in the generators) such that ``point * u == y``.

    Returns ``(transversal, order)`` where ``order`` is BFS discovery order.
    """
    transversal = {point: Perm.identity(degree)}
    queue = [point]
    for x in queue:
        ux = transversal[x]
        for g in generators:
            y = g[x]
            if y not in transversal:
                transversal[y] = ux * g
                queue.append(y)
    return transversal, queue

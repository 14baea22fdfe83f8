"""Loops as Latin squares with neutral element, and their predicates.

A loop of order d lives on points {0, ..., d-1} with neutral element 0
(external formats are 1-indexed with neutral 1; see to_json/from_json).
Rows are stored as bytes, so translations are Perms for free and the
automorphism check vectorizes into per-row translate comparisons.
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .groups import PermGroup
from .perms import MAX_DEGREE, Perm, orbits

_PAD = bytes(range(256))


@dataclass(frozen=True)
class LoopProperties:
    """Outcome of the standard property battery.

    ``exponent`` is the least n with x^n = 1 for all x; it is None when
    left- and right-bracketed powers disagree somewhere (``powers_agree``
    False), in which case ``left_exponent`` still reports the left-bracketed
    value.
    """

    associative: bool
    commutative: bool
    flexible: bool
    aaip: bool
    has_two_sided_inverses: bool
    exponent: int | None
    left_exponent: int
    powers_agree: bool


@dataclass(frozen=True)
class InnerGenerators:
    """The three standard families generating the inner mapping group."""

    right: tuple[Perm, ...]   # R_{x,y} = R_x R_y R_{x*y}^-1
    left: tuple[Perm, ...]    # L_{x,y} = L_x L_y L_{y*x}^-1
    middle: tuple[Perm, ...]  # T_x = R_x L_x^-1


class LoopTable:
    """A d x d Latin square whose row 0 and column 0 are the identity."""

    __slots__ = ("order", "rows", "_cols")

    def __init__(self, rows: Sequence[Sequence[int] | bytes]) -> None:
        d = len(rows)
        if not 1 <= d <= MAX_DEGREE:
            raise ValueError(f"order {d} out of supported range 1..{MAX_DEGREE}")
        table = tuple(bytes(row) for row in rows)
        identity = _PAD[:d]
        for i, row in enumerate(table):
            if len(row) != d:
                raise ValueError(f"row {i} has length {len(row)}, expected {d}")
            if bytes(sorted(row)) != identity:
                raise ValueError(f"row {i} is not a permutation of 0..{d - 1}")
        cols = tuple(bytes(table[i][j] for i in range(d)) for j in range(d))
        for j, col in enumerate(cols):
            if bytes(sorted(col)) != identity:
                raise ValueError(f"column {j} is not a permutation of 0..{d - 1}")
        if table[0] != identity:
            raise ValueError("row 0 is not the identity: 0 is not a left neutral")
        if cols[0] != identity:
            raise ValueError("column 0 is not the identity: 0 is not a right neutral")
        object.__setattr__(self, "order", d)
        object.__setattr__(self, "rows", table)
        object.__setattr__(self, "_cols", cols)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LoopTable is immutable")

    # -- the operation and divisions ------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def left_divide(self, x: int, z: int) -> int:
        """The unique y with x * y = z."""
        return self.rows[x].index(z)

    def right_divide(self, z: int, y: int) -> int:
        """The unique x with x * y = z."""
        return self._cols[y].index(z)

    # -- translations and multiplication groups ---------------------------------

    def right_translation(self, y: int) -> Perm:
        return Perm._raw(self._cols[y])

    def left_translation(self, x: int) -> Perm:
        return Perm._raw(self.rows[x])

    def right_translations(self) -> list[Perm]:
        return [Perm._raw(col) for col in self._cols]

    def left_translations(self) -> list[Perm]:
        return [Perm._raw(row) for row in self.rows]

    def rmlt(self) -> PermGroup:
        return PermGroup(self.right_translations(), self.order)

    def mlt(self) -> PermGroup:
        return PermGroup(self.right_translations() + self.left_translations(), self.order)

    def inner_generators(self) -> InnerGenerators:
        rights = self.right_translations()
        lefts = self.left_translations()
        right_inv = [p.inverse() for p in rights]
        left_inv = [p.inverse() for p in lefts]
        d = self.order
        right_family = tuple(
            rights[x] * rights[y] * right_inv[self.rows[x][y]]
            for x in range(d)
            for y in range(d)
        )
        left_family = tuple(
            lefts[x] * lefts[y] * left_inv[self.rows[y][x]]
            for x in range(d)
            for y in range(d)
        )
        middle_family = tuple(rights[x] * left_inv[x] for x in range(d))
        return InnerGenerators(right_family, left_family, middle_family)

    # -- predicates --------------------------------------------------------------

    def is_associative(self) -> bool:
        cols = self._cols
        d = self.order
        pad = _PAD[d:]
        return all(
            cols[y].translate(cols[z] + pad) == cols[self.rows[y][z]]
            for y in range(d)
            for z in range(d)
        )

    def is_commutative(self) -> bool:
        return self.rows == self._cols

    def is_flexible(self) -> bool:
        d = self.order
        pad = _PAD[d:]
        return all(
            self.rows[x].translate(self._cols[x] + pad)
            == self._cols[x].translate(self.rows[x] + pad)
            for x in range(d)
        )

    def _inverses(self) -> tuple[list[int], list[int]]:
        """(right inverses, left inverses): x * right[x] = left[x] * x = 0."""
        right = [row.index(0) for row in self.rows]
        left = [col.index(0) for col in self._cols]
        return right, left

    def has_two_sided_inverses(self) -> bool:
        right, left = self._inverses()
        return right == left

    def has_aaip(self) -> bool:
        """Antiautomorphic inverse property: (x*y)^-1 = y^-1 * x^-1.
        False when inverses are not two-sided."""
        right, left = self._inverses()
        if right != left:
            return False
        inv = right
        d = self.order
        return all(
            inv[self.rows[x][y]] == self.rows[inv[y]][inv[x]]
            for x in range(d)
            for y in range(d)
        )

    def _power_cycles(self, x: int) -> tuple[list[int], list[int]]:
        """Left- and right-bracketed power sequences of x, from x^1 = x up to
        the first power equal to the neutral element."""
        left = [self.rows[x][0]]
        while left[-1] != 0:
            left.append(self.rows[x][left[-1]])
        right = [self._cols[x][0]]
        while right[-1] != 0:
            right.append(self._cols[x][right[-1]])
        return left, right

    def properties(self) -> LoopProperties:
        left_orders = []
        agree = True
        for x in range(self.order):
            left, right = self._power_cycles(x)
            left_orders.append(len(left))
            if left != right:
                agree = False
        left_exponent = math.lcm(*left_orders)
        return LoopProperties(
            associative=self.is_associative(),
            commutative=self.is_commutative(),
            flexible=self.is_flexible(),
            aaip=self.has_aaip(),
            has_two_sided_inverses=self.has_two_sided_inverses(),
            exponent=left_exponent if agree else None,
            left_exponent=left_exponent,
            powers_agree=agree,
        )

    # -- automorphisms -------------------------------------------------------------

    def is_automorphism(self, p: Perm) -> bool:
        """Direct check of p(x*y) = p(x)*p(y), vectorized one row at a time:
        row_x translated by p must equal p followed by row_{p(x)}."""
        if p.degree != self.order:
            return False
        pad = _PAD[self.order:]
        p_table = p.images + pad
        images = p.images
        return all(
            self.rows[x].translate(p_table) == images.translate(self.rows[images[x]] + pad)
            for x in range(self.order)
        )

    def _distinct_nontrivial(self, perms: Iterable[Perm]) -> list[Perm]:
        return sorted({p for p in perms if not p.is_identity()})

    def is_right_automorphic(self) -> bool:
        inner = self.inner_generators()
        return all(self.is_automorphism(p) for p in self._distinct_nontrivial(inner.right))

    def is_automorphic(self) -> bool:
        inner = self.inner_generators()
        mappings = self._distinct_nontrivial(inner.right + inner.left + inner.middle)
        return all(self.is_automorphism(p) for p in mappings)

    def is_automorphic_via_conjugations(self) -> bool:
        """Right automorphic with all conjugations T_x automorphisms; agrees
        with is_automorphic on every loop."""
        inner = self.inner_generators()
        mappings = self._distinct_nontrivial(inner.right + inner.middle)
        return all(self.is_automorphism(p) for p in mappings)

    # -- simplicity ------------------------------------------------------------------

    def is_simple(self) -> bool:
        """Simplicity via primitivity of the multiplication group."""
        return self.mlt().is_primitive()

    def is_simple_via_subloops(self) -> bool:
        """Independent method: the smallest normal subloop containing any
        non-neutral element must be the whole loop."""
        if self.order == 1:
            return False
        inner = self.inner_generators()
        mappings = self._distinct_nontrivial(inner.right + inner.left + inner.middle)
        # a normal subloop is a union of inner mapping orbits, so closures can
        # pull in whole orbits instead of rescanning the mappings per seed
        orbit_of: list[tuple[int, ...]] = [()] * self.order
        for orb in orbits(mappings, self.order):
            block = tuple(orb)
            for x in orb:
                orbit_of[x] = block
        full = self.order
        for seed in range(1, self.order):
            if len(self._normal_subloop_closure(seed, orbit_of)) != full:
                return False
        return True

    def _normal_subloop_closure(
        self, seed: int, orbit_of: list[tuple[int, ...]]
    ) -> set[int]:
        members: set[int] = set()
        new: list[int] = []

        def visit(k: int) -> None:
            if k not in members:
                members.update(orbit_of[k])
                new.extend(orbit_of[k])

        visit(0)
        visit(seed)
        frontier = new
        while frontier:
            new = []
            for x in list(members):
                for y in frontier:
                    visit(self.rows[x][y])
                    visit(self.rows[y][x])
                    visit(self.rows[x].index(y))
                    visit(self.rows[y].index(x))
                    visit(self._cols[x].index(y))
                    visit(self._cols[y].index(x))
            frontier = new
        return members

    # -- comparisons, hashing, serialization -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopTable):
            return NotImplemented
        return self.rows == other.rows

    def __lt__(self, other: "LoopTable") -> bool:
        return (self.order, self.rows) < (other.order, other.rows)

    def __hash__(self) -> int:
        return hash(self.rows)

    def __reduce__(self):
        return (LoopTable, (self.rows,))

    def __repr__(self) -> str:
        return f"<LoopTable order={self.order}>"

    def relabel(self, p: Perm) -> "LoopTable":
        """The isomorphic copy under the bijection p (which must fix 0):
        new(p(x), p(y)) = p(old(x, y))."""
        if p[0] != 0:
            raise ValueError("relabeling must fix the neutral element")
        d = self.order
        new = [[0] * d for _ in range(d)]
        for x in range(d):
            for y in range(d):
                new[p[x]][p[y]] = p[self.rows[x][y]]
        return LoopTable(new)

    def to_json(self) -> str:
        table = [[v + 1 for v in row] for row in self.rows]
        return json.dumps({"order": self.order, "table": table})

    @classmethod
    def from_json(cls, text: str) -> "LoopTable":
        data = json.loads(text)
        if not isinstance(data, dict) or "order" not in data or "table" not in data:
            raise ValueError('loop JSON must be {"order": d, "table": [[...]]}')
        order = data["order"]
        table = data["table"]
        if not isinstance(table, list) or len(table) != order:
            raise ValueError(f"table must have {order} rows")
        rows = []
        for i, row in enumerate(table):
            if not isinstance(row, list) or len(row) != order:
                raise ValueError(f"row {i + 1} must have {order} entries")
            if not all(isinstance(v, int) and 1 <= v <= order for v in row):
                raise ValueError(f"row {i + 1} entries must be integers in 1..{order}")
            rows.append([v - 1 for v in row])
        return cls(rows)

    @classmethod
    def from_group(cls, group: PermGroup) -> "LoopTable":
        """The Cayley table of a regular permutation group, labeled by the
        point each element sends 0 to."""
        elements = sorted(group.elements(), key=lambda g: g[0])
        d = group.degree
        if len(elements) != d or [g[0] for g in elements] != list(range(d)):
            raise ValueError("group is not regular")
        return cls([[elements[y][x] for y in range(d)] for x in range(d)])


def all_loop_tables(order: int) -> Iterator[LoopTable]:
    """All loops of the given order with neutral 0, by row backtracking.
    Exhaustive and exact; practical for order <= 6."""
    d = order
    if d == 1:
        yield LoopTable([[0]])
        return
    identity = list(range(d))
    rows = [identity] + [[0] * d for _ in range(d - 1)]
    col_used = [1 << j for j in range(d)]  # bitmask of values used per column

    def fill(i: int, j: int) -> Iterator[LoopTable]:
        if i == d:
            yield LoopTable([bytes(row) for row in rows])
            return
        if j == d:
            yield from fill(i + 1, 1)
            return
        row = rows[i]
        row_used = 0
        for k in range(j):
            row_used |= 1 << row[k]
        for v in range(d):
            bit = 1 << v
            if row_used & bit or col_used[j] & bit:
                continue
            row[j] = v
            col_used[j] |= bit
            yield from fill(i, j + 1)
            col_used[j] ^= bit

    for i in range(1, d):
        rows[i][0] = i
    yield from fill(1, 1)

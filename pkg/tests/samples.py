"""Named small groups shared across test modules."""

from __future__ import annotations

from loopforge.groups import PermGroup
from loopforge.perms import Perm


def cyclic(n: int) -> PermGroup:
    return PermGroup([Perm.from_cycles(n, [tuple(range(n))])], n)


def symmetric(n: int) -> PermGroup:
    gens = [Perm.from_cycles(n, [(0, 1)]), Perm.from_cycles(n, [tuple(range(n))])]
    return PermGroup(gens, n)


def alternating(n: int) -> PermGroup:
    cycle = tuple(range(n)) if n % 2 else tuple(range(1, n))
    return PermGroup(
        [Perm.from_cycles(n, [(0, 1, 2)]), Perm.from_cycles(n, [cycle])], n
    )


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n on n points."""
    rotation = Perm.from_cycles(n, [tuple(range(n))])
    reflection = Perm([(-i) % n for i in range(n)])
    return PermGroup([rotation, reflection], n)


def klein_four() -> PermGroup:
    return PermGroup(
        [Perm.from_cycles(4, [(0, 1), (2, 3)]), Perm.from_cycles(4, [(0, 2), (1, 3)])], 4
    )


def quaternion8() -> PermGroup:
    """Q8 in its regular representation, points = 1,-1,i,-i,j,-j,k,-k."""
    right_i = Perm([2, 3, 1, 0, 7, 6, 4, 5])
    right_j = Perm([4, 5, 6, 7, 1, 0, 3, 2])
    return PermGroup([right_i, right_j], 8)


def psl_2_7() -> PermGroup:
    """PSL(2,7) of order 168 on the projective line over F_7 (point 7 = infinity)."""
    translation = Perm.from_cycles(8, [(0, 1, 2, 3, 4, 5, 6)])
    inversion = Perm.from_cycles(8, [(7, 0), (1, 6), (2, 3), (4, 5)])
    return PermGroup([translation, inversion], 8)


def mathieu11() -> PermGroup:
    a = Perm.from_cycles(11, [tuple(range(11))])
    b = Perm.from_cycles(11, [(2, 6, 10, 7), (3, 9, 4, 5)])
    return PermGroup([a, b], 11)

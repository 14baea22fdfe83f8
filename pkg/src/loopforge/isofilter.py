"""Loop isomorphism: invariants, witness search, deduplication.

Isomorphisms fix the neutral element, so the search assigns images point by
point and closes the partial map under products: once p(x) and p(y) are both
chosen, p(x*y) is forced. Element invariants (power cycle lengths,
translation cycle types) prune the assignment tree; whole-loop fingerprints
short-circuit most non-isomorphic pairs without any search.
"""

from __future__ import annotations

from collections.abc import Iterable

from .loops import LoopTable
from .perms import Perm


def _element_invariants(loop: LoopTable) -> list[tuple]:
    out = []
    for x in range(loop.order):
        left, right = loop._power_cycles(x)
        out.append(
            (
                len(left),
                len(right),
                loop.right_translation(x).cycle_type(),
                loop.left_translation(x).cycle_type(),
            )
        )
    return out


def fingerprint(loop: LoopTable) -> tuple:
    """A cheap isomorphism invariant: equal fingerprints are necessary (not
    sufficient) for isomorphism."""
    props = loop.properties()
    return (
        loop.order,
        props,
        tuple(sorted(_element_invariants(loop))),
        loop.rmlt().order(),
        loop.mlt().order(),
    )


def are_isomorphic(a: LoopTable, b: LoopTable) -> Perm | None:
    """A bijection p with a.relabel(p) == b, or None."""
    if a.order != b.order:
        return None
    inv_a = _element_invariants(a)
    inv_b = _element_invariants(b)
    if sorted(inv_a) != sorted(inv_b):
        return None

    d = a.order
    a_rows = a.rows
    b_rows = b.rows
    forward = [-1] * d
    backward = [-1] * d
    assigned: list[tuple[int, int]] = []

    def extend(x: int, u: int) -> list[tuple[int, int]] | None:
        """Assign p(x) = u and close under products; returns the assignments
        made, or None (with no net state change) on contradiction."""
        made: list[tuple[int, int]] = []
        stack = [(x, u)]
        while stack:
            x, u = stack.pop()
            if forward[x] != -1:
                if forward[x] != u:
                    break
                continue
            if backward[u] != -1:
                break
            if inv_a[x] != inv_b[u]:
                break
            forward[x] = u
            backward[u] = x
            made.append((x, u))
            assigned.append((x, u))
            for y, v in list(assigned):
                stack.append((a_rows[x][y], b_rows[u][v]))
                stack.append((a_rows[y][x], b_rows[v][u]))
        else:
            return made
        for x, u in reversed(made):
            forward[x] = -1
            backward[u] = -1
            assigned.pop()
        return None

    if extend(0, 0) is None:
        return None

    def descend() -> bool:
        x = next((i for i in range(d) if forward[i] == -1), None)
        if x is None:
            return True
        for u in range(d):
            if backward[u] == -1 and inv_b[u] == inv_a[x]:
                made = extend(x, u)
                if made is not None:
                    if descend():
                        return True
                    for y, v in reversed(made):
                        forward[y] = -1
                        backward[v] = -1
                        assigned.pop()
        return False

    if not descend():
        return None
    return Perm(forward)


def filter_up_to_isomorphism(loops: Iterable[LoopTable]) -> list[LoopTable]:
    """One representative per isomorphism class: the lexicographically least
    table of each class, in sorted order."""
    pending = sorted(set(loops))
    kept: list[LoopTable] = []
    by_print: dict[tuple, list[LoopTable]] = {}
    for loop in pending:
        key = fingerprint(loop)
        bucket = by_print.setdefault(key, [])
        if all(are_isomorphic(rep, loop) is None for rep in bucket):
            bucket.append(loop)
            kept.append(loop)
    return kept

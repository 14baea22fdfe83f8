"""Brute-force reference implementations used to cross-check the library.

Everything here is written for clarity over speed and shares no code with
the production algorithms: groups are closed element-by-element, stabilizers
and centralizers are filters over full element lists, and block systems are
found by scanning subsets. Only usable on small groups, which is the point.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from loopforge.perms import Perm


def brute_elements(generators: Sequence[Perm], degree: int, limit: int = 200_000) -> set[Perm]:
    """All elements of the generated group, by multiplicative closure."""
    elements = {Perm.identity(degree)}
    frontier = [Perm.identity(degree)]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if len(elements) > limit:
                        raise RuntimeError(f"brute closure exceeded {limit} elements")
        frontier = new
    return elements


def brute_stabilizer(elements: Iterable[Perm], points: Sequence[int]) -> set[Perm]:
    return {g for g in elements if all(g[p] == p for p in points)}


def brute_centralizer(elements: Iterable[Perm], others: Sequence[Perm]) -> set[Perm]:
    return {g for g in elements if all(g * h == h * g for h in others)}


def conjugacy_classes(elements: Sequence[Perm]) -> list[set[Perm]]:
    """Conjugacy classes as sets, sorted by (size, least member)."""
    pool = set(elements)
    out: list[set[Perm]] = []
    while pool:
        x = min(pool)
        cls = {h.inverse() * x * h for h in elements}
        pool -= cls
        out.append(cls)
    out.sort(key=lambda c: (len(c), min(c).images))
    return out


def brute_min_nontrivial_class_size(elements: Sequence[Perm]) -> int | str:
    sizes = [len(c) for c in conjugacy_classes(elements) if len(c) >= 2]
    return min(sizes) if sizes else "no-nontrivial-class"


def brute_is_transitive(elements: Iterable[Perm], degree: int) -> bool:
    return len({g[0] for g in elements}) == degree


def brute_is_k_transitive(elements: Sequence[Perm], degree: int, k: int) -> bool:
    """Checks that ordered k-tuples of distinct points form one orbit."""
    if degree < k:
        return False
    base = tuple(range(k))
    images = {tuple(g[p] for p in base) for g in elements}
    return len(images) == len(list(itertools.permutations(range(degree), k)))


def brute_is_primitive(elements: Sequence[Perm], degree: int) -> bool:
    """Scan all candidate blocks containing point 0. Exponential in degree."""
    if not brute_is_transitive(elements, degree):
        return False
    if degree == 1:
        return False
    rest = [p for p in range(1, degree)]
    for size in range(2, degree):
        if degree % size:
            continue
        for extra in itertools.combinations(rest, size - 1):
            block = frozenset((0,) + extra)
            if all(
                (img := frozenset(g[p] for p in block)) == block or not (img & block)
                for g in elements
            ):
                return False
    return True


def brute_is_solvable(elements: Sequence[Perm], degree: int) -> bool:
    current = set(elements)
    while len(current) > 1:
        commutators = {
            g.inverse() * h.inverse() * g * h for g in current for h in current
        }
        derived = brute_elements(sorted(commutators), degree)
        if len(derived) == len(current):
            return False
        current = derived
    return True


# -- loop oracles (triple loops over raw tables) -------------------------------


def brute_loop_is_associative(rows: Sequence[Sequence[int]]) -> bool:
    d = len(rows)
    return all(
        rows[rows[x][y]][z] == rows[x][rows[y][z]]
        for x in range(d)
        for y in range(d)
        for z in range(d)
    )


def brute_loop_is_commutative(rows: Sequence[Sequence[int]]) -> bool:
    d = len(rows)
    return all(rows[x][y] == rows[y][x] for x in range(d) for y in range(d))


def brute_loop_is_flexible(rows: Sequence[Sequence[int]]) -> bool:
    d = len(rows)
    return all(
        rows[x][rows[y][x]] == rows[rows[x][y]][x] for x in range(d) for y in range(d)
    )


def brute_loop_is_automorphism(rows: Sequence[Sequence[int]], p: Perm) -> bool:
    d = len(rows)
    return all(
        p[rows[x][y]] == rows[p[x]][p[y]] for x in range(d) for y in range(d)
    )


def brute_loop_automorphisms(rows: Sequence[Sequence[int]]) -> list[Perm]:
    """Every automorphism, by filtering all permutations fixing the neutral."""
    d = len(rows)
    out = []
    for images in itertools.permutations(range(1, d)):
        p = Perm((0,) + images)
        if brute_loop_is_automorphism(rows, p):
            out.append(p)
    return out


def brute_loop_powers(rows: Sequence[Sequence[int]], x: int) -> tuple[list[int], list[int]]:
    """Left- and right-bracketed powers x^1, x^2, ... up to the first 0."""
    left = [x]
    while left[-1] != 0:
        left.append(rows[x][left[-1]])
    right = [x]
    while right[-1] != 0:
        right.append(rows[right[-1]][x])
    return left, right


def _brute_inner_mappings(rows: Sequence[Sequence[int]]) -> list[Perm]:
    d = len(rows)
    cols = [[rows[i][j] for i in range(d)] for j in range(d)]
    rights = [Perm(col) for col in cols]
    lefts = [Perm(row) for row in rows]
    out = []
    for x in range(d):
        for y in range(d):
            out.append(rights[x] * rights[y] * rights[rows[x][y]].inverse())
            out.append(lefts[x] * lefts[y] * lefts[rows[y][x]].inverse())
        out.append(rights[x] * lefts[x].inverse())
    return out


def brute_loop_is_simple(rows: Sequence[Sequence[int]]) -> bool:
    """Scan every subset containing 0 for a proper nontrivial normal subloop:
    closed under multiplication, both divisions, and all inner mappings.
    Exponential in the order."""
    d = len(rows)
    if d == 1:
        return False
    inner = _brute_inner_mappings(rows)
    for size in range(2, d):
        for extra in itertools.combinations(range(1, d), size - 1):
            s = frozenset((0,) + extra)
            closed = all(
                rows[x][y] in s and rows[x].index(y) in s
                and [rows[i][x] for i in range(d)].index(y) in s
                for x in s
                for y in s
            ) and all(p[x] in s for p in inner for x in s)
            if closed:
                return False
    return True


def brute_folded_loops(
    generators: Sequence[Perm], degree: int, node_limit: int = 2_000_000
) -> list[tuple[Perm, ...]]:
    """Every normalized transversal R with R[0] the identity, every quotient
    R[i]R[j]^-1 (both directions) fixed-point-free, and R invariant under
    conjugation by the full point stabilizer.  Raw per-point candidate lists;
    each choice is immediately closed under conjugation by the full stabilizer
    element list (the closure members are forced, so placing them up front
    only prunes).  Shares nothing with the layered search."""
    elements = sorted(brute_elements(generators, degree))
    identity = Perm.identity(degree)
    stabilizer = [g for g in elements if g[0] == 0]
    candidates = [
        [g for g in elements if g[0] == i and g.is_fixed_point_free()]
        for i in range(degree)
    ]
    chosen: dict[int, Perm] = {0: identity}
    results: list[tuple[Perm, ...]] = []
    nodes = 0

    def closure(g: Perm) -> dict[int, Perm] | None:
        """The stabilizer-conjugation orbit of g keyed by image of 0, or None
        when it clashes with itself, the current choices, or fails a
        fixed-point-free or quotient condition."""
        forced: dict[int, Perm] = {}
        for h in stabilizer:
            c = h.inverse() * g * h
            if not c.is_fixed_point_free():
                return None
            p = c[0]
            existing = chosen.get(p, forced.get(p))
            if existing is None:
                forced[p] = c
            elif existing != c:
                return None
        news = list(forced.values())
        olds = [r for i, r in chosen.items() if i != 0]
        for a in news:
            a_inv = a.inverse()
            for b in olds + news:
                if b is not a and not (
                    (b * a_inv).is_fixed_point_free()
                    and (a * b.inverse()).is_fixed_point_free()
                ):
                    return None
        return forced

    def dfs() -> None:
        nonlocal nodes
        i = next((p for p in range(degree) if p not in chosen), None)
        if i is None:
            results.append(tuple(chosen[p] for p in range(degree)))
            return
        for g in candidates[i]:
            nodes += 1
            if nodes > node_limit:
                raise RuntimeError(f"oracle exceeded {node_limit} nodes")
            forced = closure(g)
            if forced is None:
                continue
            chosen.update(forced)
            dfs()
            for p in forced:
                del chosen[p]

    dfs()
    return results

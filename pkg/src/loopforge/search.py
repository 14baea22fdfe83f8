"""Search for loops folded inside one primitive group.

Given a transitive group G with point stabilizer H = G_0, every loop whose
right translations lie in G and are normalized by H (equivalently: H acts on
the loop by automorphisms) decomposes as {identity} plus a union of H-orbits
of fixed-point-free elements, one orbit sitting over each H-orbit of points.
The search builds those element orbits per point orbit, discards orbits that
cannot belong to any loop, and runs a depth-first selection of one orbit per
layer under pairwise compatibility. Selections are re-verified from scratch
before being reported.

Mode semantics: "ra" keeps every loop found (they are all right automorphic
by construction) and records simplicity; "aut" keeps simple automorphic
loops; "caut" keeps simple commutative automorphic loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import CatalogEntry
from .folder import LoopFolder, loop_from_folder
from .glclasses import (
    gl_min_nontrivial_class_size,
    is_natural_general_linear,
    prime_power_decomposition,
)
from .groups import PermGroup, ResourceLimitError
from .loops import LoopTable
from .perms import Perm

MODES = ("ra", "aut", "caut")


@dataclass(frozen=True)
class SearchLimits:
    coset_elements: int = 10**6
    class_enumeration: int = 10**7
    dfs_nodes: int = 10**6


@dataclass(frozen=True)
class RunConfig:
    mode: str = "ra"
    skip_four_transitive: bool = True
    skip_solvable: bool = True
    affine_prune: bool = True
    force_search: bool = False
    limits: SearchLimits = field(default_factory=SearchLimits)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, not {self.mode!r}")


@dataclass(frozen=True)
class LoopRecord:
    """A found loop plus the flags the mode filters and reports rely on."""

    table: LoopTable
    associative: bool
    commutative: bool
    simple: bool
    simple_via_subloops: bool
    right_automorphic: bool
    automorphic: bool


@dataclass(frozen=True)
class SearchStats:
    point_orbits: int
    orbit_sizes: tuple[int, ...]
    candidate_counts: tuple[int, ...]
    orbit_counts: tuple[int, ...]
    dfs_nodes: int
    raw_loops: int


@dataclass(frozen=True)
class GroupOutcome:
    name: str
    degree: int
    mode: str
    decision: str  # "searched" | "skipped"
    reason: str | None
    loops: tuple[LoopRecord, ...]
    stats: SearchStats | None


@dataclass(frozen=True)
class _CandidateOrbit:
    members: tuple[Perm, ...]  # sorted; an H-orbit of fixed-point-free elements
    layer: int

    @property
    def rep(self) -> Perm:
        return self.members[0]


def prefilter_reason(entry: CatalogEntry, group: PermGroup, config: RunConfig) -> str | None:
    """First applicable skip reason, or None to search. Checked in a fixed
    order so reported reasons are stable."""
    if config.force_search:
        return None
    if config.skip_four_transitive and group.is_k_transitive(4):
        return "four-transitive"
    if config.mode in ("aut", "caut") and config.skip_solvable and group.is_solvable():
        return "solvable"
    if config.mode == "aut" and group.degree % 2 == 1:
        return "odd-degree"
    if config.mode == "caut" and (group.degree & (group.degree - 1)) != 0:
        return "not-power-of-two"
    if config.mode == "caut" and config.affine_prune and "affine" in entry.tags:
        decomposition = prime_power_decomposition(group.degree)
        if decomposition is not None:
            reason = affine_class_prune(group, *decomposition, config.limits)
            if reason is not None:
                return reason
    return None


def affine_class_prune(
    group: PermGroup, p: int, n: int, limits: SearchLimits
) -> str | None:
    """Eliminate an affine group when its point stabilizer has no conjugacy
    class C with 1 < |C| <= gamma, gamma being the largest stabilizer orbit
    on points; a nonassociative commutative automorphic fold needs one."""
    stabilizer = group.point_stabilizer((0,))
    if stabilizer.is_trivial():
        return "trivial-stabilizer"
    gamma = max(len(orbit) for orbit in stabilizer.orbits())
    if is_natural_general_linear(stabilizer, p, n):
        smallest = gl_min_nontrivial_class_size(n, p)
    else:
        smallest = stabilizer.min_nontrivial_class_size(
            gamma, element_limit=limits.class_enumeration
        )
    if isinstance(smallest, int) and smallest <= gamma:
        return None
    return "affine-class-bound"


def _orbit_of_element(seed: Perm, conjugators: list[tuple[Perm, Perm]], cap: int) -> list[Perm] | None:
    """The orbit of seed under conjugation, or None once it exceeds cap."""
    seen = {seed}
    queue = [seed]
    for x in queue:
        for g, g_inv in conjugators:
            y = g_inv * x * g
            if y not in seen:
                if len(seen) >= cap:
                    return None
                seen.add(y)
                queue.append(y)
    return queue


def _candidate_orbits_for_layer(
    group: PermGroup,
    stabilizer: PermGroup,
    conjugators: list[tuple[Perm, Perm]],
    rep_point: int,
    orbit_size: int,
    limits: SearchLimits,
) -> tuple[int, list[tuple[Perm, ...]]]:
    """Step 2 and 3 for one point orbit: fixed-point-free elements of the
    centralizer coset mapping 0 to the representative point, grouped into
    H-orbits of the right size whose internal quotients are fixed-point-free.
    Returns (number of coset candidates, surviving orbits as sorted tuples)."""
    two_point = stabilizer.point_stabilizer((rep_point,))
    centralizer = group.centralizer(two_point)
    mover = centralizer.representative_action(0, rep_point)
    if mover is None:
        return 0, []
    fixing = centralizer.point_stabilizer((0,))
    coset = fixing.right_coset(mover, element_limit=limits.coset_elements)
    candidates = [g for g in coset if g.is_fixed_point_free()]

    orbits: list[tuple[Perm, ...]] = []
    seen: set[tuple[Perm, ...]] = set()
    for r in candidates:
        orbit = _orbit_of_element(r, conjugators, orbit_size)
        if orbit is None or len(orbit) != orbit_size:
            continue
        key = tuple(sorted(orbit))
        if key in seen:
            continue
        seen.add(key)
        r_inv = r.inverse()
        if all(s is r or (s * r_inv).is_fixed_point_free() for s in orbit):
            orbits.append(key)
    return len(candidates), orbits


def _compatible(a: _CandidateOrbit, b: _CandidateOrbit) -> bool:
    """Whether orbits a and b can coexist in one loop: every quotient of a
    member of b by a member of a is fixed-point-free. Conjugating by the
    normalizing stabilizer reduces this to one fixed representative of a."""
    t_inv = a.rep.inverse()
    return all((s * t_inv).is_fixed_point_free() for s in b.members)


def _record_for_loop(table: LoopTable, group: PermGroup) -> LoopRecord:
    commutative = table.is_commutative()
    automorphic: bool
    mlt = table.mlt()
    if all(g in group for g in mlt.generators) and mlt.order() == group.order():
        # Mlt(Q) = G, so the inner mapping group is exactly H, which acts by
        # automorphisms by construction.
        automorphic = True
    else:
        automorphic = table.is_automorphic_via_conjugations()
    return LoopRecord(
        table=table,
        associative=table.is_associative(),
        commutative=commutative,
        simple=mlt.is_primitive(),
        simple_via_subloops=table.is_simple_via_subloops(),
        right_automorphic=table.is_right_automorphic(),
        automorphic=automorphic,
    )


def _keep(record: LoopRecord, mode: str) -> bool:
    if mode == "ra":
        return True
    if mode == "aut":
        return record.simple and record.automorphic
    return record.simple and record.automorphic and record.commutative


def search_group(entry: CatalogEntry, config: RunConfig) -> GroupOutcome:
    """Run the full pipeline on one catalog entry."""
    group = entry.group()
    base = dict(name=entry.name, degree=entry.degree, mode=config.mode)

    try:
        reason = prefilter_reason(entry, group, config)
        if reason is not None:
            return GroupOutcome(
                **base, decision="skipped", reason=reason, loops=(), stats=None
            )
        records, stats = _search_loops(group, config)
    except ResourceLimitError as exc:
        return GroupOutcome(
            **base, decision="skipped", reason=f"resource-limit: {exc}", loops=(), stats=None
        )
    kept = tuple(r for r in records if _keep(r, config.mode))
    return GroupOutcome(**base, decision="searched", reason=None, loops=kept, stats=stats)


def _search_loops(
    group: PermGroup, config: RunConfig
) -> tuple[list[LoopRecord], SearchStats]:
    limits = config.limits
    stabilizer = group.point_stabilizer((0,))
    layers = [orbit for orbit in stabilizer.orbits() if orbit != [0]]
    layers.sort(key=lambda orbit: orbit[0])
    conjugators = [(g, g.inverse()) for g in stabilizer.generators]

    candidate_counts: list[int] = []
    orbit_lists: list[list[_CandidateOrbit]] = []
    for index, layer in enumerate(layers):
        count, orbits = _candidate_orbits_for_layer(
            group, stabilizer, conjugators, layer[0], len(layer), limits
        )
        candidate_counts.append(count)
        orbit_lists.append(
            [_CandidateOrbit(members, index) for members in orbits]
        )

    raw_transversals: list[tuple[Perm, ...]] = []
    nodes = 0
    if all(orbit_lists):
        flat = [orbit for orbits in orbit_lists for orbit in orbits]
        compat: dict[tuple[int, int], bool] = {}
        for i, a in enumerate(flat):
            for j, b in enumerate(flat):
                if a.layer < b.layer:
                    # symmetric: quotients in the other direction are inverses
                    # of stabilizer-conjugates of these
                    ok = _compatible(a, b)
                    compat[(i, j)] = ok
                    compat[(j, i)] = ok
        offsets = []
        start = 0
        for orbits in orbit_lists:
            offsets.append(start)
            start += len(orbits)

        selection: list[int] = []

        def descend(layer_index: int) -> None:
            nonlocal nodes
            if layer_index == len(orbit_lists):
                members: list[Perm] = [Perm.identity(group.degree)]
                for idx in selection:
                    members.extend(flat[idx].members)
                members.sort(key=lambda r: r[0])
                raw_transversals.append(tuple(members))
                return
            for local, orbit in enumerate(orbit_lists[layer_index]):
                idx = offsets[layer_index] + local
                nodes += 1
                if nodes > limits.dfs_nodes:
                    raise ResourceLimitError(
                        f"selection search exceeded {limits.dfs_nodes} nodes"
                    )
                if all(compat[(prev, idx)] for prev in selection):
                    selection.append(idx)
                    descend(layer_index + 1)
                    selection.pop()

        descend(0)

    records = []
    for transversal in raw_transversals:
        folder = LoopFolder(group, list(transversal))  # re-validates membership
        table = loop_from_folder(folder)  # re-validates all quotients
        record = _record_for_loop(table, group)
        if not record.right_automorphic:
            raise AssertionError(
                "constructed loop is not right automorphic; the orbit "
                "machinery violated its invariant"
            )
        records.append(record)
    records.sort(key=lambda r: r.table.rows)

    stats = SearchStats(
        point_orbits=len(layers),
        orbit_sizes=tuple(len(layer) for layer in layers),
        candidate_counts=tuple(candidate_counts),
        orbit_counts=tuple(len(orbits) for orbits in orbit_lists),
        dfs_nodes=nodes,
        raw_loops=len(raw_transversals),
    )
    return records, stats


def search_entries(
    entries: list[CatalogEntry], config: RunConfig
) -> list[GroupOutcome]:
    """Search a list of catalog entries sequentially, in catalog order."""
    return [search_group(entry, config) for entry in entries]

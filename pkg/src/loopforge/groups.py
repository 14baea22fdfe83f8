"""Finite permutation groups with deterministic stabilizer chains.

Everything here is exact and fully deterministic: generator lists are
canonicalized on construction, orbits are discovered in BFS order from the
least point, and the Schreier-Sims completion processes Schreier generators
in a fixed order. Two runs over the same generators build identical chains,
which is what makes whole-search reports byte-reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .perms import MAX_DEGREE, Perm, orbit as _orbit, orbit_with_words, orbits as _orbits


class ResourceLimitError(RuntimeError):
    """An exact computation was asked to exceed its configured budget."""


_FULL_PAD = bytes(range(256))


class _Level:
    """One level of a stabilizer chain: a base point, the generators fixing
    all shallower base points, and the basic orbit with transversal.

    The hot sift loop works on raw image bytes, so generator and inverse
    transversal tables are kept pre-padded to full translate tables.
    """

    __slots__ = ("point", "gens", "gen_tables", "orbit", "transversal", "inv_tables", "done")

    def __init__(self, point: int, degree: int) -> None:
        self.point = point
        self.gens: list[Perm] = []
        self.gen_tables: list[bytes] = []
        self.orbit: list[int] = [point]
        self.transversal: dict[int, Perm] = {point: Perm.identity(degree)}
        self.inv_tables: dict[int, bytes] = {point: _FULL_PAD}
        # orbit point -> bitmask over generator indices whose Schreier
        # generator already sifted clean; membership only grows, so a clean
        # pair stays clean.
        self.done: dict[int, int] = {point: 0}


class StabilizerChain:
    """Deterministic incremental Schreier-Sims.

    ``base_prefix`` forces the first base points (used for point stabilizers
    and transitivity degree); further base points are chosen as the least
    point moved by the residue that created the level.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Perm] = (),
        base_prefix: Sequence[int] = (),
    ) -> None:
        self.degree = degree
        self._identity_images = _FULL_PAD[:degree]
        self._pad_suffix = _FULL_PAD[degree:]
        self.levels: list[_Level] = []
        for point in base_prefix:
            self.levels.append(_Level(point, degree))
        for g in generators:
            self.add_generator(g)

    # -- queries -------------------------------------------------------------

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.orbit)
        return n

    def __contains__(self, g: Perm) -> bool:
        img, _ = self._strip_images(g.images, 0)
        return img == self._identity_images

    def sift(self, g: Perm) -> Perm:
        """The residue of ``g`` after stripping through the whole chain;
        identity exactly when ``g`` is in the group."""
        return self._strip(g, 0)[0]

    def generators(self) -> list[Perm]:
        """A generating set for the whole group (level-0 strong generators)."""
        if not self.levels:
            return []
        return list(self.levels[0].gens)

    def basic_orbit_lengths(self) -> list[int]:
        return [len(level.orbit) for level in self.levels]

    def stabilizer_generators(self, depth: int) -> list[Perm]:
        """Generators of the pointwise stabilizer of the first ``depth`` base
        points. Only meaningful when the chain was built with those points as
        ``base_prefix``."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].gens)

    def elements(self) -> Iterator[Perm]:
        """All group elements, one multiplication each, in a fixed order."""
        yield from self._elements(0)

    def _elements(self, i: int) -> Iterator[Perm]:
        if i == len(self.levels):
            yield Perm.identity(self.degree)
            return
        level = self.levels[i]
        for deep in self._elements(i + 1):
            for point in level.orbit:
                yield deep * level.transversal[point]

    # -- construction ----------------------------------------------------------

    def add_generator(self, g: Perm) -> bool:
        """Extend the group by ``g``; returns False when already a member.
        The chain is complete again when this returns."""
        img, j = self._strip_images(g.images, 0)
        if img == self._identity_images:
            return False
        # The residue differs from g by chain elements, so adjoining it is
        # equivalent to adjoining g.
        self._insert(img, 0, j)
        self._complete_from(j)
        return True

    def _strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        img, j = self._strip_images(g.images, start)
        return Perm._raw(img), j

    def _strip_images(self, img: bytes, start: int) -> tuple[bytes, int]:
        for j in range(start, len(self.levels)):
            level = self.levels[j]
            table = level.inv_tables.get(img[level.point])
            if table is None:
                return img, j
            img = img.translate(table)
        return img, len(self.levels)

    def _insert(self, img: bytes, lo: int, hi: int) -> None:
        """Add the permutation with image table ``img`` as a strong generator
        at levels lo..hi (it fixes the base points of levels lo..hi-1 and
        moves level hi's, creating that level if needed)."""
        h = Perm._raw(img)
        if hi == len(self.levels):
            self.levels.append(_Level(min(h.support()), self.degree))
        table = img + self._pad_suffix
        for ell in range(lo, hi + 1):
            level = self.levels[ell]
            level.gens.append(h)
            level.gen_tables.append(table)
            self._extend_orbit(level)

    def _extend_orbit(self, level: _Level) -> None:
        # Continue BFS without touching existing transversal entries, so
        # Schreier generators of already-verified pairs are unchanged.
        queue = level.orbit
        i = 0
        while i < len(queue):
            x = queue[i]
            u_x = level.transversal[x]
            for g in level.gens:
                y = g[x]
                if y not in level.transversal:
                    u_y = u_x * g
                    level.transversal[y] = u_y
                    level.inv_tables[y] = u_y.inverse().images + self._pad_suffix
                    level.done[y] = 0
                    queue.append(y)
            i += 1

    def _complete_from(self, start: int) -> None:
        i = min(start, len(self.levels) - 1)
        while i >= 0:
            jumped = self._verify_level(i)
            i = i - 1 if jumped is None else jumped

    def _verify_level(self, i: int) -> int | None:
        """Check every pending Schreier generator of level ``i``. On the first
        dirty residue, insert it at the levels below and return the deepest
        changed level; return None when the level verifies clean."""
        level = self.levels[i]
        base = level.point
        gen_tables = level.gen_tables
        n_gens = len(gen_tables)
        identity = self._identity_images
        for p in level.orbit:
            mask = level.done[p]
            if mask == (1 << n_gens) - 1:
                continue
            u_p = level.transversal[p].images
            for gi in range(n_gens):
                if mask >> gi & 1:
                    continue
                # Image table of u_p * g; its residue against u_q is the
                # Schreier generator of the pair (p, g).
                target = u_p.translate(gen_tables[gi])
                q = target[base]
                schreier = target.translate(level.inv_tables[q])
                if schreier == identity:
                    level.done[p] = mask = mask | (1 << gi)
                    continue
                img, j = self._strip_images(schreier, i + 1)
                if img == identity:
                    level.done[p] = mask = mask | (1 << gi)
                else:
                    self._insert(img, i + 1, j)
                    return j
        return None


class PermGroup:
    """A permutation group given by generators, with a lazily built chain."""

    __slots__ = ("generators", "degree", "_chain")

    def __init__(self, generators: Iterable[Perm], degree: int) -> None:
        gens = sorted({g for g in generators if not g.is_identity()})
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.degree = degree
        self._chain: StabilizerChain | None = None

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls((), degree)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    # -- basic structure -------------------------------------------------------

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g: Perm) -> bool:
        return g.degree == self.degree and g in self.chain

    def is_trivial(self) -> bool:
        return not self.generators

    def elements(self) -> Iterator[Perm]:
        return self.chain.elements()

    def orbits(self) -> list[list[int]]:
        return _orbits(self.generators, self.degree) if self.generators else [
            [i] for i in range(self.degree)
        ]

    def orbit(self, point: int) -> list[int]:
        return _orbit(self.generators, point)

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def representative_action(self, x: int, y: int) -> Perm | None:
        """Some group element mapping point x to point y, or None."""
        if not self.generators:
            return Perm.identity(self.degree) if x == y else None
        transversal, _ = orbit_with_words(self.generators, x, self.degree)
        return transversal.get(y)

    def point_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        """The pointwise stabilizer of ``points``."""
        chain = StabilizerChain(self.degree, self.generators, base_prefix=tuple(points))
        return PermGroup(chain.stabilizer_generators(len(points)), self.degree)

    def is_k_transitive(self, k: int) -> bool:
        if k <= 0:
            return True
        if self.degree < k:
            return False
        chain = StabilizerChain(self.degree, self.generators, base_prefix=tuple(range(k)))
        lengths = chain.basic_orbit_lengths()[:k]
        return lengths == [self.degree - i for i in range(k)]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            gens[i] * gens[j] == gens[j] * gens[i]
            for i in range(len(gens))
            for j in range(i + 1, len(gens))
        )

    # -- primitivity (Atkinson's minimal block algorithm) -----------------------

    def is_primitive(self) -> bool:
        if not self.is_transitive() or self.degree == 1:
            return False
        return all(
            self._minimal_block_size(0, b) == self.degree for b in range(1, self.degree)
        )

    def _minimal_block_size(self, a: int, b: int) -> int:
        """Size of the smallest block containing {a, b} in the finest block
        system where they are together."""
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parent[find(b)] = find(a)
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            for g in self.generators:
                rx, ry = find(g[x]), find(g[y])
                if rx != ry:
                    parent[ry] = rx
                    queue.append((rx, ry))
        root = find(a)
        return sum(1 for x in range(self.degree) if find(x) == root)

    # -- conjugacy -------------------------------------------------------------

    def conjugacy_class(self, x: Perm, limit: int | None = None) -> list[Perm] | None:
        """The conjugacy class of ``x`` in BFS order, or None once its size
        exceeds ``limit``."""
        pairs = [(g, g.inverse()) for g in self.generators]
        seen = {x}
        queue = [x]
        for y in queue:
            for g, g_inv in pairs:
                z = g_inv * y * g
                if z not in seen:
                    if limit is not None and len(seen) >= limit:
                        return None
                    seen.add(z)
                    queue.append(z)
        return queue

    def min_nontrivial_class_size(
        self, bound: int, element_limit: int = 10**7
    ) -> int | str:
        """Minimum conjugacy class size over nontrivial classes (size >= 2),
        exact when that minimum is <= ``bound``.

        Returns the marker "all-exceed-bound" when every nontrivial class is
        larger than ``bound``, and "no-nontrivial-class" when every class is a
        singleton (abelian groups, including the trivial group). Enumerates
        the group, so it refuses (ResourceLimitError) above ``element_limit``.
        """
        if self.is_abelian():
            return "no-nontrivial-class"
        if self.order() > element_limit:
            raise ResourceLimitError(
                f"group order {self.order()} exceeds element limit {element_limit}"
            )
        best: int | None = None
        classified: set[Perm] = set()
        for g in self.elements():
            if g.is_identity() or g in classified:
                continue
            cls = self.conjugacy_class(g, limit=bound)
            if cls is None:
                continue
            classified.update(cls)
            if len(cls) >= 2 and (best is None or len(cls) < best):
                best = len(cls)
                if best == 2:
                    break
        return "all-exceed-bound" if best is None else best

    def right_coset(self, rep: Perm, element_limit: int = 10**6) -> list[Perm]:
        """The right coset (this group) * rep, sorted for determinism.
        Refuses (ResourceLimitError) when the group has more than
        ``element_limit`` elements."""
        if self.order() > element_limit:
            raise ResourceLimitError(
                f"coset size {self.order()} exceeds element limit {element_limit}"
            )
        return sorted(g * rep for g in self.elements())

    def action_on_cosets(self, subgroup: "PermGroup") -> "PermGroup":
        """The transitive action on right cosets of ``subgroup``, with the
        coset of the identity as point 0.  Coset points are numbered in BFS
        order over (coset, generator), so the result is deterministic."""
        for g in subgroup.generators:
            if g not in self:
                raise ValueError("subgroup generator outside the group")
        chain = StabilizerChain(subgroup.degree, subgroup.generators)
        reps: list[Perm] = [Perm.identity(self.degree)]
        edges: list[list[int]] = []
        for rep in reps:
            row = []
            for g in self.generators:
                image = rep * g
                for k, other in enumerate(reps):
                    if image * other.inverse() in chain:
                        row.append(k)
                        break
                else:
                    if len(reps) > MAX_DEGREE:
                        raise ResourceLimitError(
                            f"coset action degree exceeds {MAX_DEGREE}"
                        )
                    row.append(len(reps))
                    reps.append(image)
            edges.append(row)
        return PermGroup(
            [Perm(bytes(edges[k][i] for k in range(len(reps)))) for i in range(len(self.generators))],
            len(reps),
        )

    # -- centralizers ------------------------------------------------------------

    def centralizer(self, other: "PermGroup", node_limit: int = 500_000) -> "PermGroup":
        """The centralizer of ``other`` in this group.

        Backtracks over base images through the stabilizer chain, so every
        node stays inside the group by construction; partial images propagate
        along the commutation constraint c(h(x)) = h(c(x)), and every
        completed element is verified directly before being admitted."""
        hgens = [g for g in other.generators if not g.is_identity()]
        if not hgens:
            return self
        d = self.degree
        levels = self.chain.levels
        orbit_size = [0] * d
        for orb in _orbits(hgens, d):
            for x in orb:
                orbit_size[x] = len(orb)

        img = [-1] * d
        used = [False] * d
        found = StabilizerChain(d)
        nodes = 0

        def propagate(root: int, target: int) -> list[int] | None:
            """Assign img[root]=target and close under img[h(x)] = h(img[x]);
            returns the points assigned, or None (rolled back) on conflict."""
            if orbit_size[root] != orbit_size[target]:
                return None
            assigned = [root]
            img[root] = target
            used[target] = True
            i = 0
            ok = True
            while ok and i < len(assigned):
                x = assigned[i]
                for h in hgens:
                    y = h[x]
                    iy = h[img[x]]
                    if img[y] == -1:
                        if used[iy] or orbit_size[y] != orbit_size[iy]:
                            ok = False
                            break
                        img[y] = iy
                        used[iy] = True
                        assigned.append(y)
                    elif img[y] != iy:
                        ok = False
                        break
                i += 1
            if ok:
                return assigned
            for x in assigned:
                used[img[x]] = False
                img[x] = -1
            return None

        def descend(k: int, u: Perm) -> None:
            """Extend the partial element u (images of the first k base
            points are final) one chain level at a time."""
            nonlocal nodes
            if k == len(levels):
                if not u.is_identity() and all(u * h == h * u for h in hgens):
                    found.add_generator(u)
                return
            level = levels[k]
            beta = level.point
            if img[beta] != -1:
                delta = u.inverse()[img[beta]]
                t = level.transversal.get(delta)
                if t is not None:
                    descend(k + 1, t * u)
                return
            for delta in level.orbit:
                gamma = u[delta]
                if used[gamma]:
                    continue
                nodes += 1
                if nodes > node_limit:
                    raise ResourceLimitError(
                        f"centralizer backtrack exceeded {node_limit} nodes"
                    )
                assigned = propagate(beta, gamma)
                if assigned is None:
                    continue
                descend(k + 1, level.transversal[delta] * u)
                for x in assigned:
                    used[img[x]] = False
                    img[x] = -1

        descend(0, Perm.identity(d))
        return PermGroup(found.generators(), d)

    # -- normal structure ----------------------------------------------------------

    def normal_closure(self, elements: Iterable[Perm]) -> "PermGroup":
        """The smallest normal subgroup of this group containing ``elements``."""
        chain = StabilizerChain(self.degree)
        for x in sorted({e for e in elements if not e.is_identity()}):
            chain.add_generator(x)
        gen_invs = [(g, g.inverse()) for g in self.generators]
        changed = True
        while changed:
            changed = False
            for s in list(chain.generators()):
                for g, g_inv in gen_invs:
                    c = g_inv * s * g
                    if c not in chain:
                        chain.add_generator(c)
                        changed = True
        return PermGroup(chain.generators(), self.degree)

    def derived_subgroup(self) -> "PermGroup":
        commutators = [
            g.inverse() * h.inverse() * g * h
            for g in self.generators
            for h in self.generators
        ]
        return self.normal_closure(commutators)

    def is_solvable(self) -> bool:
        current: PermGroup = self
        order = current.order()
        while order > 1:
            derived = current.derived_subgroup()
            derived_order = derived.order()
            if derived_order == order:
                return False
            current, order = derived, derived_order
        return True

    # -- misc ------------------------------------------------------------------

    def __repr__(self) -> str:
        return f"<PermGroup deg={self.degree} gens={len(self.generators)}>"

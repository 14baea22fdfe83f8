"""Exact conjugacy class sizes of GL(n, q) without enumerating the group.

Classes of GL(n, q) correspond to assignments of partitions to monic
irreducible polynomials other than x, with total weight n when each
polynomial's partition size is scaled by its degree (rational canonical
form). The centralizer of a class is the automorphism group of the
corresponding module, whose order factors over the polynomial-primary
components; each primary component with partition lambda over a residue
field of size Q contributes

    Q^(sum of squared conjugate parts) * prod over part sizes i of
    prod_{k=1..m_i} (1 - Q^-k),

with m_i the multiplicity of the part i in lambda. Everything here is
integer arithmetic on that formula, so groups far beyond enumeration range
(GL(7,2) has ~1.6e14 elements) get exact class data in microseconds.
"""

from __future__ import annotations

from functools import lru_cache

from .groups import PermGroup
from .perms import Perm

_PAD = bytes(range(256))


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def _moebius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def monic_irreducible_count(q: int, degree: int) -> int:
    """Monic irreducible polynomials of the given degree over F_q."""
    total = sum(
        _moebius(e) * q ** (degree // e) for e in range(1, degree + 1) if degree % e == 0
    )
    return total // degree


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as non-increasing tuples."""
    if n == 0:
        return ((),)
    out = []

    def extend(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return tuple(out)


def _conjugate(partition: tuple[int, ...]) -> tuple[int, ...]:
    if not partition:
        return ()
    return tuple(
        sum(1 for part in partition if part > i) for i in range(partition[0])
    )


def primary_automorphism_order(q_residue: int, partition: tuple[int, ...]) -> int:
    """Order of the automorphism group of the primary module with the given
    partition over a residue field of q_residue elements."""
    conj = _conjugate(partition)
    exponent = sum(c * c for c in conj)
    out = 1
    multiplicities = [conj[i] - (conj[i + 1] if i + 1 < len(conj) else 0) for i in range(len(conj))]
    for m in multiplicities:
        for k in range(1, m + 1):
            out *= q_residue**k - 1
            exponent -= k
    return out * q_residue**exponent


def _partition_multisets(weight: int, max_members: int):
    """Multisets of nonempty partitions with sizes summing to `weight` and at
    most `max_members` members, as tuples sorted descending."""
    pool: list[tuple[int, ...]] = []
    for size in range(weight, 0, -1):
        pool.extend(partitions(size))
    pool.sort(reverse=True)

    def extend(remaining: int, start: int, room: int, prefix: tuple):
        if remaining == 0:
            yield prefix
            return
        if room == 0:
            return
        for idx in range(start, len(pool)):
            candidate = pool[idx]
            if sum(candidate) <= remaining:
                yield from extend(
                    remaining - sum(candidate), idx, room - 1, prefix + (candidate,)
                )

    yield from extend(weight, 0, max_members, ())


def _count_injections(available: int, multiset: tuple) -> int:
    """Ways to assign the multiset's partitions to distinct polynomials drawn
    from `available` candidates."""
    out = 1
    remaining = available
    run = 0
    previous = None
    for member in multiset + (None,):
        if member == previous:
            run += 1
            continue
        if previous is not None:
            for k in range(run):
                out = out * (remaining - k) // (k + 1)
            remaining -= run
        previous = member
        run = 1
    return out


def gl_class_data(n: int, q: int) -> list[tuple[int, int]]:
    """All conjugacy class sizes of GL(n, q) with multiplicities, sorted by
    size. The sum of size*count is the group order."""
    group_order = gl_order(n, q)
    results: dict[int, int] = {}

    degrees = list(range(1, n + 1))
    available = {
        d: monic_irreducible_count(q, d) - (1 if d == 1 else 0) for d in degrees
    }

    def assign(idx: int, budget: int, centralizer: int, ways: int) -> None:
        if budget == 0:
            size = group_order // centralizer
            results[size] = results.get(size, 0) + ways
            return
        if idx == len(degrees):
            return
        d = degrees[idx]
        assign(idx + 1, budget, centralizer, ways)
        q_residue = q**d
        for weight in range(1, budget // d + 1):
            for multiset in _partition_multisets(weight, available[d]):
                part = 1
                for partition in multiset:
                    part *= primary_automorphism_order(q_residue, partition)
                assign(
                    idx + 1,
                    budget - d * weight,
                    centralizer * part,
                    ways * _count_injections(available[d], multiset),
                )

    assign(0, n, 1, 1)
    total = sum(size * count for size, count in results.items())
    if total != group_order:
        raise AssertionError(
            f"class sizes of GL({n},{q}) sum to {total}, expected {group_order}"
        )
    return sorted(results.items())


def gl_class_sizes(n: int, q: int) -> list[int]:
    """Flat sorted list of class sizes (with repetition)."""
    out: list[int] = []
    for size, count in gl_class_data(n, q):
        out.extend([size] * count)
    return out


def gl_min_nontrivial_class_size(n: int, q: int) -> int | str:
    """Smallest class size above 1, or "no-nontrivial-class" for GL(1, q)."""
    nontrivial = [size for size, _ in gl_class_data(n, q) if size > 1]
    return min(nontrivial) if nontrivial else "no-nontrivial-class"


# -- recognizing the natural GL(n, p) action ---------------------------------------


def prime_power_decomposition(d: int) -> tuple[int, int] | None:
    """(p, n) with d = p^n and p prime, or None."""
    if d < 2:
        return None
    p = 2
    while p * p <= d:
        if d % p == 0:
            n = 0
            rest = d
            while rest % p == 0:
                rest //= p
                n += 1
            return (p, n) if rest == 1 else None
        p += 1
    return (d, 1)


def _addition_tables(p: int, n: int) -> list[bytes]:
    """table[a][b] = digitwise base-p sum of a and b, for points 0..p^n-1."""
    d = p**n
    tables = []
    for a in range(d):
        row = bytearray(d)
        for b in range(d):
            total = 0
            scale = 1
            x, y = a, b
            for _ in range(n):
                total += ((x + y) % p) * scale
                x //= p
                y //= p
                scale *= p
            row[b] = total
        tables.append(bytes(row))
    return tables


def is_linear_action(group: PermGroup, p: int, n: int) -> bool:
    """Whether every generator is additive on points read as base-p digit
    vectors: g(a + b) = g(a) + g(b)."""
    d = p**n
    if group.degree != d:
        return False
    add = _addition_tables(p, n)
    pad = _PAD[d:]
    for g in group.generators:
        table = g.images + pad
        if any(
            add[a].translate(table) != g.images.translate(add[g[a]] + pad)
            for a in range(d)
        ):
            return False
    return True


def is_natural_general_linear(group: PermGroup, p: int, n: int) -> bool:
    """Whether the group is all of GL(n, p) in its action on F_p^n, checked
    by additivity of the generators plus the exact order."""
    return is_linear_action(group, p, n) and group.order() == gl_order(n, p)

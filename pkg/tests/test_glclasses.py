"""Class-size formulas for GL(n, q) against brute enumeration."""

import pytest
from loopforge.glclasses import (
    gl_class_data,
    gl_class_sizes,
    gl_min_nontrivial_class_size,
    gl_order,
    is_linear_action,
    is_natural_general_linear,
    monic_irreducible_count,
    partitions,
    prime_power_decomposition,
    primary_automorphism_order,
)
from loopforge.groups import PermGroup
from loopforge.perms import Perm


def encode(vector, p):
    out = 0
    for digit in reversed(vector):
        out = out * p + digit
    return out


def decode(x, p, n):
    digits = []
    for _ in range(n):
        digits.append(x % p)
        x //= p
    return digits


def matrix_perm(matrix, p, n):
    images = []
    for x in range(p**n):
        v = decode(x, p, n)
        w = [sum(matrix[i][j] * v[j] for j in range(n)) % p for i in range(n)]
        images.append(encode(w, p))
    return Perm(images)


def general_linear_group(n, p):
    """GL(n, p) on F_p^n via transvection + cycle + primitive diagonal."""
    gens = []
    if n > 1:
        transvection = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        transvection[0][1] = 1
        gens.append(matrix_perm(transvection, p, n))
        cycle = [[0] * n for _ in range(n)]
        for i in range(n):
            cycle[(i + 1) % n][i] = 1
        gens.append(matrix_perm(cycle, p, n))
    if p > 2:
        root = next(
            g for g in range(2, p) if len({pow(g, k, p) for k in range(p - 1)}) == p - 1
        )
        diag = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        diag[0][0] = root
        gens.append(matrix_perm(diag, p, n))
    group = PermGroup(gens, p**n)
    assert group.order() == gl_order(n, p)
    return group


def brute_class_sizes(group):
    sizes = []
    classified = set()
    for g in group.elements():
        if g in classified:
            continue
        cls = group.conjugacy_class(g)
        classified.update(cls)
        sizes.append(len(cls))
    return sorted(sizes)


def test_partition_counts():
    assert len(partitions(0)) == 1
    assert len(partitions(5)) == 7
    assert len(partitions(7)) == 15
    assert all(tuple(sorted(p, reverse=True)) == p for p in partitions(6))


def test_monic_irreducible_counts():
    assert monic_irreducible_count(2, 1) == 2
    assert monic_irreducible_count(2, 2) == 1
    assert monic_irreducible_count(2, 3) == 2
    assert monic_irreducible_count(2, 4) == 3
    assert monic_irreducible_count(2, 7) == 18
    assert monic_irreducible_count(3, 1) == 3
    assert monic_irreducible_count(3, 2) == 3


def test_gl_orders():
    assert gl_order(1, 5) == 4
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert gl_order(3, 2) == 168
    assert gl_order(3, 3) == 11232
    assert gl_order(7, 2) == 163849992929280


def test_primary_automorphism_order_anchors():
    # single module R/pi: units of F_Q
    assert primary_automorphism_order(4, (1,)) == 3
    # full general linear on a 2-dimensional semisimple module
    assert primary_automorphism_order(3, (1, 1)) == 48
    # units of R/pi^2
    assert primary_automorphism_order(2, (2,)) == 2
    assert primary_automorphism_order(3, (2, 1)) == 3**3 * 2 * 2


@pytest.mark.parametrize("n,p", [(1, 3), (2, 2), (2, 3), (3, 2), (2, 5), (4, 2), (3, 3)])
def test_class_sizes_match_brute(n, p):
    group = general_linear_group(n, p)
    assert gl_class_sizes(n, p) == brute_class_sizes(group)


def test_known_class_counts():
    assert sum(count for _, count in gl_class_data(2, 2)) == 3
    assert sum(count for _, count in gl_class_data(2, 3)) == 8
    assert sum(count for _, count in gl_class_data(3, 2)) == 6
    assert sum(count for _, count in gl_class_data(4, 2)) == 14


def test_min_nontrivial_class_sizes():
    assert gl_min_nontrivial_class_size(1, 7) == "no-nontrivial-class"
    assert gl_min_nontrivial_class_size(2, 2) == 2
    assert gl_min_nontrivial_class_size(3, 2) == 21
    # transvections: (2^n - 1)(2^(n-1) - 1)
    assert gl_min_nontrivial_class_size(5, 2) == 31 * 15
    assert gl_min_nontrivial_class_size(7, 2) == 127 * 63
    assert gl_min_nontrivial_class_size(7, 2) == 8001


def test_class_data_is_consistent_for_large_cases():
    for n, q in [(5, 2), (6, 2), (7, 2), (4, 3), (3, 5)]:
        data = gl_class_data(n, q)
        assert sum(size * count for size, count in data) == gl_order(n, q)
        assert data[0] == (1, q - 1)  # the center


def test_linear_action_recognition():
    gl32 = general_linear_group(3, 2)
    assert is_linear_action(gl32, 2, 3)
    assert is_natural_general_linear(gl32, 2, 3)

    shift_only = PermGroup([gl32.generators[0]], 8)
    assert is_linear_action(shift_only, 2, 3)
    assert not is_natural_general_linear(shift_only, 2, 3)

    translation = Perm([x ^ 1 for x in range(8)])
    affine = PermGroup(list(gl32.generators) + [translation], 8)
    assert not is_linear_action(affine, 2, 3)
    assert not is_natural_general_linear(affine, 2, 3)

    assert not is_linear_action(gl32, 2, 2)  # degree mismatch

    gl23 = general_linear_group(2, 3)
    assert is_natural_general_linear(gl23, 3, 2)


def test_prime_power_decomposition():
    assert prime_power_decomposition(128) == (2, 7)
    assert prime_power_decomposition(81) == (3, 4)
    assert prime_power_decomposition(49) == (7, 2)
    assert prime_power_decomposition(2) == (2, 1)
    assert prime_power_decomposition(13) == (13, 1)
    assert prime_power_decomposition(60) is None
    assert prime_power_decomposition(12) is None
    assert prime_power_decomposition(1) is None
    assert prime_power_decomposition(0) is None

from math import factorial

import pytest

from symchar import charoracle, perms
from symchar.charoracle import (
    dimension,
    hook_lengths,
    mn_character,
    normalized_character,
    normalized_character_general,
)
from symchar.diagrams import conjugate, partitions, partitions_up_to


def centralizer_order(mu):
    mults = {}
    for part in mu:
        mults[part] = mults.get(part, 0) + 1
    z = 1
    for part, m in mults.items():
        z *= part ** m * factorial(m)
    return z


def test_standard_representation_brute_force():
    # The permutation representation of S(3) on 3 points is trivial + the
    # representation of (2,1): its character is (#fixed points) - 1.
    for p in perms.all_perms(3):
        fixed = sum(1 for i in range(1, 4) if p[i - 1] == i)
        assert mn_character((2, 1), perms.cycle_type(p)) == fixed - 1


def test_character_table_s3():
    table = {
        (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
        (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
        (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
    }
    for lam, row in table.items():
        for mu, value in row.items():
            assert mn_character(lam, mu) == value


def test_mn_examples():
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 2), (4,)) == 0  # no border strip of size 4
    with pytest.raises(ValueError):
        mn_character((2, 1), (2, 2))


def test_mn_identity_class_equals_hook_dimension():
    # Full strip recursion against the hook length formula, all n <= 8.
    for rows in partitions_up_to(8):
        n = sum(rows)
        assert mn_character(rows, (1,) * n) == dimension(rows)


def test_dimension_examples():
    assert dimension((2, 1)) == 2
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    for n in range(1, 8):
        assert dimension((n,)) == 1
    assert dimension((4, 3, 1)) == 70
    assert sorted(hook_lengths((4, 3, 1))) == sorted([6, 4, 3, 1, 4, 2, 1, 1])


def test_dimension_squares_sum_to_group_order():
    for n in range(1, 8):
        assert sum(dimension(rows) ** 2 for rows in partitions(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality(n):
    for mu in partitions(n):
        total = sum(mn_character(lam, mu) ** 2 for lam in partitions(n))
        assert total == centralizer_order(mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_conjugate_transpose_symmetry(n):
    for mu in partitions(n):
        eps = (-1) ** (n - len(mu))
        for lam in partitions(n):
            assert mn_character(conjugate(lam), mu) == eps * mn_character(lam, mu)


def test_normalized_character_examples():
    for rows in [(1,), (2, 1), (4, 3, 1), (2, 2)]:
        assert normalized_character(rows, 1) == sum(rows)
    assert normalized_character((2, 1), 3) == -3
    assert normalized_character((2, 1), 5) == 0  # k > n
    assert normalized_character((), 1) == 0


def test_normalized_matches_full_recursion():
    # the strip-plus-hook evaluation equals the pure recursion on cycles
    for rows in partitions_up_to(8):
        n = sum(rows)
        for k in range(1, n + 1):
            assert normalized_character(rows, k) == \
                normalized_character_general(rows, (k,))


def test_normalized_character_general():
    # identity on k points: the falling factorial itself
    assert normalized_character_general((2, 2), (1, 1)) == 4 * 3
    assert normalized_character_general((4, 3, 1), (1, 1, 1)) == 8 * 7 * 6
    # transposition in S(2) against (2,2): chi((2,1,1)) vanishes
    assert normalized_character_general((2, 2), (2,)) == 0
    # k > n
    assert normalized_character_general((2, 1), (2, 2)) == 0


def test_sigma2_of_square():
    assert normalized_character((2, 2), 2) == 0


def _mn_smallest_part_first(rows, mu):
    # independent recursion order: strip the smallest part first
    if not mu:
        return 1
    total = 0
    for smaller, height in charoracle._strip_removals(rows, mu[-1]):
        total += (-1) ** height * _mn_smallest_part_first(smaller, mu[:-1])
    return total


@pytest.mark.parametrize("n", range(1, 7))
def test_strip_order_independence(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert mn_character(lam, mu) == _mn_smallest_part_first(lam, mu)


def test_caches_can_be_cleared():
    mn_character((3, 2), (2, 2, 1))
    assert charoracle._mn_cache
    charoracle.clear_caches()
    assert not charoracle._mn_cache
    assert mn_character((3, 2), (2, 2, 1)) == mn_character((3, 2), (1, 2, 2))

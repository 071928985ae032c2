"""Irreducible characters of the symmetric group.

chi^lam(mu) is computed by the Murnaghan-Nakayama rule: recursively remove a
border strip whose length is the largest remaining part of mu, with sign
(-1)^height.  Dimensions come from the hook length formula.  The normalized
character Sigma_k multiplies the character ratio on the class (k, 1^{n-k})
by the falling factorial n(n-1)...(n-k+1) and is 0 for k > n.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from symchar.diagrams import Partition, check_partition, conjugate

_mn_cache: dict[tuple[Partition, Partition], int] = {}
_dim_cache: dict[Partition, int] = {}


def clear_caches() -> None:
    _mn_cache.clear()
    _dim_cache.clear()


def _strip_removals(rows: Partition, length: int) -> list[tuple[Partition, int]]:
    """All ways to remove a border strip of the given length.

    Returns (smaller partition, height) pairs, height = rows spanned - 1.
    Computed on the beta-set beta_i = lam_i + (r - 1 - i): removing a strip
    of length t moves one beta number down by t onto a free slot.
    """
    r = len(rows)
    if r == 0 or length < 1:
        return []
    beta = [rows[i] + (r - 1 - i) for i in range(r)]
    present = set(beta)
    out = []
    for b in beta:
        nb = b - length
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((present - {b}) | {nb}, reverse=True)
        new_rows = tuple(new_beta[j] - (r - 1 - j) for j in range(r))
        while new_rows and new_rows[-1] == 0:
            new_rows = new_rows[:-1]
        out.append((new_rows, height))
    return out


def mn_character(rows: Partition, mu: Sequence[int]) -> int:
    """chi^rows on the class of cycle type mu, |rows| = |mu| required."""
    rows = check_partition(rows)
    mu = tuple(sorted((int(m) for m in mu), reverse=True))
    if any(m < 1 for m in mu):
        raise ValueError("cycle type parts must be positive")
    if sum(rows) != sum(mu):
        raise ValueError(f"size mismatch: |{rows}| = {sum(rows)} vs |{mu}| = {sum(mu)}")
    return _mn_recurse(rows, mu)


def _mn_recurse(rows: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (rows, mu)
    cached = _mn_cache.get(key)
    if cached is not None:
        return cached
    total = 0
    rest = mu[1:]
    for smaller, height in _strip_removals(rows, mu[0]):
        total += (-1) ** height * _mn_recurse(smaller, rest)
    _mn_cache[key] = total
    return total


def hook_lengths(rows: Partition) -> list[int]:
    conj = conjugate(rows)
    return [
        (rows[i] - j) + (conj[j - 1] - (i + 1)) + 1
        for i in range(len(rows))
        for j in range(1, rows[i] + 1)
    ]


def dimension(rows: Partition) -> int:
    """n! / product of hook lengths; the division is exact."""
    rows = check_partition(rows)
    cached = _dim_cache.get(rows)
    if cached is not None:
        return cached
    n = sum(rows)
    denom = 1
    for h in hook_lengths(rows):
        denom *= h
    num = factorial(n)
    assert num % denom == 0, "hook product must divide n!"
    dim = num // denom
    _dim_cache[rows] = dim
    return dim


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def normalized_character(rows: Partition, k: int) -> Fraction:
    """Sigma_k: n(n-1)...(n-k+1) * chi^rows((k, 1^{n-k})) / dim, 0 if k > n.

    The class (k, 1^{n-k}) needs a single border-strip removal; what remains
    is the identity class, where the character equals the dimension.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rows = check_partition(rows)
    n = sum(rows)
    if k > n:
        return Fraction(0)
    chi = sum((-1) ** height * dimension(smaller)
              for smaller, height in _strip_removals(rows, k))
    return Fraction(_falling(n, k) * chi, dimension(rows))


def normalized_character_general(rows: Partition, pi_type: Sequence[int]) -> Fraction:
    """Sigma_pi for pi of the given cycle type on k = sum(pi_type) points,
    embedded in S(n) by padding with fixed points."""
    rows = check_partition(rows)
    pi_type = tuple(int(m) for m in pi_type)
    if any(m < 1 for m in pi_type):
        raise ValueError("cycle type parts must be positive")
    k = sum(pi_type)
    n = sum(rows)
    if k > n:
        return Fraction(0)
    padded = tuple(sorted(pi_type + (1,) * (n - k), reverse=True))
    return Fraction(_falling(n, k) * mn_character(rows, padded), dimension(rows))

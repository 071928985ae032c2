"""Character values on multirectangular diagrams as exact polynomials in the
block parameters p_i, q_i, coefficient-extraction identities, and generation
of the character polynomial J_k in the shape functionals S_j.

The central sum runs over factorizations s1 o s2 = pi: each coloring phi2 of
the s2-cycles by blocks 1..r induces phi1 on the s1-cycles by taking the
maximum phi2-color over intersecting s2-cycles, and contributes
sign(s1) * prod q_{phi1} * prod p_{phi2}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iterperms
from itertools import product as iproduct
from math import factorial
from typing import Sequence

from symchar import perms
from symchar.functionals import s_functional_multirect_symbolic
from symchar.perms import Perm
from symchar.ratpoly import Mono, RatPoly, Var


def stanley_character_poly(pi: Perm, r: int) -> RatPoly:
    """The normalized character of pi on the r-block diagram p x q, fully
    expanded as an exact polynomial in p_1..p_r, q_1..q_r."""
    if r < 1:
        raise ValueError("need at least one block")
    k = len(pi)
    if not perms.is_perm(pi):
        raise ValueError(f"not a permutation: {pi}")
    accum: dict[Mono, int] = {}
    for s1 in perms.all_perms(k):
        s2 = perms.compose(perms.inverse(s1), pi)
        c1 = perms.cycles(s1)
        c2 = perms.cycles(s2)
        sg = 1 if (k - len(c1)) % 2 == 0 else -1
        owner = [0] * (k + 1)
        for idx, cyc in enumerate(c2):
            for pt in cyc:
                owner[pt] = idx
        adj = [sorted({owner[pt] for pt in cyc}) for cyc in c1]
        for phi2 in iproduct(range(1, r + 1), repeat=len(c2)):
            qexp = [0] * (r + 1)
            for a in adj:
                qexp[max(phi2[j] for j in a)] += 1
            pexp = [0] * (r + 1)
            for color in phi2:
                pexp[color] += 1
            mono = tuple((("p", i), pexp[i]) for i in range(1, r + 1) if pexp[i]) \
                + tuple((("q", i), qexp[i]) for i in range(1, r + 1) if qexp[i])
            accum[mono] = accum.get(mono, 0) + sg
    return RatPoly({m: Fraction(c) for m, c in accum.items() if c})


def pq_bracket(poly: RatPoly, js: Sequence[int]) -> Fraction:
    """[p_1 q_1^{j_1 - 1} ... p_l q_l^{j_l - 1}] as an exact-monomial
    coefficient."""
    mono: dict[Var, int] = {}
    for slot, j in enumerate(js, 1):
        if j < 2:
            raise ValueError("indices must be >= 2")
        mono[("p", slot)] = 1
        mono[("q", slot)] = j - 1
    return poly.coefficient_of(mono)


def derivative_via_stanley(poly: RatPoly, js: Sequence[int], r: int) -> Fraction:
    """Iterated S-derivative at zero read off as the coefficient of
    p_1 q_1^{j_1-1} ... p_l q_l^{j_l-1}; needs r >= l blocks."""
    if r < len(js):
        raise ValueError(f"need at least {len(js)} blocks, polynomial built with {r}")
    return pq_bracket(poly, js)


def p_bracket(poly: RatPoly, indices: Sequence[int]) -> RatPoly:
    """[p_{i_1} ... p_{i_s}] with the q-variables kept: the sub-polynomial of
    terms whose p-part is exactly one power of each listed p-index."""
    wanted = {("p", i) for i in indices}
    if len(wanted) != len(indices):
        raise ValueError("indices must be distinct")
    out: dict[Mono, Fraction] = {}
    for mono, coeff in poly.items():
        p_part = {v: e for v, e in mono if v[0] == "p"}
        if set(p_part) != wanted or any(e != 1 for e in p_part.values()):
            continue
        rest = tuple((v, e) for v, e in mono if v[0] != "p")
        out[rest] = out.get(rest, Fraction(0)) + coeff
    return RatPoly(out)


def _falling(n: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= n - i
    return out


def check_s_coefficient_formula(k: int, indices: Sequence[int],
                               q_values: Sequence[object] | None = None) -> bool:
    """True iff, with p treated as variables and q as constants,

        [p_{i_1} ... p_{i_s}] S_k = (-1)^{s-1} (k-1)(k-2)...(k-s+1) q_{i_s}^{k-s}

    for 1 <= s <= k - 1, and 0 otherwise.  The left side is extracted from
    the symbolic multirectangular S_k; the comparison is polynomial in q
    unless concrete q_values are supplied.
    """
    indices = tuple(indices)
    if not indices or list(indices) != sorted(set(indices)):
        raise ValueError("indices must be strictly increasing")
    s = len(indices)
    r = indices[-1]
    got = p_bracket(s_functional_multirect_symbolic(r, k), indices)
    if 1 <= s <= k - 1:
        coeff = Fraction((-1) ** (s - 1) * _falling(k - 1, s - 1))
        expected = RatPoly.variable(("q", indices[-1])) ** (k - s) * coeff
    else:
        expected = RatPoly.zero()
    if q_values is None:
        return got == expected
    assignment = {("q", i): v for i, v in enumerate(q_values, 1)}
    return got.evaluate(assignment) == expected.evaluate(assignment)


def check_bracket_identity(poly: RatPoly, j1: int, j2: int) -> bool:
    """True iff (j1+j2-1) [p_1 q_1^{j1+j2-1}] F = -[p_1 p_2 q_2^{j1+j2-2}] F
    holds exactly for the given multirectangular polynomial."""
    if j1 < 2 or j2 < 2:
        raise ValueError("j1, j2 must be >= 2")
    m = j1 + j2
    lhs = (m - 1) * poly.coefficient_of({("p", 1): 1, ("q", 1): m - 1})
    rhs = -poly.coefficient_of({("p", 1): 1, ("p", 2): 1, ("q", 2): m - 2})
    return lhs == rhs


def j_monomial_multisets(k: int) -> list[tuple[int, ...]]:
    """Sorted multisets (j_1 <= ... <= j_l), j_i >= 2, that can index a
    monomial of J_k: the total S-weight sum(j_i) is at most k + 1."""
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], remaining: int, min_part: int):
        for j in range(min_part, remaining + 1):
            out.append(prefix + (j,))
            grow(prefix + (j,), remaining - j, j)

    grow((), k + 1, 2)
    return out


@lru_cache(maxsize=None)
def j_polynomial_by_counting(k: int) -> RatPoly:
    """J_k with Sigma_k = J_k(S_2, S_3, ...), generated by counting triples
    (s1, s2, labeling).

    For each factorization s1 o s2 = (1..k) and bijective labeling of the
    s2-cycles by 1..l, every s1-cycle is assigned the maximum label over the
    s2-cycles it intersects; a triple whose label-i count is j_i - 1 for all
    i contributes to the iterated derivative of J_k with respect to
    S_{j_1}..S_{j_l}, with global sign (-1)^{l-1}.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    tally: dict[tuple[int, ...], int] = {}
    for s1, s2 in perms.factorizations_of_cycle(k):
        c1 = perms.cycles(s1)
        c2 = perms.cycles(s2)
        m2 = len(c2)
        owner = [0] * (k + 1)
        for idx, cyc in enumerate(c2):
            for pt in cyc:
                owner[pt] = idx
        adj = [tuple({owner[pt] for pt in cyc}) for cyc in c1]
        for labeling in iterperms(range(1, m2 + 1)):
            counts = [0] * m2
            for a in adj:
                h = max(labeling[j] for j in a)
                counts[h - 1] += 1
            if 0 in counts:
                continue
            js = tuple(c + 1 for c in counts)
            tally[js] = tally.get(js, 0) + 1
    by_multiset: dict[tuple[int, ...], int] = {}
    for js, count in tally.items():
        key = tuple(sorted(js))
        by_multiset[key] = by_multiset.get(key, 0) + count
    terms: dict[Mono, Fraction] = {}
    for key, total in by_multiset.items():
        l = len(key)
        coeff = Fraction((-1) ** (l - 1) * total, factorial(l))
        mults: dict[int, int] = {}
        for j in key:
            mults[j] = mults.get(j, 0) + 1
        mono = tuple((("S", j), e) for j, e in sorted(mults.items()))
        terms[mono] = coeff
    return RatPoly(terms)


def j_polynomial_via_stanley(k: int, r: int | None = None) -> RatPoly:
    """J_k reconstructed from coefficient extraction on the character's
    multirectangular polynomial, an independent route to the same object."""
    multisets = j_monomial_multisets(k)
    l_max = max(len(m) for m in multisets)
    if r is None:
        r = l_max
    poly = stanley_character_poly(perms.canonical_cycle(k), r)
    terms: dict[Mono, Fraction] = {}
    for ms in multisets:
        deriv = derivative_via_stanley(poly, ms, r)
        if not deriv:
            continue
        mults: dict[int, int] = {}
        for j in ms:
            mults[j] = mults.get(j, 0) + 1
        denom = 1
        for e in mults.values():
            denom *= factorial(e)
        mono = tuple((("S", j), e) for j, e in sorted(mults.items()))
        terms[mono] = deriv / denom
    return RatPoly(terms)

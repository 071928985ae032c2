"""Shape functionals S_k and free cumulants R_k of Young diagrams, each
available through several independent computation routes.

S_k is (k-1) times the integral of contents^{k-2} over the diagram; it can
be evaluated box by box, from shifted Frobenius coordinates, or symbolically
on a multirectangular diagram.  R_k is obtained from the S-values by an
exact composition formula, as the leading coefficient of the dilated
normalized character, or by the minimal-factorization sum on
multirectangular diagrams.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import factorial
from typing import Iterator, Mapping

from symchar import perms
from symchar.charoracle import normalized_character
from symchar.diagrams import FrobeniusCoords, MultiRect, Partition, check_partition, dilate
from symchar.ratpoly import RatPoly, interpolate_univariate


def unit_box_integral(d: int, m: int) -> Fraction:
    """Exact integral of (x - y)^m over a unit box whose lower-left corner
    has contents d (corner at x - y = d)."""
    if m < 0:
        raise ValueError("power must be >= 0")
    return Fraction(
        (d + 1) ** (m + 2) - 2 * d ** (m + 2) + (d - 1) ** (m + 2),
        (m + 1) * (m + 2),
    )


def s_functional_boxes(rows: Partition, k: int) -> Fraction:
    """S_k by summing exact box integrals of contents^{k-2}."""
    if k < 2:
        raise ValueError("k must be >= 2")
    rows = check_partition(rows)
    total = 0
    for i, r in enumerate(rows, 1):
        for j in range(1, r + 1):
            d = j - i
            total += (d + 1) ** k - 2 * d ** k + (d - 1) ** k
    return Fraction(total, k)


def s_functional_frobenius(fc: FrobeniusCoords, k: int) -> Fraction:
    """S_k = sum_i integral_{-1/2}^{1/2} (A_i+z)^{k-1} - (-B_i-z)^{k-1} dz,
    integrated exactly."""
    if k < 2:
        raise ValueError("k must be >= 2")
    half = Fraction(1, 2)
    total = Fraction(0)
    for a, b in zip(fc.A, fc.B):
        total += (a + half) ** k - (a - half) ** k
        total += (-b - half) ** k - (-b + half) ** k
    return total / k


@lru_cache(maxsize=None)
def s_functional_multirect_symbolic(r: int, k: int) -> RatPoly:
    """S_k of the r-block diagram p x q as an exact polynomial in the p_i, q_i.

    The integral over block i (x in [0, q_i], y in [Y_{i-1}, Y_i] with
    Y_i = p_1 + ... + p_i) has the closed corner form
    [(q-c)^k - (q-d)^k - (-c)^k + (-d)^k] / k for y-range [c, d].
    """
    if r < 1:
        raise ValueError("need at least one block")
    if k < 2:
        raise ValueError("k must be >= 2")
    total = RatPoly.zero()
    y_prev = RatPoly.zero()
    for i in range(1, r + 1):
        y_next = y_prev + RatPoly.variable(("p", i))
        qi = RatPoly.variable(("q", i))
        total = total + ((qi - y_prev) ** k - (qi - y_next) ** k
                         - (-y_prev) ** k + (-y_next) ** k)
        y_prev = y_next
    return total * Fraction(1, k)


def s_functional_multirect(m: MultiRect, k: int) -> Fraction:
    if not m.p:
        if k < 2:
            raise ValueError("k must be >= 2")
        return Fraction(0)
    assignment = {}
    for i, (pi, qi) in enumerate(zip(m.p, m.q), 1):
        assignment[("p", i)] = pi
        assignment[("q", i)] = qi
    return s_functional_multirect_symbolic(len(m.p), k).evaluate(assignment)


def s_vector(rows: Partition, k_max: int) -> dict[int, Fraction]:
    """S_k for 2 <= k <= k_max as a map."""
    return {k: s_functional_boxes(rows, k) for k in range(2, k_max + 1)}


def _compositions_ge2(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of integers >= 2 summing to total."""
    if total == 0:
        yield ()
        return
    for first in range(2, total + 1):
        rest = total - first
        if rest == 0:
            yield (first,)
        elif rest >= 2:
            for tail in _compositions_ge2(rest):
                yield (first,) + tail


def free_cumulant_from_s(s_values: Mapping[int, object], k: int):
    """R_k from the S-values by the exact composition sum

        R_k = sum_{l>=1} (1/l!) (1-k)^{l-1}
              sum_{j_1+...+j_l = k, j_i >= 2} S_{j_1} ... S_{j_l}.

    The inner sum runs over ordered tuples.  Values may be Fractions or
    RatPoly, so the same formula yields the symbolic expansion.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    total = None
    for comp in _compositions_ge2(k):
        l = len(comp)
        try:
            prod = s_values[comp[0]]
        except KeyError:
            raise KeyError(f"missing S_{comp[0]} value") from None
        for j in comp[1:]:
            if j not in s_values:
                raise KeyError(f"missing S_{j} value")
            prod = prod * s_values[j]
        term = Fraction((1 - k) ** (l - 1), factorial(l)) * prod
        total = term if total is None else total + term
    return total


@lru_cache(maxsize=None)
def r_in_terms_of_s(k: int) -> RatPoly:
    """R_k as an exact polynomial in the variables S_2 .. S_k."""
    return free_cumulant_from_s({j: RatPoly.variable(("S", j)) for j in range(2, k + 1)}, k)


def r_vector(rows: Partition, k_max: int) -> dict[int, Fraction]:
    """R_k for 2 <= k <= k_max, computed from the S-values."""
    s_vals = s_vector(rows, k_max)
    return {k: free_cumulant_from_s(s_vals, k) for k in range(2, k_max + 1)}


def free_cumulant_by_interpolation(rows: Partition, k: int) -> Fraction:
    """R_k as the coefficient of s^k in s -> Sigma_{k-1} of the s-dilated
    diagram, fitted exactly at the nodes s = 0..k (s = 0 is the empty
    diagram, where the normalized character vanishes)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    rows = check_partition(rows)
    points = [(0, Fraction(0))]
    points += [(s, normalized_character(dilate(rows, s), k - 1)) for s in range(1, k + 1)]
    poly = interpolate_univariate(points, k)
    return poly.coefficient_of({("s", 1): k})


@lru_cache(maxsize=None)
def free_cumulant_multirect_symbolic(r: int, k: int) -> RatPoly:
    """R_k of the r-block diagram p x q by the minimal-factorization sum:
    pairs s1 o s2 = (1,...,k-1) in S(k-1) with |C(s1)| + |C(s2)| = k,
    colorings phi2 of the s2-cycles by blocks, sign(s1), q-factors attached
    to s1-cycles through the max rule and p-factors to s2-cycles."""
    if r < 1:
        raise ValueError("need at least one block")
    if k < 2:
        raise ValueError("k must be >= 2")
    accum: dict = {}
    for s1, s2 in perms.factorizations_of_cycle(k - 1):
        c1 = perms.cycles(s1)
        c2 = perms.cycles(s2)
        if len(c1) + len(c2) != k:
            continue
        sg = 1 if (k - 1 - len(c1)) % 2 == 0 else -1
        owner = [0] * k
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


def free_cumulant_multirect(m: MultiRect, k: int) -> Fraction:
    if not m.p:
        if k < 2:
            raise ValueError("k must be >= 2")
        return Fraction(0)
    assignment = {}
    for i, (pi, qi) in enumerate(zip(m.p, m.q), 1):
        assignment[("p", i)] = pi
        assignment[("q", i)] = qi
    return free_cumulant_multirect_symbolic(len(m.p), k).evaluate(assignment)


def scale_homogeneity_check(rows: Partition, k: int, s: int) -> bool:
    """True iff S_k(s.rows) = s^k S_k(rows) and R_k(s.rows) = s^k R_k(rows)
    hold exactly."""
    if s < 1:
        raise ValueError("dilation factor must be >= 1")
    rows = check_partition(rows)
    big = dilate(rows, s)
    if s_functional_boxes(big, k) != Fraction(s) ** k * s_functional_boxes(rows, k):
        return False
    r_small = free_cumulant_from_s(s_vector(rows, k), k)
    r_big = free_cumulant_from_s(s_vector(big, k), k)
    return r_big == Fraction(s) ** k * r_small

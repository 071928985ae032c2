from fractions import Fraction

import pytest

from symchar import perms
from symchar.charoracle import normalized_character
from symchar.diagrams import partitions_up_to
from symchar.functionals import r_vector
from symchar.kerov import (
    KerovTriple,
    candidate_triples,
    kerov_polynomial_by_conversion,
    kerov_polynomial_by_counting,
    kerov_quadratic_derivative,
    marriage_condition,
    marriage_condition_flow,
    s_in_terms_of_r,
)
from symchar.ratpoly import R, RatPoly, S

K_EXPECTED = {
    1: "R2",
    2: "R3",
    3: "R4 + R2",
    4: "R5 + 5*R3",
    5: "R6 + 15*R4 + 5*R2^2 + 8*R2",
    6: "R7 + 35*R5 + 35*R3*R2 + 84*R3",
}

THREE_CYCLE = (3, 1, 2)  # the 3-cycle 1 -> 3 -> 2 -> 1 in S(3)


def test_triple_validation():
    KerovTriple(THREE_CYCLE, THREE_CYCLE, (2,))
    with pytest.raises(ValueError):
        KerovTriple(THREE_CYCLE, (1, 2, 3), (2,))  # product is not the cycle
    with pytest.raises(ValueError):
        KerovTriple(THREE_CYCLE, THREE_CYCLE, (1,))  # color < 2
    with pytest.raises(ValueError):
        KerovTriple(THREE_CYCLE, THREE_CYCLE, (3,))  # wrong color total
    with pytest.raises(ValueError):
        KerovTriple(THREE_CYCLE, THREE_CYCLE, (2, 2))  # wrong length


def test_marriage_single_cycle_vacuous():
    t = KerovTriple(THREE_CYCLE, THREE_CYCLE, (2,))
    assert marriage_condition(t)
    assert marriage_condition_flow(t)


def test_marriage_failing_transposition():
    # sigma1 = (1 2), sigma2 = (2 3): the fixed point {1} of sigma2 meets
    # only one sigma1-cycle, but its color demands one husband exclusively.
    t = KerovTriple((2, 1, 3), (1, 3, 2), (2, 2))
    assert not marriage_condition(t)
    assert not marriage_condition_flow(t)


def test_color_sum_invariant():
    for k in range(1, 6):
        for t in candidate_triples(k):
            c1 = perms.cycles(t.sigma1)
            assert sum(c - 1 for c in t.colors) == len(c1)


@pytest.mark.parametrize("k", range(1, 6))
def test_marriage_equivalence(k):
    for t in candidate_triples(k):
        assert marriage_condition(t) == marriage_condition_flow(t), t


@pytest.mark.parametrize("k", sorted(K_EXPECTED))
def test_kerov_polynomials_match_display(k):
    assert kerov_polynomial_by_counting(k) == RatPoly.from_text(K_EXPECTED[k])


def test_k5_r2r2_triple_count():
    # ten labeled triples behind the second derivative 2! * 5 of the R2^2 term
    assert kerov_polynomial_by_counting(5).coefficient_of({("R", 2): 2}) == 5
    assert kerov_polynomial_by_counting(5).derivative_at_zero(
        [("R", 2), ("R", 2)]) == 10
    passing = sum(
        1 for t in candidate_triples(5)
        if t.colors == (2, 2) and marriage_condition(t))
    assert passing == 5


def test_s_in_terms_of_r_low_orders():
    table = s_in_terms_of_r(4)
    assert table[2] == R(2)
    assert table[3] == R(3)
    assert table[4] == R(4) + Fraction(3, 2) * R(2) ** 2


def test_s_in_terms_of_r_round_trip():
    from symchar.functionals import r_in_terms_of_s

    table = s_in_terms_of_r(10)
    for k in range(2, 11):
        back = r_in_terms_of_s(k).substitute(
            {("S", j): table[j] for j in range(2, k + 1)})
        assert back == R(k)


def test_conversion_by_hand_k3():
    # S4 - 3/2 S2^2 + S2 with S4 = R4 + 3/2 R2^2 and S2 = R2 gives R4 + R2
    jpoly = S(4) - Fraction(3, 2) * S(2) ** 2 + S(2)
    table = s_in_terms_of_r(4)
    assert jpoly.substitute({("S", j): table[j] for j in (2, 3, 4)}) == R(4) + R(2)


@pytest.mark.parametrize("k", range(1, 6))
def test_count_equals_conversion(k):
    assert kerov_polynomial_by_counting(k) == kerov_polynomial_by_conversion(k)


@pytest.mark.parametrize("k", range(1, 9))
def test_coefficients_nonnegative_integers_and_leading_term(k):
    poly = kerov_polynomial_by_counting(k)
    for _, coeff in poly.items():
        assert coeff.denominator == 1
        assert coeff >= 0
    assert poly.coefficient_of({("R", k + 1): 1}) == 1


def test_evaluation_against_oracle():
    for rows in partitions_up_to(6):
        n = sum(rows)
        rvals = r_vector(rows, n + 1)
        assign = {("R", j): v for j, v in rvals.items()}
        for k in range(1, n + 1):
            assert kerov_polynomial_by_counting(k).evaluate(assign) == \
                normalized_character(rows, k)


def test_evaluation_beyond_diagram_size():
    # for k > n the normalized character vanishes, and the polynomial
    # identity still holds because the falling factorial passes through 0
    for rows in partitions_up_to(3):
        n = sum(rows)
        rvals = r_vector(rows, 7)
        assign = {("R", j): v for j, v in rvals.items()}
        for k in range(n + 1, 7):
            assert kerov_polynomial_by_counting(k).evaluate(assign) == 0
            assert normalized_character(rows, k) == 0


def test_quadratic_derivative_counts():
    assert kerov_quadratic_derivative(5, 2, 2) == 10
    assert kerov_quadratic_derivative(6, 2, 3) == 35
    assert kerov_quadratic_derivative(6, 3, 2) == 35
    assert kerov_quadratic_derivative(4, 2, 2) == 0


def test_quadratic_derivative_against_polynomial():
    for k in range(1, 8):
        kpoly = kerov_polynomial_by_counting(k)
        for j1 in range(2, k):
            for j2 in range(j1, k + 2 - j1):
                assert kerov_quadratic_derivative(k, j1, j2) == \
                    kpoly.derivative_at_zero([("R", j1), ("R", j2)])

"""Monomial ideal arithmetic, quotient bases, Hilbert functions and the
concrete ideal constructors."""

import random

import pytest

from rees_lab.monomials import (
    InputError,
    aci_ideal,
    aci_s_value,
    as_aci,
    cap_with_m_power,
    colon_by_monomial,
    cone_extension,
    dim_ideal_at,
    hilbert_function,
    ideal_sum,
    is_artinian,
    m_power,
    membership,
    minimalize,
    mon_str,
    multiply_by_m,
    quotient_basis,
    socle_cap_degree,
    standard_monomials,
    thm31_d,
    thm31_ideal,
)

from oracles import brute_hilbert, brute_ideal_equal, brute_minimalize

from fractions import Fraction


I2110 = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)]


def test_minimalize_drops_divisible():
    I = minimalize([(2, 0), (3, 0), (0, 1)], 2)
    assert set(I.gens) == {(2, 0), (0, 1)}


def test_minimalize_empty_is_zero_ideal():
    I = minimalize([], 3)
    assert I.is_zero and I.mu == 0


def test_minimalize_matches_pairwise_filter_oracle():
    gens = I2110 + [(2, 1, 0)]
    I = minimalize(gens, 3)
    assert set(I.gens) == brute_minimalize(gens)
    assert set(I.gens) == {(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)}


def test_minimalize_idempotent_and_order_independent():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 4) for _ in range(n))
                for _ in range(rng.randint(0, 8))]
        I = minimalize(gens, n)
        assert minimalize(I.gens, n) == I
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert minimalize(shuffled, n) == I
        assert set(I.gens) == brute_minimalize(gens)


def test_minimalize_rejects_bad_lengths():
    with pytest.raises(InputError):
        minimalize([(1, 0)], 3)


def test_membership():
    I = minimalize([(2, 0, 0), (0, 1, 0)], 3)
    assert membership(I, (1, 1, 1))       # x2 divides x1 x2 x3
    assert not membership(I, (1, 0, 5))
    with pytest.raises(InputError):
        membership(I, (1, 0))


def test_membership_mixed_generator():
    I = aci_ideal(9, 9, 9, 3, 3, 3)
    assert membership(I, (3, 3, 3))


def test_m_power():
    assert set(m_power(1, 3).gens) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    I = m_power(2, 2)
    assert set(I.gens) == {(2, 0), (1, 1), (0, 2)} and I.mu == 3
    assert m_power(0, 2).is_unit and m_power(0, 2).mu == 1


def test_ideal_sum_mismatch():
    with pytest.raises(InputError):
        ideal_sum(m_power(1, 2), m_power(1, 3))


def test_cap_stabilizes_after_socle():
    I = aci_ideal(9, 9, 9, 3, 3, 3)
    assert cap_with_m_power(I, 11).mu == cap_with_m_power(I, 10).mu == 58


def test_multiply_by_m():
    I = minimalize([(1, 0)], 2)
    assert set(multiply_by_m(I).gens) == {(2, 0), (1, 1)}
    assert multiply_by_m(m_power(1, 2)) == m_power(2, 2)


def test_multiply_by_m_derived_example():
    # products enumerated by hand and minimalized by the pairwise oracle
    I = minimalize([(2, 0), (1, 1), (0, 3)], 2)
    prods = [(3, 0), (2, 1), (2, 1), (1, 2), (1, 3), (0, 4)]
    assert set(multiply_by_m(I).gens) == brute_minimalize(prods)
    assert set(multiply_by_m(I).gens) == {(3, 0), (2, 1), (1, 2), (0, 4)}


def test_colon_by_unit_and_variable():
    I = minimalize([(3, 0), (0, 2)], 2)
    assert colon_by_monomial(I, (0, 0)) == I
    assert set(colon_by_monomial(I, (1, 0)).gens) == {(2, 0), (0, 2)}


def test_colon_witnesses_m_fullness_of_m_power():
    # (m * m^3) : x1 recovers m^3, degreewise against the membership oracle
    mp = m_power(3, 3)
    col = colon_by_monomial(multiply_by_m(mp), (1, 0, 0))
    assert brute_ideal_equal(col.gens, mp.gens, 3, 6)
    assert col == mp


def test_standard_monomials_order_and_content():
    I = minimalize([(5, 0), (0, 5), (3, 3)], 2)
    level5 = standard_monomials(I, 5)
    assert level5 == [(4, 1), (3, 2), (2, 3), (1, 4)]  # lex descending


def test_hilbert_function_small():
    I = minimalize(I2110, 3)
    assert hilbert_function(I) == (1, 3, 2)
    assert hilbert_function(I) == brute_hilbert(I.gens, 3)


def test_hilbert_function_two_variable_factor():
    I = minimalize([(5, 0), (0, 5), (3, 3)], 2)
    assert hilbert_function(I) == (1, 2, 3, 4, 5, 4, 2)


def test_hilbert_requires_artinian():
    with pytest.raises(InputError):
        hilbert_function(minimalize([(2, 0), (1, 1)], 2))


def test_is_artinian():
    assert not is_artinian(minimalize([(2, 0), (1, 1)], 2))
    assert is_artinian(m_power(4, 3))
    assert is_artinian(minimalize([(0, 0)], 2))  # unit ideal


def test_socle_cap_degree():
    assert socle_cap_degree(m_power(4, 3)) == 4
    assert socle_cap_degree(minimalize(I2110, 3)) == 3
    with pytest.raises(InputError):
        socle_cap_degree(minimalize([(1, 0)], 2))


def test_cap_at_socle_degree_is_identity():
    for I in (m_power(3, 2), minimalize(I2110, 3), aci_ideal(3, 3, 3, 1, 1, 1)):
        assert cap_with_m_power(I, socle_cap_degree(I)) == I


def test_dim_ideal_at():
    I = m_power(2, 2)
    assert dim_ideal_at(I, 1) == 0
    assert dim_ideal_at(I, 2) == 3
    assert dim_ideal_at(I, 3) == 4


def test_aci_ideal_and_s_value():
    I = aci_ideal(9, 9, 9, 3, 3, 3)
    assert set(I.gens) == {(9, 0, 0), (0, 9, 0), (0, 0, 9), (3, 3, 3)}
    s = aci_s_value(9, 9, 9, 3, 3, 3)
    assert s == 10 and s + 1 == 9 + 3 - 1


def test_aci_preconditions():
    aci_ideal(2, 2, 2, 1, 1, 1)  # accepted: all mixed exponents below pure
    with pytest.raises(InputError):
        aci_ideal(2, 2, 2, 2, 1, 1)  # alpha == a
    with pytest.raises(InputError):
        aci_ideal(3, 3, 3, 2, 0, 0)  # only one nonzero mixed exponent
    assert aci_s_value(2, 2, 2, 1, 1, 0) == Fraction(8, 3) - 2


def test_as_aci_roundtrip():
    assert as_aci(aci_ideal(4, 5, 6, 1, 2, 3)) == (4, 5, 6, 1, 2, 3)
    assert as_aci(m_power(2, 3)) is None
    assert as_aci(minimalize([(2, 0), (0, 2)], 2)) is None


def test_thm31_ideal():
    I = thm31_ideal(5, 4)
    assert set(I.gens) == {
        (5, 0, 0, 0), (0, 5, 0, 0), (3, 3, 0, 0), (0, 0, 4, 0), (0, 0, 0, 4)
    }
    assert thm31_d(5, 4) == 6
    with pytest.raises(InputError):
        thm31_ideal(5, 3)
    with pytest.raises(InputError):
        thm31_ideal(4, 4)


def test_thm31_hilbert_strictly_increasing_through_d_plus_1():
    H = hilbert_function(thm31_ideal(5, 4))
    d = thm31_d(5, 4)
    assert all(H[k] < H[k + 1] for k in range(d + 1))
    assert H[: d + 2] == (1, 4, 10, 20, 33, 46, 55, 56)


def test_cone_extension():
    c1 = cone_extension(minimalize([(1,)], 1))
    assert set(c1.gens) == {(1, 0), (0, 2)}
    assert cone_extension(m_power(2, 2)) == m_power(2, 3)


def test_cone_extension_generator_recount():
    J = cap_with_m_power(aci_ideal(9, 9, 9, 3, 3, 3), 11)
    cone = cone_extension(J)
    assert is_artinian(cone) and cone.nvars == 4
    raw = [g + (0,) for g in J.gens]
    raw += [(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 2)]
    assert set(cone.gens) == brute_minimalize(raw)
    assert cone.mu == len(brute_minimalize(raw)) == 62


def test_hilbert_binomial_identity():
    # H(k) = C(n-1+k, k) - #degree-k monomials inside the ideal
    from math import comb

    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 3)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(n + 2)]
        for i in range(n):
            e = [0] * n
            e[i] = rng.randint(1, 4)
            gens.append(tuple(e))
        I = minimalize(gens, n)
        if I.is_unit:
            continue
        H = hilbert_function(I)
        basis = quotient_basis(I)
        assert sum(H) == basis.dim()
        for k, h in enumerate(H):
            assert h == comb(n - 1 + k, k) - dim_ideal_at(I, k)


def test_ideal_contained_in_m_ideal_colon_by_variable():
    # I is always inside (mI : x_i), tested with monomial witnesses
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(2, 3)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(4)]
        I = minimalize(gens, n)
        if I.is_zero:
            continue
        mI = multiply_by_m(I)
        for i in range(n):
            e = [0] * n
            e[i] = 1
            col = colon_by_monomial(mI, tuple(e))
            assert all(col.contains(g) for g in I.gens)


def test_mon_str():
    assert mon_str((0, 0)) == "1"
    assert mon_str((2, 1, 0)) == "x1^2 x2"

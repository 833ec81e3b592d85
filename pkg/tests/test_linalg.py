"""Exact rank machinery: numeric, prime-field, and parametric."""

import random
from fractions import Fraction

import pytest

from rees_lab.linalg import (
    CROSSCHECK_PRIME,
    ExactMatrix,
    FieldSpec,
    LinearForm,
    colon_dim_by_linear_form,
    detect_scaling,
    generic_mult_rank,
    kernel_basis,
    mult_map_matrix,
    parametric_rank,
    rank,
    rank_mod_p,
    specialize,
)
from rees_lab.monomials import (
    InputError,
    aci_ideal,
    m_power,
    minimalize,
    multiply_by_m,
    thm31_ideal,
)
from rees_lab.polynomials import IntPoly


def test_fieldspec_validation():
    FieldSpec(0)
    FieldSpec(101)
    with pytest.raises(InputError):
        FieldSpec(91)  # 7 * 13


def test_rank_identity_and_zero():
    assert rank(ExactMatrix.identity(3)) == 3
    assert kernel_basis(ExactMatrix.identity(3)) == []
    Z = ExactMatrix.zeros(2, 5)
    assert rank(Z) == 0
    assert len(kernel_basis(Z)) == 5


def test_rank_with_fractions():
    # second row is 3/2 times the first: rank 1 despite messy entries
    M = ExactMatrix.from_rows(
        [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 4), Fraction(1, 2)]]
    )
    assert rank(M) == 1
    M2 = ExactMatrix.from_rows(
        [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 4), Fraction(1, 5)]]
    )
    assert rank(M2) == 2


def test_rank_invariance_under_permutation_and_transpose():
    rng = random.Random(13)
    for _ in range(30):
        R, C = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(C)]
                for _ in range(R)]
        M = ExactMatrix.from_rows(rows)
        r = rank(M)
        assert rank(M.transpose()) == r
        shuffled = rows[:]
        rng.shuffle(shuffled)
        cols = list(range(C))
        rng.shuffle(cols)
        P = ExactMatrix.from_rows([[row[j] for j in cols] for row in shuffled])
        assert rank(P) == r


def test_rank_mod_p_lower_bounds_rational_rank():
    rng = random.Random(17)
    for _ in range(30):
        R, C = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-9, 9) for _ in range(C)] for _ in range(R)]
        rq = rank(ExactMatrix.from_rows([[Fraction(v) for v in row]
                                         for row in rows]))
        rp = rank_mod_p([[v % CROSSCHECK_PRIME for v in row] for row in rows],
                        CROSSCHECK_PRIME)
        assert rp <= rq
        assert rp == rq  # p > 2^30 never divides these tiny minors


def test_kernel_vectors_are_exact():
    rng = random.Random(19)
    for _ in range(20):
        R, C = rng.randint(1, 5), rng.randint(1, 6)
        M = ExactMatrix.from_rows(
            [[Fraction(rng.randint(-4, 4)) for _ in range(C)] for _ in range(R)]
        )
        ker = kernel_basis(M)
        assert rank(M) + len(ker) == C
        for v in ker:
            assert all(x == 0 for x in M.apply(v))


def test_mult_map_small_example():
    I = minimalize([(2, 0), (0, 2)], 2)
    y = LinearForm.of([1, 1])
    M1 = mult_map_matrix(I, y, 1)
    assert (M1.nrows, M1.ncols) == (2, 1)
    assert rank(M1) == 1
    M2 = mult_map_matrix(I, y, 2)
    assert (M2.nrows, M2.ncols) == (1, 2)
    assert [list(r) for r in M2.entries] == [[1, 1]]
    assert rank(M2) == 1  # surjective onto the 1-dimensional degree 2


def test_mult_map_rejects_zero_form_and_bad_degree():
    I = m_power(2, 2)
    with pytest.raises(InputError):
        mult_map_matrix(I, LinearForm.of([0, 0]), 1)
    with pytest.raises(InputError):
        mult_map_matrix(I, LinearForm.of([1, 1]), 5)


def test_mult_map_generic_entries():
    I = thm31_ideal(5, 4)
    M = mult_map_matrix(I, LinearForm.generic(4), 7)
    assert M.is_parametric and M.nparams == 4
    assert (M.nrows, M.ncols) == (56, 55)
    ents = {str(v) for row in M.entries for v in row if not v.is_zero()}
    assert ents <= {"c1", "c2", "c3", "c4"}


def test_parametric_rank_diagonal_and_proportional():
    c1 = IntPoly.var(2, 0)
    c2 = IntPoly.var(2, 1)
    zero = IntPoly(2, {})
    diag = ExactMatrix.from_rows([[c1, zero], [zero, c2]], nparams=2)
    assert parametric_rank(diag) == 2
    assert parametric_rank(diag, method="elimination") == 2
    row = ExactMatrix.from_rows([[c1, c1]], nparams=2)
    assert parametric_rank(row) == 1
    assert parametric_rank(row, method="elimination") == 1


def test_parametric_rank_multiterm_falls_back_to_elimination():
    c1 = IntPoly.var(2, 0)
    c2 = IntPoly.var(2, 1)
    s = c1 + c2
    zero = IntPoly(2, {})
    M = ExactMatrix.from_rows([[s, c1], [c2, s]], nparams=2)
    assert detect_scaling(M) is None
    # det = (c1+c2)^2 - c1 c2 is not identically zero
    assert parametric_rank(M) == 2
    singular = ExactMatrix.from_rows([[s, s], [s, s]], nparams=2)
    assert parametric_rank(singular) == 1


def test_scaling_reduction_found_for_mult_maps():
    I = aci_ideal(3, 3, 3, 1, 1, 1)
    for k in (1, 2, 3):
        M = mult_map_matrix(I, LinearForm.generic(3), k)
        red = detect_scaling(M)
        assert red is not None
        # the reduction's constant matrix is the all-ones specialization
        assert red.coefficient_rows == tuple(
            tuple(v for v in row) for row in specialize(M, [1, 1, 1])
        )


def test_scaling_and_elimination_agree_on_mult_maps():
    for ideal in (
        aci_ideal(3, 3, 3, 1, 1, 1),
        aci_ideal(2, 2, 2, 1, 1, 0),
        m_power(3, 3),
    ):
        for k in range(1, 5):
            try:
                M = mult_map_matrix(ideal, LinearForm.generic(ideal.nvars), k)
            except InputError:
                break
            assert parametric_rank(M) == parametric_rank(M, method="elimination")


def test_parametric_rank_semicontinuity_and_max_specialization():
    rng = random.Random(23)
    I = aci_ideal(3, 3, 3, 1, 1, 1)
    M = mult_map_matrix(I, LinearForm.generic(3), 3)
    r = parametric_rank(M)
    assert r == 5  # the known deficiency: 5 < dim A_2 = 6
    best = 0
    for _ in range(50):
        pt = [rng.randrange(0, CROSSCHECK_PRIME) for _ in range(3)]
        sr = rank_mod_p(specialize(M, pt), CROSSCHECK_PRIME)
        assert sr <= r
        best = max(best, sr)
    assert best == r


def test_generic_rank_deficiency_of_example_family():
    I = aci_ideal(9, 9, 9, 3, 3, 3)
    r = generic_mult_rank(I, 11)
    assert r == 53 < 54


def test_parametric_rank_char_p():
    I = aci_ideal(3, 3, 3, 1, 1, 1)
    gf2 = FieldSpec(2)
    M = mult_map_matrix(I, LinearForm.generic(3), 3, gf2)
    assert parametric_rank(M) == parametric_rank(M, method="elimination") == 5


def test_rank_requires_numeric():
    M = ExactMatrix.from_rows([[IntPoly.var(1, 0)]], nparams=1)
    with pytest.raises(InputError):
        rank(M)


def test_colon_dim_by_linear_form():
    # (m^3 : x1) has the same degree-2 piece as m^2
    m3 = m_power(3, 2)
    assert colon_dim_by_linear_form(m3, LinearForm.variable(2, 0), 2) == 3
    # m(m^4) : (x1+x2+x3) agrees with m^4 in degree 4: 15 monomials
    m5 = multiply_by_m(m_power(4, 3))
    assert colon_dim_by_linear_form(m5, LinearForm.sum_of_variables(3), 4) == 15


def test_colon_dim_strictly_exceeds_capped_ideal():
    # the certified not-m-full mechanism: some degree-10 element enters
    # the colon that is not in the capped ideal
    from rees_lab.monomials import cap_with_m_power, dim_ideal_at

    I = cap_with_m_power(aci_ideal(9, 9, 9, 3, 3, 3), 11)
    L = multiply_by_m(I)
    d = colon_dim_by_linear_form(L, LinearForm.sum_of_variables(3), 10)
    assert d > dim_ideal_at(I, 10)


def test_colon_dim_rejects_generic_and_zero():
    m3 = m_power(3, 2)
    with pytest.raises(InputError):
        colon_dim_by_linear_form(m3, LinearForm.generic(2), 1)
    with pytest.raises(InputError):
        colon_dim_by_linear_form(m3, LinearForm.of([0, 0]), 1)

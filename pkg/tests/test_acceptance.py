"""Acceptance suite: the eight headline checks, one pass/fail line each.

All arithmetic in the library is exact, so every comparison below is
exact equality.  Run with ``pytest tests/test_acceptance.py -v -s`` to
see the per-criterion lines.
"""

import random

from rees_lab.certify import (
    claim_sweep,
    m_full_check,
    rees_brute_oracle,
    rees_certificate,
    strong_rees_certificate,
    thm2_verify,
    thm31_verify,
    wlp_check,
)
from rees_lab.linalg import LinearForm, mult_map_matrix, rank
from rees_lab.monomials import (
    aci_ideal,
    cap_with_m_power,
    colon_by_monomial,
    cone_extension,
    hilbert_function,
    is_artinian,
    m_power,
    minimalize,
    multiply_by_m,
    thm31_d,
    thm31_ideal,
)
from rees_lab.posets import (
    log_concave,
    lym_brute,
    max_antichain,
    max_antichain_brute,
    nmp_check,
    random_ranked_poset,
)
from rees_lab.specparse import parse_ideal

from oracles import brute_minimalize, nmp_exhaustive


def report(n: int, ok: bool, text: str) -> None:
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {text}")
    assert ok, text


def test_criterion_1_example_family_thm2():
    rec = thm2_verify(9, 9, 9, 3, 3, 3)
    wlp = rec.details["wlp"]
    ok = (
        rec.status == "PASS"
        and wlp["verdict"] == "FAILS"
        and wlp["s_diagnostics"]["s"] == "10"
        and wlp["failure_degrees"] == [11]
        and rec.details["rees"]["verdict"] == "REES"
        and rec.details["m_full"]["verdict"] == "NOT_M_FULL"
    )
    report(1, ok, "cap of the (9,3) family at degree 11 is Rees, not m-full; "
                  "WLP fails at s=10")


def test_criterion_2_equal_generator_counts_one_degree_down():
    I = aci_ideal(9, 9, 9, 3, 3, 3)
    mu_10 = cap_with_m_power(I, 10).mu
    mu_11 = cap_with_m_power(I, 11).mu
    report(2, mu_10 == mu_11 == 58,
           f"mu(I + m^10) = {mu_10} equals mu(I + m^11) = {mu_11}")


def test_criterion_3_thm31_5_4():
    I = thm31_ideal(5, 4)
    d = thm31_d(5, 4)
    H = hilbert_function(I)
    increasing = all(H[k] < H[k + 1] for k in range(d + 1))

    M = mult_map_matrix(I, LinearForm.generic(4), d + 1)
    assert M.nparams == 4
    rec = thm31_verify(5, 4)
    factors = rec.details["strong_rees"]["factors"]
    two_var = next(f for f in factors if len(f["variables"]) == 2)
    ok = (
        rec.status == "PASS"
        and increasing
        and rec.details["generic_rank_at_d"] < rec.details["dim_at_d"]
        and rec.details["strong_rees"]["verdict"] == "STRONG_REES"
        and rec.details["m_full"]["verdict"] == "NOT_M_FULL"
        and two_var["level_sizes"] == [1, 2, 3, 4, 5, 4, 2]
        and two_var["top_step_sizes"] == [4, 2]
        and all(two_var["nmp"])
    )
    report(3, ok, f"d = {d}: strictly increasing Hilbert function, generic "
                  f"rank {rec.details['generic_rank_at_d']} < {H[d]}, strong "
                  "Rees cap, not m-full; two-variable factor "
                  "(1,2,3,4,5,4,2) with top step (4,2)")


def test_criterion_4_five_variable_maps():
    I = parse_ideal("n=5; gens=x1^5,x2^5,x3^5,x4^5,x5^5,x1 x2 x3 x4 x5")
    y = LinearForm.sum_of_variables(5)
    ranks = {}
    ok = True
    for k in (9, 10):  # the maps out of degrees 8 and 9
        M = mult_map_matrix(I, y, k)
        r = rank(M)
        ranks[k] = (r, M.nrows, M.ncols)
        ok = ok and r < M.ncols and r < M.nrows
    # frozen exact values, first derived by fraction-free elimination and
    # confirmed against two independent prime reductions
    ok = ok and ranks[9] == (284, 300, 285) and ranks[10] == (279, 280, 300)
    rep = wlp_check(I)
    ok = ok and rep.verdict == "FAILS" and rep.failure_degrees == [9, 10]
    report(4, ok, f"multiplication by the sum of variables has ranks "
                  f"{ranks[9][0]} of {ranks[9][2]} and {ranks[10][0]} of "
                  f"{ranks[10][1]}: neither injective nor surjective")


def test_criterion_5_claim_sweep():
    rep = claim_sweep(max_pure=9, max_mixed=3)
    ok = rep.checked == 21168 and len(rep.wlp_failures) > 0
    for f in rep.wlp_failures:
        ok = ok and f.claim_profile_ok and f.s_integral
        ok = ok and f.dims_equal_max and f.full_matching
        ok = ok and f.failure_degrees == [f.s + 1]
    ok = ok and rep.all_claims_hold
    report(5, ok, f"swept {rep.checked} almost complete intersections; "
                  f"{len(rep.wlp_failures)} fail the WLP and every one is "
                  "injective below s+1, surjective above, with s integral, "
                  "a flat Hilbert maximum at s, s+1, and a full matching")


def test_criterion_6a_dilworth_vs_brute():
    rng = random.Random(60)
    for _ in range(200):
        P = random_ranked_poset(rng, max_size=20, max_levels=4)
        assert max_antichain(P)[0] == max_antichain_brute(P)
    report(6, True, "(a) Dilworth equals exhaustive antichain maximum on "
                    "200 random posets")


def test_criterion_6b_nmp_vs_exhaustive_subsets():
    rng = random.Random(61)
    for _ in range(200):
        a = rng.randint(1, 18)
        b = rng.randint(1, 12)
        masks = [0] * a
        density = rng.random()
        for i in range(a):
            for j in range(b):
                if rng.random() < density:
                    masks[i] |= 1 << j
        from rees_lab.posets import RankedPoset

        P = RankedPoset(
            (tuple(f"a{i}" for i in range(a)), tuple(f"b{j}" for j in range(b))),
            (frozenset((i, j) for i in range(a) for j in range(b)
                       if masks[i] >> j & 1),),
        )
        assert nmp_check(P) == [nmp_exhaustive(masks, a, b)]
    report(6, True, "(b) flow-based normalized matching check equals the "
                    "exhaustive subset check on 200 random level pairs")


def test_criterion_6c_lym_iff_nmp():
    rng = random.Random(62)
    for _ in range(100):
        P = random_ranked_poset(rng, max_size=13, max_levels=3)
        assert lym_brute(P) == all(nmp_check(P))
    report(6, True, "(c) brute LYM agrees with all-levels normalized "
                    "matching on 100 random posets")


def test_criterion_6d_products_preserve_nmp_and_log_concavity():
    from rees_lab.posets import product

    rng = random.Random(63)
    pool = []
    attempts = 0
    while len(pool) < 60 and attempts < 30000:
        attempts += 1
        P = random_ranked_poset(rng, max_size=6, max_levels=3, edge_prob=0.75)
        if all(nmp_check(P)) and log_concave(P):
            pool.append(P)
    assert len(pool) == 60
    for i in range(0, 60, 2):
        PQ = product(pool[i], pool[i + 1])
        assert all(nmp_check(PQ)) and log_concave(PQ)
    report(6, True, "(d) 30 products of normalized-matching log-concave "
                    "posets keep both properties")


def test_criterion_6e_brute_oracle_vs_certificates():
    # fixtures small enough for the up-set oracle, including a strong Rees
    # instance and a flat-maximum instance that is Rees but not strong
    # (capping one degree lower keeps the generator count)
    strong_cases = [
        (m_power(5, 2), 4),
        (m_power(4, 2), 3),
        (aci_ideal(2, 2, 2, 1, 1, 0), 1),
    ]
    for ideal, p in strong_cases:
        cert = strong_rees_certificate(ideal, p)
        brute = rees_brute_oracle(cap_with_m_power(ideal, p))
        assert cert.verdict == "STRONG_REES" and brute.strong_rees and brute.rees

    rees_cases = [
        (m_power(2, 2), 1),
        (minimalize([(2, 0), (0, 4)], 2), 3),
    ]
    for ideal, p in rees_cases:
        cert = rees_certificate(ideal, p)
        brute = rees_brute_oracle(cap_with_m_power(ideal, p))
        assert cert.verdict == "REES" and brute.rees

    # the flat-maximum instance is not strong: the cap one degree lower has
    # the same number of generators
    flat = minimalize([(2, 0), (0, 4)], 2)
    capped = cap_with_m_power(flat, 3)
    brute = rees_brute_oracle(capped)
    assert not brute.strong_rees
    assert cap_with_m_power(flat, 2).mu == capped.mu
    assert parse_ideal(brute.strong_violator).mu == capped.mu

    # a plain non-Rees input is caught by the oracle
    assert not rees_brute_oracle(minimalize([(2, 0), (0, 3)], 2)).rees
    report(6, True, "(e) the up-set oracle confirms every certified verdict "
                    "on the fixture set, including a strong Rees instance "
                    "and the equal-generator-count non-strong instance")


FIXTURES = [
    m_power(2, 2),
    m_power(4, 2),
    m_power(3, 3),
    aci_ideal(2, 2, 2, 1, 1, 0),
    aci_ideal(3, 3, 3, 1, 1, 1),
    minimalize([(2, 0), (0, 4)], 2),
    cap_with_m_power(aci_ideal(9, 9, 9, 3, 3, 3), 11),
    thm31_ideal(5, 4),
]


def test_criterion_7_m_full_sanity():
    for n in range(1, 5):
        for p in range(1, 6):
            rep = m_full_check(m_power(p, n))
            assert rep.verdict == "M_FULL" and rep.witness == "x1", (n, p)
    for I in FIXTURES:
        mI = multiply_by_m(I)
        for i in range(I.nvars):
            e = [0] * I.nvars
            e[i] = 1
            col = colon_by_monomial(mI, tuple(e))
            assert all(col.contains(g) for g in I.gens)
    report(7, True, "powers of the maximal ideal are m-full with witness "
                    "x1 (p <= 5, n <= 4); I sits inside mI : y for every "
                    "fixture ideal and variable witness")


def test_criterion_8_cone_construction():
    J = cap_with_m_power(aci_ideal(9, 9, 9, 3, 3, 3), 11)
    cone = cone_extension(J)
    raw = [g + (0,) for g in J.gens]
    raw += [(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 2)]
    recount = brute_minimalize(raw)
    mf = m_full_check(cone)
    ok = (
        is_artinian(cone)
        and cone.nvars == 4
        and set(cone.gens) == recount
        and cone.mu == len(recount)
        and mf.verdict == "NOT_M_FULL"
        and mf.certificate.s == 10
    )
    report(8, ok, f"cone of the capped (9,3) ideal is Artinian in 4 "
                  f"variables with mu = {cone.mu} (recount "
                  f"{len(recount)}), and is certified not m-full")

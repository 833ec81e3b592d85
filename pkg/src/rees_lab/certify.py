"""Property checkers and machine-checkable certificates.

Verdicts are sufficient-condition certificates, never guesses:

* WLP: per degree, the generic multiplication rank decides injectivity /
  surjectivity for a general linear form, and by rank semicontinuity a
  generic deficiency rules out every linear form at that degree.
* Sperner: Dilworth (max antichain vs max Hilbert value), with the
  unimodal + full-matchings route recorded when it applies.
* Rees / strong Rees: the capped ideal inherits the property from a
  Sperner (resp. LYM + strict dominance) hypothesis on the quotient.
* not-m-full: certified only for top-capped ideals, through the
  no-generators-in-degree-(s+1) and generic-non-injectivity argument;
  anything outside that shape is reported UNDETERMINED.

Brute-force oracles (up-set enumeration) validate the pipeline on small
inputs and are deliberately independent of the certificate code paths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import (
    DEFAULT_SEED,
    FieldSpec,
    LinearForm,
    QQ,
    colon_dim_by_linear_form,
    generic_mult_rank,
    kernel_basis,
    mult_map_matrix,
    rank,
)
from .monomials import (
    Exponents,
    InputError,
    MonomialIdeal,
    as_aci,
    aci_ideal,
    aci_s_value,
    cap_with_m_power,
    colon_by_monomial,
    dim_ideal_at,
    divides,
    is_artinian,
    mdeg,
    minimalize,
    multiply_by_m,
    quotient_basis,
    standard_monomials,
    thm31_d,
    thm31_ideal,
)
from .posets import (
    SizeError,
    full_matching_at,
    is_unimodal,
    log_concave,
    max_antichain,
    nmp_check,
    poset_from_algebra,
)
from .specparse import format_ideal

KERNEL_EMBED_LIMIT = 120
DIRECT_NMP_LIMIT = 1200
ORACLE_LIMIT = 22


class HypothesisError(InputError):
    """A certificate hypothesis does not hold for the given input."""


@lru_cache(maxsize=64)
def _basis(ideal: MonomialIdeal):
    return quotient_basis(ideal)


def hilbert(ideal: MonomialIdeal) -> tuple[int, ...]:
    return _basis(ideal).hilbert()


# ---------------------------------------------------------------------------
# WLP


@dataclass
class DegreeRank:
    k: int                  # target degree of the map A_{k-1} -> A_k
    dim_source: int
    dim_target: int
    generic_rank: int
    injective: bool
    surjective: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "dim_source": self.dim_source,
            "dim_target": self.dim_target,
            "generic_rank": self.generic_rank,
            "injective": self.injective,
            "surjective": self.surjective,
        }


@dataclass
class SDiagnostics:
    s: str                   # exact rational, as a string
    s_integral: bool
    dims_equal_max: bool | None
    full_matching_at_s_plus_1: bool | None

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "s_integral": self.s_integral,
            "dims_equal_max": self.dims_equal_max,
            "full_matching_at_s_plus_1": self.full_matching_at_s_plus_1,
        }


@dataclass
class WlpReport:
    ideal: str
    characteristic: int
    verdict: str             # "WLP" | "FAILS"
    degrees: list[DegreeRank]
    failure_degrees: list[int]
    hilbert: tuple[int, ...]
    s_diagnostics: SDiagnostics | None
    kernel_witnesses: dict[int, list[str]]
    seed: int

    @property
    def has_wlp(self) -> bool:
        return self.verdict == "WLP"

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "characteristic": self.characteristic,
            "verdict": self.verdict,
            "hilbert": list(self.hilbert),
            "degrees": [d.to_dict() for d in self.degrees],
            "failure_degrees": self.failure_degrees,
            "s_diagnostics": self.s_diagnostics.to_dict() if self.s_diagnostics else None,
            "kernel_witnesses": {str(k): v for k, v in self.kernel_witnesses.items()},
            "seed": self.seed,
        }


def _deficiency_kernel(ideal: MonomialIdeal, k: int) -> list[str] | None:
    """A nonzero rational kernel vector of multiplication by the all-ones
    form at degree k; with the scaling identity this certifies the generic
    rank deficiency and is checkable by plain matrix-vector product."""
    M = mult_map_matrix(ideal, LinearForm.sum_of_variables(ideal.nvars), k, QQ)
    if M.ncols > KERNEL_EMBED_LIMIT:
        return None
    basis = kernel_basis(M)
    if not basis:
        return None
    return [str(v) for v in basis[0]]


def wlp_check(ideal: MonomialIdeal, field: FieldSpec = QQ,
              seed: int = DEFAULT_SEED) -> WlpReport:
    """Per-degree generic multiplication ranks and the WLP verdict."""
    basis = _basis(ideal)
    H = basis.hilbert()
    top = basis.top_degree
    degrees: list[DegreeRank] = []
    failures: list[int] = []
    kernels: dict[int, list[str]] = {}
    for k in range(1, top + 1):
        dim_src = H[k - 1]
        dim_tgt = H[k] if k < top else 0
        if dim_tgt == 0:
            r = 0
        else:
            r = generic_mult_rank(ideal, k, field, seed=seed)
        inj = r == dim_src
        surj = r == dim_tgt
        degrees.append(DegreeRank(k, dim_src, dim_tgt, r, inj, surj))
        if not inj and not surj:
            failures.append(k)
            w = _deficiency_kernel(ideal, k)
            if w is not None:
                kernels[k] = w
    verdict = "WLP" if not failures else "FAILS"
    s_diag = None
    aci = as_aci(ideal)
    if aci is not None:
        s = aci_s_value(*aci)
        integral = s.denominator == 1
        dims_eq = None
        matching_full = None
        if verdict == "FAILS" and integral:
            si = int(s)
            dims_eq = (
                si + 1 < top
                and H[si] == H[si + 1] == max(H)
            )
            poset = poset_from_algebra(ideal)
            if 1 <= si + 1 <= poset.nranks - 1:
                matching_full = full_matching_at(poset, si + 1).full
        s_diag = SDiagnostics(str(s), integral, dims_eq, matching_full)
    return WlpReport(
        ideal=format_ideal(ideal),
        characteristic=field.characteristic,
        verdict=verdict,
        degrees=degrees,
        failure_degrees=failures,
        hilbert=H,
        s_diagnostics=s_diag,
        kernel_witnesses=kernels,
        seed=seed,
    )


def claim_profile(ideal: MonomialIdeal, wlp_report: WlpReport | None = None,
                  seed: int = DEFAULT_SEED) -> bool:
    """For a WLP-failing 3-variable almost complete intersection in
    characteristic 0: is multiplication by x1+x2+x3 injective below
    degree s+1 and surjective above it, at every degree?"""
    aci = as_aci(ideal)
    if aci is None:
        raise InputError("claim profile applies to 3-variable almost "
                         "complete intersections only")
    if wlp_report is None:
        wlp_report = wlp_check(ideal, QQ, seed=seed)
    if wlp_report.characteristic != 0:
        raise InputError("claim profile is a characteristic-0 statement")
    if wlp_report.has_wlp:
        raise InputError("claim profile applies only when the WLP fails")
    s = aci_s_value(*aci)
    if s.denominator != 1:
        raise InputError("distinguished degree is not an integer")
    si = int(s)
    basis = _basis(ideal)
    H = basis.hilbert()
    top = basis.top_degree
    y = LinearForm.sum_of_variables(3)
    for k in range(1, top + 1):
        dim_src = H[k - 1]
        dim_tgt = H[k] if k < top else 0
        r = 0 if dim_tgt == 0 else rank(mult_map_matrix(ideal, y, k, QQ))
        if k < si + 1 and r != dim_src:
            return False
        if k > si + 1 and r != dim_tgt:
            return False
    return True


# ---------------------------------------------------------------------------
# Sperner


@dataclass
class MatchingRecord:
    k: int
    size: int
    full: bool

    def to_dict(self) -> dict:
        return {"k": self.k, "size": self.size, "full": self.full}


@dataclass
class SpernerCertificate:
    ideal: str
    sperner: bool
    max_antichain_size: int
    max_hilbert: int
    witness: list[str]
    hilbert: tuple[int, ...]
    unimodal: bool
    matchings: list[MatchingRecord]
    matching_route_ok: bool
    route: str               # "MATCHING+UNIMODAL" | "DILWORTH"

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "sperner": self.sperner,
            "max_antichain_size": self.max_antichain_size,
            "max_hilbert": self.max_hilbert,
            "witness": self.witness,
            "hilbert": list(self.hilbert),
            "unimodal": self.unimodal,
            "matchings": [m.to_dict() for m in self.matchings],
            "matching_route_ok": self.matching_route_ok,
            "route": self.route,
        }


def sperner_check(ideal: MonomialIdeal) -> SpernerCertificate:
    """Dilworth certificate, with the unimodal+matchings route recorded."""
    basis = _basis(ideal)
    H = basis.hilbert()
    if not H:
        raise InputError("the quotient is the zero ring")
    poset = poset_from_algebra(ideal)
    matchings = []
    all_full = True
    for k in range(1, poset.nranks):
        m = full_matching_at(poset, k)
        matchings.append(MatchingRecord(k, m.size, m.full))
        all_full = all_full and m.full
    unimodal = is_unimodal(H)
    matching_route = unimodal and all_full
    size, witness = max_antichain(poset)
    max_h = max(H)
    if size < max_h:
        raise AssertionError("antichain below a level size (internal error)")
    sperner = size == max_h
    if matching_route and not sperner:
        raise AssertionError("matching route contradicts Dilworth "
                             "(internal error)")
    return SpernerCertificate(
        ideal=format_ideal(ideal),
        sperner=sperner,
        max_antichain_size=size,
        max_hilbert=max_h,
        witness=[lab for _, lab in witness.members],
        hilbert=H,
        unimodal=unimodal,
        matchings=matchings,
        matching_route_ok=matching_route,
        route="MATCHING+UNIMODAL" if matching_route else "DILWORTH",
    )


# ---------------------------------------------------------------------------
# up-set oracles


def _flat_poset(ideal: MonomialIdeal):
    basis = _basis(ideal)
    elems = [m for level in basis.levels for m in level]
    if len(elems) > ORACLE_LIMIT:
        raise SizeError(
            f"quotient has {len(elems)} standard monomials; oracle limit "
            f"is {ORACLE_LIMIT}"
        )
    n = len(elems)
    comp = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and divides(elems[i], elems[j]):
                comp[i] |= 1 << j
                comp[j] |= 1 << i
    return elems, comp


def _antichains(elems: list[Exponents], comp: list[int]):
    """Yield every antichain (as a tuple of exponent tuples)."""
    n = len(elems)
    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, (1 << n) - 1, ())]
    while stack:
        start, allowed, chosen = stack.pop()
        yield tuple(elems[i] for i in chosen)
        for u in range(start, n):
            if allowed >> u & 1:
                stack.append((u + 1, allowed & ~comp[u], chosen + (u,)))


def mu_max_oracle(ideal: MonomialIdeal) -> tuple[int, MonomialIdeal]:
    """Maximum number of minimal generators over all ideals of the
    quotient algebra, by exhaustive up-set enumeration.  Each up-set U
    gives the ideal generated by its minimal elements, whose relative
    generator count is exactly that antichain's size."""
    elems, comp = _flat_poset(ideal)
    best = 0
    best_antichain: tuple[Exponents, ...] = ()
    for antichain in _antichains(elems, comp):
        if len(antichain) > best:
            best = len(antichain)
            best_antichain = antichain
    witness = minimalize(ideal.gens + best_antichain, ideal.nvars)
    return best, witness


@dataclass
class BruteReesReport:
    ideal: str
    mu: int
    rees: bool
    strong_rees: bool
    max_mu_over_ideals: int
    rees_violator: str | None
    strong_violator: str | None

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "mu": self.mu,
            "rees": self.rees,
            "strong_rees": self.strong_rees,
            "max_mu_over_ideals": self.max_mu_over_ideals,
            "rees_violator": self.rees_violator,
            "strong_violator": self.strong_violator,
        }


def rees_brute_oracle(ideal: MonomialIdeal) -> BruteReesReport:
    """Ground truth on tiny inputs: enumerate every monomial over-ideal
    (one per up-set of the standard-monomial poset) and compare minimal
    generator counts."""
    elems, comp = _flat_poset(ideal)
    mu = ideal.mu
    max_mu = 0
    rees_violator = None
    strong_violator = None
    for antichain in _antichains(elems, comp):
        J = minimalize(ideal.gens + antichain, ideal.nvars)
        max_mu = max(max_mu, J.mu)
        if antichain:
            if J.mu > mu and rees_violator is None:
                rees_violator = format_ideal(J)
            if J.mu >= mu and strong_violator is None:
                strong_violator = format_ideal(J)
    return BruteReesReport(
        ideal=format_ideal(ideal),
        mu=mu,
        rees=rees_violator is None,
        strong_rees=strong_violator is None,
        max_mu_over_ideals=max(max_mu, mu),
        rees_violator=rees_violator,
        strong_violator=strong_violator,
    )


# ---------------------------------------------------------------------------
# m-fullness


@dataclass
class WitnessTrial:
    form: str
    succeeded: bool
    first_bad_degree: int | None
    exact_colon_match: bool | None   # only for single-variable witnesses

    def to_dict(self) -> dict:
        return {
            "form": self.form,
            "succeeded": self.succeeded,
            "first_bad_degree": self.first_bad_degree,
            "exact_colon_match": self.exact_colon_match,
        }


@dataclass
class NotMFullCertificate:
    p: int
    s: int
    uncapped: str
    no_generators_in_degree_s_plus_1: bool
    dim_at_s: int
    generic_rank_at_s: int
    m_power_branch: bool     # m^{p-1} not contained in the ideal
    kernel_witness: list[str] | None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "uncapped": self.uncapped,
            "no_generators_in_degree_s_plus_1": self.no_generators_in_degree_s_plus_1,
            "dim_at_s": self.dim_at_s,
            "generic_rank_at_s": self.generic_rank_at_s,
            "m_power_branch": self.m_power_branch,
            "kernel_witness": self.kernel_witness,
        }


@dataclass
class MFullReport:
    ideal: str
    verdict: str             # "M_FULL" | "NOT_M_FULL" | "UNDETERMINED"
    witness: str | None
    trials: list[WitnessTrial]
    certificate: NotMFullCertificate | None
    analysis: list[dict]
    characteristic: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "verdict": self.verdict,
            "witness": self.witness,
            "trials": [t.to_dict() for t in self.trials],
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "analysis": self.analysis,
            "characteristic": self.characteristic,
            "seed": self.seed,
        }


def _witness_candidates(n: int, field: FieldSpec, seed: int) -> list[LinearForm]:
    out = [LinearForm.variable(n, i) for i in range(n)]
    out.append(LinearForm.sum_of_variables(n))
    rng = random.Random(seed)
    p = field.characteristic
    for _ in range(5):
        if p:
            coeffs = [Fraction(rng.randrange(1, p)) for _ in range(n)]
        else:
            coeffs = [Fraction(rng.randint(1, 99), rng.randint(1, 9))
                      for _ in range(n)]
        out.append(LinearForm.of(coeffs))
    return out


def m_full_check(ideal: MonomialIdeal, field: FieldSpec = QQ,
                 seed: int = DEFAULT_SEED) -> MFullReport:
    """Look for a witness y with mI : y = I (variables, the sum of
    variables, seeded random forms); failing that, try the certified
    not-m-full branch for the top-capped shape.  Anything else is
    UNDETERMINED."""
    basis = _basis(ideal)
    D = basis.top_degree
    mI = multiply_by_m(ideal)
    dims_I = [dim_ideal_at(ideal, k) for k in range(D)]
    trials: list[WitnessTrial] = []
    witness: LinearForm | None = None
    for y in _witness_candidates(ideal.nvars, field, seed):
        bad = None
        for k in range(D):
            d = colon_dim_by_linear_form(mI, y, k, field)
            if d < dims_I[k]:
                raise AssertionError("colon dimension below the ideal's "
                                     "(internal error)")
            if d != dims_I[k]:
                bad = k
                break
        exact_match = None
        mono = y.as_monomial()
        if mono is not None:
            exact_match = colon_by_monomial(mI, mono) == ideal
            if (bad is None) != exact_match:
                raise AssertionError("combinatorial and rank colon checks "
                                     "disagree (internal error)")
        ok = bad is None
        trials.append(WitnessTrial(str(y), ok, bad, exact_match))
        if ok and witness is None:
            witness = y
            break
    if witness is not None:
        return MFullReport(
            ideal=format_ideal(ideal), verdict="M_FULL", witness=str(witness),
            trials=trials, certificate=None, analysis=[],
            characteristic=field.characteristic, seed=seed,
        )

    # certified negative branch: ideal = I' + m^p with p minimal
    p = D
    below = minimalize([g for g in ideal.gens if mdeg(g) < p], ideal.nvars)
    analysis: list[dict] = []
    for s in range(p - 1, -1, -1):
        gens_at_s1 = [g for g in below.gens if mdeg(g) == s + 1]
        if gens_at_s1:
            analysis.append({"s": s, "skipped": "generators in degree s+1"})
            continue
        dim_s = len(standard_monomials(below, s))
        if dim_s == 0:
            analysis.append({"s": s, "skipped": "quotient vanishes in degree s"})
            continue
        if not standard_monomials(below, s + 1):
            analysis.append({"s": s, "skipped": "quotient vanishes in degree s+1"})
            continue
        r = generic_mult_rank(below, s + 1, field, seed=seed)
        analysis.append({"s": s, "dim": dim_s, "generic_rank": r})
        if r < dim_s:
            kern = None
            M = mult_map_matrix(
                below, LinearForm.sum_of_variables(ideal.nvars), s + 1, QQ
            ) if field.is_rational else None
            if M is not None and M.ncols <= KERNEL_EMBED_LIMIT:
                kb = kernel_basis(M)
                if kb:
                    kern = [str(v) for v in kb[0]]
            cert = NotMFullCertificate(
                p=p,
                s=s,
                uncapped=format_ideal(below),
                no_generators_in_degree_s_plus_1=True,
                dim_at_s=dim_s,
                generic_rank_at_s=r,
                m_power_branch=True,  # p is minimal, so m^{p-1} is not inside
                kernel_witness=kern,
            )
            return MFullReport(
                ideal=format_ideal(ideal), verdict="NOT_M_FULL", witness=None,
                trials=trials, certificate=cert, analysis=analysis,
                characteristic=field.characteristic, seed=seed,
            )
    return MFullReport(
        ideal=format_ideal(ideal), verdict="UNDETERMINED", witness=None,
        trials=trials, certificate=None, analysis=analysis,
        characteristic=field.characteristic, seed=seed,
    )


# ---------------------------------------------------------------------------
# Rees certificates


@dataclass
class FactorDiagnostics:
    variables: list[int]
    level_sizes: list[int]
    nmp: list[bool]
    log_concave: bool
    top_step_sizes: tuple[int, int] | None

    def to_dict(self) -> dict:
        return {
            "variables": self.variables,
            "level_sizes": self.level_sizes,
            "nmp": self.nmp,
            "log_concave": self.log_concave,
            "top_step_sizes": list(self.top_step_sizes) if self.top_step_sizes else None,
        }


@dataclass
class ReesCertificate:
    ideal: str               # the quotient-defining ideal I
    p: int
    capped: str              # I + m^p
    mu_capped: int
    verdict: str | None      # "REES" | "STRONG_REES" | None
    certified: bool
    hypothesis: dict
    sperner: SpernerCertificate | None
    nmp_levels: list[bool] | None
    level_sizes: list[int] | None
    factors: list[FactorDiagnostics] | None
    notes: list[str]

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "p": self.p,
            "capped": self.capped,
            "mu_capped": self.mu_capped,
            "verdict": self.verdict,
            "certified": self.certified,
            "hypothesis": self.hypothesis,
            "sperner": self.sperner.to_dict() if self.sperner else None,
            "nmp_levels": self.nmp_levels,
            "level_sizes": self.level_sizes,
            "factors": [f.to_dict() for f in self.factors] if self.factors else None,
            "notes": self.notes,
        }


def rees_certificate(ideal: MonomialIdeal, p: int) -> ReesCertificate:
    """Sperner quotient + maximal Hilbert value at p certify the Rees
    property of I + m^p."""
    H = hilbert(ideal)
    dim_p = H[p] if 0 <= p < len(H) else 0
    if dim_p != max(H):
        raise HypothesisError(
            f"dim A_{p} = {dim_p} is not the Hilbert maximum {max(H)}"
        )
    sp = sperner_check(ideal)
    capped = cap_with_m_power(ideal, p)
    return ReesCertificate(
        ideal=format_ideal(ideal),
        p=p,
        capped=format_ideal(capped),
        mu_capped=capped.mu,
        verdict="REES" if sp.sperner else None,
        certified=sp.sperner,
        hypothesis={"dim_at_p": dim_p, "max_hilbert": max(H)},
        sperner=sp,
        nmp_levels=None,
        level_sizes=None,
        factors=None,
        notes=[] if sp.sperner else ["Sperner check failed; no certificate"],
    )


def _support_components(ideal: MonomialIdeal) -> list[list[int]]:
    """Variable groups under "appears in a common generator"."""
    n = ideal.nvars
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in ideal.gens:
        sup = [i for i, e in enumerate(g) if e]
        for a, b in zip(sup, sup[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _restrict(ideal: MonomialIdeal, variables: list[int]) -> MonomialIdeal:
    gens = []
    vs = set(variables)
    for g in ideal.gens:
        sup = {i for i, e in enumerate(g) if e}
        if sup and sup <= vs:
            gens.append(tuple(g[i] for i in variables))
    return minimalize(gens, len(variables))


def strong_rees_certificate(ideal: MonomialIdeal, p: int) -> ReesCertificate:
    """LYM of the truncated quotient poset plus strict Hilbert dominance
    at p certify the strong Rees property of I + m^p.  For ideals whose
    generators split over disjoint variable groups the factor route
    (each factor normalized-matching and log-concave, then the product
    lemma) is recorded alongside the direct flow check."""
    if p < 1:
        raise HypothesisError("need p > 0")
    H = hilbert(ideal)
    dim_p = H[p] if p < len(H) else 0
    if not all(dim_p > H[k] for k in range(min(p, len(H)))):
        raise HypothesisError(
            f"dim A_{p} = {dim_p} does not strictly dominate lower degrees"
        )
    replaced = cap_with_m_power(ideal, p + 1)
    poset = poset_from_algebra(replaced)
    notes = [f"checked the quotient by the ideal capped at degree {p + 1}"]
    direct_pass = None
    nmp_levels = None
    if poset.size <= DIRECT_NMP_LIMIT:
        nmp_levels = nmp_check(poset)
        direct_pass = all(nmp_levels)
    else:
        notes.append("direct flow check skipped (poset too large)")

    factors = None
    product_pass = None
    groups = _support_components(ideal)
    if len(groups) > 1:
        factors = []
        product_pass = True
        for grp in groups:
            sub = _restrict(ideal, grp)
            if not is_artinian(sub):
                product_pass = None
                notes.append("factor route skipped (non-Artinian factor)")
                factors = None
                break
            fposet = poset_from_algebra(sub)
            fnmp = nmp_check(fposet)
            flog = log_concave(fposet)
            sizes = list(fposet.level_sizes())
            top = (sizes[-2], sizes[-1]) if len(sizes) >= 2 else None
            factors.append(FactorDiagnostics(
                variables=[v + 1 for v in grp],
                level_sizes=sizes,
                nmp=fnmp,
                log_concave=flog,
                top_step_sizes=top,
            ))
            product_pass = product_pass and all(fnmp) and flog

    if product_pass and direct_pass is False:
        raise AssertionError("factor route contradicts the direct flow "
                             "check (internal error)")
    lym = bool(direct_pass) or bool(product_pass)
    capped = cap_with_m_power(ideal, p)
    return ReesCertificate(
        ideal=format_ideal(ideal),
        p=p,
        capped=format_ideal(capped),
        mu_capped=capped.mu,
        verdict="STRONG_REES" if lym else None,
        certified=lym,
        hypothesis={"dim_at_p": dim_p,
                    "strictly_dominant": True},
        sperner=None,
        nmp_levels=nmp_levels,
        level_sizes=list(poset.level_sizes()),
        factors=factors,
        notes=notes if lym else notes + ["LYM not established; no certificate"],
    )


# ---------------------------------------------------------------------------
# composite theorem verifiers


@dataclass
class VerdictRecord:
    name: str
    status: str              # "PASS" | "FAIL" | "NOT_APPLICABLE"
    reasons: list[str]
    details: dict

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "reasons": self.reasons,
            "details": self.details,
        }


def thm2_verify(a: int, b: int, c: int, alpha: int, beta: int, gamma: int,
                field: FieldSpec = QQ, seed: int = DEFAULT_SEED) -> VerdictRecord:
    """Compose the pipeline on one almost complete intersection: WLP must
    fail, the cap at s+1 must be Rees, and the capped ideal not m-full."""
    ideal = aci_ideal(a, b, c, alpha, beta, gamma)
    name = f"thm2({a},{b},{c},{alpha},{beta},{gamma})"
    wlp = wlp_check(ideal, field, seed=seed)
    s = aci_s_value(a, b, c, alpha, beta, gamma)
    reasons = []
    if wlp.has_wlp:
        reasons.append("WLP holds; theorem hypothesis not met")
    if s.denominator != 1:
        reasons.append(f"s = {s} is not an integer")
    details: dict = {"wlp": wlp.to_dict(), "s": str(s)}
    if reasons:
        return VerdictRecord(name, "NOT_APPLICABLE", reasons, details)
    si = int(s)
    if any(mdeg(g) == si + 1 for g in ideal.gens):
        reasons.append(f"generators in degree s+1 = {si + 1}")
        return VerdictRecord(name, "NOT_APPLICABLE", reasons, details)
    rc = rees_certificate(ideal, si + 1)
    capped = cap_with_m_power(ideal, si + 1)
    mf = m_full_check(capped, field, seed=seed)
    lower = cap_with_m_power(ideal, si)
    details.update({
        "rees": rc.to_dict(),
        "m_full": mf.to_dict(),
        "mu_cap_at_s": lower.mu,
        "mu_cap_at_s_plus_1": capped.mu,
    })
    ok = rc.verdict == "REES" and mf.verdict == "NOT_M_FULL"
    if rc.verdict != "REES":
        reasons.append("Rees certificate not obtained")
    if mf.verdict != "NOT_M_FULL":
        reasons.append(f"m-fullness check returned {mf.verdict}")
    return VerdictRecord(name, "PASS" if ok else "FAIL", reasons, details)


def thm31_verify(N: int, n: int, field: FieldSpec = QQ,
                 seed: int = DEFAULT_SEED) -> VerdictRecord:
    """The strong-Rees/not-m-full family: strictly increasing Hilbert
    function through d+1, generic non-injectivity at d, strong Rees for
    the cap at d+1, and not m-full."""
    ideal = thm31_ideal(N, n)
    d = thm31_d(N, n)
    if d > 12 or n > 6:
        raise InputError("instance beyond desk scale (need n <= 6 and "
                         "(n/2)(N-2) <= 12)")
    name = f"thm31({N},{n})"
    H = hilbert(ideal)
    increasing = len(H) > d + 1 and all(H[k] < H[k + 1] for k in range(d + 1))
    r = generic_mult_rank(ideal, d + 1, field, seed=seed)
    non_injective = r < H[d]
    src_cert = strong_rees_certificate(ideal, d + 1)
    capped = cap_with_m_power(ideal, d + 1)
    mf = m_full_check(capped, field, seed=seed)
    reasons = []
    if not increasing:
        reasons.append("Hilbert function is not strictly increasing through d")
    if not non_injective:
        reasons.append("no generic rank deficiency at degree d")
    if src_cert.verdict != "STRONG_REES":
        reasons.append("strong Rees certificate not obtained")
    if mf.verdict != "NOT_M_FULL":
        reasons.append(f"m-fullness check returned {mf.verdict}")
    details = {
        "d": d,
        "hilbert": list(H),
        "generic_rank_at_d": r,
        "dim_at_d": H[d],
        "strong_rees": src_cert.to_dict(),
        "m_full": mf.to_dict(),
    }
    status = "PASS" if not reasons else "FAIL"
    return VerdictRecord(name, status, reasons, details)


# ---------------------------------------------------------------------------
# the claim sweep


@dataclass
class SweepFailure:
    params: tuple[int, int, int, int, int, int]
    s: int
    failure_degrees: list[int]
    claim_profile_ok: bool
    s_integral: bool
    dims_equal_max: bool
    full_matching: bool

    def to_dict(self) -> dict:
        return {
            "params": list(self.params),
            "s": self.s,
            "failure_degrees": self.failure_degrees,
            "claim_profile_ok": self.claim_profile_ok,
            "s_integral": self.s_integral,
            "dims_equal_max": self.dims_equal_max,
            "full_matching": self.full_matching,
        }


@dataclass
class SweepReport:
    box: str
    checked: int
    wlp_failures: list[SweepFailure]
    all_claims_hold: bool

    def to_dict(self) -> dict:
        return {
            "box": self.box,
            "checked": self.checked,
            "wlp_failures": [f.to_dict() for f in self.wlp_failures],
            "all_claims_hold": self.all_claims_hold,
        }


def aci_box(max_pure: int = 9, max_mixed: int = 3):
    """All valid (a,b,c,alpha,beta,gamma) with pure exponents <= max_pure
    and mixed exponents <= max_mixed."""
    for a in range(1, max_pure + 1):
        for b in range(1, max_pure + 1):
            for c in range(1, max_pure + 1):
                for al in range(0, min(a, max_mixed + 1)):
                    for be in range(0, min(b, max_mixed + 1)):
                        for ga in range(0, min(c, max_mixed + 1)):
                            if (al > 0) + (be > 0) + (ga > 0) >= 2:
                                yield (a, b, c, al, be, ga)


def claim_sweep(max_pure: int = 9, max_mixed: int = 3,
                seed: int = DEFAULT_SEED, progress=None) -> SweepReport:
    """Check the injective-below / surjective-above profile and the
    companion diagnostics for every WLP-failing almost complete
    intersection in the box (characteristic 0)."""
    failures: list[SweepFailure] = []
    checked = 0
    ok = True
    for params in aci_box(max_pure, max_mixed):
        ideal = aci_ideal(*params)
        wlp = wlp_check(ideal, QQ, seed=seed)
        checked += 1
        if progress is not None and checked % 1000 == 0:
            progress(checked)
        if wlp.has_wlp:
            continue
        s = aci_s_value(*params)
        integral = s.denominator == 1
        diag = wlp.s_diagnostics
        profile = claim_profile(ideal, wlp_report=wlp, seed=seed)
        rec = SweepFailure(
            params=params,
            s=int(s) if integral else -1,
            failure_degrees=wlp.failure_degrees,
            claim_profile_ok=profile,
            s_integral=integral,
            dims_equal_max=bool(diag and diag.dims_equal_max),
            full_matching=bool(diag and diag.full_matching_at_s_plus_1),
        )
        failures.append(rec)
        ok = ok and profile and integral and rec.dims_equal_max and rec.full_matching
    return SweepReport(
        box=f"a,b,c <= {max_pure}; alpha,beta,gamma <= {max_mixed}",
        checked=checked,
        wlp_failures=failures,
        all_claims_hold=ok,
    )

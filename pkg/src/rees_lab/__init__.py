"""Verification lab for monomial algebras: Hilbert functions, Lefschetz
multiplication ranks, poset matchings and flows, and machine-checkable
Sperner / Rees / m-fullness certificates."""

__version__ = "0.1.0"

from .monomials import (
    InputError,
    MonomialIdeal,
    QuotientBasis,
    aci_ideal,
    aci_s_value,
    cap_with_m_power,
    colon_by_monomial,
    cone_extension,
    hilbert_function,
    ideal_sum,
    is_artinian,
    m_power,
    membership,
    minimalize,
    multiply_by_m,
    quotient_basis,
    socle_cap_degree,
    standard_monomials,
    thm31_d,
    thm31_ideal,
)
from .specparse import SpecParseError, format_ideal, parse_ideal
from .linalg import (
    DEFAULT_SEED,
    ExactMatrix,
    FieldSpec,
    LinearForm,
    QQ,
    colon_dim_by_linear_form,
    kernel_basis,
    mult_map_matrix,
    parametric_rank,
    rank,
)
from .posets import (
    RankedPoset,
    SizeError,
    divisor_lattice,
    dump,
    full_matching_at,
    log_concave,
    lym_brute,
    max_antichain,
    nabla,
    nmp_check,
    parse_dump,
    poset_from_algebra,
    product,
)
from .certify import (
    HypothesisError,
    MFullReport,
    ReesCertificate,
    SpernerCertificate,
    WlpReport,
    claim_profile,
    claim_sweep,
    m_full_check,
    mu_max_oracle,
    rees_brute_oracle,
    rees_certificate,
    sperner_check,
    strong_rees_certificate,
    thm2_verify,
    thm31_verify,
    wlp_check,
)

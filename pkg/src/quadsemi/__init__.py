"""Quadratic semigroup algebras given by zero and equality relations on pairs.

The package builds and validates quadratic homogeneous presentations over a
finite alphabet, walks coset classes of words modulo the relations, counts
minimal monomials degree by degree, searches for the first degree free of
singular monomials, and checks the standard certificates that rule such
presentations out.
"""

from .model import (
    Alphabet,
    IdealMode,
    Presentation,
    QhsReport,
    Relation,
    Violation,
    ViolationKind,
    delta,
    is_pure,
    lower_pairs,
    monomial_str,
    pair_str,
    presentation,
    presentation_hash,
    qhs_cardinality_bounds,
    rtl_key,
    rtl_lex_cmp,
    strip_top,
    validate_qhs,
)
from .engine import (
    DEFAULT_LIMITS,
    ENGINE_VERSION,
    Classification,
    CosetClass,
    EngineLimits,
    MinimalBasis,
    RegularityResult,
    ResourceExhausted,
    classify,
    coset_class,
    initial_basis,
    iter_class,
    iter_singular_sets,
    minimal_monomial,
    next_minimal_basis,
    regularity_degree,
    singular_monomials,
)
from .analysis import (
    Dim3Report,
    HilbertProfile,
    dim3_report,
    hilbert_profile,
    total_dimension,
)
from .certificates import (
    Certificate,
    CertificateKind,
    certificate_is_valid,
    check_zero_sum,
    find_se_pair,
    search_certificate,
    verify_witness,
)
from .constructions import (
    TowerSpec,
    base_qhs,
    build_regular_qhs,
    extend,
    power_witness,
    tower_spec,
    wisliceny_count,
    witness_power,
)
from .textio import (
    PresentationSyntaxError,
    load_presentation,
    parse_presentation,
    render_json,
    render_presentation,
    save_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "Certificate",
    "CertificateKind",
    "Classification",
    "CosetClass",
    "DEFAULT_LIMITS",
    "Dim3Report",
    "ENGINE_VERSION",
    "EngineLimits",
    "HilbertProfile",
    "IdealMode",
    "MinimalBasis",
    "Presentation",
    "PresentationSyntaxError",
    "QhsReport",
    "RegularityResult",
    "Relation",
    "ResourceExhausted",
    "TowerSpec",
    "Violation",
    "ViolationKind",
    "base_qhs",
    "build_regular_qhs",
    "certificate_is_valid",
    "check_zero_sum",
    "classify",
    "coset_class",
    "delta",
    "dim3_report",
    "extend",
    "find_se_pair",
    "hilbert_profile",
    "initial_basis",
    "is_pure",
    "iter_class",
    "iter_singular_sets",
    "load_presentation",
    "lower_pairs",
    "minimal_monomial",
    "monomial_str",
    "next_minimal_basis",
    "pair_str",
    "parse_presentation",
    "power_witness",
    "presentation",
    "presentation_hash",
    "qhs_cardinality_bounds",
    "regularity_degree",
    "render_json",
    "render_presentation",
    "rtl_key",
    "rtl_lex_cmp",
    "save_presentation",
    "search_certificate",
    "singular_monomials",
    "strip_top",
    "total_dimension",
    "tower_spec",
    "validate_qhs",
    "verify_witness",
    "wisliceny_count",
    "witness_power",
]

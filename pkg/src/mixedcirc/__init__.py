"""Integral mixed circulant graphs: exact spectra and state transfer detection."""

from .circulant import (
    BadDivisor,
    BadModulus,
    ConnectionSet,
    DivisorPartition,
    GraphSpec,
    HermitianMatrix,
    Overlap,
    SigmaDomainMismatch,
    SpecError,
    UnknownFormat,
    build_connection_set,
    export_graph,
    gcd_class,
    gcd_class_mod4,
    hermitian_adjacency,
    parse_spec,
    partition_divisors,
    spec_to_json,
    validate_spec,
)
from .harness import (
    BudgetExceeded,
    SweepReport,
    count_specs,
    crosscheck,
    enumerate_specs,
    search_specs,
)
from .numthy import (
    NonIntegerResidual,
    divisors,
    euler_phi,
    factorize,
    moebius,
    ramanujan_sine_sum,
    ramanujan_sine_sum_oracle,
    ramanujan_sum,
    ramanujan_sum_oracle,
    ramanujan_sum_two_adic,
    two_adic_valuation,
)
from .spectrum import (
    AuxTerms,
    HypothesesNotMet,
    Spectrum,
    WrongResidueClass,
    aux_terms,
    delta,
    eigenvalues_by_class,
    eigenvalues_closed_form,
    eigenvalues_oracle,
    lambda1,
    lambda2,
    lambda3,
    reduced_eigenvalues,
    spectrum_of,
    undirected_degree,
)
from .transfer import (
    ConsistencyError,
    DifferenceProfile,
    NotFeasible,
    SamePair,
    TransferVerdict,
    antipodal_pst_by_valuation,
    antipodal_verdict,
    classify_mst,
    classify_pst,
    difference_profile,
    minimal_pst_time,
    mst_by_valuation,
    mst_verdict,
    oriented_pst_criterion,
    pair_restriction_check,
    pair_verdict,
    pst_feasible_pair,
    transition_amplitude,
    undirected_pst_criterion,
    verify_numeric,
)

__version__ = "0.1.0"

"""Exact class groups and factoriality for acyclic cluster algebra seeds.

The package works entirely over exact integer arithmetic.  A seed is an
(n+m) x n integer matrix whose top square block is sign-skew-symmetric
and skew-symmetrizable; all public indices are 1-based.
"""

from clusterclass.classgroup import (
    ClassGroupReport,
    FactorialityReport,
    FreezeReport,
    has_principal_coefficients,
    is_factorial,
    principal_extension,
    rank_by_formula,
    rank_by_snf,
    smith_normal_form,
    source_freezing_reduction,
)
from clusterclass.errors import ClusterError
from clusterclass.factors import (
    ExchangePoly,
    KFactor,
    ZFactorLabel,
    column_gcd,
    common_factors,
    exchange_polynomial,
    k_factors,
    z_factors,
)
from clusterclass.partners import (
    PartnerBlock,
    PartnerPartition,
    PrimeLedger,
    SymbolicPrime,
    g_partners,
    partner_partition,
    partner_predicate,
    prime_ledger,
)
from clusterclass.rings import BaseRing, nu
from clusterclass.seeds import (
    CanonicalSeed,
    IceQuiver,
    MutationClass,
    SeedMatrix,
    build_quiver,
    canonical_form,
    is_acyclic,
    isolated_indices,
    mutate,
    mutation_class,
    normalize_isolated,
    seed_from_dict,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BaseRing",
    "CanonicalSeed",
    "ClassGroupReport",
    "ClusterError",
    "ExchangePoly",
    "FactorialityReport",
    "FreezeReport",
    "IceQuiver",
    "KFactor",
    "MutationClass",
    "PartnerBlock",
    "PartnerPartition",
    "PrimeLedger",
    "SeedMatrix",
    "SymbolicPrime",
    "ZFactorLabel",
    "build_quiver",
    "canonical_form",
    "column_gcd",
    "common_factors",
    "exchange_polynomial",
    "g_partners",
    "has_principal_coefficients",
    "is_acyclic",
    "is_factorial",
    "isolated_indices",
    "k_factors",
    "mutate",
    "mutation_class",
    "normalize_isolated",
    "nu",
    "partner_partition",
    "partner_predicate",
    "prime_ledger",
    "principal_extension",
    "rank_by_formula",
    "rank_by_snf",
    "seed_from_dict",
    "smith_normal_form",
    "source_freezing_reduction",
    "validate",
    "z_factors",
]

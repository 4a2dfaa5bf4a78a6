"""Exact arithmetic for sheaf invariants and moduli loci on ribbon curves."""

from .core import (
    CompleteType,
    DomainError,
    IntegralityError,
    Invariants,
    LocalType,
    RibbonParams,
    classical_invariants,
    dual_invariants,
    euler_characteristic,
    gvb_complete_type,
    hilbert_polynomial,
    invariants_of,
    local_type_to_rank_pair,
    rank_pair_to_local_type,
    ribbon_genus,
    slope,
    vb_parity_ok,
    vector_bundle_invariants,
)
from .moduli import (
    ComponentDescriptor,
    ComponentKind,
    PartitionSpec,
    blowup,
    dim_gvb_locus,
    dim_l_locus,
    dim_l_stratum,
    dim_qlf_locus,
    dim_rigid_locus,
    dim_vb_locus,
    enumerate_components,
    may_specialize,
    partitions,
)
from .stability import (
    CrossCheck,
    DeformationOutcome,
    ExistenceVerdict,
    LemmaSlopeData,
    LemmaWeightData,
    Rank3Verdict,
    SlopeConclusion,
    SlopeVariant,
    deformation_target_type,
    gvb_ss_exists,
    l_locus_cross_check,
    l_locus_nonempty,
    lemma_slope_conclusion,
    lemma_slope_hypotheses,
    lemma_weight_check,
    rank3_rational_classify,
    rigid_locus_nonempty,
    sample_slope_data,
    sample_weight_data,
    slope_strict_trigger,
    ss_qlf_exists,
    stable_index_bound,
    vb_deforms_to_ribbon,
    verify_slope_lemma,
    verify_weight_lemma,
    weight_strict_trigger,
)

__version__ = "0.1.0"

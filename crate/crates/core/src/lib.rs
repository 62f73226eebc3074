//! Invariance hierarchy of subgroups of finite abelian groups and submodules
//! of finite ring modules: fully, strongly, strictly, injective-invariant,
//! and characteristic, decided by exhaustive homomorphism enumeration and
//! cross-checked against structural classification.

pub mod corpus;
pub mod error;
pub mod enumerate;
pub mod finring;
pub mod group;
pub mod hom;
pub mod invariance;
pub mod matrix;
pub mod quotient;
pub mod subgroup;
pub mod sums;

pub use corpus::{abelian_groups_of_order, abelian_groups_up_to, p_groups_up_to};
pub use error::{Error, Result};
pub use finring::{
    build_non_transitive_example, build_strict_not_strong_example, element_at, element_index,
    enumerate_module_homs, enumerate_submodules, is_characteristic_module,
    is_fully_invariant_module, is_injective_invariant_module, is_strictly_invariant_module,
    is_strongly_invariant_module, make_module, make_ring, modular_ring, module_invariance_flags,
    modules_isomorphic, product_module, quotient_module, row_module, submodule,
    submodule_as_module, triangular_ring, FiniteModule, FiniteRing, ModuleHom, ModuleJson,
    NonTransitiveExample, RingJson, StrictNotStrongExample, Submodule,
};
pub use group::{
    factorize, make_group, make_group_with_regrouping, parse_group_literal, FiniteAbelianGroup,
    GroupElement, Height, PrimePowerSlot,
};
pub use enumerate::{
    enumerate_subgroups, find_complement_in, is_direct_summand, EnumerationBudget,
};
pub use hom::{
    count_homs, enumerate_autos, enumerate_endos, enumerate_homs, enumerate_monic_endos,
    enumerate_monos, find_hom_matching, identity_endo, inclusion, primary_decomposition,
    realizable_mono_images, zero_hom, Homomorphism, PrimaryComponent,
};
pub use invariance::{
    all_subgroups_strictly_invariant, chart_violations, check_decomposition,
    check_double_embedding, check_mono_socle_extension, check_operator_laws, check_quotient_lift,
    check_strict_equals_strong, check_strict_hom_constraints, check_summand_criterion,
    classify_strict, expected_strict_members, hom_socle, hom_socle_of_group, invariance_flags,
    invariance_report, is_characteristic, is_fully_invariant, is_injective_invariant,
    is_strictly_invariant, is_strictly_invariant_brute, is_strongly_invariant,
    is_strongly_invariant_brute, mono_socle, strict_lattice, verify_implication_chart,
    CheckReport, CyclicityCheck, FlagWitness, InvarianceFlags, InvarianceReport, PrimeVerdict,
    StrictClassification, StrictLattice, StrictVerdict, Witnesses,
};
pub use matrix::{IntMatrix, SmithDecomposition};
pub use quotient::{quotient, QuotientPresentation};
pub use sums::{direct_sum, DirectSum};
pub use subgroup::{
    full_subgroup, intersect, multiple_subgroup, n_socle, p_component, span, sum, zero_subgroup,
    Subgroup,
};

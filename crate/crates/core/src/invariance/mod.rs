//! Invariance of subgroups under classes of maps: the five predicates
//! (fully / strongly / strictly / injective-invariant / characteristic),
//! the mono- and hom-socle operators, the lattice of strictly invariant
//! subgroups, the structural classifier, and the theorem-level checks.

pub mod checks;
pub mod classify;
pub mod engine;
pub mod lattice;
pub mod report;

pub use checks::{
    check_decomposition, check_double_embedding, check_mono_socle_extension,
    check_operator_laws, check_quotient_lift, check_strict_equals_strong,
    check_strict_hom_constraints, check_summand_criterion, verify_implication_chart,
    CheckReport,
};
pub use classify::{
    all_subgroups_strictly_invariant, classify_strict, expected_strict_members, CyclicityCheck,
    PrimeVerdict, StrictClassification, StrictVerdict,
};
pub use engine::{
    chart_violations, hom_socle, hom_socle_literal, hom_socle_of_group, invariance_flags,
    invariance_scan, is_characteristic, is_fully_invariant, is_injective_invariant,
    is_strictly_invariant, is_strictly_invariant_brute, is_strongly_invariant,
    is_strongly_invariant_brute, mono_socle, mono_socle_literal, FlagWitness, InvarianceFlags,
    Witnesses,
};
pub use lattice::{strict_lattice, StrictLattice};
pub use report::{invariance_report, InvarianceReport};

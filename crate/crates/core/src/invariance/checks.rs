//! Theorem-level consistency checks, each an exhaustive verification over a
//! group (or a pair of groups) with a pass/fail report. These back the
//! acceptance suite and the CLI's named checks.

use serde::Serialize;

use crate::enumerate::{enumerate_subgroups, find_complement_in, EnumerationBudget};
use crate::error::Result;
use crate::group::{make_group, FiniteAbelianGroup};
use crate::hom::{count_homs, enumerate_homs, Homomorphism};
use crate::quotient::quotient;
use crate::subgroup::{intersect, span, sum, Subgroup};
use crate::sums::DirectSum;

use super::classify::classify_strict;
use super::engine::{
    chart_violations, hom_socle, invariance_flags, is_fully_invariant,
    is_strictly_invariant_brute, is_strongly_invariant_brute, mono_socle,
};

/// Outcome of one named check: `passed` plus human-readable lines — first
/// the violations (if any), then summary counts that make vacuous passes
/// visible.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckReport {
    fn new() -> Self {
        CheckReport { passed: true, details: Vec::new() }
    }

    fn violation(&mut self, line: String) {
        self.passed = false;
        self.details.push(line);
    }

    fn note(&mut self, line: String) {
        self.details.push(line);
    }
}

fn describe(h: &Subgroup) -> String {
    let gens: Vec<String> = h
        .canonical_generators()
        .iter()
        .map(|e| {
            let cs: Vec<String> = e.coeffs().iter().map(u64::to_string).collect();
            format!("({})", cs.join(","))
        })
        .collect();
    if gens.is_empty() {
        "<0>".to_string()
    } else {
        format!("<{}>", gens.join(", "))
    }
}

/// Chart implications on every subgroup, with all five flags computed by the
/// exhaustive streams.
pub fn verify_implication_chart(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let subgroups = enumerate_subgroups(g, budget)?;
    for h in &subgroups {
        let (flags, _) = invariance_flags(g, h, true);
        for name in chart_violations(&flags) {
            report.violation(format!("chart implication '{name}' fails at {} in {g}", describe(h)));
        }
    }
    report.note(format!("{}: chart verified on {} subgroups", g, subgroups.len()));
    Ok(report)
}

/// Strict = strong, subgroup by subgroup, both by exhaustive search.
pub fn check_strict_equals_strong(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let subgroups = enumerate_subgroups(g, budget)?;
    for h in &subgroups {
        let strict = is_strictly_invariant_brute(g, h).holds;
        let strong = is_strongly_invariant_brute(g, h).holds;
        if strict != strong {
            report.violation(format!(
                "{} in {g}: strictly invariant = {strict} but strongly invariant = {strong}",
                describe(h)
            ));
        }
    }
    report.note(format!("{}: strict/strong agree on {} subgroups", g, subgroups.len()));
    Ok(report)
}

/// The three homomorphism constraints satisfied by a strictly invariant
/// subgroup H:
/// 1. every nonzero f: H -> G that kills f(H) ∩ H has f(H) <= H;
/// 2. f(H) ∩ H != 0 for every nonzero f: H -> G;
/// 3. Hom(H, L) = 0 for every L <= G with L ∩ H = 0.
/// `subgroups` must be the full subgroup list of G (for clause 3).
pub fn check_strict_hom_constraints(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
    subgroups: &[Subgroup],
) -> CheckReport {
    assert!(
        classify_strict(g, h).strictly_invariant,
        "precondition: subgroup must be strictly invariant"
    );
    let mut report = CheckReport::new();
    let mut kills_count = 0u64;
    let mut nonzero_count = 0u64;
    for f in enumerate_homs(h, g) {
        if f.is_zero() {
            continue;
        }
        nonzero_count += 1;
        let image = f.image();
        let overlap = intersect(&image, h);
        // Clause 2.
        if overlap.is_zero() {
            report.violation(format!(
                "nonzero map on {} with f(H) ∩ H = 0 (images {:?})",
                describe(h),
                f.images()
            ));
        }
        // Clause 1: hypothesis f(f(H) ∩ H) = 0.
        let kills_overlap = overlap.basis().iter().all(|x| f.apply(x) == g.zero());
        if kills_overlap {
            kills_count += 1;
            if !f.images().iter().all(|y| h.contains(y)) {
                report.violation(format!(
                    "map on {} kills f(H) ∩ H yet f(H) is not inside H (images {:?})",
                    describe(h),
                    f.images()
                ));
            }
        }
    }
    // Clause 3.
    let mut disjoint_count = 0u64;
    for l in subgroups {
        if !intersect(l, h).is_zero() {
            continue;
        }
        disjoint_count += 1;
        let l_abstract = make_group(&l.shape()).expect("subgroup shape is a valid factor chain");
        let homs = count_homs(&h.shape(), &l_abstract);
        if homs != 1 {
            report.violation(format!(
                "Hom({}, {}) has {} maps although the targets intersect H trivially",
                describe(h),
                describe(l),
                homs
            ));
        }
    }
    report.note(format!(
        "{} in {g}: {} nonzero maps ({} kill the overlap, hypothesis non-vacuous), {} disjoint targets",
        describe(h),
        nonzero_count,
        kills_count,
        disjoint_count
    ));
    report
}

/// For maps f: K -> G whose image escapes the mono socle of K, every map
/// α: K -> mono_socle(K) must agree with f somewhere away from zero. (The
/// nonzero requirement on the agreement point is deliberate: at zero every
/// pair of maps agrees, which would make the statement empty.) For finite
/// abelian groups the hypothesis is expected to be vacuous — images can
/// never escape the socle — and the report records how often it applied.
pub fn check_mono_socle_extension(g: &FiniteAbelianGroup, k: &Subgroup) -> CheckReport {
    let mut report = CheckReport::new();
    let socle = mono_socle(g, k);
    let escaping: Vec<Homomorphism> = enumerate_homs(k, g)
        .filter(|f| f.images().iter().any(|y| !socle.contains(y)))
        .collect();
    if escaping.is_empty() {
        report.note(format!(
            "{} in {g}: no map escapes the mono socle; agreement condition vacuous",
            describe(k)
        ));
        return report;
    }
    let socle_maps: Vec<Homomorphism> = enumerate_homs(k, g)
        .filter(|a| a.images().iter().all(|y| socle.contains(y)))
        .collect();
    let points: Vec<_> = k.elements().into_iter().filter(|x| *x != g.zero()).collect();
    for f in &escaping {
        for alpha in &socle_maps {
            if !points.iter().any(|x| f.apply(x) == alpha.apply(x)) {
                report.violation(format!(
                    "escaping map {:?} never agrees with socle map {:?} on {}",
                    f.images(),
                    alpha.images(),
                    describe(k)
                ));
            }
        }
    }
    report.note(format!(
        "{} in {g}: {} escaping maps × {} socle maps checked",
        describe(k),
        escaping.len(),
        socle_maps.len()
    ));
    report
}

/// Direct summands: strictly invariant and fully invariant coincide.
pub fn check_summand_criterion(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let subgroups = enumerate_subgroups(g, budget)?;
    let mut summands = 0u64;
    for h in &subgroups {
        if find_complement_in(h, &subgroups).is_none() {
            continue;
        }
        summands += 1;
        let strict = is_strictly_invariant_brute(g, h).holds;
        let fully = is_fully_invariant(g, h).holds;
        if strict != fully {
            report.violation(format!(
                "summand {} in {g}: strictly invariant = {strict} but fully invariant = {fully}",
                describe(h)
            ));
        }
    }
    report.note(format!("{}: {} direct summands compared", g, summands));
    Ok(report)
}

/// Lifting along quotients: H strictly invariant and K/H strongly invariant
/// in G/H force K strictly invariant in G.
pub fn check_quotient_lift(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let subgroups = enumerate_subgroups(g, budget)?;
    let mut applicable = 0u64;
    for h in &subgroups {
        if !is_strictly_invariant_brute(g, h).holds {
            continue;
        }
        let q = quotient(g, h);
        for k in &subgroups {
            if !h.is_subset_of(k) {
                continue;
            }
            let k_image: Vec<_> =
                k.canonical_generators().iter().map(|x| q.projection.apply(x)).collect();
            let k_bar = span(&q.group, &k_image);
            if !is_strongly_invariant_brute(&q.group, &k_bar).holds {
                continue;
            }
            applicable += 1;
            if !is_strictly_invariant_brute(g, k).holds {
                report.violation(format!(
                    "{} strictly invariant and {}/{} strongly invariant in the quotient, \
                     yet {} is not strictly invariant in {g}",
                    describe(h),
                    describe(k),
                    describe(h),
                    describe(k)
                ));
            }
        }
    }
    report.note(format!("{}: {} lift instances verified", g, applicable));
    Ok(report)
}

/// Decomposition of a strictly invariant subgroup of a direct sum. When the
/// left factor has odd order (no 2-torsion) the subgroup must split as
/// (H ∩ A) ⊕ (H ∩ B); whenever it splits — forced or not — the parts must
/// be strictly invariant in their factors and absorb each other's hom
/// socles.
pub fn check_decomposition(ds: &DirectSum, h: &Subgroup) -> CheckReport {
    let g = &ds.group;
    assert!(
        classify_strict(g, h).strictly_invariant,
        "precondition: subgroup must be strictly invariant in the sum"
    );
    let mut report = CheckReport::new();
    let a = ds.embed_left.domain().ambient().clone();
    let b = ds.embed_right.domain().ambient().clone();
    let hl = intersect(h, &ds.part_left);
    let hr = intersect(h, &ds.part_right);
    let splits = sum(&hl, &hr) == *h;
    let left_odd = a.order() % 2 == 1;
    if left_odd && !splits {
        report.violation(format!(
            "{} in {} = {} ⊕ {}: left factor has odd order but H ≠ (H∩A) ⊕ (H∩B)",
            describe(h),
            g,
            a,
            b
        ));
    }
    if !splits {
        report.note(format!(
            "{} in {}: does not split (left factor has 2-torsion; allowed)",
            describe(h),
            g
        ));
        return report;
    }
    let k = ds.pull_left(&hl);
    let l = ds.pull_right(&hr);
    if !is_strictly_invariant_brute(&a, &k).holds {
        report.violation(format!(
            "left part {} of {} is not strictly invariant in {}",
            describe(&k),
            describe(h),
            a
        ));
    }
    if !is_strictly_invariant_brute(&b, &l).holds {
        report.violation(format!(
            "right part {} of {} is not strictly invariant in {}",
            describe(&l),
            describe(h),
            b
        ));
    }
    if !hom_socle(&a, &l).is_subset_of(&k) {
        report.violation(format!(
            "hom socle of the right part inside {} escapes the left part {}",
            a,
            describe(&k)
        ));
    }
    if !hom_socle(&b, &k).is_subset_of(&l) {
        report.violation(format!(
            "hom socle of the left part inside {} escapes the right part {}",
            b,
            describe(&l)
        ));
    }
    report.note(format!("{} in {}: splits and both parts verified", describe(h), g));
    report
}

/// Doubling: H ⊕ H inside G ⊕ G is strictly invariant exactly when H is
/// strictly invariant in G, which (for finite groups) is also equivalent to
/// H being strongly invariant in G.
pub fn check_double_embedding(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let ds = crate::sums::direct_sum(g, g);
    let subgroups = enumerate_subgroups(g, budget)?;
    for h in &subgroups {
        let doubled = sum(&ds.push_left(h), &ds.push_right(h));
        let single = is_strictly_invariant_brute(g, h).holds;
        let double = is_strictly_invariant_brute(&ds.group, &doubled).holds;
        let strong = is_strongly_invariant_brute(g, h).holds;
        if single != double || single != strong {
            report.violation(format!(
                "{} in {g}: strict = {single}, doubled strict = {double}, strong = {strong}",
                describe(h)
            ));
        }
    }
    report.note(format!("{}: {} subgroups doubled and compared", g, subgroups.len()));
    Ok(report)
}

/// The mono-socle operator: extensive, idempotent, and its image is exactly
/// the family of strictly invariant subgroups.
pub fn check_operator_laws(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let subgroups = enumerate_subgroups(g, budget)?;
    let mut image: Vec<Subgroup> = Vec::new();
    for k in &subgroups {
        let m = mono_socle(g, k);
        if !k.is_subset_of(&m) {
            report.violation(format!("{} not contained in its mono socle", describe(k)));
        }
        let mm = mono_socle(g, &m);
        if mm != m {
            report.violation(format!(
                "mono socle not idempotent at {}: M(K) = {} but M(M(K)) = {}",
                describe(k),
                describe(&m),
                describe(&mm)
            ));
        }
        image.push(m);
    }
    image.sort();
    image.dedup();
    let strict: Vec<Subgroup> = subgroups
        .iter()
        .filter(|h| is_strictly_invariant_brute(g, h).holds)
        .cloned()
        .collect();
    if image != strict {
        report.violation(format!(
            "{}: operator image has {} members but the strictly invariant family has {}",
            g,
            image.len(),
            strict.len()
        ));
    }
    report.note(format!("{}: operator laws verified on {} subgroups", g, subgroups.len()));
    Ok(report)
}

//! The two verification suites. Every check is a pure function of its
//! inputs returning pass or a witness string; outcomes are sorted by check
//! id so output bytes do not depend on scheduling or job count.

use std::time::Instant;

use invariatus_core::{
    abelian_groups_up_to, all_subgroups_strictly_invariant, build_non_transitive_example,
    build_strict_not_strong_example, check_decomposition, check_double_embedding,
    check_mono_socle_extension, check_operator_laws, check_quotient_lift,
    check_strict_hom_constraints, check_summand_criterion, classify_strict, direct_sum,
    enumerate_monos, enumerate_subgroups, expected_strict_members, invariance_report,
    is_strictly_invariant_brute, is_strongly_invariant_brute, make_group, n_socle,
    p_groups_up_to, quotient, span, strict_lattice, verify_implication_chart, CheckReport,
    EnumerationBudget, Error, FiniteAbelianGroup, Subgroup,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::render::{group_text, hom_text, subgroup_text};

#[derive(Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub statement: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub results: Vec<CheckOutcome>,
    /// Human output only: wall time would break byte-identical JSON.
    #[serde(skip)]
    pub wall_seconds: f64,
}

/// Ok(None) = pass, Ok(Some(witness)) = fail; Err propagates (resource
/// limits and usage problems abort the suite).
type CheckFn = Box<dyn Fn(&EnumerationBudget) -> Result<Option<String>, Error> + Send + Sync>;

pub struct Check {
    id: String,
    statement: String,
    run: CheckFn,
}

fn check(
    id: &str,
    statement: &str,
    run: impl Fn(&EnumerationBudget) -> Result<Option<String>, Error> + Send + Sync + 'static,
) -> Check {
    Check { id: id.to_string(), statement: statement.to_string(), run: Box::new(run) }
}

/// Adapts a `CheckReport` (passed + detail lines) to the outcome shape.
fn from_report(report: CheckReport) -> Option<String> {
    if report.passed {
        None
    } else {
        Some(report.details.join("; "))
    }
}

pub fn run_suite(
    name: &str,
    checks: Vec<Check>,
    jobs: Option<usize>,
    budget: &EnumerationBudget,
) -> Result<SuiteResult, Error> {
    let start = Instant::now();
    let run_all = || -> Result<Vec<CheckOutcome>, Error> {
        checks
            .par_iter()
            .map(|c| {
                let outcome = (c.run)(budget)?;
                if let Some(w) = &outcome {
                    eprintln!("FAIL {}: {w}", c.id);
                }
                Ok(CheckOutcome {
                    id: c.id.clone(),
                    statement: c.statement.clone(),
                    status: if outcome.is_none() { "pass" } else { "fail" },
                    witness: outcome,
                })
            })
            .collect()
    };
    let mut results = match jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidInput(format!("cannot build a {j}-thread pool: {e}")))?;
            pool.install(run_all)?
        }
        None => run_all()?,
    };
    results.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteResult {
        suite: name.to_string(),
        results,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

// ---------------------------------------------------------------------------
// The fixed reproduction suite.
// ---------------------------------------------------------------------------

pub fn paper_checks() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check(
        "characteristic-escape",
        "in (2,4,8) the span of 2a2 and a1+2a3 is characteristic and \
         injective-invariant yet neither fully nor strictly invariant, with \
         the stated escaping embedding",
        |_| {
            let g = make_group(&[2, 4, 8])?;
            let a1 = g.element(&[1, 0, 0])?;
            let a2 = g.element(&[0, 1, 0])?;
            let a3 = g.element(&[0, 0, 1])?;
            let gen_one = g.smul(2, &a2);
            let gen_two = g.add(&a1, &g.smul(2, &a3));
            let h = span(&g, &[gen_one.clone(), gen_two.clone()]);
            let rep = invariance_report(&g, &h, true)?;
            if !rep.flags.characteristic
                || !rep.flags.injective_invariant
                || rep.flags.fully_invariant
                || rep.flags.strictly_invariant
                || rep.flags.strongly_invariant
            {
                return Ok(Some(format!("unexpected flags: {:?}", rep.flags)));
            }
            let escape = enumerate_monos(&h, &g).find(|f| {
                f.try_apply(&gen_one).as_ref() == Some(&a1)
                    && f.try_apply(&gen_two).as_ref() == Some(&a2)
            });
            match escape {
                Some(f) if f.images().iter().any(|img| !h.contains(img)) => Ok(None),
                Some(_) => Ok(Some("stated embedding does not leave the subgroup".into())),
                None => Ok(Some("stated embedding not found".into())),
            }
        },
    ));

    checks.push(check(
        "socle-image-in-quotient",
        "the socle of (2,4) is strictly invariant but its image in the \
         quotient (2,2) is not",
        |_| {
            let g = make_group(&[2, 4])?;
            let socle = n_socle(&g, 2);
            if !is_strictly_invariant_brute(&g, &socle).holds {
                return Ok(Some("socle of (2,4) not strictly invariant".into()));
            }
            let k2 = span(&g, &[g.smul(2, &g.element(&[0, 1])?)]);
            let q = quotient(&g, &k2);
            let image_gens: Vec<_> =
                socle.basis().iter().map(|b| q.projection.apply(b)).collect();
            let image = span(&q.group, &image_gens);
            if is_strictly_invariant_brute(&q.group, &image).holds {
                return Ok(Some("socle image stayed strictly invariant in the quotient".into()));
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "ring-strict-not-strong",
        "the 8-element row module over the 32-element triangular F2 ring \
         embeds uniquely into the product of its two extensions; the image \
         is strictly but not strongly invariant",
        |_| match build_strict_not_strong_example() {
            Ok(_) => Ok(None),
            Err(e) => Ok(Some(e.to_string())),
        },
    ));

    checks.push(check(
        "ring-chain-failures",
        "over the same ring, strict invariance fails to be transitive, to \
         pass to intersections, and to pass to intermediate submodules",
        |_| match build_non_transitive_example() {
            Ok(_) => Ok(None),
            Err(e) => Ok(Some(e.to_string())),
        },
    ));

    checks.push(check(
        "p-group-socle-chains",
        "for p-groups (p in {2,3,5}, order <= 32, rank <= 3) the strictly \
         invariant subgroups are exactly the p-power socles",
        |budget| {
            for p in [2u64, 3, 5] {
                for g in p_groups_up_to(p, 32, 3) {
                    let mut strict: Vec<Subgroup> = enumerate_subgroups(&g, budget)?
                        .into_iter()
                        .filter(|h| is_strictly_invariant_brute(&g, h).holds)
                        .collect();
                    strict.sort();
                    let mut socles: Vec<Subgroup> = Vec::new();
                    let mut m = 1u64;
                    loop {
                        socles.push(n_socle(&g, m));
                        if m >= g.exponent() {
                            break;
                        }
                        m *= p;
                    }
                    socles.sort();
                    socles.dedup();
                    if strict != socles {
                        return Ok(Some(format!(
                            "strict family differs from the socle chain in {}",
                            group_text(&g)
                        )));
                    }
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "strict-equals-strong",
        "no subgroup of any abelian group of order <= 32 (rank <= 4) is \
         strictly but not strongly invariant",
        |budget| {
            for g in abelian_groups_up_to(32, 4) {
                if let Some(w) = conjecture_witness(&g, budget)? {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "operator-laws",
        "the strictly-invariant hull is extensive and idempotent and its \
         image is the socle chain, on every group of order <= 24",
        |budget| {
            for g in abelian_groups_up_to(24, 8) {
                let rep = check_operator_laws(&g, budget)?;
                if !rep.passed {
                    return Ok(from_report(rep).map(|w| format!("{}: {w}", group_text(&g))));
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "lattice-laws",
        "strictly invariant subgroups of groups of order <= 24 form a \
         lattice: closed under sum, meets realized by intersections",
        |budget| {
            for g in abelian_groups_up_to(24, 8) {
                let lattice = strict_lattice(&g, budget, true)?;
                if !lattice.meet_intersection_gaps.is_empty() {
                    return Ok(Some(format!(
                        "meet differs from intersection in {}",
                        group_text(&g)
                    )));
                }
                let n = lattice.members.len();
                for i in 0..n {
                    if lattice.join[i][i] != i || lattice.meet[i][i] != i {
                        return Ok(Some(format!("lattice not idempotent in {}", group_text(&g))));
                    }
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "summand-criterion",
        "a direct summand of a group of order <= 24 is strictly invariant \
         exactly when it is fully invariant",
        |budget| {
            for g in abelian_groups_up_to(24, 8) {
                let rep = check_summand_criterion(&g, budget)?;
                if !rep.passed {
                    return Ok(from_report(rep).map(|w| format!("{}: {w}", group_text(&g))));
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "cyclic-iff-all-strict",
        "among groups of order <= 36, every subgroup is strictly invariant \
         exactly in the cyclic ones",
        |budget| {
            for g in abelian_groups_up_to(36, 8) {
                let c = all_subgroups_strictly_invariant(&g, budget, true)?;
                if c.every_subgroup_strictly_invariant != c.predicted_by_cyclicity {
                    return Ok(Some(format!("cyclicity criterion fails in {}", group_text(&g))));
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "odd-order-splitting",
        "in odd-order direct sums up to order 81, every strictly invariant \
         subgroup splits over the two summands",
        |budget| {
            let odd: Vec<FiniteAbelianGroup> = abelian_groups_up_to(27, 8)
                .into_iter()
                .filter(|g| g.order() % 2 == 1 && g.order() > 1)
                .collect();
            for a in &odd {
                for b in &odd {
                    if a.order() * b.order() > 81 {
                        continue;
                    }
                    let ds = direct_sum(a, b);
                    for h in enumerate_subgroups(&ds.group, budget)? {
                        if !is_strictly_invariant_brute(&ds.group, &h).holds {
                            continue;
                        }
                        let rep = check_decomposition(&ds, &h);
                        if !rep.passed {
                            return Ok(from_report(rep).map(|w| {
                                format!("{} + {}: {w}", group_text(a), group_text(b))
                            }));
                        }
                    }
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "quotient-lift",
        "for groups of order <= 16: above a strictly invariant subgroup, \
         strong invariance of the image in the quotient forces strict \
         invariance below",
        |budget| {
            for g in abelian_groups_up_to(16, 8) {
                let rep = check_quotient_lift(&g, budget)?;
                if !rep.passed {
                    return Ok(from_report(rep).map(|w| format!("{}: {w}", group_text(&g))));
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "double-embedding",
        "for groups of order <= 10, strict invariance of H in G, of the \
         doubled copy in G + G, and strong invariance in G all coincide",
        |budget| {
            for g in abelian_groups_up_to(10, 8) {
                let rep = check_double_embedding(&g, budget)?;
                if !rep.passed {
                    return Ok(from_report(rep).map(|w| format!("{}: {w}", group_text(&g))));
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "socle-hom-constraints",
        "maps out of a strictly invariant subgroup that kill the overlap \
         land inside it, and independent subgroups receive only zero",
        |budget| {
            for g in abelian_groups_up_to(16, 8) {
                let subgroups = enumerate_subgroups(&g, budget)?;
                for h in expected_strict_members(&g) {
                    let rep = check_strict_hom_constraints(&g, &h, &subgroups);
                    if !rep.passed {
                        return Ok(from_report(rep).map(|w| {
                            format!("{} in {}: {w}", subgroup_text(&h), group_text(&g))
                        }));
                    }
                }
            }
            Ok(None)
        },
    ));

    checks.push(check(
        "mono-socle-extension",
        "every map into the smallest strictly invariant extension agrees \
         with some injective map at a nonzero point, when any escape exists",
        |budget| {
            for g in abelian_groups_up_to(12, 8) {
                for k in enumerate_subgroups(&g, budget)? {
                    let rep = check_mono_socle_extension(&g, &k);
                    if !rep.passed {
                        return Ok(from_report(rep).map(|w| {
                            format!("{} in {}: {w}", subgroup_text(&k), group_text(&g))
                        }));
                    }
                }
            }
            Ok(None)
        },
    ));

    checks
}

// ---------------------------------------------------------------------------
// The corpus sweep.
// ---------------------------------------------------------------------------

/// First strictly-but-not-strongly-invariant subgroup, rendered; None if
/// the conjecture holds on this group.
fn conjecture_witness(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<Option<String>, Error> {
    for h in enumerate_subgroups(g, budget)? {
        let strict = is_strictly_invariant_brute(g, &h);
        let strong = is_strongly_invariant_brute(g, &h);
        if strict.holds != strong.holds {
            let escape = strong
                .witness
                .as_ref()
                .map(hom_text)
                .unwrap_or_else(|| "(no escaping map recorded)".to_string());
            return Ok(Some(format!(
                "CONJECTURE COUNTEREXAMPLE: {} in {} is {} invariant; escaping map {}",
                subgroup_text(&h),
                group_text(g),
                if strict.holds { "strictly but not strongly" } else { "strongly but not strictly" },
                escape
            )));
        }
    }
    Ok(None)
}

pub fn corpus_checks(max_order: u64, max_rank: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for g in abelian_groups_up_to(max_order, max_rank) {
        let prefix = format!("g{:03}-{}", g.order(), group_text(&g));

        let g1 = g.clone();
        checks.push(check(
            &format!("{prefix}/chart"),
            "all five invariance flags satisfy the implication chart on \
             every subgroup",
            move |budget| {
                let rep = verify_implication_chart(&g1, budget)?;
                Ok(from_report(rep))
            },
        ));

        let g2 = g.clone();
        checks.push(check(
            &format!("{prefix}/strict-equals-strong"),
            "no subgroup separates strict from strong invariance",
            move |budget| conjecture_witness(&g2, budget),
        ));

        let g3 = g.clone();
        checks.push(check(
            &format!("{prefix}/classifier-agreement"),
            "the socle-chain classifier agrees with the brute-force scan \
             on every subgroup",
            move |budget| {
                for h in enumerate_subgroups(&g3, budget)? {
                    let classified = classify_strict(&g3, &h).strictly_invariant;
                    let brute = is_strictly_invariant_brute(&g3, &h).holds;
                    if classified != brute {
                        return Ok(Some(format!(
                            "classifier says {classified}, scan says {brute} for {}",
                            subgroup_text(&h)
                        )));
                    }
                }
                Ok(None)
            },
        ));

        let g4 = g.clone();
        checks.push(check(
            &format!("{prefix}/operator-laws"),
            "the strictly-invariant hull is extensive and idempotent with \
             the socle chain as image",
            move |budget| {
                let rep = check_operator_laws(&g4, budget)?;
                Ok(from_report(rep))
            },
        ));

        let g5 = g.clone();
        checks.push(check(
            &format!("{prefix}/lattice"),
            "strictly invariant subgroups are closed under sum and meet by \
             intersection",
            move |budget| {
                let lattice = strict_lattice(&g5, budget, false)?;
                if !lattice.meet_intersection_gaps.is_empty() {
                    return Ok(Some("meet differs from intersection".to_string()));
                }
                Ok(None)
            },
        ));
    }
    checks
}

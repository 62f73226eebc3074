//! Human-readable, JSON, and DOT output. All output here is a pure
//! function of its inputs so repeated runs emit identical bytes.

use invariatus_core::{
    FiniteAbelianGroup, GroupElement, Homomorphism, InvarianceReport, StrictLattice,
    StrictVerdict, Subgroup,
};

use crate::suites::SuiteResult;

pub fn element_text(e: &GroupElement) -> String {
    let inner: Vec<String> = e.coeffs().iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

pub fn group_text(g: &FiniteAbelianGroup) -> String {
    if g.rank() == 0 {
        "1".to_string()
    } else {
        let inner: Vec<String> = g.factors().iter().map(u64::to_string).collect();
        inner.join("x")
    }
}

pub fn subgroup_text(h: &Subgroup) -> String {
    let gens = h.canonical_generators();
    if gens.is_empty() {
        "<0>".to_string()
    } else {
        let inner: Vec<String> = gens.iter().map(element_text).collect();
        format!("<{}>", inner.join(", "))
    }
}

pub fn hom_text(f: &Homomorphism) -> String {
    let pairs: Vec<String> = f
        .domain()
        .basis()
        .iter()
        .zip(f.images())
        .map(|(b, img)| format!("{} -> {}", element_text(b), element_text(img)))
        .collect();
    if pairs.is_empty() {
        "zero map from the trivial subgroup".to_string()
    } else {
        pairs.join(", ")
    }
}

fn shape_text(h: &Subgroup) -> String {
    let inner: Vec<String> = h.shape().iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

pub fn print_subgroup_rows(g: &FiniteAbelianGroup, subs: &[Subgroup]) {
    println!("group {} has {} subgroups", group_text(g), subs.len());
    for (i, h) in subs.iter().enumerate() {
        println!(
            "#{i:<4} order {:<6} shape {:<12} generators {}",
            h.order(),
            shape_text(h),
            subgroup_text(h)
        );
    }
}

pub fn subgroups_json(subs: &[Subgroup]) -> String {
    let rows: Vec<serde_json::Value> = subs
        .iter()
        .map(|h| {
            serde_json::json!({
                "order": h.order(),
                "shape": h.shape(),
                "generators": h
                    .canonical_generators()
                    .iter()
                    .map(|e| e.coeffs().to_vec())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::to_string(&rows).expect("subgroup serialization is infallible")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn print_report(g: &FiniteAbelianGroup, report: &InvarianceReport) {
    println!("group:    {} (order {})", group_text(g), g.order());
    println!(
        "subgroup: {} (order {}, shape {})",
        subgroup_text(&report.subject),
        report.subject.order(),
        shape_text(&report.subject)
    );
    let rows: [(&str, bool, &Option<Homomorphism>); 5] = [
        ("fully invariant", report.flags.fully_invariant, &report.witnesses.fully_invariant),
        (
            "strongly invariant",
            report.flags.strongly_invariant,
            &report.witnesses.strongly_invariant,
        ),
        (
            "strictly invariant",
            report.flags.strictly_invariant,
            &report.witnesses.strictly_invariant,
        ),
        (
            "injective-invariant",
            report.flags.injective_invariant,
            &report.witnesses.injective_invariant,
        ),
        ("characteristic", report.flags.characteristic, &report.witnesses.characteristic),
    ];
    for (label, holds, witness) in rows {
        match witness {
            Some(f) if !holds => {
                println!("  {label:<20} {}   escape: {}", yes_no(holds), hom_text(f));
            }
            _ => println!("  {label:<20} {}", yes_no(holds)),
        }
    }
    println!("classification by prime component:");
    if report.classification.per_prime.is_empty() {
        println!("  (trivial group)");
    }
    for pv in &report.classification.per_prime {
        let verdict = match &pv.verdict {
            StrictVerdict::FullComponent => "whole component".to_string(),
            StrictVerdict::Socle { n } => format!("socle of exponent {}^{}", pv.prime, n),
            StrictVerdict::NotStrictlyInvariant => "not strictly invariant".to_string(),
        };
        println!("  p={}: {}", pv.prime, verdict);
    }
    println!(
        "strictly invariant overall: {}",
        yes_no(report.classification.strictly_invariant)
    );
}

/// Label for a lattice member: "0", "G", or "G[m]".
fn member_label(members: &[Subgroup], i: usize) -> String {
    let h = &members[i];
    if h.is_zero() {
        "0".to_string()
    } else if h.is_full() {
        "G".to_string()
    } else {
        format!("G[{}]", h.shape().last().copied().unwrap_or(1))
    }
}

/// Direct covers under inclusion among the lattice members.
fn cover_edges(members: &[Subgroup]) -> Vec<(usize, usize)> {
    let n = members.len();
    let below = |i: usize, j: usize| i != j && members[i].is_subset_of(&members[j]);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub fn print_lattice(g: &FiniteAbelianGroup, lattice: &StrictLattice) {
    let members = &lattice.members;
    println!(
        "strictly invariant subgroups of {}: {} members",
        group_text(g),
        members.len()
    );
    // A chain prints on one line; otherwise list members and covers.
    let is_chain =
        members.windows(2).all(|w| w[0].is_subset_of(&w[1]));
    if is_chain {
        let labels: Vec<String> =
            (0..members.len()).map(|i| member_label(members, i)).collect();
        println!("chain: {}", labels.join(" < "));
    } else {
        for (i, h) in members.iter().enumerate() {
            println!(
                "#{i:<3} {:<8} order {:<6} generators {}",
                member_label(members, i),
                h.order(),
                subgroup_text(h)
            );
        }
        println!("covers:");
        for (lo, hi) in cover_edges(members) {
            println!("  {} < {}", member_label(members, lo), member_label(members, hi));
        }
    }
}

pub fn lattice_json(lattice: &StrictLattice) -> String {
    serde_json::to_string(lattice).expect("lattice serialization is infallible")
}

pub fn lattice_dot(lattice: &StrictLattice) -> String {
    let members = &lattice.members;
    let mut out = String::from("digraph strictly_invariant_lattice {\n  rankdir=BT;\n");
    for i in 0..members.len() {
        out.push_str(&format!(
            "  n{i} [label=\"{} (order {})\"];\n",
            member_label(members, i),
            members[i].order()
        ));
    }
    for (lo, hi) in cover_edges(members) {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn print_suite(result: &SuiteResult) {
    println!("suite: {}", result.suite);
    for check in &result.results {
        println!("  {:<4} {:<34} {}", check.status, check.id, check.statement);
        if let Some(w) = &check.witness {
            println!("       witness: {w}");
        }
    }
    let passed = result.results.iter().filter(|c| c.status == "pass").count();
    let failed = result.results.len() - passed;
    println!(
        "{passed} passed, {failed} failed in {:.2}s",
        result.wall_seconds
    );
}

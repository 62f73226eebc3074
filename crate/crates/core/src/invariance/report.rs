//! Assembled per-subgroup report: flags, witnesses, classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::subgroup::Subgroup;

use super::classify::{classify_strict, StrictClassification};
use super::engine::{chart_violations, invariance_flags, InvarianceFlags, Witnesses};

/// Everything the artifact knows about one subgroup, with a stable JSON
/// field order: subject, flags, witnesses, classification.
#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub subject: Subgroup,
    pub flags: InvarianceFlags,
    pub witnesses: Witnesses,
    pub classification: StrictClassification,
}

/// Computes the full report. With `brute` the strict/strong flags come from
/// the exhaustive searches and are cross-checked against the structural
/// classifier; any disagreement, chart inconsistency, or non-escaping
/// witness is reported as an internal-consistency error instead of a report.
pub fn invariance_report(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
    brute: bool,
) -> Result<InvarianceReport> {
    assert_eq!(h.ambient(), g, "subgroup of a different group");
    let (flags, witnesses) = invariance_flags(g, h, brute);
    let classification = classify_strict(g, h);
    if classification.strictly_invariant != flags.strictly_invariant {
        return Err(Error::InvariantViolated(format!(
            "classifier says strictly invariant = {}, search says {}",
            classification.strictly_invariant, flags.strictly_invariant
        )));
    }
    let chart = chart_violations(&flags);
    if !chart.is_empty() {
        return Err(Error::InvariantViolated(format!(
            "implication chart violated: {}",
            chart.join("; ")
        )));
    }
    // A witness must demonstrably move part of the subgroup outside it.
    let endo_witnesses = [
        &witnesses.fully_invariant,
        &witnesses.injective_invariant,
        &witnesses.characteristic,
    ];
    for w in endo_witnesses.into_iter().flatten() {
        if !h.basis().iter().any(|b| !h.contains(&w.apply(b))) {
            return Err(Error::InvariantViolated(
                "endomorphism witness does not escape the subgroup".into(),
            ));
        }
    }
    let own_witnesses = [&witnesses.strongly_invariant, &witnesses.strictly_invariant];
    for w in own_witnesses.into_iter().flatten() {
        if !w.images().iter().any(|img| !h.contains(img)) {
            return Err(Error::InvariantViolated(
                "embedding witness does not escape the subgroup".into(),
            ));
        }
    }
    Ok(InvarianceReport { subject: h.clone(), flags, witnesses, classification })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::subgroup::{n_socle, span};

    #[test]
    fn report_fields_serialize_in_stable_order() {
        let g = make_group(&[2, 4]).unwrap();
        let h = n_socle(&g, 2);
        let report = invariance_report(&g, &h, true).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let subject = json.find("\"subject\"").unwrap();
        let flags = json.find("\"flags\"").unwrap();
        let witnesses = json.find("\"witnesses\"").unwrap();
        let classification = json.find("\"classification\"").unwrap();
        assert!(subject < flags && flags < witnesses && witnesses < classification);
        assert!(json.contains("\"strictly_invariant\":true"));
    }

    #[test]
    fn report_carries_witnesses_for_false_flags() {
        let g = make_group(&[2, 4, 8]).unwrap();
        let h = span(&g, &[g.element(&[0, 2, 0]).unwrap(), g.element(&[1, 0, 2]).unwrap()]);
        for brute in [false, true] {
            let report = invariance_report(&g, &h, brute).unwrap();
            assert!(report.flags.characteristic);
            assert!(report.flags.injective_invariant);
            assert!(!report.flags.fully_invariant);
            assert!(!report.flags.strictly_invariant);
            assert!(!report.flags.strongly_invariant);
            assert!(report.witnesses.fully_invariant.is_some());
            assert!(report.witnesses.strictly_invariant.is_some());
            assert!(report.witnesses.characteristic.is_none());
        }
    }
}

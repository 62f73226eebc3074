//! Structural classification of strictly invariant subgroups.
//!
//! For a finite abelian group G the strictly invariant subgroups are exactly
//! the direct sums, over the primes p dividing |G|, of the p-power socles
//! G_p[p^n] (equivalently: the subgroups G[m] for divisors m of exp G). The
//! classifier reads that shape off directly; exhaustive monomorphism
//! searches pin it down in tests and in `--verify` runs.

use serde::Serialize;

use crate::error::Result;
use crate::group::{FiniteAbelianGroup, MixedRadixCounter};
use crate::subgroup::{intersect, n_socle, p_component, sum, zero_subgroup, Subgroup};

/// Verdict for a single primary component H_p inside G_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StrictVerdict {
    /// H_p is all of G_p.
    FullComponent,
    /// H_p = G[p^n] (n = 0 means the zero component).
    Socle { n: u32 },
    /// H_p matches no p-power socle; H cannot be strictly invariant.
    NotStrictlyInvariant,
}

/// A prime together with the verdict for the corresponding component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeVerdict {
    pub prime: u64,
    pub verdict: StrictVerdict,
}

/// Per-prime classification of a subgroup, plus the aggregate decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictClassification {
    pub per_prime: Vec<PrimeVerdict>,
    pub strictly_invariant: bool,
}

/// p-adic valuation of a prime power.
fn valuation(prime: u64, mut q: u64) -> u32 {
    let mut v = 0;
    while q > 1 {
        debug_assert_eq!(q % prime, 0, "{q} is not a power of {prime}");
        q /= prime;
        v += 1;
    }
    v
}

/// Classifies H against the socle shapes, one prime at a time. The
/// reconstruction invariant (the primary parts sum back to H) is asserted in
/// debug builds.
pub fn classify_strict(g: &FiniteAbelianGroup, h: &Subgroup) -> StrictClassification {
    assert_eq!(h.ambient(), g);
    let mut per_prime = Vec::new();
    let mut reassembled = zero_subgroup(g);
    for p in g.primes() {
        let component = p_component(g, p);
        let h_p = intersect(h, &component);
        reassembled = sum(&reassembled, &h_p);
        let verdict = if h_p == component {
            StrictVerdict::FullComponent
        } else {
            let n = h_p.shape().last().map_or(0, |&q| valuation(p, q));
            let socle = n_socle(g, p.pow(n));
            if h_p == socle {
                StrictVerdict::Socle { n }
            } else {
                StrictVerdict::NotStrictlyInvariant
            }
        };
        per_prime.push(PrimeVerdict { prime: p, verdict });
    }
    debug_assert_eq!(
        reassembled, *h,
        "primary components must reassemble the subgroup"
    );
    let strictly_invariant = per_prime
        .iter()
        .all(|pv| pv.verdict != StrictVerdict::NotStrictlyInvariant);
    StrictClassification { per_prime, strictly_invariant }
}

/// The complete list of strictly invariant subgroups predicted by the
/// classification: one per family (n_p)_p with 0 <= n_p <= e_p, i.e. one
/// subgroup G[m] per divisor m of exp G. Sorted like the enumerator output.
pub fn expected_strict_members(g: &FiniteAbelianGroup) -> Vec<Subgroup> {
    let primes = g.primes();
    if primes.is_empty() {
        return vec![zero_subgroup(g)];
    }
    let exponent = g.exponent();
    let radices: Vec<u64> = primes
        .iter()
        .map(|&p| u64::from(valuation(p, prime_power_part(exponent, p)) + 1))
        .collect();
    let mut members = Vec::new();
    for combo in MixedRadixCounter::new(radices) {
        let mut m: u64 = 1;
        for (&p, &n) in primes.iter().zip(&combo) {
            m *= p.pow(n as u32);
        }
        members.push(n_socle(g, m));
    }
    members.sort();
    members.dedup();
    members
}

/// Largest power of p dividing n.
fn prime_power_part(mut n: u64, p: u64) -> u64 {
    let mut q = 1;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

/// Aggregate result of the "is every subgroup strictly invariant" question
/// next to its structural prediction (finite case: exactly the cyclic
/// groups).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CyclicityCheck {
    pub every_subgroup_strictly_invariant: bool,
    pub predicted_by_cyclicity: bool,
}

/// Decides whether all subgroups of G are strictly invariant, by classifier
/// or (with `brute`) by exhaustive monomorphism search, and pairs the answer
/// with the cyclicity prediction. Callers assert the two agree.
pub fn all_subgroups_strictly_invariant(
    g: &FiniteAbelianGroup,
    budget: &crate::enumerate::EnumerationBudget,
    brute: bool,
) -> Result<CyclicityCheck> {
    let subgroups = crate::enumerate::enumerate_subgroups(g, budget)?;
    let every = subgroups.iter().all(|h| {
        if brute {
            super::engine::is_strictly_invariant_brute(g, h).holds
        } else {
            classify_strict(g, h).strictly_invariant
        }
    });
    Ok(CyclicityCheck {
        every_subgroup_strictly_invariant: every,
        predicted_by_cyclicity: g.is_cyclic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_subgroups, EnumerationBudget};
    use crate::group::make_group;
    use crate::invariance::engine::is_strictly_invariant_brute;
    use crate::subgroup::span;

    #[test]
    fn strict_members_of_2_4_are_zero_socle_full() {
        let g = make_group(&[2, 4]).unwrap();
        let expected = expected_strict_members(&g);
        assert_eq!(expected.len(), 3);
        assert_eq!(expected[0], zero_subgroup(&g));
        assert_eq!(expected[1], n_socle(&g, 2));
        assert!(expected[2].is_full());
        // Brute force agrees.
        let budget = EnumerationBudget::default();
        let brute: Vec<_> = enumerate_subgroups(&g, &budget)
            .unwrap()
            .into_iter()
            .filter(|h| is_strictly_invariant_brute(&g, h).holds)
            .collect();
        assert_eq!(brute, expected);
    }

    #[test]
    fn classifier_matches_brute_on_mixed_orders() {
        let budget = EnumerationBudget::default();
        for factors in [vec![2, 4], vec![2, 2, 2], vec![12], vec![2, 12], vec![3, 9], vec![36]] {
            let g = make_group(&factors).unwrap();
            for h in enumerate_subgroups(&g, &budget).unwrap() {
                let classified = classify_strict(&g, &h).strictly_invariant;
                let brute = is_strictly_invariant_brute(&g, &h).holds;
                assert_eq!(classified, brute, "mismatch on {h:?} in {factors:?}");
            }
        }
    }

    #[test]
    fn full_component_collapses_with_top_socle() {
        // In (2,4) the 2-component is everything, so the only FullComponent
        // verdict appears for H = G; G[4] = G must classify as FullComponent,
        // not as a proper socle.
        let g = make_group(&[2, 4]).unwrap();
        let full = crate::subgroup::full_subgroup(&g);
        let c = classify_strict(&g, &full);
        assert_eq!(c.per_prime.len(), 1);
        assert_eq!(c.per_prime[0].verdict, StrictVerdict::FullComponent);
        assert!(c.strictly_invariant);
    }

    #[test]
    fn per_prime_verdicts_name_the_failing_component() {
        // H = <(1,0)> in (2,12): 2-part is a non-socle line, 3-part is zero.
        let g = make_group(&[2, 12]).unwrap();
        let h = span(&g, &[g.element(&[1, 0]).unwrap()]);
        let c = classify_strict(&g, &h);
        assert!(!c.strictly_invariant);
        let by_prime: std::collections::HashMap<u64, StrictVerdict> =
            c.per_prime.iter().map(|pv| (pv.prime, pv.verdict)).collect();
        assert_eq!(by_prime[&2], StrictVerdict::NotStrictlyInvariant);
        assert_eq!(by_prime[&3], StrictVerdict::Socle { n: 0 });
    }

    #[test]
    fn divisor_count_predicts_member_count() {
        // |T(G)| = number of divisors of exp G.
        for (factors, divisors) in [
            (vec![2u64, 4], 3usize), // exp 4: 1,2,4
            (vec![12], 6),           // exp 12
            (vec![2, 12], 6),
            (vec![3, 9], 3),
            (vec![2, 2, 2], 2),
        ] {
            let g = make_group(&factors).unwrap();
            assert_eq!(expected_strict_members(&g).len(), divisors, "{factors:?}");
        }
    }

    #[test]
    fn cyclicity_criterion_matches_exhaustion() {
        let budget = EnumerationBudget::default();
        for factors in [vec![12], vec![8], vec![2, 4], vec![2, 2], vec![15], vec![3, 9]] {
            let g = make_group(&factors).unwrap();
            for brute in [false, true] {
                let check = all_subgroups_strictly_invariant(&g, &budget, brute).unwrap();
                assert_eq!(
                    check.every_subgroup_strictly_invariant, check.predicted_by_cyclicity,
                    "cyclicity criterion failed on {factors:?}"
                );
            }
        }
    }

    #[test]
    fn trivial_group_has_one_member() {
        let g = make_group(&[1]).unwrap();
        let members = expected_strict_members(&g);
        assert_eq!(members.len(), 1);
        assert!(members[0].is_full() && members[0].is_zero());
    }
}

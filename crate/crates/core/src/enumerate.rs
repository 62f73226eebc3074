//! Exhaustive subgroup enumeration.
//!
//! Subgroups split uniquely along primary components, so the search runs one
//! prime at a time and recombines by sums. Within the p-component the search
//! is a breadth-first closure layered by exponent: after layer n the pool
//! holds every subgroup of the p^n-torsion part, because any such subgroup is
//! generated from its p^(n-1)-torsion part (already in the pool) by adjoining
//! its remaining elements one at a time, and the closure tries every
//! (subgroup, element) extension.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::subgroup::{intersect, n_socle, p_component, span, zero_subgroup, Subgroup};

#[derive(Clone, Copy, Debug)]
pub struct EnumerationBudget {
    /// Hard cap on the number of subgroups produced (also applied per
    /// primary component while searching).
    pub max_subgroups: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_subgroups: 100_000 }
    }
}

impl EnumerationBudget {
    pub fn new(max_subgroups: usize) -> Self {
        EnumerationBudget { max_subgroups }
    }
}

/// All subgroups of G, sorted by (order, canonical matrix).
pub fn enumerate_subgroups(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
) -> Result<Vec<Subgroup>> {
    let over_budget = || Error::ResourceLimit {
        group: g.to_string(),
        budget: budget.max_subgroups,
    };
    let mut per_prime: Vec<Vec<Subgroup>> = Vec::new();
    for &p in g.primes().iter() {
        let pool = enumerate_p_subgroups(g, p, budget.max_subgroups).ok_or_else(over_budget)?;
        per_prime.push(pool);
    }
    if per_prime.is_empty() {
        return Ok(vec![zero_subgroup(g)]);
    }
    let total: usize = per_prime.iter().map(Vec::len).try_fold(1usize, |acc, n| {
        acc.checked_mul(n).filter(|&t| t <= budget.max_subgroups)
    }).ok_or_else(over_budget)?;
    // Cartesian recombination: a subgroup is the sum of its primary parts.
    let mut result: Vec<Subgroup> = Vec::with_capacity(total);
    let mut idx = vec![0usize; per_prime.len()];
    loop {
        let mut gens = Vec::new();
        for (i, pool) in per_prime.iter().enumerate() {
            gens.extend(pool[idx[i]].canonical_generators());
        }
        result.push(span(g, &gens));
        // Advance the mixed-radix index, last prime fastest.
        let mut t = per_prime.len();
        loop {
            if t == 0 {
                result.sort();
                debug_assert_eq!(result.len(), total);
                return Ok(result);
            }
            t -= 1;
            idx[t] += 1;
            if idx[t] < per_prime[t].len() {
                break;
            }
            idx[t] = 0;
        }
    }
}

/// All subgroups of the p-primary component of G (as subgroups of G), or
/// None if the pool outgrows `cap`.
fn enumerate_p_subgroups(
    g: &FiniteAbelianGroup,
    p: u64,
    cap: usize,
) -> Option<Vec<Subgroup>> {
    let comp = p_component(g, p);
    let max_exp = g
        .primary()
        .get(&p)
        .map(|entries| entries.iter().map(|&(_, e)| e).max().unwrap_or(0))
        .unwrap_or(0);
    let mut pool: BTreeSet<Subgroup> = BTreeSet::new();
    pool.insert(zero_subgroup(g));
    for layer in 1..=max_exp {
        let torsion = intersect(&comp, &n_socle(g, p.pow(layer)));
        let elems: Vec<_> =
            torsion.elements_sorted().into_iter().filter(|e| !e.is_zero()).collect();
        let mut queue: Vec<Subgroup> = pool.iter().cloned().collect();
        while let Some(s) = queue.pop() {
            for x in &elems {
                if s.contains(x) {
                    continue;
                }
                let mut gens = s.canonical_generators();
                gens.push(x.clone());
                let t = span(g, &gens);
                if pool.insert(t.clone()) {
                    if pool.len() > cap {
                        return None;
                    }
                    queue.push(t);
                }
            }
        }
    }
    Some(pool.into_iter().collect())
}

/// First complement (in canonical order) witnessing that H is a direct
/// summand of G, given the full subgroup list; None if H is not a summand.
pub fn find_complement_in(h: &Subgroup, subgroups: &[Subgroup]) -> Option<Subgroup> {
    let g_order = h.ambient().order();
    if g_order % h.order() != 0 {
        return None;
    }
    let target = g_order / h.order();
    subgroups
        .iter()
        .find(|c| {
            c.order() == target
                && crate::subgroup::intersect(h, c).is_zero()
                && crate::subgroup::sum(h, c).is_full()
        })
        .cloned()
}

/// Brute-force direct-summand test: enumerates subgroups and searches for a
/// complement of the right order with trivial intersection.
pub fn is_direct_summand(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
    budget: &EnumerationBudget,
) -> Result<Option<Subgroup>> {
    assert_eq!(h.ambient(), g, "subgroup of a different group");
    let subs = enumerate_subgroups(g, budget)?;
    Ok(find_complement_in(h, &subs))
}

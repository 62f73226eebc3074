//! The complete lattice of strictly invariant subgroups.
//!
//! Members are closed under sums, so join is the sum; the meet of two
//! members is the largest member below their intersection (which exists:
//! the sum of all members below the intersection is again a member below
//! it). The meet can in principle be smaller than the intersection — the
//! lattice need not be a sublattice of the full subgroup lattice — so every
//! pair where they differ is recorded.

use serde::Serialize;

use crate::enumerate::{enumerate_subgroups, EnumerationBudget};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::subgroup::{intersect, sum, zero_subgroup, Subgroup};

/// The lattice T(G): sorted members plus join/meet tables by member index.
#[derive(Clone, Debug, Serialize)]
pub struct StrictLattice {
    pub members: Vec<Subgroup>,
    /// join[i][j] = index of members[i] + members[j].
    pub join: Vec<Vec<usize>>,
    /// meet[i][j] = index of the largest member contained in the
    /// intersection of members[i] and members[j].
    pub meet: Vec<Vec<usize>>,
    /// Pairs (i, j), i <= j, whose meet is strictly below the intersection.
    pub meet_intersection_gaps: Vec<(usize, usize)>,
}

impl StrictLattice {
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.members.len() - 1
    }
}

fn member_index(members: &[Subgroup], s: &Subgroup) -> Result<usize> {
    members.binary_search(s).map_err(|_| {
        Error::InvariantViolated(format!(
            "closure failure: {:?} is not in the strictly invariant family",
            s
        ))
    })
}

/// Builds T(G). With `brute` the membership filter runs the exhaustive
/// monomorphism search instead of the structural classifier.
pub fn strict_lattice(
    g: &FiniteAbelianGroup,
    budget: &EnumerationBudget,
    brute: bool,
) -> Result<StrictLattice> {
    let members: Vec<Subgroup> = enumerate_subgroups(g, budget)?
        .into_iter()
        .filter(|h| {
            if brute {
                super::engine::is_strictly_invariant_brute(g, h).holds
            } else {
                super::classify::classify_strict(g, h).strictly_invariant
            }
        })
        .collect();
    debug_assert!(members.first().is_some_and(Subgroup::is_zero), "bottom must be 0");
    debug_assert!(members.last().is_some_and(Subgroup::is_full), "top must be G");

    let n = members.len();
    let mut join = vec![vec![0usize; n]; n];
    let mut meet = vec![vec![0usize; n]; n];
    let mut meet_intersection_gaps = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s = sum(&members[i], &members[j]);
            let s_idx = member_index(&members, &s)?;
            join[i][j] = s_idx;
            join[j][i] = s_idx;

            let inter = intersect(&members[i], &members[j]);
            let mut below = zero_subgroup(g);
            for m in &members {
                if m.is_subset_of(&inter) {
                    below = sum(&below, m);
                }
            }
            let m_idx = member_index(&members, &below)?;
            meet[i][j] = m_idx;
            meet[j][i] = m_idx;
            debug_assert!(members[m_idx].is_subset_of(&inter), "meet must sit below the intersection");
            if members[m_idx] != inter {
                meet_intersection_gaps.push((i, j));
            }
        }
    }
    Ok(StrictLattice { members, join, meet, meet_intersection_gaps })
}

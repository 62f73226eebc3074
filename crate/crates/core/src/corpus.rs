//! Deterministic corpora of finite abelian groups, one representative per
//! isomorphism class, for exhaustive sweeps.

use crate::group::{factorize, make_group, FiniteAbelianGroup};

/// All descending partitions of `n` with at most `max_parts` parts.
pub fn partitions(n: u32, max_parts: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, cap: u32, parts_left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for part in (1..=remaining.min(cap)).rev() {
            prefix.push(part);
            go(remaining - part, part, parts_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `n` (up to isomorphism) whose p-rank is at
/// most `max_rank_per_prime` for every prime p.
pub fn abelian_groups_of_order(n: u64, max_rank_per_prime: u32) -> Vec<FiniteAbelianGroup> {
    let prime_partitions: Vec<(u64, Vec<Vec<u32>>)> = factorize(n)
        .into_iter()
        .map(|(p, e)| (p, partitions(e, max_rank_per_prime)))
        .collect();
    if prime_partitions.iter().any(|(_, parts)| parts.is_empty()) {
        return Vec::new(); // rank cap unreachable for this order
    }
    let mut groups = Vec::new();
    let mut choice = vec![0usize; prime_partitions.len()];
    loop {
        let mut prime_powers: Vec<u64> = Vec::new();
        for (i, (p, parts)) in prime_partitions.iter().enumerate() {
            for &exp in &parts[choice[i]] {
                prime_powers.push(p.pow(exp));
            }
        }
        if prime_powers.is_empty() {
            prime_powers.push(1);
        }
        groups.push(make_group(&prime_powers).expect("prime powers fit in u64"));
        // Advance the mixed-radix choice vector.
        let mut i = prime_partitions.len();
        loop {
            if i == 0 {
                groups.sort_by(|a, b| a.factors().cmp(b.factors()));
                return groups;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < prime_partitions[i].1.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// All abelian groups with order in `1..=max_order`, rank capped per prime,
/// sorted by (order, invariant factors).
pub fn abelian_groups_up_to(max_order: u64, max_rank_per_prime: u32) -> Vec<FiniteAbelianGroup> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(abelian_groups_of_order(n, max_rank_per_prime));
    }
    out
}

/// The p-groups of order ≤ max_order with rank ≤ max_rank, sorted.
pub fn p_groups_up_to(p: u64, max_order: u64, max_rank: u32) -> Vec<FiniteAbelianGroup> {
    let mut out = Vec::new();
    let mut q = p;
    while q <= max_order {
        out.extend(abelian_groups_of_order(q, max_rank));
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    out
}

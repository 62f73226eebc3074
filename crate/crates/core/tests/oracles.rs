//! Independent brute-force oracles for the structural engines.
//!
//! Everything here recomputes a quantity from first principles — bitmask
//! closures over raw element tables, exhaustive function filtering — and
//! compares it against the library's lattice/hom machinery. None of these
//! oracles share code with the implementations they check.

use invariatus_core::{
    abelian_groups_up_to, count_homs, enumerate_homs, enumerate_monos, enumerate_subgroups,
    full_subgroup, intersect, make_group, span, sum, EnumerationBudget, FiniteAbelianGroup,
    GroupElement,
};

fn budget() -> EnumerationBudget {
    EnumerationBudget::default()
}

/// Mixed-radix index of an element, used to key bitmask sets.
fn idx(g: &FiniteAbelianGroup, e: &GroupElement) -> usize {
    let mut i = 0usize;
    for (c, d) in e.coeffs().iter().zip(g.factors()) {
        i = i * (*d as usize) + *c as usize;
    }
    i
}

/// Raw addition table on element indices.
fn add_table(g: &FiniteAbelianGroup) -> Vec<Vec<usize>> {
    let elems: Vec<GroupElement> = g.elements().collect();
    let mut by_index = vec![g.zero(); elems.len()];
    for e in &elems {
        by_index[idx(g, e)] = e.clone();
    }
    let n = by_index.len();
    let mut t = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            t[i][j] = idx(g, &g.add(&by_index[i], &by_index[j]));
        }
    }
    t
}

/// Closure of a bitmask under the addition table.
fn close(table: &[Vec<usize>], mut set: u64) -> u64 {
    loop {
        let mut next = set;
        let mut xs = set;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let mut ys = set;
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                next |= 1u64 << table[x][y];
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Every addition-closed subset containing 0, found by closure growth.
/// (A finite addition-closed subset is automatically a subgroup.)
fn subgroup_masks(g: &FiniteAbelianGroup) -> Vec<u64> {
    let table = add_table(g);
    let zero_only = 1u64 << 0;
    let mut found = vec![close(&table, zero_only)];
    let n = g.order() as usize;
    let mut frontier = found.clone();
    while let Some(s) = frontier.pop() {
        for x in 0..n {
            if s & (1u64 << x) != 0 {
                continue;
            }
            let grown = close(&table, s | (1u64 << x));
            if !found.contains(&grown) {
                found.push(grown);
                frontier.push(grown);
            }
        }
    }
    found.sort_unstable();
    found
}

fn mask_of_subgroup(g: &FiniteAbelianGroup, h: &invariatus_core::Subgroup) -> u64 {
    let mut m = 0u64;
    for e in h.elements() {
        m |= 1u64 << idx(g, &e);
    }
    m
}

#[test]
fn subgroup_enumeration_matches_bitmask_closure_oracle() {
    for g in abelian_groups_up_to(32, 8) {
        if g.order() > 64 {
            continue;
        }
        let oracle = subgroup_masks(&g);
        let mut ours: Vec<u64> = enumerate_subgroups(&g, &budget())
            .unwrap()
            .iter()
            .map(|h| mask_of_subgroup(&g, h))
            .collect();
        let count = ours.len();
        ours.sort_unstable();
        ours.dedup();
        assert_eq!(ours.len(), count, "duplicate subgroup in {:?}", g.factors());
        assert_eq!(ours, oracle, "subgroup sets differ for {:?}", g.factors());
    }
}

/// Exhaustive additive-map oracle: filter all element functions.
fn additive_function_count(h: &FiniteAbelianGroup, g: &FiniteAbelianGroup) -> usize {
    let h_elems: Vec<GroupElement> = h.elements().collect();
    let g_elems: Vec<GroupElement> = g.elements().collect();
    let hn = h_elems.len();
    let gn = g_elems.len();
    let h_index: Vec<GroupElement> = {
        let mut v = vec![h.zero(); hn];
        for e in &h_elems {
            v[idx(h, e)] = e.clone();
        }
        v
    };
    let mut count = 0usize;
    let total = (gn as u128).pow(hn as u32);
    let mut choice = vec![0usize; hn];
    for _ in 0..total {
        let additive = (0..hn).all(|i| {
            (0..hn).all(|j| {
                let k = idx(h, &h.add(&h_index[i], &h_index[j]));
                g.add(&g_elems[choice[i]], &g_elems[choice[j]]) == g_elems[choice[k]]
            })
        });
        if additive {
            count += 1;
        }
        // Advance the function like a counter.
        for slot in (0..hn).rev() {
            choice[slot] += 1;
            if choice[slot] < gn {
                break;
            }
            choice[slot] = 0;
        }
    }
    count
}

#[test]
fn hom_counts_match_exhaustive_function_oracle() {
    // Small enough that |G|^|H| stays manageable.
    let cases = [
        (vec![2u64], vec![4u64]),
        (vec![2], vec![2, 2]),
        (vec![4], vec![2]),
        (vec![2, 2], vec![2]),
        (vec![3], vec![3]),
        (vec![2], vec![6]),
    ];
    for (hf, gf) in cases {
        let h = make_group(&hf).unwrap();
        let g = make_group(&gf).unwrap();
        let oracle = additive_function_count(&h, &g);
        let counted = count_homs(h.factors(), &g) as usize;
        let listed = enumerate_homs(&full_subgroup(&h), &g).count();
        assert_eq!(counted, oracle, "count formula vs oracle for {hf:?} -> {gf:?}");
        assert_eq!(listed, oracle, "enumeration vs oracle for {hf:?} -> {gf:?}");
    }
}

#[test]
fn enumerated_homs_are_additive_and_distinct() {
    let h = make_group(&[2, 4]).unwrap();
    let g = make_group(&[4, 2]).unwrap();
    let homs: Vec<_> = enumerate_homs(&full_subgroup(&h), &g).collect();
    assert_eq!(homs.len(), count_homs(h.factors(), &g) as usize);
    let h_elems: Vec<GroupElement> = h.elements().collect();
    let mut tables = Vec::new();
    for f in &homs {
        for x in &h_elems {
            for y in &h_elems {
                assert_eq!(f.apply(&h.add(x, y)), g.add(&f.apply(x), &f.apply(y)));
            }
        }
        let table: Vec<GroupElement> = h_elems.iter().map(|x| f.apply(x)).collect();
        tables.push(table);
    }
    let before = tables.len();
    tables.sort_by_key(|t| t.iter().map(|e| idx(&g, e)).collect::<Vec<_>>());
    tables.dedup();
    assert_eq!(tables.len(), before, "two enumerated homs share a table");
}

#[test]
fn monos_are_exactly_the_order_preserving_injections() {
    // A hom is injective iff its element table is injective; the mono
    // enumerator must produce exactly the injective homs, in any order.
    let cases = [
        (vec![2u64, 2], vec![2u64, 4]),
        (vec![4], vec![4, 2]),
        (vec![2, 4], vec![2, 4]),
        (vec![3], vec![3, 3]),
    ];
    for (hf, gf) in cases {
        let h = make_group(&hf).unwrap();
        let g = make_group(&gf).unwrap();
        let dom = full_subgroup(&h);
        let mut from_filter: Vec<Vec<usize>> = enumerate_homs(&dom, &g)
            .filter(|f| {
                let mut seen: Vec<usize> =
                    h.elements().map(|x| idx(&g, &f.apply(&x))).collect();
                let n = seen.len();
                seen.sort_unstable();
                seen.dedup();
                seen.len() == n
            })
            .map(|f| h.elements().map(|x| idx(&g, &f.apply(&x))).collect())
            .collect();
        let mut from_monos: Vec<Vec<usize>> = enumerate_monos(&dom, &g)
            .map(|f| h.elements().map(|x| idx(&g, &f.apply(&x))).collect())
            .collect();
        from_filter.sort();
        from_monos.sort();
        assert_eq!(from_filter, from_monos, "{hf:?} -> {gf:?}");
    }
}

#[test]
fn order_identity_for_sum_and_intersection() {
    for g in abelian_groups_up_to(16, 8) {
        let subs = enumerate_subgroups(&g, &budget()).unwrap();
        for a in &subs {
            for b in &subs {
                let s = sum(a, b);
                let i = intersect(a, b);
                assert_eq!(
                    a.order() * b.order(),
                    s.order() * i.order(),
                    "order identity fails in {:?}",
                    g.factors()
                );
                assert!(i.is_subset_of(a) && i.is_subset_of(b));
                assert!(a.is_subset_of(&s) && b.is_subset_of(&s));
            }
        }
    }
}

#[test]
fn span_of_basis_recovers_the_subgroup() {
    for g in abelian_groups_up_to(24, 8) {
        for h in enumerate_subgroups(&g, &budget()).unwrap() {
            let again = span(&g, h.basis());
            assert_eq!(again, h, "span(basis) differs in {:?}", g.factors());
            let elem_span = span(&g, &h.elements());
            assert_eq!(elem_span, h, "span(elements) differs in {:?}", g.factors());
        }
    }
}

#[test]
fn injectivity_matches_image_order() {
    let h = make_group(&[2, 4]).unwrap();
    let g = make_group(&[4, 4]).unwrap();
    for f in enumerate_homs(&full_subgroup(&h), &g) {
        let image_order = f.image().order();
        assert_eq!(
            f.is_injective(),
            image_order == h.order(),
            "injectivity flag disagrees with image size"
        );
        assert_eq!(
            f.kernel().order() * image_order,
            h.order(),
            "rank-nullity fails"
        );
    }
}

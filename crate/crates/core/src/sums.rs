//! External direct sums A + B presented in canonical form.
//!
//! Concatenating the invariant factors of A and B rarely yields a canonical
//! chain, so the sum is rebuilt by regrouping prime powers; the embeddings
//! then route each original generator through the Chinese remainder
//! decomposition of its canonical target factor.

use crate::group::{make_group_with_regrouping, FiniteAbelianGroup, GroupElement};
use crate::hom::Homomorphism;
use crate::subgroup::{full_subgroup, span, Subgroup};

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FiniteAbelianGroup,
    /// A -> group, injective.
    pub embed_left: Homomorphism,
    /// B -> group, injective.
    pub embed_right: Homomorphism,
    /// Image of A inside the sum.
    pub part_left: Subgroup,
    /// Image of B inside the sum.
    pub part_right: Subgroup,
}

impl DirectSum {
    /// Pushes a subgroup of A forward to a subgroup of the sum.
    pub fn push_left(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<GroupElement> =
            h.canonical_generators().iter().map(|x| self.embed_left.apply(x)).collect();
        span(&self.group, &gens)
    }

    pub fn push_right(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<GroupElement> =
            h.canonical_generators().iter().map(|x| self.embed_right.apply(x)).collect();
        span(&self.group, &gens)
    }

    /// Pulls a subgroup of the sum back to {x in A : embed(x) in S}.
    pub fn pull_left(&self, s: &Subgroup) -> Subgroup {
        let a = self.embed_left.domain().ambient().clone();
        let members: Vec<GroupElement> =
            a.elements().into_iter().filter(|x| s.contains(&self.embed_left.apply(x))).collect();
        span(&a, &members)
    }

    pub fn pull_right(&self, s: &Subgroup) -> Subgroup {
        let b = self.embed_right.domain().ambient().clone();
        let members: Vec<GroupElement> =
            b.elements().into_iter().filter(|x| s.contains(&self.embed_right.apply(x))).collect();
        span(&b, &members)
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let e = num_integer::Integer::extended_gcd(&(a as i128 % m as i128), &(m as i128));
    assert_eq!(e.gcd, 1, "inverse requires coprimality");
    e.x.rem_euclid(m as i128) as u64
}

pub fn direct_sum(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> DirectSum {
    let mut concat: Vec<u64> = a.factors().to_vec();
    concat.extend_from_slice(b.factors());
    let (group, slots) =
        make_group_with_regrouping(&concat).expect("factors already fit in u64");
    // images[s] = embedding of the s-th concatenated generator: congruent to
    // 1 modulo each of its own prime powers, 0 modulo everything else.
    let mut images = vec![group.zero(); concat.len()];
    for slot in &slots {
        let d = group.factors()[slot.target];
        let q = slot.prime.pow(slot.exponent);
        let m = d / q;
        let unit = ((m as u128 * mod_inverse(m % q, q) as u128) % d as u128) as u64;
        let mut coeffs = images[slot.source].coeffs().to_vec();
        coeffs[slot.target] = (coeffs[slot.target] + unit) % d;
        images[slot.source] = group.element(&coeffs).expect("rank matches");
    }
    let (left_images, right_images) = images.split_at(a.rank());
    debug_assert!(left_images
        .iter()
        .zip(a.factors())
        .all(|(img, &f)| group.order_of(img) == f));
    debug_assert!(right_images
        .iter()
        .zip(b.factors())
        .all(|(img, &f)| group.order_of(img) == f));
    let embed_left = Homomorphism::new(full_subgroup(a), group.clone(), left_images.to_vec())
        .expect("orders match");
    let embed_right = Homomorphism::new(full_subgroup(b), group.clone(), right_images.to_vec())
        .expect("orders match");
    let part_left = embed_left.image();
    let part_right = embed_right.image();
    DirectSum { group, embed_left, embed_right, part_left, part_right }
}

//! Quotients G/H presented as honest finite abelian groups.
//!
//! For H <= G with lattice basis B (the canonical HNF), the Smith form
//! U B V = diag(s_1, ..., s_k) identifies Z^k / L(H) with the direct sum of
//! Z/s_i via x -> x V. Dropping the trivial s_i = 1 positions leaves the
//! invariant factors of G/H together with an explicit projection and a
//! section picking a lift for each quotient generator.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::hom::Homomorphism;
use crate::matrix::IntMatrix;
use crate::subgroup::{full_subgroup, Subgroup};

#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub group: FiniteAbelianGroup,
    /// Surjection G -> G/H with kernel H.
    pub projection: Homomorphism,
    /// lifts[j] projects onto the j-th standard generator of the quotient.
    pub lifts: Vec<GroupElement>,
}

impl QuotientPresentation {
    /// A preimage of q under the projection.
    pub fn lift(&self, q: &GroupElement) -> GroupElement {
        let g = self.projection.domain().ambient();
        let mut acc = g.zero();
        for (c, l) in q.coeffs().iter().zip(&self.lifts) {
            if *c != 0 {
                acc = g.add(&acc, &g.smul(*c as i64, l));
            }
        }
        acc
    }
}

pub fn quotient(g: &FiniteAbelianGroup, h: &Subgroup) -> QuotientPresentation {
    assert_eq!(h.ambient(), g, "subgroup of a different group");
    let k = g.rank();
    let b = IntMatrix::from_rows(
        h.hnf_rows().iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
    )
    .expect("rectangular");
    let s = b.smith_normal_form();
    let diag: Vec<u64> =
        s.d.diagonal().iter().map(|v| v.to_u64().expect("invariant factor fits u64")).collect();
    let kept: Vec<usize> = (0..k).filter(|&i| diag[i] > 1).collect();
    let factors: Vec<u64> = kept.iter().map(|&i| diag[i]).collect();
    let q_group = FiniteAbelianGroup::from_canonical_factors(factors);
    // projection(e_i) = row i of V restricted to the kept columns, mod s.
    let images: Vec<GroupElement> = (0..k)
        .map(|i| {
            let coeffs: Vec<u64> = kept
                .iter()
                .map(|&t| {
                    let m = BigInt::from(diag[t]);
                    num_integer::Integer::mod_floor(s.v.at(i, t), &m)
                        .to_u64()
                        .expect("reduced coefficient")
                })
                .collect();
            GroupElement::from_coeffs(coeffs)
        })
        .collect();
    let projection = Homomorphism::new(full_subgroup(g), q_group.clone(), images)
        .expect("projection respects generator orders");
    // lift of the quotient generator at kept position t: row t of V^-1, since
    // (row t of V^-1) V = e_t.
    let lifts: Vec<GroupElement> = kept
        .iter()
        .map(|&t| {
            let coeffs: Vec<u64> = (0..k)
                .map(|j| {
                    let m = BigInt::from(g.factors()[j]);
                    num_integer::Integer::mod_floor(s.v_inv.at(t, j), &m)
                        .to_u64()
                        .expect("reduced coefficient")
                })
                .collect();
            g.element(&coeffs).expect("rank matches")
        })
        .collect();
    debug_assert_eq!(q_group.order() * h.order(), g.order());
    debug_assert!(lifts
        .iter()
        .enumerate()
        .all(|(j, l)| projection.apply(l) == q_group.standard_generator(j)));
    QuotientPresentation { group: q_group, projection, lifts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::subgroup::{span, zero_subgroup};

    fn elt(g: &FiniteAbelianGroup, coeffs: &[u64]) -> GroupElement {
        g.element(coeffs).unwrap()
    }

    #[test]
    fn quotient_of_cyclic_subgroup() {
        let g = make_group(&[2, 4]).unwrap();
        let h = span(&g, &[elt(&g, &[0, 2])]);
        let q = quotient(&g, &h);
        assert_eq!(q.group.factors(), &[2, 2]);
        assert_eq!(q.projection.kernel(), h);
        assert!(q.projection.is_surjective());
        for x in q.group.elements() {
            assert_eq!(q.projection.apply(&q.lift(&x)), x);
        }
    }

    #[test]
    fn quotient_extremes() {
        let g = make_group(&[2, 4, 8]).unwrap();
        let by_zero = quotient(&g, &zero_subgroup(&g));
        assert_eq!(by_zero.group.factors(), g.factors());
        let by_full = quotient(&g, &full_subgroup(&g));
        assert!(by_full.group.factors().is_empty());
        assert_eq!(by_full.group.order(), 1);
        assert_eq!(by_full.projection.kernel(), full_subgroup(&g));
    }

    #[test]
    fn projection_is_well_defined_on_cosets() {
        let g = make_group(&[2, 4, 8]).unwrap();
        let h = span(&g, &[elt(&g, &[0, 2, 0]), elt(&g, &[1, 0, 2])]);
        let q = quotient(&g, &h);
        assert_eq!(q.group.order() * h.order(), g.order());
        // Same coset iff same image.
        let members = h.elements();
        for x in g.elements() {
            let px = q.projection.apply(&x);
            for m in &members {
                assert_eq!(q.projection.apply(&g.add(&x, m)), px);
            }
        }
        assert_eq!(q.projection.kernel(), h);
    }
}

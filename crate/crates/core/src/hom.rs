//! Homomorphisms between finite abelian groups.
//!
//! A homomorphism out of a subgroup H = <b_1> + ... + <b_m> (internal direct
//! sum over the basis) is determined by the images of the b_i, and any choice
//! with order(f(b_i)) dividing order(b_i) extends to a homomorphism. All
//! enumeration below walks those image tuples in lexicographic order (image
//! of b_1 most significant; elements compared by coefficient vectors), so
//! every stream is deterministic and restartable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement, MixedRadixCounter};
use crate::subgroup::{full_subgroup, n_socle, span, zero_subgroup, Subgroup};

#[derive(Clone, PartialEq, Eq)]
pub struct Homomorphism {
    domain: Subgroup,
    codomain: FiniteAbelianGroup,
    /// Images of the domain basis, in basis order.
    images: Vec<GroupElement>,
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Hom({:?} -> {}, {:?})",
            self.domain.shape(),
            self.codomain,
            self.images.iter().map(GroupElement::coeffs).collect::<Vec<_>>()
        )
    }
}

#[derive(Serialize)]
struct HomJson<'a> {
    domain_basis: &'a [GroupElement],
    images: &'a [GroupElement],
}

impl Serialize for Homomorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HomJson { domain_basis: self.domain.basis(), images: &self.images }.serialize(s)
    }
}

impl Homomorphism {
    pub fn new(
        domain: Subgroup,
        codomain: FiniteAbelianGroup,
        images: Vec<GroupElement>,
    ) -> Result<Homomorphism> {
        if images.len() != domain.basis().len() {
            return Err(Error::InvalidInput(format!(
                "expected {} basis images, got {}",
                domain.basis().len(),
                images.len()
            )));
        }
        let images: Vec<GroupElement> = images
            .iter()
            .map(|e| codomain.element(e.coeffs()))
            .collect::<Result<_>>()
            .map_err(|e| Error::InvalidInput(format!("image outside codomain: {e}")))?;
        for (i, (img, &o)) in images.iter().zip(domain.shape()).enumerate() {
            let io = codomain.order_of(img);
            if o % io != 0 {
                return Err(Error::InvalidInput(format!(
                    "image {i} has order {io}, not a divisor of basis order {o}"
                )));
            }
        }
        Ok(Homomorphism { domain, codomain, images })
    }

    /// Construction without the divisibility re-check, for enumerators whose
    /// candidate pools already guarantee it.
    fn new_unchecked(
        domain: Subgroup,
        codomain: FiniteAbelianGroup,
        images: Vec<GroupElement>,
    ) -> Homomorphism {
        debug_assert!(images
            .iter()
            .zip(domain.shape())
            .all(|(img, &o)| o % codomain.order_of(img) == 0));
        Homomorphism { domain, codomain, images }
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        self.try_apply(x).expect("element lies in the domain")
    }

    pub fn try_apply(&self, x: &GroupElement) -> Option<GroupElement> {
        let coords = self.domain.decompose(x)?;
        let mut acc = self.codomain.zero();
        for (c, img) in coords.iter().zip(&self.images) {
            if *c != 0 {
                acc = self.codomain.add(&acc, &self.codomain.smul(*c as i64, img));
            }
        }
        Some(acc)
    }

    pub fn image(&self) -> Subgroup {
        span(&self.codomain, &self.images)
    }

    /// Kernel as a subgroup of the domain's ambient group.
    pub fn kernel(&self) -> Subgroup {
        let mut members = Vec::new();
        let shape = self.domain.shape().to_vec();
        let basis = self.domain.basis().to_vec();
        let g = self.domain.ambient().clone();
        for combo in MixedRadixCounter::new(shape) {
            let mut img = self.codomain.zero();
            let mut arg = g.zero();
            for ((c, b), im) in combo.iter().zip(&basis).zip(&self.images) {
                if *c != 0 {
                    arg = g.add(&arg, &g.smul(*c as i64, b));
                    img = self.codomain.add(&img, &self.codomain.smul(*c as i64, im));
                }
            }
            if img.is_zero() {
                members.push(arg);
            }
        }
        span(&g, &members)
    }

    pub fn is_injective(&self) -> bool {
        for combo in MixedRadixCounter::new(self.domain.shape().to_vec()) {
            if combo.iter().all(|&c| c == 0) {
                continue;
            }
            let mut img = self.codomain.zero();
            for (c, im) in combo.iter().zip(&self.images) {
                if *c != 0 {
                    img = self.codomain.add(&img, &self.codomain.smul(*c as i64, im));
                }
            }
            if img.is_zero() {
                return false;
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(GroupElement::is_zero)
    }

    /// self after `inner`: x -> self(inner(x)). Requires every image of
    /// `inner` to lie in self's domain.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Homomorphism> {
        if inner.codomain != *self.domain.ambient() {
            return Err(Error::InvalidInput(
                "composition mismatch: inner codomain differs from outer ambient".into(),
            ));
        }
        let images: Vec<GroupElement> = inner
            .images
            .iter()
            .map(|im| {
                self.try_apply(im).ok_or_else(|| {
                    Error::InvalidInput("inner image escapes the outer domain".into())
                })
            })
            .collect::<Result<_>>()?;
        Homomorphism::new(inner.domain.clone(), self.codomain.clone(), images)
    }

    /// Restriction to a smaller domain.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Homomorphism> {
        if !sub.is_subset_of(&self.domain) {
            return Err(Error::InvalidInput("restriction target is not a sub-subgroup".into()));
        }
        let images = sub.basis().iter().map(|b| self.apply(b)).collect();
        Homomorphism::new(sub.clone(), self.codomain.clone(), images)
    }
}

pub fn identity_endo(g: &FiniteAbelianGroup) -> Homomorphism {
    let images = (0..g.rank()).map(|i| g.standard_generator(i)).collect();
    Homomorphism::new_unchecked(full_subgroup(g), g.clone(), images)
}

pub fn zero_hom(domain: &Subgroup, codomain: &FiniteAbelianGroup) -> Homomorphism {
    let images = vec![codomain.zero(); domain.basis().len()];
    Homomorphism::new_unchecked(domain.clone(), codomain.clone(), images)
}

pub fn inclusion(sub: &Subgroup) -> Homomorphism {
    Homomorphism::new_unchecked(sub.clone(), sub.ambient().clone(), sub.basis().to_vec())
}

/// |Hom(H, G)| for H with the given invariant factors: the image of a basis
/// element of order o ranges over G[o], whose size is prod_j gcd(o, d_j).
pub fn count_homs(domain_shape: &[u64], codomain: &FiniteAbelianGroup) -> u64 {
    let mut total: u128 = 1;
    for &o in domain_shape {
        for &d in codomain.factors() {
            total = total
                .checked_mul(num_integer::gcd(o, d) as u128)
                .expect("hom count fits in u128");
        }
    }
    u64::try_from(total).expect("hom count fits in u64")
}

/// Sorted image candidates per basis slot: slot i ranges over G[o_i].
fn hom_slots(domain: &Subgroup, codomain: &FiniteAbelianGroup) -> Vec<Vec<GroupElement>> {
    domain.shape().iter().map(|&o| n_socle(codomain, o).elements_sorted()).collect()
}

/// All homomorphisms H -> G, lazily, in lexicographic order of image tuples.
pub fn enumerate_homs(
    domain: &Subgroup,
    codomain: &FiniteAbelianGroup,
) -> impl Iterator<Item = Homomorphism> {
    let slots = hom_slots(domain, codomain);
    let radices: Vec<u64> = slots.iter().map(|s| s.len() as u64).collect();
    let domain = domain.clone();
    let codomain = codomain.clone();
    MixedRadixCounter::new(radices).map(move |idx| {
        let images = idx.iter().zip(&slots).map(|(&i, slot)| slot[i as usize].clone()).collect();
        Homomorphism::new_unchecked(domain.clone(), codomain.clone(), images)
    })
}

/// All injective homomorphisms H -> G, in the same order as the injective
/// members of `enumerate_homs`. Depth-first search over image prefixes: slot
/// i only ranges over elements of exact order o_i, and a prefix dies as soon
/// as some combination with a nonzero last coefficient maps to zero.
pub fn enumerate_monos(
    domain: &Subgroup,
    codomain: &FiniteAbelianGroup,
) -> impl Iterator<Item = Homomorphism> {
    let shape = domain.shape().to_vec();
    let candidates: Vec<Vec<GroupElement>> =
        shape.iter().map(|&o| exact_order_candidates(codomain, o)).collect();
    MonoIter {
        domain: domain.clone(),
        codomain: codomain.clone(),
        shape,
        candidates,
        stack: Vec::new(),
        images: Vec::new(),
        done: false,
    }
}

/// Elements of exact order o, sorted; the only valid images of an order-o
/// basis element under an injective map.
pub(crate) fn exact_order_candidates(
    codomain: &FiniteAbelianGroup,
    o: u64,
) -> Vec<GroupElement> {
    n_socle(codomain, o)
        .elements_sorted()
        .into_iter()
        .filter(|e| codomain.order_of(e) == o)
        .collect()
}

/// No combination c_0..c_t of the chosen images with c_t != 0 may vanish
/// (t = last filled slot); combinations with c_t = 0 were ruled out when the
/// previous slot was accepted, so a passing prefix has no kernel so far.
pub(crate) fn prefix_injective(
    codomain: &FiniteAbelianGroup,
    shape: &[u64],
    images: &[GroupElement],
) -> bool {
    let t = images.len() - 1;
    let last = &images[t];
    let radices: Vec<u64> = shape[..t].to_vec();
    for c_last in 1..shape[t] {
        let tail = codomain.smul(c_last as i64, last);
        for combo in MixedRadixCounter::new(radices.clone()) {
            let mut acc = tail.clone();
            for (c, im) in combo.iter().zip(&images[..t]) {
                if *c != 0 {
                    acc = codomain.add(&acc, &codomain.smul(*c as i64, im));
                }
            }
            if acc.is_zero() {
                return false;
            }
        }
    }
    true
}

struct MonoIter {
    domain: Subgroup,
    codomain: FiniteAbelianGroup,
    shape: Vec<u64>,
    candidates: Vec<Vec<GroupElement>>,
    /// stack[t] = index into candidates[t] currently chosen at depth t.
    stack: Vec<usize>,
    images: Vec<GroupElement>,
    done: bool,
}

impl MonoIter {
    fn prefix_injective(&self) -> bool {
        prefix_injective(&self.codomain, &self.shape, &self.images)
    }
}

impl Iterator for MonoIter {
    type Item = Homomorphism;

    fn next(&mut self) -> Option<Homomorphism> {
        if self.done {
            return None;
        }
        let depth_count = self.shape.len();
        // Empty basis: the unique (vacuously injective) hom.
        if depth_count == 0 {
            self.done = true;
            return Some(Homomorphism::new_unchecked(
                self.domain.clone(),
                self.codomain.clone(),
                Vec::new(),
            ));
        }
        // On re-entry after a yield, advance the deepest slot.
        let mut advancing = self.stack.len() == depth_count;
        loop {
            if advancing {
                // Pop exhausted depths, stepping the candidate index.
                loop {
                    match self.stack.pop() {
                        None => {
                            self.done = true;
                            return None;
                        }
                        Some(i) => {
                            self.images.pop();
                            if i + 1 < self.candidates[self.stack.len()].len() {
                                self.stack.push(i + 1);
                                self.images
                                    .push(self.candidates[self.stack.len() - 1][i + 1].clone());
                                break;
                            }
                        }
                    }
                }
                advancing = false;
            } else {
                let t = self.stack.len();
                if self.candidates[t].is_empty() {
                    advancing = true;
                    continue;
                }
                self.stack.push(0);
                self.images.push(self.candidates[t][0].clone());
            }
            if !self.prefix_injective() {
                advancing = true;
                continue;
            }
            if self.stack.len() == depth_count {
                return Some(Homomorphism::new_unchecked(
                    self.domain.clone(),
                    self.codomain.clone(),
                    self.images.clone(),
                ));
            }
        }
    }
}

/// All endomorphisms of G.
pub fn enumerate_endos(g: &FiniteAbelianGroup) -> impl Iterator<Item = Homomorphism> {
    enumerate_homs(&full_subgroup(g), g)
}

/// All automorphisms of G: injective endomorphisms are bijective on a finite
/// group, so these are exactly the monos from the full subgroup.
pub fn enumerate_autos(g: &FiniteAbelianGroup) -> impl Iterator<Item = Homomorphism> {
    enumerate_monos(&full_subgroup(g), g)
}

/// Injective endomorphisms found by filtering the full endomorphism stream
/// through the kernel test. Mathematically this equals `enumerate_autos`;
/// the two independent routes are compared in tests.
pub fn enumerate_monic_endos(g: &FiniteAbelianGroup) -> impl Iterator<Item = Homomorphism> {
    enumerate_endos(g).filter(Homomorphism::is_injective)
}

/// One primary component of G: an abstract p-group together with its
/// embedding onto the subgroup of p-power-order elements.
#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    pub prime: u64,
    pub group: FiniteAbelianGroup,
    pub component: Subgroup,
    pub embedding: Homomorphism,
}

/// Splits G into its primary components; the embeddings send the standard
/// generators of the abstract p-group onto p-power-order generators inside G.
pub fn primary_decomposition(g: &FiniteAbelianGroup) -> Vec<PrimaryComponent> {
    let mut out = Vec::new();
    for (&p, entries) in g.primary() {
        let factors: Vec<u64> = entries.iter().map(|&(_, e)| p.pow(e)).collect();
        debug_assert!(factors.windows(2).all(|w| w[1] % w[0] == 0));
        let abstract_group = FiniteAbelianGroup::from_canonical_factors(factors.clone());
        let images: Vec<GroupElement> = entries
            .iter()
            .map(|&(i, e)| {
                let d = g.factors()[i];
                g.smul((d / p.pow(e)) as i64, &g.standard_generator(i))
            })
            .collect();
        let component = span(g, &images);
        let embedding = Homomorphism::new(full_subgroup(&abstract_group), g.clone(), images)
            .expect("generator orders match by construction");
        debug_assert!(embedding.is_injective());
        debug_assert_eq!(component.order(), abstract_group.order());
        out.push(PrimaryComponent { prime: p, group: abstract_group, component, embedding });
    }
    out
}

/// The unique zero subgroup map H -> G restricted from nothing; useful as a
/// neutral element when folding images.
pub fn zero_restriction(g: &FiniteAbelianGroup) -> Homomorphism {
    zero_hom(&zero_subgroup(g), g)
}

/// Every codomain element occurring as a basis image of SOME injective map
/// domain -> codomain, across all basis slots. The union of the images of
/// all monomorphisms equals the span of this list, since each mono's image
/// is spanned by its basis images and each listed element belongs to one
/// mono's image.
pub fn realizable_mono_images(
    domain: &Subgroup,
    codomain: &FiniteAbelianGroup,
) -> Vec<GroupElement> {
    let shape = domain.shape().to_vec();
    let candidates: Vec<Vec<GroupElement>> =
        shape.iter().map(|&o| exact_order_candidates(codomain, o)).collect();
    let mut found: std::collections::BTreeSet<GroupElement> = std::collections::BTreeSet::new();
    for pinned_slot in 0..shape.len() {
        for y in &candidates[pinned_slot] {
            if found.contains(y) {
                // Already witnessed at another slot; a second witness would
                // not enlarge the span.
                continue;
            }
            let mut images: Vec<GroupElement> = Vec::with_capacity(shape.len());
            if complete_mono(codomain, &shape, &candidates, pinned_slot, y, &mut images) {
                found.insert(y.clone());
            }
        }
    }
    found.into_iter().collect()
}

/// Depth-first search for any injective completion with slot `pinned_slot`
/// forced to `pin`; slots are filled in order with the usual prefix pruning.
fn complete_mono(
    codomain: &FiniteAbelianGroup,
    shape: &[u64],
    candidates: &[Vec<GroupElement>],
    pinned_slot: usize,
    pin: &GroupElement,
    images: &mut Vec<GroupElement>,
) -> bool {
    let t = images.len();
    if t == shape.len() {
        return true;
    }
    let pool: &[GroupElement] =
        if t == pinned_slot { std::slice::from_ref(pin) } else { &candidates[t] };
    for y in pool {
        images.push(y.clone());
        if prefix_injective(codomain, shape, images)
            && complete_mono(codomain, shape, candidates, pinned_slot, pin, images)
        {
            return true;
        }
        images.pop();
    }
    false
}

/// First homomorphism (in enumeration order) sending each pair's left-hand
/// element to its right-hand element; None if no homomorphism does.
pub fn find_hom_matching(
    domain: &Subgroup,
    codomain: &FiniteAbelianGroup,
    constraints: &[(GroupElement, GroupElement)],
) -> Option<Homomorphism> {
    enumerate_homs(domain, codomain).find(|f| {
        constraints.iter().all(|(x, y)| f.try_apply(x).as_ref() == Some(y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn elt(g: &FiniteAbelianGroup, coeffs: &[u64]) -> GroupElement {
        g.element(coeffs).unwrap()
    }

    #[test]
    fn construction_validates_orders() {
        let g = make_group(&[2, 4]).unwrap();
        let h = span(&g, &[elt(&g, &[1, 0])]); // Z2
        // Image of order 4 cannot receive a generator of order 2.
        assert!(Homomorphism::new(h.clone(), g.clone(), vec![elt(&g, &[0, 1])]).is_err());
        assert!(Homomorphism::new(h.clone(), g.clone(), vec![elt(&g, &[0, 2])]).is_ok());
        assert!(Homomorphism::new(h, g.clone(), vec![]).is_err());
    }

    #[test]
    fn apply_image_kernel() {
        let g = make_group(&[2, 4]).unwrap();
        let full = full_subgroup(&g);
        // f(e1) = (0,2), f(e2) = (1,1).
        let f = Homomorphism::new(full, g.clone(), vec![elt(&g, &[0, 2]), elt(&g, &[1, 1])])
            .unwrap();
        assert_eq!(f.apply(&elt(&g, &[1, 1])), elt(&g, &[1, 3]));
        assert_eq!(f.apply(&g.zero()), g.zero());
        assert!(f.image().order() == 4);
        // Kernel: f(a,b) = (b, 2a+b); zero iff b=0 mod 2-part... brute check.
        let ker = f.kernel();
        for x in g.elements() {
            assert_eq!(ker.contains(&x), f.apply(&x).is_zero());
        }
        assert_eq!(f.is_injective(), ker.is_zero());
    }

    #[test]
    fn identity_and_zero() {
        let g = make_group(&[2, 4, 8]).unwrap();
        let id = identity_endo(&g);
        for x in g.elements().into_iter().take(16) {
            assert_eq!(id.apply(&x), x);
        }
        assert!(id.is_injective() && id.is_surjective());
        let z = zero_hom(&full_subgroup(&g), &g);
        assert!(z.is_zero());
        assert_eq!(z.kernel(), full_subgroup(&g));
    }

    #[test]
    fn hom_counts_match_formula() {
        for factors in [vec![2, 4], vec![2, 2, 2], vec![6], vec![2, 12]] {
            let g = make_group(&factors).unwrap();
            let full = full_subgroup(&g);
            let counted = enumerate_homs(&full, &g).count() as u64;
            assert_eq!(counted, count_homs(full.shape(), &g), "endos of {g}");
        }
        // Cross-group. Hom(Z2 x Z4, Z8): gcd table = (2) * (4) = 8.
        let a = make_group(&[2, 4]).unwrap();
        let b = make_group(&[8]).unwrap();
        assert_eq!(count_homs(full_subgroup(&a).shape(), &b), 8);
        assert_eq!(enumerate_homs(&full_subgroup(&a), &b).count(), 8);
    }

    #[test]
    fn homs_are_lexicographic_and_distinct() {
        let g = make_group(&[2, 4]).unwrap();
        let tuples: Vec<Vec<GroupElement>> =
            enumerate_homs(&full_subgroup(&g), &g).map(|f| f.images().to_vec()).collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(tuples, sorted, "stream must already be sorted and duplicate-free");
    }

    #[test]
    fn monos_agree_with_filtered_homs() {
        let cases = [(vec![2, 4], vec![2, 4, 8]), (vec![2, 2], vec![2, 4]), (vec![3], vec![3, 9])];
        for (hf, gf) in cases {
            let h_group = make_group(&hf).unwrap();
            let g = make_group(&gf).unwrap();
            let h = full_subgroup(&h_group);
            let filtered: Vec<Vec<GroupElement>> = enumerate_homs(&h, &g)
                .filter(Homomorphism::is_injective)
                .map(|f| f.images().to_vec())
                .collect();
            let direct: Vec<Vec<GroupElement>> =
                enumerate_monos(&h, &g).map(|f| f.images().to_vec()).collect();
            assert_eq!(direct, filtered, "{h_group} into {g}");
        }
    }

    #[test]
    fn mono_count_example() {
        // Z2 -> Z2 x Z4 has 3 elements of order 2 to hit, hence 3 monos.
        let h_amb = make_group(&[2]).unwrap();
        let g = make_group(&[2, 4]).unwrap();
        assert_eq!(enumerate_monos(&full_subgroup(&h_amb), &g).count(), 3);
        // Nothing of order 8 in Z2 x Z4.
        let big = make_group(&[8]).unwrap();
        assert_eq!(enumerate_monos(&full_subgroup(&big), &g).count(), 0);
    }

    #[test]
    fn auto_counts() {
        // |Aut(Z2 x Z2)| = |GL(2, F2)| = 6; |End| = 16.
        let g = make_group(&[2, 2]).unwrap();
        assert_eq!(enumerate_endos(&g).count(), 16);
        assert_eq!(enumerate_autos(&g).count(), 6);
        let a: Vec<Vec<GroupElement>> =
            enumerate_autos(&g).map(|f| f.images().to_vec()).collect();
        let m: Vec<Vec<GroupElement>> =
            enumerate_monic_endos(&g).map(|f| f.images().to_vec()).collect();
        assert_eq!(a, m, "DFS route and filter route must produce the same stream");
        // |Aut(Z_n)| = phi(n) on cyclic groups.
        for (n, phi) in [(2u64, 1usize), (3, 2), (4, 2), (6, 2), (8, 4), (12, 4)] {
            let c = make_group(&[n]).unwrap();
            assert_eq!(enumerate_autos(&c).count(), phi, "Aut(Z{n})");
        }
        // Automorphisms of Z2 x Z4: order 8 group, |Aut| = 8.
        let g24 = make_group(&[2, 4]).unwrap();
        assert_eq!(enumerate_autos(&g24).count(), 8);
        assert!(enumerate_autos(&g24).all(|f| f.is_injective() && f.is_surjective()));
    }

    #[test]
    fn compose_and_restrict() {
        let g = make_group(&[2, 4]).unwrap();
        let full = full_subgroup(&g);
        let f = Homomorphism::new(
            full.clone(),
            g.clone(),
            vec![elt(&g, &[0, 2]), elt(&g, &[1, 1])],
        )
        .unwrap();
        let ff = f.compose(&f).unwrap();
        for x in g.elements() {
            assert_eq!(ff.apply(&x), f.apply(&f.apply(&x)));
        }
        let h = span(&g, &[elt(&g, &[0, 2]), elt(&g, &[1, 0])]);
        let r = f.restrict(&h).unwrap();
        for x in h.elements() {
            assert_eq!(r.apply(&x), f.apply(&x));
        }
        assert!(f.restrict(&full).is_ok());
        // Restriction to a non-subset is rejected: h is not inside ker(f).
        let ker = f.kernel();
        assert!(inclusion(&h).restrict(&ker).is_err() || ker.is_subset_of(&h));
    }

    #[test]
    fn primary_decomposition_splits() {
        let g = make_group(&[2, 12]).unwrap();
        let comps = primary_decomposition(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].prime, 2);
        assert_eq!(comps[0].group.factors(), &[2, 4]);
        assert_eq!(comps[1].prime, 3);
        assert_eq!(comps[1].group.factors(), &[3]);
        let total: u64 = comps.iter().map(|c| c.component.order()).product();
        assert_eq!(total, g.order());
        // Components intersect trivially and sum to G.
        let s = crate::subgroup::sum(&comps[0].component, &comps[1].component);
        assert!(s.is_full());
        assert!(crate::subgroup::intersect(&comps[0].component, &comps[1].component).is_zero());
        // Embedding preserves orders.
        for c in &comps {
            for x in c.group.elements() {
                let y = c.embedding.apply(&x);
                assert_eq!(c.group.order_of(&x), g.order_of(&y));
            }
        }
    }

    #[test]
    fn realizable_images_span_the_union_of_mono_images() {
        let cases = [
            (vec![2], vec![2, 4]),
            (vec![2, 2], vec![2, 4]),
            (vec![2, 4], vec![2, 4, 8]),
            (vec![3], vec![3, 9]),
            (vec![4], vec![2, 2]), // no monos at all
        ];
        for (hf, gf) in cases {
            let h_amb = make_group(&hf).unwrap();
            let g = make_group(&gf).unwrap();
            let h = full_subgroup(&h_amb);
            let fast = span(&g, &realizable_mono_images(&h, &g));
            let mut gens: Vec<GroupElement> = Vec::new();
            for f in enumerate_monos(&h, &g) {
                gens.extend(f.images().iter().cloned());
            }
            let literal = span(&g, &gens);
            assert_eq!(fast, literal, "{h_amb} into {g}");
        }
    }

    #[test]
    fn find_hom_by_constraints() {
        let g = make_group(&[2, 4]).unwrap();
        let h = span(&g, &[elt(&g, &[1, 0]), elt(&g, &[0, 2])]);
        // Swap the two order-2 generators.
        let f = find_hom_matching(
            &h,
            &g,
            &[(elt(&g, &[1, 0]), elt(&g, &[0, 2])), (elt(&g, &[0, 2]), elt(&g, &[1, 0]))],
        )
        .unwrap();
        assert_eq!(f.apply(&elt(&g, &[1, 2])), elt(&g, &[1, 2]));
        // Impossible constraint: order would have to grow.
        assert!(find_hom_matching(&h, &g, &[(elt(&g, &[1, 0]), elt(&g, &[0, 1]))]).is_none());
    }

    #[test]
    fn trivial_domain_has_one_hom() {
        let g = make_group(&[2, 4]).unwrap();
        let z = zero_subgroup(&g);
        assert_eq!(enumerate_homs(&z, &g).count(), 1);
        assert_eq!(enumerate_monos(&z, &g).count(), 1);
        let f = zero_restriction(&g);
        assert!(f.is_injective());
        assert_eq!(f.apply(&g.zero()), g.zero());
    }
}

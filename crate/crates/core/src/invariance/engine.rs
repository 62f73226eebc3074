//! The five invariance predicates and the two socle operators.
//!
//! Every predicate is a quantification "f(H) <= H for all f in a class of
//! maps"; the generic scanner walks the class in its deterministic
//! enumeration order and stops at the first escaping map, which becomes the
//! witness. The same scanner drives both abelian groups (this module) and
//! table-presented ring modules.

use crate::group::FiniteAbelianGroup;
use crate::hom::{
    enumerate_autos, enumerate_endos, enumerate_homs, enumerate_monos, realizable_mono_images,
    Homomorphism,
};
use crate::subgroup::{full_subgroup, n_socle, span, sum, Subgroup};

/// Outcome of one invariance quantification: either the property holds, or
/// `witness` is the first map in enumeration order that moves the subobject
/// outside itself.
#[derive(Clone, Debug)]
pub struct FlagWitness<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> FlagWitness<W> {
    pub fn pass() -> Self {
        FlagWitness { holds: true, witness: None }
    }

    pub fn fail(witness: W) -> Self {
        FlagWitness { holds: false, witness: Some(witness) }
    }
}

/// Scans a stream of maps for the first one escaping the invariance
/// condition. Shared by the abelian and ring-module worlds.
pub fn invariance_scan<W, I, E>(maps: I, mut escapes: E) -> FlagWitness<W>
where
    I: IntoIterator<Item = W>,
    E: FnMut(&W) -> bool,
{
    for f in maps {
        if escapes(&f) {
            return FlagWitness::fail(f);
        }
    }
    FlagWitness::pass()
}

/// The five invariance flags, in chart order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct InvarianceFlags {
    pub fully_invariant: bool,
    pub strongly_invariant: bool,
    pub strictly_invariant: bool,
    pub injective_invariant: bool,
    pub characteristic: bool,
}

/// The implication chart: names of violated implications (empty when
/// consistent). strongly implies fully and strictly; fully and strictly each
/// imply injective-invariant; injective-invariant implies characteristic.
pub fn chart_violations(flags: &InvarianceFlags) -> Vec<&'static str> {
    let mut out = Vec::new();
    let implications: [(&'static str, bool, bool); 5] = [
        ("strongly => fully", flags.strongly_invariant, flags.fully_invariant),
        ("strongly => strictly", flags.strongly_invariant, flags.strictly_invariant),
        ("fully => injective", flags.fully_invariant, flags.injective_invariant),
        ("strictly => injective", flags.strictly_invariant, flags.injective_invariant),
        ("injective => characteristic", flags.injective_invariant, flags.characteristic),
    ];
    for (name, premise, conclusion) in implications {
        if premise && !conclusion {
            out.push(name);
        }
    }
    out
}

/// H = 0 and H = G are invariant under every map class (vacuously or because
/// every image lands in G).
fn trivially_invariant(h: &Subgroup) -> bool {
    h.is_zero() || h.is_full()
}

/// Does the endomorphism move some element of H outside H? It suffices to
/// test the basis of H: f(H) is spanned by the f(b).
fn endo_escapes<'a>(h: &'a Subgroup) -> impl FnMut(&Homomorphism) -> bool + 'a {
    move |f| h.basis().iter().any(|b| !h.contains(&f.apply(b)))
}

/// For maps whose domain is H itself, the basis images are stored directly.
fn own_map_escapes<'a>(h: &'a Subgroup) -> impl FnMut(&Homomorphism) -> bool + 'a {
    move |f| f.images().iter().any(|img| !h.contains(img))
}

/// Invariance under all endomorphisms of G.
pub fn is_fully_invariant(g: &FiniteAbelianGroup, h: &Subgroup) -> FlagWitness<Homomorphism> {
    assert_eq!(h.ambient(), g);
    if trivially_invariant(h) {
        return FlagWitness::pass();
    }
    invariance_scan(enumerate_endos(g), endo_escapes(h))
}

/// Invariance under all automorphisms of G.
pub fn is_characteristic(g: &FiniteAbelianGroup, h: &Subgroup) -> FlagWitness<Homomorphism> {
    assert_eq!(h.ambient(), g);
    if trivially_invariant(h) {
        return FlagWitness::pass();
    }
    invariance_scan(enumerate_autos(g), endo_escapes(h))
}

/// Invariance under all injective endomorphisms of G. The stream below
/// enumerates exactly the injective self-maps (depth-first with injectivity
/// pruning); on a finite group that class coincides with Aut(G), so this
/// predicate and `is_characteristic` must agree — asserted where both are
/// computed, and the stream equality itself is pinned by tests.
pub fn is_injective_invariant(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
) -> FlagWitness<Homomorphism> {
    assert_eq!(h.ambient(), g);
    if trivially_invariant(h) {
        return FlagWitness::pass();
    }
    invariance_scan(enumerate_monos(&full_subgroup(g), g), endo_escapes(h))
}

/// Invariance under every injective homomorphism H -> G, by exhaustive
/// enumeration. Ground truth for the structural classifier.
pub fn is_strictly_invariant_brute(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
) -> FlagWitness<Homomorphism> {
    assert_eq!(h.ambient(), g);
    if trivially_invariant(h) {
        return FlagWitness::pass();
    }
    invariance_scan(enumerate_monos(h, g), own_map_escapes(h))
}

/// Invariance under every homomorphism H -> G, by exhaustive enumeration.
pub fn is_strongly_invariant_brute(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
) -> FlagWitness<Homomorphism> {
    assert_eq!(h.ambient(), g);
    if trivially_invariant(h) {
        return FlagWitness::pass();
    }
    invariance_scan(enumerate_homs(h, g), own_map_escapes(h))
}

/// Fast strict-invariance decision through the structural classifier
/// (H is strictly invariant iff every p-part is a p-power socle of G); a
/// negative verdict is backed by the first violating monomorphism from the
/// brute-force stream.
pub fn is_strictly_invariant(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
) -> FlagWitness<Homomorphism> {
    assert_eq!(h.ambient(), g);
    if trivially_invariant(h) {
        return FlagWitness::pass();
    }
    if super::classify::classify_strict(g, h).strictly_invariant {
        return FlagWitness::pass();
    }
    let brute = is_strictly_invariant_brute(g, h);
    assert!(
        !brute.holds,
        "classifier rejected a subgroup the exhaustive search accepts: {h:?}"
    );
    brute
}

/// Fast strong-invariance decision. For finite (hence torsion) groups,
/// strictly invariant and strongly invariant coincide — the containment
/// strongly => strictly is definitional, and the converse holds because
/// every strictly invariant part is a sum of p-power socles, each stable
/// under arbitrary homomorphisms (orders can only divide). A negative
/// verdict is backed by the first violating homomorphism.
pub fn is_strongly_invariant(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
) -> FlagWitness<Homomorphism> {
    assert_eq!(h.ambient(), g);
    if trivially_invariant(h) {
        return FlagWitness::pass();
    }
    if super::classify::classify_strict(g, h).strictly_invariant {
        return FlagWitness::pass();
    }
    let brute = is_strongly_invariant_brute(g, h);
    assert!(
        !brute.holds,
        "classifier rejected a subgroup stable under all homomorphisms: {h:?}"
    );
    brute
}

/// All five flags at once. `brute` switches the strict/strong legs to the
/// exhaustive streams (the classifier is skipped entirely).
pub fn invariance_flags(
    g: &FiniteAbelianGroup,
    h: &Subgroup,
    brute: bool,
) -> (InvarianceFlags, Witnesses) {
    let fully = is_fully_invariant(g, h);
    let characteristic = is_characteristic(g, h);
    let injective = is_injective_invariant(g, h);
    let (strictly, strongly) = if brute {
        (is_strictly_invariant_brute(g, h), is_strongly_invariant_brute(g, h))
    } else {
        (is_strictly_invariant(g, h), is_strongly_invariant(g, h))
    };
    debug_assert_eq!(
        injective.holds, characteristic.holds,
        "on a finite group, injective endomorphisms are exactly the automorphisms"
    );
    let flags = InvarianceFlags {
        fully_invariant: fully.holds,
        strongly_invariant: strongly.holds,
        strictly_invariant: strictly.holds,
        injective_invariant: injective.holds,
        characteristic: characteristic.holds,
    };
    let witnesses = Witnesses {
        fully_invariant: fully.witness,
        strongly_invariant: strongly.witness,
        strictly_invariant: strictly.witness,
        injective_invariant: injective.witness,
        characteristic: characteristic.witness,
    };
    (flags, witnesses)
}

/// First violating map per property; always carries all five keys (null for
/// properties that hold) so the JSON shape is stable.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Witnesses {
    pub fully_invariant: Option<Homomorphism>,
    pub strongly_invariant: Option<Homomorphism>,
    pub strictly_invariant: Option<Homomorphism>,
    pub injective_invariant: Option<Homomorphism>,
    pub characteristic: Option<Homomorphism>,
}

/// Sum of the images of all monomorphisms K -> G: the smallest strictly
/// invariant subgroup containing K. Computed from the set of realizable
/// basis images, whose span equals the full union of mono images.
pub fn mono_socle(g: &FiniteAbelianGroup, k: &Subgroup) -> Subgroup {
    assert_eq!(k.ambient(), g);
    if k.is_zero() || k.is_full() {
        return k.clone();
    }
    let mut gens = k.canonical_generators();
    gens.extend(realizable_mono_images(k, g));
    span(g, &gens)
}

/// Literal fold of `image(f)` over every monomorphism; cross-checks
/// `mono_socle` in tests.
pub fn mono_socle_literal(g: &FiniteAbelianGroup, k: &Subgroup) -> Subgroup {
    assert_eq!(k.ambient(), g);
    let mut acc = k.clone();
    for f in enumerate_monos(k, g) {
        if f.images().iter().any(|img| !acc.contains(img)) {
            acc = sum(&acc, &f.image());
            if acc.is_full() {
                break;
            }
        }
    }
    acc
}

/// Sum of the images of all homomorphisms from N (a subgroup of any ambient
/// group) into A.
pub fn hom_socle(a: &FiniteAbelianGroup, n: &Subgroup) -> Subgroup {
    hom_socle_of_exponent(a, n.shape().last().copied().unwrap_or(1))
}

/// Same, with N given as an abstract group.
pub fn hom_socle_of_group(a: &FiniteAbelianGroup, n: &FiniteAbelianGroup) -> Subgroup {
    hom_socle_of_exponent(a, n.exponent())
}

/// S_A(N) = A[exp N]: every hom image is killed by exp N, and every element
/// x with that bound is hit by the hom sending a maximal-order generator of
/// N to x. Cross-checked against the literal fold in tests.
fn hom_socle_of_exponent(a: &FiniteAbelianGroup, exponent: u64) -> Subgroup {
    n_socle(a, exponent)
}

/// Literal fold of hom images; cross-checks `hom_socle` in tests.
pub fn hom_socle_literal(a: &FiniteAbelianGroup, n: &Subgroup) -> Subgroup {
    let mut acc = crate::subgroup::zero_subgroup(a);
    for f in enumerate_homs(n, a) {
        if f.images().iter().any(|img| !acc.contains(img)) {
            acc = sum(&acc, &f.image());
            if acc.is_full() {
                break;
            }
        }
    }
    acc
}

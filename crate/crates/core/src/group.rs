//! Finite abelian groups in invariant-factor form and their elements.
//!
//! A group is a divisibility chain d1 | d2 | ... | dk (each >= 2); the trivial
//! group is the empty chain. Elements are residue vectors, one coordinate per
//! factor. Two groups are isomorphic exactly when their chains are equal.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use once_cell::sync::OnceCell;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    coeffs: Vec<u64>,
}

impl GroupElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub(crate) fn from_coeffs(coeffs: Vec<u64>) -> Self {
        GroupElement { coeffs }
    }
}

/// p-height of an element: the largest n with x in p^n G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Height {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(n) => write!(f, "{n}"),
            Height::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    factors: Vec<u64>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GroupJson", into = "GroupJson")]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    /// prime -> (coordinate, exponent of prime in that factor), exponent > 0.
    #[allow(clippy::type_complexity)]
    primary: OnceCell<BTreeMap<u64, Vec<(usize, u32)>>>,
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAbelianGroup({:?})", self.factors)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            write!(f, "0")
        } else {
            let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for FiniteAbelianGroup {}

impl std::hash::Hash for FiniteAbelianGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
    }
}

impl PartialOrd for FiniteAbelianGroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteAbelianGroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.factors).cmp(&(other.order(), &other.factors))
    }
}

impl TryFrom<GroupJson> for FiniteAbelianGroup {
    type Error = Error;

    fn try_from(j: GroupJson) -> Result<Self> {
        if !is_divisibility_chain(&j.factors) {
            return Err(Error::InvalidInput(format!(
                "factors {:?} are not a divisibility chain of integers >= 2",
                j.factors
            )));
        }
        Ok(FiniteAbelianGroup { factors: j.factors, primary: OnceCell::new() })
    }
}

impl From<FiniteAbelianGroup> for GroupJson {
    fn from(g: FiniteAbelianGroup) -> GroupJson {
        GroupJson { factors: g.factors }
    }
}

fn is_divisibility_chain(factors: &[u64]) -> bool {
    factors.iter().all(|&d| d >= 2) && factors.windows(2).all(|w| w[1] % w[0] == 0)
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Canonicalize an arbitrary factor list into invariant factors by regrouping
/// prime powers: the j-th largest invariant factor takes the j-th largest
/// p-exponent of every prime.
pub fn make_group(factors: &[u64]) -> Result<FiniteAbelianGroup> {
    let (group, _) = make_group_with_regrouping(factors)?;
    Ok(group)
}

/// Prime-power slot: a factor `p^e` of input coordinate `source`, assigned to
/// canonical coordinate `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePowerSlot {
    pub prime: u64,
    pub exponent: u32,
    pub source: usize,
    pub target: usize,
}

/// `make_group` plus the CRT bookkeeping needed to embed each input coordinate
/// into the canonical group (used by direct sums).
pub fn make_group_with_regrouping(
    factors: &[u64],
) -> Result<(FiniteAbelianGroup, Vec<PrimePowerSlot>)> {
    if factors.contains(&0) {
        return Err(Error::InvalidInput("group factor 0".into()));
    }
    let mut by_prime: BTreeMap<u64, Vec<(u32, usize)>> = BTreeMap::new();
    for (i, &f) in factors.iter().enumerate() {
        for (p, e) in factorize(f) {
            by_prime.entry(p).or_default().push((e, i));
        }
    }
    // Sort each prime's exponents descending; slot j (0-based, largest first)
    // goes to the j-th largest canonical factor.
    let width = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut canonical = vec![1u64; width];
    let mut slots = Vec::new();
    for (&p, exps) in by_prime.iter_mut() {
        exps.sort_by(|a, b| b.cmp(a));
        for (j, &(e, source)) in exps.iter().enumerate() {
            let q = p
                .checked_pow(e)
                .ok_or_else(|| Error::InvalidInput("prime power overflow".into()))?;
            canonical[j] = canonical[j]
                .checked_mul(q)
                .ok_or_else(|| Error::InvalidInput("group order overflow".into()))?;
            slots.push(PrimePowerSlot { prime: p, exponent: e, source, target: j });
        }
    }
    canonical.reverse();
    // targets were indexed largest-first; flip to match ascending order
    for s in &mut slots {
        s.target = width - 1 - s.target;
    }
    debug_assert!(is_divisibility_chain(&canonical));
    let group = FiniteAbelianGroup { factors: canonical, primary: OnceCell::new() };
    Ok((group, slots))
}

/// Parse a "2x4x8" style literal. A factor of 1 is allowed and dropped by
/// canonicalization, so "1" names the trivial group.
pub fn parse_group_literal(s: &str) -> Result<FiniteAbelianGroup> {
    let factors: Vec<u64> = s
        .split('x')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("bad group literal component {part:?}")))
        })
        .collect::<Result<_>>()?;
    if factors.contains(&0) {
        return Err(Error::InvalidInput("group literal factors must be >= 1".into()));
    }
    make_group(&factors)
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new(), primary: OnceCell::new() }
    }

    pub(crate) fn from_canonical_factors(factors: Vec<u64>) -> Self {
        debug_assert!(is_divisibility_chain(&factors));
        FiniteAbelianGroup { factors, primary: OnceCell::new() }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Least n with nG = 0; 1 for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn primes(&self) -> Vec<u64> {
        self.primary().keys().copied().collect()
    }

    pub(crate) fn primary(&self) -> &BTreeMap<u64, Vec<(usize, u32)>> {
        self.primary.get_or_init(|| {
            let mut map: BTreeMap<u64, Vec<(usize, u32)>> = BTreeMap::new();
            for (i, &d) in self.factors.iter().enumerate() {
                for (p, e) in factorize(d) {
                    map.entry(p).or_default().push((i, e));
                }
            }
            map
        })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coeffs: vec![0; self.factors.len()] }
    }

    /// Coefficients are reduced modulo the corresponding factors.
    pub fn element(&self, coeffs: &[u64]) -> Result<GroupElement> {
        if coeffs.len() != self.factors.len() {
            return Err(Error::InvalidInput(format!(
                "element has {} coordinates, group has rank {}",
                coeffs.len(),
                self.factors.len()
            )));
        }
        Ok(GroupElement {
            coeffs: coeffs.iter().zip(&self.factors).map(|(&c, &d)| c % d).collect(),
        })
    }

    pub fn standard_generator(&self, i: usize) -> GroupElement {
        let mut coeffs = vec![0; self.factors.len()];
        coeffs[i] = 1;
        GroupElement { coeffs }
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .zip(&self.factors)
                .map(|((&a, &b), &d)| (a + b) % d)
                .collect(),
        }
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        GroupElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&self.factors)
                .map(|(&a, &d)| if a == 0 { 0 } else { d - a })
                .collect(),
        }
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    pub fn smul(&self, c: i64, x: &GroupElement) -> GroupElement {
        GroupElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&self.factors)
                .map(|(&a, &d)| {
                    let m = c.rem_euclid(d as i64) as u64;
                    (m * a) % d
                })
                .collect(),
        }
    }

    pub fn order_of(&self, x: &GroupElement) -> u64 {
        self.factors
            .iter()
            .zip(&x.coeffs)
            .map(|(&d, &c)| d / d.gcd(&c))
            .fold(1u64, |acc, o| acc.lcm(&o))
    }

    /// Membership of x in p^n G: per coordinate, gcd(p^n, d_i) must divide x_i.
    /// Callers bound n by the largest p-exponent of the factors, so p^n fits.
    fn in_p_power(&self, x: &GroupElement, p: u64, n: u32) -> bool {
        let pn = p.checked_pow(n).expect("p^n bounded by a group factor");
        self.factors.iter().zip(&x.coeffs).all(|(&d, &c)| c % pn.gcd(&d) == 0)
    }

    pub fn p_height(&self, x: &GroupElement, p: u64) -> Height {
        let vmax = self
            .primary()
            .get(&p)
            .map(|v| v.iter().map(|&(_, e)| e).max().unwrap_or(0))
            .unwrap_or(0);
        if self.in_p_power(x, p, vmax) {
            // x lies in p^vmax G = p^n G for all larger n.
            return Height::Infinite;
        }
        let mut h = 0;
        while self.in_p_power(x, p, h + 1) {
            h += 1;
        }
        Height::Finite(h)
    }

    /// All elements in lexicographic coefficient order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        MixedRadixCounter::new(self.factors.clone()).map(GroupElement::from_coeffs)
    }
}

/// Counts vectors with per-coordinate radices in lexicographic order
/// (last coordinate fastest). Yields the zero vector first; for an empty
/// radix list yields exactly one empty vector.
pub(crate) struct MixedRadixCounter {
    radices: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl MixedRadixCounter {
    pub(crate) fn new(radices: Vec<u64>) -> Self {
        let next =
            if radices.iter().any(|&r| r == 0) { None } else { Some(vec![0; radices.len()]) };
        MixedRadixCounter { radices, next }
    }
}

impl Iterator for MixedRadixCounter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.clone()?;
        let mut bumped = current.clone();
        let mut i = self.radices.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            bumped[i] += 1;
            if bumped[i] < self.radices[i] {
                self.next = Some(bumped);
                break;
            }
            bumped[i] = 0;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_mixed_factors() {
        assert_eq!(make_group(&[6, 4]).unwrap().factors(), &[2, 12]);
        assert_eq!(make_group(&[2, 4, 8]).unwrap().factors(), &[2, 4, 8]);
        assert_eq!(make_group(&[12, 18]).unwrap().factors(), &[6, 36]);
        assert_eq!(make_group(&[5, 3, 2]).unwrap().factors(), &[30]);
        assert_eq!(make_group(&[1, 1]).unwrap().factors(), &[] as &[u64]);
        assert_eq!(make_group(&[]).unwrap().factors(), &[] as &[u64]);
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(parse_group_literal("2x4x8").unwrap().factors(), &[2, 4, 8]);
        assert!(parse_group_literal("1").unwrap().factors().is_empty());
        assert_eq!(parse_group_literal("1x6").unwrap().factors(), &[6]);
        assert!(parse_group_literal("2x").is_err());
        assert!(parse_group_literal("0x2").is_err());
        assert!(parse_group_literal("abc").is_err());
    }

    #[test]
    fn element_orders() {
        let g = make_group(&[2, 4, 8]).unwrap();
        assert_eq!(g.order_of(&g.zero()), 1);
        assert_eq!(g.order_of(&g.element(&[1, 0, 0]).unwrap()), 2);
        assert_eq!(g.order_of(&g.element(&[0, 2, 0]).unwrap()), 2);
        assert_eq!(g.order_of(&g.element(&[1, 0, 2]).unwrap()), 4);
        assert_eq!(g.order_of(&g.element(&[1, 1, 1]).unwrap()), 8);
        assert_eq!(g.order_of(&g.element(&[0, 3, 0]).unwrap()), 4);
    }

    #[test]
    fn element_order_counts_match_prediction() {
        // Count of elements with order dividing n is prod gcd(n, d_i);
        // exhaustively recount per exact order.
        for factors in [vec![2, 4, 8], vec![6, 36], vec![2, 2, 2], vec![9, 27]] {
            let g = make_group(&factors).unwrap();
            let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
            for x in g.elements() {
                *by_order.entry(g.order_of(&x)).or_default() += 1;
            }
            for n in 1..=g.exponent() {
                let predicted: u64 =
                    g.factors().iter().map(|&d| n.gcd(&d)).product();
                let counted: u64 = by_order
                    .iter()
                    .filter(|&(&o, _)| n % o == 0)
                    .map(|(_, &c)| c)
                    .sum();
                assert_eq!(counted, predicted, "n={n} in {factors:?}");
            }
        }
    }

    #[test]
    fn heights() {
        let g = make_group(&[2, 4, 8]).unwrap();
        assert_eq!(g.p_height(&g.zero(), 2), Height::Infinite);
        assert_eq!(g.p_height(&g.element(&[0, 2, 0]).unwrap(), 2), Height::Finite(1));
        assert_eq!(g.p_height(&g.element(&[1, 0, 0]).unwrap(), 2), Height::Finite(0));
        assert_eq!(g.p_height(&g.element(&[0, 0, 4]).unwrap(), 2), Height::Finite(2));
        // At a prime not dividing the order, multiplication is bijective.
        assert_eq!(g.p_height(&g.element(&[1, 0, 0]).unwrap(), 3), Height::Infinite);
        let h = make_group(&[12]).unwrap();
        // 4 in Z12 is (0 mod 4, 1 mod 3): zero 2-part, so 2-height infinite.
        assert_eq!(h.p_height(&h.element(&[4]).unwrap(), 2), Height::Infinite);
        assert_eq!(h.p_height(&h.element(&[2]).unwrap(), 2), Height::Finite(1));
        assert_eq!(h.p_height(&h.element(&[4]).unwrap(), 3), Height::Finite(0));
        // 3 in Z12 is (3 mod 4, 0 mod 3): zero 3-part.
        assert_eq!(h.p_height(&h.element(&[3]).unwrap(), 3), Height::Infinite);
    }

    #[test]
    fn arithmetic_and_iteration() {
        let g = make_group(&[2, 4]).unwrap();
        let all: Vec<_> = g.elements().collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]), "elements not in lex order");
        let x = g.element(&[1, 3]).unwrap();
        assert_eq!(g.add(&x, &x).coeffs(), &[0, 2]);
        assert_eq!(g.neg(&x).coeffs(), &[1, 1]);
        assert_eq!(g.smul(-1, &x), g.neg(&x));
        assert_eq!(g.smul(7, &x).coeffs(), g.element(&[7, 21]).unwrap().coeffs());
        let t = FiniteAbelianGroup::trivial();
        assert_eq!(t.elements().count(), 1);
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn json_roundtrip_requires_canonical() {
        let g = make_group(&[2, 4, 8]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"factors":[2,4,8]}"#);
        let back: FiniteAbelianGroup = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<FiniteAbelianGroup>(r#"{"factors":[4,6]}"#).is_err());
        assert!(serde_json::from_str::<FiniteAbelianGroup>(r#"{"factors":[1,2]}"#).is_err());
    }
}

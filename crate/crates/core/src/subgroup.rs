//! Subgroups of a finite abelian group in a canonical normal form.
//!
//! A subgroup H <= G with G = Z/d1 + ... + Z/dk is identified with the full
//! rank lattice L(H) in Z^k of integer vectors reducing into H; L(H) always
//! contains the relation lattice spanned by d_i e_i. The row-style Hermite
//! normal form of L(H) is the canonical key: equal subgroups produce equal
//! matrices no matter which generators were supplied.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use once_cell::sync::OnceCell;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::matrix::IntMatrix;

#[derive(Clone)]
pub struct Subgroup {
    ambient: FiniteAbelianGroup,
    /// k x k upper triangular, positive diagonal, entries above each pivot
    /// reduced into [0, pivot). Row span = L(H).
    hnf: Vec<Vec<u64>>,
    order: u64,
    shape: OnceCell<Vec<u64>>,
    basis: OnceCell<Vec<GroupElement>>,
    coords: OnceCell<HashMap<GroupElement, Vec<u64>>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {:?}, generators {:?})",
            self.order,
            self.ambient,
            self.canonical_generators().iter().map(GroupElement::coeffs).collect::<Vec<_>>()
        )
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.hnf == other.hnf
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.hnf.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient.factors(), self.order, &self.hnf).cmp(&(
            other.ambient.factors(),
            other.order,
            &other.hnf,
        ))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubgroupJson {
    ambient: FiniteAbelianGroup,
    generators: Vec<GroupElement>,
}

impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubgroupJson { ambient: self.ambient.clone(), generators: self.canonical_generators() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subgroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SubgroupJson::deserialize(d)?;
        let gens: Result<Vec<GroupElement>> =
            j.generators.iter().map(|e| j.ambient.element(e.coeffs())).collect();
        let gens = gens.map_err(serde::de::Error::custom)?;
        Ok(span(&j.ambient, &gens))
    }
}

/// Subgroup generated by the given elements.
pub fn span(g: &FiniteAbelianGroup, generators: &[GroupElement]) -> Subgroup {
    let k = g.rank();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(generators.len() + k);
    for x in generators {
        assert_eq!(x.coeffs().len(), k, "generator rank mismatch");
        rows.push(x.coeffs().iter().map(|&c| BigInt::from(c)).collect());
    }
    for (i, &d) in g.factors().iter().enumerate() {
        let mut row = vec![BigInt::zero(); k];
        row[i] = BigInt::from(d);
        rows.push(row);
    }
    let hnf_big = IntMatrix::from_rows(rows).expect("rectangular").hermite_normal_form();
    Subgroup::from_hnf(g.clone(), &hnf_big)
}

pub fn zero_subgroup(g: &FiniteAbelianGroup) -> Subgroup {
    span(g, &[])
}

pub fn full_subgroup(g: &FiniteAbelianGroup) -> Subgroup {
    let gens: Vec<GroupElement> = (0..g.rank()).map(|i| g.standard_generator(i)).collect();
    span(g, &gens)
}

impl Subgroup {
    fn from_hnf(ambient: FiniteAbelianGroup, hnf_big: &IntMatrix) -> Subgroup {
        let k = ambient.rank();
        assert_eq!(hnf_big.rows(), k, "subgroup lattice is not full rank");
        let mut hnf = vec![vec![0u64; k]; k];
        let mut det = 1u64;
        for i in 0..k {
            for j in 0..k {
                let v = hnf_big.at(i, j).to_u64().expect("reduced HNF entry fits u64");
                hnf[i][j] = v;
            }
            debug_assert!((0..i).all(|j| hnf[i][j] == 0), "HNF not upper triangular");
            det *= hnf[i][i];
        }
        let order = ambient.order() / det;
        Subgroup {
            ambient,
            hnf,
            order,
            shape: OnceCell::new(),
            basis: OnceCell::new(),
            coords: OnceCell::new(),
        }
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.ambient
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1
    }

    pub fn is_full(&self) -> bool {
        self.order == self.ambient.order()
    }

    pub(crate) fn hnf_rows(&self) -> &[Vec<u64>] {
        &self.hnf
    }

    /// Nonzero HNF rows reduced modulo the ambient relations.
    pub fn canonical_generators(&self) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for row in &self.hnf {
            let e = self.ambient.element(row).expect("row has ambient rank");
            if !e.is_zero() {
                out.push(e);
            }
        }
        out
    }

    /// Lattice membership by forward substitution against the triangular HNF.
    pub fn contains(&self, x: &GroupElement) -> bool {
        debug_assert_eq!(x.coeffs().len(), self.ambient.rank());
        let mut v: Vec<i128> = x.coeffs().iter().map(|&c| c as i128).collect();
        for i in 0..v.len() {
            let p = self.hnf[i][i] as i128;
            if v[i] % p != 0 {
                return false;
            }
            let q = v[i] / p;
            if q != 0 {
                for j in i..v.len() {
                    let (prod, over1) = (self.hnf[i][j] as i128).overflowing_mul(q);
                    let (diff, over2) = v[j].overflowing_sub(prod);
                    if over1 || over2 {
                        return self.contains_bigint(x);
                    }
                    v[j] = diff;
                }
            }
        }
        true
    }

    fn contains_bigint(&self, x: &GroupElement) -> bool {
        let mut v: Vec<BigInt> = x.coeffs().iter().map(|&c| BigInt::from(c)).collect();
        for i in 0..v.len() {
            let p = BigInt::from(self.hnf[i][i]);
            if !(&v[i] % &p).is_zero() {
                return false;
            }
            let q = &v[i] / &p;
            for j in i..v.len() {
                let t = &v[j] - &q * BigInt::from(self.hnf[i][j]);
                v[j] = t;
            }
        }
        true
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        assert_eq!(self.ambient, other.ambient, "subgroups of different groups");
        self.order <= other.order
            && self.hnf.iter().all(|row| {
                let e = self.ambient.element(row).expect("rank");
                other.contains(&e)
            })
    }

    /// Invariant factors of H as an abstract group (ascending chain).
    pub fn shape(&self) -> &[u64] {
        self.shape_and_basis().0
    }

    /// Independent elements b_1, ..., b_m with H the internal direct sum of
    /// the <b_i> and order(b_i) equal to the i-th invariant factor.
    pub fn basis(&self) -> &[GroupElement] {
        self.shape_and_basis().1
    }

    fn shape_and_basis(&self) -> (&[u64], &[GroupElement]) {
        let shape = self.shape.get_or_init(|| self.compute_shape_basis().0);
        let basis = self.basis.get_or_init(|| self.compute_shape_basis().1);
        (shape, basis)
    }

    /// H = L/D with L the HNF lattice and D the relation lattice. Writing the
    /// relations in the lattice basis (C * B = diag(d)) and diagonalizing C as
    /// U C V = S gives H isomorphic to the direct sum of Z/s_i; the basis
    /// elements are the rows of V^-1 * B at positions with s_i > 1.
    fn compute_shape_basis(&self) -> (Vec<u64>, Vec<GroupElement>) {
        let k = self.ambient.rank();
        let b = IntMatrix::from_rows(
            self.hnf.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        )
        .expect("rectangular");
        let mut c_rows = Vec::with_capacity(k);
        for (i, &d) in self.ambient.factors().iter().enumerate() {
            let mut target = vec![BigInt::zero(); k];
            target[i] = BigInt::from(d);
            let row = solve_row_times_matrix(&b, &target)
                .expect("relation lattice lies inside the subgroup lattice");
            c_rows.push(row);
        }
        let c = IntMatrix::from_rows(c_rows).expect("rectangular");
        let s = c.smith_normal_form();
        let basis_matrix = s.v_inv.mul(&b);
        let mut shape = Vec::new();
        let mut basis = Vec::new();
        for (i, di) in s.d.diagonal().iter().enumerate() {
            let di = di.to_u64().expect("invariant factor fits u64");
            assert!(di >= 1, "relation quotient cannot be infinite");
            if di > 1 {
                shape.push(di);
                let coeffs: Vec<u64> = (0..k)
                    .map(|j| {
                        let m = BigInt::from(self.ambient.factors()[j]);
                        let r = num_integer::Integer::mod_floor(basis_matrix.at(i, j), &m);
                        r.to_u64().expect("reduced coefficient")
                    })
                    .collect();
                basis.push(GroupElement::from_coeffs(coeffs));
            }
        }
        debug_assert_eq!(shape.iter().product::<u64>(), self.order);
        debug_assert!(basis
            .iter()
            .zip(&shape)
            .all(|(e, &o)| self.ambient.order_of(e) == o && self.contains(e)));
        (shape, basis)
    }

    /// All elements, one per coefficient combination over the basis.
    pub fn elements(&self) -> Vec<GroupElement> {
        let (shape, basis) = self.shape_and_basis();
        let mut out = Vec::with_capacity(self.order as usize);
        for combo in crate::group::MixedRadixCounter::new(shape.to_vec()) {
            let mut acc = self.ambient.zero();
            for (c, b) in combo.iter().zip(basis) {
                acc = self.ambient.add(&acc, &self.ambient.smul(*c as i64, b));
            }
            out.push(acc);
        }
        out
    }

    pub fn elements_sorted(&self) -> Vec<GroupElement> {
        let mut v = self.elements();
        v.sort();
        v
    }

    /// Coordinates of x over `basis()`, if x lies in the subgroup.
    pub fn decompose(&self, x: &GroupElement) -> Option<Vec<u64>> {
        if self.is_full() {
            // Full subgroup basis is the standard generator list.
            return Some(x.coeffs().to_vec());
        }
        let table = self.coords.get_or_init(|| {
            let (shape, basis) = self.shape_and_basis();
            let mut map = HashMap::with_capacity(self.order as usize);
            for combo in crate::group::MixedRadixCounter::new(shape.to_vec()) {
                let mut acc = self.ambient.zero();
                for (c, b) in combo.iter().zip(basis) {
                    acc = self.ambient.add(&acc, &self.ambient.smul(*c as i64, b));
                }
                map.insert(acc, combo);
            }
            map
        });
        table.get(x).cloned()
    }
}

/// Exact solution x of x * B = target over the integers, for B upper
/// triangular with positive diagonal (forward substitution).
fn solve_row_times_matrix(b: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = b.rows();
    let mut rem: Vec<BigInt> = target.to_vec();
    let mut x = vec![BigInt::zero(); k];
    for i in 0..k {
        let p = b.at(i, i);
        let (q, r) = num_integer::Integer::div_rem(&rem[i], p);
        if !r.is_zero() {
            return None;
        }
        for j in i..k {
            let t = &rem[j] - &q * b.at(i, j);
            rem[j] = t;
        }
        x[i] = q;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    Some(x)
}

/// H1 + H2: the subgroup generated by both.
pub fn sum(h1: &Subgroup, h2: &Subgroup) -> Subgroup {
    assert_eq!(h1.ambient, h2.ambient, "sum across different groups");
    let mut gens = h1.canonical_generators();
    gens.extend(h2.canonical_generators());
    span(&h1.ambient, &gens)
}

/// Lattice intersection via the left kernel of the stacked basis matrices:
/// rows (x | y) with x B1 = y B2 span the solutions, and the x B1 rows
/// generate L(H1) meet L(H2).
pub fn intersect(h1: &Subgroup, h2: &Subgroup) -> Subgroup {
    assert_eq!(h1.ambient, h2.ambient, "intersection across different groups");
    let k = h1.ambient.rank();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(2 * k);
    for row in &h1.hnf {
        rows.push(row.iter().map(|&v| BigInt::from(v)).collect());
    }
    for row in &h2.hnf {
        rows.push(row.iter().map(|&v| -BigInt::from(v)).collect());
    }
    let m = IntMatrix::from_rows(rows).expect("rectangular");
    let s = m.smith_normal_form();
    let rank = s.d.diagonal().iter().filter(|v| !v.is_zero()).count();
    // Left kernel of M is spanned by rows of U at positions past the rank.
    let b1 = IntMatrix::from_rows(
        h1.hnf.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
    )
    .expect("rectangular");
    let mut gens = Vec::new();
    for i in rank..2 * k {
        let x_part =
            IntMatrix::from_rows(vec![(0..k).map(|j| s.u.at(i, j).clone()).collect()]).unwrap();
        let prod = x_part.mul(&b1);
        let coeffs: Vec<u64> = (0..k)
            .map(|j| {
                let m = BigInt::from(h1.ambient.factors()[j]);
                num_integer::Integer::mod_floor(prod.at(0, j), &m)
                    .to_u64()
                    .expect("reduced coefficient")
            })
            .collect();
        gens.push(GroupElement::from_coeffs(coeffs));
    }
    span(&h1.ambient, &gens)
}

/// G[n] = elements killed by n; generated per coordinate by (d_i/gcd(n,d_i)) e_i.
pub fn n_socle(g: &FiniteAbelianGroup, n: u64) -> Subgroup {
    let gens: Vec<GroupElement> = g
        .factors()
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let step = d / num_integer::gcd(n, d);
            g.smul(step as i64, &g.standard_generator(i))
        })
        .collect();
    span(g, &gens)
}

/// nG = image of multiplication by n.
pub fn multiple_subgroup(g: &FiniteAbelianGroup, n: u64) -> Subgroup {
    let gens: Vec<GroupElement> =
        (0..g.rank()).map(|i| g.smul(n as i64, &g.standard_generator(i))).collect();
    span(g, &gens)
}

/// The p-primary component G_p as a subgroup of G.
pub fn p_component(g: &FiniteAbelianGroup, p: u64) -> Subgroup {
    let gens: Vec<GroupElement> = g
        .primary()
        .get(&p)
        .map(|entries| {
            entries
                .iter()
                .map(|&(i, e)| {
                    let d = g.factors()[i];
                    let step = d / p.pow(e);
                    g.smul(step as i64, &g.standard_generator(i))
                })
                .collect()
        })
        .unwrap_or_default();
    span(g, &gens)
}

//! Integer matrices with Hermite and Smith normal forms.
//!
//! Entries are arbitrary-precision (`BigInt`); the callers that need machine
//! integers convert after reduction, when entries are provably small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.at(i, i).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.at(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(t, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Fraction-free Gaussian elimination (Bareiss). Square input.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for t in 0..n - 1 {
            if a.at(t, t).is_zero() {
                match (t + 1..n).find(|&i| !a.at(i, t).is_zero()) {
                    Some(i) => {
                        a.swap_rows(t, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in t + 1..n {
                for j in t + 1..n {
                    let v = (a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, t, BigInt::zero());
            }
            prev = a.at(t, t).clone();
        }
        sign * a.at(n - 1, n - 1).clone()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.at(i, c).clone();
            self.set(i, c, v);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, src: usize, dst: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(dst, c) + q * self.at(src, c);
            self.set(dst, c, v);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, j).clone();
            self.set(r, j, v);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, src: usize, dst: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, dst) + q * self.at(r, src);
            self.set(r, dst, v);
        }
    }

    /// Row-style Hermite normal form: unimodular row operations only.
    /// Result is in echelon form with positive pivots, entries above each
    /// pivot reduced into [0, pivot), zero rows dropped. Unique per row span.
    pub fn hermite_normal_form(&self) -> IntMatrix {
        self.hnf_with_transform().0
    }

    /// Also returns T with T * self == hnf (padded with the dropped zero rows).
    pub fn hnf_with_transform(&self) -> (IntMatrix, IntMatrix) {
        let mut a = self.clone();
        let mut t = IntMatrix::identity(self.rows);
        let mut pivot_row = 0;
        for col in 0..a.cols {
            if pivot_row == a.rows {
                break;
            }
            loop {
                let mut best: Option<usize> = None;
                for i in pivot_row..a.rows {
                    if !a.at(i, col).is_zero()
                        && best.is_none_or(|b| a.at(i, col).abs() < a.at(b, col).abs())
                    {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                a.swap_rows(pivot_row, b);
                t.swap_rows(pivot_row, b);
                if a.at(pivot_row, col).is_negative() {
                    a.negate_row(pivot_row);
                    t.negate_row(pivot_row);
                }
                let p = a.at(pivot_row, col).clone();
                let mut clean = true;
                for i in pivot_row + 1..a.rows {
                    if !a.at(i, col).is_zero() {
                        let q = -a.at(i, col).div_floor(&p);
                        a.add_row_multiple(pivot_row, i, &q);
                        t.add_row_multiple(pivot_row, i, &q);
                        if !a.at(i, col).is_zero() {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            if !a.at(pivot_row, col).is_zero() {
                let p = a.at(pivot_row, col).clone();
                for i in 0..pivot_row {
                    let q = -a.at(i, col).div_floor(&p);
                    a.add_row_multiple(pivot_row, i, &q);
                    t.add_row_multiple(pivot_row, i, &q);
                }
                pivot_row += 1;
            }
        }
        let kept: Vec<Vec<BigInt>> = (0..pivot_row).map(|i| a.row(i).to_vec()).collect();
        (IntMatrix::from_rows(kept).expect("rectangular"), t)
    }

    /// Exact inverse of a matrix with determinant +-1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput("inverse of non-square matrix".into()));
        }
        let (h, t) = self.hnf_with_transform();
        if h.rows() != self.rows || !h.is_identity() {
            return Err(Error::InvalidInput("matrix is not unimodular".into()));
        }
        Ok(t)
    }

    /// Smith normal form: u * self * v == d, with u, v unimodular and the
    /// diagonal a divisibility chain (zeros trailing).
    pub fn smith_normal_form(&self) -> SmithDecomposition {
        let mut s = SmithState {
            a: self.clone(),
            u: IntMatrix::identity(self.rows),
            u_inv: IntMatrix::identity(self.rows),
            v: IntMatrix::identity(self.cols),
            v_inv: IntMatrix::identity(self.cols),
        };
        s.diagonalize();
        s.enforce_chain();
        debug_assert!(s.u.mul(self).mul(&s.v) == s.a, "U*A*V != D");
        debug_assert!(s.u.mul(&s.u_inv).is_identity());
        debug_assert!(s.v.mul(&s.v_inv).is_identity());
        SmithDecomposition { d: s.a, u: s.u, u_inv: s.u_inv, v: s.v, v_inv: s.v_inv }
    }
}

pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

struct SmithState {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SmithState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn add_row(&mut self, src: usize, dst: usize, q: &BigInt) {
        self.a.add_row_multiple(src, dst, q);
        self.u.add_row_multiple(src, dst, q);
        let neg = -q;
        self.u_inv.add_col_multiple(dst, src, &neg);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_col(&mut self, src: usize, dst: usize, q: &BigInt) {
        self.a.add_col_multiple(src, dst, q);
        self.v.add_col_multiple(src, dst, q);
        let neg = -q;
        self.v_inv.add_row_multiple(dst, src, &neg);
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                if !self.a.at(i, j).is_zero()
                    && best.is_none_or(|(bi, bj)| self.a.at(i, j).abs() < self.a.at(bi, bj).abs())
                {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn diagonalize(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            loop {
                let Some((pi, pj)) = self.find_pivot(t) else { return };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                if self.a.at(t, t).is_negative() {
                    self.negate_row(t);
                }
                let p = self.a.at(t, t).clone();
                let mut clean = true;
                for i in t + 1..self.a.rows() {
                    if !self.a.at(i, t).is_zero() {
                        let q = -self.a.at(i, t).div_floor(&p);
                        self.add_row(t, i, &q);
                        if !self.a.at(i, t).is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..self.a.cols() {
                    if !self.a.at(t, j).is_zero() {
                        let q = -self.a.at(t, j).div_floor(&p);
                        self.add_col(t, j, &q);
                        if !self.a.at(t, j).is_zero() {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
        }
    }

    /// After diagonalization, merge adjacent entries until d_i | d_{i+1}.
    fn enforce_chain(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        let mut guard = 0usize;
        loop {
            guard += 1;
            assert!(guard < 10_000, "smith chain enforcement did not terminate");
            let mut dirty = false;
            for t in 0..n.saturating_sub(1) {
                let a = self.a.at(t, t).clone();
                let b = self.a.at(t + 1, t + 1).clone();
                if a.is_zero() && !b.is_zero() {
                    self.swap_rows(t, t + 1);
                    self.swap_cols(t, t + 1);
                    dirty = true;
                } else if !a.is_zero() && !(&b % &a).is_zero() {
                    // Put b below a in the same column, then re-diagonalize.
                    self.add_col(t + 1, t, &BigInt::one());
                    self.diagonalize();
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_holds(d: &[BigInt]) -> bool {
        d.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        })
    }

    #[test]
    fn smith_of_rank_one_multiple() {
        let a = IntMatrix::from_i64_rows(&[vec![2, 4], vec![4, 8]]);
        let s = a.smith_normal_form();
        assert_eq!(s.d.diagonal(), vec![BigInt::from(2), BigInt::from(0)]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn smith_chain_and_transforms_on_samples() {
        let samples = vec![
            vec![vec![6, 4], vec![4, 8]],
            vec![vec![2, 0, 0], vec![0, 4, 0], vec![0, 0, 8]],
            vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![3, 9, 6], vec![12, 15, 21]],
            vec![vec![5]],
        ];
        for rows in samples {
            let a = IntMatrix::from_i64_rows(&rows);
            let s = a.smith_normal_form();
            assert_eq!(s.u.mul(&a).mul(&s.v), s.d, "U*A*V != D for {rows:?}");
            assert!(chain_holds(&s.d.diagonal()), "no chain for {rows:?}: {:?}", s.d.diagonal());
            assert!(s.u.mul(&s.u_inv).is_identity());
            assert!(s.v.mul(&s.v_inv).is_identity());
            for i in 0..s.d.rows() {
                for j in 0..s.d.cols() {
                    if i != j {
                        assert!(s.d.at(i, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn hnf_is_canonical_for_equal_row_spans() {
        // Same lattice, different generating rows.
        let a = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 4], vec![2, 4]]);
        let b = IntMatrix::from_i64_rows(&[vec![2, 4], vec![2, 8], vec![4, 4]]);
        assert_eq!(a.hermite_normal_form(), b.hermite_normal_form());
        let h = a.hermite_normal_form();
        assert_eq!(h.rows(), 2);
        assert_eq!(*h.at(0, 0), BigInt::from(2));
        assert_eq!(*h.at(1, 1), BigInt::from(4));
    }

    #[test]
    fn hnf_transform_reproduces_result() {
        let a = IntMatrix::from_i64_rows(&[vec![3, 1, 2], vec![0, 6, 9], vec![3, 7, 11]]);
        let (h, t) = a.hnf_with_transform();
        let full = t.mul(&a);
        for i in 0..h.rows() {
            assert_eq!(full.row(i), h.row(i));
        }
        for i in h.rows()..full.rows() {
            assert!(full.row(i).iter().all(BigInt::is_zero));
        }
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let v = IntMatrix::from_i64_rows(&[vec![1, 2, 0], vec![0, 1, 5], vec![0, 0, 1]]);
        let vi = v.inverse_unimodular().unwrap();
        assert!(v.mul(&vi).is_identity());
        assert!(vi.mul(&v).is_identity());
        let not_uni = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 1]]);
        assert!(not_uni.inverse_unimodular().is_err());
    }

    #[test]
    fn determinant_matches_cofactor_intuition() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.determinant(), BigInt::from(-2));
        let b = IntMatrix::from_i64_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![0, 1, 4]]);
        // 2*(12-2) - 0 + 1*(1-0) = 21
        assert_eq!(b.determinant(), BigInt::from(21));
        let empty = IntMatrix::zeros(0, 0);
        assert_eq!(empty.determinant(), BigInt::one());
    }
}

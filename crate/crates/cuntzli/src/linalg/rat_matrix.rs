//! Exact rational vectors and matrices.
//!
//! Used wherever inverses or solves are needed: factorizations a^-1 m b,
//! lattice membership, nullspaces of intertwining equations. All arithmetic
//! is over `BigRational`; integrality is a checked cast, never a rounding.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::int_matrix::{IntegerMatrix, IntegerVector};

/// Column vector with exact rational entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalVector {
    entries: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        Self { entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self { entries: vec![BigRational::zero(); dim] }
    }

    pub fn from_integer(v: &IntegerVector) -> Self {
        Self { entries: v.entries().iter().map(|e| BigRational::from(e.clone())).collect() }
    }

    /// Entries given as (numerator, denominator) pairs.
    pub fn from_i64_pairs(entries: &[(i64, i64)]) -> Self {
        Self {
            entries: entries
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> &BigRational {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self { entries: self.entries.iter().map(|a| a * k).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn to_integer(&self) -> Result<IntegerVector> {
        if !self.is_integral() {
            return Err(Error::DimensionMismatch(format!("vector {self} is not integral")));
        }
        Ok(IntegerVector::new(self.entries.iter().map(|e| e.to_integer()).collect()))
    }

    /// Least common multiple of the entry denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for e in &self.entries {
            l = num::Integer::lcm(&l, e.denom());
        }
        l.abs()
    }

    /// Scales by the denominator lcm and divides out the content.
    pub fn clear_denominators_primitive(&self) -> IntegerVector {
        let l = self.denominator_lcm();
        let scaled = self.scale(&BigRational::from(l));
        scaled.to_integer().expect("denominators cleared").primitive()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Row-major matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        Self { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_integer(a: &IntegerMatrix) -> Self {
        Self {
            rows: a.rows(),
            cols: a.cols(),
            entries: a.entries().iter().map(|e| BigRational::from(e.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.entry_mut(j, i) = self.entry(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.entry(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = lik * other.entry(k, j);
                    *out.entry_mut(i, j) += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &RationalVector) -> RationalVector {
        assert_eq!(self.cols, v.dim(), "matrix/vector dimensions must agree");
        let mut out = RationalVector::zero(self.rows);
        for i in 0..self.rows {
            let mut acc = BigRational::zero();
            for j in 0..self.cols {
                acc += self.entry(i, j) * v.entry(j);
            }
            out.entries[i] = acc;
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn to_integer(&self) -> Result<IntegerMatrix> {
        if !self.is_integral() {
            return Err(Error::DimensionMismatch("matrix is not integral".into()));
        }
        Ok(IntegerMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e.to_integer()).collect(),
        ))
    }

    pub fn det(&self) -> Result<BigRational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = BigRational::one();
        for k in 0..n {
            let pivot = (k..n).find(|&r| !m.entry(r, k).is_zero());
            let Some(p) = pivot else { return Ok(BigRational::zero()) };
            if p != k {
                for j in 0..n {
                    let a = m.entry(p, j).clone();
                    let b = m.entry(k, j).clone();
                    *m.entry_mut(p, j) = b;
                    *m.entry_mut(k, j) = a;
                }
                det = -det;
            }
            let pk = m.entry(k, k).clone();
            det *= &pk;
            for i in k + 1..n {
                let factor = m.entry(i, k) / &pk;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let sub = &factor * m.entry(k, j);
                    *m.entry_mut(i, j) -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse via Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let pivot = (k..n).find(|&r| !m.entry(r, k).is_zero());
            let Some(p) = pivot else {
                return Err(Error::SingularMatrix(format!("{self}")));
            };
            if p != k {
                for j in 0..n {
                    let (a, b) = (m.entry(p, j).clone(), m.entry(k, j).clone());
                    *m.entry_mut(p, j) = b;
                    *m.entry_mut(k, j) = a;
                    let (a, b) = (inv.entry(p, j).clone(), inv.entry(k, j).clone());
                    *inv.entry_mut(p, j) = b;
                    *inv.entry_mut(k, j) = a;
                }
            }
            let pk = m.entry(k, k).clone();
            for j in 0..n {
                *m.entry_mut(k, j) /= &pk;
                *inv.entry_mut(k, j) /= &pk;
            }
            for i in 0..n {
                if i == k || m.entry(i, k).is_zero() {
                    continue;
                }
                let factor = m.entry(i, k).clone();
                for j in 0..n {
                    let sub = &factor * m.entry(k, j);
                    *m.entry_mut(i, j) -= sub;
                    let sub = &factor * inv.entry(k, j);
                    *inv.entry_mut(i, j) -= sub;
                }
            }
        }
        Ok(inv)
    }

    /// Solves self * x = b exactly.
    pub fn solve(&self, b: &RationalVector) -> Result<RationalVector> {
        Ok(self.inverse()?.mul_vec(b))
    }

    /// Basis of the right nullspace, one vector per free column, in ascending
    /// free-column order. Each basis vector has entry 1 at its free column.
    pub fn nullspace(&self) -> Vec<RationalVector> {
        let mut m = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        // reduced row echelon form, pivot columns recorded in order
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let pivot = (r..rows).find(|&i| !m.entry(i, c).is_zero());
            let Some(p) = pivot else { continue };
            if p != r {
                for j in 0..cols {
                    let (a, b) = (m.entry(p, j).clone(), m.entry(r, j).clone());
                    *m.entry_mut(p, j) = b;
                    *m.entry_mut(r, j) = a;
                }
            }
            let pk = m.entry(r, c).clone();
            for j in 0..cols {
                *m.entry_mut(r, j) /= &pk;
            }
            for i in 0..rows {
                if i == r || m.entry(i, c).is_zero() {
                    continue;
                }
                let factor = m.entry(i, c).clone();
                for j in 0..cols {
                    let sub = &factor * m.entry(r, j);
                    *m.entry_mut(i, j) -= sub;
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = RationalVector::zero(cols);
            v.entries[free] = BigRational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v.entries[pc] = -m.entry(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = RationalMatrix::from_integer(&IntegerMatrix::from_i64(2, &[0, 2, 1, -2]));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let a = RationalMatrix::from_integer(&IntegerMatrix::from_i64(2, &[1, 2, 2, 4]));
        assert!(matches!(a.inverse(), Err(Error::SingularMatrix(_))));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = RationalMatrix::from_integer(&IntegerMatrix::from_i64(2, &[1, 2, 2, 4]));
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).is_zero());
    }

    #[test]
    fn solve_exact() {
        let a = RationalMatrix::from_integer(&IntegerMatrix::from_i64(2, &[0, 2, 1, -2]));
        let b = RationalVector::from_integer(&IntegerVector::from_i64(&[2, -1]));
        let x = a.solve(&b).unwrap();
        // A * (1,1) = (2,-1)
        assert_eq!(x, RationalVector::from_i64_pairs(&[(1, 1), (1, 1)]));
    }
}

//! Arbitrary-precision integer vectors and matrices.
//!
//! Everything here is exact: no fixed-width fast paths, no floating point.
//! Matrices are stored row-major and may be rectangular; the square case is
//! the common one and several operations require it.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Column vector with exact integer entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerVector {
    entries: Vec<BigInt>,
}

impl IntegerVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        Self { entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self { entries: vec![BigInt::zero(); dim] }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self { entries: entries.iter().map(|&e| BigInt::from(e)).collect() }
    }

    /// Standard basis vector e_i.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.entries[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> &BigInt {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[BigInt] {
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

    pub fn scale(&self, k: &BigInt) -> Self {
        Self { entries: self.entries.iter().map(|a| a * k).collect() }
    }

    /// Divides every entry by the gcd of the entries; zero stays zero.
    pub fn primitive(&self) -> Self {
        let mut g = BigInt::zero();
        for e in &self.entries {
            g = g.gcd(e);
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self { entries: self.entries.iter().map(|e| e / &g).collect() }
    }
}

impl fmt::Display for IntegerVector {
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

impl fmt::Debug for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Row-major matrix with exact integer entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        Self { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Scalar matrix k*I.
    pub fn scalar(n: usize, k: BigInt) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = k.clone();
        }
        m
    }

    /// Square matrix from a row-major i64 slice; panics if the length is not n^2.
    pub fn from_i64(n: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n);
        Self::new(n, n, entries.iter().map(|&e| BigInt::from(e)).collect())
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

    /// Side length of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
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

    pub fn mul_vec(&self, v: &IntegerVector) -> IntegerVector {
        assert_eq!(self.cols, v.dim(), "matrix/vector dimensions must agree");
        let mut out = IntegerVector::zero(self.rows);
        for i in 0..self.rows {
            let mut acc = BigInt::zero();
            for j in 0..self.cols {
                acc += self.entry(i, j) * v.entry(j);
            }
            out.entries[i] = acc;
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| -e).collect() }
    }

    pub fn pow(&self, exp: usize) -> Self {
        debug_assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                // pivot swap keeps the elimination fraction-free
                let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
                match swap {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev; // exact by Bareiss
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(sign * m[n - 1][n - 1].clone())
    }

    pub fn abs_det(&self) -> Result<BigInt> {
        Ok(self.det()?.abs())
    }

    /// True when the determinant is nonzero.
    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.det().map(|d| d.is_zero()).unwrap_or(true)
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> BigInt {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.entry(i, i)).sum()
    }

    /// Glues `self` and `other` side by side: [self | other].
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.entry_mut(i, j) = self.entry(i, j).clone();
            }
            for j in 0..other.cols {
                *out.entry_mut(i, self.cols + j) = other.entry(i, j).clone();
            }
        }
        out
    }

    /// Column j as a vector.
    pub fn column(&self, j: usize) -> IntegerVector {
        IntegerVector::new((0..self.rows).map(|i| self.entry(i, j).clone()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[IntegerVector]) -> Self {
        let mut out = Self::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.dim(), rows);
            for i in 0..rows {
                *out.entry_mut(i, j) = c.entry(i).clone();
            }
        }
        out
    }
}

impl fmt::Display for IntegerMatrix {
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

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Quotient with the remainder of least absolute value (ties toward the floor
/// quotient). Keeps entries small during Smith/Hermite elimination.
pub(crate) fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(!b.is_zero());
    let (q, r) = a.div_mod_floor(b);
    // r has the sign of b and |r| < |b|; bump q when |r| is past the midpoint
    if r.abs() * BigInt::from(2) > b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

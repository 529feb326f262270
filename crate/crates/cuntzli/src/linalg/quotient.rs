//! Finite quotients Z^n / A Z^n and lattice membership/intersection.
//!
//! Canonical coset representatives go through the Smith coordinates: reduce
//! U*v componentwise modulo the invariant factors, then map back with U^-1.
//! The canonical map is injective on representatives, so coset equality is
//! plain vector equality.

use num::{BigInt, Integer, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::int_matrix::{IntegerMatrix, IntegerVector};
use crate::linalg::rat_matrix::{RationalMatrix, RationalVector};
use crate::linalg::smith::{column_hermite, integer_kernel, smith_normal_form, SmithDecomposition};

/// A coset of A Z^n in Z^n, held by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coset {
    rep: IntegerVector,
}

impl Coset {
    pub fn representative(&self) -> &IntegerVector {
        &self.rep
    }
}

/// The finite group Z^n / A Z^n for an invertible integer matrix A.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    modulus: IntegerMatrix,
    smith: SmithDecomposition,
    left_inv: IntegerMatrix,
    order: BigInt,
}

impl QuotientGroup {
    pub fn new(modulus: IntegerMatrix) -> Result<Self> {
        let smith = smith_normal_form(&modulus)?;
        let left_rat = RationalMatrix::from_integer(&smith.left);
        // U is unimodular, so its exact inverse is integral
        let left_inv = left_rat.inverse()?.to_integer()?;
        let order = modulus.abs_det()?;
        Ok(Self { modulus, smith, left_inv, order })
    }

    pub fn modulus(&self) -> &IntegerMatrix {
        &self.modulus
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.modulus.dim()
    }

    /// Canonical representative of v + A Z^n. Idempotent.
    pub fn reduce(&self, v: &IntegerVector) -> IntegerVector {
        debug_assert_eq!(v.dim(), self.dim());
        let y = self.smith.left.mul_vec(v);
        let n = self.dim();
        let mut reduced = Vec::with_capacity(n);
        for i in 0..n {
            let d = self.smith.diagonal.entry(i, i);
            reduced.push(y.entry(i).mod_floor(d));
        }
        self.left_inv.mul_vec(&IntegerVector::new(reduced))
    }

    pub fn coset(&self, v: &IntegerVector) -> Coset {
        Coset { rep: self.reduce(v) }
    }

    /// True when v lies in A Z^n.
    pub fn is_zero_coset(&self, v: &IntegerVector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn add(&self, a: &IntegerVector, b: &IntegerVector) -> IntegerVector {
        self.reduce(&a.add(b))
    }

    pub fn neg(&self, a: &IntegerVector) -> IntegerVector {
        self.reduce(&a.neg())
    }

    /// All canonical representatives, in odometer order over the Smith
    /// coordinates (first coordinate slowest).
    pub fn enumerate(&self) -> Vec<IntegerVector> {
        let n = self.dim();
        let factors: Vec<u64> = (0..n)
            .map(|i| {
                self.smith
                    .diagonal
                    .entry(i, i)
                    .to_u64()
                    .expect("quotient order exceeds enumeration range")
            })
            .collect();
        let total = factors.iter().product::<u64>();
        let mut out = Vec::with_capacity(total as usize);
        let mut digits = vec![0u64; n];
        loop {
            let y = IntegerVector::new(digits.iter().map(|&d| BigInt::from(d)).collect());
            out.push(self.left_inv.mul_vec(&y));
            // odometer increment, last digit fastest
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < factors[pos] {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
}

/// True when v lies in the lattice A Z^n (exact rational solve).
pub fn lattice_member(v: &IntegerVector, a: &IntegerMatrix) -> Result<bool> {
    if a.det()?.is_zero() {
        return Err(Error::SingularMatrix(format!("{a}")));
    }
    let x = RationalMatrix::from_integer(a).solve(&RationalVector::from_integer(v))?;
    Ok(x.is_integral())
}

/// Canonical (column-Hermite) basis of A Z^n `intersect` B Z^n.
///
/// Solves the stacked system [A | -B] (x, y)^T = 0 over Z; the intersection
/// is {A x : (x, y) in kernel}, Hermite-reduced to a canonical basis.
pub fn lattice_intersection(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<IntegerMatrix> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", n, n, b.rows(), b.cols())));
    }
    if a.det()?.is_zero() {
        return Err(Error::SingularMatrix(format!("{a}")));
    }
    if b.det()?.is_zero() {
        return Err(Error::SingularMatrix(format!("{b}")));
    }
    let stacked = a.hstack(&b.neg());
    let kernel = integer_kernel(&stacked);
    // project kernel vectors to their x-part and push through A
    let columns: Vec<IntegerVector> = kernel
        .iter()
        .map(|k| {
            let x = IntegerVector::new((0..n).map(|i| k.entry(i).clone()).collect());
            a.mul_vec(&x)
        })
        .collect();
    let gens = IntegerMatrix::from_columns(n, &columns);
    let h = column_hermite(&gens);
    debug_assert_eq!(h.cols(), n, "intersection of finite-index lattices has full rank");
    Ok(h)
}

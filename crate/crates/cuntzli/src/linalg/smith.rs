//! Smith normal form, column-style Hermite form, and integer kernels.
//!
//! The Smith routine keeps full unimodular transforms so cosets can be
//! reduced through the diagonal coordinates. Pivot choice is deterministic:
//! smallest nonzero absolute value, ties broken in row-major order.

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::int_matrix::{round_div, IntegerMatrix, IntegerVector};

/// Unimodular reduction U * A * V = D with D diagonal, d_i >= 1, d_i | d_{i+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntegerMatrix,
    pub diagonal: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithDecomposition {
    /// Invariant factors d_1..d_r (the nonzero diagonal entries).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let r = self.diagonal.rows().min(self.diagonal.cols());
        (0..r)
            .map(|i| self.diagonal.entry(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Smith normal form of a square invertible matrix.
///
/// Errors with `SingularMatrix` when det = 0; the rectangular/rank-deficient
/// form lives in `smith_general`.
pub fn smith_normal_form(a: &IntegerMatrix) -> Result<SmithDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "smith_normal_form needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.det()?.is_zero() {
        return Err(Error::SingularMatrix(format!("{a}")));
    }
    Ok(smith_general(a))
}

/// Smith normal form of an arbitrary rows x cols integer matrix.
pub fn smith_general(a: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut b = a.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let rank_bound = rows.min(cols);

    let rank = eliminate_block(&mut b, &mut u, &mut v, 0, rank_bound);

    // divisibility pass: force d_i | d_{i+1} by folding the next diagonal
    // entry into row i and re-eliminating; the affected pivot strictly
    // shrinks to a gcd each round, so the restart terminates
    let mut i = 0;
    while i + 1 < rank {
        let di = b.entry(i, i).clone();
        let dn = b.entry(i + 1, i + 1).clone();
        if (&dn % &di).is_zero() {
            i += 1;
            continue;
        }
        add_row(&mut b, &mut u, i, i + 1, &BigInt::one());
        eliminate_block(&mut b, &mut u, &mut v, i, rank_bound);
        i = 0;
    }

    // sign-normalize the diagonal
    for d in 0..rank {
        if b.entry(d, d).is_negative() {
            negate_row(&mut b, d);
            negate_row(&mut u, d);
        }
    }

    SmithDecomposition { left: u, diagonal: b, right: v }
}

/// Diagonalizes the trailing block starting at `from`; returns the total
/// number of pivots (rank) counting positions before `from` as pivots.
fn eliminate_block(
    b: &mut IntegerMatrix,
    u: &mut IntegerMatrix,
    v: &mut IntegerMatrix,
    from: usize,
    rank_bound: usize,
) -> usize {
    let mut t = from;
    while t < rank_bound {
        if !position_pivot(b, u, v, t) {
            break; // remaining block is zero
        }
        loop {
            clear_column(b, u, t);
            if !position_pivot(b, u, v, t) {
                break;
            }
            clear_row(b, v, t);
            if column_clear(b, t) && row_clear(b, t) {
                break;
            }
        }
        t += 1;
    }
    t
}

/// Moves the smallest-|value| nonzero entry of the trailing block to (t, t).
/// Ties break in row-major order. Returns false when the block is zero.
fn position_pivot(
    b: &mut IntegerMatrix,
    u: &mut IntegerMatrix,
    v: &mut IntegerMatrix,
    t: usize,
) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for i in t..b.rows() {
        for j in t..b.cols() {
            if b.entry(i, j).is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => b.entry(i, j).abs() < b.entry(bi, bj).abs(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    let Some((pi, pj)) = best else { return false };
    if pi != t {
        swap_rows(b, pi, t);
        swap_rows(u, pi, t);
    }
    if pj != t {
        swap_cols(b, pj, t);
        swap_cols(v, pj, t);
    }
    true
}

fn clear_column(b: &mut IntegerMatrix, u: &mut IntegerMatrix, t: usize) {
    loop {
        let mut progressed = false;
        for i in t + 1..b.rows() {
            if b.entry(i, t).is_zero() {
                continue;
            }
            let q = round_div(b.entry(i, t), b.entry(t, t));
            if !q.is_zero() {
                add_row(b, u, i, t, &-q);
                progressed = true;
            }
            if !b.entry(i, t).is_zero() {
                // remainder strictly smaller than the pivot: promote it
                swap_rows(b, i, t);
                swap_rows(u, i, t);
                progressed = true;
            }
        }
        if !progressed {
            return;
        }
    }
}

fn clear_row(b: &mut IntegerMatrix, v: &mut IntegerMatrix, t: usize) {
    loop {
        let mut progressed = false;
        for j in t + 1..b.cols() {
            if b.entry(t, j).is_zero() {
                continue;
            }
            let q = round_div(b.entry(t, j), b.entry(t, t));
            if !q.is_zero() {
                add_col(b, v, j, t, &-q);
                progressed = true;
            }
            if !b.entry(t, j).is_zero() {
                swap_cols(b, j, t);
                swap_cols(v, j, t);
                progressed = true;
            }
        }
        if !progressed {
            return;
        }
    }
}

fn column_clear(b: &IntegerMatrix, t: usize) -> bool {
    (t + 1..b.rows()).all(|i| b.entry(i, t).is_zero())
}

fn row_clear(b: &IntegerMatrix, t: usize) -> bool {
    (t + 1..b.cols()).all(|j| b.entry(t, j).is_zero())
}

fn swap_rows(m: &mut IntegerMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m.entry(a, j).clone();
        let y = m.entry(b, j).clone();
        *m.entry_mut(a, j) = y;
        *m.entry_mut(b, j) = x;
    }
}

fn swap_cols(m: &mut IntegerMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.entry(i, a).clone();
        let y = m.entry(i, b).clone();
        *m.entry_mut(i, a) = y;
        *m.entry_mut(i, b) = x;
    }
}

fn negate_row(m: &mut IntegerMatrix, r: usize) {
    for j in 0..m.cols() {
        let e = -m.entry(r, j).clone();
        *m.entry_mut(r, j) = e;
    }
}

fn negate_col(m: &mut IntegerMatrix, c: usize) {
    for i in 0..m.rows() {
        let e = -m.entry(i, c).clone();
        *m.entry_mut(i, c) = e;
    }
}

/// row_dst += k * row_src, applied to the working matrix and its transform.
fn add_row(b: &mut IntegerMatrix, u: &mut IntegerMatrix, dst: usize, src: usize, k: &BigInt) {
    for j in 0..b.cols() {
        let add = k * b.entry(src, j);
        *b.entry_mut(dst, j) += add;
    }
    for j in 0..u.cols() {
        let add = k * u.entry(src, j);
        *u.entry_mut(dst, j) += add;
    }
}

/// col_dst += k * col_src, applied to the working matrix and its transform.
fn add_col(b: &mut IntegerMatrix, v: &mut IntegerMatrix, dst: usize, src: usize, k: &BigInt) {
    for i in 0..b.rows() {
        let add = k * b.entry(i, src);
        *b.entry_mut(i, dst) += add;
    }
    for i in 0..v.rows() {
        let add = k * v.entry(i, src);
        *v.entry_mut(i, dst) += add;
    }
}

fn add_col_no_transform(b: &mut IntegerMatrix, dst: usize, src: usize, k: &BigInt) {
    for i in 0..b.rows() {
        let add = k * b.entry(i, src);
        *b.entry_mut(i, dst) += add;
    }
}

/// Basis of the integer kernel {x : M x = 0} as columns, via the right
/// transform of the Smith form. Unimodularity of V makes the basis complete.
pub fn integer_kernel(m: &IntegerMatrix) -> Vec<IntegerVector> {
    let s = smith_general(m);
    let rank = s.invariant_factors().len();
    (rank..m.cols()).map(|j| s.right.column(j)).collect()
}

/// Canonical column-style Hermite form of the lattice spanned by the columns
/// of `m`: column echelon, positive pivots, entries left of a pivot reduced
/// into [0, pivot). Zero columns are dropped.
pub fn column_hermite(m: &IntegerMatrix) -> IntegerMatrix {
    let rows = m.rows();
    let k = m.cols();
    let mut h = m.clone();
    let mut r = 0; // next pivot column slot
    for row in 0..rows {
        if r == k {
            break;
        }
        // gcd-collect this row's entries (from column r on) into column r
        loop {
            let mut best: Option<usize> = None;
            for c in r..k {
                if h.entry(row, c).is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(bc) => h.entry(row, c).abs() < h.entry(row, bc).abs(),
                };
                if better {
                    best = Some(c);
                }
            }
            let Some(bc) = best else { break };
            swap_cols(&mut h, bc, r);
            let mut any = false;
            for c in r + 1..k {
                if h.entry(row, c).is_zero() {
                    continue;
                }
                let q = round_div(h.entry(row, c), h.entry(row, r));
                if !q.is_zero() {
                    add_col_no_transform(&mut h, c, r, &-q);
                }
                if !h.entry(row, c).is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if h.entry(row, r).is_zero() {
            continue;
        }
        if h.entry(row, r).is_negative() {
            negate_col(&mut h, r);
        }
        // reduce earlier columns at this pivot row into [0, pivot)
        for c in 0..r {
            let q = num::Integer::div_floor(h.entry(row, c), h.entry(row, r));
            if !q.is_zero() {
                add_col_no_transform(&mut h, c, r, &-q);
            }
        }
        r += 1;
    }
    let cols: Vec<IntegerVector> = (0..r).map(|j| h.column(j)).collect();
    IntegerMatrix::from_columns(rows, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_invariants(a: &IntegerMatrix, s: &SmithDecomposition) {
        // U A V = D
        assert_eq!(s.left.mul(a).mul(&s.right), s.diagonal);
        // transforms unimodular
        assert!(s.left.det().unwrap().abs().is_one());
        assert!(s.right.det().unwrap().abs().is_one());
        // diagonal positive and dividing
        let d = s.invariant_factors();
        for i in 0..d.len() {
            assert!(d[i].is_positive());
            if i + 1 < d.len() {
                assert!((&d[i + 1] % &d[i]).is_zero(), "d{} | d{}", i, i + 1);
            }
        }
        // product of invariant factors = |det| for square input
        if a.is_square() && !a.det().unwrap().is_zero() {
            let prod: BigInt = d.iter().product();
            assert_eq!(prod, a.det().unwrap().abs());
        }
    }

    #[test]
    fn smith_diag_2_2() {
        let a = IntegerMatrix::from_i64(2, &[2, 0, 0, 2]);
        let s = smith_normal_form(&a).unwrap();
        check_invariants(&a, &s);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn smith_upper_triangular() {
        // gcd of entries is 1, |det| = 4
        let a = IntegerMatrix::from_i64(2, &[2, 1, 0, 2]);
        let s = smith_normal_form(&a).unwrap();
        check_invariants(&a, &s);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(4)]);
    }

    #[test]
    fn smith_example_matrix() {
        let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
        let s = smith_normal_form(&a).unwrap();
        check_invariants(&a, &s);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn smith_diag_2_3() {
        let a = IntegerMatrix::from_i64(2, &[2, 0, 0, 3]);
        let s = smith_normal_form(&a).unwrap();
        check_invariants(&a, &s);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn smith_rejects_singular() {
        let a = IntegerMatrix::from_i64(2, &[1, 2, 2, 4]);
        assert!(matches!(smith_normal_form(&a), Err(Error::SingularMatrix(_))));
    }

    #[test]
    fn kernel_of_stacked_matrix() {
        // [A | -A] has kernel {(x, x)}, rank 2
        let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
        let m = a.hstack(&a.neg());
        let ker = integer_kernel(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn hermite_canonicalizes_column_lattice() {
        // columns (2,3),(4,3) span the same lattice as (2,0),(0,3)
        let g1 = IntegerMatrix::from_i64(2, &[2, 0, 0, 3]);
        let mixed = IntegerMatrix::from_i64(2, &[2, 4, 3, 3]);
        let h1 = column_hermite(&g1);
        let h2 = column_hermite(&mixed);
        assert_eq!(h1, h2);
        assert_eq!(h1.abs_det().unwrap(), BigInt::from(6));
    }
}

//! Finite quotients Z^n / A Z^n: Smith forms, coset arithmetic, lattice
//! membership and intersections.

use cuntzli::linalg::{
    lattice_intersection, lattice_member, smith_normal_form, IntegerMatrix, IntegerVector,
    QuotientGroup,
};
use cuntzli::Result;

fn main() -> Result<()> {
    let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
    println!("A = {a}, det = {}", a.det()?);

    // Smith normal form: L A R = D with unimodular L, R. The diagonal
    // entries are the invariant factors of the quotient group.
    let snf = smith_normal_form(&a)?;
    println!("Smith diagonal: {}", snf.diagonal);
    println!("invariant factors: {:?}", snf.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>());

    // The quotient Z^2 / A Z^2 has |det A| elements.
    let q = QuotientGroup::new(a.clone())?;
    println!("quotient order: {}", q.order());
    for c in q.enumerate() {
        println!("  coset representative {c}");
    }

    // Reduction is idempotent and respects addition.
    let v = IntegerVector::from_i64(&[7, -3]);
    let r = q.reduce(&v);
    println!("{v} reduces to {r}");
    let sum = q.add(&r, &q.reduce(&IntegerVector::from_i64(&[1, 1])));
    println!("coset sum with (1,1): {sum}");

    // Membership in A Z^2 is divisibility of the residue.
    for probe in [[2i64, 0], [1, 5], [2, 1]] {
        let w = IntegerVector::from_i64(&probe);
        println!("{w} in A Z^2: {}", lattice_member(&w, &a)?);
    }

    // Intersections of sublattices, again as column lattices.
    let b = IntegerMatrix::from_i64(2, &[2, 0, 0, 1]);
    let cap = lattice_intersection(&a, &b)?;
    println!("A Z^2 meet B Z^2 = {cap} Z^2, index {}", cap.abs_det()?);
    Ok(())
}

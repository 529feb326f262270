//! Trace-form duality for orders in number fields: the regular
//! representation from a multiplication table, the discriminant matrix as
//! an exact conjugator to the transpose, intertwiners for single matrices,
//! and phase-exact pairings on rational points.

use cuntzli::duality::{
    find_intertwiner, pairing, psi_kernel_witness, q_cbrt2, q_i, q_sqrt2, trace_form,
    transpose_c3_transfer, verify_discriminant_lemma,
};
use cuntzli::linalg::{IntegerMatrix, RationalVector};
use cuntzli::system::SystemSpec;
use cuntzli::Result;

fn main() -> Result<()> {
    // Three orders, given by their multiplication tables on an integral
    // basis. alpha sends an element to multiplication-by-it.
    for (name, nf) in [
        ("Z[sqrt 2]", q_sqrt2()),
        ("Z[i]", q_i()),
        ("Z[cbrt 2]", q_cbrt2()),
    ] {
        let tf = trace_form(&nf)?;
        println!("-- {name}");
        println!("trace form X = {}", tf.matrix());
        println!("discriminant = {}", tf.discriminant());

        // X alpha(a) = alpha(a)^t X for every element, exactly.
        let samples: Vec<RationalVector> = (0..nf.degree())
            .map(|i| {
                RationalVector::from_integer(&cuntzli::linalg::IntegerVector::basis(
                    nf.degree(),
                    i,
                ))
            })
            .collect();
        let failures = verify_discriminant_lemma(&nf, &samples)?;
        println!("conjugation failures on the basis: {}", failures.len());
    }

    // A concrete instance in Z[sqrt 2]: multiplication by sqrt 2.
    let nf = q_sqrt2();
    let root2 = RationalVector::from_i64_pairs(&[(0, 1), (1, 1)]);
    let al = nf.alpha(&root2);
    let x = trace_form(&nf)?.matrix().clone();
    println!("alpha(sqrt 2) = {al}");
    println!("X alpha = {}", x.mul(&al));
    println!("alpha^t X = {}", al.transpose().mul(&x));

    // The same transpose trick works for a bare integer matrix: solve for
    // an invertible X with X A = A^t X, then X carries the division chain
    // of A onto the chain of A^t.
    let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
    let inter = find_intertwiner(&a)?;
    println!("-- intertwiner for {a}");
    println!("X = {inter}, det = {}", inter.det()?);
    let report = transpose_c3_transfer(&a, &inter, 5)?;
    println!("chain transfer failures up to depth 5: {}", report.len());

    // Rational points pair against lattice points with phases in Q/Z.
    let spec = SystemSpec::single(a)?;
    let xi = RationalVector::from_i64_pairs(&[(1, 2), (0, 1)]);
    let z = RationalVector::from_i64_pairs(&[(1, 4), (0, 1)]);
    println!("-- pairing");
    println!("<xi, (1,1)> = {}", pairing(&xi, &RationalVector::from_i64_pairs(&[(1, 1), (1, 1)])));
    match psi_kernel_witness(&spec, &xi, &z, 3)? {
        Some(w) => println!("{xi} and {z} are separated by the test point {w}"),
        None => println!("{xi} and {z} agree on every test point"),
    }
    match psi_kernel_witness(&spec, &xi, &xi, 3)? {
        Some(w) => println!("unexpected witness {w}"),
        None => println!("{xi} against itself: no separating test point, as it must be"),
    }
    Ok(())
}

//! The regular-representation oracle: every symbolic identity can be
//! replayed on a finite window of basis points, undefinedness included.
//! The defining relations are checked wholesale here for three systems.

use cuntzli::linalg::{IntegerMatrix, IntegerVector};
use cuntzli::regular_rep::{
    apply_t, oracle_compose_equal, oracle_equal, verify_cuntz_li, BasisPoint, Window,
};
use cuntzli::semigroup::TElement;
use cuntzli::system::{Family, SystemSpec};
use cuntzli::Result;

fn check_system(name: &str, spec: &SystemSpec) -> Result<()> {
    let w = Window::new(spec, 8, 3)?;
    println!("-- {name}: window of {} basis points", w.len());
    for (i, gen) in spec.generators().iter().enumerate() {
        let rep = verify_cuntz_li(spec, gen, &w)?;
        println!(
            "generator {i}: {} relation instances on {} points, {} violations",
            rep.relations_checked,
            rep.points_checked,
            rep.violations.len()
        );
        assert!(rep.is_clean());
    }
    Ok(())
}

fn main() -> Result<()> {
    check_system("doubling on Z", &SystemSpec::single(IntegerMatrix::from_i64(1, &[2]))?)?;
    let a2 = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
    check_system("single 2x2 matrix", &SystemSpec::single(a2.clone())?)?;
    check_system(
        "scalars plus a shear",
        &SystemSpec::new(
            2,
            vec![IntegerMatrix::from_i64(2, &[2, 1, 0, 2])],
            Family::ScalarsPlusGenerators,
        )?,
    )?;

    // Individual identities replay the same way. Covariance in the 2x2
    // system: s_A u(m) = u(Am) s_A.
    let spec = SystemSpec::single(a2.clone())?;
    let w = Window::new(&spec, 8, 3)?;
    let m = IntegerVector::from_i64(&[1, 0]);
    let lhs = TElement::s(&a2)?.mul(&TElement::u(&m), &spec)?;
    let rhs = TElement::u(&a2.mul_vec(&m)).mul(&TElement::s(&a2)?, &spec)?;
    println!("covariance replayed pointwise: {}", oracle_equal(&lhs, &rhs, &w));

    // Products track composition, definedness included: s* is everywhere
    // defined on range points, nowhere on the rest.
    let s = TElement::s(&a2)?;
    let s_star = TElement::s_star(&a2)?;
    let e = s.mul(&s_star, &spec)?;
    println!(
        "s s* composes correctly: {}",
        oracle_compose_equal(&s, &s_star, &e, &w)
    );

    // A single basis point pushed through a word.
    let p = BasisPoint::at(IntegerVector::from_i64(&[1, 1]));
    match apply_t(&s, &p) {
        Some(q) => println!("s moves ({}, I) to ({}, {})", p.n_part, q.n_part, q.h_part),
        None => println!("s kills ({}, I)", p.n_part),
    }
    Ok(())
}

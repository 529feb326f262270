//! The inverse semigroup of partial isometries: building words from the
//! generators, exact products in normal form, adjoints, and the
//! independence of range projections from the chosen common multiple.

use cuntzli::cli::{parse_element, print_element};
use cuntzli::linalg::{IntegerMatrix, IntegerVector};
use cuntzli::semigroup::{Projection, TElement};
use cuntzli::system::SystemSpec;
use cuntzli::Result;

fn main() -> Result<()> {
    // Dimension 1, the doubling map. Elements print in the one-line
    // grammar also accepted by the command front end.
    let spec = SystemSpec::single(IntegerMatrix::from_i64(1, &[2]))?;
    let two = IntegerMatrix::from_i64(1, &[2]);
    let one_step = IntegerVector::from_i64(&[1]);

    let s = TElement::s(&two)?;
    let s_star = TElement::s_star(&two)?;
    let u = TElement::u(&one_step);

    // Covariance: s u = u(2) s, exactly.
    let left = s.mul(&u, &spec)?;
    let right = TElement::u(&IntegerVector::from_i64(&[2])).mul(&s, &spec)?;
    println!("s u       = {}", print_element(&spec, &left)?);
    println!("u(2) s    = {}", print_element(&spec, &right)?);
    println!("equal: {}", left.t_equal(&right, &spec)?);

    // Range and support projections: s s* is the even cylinder, s* s = 1.
    println!("s s*      = {}", print_element(&spec, &s.mul(&s_star, &spec)?)?);
    println!("s* s      = {}", print_element(&spec, &s_star.mul(&s, &spec)?)?);

    // A product crossing the corner: (u s)(s* u) lands on the odd coset.
    let crossing = u.mul(&s, &spec)?.mul(&s_star.mul(&u, &spec)?, &spec)?;
    println!("(u s)(s* u) = {}", print_element(&spec, &crossing)?);

    // Adjoints reverse words: (s u)* = u* s*.
    let adj = left.adjoint(&spec)?;
    let expected = TElement::u(&one_step.neg()).mul(&s_star, &spec)?;
    println!("(s u)*    = {}", print_element(&spec, &adj)?);
    println!("matches u(-1) s*: {}", adj.t_equal(&expected, &spec)?);

    // Conjugating a projection through s_a* needs a common multiple of the
    // level and a; any witness whose scale stays inside the monoid gives
    // the same projection. Take the level-4 projection onto {0} and pull
    // it through a = 2: both witnesses below satisfy a alpha = level beta.
    let e4 = Projection::new(IntegerMatrix::from_i64(1, &[4]), vec![IntegerVector::from_i64(&[0])])?;
    let alpha = IntegerMatrix::from_i64(1, &[2]);
    let beta = IntegerMatrix::from_i64(1, &[1]);
    let first = e4.conj_s_star_with_witness(&two, &alpha, &beta)?;
    let second = e4.conj_s_star_with_witness(&two, &alpha.mul(&two), &beta.mul(&two))?;
    println!("s* e4 s via (2,1): {first}");
    println!("s* e4 s via (4,2): {second}");
    println!("evaluation-equal: {}", first.eval_equal(&second, &spec)?);

    // The same machinery in dimension 2, via the grammar.
    let spec2 = SystemSpec::single(IntegerMatrix::from_i64(2, &[0, 2, 1, -2]))?;
    let word = parse_element(&spec2, "u[(1,0)] s[[[0,2],[1,-2]]] s*[[[0,2],[1,-2]]]")?;
    println!("2d word   = {}", print_element(&spec2, &word)?);
    Ok(())
}

//! Finite-level cylinders of the profinite completion, the groupoid of
//! germs over them, the embedding into the partial-isometry semigroup, and
//! normal forms for the dilated action.

use cuntzli::cli::print_element;
use cuntzli::linalg::{IntegerMatrix, IntegerVector};
use cuntzli::system::{Family, GroupElement, SystemSpec};
use cuntzli::tight::{
    act_conj, act_conj_inv, cyl_eval, dilated_normal_form, groupoid_compose, phi,
    ultrafilters_at_level, Cylinder, CylinderOutcome, GroupoidElement,
};
use cuntzli::Result;

fn main() -> Result<()> {
    let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
    let spec = SystemSpec::single(a.clone())?;

    // Cylinders at level A^r partition the completion into |det A|^r
    // pieces; each is a congruence class.
    for r in 1..=3 {
        let level = a.pow(r);
        let sheets = ultrafilters_at_level(&level)?;
        println!("level A^{r}: {} cylinders", sheets.len());
    }

    // Evaluation of a coarser projection on a finer cylinder is decided;
    // an incomparable level honestly answers Unknown.
    let x = Cylinder::new(a.mul(&a), IntegerVector::from_i64(&[2, 1]))?;
    let even = cuntzli::semigroup::Projection::new(
        a.clone(),
        vec![IntegerVector::from_i64(&[0, 0])],
    )?;
    println!("x = {x}, evaluation on the zero-coset sheet: {:?}", cyl_eval(&x, &even));

    // The monoid acts by pushing residues forward; going backwards needs
    // divisibility and can fail or be undecidable at the stored level.
    let y = act_conj(&a, &x)?;
    println!("a . x = {y}");
    match act_conj_inv(&a, &y)? {
        CylinderOutcome::Known(back) => println!("a^-1 . (a . x) = {back}"),
        other => println!("backwards: {other:?}"),
    }

    // Arrows pair a base cylinder with a germ; sources are computed at
    // construction and compositions pull the base back when needed.
    let doubling = GroupElement::from_s(&a);
    let shift = GroupElement::from_u(&IntegerVector::from_i64(&[1, 0]));
    let gamma1 = GroupoidElement::new(&spec, x.clone(), doubling.clone())?;
    println!("gamma1 = {gamma1}");
    println!("source(gamma1) = {}", gamma1.source());
    let gamma2 = GroupoidElement::new(&spec, gamma1.source().clone(), shift)?;
    let composed = groupoid_compose(&spec, &gamma1, &gamma2)?;
    println!("gamma1 gamma2 = {composed}");

    // gamma gamma^-1 is the unit arrow at the base, exactly.
    let unit = groupoid_compose(&spec, &gamma1, &gamma1.inverse(&spec)?)?;
    println!("gamma1 gamma1^-1 has identity germ: {}", unit.germ().is_identity());

    // The embedding into the semigroup sends an arrow to the partial
    // isometry supported on its base.
    let t = phi(&spec, &composed)?;
    println!("phi(gamma1 gamma2) = {}", print_element(&spec, &t)?);

    // Dilation classes: a pair (cylinder, matrix) normalizes by walking
    // the canonical chain downward. In a scalar family the matrix part is
    // first traded for the scalar |det|.
    let shear = IntegerMatrix::from_i64(2, &[2, 1, 0, 2]);
    let sspec = SystemSpec::new(2, vec![shear.clone()], Family::ScalarsPlusGenerators)?;
    let base = Cylinder::new(IntegerMatrix::scalar(2, 4.into()), IntegerVector::from_i64(&[2, 0]))?;
    let (nx, na) = dilated_normal_form(&sspec, &base, &IntegerMatrix::scalar(2, 2.into()))?;
    println!("normal form of ({base}, 2I) = ({nx}, {na})");

    // Two pairs in the same class reach the same representative.
    let moved = act_conj(&shear, &base)?;
    let (mx, ma) = dilated_normal_form(&sspec, &moved, &shear.mul(&IntegerMatrix::scalar(2, 2.into())))?;
    println!("normal form of ({moved}, shear * 2I) = ({mx}, {ma})");
    assert!(nx == mx && na == ma);

    // An odd residue blocks the last division step.
    let odd = Cylinder::new(IntegerMatrix::scalar(2, 2.into()), IntegerVector::from_i64(&[1, 0]))?;
    let (ox, oa) = dilated_normal_form(&sspec, &odd, &IntegerMatrix::scalar(2, 2.into()))?;
    println!("normal form of ({odd}, 2I) = ({ox}, {oa})  (residue blocks the strip)");

    // Germ identity over a patch: conjugating a translation through the
    // corner gives the halved translation on the even sheet.
    let inner = GroupElement::from_s_star(&a)?
        .compose(&GroupElement::from_u(&a.mul_vec(&IntegerVector::from_i64(&[1, 0]))))
        .compose(&GroupElement::from_s(&a));
    let direct = GroupElement::from_u(&IntegerVector::from_i64(&[1, 0]));
    println!("s* u(A e1) s equals u(e1) as germs: {}", inner == direct);
    Ok(())
}

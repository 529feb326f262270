//! The three conditions a matrix family must satisfy for its relation
//! algebra to behave: directedness of the lattice poset, finite index at
//! every level, and a trivial core under repeated division.

use cuntzli::linalg::IntegerMatrix;
use cuntzli::system::{
    check_c3_2x2, integer_eigenvector, C1Verdict, C3Verdict, Family, SystemSpec,
    DEFAULT_SEARCH_DEPTH,
};
use cuntzli::Result;

fn report(name: &str, spec: &SystemSpec) -> Result<()> {
    println!("-- {name}");
    match spec.check_c1(DEFAULT_SEARCH_DEPTH) {
        C1Verdict::Holds => println!("directed: yes (common multiples found)"),
        C1Verdict::HoldsByScalars => println!("directed: yes (scalars are cofinal)"),
        C1Verdict::Inconclusive => println!("directed: inconclusive"),
    }
    let c2 = spec.check_c2()?;
    let moduli: Vec<String> = c2.determinant_moduli.iter().map(|d| d.to_string()).collect();
    println!("indices per generator: {}", moduli.join(", "));
    match spec.check_c3_sufficient() {
        C3Verdict::DilationCertified { numeric } => {
            println!("core trivial: yes (all eigenvalues outside the unit circle, numeric={numeric})");
        }
        C3Verdict::ScalarsCertified => println!("core trivial: yes (scalar chains shrink)"),
        C3Verdict::EigenvalueObstruction { generator, vector, eigenvalue_one } => {
            let verb = if eigenvalue_one { "fixes" } else { "negates" };
            println!("core trivial: NO, generator {generator} {verb} {vector}");
        }
        C3Verdict::Inconclusive => println!("core trivial: sufficient tests inconclusive"),
    }
    Ok(())
}

fn main() -> Result<()> {
    // The running 2x2 example. Its eigenvalues are -1 +- sqrt(3), one of
    // them inside the unit circle, so the dilation test cannot apply; the
    // 2x2 polynomial criterion decides anyway.
    let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
    let single = SystemSpec::single(a.clone())?;
    report("single matrix [[0,2],[1,-2]]", &single)?;
    println!("2x2 criterion (char poly nonzero at +-1): {}", check_c3_2x2(&a)?);

    // A matrix with eigenvalue 1 fails: the fixed vector survives every
    // division step, so the intersection of the chain is not zero.
    let bad = IntegerMatrix::from_i64(2, &[1, 0, 0, 2]);
    let stuck = SystemSpec::single(bad.clone())?;
    report("single matrix [[1,0],[0,2]]", &stuck)?;
    println!(
        "fixed integer vector: {}",
        integer_eigenvector(&bad, 1).expect("eigenvalue 1 present")
    );

    // Families with all scalar matrices adjoined are directed for free.
    let shear = IntegerMatrix::from_i64(2, &[2, 1, 0, 2]);
    let scalars = SystemSpec::new(2, vec![shear.clone()], Family::ScalarsPlusGenerators)?;
    report("scalars plus [[2,1],[0,2]]", &scalars)?;

    // Directedness is witnessed by common multiples: for a, b in the
    // family, find alpha, beta with a alpha = b beta.
    let b = a.mul(&a);
    let (alpha, beta) = single.ore_witness(&a, &b, DEFAULT_SEARCH_DEPTH)?;
    println!("-- common multiple");
    println!("a alpha = {}", a.mul(&alpha));
    println!("b beta  = {}", b.mul(&beta));
    Ok(())
}

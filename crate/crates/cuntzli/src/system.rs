//! Acting systems: a family of integer matrices acting on Z^n, the affine
//! group elements they generate, factorizations into `a^-1 m b` words, Ore
//! common-multiple witnesses, and the structural condition checkers.
//!
//! An element of the ambient group is an affine map `x -> v + h x` with
//! rational `v` and invertible rational `h`. The monoid `P` of admissible
//! denominators depends on the family:
//!
//! - `SingleMatrix`: nonnegative powers of one matrix.
//! - `ScalarsPlusGenerators`: the listed generators together with every
//!   positive scalar matrix k*I.
//! - `FullIntegerGl`: every integer matrix with nonzero determinant.
//! - `FinitelyGenerated`: words in the listed generators only; searches over
//!   this family are honest semi-decisions and may come back inconclusive.
//!
//! For the first three families, an element of the ambient group with integer
//! entries lies in `P`, so integrality is the membership test used by the
//! deterministic witness searches. (A single-matrix family with |det| = 1 is
//! degenerate: the quotients are trivial and the integrality proxy can accept
//! group-level witnesses. The checkers still run there; the semigroup
//! machinery is only exercised for |det| > 1.)

use std::fmt;

use num::complex::Complex64;
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    lattice_intersection, IntegerMatrix, IntegerVector, RationalMatrix, RationalVector,
};

/// Depth used by internal witness searches when no caller bound applies.
pub const DEFAULT_SEARCH_DEPTH: usize = 8;

/// Admissible matrix families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    SingleMatrix,
    ScalarsPlusGenerators,
    FullIntegerGl,
    FinitelyGenerated,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::SingleMatrix => "single_matrix",
            Family::ScalarsPlusGenerators => "scalars_plus_generators",
            Family::FullIntegerGl => "full_integer_GL",
            Family::FinitelyGenerated => "finitely_generated",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "single_matrix" => Ok(Family::SingleMatrix),
            "scalars_plus_generators" => Ok(Family::ScalarsPlusGenerators),
            "full_integer_GL" => Ok(Family::FullIntegerGl),
            "finitely_generated" => Ok(Family::FinitelyGenerated),
            other => Err(Error::Parse(format!("unknown family tag {other:?}"))),
        }
    }

    /// True when every positive scalar matrix belongs to the monoid.
    pub fn has_scalars(&self) -> bool {
        matches!(self, Family::ScalarsPlusGenerators | Family::FullIntegerGl)
    }
}

/// A system: dimension, generating matrices, and the family they generate.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    dim: usize,
    generators: Vec<IntegerMatrix>,
    family: Family,
}

impl SystemSpec {
    pub fn new(dim: usize, generators: Vec<IntegerMatrix>, family: Family) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::NotSupported("at least one generator is required".into()));
        }
        if family == Family::SingleMatrix && generators.len() != 1 {
            return Err(Error::NotSupported(format!(
                "single_matrix family needs exactly one generator, got {}",
                generators.len()
            )));
        }
        for g in &generators {
            if !g.is_square() || g.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator {g} does not match dimension {dim}"
                )));
            }
            if g.det()?.is_zero() {
                return Err(Error::SingularMatrix(format!("{g}")));
            }
        }
        Ok(Self { dim, generators, family })
    }

    /// Convenience constructor for a one-matrix system.
    pub fn single(a: IntegerMatrix) -> Result<Self> {
        let dim = a.dim();
        Self::new(dim, vec![a], Family::SingleMatrix)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntegerMatrix] {
        &self.generators
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Products of generators in BFS order (shorter words first, generator
    /// indices lexicographic), deduplicated by value, lengths 0..=max_len.
    pub fn generator_words(&self, max_len: usize) -> Vec<IntegerMatrix> {
        let mut out = vec![IntegerMatrix::identity(self.dim)];
        let mut frontier = vec![IntegerMatrix::identity(self.dim)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &self.generators {
                    let m = w.mul(g);
                    if !out.contains(&m) {
                        out.push(m.clone());
                        next.push(m);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Right-multiple witness: (alpha, beta) with a * alpha = b * beta.
    ///
    /// Deterministic search order: the identity, then (in scalar families)
    /// scalar matrices k*I over the divisors k of |det b| in ascending order,
    /// then generator words in BFS order up to `depth`.
    pub fn ore_witness(
        &self,
        a: &IntegerMatrix,
        b: &IntegerMatrix,
        depth: usize,
    ) -> Result<(IntegerMatrix, IntegerMatrix)> {
        let b_inv = RationalMatrix::from_integer(b).inverse()?;
        let a_rat = RationalMatrix::from_integer(a);
        let attempt = |alpha: &IntegerMatrix| -> Option<IntegerMatrix> {
            let beta = b_inv.mul(&a_rat).mul(&RationalMatrix::from_integer(alpha));
            beta.to_integer().ok()
        };
        if let Some(beta) = attempt(&IntegerMatrix::identity(self.dim)) {
            return Ok((IntegerMatrix::identity(self.dim), beta));
        }
        if self.family.has_scalars() {
            // k = |det b| always succeeds, so this loop is total here
            let db = b.abs_det()?.to_u64().ok_or_else(|| Error::OreSearchFailed {
                depth,
                detail: "determinant exceeds scalar search range".into(),
            })?;
            for k in 2..=db {
                if db % k != 0 {
                    continue;
                }
                let alpha = IntegerMatrix::scalar(self.dim, BigInt::from(k));
                if let Some(beta) = attempt(&alpha) {
                    return Ok((alpha, beta));
                }
            }
        }
        for alpha in self.generator_words(depth).into_iter().skip(1) {
            if let Some(beta) = attempt(&alpha) {
                return Ok((alpha, beta));
            }
        }
        Err(Error::OreSearchFailed { depth, detail: format!("right multiple of {a} and {b}") })
    }

    /// Left-multiple witness: (alpha, beta) with alpha * a = beta * b.
    /// Same deterministic order as the right search.
    pub fn ore_witness_left(
        &self,
        a: &IntegerMatrix,
        b: &IntegerMatrix,
        depth: usize,
    ) -> Result<(IntegerMatrix, IntegerMatrix)> {
        let b_inv = RationalMatrix::from_integer(b).inverse()?;
        let a_rat = RationalMatrix::from_integer(a);
        let attempt = |alpha: &IntegerMatrix| -> Option<IntegerMatrix> {
            let beta = RationalMatrix::from_integer(alpha).mul(&a_rat).mul(&b_inv);
            beta.to_integer().ok()
        };
        if let Some(beta) = attempt(&IntegerMatrix::identity(self.dim)) {
            return Ok((IntegerMatrix::identity(self.dim), beta));
        }
        if self.family.has_scalars() {
            let db = b.abs_det()?.to_u64().ok_or_else(|| Error::OreSearchFailed {
                depth,
                detail: "determinant exceeds scalar search range".into(),
            })?;
            for k in 2..=db {
                if db % k != 0 {
                    continue;
                }
                let alpha = IntegerMatrix::scalar(self.dim, BigInt::from(k));
                if let Some(beta) = attempt(&alpha) {
                    return Ok((alpha, beta));
                }
            }
        }
        for alpha in self.generator_words(depth).into_iter().skip(1) {
            if let Some(beta) = attempt(&alpha) {
                return Ok((alpha, beta));
            }
        }
        Err(Error::OreSearchFailed { depth, detail: format!("left multiple of {a} and {b}") })
    }

    /// Factorization g = a^-1 m b with a, b in the monoid and m in Z^n.
    ///
    /// Canonical choice: for scalar families the smallest positive scalar
    /// a = k I clearing all denominators; for a single-matrix family the
    /// smallest admissible power a = A^j.
    pub fn factorize(&self, g: &GroupElement) -> Result<Factorization> {
        match self.family {
            Family::ScalarsPlusGenerators | Family::FullIntegerGl => {
                let mut k = g.translation().denominator_lcm();
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        k = k.lcm(g.linear().entry(i, j).denom());
                    }
                }
                let k = k.abs();
                let a = IntegerMatrix::scalar(self.dim, k.clone());
                let kr = BigRational::from(k);
                let m = g.translation().scale(&kr).to_integer()?;
                let b = scale_matrix(g.linear(), &kr).to_integer()?;
                Ok(Factorization { a, m, b })
            }
            Family::SingleMatrix => {
                let gen = &self.generators[0];
                let exp = self.single_matrix_exponent(g.linear()).ok_or_else(|| {
                    Error::NotFactorizable(format!("H-part {} is not a generator power", g.linear()))
                })?;
                let j_min = if exp < 0 { (-exp) as usize } else { 0 };
                for j in j_min..j_min + DEFAULT_SEARCH_DEPTH * 8 {
                    let a = gen.pow(j);
                    let mv = RationalMatrix::from_integer(&a).mul_vec(g.translation());
                    if mv.is_integral() {
                        let b = gen.pow((j as i64 + exp) as usize);
                        return Ok(Factorization { a, m: mv.to_integer()?, b });
                    }
                }
                Err(Error::NotFactorizable(format!("translation {} too deep", g.translation())))
            }
            Family::FinitelyGenerated => {
                let words = self.generator_words(DEFAULT_SEARCH_DEPTH / 2);
                for a in &words {
                    let a_rat = RationalMatrix::from_integer(a);
                    let mv = a_rat.mul_vec(g.translation());
                    if !mv.is_integral() {
                        continue;
                    }
                    let b_rat = a_rat.mul(g.linear());
                    let Ok(b) = b_rat.to_integer() else { continue };
                    if words.contains(&b) {
                        return Ok(Factorization { a: a.clone(), m: mv.to_integer()?, b });
                    }
                }
                Err(Error::NotFactorizable(format!("{g}")))
            }
        }
    }

    /// Exponent e with h = A^e, searched over |e| <= 64; None when h is not
    /// a power of the generator.
    fn single_matrix_exponent(&self, h: &RationalMatrix) -> Option<i64> {
        let gen = &self.generators[0];
        let gen_rat = RationalMatrix::from_integer(gen);
        let gen_inv = gen_rat.inverse().ok()?;
        let mut pos = RationalMatrix::identity(self.dim);
        let mut neg = RationalMatrix::identity(self.dim);
        for e in 0..=64i64 {
            if pos == *h {
                return Some(e);
            }
            if e > 0 && neg == *h {
                return Some(-e);
            }
            pos = pos.mul(&gen_rat);
            neg = neg.mul(&gen_inv);
        }
        None
    }

    /// Directedness certificate for the monoid.
    pub fn check_c1(&self, depth: usize) -> C1Verdict {
        match self.family {
            Family::SingleMatrix => C1Verdict::Holds,
            Family::ScalarsPlusGenerators | Family::FullIntegerGl => C1Verdict::HoldsByScalars,
            Family::FinitelyGenerated => {
                for a in &self.generators {
                    for b in &self.generators {
                        if self.ore_witness(a, b, depth).is_err()
                            || self.ore_witness_left(a, b, depth).is_err()
                        {
                            return C1Verdict::Inconclusive;
                        }
                    }
                }
                C1Verdict::Holds
            }
        }
    }

    /// Finite-index certificate: |det| per generator, index-1 flagged.
    pub fn check_c2(&self) -> Result<C2Certificate> {
        let mut moduli = Vec::with_capacity(self.generators.len());
        let mut degenerate = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let d = g.abs_det()?;
            if d.is_one() {
                degenerate.push(i);
            }
            moduli.push(d);
        }
        Ok(C2Certificate { determinant_moduli: moduli, degenerate })
    }

    /// Sufficient certificate / generator-level obstruction for a trivial
    /// intersection of the conjugated lattices.
    ///
    /// `EigenvalueObstruction` means some listed generator fixes or negates a
    /// nonzero integer vector; that vector survives in every power of that
    /// generator's lattice chain, killing the condition for the cyclic
    /// submonoid it generates (and for the whole monoid in the single-matrix
    /// family).
    pub fn check_c3_sufficient(&self) -> C3Verdict {
        if self.family.has_scalars() {
            return C3Verdict::ScalarsCertified;
        }
        let mut numeric = false;
        let mut all_dilation = true;
        for g in &self.generators {
            match dilation_certificate(g) {
                Some(DilationEvidence::Exact) => {}
                Some(DilationEvidence::Numeric) => numeric = true,
                None => {
                    all_dilation = false;
                    break;
                }
            }
        }
        if all_dilation {
            return C3Verdict::DilationCertified { numeric };
        }
        for (i, g) in self.generators.iter().enumerate() {
            for (eigenvalue_one, sign) in [(true, 1i64), (false, -1i64)] {
                if let Some(v) = integer_eigenvector(g, sign) {
                    return C3Verdict::EigenvalueObstruction {
                        generator: i,
                        vector: v,
                        eigenvalue_one,
                    };
                }
            }
        }
        C3Verdict::Inconclusive
    }

    /// Hermite bases of L_r = intersection of A^j Z^n over j <= r, r = 0..R.
    pub fn intersection_chain(a: &IntegerMatrix, r_max: usize) -> Result<Vec<IntegerMatrix>> {
        let n = a.dim();
        let mut out = vec![IntegerMatrix::identity(n)];
        let mut current = IntegerMatrix::identity(n);
        for r in 1..=r_max {
            current = lattice_intersection(&current, &a.pow(r))?;
            out.push(current.clone());
        }
        Ok(out)
    }
}

/// Scale every entry of a rational matrix.
fn scale_matrix(m: &RationalMatrix, k: &BigRational) -> RationalMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            *out.entry_mut(i, j) = m.entry(i, j) * k;
        }
    }
    out
}

/// Directedness verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum C1Verdict {
    Holds,
    HoldsByScalars,
    Inconclusive,
}

/// Finite-index certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Certificate {
    /// |det| per generator, in generator order; each is the lattice index.
    pub determinant_moduli: Vec<BigInt>,
    /// Indices of generators with |det| = 1 (trivial quotient).
    pub degenerate: Vec<usize>,
}

impl C2Certificate {
    pub fn all_finite(&self) -> bool {
        true // nonzero determinants are enforced at construction
    }
}

/// Trivial-core verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C3Verdict {
    /// Every generator has all eigenvalue moduli > 1. `numeric` marks a
    /// floating-point decision (dimension > 2) at tolerance 1e-9.
    DilationCertified { numeric: bool },
    /// The family contains the scalars k >= 2, whose chains already shrink
    /// to zero.
    ScalarsCertified,
    /// `generator` fixes (eigenvalue_one) or negates `vector`.
    EigenvalueObstruction { generator: usize, vector: IntegerVector, eigenvalue_one: bool },
    Inconclusive,
}

enum DilationEvidence {
    Exact,
    Numeric,
}

/// Tolerance for the numeric eigenvalue-modulus decision in dimension > 2.
const DILATION_NUMERIC_TOL: f64 = 1e-9;

/// Evidence that all eigenvalue moduli of `a` exceed 1, or None.
fn dilation_certificate(a: &IntegerMatrix) -> Option<DilationEvidence> {
    let n = a.dim();
    match n {
        1 => {
            if a.entry(0, 0).abs() > BigInt::one() {
                Some(DilationEvidence::Exact)
            } else {
                None
            }
        }
        2 => {
            // Roots of z^2 - t z + d lie strictly outside the unit circle
            // iff the reciprocal polynomial z^2 - (t/d) z + 1/d is Schur
            // stable: |d| > 1, and (d - t + 1)/d > 0, (d + t + 1)/d > 0.
            let t = a.trace();
            let d = a.det().expect("square");
            if d.abs() <= BigInt::one() {
                return None;
            }
            let q_pos = (&d - &t + BigInt::one()) * &d > BigInt::zero();
            let q_neg = (&d + &t + BigInt::one()) * &d > BigInt::zero();
            if q_pos && q_neg {
                Some(DilationEvidence::Exact)
            } else {
                None
            }
        }
        _ => {
            // exact guard first: a root at +-1 is invisible to the float
            // iteration when it sits exactly on the circle
            let p = char_poly(a);
            let at = |x: i64| -> BigInt {
                let mut acc = BigInt::zero();
                for c in p.iter().rev() {
                    acc = acc * x + c;
                }
                acc
            };
            if at(1).is_zero() || at(-1).is_zero() {
                return None;
            }
            let moduli = eigenvalue_moduli(a);
            if moduli.iter().all(|&m| m > 1.0 + DILATION_NUMERIC_TOL) {
                Some(DilationEvidence::Numeric)
            } else {
                None
            }
        }
    }
}

/// Monic characteristic polynomial coefficients c_0..c_n (c_n = 1), exact.
pub fn char_poly(a: &IntegerMatrix) -> Vec<BigInt> {
    // Faddeev-LeVerrier: exact over the rationals, integral at the end
    let n = a.dim();
    let a_rat = RationalMatrix::from_integer(a);
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = RationalMatrix::identity(n);
    for k in 1..=n {
        m = a_rat.mul(&m);
        let mut tr = BigRational::zero();
        for i in 0..n {
            tr += m.entry(i, i);
        }
        let c = -tr / BigRational::from(BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        for i in 0..n {
            *m.entry_mut(i, i) += &c;
        }
    }
    coeffs
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Eigenvalue moduli of the characteristic polynomial roots, by
/// Durand-Kerner iteration in f64.
pub fn eigenvalue_moduli(a: &IntegerMatrix) -> Vec<f64> {
    let coeffs: Vec<f64> = char_poly(a).iter().map(|c| c.to_f64().unwrap_or(f64::MAX)).collect();
    let n = coeffs.len() - 1;
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + Complex64::new(*c, 0.0);
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..500 {
        let mut max_delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            max_delta = max_delta.max(delta.norm());
        }
        if max_delta < 1e-13 {
            break;
        }
    }
    let mut moduli: Vec<f64> = roots.iter().map(|r| r.norm()).collect();
    moduli.sort_by(|a, b| a.partial_cmp(b).expect("finite moduli"));
    moduli
}

/// Exact check for a 2x2 integer matrix: no eigenvalue 1 or -1, i.e. the
/// characteristic polynomial is nonzero at both units.
pub fn check_c3_2x2(a: &IntegerMatrix) -> Result<bool> {
    if !a.is_square() || a.dim() != 2 {
        return Err(Error::WrongDimension(if a.is_square() { a.dim() } else { a.rows() }));
    }
    let d = a.abs_det()?;
    if d <= BigInt::one() {
        return Err(Error::DeterminantTooSmall(d.to_string()));
    }
    let n = a.dim();
    let id = IntegerMatrix::identity(n);
    // p(1) = det(I - A), p(-1) = det(-I - A) up to sign
    let p1 = sub(&id, a).det()?;
    let m1 = sub(&id.neg(), a).det()?;
    Ok(!p1.is_zero() && !m1.is_zero())
}

fn sub(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            *out.entry_mut(i, j) = a.entry(i, j) - b.entry(i, j);
        }
    }
    out
}

/// Primitive integer eigenvector of `a` for eigenvalue `sign` (1 or -1),
/// via the exact rational kernel of (A - sign I).
pub fn integer_eigenvector(a: &IntegerMatrix, sign: i64) -> Option<IntegerVector> {
    let n = a.dim();
    let shifted = sub(a, &IntegerMatrix::scalar(n, BigInt::from(sign)));
    let ns = RationalMatrix::from_integer(&shifted).nullspace();
    ns.first().map(|v| v.clear_denominators_primitive())
}

/// True when the affine map moves the space: its linear part is not the
/// identity.
pub fn check_effective(g: &GroupElement) -> bool {
    !g.linear().is_identity()
}

/// An affine map x -> v + h x with rational translation and invertible
/// rational linear part.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    translation: RationalVector,
    linear: RationalMatrix,
}

impl GroupElement {
    /// Constructs and validates against the system: the element must admit a
    /// factorization a^-1 m b over the family.
    pub fn new(spec: &SystemSpec, translation: RationalVector, linear: RationalMatrix) -> Result<Self> {
        let g = Self::from_parts(translation, linear);
        spec.factorize(&g)?;
        Ok(g)
    }

    /// Constructs without the factorizability check. Composition and inverse
    /// of valid elements stay valid, so internal call sites use this.
    pub fn from_parts(translation: RationalVector, linear: RationalMatrix) -> Self {
        debug_assert_eq!(translation.dim(), linear.rows());
        debug_assert!(linear.is_square());
        Self { translation, linear }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_parts(RationalVector::zero(dim), RationalMatrix::identity(dim))
    }

    /// The isometry word s_a as a group element: x -> A x.
    pub fn from_s(a: &IntegerMatrix) -> Self {
        Self::from_parts(RationalVector::zero(a.dim()), RationalMatrix::from_integer(a))
    }

    /// The co-isometry word s_a^*: x -> A^-1 x.
    pub fn from_s_star(a: &IntegerMatrix) -> Result<Self> {
        let inv = RationalMatrix::from_integer(a).inverse()?;
        Ok(Self::from_parts(RationalVector::zero(a.dim()), inv))
    }

    /// The translation unitary u(m): x -> m + x.
    pub fn from_u(m: &IntegerVector) -> Self {
        Self::from_parts(RationalVector::from_integer(m), RationalMatrix::identity(m.dim()))
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn translation(&self) -> &RationalVector {
        &self.translation
    }

    pub fn linear(&self) -> &RationalMatrix {
        &self.linear
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.linear.is_identity()
    }

    /// Group law: (v1, h1)(v2, h2) = (v1 + h1 v2, h1 h2); `other` acts first
    /// on points, self last.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_parts(
            self.translation.add(&self.linear.mul_vec(&other.translation)),
            self.linear.mul(&other.linear),
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let h_inv = self.linear.inverse()?;
        Ok(Self::from_parts(h_inv.mul_vec(&self.translation).neg(), h_inv))
    }

    pub fn apply(&self, x: &RationalVector) -> RationalVector {
        self.translation.add(&self.linear.mul_vec(x))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(v={}, h={})", self.translation, self.linear)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word decomposition g = a^-1 m b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub a: IntegerMatrix,
    pub m: IntegerVector,
    pub b: IntegerMatrix,
}

impl Factorization {
    /// The affine map this word denotes.
    pub fn group_element(&self) -> Result<GroupElement> {
        let a_inv = RationalMatrix::from_integer(&self.a).inverse()?;
        Ok(GroupElement::from_parts(
            a_inv.mul_vec(&RationalVector::from_integer(&self.m)),
            a_inv.mul(&RationalMatrix::from_integer(&self.b)),
        ))
    }
}

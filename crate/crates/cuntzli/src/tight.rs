//! Finite-resolution model of the boundary completion and its groupoid of
//! germs.
//!
//! A point of the completion is only ever held as a [`Cylinder`]: a residue
//! class at a chosen lattice level. Anything the stored level cannot decide
//! answers [`Tristate::Unknown`] instead of being guessed. Operations never
//! refine a cylinder behind the caller's back (levels are user-chosen), but
//! they may coarsen: a preimage under `a` drops a factor of `a` from the
//! level.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    lattice_member, IntegerMatrix, IntegerVector, QuotientGroup, RationalMatrix, RationalVector,
};
use crate::semigroup::{Projection, TElement};
use crate::system::{Family, GroupElement, SystemSpec};

/// The residue class `r + C Z^n`: all points of the completion whose class
/// at level `C` is `r`. Level `I`, residue `0` is the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    level: IntegerMatrix,
    residue: IntegerVector,
}

impl Cylinder {
    /// Builds a cylinder, reducing the residue to its canonical
    /// representative modulo the level.
    pub fn new(level: IntegerMatrix, residue: IntegerVector) -> Result<Self> {
        let q = QuotientGroup::new(level.clone())?;
        let residue = q.reduce(&residue);
        Ok(Self { level, residue })
    }

    pub fn whole_space(dim: usize) -> Self {
        Self { level: IntegerMatrix::identity(dim), residue: IntegerVector::zero(dim) }
    }

    pub fn dim(&self) -> usize {
        self.level.dim()
    }

    pub fn level(&self) -> &IntegerMatrix {
        &self.level
    }

    pub fn residue(&self) -> &IntegerVector {
        &self.residue
    }

    /// The same set as a one-coset projection.
    pub fn to_projection(&self) -> Projection {
        Projection::new(self.level.clone(), vec![self.residue.clone()])
            .expect("level is invertible")
    }
}

impl fmt::Display for Cylinder {
    /// Grammar form: `cyl[4;1]` in dimension 1, `cyl[[[0,2],[1,-2]];(1,0)]`
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 1 {
            write!(f, "cyl[{};{}]", self.level.entry(0, 0), self.residue.entry(0))
        } else {
            write!(f, "cyl[{};{}]", self.level, self.residue)
        }
    }
}

/// Three-valued answer for queries at finite resolution. `Unknown` appears
/// exactly when the query asks for more level than the cylinder stores.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tristate {
    In,
    Out,
    Unknown,
}

/// A partial map applied to a cylinder: the image when the level decides
/// it, `Out` when the point provably leaves the space, `Unknown` when the
/// level cannot tell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CylinderOutcome {
    Known(Cylinder),
    Out,
    Unknown,
}

impl CylinderOutcome {
    pub fn known(&self) -> Option<&Cylinder> {
        match self {
            CylinderOutcome::Known(x) => Some(x),
            _ => None,
        }
    }

    pub fn into_known(self) -> Option<Cylinder> {
        match self {
            CylinderOutcome::Known(x) => Some(x),
            _ => None,
        }
    }
}

/// How two cylinders sit relative to each other, as far as their levels can
/// compare. `Incomparable` means neither level divides the other; the sets
/// may still intersect, but these two representations cannot decide it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CylinderRelation {
    Equal,
    FirstInSecond,
    SecondInFirst,
    Disjoint,
    Incomparable,
}

// C | D in the monoid sense: D Z^n is a sublattice of C Z^n.
fn level_divides(coarse: &IntegerMatrix, fine: &IntegerMatrix) -> Result<bool> {
    let inv = RationalMatrix::from_integer(coarse).inverse()?;
    Ok(inv.mul(&RationalMatrix::from_integer(fine)).is_integral())
}

/// Membership of a cylinder in the set of a projection.
///
/// Decidable exactly when the projection's level is coarser than or equal
/// to the cylinder's. A finer query answers `Unknown`; the caller decides
/// whether to re-ask at a finer cylinder.
pub fn cyl_eval(x: &Cylinder, f: &Projection) -> Tristate {
    let comparable = level_divides(f.level(), x.level()).expect("projection level is invertible");
    if !comparable {
        return Tristate::Unknown;
    }
    if f.contains(x.residue()).expect("projection level is invertible") {
        Tristate::In
    } else {
        Tristate::Out
    }
}

/// All cylinders at a given level, one per residue class. Each pair is
/// disjoint, and on its own defining projection each evaluates `In`.
pub fn ultrafilters_at_level(c: &IntegerMatrix) -> Result<Vec<Cylinder>> {
    let q = QuotientGroup::new(c.clone())?;
    q.enumerate().into_iter().map(|r| Cylinder::new(c.clone(), r)).collect()
}

/// Forward conjugation `x -> a x a^{-1}` on cylinders. Exact: the level
/// moves from `C` to `a C` and the residue to `A r`.
pub fn act_conj(a: &IntegerMatrix, x: &Cylinder) -> Result<Cylinder> {
    Cylinder::new(a.mul(x.level()), a.mul_vec(x.residue()))
}

/// Backward conjugation `x -> a^{-1} x a`, defined on the image of the
/// forward map.
///
/// `Unknown` when the level carries no factor of `a` (the question is finer
/// than the data); `Out` when it does but the residue is not divisible by
/// `a`, which is exactly the membership criterion for the image of the
/// completion under `a`.
pub fn act_conj_inv(a: &IntegerMatrix, x: &Cylinder) -> Result<CylinderOutcome> {
    let a_inv = RationalMatrix::from_integer(a).inverse()?;
    let coarser = a_inv.mul(&RationalMatrix::from_integer(x.level()));
    if !coarser.is_integral() {
        return Ok(CylinderOutcome::Unknown);
    }
    if !lattice_member(x.residue(), a)? {
        return Ok(CylinderOutcome::Out);
    }
    let residue = a_inv.mul_vec(&RationalVector::from_integer(x.residue())).to_integer()?;
    Ok(CylinderOutcome::Known(Cylinder::new(coarser.to_integer()?, residue)?))
}

/// The right action of a group element on a cylinder: `x . g = g^{-1}(x)`,
/// computed through a factorization `g = a^{-1} m b` as forward conjugation
/// by `a`, a shift by `-m`, and backward conjugation by `b`.
pub fn act_group(spec: &SystemSpec, g: &GroupElement, x: &Cylinder) -> Result<CylinderOutcome> {
    let f = spec.factorize(g)?;
    let pushed = act_conj(&f.a, x)?;
    let shifted = Cylinder::new(pushed.level().clone(), pushed.residue().sub(&f.m))?;
    act_conj_inv(&f.b, &shifted)
}

/// Set comparison of two cylinders at their stored levels.
pub fn cylinder_compare(x: &Cylinder, y: &Cylinder) -> Result<CylinderRelation> {
    let x_finer = level_divides(y.level(), x.level())?;
    let y_finer = level_divides(x.level(), y.level())?;
    if x_finer && y_finer {
        // equal lattices, possibly different level matrices
        let q = QuotientGroup::new(x.level().clone())?;
        return Ok(if q.reduce(y.residue()) == *x.residue() {
            CylinderRelation::Equal
        } else {
            CylinderRelation::Disjoint
        });
    }
    if x_finer {
        let q = QuotientGroup::new(y.level().clone())?;
        return Ok(if q.reduce(x.residue()) == *y.residue() {
            CylinderRelation::FirstInSecond
        } else {
            CylinderRelation::Disjoint
        });
    }
    if y_finer {
        let q = QuotientGroup::new(x.level().clone())?;
        return Ok(if q.reduce(y.residue()) == *x.residue() {
            CylinderRelation::SecondInFirst
        } else {
            CylinderRelation::Disjoint
        });
    }
    Ok(CylinderRelation::Incomparable)
}

/// An arrow of the germ groupoid: a base cylinder (the range of the arrow)
/// together with the group element acting on it. The source `base . germ`
/// is computed on construction; the arrow only exists when the base
/// provably stays inside the space under the germ, so every held value
/// carries a valid membership certificate.
#[derive(Clone, Debug)]
pub struct GroupoidElement {
    base: Cylinder,
    germ: GroupElement,
    source: Cylinder,
}

impl GroupoidElement {
    pub fn new(spec: &SystemSpec, base: Cylinder, germ: GroupElement) -> Result<Self> {
        match act_group(spec, &germ, &base)? {
            CylinderOutcome::Known(source) => Ok(Self { base, germ, source }),
            CylinderOutcome::Out => Err(Error::NotComposable(format!(
                "{base} leaves the space under {germ}"
            ))),
            CylinderOutcome::Unknown => Err(Error::ResolutionTooCoarse(format!(
                "{base} is too coarse to certify membership under {germ}"
            ))),
        }
    }

    /// Unit arrow at a cylinder.
    pub fn unit(base: Cylinder) -> Self {
        let germ = GroupElement::identity(base.dim());
        Self { source: base.clone(), base, germ }
    }

    /// The range cylinder: the base itself.
    pub fn range(&self) -> &Cylinder {
        &self.base
    }

    /// The source cylinder `base . germ`.
    pub fn source(&self) -> &Cylinder {
        &self.source
    }

    pub fn germ(&self) -> &GroupElement {
        &self.germ
    }

    /// The reversed arrow: base and source swap, the germ inverts. Exact,
    /// no level is lost either way.
    pub fn inverse(&self, spec: &SystemSpec) -> Result<Self> {
        Self::new(spec, self.source.clone(), self.germ.inverse()?)
    }
}

impl fmt::Display for GroupoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arrow[{}; {}]", self.base, self.germ)
    }
}

/// Arrow composition: defined when the first source and the second base
/// denote the same patch or one contains the other.
///
/// With the second base strictly finer, the first arrow restricts: its base
/// is pulled back through the germ so that the restricted source is exactly
/// the finer patch. Disjoint patches refuse with `NotComposable`;
/// incomparable levels with `ResolutionTooCoarse`.
pub fn groupoid_compose(
    spec: &SystemSpec,
    first: &GroupoidElement,
    second: &GroupoidElement,
) -> Result<GroupoidElement> {
    let germ = first.germ().compose(second.germ());
    match cylinder_compare(first.source(), second.range())? {
        CylinderRelation::Equal | CylinderRelation::FirstInSecond => {
            GroupoidElement::new(spec, first.range().clone(), germ)
        }
        CylinderRelation::SecondInFirst => {
            let back = first.germ().inverse()?;
            match act_group(spec, &back, second.range())? {
                CylinderOutcome::Known(restricted) => GroupoidElement::new(spec, restricted, germ),
                CylinderOutcome::Out => Err(Error::NotComposable(format!(
                    "restriction of {first} to {} is empty",
                    second.range()
                ))),
                CylinderOutcome::Unknown => Err(Error::ResolutionTooCoarse(format!(
                    "cannot pull {} back through {first}",
                    second.range()
                ))),
            }
        }
        CylinderRelation::Disjoint => Err(Error::NotComposable(format!(
            "source {} and range {} are disjoint",
            first.source(),
            second.range()
        ))),
        CylinderRelation::Incomparable => Err(Error::ResolutionTooCoarse(format!(
            "source {} and range {} have incomparable levels",
            first.source(),
            second.range()
        ))),
    }
}

/// The arrow as a normal-form semigroup element: the base cylinder becomes
/// the support projection, the germ is carried over unchanged, and the pair
/// is canonicalized. Composition of arrows goes to multiplication of
/// images, and the base always evaluates `In` on the image's support.
pub fn phi(spec: &SystemSpec, gamma: &GroupoidElement) -> Result<TElement> {
    TElement::from_range_and_germ(gamma.range().to_projection(), gamma.germ().clone())
        .canonicalize(spec)
}

/// Whether two arrows are the same germ over a common patch.
///
/// Distinct affine maps agree on no cylinder (agreement on a full coset
/// forces agreement everywhere), so unequal group elements decide `Out`
/// with no witness needed. Equal group elements still need the finer base
/// certified inside the germ's range projection; when the stored level
/// cannot certify that, the answer is `Unknown` rather than an error.
pub fn germ_equal(
    spec: &SystemSpec,
    first: &GroupoidElement,
    second: &GroupoidElement,
) -> Result<Tristate> {
    let finer = match cylinder_compare(first.range(), second.range())? {
        CylinderRelation::Disjoint => return Ok(Tristate::Out),
        CylinderRelation::Incomparable => return Ok(Tristate::Unknown),
        CylinderRelation::Equal | CylinderRelation::FirstInSecond => first.range(),
        CylinderRelation::SecondInFirst => second.range(),
    };
    if first.germ() != second.germ() {
        return Ok(Tristate::Out);
    }
    let range_proj = TElement::w_range_projection(spec, first.germ())?;
    Ok(cyl_eval(finer, &range_proj))
}

/// Canonical representative of the dilation class of a pair `(x, a)`.
///
/// Two pairs are identified when simultaneous conjugation and left monoid
/// multiplication match them up. The normal form walks the canonical chain
/// of the family downward as far as the cylinder's level allows:
///
/// * one generator: strip generator factors off `a` while the backward
///   conjugation stays defined;
/// * scalars present: trade `a` for the scalar `|det a|` (conjugating by
///   `|det a| a^{-1}`, an integer matrix), then strip prime factors off the
///   scalar, smallest first, restarting after each success;
/// * several generators without scalars: no canonical chain exists, and the
///   call refuses with `NotSupported`.
pub fn dilated_normal_form(
    spec: &SystemSpec,
    x: &Cylinder,
    a: &IntegerMatrix,
) -> Result<(Cylinder, IntegerMatrix)> {
    let n = spec.dim();
    if a.is_identity() {
        return Ok((x.clone(), IntegerMatrix::identity(n)));
    }
    match spec.family() {
        Family::SingleMatrix => {
            let gen = &spec.generators()[0];
            let mut power = power_of(gen, a).ok_or_else(|| {
                Error::NotSupported(format!("{a} is not a power of the generator {gen}"))
            })?;
            let mut cur = x.clone();
            while power > 0 {
                match act_conj_inv(gen, &cur)? {
                    CylinderOutcome::Known(y) => {
                        cur = y;
                        power -= 1;
                    }
                    _ => break,
                }
            }
            Ok((cur, gen.pow(power)))
        }
        Family::ScalarsPlusGenerators | Family::FullIntegerGl => {
            let (mut cur, mut k) = match scalar_part(a) {
                Some(k) => (x.clone(), k),
                None => (act_conj(&scaled_inverse(a)?, x)?, a.abs_det()?),
            };
            'strip: loop {
                for p in distinct_primes(&k) {
                    let pm = IntegerMatrix::scalar(n, p.clone());
                    if let CylinderOutcome::Known(y) = act_conj_inv(&pm, &cur)? {
                        cur = y;
                        k = &k / &p;
                        continue 'strip;
                    }
                }
                break;
            }
            Ok((cur, IntegerMatrix::scalar(n, k)))
        }
        Family::FinitelyGenerated => Err(Error::NotSupported(
            "no canonical dilation chain for a free generator family".into(),
        )),
    }
}

/// `j` with `base^j == target`, by bounded forward search.
fn power_of(base: &IntegerMatrix, target: &IntegerMatrix) -> Option<usize> {
    let mut acc = IntegerMatrix::identity(base.dim());
    for j in 0..=64 {
        if &acc == target {
            return Some(j);
        }
        acc = acc.mul(base);
    }
    None
}

fn scalar_part(a: &IntegerMatrix) -> Option<BigInt> {
    let n = a.dim();
    let k = a.entry(0, 0).clone();
    if !k.is_positive() {
        return None;
    }
    let zero = BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { &k } else { &zero };
            if a.entry(i, j) != want {
                return None;
            }
        }
    }
    Some(k)
}

/// `|det a|` times the inverse: the integer matrix conjugating the class of
/// `(x, a)` into scalar form.
fn scaled_inverse(a: &IntegerMatrix) -> Result<IntegerMatrix> {
    let det = a.abs_det()?;
    let inv = RationalMatrix::from_integer(a).inverse()?;
    RationalMatrix::from_integer(&IntegerMatrix::scalar(a.dim(), det)).mul(&inv).to_integer()
}

/// Prime divisors of `k`, ascending, without multiplicity.
fn distinct_primes(k: &BigInt) -> Vec<BigInt> {
    let mut k = k.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= k {
        if (&k % &p).is_zero() {
            out.push(p.clone());
            while (&k % &p).is_zero() {
                k = &k / &p;
            }
        }
        p = &p + 1;
    }
    if k > BigInt::one() {
        out.push(k);
    }
    out
}

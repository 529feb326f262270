//! Exact semigroup algebra on the point module: commuting cylinder
//! projections and the partial translations they cut down.
//!
//! Every projection here is multiplication by the indicator of a cylinder
//! set: a finite union of cosets `k + C Z^n` at a common invertible integer
//! level `C`. Every element of the *-algebra generated by the isometries
//! `s_a`, the unitaries `u(m)` and these projections reduces to a pair
//! `(E, g)`: the partial map `w_g` of an affine germ `g`, cut down on its
//! range side by a projection `E`. Products, adjoints and equality stay
//! inside that normal form and are computed exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{IntegerMatrix, IntegerVector, QuotientGroup};
use crate::system::{Factorization, GroupElement, SystemSpec, DEFAULT_SEARCH_DEPTH};

/// Indicator of a finite union of cosets of `C Z^n`: level matrix `C` and a
/// sorted, deduplicated set of reduced coset representatives.
///
/// Two values with different levels can denote the same set; use
/// [`Projection::eval_equal`] for semantic comparison. Structural equality
/// (`==`) compares level and representatives verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    level: IntegerMatrix,
    cosets: Vec<IntegerVector>,
}

impl Projection {
    /// Builds a projection, reducing the cosets modulo the level.
    pub fn new(level: IntegerMatrix, cosets: Vec<IntegerVector>) -> Result<Self> {
        let q = QuotientGroup::new(level.clone())?;
        let mut reduced: Vec<IntegerVector> = cosets.iter().map(|v| q.reduce(v)).collect();
        reduced.sort();
        reduced.dedup();
        Ok(Self { level, cosets: reduced })
    }

    fn from_reduced(level: IntegerMatrix, mut cosets: Vec<IntegerVector>) -> Self {
        cosets.sort();
        cosets.dedup();
        Self { level, cosets }
    }

    /// The constant 1: level I, single coset 0.
    pub fn unit(dim: usize) -> Self {
        Self::from_reduced(IntegerMatrix::identity(dim), vec![IntegerVector::zero(dim)])
    }

    /// The constant 0 in canonical form: level I, no cosets.
    pub fn empty(dim: usize) -> Self {
        Self::from_reduced(IntegerMatrix::identity(dim), Vec::new())
    }

    /// Indicator of the sublattice `C Z^n` itself.
    pub fn lattice(level: IntegerMatrix) -> Result<Self> {
        let dim = level.dim();
        Self::new(level, vec![IntegerVector::zero(dim)])
    }

    pub fn dim(&self) -> usize {
        self.level.dim()
    }

    pub fn level(&self) -> &IntegerMatrix {
        &self.level
    }

    pub fn cosets(&self) -> &[IntegerVector] {
        &self.cosets
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// True when the union covers everything: all `|det C|` cosets present.
    pub fn is_unit(&self) -> bool {
        let order = self.level.abs_det().expect("level is invertible");
        num::BigInt::from(self.cosets.len()) == order
    }

    /// Point membership in the cylinder set.
    pub fn contains(&self, v: &IntegerVector) -> Result<bool> {
        let q = QuotientGroup::new(self.level.clone())?;
        Ok(self.cosets.binary_search(&q.reduce(v)).is_ok())
    }

    /// The same set expressed at the finer level `C * beta`: every new coset
    /// whose image modulo `C` lies in the old set is kept.
    pub fn refine(&self, beta: &IntegerMatrix) -> Result<Self> {
        let fine_level = self.level.mul(beta);
        let fine = QuotientGroup::new(fine_level.clone())?;
        let coarse = QuotientGroup::new(self.level.clone())?;
        let kept = fine
            .enumerate()
            .into_iter()
            .filter(|r| self.cosets.binary_search(&coarse.reduce(r)).is_ok())
            .collect();
        Ok(Self::from_reduced(fine_level, kept))
    }

    /// Product (= intersection of cylinder sets), computed at a common
    /// refinement of the two levels found by the Ore witness search.
    pub fn mul(&self, other: &Self, spec: &SystemSpec) -> Result<Self> {
        let (f1, f2) = if self.level == other.level {
            (self.clone(), other.clone())
        } else {
            let (b1, b2) = spec.ore_witness(&self.level, &other.level, DEFAULT_SEARCH_DEPTH)?;
            (self.refine(&b1)?, other.refine(&b2)?)
        };
        debug_assert_eq!(f1.level, f2.level);
        let kept = f1.cosets.iter().filter(|c| f2.cosets.binary_search(c).is_ok()).cloned().collect();
        Ok(Self::from_reduced(f1.level, kept))
    }

    /// Conjugation by the translation unitary: `u(m) E u(m)*` shifts the set
    /// by `m`. The level is unchanged.
    pub fn conj_u(&self, m: &IntegerVector) -> Self {
        let q = QuotientGroup::new(self.level.clone()).expect("level is invertible");
        let shifted = self.cosets.iter().map(|c| q.reduce(&c.add(m))).collect();
        Self::from_reduced(self.level.clone(), shifted)
    }

    /// Conjugation `s_a E s_a*`: the image set `A X` at level `A C`.
    pub fn conj_s(&self, a: &IntegerMatrix) -> Self {
        let new_level = a.mul(&self.level);
        let q = QuotientGroup::new(new_level.clone()).expect("level is invertible");
        let mapped = self.cosets.iter().map(|c| q.reduce(&a.mul_vec(c))).collect();
        Self::from_reduced(new_level, mapped)
    }

    /// Conjugation `s_a* E s_a`: the preimage set `{x : A x in X}`.
    ///
    /// A witness `(alpha, beta)` with `a alpha = C beta` makes the preimage a
    /// union of cosets of `alpha Z^n`; the default comes from the Ore search.
    pub fn conj_s_star(&self, a: &IntegerMatrix, spec: &SystemSpec) -> Result<Self> {
        let (alpha, beta) = spec.ore_witness(a, &self.level, DEFAULT_SEARCH_DEPTH)?;
        self.conj_s_star_with_witness(a, &alpha, &beta)
    }

    /// [`Projection::conj_s_star`] with an explicit witness. The resulting
    /// level is the chosen `alpha`; the denoted set does not depend on the
    /// witness (an evaluation-equality test target).
    pub fn conj_s_star_with_witness(
        &self,
        a: &IntegerMatrix,
        alpha: &IntegerMatrix,
        beta: &IntegerMatrix,
    ) -> Result<Self> {
        if a.mul(alpha) != self.level.mul(beta) {
            return Err(Error::NotSupported(format!(
                "witness failure: {a} * {alpha} != {} * {beta}",
                self.level
            )));
        }
        let coarse = QuotientGroup::new(self.level.clone())?;
        let fine = QuotientGroup::new(alpha.clone())?;
        let kept = fine
            .enumerate()
            .into_iter()
            .filter(|v| self.cosets.binary_search(&coarse.reduce(&a.mul_vec(v))).is_ok())
            .collect();
        Ok(Self::from_reduced(alpha.clone(), kept))
    }

    /// Semantic equality: both sets compared at a common refinement.
    pub fn eval_equal(&self, other: &Self, spec: &SystemSpec) -> Result<bool> {
        if self.level == other.level {
            return Ok(self.cosets == other.cosets);
        }
        let (b1, b2) = spec.ore_witness(&self.level, &other.level, DEFAULT_SEARCH_DEPTH)?;
        Ok(self.refine(&b1)?.cosets == other.refine(&b2)?.cosets)
    }

    /// Semantic containment: self a subset of other.
    pub fn leq(&self, other: &Self, spec: &SystemSpec) -> Result<bool> {
        let meet = self.mul(other, spec)?;
        meet.eval_equal(self, spec)
    }
}

impl fmt::Display for Projection {
    /// Grammar form: `f[2;{0,1}]` in dimension 1, levels as nested rows and
    /// cosets as tuples otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f[")?;
        if self.dim() == 1 {
            write!(f, "{}", self.level.entry(0, 0))?;
        } else {
            write!(f, "{}", self.level)?;
        }
        write!(f, ";{{")?;
        for (i, c) in self.cosets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if self.dim() == 1 {
                write!(f, "{}", c.entry(0))?;
            } else {
                write!(f, "{c}")?;
            }
        }
        write!(f, "}}]")
    }
}

/// Normal form `E * w_g`: the partial map of the germ `g`, cut down by the
/// projection `E` on the range side. `w_g` sends an integer point `x` to
/// `g(x)` whenever `g(x)` is integral, so after [`TElement::canonicalize`]
/// the pair satisfies `E <= w_g w_g*`.
///
/// Equality of canonical elements is decided exactly: the supports must be
/// the same cylinder set and the germs identical as affine maps. No germ
/// comparison up to the support is needed, because two affine maps that
/// agree on a full coset `k + C Z^n` already agree everywhere (their
/// difference kills the finite-index lattice `C Z^n`, hence all of `Q^n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TElement {
    range: Projection,
    germ: GroupElement,
}

impl TElement {
    /// The zero operator in canonical form: empty support, identity germ.
    pub fn zero(dim: usize) -> Self {
        Self { range: Projection::empty(dim), germ: GroupElement::identity(dim) }
    }

    /// The identity operator.
    pub fn one(dim: usize) -> Self {
        Self { range: Projection::unit(dim), germ: GroupElement::identity(dim) }
    }

    /// The isometry `s_a`; its range projection is the lattice `A Z^n`.
    pub fn s(a: &IntegerMatrix) -> Result<Self> {
        Ok(Self { range: Projection::lattice(a.clone())?, germ: GroupElement::from_s(a) })
    }

    /// The co-isometry `s_a*`; onto, so its range projection is 1.
    pub fn s_star(a: &IntegerMatrix) -> Result<Self> {
        Ok(Self { range: Projection::unit(a.dim()), germ: GroupElement::from_s_star(a)? })
    }

    /// The unitary `u(m)`.
    pub fn u(m: &IntegerVector) -> Self {
        Self { range: Projection::unit(m.dim()), germ: GroupElement::from_u(m) }
    }

    /// A projection as an element (identity germ).
    pub fn projection(e: Projection) -> Self {
        if e.is_empty() {
            Self::zero(e.dim())
        } else {
            Self { range: e.clone(), germ: GroupElement::identity(e.dim()) }
        }
    }

    /// Assembles a pair directly. Not necessarily canonical: run
    /// [`TElement::canonicalize`] before comparing or multiplying.
    pub fn from_range_and_germ(range: Projection, germ: GroupElement) -> Self {
        debug_assert_eq!(range.dim(), germ.dim());
        Self { range, germ }
    }

    /// Reduces the five-term word `s_a* u(m) E u(m') s_b` to normal form:
    /// all of the projection data moves to the left through the word,
    /// leaving the single germ `a^-1 (m + m') b`.
    pub fn from_five_tuple(
        spec: &SystemSpec,
        a: &IntegerMatrix,
        m: &IntegerVector,
        e: &Projection,
        m2: &IntegerVector,
        b: &IntegerMatrix,
    ) -> Result<Self> {
        let germ = GroupElement::from_s_star(a)?
            .compose(&GroupElement::from_u(&m.add(m2)))
            .compose(&GroupElement::from_s(b));
        let range = e.conj_u(m).conj_s_star(a, spec)?;
        Self { range, germ }.canonicalize(spec)
    }

    pub fn dim(&self) -> usize {
        self.germ.dim()
    }

    pub fn range(&self) -> &Projection {
        &self.range
    }

    pub fn germ(&self) -> &GroupElement {
        &self.germ
    }

    pub fn is_zero(&self) -> bool {
        self.range.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.germ.is_identity() && self.range.is_unit()
    }

    /// The range projection `w_g w_g*` of the germ's partial map: the set of
    /// integer points `y` with `g^-1(y)` integral.
    pub fn w_range_projection(spec: &SystemSpec, g: &GroupElement) -> Result<Projection> {
        let f = spec.factorize(g)?;
        // y in range iff A y lands in m + B Z^n
        Projection::lattice(f.b.clone())?.conj_u(&f.m).conj_s_star(&f.a, spec)
    }

    /// `w_g E w_g*` for the word `w_g = s_a* u(m) s_b` of a factorization.
    fn conjugate_by_word(spec: &SystemSpec, f: &Factorization, e: &Projection) -> Result<Projection> {
        e.conj_s(&f.b).conj_u(&f.m).conj_s_star(&f.a, spec)
    }

    /// Cuts the support down to the germ's range projection and collapses an
    /// empty support to the canonical zero.
    pub fn canonicalize(self, spec: &SystemSpec) -> Result<Self> {
        if self.range.is_empty() {
            return Ok(Self::zero(self.dim()));
        }
        let ran = Self::w_range_projection(spec, &self.germ)?;
        let cut = self.range.mul(&ran, spec)?;
        if cut.is_empty() {
            Ok(Self::zero(self.dim()))
        } else {
            Ok(Self { range: cut, germ: self.germ })
        }
    }

    /// Operator product; `other` acts first on points.
    ///
    /// The germ composes; the support is the triple meet of self's support,
    /// other's support pushed through self's word, and the middle projection
    /// produced when the inner `s_b s_a'*` pair is rewritten over a common
    /// left multiple `beta b = alpha a' = c` as `s_beta* e_c s_alpha`.
    pub fn mul(&self, other: &Self, spec: &SystemSpec) -> Result<Self> {
        let n = self.dim();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(n));
        }
        let germ = self.germ.compose(&other.germ);
        let f1 = spec.factorize(&self.germ)?;
        let f2 = spec.factorize(&other.germ)?;
        // beta * b1 = alpha * a2 = c
        let (beta, alpha) = spec.ore_witness_left(&f1.b, &f2.a, DEFAULT_SEARCH_DEPTH)?;
        let c = beta.mul(&f1.b);
        debug_assert_eq!(c, alpha.mul(&f2.a));
        let mid = Projection::lattice(c)?
            .conj_u(&beta.mul_vec(&f1.m))
            .conj_s_star(&beta.mul(&f1.a), spec)?;
        let pushed = Self::conjugate_by_word(spec, &f1, &other.range)?;
        let range = self.range.mul(&pushed, spec)?.mul(&mid, spec)?;
        Self { range, germ }.canonicalize(spec)
    }

    /// Adjoint: the germ inverts and the support moves through the inverted
    /// word, since `(E w_g)* = (w_g* E w_g) w_g*`.
    pub fn adjoint(&self, spec: &SystemSpec) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero(self.dim()));
        }
        let germ = self.germ.inverse()?;
        let f = spec.factorize(&germ)?;
        let range = Self::conjugate_by_word(spec, &f, &self.range)?;
        Self { range, germ }.canonicalize(spec)
    }

    /// Exact operator equality of canonical elements: identical germs and
    /// evaluation-equal supports (see the type-level note on why the germ
    /// comparison needs no quotient).
    pub fn t_equal(&self, other: &Self, spec: &SystemSpec) -> Result<bool> {
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() && other.is_zero());
        }
        Ok(self.germ == other.germ && self.range.eval_equal(&other.range, spec)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{RationalMatrix, RationalVector};

    fn v1(x: i64) -> IntegerVector {
        IntegerVector::from_i64(&[x])
    }

    fn m1(x: i64) -> IntegerMatrix {
        IntegerMatrix::from_i64(1, &[x])
    }

    fn proj1(level: i64, cosets: &[i64]) -> Projection {
        Projection::new(m1(level), cosets.iter().map(|&c| v1(c)).collect()).unwrap()
    }

    fn spec1() -> SystemSpec {
        SystemSpec::single(m1(2)).unwrap()
    }

    #[test]
    fn refine_splits_cosets() {
        let f = proj1(2, &[0]).refine(&m1(2)).unwrap();
        assert_eq!(f, proj1(4, &[0, 2]));
    }

    #[test]
    fn refine_preserves_evaluation() {
        let spec = spec1();
        let f = proj1(2, &[1]);
        assert!(f.refine(&m1(4)).unwrap().eval_equal(&f, &spec).unwrap());
    }

    #[test]
    fn mul_intersects_across_levels() {
        let spec = spec1();
        let f = proj1(2, &[1]).mul(&proj1(4, &[1, 3]), &spec).unwrap();
        // odd numbers meet {1,3} mod 4 in exactly {1,3} mod 4
        assert_eq!(f, proj1(4, &[1, 3]));

        let g = proj1(2, &[0]).mul(&proj1(4, &[1, 3]), &spec).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn conj_u_translates() {
        assert_eq!(proj1(2, &[1]).conj_u(&v1(1)), proj1(2, &[0]));
        assert_eq!(proj1(2, &[1]).conj_u(&v1(-3)), proj1(2, &[0]));
    }

    #[test]
    fn conj_s_images() {
        assert_eq!(proj1(2, &[1]).conj_s(&m1(2)), proj1(4, &[2]));
    }

    #[test]
    fn conj_s_star_cases() {
        let spec = spec1();
        // no even number is odd: empty
        let none = proj1(2, &[1]).conj_s_star(&m1(2), &spec).unwrap();
        assert!(none.is_empty());
        // doubling always lands in the even numbers: full
        let all = proj1(2, &[0]).conj_s_star(&m1(2), &spec).unwrap();
        assert!(all.is_unit());
        // 2x = 2 mod 4 iff x odd
        let odd = proj1(4, &[2]).conj_s_star(&m1(2), &spec).unwrap();
        assert_eq!(odd, proj1(2, &[1]));
    }

    #[test]
    fn conj_s_star_witness_independent() {
        let spec = spec1();
        let f = proj1(2, &[0]);
        let default = f.conj_s_star(&m1(2), &spec).unwrap();
        // a bigger valid witness: 2*2 = 2*2
        let padded = f.conj_s_star_with_witness(&m1(2), &m1(2), &m1(2)).unwrap();
        assert_ne!(default.level(), padded.level());
        assert!(default.eval_equal(&padded, &spec).unwrap());
    }

    #[test]
    fn witness_validation() {
        let f = proj1(2, &[0]);
        assert!(f.conj_s_star_with_witness(&m1(2), &m1(2), &m1(3)).is_err());
    }

    #[test]
    fn leq_is_containment() {
        let spec = spec1();
        assert!(proj1(4, &[1]).leq(&proj1(2, &[1]), &spec).unwrap());
        assert!(!proj1(2, &[1]).leq(&proj1(4, &[1]), &spec).unwrap());
    }

    #[test]
    fn s_times_s_star_is_lattice_projection() {
        let spec = spec1();
        let s = TElement::s(&m1(2)).unwrap();
        let ss = s.mul(&s.adjoint(&spec).unwrap(), &spec).unwrap();
        assert!(ss.germ().is_identity());
        assert_eq!(*ss.range(), proj1(2, &[0]));
        // and the other order is the identity
        let s_star_s = s.adjoint(&spec).unwrap().mul(&s, &spec).unwrap();
        assert!(s_star_s.is_one());
    }

    #[test]
    fn mul_example_with_translations() {
        // (u(1) s_2)(s_2* u(1)) = support {odd} with germ x -> x + 2
        let spec = spec1();
        let u1 = TElement::u(&v1(1));
        let s2 = TElement::s(&m1(2)).unwrap();
        let t1 = u1.mul(&s2, &spec).unwrap();
        let t2 = s2.adjoint(&spec).unwrap().mul(&u1, &spec).unwrap();
        let prod = t1.mul(&t2, &spec).unwrap();
        assert_eq!(*prod.range(), proj1(2, &[1]));
        assert_eq!(*prod.germ(), GroupElement::from_u(&v1(2)));
    }

    #[test]
    fn five_tuple_vanishing_and_collapse() {
        let spec = spec1();
        let unit = Projection::unit(1);
        // s_2* u(1) s_2: the germ x -> x + 1/2 never lands in Z
        let t = TElement::from_five_tuple(&spec, &m1(2), &v1(1), &unit, &v1(0), &m1(2)).unwrap();
        assert!(t.is_zero());
        // s_2* u(2) s_2 = u(1), also via the scaled word s_4* u(4) s_4
        let t1 = TElement::from_five_tuple(&spec, &m1(2), &v1(2), &unit, &v1(0), &m1(2)).unwrap();
        let t2 = TElement::from_five_tuple(&spec, &m1(4), &v1(4), &unit, &v1(0), &m1(4)).unwrap();
        assert!(t1.t_equal(&TElement::u(&v1(1)), &spec).unwrap());
        assert!(t1.t_equal(&t2, &spec).unwrap());
        // and the vanishing word equals its scaled form as well
        let z2 = TElement::from_five_tuple(&spec, &m1(4), &v1(2), &unit, &v1(0), &m1(4)).unwrap();
        assert!(t.t_equal(&z2, &spec).unwrap());
    }

    #[test]
    fn adjoint_examples() {
        let spec = spec1();
        let s2 = TElement::s(&m1(2)).unwrap();
        let adj = s2.adjoint(&spec).unwrap();
        assert!(adj.range().is_unit());
        assert_eq!(
            *adj.germ(),
            GroupElement::from_parts(
                RationalVector::zero(1),
                RationalMatrix::from_integer(&m1(2)).inverse().unwrap()
            )
        );
        // involution
        assert!(adj.adjoint(&spec).unwrap().t_equal(&s2, &spec).unwrap());
    }

    #[test]
    fn adjoint_reverses_products() {
        let spec = spec1();
        let a = TElement::u(&v1(1)).mul(&TElement::s(&m1(2)).unwrap(), &spec).unwrap();
        let b = TElement::s_star(&m1(2)).unwrap();
        let lhs = a.mul(&b, &spec).unwrap().adjoint(&spec).unwrap();
        let rhs = b.adjoint(&spec).unwrap().mul(&a.adjoint(&spec).unwrap(), &spec).unwrap();
        assert!(lhs.t_equal(&rhs, &spec).unwrap());
    }

    #[test]
    fn matrix_level_roundtrip() {
        // dimension 2 with the non-diagonal running example
        let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
        let spec = SystemSpec::single(a.clone()).unwrap();
        let s = TElement::s(&a).unwrap();
        let u = TElement::u(&IntegerVector::from_i64(&[1, 0]));
        let t = u.mul(&s, &spec).unwrap();
        let tt = t.mul(&t.adjoint(&spec).unwrap(), &spec).unwrap();
        // t t* is the projection onto the shifted lattice 1 + A Z^2
        assert!(tt.germ().is_identity());
        let expected = Projection::lattice(a.clone())
            .unwrap()
            .conj_u(&IntegerVector::from_i64(&[1, 0]));
        assert!(tt.range().eval_equal(&expected, &spec).unwrap());
        // t* t = 1 since u s is an isometry
        let t_star_t = t.adjoint(&spec).unwrap().mul(&t, &spec).unwrap();
        assert!(t_star_t.is_one());
    }

    #[test]
    fn display_grammar_form() {
        assert_eq!(proj1(4, &[1, 3]).to_string(), "f[4;{1,3}]");
        let a = IntegerMatrix::from_i64(2, &[0, 2, 1, -2]);
        let p = Projection::lattice(a).unwrap();
        assert_eq!(p.to_string(), "f[[[0,2],[1,-2]];{(0,0)}]");
    }
}

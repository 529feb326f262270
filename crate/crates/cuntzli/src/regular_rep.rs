//! Exact oracle: the generators as partial bijections of the basis of
//! ell^2(Z^n) tensor ell^2(H), and pointwise verification of the defining
//! isometry relations on finite windows.
//!
//! Every element built by the symbolic layer acts on basis points by a
//! partial injection; nothing here is symbolic, so agreement between this
//! module and the normal-form algebra is an independent cross-check. Window
//! agreement is necessary-only evidence: the symbolic side decides equality,
//! the oracle catches its mistakes.
//!
//! Convention throughout: products act right factor first, exactly as the
//! normal-form multiplication composes germs.

use std::fmt;

use crate::error::Result;
use crate::linalg::{lattice_member, IntegerVector, QuotientGroup, RationalMatrix, RationalVector};
use crate::linalg::IntegerMatrix;
use crate::semigroup::{Projection, TElement};
use crate::system::SystemSpec;

/// A basis vector delta_n tensor delta_h: an integer point and an invertible
/// rational matrix labelling the group coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPoint {
    pub n_part: IntegerVector,
    pub h_part: RationalMatrix,
}

impl BasisPoint {
    pub fn new(n_part: IntegerVector, h_part: RationalMatrix) -> Self {
        debug_assert_eq!(n_part.dim(), h_part.rows());
        Self { n_part, h_part }
    }

    /// Point with the identity group label.
    pub fn at(n_part: IntegerVector) -> Self {
        let dim = n_part.dim();
        Self::new(n_part, RationalMatrix::identity(dim))
    }
}

impl fmt::Display for BasisPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n_part, self.h_part)
    }
}

/// One of the generating operators.
#[derive(Clone, Debug)]
pub enum BasicOp {
    /// The isometry for a monoid matrix: (n, h) -> (A n, a h), total.
    S(IntegerMatrix),
    /// Its adjoint: defined iff A divides n, then (A^-1 n, a^-1 h).
    SStar(IntegerMatrix),
    /// The translation unitary: (n + m, h), total.
    U(IntegerVector),
    /// A cylinder projection acting as a partial identity on its set.
    Proj(Projection),
}

/// Applies one generator; None encodes "outside the domain".
pub fn apply_basic(op: &BasicOp, p: &BasisPoint) -> Option<BasisPoint> {
    match op {
        BasicOp::S(a) => {
            let a_rat = RationalMatrix::from_integer(a);
            Some(BasisPoint::new(a.mul_vec(&p.n_part), a_rat.mul(&p.h_part)))
        }
        BasicOp::SStar(a) => {
            if !lattice_member(&p.n_part, a).ok()? {
                return None;
            }
            let a_inv = RationalMatrix::from_integer(a).inverse().ok()?;
            let n = a_inv.mul_vec(&RationalVector::from_integer(&p.n_part));
            Some(BasisPoint::new(n.to_integer().ok()?, a_inv.mul(&p.h_part)))
        }
        BasicOp::U(m) => Some(BasisPoint::new(p.n_part.add(m), p.h_part.clone())),
        BasicOp::Proj(e) => {
            if e.contains(&p.n_part).ok()? {
                Some(p.clone())
            } else {
                None
            }
        }
    }
}

/// Applies a word of generators; the rightmost operator acts first.
pub fn apply_word(ops: &[BasicOp], p: &BasisPoint) -> Option<BasisPoint> {
    let mut cur = p.clone();
    for op in ops.iter().rev() {
        cur = apply_basic(op, &cur)?;
    }
    Some(cur)
}

/// Applies a normal-form element directly through its germ: defined iff the
/// germ image is integral and lies in the range cylinder. Equivalent to
/// composing the basic operators of any factorization; the equivalence is a
/// test target, not an assumption the implementation relies on.
pub fn apply_t(t: &TElement, p: &BasisPoint) -> Option<BasisPoint> {
    if t.is_zero() {
        return None;
    }
    let image = t.germ().apply(&RationalVector::from_integer(&p.n_part));
    if !image.is_integral() {
        return None;
    }
    let n = image.to_integer().ok()?;
    if !t.range().contains(&n).ok()? {
        return None;
    }
    Some(BasisPoint::new(n, t.germ().linear().mul(&p.h_part)))
}

/// A finite sample of basis points: all integer points in the coordinate
/// box |n_i| <= bound, crossed with the group labels reachable by signed
/// generator words of length <= word_len.
#[derive(Clone, Debug)]
pub struct Window {
    points: Vec<BasisPoint>,
}

impl Window {
    pub fn new(spec: &SystemSpec, bound: i64, word_len: usize) -> Result<Self> {
        let dim = spec.dim();
        let mut labels = vec![RationalMatrix::identity(dim)];
        let mut alphabet = Vec::new();
        for g in spec.generators() {
            alphabet.push(RationalMatrix::from_integer(g));
            alphabet.push(RationalMatrix::from_integer(g).inverse()?);
        }
        let mut frontier = labels.clone();
        for _ in 0..word_len {
            let mut next = Vec::new();
            for w in &frontier {
                for a in &alphabet {
                    let m = w.mul(a);
                    if !labels.contains(&m) {
                        labels.push(m.clone());
                        next.push(m);
                    }
                }
            }
            frontier = next;
        }
        let mut points = Vec::new();
        let mut coords = vec![-bound; dim];
        loop {
            let n = IntegerVector::from_i64(&coords);
            for h in &labels {
                points.push(BasisPoint::new(n.clone(), h.clone()));
            }
            let mut k = 0;
            loop {
                if k == dim {
                    return Ok(Self { points });
                }
                coords[k] += 1;
                if coords[k] <= bound {
                    break;
                }
                coords[k] = -bound;
                k += 1;
            }
        }
    }

    pub fn points(&self) -> &[BasisPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Outcome of a pointwise relation check.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub relations_checked: usize,
    pub points_checked: usize,
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, name: &str, p: &BasisPoint, lhs: &Option<BasisPoint>, rhs: &Option<BasisPoint>) {
        self.points_checked += 1;
        if lhs != rhs {
            self.violations.push(format!(
                "VIOLATION {name} {p} {} {}",
                render(rhs),
                render(lhs)
            ));
        }
    }
}

fn render(p: &Option<BasisPoint>) -> String {
    match p {
        Some(q) => q.to_string(),
        None => "Undefined".into(),
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        write!(
            f,
            "{} relations on {} points: {}",
            self.relations_checked,
            self.points_checked,
            if self.is_clean() { "ok" } else { "FAILED" }
        )
    }
}

/// Verifies the defining relations for the monoid element `a` pointwise:
/// the coset partition of unity, multiplicativity over the generators,
/// additivity of translations, the commutation rule, and covariance.
pub fn verify_cuntz_li(spec: &SystemSpec, a: &IntegerMatrix, w: &Window) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let dim = spec.dim();
    let quotient = QuotientGroup::new(a.clone())?;
    let reps = quotient.enumerate();
    let e_a = Projection::lattice(a.clone())?;
    let small: Vec<IntegerVector> = {
        let mut v = Vec::new();
        for i in 0..dim {
            v.push(IntegerVector::basis(dim, i));
            v.push(IntegerVector::basis(dim, i).neg());
        }
        v.push(IntegerVector::zero(dim));
        v
    };

    // partition of unity: each point lies in the domain of exactly one
    // translated lattice projection u(k) e_a u(k)^-1
    report.relations_checked += 1;
    for p in w.points() {
        report.points_checked += 1;
        let mut hits = 0usize;
        for k in &reps {
            let shifted = e_a.conj_u(k);
            if shifted.contains(&p.n_part)? {
                hits += 1;
            }
        }
        if hits != 1 {
            report
                .violations
                .push(format!("VIOLATION partition {p} 1 {hits}"));
        }
    }

    // s_a s_b = s_ab against every generator and a itself
    let mut partners: Vec<IntegerMatrix> = spec.generators().to_vec();
    if !partners.contains(a) {
        partners.push(a.clone());
    }
    for b in &partners {
        report.relations_checked += 1;
        let composite = BasicOp::S(a.mul(b));
        for p in w.points() {
            let lhs = apply_word(&[BasicOp::S(a.clone()), BasicOp::S(b.clone())], p);
            let rhs = apply_basic(&composite, p);
            report.check("s_mul", p, &lhs, &rhs);
        }
    }

    // u(m) u(m') = u(m + m')
    for m in &small {
        for m2 in &small {
            report.relations_checked += 1;
            let composite = BasicOp::U(m.add(m2));
            for p in w.points() {
                let lhs = apply_word(&[BasicOp::U(m.clone()), BasicOp::U(m2.clone())], p);
                let rhs = apply_basic(&composite, p);
                report.check("u_add", p, &lhs, &rhs);
            }
        }
    }

    // s_a u(m) = u(A m) s_a
    for m in &small {
        report.relations_checked += 1;
        for p in w.points() {
            let lhs = apply_word(&[BasicOp::S(a.clone()), BasicOp::U(m.clone())], p);
            let rhs = apply_word(&[BasicOp::U(a.mul_vec(m)), BasicOp::S(a.clone())], p);
            report.check("commutation", p, &lhs, &rhs);
        }
    }

    // covariance: s_a u(m) s_a* = u(A m) e_a
    for m in &small {
        report.relations_checked += 1;
        for p in w.points() {
            let lhs = apply_word(
                &[BasicOp::S(a.clone()), BasicOp::U(m.clone()), BasicOp::SStar(a.clone())],
                p,
            );
            let rhs = apply_word(&[BasicOp::U(a.mul_vec(m)), BasicOp::Proj(e_a.clone())], p);
            report.check("covariance", p, &lhs, &rhs);
        }
    }

    // s_a* s_a = 1
    report.relations_checked += 1;
    for p in w.points() {
        let lhs = apply_word(&[BasicOp::SStar(a.clone()), BasicOp::S(a.clone())], p);
        report.check("isometry", p, &lhs, &Some(p.clone()));
    }

    Ok(report)
}

/// Necessary-evidence equality: the two partial maps agree, definedness
/// included, on every window point.
pub fn oracle_equal(t1: &TElement, t2: &TElement, w: &Window) -> bool {
    w.points().iter().all(|p| apply_t(t1, p) == apply_t(t2, p))
}

/// Checks that `product` acts as "apply `t2`, then `t1`" on every window
/// point, undefinedness included.
pub fn oracle_compose_equal(t1: &TElement, t2: &TElement, product: &TElement, w: &Window) -> bool {
    w.points().iter().all(|p| {
        let chained = apply_t(t2, p).and_then(|q| apply_t(t1, &q));
        apply_t(product, p) == chained
    })
}

/// Checks that `t_star` is the partial-map transpose of `t` on the window:
/// each maps p to q exactly when the other maps q back to p.
pub fn oracle_adjoint_pair(t: &TElement, t_star: &TElement, w: &Window) -> bool {
    for p in w.points() {
        if let Some(q) = apply_t(t, p) {
            if apply_t(t_star, &q) != Some(p.clone()) {
                return false;
            }
        }
        if let Some(q) = apply_t(t_star, p) {
            if apply_t(t, &q) != Some(p.clone()) {
                return false;
            }
        }
    }
    true
}

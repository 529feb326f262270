//! Command front end. Documents are JSON with three sections: the system
//! (dimension, generator matrices, family tag), optional named element
//! expressions, and an optional task list. Element expressions use a
//! one-line grammar whose atoms are `s[a]`, `s*[a]`, `u[m]`, `f[C;{..}]`,
//! `0` and `1`, juxtaposed (optionally with `·`) to mean operator products
//! applying the right factor first.
//!
//! Commands come in pure form here, returning a report string and an exit
//! code; the binary is a thin flag wrapper around them. Exit codes: 0 pass
//! (warnings allowed), 1 mathematical failure or obstruction, 2 malformed
//! document or usage.

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::duality::{
    build_alpha, pairing, psi_kernel_check, psi_kernel_witness, psi_test_set, q_cbrt2, q_i,
    q_sqrt2, trace_form, verify_discriminant_lemma, NumberFieldData,
};
use crate::error::{Error, Result};
use crate::linalg::{IntegerMatrix, IntegerVector};
use crate::regular_rep::{oracle_compose_equal, verify_cuntz_li, Window};
use crate::sampling;
use crate::semigroup::{Projection, TElement};
use crate::system::{check_effective, C1Verdict, C3Verdict, Family, GroupElement, SystemSpec};
use crate::tight::{germ_equal, groupoid_compose, phi, GroupoidElement, Tristate};

pub const DEFAULT_WINDOW_BOUND: i64 = 8;
pub const DEFAULT_WORD_LEN: usize = 3;

/// On-disk document shape. `elements` name expressions for `mul` tasks;
/// `tasks` is a list of command lines run by `cmd_run`; `field` carries a
/// degree-n multiplication table (n^3 rationals, flat, numbers or strings
/// like "1/2") for the duality suite.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Document {
    pub system: SystemSection,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<NamedExpr>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSection>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemSection {
    pub n: usize,
    /// One matrix per generator, as nested rows. Entries are JSON integers
    /// or decimal strings (for values past i64).
    pub generators: Vec<Vec<Vec<Entry>>>,
    pub family: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedExpr {
    pub name: String,
    pub expr: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldSection {
    pub degree: usize,
    pub table: Vec<Entry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Entry::Int(k) => Ok((*k).into()),
            Entry::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer entry '{s}'"))),
        }
    }

    fn to_rational(&self) -> Result<BigRational> {
        match self {
            Entry::Int(k) => Ok(BigRational::from_integer((*k).into())),
            Entry::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational entry '{s}'"))),
        }
    }
}

/// A document after validation: ready-to-use system, named elements parsed
/// against it, and the field table (when present) assembled.
pub struct ParsedDocument {
    pub doc: Document,
    pub spec: SystemSpec,
    pub elements: Vec<(String, TElement)>,
    pub field: Option<NumberFieldData>,
}

pub fn parse_document(text: &str) -> Result<ParsedDocument> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("document: {e}")))?;
    let n = doc.system.n;
    if n == 0 {
        return Err(Error::Parse("dimension must be positive".into()));
    }
    let mut generators = Vec::new();
    for (gi, rows) in doc.system.generators.iter().enumerate() {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("generator {gi} is not {n}x{n}")));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            for e in row {
                entries.push(e.to_bigint()?);
            }
        }
        generators.push(IntegerMatrix::new(n, n, entries));
    }
    let family = Family::from_tag(&doc.system.family)?;
    let spec = SystemSpec::new(n, generators, family)?;
    let mut elements = Vec::new();
    for ne in &doc.elements {
        let t = parse_element(&spec, &ne.expr)?;
        elements.push((ne.name.clone(), t));
    }
    let field = match &doc.field {
        None => None,
        Some(fs) => {
            let d = fs.degree;
            if fs.table.len() != d * d * d {
                return Err(Error::Parse(format!(
                    "field table needs {} entries, found {}",
                    d * d * d,
                    fs.table.len()
                )));
            }
            let table: Vec<BigRational> =
                fs.table.iter().map(Entry::to_rational).collect::<Result<_>>()?;
            Some(build_alpha(d, table)?)
        }
    };
    Ok(ParsedDocument { doc, spec, elements, field })
}

/// Serializes back in canonical (pretty, fixed field order) form.
pub fn canonical_document(parsed: &ParsedDocument) -> String {
    serde_json::to_string_pretty(&parsed.doc).expect("document serializes")
}

// ---------------------------------------------------------------- grammar

struct Scan {
    chars: Vec<char>,
    pos: usize,
}

impl Scan {
    fn new(text: &str) -> Self {
        Scan { chars: text.chars().collect(), pos: 0 }
    }

    fn skip_separators(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_whitespace() || c == '·' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn skip_spaces(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == ' ' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            found => Err(Error::Parse(format!(
                "expected '{want}' at position {}, found {found:?}",
                self.pos
            ))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_spaces();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.is_empty() || text == "-" {
            return Err(Error::Parse(format!("expected an integer at position {start}")));
        }
        Ok(text.parse().expect("digits parse"))
    }

    /// `(a,b)` in general, a bare integer in dimension 1.
    fn vector(&mut self, dim: usize) -> Result<IntegerVector> {
        self.skip_spaces();
        if dim == 1 && self.peek() != Some('(') {
            return Ok(IntegerVector::new(vec![self.integer()?]));
        }
        self.eat('(')?;
        let mut entries = Vec::with_capacity(dim);
        for i in 0..dim {
            if i > 0 {
                self.skip_spaces();
                self.eat(',')?;
            }
            entries.push(self.integer()?);
        }
        self.skip_spaces();
        self.eat(')')?;
        if entries.len() != dim {
            return Err(Error::Parse(format!("expected a {dim}-vector")));
        }
        Ok(IntegerVector::new(entries))
    }

    /// `[[a,b],[c,d]]` in general, a bare integer in dimension 1.
    fn matrix(&mut self, dim: usize) -> Result<IntegerMatrix> {
        self.skip_spaces();
        if dim == 1 && self.peek() != Some('[') {
            return Ok(IntegerMatrix::new(1, 1, vec![self.integer()?]));
        }
        self.eat('[')?;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            self.skip_spaces();
            if i > 0 {
                self.eat(',')?;
                self.skip_spaces();
            }
            self.eat('[')?;
            for j in 0..dim {
                if j > 0 {
                    self.skip_spaces();
                    self.eat(',')?;
                }
                entries.push(self.integer()?);
            }
            self.skip_spaces();
            self.eat(']')?;
        }
        self.skip_spaces();
        self.eat(']')?;
        Ok(IntegerMatrix::new(dim, dim, entries))
    }
}

/// Parses an expression as a product of atoms, multiplying left to right.
pub fn parse_element(spec: &SystemSpec, text: &str) -> Result<TElement> {
    let dim = spec.dim();
    let mut scan = Scan::new(text);
    let mut acc: Option<TElement> = None;
    loop {
        scan.skip_separators();
        let Some(c) = scan.peek() else { break };
        let atom = match c {
            '0' => {
                scan.pos += 1;
                TElement::zero(dim)
            }
            '1' => {
                scan.pos += 1;
                TElement::one(dim)
            }
            's' => {
                scan.pos += 1;
                let star = scan.peek() == Some('*');
                if star {
                    scan.pos += 1;
                }
                scan.eat('[')?;
                let m = scan.matrix(dim)?;
                scan.eat(']')?;
                if star {
                    TElement::s_star(&m)?
                } else {
                    TElement::s(&m)?
                }
            }
            'u' => {
                scan.pos += 1;
                scan.eat('[')?;
                let v = scan.vector(dim)?;
                scan.eat(']')?;
                TElement::u(&v)
            }
            'f' => {
                scan.pos += 1;
                scan.eat('[')?;
                let level = scan.matrix(dim)?;
                scan.skip_spaces();
                scan.eat(';')?;
                scan.skip_spaces();
                scan.eat('{')?;
                let mut cosets = Vec::new();
                loop {
                    scan.skip_spaces();
                    match scan.peek() {
                        Some('}') => break,
                        Some(',') => {
                            scan.pos += 1;
                        }
                        Some(_) => cosets.push(scan.vector(dim)?),
                        None => {
                            return Err(Error::Parse("unterminated coset set".into()));
                        }
                    }
                }
                scan.eat('}')?;
                scan.eat(']')?;
                TElement::projection(Projection::new(level, cosets)?)
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected '{other}' at position {}",
                    scan.pos
                )));
            }
        };
        acc = Some(match acc {
            None => atom,
            Some(t) => t.mul(&atom, spec)?,
        });
    }
    acc.ok_or_else(|| Error::Parse("empty expression".into()))
}

fn fmt_matrix(m: &IntegerMatrix) -> String {
    if m.dim() == 1 {
        m.entry(0, 0).to_string()
    } else {
        m.to_string()
    }
}

fn fmt_vector(v: &IntegerVector) -> String {
    if v.dim() == 1 {
        v.entry(0).to_string()
    } else {
        v.to_string()
    }
}

/// Canonical grammar form: the support projection (omitted when it equals
/// the germ's own partial-map range), then the germ as `s*[a] u[m] s[b]`
/// with identity parts dropped. The zero element prints `0`, the unit `1`.
pub fn print_element(spec: &SystemSpec, t: &TElement) -> Result<String> {
    if t.range().is_empty() {
        return Ok("0".into());
    }
    let mut parts = Vec::new();
    let germ_range = TElement::w_range_projection(spec, t.germ())?;
    if !t.range().eval_equal(&germ_range, spec)? {
        parts.push(t.range().to_string());
    }
    let f = spec.factorize(t.germ())?;
    if !f.a.is_identity() {
        parts.push(format!("s*[{}]", fmt_matrix(&f.a)));
    }
    if !f.m.is_zero() {
        parts.push(format!("u[{}]", fmt_vector(&f.m)));
    }
    if !f.b.is_identity() {
        parts.push(format!("s[{}]", fmt_matrix(&f.b)));
    }
    if parts.is_empty() {
        return Ok("1".into());
    }
    Ok(parts.join(" · "))
}

// --------------------------------------------------------------- commands

pub struct CommandOutput {
    pub report: String,
    pub code: i32,
}

fn failure(err: &Error) -> CommandOutput {
    let code = match err {
        Error::Parse(_) => 2,
        _ => 1,
    };
    CommandOutput { report: format!("error: {err}\n"), code }
}

/// Document failures exit 2: the file failed to validate, whatever the
/// stage.
fn load(text: &str) -> std::result::Result<ParsedDocument, CommandOutput> {
    parse_document(text).map_err(|e| CommandOutput {
        report: format!("error: {e}\n"),
        code: 2,
    })
}

/// Runs the directedness, finite-index and trivial-core checks plus the
/// effectiveness probe; exit 1 only on a definite obstruction.
pub fn cmd_check(doc_text: &str) -> CommandOutput {
    let parsed = match load(doc_text) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let spec = &parsed.spec;
    let mut lines = Vec::new();
    let mut obstruction = false;
    let mut warnings = false;

    match spec.check_c1(crate::system::DEFAULT_SEARCH_DEPTH) {
        C1Verdict::Holds => lines.push("C1: holds (common multiples found)".into()),
        C1Verdict::HoldsByScalars => lines.push("C1: holds (scalar cofinality)".into()),
        C1Verdict::Inconclusive => {
            warnings = true;
            lines.push("C1: inconclusive at default search depth".into());
        }
    }

    match spec.check_c2() {
        Ok(cert) => {
            let idx: Vec<String> =
                cert.determinant_moduli.iter().map(|d| d.to_string()).collect();
            if idx.len() == 1 {
                lines.push(format!("C2: index {}", idx[0]));
            } else {
                lines.push(format!("C2: indices {}", idx.join(", ")));
            }
            if !cert.degenerate.is_empty() {
                warnings = true;
                lines.push(format!(
                    "C2: warning, generators {:?} act by automorphisms (index 1)",
                    cert.degenerate
                ));
            }
        }
        Err(e) => return failure(&e),
    }

    match spec.check_c3_sufficient() {
        C3Verdict::DilationCertified { numeric } => {
            let how = if numeric { "numeric eigenvalue bound" } else { "exact eigenvalue bound" };
            lines.push(format!("C3: true ({how})"));
        }
        C3Verdict::ScalarsCertified => {
            lines.push("C3: true (scalar chains shrink to zero)".into());
        }
        C3Verdict::EigenvalueObstruction { generator, vector, eigenvalue_one } => {
            obstruction = true;
            let verb = if eigenvalue_one { "fixes" } else { "negates" };
            lines.push(format!(
                "C3: obstruction, generator {generator} {verb} {vector}"
            ));
        }
        C3Verdict::Inconclusive => {
            // The general sufficient tests say nothing; in dimension 2 the
            // polynomial criterion is decisive for any one generator's
            // power chain, which already forces the intersection to zero.
            let decided = spec.dim() == 2
                && spec.generators().iter().enumerate().any(|(i, g)| {
                    if crate::system::check_c3_2x2(g) == Ok(true) {
                        lines.push(format!(
                            "C3: true (2x2 polynomial criterion, generator {i})"
                        ));
                        true
                    } else {
                        false
                    }
                });
            if !decided {
                warnings = true;
                lines.push("C3: inconclusive (sufficient tests only)".into());
            }
        }
    }

    let ineffective: Vec<usize> = spec
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| !check_effective(&GroupElement::from_s(g)))
        .map(|(i, _)| i)
        .collect();
    if ineffective.is_empty() {
        lines.push("effective: every generator map moves the space".into());
    } else {
        warnings = true;
        lines.push(format!("effective: warning, generators {ineffective:?} act trivially"));
    }

    let verdict = if obstruction {
        "verdict: obstruction found"
    } else if warnings {
        "verdict: no obstruction (with warnings)"
    } else {
        "verdict: no obstruction"
    };
    lines.push(verdict.into());
    CommandOutput {
        report: lines.join("\n") + "\n",
        code: i32::from(obstruction),
    }
}

/// Multiplies two expressions (names from the document or literal grammar
/// strings), prints the canonical form, and replays the product against
/// the regular representation on a default window.
pub fn cmd_mul(doc_text: &str, expr1: &str, expr2: &str, window: i64) -> CommandOutput {
    let parsed = match load(doc_text) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let spec = &parsed.spec;
    let resolve = |expr: &str| -> Result<TElement> {
        if let Some((_, t)) = parsed.elements.iter().find(|(n, _)| n == expr) {
            return Ok(t.clone());
        }
        parse_element(spec, expr)
    };
    let run = || -> Result<(String, bool, usize)> {
        let t1 = resolve(expr1)?;
        let t2 = resolve(expr2)?;
        let product = t1.mul(&t2, spec)?;
        let printed = print_element(spec, &product)?;
        let w = Window::new(spec, window, DEFAULT_WORD_LEN)?;
        let agrees = oracle_compose_equal(&t1, &t2, &product, &w);
        Ok((printed, agrees, w.len()))
    };
    match run() {
        Ok((printed, agrees, points)) => {
            let verdict = if agrees {
                format!("oracle: agrees with the regular representation on {points} points")
            } else {
                format!("oracle: MISMATCH against the regular representation on {points} points")
            };
            CommandOutput {
                report: format!("product: {printed}\n{verdict}\n"),
                code: i32::from(!agrees),
            }
        }
        Err(e) => failure(&e),
    }
}

struct SuiteLog {
    lines: Vec<String>,
    verbose: bool,
    violations: usize,
    first_failure: Option<String>,
}

impl SuiteLog {
    fn new(name: &str, verbose: bool) -> Self {
        SuiteLog {
            lines: vec![format!("suite: {name}")],
            verbose,
            violations: 0,
            first_failure: None,
        }
    }

    fn line(&mut self, s: String) {
        self.lines.push(s);
    }

    fn detail(&mut self, s: String) {
        if self.verbose {
            self.lines.push(format!("  {s}"));
        }
    }

    fn violation(&mut self, s: String) {
        self.violations += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(s.clone());
        }
        self.lines.push(format!("  violation: {s}"));
    }

    fn finish(mut self) -> CommandOutput {
        if self.violations == 0 {
            self.lines.push("result: pass (0 violations)".into());
        } else {
            self.lines.push(format!("result: FAIL ({} violations)", self.violations));
            if let Some(first) = &self.first_failure {
                self.lines.push(format!("first failure: {first}"));
            }
        }
        CommandOutput {
            report: self.lines.join("\n") + "\n",
            code: i32::from(self.violations > 0),
        }
    }
}

/// Seeded verification suites. `level` scales the sample counts; reports
/// are byte-stable for a fixed document, suite, seed and level.
pub fn cmd_verify(
    doc_text: &str,
    suite: &str,
    seed: u64,
    level: u32,
    window: i64,
    verbose: bool,
) -> CommandOutput {
    let parsed = match load(doc_text) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let result = match suite {
        "relations" => suite_relations(&parsed.spec, window, verbose),
        "semigroup" => suite_semigroup(&parsed.spec, seed, level, window, verbose),
        "groupoid" => suite_groupoid(&parsed.spec, seed, level, verbose),
        "duality" => suite_duality(&parsed, seed, level, verbose),
        other => {
            return CommandOutput {
                report: format!(
                    "error: unknown suite '{other}' (expected relations, semigroup, groupoid or duality)\n"
                ),
                code: 2,
            }
        }
    };
    match result {
        Ok(out) => out,
        Err(e) => failure(&e),
    }
}

fn suite_relations(spec: &SystemSpec, window: i64, verbose: bool) -> Result<CommandOutput> {
    let mut log = SuiteLog::new("relations", verbose);
    let w = Window::new(spec, window, DEFAULT_WORD_LEN)?;
    for (i, gen) in spec.generators().iter().enumerate() {
        let rep = verify_cuntz_li(spec, gen, &w)?;
        log.line(format!(
            "generator {i} ({}): {} relation instances on {} points, {} violations",
            fmt_matrix(gen),
            rep.relations_checked,
            rep.points_checked,
            rep.violations.len()
        ));
        for v in rep.violations.iter().take(5) {
            log.violation(v.clone());
        }
        log.violations += rep.violations.len().saturating_sub(5);
    }
    Ok(log.finish())
}

fn suite_semigroup(
    spec: &SystemSpec,
    seed: u64,
    level: u32,
    window: i64,
    verbose: bool,
) -> Result<CommandOutput> {
    let mut log = SuiteLog::new("semigroup", verbose);
    let cases = 50 * level as usize;
    let mut r = sampling::rng(seed);
    let w = Window::new(spec, window, DEFAULT_WORD_LEN)?;
    log.line(format!("{cases} seeded element pairs, window of {} points", w.len()));
    for case in 0..cases {
        let t1 = sampling::random_t(spec, &mut r)?;
        let t2 = sampling::random_t(spec, &mut r)?;
        let t1_star = t1.adjoint(spec)?;

        let vvv = t1.mul(&t1_star, spec)?.mul(&t1, spec)?;
        if !vvv.t_equal(&t1, spec)? {
            log.violation(format!("case {case}: v v* v differs from v"));
        }

        let prod = t1.mul(&t2, spec)?;
        let lhs = prod.adjoint(spec)?;
        let rhs = t2.adjoint(spec)?.mul(&t1_star, spec)?;
        if !lhs.t_equal(&rhs, spec)? {
            log.violation(format!("case {case}: (vw)* differs from w* v*"));
        }

        let square = t1.mul(&t1, spec)?;
        let idempotent = square.t_equal(&t1, spec)?;
        if idempotent != t1.germ().is_identity() {
            log.violation(format!(
                "case {case}: idempotency disagrees with identity-germ test"
            ));
        }

        if !oracle_compose_equal(&t1, &t2, &prod, &w) {
            log.violation(format!("case {case}: product disagrees with the oracle"));
        }
        if case % 10 == 0 {
            log.detail(format!("case {case}: ok so far"));
        }
    }
    Ok(log.finish())
}

fn suite_groupoid(
    spec: &SystemSpec,
    seed: u64,
    level: u32,
    verbose: bool,
) -> Result<CommandOutput> {
    let mut log = SuiteLog::new("groupoid", verbose);
    let wanted = 50 * level as usize;
    let mut r = sampling::rng(seed);
    let mut built = 0usize;
    let mut attempts = 0usize;
    let budget = 100 * wanted;
    while built < wanted && attempts < budget {
        attempts += 1;
        let base = sampling::random_cylinder(spec, &mut r, 2)?;
        let g1 = sampling::random_germ(spec, &mut r, 2)?;
        let Ok(gamma1) = GroupoidElement::new(spec, base, g1) else { continue };
        let g2 = sampling::random_germ(spec, &mut r, 2)?;
        let Ok(gamma2) = GroupoidElement::new(spec, gamma1.source().clone(), g2) else {
            continue;
        };
        let composed = groupoid_compose(spec, &gamma1, &gamma2)?;
        let lhs = phi(spec, &composed)?;
        let rhs = phi(spec, &gamma1)?.mul(&phi(spec, &gamma2)?, spec)?;
        let rhs_arrow = GroupoidElement::new(spec, composed.range().clone(), rhs.germ().clone())?;
        if germ_equal(spec, &composed, &rhs_arrow)? != Tristate::In {
            log.violation(format!("pair {built}: germs of the two images differ"));
        }
        if !lhs.t_equal(&rhs, spec)? {
            log.violation(format!("pair {built}: images differ as semigroup elements"));
        }
        let inv = gamma1.inverse(spec)?;
        let unit = groupoid_compose(spec, &gamma1, &inv)?;
        if !unit.germ().is_identity() || unit.range() != gamma1.range() {
            log.violation(format!("pair {built}: arrow times inverse is not the unit"));
        }
        built += 1;
        if built % 10 == 0 {
            log.detail(format!("{built} composable pairs checked"));
        }
    }
    log.line(format!("{built} composable pairs built in {attempts} draws"));
    if built < wanted {
        log.violation(format!("only {built} of {wanted} pairs could be built"));
    }
    Ok(log.finish())
}

fn suite_duality(
    parsed: &ParsedDocument,
    seed: u64,
    level: u32,
    verbose: bool,
) -> Result<CommandOutput> {
    let mut log = SuiteLog::new("duality", verbose);
    let mut r = sampling::rng(seed);
    let samples = 50 * level as usize;

    let mut fields: Vec<(String, NumberFieldData)> = Vec::new();
    if let Some(nf) = &parsed.field {
        fields.push(("document table".into(), nf.clone()));
    } else {
        fields.push(("adjoined square root of 2".into(), q_sqrt2()));
        fields.push(("adjoined fourth root of unity".into(), q_i()));
        fields.push(("adjoined cube root of 2".into(), q_cbrt2()));
    }
    for (name, nf) in &fields {
        let pts: Vec<_> =
            (0..samples).map(|_| sampling::random_rational_vector(&mut r, nf.degree())).collect();
        let failures = verify_discriminant_lemma(nf, &pts)?;
        let tf = trace_form(nf)?;
        log.line(format!(
            "field {name}: degree {}, discriminant {}, {} samples, {} conjugation failures",
            nf.degree(),
            tf.discriminant(),
            samples,
            failures.len()
        ));
        for f in failures {
            log.violation(f);
        }
    }

    let pair_cases = 100 * level as usize;
    let dim = parsed.spec.dim();
    let mut pairing_bad = 0usize;
    for _ in 0..pair_cases {
        let x = sampling::random_rational_vector(&mut r, dim);
        let y = sampling::random_rational_vector(&mut r, dim);
        let z = sampling::random_rational_vector(&mut r, dim);
        let additive = pairing(&x.add(&y), &z) == pairing(&x, &z).add(&pairing(&y, &z));
        let symmetric = pairing(&x, &z) == pairing(&z, &x);
        if !(additive && symmetric) {
            pairing_bad += 1;
            log.violation(format!("bicharacter identity fails at x={x}, y={y}, z={z}"));
        }
    }
    log.line(format!("{pair_cases} bicharacter checks, {pairing_bad} failures"));

    let kernel_cases = 25 * level as usize;
    let test_set = psi_test_set(&parsed.spec, 3)?;
    let mut diag_bad = 0usize;
    let mut sep_bad = 0usize;
    let mut separated = 0usize;
    for _ in 0..kernel_cases {
        let x = sampling::random_rational_vector(&mut r, dim);
        if !psi_kernel_check(&x, &x, &test_set) {
            diag_bad += 1;
            log.violation(format!("diagonal pair rejected at {x}"));
        }
        let z = sampling::random_rational_vector(&mut r, dim);
        if x.sub(&z).is_integral() {
            continue;
        }
        separated += 1;
        match psi_kernel_witness(&parsed.spec, &x, &z, 3)? {
            Some(wit) => log.detail(format!("{x} and {z} separated by {wit}")),
            None => {
                sep_bad += 1;
                log.violation(format!("no separating test point for {x} vs {z}"));
            }
        }
    }
    log.line(format!(
        "{kernel_cases} diagonal pairs ({diag_bad} failures), {separated} off-kernel pairs ({sep_bad} unseparated)"
    ));
    Ok(log.finish())
}

/// Executes the document's task list in order. Each task is one line:
/// `check`, `mul <a> <b>` (names or literal expressions), or
/// `verify <suite>`. The exit code is the worst over all tasks.
pub fn cmd_run(
    doc_text: &str,
    seed: u64,
    level: u32,
    window: i64,
    verbose: bool,
) -> CommandOutput {
    let parsed = match load(doc_text) {
        Ok(p) => p,
        Err(out) => return out,
    };
    if parsed.doc.tasks.is_empty() {
        return CommandOutput { report: "no tasks in document\n".into(), code: 0 };
    }
    let tasks = parsed.doc.tasks.clone();
    let mut report = String::new();
    let mut code = 0;
    for task in &tasks {
        let words: Vec<&str> = task.split_whitespace().collect();
        let out = match words.as_slice() {
            ["check"] => cmd_check(doc_text),
            ["mul", a, b] => cmd_mul(doc_text, a, b, window),
            ["verify", suite] => cmd_verify(doc_text, suite, seed, level, window, verbose),
            _ => CommandOutput {
                report: format!("error: unrecognized task '{task}'\n"),
                code: 2,
            },
        };
        report.push_str(&format!("== task: {task} ==\n"));
        report.push_str(&out.report);
        code = code.max(out.code);
    }
    CommandOutput { report, code }
}

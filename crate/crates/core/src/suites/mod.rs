//! Deterministic check batteries and their reports.
//!
//! A run is determined by `(suite, algebra, truncation, seed, window,
//! samples)`. Every check draws its inputs from its own ChaCha8 stream,
//! seeded by mixing the run seed with an FNV-1a hash of the check id, so a
//! check sees the same inputs whether it runs alone or inside `all`.
//! Checks are reported sorted by id.

mod algebraic;
mod appendix;
mod ext;
#[cfg(test)]
mod tests;

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::graded::{
    Bialgebra, DgSweedlerHopf, ExteriorPrimitiveHopf, FiniteGroupFunctionHopf, UpperTriangularHopf, Window,
};
use crate::random::{self, GradedBasis, TestRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Outcome of one check. `detail` holds the first counterexample of a
/// failing check, the reason for a skip, or a short finding otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub cases: usize,
    pub detail: String,
}

impl CheckResult {
    pub fn skip(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { id: id.into(), status: Status::Skip, cases: 0, detail: reason.into() }
    }
}

/// Accumulates cases, keeping the first failure.
pub(crate) struct Check {
    id: String,
    cases: usize,
    witness: Option<String>,
    note: String,
}

impl Check {
    pub(crate) fn new(id: &str) -> Self {
        Self { id: id.into(), cases: 0, witness: None, note: String::new() }
    }

    pub(crate) fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    /// Records an error as a failed case.
    pub(crate) fn ok<T, E: fmt::Display>(&mut self, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.case(false, || format!("error: {e}"));
                None
            }
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.note = note.into();
    }

    pub(crate) fn finish(self) -> CheckResult {
        let (status, detail) = match self.witness {
            Some(w) => (Status::Fail, w),
            None if self.cases == 0 => (Status::Fail, "no cases were run".into()),
            None => (Status::Pass, self.note),
        };
        CheckResult { id: self.id, status, cases: self.cases, detail: detail.replace('\n', " ") }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Axioms,
    Cobar,
    Mc,
    Holim,
    Ainfty,
    Monoidal,
    Appendix,
    ExtExample,
    All,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Axioms,
        Suite::Cobar,
        Suite::Mc,
        Suite::Holim,
        Suite::Ainfty,
        Suite::Monoidal,
        Suite::Appendix,
        Suite::ExtExample,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Cobar => "cobar",
            Suite::Mc => "mc",
            Suite::Holim => "holim",
            Suite::Ainfty => "ainfty",
            Suite::Monoidal => "monoidal",
            Suite::Appendix => "appendix",
            Suite::ExtExample => "ext-example",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == other || self == Suite::All
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("unknown suite `{0}`; expected one of axioms, cobar, mc, holim, ainfty, monoidal, appendix, ext-example, all")]
    UnknownSuite(String),
    #[error("unknown built-in algebra `{0}`; expected one of z2, s3, exterior, sweedler, upper-triangular")]
    UnknownAlgebra(String),
}

impl FromStr for Suite {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, RunError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| RunError::UnknownSuite(s.into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunParams {
    pub truncation: usize,
    pub seed: u64,
    pub window: Window,
    /// Random inputs per sampled check.
    pub samples: usize,
}

impl Default for RunParams {
    fn default() -> Self {
        Self { truncation: 4, seed: 0, window: Window::default(), samples: 100 }
    }
}

impl RunParams {
    /// The input stream of one check.
    pub(crate) fn rng(&self, id: &str) -> TestRng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in id.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        random::rng(h ^ self.seed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub suite: Suite,
    pub algebra: String,
    pub params: RunParams,
    pub checks: Vec<CheckResult>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    fn header(&self) -> [(&'static str, String); 6] {
        let p = &self.params;
        [
            ("suite", self.suite.to_string()),
            ("algebra", self.algebra.clone()),
            ("truncation", p.truncation.to_string()),
            ("seed", p.seed.to_string()),
            ("window", format!("{},{}", p.window.laurent, p.window.poly)),
            ("samples", p.samples.to_string()),
        ]
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.header() {
            let _ = writeln!(out, "{k:<11} {v}");
        }
        out.push('\n');
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = write!(out, "{:<4}  {:<width$}  {:>6}", c.status, c.id, c.cases);
            if !c.detail.is_empty() {
                let _ = write!(out, "  {}", c.detail);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "\n{} checks: {} pass, {} fail, {} skip",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        );
        out
    }

    /// One `key=value` pair per line: `run.*` for the parameters,
    /// `check.<id>.{status,cases,detail}` per check, then `summary.*`.
    pub fn render_kv(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.header() {
            let _ = writeln!(out, "run.{k}={v}");
        }
        for c in &self.checks {
            let _ = writeln!(out, "check.{}.status={}", c.id, c.status);
            let _ = writeln!(out, "check.{}.cases={}", c.id, c.cases);
            let _ = writeln!(out, "check.{}.detail={}", c.id, c.detail);
        }
        let _ = writeln!(out, "summary.pass={}", self.count(Status::Pass));
        let _ = writeln!(out, "summary.fail={}", self.count(Status::Fail));
        let _ = writeln!(out, "summary.skip={}", self.count(Status::Skip));
        let _ = writeln!(out, "summary.result={}", if self.passed() { "pass" } else { "fail" });
        out
    }
}

/// Runs every battery of `suite` except the upper-triangular example.
pub fn run_suite<B: Bialgebra>(alg: &B, suite: Suite, params: &RunParams) -> RunReport {
    collect(alg, suite, params, Vec::new())
}

fn collect<B: Bialgebra>(alg: &B, suite: Suite, params: &RunParams, mut checks: Vec<CheckResult>) -> RunReport {
    let ctx = Context::new(alg, params);
    if suite.includes(Suite::Axioms) {
        checks.extend(algebraic::axioms(&ctx));
    }
    if suite.includes(Suite::Cobar) {
        checks.extend(algebraic::cobar(&ctx));
    }
    if suite.includes(Suite::Mc) {
        checks.extend(algebraic::mc(&ctx));
    }
    if suite.includes(Suite::Holim) {
        checks.extend(algebraic::holim(&ctx));
    }
    if suite.includes(Suite::Ainfty) {
        checks.extend(algebraic::ainfty(&ctx));
    }
    if suite.includes(Suite::Monoidal) {
        checks.extend(algebraic::monoidal(&ctx));
    }
    if suite.includes(Suite::Appendix) {
        checks.extend(appendix::appendix(&ctx));
    }
    if suite.includes(Suite::ExtExample) && !checks.iter().any(|c| c.id.starts_with("ext-example.")) {
        checks.extend(ext::skipped());
    }
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    RunReport { suite, algebra: alg.name(), params: *params, checks }
}

/// Shared inputs of the batteries.
pub(crate) struct Context<'a, B: Bialgebra> {
    pub alg: &'a B,
    pub params: &'a RunParams,
    pub basis: GradedBasis<B::Label>,
    pub grouplikes: Vec<crate::graded::Element<B::Label>>,
    /// Total degrees used for homogeneous samples.
    pub degrees: Vec<i64>,
}

impl<'a, B: Bialgebra> Context<'a, B> {
    fn new(alg: &'a B, params: &'a RunParams) -> Self {
        let basis = GradedBasis::new(alg, &params.window);
        let lo = basis.degrees().min().unwrap_or(0);
        let hi = basis.degrees().max().unwrap_or(0);
        Self {
            alg,
            params,
            grouplikes: random::grouplikes(alg, &params.window),
            degrees: (lo - 1..=hi + 3).collect(),
            basis,
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.params.truncation
    }

    pub(crate) fn samples(&self) -> usize {
        self.params.samples
    }

    pub(crate) fn degree(&self, i: usize) -> i64 {
        self.degrees[i % self.degrees.len()]
    }
}

/// The built-in algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BuiltIn {
    Z2,
    S3,
    Exterior,
    Sweedler,
    UpperTriangular,
}

impl BuiltIn {
    pub const ALL: [BuiltIn; 5] = [BuiltIn::Z2, BuiltIn::S3, BuiltIn::Exterior, BuiltIn::Sweedler, BuiltIn::UpperTriangular];

    pub fn name(self) -> &'static str {
        match self {
            BuiltIn::Z2 => "z2",
            BuiltIn::S3 => "s3",
            BuiltIn::Exterior => "exterior",
            BuiltIn::Sweedler => "sweedler",
            BuiltIn::UpperTriangular => "upper-triangular",
        }
    }

    pub fn is_finite_dimensional(self) -> bool {
        self != BuiltIn::UpperTriangular
    }

    pub fn run(self, suite: Suite, params: &RunParams) -> RunReport {
        match self {
            BuiltIn::Z2 => run_suite(&FiniteGroupFunctionHopf::cyclic(2), suite, params),
            BuiltIn::S3 => run_suite(&FiniteGroupFunctionHopf::symmetric3(), suite, params),
            BuiltIn::Exterior => run_suite(&ExteriorPrimitiveHopf, suite, params),
            BuiltIn::Sweedler => run_suite(&DgSweedlerHopf, suite, params),
            BuiltIn::UpperTriangular => {
                let extra = if suite.includes(Suite::ExtExample) { ext::ext_example() } else { Vec::new() };
                collect(&UpperTriangularHopf, suite, params, extra)
            }
        }
    }

    /// The spec-file serialization of a finite built-in.
    pub fn render(self) -> Option<String> {
        let rendered = match self {
            BuiltIn::Z2 => crate::specfile::render_algebra(&FiniteGroupFunctionHopf::cyclic(2)),
            BuiltIn::S3 => crate::specfile::render_algebra(&FiniteGroupFunctionHopf::symmetric3()),
            BuiltIn::Exterior => crate::specfile::render_algebra(&ExteriorPrimitiveHopf),
            BuiltIn::Sweedler => crate::specfile::render_algebra(&DgSweedlerHopf),
            BuiltIn::UpperTriangular => return None,
        };
        Some(rendered.expect("finite built-ins tabulate"))
    }
}

impl fmt::Display for BuiltIn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltIn {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, RunError> {
        match s {
            "ut" => Ok(BuiltIn::UpperTriangular),
            _ => BuiltIn::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| RunError::UnknownAlgebra(s.into())),
        }
    }
}

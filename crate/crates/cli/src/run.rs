//! Job dispatch and reports.

use std::time::Instant;

use autconj_core::arith::int::next_prime;
use autconj_core::field::{ExtField, FiniteField, Fp, Rationals};
use autconj_core::group::GroupName;
use autconj_core::poly::RootFinding;
use autconj_core::projline::{bad_primes, reduce_mod_p, Mobius, RatMap};
use autconj_core::qq::{aut_qq, conj_qq, resolve_qq};
use autconj_core::solver::{aut_ff, conj_ff, resolve_ff, type_early_abort, Algorithm};
use num_rational::BigRational;
use serde::Serialize;

use crate::field::{describe, quadratic_field, FieldSpec, Literal};
use crate::parse::{parse_map, ParseError};
use crate::print::{map_string, mobius_string, mobius_tuple};

/// Exit status for malformed input.
pub const EXIT_PARSE: i32 = 2;
/// Exit status when a solver refuses or fails.
pub const EXIT_SOLVER: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Aut,
    Conj,
    IsConjugate,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Aut => "aut",
            Command::Conj => "conj",
            Command::IsConjugate => "is-conjugate",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    pub field: FieldSpec,
    pub maps: Vec<String>,
    pub algorithm: Algorithm,
    pub seed: u64,
}

/// Everything a run reports. Every key is always present, so the JSON layout does not depend
/// on the command.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub input: Vec<String>,
    pub parsed: Vec<String>,
    pub algorithm: String,
    pub seed: u64,
    pub elements: Vec<[String; 4]>,
    pub maps: Vec<String>,
    pub group: Option<String>,
    pub conjugate: Option<bool>,
    pub reason: Option<String>,
    pub time_ms: f64,
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(c) = self.conjugate {
            out.push_str(if c { "yes\n" } else { "no\n" });
        }
        if let Some(r) = &self.reason {
            out.push_str(&format!("reason: {r}\n"));
        }
        if let Some(g) = &self.group {
            out.push_str(&format!("group: {g}\n"));
        }
        if self.command != "is-conjugate" || !self.maps.is_empty() {
            out.push_str(&format!("elements ({}):\n", self.maps.len()));
            for m in &self.maps {
                out.push_str(&format!("  {m}\n"));
            }
        }
        out.push_str(&format!("field: {}  algorithm: {}  time: {:.3} ms\n", self.field, self.algorithm, self.time_ms));
        out
    }
}

#[derive(Debug)]
pub enum RunError {
    Parse(ParseError),
    Solver(autconj_core::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(_) => EXIT_PARSE,
            RunError::Solver(_) => EXIT_SOLVER,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Parse(e) => write!(f, "parse error: {e}"),
            RunError::Solver(e) => write!(f, "solver error: {e}"),
        }
    }
}

impl From<ParseError> for RunError {
    fn from(e: ParseError) -> Self {
        RunError::Parse(e)
    }
}

impl From<autconj_core::Error> for RunError {
    fn from(e: autconj_core::Error) -> Self {
        RunError::Solver(e)
    }
}

/// Solvers over one coefficient field.
trait Backend: Literal {
    fn resolve(&self, d: usize, algorithm: Algorithm, command: Command) -> autconj_core::Result<Algorithm>;
    fn aut(&self, phi: &RatMap<Self::Elem>, algorithm: Algorithm) -> autconj_core::Result<(Vec<Mobius<Self::Elem>>, GroupName)>;
    fn conj(&self, phi: &RatMap<Self::Elem>, psi: &RatMap<Self::Elem>, algorithm: Algorithm) -> autconj_core::Result<Vec<Mobius<Self::Elem>>>;
    /// A cheap reason why the maps are not conjugate, if one is found.
    fn obstruction(&self, phi: &RatMap<Self::Elem>, psi: &RatMap<Self::Elem>) -> Option<String>;
}

fn ff_obstruction<F: FiniteField + RootFinding>(f: &F, phi: &RatMap<F::Elem>, psi: &RatMap<F::Elem>) -> Option<String> {
    type_early_abort(f, phi, psi).map(|o| o.to_string())
}

macro_rules! finite_backend {
    ($t:ty) => {
        impl Backend for $t {
            fn resolve(&self, _d: usize, algorithm: Algorithm, _command: Command) -> autconj_core::Result<Algorithm> {
                resolve_ff(self, algorithm)
            }
            fn aut(&self, phi: &RatMap<Self::Elem>, algorithm: Algorithm) -> autconj_core::Result<(Vec<Mobius<Self::Elem>>, GroupName)> {
                aut_ff(self, phi, algorithm).map(|r| (r.elements, r.group))
            }
            fn conj(&self, phi: &RatMap<Self::Elem>, psi: &RatMap<Self::Elem>, algorithm: Algorithm) -> autconj_core::Result<Vec<Mobius<Self::Elem>>> {
                conj_ff(self, phi, psi, algorithm)
            }
            fn obstruction(&self, phi: &RatMap<Self::Elem>, psi: &RatMap<Self::Elem>) -> Option<String> {
                ff_obstruction(self, phi, psi)
            }
        }
    };
}

finite_backend!(Fp);
finite_backend!(ExtField);

/// Primes tried when looking for a reason two rational maps are not conjugate.
const OBSTRUCTION_PRIMES: usize = 20;

impl Backend for Rationals {
    fn resolve(&self, d: usize, algorithm: Algorithm, command: Command) -> autconj_core::Result<Algorithm> {
        Ok(match (command, algorithm) {
            (Command::Aut, _) => resolve_qq(d, algorithm),
            (_, Algorithm::Auto) => Algorithm::Crt,
            (_, other) => other,
        })
    }
    fn aut(&self, phi: &RatMap<BigRational>, algorithm: Algorithm) -> autconj_core::Result<(Vec<Mobius<BigRational>>, GroupName)> {
        aut_qq(phi, algorithm).map(|r| (r.elements, r.group))
    }
    fn conj(&self, phi: &RatMap<BigRational>, psi: &RatMap<BigRational>, algorithm: Algorithm) -> autconj_core::Result<Vec<Mobius<BigRational>>> {
        conj_qq(phi, psi, algorithm)
    }
    fn obstruction(&self, phi: &RatMap<BigRational>, psi: &RatMap<BigRational>) -> Option<String> {
        if phi.degree() != psi.degree() {
            return Some("degree mismatch".into());
        }
        let bad = bad_primes(&[phi, psi]);
        let mut p = 3;
        for _ in 0..OBSTRUCTION_PRIMES {
            p = next_prime(p);
            if bad.is_bad(p) {
                continue;
            }
            let (Ok(a), Ok(b)) = (reduce_mod_p(phi, p), reduce_mod_p(psi, p)) else { continue };
            if let Some(o) = ff_obstruction(&Fp::new(p).ok()?, &a, &b) {
                return Some(format!("{o} modulo {p}"));
            }
        }
        None
    }
}

fn run_in<F: Backend>(f: &F, job: &Job) -> Result<Report, RunError> {
    let maps = job.maps.iter().map(|m| parse_map(f, m)).collect::<Result<Vec<_>, _>>()?;
    let phi = &maps[0];
    let algorithm = f.resolve(phi.degree(), job.algorithm, job.command)?;
    let mut report = Report {
        command: job.command.name().into(),
        field: describe(job.field),
        input: job.maps.clone(),
        parsed: maps.iter().map(|m| map_string(f, m)).collect(),
        algorithm: algorithm.to_string(),
        seed: job.seed,
        elements: Vec::new(),
        maps: Vec::new(),
        group: None,
        conjugate: None,
        reason: None,
        time_ms: 0.0,
    };
    let start = Instant::now();
    let elements = match job.command {
        Command::Aut => {
            let (els, group) = f.aut(phi, algorithm)?;
            report.group = Some(group.to_string());
            els
        }
        Command::Conj | Command::IsConjugate => {
            let psi = &maps[1];
            let early = f.obstruction(phi, psi);
            let els = match early {
                Some(_) => Vec::new(),
                None => f.conj(phi, psi, algorithm)?,
            };
            report.conjugate = Some(!els.is_empty());
            if els.is_empty() {
                report.reason = Some(early.unwrap_or_else(|| "no conjugating element over the field".into()));
            }
            els
        }
    };
    report.time_ms = start.elapsed().as_secs_f64() * 1e3;
    report.elements = elements.iter().map(|s| mobius_tuple(f, s)).collect();
    report.maps = elements.iter().map(|s| mobius_string(f, s)).collect();
    Ok(report)
}

/// Parses the maps, runs the solver and collects the report.
pub fn run(job: &Job) -> Result<Report, RunError> {
    let expected = if job.command == Command::Aut { 1 } else { 2 };
    if job.maps.len() != expected {
        return Err(ParseError(format!("expected {expected} map(s), got {}", job.maps.len())).into());
    }
    match job.field {
        FieldSpec::Rationals => run_in(&Rationals, job),
        FieldSpec::Prime(p) => run_in(&Fp::new(p)?, job),
        FieldSpec::PrimeSquare(p) => run_in(&quadratic_field(p), job),
    }
}

//! Checks and reproduction scenarios looked up by name at run time.

mod builtin;
mod scenarios;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::checks::{CheckError, ConeMode};
use crate::kernel::{KernelError, Rational, RationalMatrix};
use crate::matroid::{Matroid, MatroidError};
use crate::poly::MultiPoly;
use crate::positroid::PositroidError;
use crate::subset::BitSet;
use crate::tropical::{FlagChain, TropicalError, WeightVector};
use crate::verdict::{Status, Verdict};

pub use scenarios::SCENARIO_NAMES;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("`{check}` needs {expected}")]
    WrongSubject { check: &'static str, expected: &'static str },
    #[error("`{check}` needs the option `{option}`")]
    MissingOption { check: &'static str, option: &'static str },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Tropical(#[from] TropicalError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Positroid(#[from] PositroidError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// What a check is run on.
#[derive(Debug, Clone)]
pub enum Subject {
    /// A set family not yet known to satisfy the exchange axiom.
    Family {
        n: usize,
        sets: Vec<BitSet>,
    },
    Matroid(Matroid),
    Poly(MultiPoly),
    /// A weight vector read against a stated matroid.
    Weighted {
        matroid: Matroid,
        weights: WeightVector,
    },
    Chain(FlagChain),
    Matrix(RationalMatrix),
}

impl Subject {
    pub fn kind(&self) -> &'static str {
        match self {
            Subject::Family { .. } => "set family",
            Subject::Matroid(_) => "matroid",
            Subject::Poly(_) => "polynomial",
            Subject::Weighted { .. } => "weight vector",
            Subject::Chain(_) => "flag chain",
            Subject::Matrix(_) => "matrix",
        }
    }
}

/// Settings shared by all checks; each check reads what it needs.
#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub seed: u64,
    /// Sample budget; `None` uses the check's default.
    pub samples: Option<usize>,
    pub c: Option<Rational>,
    pub e: Option<Vec<Rational>>,
    pub cone: ConeMode,
    pub t0: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    pub verdict: Verdict,
}

/// A verdict plus human-readable facts and, for scenarios, sub-verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Detail>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<Step>,
}

impl Outcome {
    pub fn new(verdict: Verdict) -> Self {
        Outcome { verdict, details: Vec::new(), steps: Vec::new() }
    }

    pub fn detail(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.details.push(Detail { key: key.into(), value: value.to_string() });
        self
    }

    pub fn status(&self) -> Status {
        self.verdict.status
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, subject: &Subject, options: &CheckOptions) -> Result<Outcome, RegistryError>;
}

pub trait Scenario: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, options: &CheckOptions) -> Result<Outcome, RegistryError>;
}

#[derive(Default)]
pub struct Registry {
    checks: BTreeMap<&'static str, Box<dyn Check>>,
    scenarios: BTreeMap<&'static str, Box<dyn Scenario>>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    /// Every built-in check and reproduction scenario.
    pub fn with_builtin() -> Self {
        let mut r = Registry::new();
        for check in builtin::all() {
            r.register(check);
        }
        for scenario in scenarios::all() {
            r.register_scenario(scenario);
        }
        r
    }

    /// Replaces any check of the same name.
    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.insert(check.name(), check);
    }

    pub fn register_scenario(&mut self, scenario: Box<dyn Scenario>) {
        self.scenarios.insert(scenario.name(), scenario);
    }

    pub fn check(&self, name: &str) -> Option<&dyn Check> {
        self.checks.get(name).map(|c| c.as_ref())
    }

    pub fn scenario(&self, name: &str) -> Option<&dyn Scenario> {
        self.scenarios.get(name).map(|s| s.as_ref())
    }

    pub fn check_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.keys().copied()
    }

    pub fn scenario_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.scenarios.keys().copied()
    }

    pub fn run(&self, name: &str, subject: &Subject, options: &CheckOptions) -> Result<Outcome, RegistryError> {
        self.check(name).ok_or_else(|| RegistryError::UnknownCheck(name.to_string()))?.run(subject, options)
    }

    pub fn reproduce(&self, name: &str, options: &CheckOptions) -> Result<Outcome, RegistryError> {
        self.scenario(name).ok_or_else(|| RegistryError::UnknownScenario(name.to_string()))?.run(options)
    }
}

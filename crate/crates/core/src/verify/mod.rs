//! Identity suites over seeded rational grids, with deterministic JSON reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

mod grid;
pub mod identities;
pub mod numeric;
mod suites;

pub use grid::Grid;
pub use numeric::{integral_check, limit_check, IntegralKind, IntegralOutcome, LimitKind, LimitOutcome, LimitSchedule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    ExplicitVsRecurrence,
    GeneratingFunctions,
    Convolution,
    Connections,
    Transformations,
    FiniteSum,
    Ode,
    Integral,
    Limits,
    QuadraticForm,
    Structure,
    All,
    /// Deliberately broken identity; exercises the failure path.
    SelfTest,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::ExplicitVsRecurrence,
        Suite::GeneratingFunctions,
        Suite::Convolution,
        Suite::Connections,
        Suite::Transformations,
        Suite::FiniteSum,
        Suite::Ode,
        Suite::Integral,
        Suite::Limits,
        Suite::QuadraticForm,
        Suite::Structure,
        Suite::All,
        Suite::SelfTest,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::ExplicitVsRecurrence => "explicit-vs-recurrence",
            Self::GeneratingFunctions => "generating-functions",
            Self::Convolution => "convolution",
            Self::Connections => "connections",
            Self::Transformations => "transformations",
            Self::FiniteSum => "finite-sum",
            Self::Ode => "ode",
            Self::Integral => "integral",
            Self::Limits => "limits",
            Self::QuadraticForm => "quadratic-form",
            Self::Structure => "structure",
            Self::All => "all",
            Self::SelfTest => "self-test",
        }
    }

    /// The concrete suites run by `all`; the self-test is excluded.
    pub fn members(self) -> Vec<Suite> {
        match self {
            Self::All => Self::ALL[..11].to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == s)
            .ok_or_else(|| Error::Unknown { kind: "suite", id: s.to_string() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub n: usize,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: Option<f64>,
}

pub(crate) type NamedParams = Vec<(String, String)>;

impl Case {
    fn build(identity: &str, params: &NamedParams, n: usize, passed: bool, lhs: String, rhs: String, abs_err: Option<f64>) -> Self {
        Self {
            identity: identity.to_string(),
            params: params.iter().cloned().collect(),
            n,
            status: if passed { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            abs_err,
        }
    }

    pub(crate) fn exact<T: Scalar>(identity: &str, params: &NamedParams, n: usize, lhs: &T, rhs: &T) -> Self {
        Self::build(identity, params, n, lhs == rhs, lhs.render(), rhs.render(), None)
    }

    /// Float comparison; `passed` carries the check's own tolerance rule.
    pub(crate) fn float(identity: &str, params: &NamedParams, n: usize, lhs: f64, rhs: f64, passed: bool) -> Self {
        Self::build(identity, params, n, passed, format!("{lhs:e}"), format!("{rhs:e}"), Some((lhs - rhs).abs()))
    }

    pub(crate) fn error(identity: &str, params: &NamedParams, n: usize, err: &Error) -> Self {
        Self::build(identity, params, n, false, format!("error: {err}"), String::new(), None)
    }

    /// One case for a whole `n`-indexed family of equalities: the first
    /// mismatch, or the last index when all agree.
    pub(crate) fn sides<T: Scalar>(identity: &str, params: &NamedParams, sides: Result<Vec<(T, T)>>) -> Self {
        match sides {
            Err(e) => Self::error(identity, params, 0, &e),
            Ok(v) => {
                let n = v.iter().position(|(l, r)| l != r).unwrap_or(v.len().saturating_sub(1));
                match v.get(n) {
                    Some((l, r)) => Self::exact(identity, params, n, l, r),
                    None => Self::error(identity, params, 0, &Error::Validation("empty comparison".into())),
                }
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub order: usize,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Failing cases only.
    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }
}

pub(crate) type Job = Box<dyn Fn() -> Vec<Case> + Send + Sync>;

/// Runs a suite on the grid drawn from `seed`. `order` is the series
/// truncation order; polynomial suites cap `n` at their own limits.
pub fn run_suite(suite: Suite, seed: u64, order: usize) -> VerificationReport {
    let jobs: Vec<Job> = suite.members().into_iter().flat_map(|s| suites::jobs(s, seed, order)).collect();
    let mut cases: Vec<Case> = jobs.par_iter().flat_map_iter(|job| job()).collect();
    cases.sort_by_cached_key(|c| {
        (c.identity.clone(), serde_json::to_string(&c.params).unwrap_or_default(), c.n, c.lhs.clone(), c.rhs.clone())
    });
    let passed = cases.iter().filter(|c| c.passed()).count();
    let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
    VerificationReport { suite: suite.id().to_string(), seed, order, cases, summary }
}

/// [`run_suite`] from a suite id.
pub fn run_suite_id(suite: &str, seed: u64, order: usize) -> Result<VerificationReport> {
    Ok(run_suite(suite.parse()?, seed, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(run_suite_id("nope", 1, 4), Err(Error::Unknown { .. })));
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn self_test_fails() {
        let r = run_suite(Suite::SelfTest, 1, 6);
        assert!(r.summary.failed >= 1);
        assert!(!r.all_passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Convolution, 3, 6).to_json();
        let b = run_suite(Suite::Convolution, 3, 6).to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        let pos: Vec<_> = ["\"suite\"", "\"seed\"", "\"order\"", "\"cases\"", "\"summary\""]
            .iter()
            .map(|k| a.find(k).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(v["cases"][0]["abs_err"].is_null());
    }
}

// SPDX-License-Identifier: Apache-2.0

//! Verified identities and their pass/fail semantics.

use serde::{Deserialize, Serialize};

use crate::scalar::{Deviation, Mode};

/// What outcome a check is expected to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    /// The identity must hold.
    Hold,
    /// The identity must be violated (e.g. nonassociativity witnesses).
    Fail,
    /// Observational only; never fails a run.
    Record,
}

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    /// The identity being tested, written out as a formula.
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub mode: Mode,
    pub deviation: String,
    pub passed: bool,
    pub expected: Expected,
    #[serde(skip)]
    pub deviation_value: f64,
    /// Whether the identity itself held, regardless of expectation.
    #[serde(skip)]
    pub held: bool,
}

impl CheckResult {
    /// Builds a result from a deviation. `passed` compares the deviation with
    /// zero (exact) or `tol` (float) and is inverted for [`Expected::Fail`].
    /// [`Expected::Record`] checks always pass.
    pub fn from_deviation(
        check_id: impl Into<String>,
        reference: impl Into<String>,
        deviation: Deviation,
        tol: f64,
        expected: Expected,
    ) -> Self {
        let holds = deviation.within(tol);
        let passed = match expected {
            Expected::Hold => holds,
            Expected::Fail => !holds,
            Expected::Record => true,
        };
        CheckResult {
            check_id: check_id.into(),
            reference: reference.into(),
            mode: deviation.mode(),
            deviation: deviation.to_string(),
            passed,
            expected,
            deviation_value: deviation.as_f64(),
            held: holds,
        }
    }

    /// Whether this check should make a run fail.
    pub fn is_failure(&self) -> bool {
        self.expected != Expected::Record && !self.passed
    }
}

/// Running max-deviation accumulator for one check.
#[derive(Clone, Copy, Debug)]
pub struct DeviationAcc {
    max: Deviation,
}

impl DeviationAcc {
    pub fn new(mode: Mode) -> Self {
        DeviationAcc {
            max: Deviation::zero(mode),
        }
    }

    pub fn push(&mut self, d: Deviation) {
        self.max = self.max.max(d);
    }

    pub fn get(&self) -> Deviation {
        self.max
    }
}

/// A deviation measured for one identity, not yet judged against a tolerance.
///
/// Sweeps over seeds or sample points merge these by id (keeping the worst
/// deviation) before turning them into [`CheckResult`]s.
#[derive(Clone, Debug)]
pub struct Measured {
    pub check_id: String,
    pub reference: String,
    pub deviation: Deviation,
    pub expected: Expected,
    /// Overrides the run tolerance (used by negative controls).
    pub tol: Option<f64>,
}

impl Measured {
    pub fn new(
        check_id: impl Into<String>,
        reference: impl Into<String>,
        deviation: Deviation,
        expected: Expected,
    ) -> Self {
        Measured {
            check_id: check_id.into(),
            reference: reference.into(),
            deviation,
            expected,
            tol: None,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = Some(tol);
        self
    }

    pub fn finish(self, tol: f64) -> CheckResult {
        let tol = self.tol.unwrap_or(tol);
        CheckResult::from_deviation(
            self.check_id,
            self.reference,
            self.deviation,
            tol,
            self.expected,
        )
    }
}

/// Merges `incoming` into `acc` by id, keeping the larger deviation. For
/// expected failures the smaller deviation is kept, since a single instance
/// where the identity holds is what would make the check fail.
pub fn merge_measured(acc: &mut Vec<Measured>, incoming: Vec<Measured>) {
    for m in incoming {
        match acc.iter_mut().find(|a| a.check_id == m.check_id) {
            Some(a) => {
                let worse = match a.expected {
                    Expected::Fail => m.deviation.as_f64() < a.deviation.as_f64(),
                    _ => m.deviation.max(a.deviation) != a.deviation,
                };
                if worse {
                    a.deviation = m.deviation;
                }
            }
            None => acc.push(m),
        }
    }
}

/// Sorts checks by id, the order every report is emitted in.
pub fn sort_checks(checks: &mut [CheckResult]) {
    checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
}

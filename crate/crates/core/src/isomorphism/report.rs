use std::fmt;

use crate::unity::Weights;

/// Operands and both sides of the first failing instance of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub operands: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new<I, S>(operands: I, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self
    where
        I: IntoIterator<Item = S>,
        S: fmt::Display,
    {
        Self {
            operands: operands.into_iter().map(|o| o.to_string()).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of one named identity on one weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub check: String,
    pub weights: Vec<i64>,
    /// Number of instances evaluated.
    pub inputs: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// A set of check records, kept sorted by weight vector then check name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| (&a.weights, &a.check).cmp(&(&b.weights, &b.check)));
        Self { records }
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> + '_ {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn total_inputs(&self) -> usize {
        self.records.iter().map(|r| r.inputs).sum()
    }

    pub fn record(&self, check: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check == check)
    }

    pub fn merge(self, other: Self) -> Self {
        let mut records = self.records;
        records.extend(other.records);
        Self::new(records)
    }
}

impl FromIterator<VerificationReport> for VerificationReport {
    fn from_iter<T: IntoIterator<Item = VerificationReport>>(iter: T) -> Self {
        Self::new(iter.into_iter().flat_map(|r| r.records).collect())
    }
}

/// Accumulates instances of one check, keeping the first failure.
pub(crate) struct Tally {
    check: String,
    weights: Vec<i64>,
    inputs: usize,
    counterexample: Option<Counterexample>,
}

impl Tally {
    pub(crate) fn new(check: impl Into<String>, weights: &Weights) -> Self {
        Self {
            check: check.into(),
            weights: weights.entries().to_vec(),
            inputs: 0,
            counterexample: None,
        }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> Counterexample) {
        self.inputs += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    pub(crate) fn finish(self) -> CheckRecord {
        CheckRecord {
            check: self.check,
            weights: self.weights,
            inputs: self.inputs,
            counterexample: self.counterexample,
        }
    }
}

//! Outcomes of exact identity checks.
//!
//! Every identity is checked on basis tuples; by multilinearity that covers
//! the whole space. A failing check carries the first offending tuple in
//! lexicographic order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SparseVec;

/// A basis tuple at which an identity fails, plus a readable account of why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub at: Vec<usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(at: &[usize], detail: impl Into<String>) -> Self {
        Witness {
            at: at.to_vec(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at: Vec<String> = self.at.iter().map(ToString::to_string).collect();
        write!(f, "({}): {}", at.join(", "), self.detail)
    }
}

pub type Check = std::result::Result<(), Witness>;

/// Compares two vectors, reporting both sides on mismatch.
pub fn expect_eq(lhs: &SparseVec, rhs: &SparseVec, at: &[usize]) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(at, format!("lhs = {lhs}, rhs = {rhs}")))
    }
}

pub fn expect(cond: bool, at: &[usize], detail: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Witness::new(at, detail()))
    }
}

/// First failure of `f` over `0..n` in order.
pub fn for_all(n: usize, f: impl FnMut(usize) -> Check) -> Check {
    (0..n).try_for_each(f)
}

/// First failure of `f` over `0..n × 0..m` in lexicographic order.
pub fn for_all_pairs(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> Check) -> Check {
    for i in 0..n {
        for j in 0..m {
            f(i, j)?;
        }
    }
    Ok(())
}

pub fn for_all_triples(n: usize, m: usize, p: usize, mut f: impl FnMut(usize, usize, usize) -> Check) -> Check {
    for i in 0..n {
        for j in 0..m {
            for k in 0..p {
                f(i, j, k)?;
            }
        }
    }
    Ok(())
}

/// A named, exactly decided identity together with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub statement: String,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn new(name: &str, statement: &str, result: Check) -> Self {
        CheckOutcome {
            name: name.to_string(),
            statement: statement.to_string(),
            witness: result.err(),
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// An ordered list of check outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, statement: &str, result: Check) {
        self.checks.push(CheckOutcome::new(name, statement, result));
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The first failure as a single witness prefixed with its check name.
    pub fn as_check(&self) -> Check {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => {
                let w = c.witness.as_ref().expect("failed check has a witness");
                Err(Witness::new(&w.at, format!("{}: {}", c.name, w.detail)))
            }
        }
    }

    /// `Ok` if every check passed, otherwise the first failure as an
    /// [`Error::Identity`].
    pub fn into_result(self) -> Result<()> {
        match self.checks.into_iter().find(|c| !c.passed()) {
            None => Ok(()),
            Some(c) => Err(Error::Identity {
                name: c.name,
                witness: c.witness.expect("failed check has a witness"),
            }),
        }
    }
}

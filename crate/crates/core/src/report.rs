//! Named pass/fail checks collected by the verification suites.

use alloc::string::String;
use alloc::vec::Vec;

/// One named identity of a verification suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The formula being checked.
    pub anchor: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(n: usize) -> Self {
        Report { n, checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, anchor: &'static str, passed: bool) {
        self.checks.push(Check { name: name.into(), anchor, passed });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

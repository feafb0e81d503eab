//! Line-oriented report records. Timing is kept out of the rendered text.

use std::fmt::Write as _;
use std::time::Duration;

use super::suites::class_names;
use super::SuiteId;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ReportOnly => "report-only",
        }
    }
}

/// One graph class, with how many source graphs fell into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    /// Canonical graph6 for graphs on at most 11 vertices.
    pub graph6: String,
    pub copies: usize,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: SuiteId,
    pub source: String,
    pub scanned: usize,
    /// Line number and parse error of every rejected input line.
    pub malformed: Vec<(usize, String)>,
    /// Graphs the suite's statement applies to.
    pub checked: usize,
    pub instances: Vec<Record>,
    pub violations: Vec<Record>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn verdict(&self) -> Verdict {
        if self.suite.is_report_only() {
            Verdict::ReportOnly
        } else if self.violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} {}", self.suite, self.suite.statement());
        let _ = writeln!(out, "source {}", self.source);
        for r in &self.instances {
            let _ = writeln!(out, "instance {} copies={} {}", r.graph6, r.copies, r.detail);
        }
        let label = if self.suite.is_report_only() { "counterexample" } else { "violation" };
        for r in &self.violations {
            let _ = writeln!(out, "{label} {} copies={} {}", r.graph6, r.copies, r.detail);
        }
        for (line, err) in &self.malformed {
            let _ = writeln!(out, "malformed line={line} {err}");
        }
        let _ = writeln!(
            out,
            "summary suite={} scanned={} malformed={} checked={} instances={} {}s={} verdict={}",
            self.suite,
            self.scanned,
            self.malformed.len(),
            self.checked,
            self.instances.len(),
            label,
            self.violations.len(),
            self.verdict().name()
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub graph6: String,
    pub copies: usize,
    pub t: Rational,
    /// Chordal, split, claw-free, 2K2-free.
    pub classes: [bool; 4],
    pub min_degree: usize,
    pub ceil_2t: usize,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub source: String,
    pub scanned: usize,
    pub malformed: Vec<(usize, String)>,
    pub records: Vec<ScanRecord>,
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn counterexamples(&self) -> usize {
        self.records.iter().filter(|r| r.min_degree != r.ceil_2t).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scan minimally tough");
        let _ = writeln!(out, "source {}", self.source);
        for r in &self.records {
            let _ = writeln!(
                out,
                "minimal {} copies={} t={} classes={} min_degree={} ceil_2t={}",
                r.graph6,
                r.copies,
                r.t,
                class_names(r.classes),
                r.min_degree,
                r.ceil_2t
            );
        }
        for (line, err) in &self.malformed {
            let _ = writeln!(out, "malformed line={line} {err}");
        }
        let _ = writeln!(
            out,
            "summary scanned={} malformed={} minimal={} degree_counterexamples={}",
            self.scanned,
            self.malformed.len(),
            self.records.len(),
            self.counterexamples()
        );
        out
    }
}

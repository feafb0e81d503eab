//! Exhaustive sweeps over enumerated or streamed graphs, checking one
//! structural statement per suite and collecting a deterministic report.

mod report;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::ceil_double;
use crate::graph::{canonical_form, encode_graph6, enumerate_connected_graphs, parse_graph6, Graph};

pub use report::{Record, ScanRecord, ScanReport, Verdict, VerificationReport};
use suites::{Finding, Profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    T4,
    T7,
    T8,
    T11,
    T12,
    T16,
    T17,
    C18,
    L19,
    L14,
    C1,
    T20,
    Kriesell,
    Deg1,
}

impl SuiteId {
    pub const ALL: [SuiteId; 14] = [
        SuiteId::T4,
        SuiteId::T7,
        SuiteId::T8,
        SuiteId::T11,
        SuiteId::T12,
        SuiteId::T16,
        SuiteId::T17,
        SuiteId::C18,
        SuiteId::L19,
        SuiteId::L14,
        SuiteId::C1,
        SuiteId::T20,
        SuiteId::Kriesell,
        SuiteId::Deg1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::T4 => "T4",
            SuiteId::T7 => "T7",
            SuiteId::T8 => "T8",
            SuiteId::T11 => "T11",
            SuiteId::T12 => "T12",
            SuiteId::T16 => "T16",
            SuiteId::T17 => "T17",
            SuiteId::C18 => "C18",
            SuiteId::L19 => "L19",
            SuiteId::L14 => "L14",
            SuiteId::C1 => "C1",
            SuiteId::T20 => "T20",
            SuiteId::Kriesell => "KRIESELL",
            SuiteId::Deg1 => "DEG1",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            SuiteId::T4 => "no minimally t-tough chordal graph has 1/2 < t <= 1",
            SuiteId::T7 => "minimally t-tough chordal graphs with t <= 1/2 have only degree-1 simplicial vertices",
            SuiteId::T8 => "no minimally t-tough split graph has t > 1/2",
            SuiteId::T11 => "minimally tough split graphs are exactly the two recognized shapes",
            SuiteId::T12 => "2 tau = kappa for connected noncomplete claw-free graphs",
            SuiteId::T16 => "minimally 1-tough claw-free graphs are exactly the cycles of length >= 4",
            SuiteId::T17 => "minimally 1/2-tough claw-free graphs are exactly the tree construction",
            SuiteId::C18 => "in a 2K2-free graph every cutset leaves at most one nontrivial component",
            SuiteId::L19 => "2K2-free edge witnesses exist inside the endpoint neighborhood",
            SuiteId::L14 => "claw-free minimally 1/2-tough edge witnesses have at most one vertex",
            SuiteId::C1 => "every edge of a minimally tough graph has a certifying set",
            SuiteId::T20 => "expanding the endpoint neighborhood of a non-bridge into a clique gives a split graph with the toughness of G - e",
            SuiteId::Kriesell => "every minimally t-tough graph has a vertex of degree ceil(2t)",
            SuiteId::Deg1 => "every minimally 1/2-tough claw-free graph has a vertex of degree 1",
        }
    }

    /// Report-only suites never fail; they list what they find.
    pub fn is_report_only(self) -> bool {
        self == SuiteId::Kriesell
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SuiteId> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Labeled for `n <= 6`, isomorphism classes above.
    Auto,
    Labeled,
    Dedup,
}

impl EnumerationMode {
    fn dedup_for(self, n: usize) -> bool {
        match self {
            EnumerationMode::Auto => n > 6,
            EnumerationMode::Labeled => false,
            EnumerationMode::Dedup => true,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Source {
    /// Every connected graph with `min_n <= n <= max_n`.
    Enumerate { min_n: usize, max_n: usize, mode: EnumerationMode },
    /// One graph6 line per graph; blank lines are skipped.
    Graph6 { name: String, text: String, cap: usize },
}

impl Source {
    pub fn enumerate(max_n: usize) -> Source {
        Source::Enumerate { min_n: 1, max_n, mode: EnumerationMode::Auto }
    }

    pub fn describe(&self) -> String {
        match self {
            Source::Enumerate { min_n, max_n, mode } => {
                let modes: Vec<String> = (*min_n..=*max_n)
                    .map(|n| format!("{n}:{}", if mode.dedup_for(n) { "classes" } else { "labeled" }))
                    .collect();
                format!("enumerate connected n={min_n}..{max_n} [{}]", modes.join(" "))
            }
            Source::Graph6 { name, .. } => format!("graph6 {name}"),
        }
    }

    /// Runs `work` on every graph, in chunks, returning results in source
    /// order together with the malformed lines.
    fn sweep<T: Send>(&self, work: impl Fn(&Graph) -> T + Sync) -> Result<(Vec<T>, Vec<(usize, String)>)> {
        const CHUNK: usize = 1 << 14;
        let mut out = Vec::new();
        let mut malformed = Vec::new();
        let mut run = |batch: &mut Vec<Graph>| {
            out.extend(batch.par_iter().map(&work).collect::<Vec<_>>());
            batch.clear();
        };
        let mut batch = Vec::with_capacity(CHUNK);
        match self {
            Source::Enumerate { min_n, max_n, mode } => {
                for n in *min_n..=*max_n {
                    for g in enumerate_connected_graphs(n, mode.dedup_for(n))? {
                        batch.push(g);
                        if batch.len() == CHUNK {
                            run(&mut batch);
                        }
                    }
                }
            }
            Source::Graph6 { text, cap, .. } => {
                for (i, line) in text.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    match parse_graph6(line, *cap) {
                        Ok(g) => batch.push(g),
                        Err(e) => malformed.push((i + 1, e.to_string())),
                    }
                    if batch.len() == CHUNK {
                        run(&mut batch);
                    }
                }
            }
        }
        run(&mut batch);
        Ok((out, malformed))
    }
}

/// Identifies a graph up to isomorphism where the canonical form is
/// available and by its own encoding otherwise.
fn record_key(g: &Graph) -> String {
    if g.order() <= 11 {
        encode_graph6(&canonical_form(g))
    } else {
        encode_graph6(g)
    }
}

/// Merges per-graph findings by graph class. The detail kept is the one
/// of the copy with the smallest own encoding, so the merge does not
/// depend on source order.
#[derive(Default)]
struct Collector {
    entries: BTreeMap<(usize, String), (usize, String, String)>,
}

impl Collector {
    fn add(&mut self, n: usize, key: String, raw: String, detail: String) {
        let slot = self.entries.entry((n, key)).or_insert_with(|| (0, raw.clone(), detail.clone()));
        slot.0 += 1;
        if raw < slot.1 {
            slot.1 = raw;
            slot.2 = detail;
        }
    }

    fn finish(self) -> Vec<Record> {
        self.entries
            .into_iter()
            .map(|((_, graph6), (copies, _, detail))| Record { graph6, copies, detail })
            .collect()
    }
}

/// Runs several suites over one pass of the source.
pub fn run_suites(suites: &[SuiteId], source: &Source) -> Result<Vec<VerificationReport>> {
    let start = Instant::now();
    let (per_graph, malformed) = source.sweep(|g| {
        let profile = Profile::new(g);
        let findings: Vec<Finding> = suites.iter().map(|&s| profile.check(s)).collect();
        let labels = findings.iter().any(|f| f.is_recorded()).then(|| (record_key(g), encode_graph6(g)));
        (g.order(), labels, findings)
    })?;
    let elapsed = start.elapsed();
    let scanned = per_graph.len();

    let mut reports = Vec::with_capacity(suites.len());
    for (i, &suite) in suites.iter().enumerate() {
        let mut checked = 0;
        let mut instances = Collector::default();
        let mut violations = Collector::default();
        for (n, labels, findings) in &per_graph {
            let f = &findings[i];
            checked += usize::from(f.checked);
            if let Some((key, raw)) = labels {
                if let Some(d) = &f.instance {
                    instances.add(*n, key.clone(), raw.clone(), d.clone());
                }
                if let Some(d) = &f.violation {
                    violations.add(*n, key.clone(), raw.clone(), d.clone());
                }
            }
        }
        reports.push(VerificationReport {
            suite,
            source: source.describe(),
            scanned,
            malformed: malformed.clone(),
            checked,
            instances: instances.finish(),
            violations: violations.finish(),
            elapsed,
        });
    }
    Ok(reports)
}

pub fn run_suite(suite: SuiteId, source: &Source) -> Result<VerificationReport> {
    Ok(run_suites(&[suite], source)?.remove(0))
}

/// Every minimally tough graph of the source with its toughness, classes
/// and the degree comparison.
pub fn scan_minimally_tough(source: &Source) -> Result<ScanReport> {
    let start = Instant::now();
    let (per_graph, malformed) = source.sweep(|g| {
        let profile = Profile::new(g);
        profile.minimal().map(|t| {
            let record = ScanRecord {
                graph6: record_key(g),
                copies: 1,
                t,
                classes: profile.class_flags(),
                min_degree: g.min_degree().unwrap_or(0),
                ceil_2t: ceil_double(t) as usize,
            };
            (g.order(), record)
        })
    })?;
    let scanned = per_graph.len();
    let mut merged: BTreeMap<(usize, String), ScanRecord> = BTreeMap::new();
    for (n, record) in per_graph.into_iter().flatten() {
        merged
            .entry((n, record.graph6.clone()))
            .and_modify(|r| r.copies += 1)
            .or_insert(record);
    }
    Ok(ScanReport {
        source: source.describe(),
        scanned,
        malformed,
        records: merged.into_values().collect(),
        elapsed: start.elapsed(),
    })
}

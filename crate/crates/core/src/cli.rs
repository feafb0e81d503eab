//! Command-line front end. [`run`] takes its streams explicitly so it can be
//! driven from tests.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::classes::{classify, Certificate, Positive};
use crate::error::{Error, Result};
use crate::families::{generate, FamilyDescriptor};
use crate::graph::{encode_graph6, parse_adjacency_list, parse_graph6, Edge, Graph, DEFAULT_CAP, MAX_VERTICES};
use crate::harness::{run_suites, scan_minimally_tough, EnumerationMode, Source, SuiteId, Verdict};
use crate::minimal::{claim1_witness, minimal_toughness, NotMinimal};
use crate::rational::parse_rational;
use crate::toughness::{is_t_tough, toughness, WitnessSet};

pub const CAP_ENV: &str = "TOUGHKIT_CAP";

#[derive(Parser, Debug)]
#[command(name = "toughkit", version, about = "Exact graph toughness toolkit")]
struct Cli {
    /// Maximum number of worker threads.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the toughness and a minimizing cutset.
    Toughness { input: Option<PathBuf> },
    /// Decide t-toughness; on failure print a violating cutset.
    IsTough { t: String, input: Option<PathBuf> },
    /// Chordal, split, claw-free and 2K2-free verdicts with certificates.
    Classify { input: Option<PathBuf> },
    /// Decide minimal toughness.
    MinTough { input: Option<PathBuf> },
    /// Certifying set for one edge `u-v` of a minimally tough graph.
    Witness {
        edge: String,
        input: Option<PathBuf>,
        /// Toughness to certify against; defaults to the graph's own.
        #[arg(long)]
        t: Option<String>,
    },
    /// Emit a family member as graph6, e.g. `star:3` or `doublestar:4,2`.
    Generate { descriptor: String },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// List every minimally tough graph of the source.
    Scan {
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Enumerate connected graphs up to N vertices.
    #[arg(long, value_name = "N", conflicts_with = "input")]
    enumerate: Option<usize>,
    /// Smallest order to enumerate.
    #[arg(long, default_value_t = 1, value_name = "N")]
    min_n: usize,
    /// Enumerate labeled graphs at every order.
    #[arg(long, conflicts_with = "dedup")]
    labeled: bool,
    /// Enumerate isomorphism classes at every order.
    #[arg(long)]
    dedup: bool,
    /// graph6 corpus, one graph per line (`-` for standard input).
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

/// Usage problems exit with 2, failed checks with 1.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Internal(_)) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

struct Context<'a> {
    cap: usize,
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    fn read_text(&mut self, path: Option<&PathBuf>) -> std::result::Result<String, Failure> {
        match path {
            Some(p) if p.as_os_str() != "-" => {
                fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))
            }
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| usage(format!("cannot read standard input: {e}")))?;
                Ok(s)
            }
        }
    }

    fn read_graph(&mut self, path: Option<&PathBuf>) -> std::result::Result<Graph, Failure> {
        let text = self.read_text(path)?;
        Ok(parse_graph_text(&text, self.cap)?)
    }
}

/// graph6 when the first non-blank line starts with a byte >= 63 and has
/// no space; adjacency list otherwise.
pub fn parse_graph_text(text: &str, cap: usize) -> Result<Graph> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let is_graph6 = first.as_bytes().first().is_some_and(|&b| b >= 63) && !first.contains(' ');
    if is_graph6 {
        Ok(parse_graph6(first.trim_end(), cap)?)
    } else {
        Ok(parse_adjacency_list(text, cap)?)
    }
}

fn cap_from_env() -> std::result::Result<usize, Failure> {
    match std::env::var(CAP_ENV) {
        Err(_) => Ok(DEFAULT_CAP),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(c) if (1..=MAX_VERTICES).contains(&c) => Ok(c),
            _ => Err(usage(format!("{CAP_ENV} must be an integer in 1..={MAX_VERTICES}, got {v:?}"))),
        },
    }
}

fn parse_edge(text: &str, g: &Graph) -> std::result::Result<Edge, Failure> {
    let bad = || usage(format!("expected an edge u-v of the graph, got {text:?}"));
    let (a, b) = text.split_once('-').ok_or_else(bad)?;
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    let e = Edge::try_new(a, b).ok_or_else(bad)?;
    if e.v >= g.order() || !g.has_edge(e.u, e.v) {
        return Err(bad());
    }
    Ok(e)
}

fn witness_line(label: &str, w: Option<&WitnessSet>) -> String {
    match w {
        Some(w) => format!("{label} {} size={} components={}", w.set, w.cut_size, w.component_count),
        None => format!("{label} none"),
    }
}

/// Entry point shared by the binary and the tests. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match cli.jobs {
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map(Some)
            .map_err(|e| usage(format!("cannot start {jobs} workers: {e}"))),
        None => Ok(None),
    };
    let outcome = pool.and_then(|pool| dispatch(cli.command, pool.as_ref(), stdin, out, err));
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(
    command: Command,
    pool: Option<&rayon::ThreadPool>,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let mut ctx = Context { cap: cap_from_env()?, stdin };
    let mut text = String::new();
    let code = match command {
        Command::Toughness { input } => {
            let g = ctx.read_graph(input.as_ref())?;
            let t = toughness(&g);
            text.push_str(&format!("{}\n{}\n", t.value, witness_line("witness", t.witness.as_ref())));
            0
        }
        Command::IsTough { t, input } => {
            let t = parse_rational(&t)?;
            let g = ctx.read_graph(input.as_ref())?;
            let (tough, w) = is_t_tough(&g, t)?;
            text.push_str(&format!("{tough}\n"));
            if !tough {
                text.push_str(&format!("{}\n", witness_line("violating", w.as_ref())));
            }
            0
        }
        Command::Classify { input } => {
            let g = ctx.read_graph(input.as_ref())?;
            for c in classify(&g) {
                let cert = match &c.certificate {
                    Certificate::Positive(Positive::EliminationOrder(order)) => {
                        let vs: Vec<String> = order.iter().map(|v| v.to_string()).collect();
                        format!("yes  elimination order [{}]", vs.join(","))
                    }
                    Certificate::Positive(Positive::SplitPartition { clique, independent }) => {
                        format!("yes  C={clique} I={independent}")
                    }
                    Certificate::Positive(Positive::Exhausted) => "yes".to_string(),
                    Certificate::Negative(w) => format!("no   {w}"),
                };
                text.push_str(&format!("{:<10} {cert}\n", c.class.name()));
            }
            0
        }
        Command::MinTough { input } => {
            let g = ctx.read_graph(input.as_ref())?;
            match minimal_toughness(&g) {
                Ok(t) => text.push_str(&format!("minimally {t}-tough\n")),
                Err(NotMinimal::Degenerate(v)) => {
                    text.push_str(&format!("not minimally tough: toughness {v}\n"))
                }
                Err(NotMinimal::RobustEdge(t, e)) => text.push_str(&format!(
                    "not minimally tough: toughness {t}, deleting {e} leaves it {t}-tough\n"
                )),
            }
            0
        }
        Command::Witness { edge, input, t } => {
            let g = ctx.read_graph(input.as_ref())?;
            let e = parse_edge(&edge, &g)?;
            let t = match t {
                Some(t) => parse_rational(&t)?,
                None => toughness(&g)
                    .value
                    .finite()
                    .ok_or_else(|| usage("toughness is not a positive rational; pass --t"))?,
            };
            let w = claim1_witness(&g, t, e)?;
            text.push_str(&format!("t = {t}\n{w}\n"));
            0
        }
        Command::Generate { descriptor } => {
            let cap = ctx.cap;
            let d = FamilyDescriptor::parse(&descriptor, |path| {
                let body = fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
                parse_graph_text(&body, cap)
            })?;
            let g = generate(&d)?;
            if g.order() > cap {
                return Err(usage(format!("generated graph has {} vertices, cap is {cap}", g.order())));
            }
            text.push_str(&format!("{}\n", encode_graph6(&g)));
            0
        }
        Command::Verify { suite, source } => {
            let suites: Vec<SuiteId> = if suite.eq_ignore_ascii_case("all") {
                SuiteId::ALL.to_vec()
            } else {
                vec![suite.parse::<SuiteId>()?]
            };
            let source = build_source(&mut ctx, source)?;
            let reports = in_pool(pool, || run_suites(&suites, &source))?;
            for r in &reports {
                text.push_str(&r.render());
            }
            report_elapsed(err, reports.first().map(|r| r.elapsed));
            i32::from(reports.iter().any(|r| r.verdict() == Verdict::Fail))
        }
        Command::Scan { source } => {
            let source = build_source(&mut ctx, source)?;
            let report = in_pool(pool, || scan_minimally_tough(&source))?;
            text.push_str(&report.render());
            report_elapsed(err, Some(report.elapsed));
            0
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| usage(format!("cannot write output: {e}")))?;
    Ok(code)
}

fn in_pool<R: Send>(pool: Option<&rayon::ThreadPool>, job: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(job),
        None => job(),
    }
}

fn report_elapsed(err: &mut dyn Write, elapsed: Option<Duration>) {
    if let Some(d) = elapsed {
        let _ = writeln!(err, "elapsed {:.3}s", d.as_secs_f64());
    }
}

fn build_source(ctx: &mut Context<'_>, args: SourceArgs) -> std::result::Result<Source, Failure> {
    let mode = match (args.labeled, args.dedup) {
        (true, _) => EnumerationMode::Labeled,
        (_, true) => EnumerationMode::Dedup,
        _ => EnumerationMode::Auto,
    };
    match (args.enumerate, args.input) {
        (Some(max_n), None) => {
            if args.min_n > max_n {
                return Err(usage("--min-n exceeds --enumerate"));
            }
            Ok(Source::Enumerate { min_n: args.min_n, max_n, mode })
        }
        (None, Some(path)) => {
            let text = ctx.read_text(Some(&path))?;
            Ok(Source::Graph6 { name: path.display().to_string(), text, cap: ctx.cap })
        }
        _ => Err(usage("give exactly one of --enumerate N or --input FILE")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("toughkit").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const C4: &str = "4\n0 1\n1 2\n2 3\n3 0\n";

    #[test]
    fn toughness_of_c4() {
        let (code, out, _) = call(&["toughness"], C4);
        assert_eq!(code, 0);
        assert_eq!(out, "1\nwitness {0,2} size=2 components=2\n");
    }

    #[test]
    fn graph6_input_is_detected() {
        let (code, out, _) = call(&["toughness"], "Bw\n");
        assert_eq!(code, 0);
        assert_eq!(out, "inf\nwitness none\n");
    }

    #[test]
    fn min_tough_of_a_claw() {
        let (code, out, _) = call(&["min-tough"], "4\n0 1\n0 2\n0 3\n");
        assert_eq!(code, 0);
        assert_eq!(out, "minimally 1/3-tough\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["is-tough", "0", "-"], C4).0, 2);
        assert_eq!(call(&["is-tough", "1.5"], C4).0, 2);
        assert_eq!(call(&["witness", "0-2"], C4).0, 2);
        assert_eq!(call(&["nonsense"], C4).0, 2);
        assert_eq!(call(&["toughness"], "3\n0 5\n").0, 2);
        assert_eq!(call(&["verify", "T99", "--enumerate", "3"], "").0, 2);
        assert_eq!(call(&["verify", "T16"], "").0, 2);
    }

    #[test]
    fn is_tough_reports_violation() {
        let (code, out, _) = call(&["is-tough", "3/2"], "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        assert_eq!(code, 0);
        assert_eq!(out, "false\nviolating {0,2} size=2 components=2\n");
    }

    #[test]
    fn witness_prints_both_inequalities() {
        let (code, out, _) = call(&["witness", "0-1"], C4);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("S = {2}"));
        assert!(out.contains("w((G-e)-S) = 2 > |S|/t = 1"));
    }

    #[test]
    fn generate_star() {
        let (code, out, _) = call(&["generate", "star:3"], "");
        assert_eq!(code, 0);
        let g = parse_graph6(out.trim(), 32).unwrap();
        assert_eq!((g.order(), g.degree(0)), (4, 3));
    }

    #[test]
    fn verify_and_scan() {
        let (code, out, err) = call(&["verify", "T16", "--enumerate", "5", "--jobs", "2"], "");
        assert_eq!(code, 0);
        assert!(out.ends_with("verdict=pass\n"), "{out}");
        assert!(err.starts_with("elapsed"));
        let (code, out, _) = call(&["scan", "--enumerate", "3"], "");
        assert_eq!(code, 0);
        assert!(out.contains("t=1/2"), "{out}");
    }

    #[test]
    fn classify_table() {
        let (_, out, _) = call(&["classify"], C4);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 4);
        assert!(rows[0].starts_with("chordal    no   C4 [0,1,2,3]"));
        assert!(rows[2].starts_with("claw-free  yes"));
    }
}

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use zforce::enumeration::{enumerate_graphs, enumerate_graphs_long};
use zforce::invariants::min_forcing_set;
use zforce::report::{
    compute_line, run_suite, run_suite_long, ComputeRecord, Suite, VerificationReport,
};
use zforce::structure::{recognize_f_one, RecognitionReport};
use zforce::{
    closure, emit_graph6, max_stalled_witness, min_fort, parse_graph6, ForcingRule, Graph,
    VertexSet,
};

#[derive(Parser)]
#[command(
    name = "zforce",
    version,
    about = "Exact zero forcing and skew zero forcing on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Standard,
    Skew,
}

impl From<Rule> for ForcingRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Standard => ForcingRule::Standard,
            Rule::Skew => ForcingRule::Skew,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    /// Largest stalled proper subset.
    Stalled,
    /// Smallest fort.
    Fort,
    /// Forces from a starting set (default: a minimum forcing set).
    Trace,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants for each graph6 line on standard input.
    Compute {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Recognizer verdicts against the exhaustive oracle for each graph6 line.
    Classify {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Sweep all graphs up to an order and test one claim (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Admit the slow order-9 sweep.
        #[arg(long)]
        long: bool,
        /// Fail on violations in any suite, not only the strict ones.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// One graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        long: bool,
    },
    /// A stalled set, fort or forcing trace for one graph.
    Witness {
        #[arg(long = "set", value_enum)]
        kind: WitnessKind,
        #[arg(long, value_enum, default_value = "skew")]
        rule: Rule,
        /// The graph; read from standard input when absent.
        #[arg(long)]
        graph: Option<String>,
        /// Comma-separated starting vertices for `trace`.
        #[arg(long, value_delimiter = ',')]
        start: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Compute { format } => {
            let graphs = read_graphs(io::stdin().lock())?;
            if format == Format::Csv {
                writeln!(out, "{}", ComputeRecord::CSV_HEADER)?;
            }
            for (line, g) in graphs {
                let rec = compute_line(&g).with_context(|| format!("line {line}"))?;
                match format {
                    Format::Csv => writeln!(out, "{}", rec.to_csv_row())?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
                }
            }
            ExitCode::SUCCESS
        }
        Command::Classify { format } => {
            let graphs = read_graphs(io::stdin().lock())?;
            if format == Format::Csv {
                writeln!(out, "{}", RecognitionReport::CSV_HEADER)?;
            }
            for (line, g) in graphs {
                let rec = recognize_f_one(&g).with_context(|| format!("line {line}"))?;
                match format {
                    Format::Csv => writeln!(out, "{}", rec.to_csv_row())?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
                }
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            max_n,
            long,
            strict,
            format,
        } => {
            let names: Vec<String> = if suite == "all" {
                Suite::ALL.iter().map(|s| s.as_str().to_string()).collect()
            } else {
                suite.parse::<Suite>()?;
                vec![suite]
            };
            if format == Format::Csv {
                writeln!(out, "{}", VerificationReport::CSV_HEADER)?;
            }
            let mut failing = false;
            for name in names {
                let r = if long {
                    run_suite_long(&name, max_n)?
                } else {
                    run_suite(&name, max_n)?
                };
                write_report(&mut out, &r, format)?;
                failing |= !r.passed() && (r.strict || strict);
            }
            if failing {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Enumerate { n, connected, long } => {
            let graphs = if long {
                enumerate_graphs_long(n, connected)?
            } else {
                enumerate_graphs(n, connected)?
            };
            for g in graphs {
                writeln!(out, "{}", emit_graph6(&g)?)?;
            }
            ExitCode::SUCCESS
        }
        Command::Witness {
            kind,
            rule,
            graph,
            start,
            format,
        } => {
            let g = match graph {
                Some(text) => parse_graph6(text.trim()).context("--graph")?,
                None => match read_graphs(io::stdin().lock())?.into_iter().next() {
                    Some((_, g)) => g,
                    None => bail!("no graph on standard input"),
                },
            };
            witness(&mut out, &g, kind, rule.into(), start, format)?;
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

/// Non-empty lines with their 1-based line numbers; an optional `>>graph6<<`
/// prefix is accepted.
fn read_graphs(input: impl BufRead) -> Result<Vec<(usize, Graph)>> {
    let mut graphs = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        let g = parse_graph6(text).with_context(|| format!("line {}", i + 1))?;
        graphs.push((i + 1, g));
    }
    Ok(graphs)
}

fn write_report(out: &mut impl Write, r: &VerificationReport, format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            for row in r.csv_rows() {
                writeln!(out, "{row}")?;
            }
            writeln!(
                out,
                "# {} n<={} checked={} violations={} strict={} claim: {}",
                r.suite,
                r.range.last().copied().unwrap_or(0),
                r.graphs_checked,
                r.violations.len(),
                r.strict,
                r.claim
            )?;
            for note in &r.notes {
                writeln!(out, "# note: {note}")?;
            }
            writeln!(out, "# elapsed {:.3}s", r.elapsed)?;
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(r)?)?;
            writeln!(
                out,
                "{}",
                serde_json::json!({ "suite": r.suite, "elapsed_seconds": r.elapsed })
            )?;
        }
    }
    Ok(())
}

fn witness(
    out: &mut impl Write,
    g: &Graph,
    kind: WitnessKind,
    rule: ForcingRule,
    start: Option<Vec<usize>>,
    format: Format,
) -> Result<()> {
    let g6 = emit_graph6(g)?;
    let (label, members, forces) = match kind {
        WitnessKind::Stalled => ("stalled", max_stalled_witness(g, rule)?, None),
        WitnessKind::Fort => ("fort", min_fort(g, rule)?.map(|f| f.members), None),
        WitnessKind::Trace => {
            let s = match start {
                Some(v) => {
                    if let Some(&bad) = v.iter().find(|&&x| x >= g.n()) {
                        bail!("start vertex {bad} is out of range for {} vertices", g.n());
                    }
                    v.into_iter().collect()
                }
                None => min_forcing_set(g, rule)?,
            };
            let c = closure(g, s, rule);
            (
                "trace",
                Some(c.initial),
                Some((c.trace, c.final_set, c.forced_all)),
            )
        }
    };
    match format {
        Format::Json => {
            let mut obj = serde_json::json!({
                "graph6": g6,
                "rule": rule.as_str(),
                "kind": label,
                "vertices": members.map(|m| m.to_vec()),
            });
            if let Some((trace, final_set, forced_all)) = &forces {
                obj["trace"] = serde_json::to_value(trace)?;
                obj["final"] = serde_json::to_value(final_set.to_vec())?;
                obj["forced_all"] = (*forced_all).into();
            }
            writeln!(out, "{obj}")?;
        }
        Format::Csv => {
            let list = |s: Option<VertexSet>| {
                s.map_or("none".to_string(), |s| {
                    s.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
            };
            writeln!(out, "graph6,rule,kind,vertices,trace")?;
            let trace = forces
                .map(|(t, _, _)| {
                    t.iter()
                        .map(|f| format!("{}>{}", f.forcer, f.forced))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            writeln!(out, "{g6},{rule},{label},{},{trace}", list(members))?;
        }
    }
    Ok(())
}

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use cdcrit::criticality::criticality_report;
use cdcrit::enumeration::{enumerate_connected, enumerate_graphs, find_critical, GraphStream, Source};
use cdcrit::generators::{gen_g1, gen_g2, gen_g3, gen_lemma_c1, G2Params};
use cdcrit::invariants::InvariantRecord;
use cdcrit::theorems::{check_suite, SuiteResult, TheoremId};
use cdcrit::{from_graph6, to_graph6, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Connected-domination criticality toolkit. Graphs are read and written as
/// graph6, reports as JSON lines.
#[derive(Parser)]
#[command(name = "cdcrit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one member of a graph family.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// g1: L. g2: ALPHA[,W0,...] (minimal block sizes when omitted). g3: S. c1: graph6 of H.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<String>,
    },
    /// Invariant records for each input graph.
    Invariants(InputArgs),
    /// Criticality reports for each input graph.
    CheckCritical {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Graphs on exactly N vertices, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Keep only maximal K-critical graphs (implies --connected).
        #[arg(long)]
        critical_k: Option<usize>,
    },
    /// Check theorem suites; exits with status 2 on any violation.
    VerifyTheorems {
        /// `all` or a comma-separated list of theorem ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Explore the open conjecture; always exits 0 once the report is written.
    Conjecture {
        #[command(flatten)]
        stream: StreamArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    G1,
    G2,
    G3,
    C1,
}

#[derive(Args)]
struct InputArgs {
    /// graph6 file; standard input when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct StreamArgs {
    /// All connected graphs on 1..=N vertices.
    #[arg(long, conflicts_with = "file")]
    n: Option<usize>,
    /// graph6 file; standard input when neither --n nor --file is given.
    #[arg(long)]
    file: Option<PathBuf>,
}

fn read_input(file: Option<PathBuf>) -> Result<Vec<Graph>> {
    let source = match file {
        Some(path) => Source::Graph6File(path),
        None => Source::Graph6Stdin,
    };
    Ok(GraphStream::new(source).collect()?)
}

fn read_stream(args: StreamArgs) -> Result<Vec<Graph>> {
    match args.n {
        Some(n) => Ok(GraphStream::new(Source::InternalUpTo(n)).collect()?),
        None => read_input(args.file),
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim().parse().with_context(|| format!("expected a non-negative integer, got {s:?}"))
}

fn generate(family: Family, params: &[String]) -> Result<Graph> {
    let single = || -> Result<usize> {
        match params {
            [p] => parse_usize(p),
            _ => bail!("expected exactly one parameter"),
        }
    };
    Ok(match family {
        Family::G1 => gen_g1(single()?)?,
        Family::G3 => gen_g3(single()?)?,
        Family::G2 => {
            let Some((alpha, w)) = params.split_first() else {
                bail!("g2 needs ALPHA[,W0,...]");
            };
            let alpha = parse_usize(alpha)?;
            let p = if w.is_empty() {
                G2Params::minimal(alpha)
            } else {
                G2Params {
                    alpha,
                    w_sizes: w.iter().map(|s| parse_usize(s)).collect::<Result<_>>()?,
                }
            };
            gen_g2(&p)?
        }
        Family::C1 => match params {
            [h] => gen_lemma_c1(&from_graph6(h.trim().as_bytes())?)?,
            _ => bail!("c1 needs the graph6 string of H"),
        },
    })
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    graph6: String,
    error: &'a str,
}

#[derive(Serialize)]
struct Summary<'a, T> {
    summary: &'a T,
}

fn write_suite(out: &mut impl Write, result: &SuiteResult) -> Result<()> {
    for r in &result.records {
        json_line(out, r)?;
    }
    for r in &result.reports {
        json_line(out, &Summary { summary: r })?;
    }
    eprintln!("{:<8} {:>8} {:>10} {:>9} {:>8}", "theorem", "checked", "violations", "equality", "skipped");
    for r in &result.reports {
        eprintln!(
            "{:<8} {:>8} {:>10} {:>9} {:>8}",
            r.theorem_id.as_str(),
            r.graphs_checked,
            r.violations.len(),
            r.equality_cases.len(),
            r.skipped.len()
        );
    }
    Ok(())
}

fn parse_suite(suite: &str) -> Result<Vec<TheoremId>> {
    if suite.eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    let ids = suite
        .split(',')
        .map(|s| s.trim().parse::<TheoremId>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ids)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut code = ExitCode::SUCCESS;
    match cli.command {
        Command::Gen { family, params } => {
            writeln!(out, "{}", to_graph6(&generate(family, &params)?))?;
        }
        Command::Invariants(input) => {
            for g in read_input(input.file)? {
                let record = InvariantRecord::compute(&g).with_context(|| to_graph6(&g))?;
                json_line(&mut out, &record)?;
            }
        }
        Command::CheckCritical { k, input } => {
            for g in read_input(input.file)? {
                match criticality_report(&g, k) {
                    Ok(report) => json_line(&mut out, &report)?,
                    Err(e) => {
                        json_line(&mut out, &ErrorLine { graph6: to_graph6(&g), error: &e.to_string() })?;
                        code = ExitCode::FAILURE;
                    }
                }
            }
        }
        Command::Enumerate { n, connected, critical_k } => {
            let graphs = if connected || critical_k.is_some() {
                enumerate_connected(n)?
            } else {
                enumerate_graphs(n)?
            };
            let graphs = match critical_k {
                Some(k) => find_critical(&graphs, k),
                None => graphs,
            };
            for g in &graphs {
                writeln!(out, "{}", to_graph6(g))?;
            }
        }
        Command::VerifyTheorems { suite, stream } => {
            let ids = parse_suite(&suite)?;
            let graphs = read_stream(stream)?;
            let result = check_suite(&graphs, &ids);
            write_suite(&mut out, &result)?;
            if result.reports.iter().any(|r| r.theorem_id.is_proved() && !r.passed()) {
                code = ExitCode::from(2);
            }
        }
        Command::Conjecture { stream } => {
            let graphs = read_stream(stream)?;
            write_suite(&mut out, &check_suite(&graphs, &[TheoremId::Conjecture]))?;
        }
    }
    out.flush()?;
    Ok(code)
}

fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var("CDCRIT_THREADS") {
        let threads = parse_usize(&value).context("CDCRIT_THREADS")?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

//! Command-line front end.
//!
//! Subcommands wire the library into pipelines: `reorient` is the streaming
//! engine over stdin/stdout (so two processes can play the vertex game over
//! a pipe), `check` and `witness` run the deciders, `gen` produces
//! instances, `adversary` builds refuting extensions, `oracle` runs the
//! brute-force ground truth, and `bench` emits timing CSV.
//!
//! Exit codes are a stable contract: 0 success, 2 parse/usage error,
//! 3 pseudo-transitivity violation, 4 resource guard, 5 internal invariant
//! violation, 1 anything else. Check verdicts (`PHI fail ...`) are
//! results, not errors: a run that produced a verdict exits 0.

use std::fs;
use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ograph::adversary::{break_phi, break_theta};
use ograph::bench::{bench_median, CSV_HEADER};
use ograph::engine::SmartStream;
use ograph::generators::{fixture, random_pseudo_transitive, Fixture};
use ograph::oracle::{enumerate_pseudo_transitive, is_extendible, Extendibility};
use ograph::predicates::{
    check_phi, check_psi, check_sigma, check_theta, is_lazy, phi_witness, psi_witness, sigma_witness,
    theta_witness, WitnessChain,
};
use ograph::{format, Check, Error, Ght, OGraph, Vertex, Violation, ViolationKind};

#[derive(Parser)]
#[command(name = "ograph", version, about = "Incremental transitive reorientation of pseudo-transitive oriented graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream a reorientation: reads `odelta v1` (or a whole `ograph v1`
    /// file, replayed in id order) and emits one `o u v` line per decided
    /// order pair, flushed after every vertex.
    Reorient {
        /// Input file; `-` or absent reads stdin.
        input: Option<String>,
        /// Re-check transitivity, laziness, and the global properties
        /// after every step.
        #[arg(long)]
        paranoid: bool,
        /// Check the final triple before exiting.
        #[arg(long)]
        verify: bool,
        /// Suppress the order output.
        #[arg(long)]
        quiet: bool,
    },
    /// Run one decider and print a one-line verdict.
    Check {
        #[arg(value_enum)]
        which: CheckKind,
        /// Graph file (`ograph v1`), optionally with embedded `o` lines.
        graph: String,
        /// Order file: `o u v` lines, bare or inside an `ograph v1` file.
        order: Option<String>,
    },
    /// Search a witness chain and print it (`chain e0 e1 ...` or `none`).
    Witness {
        #[arg(value_enum)]
        kind: WitnessCmdKind,
        graph: String,
        a: Vertex,
        b: Vertex,
        c: Vertex,
        /// Required for theta and sigma.
        d: Option<Vertex>,
    },
    /// Emit an instance in `ograph v1` form.
    Gen(GenArgs),
    /// Build refuting one-vertex extensions, emitted as `odelta v1`.
    Adversary {
        #[command(subcommand)]
        command: AdversaryCommand,
    },
    /// Brute-force ground truth on small instances.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Time the streaming engine and emit CSV.
    Bench {
        /// Comma-separated instance sizes, e.g. 250,500,1000.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0.1)]
        flips: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Repetitions per size; the per-field median is reported.
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
}

#[derive(Args)]
struct GenArgs {
    /// Canonical fixture name (C3, TT-L, TT-R, G22-L, G22-R, THETA5);
    /// overrides the random parameters and includes the fixture's order.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, default_value_t = 16)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = 0.5)]
    flips: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum AdversaryCommand {
    /// Extension refuting a triple where the phi property fails.
    BreakPhi { file: String, a: Vertex, b: Vertex, c: Vertex },
    /// Extension refuting a quadruple where theta fails (phi and psi must
    /// hold).
    BreakTheta { file: String, a: Vertex, b: Vertex, c: Vertex, d: Vertex },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Decide extendibility; on `no`, print the obstructing delta.
    Extendible { graph: String, order: String },
    /// Enumerate all pseudo-transitive ographs on n vertices.
    Enumerate {
        n: usize,
        /// Print only how many there are.
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Pt,
    Ght,
    Phi,
    Psi,
    Theta,
    Sigma,
    Lazy,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessCmdKind {
    Phi,
    Psi,
    Theta,
    Sigma,
}

const EXIT_PARSE: u8 = 2;
const EXIT_PSEUDO_TRANSITIVITY: u8 = 3;
const EXIT_RESOURCE: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::InvalidArgument(_) => EXIT_PARSE,
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::Violation(v) if v.kind == ViolationKind::PseudoTransitivity => EXIT_PSEUDO_TRANSITIVITY,
        Error::Violation(_) => EXIT_INTERNAL,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Reorient { input, paranoid, verify, quiet } => reorient(input, paranoid, verify, quiet),
        Command::Check { which, graph, order } => check(which, &graph, order.as_deref()),
        Command::Witness { kind, graph, a, b, c, d } => witness(kind, &graph, a, b, c, d),
        Command::Gen(args) => gen(args),
        Command::Adversary { command } => adversary(command),
        Command::Oracle { command } => oracle(command),
        Command::Bench { n, density, flips, seed, reps } => bench(&n, density, flips, seed, reps),
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))
}

/// Loads a triple from a graph file and an optional order source; with no
/// separate order file, the graph file's own `o` lines are used.
fn load_ght(graph_path: &str, order_path: Option<&str>) -> Result<Ght, Error> {
    let (graph, embedded) = format::parse_ograph(&read_input(graph_path)?)?;
    let order = match order_path {
        Some(path) => format::parse_order(&read_input(path)?, graph.n())?,
        None => embedded,
    };
    Ght::new(graph, order)
}

fn reorient(input: Option<String>, paranoid: bool, verify: bool, quiet: bool) -> Result<(), Error> {
    let stdin = io::stdin();
    let mut reader: Box<dyn BufRead> = match input.as_deref() {
        None | Some("-") => Box::new(stdin.lock()),
        Some(path) => Box::new(io::BufReader::new(
            fs::File::open(path).map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?,
        )),
    };

    let mut stdout = io::stdout().lock();
    let mut stream = SmartStream::new();
    let mut expected = 0usize;
    let mut line_no = 0usize;
    let mut seen_content = false;
    let mut buf = String::new();
    let mut whole_graph: Option<OGraph> = None;

    loop {
        buf.clear();
        let read = reader
            .read_line(&mut buf)
            .map_err(|e| Error::InvalidArgument(format!("read failed: {e}")))?;
        if read == 0 {
            break;
        }
        line_no += 1;
        let text = buf.trim();
        if text.is_empty() {
            continue;
        }
        let first = !seen_content;
        seen_content = true;
        if first && text == format::ODELTA_HEADER {
            continue;
        }
        if first && text == format::OGRAPH_HEADER {
            // whole-graph input: slurp the rest and replay it in id order
            let mut rest = String::new();
            reader
                .read_to_string(&mut rest)
                .map_err(|e| Error::InvalidArgument(format!("read failed: {e}")))?;
            let (g, _) = format::parse_ograph(&format!("{buf}{rest}"))?;
            whole_graph = Some(g);
            break;
        }
        let delta = format::parse_delta_line(text, expected, line_no)?;
        step(&mut stream, &delta, paranoid, quiet, &mut stdout)?;
        expected += 1;
    }

    if let Some(g) = whole_graph {
        for k in 0..g.n() {
            step(&mut stream, &g.delta_at(k), paranoid, quiet, &mut stdout)?;
        }
    }

    if verify {
        audit(stream.ght().check(), "final transitive reorientation check")?;
        eprintln!("GHT ok");
    }
    Ok(())
}

fn step(
    stream: &mut SmartStream,
    delta: &ograph::ExtensionDelta,
    paranoid: bool,
    quiet: bool,
    stdout: &mut impl Write,
) -> Result<(), Error> {
    let report = stream.push(delta)?;
    if !quiet {
        for (u, v) in &report.new_pairs {
            writeln!(stdout, "o {u} {v}").map_err(broken_pipe)?;
        }
        stdout.flush().map_err(broken_pipe)?;
    }
    if paranoid {
        let t = stream.ght();
        audit(t.check(), "per-step transitive reorientation check")?;
        audit(is_lazy(t), "per-step laziness check")?;
        audit(check_phi(t), "per-step phi check")?;
        audit(check_psi(t), "per-step psi check")?;
        audit(check_theta(t), "per-step theta check")?;
    }
    Ok(())
}

fn broken_pipe(e: io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

/// Turns a failed self-audit into an internal-invariant error.
fn audit(check: Check, what: &str) -> Result<(), Error> {
    match check {
        Ok(()) => Ok(()),
        Err(v) => {
            eprintln!("{what} failed: {v}");
            Err(Violation::new(ViolationKind::Internal, v.witnesses).into())
        }
    }
}

fn verdict(name: &str, check: Check) {
    match check {
        Ok(()) => println!("{name} ok"),
        Err(v) => {
            let ids: Vec<String> = v.witnesses.iter().map(|w| w.to_string()).collect();
            println!("{name} fail {}", ids.join(" "));
        }
    }
}

fn check(which: CheckKind, graph_path: &str, order_path: Option<&str>) -> Result<(), Error> {
    if let CheckKind::Pt = which {
        let (graph, _) = format::parse_ograph(&read_input(graph_path)?)?;
        verdict("PT", graph.is_pseudo_transitive());
        return Ok(());
    }
    let t = load_ght(graph_path, order_path)?;
    match which {
        CheckKind::Pt => unreachable!(),
        CheckKind::Ght => verdict("GHT", t.check()),
        CheckKind::Phi => verdict("PHI", check_phi(&t)),
        CheckKind::Psi => verdict("PSI", check_psi(&t)),
        CheckKind::Theta => verdict("THETA", check_theta(&t)),
        CheckKind::Sigma => verdict("SIGMA", check_sigma(&t)),
        CheckKind::Lazy => verdict("LAZY", is_lazy(&t)),
    }
    Ok(())
}

fn witness(
    kind: WitnessCmdKind,
    graph_path: &str,
    a: Vertex,
    b: Vertex,
    c: Vertex,
    d: Option<Vertex>,
) -> Result<(), Error> {
    let (g, _) = format::parse_ograph(&read_input(graph_path)?)?;
    let found: Option<WitnessChain> = match (kind, d) {
        (WitnessCmdKind::Phi, None) => phi_witness(&g, a, b, c)?,
        (WitnessCmdKind::Psi, None) => psi_witness(&g, a, b, c)?,
        (WitnessCmdKind::Theta, Some(d)) => theta_witness(&g, a, b, c, d)?,
        (WitnessCmdKind::Sigma, Some(d)) => sigma_witness(&g, a, b, c, d)?,
        (WitnessCmdKind::Phi | WitnessCmdKind::Psi, Some(_)) => {
            return Err(Error::invalid("phi and psi take three vertices".to_string()))
        }
        (WitnessCmdKind::Theta | WitnessCmdKind::Sigma, None) => {
            return Err(Error::invalid("theta and sigma take four vertices".to_string()))
        }
    };
    match found {
        Some(w) => {
            let ids: Vec<String> = w.chain.iter().map(|e| e.to_string()).collect();
            println!("chain {}", ids.join(" "));
        }
        None => println!("none"),
    }
    Ok(())
}

fn gen(args: GenArgs) -> Result<(), Error> {
    let text = match args.fixture {
        Some(name) => {
            let data = fixture(name.parse::<Fixture>()?);
            format::write_ograph(&data.graph, data.order.as_ref())
        }
        None => {
            let g = random_pseudo_transitive(args.n, args.density, args.flips, args.seed);
            format::write_ograph(&g, None)
        }
    };
    print!("{text}");
    Ok(())
}

fn adversary(command: AdversaryCommand) -> Result<(), Error> {
    let delta = match command {
        AdversaryCommand::BreakPhi { file, a, b, c } => break_phi(&load_ght(&file, None)?, a, b, c)?,
        AdversaryCommand::BreakTheta { file, a, b, c, d } => {
            break_theta(&load_ght(&file, None)?, a, b, c, d)?
        }
    };
    println!("{}", format::ODELTA_HEADER);
    println!("{}", format::write_delta_line(&delta));
    Ok(())
}

fn oracle(command: OracleCommand) -> Result<(), Error> {
    match command {
        OracleCommand::Extendible { graph, order } => {
            let t = load_ght(&graph, Some(&order))?;
            match is_extendible(&t)? {
                Extendibility::Extendible => println!("EXTENDIBLE yes"),
                Extendibility::Obstructed(delta) => {
                    println!("EXTENDIBLE no");
                    println!("{}", format::write_delta_line(&delta));
                }
            }
        }
        OracleCommand::Enumerate { n, count_only } => {
            if count_only {
                println!("{}", enumerate_pseudo_transitive(n)?.count());
            } else {
                for g in enumerate_pseudo_transitive(n)? {
                    println!("{}", format::write_ograph(&g, None));
                }
            }
        }
    }
    Ok(())
}

fn bench(sizes: &[usize], density: f64, flips: f64, seed: u64, reps: usize) -> Result<(), Error> {
    println!("{CSV_HEADER}");
    for &n in sizes {
        let row = bench_median(n, density, flips, seed, reps);
        println!("{}", row.csv_line());
    }
    Ok(())
}


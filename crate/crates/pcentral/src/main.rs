//! Batch command-line front end.
//!
//! Exit codes: 0 on success, 1 when a mathematically well-formed input fails
//! validation or verification, 2 when input cannot be parsed.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use pcentral::cubic::{self, CubicSolution};
use pcentral::json::{parse_document, to_canonical_string};
use pcentral::tournament::Tournament;
use pcentral::{clifford, EisensteinInt, Error, PCentralPresentation, Result};

#[derive(Parser)]
#[command(
    name = "pcentral",
    version,
    about = "Exact toolkit for Clifford algebras of p-central sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a presentation into p-cyclic symbols and a commutative part
    Decompose {
        /// Presentation JSON: {"p", "n", "c", "alpha"}
        #[arg(long)]
        input: PathBuf,
        /// Where to write the decomposition JSON
        #[arg(long)]
        output: PathBuf,
    },
    /// Tournament analysis of a 3-central generating set
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Cubic Diophantine solution families over Z[rho]
    Cubic {
        #[command(subcommand)]
        action: CubicAction,
    },
}

#[derive(Subcommand)]
enum GraphAction {
    /// Print the proposition report for a tournament or presentation
    Analyze {
        /// Tournament JSON {"n", "edges"} or presentation JSON
        #[arg(long)]
        input: PathBuf,
    },
    /// Remove one vertex per triangle and print the acyclic tournament
    Diminish {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum CubicAction {
    /// Generate verified solutions for all parameters up to a norm bound
    Solve {
        /// Equation coefficient gamma, e.g. "2-1*r"
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// Equation coefficient beta
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Keep parameters a, c with norm at most this bound
        #[arg(long)]
        bound: u64,
        /// Output JSONL path, one solution per line
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-check every line of a solution file
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Expand the core polynomial identity and print the per-monomial report
    Identity,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_format() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Decompose { input, output } => cmd_decompose(&input, &output),
        Command::Graph { action } => match action {
            GraphAction::Analyze { input } => cmd_graph_analyze(&input),
            GraphAction::Diminish { input } => cmd_graph_diminish(&input),
        },
        Command::Cubic { action } => match action {
            CubicAction::Solve {
                gamma,
                beta,
                bound,
                out,
            } => cmd_cubic_solve(&gamma, &beta, bound, &out),
            CubicAction::Verify { input } => cmd_cubic_verify(&input),
            CubicAction::Identity => cmd_cubic_identity(),
        },
    }
}

fn read_document(path: &Path) -> Result<Value> {
    parse_document(&fs::read_to_string(path)?)
}

/// Adds the version stamp to a top-level output object.
fn stamped(value: Value) -> Value {
    let mut value = value;
    if let Value::Object(map) = &mut value {
        map.insert("format_version".into(), Value::Number(1.into()));
    }
    value
}

fn cmd_decompose(input: &Path, output: &Path) -> Result<()> {
    let document = read_document(input)?;
    let pres = PCentralPresentation::from_json(&document)?.into_shared();
    let decomposition = clifford::decompose(&pres)?;
    let text = to_canonical_string(&stamped(decomposition.to_json()));
    fs::write(output, text)?;
    println!(
        "decomposed: m = {}, commutative generators = {}, degree = {} (wrote {})",
        decomposition.symbol_count(),
        decomposition.commutative.len(),
        decomposition.degree,
        output.display()
    );
    Ok(())
}

/// Accepts either a tournament document or a presentation document.
fn load_tournament(document: &Value) -> Result<Tournament> {
    let is_presentation = document
        .as_object()
        .is_some_and(|map| map.contains_key("alpha") && map.contains_key("c"));
    if is_presentation {
        let pres = PCentralPresentation::from_json(document)?;
        Tournament::from_presentation(&pres)
    } else {
        Tournament::from_json(document)
    }
}

fn cmd_graph_analyze(input: &Path) -> Result<()> {
    let tournament = load_tournament(&read_document(input)?)?;
    let report = tournament.validate_propositions();
    print!("{}", to_canonical_string(&stamped(report.to_json())));
    if report.admissible() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(report.failure_summary()))
    }
}

fn cmd_graph_diminish(input: &Path) -> Result<()> {
    let tournament = load_tournament(&read_document(input)?)?;
    let outcome = tournament.diminish()?;
    print!("{}", to_canonical_string(&stamped(outcome.to_json())));
    Ok(())
}

fn parse_eisenstein(literal: &str) -> Result<EisensteinInt> {
    literal.parse()
}

fn cmd_cubic_solve(gamma: &str, beta: &str, bound: u64, out: &Path) -> Result<()> {
    let gamma = parse_eisenstein(gamma)?;
    let beta = parse_eisenstein(beta)?;
    let mut file = fs::File::create(out)?;
    let mut count = 0usize;
    for solution in cubic::enumerate_solutions(&gamma, &beta, bound) {
        file.write_all(to_canonical_string(&solution.to_json()).as_bytes())?;
        count += 1;
    }
    println!(
        "wrote {count} verified solutions for gamma = {gamma}, beta = {beta}, norm bound {bound} to {}",
        out.display()
    );
    Ok(())
}

fn cmd_cubic_verify(input: &Path) -> Result<()> {
    let file = fs::File::open(input)?;
    let mut checked = 0usize;
    for (index, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let number = index + 1;
        let value =
            parse_document(&line).map_err(|e| Error::Format(format!("line {number}: {e}")))?;
        let solution = CubicSolution::from_json(&value)
            .map_err(|e| Error::Format(format!("line {number}: {e}")))?;
        if !cubic::verify_solution(&solution) {
            return Err(Error::VerificationFailed(format!(
                "line {number}: solution fails gamma*Y^3 = gamma*X1^3 + beta*X2^3 + gamma^2*beta^2*X3^3"
            )));
        }
        checked += 1;
    }
    println!("verified {checked} solutions");
    Ok(())
}

fn cmd_cubic_identity() -> Result<()> {
    let report = cubic::verify_core_identity();
    println!("{report}");
    if report.all_match() {
        Ok(())
    } else {
        Err(Error::VerificationFailed(
            "core identity expansion found mismatching monomials".into(),
        ))
    }
}

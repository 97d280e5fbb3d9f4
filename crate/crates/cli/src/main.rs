//! `matadj`: inspect matroids, verify adjoint maps, and build adjoints of minors.
//!
//! Exit status: 0 on success, 1 when a verification fails (or a search finds
//! nothing), 2 on unreadable input or a failed precondition.

mod dot;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use matadj::adjoint::{contract_adjoint, delete_adjoint, full_verification, minor_adjoint};
use matadj::io::{adjoint_to_json, parse_adjoint, parse_matroid, to_json_string};
use matadj::{
    adjoint_from_representation, search_adjoint, AdjointError, AdjointMap, ElementSet, Matroid, MatroidError,
    MinorSpec, SearchBudget, VerificationReport,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "matadj", version, about = "Matroid adjoints: verification and minor constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ground-set size, rank, and counts of bases, flats, and hyperplanes.
    Info { matroid: PathBuf },
    /// List the flats by rank.
    Flats {
        matroid: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the hyperplanes in lexicographic order.
    Hyperplanes {
        matroid: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every check on an adjoint map: `verify [M.json M'.json] map.json`.
    Verify {
        #[arg(num_args = 1..=3, required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Adjoint of the contraction by a set.
    ContractAdjoint {
        #[command(flatten)]
        input: MapInput,
        /// Comma-separated element labels.
        #[arg(long, value_name = "E,E,...")]
        contract: String,
        #[command(flatten)]
        output: Output,
    },
    /// Adjoint of the deletion of a coindependent set.
    DeleteAdjoint {
        #[command(flatten)]
        input: MapInput,
        #[arg(long, value_name = "E,E,...")]
        delete: String,
        #[command(flatten)]
        output: Output,
    },
    /// Adjoint of the minor M/C\D.
    MinorAdjoint {
        #[command(flatten)]
        input: MapInput,
        #[arg(long, value_name = "E,E,...", default_value = "")]
        contract: String,
        #[arg(long, value_name = "E,E,...", default_value = "")]
        delete: String,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustive search for an adjoint of a small matroid.
    Search {
        matroid: PathBuf,
        #[arg(long, default_value_t = SearchBudget::default().max_hyperplanes)]
        max_hyperplanes: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_candidates)]
        max_candidates: u64,
        /// Examine one candidate per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[command(flatten)]
        output: Output,
        /// Where to write the search log as JSON.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Adjoint built from the matrix of a matrix-backed matroid file.
    FromRep {
        matroid: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Hasse diagram of the lattice of flats in DOT format.
    ExportDot {
        matroid: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct MapInput {
    /// `[M.json] map.json`; a given M.json must equal the map's source.
    #[arg(num_args = 1..=2, required = true)]
    files: Vec<PathBuf>,
}

#[derive(Args)]
struct Output {
    /// Output file (stdout if omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Parse(String),
    Precondition(String),
    Verification(String),
    NotFound(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) | Failure::NotFound(_) => 1,
            Failure::Parse(_) | Failure::Precondition(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Precondition(m) => write!(f, "{}", prefixed(m)),
            Failure::Verification(m) => write!(f, "verification failed:\n{m}"),
            Failure::NotFound(m) => write!(f, "no adjoint found: {m}"),
        }
    }
}

fn prefixed(m: &str) -> String {
    if m.starts_with("precondition failed") {
        m.to_string()
    } else {
        format!("precondition failed: {m}")
    }
}

impl From<MatroidError> for Failure {
    fn from(e: MatroidError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<AdjointError> for Failure {
    fn from(e: AdjointError) -> Self {
        match e {
            AdjointError::InvalidInput(report) => {
                Failure::Verification(format!("input map is not a valid adjoint map\n{report}"))
            }
            AdjointError::ConstructionFailed(report) => {
                Failure::Verification(format!("constructed map failed verification\n{report}"))
            }
            other => Failure::Precondition(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_matroid(path: &Path) -> Result<Matroid, Failure> {
    parse_matroid(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<AdjointMap, Failure> {
    parse_adjoint(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

/// Loads `[M.json [M'.json]] map.json`, checking given matroids against the map.
fn load_map_with(files: &[PathBuf]) -> Result<AdjointMap, Failure> {
    let (map_path, extra) = files.split_last().expect("clap requires one file");
    let phi = load_map(map_path)?;
    if let Some(path) = extra.first() {
        if &load_matroid(path)? != phi.source() {
            return Err(Failure::Precondition(format!("{} differs from the map's source", path.display())));
        }
    }
    if let Some(path) = extra.get(1) {
        if &load_matroid(path)? != phi.target() {
            return Err(Failure::Precondition(format!("{} differs from the map's target", path.display())));
        }
    }
    Ok(phi)
}

fn parse_elements(list: &str, m: &Matroid) -> Result<ElementSet, Failure> {
    let labels = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| Failure::Parse(format!("bad element label {s:?} in {list:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(m.set(labels)?)
}

fn emit(output: &Output, text: &str) -> CmdResult {
    match &output.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Precondition(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn labels(list: &[usize]) -> String {
    list.iter().enumerate().map(|(i, l)| format!("{i}<-{l}")).collect::<Vec<_>>().join(" ")
}

/// Relabelings go to stderr when the map itself goes to stdout.
fn report_labels(phi: &AdjointMap, output: &Output) {
    let text = format!(
        "source relabeling: {}\ntarget relabeling: {}",
        labels(phi.source_labels()),
        labels(phi.target_labels())
    );
    if output.output.is_some() {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
}

fn finish_map(phi: &AdjointMap, output: &Output) -> CmdResult {
    report_labels(phi, output);
    emit(output, &adjoint_to_json(phi))
}

fn info(m: &Matroid) -> String {
    let lattice = m.flats();
    let counts: Vec<String> = lattice.counts_by_rank().iter().map(usize::to_string).collect();
    let hyperplanes = lattice.hyperplanes().map_or(0, <[ElementSet]>::len);
    format!(
        "n={} rank={} bases={} flats=[{}] hyperplanes={}",
        m.n(),
        m.rank(),
        m.bases().len(),
        counts.join(","),
        hyperplanes
    )
}

#[derive(Serialize)]
struct FlatsJson {
    n: usize,
    rank: usize,
    layers: Vec<Vec<ElementSet>>,
}

fn verify(files: &[PathBuf], json: bool) -> CmdResult {
    let phi = load_map_with(files)?;
    let report = full_verification(&phi);
    if json {
        print!("{}", to_json_string(&report));
    } else {
        print!("{}", render_report(&report));
    }
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} violations", report.violations.len())))
    }
}

fn render_report(report: &VerificationReport) -> String {
    let checks: Vec<&str> = report.checks_run.iter().map(|c| c.name()).collect();
    let mut text = format!("checks: {}\n", checks.join(", "));
    if report.valid {
        text.push_str("valid: all checks passed\n");
    } else {
        text.push_str(&format!("invalid: {} violations\n{report}", report.violations.len()));
    }
    text
}

fn search(matroid: &Path, budget: SearchBudget, output: &Output, log_path: Option<&Path>) -> CmdResult {
    let m = load_matroid(matroid)?;
    let outcome = search_adjoint(&m, &budget);
    if let Some(path) = log_path {
        fs::write(path, to_json_string(&outcome.log))
            .map_err(|e| Failure::Precondition(format!("cannot write {}: {e}", path.display())))?;
    }
    let line = format!(
        "found={} exhausted={} candidates={} hyperplanes={}",
        outcome.found.is_some(),
        outcome.exhausted,
        outcome.log.candidates_examined,
        outcome.log.hyperplanes
    );
    match &outcome.found {
        Some(phi) => {
            if output.output.is_some() {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }
            emit(output, &adjoint_to_json(phi))
        }
        None => {
            println!("{line}");
            let reason = outcome.log.diagnostic.clone().unwrap_or_else(|| {
                if outcome.exhausted {
                    "every candidate was examined".into()
                } else {
                    "candidate budget reached".into()
                }
            });
            Err(Failure::NotFound(reason))
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Info { matroid } => {
            println!("{}", info(&load_matroid(&matroid)?));
            Ok(())
        }
        Command::Flats { matroid, json } => {
            let m = load_matroid(&matroid)?;
            let lattice = m.flats();
            if json {
                print!(
                    "{}",
                    to_json_string(&FlatsJson { n: m.n(), rank: m.rank(), layers: lattice.layers().to_vec() })
                );
            } else {
                for (k, layer) in lattice.layers().iter().enumerate() {
                    let sets: Vec<String> = layer.iter().map(ElementSet::to_string).collect();
                    println!("rank {k}: {}", sets.join(" "));
                }
            }
            Ok(())
        }
        Command::Hyperplanes { matroid, json } => {
            let hyperplanes = load_matroid(&matroid)?.hyperplanes()?;
            if json {
                print!("{}", to_json_string(&hyperplanes));
            } else {
                for h in hyperplanes {
                    println!("{h}");
                }
            }
            Ok(())
        }
        Command::Verify { files, json } => verify(&files, json),
        Command::ContractAdjoint { input, contract, output } => {
            let phi = load_map_with(&input.files)?;
            let c = parse_elements(&contract, phi.source())?;
            finish_map(&contract_adjoint(&phi, &c)?, &output)
        }
        Command::DeleteAdjoint { input, delete, output } => {
            let phi = load_map_with(&input.files)?;
            let d = parse_elements(&delete, phi.source())?;
            finish_map(&delete_adjoint(&phi, &d)?, &output)
        }
        Command::MinorAdjoint { input, contract, delete, output } => {
            let phi = load_map_with(&input.files)?;
            let spec =
                MinorSpec::new(parse_elements(&contract, phi.source())?, parse_elements(&delete, phi.source())?)?;
            finish_map(&minor_adjoint(&phi, &spec)?, &output)
        }
        Command::Search { matroid, max_hyperplanes, max_candidates, dedup, output, log } => {
            let budget = SearchBudget { max_hyperplanes, max_candidates, dedup_isomorphic: dedup };
            search(&matroid, budget, &output, log.as_deref())
        }
        Command::FromRep { matroid, output } => {
            let m = load_matroid(&matroid)?;
            let rep = m
                .representation()
                .cloned()
                .ok_or_else(|| Failure::Precondition(format!("{} has no matrix", matroid.display())))?;
            emit(&output, &adjoint_to_json(&adjoint_from_representation(&m, &rep)?))
        }
        Command::ExportDot { matroid, output } => emit(&output, &dot::lattice_dot(&load_matroid(&matroid)?)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("matadj: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_line() {
        assert_eq!(info(&Matroid::uniform(2, 3).unwrap()), "n=3 rank=2 bases=3 flats=[1,3,1] hyperplanes=3");
    }

    #[test]
    fn element_lists() {
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(parse_elements("0, 3", &m).ok(), Some(ElementSet::from_elements(4, [0, 3])));
        assert_eq!(parse_elements("", &m).ok(), Some(m.empty_set()));
        assert!(matches!(parse_elements("0-2", &m), Err(Failure::Parse(_))));
        assert!(matches!(parse_elements("7", &m), Err(Failure::Precondition(_))));
    }

    #[test]
    fn failure_codes() {
        assert_eq!(Failure::from(AdjointError::NotCoindependent(ElementSet::empty(2))).code(), 2);
        let report = Box::new(VerificationReport::default());
        assert_eq!(Failure::from(AdjointError::InvalidInput(report)).code(), 1);
    }
}

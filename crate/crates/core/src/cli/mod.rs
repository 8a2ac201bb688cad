//! The `orbifold-ring` command line.
//!
//! ```text
//! orbifold-ring [--format text|csv|json] [--out PATH] <command>
//!   info W...
//!   table {deg|mult|pairing|xi} [--ring chow|model] W...
//!   poincare W...
//!   verify [--max-total K] W...
//!   verify sweep --max-n N --max-weight M [--max-total K]
//! ```
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage
//! or input errors.

pub mod output;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use crate::chow::{ChowBasisIndex, ChowRing};
use crate::element::Element;
use crate::error::Error;
use crate::isomorphism::{verify_all_between, VerificationReport, XiMap};
use crate::model::{ModelRing, XiPower};
use crate::ring::GradedRing;
use crate::unity::Weights;

use output::{BasisLine, Info, Kind, OutputDocument, Payload, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the default cap on `|w|` for `verify`.
pub const MAX_TOTAL_ENV: &str = "ORBIFOLD_RING_MAX_TOTAL";
const DEFAULT_MAX_TOTAL: i64 = 256;

pub type DynChowRing = dyn GradedRing<Basis = ChowBasisIndex>;
pub type DynModelRing = dyn GradedRing<Basis = XiPower>;

/// Supplies the ring realizations the commands operate on.
pub trait RingSource {
    fn chow(&self, weights: &Weights) -> Box<DynChowRing>;
    fn model(&self, weights: &Weights) -> Box<DynModelRing>;
}

/// The rings built from the closed-form structure constants.
#[derive(Clone, Copy, Debug, Default)]
pub struct StandardRings;

impl RingSource for StandardRings {
    fn chow(&self, weights: &Weights) -> Box<DynChowRing> {
        Box::new(ChowRing::new(weights.clone()))
    }

    fn model(&self, weights: &Weights) -> Box<DynModelRing> {
        Box::new(ModelRing::new(weights.clone()))
    }
}

#[derive(Parser, Debug)]
#[command(name = "orbifold-ring", version, about = "Orbifold Chow rings of weighted projective spaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RingKind {
    Chow,
    Model,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Deg,
    Mult,
    Pairing,
    Xi,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, |w|, <w>, Gorenstein flag and the basis with degrees.
    Info(WeightArgs),
    /// Degree, multiplication, pairing or Xi table.
    Table {
        #[arg(value_enum)]
        table: TableKind,
        #[arg(long, value_enum, default_value_t = RingKind::Model)]
        ring: RingKind,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Multiplicity of each orbifold degree.
    Poincare(WeightArgs),
    /// Exhaustively check every identity for one weight vector, or a sweep.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[arg(required = true, allow_negative_numbers = true, value_name = "W")]
    weights: Vec<i64>,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct VerifyArgs {
    #[command(subcommand)]
    sweep: Option<VerifyCommand>,

    /// Refuse weight vectors with |w| above this.
    #[arg(long, env = MAX_TOTAL_ENV, default_value_t = DEFAULT_MAX_TOTAL)]
    max_total: i64,

    #[arg(allow_negative_numbers = true, value_name = "W")]
    weights: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Every weight vector with at most N+1 entries, each in 1..=M.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_weight: i64,
        #[arg(long, env = MAX_TOTAL_ENV, default_value_t = DEFAULT_MAX_TOTAL)]
        max_total: i64,
    },
}

#[derive(Debug)]
enum Failure {
    Input(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

/// Runs the CLI on process arguments with the standard rings.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &StandardRings, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with an explicit ring source and output streams.
pub fn run_with<I, T>(args: I, rings: &dyn RingSource, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };

    let result = execute(&cli.command, rings).and_then(|(doc, passed)| {
        let text = match cli.format {
            Format::Text => doc.to_text(),
            Format::Csv => doc.to_csv(),
            Format::Json => doc.to_json(),
        };
        match &cli.out {
            Some(path) => std::fs::write(path, text),
            None => stdout.write_all(text.as_bytes()),
        }
        .map_err(Failure::Io)?;
        Ok(passed)
    });

    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY_FAILED,
        Err(failure) => {
            let _ = match failure {
                Failure::Input(e) => writeln!(stderr, "error: {e}"),
                Failure::Usage(msg) => writeln!(stderr, "error: {msg}"),
                Failure::Io(e) => writeln!(stderr, "error: cannot write output: {e}"),
            };
            EXIT_USAGE
        }
    }
}

/// Builds the document for a command; the flag is false when a verification failed.
fn execute(command: &Command, rings: &dyn RingSource) -> Result<(OutputDocument, bool), Failure> {
    match command {
        Command::Info(args) => {
            let w = Weights::new(&args.weights)?;
            Ok((info_document(&w), true))
        }
        Command::Table { table, ring, weights } => {
            let w = Weights::new(&weights.weights)?;
            let doc = match (table, ring) {
                (TableKind::Deg, RingKind::Chow) => deg_table(&w, &*rings.chow(&w), |b| b.sector.to_string()),
                (TableKind::Deg, RingKind::Model) => {
                    let xi = XiMap::new(&w);
                    deg_table(&w, &*rings.model(&w), |x| {
                        xi.preimage(*x).map(|b| b.sector.to_string()).unwrap_or_default()
                    })
                }
                (TableKind::Mult, RingKind::Chow) => mult_table(&w, &*rings.chow(&w)),
                (TableKind::Mult, RingKind::Model) => mult_table(&w, &*rings.model(&w)),
                (TableKind::Pairing, RingKind::Chow) => pairing_matrix(&w, &*rings.chow(&w)),
                (TableKind::Pairing, RingKind::Model) => pairing_matrix(&w, &*rings.model(&w)),
                (TableKind::Xi, _) => xi_table(&w, &*rings.chow(&w))?,
            };
            Ok((doc, true))
        }
        Command::Poincare(args) => {
            let w = Weights::new(&args.weights)?;
            Ok((poincare_document(&w), true))
        }
        Command::Verify(args) => match &args.sweep {
            None => {
                if args.weights.is_empty() {
                    return Err(Failure::Usage("verify needs weights or the `sweep` subcommand".into()));
                }
                let w = Weights::new(&args.weights)?;
                if w.total() > args.max_total {
                    return Err(Error::CapExceeded {
                        total: w.total(),
                        cap: args.max_total,
                    }
                    .into());
                }
                let report = verify_all_between(&*rings.chow(&w), &*rings.model(&w));
                let passed = report.passed();
                let doc = OutputDocument {
                    kind: Kind::VerifyReport,
                    weights: Some(w.entries().to_vec()),
                    payload: Payload::Report(report),
                };
                Ok((doc, passed))
            }
            Some(VerifyCommand::Sweep {
                max_n,
                max_weight,
                max_total,
            }) => {
                if *max_weight < 1 {
                    return Err(Failure::Usage("--max-weight must be at least 1".into()));
                }
                let largest = (*max_n as i64 + 1).saturating_mul(*max_weight);
                if largest > *max_total {
                    return Err(Error::CapExceeded {
                        total: largest,
                        cap: *max_total,
                    }
                    .into());
                }
                let report = sweep(*max_n, *max_weight, rings)?;
                let passed = report.passed();
                let doc = OutputDocument {
                    kind: Kind::VerifyReport,
                    weights: None,
                    payload: Payload::Sweep(report),
                };
                Ok((doc, passed))
            }
        },
    }
}

/// Every weight vector with `1..=max_n + 1` entries in `1..=max_weight`.
pub fn sweep_vectors(max_n: usize, max_weight: i64) -> impl Iterator<Item = Vec<i64>> {
    (1..=max_n + 1).flat_map(move |len| {
        std::iter::repeat_n(1..=max_weight, len).multi_cartesian_product()
    })
}

fn sweep(max_n: usize, max_weight: i64, rings: &dyn RingSource) -> Result<VerificationReport, Failure> {
    let mut reports = Vec::new();
    for raw in sweep_vectors(max_n, max_weight) {
        let w = Weights::new(&raw)?;
        reports.push(verify_all_between(&*rings.chow(&w), &*rings.model(&w)));
    }
    Ok(reports.into_iter().collect())
}

fn labels<B: Display>(basis: &[B]) -> Vec<String> {
    basis.iter().map(ToString::to_string).collect()
}

fn table_document(kind: Kind, w: &Weights, table: Table) -> OutputDocument {
    OutputDocument {
        kind,
        weights: Some(w.entries().to_vec()),
        payload: Payload::Table(table),
    }
}

fn deg_table<B, F>(w: &Weights, ring: &dyn GradedRing<Basis = B>, component: F) -> OutputDocument
where
    B: Clone + Ord + std::fmt::Debug + Display,
    F: Fn(&B) -> String,
{
    let rows = ring
        .basis()
        .iter()
        .map(|b| (b.to_string(), vec![component(b), ring.basis_degree(b).to_string()]))
        .collect();
    table_document(
        Kind::DegTable,
        w,
        Table {
            title: format!("deg table, {} ring, w = {w}", ring.name()),
            ring: Some(ring.name()),
            corner: "basis".into(),
            columns: vec!["component".into(), "degree".into()],
            rows,
        },
    )
}

fn mult_table<B>(w: &Weights, ring: &dyn GradedRing<Basis = B>) -> OutputDocument
where
    B: Clone + Ord + std::fmt::Debug + Display,
{
    let basis = ring.basis();
    let rows = basis
        .iter()
        .map(|x| {
            let cells = basis.iter().map(|y| ring.basis_cup(x, y).to_string()).collect();
            (x.to_string(), cells)
        })
        .collect();
    table_document(
        Kind::MultTable,
        w,
        Table {
            title: format!("mult table, {} ring, w = {w}", ring.name()),
            ring: Some(ring.name()),
            corner: String::new(),
            columns: labels(basis),
            rows,
        },
    )
}

fn pairing_matrix<B>(w: &Weights, ring: &dyn GradedRing<Basis = B>) -> OutputDocument
where
    B: Clone + Ord + std::fmt::Debug + Display,
{
    let basis = ring.basis();
    let rows = basis
        .iter()
        .map(|x| {
            let cells = basis.iter().map(|y| ring.basis_pairing(x, y).to_string()).collect();
            (x.to_string(), cells)
        })
        .collect();
    table_document(
        Kind::PairingMatrix,
        w,
        Table {
            title: format!("pairing matrix, {} ring, w = {w}", ring.name()),
            ring: Some(ring.name()),
            corner: String::new(),
            columns: labels(basis),
            rows,
        },
    )
}

fn xi_table(w: &Weights, chow: &DynChowRing) -> Result<OutputDocument, Failure> {
    let xi = XiMap::new(w);
    let mut rows = Vec::new();
    for b in chow.basis() {
        let image = xi.image(b)?;
        rows.push((b.to_string(), vec![image.to_string(), chow.basis_degree(b).to_string()]));
    }
    Ok(table_document(
        Kind::XiTable,
        w,
        Table {
            title: format!("xi table, w = {w}"),
            ring: None,
            corner: "basis".into(),
            columns: vec!["xi".into(), "degree".into()],
            rows,
        },
    ))
}

fn poincare_document(w: &Weights) -> OutputDocument {
    let model = ModelRing::new(w.clone());
    let rows = model
        .poincare_polynomial()
        .into_iter()
        .map(|(degree, mult)| (degree.to_string(), vec![mult.to_string()]))
        .collect();
    table_document(
        Kind::Poincare,
        w,
        Table {
            title: format!("poincare, w = {w}"),
            ring: None,
            corner: "degree".into(),
            columns: vec!["multiplicity".into()],
            rows,
        },
    )
}

fn info_document(w: &Weights) -> OutputDocument {
    let chow = ChowRing::new(w.clone());
    let xi = XiMap::new(w);
    let basis = chow
        .basis()
        .iter()
        .map(|b| BasisLine {
            eta: b.to_string(),
            xi: xi
                .apply(&Element::basis(*b))
                .map(|z| z.to_string())
                .unwrap_or_default(),
            degree: chow.basis_degree(b).to_string(),
        })
        .collect();
    OutputDocument {
        kind: Kind::Info,
        weights: Some(w.entries().to_vec()),
        payload: Payload::Info(Info {
            n: w.n(),
            total: w.total(),
            product: w.product(),
            gorenstein: w.is_gorenstein(),
            basis,
        }),
    }
}

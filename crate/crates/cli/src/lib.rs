//! Command-line front end: character tables, single values, `φ` images,
//! verification sweeps and degree tables.

use std::fmt::Display;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use mayachar::brauer::{brauer_char, walled_char, BrauerLabel, WalledLabel};
use mayachar::fock::{self, character_of, degree_via_f, degree_via_g};
use mayachar::gamma::psi_tilde;
use mayachar::partition::{odd_partitions, partitions, strict_partitions};
use mayachar::verify::{self, Theorem};
use mayachar::{FockVector, Partition};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mayachar::Error),
    #[error("output failed: {0}")]
    Io(#[from] io::Error),
    #[error("output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("output failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    /// Symmetric groups.
    Sym,
    /// Projective characters of the double covers, normalized (ψ̃).
    Spin,
    /// Brauer algebras.
    Brauer,
    /// Walled Brauer algebras.
    Walled,
}

#[derive(Debug, Parser)]
#[command(
    name = "mayachar",
    version,
    about = "Exact characters via maya diagrams"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full character table.
    CharTable {
        #[arg(long, value_enum)]
        group: Group,
        /// Size (symmetric, spin and Brauer tables).
        #[arg(long)]
        n: Option<u32>,
        /// Strands left of the wall (walled tables).
        #[arg(long)]
        r: Option<u32>,
        /// Strands right of the wall (walled tables).
        #[arg(long)]
        s: Option<u32>,
    },
    /// A single character value.
    Char {
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        /// Right-hand label (walled only).
        #[arg(long)]
        kappa: Option<Partition>,
        /// Right-hand cycle type (walled only).
        #[arg(long)]
        nu: Option<Partition>,
    },
    /// Image of a partition under φ_k^(m).
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        lambda: Partition,
    },
    /// Exhaustive check of one of the character relations.
    Verify {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        max_size: u32,
    },
    /// Degrees of the irreducible characters of S_n, computed three ways.
    Degrees {
        #[arg(long)]
        n: u32,
    },
}

/// A labelled matrix of exact values, all written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub kind: String,
    pub size: String,
    pub version: String,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub values: Vec<Vec<String>>,
}

impl TableReport {
    fn new(
        kind: &str,
        size: String,
        rows: Vec<String>,
        columns: Vec<String>,
        values: Vec<Vec<String>>,
    ) -> Self {
        TableReport {
            kind: kind.to_string(),
            size,
            version: env!("CARGO_PKG_VERSION").to_string(),
            rows,
            columns,
            values,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub max_size: u32,
    pub cases: usize,
    pub counterexamples: Vec<CounterexampleReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiTerm {
    pub partition: String,
    pub coefficient: String,
}

/// Accepts `4,2,2`, `(4,2,2)` and `4^2 3 1^3`; the empty partition is `∅`, `()` or empty.
pub fn parse_partition(text: &str) -> Result<Partition, mayachar::Error> {
    text.parse()
}

fn strings<T: Display>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn table<R, C, V>(
    rows: &[R],
    cols: &[C],
    cell: impl Fn(&R, &C) -> mayachar::Result<V> + Sync,
) -> Result<Vec<Vec<String>>, CliError>
where
    R: Sync,
    C: Sync,
    V: Display,
{
    let out: mayachar::Result<Vec<Vec<String>>> = rows
        .par_iter()
        .map(|r| {
            cols.iter()
                .map(|c| cell(r, c).map(|v| v.to_string()))
                .collect()
        })
        .collect();
    Ok(out?)
}

pub fn symmetric_report(n: u32) -> Result<TableReport, CliError> {
    let labels = partitions(n);
    let values = table(&labels, &labels, character_of)?;
    Ok(TableReport::new(
        "sym",
        n.to_string(),
        strings(&labels),
        strings(&labels),
        values,
    ))
}

pub fn spin_report(n: u32) -> Result<TableReport, CliError> {
    let rows = strict_partitions(n);
    let cols = odd_partitions(n);
    let values = table(&rows, &cols, psi_tilde)?;
    Ok(TableReport::new(
        "spin",
        n.to_string(),
        strings(&rows),
        strings(&cols),
        values,
    ))
}

pub fn brauer_report(n: u32) -> Result<TableReport, CliError> {
    let rows: Vec<BrauerLabel> = (0..=n / 2)
        .flat_map(|i| partitions(n - 2 * i))
        .map(|lam| BrauerLabel::new(n, lam))
        .collect::<mayachar::Result<_>>()?;
    let cols = partitions(n);
    let values = table(&rows, &cols, brauer_char)?;
    let row_labels = rows.iter().map(|l| l.lambda().to_string()).collect();
    Ok(TableReport::new(
        "brauer",
        n.to_string(),
        row_labels,
        strings(&cols),
        values,
    ))
}

pub fn walled_report(r: u32, s: u32) -> Result<TableReport, CliError> {
    let mut rows = Vec::new();
    for i in 0..=r.min(s) {
        for lam in partitions(r - i) {
            for kappa in partitions(s - i) {
                rows.push(WalledLabel::new(r, s, lam.clone(), kappa)?);
            }
        }
    }
    let cols: Vec<(Partition, Partition)> = partitions(r)
        .into_iter()
        .flat_map(|mu| partitions(s).into_iter().map(move |nu| (mu.clone(), nu)))
        .collect();
    let values = table(&rows, &cols, |label, (mu, nu)| walled_char(label, mu, nu))?;
    let row_labels = rows
        .iter()
        .map(|l| format!("{};{}", l.lambda(), l.kappa()))
        .collect();
    let col_labels = cols.iter().map(|(mu, nu)| format!("{mu};{nu}")).collect();
    Ok(TableReport::new(
        "walled",
        format!("{r},{s}"),
        row_labels,
        col_labels,
        values,
    ))
}

pub fn degrees_report(n: u32) -> Result<TableReport, CliError> {
    let rows = partitions(n);
    let ones = Partition::new(vec![1; n as usize])?;
    let values: mayachar::Result<Vec<Vec<String>>> = rows
        .par_iter()
        .map(|lam| {
            Ok(vec![
                degree_via_f(lam).to_string(),
                degree_via_g(lam).to_string(),
                character_of(lam, &ones)?.to_string(),
            ])
        })
        .collect();
    let columns = vec!["f".to_string(), "g".to_string(), "character".to_string()];
    Ok(TableReport::new(
        "degrees",
        n.to_string(),
        strings(&rows),
        columns,
        values?,
    ))
}

/// Writes a table as JSON, CSV (header row, labels quoted) or aligned text.
pub fn format_table(
    report: &TableReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .quote_style(csv::QuoteStyle::Always)
                .from_writer(out);
            let mut header = vec![String::new()];
            header.extend(report.columns.iter().cloned());
            w.write_record(&header)?;
            for (label, row) in report.rows.iter().zip(&report.values) {
                let mut record = vec![label.clone()];
                record.extend(row.iter().cloned());
                w.write_record(&record)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut grid = vec![std::iter::once(String::new())
                .chain(report.columns.iter().cloned())
                .collect::<Vec<_>>()];
            for (label, row) in report.rows.iter().zip(&report.values) {
                grid.push(
                    std::iter::once(label.clone())
                        .chain(row.iter().cloned())
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..grid[0].len())
                .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
                .collect();
            for row in &grid {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .enumerate()
                    .map(|(j, (cell, &w))| {
                        let pad = " ".repeat(w - cell.chars().count());
                        if j == 0 {
                            format!("{cell}{pad}")
                        } else {
                            format!("{pad}{cell}")
                        }
                    })
                    .collect();
                writeln!(out, "{}", cells.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}

fn write_value(value: &str, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::json!({ "value": value }))?,
        Format::Csv => writeln!(out, "value\n{value}")?,
        Format::Text => writeln!(out, "{value}")?,
    }
    Ok(())
}

fn char_value(
    group: Group,
    lambda: &Partition,
    mu: &Partition,
    kappa: Option<&Partition>,
    nu: Option<&Partition>,
) -> Result<String, CliError> {
    if group != Group::Walled && (kappa.is_some() || nu.is_some()) {
        return Err(CliError::Usage(
            "--kappa and --nu are only used with --group walled".into(),
        ));
    }
    Ok(match group {
        Group::Sym => {
            if lambda.size() != mu.size() {
                return Err(CliError::Usage(format!("|{lambda}| and |{mu}| differ")));
            }
            character_of(lambda, mu)?.to_string()
        }
        Group::Spin => psi_tilde(lambda, mu)?.to_string(),
        Group::Brauer => {
            brauer_char(&BrauerLabel::new(mu.size(), lambda.clone())?, mu)?.to_string()
        }
        Group::Walled => {
            let (Some(kappa), Some(nu)) = (kappa, nu) else {
                return Err(CliError::Usage(
                    "--group walled needs --kappa and --nu".into(),
                ));
            };
            let label = WalledLabel::new(mu.size(), nu.size(), lambda.clone(), kappa.clone())?;
            walled_char(&label, mu, nu)?.to_string()
        }
    })
}

fn write_phi(image: &FockVector, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let terms: Vec<PhiTerm> = image
        .partition_terms()
        .unwrap_or_default()
        .into_iter()
        .map(|(p, c)| PhiTerm {
            partition: p.to_string(),
            coefficient: c.to_string(),
        })
        .collect();
    match format {
        Format::Text => writeln!(out, "{image}")?,
        Format::Json => {
            serde_json::to_writer(&mut *out, &terms)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .quote_style(csv::QuoteStyle::Always)
                .from_writer(out);
            for t in &terms {
                w.serialize(t)?;
            }
            if terms.is_empty() {
                w.write_record(["partition", "coefficient"])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn write_verify(
    report: &VerifyReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["case", "detail"])?;
            for c in &report.counterexamples {
                w.write_record([&c.case, &c.detail])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "{}: {} cases up to size {}, {} counterexamples",
                report.theorem,
                report.cases,
                report.max_size,
                report.counterexamples.len()
            )?;
            for c in &report.counterexamples {
                writeln!(out, "counterexample {}: {}", c.case, c.detail)?;
            }
        }
    }
    Ok(())
}

/// Runs one command and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::CharTable { group, n, r, s } => {
            let report = match (group, n, r, s) {
                (Group::Walled, None, Some(r), Some(s)) => walled_report(*r, *s)?,
                (Group::Walled, _, _, _) => {
                    return Err(CliError::Usage(
                        "walled tables take --r and --s instead of --n".into(),
                    ))
                }
                (_, Some(n), None, None) => match group {
                    Group::Sym => symmetric_report(*n)?,
                    Group::Spin => spin_report(*n)?,
                    Group::Brauer => brauer_report(*n)?,
                    Group::Walled => unreachable!(),
                },
                _ => {
                    return Err(CliError::Usage(
                        format!("--group {group:?} takes --n only").to_lowercase(),
                    ))
                }
            };
            format_table(&report, format, out)?;
        }
        Command::Char {
            group,
            lambda,
            mu,
            kappa,
            nu,
        } => {
            let value = char_value(*group, lambda, mu, kappa.as_ref(), nu.as_ref())?;
            write_value(&value, format, out)?;
        }
        Command::Phi { m, k, lambda } => {
            let image = fock::phi(*m, *k, &FockVector::from_partition(lambda))?;
            write_phi(&image, format, out)?;
        }
        Command::Verify { theorem, max_size } => {
            let sweep = verify::sweep(*theorem, *max_size)?;
            let report = VerifyReport {
                theorem: sweep.theorem.to_string(),
                max_size: sweep.max_size,
                cases: sweep.cases,
                counterexamples: sweep
                    .counterexamples
                    .iter()
                    .map(|c| CounterexampleReport {
                        case: c.case.clone(),
                        detail: c.detail.clone(),
                    })
                    .collect(),
            };
            write_verify(&report, format, out)?;
            if !sweep.passed() {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
        Command::Degrees { n } => {
            let report = degrees_report(*n)?;
            let consistent = report.values.iter().all(|r| r[0] == r[1] && r[1] == r[2]);
            format_table(&report, format, out)?;
            if !consistent {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
    }
    Ok(EXIT_OK)
}

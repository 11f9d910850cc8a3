use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use uc_spectra::json_int::JsonInt;
use uc_spectra::oracle::Limits;
use uc_spectra::ring::{enumerate_specs, parse_ring_expr_with};
use uc_spectra::verify::{self, Bounds, Oracle, Report};
use uc_spectra::Error;
use uc_spectra_cli::{enumerate_row, moduli, ReportDoc, ENUMERATE_HEADER};

#[derive(Parser)]
#[command(
    name = "uc-spectra",
    version,
    about = "Spectra, Ramanujan verdicts and energies of unitary Cayley graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (default: json for report, csv for enumerate).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Accept descriptors that are not realized by any ring.
    #[arg(long, global = true)]
    lax: bool,
    /// Cross-check against brute-force graph construction.
    #[arg(long, global = true)]
    oracle: bool,
    /// Largest ring order considered.
    #[arg(long, global = true)]
    max_order: Option<u64>,
    /// Accepted for scripts; every computation is deterministic.
    #[arg(long, global = true)]
    seed_free: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Everything about one ring, e.g. `report "Z/4 x GF(9)"`.
    Report {
        ring: String,
        /// Report spectral moments s_1..s_K.
        #[arg(long, default_value_t = 4)]
        moments: u32,
    },
    /// One CSV row per ring up to a given order.
    Enumerate {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Only the rings Z/n.
        #[arg(long)]
        zn_only: bool,
    },
    /// Check closed forms against the oracle and the published lists.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest modulus for the zn suite.
        #[arg(long)]
        max: Option<u64>,
        /// Largest ring order built by the oracle (where the suite has a
        /// separate closed-form bound).
        #[arg(long)]
        oracle_max_order: Option<u64>,
        /// Highest moment compared by the moments suite.
        #[arg(long, default_value_t = 8)]
        moments: u32,
        /// Treat disagreements with the hyperenergetic characterization as failures.
        #[arg(long)]
        strict_paper: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Ramanujan,
    ComplementRamanujan,
    Hyperenergetic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Spectra,
    Moments,
    Ramanujan,
    Energy,
    Cycles,
    Zn,
    All,
}

enum Failure {
    Input(anyhow::Error),
    Mismatch(String),
    Internal(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::NotIntegral(_) => Failure::Internal(e.into()),
            _ => Failure::Input(e.into()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report { ring, moments } => report(&cli, ring, *moments),
        Command::Enumerate {
            max,
            filter,
            zn_only,
        } => enumerate(&cli, *max, *filter, *zn_only),
        Command::Verify {
            suite,
            max,
            oracle_max_order,
            moments,
            strict_paper,
        } => run_verify(
            &cli,
            *suite,
            *max,
            *oracle_max_order,
            *moments,
            *strict_paper,
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(message)) => {
            eprintln!("mismatch: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn report(cli: &Cli, ring: &str, moments: u32) -> Result<(), Failure> {
    let spec = parse_ring_expr_with(ring, !cli.lax)?;
    let mut doc = ReportDoc::build(&spec, moments)?;
    if cli.oracle {
        doc.attach_oracle(&spec, &mut Oracle::new(Limits::default()))?;
    }
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            serde_json::to_string_pretty(&doc).map_err(|e| Failure::Internal(e.into()))? + "\n"
        }
        Format::Table => doc.to_table(),
        Format::Csv => doc.to_csv(),
    };
    io::stdout().write_all(text.as_bytes())?;
    match doc.mismatches() {
        [] => Ok(()),
        m => Err(Failure::Mismatch(m.join("; "))),
    }
}

fn enumerate(cli: &Cli, max: u64, filter: Filter, zn_only: bool) -> Result<(), Failure> {
    if max < 2 {
        return Err(Failure::Input(anyhow::anyhow!("--max must be at least 2")));
    }
    let max = cli.max_order.map_or(max, |m| m.min(max));
    let specs = if zn_only {
        moduli(max)?
    } else {
        enumerate_specs(max, !cli.lax)
    };
    let format = cli.format.unwrap_or(Format::Csv);
    let mut out = io::BufWriter::new(io::stdout().lock());
    let mut rows = Vec::new();
    if format == Format::Csv {
        writeln!(out, "{ENUMERATE_HEADER}")?;
    }
    for spec in &specs {
        let (unitary, complement, energy) = enumerate_row(spec);
        let keep = match filter {
            Filter::All => true,
            Filter::Ramanujan => unitary,
            Filter::ComplementRamanujan => complement,
            Filter::Hyperenergetic => energy.hyperenergetic_direct,
        };
        if !keep {
            continue;
        }
        match format {
            Format::Csv => writeln!(
                out,
                "{},{},{},{unitary},{complement},{},{}",
                spec,
                spec.order(),
                spec.unit_count(),
                energy.energy,
                energy.hyperenergetic_direct
            )?,
            Format::Table => writeln!(
                out,
                "{:<40} {:>8} {:>8} {:<5} {:<5} {:>10} {}",
                spec.to_string(),
                spec.order(),
                spec.unit_count(),
                unitary,
                complement,
                energy.energy,
                energy.hyperenergetic_direct
            )?,
            Format::Json => rows.push(serde_json::json!({
                "ring": spec.to_string(),
                "order": number(spec.order()),
                "unit_count": number(spec.unit_count()),
                "ramanujan": unitary,
                "complement_ramanujan": complement,
                "line_energy": number(&energy.energy),
                "hyperenergetic": energy.hyperenergetic_direct,
            })),
        }
    }
    if format == Format::Json {
        serde_json::to_writer_pretty(&mut out, &rows).map_err(|e| Failure::Internal(e.into()))?;
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

fn number(v: &num_bigint::BigInt) -> serde_json::Value {
    serde_json::to_value(JsonInt(v.clone())).expect("integers serialize")
}

fn run_verify(
    cli: &Cli,
    suite: Suite,
    max: Option<u64>,
    oracle_max_order: Option<u64>,
    kmax: u32,
    strict_paper: bool,
) -> Result<(), Failure> {
    let mut oracle = Oracle::new(Limits::default());
    let order = |default: u64| cli.max_order.unwrap_or(default);
    // closed-form bound and oracle bound; the oracle bound only applies with --oracle
    let with_oracle = |closed: u64, default: u64| {
        if cli.oracle {
            oracle_max_order.unwrap_or(default).min(closed)
        } else {
            0
        }
    };
    let reports: Vec<Report> = match suite {
        Suite::Spectra => vec![verify::spectra(&mut oracle, order(64))],
        Suite::Moments => vec![verify::moments(&mut oracle, order(64), kmax)],
        Suite::Cycles => vec![verify::cycles(&mut oracle, order(40))],
        Suite::Zn => vec![verify::zn(max.unwrap_or(2000))],
        Suite::Ramanujan => {
            let m = order(5000);
            vec![verify::ramanujan(&mut oracle, m, with_oracle(m, 64))]
        }
        Suite::Energy => {
            let m = order(200);
            vec![verify::energy(&mut oracle, m, with_oracle(m, 40))]
        }
        Suite::All => {
            let defaults = Bounds::default();
            let cap = |v: u64| cli.max_order.map_or(v, |m| v.min(m));
            let bounds = Bounds {
                oracle_max_order: cap(oracle_max_order.unwrap_or(defaults.oracle_max_order)),
                ramanujan_max_order: cap(defaults.ramanujan_max_order),
                energy_max_order: cap(defaults.energy_max_order),
                energy_oracle_max_order: cap(defaults.energy_oracle_max_order),
                max_modulus: max.unwrap_or(defaults.max_modulus),
                max_moment: kmax,
            };
            verify::all(&mut oracle, &bounds)
        }
    };
    let mut out = io::stdout().lock();
    for report in &reports {
        write!(out, "{report}")?;
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed(strict_paper))
        .map(|r| r.suite.as_str())
        .collect();
    if failed.is_empty() {
        return Ok(());
    }
    if reports.iter().any(|r| r.internal_errors > 0) {
        Err(Failure::Internal(anyhow::anyhow!(
            "internal error in suite {}",
            failed.join(", ")
        )))
    } else {
        Err(Failure::Mismatch(format!(
            "suite {} failed",
            failed.join(", ")
        )))
    }
}

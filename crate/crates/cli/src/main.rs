//! Command-line front end: correction-term tables, Dedekind sums,
//! verification sweeps, vanishing searches, and surgery invariants,
//! emitted as CSV or JSON records.
//!
//! Exit codes: 0 success or all checks verified, 1 a verification found
//! a counterexample, 2 usage or validation error. Records go to the
//! output stream (or --output file); progress goes to the error stream.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lensd::invariants::{self, AlexanderPolynomial};
use lensd::{LensSpace, SweepReport, dedekind, sweeps};

#[derive(Parser)]
#[command(
    name = "lensd",
    version,
    about = "Exact correction terms, Dedekind sums, and verification sweeps for lens spaces"
)]
struct Cli {
    /// Output format for record-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write results to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the correction-term table of L(p,q), one record per label.
    ///
    /// A negative p denotes the orientation reversal of L(|p|,q): the
    /// table is negated entrywise at the same labels.
    #[command(name = "d-table")]
    DTable {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },

    /// Print one Dedekind sum s(q,p), Dedekind-Rademacher sum s(q,p;n),
    /// or sawtooth variant sigma(q,p;n). Arguments in sum order: q p.
    Sums {
        #[arg(long, value_enum)]
        kind: SumKind,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        p: i64,
        /// Shift n for the rademacher and sigma kinds (default 0).
        #[arg(long, allow_negative_numbers = true)]
        shift: Option<i64>,
    },

    /// Run an exhaustive verification sweep and report each suite's
    /// check count and first counterexample, if any.
    Verify {
        suite: Suite,
        /// Largest order swept; for corollary3 the bound applies to the
        /// square orders themselves.
        #[arg(long, default_value_t = 60, allow_negative_numbers = true)]
        p_max: i64,
        /// Seed for the sampled sawtooth averaging identity inside the
        /// reciprocity suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// List every vanishing correction term over a range of orders, one
    /// record per vanishing label; per-pair counts go to the error
    /// stream.
    SearchVanishing {
        #[arg(long, allow_negative_numbers = true)]
        p_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        p_max: i64,
        /// Restrict to square orders m^2 and check the vanishing count
        /// never exceeds m; a violation exits 1.
        #[arg(long)]
        square_only: bool,
    },

    /// Correction terms and Casson-Walker invariant of p/q-surgery on a
    /// knot with the given Alexander polynomial.
    Surgery {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        /// Symmetric coefficients a_0,a_1,...,a_g (constant term first).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        alex: Vec<i64>,
        /// Single label to evaluate; omitting it prints the full table.
        /// Reduced mod p for the lens-space term; |n|/q indexes the
        /// torsion coefficient.
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SumKind {
    Dedekind,
    Rademacher,
    Sigma,
}

impl SumKind {
    fn kind_str(self) -> &'static str {
        match self {
            SumKind::Dedekind => "dedekind",
            SumKind::Rademacher => "rademacher",
            SumKind::Sigma => "sigma",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Correction-term reciprocity plus the full sum-law suite.
    Reciprocity,
    /// The three correction-term algorithms agree on every label.
    Agreement,
    /// The table average equals the Casson-Walker invariant.
    Average,
    /// 2p*d and 6p*s(q,p) are integers.
    Integrality,
    /// Divisibility obstructions for equal or opposite d-values.
    Theorem2,
    /// Injectivity on conjugation classes at prime orders.
    Corollary2,
    /// Vanishing-count bound at square orders.
    Corollary3,
    /// Every suite above, in order.
    All,
}

impl Suite {
    fn atoms(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Reciprocity,
                Suite::Agreement,
                Suite::Average,
                Suite::Integrality,
                Suite::Theorem2,
                Suite::Corollary2,
                Suite::Corollary3,
            ],
            other => vec![other],
        }
    }

    fn label(self) -> &'static str {
        match self {
            Suite::Reciprocity => "reciprocity",
            Suite::Agreement => "agreement",
            Suite::Average => "average",
            Suite::Integrality => "integrality",
            Suite::Theorem2 => "theorem2",
            Suite::Corollary2 => "corollary2",
            Suite::Corollary3 => "corollary3",
            Suite::All => "all",
        }
    }

    fn reports(self, p_max: i64, seed: u64) -> Vec<SweepReport> {
        match self {
            Suite::Reciprocity => vec![
                sweeps::d_reciprocity(p_max),
                sweeps::sum_laws(p_max, seed),
            ],
            Suite::Agreement => vec![sweeps::agreement(p_max)],
            Suite::Average => vec![sweeps::average(p_max)],
            Suite::Integrality => vec![sweeps::integrality(p_max)],
            Suite::Theorem2 => vec![sweeps::divisibility_obstructions(p_max)],
            Suite::Corollary2 => vec![sweeps::prime_injectivity(p_max)],
            Suite::Corollary3 => vec![sweeps::square_order_vanishing(p_max)],
            Suite::All => unreachable!("expanded by atoms"),
        }
    }
}

#[derive(Serialize)]
struct OutputRecord {
    p: i64,
    q: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    value: String,
    kind: &'static str,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let out = cli.output.as_ref();
    match cli.command {
        Command::DTable { p, q } => {
            emit(&d_table_records(p, q)?, cli.format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sums { kind, q, p, shift } => {
            emit(&[sums_record(kind, q, p, shift)?], cli.format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, p_max, seed } => run_verify(suite, p_max, seed, out),
        Command::SearchVanishing {
            p_min,
            p_max,
            square_only,
        } => {
            let (records, bound_ok) = search_vanishing(p_min, p_max, square_only)?;
            emit(&records, cli.format, out)?;
            Ok(if bound_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Surgery { p, q, alex, n } => {
            emit(&surgery_records(p, q, &alex, n)?, cli.format, out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn d_table_records(p: i64, q: i64) -> Result<Vec<OutputRecord>, String> {
    let lens = LensSpace::new(p, q).map_err(|e| e.to_string())?;
    Ok(lens
        .d_table()
        .values()
        .iter()
        .enumerate()
        .map(|(n, v)| OutputRecord {
            p,
            q,
            n: Some(n as i64),
            value: v.to_string(),
            kind: "d",
        })
        .collect())
}

fn sums_record(kind: SumKind, q: i64, p: i64, shift: Option<i64>) -> Result<OutputRecord, String> {
    let (n, value) = match kind {
        SumKind::Dedekind => {
            if shift.is_some() {
                return Err("the dedekind sum takes no --shift".to_string());
            }
            (None, dedekind::dedekind_sum(q, p).map_err(|e| e.to_string())?)
        }
        SumKind::Rademacher => {
            let n = shift.unwrap_or(0);
            (
                Some(n),
                dedekind::rademacher_sum(q, p, n).map_err(|e| e.to_string())?,
            )
        }
        SumKind::Sigma => {
            let n = shift.unwrap_or(0);
            (
                Some(n),
                dedekind::sigma_sum(q, p, n).map_err(|e| e.to_string())?,
            )
        }
    };
    Ok(OutputRecord {
        p,
        q,
        n,
        value: value.to_string(),
        kind: kind.kind_str(),
    })
}

fn run_verify(
    suite: Suite,
    p_max: i64,
    seed: u64,
    output: Option<&PathBuf>,
) -> Result<ExitCode, String> {
    if p_max < 2 {
        return Err(format!("p-max must be at least 2 (got {p_max})"));
    }
    let mut lines = String::new();
    let mut all_passed = true;
    for atom in suite.atoms() {
        eprintln!("running {} up to p-max {p_max}", atom.label());
        for report in atom.reports(p_max, seed) {
            match &report.first_violation {
                None => {
                    lines.push_str(&format!("{}: ok, checked {}\n", report.name, report.checked));
                }
                Some(v) => {
                    all_passed = false;
                    lines.push_str(&format!(
                        "{}: violation after {} checks: {v}\n",
                        report.name, report.checked
                    ));
                }
            }
        }
    }
    write_out(&lines, output)?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn search_vanishing(
    p_min: i64,
    p_max: i64,
    square_only: bool,
) -> Result<(Vec<OutputRecord>, bool), String> {
    if p_min < 2 || p_min > p_max {
        return Err(format!(
            "range must satisfy 2 <= p-min <= p-max (got p-min {p_min}, p-max {p_max})"
        ));
    }
    let orders: Vec<(i64, Option<i64>)> = if square_only {
        (2i64..)
            .take_while(|m| m * m <= p_max)
            .filter(|m| m * m >= p_min)
            .map(|m| (m * m, Some(m)))
            .collect()
    } else {
        (p_min..=p_max).map(|p| (p, None)).collect()
    };
    let mut records = Vec::new();
    let mut bound_ok = true;
    for (p, root) in orders {
        for q in 1..p {
            let Ok(lens) = LensSpace::new(p, q) else {
                continue;
            };
            let zeros = lens.d_table().vanishing();
            eprintln!("L({p},{q}): {} vanishing label(s)", zeros.len());
            if let Some(m) = root
                && zeros.len() > m as usize
            {
                bound_ok = false;
                eprintln!("L({p},{q}): vanishing bound {m} exceeded");
            }
            records.extend(zeros.into_iter().map(|s| OutputRecord {
                p,
                q,
                n: Some(s.index()),
                value: "0/1".to_string(),
                kind: "d",
            }));
        }
    }
    Ok((records, bound_ok))
}

fn surgery_records(
    p: i64,
    q: i64,
    alex: &[i64],
    n: Option<i64>,
) -> Result<Vec<OutputRecord>, String> {
    let poly = AlexanderPolynomial::new(alex.to_vec()).map_err(|e| e.to_string())?;
    invariants::surgery_lens(p, q).map_err(|e| e.to_string())?;
    let labels: Vec<i64> = match n {
        Some(n) => vec![n],
        None => (0..p).collect(),
    };
    let mut records = Vec::new();
    for label in labels {
        let value = invariants::d_surgery(p, q, label, &poly).map_err(|e| e.to_string())?;
        records.push(OutputRecord {
            p,
            q,
            n: Some(label),
            value: value.to_string(),
            kind: "d_surgery",
        });
    }
    let lambda = invariants::casson_walker_surgery(p, q, &poly).map_err(|e| e.to_string())?;
    records.push(OutputRecord {
        p,
        q,
        n: None,
        value: lambda.to_string(),
        kind: "casson_walker",
    });
    Ok(records)
}

fn emit(records: &[OutputRecord], format: Format, output: Option<&PathBuf>) -> Result<(), String> {
    let body = match format {
        Format::Csv => to_csv(records),
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(records).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
    };
    write_out(&body, output)
}

fn to_csv(records: &[OutputRecord]) -> String {
    let mut out = String::from("p,q,n,value,kind\n");
    for r in records {
        let n = r.n.map_or(String::new(), |v| v.to_string());
        out.push_str(&format!("{},{},{},{},{}\n", r.p, r.q, n, r.value, r.kind));
    }
    out
}

fn write_out(body: &str, output: Option<&PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, body)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

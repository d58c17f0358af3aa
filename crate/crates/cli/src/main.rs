use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ulrich_cli::descriptor::parse_input;
use ulrich_cli::report::big_json;
use ulrich_cli::{render, run_batch, Catalogue, Error, Options, Report};
use ulrich_core::chi;
use ulrich_core::cohomology::{self, SplittingType};
use ulrich_core::BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "ulrich", version, about = "Ulrich complexity and representability dimension reports")]
struct Cli {
    /// Catalogue of imported values (falls back to $ULRICH_CATALOG).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Take rdim = ind - 1 when period equals index.
    #[arg(long, global = true)]
    assume_period_index_conjecture: bool,
    /// Take rdim = 1 for twisted ribbons.
    #[arg(long, global = true)]
    assume_ribbon_rdim: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for a descriptor file (a single object or an array).
    Report { file: PathBuf },
    /// Only the uc bounds.
    Bounds { file: PathBuf },
    /// Only the representability dimension.
    Rdim { file: PathBuf },
    /// Euler characteristic of a rank `rank` Ulrich bundle on (P^n, O(pd)), twisted by l.
    Chi {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        pd: u64,
        #[arg(long)]
        rank: u64,
        #[arg(long, allow_hyphen_values = true)]
        l: Option<i64>,
    },
    /// The value uc must take for uc = rdim + 1, given a witness.
    Criterion {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        chi: u64,
        #[arg(long)]
        rank: u64,
    },
    /// Check whether a direct sum of line bundles is Ulrich for (P^n, O(pd)).
    VerifyUlrich {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        pd: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        twists: Vec<i64>,
    },
    /// Catalogue maintenance.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// Load and check every record.
    Validate,
}

#[derive(Clone, Copy)]
enum View {
    Full,
    Bounds,
    Rdim,
}

fn project(report: &Report, view: View) -> Value {
    let full = serde_json::to_value(report).expect("reports always serialize");
    match view {
        View::Full => full,
        View::Bounds => json!({ "input": full["input"], "uc": full["uc"], "diagnostics": full["diagnostics"] }),
        View::Rdim => json!({
            "input": full["input"],
            "rdim": full["rdim"],
            "conjectures_used": full["conjectures_used"],
        }),
    }
}

fn render_one(report: &Report, view: View, format: Format) -> String {
    match (format, view) {
        (Format::Json, View::Full) => render::to_json(report),
        (Format::Json, _) => serde_json::to_string_pretty(&project(report, view)).expect("json"),
        (Format::Text, View::Full) => render::to_text(report),
        (Format::Text, _) => {
            let text = render::to_text(report);
            let keep: &[&str] = match view {
                View::Bounds => &["input:", "uc", "diagnostic:"],
                _ => &["input:", "rdim", "CONJECTURES"],
            };
            // provenance lines follow their section header; keep only those under a kept header
            let mut out = String::new();
            let mut keeping = false;
            for line in text.lines() {
                if line.starts_with("    [") {
                    if keeping {
                        out.push_str(line);
                        out.push('\n');
                    }
                    continue;
                }
                keeping = keep.iter().any(|k| line.starts_with(k));
                if keeping {
                    out.push_str(line);
                    out.push('\n');
                }
            }
            out
        }
    }
}

fn run_file(cli: &Cli, file: &PathBuf, view: View) -> Result<String, Error> {
    let catalogue = Catalogue::resolve(cli.catalog.as_deref())?;
    let text = std::fs::read_to_string(file).map_err(|e| Error::Io {
        path: file.clone(),
        source: e,
    })?;
    let is_batch = text.trim_start().starts_with('[');
    let items = parse_input(&text)?;
    let opts = Options {
        assume_period_index_conjecture: cli.assume_period_index_conjecture,
        assume_ribbon_rdim: cli.assume_ribbon_rdim,
    };
    let mut results = run_batch(items, &opts, catalogue.as_ref());
    if !is_batch {
        let report = results.pop().expect("one item")?;
        return Ok(render_one(&report, view, cli.format));
    }
    if let Some(pos) = results.iter().position(Result::is_err) {
        let err = results.swap_remove(pos).unwrap_err();
        return Err(match err {
            Error::Validation(m) => Error::Validation(format!("item {pos}: {m}")),
            other => other,
        });
    }
    let reports: Vec<Report> = results.into_iter().map(|r| r.expect("checked")).collect();
    Ok(match cli.format {
        Format::Json => {
            let values: Vec<Value> = reports.iter().map(|r| project(r, view)).collect();
            serde_json::to_string_pretty(&values).expect("json")
        }
        Format::Text => reports
            .iter()
            .map(|r| render_one(r, view, Format::Text))
            .collect::<Vec<_>>()
            .join("---\n"),
    })
}

fn emit(format: Format, value: Value, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json"),
        Format::Text => text,
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let invalid = |m: &str| Error::Validation(m.to_string());
    match &cli.command {
        Command::Report { file } => run_file(cli, file, View::Full),
        Command::Bounds { file } => run_file(cli, file, View::Bounds),
        Command::Rdim { file } => run_file(cli, file, View::Rdim),
        Command::Chi { n, pd, rank, l } => {
            if *n == 0 || *pd == 0 || *rank == 0 {
                return Err(invalid("n, pd and rank must be at least 1"));
            }
            let l = l.unwrap_or(0);
            let v = cohomology::ulrich_chi_formula(*n, *pd, *rank, l);
            let base = chi::chi_ulrich_bs(*n, *pd, &BigUint::from(*rank));
            Ok(emit(
                cli.format,
                json!({ "n": n, "pd": pd, "rank": rank, "l": l, "chi": v.to_string(), "chi_at_zero": big_json(&base) }),
                format!("chi = {v} (at l = 0: {base})\n"),
            ))
        }
        Command::Criterion { n, d, chi: c, rank } => {
            if *n == 0 || *d == 0 || *rank == 0 {
                return Err(invalid("n, d and rank must be at least 1"));
            }
            let v = chi::uc_from_chi(*n, *d, &BigUint::from(*c), &BigUint::from(*rank));
            let text = match &v {
                Some(u) => format!("uc = rdim + 1 iff uc = {u} (assuming rdim + 1 = p)\n"),
                None => String::from("absent: the criterion cannot hold for this witness\n"),
            };
            Ok(emit(
                cli.format,
                json!({ "value": v.as_ref().map_or(Value::Null, big_json), "hypothesis": "rdim + 1 = p" }),
                text,
            ))
        }
        Command::VerifyUlrich { n, pd, twists } => {
            if *pd == 0 {
                return Err(invalid("pd must be at least 1"));
            }
            let t = SplittingType::new(*n, twists.clone()).map_err(Error::validation)?;
            let ulrich = cohomology::is_ulrich_split(&t, *pd);
            let chi = cohomology::euler_char(&t, 0);
            let expected = cohomology::ulrich_chi_formula(*n, *pd, t.rank() as u64, 0);
            Ok(emit(
                cli.format,
                json!({
                    "n": n, "pd": pd, "twists": t.twists(), "ulrich": ulrich,
                    "chi": chi.to_string(), "ulrich_chi": expected.to_string(),
                }),
                format!("ulrich: {ulrich}; chi = {chi}; an Ulrich bundle of this rank has chi = {expected}\n"),
            ))
        }
        Command::Catalog {
            action: CatalogAction::Validate,
        } => {
            let c = Catalogue::resolve(cli.catalog.as_deref())?
                .ok_or_else(|| Error::MissingCatalogue(String::from("pass --catalog or set ULRICH_CATALOG")))?;
            let n = c.records.len();
            Ok(emit(
                cli.format,
                json!({ "records": n, "valid": true }),
                format!("{n} records, all valid\n"),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

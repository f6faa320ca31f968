//! Command-line front-end. Exit status: 0 when everything checks out, 1 on a
//! mathematical mismatch, 2 on a configuration error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::checks::{self, CheckSettings};
use crate::error::{Error, Result};
use crate::genfun::{self, GFKind, GfTables, DEFAULT_ORDER};
use crate::oracle::{
    decorate_grassmannian, enumerate_forests, enumerate_trees, OracleConfig, DEFAULT_BUDGET,
};
use crate::permutations::{
    enumerate_grass_forest_permutations, enumerate_grass_tree_permutations, enumerate_separable,
    histogram_by_statistics, LabelledPermutation,
};
use crate::relations;
use crate::ring::rat;
use crate::table::{self, TableFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gforest",
    version,
    about = "Rank generating functions of contracted Grassmannian forests"
)]
pub struct Cli {
    /// Truncation order of the power series.
    #[arg(long, global = true, env = "GFOREST_ORDER", default_value_t = DEFAULT_ORDER)]
    pub order: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    PlabicTree,
    PlabicForest,
    GrassTree,
    GrassForest,
}

impl From<KindArg> for GFKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::PlabicTree => GFKind::PlabicTree,
            KindArg::PlabicForest => GFKind::PlabicForest,
            KindArg::GrassTree => GFKind::GrassTree,
            KindArg::GrassForest => GFKind::GrassForest,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
    Json,
    LatexTable,
}

impl From<FormatArg> for TableFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => TableFormat::Text,
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Json => TableFormat::Json,
            FormatArg::LatexTable => TableFormat::LatexTable,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Separable,
    GrassTree,
    GrassForest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Statistic {
    Descents,
    Antiexcedances,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rows [x^n y^k] for n_min <= n <= n_max and 2 <= k <= n/2.
    Table {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = KindArg::GrassForest)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// [x^n y^k] of one series as a polynomial in q.
    Coeff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = KindArg::GrassForest)]
        kind: KindArg,
    },
    /// Runs every cross-check.
    Check {
        #[arg(long, default_value_t = 8)]
        oracle_max_n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Adds this amount to oracle mom-dimensions (negative control).
        #[arg(long, default_value_t = 0, hide = true, allow_hyphen_values = true)]
        fault_mom_offset: i64,
    },
    /// [x^n y^k] of the Grassmannian forest series at q = -1.
    Euler {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
    /// Substitutes the series into its algebraic relation.
    Relations {
        /// All four kinds when omitted.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Permutation histograms.
    Perms {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Statistic::Antiexcedances)]
        by: Statistic,
        /// Also print every permutation.
        #[arg(long)]
        list: bool,
        /// Print listed permutations as JSON lines.
        #[arg(long, requires = "list")]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Dumps oracle forests as JSON lines.
    Dump {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::GrassForest)]
        kind: KindArg,
        /// Include non-contracted decorations.
        #[arg(long)]
        all: bool,
    },
}

/// Outcome of a command: text for standard output, optional diagnostics for
/// standard error, and the exit status.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Outcome::default()
        }
    }
}

fn config_error(e: Error) -> Outcome {
    Outcome {
        stderr: format!("error: {e}\n"),
        status: match e {
            Error::Config(_) | Error::InsufficientOrder { .. } | Error::BudgetExceeded { .. } => {
                EXIT_CONFIG
            }
            _ => EXIT_MISMATCH,
        },
        ..Outcome::default()
    }
}

pub fn execute(cli: Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => config_error(e),
    }
}

fn need_order(order: usize, n: usize) -> Result<()> {
    if n > order {
        return Err(Error::Config(format!(
            "n = {n} exceeds the series order {order}; raise --order"
        )));
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    let order = cli.order;
    if order == 0 {
        return Err(Error::Config("order must be positive".into()));
    }
    match cli.command {
        Command::Table {
            n_min,
            n_max,
            kind,
            format,
            out,
        } => {
            if n_min > n_max {
                return Err(Error::Config(format!(
                    "--n-min {n_min} exceeds --n-max {n_max}"
                )));
            }
            need_order(order, n_max)?;
            let kind = GFKind::from(kind);
            let series = genfun::build(kind, order)?;
            let rows = table::table_rows(&series, n_min, n_max)?;
            let text = table::render(&rows, format.into())?;
            let mut outcome = Outcome::default();
            if kind == GFKind::GrassForest {
                let diffs = table::diff_against_fixture(&rows);
                if !diffs.is_empty() {
                    outcome.status = EXIT_MISMATCH;
                    for d in diffs {
                        outcome
                            .stderr
                            .push_str(&format!("mismatch against golden table: {d}\n"));
                    }
                }
            }
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?,
                None => outcome.stdout = text,
            }
            Ok(outcome)
        }
        Command::Coeff { n, k, kind } => {
            if k as usize > n {
                return Err(Error::Config(format!("k = {k} exceeds n = {n}")));
            }
            need_order(order, n)?;
            let series = genfun::build(kind.into(), order)?;
            genfun::coefficient_counts(&series, n)?;
            let row = genfun::q_polynomial(&series, n, k)?;
            Ok(Outcome::ok(format!("{row}\n")))
        }
        Command::Check {
            oracle_max_n,
            budget,
            fault_mom_offset,
        } => {
            if budget == 0 {
                return Err(Error::Config("budget must be positive".into()));
            }
            let tables = GfTables::build(order.max(oracle_max_n))?;
            let settings = CheckSettings {
                oracle_max_n,
                oracle: OracleConfig {
                    budget,
                    mom_dimension_offset: fault_mom_offset,
                },
            };
            let reports = checks::run_all(&tables, &settings)?;
            let mut outcome = Outcome::default();
            for r in &reports {
                outcome.stdout.push_str(&format!("{r}\n"));
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                outcome.status = EXIT_MISMATCH;
                outcome.stderr = format!("{failed} check(s) failed\n");
            }
            Ok(outcome)
        }
        Command::Euler { n, k } => {
            if k < 2 || k as usize + 2 > n {
                return Err(Error::Config(format!(
                    "need 2 <= k <= n - 2, got n = {n}, k = {k}"
                )));
            }
            need_order(order, n)?;
            let chi = genfun::euler_characteristic(n, k)?;
            let mut outcome = Outcome::ok(format!("{chi}\n"));
            if chi != rat(1) {
                outcome.status = EXIT_MISMATCH;
            }
            Ok(outcome)
        }
        Command::Relations { kind } => {
            if order < 6 {
                return Err(Error::Config("relations need --order >= 6".into()));
            }
            let kinds: Vec<GFKind> = match kind {
                Some(k) => vec![k.into()],
                None => GFKind::ALL.to_vec(),
            };
            let mut outcome = Outcome::default();
            for kind in kinds {
                let report = relations::verify_algebraic_relation(kind, order)?;
                if !report.holds() {
                    outcome.status = EXIT_MISMATCH;
                }
                outcome.stdout.push_str(&format!("{report}\n"));
            }
            Ok(outcome)
        }
        Command::Perms {
            family,
            n,
            by,
            list,
            json,
            budget,
        } => perms(family, n, by, list, json, budget),
        Command::Dump { n, kind, all } => {
            let kind = GFKind::from(kind);
            let shapes = if kind.is_forest() {
                enumerate_forests(n, true)
            } else {
                enumerate_trees(n)
            };
            let plabic = kind.family() == genfun::Family::Plabic;
            let mut out = String::new();
            for s in &shapes {
                for g in decorate_grassmannian(s, !all, plabic) {
                    out.push_str(&g.to_json_line());
                    out.push('\n');
                }
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn perms(
    family: Family,
    n: usize,
    by: Statistic,
    list: bool,
    json: bool,
    budget: u64,
) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Config("n must be positive".into()));
    }
    let mut out = String::new();
    match family {
        Family::Separable => {
            if list {
                return Err(Error::Config(
                    "--list is only available for the Grassmannian families".into(),
                ));
            }
            let hist = enumerate_separable(n, by == Statistic::Descents, budget)?;
            for (stat, count) in hist {
                out.push_str(&format!("{stat}\t{count}\n"));
            }
        }
        Family::GrassTree | Family::GrassForest => {
            let perms: Vec<LabelledPermutation> = if family == Family::GrassTree {
                enumerate_grass_tree_permutations(n, budget)?
            } else {
                enumerate_grass_forest_permutations(n, budget)?
            };
            if list {
                for p in &perms {
                    if json {
                        out.push_str(&p.perm.to_json().to_string());
                    } else {
                        out.push_str(&format!("{}\t{}", p.perm, p.mom_dimension));
                    }
                    out.push('\n');
                }
            }
            match by {
                Statistic::Antiexcedances => {
                    for ((k, r), c) in histogram_by_statistics(&perms) {
                        out.push_str(&format!("{k}\t{r}\t{c}\n"));
                    }
                }
                Statistic::Descents => {
                    let mut hist = std::collections::BTreeMap::new();
                    for p in &perms {
                        *hist.entry(p.perm.descents()).or_insert(0u64) += 1;
                    }
                    for (d, c) in hist {
                        out.push_str(&format!("{d}\t{c}\n"));
                    }
                }
            }
        }
    }
    Ok(Outcome::ok(out))
}

/// Parses `args`, runs the command and writes its output; returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return status;
        }
    };
    let outcome = execute(cli);
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stderr.write_all(outcome.stderr.as_bytes());
    outcome.status
}

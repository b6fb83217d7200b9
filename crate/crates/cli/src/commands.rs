//! Argument definitions and subcommand dispatch.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use losanitsch_core::identities::series::{named_gf, GF_CATALOG};
use losanitsch_core::identities::{identity_battery, run_identity, series_expand, CheckReport};

use crate::bfile::BFile;
use crate::compare::compare;
use crate::error::{CliError, Result, EXIT_FAILURE, EXIT_SUCCESS};
use crate::fetch::{resolve_cache_dir, Fetcher, Origin};
use crate::render::{build, render, Format, TriangleName};
use crate::view::{Linearization, SequenceView, Source};

#[derive(Debug, Parser)]
#[command(name = "losanitsch", version, about = "Parity and residue triangles, identity checks and OEIS comparison")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a triangle: e, o, L, Lbar, qbinom_minus1, epsilon, lambda, e_mod_p, L_mod_p.
    Triangle {
        name: String,
        /// Last row to print.
        #[arg(long, default_value_t = 6)]
        rows: usize,
        /// Modulus for epsilon, lambda, e_mod_p and L_mod_p.
        #[arg(long)]
        p: Option<usize>,
        /// Residue coefficient to select, `0 <= j < p`.
        #[arg(long)]
        j: Option<usize>,
        /// table, csv or bfile.
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Run one identity check by id, or `all`.
    Verify {
        id: String,
        /// Bound for checks that enumerate subsets or words.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Odd primes for the residue checks.
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        primes: Vec<usize>,
    },
    /// Expand a named generating function into x-polynomials.
    Series {
        gf: String,
        /// Highest power of z to print.
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Column or offset parameter, for GFs that take one.
        #[arg(long)]
        k: Option<usize>,
        /// Odd prime, for GFs that take one.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Export sequences as b-files or compare them with OEIS b-files.
    #[command(subcommand)]
    Oeis(OeisCommand),
}

#[derive(Debug, Args)]
pub struct ViewArgs {
    /// e, o, L, Lbar, qbinom_minus1, or fib for f_n(1).
    pub source: String,
    /// Read a single column `T(n,k)` instead of rows.
    #[arg(long, conflicts_with = "diagonal")]
    pub column: Option<usize>,
    /// Read the diagonal `T(n,n-d)` instead of rows.
    #[arg(long)]
    pub diagonal: Option<usize>,
}

impl ViewArgs {
    fn view(&self) -> Result<SequenceView> {
        let source: Source = self.source.parse()?;
        match (self.column, self.diagonal) {
            (Some(k), _) => SequenceView::new(source, Linearization::Column(k)),
            (_, Some(d)) => SequenceView::new(source, Linearization::Diagonal(d)),
            _ => Ok(SequenceView::default_for(source)),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum OeisCommand {
    /// Write a computed sequence as b-file text.
    Export {
        #[command(flatten)]
        view: ViewArgs,
        /// Last row (or last term for fib).
        #[arg(long, default_value_t = 10)]
        rows: usize,
        /// Sequence id for the header comment.
        #[arg(long)]
        id: Option<String>,
    },
    /// Compare a computed sequence with a b-file, trying index shifts -4..=4.
    Compare {
        #[command(flatten)]
        view: ViewArgs,
        /// OEIS id, e.g. A034851.
        id: String,
        /// Last row (or last term for fib).
        #[arg(long, default_value_t = 40)]
        rows: usize,
        /// Download the b-file, caching it; falls back to the cache on failure.
        #[arg(long, required_unless_present = "file", conflicts_with = "file")]
        fetch: bool,
        /// Read the b-file from a local path.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Cache directory; defaults to $LOSANITSCH_CACHE_DIR, then ./oeis-cache.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Use only the cache; never touch the network.
        #[arg(long, requires = "fetch")]
        offline: bool,
        /// Override the download host, e.g. for a local mirror.
        #[arg(long, hide = true)]
        base_url: Option<String>,
    },
}

/// Text to print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: EXIT_SUCCESS }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Triangle { name, rows, p, j, format } => {
            let built = build(name.parse::<TriangleName>()?, rows, p, j)?;
            Ok(Outcome::ok(render(&built, format.parse::<Format>()?)?))
        }
        Command::Verify { id, max_n, primes } => verify(&id, max_n, &primes),
        Command::Series { gf, terms, k, p } => series(&gf, terms, k, p).map(Outcome::ok),
        Command::Oeis(OeisCommand::Export { view, rows, id }) => {
            let values = view.view()?.values(rows);
            Ok(Outcome::ok(BFile::from_values(id, 0, values).render()))
        }
        Command::Oeis(OeisCommand::Compare { view, id, rows, fetch: _, file, cache_dir, offline, base_url }) => {
            let view = view.view()?;
            let (text, origin) = match file {
                Some(path) => (std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?, None),
                None => {
                    let mut fetcher = Fetcher::new(resolve_cache_dir(cache_dir.as_deref()), offline);
                    if let Some(url) = base_url {
                        fetcher = fetcher.with_base_url(url);
                    }
                    let (text, origin) = fetcher.get(&id)?;
                    (text, Some(origin))
                }
            };
            let theirs = BFile::parse(&text)?;
            let result = compare(&view.values(rows), &theirs);
            let mut out = format!("{id} vs {} {}, n<={rows}: {result}", view.source, view.rule);
            match origin {
                Some(Origin::Cache) => out.push_str(" (cached)"),
                Some(Origin::CacheFallback) => out.push_str(" (fetch failed, used cache)"),
                _ => {}
            }
            out.push('\n');
            let code = if result.is_match() { EXIT_SUCCESS } else { EXIT_FAILURE };
            Ok(Outcome { stdout: out, code })
        }
    }
}

fn verify(id: &str, max_n: usize, primes: &[usize]) -> Result<Outcome> {
    let reports: Vec<CheckReport> =
        if id == "all" { identity_battery(max_n, primes)? } else { vec![run_identity(id, max_n, primes)?] };
    let mut out = String::new();
    for r in &reports {
        writeln!(out, "{}", r.to_line()).unwrap();
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    writeln!(out, "{passed}/{} passed", reports.len()).unwrap();
    let code = if passed == reports.len() { EXIT_SUCCESS } else { EXIT_FAILURE };
    Ok(Outcome { stdout: out, code })
}

fn series(name: &str, terms: usize, k: Option<usize>, p: Option<usize>) -> Result<String> {
    let entry = GF_CATALOG.iter().find(|e| e.name == name).ok_or_else(|| {
        let names: Vec<&str> = GF_CATALOG.iter().map(|e| e.name).collect();
        CliError::Usage(format!("unknown generating function {name:?}; expected one of {}", names.join(", ")))
    })?;
    if k.is_some() && !entry.uses_k {
        return Err(CliError::Usage(format!("generating function {name} takes no --k")));
    }
    if p.is_some() && !entry.uses_p {
        return Err(CliError::Usage(format!("generating function {name} takes no --p")));
    }
    if entry.uses_p && p.is_none() {
        return Err(CliError::Usage(format!("generating function {name} requires --p")));
    }
    let gf = named_gf(name, k.unwrap_or(0), p.unwrap_or(0)).expect("name is in the catalog")?;
    let mut out = String::new();
    for poly in series_expand(&gf, terms) {
        writeln!(out, "{poly}").unwrap();
    }
    Ok(out)
}

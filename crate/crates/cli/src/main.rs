//! `catdpp`: enumerate, count, map and verify descending plane partitions
//! and the Catalan families around them.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod render;

use catdpp::verify::{run_suite, Caps, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "catdpp",
    version,
    about = "Descending plane partitions and their Catalan subset"
)]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct CapArgs {
    /// Largest DPP order enumerated in full.
    #[arg(long, global = true, env = "CATDPP_DPP_CAP", default_value_t = 8)]
    dpp_cap: u32,
    /// Deepest generating-tree level expanded.
    #[arg(long, global = true, env = "CATDPP_TREE_CAP", default_value_t = 12)]
    tree_cap: u32,
    /// Largest ASM order enumerated.
    #[arg(long, global = true, env = "CATDPP_ASM_CAP", default_value_t = 6)]
    asm_cap: u32,
    /// Largest n for TSSCPPs in the 2n-box.
    #[arg(long, global = true, env = "CATDPP_TSSCPP_CAP", default_value_t = 3)]
    tsscpp_cap: u32,
}

impl From<CapArgs> for Caps {
    fn from(c: CapArgs) -> Self {
        Caps {
            dpp_order: c.dpp_cap,
            tree_depth: c.tree_cap,
            asm_order: c.asm_cap,
            tsscpp_n: c.tsscpp_cap,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every object of a family in canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count a family and compare with its closed formula.
    Count {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        order: u32,
    },
    /// Map a Catalan DPP to its path or a path to its Catalan DPP.
    Map {
        #[arg(long, value_enum)]
        from: MapFrom,
        /// e.g. "4 3 2" or "1-11-11"
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// Order bound; defaults to the smallest admissible order.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum, default_value_t = MapFormat::Ascii)]
        format: MapFormat,
    },
    /// Emit a generating tree down to a depth.
    Tree {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
    },
    /// Run an invariant suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        max_order: u32,
    },
    /// Compare the sum-of-entries polynomial with the q-product formula.
    Qpoly {
        #[arg(long)]
        order: u32,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Dpp,
    CatalanDpp,
    Path,
    Perm231,
    Asm,
    MonoDiag,
    MagogDiag,
    Tsscpp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Ascii,
    Count,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MapFrom {
    CatalanDpp,
    Path,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MapFormat {
    Ascii,
    Json,
    Grid,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Which {
    Abstract,
    Perm,
    Path,
    Dpp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    Json,
    Dot,
    Ascii,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum SuiteArg {
    Counts,
    Bijection,
    Trees,
    Qpoly,
    CrossFamily,
    All,
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    /// Bad input that clap could not catch: exit 2.
    Usage(String),
    /// A check or formula comparison failed: exit 1.
    Verification,
    Io(anyhow::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => {
            match File::create(path).with_context(|| format!("creating {}", path.display())) {
                Ok(f) => Box::new(f),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(1);
                }
            }
        }
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => {
            let _ = out.flush();
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            if e.downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn check_cap(what: &str, value: u32, cap: u32, flag: &str) -> Result<(), Failure> {
    if value > cap {
        return Err(Failure::Usage(format!(
            "{what} {value} exceeds the cap {cap} (raise it with {flag})"
        )));
    }
    Ok(())
}

fn family_cap(family: Family, order: u32, caps: CapArgs) -> Result<(), Failure> {
    match family {
        Family::Dpp => check_cap("DPP order", order, caps.dpp_cap, "--dpp-cap"),
        Family::Asm => check_cap("ASM order", order, caps.asm_cap, "--asm-cap"),
        Family::Tsscpp => check_cap("TSSCPP n", order, caps.tsscpp_cap, "--tsscpp-cap"),
        _ => Ok(()),
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let caps = cli.caps;
    match &cli.command {
        Command::Enumerate {
            family,
            order,
            format,
        } => {
            family_cap(*family, *order, caps)?;
            render::enumerate(out, *family, *order, *format, caps.into())?;
        }
        Command::Count { family, order } => {
            family_cap(*family, *order, caps)?;
            if !render::count(out, *family, *order, caps.into())? {
                return Err(Failure::Verification);
            }
        }
        Command::Map {
            from,
            value,
            order,
            format,
        } => map(out, *from, value, *order, *format)?,
        Command::Tree {
            which,
            depth,
            format,
        } => {
            check_cap("tree depth", *depth, caps.tree_cap, "--tree-cap")?;
            let kind = match which {
                Which::Abstract => catdpp::TreeKind::Abstract,
                Which::Perm => catdpp::TreeKind::Perm,
                Which::Path => catdpp::TreeKind::Path,
                Which::Dpp => catdpp::TreeKind::Dpp,
            };
            render::tree(out, kind, *depth, caps.tree_cap, *format)?;
        }
        Command::Verify { suite, max_order } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Counts => vec![Suite::Counts],
                SuiteArg::Bijection => vec![Suite::Bijection],
                SuiteArg::Trees => vec![Suite::Trees],
                SuiteArg::Qpoly => vec![Suite::QPoly],
                SuiteArg::CrossFamily => vec![Suite::CrossFamily],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut failed = 0usize;
            let mut total = 0usize;
            for s in suites {
                for check in run_suite(s, *max_order, caps.into()) {
                    total += 1;
                    failed += usize::from(!check.passed);
                    writeln!(out, "[{}] {check}", s.name())?;
                }
            }
            writeln!(out, "{} checks, {} failed", total, failed)?;
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Qpoly { order } => {
            check_cap("DPP order", *order, caps.dpp_cap, "--dpp-cap")?;
            let brute = catdpp::dpp::dpp_generating_polynomial_capped(*order, caps.dpp_cap)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let closed = catdpp::q_product_formula(*order).map_err(|e| Failure::Io(e.into()))?;
            writeln!(out, "enumerated: {brute}")?;
            writeln!(out, "q-product:  {closed}")?;
            if brute == closed {
                writeln!(out, "MATCH")?;
            } else {
                writeln!(out, "MISMATCH")?;
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn map(
    out: &mut impl Write,
    from: MapFrom,
    value: &str,
    order: Option<u32>,
    format: MapFormat,
) -> Result<(), Failure> {
    let usage = |e: catdpp::CatalanError| Failure::Usage(format!("{value:?}: {e}"));
    match from {
        MapFrom::CatalanDpp => {
            let probe = catdpp::CatalanDpp::parse(value, u32::MAX).map_err(usage)?;
            let n = order.unwrap_or_else(|| probe.first().unwrap_or(0));
            let c = probe.with_order(n).map_err(usage)?;
            let p = catdpp::dpp_to_path(&c);
            match format {
                MapFormat::Ascii => writeln!(out, "{p}")?,
                MapFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&p).map_err(anyhow::Error::from)?
                )?,
                MapFormat::Grid => writeln!(out, "{}", p.grid_profile())?,
            }
        }
        MapFrom::Path => {
            let probe: catdpp::DppPath = value.parse().map_err(usage)?;
            let n = order.unwrap_or_else(|| probe.min_order());
            let p = probe.with_order(n).map_err(usage)?;
            let c = catdpp::path_to_dpp(&p);
            match format {
                MapFormat::Ascii => writeln!(out, "{c}")?,
                MapFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&c).map_err(anyhow::Error::from)?
                )?,
                MapFormat::Grid => writeln!(out, "{}", p.grid_profile())?,
            }
        }
    }
    Ok(())
}

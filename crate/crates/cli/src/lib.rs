//! The `aztec` command line: `count`, `verify`, `enumerate` and `render`.

pub mod svg;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use aztec_core::aztec::{
    count_tilings, enumerate_tilings, for_each_tiling, pi_families_via_tilings, CountMethod, Domino, Tiling,
    DEFAULT_TILING_CUTOFF,
};
use aztec_core::hankel::{HankelKind, HankelMatrix};
use aztec_core::lgv::{enumerate_family, AnchorScheme, SchemeKind, DEFAULT_FAMILY_CUTOFF};
use aztec_core::schroeder::{large_schroeder, small_schroeder};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::verify::{run_suite, Limits, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aztec",
    version,
    about = "Exact counts, bijections and tilings for the Aztec diamond"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest Aztec diamond order enumerated tiling by tiling.
    #[arg(long, global = true, default_value_t = DEFAULT_TILING_CUTOFF)]
    pub max_enum_n: usize,

    /// Largest path family searched directly.
    #[arg(long, global = true, default_value_t = DEFAULT_FAMILY_CUTOFF)]
    pub max_family_n: usize,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 2004)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact count.
    Count {
        target: CountTarget,
        /// Order or index.
        n: Option<usize>,
        #[arg(long = "n", value_name = "N")]
        n_flag: Option<usize>,
        /// Matrix for `count det`.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// How `count aztec` is computed.
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
    /// Stream objects as JSON lines, then a count summary.
    Enumerate {
        target: EnumTarget,
        n: Option<usize>,
        #[arg(long = "n", value_name = "N")]
        n_flag: Option<usize>,
        #[arg(long, value_enum, default_value_t = SchemeArg::Pi)]
        scheme: SchemeArg,
    },
    /// Draw a tiling as SVG.
    Render {
        /// Tiling JSON file.
        #[arg(long, conflicts_with = "generate", required_unless_present = "generate")]
        input: Option<PathBuf>,
        /// Render tiling number `--index` of Az(N) in enumeration order.
        #[arg(long, value_name = "N")]
        generate: Option<usize>,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, short)]
        output: PathBuf,
        /// Overlay the row-crossing paths.
        #[arg(long)]
        overlay_paths: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountTarget {
    Aztec,
    SchroederLarge,
    SchroederSmall,
    Det,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    H1,
    G1,
    H0,
    G0,
}

impl From<KindArg> for HankelKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::H1 => HankelKind::H1,
            KindArg::G1 => HankelKind::G1,
            KindArg::H0 => HankelKind::H0,
            KindArg::G0 => HankelKind::G0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Determinant,
    Enumeration,
}

impl From<MethodArg> for CountMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => CountMethod::Formula,
            MethodArg::Determinant => CountMethod::Determinant,
            MethodArg::Enumeration => CountMethod::Enumeration,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumTarget {
    Tilings,
    Families,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Pi,
    Omega,
    Pistar,
}

impl From<SchemeArg> for SchemeKind {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Pi => SchemeKind::Pi,
            SchemeArg::Omega => SchemeKind::Omega,
            SchemeArg::Pistar => SchemeKind::PiStar,
        }
    }
}

fn pick_n(positional: Option<usize>, flag: Option<usize>) -> anyhow::Result<usize> {
    match (positional, flag) {
        (Some(a), Some(b)) if a != b => bail!("conflicting values {a} and {b} for N"),
        (Some(n), _) | (None, Some(n)) => Ok(n),
        (None, None) => bail!("missing N (give it positionally or with --n)"),
    }
}

/// Run a parsed command, writing results to `out`. Returns the exit code;
/// `Err` means a usage or input problem (exit code 2).
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Count {
            target,
            n,
            n_flag,
            kind,
            method,
        } => {
            let n = pick_n(*n, *n_flag)?;
            cmd_count(cli, *target, n, *kind, *method, out)
        }
        Command::Verify { suite, max_n } => {
            let limits = Limits {
                max_enum_n: cli.max_enum_n,
                max_family_n: cli.max_family_n,
                seed: cli.seed,
            };
            let report = run_suite(*suite, *max_n as usize, limits);
            if cli.json {
                let doc = json!({
                    "suite": suite,
                    "max_n": max_n,
                    "pass": report.passed(),
                    "total": report.checks.len(),
                    "failed": report.failures(),
                    "checks": report.checks,
                    "skipped": report.skipped,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                write!(out, "{report}")?;
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Enumerate {
            target,
            n,
            n_flag,
            scheme,
        } => {
            let n = pick_n(*n, *n_flag)?;
            cmd_enumerate(cli, *target, n, (*scheme).into(), out)
        }
        Command::Render {
            input,
            generate,
            index,
            output,
            overlay_paths,
        } => {
            let tiling = match (input, generate) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str::<Tiling>(&text)
                        .with_context(|| format!("invalid tiling in {}", path.display()))?
                }
                (None, Some(n)) => {
                    let mut tilings = enumerate_tilings(*n, cli.max_enum_n)?;
                    if *index >= tilings.len() {
                        bail!("index {index} out of range: Az({n}) has {} tilings", tilings.len());
                    }
                    tilings.swap_remove(*index)
                }
                (None, None) => bail!("give --input FILE or --generate N"),
            };
            let svg = svg::render_tiling(&tiling, *overlay_paths)?;
            std::fs::write(output, svg).with_context(|| format!("writing {}", output.display()))?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_count(
    cli: &Cli,
    target: CountTarget,
    n: usize,
    kind: Option<KindArg>,
    method: MethodArg,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let (value, method_name, kind_name) = match target {
        CountTarget::Aztec => {
            let v = count_tilings(n, method.into(), cli.max_enum_n)?;
            let m = match method {
                MethodArg::Formula => "formula",
                MethodArg::Determinant => "determinant",
                MethodArg::Enumeration => "enumeration",
            };
            (v, m, None)
        }
        CountTarget::SchroederLarge => (large_schroeder(n), "recurrence", None),
        CountTarget::SchroederSmall => (small_schroeder(n), "recurrence", None),
        CountTarget::Det => {
            let kind: HankelKind = kind
                .ok_or_else(|| anyhow!("count det needs --kind h1|g1|h0|g0"))?
                .into();
            (
                HankelMatrix::of_kind(kind, n)?.determinant(),
                "bareiss",
                Some(kind.to_string()),
            )
        }
    };
    if cli.json {
        let target_name = target
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        let mut doc = json!({
            "target": target_name,
            "n": n,
            "method": method_name,
            "value": value.to_str_radix(10),
        });
        if let Some(k) = kind_name {
            doc["kind"] = json!(k);
        }
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "{value}")?;
    }
    Ok(EXIT_OK)
}

/// Same shape as a serialized [`Tiling`], without re-validating.
#[derive(Serialize)]
struct TilingRecord<'a> {
    order: usize,
    dominoes: &'a [Domino],
}

fn cmd_enumerate(
    cli: &Cli,
    target: EnumTarget,
    n: usize,
    scheme: SchemeKind,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let mut count = 0usize;
    match target {
        EnumTarget::Tilings => {
            let mut io_error = None;
            for_each_tiling(n, cli.max_enum_n, |dominoes| {
                if io_error.is_some() {
                    return;
                }
                count += 1;
                let record = TilingRecord { order: n, dominoes };
                let line = serde_json::to_string(&record).expect("tiling records serialize");
                if let Err(e) = writeln!(out, "{line}") {
                    io_error = Some(e);
                }
            })?;
            if let Some(e) = io_error {
                return Err(e.into());
            }
        }
        EnumTarget::Families => {
            let families = if scheme == SchemeKind::Pi && n > cli.max_family_n && n <= cli.max_enum_n {
                pi_families_via_tilings(n, cli.max_enum_n)?
            } else {
                enumerate_family(AnchorScheme::new(scheme, n), cli.max_family_n)?
            };
            for f in &families {
                writeln!(out, "{}", serde_json::to_string(f)?)?;
                count += 1;
            }
        }
    }
    writeln!(out, "{}", json!({ "count": count }))?;
    Ok(EXIT_OK)
}

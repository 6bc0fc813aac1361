//! `lie-index`: root-system data, Dynkin indices and the identity suite from
//! the command line.
//!
//! Exit codes: 0 success, 1 a verification or internal cross-check failed,
//! 2 bad input.

mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lie_index_core::principal;
use lie_index_core::rational::to_string as q;
use lie_index_core::reps::{self, HighestWeight, SizeGuard};
use lie_index_core::verify::{self, CheckOptions, IdentityId};
use lie_index_core::{Error, RootSystem, SimpleType};

use report::{CheckJson, RepresentationJson, Summary, TableRow, TypeReport};

const MAX_DIM_ENV: &str = "LIE_INDEX_MAX_DIM";

#[derive(Debug, Parser)]
#[command(
    name = "lie-index",
    version,
    about = "Exact Dynkin indices of simple Lie algebras"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Largest rank included when iterating over types.
    #[arg(long, default_value_t = 8, global = true)]
    max_rank: usize,

    /// Largest module dimension whose weights are enumerated
    /// [default: 1000000, or $LIE_INDEX_MAX_DIM].
    #[arg(long, global = true)]
    max_dim: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structure constants of a simple type.
    Info {
        /// Type such as G2, B3 or e8.
        #[arg(value_name = "TYPE")]
        simple_type: String,
    },
    /// Principal sl2 index for every type up to --max-rank.
    Table,
    /// Principal sl2 index, or indices of V_λ with --weight.
    Index {
        #[arg(value_name = "TYPE")]
        simple_type: String,
        /// Highest weight in fundamental coordinates, e.g. 1,0,2.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Option<Vec<i64>>,
    },
    /// Decomposition of V_λ under the principal sl2.
    Decompose {
        #[arg(value_name = "TYPE")]
        simple_type: String,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        weight: Vec<i64>,
    },
    /// Run the identity suite.
    Verify {
        /// Restrict to these types (repeatable).
        #[arg(long = "type", value_name = "TYPE")]
        types: Vec<String>,
        /// Every admissible type up to --max-rank (the default when no --type is given).
        #[arg(long, conflicts_with = "types")]
        all: bool,
        /// Restrict to these identities (repeatable).
        #[arg(long = "identity", value_name = "ID")]
        identities: Vec<String>,
        /// Highest weight for per-module identities instead of the default sweep.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Option<Vec<i64>>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Check(String),
    BrokenPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Check(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::BrokenPipe;
        }
        Failure::Check(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(e) => e.into(),
            kind => Failure::Check(format!("{kind:?}")),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        if e.io_error_kind() == Some(io::ErrorKind::BrokenPipe) {
            return Failure::BrokenPipe;
        }
        Failure::Check(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::BrokenPipe) => ExitCode::SUCCESS,
    }
}

fn size_guard(flag: Option<u64>) -> Result<SizeGuard, Failure> {
    if let Some(n) = flag {
        return Ok(SizeGuard(n));
    }
    match std::env::var(MAX_DIM_ENV) {
        Ok(v) => v.trim().parse().map(SizeGuard).map_err(|_| {
            Failure::Input(format!("{MAX_DIM_ENV}={v:?} is not a nonnegative integer"))
        }),
        Err(_) => Ok(SizeGuard::DEFAULT),
    }
}

fn run(cli: Cli) -> CmdResult {
    let guard = size_guard(cli.global.max_dim)?;
    let format = cli.global.format;
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Info { simple_type } => cmd_info(&mut out, format, &simple_type),
        Command::Table => cmd_table(&mut out, format, cli.global.max_rank),
        Command::Index {
            simple_type,
            weight,
        } => cmd_index(&mut out, format, &simple_type, weight, guard, false),
        Command::Decompose {
            simple_type,
            weight,
        } => cmd_index(&mut out, format, &simple_type, Some(weight), guard, true),
        Command::Verify {
            types,
            all: _,
            identities,
            weight,
        } => cmd_verify(
            &mut out,
            format,
            &types,
            &identities,
            weight,
            cli.global.max_rank,
            guard,
        ),
    }
}

fn system(s: &str) -> Result<RootSystem, Failure> {
    let t: SimpleType = s.parse()?;
    Ok(RootSystem::new(t)?)
}

fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<T: Serialize>(out: &mut impl Write, rows: &[T]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct InfoRow<'a> {
    #[serde(rename = "type")]
    simple_type: &'a str,
    rank: usize,
    dim: i64,
    positive_roots: usize,
    coxeter: i64,
    dual_coxeter: i64,
    dual_coxeter_of_dual: i64,
    r: i64,
    exponents: String,
    theta_height: i64,
    theta_s_height: i64,
    index_closed: &'a str,
    index_heights: &'a str,
    index_exponents: &'a str,
}

impl<'a> From<&'a TypeReport> for InfoRow<'a> {
    fn from(t: &'a TypeReport) -> Self {
        InfoRow {
            simple_type: &t.simple_type,
            rank: t.rank,
            dim: t.dim,
            positive_roots: t.positive_roots,
            coxeter: t.coxeter,
            dual_coxeter: t.dual_coxeter,
            dual_coxeter_of_dual: t.dual_coxeter_of_dual,
            r: t.r,
            exponents: report::join_ints(&t.exponents, " "),
            theta_height: t.theta_height,
            theta_s_height: t.theta_s_height,
            index_closed: &t.index.closed,
            index_heights: &t.index.heights,
            index_exponents: &t.index.exponents,
        }
    }
}

fn write_type_text(out: &mut impl Write, t: &TypeReport) -> io::Result<()> {
    writeln!(out, "type              {}", t.simple_type)?;
    writeln!(out, "rank              {}", t.rank)?;
    writeln!(out, "dim               {}", t.dim)?;
    writeln!(out, "positive roots    {}", t.positive_roots)?;
    writeln!(out, "h                 {}", t.coxeter)?;
    writeln!(out, "h*                {}", t.dual_coxeter)?;
    writeln!(out, "h*(dual)          {}", t.dual_coxeter_of_dual)?;
    writeln!(out, "r                 {}", t.r)?;
    writeln!(
        out,
        "exponents         [{}]",
        report::join_ints(&t.exponents, ", ")
    )?;
    writeln!(out, "ht(theta)         {}", t.theta_height)?;
    writeln!(out, "ht(theta_s)       {}", t.theta_s_height)
}

fn cmd_info(out: &mut impl Write, format: OutputFormat, s: &str) -> CmdResult {
    let rs = system(s)?;
    let rep = TypeReport::new(&rs);
    match format {
        OutputFormat::Text => write_type_text(out, &rep)?,
        OutputFormat::Json => write_json(out, &rep)?,
        OutputFormat::Csv => write_csv(out, &[InfoRow::from(&rep)])?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TableJson {
    rows: Vec<TableRow>,
}

fn cmd_table(out: &mut impl Write, format: OutputFormat, max_rank: usize) -> CmdResult {
    let rows: Vec<TableRow> = SimpleType::all_up_to(max_rank)
        .into_iter()
        .map(|t| RootSystem::new(t).map(|rs| TableRow::new(&rs)))
        .collect::<Result<_, _>>()?;
    let all_agree = rows.iter().all(|r| r.agree);
    match format {
        OutputFormat::Text => {
            writeln!(
                out,
                "{:<5} {:>10} {:>10} {:>10} {:>10}  agree",
                "type", "tabulated", "closed", "heights", "exponents"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<5} {:>10} {:>10} {:>10} {:>10}  {}",
                    r.simple_type,
                    r.tabulated,
                    r.closed,
                    r.heights,
                    r.exponents,
                    if r.agree { "yes" } else { "NO" }
                )?;
            }
        }
        OutputFormat::Json => write_json(out, &TableJson { rows })?,
        OutputFormat::Csv => write_csv(out, &rows)?,
    }
    Ok(if all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct IndexRow<'a> {
    #[serde(rename = "type")]
    simple_type: &'a str,
    weight: String,
    closed: &'a str,
    heights: &'a str,
    exponents: &'a str,
    dim: Option<&'a str>,
    dynkin_index: Option<&'a str>,
    ave_index: Option<&'a str>,
    principal_dynkin_index: Option<&'a str>,
    sl2_decomposition: Option<String>,
}

fn cmd_index(
    out: &mut impl Write,
    format: OutputFormat,
    s: &str,
    weight: Option<Vec<i64>>,
    guard: SizeGuard,
    emphasize_decomposition: bool,
) -> CmdResult {
    let rs = system(s)?;
    let mut rep = TypeReport::new(&rs);
    let mut decomposition_text = None;
    if let Some(coords) = weight {
        let lambda = HighestWeight::new(&rs, coords)?;
        let ws = reps::freudenthal_multiplicities(&rs, &lambda, guard)?;
        let decomposition = principal::sl2_decompose_weights(&rs, &ws)?;
        let principal_index = principal::principal_index_rep(&rs, &lambda, guard)?;
        decomposition_text = Some(report::format_decomposition(&decomposition));
        rep.representation = Some(RepresentationJson {
            weight: lambda.coords().to_vec(),
            dim: ws.dim().to_string(),
            dynkin_index: q(&reps::dynkin_index_rep(&rs, &lambda)?),
            ave_index: q(&reps::ave_index_rep(&rs, &lambda)),
            principal_dynkin_index: principal_index.to_string(),
            sl2_decomposition: decomposition.parts().to_vec(),
        });
    } else {
        report::checked_index(&rs)?;
        let opts = CheckOptions {
            weight: None,
            guard,
        };
        for id in [IdentityId::MainTheoremThreeWay, IdentityId::TableEntry] {
            rep.checks.push(CheckJson::from(&verify::check(
                id,
                rs.simple_type(),
                &opts,
            )?));
        }
    }

    match format {
        OutputFormat::Text => match (&rep.representation, &decomposition_text) {
            (Some(v), Some(d)) => {
                let w = report::join_ints(&v.weight, ",");
                if emphasize_decomposition {
                    writeln!(out, "{} V({w}) dim {} = {d}", rep.simple_type, v.dim)?;
                    writeln!(out, "principal ind_D   {}", v.principal_dynkin_index)?;
                } else {
                    writeln!(out, "type              {}", rep.simple_type)?;
                    writeln!(out, "weight            ({w})")?;
                    writeln!(out, "dim               {}", v.dim)?;
                    writeln!(out, "ind_D             {}", v.dynkin_index)?;
                    writeln!(out, "ind_AVE           {}", v.ave_index)?;
                    writeln!(out, "principal ind_D   {}", v.principal_dynkin_index)?;
                    writeln!(out, "sl2 decomposition {d}")?;
                }
            }
            _ => {
                writeln!(out, "type              {}", rep.simple_type)?;
                writeln!(out, "closed form       {}", rep.index.closed)?;
                writeln!(out, "via heights       {}", rep.index.heights)?;
                writeln!(out, "via exponents     {}", rep.index.exponents)?;
                writeln!(
                    out,
                    "agree             {}",
                    if rep.index.agree { "yes" } else { "NO" }
                )?;
            }
        },
        OutputFormat::Json => write_json(out, &rep)?,
        OutputFormat::Csv => {
            let v = rep.representation.as_ref();
            let row = IndexRow {
                simple_type: &rep.simple_type,
                weight: v
                    .map(|v| report::join_ints(&v.weight, " "))
                    .unwrap_or_default(),
                closed: &rep.index.closed,
                heights: &rep.index.heights,
                exponents: &rep.index.exponents,
                dim: v.map(|v| v.dim.as_str()),
                dynkin_index: v.map(|v| v.dynkin_index.as_str()),
                ave_index: v.map(|v| v.ave_index.as_str()),
                principal_dynkin_index: v.map(|v| v.principal_dynkin_index.as_str()),
                sl2_decomposition: v.map(|v| {
                    v.sl2_decomposition
                        .iter()
                        .map(|(d, n)| format!("{d}:{n}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                }),
            };
            write_csv(out, &[row])?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyJson {
    reports: Vec<TypeReport>,
    summary: Summary,
}

#[derive(Serialize)]
struct CheckRow<'a> {
    identity: &'a str,
    #[serde(rename = "type")]
    simple_type: &'a str,
    weight: String,
    lhs: &'a str,
    rhs: &'a str,
    status: &'a str,
    note: &'a str,
}

fn cmd_verify(
    out: &mut impl Write,
    format: OutputFormat,
    type_args: &[String],
    identity_args: &[String],
    weight: Option<Vec<i64>>,
    max_rank: usize,
    guard: SizeGuard,
) -> CmdResult {
    let types: Vec<SimpleType> = if type_args.is_empty() {
        SimpleType::all_up_to(max_rank)
    } else {
        type_args
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, _>>()?
    };
    let ids: Vec<IdentityId> = if identity_args.is_empty() {
        IdentityId::ALL.to_vec()
    } else {
        identity_args
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, _>>()?
    };
    let opts = CheckOptions { weight, guard };
    let results = verify::check_all(&types, &ids, &opts)?;
    let (passed, failed, skipped) = verify::summarize(&results);

    match format {
        OutputFormat::Text => {
            for r in &results {
                let weight = r
                    .weight
                    .as_ref()
                    .map(|w| format!(" V({})", report::join_ints(w, ",")))
                    .unwrap_or_default();
                let sides = match (&r.lhs, &r.rhs) {
                    (Some(l), Some(rr)) => format!("  {} = {}", q(l), q(rr)),
                    _ => String::new(),
                };
                let verdict = match report::status(r) {
                    "pass" => "PASS",
                    "fail" => "FAIL",
                    _ => "SKIP",
                };
                write!(
                    out,
                    "{verdict} {:<22} {}{weight}{sides}",
                    r.identity.name(),
                    r.simple_type
                )?;
                let show_note =
                    r.failed() || r.skipped || r.identity == IdentityId::DualCoxeterConjecture;
                if let (true, Some(note)) = (show_note, &r.note) {
                    write!(out, "  ({note})")?;
                }
                if r.failed() {
                    write!(out, "  [lhs ≠ rhs]")?;
                }
                writeln!(out)?;
            }
            writeln!(out, "{passed} passed, {failed} failed, {skipped} skipped")?;
        }
        OutputFormat::Json => {
            let mut reports: Vec<TypeReport> = Vec::new();
            for &t in &types {
                let rs = RootSystem::new(t)?;
                let mut rep = TypeReport::new(&rs);
                rep.checks = results
                    .iter()
                    .filter(|r| r.simple_type == t)
                    .map(CheckJson::from)
                    .collect();
                reports.push(rep);
            }
            write_json(
                out,
                &VerifyJson {
                    reports,
                    summary: Summary {
                        passed,
                        failed,
                        skipped,
                    },
                },
            )?;
        }
        OutputFormat::Csv => {
            let lhs: Vec<String> = results
                .iter()
                .map(|r| r.lhs.as_ref().map(q).unwrap_or_default())
                .collect();
            let rhs: Vec<String> = results
                .iter()
                .map(|r| r.rhs.as_ref().map(q).unwrap_or_default())
                .collect();
            let types: Vec<String> = results.iter().map(|r| r.simple_type.to_string()).collect();
            let rows: Vec<CheckRow> = results
                .iter()
                .enumerate()
                .map(|(k, r)| CheckRow {
                    identity: r.identity.name(),
                    simple_type: &types[k],
                    weight: r
                        .weight
                        .as_ref()
                        .map(|w| report::join_ints(w, " "))
                        .unwrap_or_default(),
                    lhs: &lhs[k],
                    rhs: &rhs[k],
                    status: report::status(r),
                    note: r.note.as_deref().unwrap_or(""),
                })
                .collect();
            write_csv(out, &rows)?;
        }
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 claim failed (or groups not isomorphic), 2 usage,
//! parse or precondition error, 3 hypothesis failed, 4 capacity exceeded.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::automorphism::{automorphism_group, is_stable_given};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::expr::parse_expr;
use crate::group::{isomorphic, FiniteGroup, Subgroup};
use crate::harness::{self, Verdict};
use crate::report::report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CLAIM_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sgl", version, about = "Finite groups, automorphism groups and stability checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Kq,
    Abthm,
    Nilthm,
    Extchar,
    Fiberprod,
    Split,
    Div,
    Homocyclic,
    Noncyclic,
    Nonstab,
    Decomp,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural invariants of a group expression such as "Dih(4) x ASL(8)"
    Report {
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check a statement on an instance
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// field order for kq and nonstab
        #[arg(long)]
        q: Option<u64>,
        /// order bound for div and noncyclic
        #[arg(long)]
        bound: Option<u64>,
        /// K for abthm and nilthm; "N x K" for extchar, fiberprod, split and decomp
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide whether two groups are isomorphic (exit 0 if so, 1 if not)
    Iso {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Orders of Aut and Inn, completeness and stability
    Aut {
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Hypothesis { .. } => EXIT_HYPOTHESIS,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::InvalidArgument(_) | Error::DivisionByZero | Error::Precondition(_) | Error::Parse { .. } => {
            EXIT_USAGE
        }
    }
}

fn emit<T: Serialize + std::fmt::Display>(out: &mut dyn Write, format: Format, value: &T) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("output serializes")),
        Format::Text => write!(out, "{value}"),
    }
}

fn build(text: &str) -> Result<FiniteGroup> {
    parse_expr(text)?.build()
}

fn build_split(text: &str) -> Result<(FiniteGroup, Subgroup)> {
    parse_expr(text)?
        .build_with_left_factor()?
        .ok_or_else(|| Error::Precondition(format!("`{text}` is not a product N x K")))
}

pub fn run_verify(claim: Claim, q: Option<u64>, bound: Option<u64>, group: Option<&str>) -> Result<Verdict> {
    match claim {
        Claim::Kq => harness::verify_kq(q.unwrap_or(8)),
        Claim::Nonstab => harness::verify_nonstab(q.unwrap_or(8)),
        Claim::Abthm => harness::check_abthm(&build(group.unwrap_or("ASL(3)"))?),
        Claim::Nilthm => harness::check_nilthm(&build(group.unwrap_or("ASL(8)"))?),
        Claim::Extchar => {
            let (g, n) = build_split(group.unwrap_or("Dih(4) x S3"))?;
            harness::check_extchar(&g, &n)
        }
        Claim::Fiberprod => {
            let (g, n) = build_split(group.unwrap_or("Dih(4) x S3"))?;
            harness::check_fiberprod(&g, &n)
        }
        Claim::Split => {
            let (g, n) = build_split(group.unwrap_or("C2 x ASL(3)"))?;
            harness::check_split_instance(&g, &n)
        }
        Claim::Decomp => match parse_expr(group.unwrap_or("C2 x ASL(3)"))? {
            crate::expr::GroupExpr::Product(n, k) => harness::check_decomp(&n.build()?, &k.build()?),
            _ => Err(Error::Precondition("decomp needs a product N x K".into())),
        },
        Claim::Div => harness::sweep_div(bound.unwrap_or(harness::DIV_BOUND)),
        Claim::Noncyclic => harness::sweep_noncyclic(bound.unwrap_or(harness::NONCYCLIC_BOUND)),
        Claim::Homocyclic => harness::sweep_homocyclic(&harness::HOMOCYCLIC_CASES),
    }
}

#[derive(Serialize)]
struct IsoOutput {
    isomorphic: bool,
    /// images of the left group's elements
    map: Option<Vec<u32>>,
}

impl std::fmt::Display for IsoOutput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", if self.isomorphic { "isomorphic" } else { "not isomorphic" })
    }
}

#[derive(Serialize)]
struct AutOutput {
    order: usize,
    aut_order: usize,
    inn_order: usize,
    center_order: usize,
    is_complete: bool,
    is_stable: bool,
}

impl std::fmt::Display for AutOutput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "|G|:      {}", self.order)?;
        writeln!(f, "|Aut|:    {}", self.aut_order)?;
        writeln!(f, "|Inn|:    {}", self.inn_order)?;
        writeln!(f, "complete: {}", self.is_complete)?;
        writeln!(f, "stable:   {}", self.is_stable)
    }
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::invalid(format!("write failed: {e}"));
    match cmd {
        Command::Report { expr, format } => {
            let r = report(&build(expr)?)?;
            emit(out, *format, &r).map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Verify {
            claim,
            q,
            bound,
            group,
            format,
        } => {
            let v = run_verify(*claim, *q, *bound, group.as_deref())?;
            emit(out, *format, &v).map_err(io)?;
            Ok(if v.pass { EXIT_PASS } else { EXIT_CLAIM_FAIL })
        }
        Command::Iso { left, right, format } => {
            let (g, h) = (build(left)?, build(right)?);
            let phi = isomorphic(&g, &h);
            let result = IsoOutput {
                isomorphic: phi.is_some(),
                map: phi.map(|p| p.image),
            };
            emit(out, *format, &result).map_err(io)?;
            Ok(if result.isomorphic { EXIT_PASS } else { EXIT_CLAIM_FAIL })
        }
        Command::Aut { expr, format } => {
            let g = build(expr)?;
            let aut = automorphism_group(&g)?;
            let center_order = g.center().order();
            let st = is_stable_given(&g, &aut, Execution::default());
            let result = AutOutput {
                order: g.order(),
                aut_order: aut.order(),
                inn_order: g.order() / center_order,
                center_order,
                is_complete: center_order == 1 && aut.order() == g.order(),
                is_stable: st.stable,
            };
            emit(out, *format, &result).map_err(io)?;
            Ok(EXIT_PASS)
        }
    }
}

/// Runs one command, writing results to `out` and errors to `err`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

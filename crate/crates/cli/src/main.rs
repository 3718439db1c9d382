//! Command-line front end: root-system tables, Weyl-group data, cohomology
//! chains, and the machine-readable verification suite.

mod verify;

use std::process::ExitCode;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use cominuscule_core::chevalley::LieAlgebra;
use cominuscule_core::cohomology::{euler_crosscheck, h0_chain, EulerCheck, H1Certificate};
use cominuscule_core::rootsys::{LengthClass, RootSystem, TypeLabel};
use cominuscule_core::weyl::{find_v_alpha, longest_element, ParabolicSubset};

use verify::{run_verify, RunError, VerifyArgs};

#[derive(Parser)]
#[command(
    name = "cominuscule",
    version,
    about = "Exact Lie-theoretic verification of Schubert-variety stabilizer combinatorics"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Co-minuscule roots, minuscule weights and the dual Coxeter number.
    Tables {
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        rank: usize,
    },
    /// The positive-root table, grouped by height.
    Roots {
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        rank: usize,
    },
    /// Minimal translators of the highest root for every long simple root.
    Weyl {
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        rank: usize,
    },
    /// H^0 chain and H^1 certificate for a module along a reduced word.
    Cohomology {
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        rank: usize,
        /// Module: `b`, `g`, or `p:<J>` with 1-based comma-separated indices.
        #[arg(long, default_value = "b")]
        module: String,
        /// Reduced word, 1-based comma-separated reflection indices.
        #[arg(long)]
        word: String,
    },
    /// Run the verification suite and write a report.
    Verify(VerifyArgs),
}

fn parse_type(s: &str) -> Result<TypeLabel, RunError> {
    TypeLabel::parse(s).ok_or_else(|| RunError::Config(format!("unknown type letter {s:?}")))
}

fn build_system(type_label: &str, rank: usize) -> Result<Arc<RootSystem>, RunError> {
    let label = parse_type(type_label)?;
    RootSystem::build(label, rank)
        .map(Arc::new)
        .map_err(|e| RunError::Config(e.to_string()))
}

/// 1-based comma-separated word → 0-based letters.
fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>, RunError> {
    s.split(',')
        .map(|tok| {
            let v: usize = tok
                .trim()
                .parse()
                .map_err(|_| RunError::Config(format!("bad word letter {tok:?}")))?;
            if v == 0 || v > rank {
                return Err(RunError::Config(format!(
                    "letter {v} out of range 1..={rank}"
                )));
            }
            Ok(v - 1)
        })
        .collect()
}

fn fmt_indices(indices: &[usize]) -> String {
    if indices.is_empty() {
        return "none".to_string();
    }
    indices
        .iter()
        .map(|i| format!("a{}", i + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_tables(type_label: &str, rank: usize) -> Result<(), RunError> {
    let rs = build_system(type_label, rank)?;
    println!("root system {}{}", rs.type_label, rs.rank);
    println!("positive roots: {}", rs.num_positive());
    println!(
        "co-minuscule roots: {}",
        fmt_indices(&rs.co_minuscule_roots())
    );
    println!(
        "minuscule weights: {}",
        fmt_indices(&rs.minuscule_weights())
    );
    println!("dual Coxeter number g = {}", rs.dual_coxeter_number());
    println!("highest root a0 = {}", rs.highest_root());
    if let Some(b0) = rs.highest_short_root() {
        println!("highest short root = {b0}");
    }
    Ok(())
}

fn cmd_roots(type_label: &str, rank: usize) -> Result<(), RunError> {
    let rs = build_system(type_label, rank)?;
    println!("positive roots of {}{} by height", rs.type_label, rs.rank);
    let max_h = rs.highest_root().height;
    for h in 1..=max_h {
        let row: Vec<String> = (0..rs.num_positive())
            .filter(|&k| rs.root(k).height == h)
            .map(|k| {
                let tag = match rs.root(k).length_class {
                    LengthClass::Long => "",
                    LengthClass::Short => "*",
                };
                format!("{}{}", rs.root(k), tag)
            })
            .collect();
        if !row.is_empty() {
            println!("{h:>3}: {}", row.join("  "));
        }
    }
    println!("(* marks short roots)");
    Ok(())
}

fn cmd_weyl(type_label: &str, rank: usize) -> Result<(), RunError> {
    let rs = build_system(type_label, rank)?;
    println!(
        "Weyl group of {}{}: order {}, longest element length {}",
        rs.type_label,
        rs.rank,
        cominuscule_core::rootsys::weyl_group_order(rs.type_label, rs.rank),
        longest_element(&rs, &ParabolicSubset::full(rs.rank)).len()
    );
    println!("g = {}", rs.dual_coxeter_number());
    for i in 0..rank {
        match find_v_alpha(&rs, i) {
            Ok(t) => {
                println!(
                    "a{}: u = {} (length {}), v = {} (length {})",
                    i + 1,
                    t.u,
                    t.u.len(),
                    t.v,
                    t.v.len()
                );
            }
            Err(e) => println!("a{}: {}", i + 1, e),
        }
    }
    Ok(())
}

fn cmd_cohomology(type_label: &str, rank: usize, module: &str, word: &str) -> Result<(), RunError> {
    let rs = build_system(type_label, rank)?;
    let word = parse_word(word, rs.rank)?;
    let lie = LieAlgebra::build(&rs).map_err(|e| RunError::Config(e.to_string()))?;
    let m = match module {
        "b" => lie.borel(),
        "g" => lie.full(),
        other => {
            let Some(list) = other.strip_prefix("p:") else {
                return Err(RunError::Config(format!(
                    "module must be b, g or p:<J>, got {other:?}"
                )));
            };
            let j = parse_word(list, rs.rank)?;
            lie.parabolic(&ParabolicSubset::new(j))
        }
    };
    let chain = h0_chain(&lie, &word, &m).map_err(|e| RunError::Config(e.to_string()))?;
    println!("module dimension {}", m.dim());
    println!(
        "chain dims: {}",
        chain
            .dims()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" -> ")
    );
    for (k, h1) in chain.step_h1_chars.iter().enumerate() {
        if !h1.is_zero() {
            println!("step {k}: H1 character {h1}");
        }
    }
    match &chain.certificate {
        H1Certificate::AllVanish => println!("H1 certificate: AllVanish"),
        H1Certificate::InconclusiveAt { step, character } => {
            println!("H1 certificate: InconclusiveAt step {step} with character {character}")
        }
    }
    match euler_crosscheck(&lie, &word, &m).map_err(|e| RunError::Config(e.to_string()))? {
        EulerCheck::Verified { agrees } => println!("Euler cross-check: agrees = {agrees}"),
        EulerCheck::NotApplicable => println!("Euler cross-check: not applicable"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 4,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.cmd {
        Cmd::Tables { type_label, rank } => cmd_tables(&type_label, rank).map(|()| 0),
        Cmd::Roots { type_label, rank } => cmd_roots(&type_label, rank).map(|()| 0),
        Cmd::Weyl { type_label, rank } => cmd_weyl(&type_label, rank).map(|()| 0),
        Cmd::Cohomology {
            type_label,
            rank,
            module,
            word,
        } => cmd_cohomology(&type_label, rank, &module, &word).map(|()| 0),
        Cmd::Verify(args) => run_verify(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(RunError::Config(msg)) => {
            eprintln!("config error: {msg}");
            ExitCode::from(4)
        }
        Err(RunError::Io(msg)) => {
            eprintln!("io error: {msg}");
            ExitCode::from(4)
        }
        Err(RunError::Budget(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}

//! The `verify` subcommand: runs selected check families across targets and
//! writes a machine-readable report.
//!
//! Report schema (version 1):
//! `{version, timestamp, cases: [{id, checks: [{name, anchor, pass,
//! witness}], assumptions, overall, skipped}], summary: {passed, failed,
//! skipped}}`. Output is byte-deterministic for a fixed configuration except
//! for the timestamp field.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use cominuscule_core::chevalley::LieAlgebra;
use cominuscule_core::cohomology::{euler_crosscheck, parabolic_vanishing, EulerCheck};
use cominuscule_core::rootsys::{RootSystem, TypeLabel};
use cominuscule_core::schubert::{
    cominuscule_scan, construct_stabilizer_classes, pinned_v_word, verify_noncominuscule_case,
    SchubertError, VerificationReport,
};
use cominuscule_core::weyl::{find_v_alpha, WeylElement, WeylError};

#[derive(Debug)]
pub enum RunError {
    Config(String),
    Io(String),
    Budget(String),
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Type letter; all verification targets when omitted.
    #[arg(long = "type")]
    type_label: Option<String>,
    /// Rank; required with --type unless the type has a unique rank.
    #[arg(long)]
    rank: Option<usize>,
    /// Comma-separated subset of
    /// tables,translators,words,f4-roots,cohomology,constructions,scans (or all).
    #[arg(long, default_value = "all")]
    checks: String,
    /// Override the pinned reduced word of the v-element (1-based letters).
    #[arg(long)]
    word: Option<String>,
    /// Enumeration budget for Weyl-group scans.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u128,
    /// Report file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format: json or markdown.
    #[arg(long, default_value = "json")]
    format: String,
    /// Worker threads for independent cases (0 = library default).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CheckKind {
    Tables,
    Translators,
    Words,
    F4Roots,
    Cohomology,
    Constructions,
    Scans,
}

impl CheckKind {
    fn parse(s: &str) -> Option<CheckKind> {
        match s {
            "tables" => Some(CheckKind::Tables),
            "translators" => Some(CheckKind::Translators),
            "words" => Some(CheckKind::Words),
            "f4-roots" => Some(CheckKind::F4Roots),
            "cohomology" => Some(CheckKind::Cohomology),
            "constructions" => Some(CheckKind::Constructions),
            "scans" => Some(CheckKind::Scans),
            _ => None,
        }
    }

    fn all() -> BTreeSet<CheckKind> {
        [
            CheckKind::Tables,
            CheckKind::Translators,
            CheckKind::Words,
            CheckKind::F4Roots,
            CheckKind::Cohomology,
            CheckKind::Constructions,
            CheckKind::Scans,
        ]
        .into_iter()
        .collect()
    }
}

pub struct RunConfig {
    targets: Vec<(TypeLabel, usize)>,
    checks: BTreeSet<CheckKind>,
    word_override: Option<Vec<usize>>,
    budget: u128,
    out: Option<PathBuf>,
    format: Format,
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Markdown,
}

#[derive(Serialize, Clone)]
struct CheckOut {
    name: String,
    anchor: String,
    pass: bool,
    witness: String,
}

#[derive(Serialize, Clone)]
struct CaseOut {
    id: String,
    checks: Vec<CheckOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    assumptions: Vec<String>,
    overall: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    skipped: bool,
}

#[derive(Serialize)]
struct Summary {
    passed: usize,
    failed: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct Report {
    version: String,
    timestamp: String,
    cases: Vec<CaseOut>,
    summary: Summary,
}

impl CaseOut {
    fn new(id: String) -> CaseOut {
        CaseOut {
            id,
            checks: Vec::new(),
            assumptions: Vec::new(),
            overall: true,
            skipped: false,
        }
    }

    fn skipped(id: String, reason: &str) -> CaseOut {
        CaseOut {
            id,
            checks: vec![CheckOut {
                name: "skipped".into(),
                anchor: "not-applicable".into(),
                pass: true,
                witness: reason.to_string(),
            }],
            assumptions: Vec::new(),
            overall: true,
            skipped: true,
        }
    }

    fn push(&mut self, name: &str, anchor: &str, pass: bool, witness: String) {
        self.overall &= pass;
        self.checks.push(CheckOut {
            name: name.into(),
            anchor: anchor.into(),
            pass,
            witness,
        });
    }
}

impl From<VerificationReport> for CaseOut {
    fn from(r: VerificationReport) -> CaseOut {
        CaseOut {
            id: r.case_id,
            checks: r
                .checks
                .into_iter()
                .map(|c| CheckOut {
                    name: c.name,
                    anchor: c.anchor,
                    pass: c.pass,
                    witness: c.witness,
                })
                .collect(),
            assumptions: r.assumptions,
            overall: r.overall,
            skipped: false,
        }
    }
}

const DEFAULT_TARGETS: [(TypeLabel, usize); 12] = [
    (TypeLabel::A, 2),
    (TypeLabel::A, 3),
    (TypeLabel::A, 4),
    (TypeLabel::B, 2),
    (TypeLabel::B, 3),
    (TypeLabel::B, 4),
    (TypeLabel::B, 5),
    (TypeLabel::C, 3),
    (TypeLabel::C, 4),
    (TypeLabel::C, 5),
    (TypeLabel::D, 4),
    (TypeLabel::F, 4),
];

fn build_config(args: VerifyArgs) -> Result<RunConfig, RunError> {
    let checks = if args.checks.trim() == "all" {
        CheckKind::all()
    } else {
        let mut set = BTreeSet::new();
        for tok in args.checks.split(',') {
            let kind = CheckKind::parse(tok.trim())
                .ok_or_else(|| RunError::Config(format!("unknown check family {tok:?}")))?;
            set.insert(kind);
        }
        set
    };
    if args.budget == 0 {
        return Err(RunError::Config("budget must be positive".into()));
    }
    let targets = match (&args.type_label, args.rank) {
        (None, None) => {
            let mut t = DEFAULT_TARGETS.to_vec();
            t.push((TypeLabel::G, 2));
            t
        }
        (None, Some(_)) => {
            return Err(RunError::Config("--rank given without --type".into()));
        }
        (Some(label), rank) => {
            let label = TypeLabel::parse(label)
                .ok_or_else(|| RunError::Config(format!("unknown type letter {label:?}")))?;
            let rank = rank.or(match label {
                TypeLabel::F => Some(4),
                TypeLabel::G => Some(2),
                _ => None,
            });
            let Some(rank) = rank else {
                return Err(RunError::Config("--rank is required for this type".into()));
            };
            // Validate now so a bad pair is a config error, not a crash.
            RootSystem::build(label, rank).map_err(|e| RunError::Config(e.to_string()))?;
            vec![(label, rank)]
        }
    };
    let word_override = match &args.word {
        None => None,
        Some(s) => {
            let max_rank = targets.iter().map(|&(_, r)| r).max().unwrap();
            Some(super::parse_word(s, max_rank)?)
        }
    };
    let format = match args.format.as_str() {
        "json" => Format::Json,
        "markdown" | "md" => Format::Markdown,
        other => return Err(RunError::Config(format!("unknown format {other:?}"))),
    };
    Ok(RunConfig {
        targets,
        checks,
        word_override,
        budget: args.budget,
        out: args.out,
        format,
        jobs: args.jobs,
    })
}

fn closed_form_cominuscule(label: TypeLabel, n: usize) -> Vec<usize> {
    match label {
        TypeLabel::A => (0..n).collect(),
        TypeLabel::B => vec![0],
        TypeLabel::C => vec![n - 1],
        TypeLabel::D => vec![0, n - 2, n - 1],
        TypeLabel::E => match n {
            6 => vec![0, 5],
            7 => vec![6],
            _ => vec![],
        },
        TypeLabel::F | TypeLabel::G => vec![],
    }
}

fn closed_form_dual_coxeter(label: TypeLabel, n: usize) -> i64 {
    match label {
        TypeLabel::A => n as i64 + 1,
        TypeLabel::B => 2 * n as i64 - 1,
        TypeLabel::C => n as i64 + 1,
        TypeLabel::D => 2 * n as i64 - 2,
        TypeLabel::E => match n {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        TypeLabel::F => 9,
        TypeLabel::G => 4,
    }
}

fn indices_1based(v: &[usize]) -> String {
    if v.is_empty() {
        return "none".to_string();
    }
    v.iter()
        .map(|i| format!("a{}", i + 1))
        .collect::<Vec<_>>()
        .join(",")
}

fn case_tables(rs: &Arc<RootSystem>) -> CaseOut {
    let mut case = CaseOut::new(format!("{}{}/tables", rs.type_label, rs.rank));
    let co = rs.co_minuscule_roots();
    let expect = closed_form_cominuscule(rs.type_label, rs.rank);
    case.push(
        "co-minuscule-set",
        "coefficient-one-in-highest-root",
        co == expect,
        format!(
            "computed {}, table {}",
            indices_1based(&co),
            indices_1based(&expect)
        ),
    );
    let g = rs.dual_coxeter_number();
    let ge = closed_form_dual_coxeter(rs.type_label, rs.rank);
    case.push(
        "dual-coxeter-number",
        "one-plus-sum-of-dual-coefficients",
        g == ge,
        format!("computed {g}, table {ge}"),
    );
    if rs.is_simply_laced() {
        let min = rs.minuscule_weights();
        case.push(
            "minuscule-equals-cominuscule",
            "simply-laced-equivalence",
            min == co,
            format!("minuscule {}", indices_1based(&min)),
        );
    }
    case
}

fn case_translators(rs: &Arc<RootSystem>) -> Result<CaseOut, RunError> {
    let mut case = CaseOut::new(format!("{}{}/translators", rs.type_label, rs.rank));
    let g = rs.dual_coxeter_number();
    for i in 0..rs.rank {
        let t = match find_v_alpha(rs, i) {
            Ok(t) => t,
            Err(WeylError::ShortRoot(_)) => continue,
            Err(e @ WeylError::BudgetExceeded { .. }) => {
                return Err(RunError::Budget(e.to_string()))
            }
            Err(e) => {
                case.push(
                    "translator-search",
                    "unique-minimal-translator",
                    false,
                    e.to_string(),
                );
                continue;
            }
        };
        let a0 = rs.highest_root_index();
        let ok = t.u.len() as i64 == g - 2
            && t.u.mul(&WeylElement::simple(rs, i)) == t.v
            && t.v.inverse().act_root(a0) == rs.negate(rs.simple_root_index(i));
        case.push(
            "translator-lengths-and-factorization",
            "u-length-g-minus-2-and-v-equals-u-s",
            ok,
            format!(
                "a{}: u = {} (len {}), v = {} (len {})",
                i + 1,
                t.u,
                t.u.len(),
                t.v,
                t.v.len()
            ),
        );
    }
    Ok(case)
}

fn case_words(rs: &Arc<RootSystem>) -> Option<CaseOut> {
    let pinned = pinned_v_word(rs)?;
    let mut case = CaseOut::new(format!("{}{}/words", rs.type_label, rs.rank));
    let cons = construct_stabilizer_classes(rs).ok()?;
    let v = &cons.items[0].v;
    case.push(
        "pinned-word-spells-translator",
        "stated-reduced-expression",
        &WeylElement::from_word(rs, &pinned) == v,
        format!(
            "pinned {:?}, canonical {}",
            pinned.iter().map(|i| i + 1).collect::<Vec<_>>(),
            v
        ),
    );
    let a0 = rs.highest_root_index();
    case.push(
        "translator-pulls-highest-negative",
        "v-inverse-of-highest-is-minus-alpha",
        v.inverse().act_root(a0) == rs.negate(rs.simple_root_index(cons.v_index)),
        format!("v^-1(a0) = {}", rs.root(v.inverse().act_root(a0))),
    );
    let d = cons.target;
    let image = v.act_root(rs.simple_root_index(d));
    case.push(
        "target-image-positive",
        "v-of-target-root-positive",
        rs.is_positive_root(image),
        format!("v(a{}) = {}", d + 1, rs.root(image)),
    );
    Some(case)
}

fn case_f4_roots(rs: &Arc<RootSystem>) -> Option<CaseOut> {
    if rs.type_label != TypeLabel::F {
        return None;
    }
    let mut case = CaseOut::new("F4/roots".to_string());
    let expected_heights: [usize; 11] = [4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1];
    let mut by_height = [0usize; 12];
    for k in 0..rs.num_positive() {
        by_height[rs.root(k).height as usize] += 1;
    }
    case.push(
        "height-partition",
        "24-roots-with-heights-1-to-11",
        by_height[1..=11] == expected_heights,
        format!("{:?}", &by_height[1..=11]),
    );
    let top: BTreeSet<Vec<i64>> = (0..rs.num_positive())
        .filter(|&k| rs.root(k).height >= 8)
        .map(|k| rs.root(k).alpha.clone())
        .collect();
    let expect: BTreeSet<Vec<i64>> = [
        vec![1, 2, 3, 2],
        vec![1, 2, 4, 2],
        vec![1, 3, 4, 2],
        vec![2, 3, 4, 2],
    ]
    .into_iter()
    .collect();
    case.push(
        "tall-roots",
        "unique-roots-of-heights-8-to-11",
        top == expect,
        format!("{top:?}"),
    );
    Some(case)
}

fn case_cohomology(
    lie: &LieAlgebra,
    word_override: Option<&[usize]>,
) -> Result<Option<CaseOut>, RunError> {
    let rs = lie.root_system().clone();
    let Some(pinned) = pinned_v_word(&rs) else {
        return Ok(None);
    };
    let word = word_override.map(|w| w.to_vec()).unwrap_or(pinned);
    let cons = construct_stabilizer_classes(&rs).map_err(schubert_err)?;
    let mut case = CaseOut::new(format!("{}{}/cohomology", rs.type_label, rs.rank));
    let bchain =
        cominuscule_core::cohomology::h0_chain(lie, &word, &lie.borel()).map_err(cohom_err)?;
    case.push(
        "borel-chain-vanishes",
        "h0-h1-of-borel-vanish-along-v",
        bchain.final_h0().is_zero()
            && bchain.certificate == cominuscule_core::cohomology::H1Certificate::AllVanish,
        format!("dims {:?}", bchain.dims()),
    );
    let q = cominuscule_core::weyl::ParabolicSubset::new(vec![cons.target]);
    let pv = parabolic_vanishing(lie, &word, &q).map_err(cohom_err)?;
    case.push(
        "parabolic-chain-vanishes",
        "h0-h1-of-p_d-vanish-along-v",
        pv.h0_zero && pv.h1_vanishes,
        format!("dims {:?}", pv.chain.dims()),
    );
    case.push(
        "derived-quotient-sections",
        "h0-of-g-mod-p-is-g",
        pv.derived_quotient_dim == Some(lie.dim()),
        format!("{:?}", pv.derived_quotient_dim),
    );
    let euler = euler_crosscheck(lie, &word, &lie.borel()).map_err(cohom_err)?;
    case.push(
        "euler-operator-crosscheck",
        "demazure-operator-agrees-with-chain",
        euler == EulerCheck::Verified { agrees: true },
        format!("{euler:?}"),
    );
    Ok(Some(case))
}

fn case_constructions(lie: &LieAlgebra) -> Result<Option<Vec<CaseOut>>, RunError> {
    let rs = lie.root_system().clone();
    let cons = match construct_stabilizer_classes(&rs) {
        Ok(c) => c,
        Err(SchubertError::UnsupportedType(..)) => return Ok(None),
        Err(e) => return Err(schubert_err(e)),
    };
    let mut out = Vec::new();
    for item in &cons.items {
        let report = verify_noncominuscule_case(lie, item.i).map_err(schubert_err)?;
        out.push(report.into());
    }
    Ok(Some(out))
}

fn case_scans(rs: &Arc<RootSystem>, budget: u128) -> Result<Vec<CaseOut>, RunError> {
    let co = rs.co_minuscule_roots();
    if co.is_empty() {
        return Ok(vec![CaseOut::skipped(
            format!("{}{}/scan", rs.type_label, rs.rank),
            "vacuous: no co-minuscule roots",
        )]);
    }
    let mut out = Vec::new();
    for r in co {
        let report = cominuscule_scan(rs, r, budget).map_err(schubert_err)?;
        out.push(report.into());
    }
    Ok(out)
}

fn schubert_err(e: SchubertError) -> RunError {
    match e {
        SchubertError::Weyl(WeylError::BudgetExceeded { .. }) => RunError::Budget(e.to_string()),
        other => RunError::Config(other.to_string()),
    }
}

fn cohom_err(e: cominuscule_core::cohomology::CohomologyError) -> RunError {
    RunError::Config(e.to_string())
}

fn run_target(label: TypeLabel, rank: usize, config: &RunConfig) -> Result<Vec<CaseOut>, RunError> {
    let rs = Arc::new(RootSystem::build(label, rank).map_err(|e| RunError::Config(e.to_string()))?);
    let mut cases = Vec::new();
    let needs_lie = config.checks.contains(&CheckKind::Cohomology)
        || config.checks.contains(&CheckKind::Constructions);
    let lie = if needs_lie && pinned_v_word(&rs).is_some() {
        Some(LieAlgebra::build(&rs).map_err(|e| RunError::Config(e.to_string()))?)
    } else {
        None
    };
    for kind in &config.checks {
        match kind {
            CheckKind::Tables => cases.push(case_tables(&rs)),
            CheckKind::Translators => cases.push(case_translators(&rs)?),
            CheckKind::Words => match case_words(&rs) {
                Some(c) => cases.push(c),
                None => cases.push(CaseOut::skipped(
                    format!("{label}{rank}/words"),
                    "no pinned translator words for this type",
                )),
            },
            CheckKind::F4Roots => {
                if let Some(c) = case_f4_roots(&rs) {
                    cases.push(c);
                }
            }
            CheckKind::Cohomology => match &lie {
                Some(l) => {
                    if let Some(c) = case_cohomology(l, config.word_override.as_deref())? {
                        cases.push(c)
                    }
                }
                None => cases.push(CaseOut::skipped(
                    format!("{label}{rank}/cohomology"),
                    "no pinned chain for this type",
                )),
            },
            CheckKind::Constructions => match &lie {
                Some(l) => {
                    if let Some(list) = case_constructions(l)? {
                        cases.extend(list);
                    }
                }
                None => cases.push(CaseOut::skipped(
                    format!("{label}{rank}/constructions"),
                    "no constructed classes for simply-laced types",
                )),
            },
            CheckKind::Scans => cases.extend(case_scans(&rs, config.budget)?),
        }
    }
    Ok(cases)
}

fn render_markdown(report: &Report) -> String {
    let mut s = String::new();
    s.push_str("# Verification report\n\n");
    s.push_str(&format!(
        "version {} — {}\n\n",
        report.version, report.timestamp
    ));
    for case in &report.cases {
        let status = if case.skipped {
            "skipped"
        } else if case.overall {
            "pass"
        } else {
            "FAIL"
        };
        s.push_str(&format!("## {} — {}\n\n", case.id, status));
        if !case.checks.is_empty() {
            s.push_str("| check | anchor | pass | witness |\n|---|---|---|---|\n");
            for c in &case.checks {
                s.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    c.name,
                    c.anchor,
                    if c.pass { "yes" } else { "NO" },
                    c.witness.replace('|', "\\|")
                ));
            }
            s.push('\n');
        }
        if !case.assumptions.is_empty() {
            s.push_str("Imported assumptions:\n");
            for a in &case.assumptions {
                s.push_str(&format!("- {a}\n"));
            }
            s.push('\n');
        }
    }
    s.push_str(&format!(
        "## Summary\n\npassed {}, failed {}, skipped {}\n",
        report.summary.passed, report.summary.failed, report.summary.skipped
    ));
    s
}

pub fn run_verify(args: VerifyArgs) -> Result<u8, RunError> {
    let config = build_config(args)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| RunError::Config(e.to_string()))?;
    let results: Vec<Result<Vec<CaseOut>, RunError>> = pool.install(|| {
        config
            .targets
            .par_iter()
            .map(|&(label, rank)| run_target(label, rank, &config))
            .collect()
    });
    let mut cases = Vec::new();
    for r in results {
        cases.extend(r?);
    }
    cases.sort_by(|a, b| a.id.cmp(&b.id));

    let mut summary = Summary {
        passed: 0,
        failed: 0,
        skipped: 0,
    };
    for c in &cases {
        if c.skipped {
            summary.skipped += 1;
        } else if c.overall {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
    }
    let failed = summary.failed;
    let report = Report {
        version: "1".to_string(),
        timestamp: chrono::Utc::now().to_rfc3339(),
        cases,
        summary,
    };
    let body = match config.format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&report).map_err(|e| RunError::Io(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Markdown => render_markdown(&report),
    };
    match &config.out {
        Some(path) => {
            let mut f = std::fs::File::create(path).map_err(|e| RunError::Io(e.to_string()))?;
            f.write_all(body.as_bytes())
                .map_err(|e| RunError::Io(e.to_string()))?;
            eprintln!(
                "report written to {} ({} passed, {} failed, {} skipped)",
                path.display(),
                report.summary.passed,
                report.summary.failed,
                report.summary.skipped
            );
        }
        None => {
            print!("{body}");
        }
    }
    Ok(if failed > 0 { 2 } else { 0 })
}

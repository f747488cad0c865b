//! Command-line front end. JSON on stdout, prose on stderr (--explain),
//! exit codes: 0 success, 3 negative-but-valid, 2 usage, 1 internal.

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use richelt::chevalley::ChevalleyAlgebra;
use richelt::parabolic::{enumerate_nice, BlockParabolic};
use richelt::recipe::{build_xr, is_star_form};
use richelt::roots::{LieFamily, LieType, RootSystem};
use richelt::tables::{load_table, search_simple_support, verify_row, TableRow};
use richelt::verify::{
    bracket_image_dim, centralizer_dim_direct, centralizer_dim_formula, generic_centralizer_dim,
    is_richardson, jordan_data,
};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "richelt", version, about = "Normal-form Richardson elements in g_1")]
struct Cli {
    /// print a human-readable summary on stderr
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Selector {
    /// Lie type: a family letter (A, B, C, D; rank inferred from the
    /// blocks) or a full type such as C3
    #[arg(long = "type")]
    lie_type: String,
    /// block lengths of the standard Levi, e.g. 1,2,1
    #[arg(long, value_delimiter = ',')]
    blocks: Option<Vec<usize>>,
    /// crossing tuple over the simple roots, e.g. 1,1,0
    #[arg(long, value_delimiter = ',')]
    tuple: Option<Vec<u8>>,
    /// also run the seeded generic-element oracle and report its verdict
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide niceness from the block-length sequence
    Classify(Selector),
    /// Build the normal-form element X_R
    Construct(Selector),
    /// Build X_R and verify the Richardson property in exact arithmetic
    Verify(Selector),
    /// Report the support of X_R and its root-system structure
    Support(Selector),
    /// Verify every nice parabolic of a family up to a rank bound
    Scan {
        #[arg(long = "type")]
        lie_type: String,
        #[arg(long)]
        max_rank: usize,
        /// worker threads (results are still reported in descriptor order)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Verify rows of the exceptional tables
    Exceptional {
        /// verify every row
        #[arg(long, conflicts_with = "case")]
        all: bool,
        /// a single row, e.g. E6:110100
        #[arg(long)]
        case: Option<String>,
    },
    /// Exhaustive search for a simple-support Richardson element in g_1
    Search {
        /// algebra and crossing tuple, e.g. G2:10
        #[arg(long)]
        case: String,
        /// node budget before reporting bounded evidence
        #[arg(long, default_value_t = 1_000_000)]
        cutoff: u64,
    },
}

/// Error carrying the intended exit code.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<richelt::Error> for Failure {
    fn from(e: richelt::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(Value, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with 2 on usage errors
    let explain = cli.explain;
    let out = match run(cli) {
        Ok((value, code)) => {
            println!("{}", serde_json::to_string(&value).expect("serializable report"));
            if explain {
                explain_report(&value);
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            1
        }
    };
    ExitCode::from(out)
}

fn run(cli: Cli) -> CmdResult {
    match cli.cmd {
        Cmd::Classify(sel) => classify(&sel),
        Cmd::Construct(sel) => construct(&sel),
        Cmd::Verify(sel) => verify(&sel),
        Cmd::Support(sel) => support(&sel),
        Cmd::Scan { lie_type, max_rank, jobs } => scan(&lie_type, max_rank, jobs),
        Cmd::Exceptional { all, case } => exceptional(all, case.as_deref()),
        Cmd::Search { case, cutoff } => search(&case, cutoff),
    }
}

fn explain_report(v: &Value) {
    let cmd = v["command"].as_str().unwrap_or("?");
    match cmd {
        "classify" => eprintln!(
            "{} {} is {}nice ({})",
            v["type"].as_str().unwrap_or("?"),
            v["blocks"],
            if v["nice"].as_bool().unwrap_or(false) { "" } else { "not " },
            v["rule"].as_str().unwrap_or("?")
        ),
        "construct" => eprintln!(
            "X_R for {} {} has {} entries with support {}",
            v["type"].as_str().unwrap_or("?"),
            v["blocks"],
            v["entries"].as_array().map_or(0, |a| a.len()),
            v["support"]
        ),
        "verify" => eprintln!(
            "X_R has Jordan type {}, centralizer {} (Levi {}), richardson: {}",
            v["jordan"]["partition"], v["centralizer_direct"], v["levi_dim"], v["richardson"]
        ),
        "support" => eprintln!(
            "support {} / simple system: {}, factors {}",
            v["support"], v["simple_system"], v["factors"]
        ),
        "scan" => eprintln!(
            "scanned {} nice parabolics, {} passed, {} failed",
            v["total"],
            v["passed"],
            v["failed"].as_array().map_or(0, |a| a.len())
        ),
        "exceptional" => eprintln!(
            "{} rows checked, all pass: {}",
            v["rows"].as_array().map_or(0, |a| a.len()),
            v["all_pass"]
        ),
        "search" => eprintln!(
            "search over {} explored {} nodes: {}",
            v["case"].as_str().unwrap_or("?"),
            v["nodes_explored"],
            if v["found"].is_null() { "no simple support found" } else { "found" }
        ),
        _ => {}
    }
}

/// Infer the rank a block sequence determines for the given family.
fn rank_for_blocks(family: LieFamily, blocks: &[usize]) -> Result<usize, Failure> {
    let n: usize = blocks.iter().sum();
    let bad = |m: &str| Failure::Usage(format!("blocks {blocks:?}: {m}"));
    match family {
        LieFamily::A => Ok(n.checked_sub(1).ok_or_else(|| bad("empty"))?),
        LieFamily::B => {
            if n % 2 == 0 {
                return Err(bad("so_N with these blocks needs odd N"));
            }
            Ok((n - 1) / 2)
        }
        LieFamily::C | LieFamily::D => {
            if n % 2 == 1 {
                return Err(bad("sp_N/so_N with these blocks needs even N"));
            }
            Ok(n / 2)
        }
        _ => Err(bad("exceptional types take --tuple, not --blocks")),
    }
}

fn resolve(sel: &Selector) -> Result<BlockParabolic, Failure> {
    let s = sel.lie_type.trim();
    match (&sel.blocks, &sel.tuple) {
        (Some(blocks), None) => {
            let family = LieFamily::parse(&s[..1])?;
            let rank = rank_for_blocks(family, blocks)?;
            if s.len() > 1 {
                let t = LieType::parse(s)?;
                if t.rank != rank {
                    return Err(Failure::Usage(format!(
                        "blocks {blocks:?} determine rank {rank}, not {t}"
                    )));
                }
            }
            Ok(BlockParabolic::new(LieType::new(family, rank)?, blocks.clone())?)
        }
        (None, Some(tuple)) => {
            let t = if s.len() == 1 {
                LieType::new(LieFamily::parse(s)?, tuple.len())?
            } else {
                LieType::parse(s)?
            };
            if !t.is_classical() {
                return Err(Failure::Usage(format!(
                    "{t} is exceptional; use the `exceptional` or `search` subcommand"
                )));
            }
            Ok(BlockParabolic::from_tuple(t, tuple)?)
        }
        _ => Err(Failure::Usage("give exactly one of --blocks or --tuple".into())),
    }
}

/// Which classification clause decides the parabolic.
fn rule_name(p: &BlockParabolic) -> &'static str {
    if !p.is_nice() {
        return "not-nice";
    }
    match p.lie_type().family {
        LieFamily::A | LieFamily::C => "A/C-unimodal",
        LieFamily::B => "B-pattern",
        LieFamily::D => {
            if richelt::parabolic::is_unimodal(&p.blocks) {
                if p.blocks.len() % 2 == 1 {
                    "D-case1"
                } else {
                    "D-case2"
                }
            } else {
                "D-case3"
            }
        }
        _ => unreachable!("classical families only"),
    }
}

fn oracle_field(p: &BlockParabolic, seed: Option<u64>) -> Result<Value, Failure> {
    Ok(match seed {
        None => Value::Null,
        Some(s) => {
            let d = generic_centralizer_dim(p, &[s, s + 1, s + 2])
                .map_err(|e| Failure::Internal(e.to_string()))?;
            json!({"generic_centralizer": d, "nice": d == p.levi_dim()})
        }
    })
}

fn classify(sel: &Selector) -> CmdResult {
    let p = resolve(sel)?;
    let nice = p.is_nice();
    let report = json!({
        "command": "classify",
        "type": p.lie_type().to_string(),
        "blocks": p.blocks,
        "nice": nice,
        "rule": rule_name(&p),
        "levi_dim": p.levi_dim(),
        "nilradical_dim": p.nilradical_dim(),
        "oracle": oracle_field(&p, sel.seed)?,
    });
    Ok((report, if nice { 0 } else { 3 }))
}

fn construct(sel: &Selector) -> CmdResult {
    let p = resolve(sel)?;
    if !p.is_nice() {
        return Ok((
            json!({"command": "construct", "type": p.lie_type().to_string(),
                   "blocks": p.blocks, "nice": false}),
            3,
        ));
    }
    let x = build_xr(&p).map_err(|e| Failure::Internal(e.to_string()))?;
    let mut report = serde_json::to_value(x.report(true)).expect("serializable report");
    let obj = report.as_object_mut().expect("object report");
    obj.insert("command".into(), json!("construct"));
    obj.insert("type".into(), json!(p.lie_type().to_string()));
    obj.insert("nice".into(), json!(true));
    Ok((report, 0))
}

fn verify(sel: &Selector) -> CmdResult {
    let p = resolve(sel)?;
    if !p.is_nice() {
        return Ok((
            json!({"command": "verify", "type": p.lie_type().to_string(),
                   "blocks": p.blocks, "nice": false}),
            3,
        ));
    }
    let x = build_xr(&p).map_err(|e| Failure::Internal(e.to_string()))?;
    let m = x.matrix();
    let internal = |e: richelt::Error| Failure::Internal(e.to_string());
    let jd = jordan_data(&m).map_err(internal)?;
    let direct = centralizer_dim_direct(&p.model, &m).map_err(internal)?;
    let formula = centralizer_dim_formula(p.lie_type().family, &jd.partition).map_err(internal)?;
    let bracket = bracket_image_dim(&p, &m).map_err(internal)?;
    let richardson = is_richardson(&p, &m).map_err(internal)?;
    let report = json!({
        "command": "verify",
        "type": p.lie_type().to_string(),
        "blocks": p.blocks,
        "nice": true,
        "entries": x.report(true).entries,
        "support": x.report(true).support,
        "hat_applied": x.hat_applied,
        "jordan": jd,
        "centralizer_direct": direct,
        "centralizer_formula": formula,
        "levi_dim": p.levi_dim(),
        "bracket_image_dim": bracket,
        "nilradical_dim": p.nilradical_dim(),
        "richardson": richardson,
        "oracle": oracle_field(&p, sel.seed)?,
    });
    Ok((report, if richardson { 0 } else { 3 }))
}

fn support(sel: &Selector) -> CmdResult {
    let p = resolve(sel)?;
    if !p.is_nice() {
        return Ok((
            json!({"command": "support", "type": p.lie_type().to_string(),
                   "blocks": p.blocks, "nice": false}),
            3,
        ));
    }
    let x = build_xr(&p).map_err(|e| Failure::Internal(e.to_string()))?;
    let rs = RootSystem::build(p.lie_type());
    let ss = rs.support_set(x.support());
    let factors: Vec<String> = ss
        .factor_decomposition()
        .iter()
        .map(|c| c.lie_type.map_or_else(|| "?".into(), |t| t.to_string()))
        .collect();
    let star = match p.lie_type().family {
        LieFamily::B | LieFamily::D => Some(is_star_form(&p)?),
        _ => None,
    };
    let pair = ss.subtracting_pair().map(|(a, b)| vec![a.to_string(), b.to_string()]);
    let report = json!({
        "command": "support",
        "type": p.lie_type().to_string(),
        "blocks": p.blocks,
        "nice": true,
        "support": x.support().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "simple_system": ss.is_simple_system(),
        "factors": factors,
        "star_form": star,
        "subtracting_pair": pair,
    });
    Ok((report, 0))
}

/// Ranks a family scan covers; rank 1 falls back to the isomorphic sl_2
/// (sp_2 and so_3) so low rank bounds still exercise something.
fn scan_types(family: LieFamily, max_rank: usize) -> Vec<LieType> {
    (1..=max_rank)
        .filter_map(|r| {
            LieType::new(family, r).ok().or_else(|| {
                if r == 1 && matches!(family, LieFamily::B | LieFamily::C) {
                    Some(LieType::new(LieFamily::A, 1).expect("A1 exists"))
                } else {
                    None
                }
            })
        })
        .collect()
}

fn scan(lie_type: &str, max_rank: usize, jobs: Option<usize>) -> CmdResult {
    let family = LieFamily::parse(lie_type)?;
    if !matches!(family, LieFamily::A | LieFamily::B | LieFamily::C | LieFamily::D) {
        return Err(Failure::Usage(format!(
            "scan covers the classical families; got {lie_type}"
        )));
    }
    if let Some(k) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let mut work = Vec::new();
    for t in scan_types(family, max_rank) {
        for p in enumerate_nice(t)? {
            work.push(p);
        }
    }
    let results: Vec<(Value, bool)> = work
        .par_iter()
        .map(|p| {
            let label = json!({"type": p.lie_type().to_string(), "blocks": p.blocks});
            match build_xr(p).and_then(|x| is_richardson(p, &x.matrix())) {
                Ok(true) => (label, true),
                Ok(false) => (label, false),
                Err(e) => (json!({"descriptor": label, "error": e.to_string()}), false),
            }
        })
        .collect();
    let failed: Vec<Value> = results
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(v, _)| v.clone())
        .collect();
    let total = results.len();
    let passed = total - failed.len();
    let ok = failed.is_empty();
    let report = json!({
        "command": "scan",
        "family": family.to_string(),
        "max_rank": max_rank,
        "total": total,
        "passed": passed,
        "failed": failed,
    });
    Ok((report, if ok { 0 } else { 3 }))
}

fn parse_case(case: &str) -> Result<(LieType, Vec<u8>), Failure> {
    let (t, u) = case
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("expected TYPE:TUPLE, got {case:?}")))?;
    let t = LieType::parse(t)?;
    let tuple: Vec<u8> = u
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Failure::Usage(format!("tuple digit {other:?} in {case:?}"))),
        })
        .collect::<Result<_, _>>()?;
    if tuple.len() != t.rank {
        return Err(Failure::Usage(format!(
            "{t} needs a tuple of length {}, got {}",
            t.rank,
            tuple.len()
        )));
    }
    Ok((t, tuple))
}

fn row_value(t: LieType, row: &TableRow, alg: &ChevalleyAlgebra) -> Result<(Value, bool), Failure> {
    if row.expects_none {
        return Ok((
            json!({"algebra": t.to_string(), "tuple": row.tuple,
                   "expects_none": true,
                   "note": "no normal form is claimed for this row; see the search subcommand"}),
            true,
        ));
    }
    let rep = verify_row(alg, row).map_err(|e| Failure::Internal(e.to_string()))?;
    let pass = rep.pass;
    Ok((serde_json::to_value(rep).expect("serializable report"), pass))
}

fn exceptional(all: bool, case: Option<&str>) -> CmdResult {
    let table = load_table().map_err(|e| Failure::Internal(e.to_string()))?;
    let mut rows = Vec::new();
    let mut all_pass = true;
    if all {
        for name in ["G2", "F4", "E6", "E7", "E8"] {
            let t = LieType::parse(name).expect("fixed type names");
            let picked: Vec<&TableRow> = table.iter().filter(|r| r.algebra == name).collect();
            if picked.is_empty() {
                continue;
            }
            let alg = ChevalleyAlgebra::build(t).map_err(|e| Failure::Internal(e.to_string()))?;
            for row in picked {
                let (v, pass) = row_value(t, row, &alg)?;
                all_pass &= pass;
                rows.push(v);
            }
        }
    } else {
        let case = case.ok_or_else(|| Failure::Usage("give --all or --case".into()))?;
        let (t, tuple) = parse_case(case)?;
        let row = table
            .iter()
            .find(|r| r.algebra == t.to_string() && r.tuple == tuple)
            .ok_or_else(|| Failure::Usage(format!("no table row for {case}")))?;
        let alg = ChevalleyAlgebra::build(t).map_err(|e| Failure::Internal(e.to_string()))?;
        let (v, pass) = row_value(t, row, &alg)?;
        all_pass &= pass;
        rows.push(v);
    }
    let report = json!({
        "command": "exceptional",
        "rows": rows,
        "all_pass": all_pass,
    });
    Ok((report, if all_pass { 0 } else { 3 }))
}

fn search(case: &str, cutoff: u64) -> CmdResult {
    let (t, tuple) = parse_case(case)?;
    let alg = ChevalleyAlgebra::build(t).map_err(|e| Failure::Internal(e.to_string()))?;
    let rep =
        search_simple_support(&alg, &tuple, cutoff).map_err(|e| Failure::Internal(e.to_string()))?;
    let found = rep.found.is_some();
    let mut report = serde_json::to_value(&rep).expect("serializable report");
    let obj = report.as_object_mut().expect("object report");
    obj.insert("command".into(), json!("search"));
    obj.insert("case".into(), json!(case));
    Ok((report, if found { 0 } else { 3 }))
}

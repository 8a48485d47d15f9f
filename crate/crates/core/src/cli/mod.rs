//! Batch command-line front end. Every JSON report embeds a [`RunManifest`].

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cartan::{build_datum, Family};
use crate::morphisms::{map_by_name, solve_c, CSolution, GeneratorMap};
use crate::presentations::{chevalley_relations, drinfeld_relations, kappa_hat, Presentation};
use crate::scalars::{o_sign_power, structure_coeff};
use crate::superalg::{format_element, parse_element, parse_scalar, Algebra, Style};
use crate::verify::{check_morphism, Budget, RelationFilter};

const FAMILY_HELP: &str = "osp1 = osp(1|2n)^(1), sl2 = sl(1|2n)^(2), osp2-2 = osp(2|2n)^(2), \
a2n2 = A_2n^(2), bn1 = B_n^(1), dn12 = D_{n+1}^(2)";

#[derive(Parser, Debug)]
#[command(name = "qasa", version, about = "Exact algebra for quantum affine superalgebras and their Drinfeld realisations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Drop the timings block from JSON output.
    #[arg(long, global = true)]
    pub no_timings: bool,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    #[arg(long, help = FAMILY_HELP)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StyleArg {
    Chevalley,
    Drinfeld,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum MapName {
    Psi,
    Phi,
    PhiInv,
    Rho,
    #[value(name = "Psi")]
    PsiCap,
    #[value(name = "Psi-composed")]
    PsiComposed,
}

impl MapName {
    fn as_str(self) -> &'static str {
        match self {
            MapName::Psi => "psi",
            MapName::Phi => "phi",
            MapName::PhiInv => "phi-inv",
            MapName::Rho => "rho",
            MapName::PsiCap => "Psi",
            MapName::PsiComposed => "Psi-composed",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root data as JSON.
    Cartan {
        #[command(subcommand)]
        action: CartanAction,
    },
    /// Instantiated relation catalogue.
    Relations {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        style: StyleArg,
        /// Loop window (Drinfeld only).
        #[arg(long)]
        window: Option<i32>,
        /// Add the sign group and its relations.
        #[arg(long)]
        smash: bool,
    },
    /// Image of an expression under a generator map.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        apply: String,
    },
    /// Relation preservation of a map at a bound.
    Check {
        #[arg(long, value_enum)]
        map: MapName,
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        window: i32,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long)]
        max_basis: Option<usize>,
        #[arg(long)]
        max_rounds: Option<usize>,
        /// Comma-separated relation names; a trailing `*` matches a prefix.
        #[arg(long, value_delimiter = ',')]
        relations: Option<Vec<String>>,
        /// Value substituted for the symbolic constant c.
        #[arg(long)]
        c: Option<String>,
    },
    /// Structure constants u and u' with the sign factors o(i)^{cr}.
    UTable {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        r_max: i32,
    },
    /// Expansion of κ̂^±_{i,m}.
    KappaHat {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        node: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value = "+")]
        sign: String,
        #[arg(long)]
        order: Option<i32>,
    },
    /// Solve for the constant c in the image of f_0.
    SolveC {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        window: i32,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long)]
        max_rounds: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CartanAction {
    Dump {
        #[command(flatten)]
        target: Target,
    },
}

/// Everything needed to reproduce a run.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RunManifest {
    pub command: String,
    pub family: Family,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub style: Option<Style>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<Budget>,
    pub format: &'static str,
}

/// Exit code and rendered output of one command.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

struct Report {
    manifest: RunManifest,
    result: Value,
    text: String,
    ok: bool,
}

fn manifest(cli: &Cli, command: &str, t: &Target) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        family: t.family,
        rank: t.rank,
        style: None,
        map: None,
        window: None,
        budget: None,
        format: if cli.json { "json" } else { "text" },
    }
}

fn check_rank(t: &Target) -> Result<(), UsageError> {
    build_datum(t.family, t.rank).map(|_| ()).map_err(usage)
}

/// Source and target presentations a map is checked between.
pub fn map_presentations(map: &GeneratorMap, window: i32) -> Result<(Presentation, Presentation), UsageError> {
    let build = |a: &Algebra| match a.style() {
        Style::Chevalley => chevalley_relations(a.family(), a.rank(), a.is_smash()),
        Style::Drinfeld => drinfeld_relations(a.family(), a.rank(), window, a.is_smash()),
    };
    Ok((build(&map.source).map_err(usage)?, build(&map.target).map_err(usage)?))
}

fn run_command(cli: &Cli) -> Result<Report, UsageError> {
    let started = Instant::now();
    let mut report = match &cli.command {
        Command::Cartan { action: CartanAction::Dump { target } } => {
            let d = build_datum(target.family, target.rank).map_err(usage)?;
            let result = serde_json::to_value(&d).expect("serializable");
            let text = serde_json::to_string_pretty(&result).expect("serializable");
            Report { manifest: manifest(cli, "cartan dump", target), result, text, ok: true }
        }
        Command::Relations { target, style, window, smash } => {
            check_rank(target)?;
            let pres = match style {
                StyleArg::Chevalley => chevalley_relations(target.family, target.rank, *smash),
                StyleArg::Drinfeld => {
                    let w = window.ok_or_else(|| UsageError("--window is required for --style drinfeld".into()))?;
                    drinfeld_relations(target.family, target.rank, w, *smash)
                }
            }
            .map_err(usage)?;
            let rels = pres.report();
            let text = rels.iter().map(|r| format!("{}: {}", r.name, r.element)).collect::<Vec<_>>().join("\n");
            let text = pres.relations.iter().zip(text.lines()).map(|(r, l)| format!("{r}{}", &l[r.name.len()..])).collect::<Vec<_>>().join("\n");
            let mut m = manifest(cli, "relations", target);
            m.style = Some(pres.style());
            m.window = pres.window;
            Report { manifest: m, result: json!({ "count": rels.len(), "relations": rels }), text, ok: true }
        }
        Command::Map { name, target, apply } => {
            check_rank(target)?;
            let map = map_by_name(name.as_str(), target.family, target.rank).map_err(usage)?;
            let x = parse_element(&map.source, apply).map_err(usage)?;
            let y = map.apply(&x).map_err(usage)?;
            let mut m = manifest(cli, "map", target);
            m.map = Some(name.as_str().to_string());
            let out = format_element(&y);
            Report {
                manifest: m,
                result: json!({ "source": map.source.tag(), "target": map.target.tag(), "input": format_element(&x), "image": out }),
                text: out,
                ok: true,
            }
        }
        Command::Check { map, target, window, max_len, max_steps, max_basis, max_rounds, relations, c } => {
            check_rank(target)?;
            let mut gm = map_by_name(map.as_str(), target.family, target.rank).map_err(usage)?;
            if let Some(c) = c {
                gm = gm.with_constant(parse_scalar(c).map_err(usage)?);
            }
            let (src, tgt) = map_presentations(&gm, *window)?;
            let d = Budget::default();
            let budget = Budget {
                max_len: *max_len,
                window: None,
                max_steps: max_steps.unwrap_or(d.max_steps),
                max_basis: max_basis.unwrap_or(d.max_basis),
                max_rounds: max_rounds.unwrap_or(d.max_rounds),
            };
            let filter = RelationFilter { names: relations.clone(), skip_structural: false };
            let mut r = check_morphism(&gm, &src, &tgt, &filter, &budget).map_err(usage)?;
            if cli.no_timings {
                r.strip_timings();
            }
            let mut m = manifest(cli, "check", target);
            m.map = Some(map.as_str().to_string());
            m.window = Some(*window);
            m.budget = Some(budget);
            let mut text: Vec<String> = r
                .summaries
                .iter()
                .map(|s| {
                    format!(
                        "{:<12} {:>5} instances  {:>5} verified  {:>3} nonzero  {:>3} budget",
                        s.name, s.instances, s.verified, s.nonzero_at_bound, s.budget_exceeded
                    )
                })
                .collect();
            for i in r.instances.iter().filter(|i| i.verdict != "verified") {
                text.push(format!("  {} {}", i.verdict, i.relation));
            }
            text.push(if r.all_verified { "all verified".into() } else { "NOT all verified".into() });
            let ok = r.all_verified;
            Report { manifest: m, result: serde_json::to_value(&r).expect("serializable"), text: text.join("\n"), ok }
        }
        Command::UTable { target, r_max } => {
            check_rank(target)?;
            let sup = if target.family.is_super() { target.family } else { target.family.partner() };
            let d = build_datum(sup, target.rank).map_err(usage)?;
            let dd = build_datum(sup.partner(), target.rank).map_err(usage)?;
            let loops = d.loop_set();
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for i in 1..=target.rank {
                for j in 1..=target.rank {
                    for r in (1..=*r_max).flat_map(|r| [r, -r]) {
                        if !loops.contains_star(i, r) || !loops.contains_star(j, r) {
                            continue;
                        }
                        let u = structure_coeff(&d, i, j, r);
                        let up = structure_coeff(&dd, i, j, r);
                        let sign = |k| o_sign_power(target.rank, sup, k, r).map(|z| z.to_string()).unwrap_or_default();
                        text.push(format!("u[{i},{j},{r}] = {u}    u'[{i},{j},{r}] = {up}"));
                        rows.push(json!({ "i": i, "j": j, "r": r, "u": u.to_string(), "u_prime": up.to_string(), "o_i": sign(i), "o_j": sign(j) }));
                    }
                }
            }
            Report { manifest: manifest(cli, "u-table", target), result: json!({ "entries": rows }), text: text.join("\n"), ok: true }
        }
        Command::KappaHat { target, node, m, sign, order } => {
            check_rank(target)?;
            let s = match sign.as_str() {
                "+" | "plus" => 1,
                "-" | "minus" => -1,
                other => return Err(UsageError(format!("--sign must be + or -, got {other}"))),
            };
            if *node < 1 || *node > target.rank {
                return Err(UsageError(format!("--node must lie in 1..={}", target.rank)));
            }
            let alg = Algebra::new(target.family, target.rank, Style::Drinfeld, false).map_err(usage)?;
            let x = kappa_hat(&alg, s, *node, *m, order.unwrap_or(m.abs())).map_err(usage)?;
            let out = format_element(&x);
            Report { manifest: manifest(cli, "kappa-hat", target), result: json!({ "element": out }), text: out, ok: true }
        }
        Command::SolveC { target, window, max_len, max_rounds } => {
            check_rank(target)?;
            let sup = if target.family.is_super() { target.family } else { target.family.partner() };
            let budget = Budget { max_len: *max_len, max_rounds: max_rounds.unwrap_or(Budget::default().max_rounds), ..Budget::default() };
            let r = solve_c(sup, target.rank, *window, &budget).map_err(usage)?;
            let (value, ok) = match &r {
                CSolution::Solved { c, .. } => (Some(c.to_string()), true),
                CSolution::Inconclusive => (None, false),
            };
            let mut m = manifest(cli, "solve-c", target);
            m.window = Some(*window);
            m.budget = Some(budget);
            let text = value.clone().map(|c| format!("c = {c}")).unwrap_or_else(|| "inconclusive".into());
            Report { manifest: m, result: json!({ "c": value }), text, ok }
        }
    };
    if !cli.json {
        return Ok(report);
    }
    let mut doc = json!({ "manifest": report.manifest, "result": report.result });
    if !cli.no_timings {
        doc["timings"] = json!({ "total_ms": started.elapsed().as_secs_f64() * 1e3 });
    }
    report.text = serde_json::to_string_pretty(&doc).expect("serializable");
    Ok(report)
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    let go = || run_command(cli);
    let report = match cli.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().map_err(usage)?.install(go)?,
        None => go()?,
    };
    Ok(Outcome { code: if report.ok { 0 } else { 1 }, stdout: report.text })
}

/// Parses `args` (program name first) and runs; usage errors give exit 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli).unwrap_or_else(|e| Outcome { code: 2, stdout: format!("error: {e}") }),
        Err(e) => Outcome { code: if e.use_stderr() { 2 } else { 0 }, stdout: e.to_string() },
    }
}

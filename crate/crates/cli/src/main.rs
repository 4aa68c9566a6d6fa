mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use skewposet::config::{caps, set_caps, Caps};
use skewposet::hecke::{end_semisimple_dim, inj_hull, is_indecomposable, is_isomorphic, proj_cover, CoverWitness};
use skewposet::poset::{kp_fundamental, kp_monomial, schur_recognize, LabeledPoset};
use skewposet::qsym::{schur_expand, QSym};
use skewposet::shape::GeneralizedComposition;
use skewposet::structure::{distinguished_filtration, equivalence_class, is_rsp, FiltrationOrder};
use skewposet::symgrp::{weak_interval, Side, WeakInterval};
use skewposet::tabx::{enumerate_syt, reading, rectify, rsk, BijectiveTableau};
use skewposet::verify::{self, Level, Params};
use skewposet::{Error, Result};

use input::ModuleSpec;

#[derive(Parser)]
#[command(name = "skewposet", version, about = "Skew shape posets, weak Bruhat intervals and 0-Hecke modules")]
struct Cli {
    /// Output format; not every command supports dot or table.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, env = "SKEWPOSET_CAP_N")]
    cap_n: Option<usize>,
    #[arg(long, global = true, env = "SKEWPOSET_CAP_DIM")]
    cap_dim: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Subcommand)]
enum Cmd {
    #[command(subcommand)]
    Poset(PosetCmd),
    #[command(subcommand)]
    Interval(IntervalCmd),
    #[command(subcommand)]
    Module(ModuleCmd),
    #[command(subcommand)]
    Shape(ShapeCmd),
    #[command(subcommand)]
    Tableau(TableauCmd),
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct PosetArg {
    /// `n:a<b,c<d` or poset JSON (inline or @file).
    #[arg(long)]
    poset: Option<String>,
    /// poset(τ) of a bijective filling such as "[[_,2,1],[3]]".
    #[arg(long)]
    tau: Option<String>,
    /// poset(τ₀) of a skew shape.
    #[arg(long)]
    shape: Option<String>,
}

impl PosetArg {
    fn spec(&self) -> Result<ModuleSpec> {
        match (&self.poset, &self.tau, &self.shape) {
            (Some(p), None, None) => Ok(ModuleSpec::Poset(input::poset(p)?)),
            (None, Some(t), None) => Ok(ModuleSpec::Tau(input::tableau(t)?)),
            (None, None, Some(s)) => Ok(ModuleSpec::Shape(input::shape(s)?)),
            _ => Err(Error::invalid("give exactly one of --poset, --tau, --shape")),
        }
    }

    fn get(&self) -> Result<LabeledPoset> {
        self.spec()?.poset()
    }
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Regularity, Schur recognition and RSP membership.
    CheckRegular(PosetArg),
    Linexts {
        #[command(flatten)]
        p: PosetArg,
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// τ_P, or null when P is not Schur labeled.
    Tau(PosetArg),
    /// K_P in the fundamental basis; with --monomial m, also as P-partitions in m variables.
    Kp {
        #[command(flatten)]
        p: PosetArg,
        #[arg(long)]
        monomial: Option<usize>,
    },
}

#[derive(Args)]
struct IntervalArg {
    #[arg(long)]
    bottom: Option<String>,
    #[arg(long)]
    top: Option<String>,
    #[arg(long, default_value = "left")]
    side: Side,
    /// Interval JSON (inline or @file) in place of --bottom/--top.
    #[arg(long)]
    json: Option<String>,
}

impl IntervalArg {
    fn get(&self) -> Result<WeakInterval> {
        match (&self.json, &self.bottom, &self.top) {
            (Some(j), None, None) => WeakInterval::from_json(&input::json(j)?),
            (None, Some(b), Some(t)) => weak_interval(&input::perm(b)?, &input::perm(t)?, self.side),
            _ => Err(Error::invalid("give --bottom and --top, or --json")),
        }
    }
}

#[derive(Subcommand)]
enum IntervalCmd {
    Compute(IntervalArg),
    /// ≃_D-class descriptor of a left interval.
    Class(IntervalArg),
    Dot(IntervalArg),
}

#[derive(Args)]
struct ModuleArg {
    /// `shape:`, `syt:`, `tau:`, `poset:`, `interval:σ..ρ`, `projective:`, `simple:`, `subset:` or `json:`.
    spec: Option<String>,
    #[command(flatten)]
    p: PosetArg,
}

impl ModuleArg {
    fn spec(&self) -> Result<ModuleSpec> {
        match &self.spec {
            Some(s) if self.p.poset.is_none() && self.p.tau.is_none() && self.p.shape.is_none() => s.parse(),
            Some(_) => Err(Error::invalid("give a module spec or a poset flag, not both")),
            None => self.p.spec(),
        }
    }
}

#[derive(Subcommand)]
enum ModuleCmd {
    Build(ModuleArg),
    /// Quasisymmetric characteristic and, when symmetric, its Schur expansion.
    Ch(ModuleArg),
    Cover(ModuleArg),
    Hull(ModuleArg),
    Iso {
        left: String,
        right: String,
    },
    Indecomp(ModuleArg),
    Filtration {
        #[command(flatten)]
        m: ModuleArg,
        /// JSON array of recording tableaux, first layer first.
        #[arg(long)]
        order: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BalKind {
    Proj,
    Inj,
}

#[derive(Subcommand)]
enum ShapeCmd {
    Bal {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = BalKind::Proj)]
        kind: BalKind,
    },
    Bracket {
        #[arg(long)]
        gen: String,
    },
    Predicates {
        #[arg(long)]
        shape: String,
    },
}

#[derive(Subcommand)]
enum TableauCmd {
    Enumerate {
        #[arg(long)]
        shape: String,
    },
    Rsk {
        #[arg(long)]
        perm: String,
    },
    Rectify {
        #[arg(long)]
        tableau: String,
    },
    Reading {
        #[arg(long)]
        tau: String,
        #[arg(long)]
        tableau: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Run {
        check: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        sample: Option<usize>,
    },
    Suite {
        #[arg(long, default_value = "fast")]
        level: Level,
        /// Also write the JSON lines to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Re-run a failure payload (inline JSON or @file).
    Replay { payload: String },
}

/// Command result: JSON data plus optional alternative renderings.
struct Output {
    json: Value,
    dot: Option<String>,
    text: Option<String>,
    failed: bool,
}

impl Output {
    fn json(json: Value) -> Output {
        Output { json, dot: None, text: None, failed: false }
    }
}

fn qsym_json(q: &QSym) -> Value {
    let schur = schur_expand(q).map(|e| {
        e.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| json!({"partition": l, "coef": c.to_string()}))
            .collect::<Vec<_>>()
    });
    json!({"f": q.to_string(), "terms": q.to_json()["terms"], "schur": schur})
}

fn cover_json(w: &CoverWitness) -> Value {
    json!({
        "gen": w.gen.to_string(),
        "dim": w.module.dim(),
        "source_dim": w.map.source.dim(),
        "target_dim": w.map.target.dim(),
        "rank": w.map.rank(),
        "matrix": w.map.matrix.to_rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn parse_order(arg: &str) -> Result<Vec<BijectiveTableau>> {
    let v = input::json(arg)?;
    let items = v.as_array().ok_or_else(|| Error::invalid("--order must be a JSON array"))?;
    items
        .iter()
        .map(|t| match t {
            Value::String(s) => s.parse(),
            other => BijectiveTableau::from_json(other),
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Output> {
    let seed = cli.seed;
    Ok(match &cli.cmd {
        Cmd::Poset(c) => match c {
            PosetCmd::CheckRegular(p) => {
                let p = p.get()?;
                let tau = schur_recognize(&p)?;
                Output::json(json!({
                    "poset": p.to_json(),
                    "regular": p.is_regular(),
                    "schur_labeled": tau.is_some(),
                    "rsp": is_rsp(&p)?,
                }))
            }
            PosetCmd::Linexts { p, side } => {
                let ext = p.get()?.linear_extensions(*side)?;
                Output::json(json!(ext.iter().map(|g| g.to_string()).collect::<Vec<_>>()))
            }
            PosetCmd::Tau(p) => {
                let tau = schur_recognize(&p.get()?)?;
                let mut out = Output::json(json!({"tau": tau.as_ref().map(BijectiveTableau::to_json)}));
                out.text = Some(tau.map_or("none".into(), |t| t.to_string()));
                out
            }
            PosetCmd::Kp { p, monomial } => {
                let p = p.get()?;
                let k = kp_fundamental(&p)?;
                let mut j = json!({"kp": qsym_json(&k)});
                if let Some(m) = monomial {
                    let table = kp_monomial(&p, *m)?;
                    j["monomial"] = json!(table
                        .iter()
                        .map(|(e, c)| json!({"exponents": e, "coef": c.to_string()}))
                        .collect::<Vec<_>>());
                }
                Output::json(j)
            }
        },
        Cmd::Interval(c) => match c {
            IntervalCmd::Compute(a) => {
                let iv = a.get()?;
                let mut j = iv.to_json();
                j["size"] = json!(iv.len());
                let mut out = Output::json(j);
                out.dot = Some(iv.to_dot());
                out
            }
            IntervalCmd::Class(a) => Output::json(equivalence_class(&a.get()?)?.to_json()),
            IntervalCmd::Dot(a) => {
                let iv = a.get()?;
                let dot = iv.to_dot();
                Output { json: json!({"dot": dot}), dot: Some(dot.clone()), text: Some(dot), failed: false }
            }
        },
        Cmd::Module(c) => match c {
            ModuleCmd::Build(a) => {
                let m = a.spec()?.build()?;
                let mut out = Output::json(m.to_json());
                out.dot = m.to_dot().ok();
                out
            }
            ModuleCmd::Ch(a) => {
                let m = a.spec()?.build()?;
                let ch = match m.characteristic() {
                    Ok(ch) => ch,
                    Err(_) => skewposet::hecke::composition_character(&m)?,
                };
                let mut out = Output::json(json!({"dim": m.dim(), "ch": qsym_json(&ch)}));
                out.text = Some(ch.to_string());
                out
            }
            ModuleCmd::Cover(a) => Output::json(cover_json(&proj_cover(&a.spec()?.poset()?)?)),
            ModuleCmd::Hull(a) => Output::json(cover_json(&inj_hull(&a.spec()?.poset()?, seed)?)),
            ModuleCmd::Iso { left, right } => {
                let (l, r) = (left.parse::<ModuleSpec>()?.build()?, right.parse::<ModuleSpec>()?.build()?);
                Output::json(is_isomorphic(&l, &r, seed)?.to_json())
            }
            ModuleCmd::Indecomp(a) => {
                let m = a.spec()?.build()?;
                Output::json(json!({
                    "dim": m.dim(),
                    "end_semisimple_dim": end_semisimple_dim(&m)?,
                    "indecomposable": is_indecomposable(&m)?,
                }))
            }
            ModuleCmd::Filtration { m, order } => {
                let p = m.spec()?.poset()?;
                let order = match order {
                    Some(o) => FiltrationOrder::Explicit(parse_order(o)?),
                    None => FiltrationOrder::Default,
                };
                let f = distinguished_filtration(&p, &order)?;
                let mut out = Output::json(f.to_json());
                let shapes: Vec<String> =
                    f.quotient_shapes.iter().map(|s| format!("s{}", s.iter().map(|x| x.to_string()).collect::<String>())).collect();
                out.text = Some(shapes.join(", "));
                out
            }
        },
        Cmd::Shape(c) => match c {
            ShapeCmd::Bal { shape, kind } => {
                let s = input::shape(shape)?;
                let g = match kind {
                    BalKind::Proj => s.bal_proj(),
                    BalKind::Inj => s.bal_inj(),
                };
                Output::json(json!({"shape": s.to_string(), "gen": g.to_string()}))
            }
            ShapeCmd::Bracket { gen } => {
                let g: GeneralizedComposition = input::parsed(gen)?;
                Output::json(json!(g.bracket().iter().map(|a| a.to_string()).collect::<Vec<_>>()))
            }
            ShapeCmd::Predicates { shape } => {
                let p = input::shape(shape)?.predicates();
                Output::json(json!({
                    "connected": p.connected,
                    "basic": p.basic,
                    "is_ribbon": p.is_ribbon,
                    "contains_disconnected_ribbon": p.contains_disconnected_ribbon,
                    "components": p.components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }))
            }
        },
        Cmd::Tableau(c) => match c {
            TableauCmd::Enumerate { shape } => {
                let ts = enumerate_syt(&input::shape(shape)?);
                let mut out = Output::json(json!(ts.iter().map(BijectiveTableau::to_json).collect::<Vec<_>>()));
                out.text = Some(ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n"));
                out
            }
            TableauCmd::Rsk { perm } => {
                let (p, q) = rsk(&input::perm(perm)?);
                Output::json(json!({"p": p.to_json(), "q": q.to_json()}))
            }
            TableauCmd::Rectify { tableau } => Output::json(rectify(&input::tableau(tableau)?)?.to_json()),
            TableauCmd::Reading { tau, tableau } => {
                let g = reading(&input::tableau(tau)?, &input::tableau(tableau)?)?;
                Output::json(json!(g.to_string()))
            }
        },
        Cmd::Verify(c) => match c {
            VerifyCmd::Run { check, n, sample } => {
                let params = Params { n: *n, seed, sample: *sample };
                let r = verify::run_check(check, &params)?;
                Output { json: r.to_json(), dot: None, text: Some(verify::summary_table(&[r.clone()])), failed: !r.passed() }
            }
            VerifyCmd::Suite { level, report } => {
                let reports = verify::run_suite(*level, seed)?;
                let lines: Vec<String> = reports.iter().map(|r| r.to_json_line()).collect();
                if let Some(path) = report {
                    std::fs::write(path, lines.join("\n") + "\n").map_err(|e| Error::internal(format!("{}: {e}", path.display())))?;
                }
                let table = verify::summary_table(&reports);
                if cli.format != Some(Format::Table) {
                    eprint!("{table}");
                }
                Output {
                    json: Value::Array(reports.iter().map(|r| r.to_json()).collect()),
                    dot: None,
                    text: Some(table),
                    failed: reports.iter().any(|r| !r.passed()),
                }
            }
            VerifyCmd::Replay { payload } => {
                let outcome = verify::replay(&input::json(payload)?)?;
                Output {
                    json: json!({"reproduced": outcome.is_some(), "reason": outcome}),
                    dot: None,
                    text: Some(outcome.clone().unwrap_or_else(|| "passes".into())),
                    failed: outcome.is_some(),
                }
            }
        },
    })
}

fn render_table(v: &Value) -> String {
    match v {
        Value::Object(map) => map.iter().map(|(k, x)| format!("{k}\t{}", compact(x))).collect::<Vec<_>>().join("\n"),
        Value::Array(items) => items.iter().map(compact).collect::<Vec<_>>().join("\n"),
        other => compact(other),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn print(cli: &Cli, out: &Output) -> Result<()> {
    let is_suite = matches!(cli.cmd, Cmd::Verify(VerifyCmd::Suite { .. }));
    match cli.format.unwrap_or(Format::Json) {
        Format::Json if is_suite => {
            for r in out.json.as_array().into_iter().flatten() {
                println!("{r}");
            }
        }
        Format::Json => println!("{}", out.json),
        Format::Dot => match &out.dot {
            Some(d) => print!("{d}"),
            None => return Err(Error::invalid("this command has no DOT output")),
        },
        Format::Table => match &out.text {
            Some(t) => println!("{}", t.trim_end()),
            None => println!("{}", render_table(&out.json)),
        },
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invalid(_) | Error::Cap(_) | Error::Relation(_) => 1,
        Error::Internal(_) => 2,
        Error::Check(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let current = caps();
    set_caps(Caps { max_n: cli.cap_n.unwrap_or(current.max_n), max_dim: cli.cap_dim.unwrap_or(current.max_dim) });
    let result = run(&cli).and_then(|out| print(&cli, &out).map(|_| out.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

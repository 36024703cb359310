//! `hopf12` — build, verify and export the objects of the library from the
//! command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when a verification
//! fails, 2 for usage errors (bad flags, unknown names). Every JSON document
//! carries a `schema` field and is rendered deterministically.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopf12::bosonization::{biproduct_report, BosonizationError};
use hopf12::catalog::{self, by_name, dual_table_diff, CatalogError};
use hopf12::hopfcore::{verify_hopf, Level, Perturbation};
use hopf12::nichols::{
    presented_basis, printed_presentation, quadratic_relations_match, render_tensor, report_from_stack,
    SymmetrizerStack, DEFAULT_MAXDEG, DEFAULT_TENSOR_BUDGET,
};
use hopf12::report::{full_report, ReportConfig};
use hopf12::repmod::{
    catalog_names, ext_table, is_indecomposable, is_simple, module_by_name, quiver_from_table, socle_top, RepError, RepType,
};
use hopf12::scalars::{Scalar, ThetaSign};
use hopf12::ydcat::{braiding_of, to_yd, verify_paper_tables};

const CLI_SCHEMA: &str = "hopf12.cli.v1";

#[derive(Parser, Debug)]
#[command(name = "hopf12", version, about = "Exact Hopf-algebra computations over Q(ξ), ξ a primitive 6th root of unity")]
struct Cli {
    /// Which square root of ξ − 1 is used as θ.
    #[arg(long, global = true, value_enum, default_value_t = Sign::Plus)]
    theta_sign: Sign,
    /// Highest degree for symmetrizer computations.
    #[arg(long, global = true)]
    maxdeg: Option<usize>,
    /// Largest tensor power dimension `dim V^n` the symmetrizer may build.
    #[arg(long, global = true, default_value_t = DEFAULT_TENSOR_BUDGET)]
    tensor_budget: usize,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also compare against the printed tables and statements.
    #[arg(long, global = true)]
    paper_check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sign {
    Plus,
    Minus,
}

impl From<Sign> for ThetaSign {
    fn from(s: Sign) -> ThetaSign {
        match s {
            Sign::Plus => ThetaSign::Plus,
            Sign::Minus => ThetaSign::Minus,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Catalog algebras: A0, A1, B0, B1, C, C*, Ccop, D, KZ2.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Modules over the double.
    Modules {
        #[command(subcommand)]
        action: ModulesCmd,
    },
    /// Yetter–Drinfeld structure and braidings.
    Yd {
        #[command(subcommand)]
        action: YdCmd,
    },
    /// Nichols algebra ranks, verdict and relations of a module's braiding.
    Nichols {
        #[arg(long)]
        module: String,
        /// List the relations that are new in each degree.
        #[arg(long)]
        relations: bool,
    },
    /// Radford biproduct B(V) # C.
    Bosonize {
        #[arg(long)]
        module: String,
        /// Check the printed relations and coproduct identities.
        #[arg(long)]
        verify_presentation: bool,
        /// Write the biproduct's structure constants to this file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// The whole acceptance suite as a single JSON document.
    FullReport,
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Structure constants as JSON.
    Export { name: String },
    /// Check every Hopf axiom exactly.
    Verify {
        name: String,
        /// `target:delta`, e.g. `mult:0,0,0:+1` (negative control).
        #[arg(long)]
        perturb: Option<String>,
        #[arg(long, default_value = "hopf")]
        level: String,
    },
}

#[derive(Subcommand, Debug)]
enum ModulesCmd {
    /// Every named module with its dimension and basic properties.
    List,
    /// Relations, simplicity, indecomposability, socle and top.
    Certify { name: String },
    /// dim Ext¹ between all 36 simples.
    ExtTable,
    /// Ext-quiver and representation-type verdict.
    Quiver {
        #[arg(long, value_enum, default_value_t = QuiverFormat::Json)]
        format: QuiverFormat,
        /// With `--format dot`, render the separated graph instead.
        #[arg(long)]
        separated: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum YdCmd {
    /// Coaction, braiding and YD certificate of one module.
    Braiding { module: String },
    /// Compare every printed coaction/braiding table with the computed one.
    VerifyPaper,
}

/// A usage error (exit 2) as opposed to a computation error.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

/// Unknown names are usage errors; everything else is a failure.
fn classify_rep(e: RepError) -> anyhow::Error {
    match e {
        RepError::UnknownModule(_) | RepError::NotInIndexSet(..) => usage(e.to_string()),
        other => anyhow!(other),
    }
}

fn classify_catalog(e: CatalogError) -> anyhow::Error {
    match e {
        CatalogError::UnknownName(_) => usage(e.to_string()),
        other => anyhow!(other),
    }
}

fn classify_boson(e: BosonizationError) -> anyhow::Error {
    match e {
        BosonizationError::Unknown(_) | BosonizationError::Rep(RepError::UnknownModule(_)) => usage(e.to_string()),
        other => anyhow!(other),
    }
}

/// What a command produced.
enum Output {
    Json { pass: bool, result: Value },
    Text { pass: bool, text: String },
}

struct Ctx {
    sign: ThetaSign,
    maxdeg: usize,
    budget: usize,
    threads: usize,
    paper_check: bool,
}

impl Ctx {
    fn config(&self) -> ReportConfig {
        ReportConfig { theta_sign: self.sign, maxdeg: self.maxdeg, tensor_budget: self.budget }
    }

    fn config_json(&self) -> Value {
        json!({
            "theta_sign": self.sign,
            "maxdeg": self.maxdeg,
            "tensor_budget": self.budget,
            "paper_check": self.paper_check,
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let threads = match cli.threads {
        Some(0) => return Err(usage("--threads must be positive")),
        Some(n) => {
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
            n
        }
        None => rayon::current_num_threads(),
    };
    let ctx = Ctx {
        sign: cli.theta_sign.into(),
        maxdeg: cli.maxdeg.unwrap_or(DEFAULT_MAXDEG),
        budget: cli.tensor_budget,
        threads,
        paper_check: cli.paper_check,
    };
    let (name, started) = (command_name(&cli.command), Instant::now());
    let output = dispatch(&cli.command, &ctx)?;
    eprintln!("{name}: {:.2?}", started.elapsed());
    let (pass, body) = match output {
        Output::Text { pass, text } => (pass, text),
        Output::Json { pass, result } => {
            let doc = json!({
                "schema": CLI_SCHEMA,
                "command": name,
                "config": ctx.config_json(),
                "pass": pass,
                "result": result,
            });
            (pass, serde_json::to_string_pretty(&doc)? + "\n")
        }
    };
    match &cli.out {
        Some(path) => write_atomically(path, &body)?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()) {
                // a closed pipe (`| head`) is not an error of the computation
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e).context("writing to stdout");
                }
            }
        }
    }
    Ok(pass)
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Catalog { action: CatalogCmd::Export { .. } } => "catalog export",
        Command::Catalog { action: CatalogCmd::Verify { .. } } => "catalog verify",
        Command::Modules { action: ModulesCmd::List } => "modules list",
        Command::Modules { action: ModulesCmd::Certify { .. } } => "modules certify",
        Command::Modules { action: ModulesCmd::ExtTable } => "modules ext-table",
        Command::Modules { action: ModulesCmd::Quiver { .. } } => "modules quiver",
        Command::Yd { action: YdCmd::Braiding { .. } } => "yd braiding",
        Command::Yd { action: YdCmd::VerifyPaper } => "yd verify-paper",
        Command::Nichols { .. } => "nichols",
        Command::Bosonize { .. } => "bosonize",
        Command::FullReport => "full-report",
    }
    .to_string()
}

fn write_atomically(path: &Path, body: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, body).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}

fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Output> {
    match cmd {
        Command::Catalog { action } => catalog_cmd(action, ctx),
        Command::Modules { action } => modules_cmd(action, ctx),
        Command::Yd { action } => yd_cmd(action, ctx),
        Command::Nichols { module, relations } => nichols_cmd(module, *relations, ctx),
        Command::Bosonize { module, verify_presentation, export } => {
            bosonize_cmd(module, *verify_presentation, export.as_deref(), ctx)
        }
        Command::FullReport => {
            let report = full_report(ctx.config(), ctx.threads);
            for c in &report.criteria {
                eprintln!("{}", c.line());
            }
            Ok(Output::Json { pass: report.all_pass, result: serde_json::to_value(&report)? })
        }
    }
}

fn parse_perturbation(spec: &str) -> Result<(Perturbation, Scalar)> {
    let (target, delta) = match spec.matches(':').count() {
        1 => (spec, "1"),
        _ => spec.rsplit_once(':').ok_or_else(|| usage(format!("bad perturbation `{spec}`")))?,
    };
    let target: Perturbation = target.parse().map_err(usage)?;
    let delta: Scalar = delta.parse().map_err(|e: hopf12::scalars::ScalarError| usage(e.to_string()))?;
    if delta.is_zero() {
        return Err(usage("perturbation delta must be nonzero"));
    }
    Ok((target, delta))
}

fn catalog_cmd(action: &CatalogCmd, ctx: &Ctx) -> Result<Output> {
    match action {
        CatalogCmd::Export { name } => {
            let h = by_name(name, ctx.sign).map_err(classify_catalog)?;
            let report = verify_hopf(&h, Level::Hopf);
            Ok(Output::Json { pass: report.all_pass(), result: serde_json::to_value(h.to_json())? })
        }
        CatalogCmd::Verify { name, perturb, level } => {
            let level: Level = level.parse().map_err(|e: String| usage(e))?;
            let mut h = by_name(name, ctx.sign).map_err(classify_catalog)?;
            if let Some(spec) = perturb {
                let (target, delta) = parse_perturbation(spec)?;
                h = h.perturb(target, &delta).map_err(|e| usage(e.to_string()))?;
            }
            let report = verify_hopf(&h, level);
            let mut pass = report.all_pass();
            let mut result = json!({"algebra": h.name, "dim": h.dim(), "level": level.name(), "report": report});
            if ctx.paper_check {
                let printed = match name.as_str() {
                    "C*" | "Cdual" => {
                        let diff = dual_table_diff();
                        pass &= diff.is_empty();
                        json!({"dual_table_mismatches": diff})
                    }
                    "D" => {
                        let d = catalog::double(ctx.sign);
                        pass &= d.relation_report.all_pass() && d.pbw_rank == 144;
                        json!({"presentation": d.relation_report, "pbw_rank": d.pbw_rank})
                    }
                    _ => Value::Null,
                };
                result["paper_check"] = printed;
            }
            Ok(Output::Json { pass, result })
        }
    }
}

fn modules_cmd(action: &ModulesCmd, ctx: &Ctx) -> Result<Output> {
    let d = catalog::double(ctx.sign);
    match action {
        ModulesCmd::List => {
            let rows: Vec<Value> = catalog_names()
                .into_iter()
                .map(|n| {
                    let m = module_by_name(d, &n).expect("listed names resolve");
                    let is_module = m.check_relations().is_ok();
                    let simple = if is_module { is_simple(&m).ok() } else { None };
                    json!({"name": n, "dim": m.dim(), "is_module": is_module, "simple": simple})
                })
                .collect();
            Ok(Output::Json { pass: true, result: json!({"modules": rows}) })
        }
        ModulesCmd::Certify { name } => {
            let m = module_by_name(d, name).map_err(classify_rep)?;
            let report = m.certify();
            let ok = m.check_relations().is_ok();
            let mut result = json!({"module": m.name, "dim": m.dim(), "relations": report});
            if ok {
                result["simple"] = json!(is_simple(&m).ok());
                result["indecomposable"] = json!(is_indecomposable(&m));
                result["socle_top"] = serde_json::to_value(socle_top(&m))?;
            }
            Ok(Output::Json { pass: ok, result })
        }
        ModulesCmd::ExtTable => {
            let (names, table) = ext_table(d);
            let mut pass = true;
            let mut result = json!({"simples": names, "ext1": table});
            if ctx.paper_check {
                let mut mismatches = Vec::new();
                for (i, row) in table.iter().enumerate() {
                    for (j, &v) in row.iter().enumerate() {
                        let expected = usize::from(i < 6 && j < 6 && [(i + 1) % 6, (i + 5) % 6, (i + 3) % 6].contains(&j));
                        if v != expected {
                            mismatches.push(json!({"from": names[i], "to": names[j], "printed": expected, "computed": v}));
                        }
                    }
                }
                pass = mismatches.is_empty();
                result["paper_check"] = json!({"mismatches": mismatches});
            }
            Ok(Output::Json { pass, result })
        }
        ModulesCmd::Quiver { format, separated } => {
            let (names, table) = ext_table(d);
            let q = quiver_from_table(&names, &table);
            let pass = !ctx.paper_check || q.verdict == RepType::Wild;
            Ok(match format {
                QuiverFormat::Dot => Output::Text { pass, text: if *separated { q.separated_dot() } else { q.to_dot() } },
                QuiverFormat::Json => Output::Json { pass, result: serde_json::to_value(&q)? },
            })
        }
    }
}

fn yd_cmd(action: &YdCmd, ctx: &Ctx) -> Result<Output> {
    match action {
        YdCmd::Braiding { module } => {
            let d = catalog::double(ctx.sign);
            let m = module_by_name(d, module).map_err(classify_rep)?;
            let y = to_yd(&m)?;
            let b = braiding_of(&y)?;
            let c_labels = catalog::C_LABELS;
            let coaction: Vec<String> = (0..y.dim)
                .map(|j| {
                    let terms: Vec<String> =
                        y.coaction_of(j).iter().map(|((i, k), c)| format!("({c}){}⊗v{}", c_labels[*i], k + 1)).collect();
                    format!("δ(v{}) = {}", j + 1, if terms.is_empty() { "0".into() } else { terms.join(" + ") })
                })
                .collect();
            let braiding: Vec<String> = (0..y.dim)
                .flat_map(|r| (0..y.dim).map(move |s| (r, s)))
                .map(|(r, s)| format!("c(v{}⊗v{}) = {}", r + 1, s + 1, render_tensor(&b.apply_basis(r, s), y.dim, 2)))
                .collect();
            let mut pass = b.braid_relation();
            let mut result = json!({
                "module": m.name,
                "dim": y.dim,
                "yd_certificate": y.certify(),
                "coaction": coaction,
                "braiding": braiding,
                "braiding_matrix": b.braiding,
                "braid_relation": b.braid_relation(),
            });
            if ctx.paper_check {
                let cmp = verify_paper_tables(ctx.sign);
                let mine: Vec<_> = cmp.mismatches.iter().filter(|x| x.module == m.name).collect();
                pass &= mine.is_empty();
                result["paper_check"] = json!({"mismatches": mine});
            }
            Ok(Output::Json { pass, result })
        }
        YdCmd::VerifyPaper => {
            let cmp = verify_paper_tables(ctx.sign);
            let pass = cmp.computed_objects_certified && cmp.mismatches.is_empty();
            Ok(Output::Json { pass, result: serde_json::to_value(&cmp)? })
        }
    }
}

fn nichols_cmd(module: &str, relations: bool, ctx: &Ctx) -> Result<Output> {
    let d = catalog::double(ctx.sign);
    let m = module_by_name(d, module).map_err(classify_rep)?;
    m.check_relations().map_err(|e| anyhow!("{module} is not a module: {e}"))?;
    let b = hopf12::ydcat::module_braiding(&m)?;
    let stack = SymmetrizerStack::new(&b, ctx.maxdeg, ctx.budget);
    let report = report_from_stack(&b, &stack, ctx.maxdeg, false);
    let mut result = serde_json::to_value(&report)?;
    if relations {
        let rels: Vec<Value> = (2..=stack.top_degree())
            .map(|n| {
                let new: Vec<String> = stack.new_relations(n).iter().map(|r| render_tensor(r, stack.dim(), n)).collect();
                json!({"degree": n, "new_relations": new})
            })
            .collect();
        result["relations"] = json!(rels);
    }
    let mut pass = true;
    if ctx.paper_check {
        if let Ok(p) = printed_presentation(module) {
            let quad = stack.dim() == 1 || (stack.top_degree() >= 2 && quadratic_relations_match(module, &stack).unwrap_or(false));
            let presented = presented_basis(&p, &stack).map(|(basis, _)| basis.len());
            pass = quad && presented.as_ref().map(|&n| n == report.ranks.iter().sum::<usize>()).unwrap_or(false);
            result["paper_check"] = json!({
                "quadratic_relations_match": quad,
                "presented_dim": presented.as_ref().ok(),
                "presented_error": presented.as_ref().err().map(|e| e.to_string()),
            });
        } else {
            result["paper_check"] = json!({"printed_presentation": null});
        }
    }
    Ok(Output::Json { pass, result })
}

fn bosonize_cmd(module: &str, verify_presentation: bool, export: Option<&Path>, ctx: &Ctx) -> Result<Output> {
    let d = catalog::double(ctx.sign);
    let (b, report) = biproduct_report(d, module).map_err(classify_boson)?;
    let structural = report.hopf_axioms.all_pass()
        && report.inclusion_projection.all_pass()
        && report.coinvariants_dim == report.nichols_dim
        && !report.coradical_closed_under_mult;
    let pass = if verify_presentation { report.all_pass() } else { structural };
    let mut result = serde_json::to_value(&report)?;
    if !verify_presentation {
        if let Some(obj) = result.as_object_mut() {
            obj.remove("identities");
        }
    }
    if let Some(path) = export {
        let body = serde_json::to_string_pretty(&b.hopf.to_json())? + "\n";
        write_atomically(path, &body)?;
        result["exported"] = json!(path.display().to_string());
    }
    Ok(Output::Json { pass, result })
}

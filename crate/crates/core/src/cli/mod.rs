//! The `extbound` command line.
//!
//! Exit codes: 0 success, 1 property violation or counterexample, 2
//! undetermined at the cutoff, 3 input error. Seeds and cutoffs are echoed
//! in every report.

mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::{injective_module, projective_module, Algebra, Representation};
use crate::bounds::{
    corpus_bounds, lab, rab, strongly_redundant_from, ultimately_closed_at, verify_bound_laws, verify_certificates,
    verify_finitistic_laws, Corpus, StatementReport, StatementStatus,
};
use crate::error::{Error, Result};
use crate::homology::{ext_table, id, pd, vanishing_onset, OnsetStatus};
use crate::io::{self, AlgebraRef};
use crate::repmod::{decompose, socle, top};
use crate::tilting::{
    arc_scan, ewtc_check, gsc_report, is_tilting, is_wakamatsu, verify_tilting_laws, CoresolutionResult, EwtcOutcome,
    Verdict,
};
use crate::{fixtures, Config, Engine};

use render::*;
pub use render::{Format, Outcome};

#[derive(Parser, Debug)]
#[command(name = "extbound", version, about = "Homological invariants of bounded quiver algebras")]
struct Cli {
    /// Degree cutoff K for resolutions and certificates.
    #[arg(long, global = true, default_value_t = 20)]
    cutoff: usize,
    /// Maximal coresolution length.
    #[arg(long, global = true, default_value_t = 8)]
    maxlen: usize,
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebra files.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Module files.
    Module {
        #[command(subcommand)]
        action: ModuleAction,
    },
    /// Minimal projective resolution.
    Resolve {
        #[arg(long)]
        module: String,
        /// Number of terms after P_0; defaults to the cutoff.
        #[arg(long)]
        len: Option<usize>,
    },
    /// Table of dim Ext^i(M, N).
    Ext {
        #[arg(long)]
        module: String,
        #[arg(long)]
        against: String,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Projective dimension.
    Pd {
        #[arg(long)]
        module: String,
    },
    /// Injective dimension.
    Id {
        #[arg(long)]
        module: String,
    },
    /// Least t with Ext^i(M, N) = 0 for all i > t.
    Onset {
        #[arg(long)]
        module: String,
        #[arg(long)]
        against: String,
    },
    /// Left and right bounds of a module over a corpus.
    Ab {
        #[arg(long)]
        module: String,
        #[arg(long)]
        corpus: String,
    },
    /// Global and finitistic statistics of a corpus.
    Bounds {
        #[arg(long)]
        corpus: String,
    },
    /// Tilting conditions.
    Tilting {
        #[arg(long)]
        module: String,
        /// Write the coresolution terms as module files into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Wakamatsu-tilting conditions.
    Wakamatsu {
        #[arg(long)]
        module: String,
    },
    /// Whether self-orthogonality and a finite coresolution force finite pd.
    Ewtc {
        #[arg(long)]
        module: String,
    },
    /// Counterexample scan over a corpus.
    Arc {
        #[arg(long)]
        corpus: String,
    },
    /// Injective dimensions of both regular modules.
    Gsc {
        #[arg(long)]
        algebra: String,
    },
    /// Ultimately closed and strongly redundant syzygy indices.
    Uc {
        #[arg(long)]
        module: String,
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Run every law and certificate check over fixtures or corpora.
    Verify {
        /// `all` or a comma-separated list of fixture names.
        #[arg(long)]
        fixtures: Option<String>,
        #[arg(long)]
        corpus: Vec<String>,
    },
    /// Generate a corpus file.
    Corpus {
        /// simples | projectives | injectives | syzygy-closure | fixture-indecomposables
        generator: String,
        #[arg(long)]
        algebra: Option<String>,
        /// Seed modules for syzygy-closure.
        #[arg(long = "from")]
        from: Vec<String>,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraAction {
    Info { algebra: String },
}

#[derive(Subcommand, Debug)]
enum ModuleAction {
    Check { module: String },
}

/// Runs the command line and returns the exit code.
pub fn run(args: Vec<String>) -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_with(args, &mut lock)
}

/// As [`run`], writing reports to `out`; diagnostics go to stderr.
pub fn run_with(args: Vec<String>, out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    let config = Config { seed: cli.seed, cutoff: cli.cutoff, maxlen: cli.maxlen, ..Config::default() };
    let engine = Engine::new(config);
    let mut run = Map::new();
    run.insert("seed".into(), json!(cli.seed));
    run.insert("cutoff".into(), json!(cli.cutoff));
    run.insert("maxlen".into(), json!(cli.maxlen));
    match execute(&engine, &cli) {
        Ok(report) => {
            if let Err(e) = report.emit(cli.format, &run, out) {
                eprintln!("error: {e}");
                return 3;
            }
            report.outcome.code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::OracleMismatch(_) => 1,
                _ => 3,
            }
        }
    }
}

struct ModuleArg {
    label: String,
    module: Representation,
    algebra_ref: AlgebraRef,
}

fn load_module_arg(reference: &str) -> Result<ModuleArg> {
    if let Some(rest) = reference.strip_prefix("builtin:") {
        let (alg, member) = rest
            .split_once('/')
            .ok_or_else(|| Error::Argument(format!("expected builtin:ALGEBRA/MEMBER, got {reference:?}")))?;
        return Ok(ModuleArg {
            label: reference.to_string(),
            module: fixtures::module(alg, member)?,
            algebra_ref: AlgebraRef::Named(format!("builtin:{}", alg.to_uppercase())),
        });
    }
    let loaded = io::load_module(Path::new(reference))?;
    Ok(ModuleArg {
        label: loaded.name.clone().unwrap_or_else(|| reference.to_string()),
        module: loaded.module,
        algebra_ref: loaded.algebra_ref,
    })
}

fn load_corpus_arg(reference: &str) -> Result<Corpus> {
    match reference.strip_prefix("builtin:") {
        Some(name) => fixtures::indecomposables(name),
        None => Ok(io::load_corpus(Path::new(reference))?.0),
    }
}

fn load_algebra_arg(reference: &str) -> Result<(Arc<Algebra>, AlgebraRef)> {
    match reference.strip_prefix("builtin:") {
        Some(name) => Ok((fixtures::algebra(name)?, AlgebraRef::Named(format!("builtin:{}", name.to_uppercase())))),
        None => {
            let alg = io::load_algebra(Path::new(reference))?;
            let r = io::inline_ref(&alg);
            Ok((alg, r))
        }
    }
}

/// The second module, rebuilt over the first one's algebra object.
fn same_algebra(a: &Representation, b: &Representation) -> Result<Representation> {
    if !a.algebra().same_as(b.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Representation::new(a.algebra().clone(), b.dims().to_vec(), b.maps().to_vec())
}

fn vertex_counts(alg: &Algebra, mults: &[usize]) -> String {
    let parts: Vec<String> = alg
        .quiver()
        .vertices()
        .iter()
        .zip(mults)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { format!("P{v}") } else { format!("P{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn execute(engine: &Engine, cli: &Cli) -> Result<Report> {
    let k = cli.cutoff;
    match &cli.command {
        Command::Algebra { action: AlgebraAction::Info { algebra } } => algebra_info(algebra),
        Command::Module { action: ModuleAction::Check { module } } => module_check(engine, module),
        Command::Resolve { module, len } => resolve(engine, module, len.unwrap_or(k)),
        Command::Ext { module, against, max } => ext(engine, module, against, *max),
        Command::Pd { module } => dimension(engine, "pd", module, k),
        Command::Id { module } => dimension(engine, "id", module, k),
        Command::Onset { module, against } => onset(engine, module, against, k),
        Command::Ab { module, corpus } => ab(engine, module, corpus, k),
        Command::Bounds { corpus } => bounds(engine, corpus, k),
        Command::Tilting { module, export } => tilting(engine, module, export.as_deref(), k, cli.maxlen),
        Command::Wakamatsu { module } => wakamatsu(engine, module, k, cli.maxlen),
        Command::Ewtc { module } => ewtc(engine, module, k, cli.maxlen),
        Command::Arc { corpus } => arc(engine, corpus, k),
        Command::Gsc { algebra } => gsc(engine, algebra, k),
        Command::Uc { module, corpus } => uc(engine, module, corpus.as_deref(), k),
        Command::Verify { fixtures, corpus } => verify(engine, fixtures.as_deref(), corpus, k, cli.maxlen),
        Command::Corpus { generator, algebra, from, depth, out } => {
            generate_corpus(engine, generator, algebra.as_deref(), from, *depth, out.as_deref())
        }
    }
}

fn algebra_info(reference: &str) -> Result<Report> {
    let (alg, _) = load_algebra_arg(reference)?;
    let q = alg.quiver();
    let mut r = Report::new("algebra info");
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| json!({"name": a.name, "from": q.vertices()[a.source], "to": q.vertices()[a.target]}))
        .collect();
    let mut rows = Vec::new();
    let mut proj = Vec::new();
    for i in 0..alg.num_vertices() {
        let p = projective_module(&alg, i)?;
        let inj = injective_module(&alg, i)?;
        rows.push(vec![q.vertices()[i].clone(), dims_text(&p), dims_text(&inj)]);
        proj.push(json!({"vertex": q.vertices()[i], "projective": dims_json(&p), "injective": dims_json(&inj)}));
    }
    r.set("name", json!(alg.name()));
    r.set("field", json!(alg.field().to_string()));
    r.set("vertices", json!(q.vertices()));
    r.set("arrows", json!(arrows));
    r.set("relations", json!(alg.presentation().relations.len()));
    r.set("dimension", json!(alg.dim()));
    r.set("indecomposable_projectives_injectives", json!(proj));
    r.pairs(vec![
        ("name", alg.name().to_string()),
        ("field", alg.field().to_string()),
        ("vertices", q.vertices().join(" ")),
        (
            "arrows",
            q.arrows()
                .iter()
                .map(|a| format!("{}:{}->{}", a.name, q.vertices()[a.source], q.vertices()[a.target]))
                .collect::<Vec<_>>()
                .join(" "),
        ),
        ("relations", alg.presentation().relations.len().to_string()),
        ("dimension", alg.dim().to_string()),
    ]);
    r.table(&["vertex", "P", "I"], rows);
    Ok(r)
}

fn module_check(engine: &Engine, reference: &str) -> Result<Report> {
    let m = load_module_arg(reference)?;
    let d = decompose(&m.module, &engine.search_options(), &mut engine.rng())?;
    let mut r = Report::new("module check");
    let summands: Vec<Value> = d
        .summands
        .iter()
        .map(|s| json!({"dims": dims_json(&s.module), "certificate": s.certificate.map(|c| format!("{c:?}"))}))
        .collect();
    let rows = d
        .summands
        .iter()
        .map(|s| vec![dims_text(&s.module), s.certificate.map_or("undetermined".into(), |c| format!("{c:?}"))])
        .collect();
    r.set("module", json!(m.label));
    r.set("valid", json!(true));
    r.set("dims", dims_json(&m.module));
    r.set("top", json!(top(&m.module)?));
    r.set("socle", json!(socle(&m.module)?));
    r.set("summands", json!(summands));
    r.pairs(vec![
        ("module", m.label.clone()),
        ("valid", "true".into()),
        ("dims", dims_text(&m.module)),
        ("top", format!("{:?}", top(&m.module)?)),
        ("socle", format!("{:?}", socle(&m.module)?)),
        ("indecomposable", (d.summands.len() == 1 && d.is_complete()).to_string()),
    ]);
    r.table(&["summand dims", "certificate"], rows);
    if !d.is_complete() {
        r.worsen(Outcome::Undetermined);
    }
    Ok(r)
}

fn resolve(engine: &Engine, reference: &str, len: usize) -> Result<Report> {
    let m = load_module_arg(reference)?;
    let res = engine.resolution(&m.module, len)?;
    res.verify()?;
    let alg = m.module.algebra().clone();
    let mut rows = Vec::new();
    let mut terms = Vec::new();
    for i in 0..=len.min(res.computed_terms().saturating_sub(1)) {
        let mults = res.multiplicities(i);
        let syz = res.syzygy(i).expect("computed");
        rows.push(vec![i.to_string(), vertex_counts(&alg, &mults), dims_text(&syz)]);
        terms.push(json!({"degree": i, "multiplicities": mults, "syzygy_dims": dims_json(&syz)}));
        if syz.is_zero() {
            break;
        }
    }
    let mut r = Report::new("resolve");
    r.set("module", json!(m.label));
    r.set("terminated", json!(res.terminated()));
    r.set("pd", json!(res.pd()));
    r.set("terms", json!(terms));
    r.pairs(vec![
        ("module", m.label.clone()),
        ("terminated", res.terminated().to_string()),
        ("pd", res.pd().map_or("-".into(), |d| d.to_string())),
    ]);
    r.table(&["degree", "P_i", "dims of syzygy i"], rows);
    Ok(r)
}

fn ext(engine: &Engine, m: &str, n: &str, max: usize) -> Result<Report> {
    let a = load_module_arg(m)?;
    let b = load_module_arg(n)?;
    let nb = same_algebra(&a.module, &b.module)?;
    let t = ext_table(engine, &a.module, &nb, max)?;
    let mut r = Report::new("ext");
    r.set("module", json!(a.label));
    r.set("against", json!(b.label));
    r.set("max_degree", json!(max));
    r.set("dims", json!(t.dims));
    r.set("cross_checked", json!(engine.config().cross_check));
    r.table(
        &["degree", "dimension"],
        t.dims.iter().enumerate().map(|(i, d)| vec![i.to_string(), d.to_string()]).collect(),
    );
    Ok(r)
}

fn dimension(engine: &Engine, which: &'static str, reference: &str, k: usize) -> Result<Report> {
    let m = load_module_arg(reference)?;
    let d = if which == "pd" { pd(engine, &m.module, k)? } else { id(engine, &m.module, k)? };
    let mut r = Report::new(which);
    r.set("module", json!(m.label));
    r.set("result", pd_json(&d));
    r.pairs(vec![("module", m.label.clone()), (which, d.to_string())]);
    r.worsen(pd_outcome(&d));
    Ok(r)
}

fn onset(engine: &Engine, m: &str, n: &str, k: usize) -> Result<Report> {
    let a = load_module_arg(m)?;
    let b = load_module_arg(n)?;
    let nb = same_algebra(&a.module, &b.module)?;
    let o = vanishing_onset(engine, &a.module, &nb, k)?;
    let mut r = Report::new("onset");
    r.set("module", json!(a.label));
    r.set("against", json!(b.label));
    r.set("result", onset_json(&o));
    r.pairs(vec![
        ("module", a.label.clone()),
        ("against", b.label.clone()),
        ("status", o.status.to_string()),
        ("evidence", format!("{:?}", o.evidence)),
        ("window", format!("{:?}", o.window)),
    ]);
    if matches!(o.status, OnsetStatus::Undetermined(_)) {
        r.worsen(Outcome::Undetermined);
    }
    Ok(r)
}

fn ab(engine: &Engine, m: &str, c: &str, k: usize) -> Result<Report> {
    let a = load_module_arg(m)?;
    let corpus = load_corpus_arg(c)?;
    let module = same_algebra(corpus.modules().next().unwrap_or(&a.module), &a.module)?;
    let module = Representation::new(corpus.algebra().clone(), module.dims().to_vec(), module.maps().to_vec())?;
    let l = lab(engine, &module, &corpus, k)?;
    let rr = rab(engine, &module, &corpus, k)?;
    let mut r = Report::new("ab");
    r.set("module", json!(a.label));
    r.set("corpus", json!(corpus.provenance));
    r.set("lab", ab_json(&l));
    r.set("rab", ab_json(&rr));
    let mut rows = Vec::new();
    for (i, p) in l.pairs.iter().enumerate() {
        rows.push(vec![p.member.clone(), p.onset.status.to_string(), rr.pairs[i].onset.status.to_string()]);
    }
    r.pairs(vec![
        ("module", a.label.clone()),
        ("corpus", corpus.provenance.clone()),
        ("lab", l.bound.to_string()),
        ("rab", rr.bound.to_string()),
    ]);
    r.table(&["member", "onset Ext(M, N)", "onset Ext(N, M)"], rows);
    if !l.bound.is_exact() || !rr.bound.is_exact() {
        r.worsen(Outcome::Undetermined);
    }
    Ok(r)
}

fn bounds(engine: &Engine, c: &str, k: usize) -> Result<Report> {
    let corpus = load_corpus_arg(c)?;
    let b = corpus_bounds(engine, &corpus, k)?;
    let mut r = Report::new("bounds");
    let globals = [
        ("glAb", b.glab),
        ("grAb", b.grab),
        ("gAb", b.gab),
        ("fPD", b.fpd),
        ("fID", b.fid),
        ("fLAb", b.flab),
        ("fRAb", b.frab),
    ];
    let mut g = Map::new();
    for (name, v) in globals {
        g.insert(name.into(), bound_json(v));
        if !v.is_exact() {
            r.worsen(Outcome::Undetermined);
        }
    }
    let members: Vec<Value> = b
        .members
        .iter()
        .map(|m| {
            json!({"name": m.name, "lab": bound_json(m.lab.bound), "rab": bound_json(m.rab.bound),
                   "pd": pd_json(&m.pd), "id": pd_json(&m.id)})
        })
        .collect();
    if globals[0].1.exact().zip(globals[1].1.exact()).is_some_and(|(l, r)| l != r) {
        r.worsen(Outcome::Violation);
    }
    r.set("corpus", json!(corpus.provenance));
    r.set("complete", json!(corpus.complete));
    r.set("global", Value::Object(g));
    r.set("members", json!(members));
    let rows = b
        .members
        .iter()
        .map(|m| {
            vec![m.name.clone(), m.lab.bound.to_string(), m.rab.bound.to_string(), m.pd.to_string(), m.id.to_string()]
        })
        .collect();
    r.table(&["module", "lab", "rab", "pd", "id"], rows);
    r.pairs(globals.iter().map(|(n, v)| (*n, v.to_string())).collect());
    Ok(r)
}

fn coresolution_json(c: &CoresolutionResult) -> Result<Value> {
    Ok(json!({
        "success": c.success(),
        "length": c.length(),
        "terms": c.terms.iter().map(dims_json).collect::<Vec<_>>(),
        "failure": c.failure.as_ref().map(|f| f.to_string()),
        "verified": c.verify()?,
    }))
}

fn verdict_outcome(v: &Verdict) -> Outcome {
    match v {
        Verdict::Undetermined(_) => Outcome::Undetermined,
        _ => Outcome::Ok,
    }
}

fn tilting(engine: &Engine, reference: &str, export: Option<&Path>, k: usize, maxlen: usize) -> Result<Report> {
    let m = load_module_arg(reference)?;
    let rep = is_tilting(engine, &m.module, k, maxlen)?;
    let mut r = Report::new("tilting");
    r.set("module", json!(m.label));
    r.set("t1", pd_json(&rep.t1));
    r.set("t2", json!(rep.t2.to_string()));
    r.set("t3", coresolution_json(&rep.t3)?);
    r.set("verdict", json!(rep.verdict.to_string()));
    if let Some(dir) = export {
        std::fs::create_dir_all(dir)?;
        let aref = io::inline_ref(m.module.algebra());
        let mut files = Vec::new();
        for (i, t) in rep.t3.terms.iter().enumerate() {
            let path = dir.join(format!("term{i}.json"));
            std::fs::write(&path, io::module_to_json(t, Some(&format!("T{i}")), &aref))?;
            files.push(path.display().to_string());
        }
        r.set("exported", json!(files));
    }
    r.pairs(vec![
        ("module", m.label.clone()),
        ("pd (T1)", rep.t1.to_string()),
        ("self-orthogonal (T2)", rep.t2.to_string()),
        (
            "coresolution (T3)",
            match (&rep.t3.failure, rep.t3.length()) {
                (None, Some(n)) => {
                    format!("length {n}, terms {}", rep.t3.terms.iter().map(dims_text).collect::<Vec<_>>().join(" "))
                }
                (Some(f), _) => f.to_string(),
                _ => "-".into(),
            },
        ),
        ("verdict", rep.verdict.to_string()),
    ]);
    if rep.t3.success() && !rep.t3.verify()? {
        r.worsen(Outcome::Violation);
    }
    r.worsen(verdict_outcome(&rep.verdict));
    Ok(r)
}

fn wakamatsu(engine: &Engine, reference: &str, k: usize, maxlen: usize) -> Result<Report> {
    let m = load_module_arg(reference)?;
    let rep = is_wakamatsu(engine, &m.module, k, maxlen)?;
    let mut r = Report::new("wakamatsu");
    let stages: Vec<Value> = rep
        .stages
        .iter()
        .map(|s| json!({"image": dims_json(&s.image), "orthogonal": s.orthogonal.to_string()}))
        .collect();
    r.set("module", json!(m.label));
    r.set("w2", json!(rep.w2.to_string()));
    r.set("chain", coresolution_json(&rep.chain)?);
    r.set("stages", json!(stages));
    r.set("verdict", json!(rep.verdict.to_string()));
    r.pairs(vec![
        ("module", m.label.clone()),
        ("self-orthogonal", rep.w2.to_string()),
        ("verdict", rep.verdict.to_string()),
    ]);
    r.table(
        &["stage", "image dims", "orthogonal to T"],
        rep.stages
            .iter()
            .enumerate()
            .map(|(i, s)| vec![(i + 1).to_string(), dims_text(&s.image), s.orthogonal.to_string()])
            .collect(),
    );
    r.worsen(verdict_outcome(&rep.verdict));
    Ok(r)
}

fn ewtc(engine: &Engine, reference: &str, k: usize, maxlen: usize) -> Result<Report> {
    let m = load_module_arg(reference)?;
    let rep = ewtc_check(engine, &m.module, k, maxlen)?;
    let mut r = Report::new("ewtc");
    r.set("module", json!(m.label));
    r.set("t2", json!(rep.t2.to_string()));
    r.set("t3", coresolution_json(&rep.t3)?);
    r.set("pd", rep.pd.as_ref().map_or(Value::Null, pd_json));
    r.set("split_stage", json!(rep.proself.as_ref().map(|p| p.to_string())));
    r.set("outcome_detail", json!(rep.outcome.to_string()));
    r.pairs(vec![
        ("module", m.label.clone()),
        ("self-orthogonal", rep.t2.to_string()),
        ("coresolution", rep.t3.failure.as_ref().map_or(format!("length {:?}", rep.t3.length()), |f| f.to_string())),
        ("pd", rep.pd.as_ref().map_or("-".into(), |p| p.to_string())),
        ("result", rep.outcome.to_string()),
    ]);
    match rep.outcome {
        EwtcOutcome::Counterexample(_) => r.worsen(Outcome::Violation),
        EwtcOutcome::Undetermined(_) => r.worsen(Outcome::Undetermined),
        _ => {}
    }
    Ok(r)
}

fn arc(engine: &Engine, c: &str, k: usize) -> Result<Report> {
    let corpus = load_corpus_arg(c)?;
    let scan = arc_scan(engine, corpus.algebra(), &corpus, k)?;
    let mut r = Report::new("arc");
    let entries: Vec<Value> = scan
        .entries
        .iter()
        .map(|e| {
            json!({"member": e.member, "generator_selforthogonal": e.generator.to_string(), "projective": e.projective,
                   "split_stage": e.split_stage.to_string(), "bound": e.bound.map(bound_json)})
        })
        .collect();
    let counter: Vec<Value> = scan
        .counterexamples
        .iter()
        .map(|c| json!({"conjecture": c.conjecture.to_string(), "member": c.member, "detail": c.detail}))
        .collect();
    r.set("corpus", json!(corpus.provenance));
    r.set("entries", json!(entries));
    r.set("counterexamples", json!(counter));
    r.set("undetermined", json!(scan.undetermined));
    r.table(
        &["member", "M+R self-orthogonal", "projective", "split stage", "bound"],
        scan.entries
            .iter()
            .map(|e| {
                vec![
                    e.member.clone(),
                    e.generator.to_string(),
                    e.projective.to_string(),
                    e.split_stage.to_string(),
                    e.bound.map_or("-".into(), |b| b.to_string()),
                ]
            })
            .collect(),
    );
    r.pairs(vec![("counterexamples", scan.counterexamples.len().to_string())]);
    if !scan.counterexamples.is_empty() {
        r.worsen(Outcome::Violation);
    } else if !scan.undetermined.is_empty() {
        r.worsen(Outcome::Undetermined);
    }
    Ok(r)
}

fn gsc(engine: &Engine, reference: &str, k: usize) -> Result<Report> {
    let (alg, _) = load_algebra_arg(reference)?;
    let g = gsc_report(engine, &alg, k)?;
    let mut r = Report::new("gsc");
    r.set("algebra", json!(alg.name()));
    r.set("id_left", pd_json(&g.id_left));
    r.set("id_right", pd_json(&g.id_right));
    r.set("equal", json!(g.equal));
    r.pairs(vec![
        ("algebra", alg.name().to_string()),
        ("id of R", g.id_left.to_string()),
        ("id of the opposite regular module", g.id_right.to_string()),
        ("equal", g.equal.map_or("-".into(), |e| e.to_string())),
    ]);
    let finite = (g.id_left.finite().is_some(), g.id_right.finite().is_some());
    if g.equal == Some(false) || (finite.0 != finite.1 && g.id_left.is_decided() && g.id_right.is_decided()) {
        r.worsen(Outcome::Violation);
    } else if g.equal.is_none() && !(g.id_left.is_decided() && g.id_right.is_decided()) {
        r.worsen(Outcome::Undetermined);
    }
    Ok(r)
}

fn uc(engine: &Engine, reference: &str, corpus: Option<&str>, k: usize) -> Result<Report> {
    let m = load_module_arg(reference)?;
    let corpus = corpus.map(load_corpus_arg).transpose()?;
    let module = match &corpus {
        Some(c) => Representation::new(c.algebra().clone(), m.module.dims().to_vec(), m.module.maps().to_vec())?,
        None => m.module.clone(),
    };
    if let Some(c) = &corpus {
        if !c.algebra().same_as(m.module.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let closed = ultimately_closed_at(engine, &module, k)?;
    let red = strongly_redundant_from(engine, &module, k, corpus.as_ref())?;
    let mut r = Report::new("uc");
    r.set("module", json!(m.label));
    r.set("ultimately_closed_at", json!(closed.map(|c| json!({"m": c.m, "terminated": c.terminated}))));
    r.set(
        "strongly_redundant_from",
        json!(red.as_ref().map(|x| json!({
            "m": x.m,
            "lab_check": x.lab_check.as_ref().map(|c| json!({"status": c.status.to_string(), "detail": c.detail})),
        }))),
    );
    r.pairs(vec![
        ("module", m.label.clone()),
        (
            "ultimately closed at",
            closed.map_or("none up to cutoff".into(), |c| {
                format!("{}{}", c.m, if c.terminated { " (terminated)" } else { "" })
            }),
        ),
        ("strongly redundant from", red.as_ref().map_or("none up to cutoff".into(), |x| x.m.to_string())),
        (
            "lab check",
            red.as_ref()
                .and_then(|x| x.lab_check.as_ref())
                .map_or("-".into(), |c| format!("{} ({})", c.status, c.detail)),
        ),
    ]);
    if red.as_ref().and_then(|x| x.lab_check.as_ref()).is_some_and(|c| c.status == crate::bounds::CheckStatus::Fail) {
        r.worsen(Outcome::Violation);
    }
    Ok(r)
}

/// Every listed member is certified indecomposable and no two are isomorphic.
fn fixture_integrity(engine: &Engine, corpus: &Corpus) -> Result<StatementReport> {
    let mut reps = Vec::new();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, m) in corpus.members() {
        checked += 1;
        let d = decompose(m, &engine.search_options(), &mut engine.rng())?;
        if d.summands.len() != 1 || !d.is_complete() {
            failures.push(format!("{name}: not certified indecomposable"));
        }
        for (other, x) in &reps {
            if crate::repmod::indecomposables_isomorphic(x, m)?.is_some() {
                failures.push(format!("{name} is isomorphic to {other}"));
            }
        }
        reps.push((name.clone(), m.clone()));
    }
    Ok(StatementReport {
        statement: "corpus-members-indecomposable-distinct".into(),
        status: if !failures.is_empty() {
            StatementStatus::Fail
        } else if checked > 0 {
            StatementStatus::Pass
        } else {
            StatementStatus::Skipped
        },
        checked,
        skipped: 0,
        failures,
        note: String::new(),
    })
}

/// All statement suites for one corpus.
pub fn verify_corpus(engine: &Engine, corpus: &Corpus, cutoff: usize, maxlen: usize) -> Result<Vec<StatementReport>> {
    let mut out = vec![fixture_integrity(engine, corpus)?];
    out.extend(verify_bound_laws(engine, corpus, cutoff)?);
    out.extend(verify_finitistic_laws(engine, corpus, cutoff)?);
    out.extend(verify_certificates(engine, corpus, cutoff)?);
    out.extend(verify_tilting_laws(engine, corpus, cutoff, maxlen)?);
    Ok(out)
}

fn verify(engine: &Engine, fx: Option<&str>, corpora: &[String], k: usize, maxlen: usize) -> Result<Report> {
    let mut targets: Vec<(String, Corpus)> = Vec::new();
    if let Some(list) = fx {
        let names: Vec<String> = if list.eq_ignore_ascii_case("all") {
            fixtures::NAMES.iter().map(|s| s.to_string()).collect()
        } else {
            list.split(',').map(|s| s.trim().to_string()).collect()
        };
        for n in names {
            targets.push((n.to_uppercase(), fixtures::indecomposables(&n)?));
        }
    }
    for c in corpora {
        targets.push((c.clone(), load_corpus_arg(c)?));
    }
    if targets.is_empty() {
        return Err(Error::Argument("verify needs --fixtures or --corpus".into()));
    }
    let mut r = Report::new("verify");
    let mut docs = Vec::new();
    let mut rows = Vec::new();
    let mut counts = [0usize; 4];
    for (label, corpus) in &targets {
        let statements = verify_corpus(engine, corpus, k, maxlen)?;
        for s in &statements {
            let idx = match s.status {
                StatementStatus::Pass => 0,
                StatementStatus::Fail => 1,
                StatementStatus::Skipped => 2,
                StatementStatus::Open => 3,
            };
            counts[idx] += 1;
            if s.status == StatementStatus::Fail {
                r.worsen(Outcome::Violation);
            }
            let detail = if s.failures.is_empty() { s.note.clone() } else { s.failures.join("; ") };
            rows.push(vec![
                label.clone(),
                s.statement.clone(),
                s.status.to_string(),
                s.checked.to_string(),
                s.skipped.to_string(),
                detail,
            ]);
        }
        docs.push(json!({
            "corpus": label,
            "provenance": corpus.provenance,
            "statements": statements.iter().map(statement_json).collect::<Vec<_>>(),
        }));
    }
    r.set("corpora", json!(docs));
    r.set("summary", json!({"pass": counts[0], "fail": counts[1], "skipped": counts[2], "open": counts[3]}));
    r.table(&["corpus", "statement", "status", "checked", "skipped", "detail"], rows);
    r.pairs(vec![
        ("pass", counts[0].to_string()),
        ("fail", counts[1].to_string()),
        ("skipped", counts[2].to_string()),
        ("open", counts[3].to_string()),
    ]);
    Ok(r)
}

fn generate_corpus(
    engine: &Engine,
    generator: &str,
    algebra: Option<&str>,
    from: &[String],
    depth: usize,
    out: Option<&Path>,
) -> Result<Report> {
    let need_algebra = || -> Result<(Arc<Algebra>, AlgebraRef)> {
        load_algebra_arg(algebra.ok_or_else(|| Error::Argument(format!("{generator} needs --algebra")))?)
    };
    let (corpus, aref) = match generator {
        "simples" => {
            let (a, r) = need_algebra()?;
            (Corpus::simples(&a)?, r)
        }
        "projectives" => {
            let (a, r) = need_algebra()?;
            (Corpus::projectives(&a)?, r)
        }
        "injectives" => {
            let (a, r) = need_algebra()?;
            (Corpus::injectives(&a)?, r)
        }
        "fixture-indecomposables" => {
            let name = algebra
                .ok_or_else(|| Error::Argument("fixture-indecomposables needs --algebra".into()))?
                .trim_start_matches("builtin:");
            let c = fixtures::indecomposables(name)?;
            (c, AlgebraRef::Named(format!("builtin:{}", name.to_uppercase())))
        }
        "syzygy-closure" => {
            if from.is_empty() {
                return Err(Error::Argument("syzygy-closure needs at least one --from module".into()));
            }
            let seeds: Vec<ModuleArg> = from.iter().map(|s| load_module_arg(s)).collect::<Result<_>>()?;
            let alg = seeds[0].module.algebra().clone();
            let labels: Vec<String> = seeds.iter().map(|s| s.label.clone()).collect();
            let mut seed_corpus = Corpus::new(alg.clone(), labels.join(", "));
            for s in &seeds {
                let m = same_algebra(&seeds[0].module, &s.module)?;
                seed_corpus.push(s.label.clone(), m)?;
            }
            let aref = match &seeds[0].algebra_ref {
                AlgebraRef::Named(n) if n.starts_with("builtin:") => seeds[0].algebra_ref.clone(),
                _ => io::inline_ref(&alg),
            };
            (Corpus::syzygy_closure(engine, &seed_corpus, depth)?, aref)
        }
        other => return Err(Error::Argument(format!("unknown corpus generator {other:?}"))),
    };
    let text = io::corpus_to_json(&corpus, &aref);
    let mut r = Report::new("corpus");
    r.set("provenance", json!(corpus.provenance));
    r.set("members", json!(corpus.members().iter().map(|(n, _)| n.clone()).collect::<Vec<_>>()));
    match out {
        Some(path) => {
            std::fs::write(path, &text)?;
            r.set("written", json!(path.display().to_string()));
        }
        None => {
            let doc: Value = serde_json::from_str(&text).expect("emitted corpus is JSON");
            r.set("corpus_file", doc);
        }
    }
    r.pairs(vec![
        ("provenance", corpus.provenance.clone()),
        ("written", out.map_or("-".into(), |p| p.display().to_string())),
    ]);
    r.table(&["member", "dims"], corpus.members().iter().map(|(n, m)| vec![n.clone(), dims_text(m)]).collect());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_subcommand() {
        for line in [
            "extbound algebra info builtin:A2",
            "extbound module check builtin:A2/S1",
            "extbound resolve --module builtin:NAK3/S1 --len 3",
            "extbound ext --module x --against y --max 4",
            "extbound pd --module x --cutoff 10",
            "extbound id --module x",
            "extbound onset --module x --against y",
            "extbound ab --module x --corpus builtin:A2",
            "extbound bounds --corpus builtin:A2 --format csv",
            "extbound tilting --module x --maxlen 3",
            "extbound wakamatsu --module x",
            "extbound ewtc --module x",
            "extbound arc --corpus builtin:A2",
            "extbound gsc --algebra builtin:A2",
            "extbound uc --module x",
            "extbound verify --fixtures all --cutoff 12",
            "extbound corpus simples --algebra builtin:NAK3",
        ] {
            let args: Vec<String> = line.split(' ').map(str::to_string).collect();
            assert!(Cli::try_parse_from(args).is_ok(), "{line}");
        }
    }

    #[test]
    fn unknown_generator_is_an_input_error() {
        let mut out = Vec::new();
        let code = run_with(
            ["extbound", "corpus", "everything", "--algebra", "builtin:A2"].iter().map(|s| s.to_string()).collect(),
            &mut out,
        );
        assert_eq!(code, 3);
    }
}

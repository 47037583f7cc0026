use std::io::Write;

use serde_json::{json, Map, Value};

use crate::algebra::Representation;
use crate::bounds::{AbResult, Bound, StatementReport};
use crate::homology::{OnsetEvidence, OnsetResult, PdResult};
use crate::io::SCHEMA_VERSION;
use crate::repmod::ModuleMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// How a command ended, before input errors are considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Ok,
    Undetermined,
    Violation,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Violation => 1,
            Outcome::Undetermined => 2,
        }
    }
}

pub enum Section {
    Pairs(Vec<(String, String)>),
    Table { headers: Vec<String>, rows: Vec<Vec<String>> },
}

/// A command result in both human and machine form.
pub struct Report {
    pub command: &'static str,
    pub outcome: Outcome,
    pub json: Map<String, Value>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, outcome: Outcome::Ok, json: Map::new(), sections: Vec::new() }
    }

    pub fn worsen(&mut self, o: Outcome) {
        self.outcome = self.outcome.max(o);
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.json.insert(key.into(), value);
    }

    pub fn pairs(&mut self, pairs: Vec<(&str, String)>) {
        self.sections.push(Section::Pairs(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()));
    }

    pub fn table(&mut self, headers: &[&str], rows: Vec<Vec<String>>) {
        self.sections.push(Section::Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows });
    }

    pub fn emit(&self, format: Format, run: &Map<String, Value>, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let mut doc = Map::new();
                doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
                doc.insert("command".into(), json!(self.command));
                for (k, v) in run {
                    doc.insert(k.clone(), v.clone());
                }
                doc.insert("outcome".into(), json!(outcome_name(self.outcome)));
                for (k, v) in &self.json {
                    doc.insert(k.clone(), v.clone());
                }
                let text = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
                writeln!(out, "{text}")
            }
            Format::Csv => self.emit_csv(out),
            Format::Table => self.emit_table(run, out),
        }
    }

    fn emit_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let table = self.sections.iter().find(|s| matches!(s, Section::Table { .. }));
        match table.or(self.sections.first()) {
            Some(Section::Table { headers, rows }) => {
                w.write_record(headers)?;
                for r in rows {
                    w.write_record(r)?;
                }
            }
            Some(Section::Pairs(pairs)) => {
                w.write_record(["key", "value"])?;
                for (k, v) in pairs {
                    w.write_record([k, v])?;
                }
            }
            None => {}
        }
        out.write_all(&w.into_inner().map_err(|e| e.into_error())?)
    }

    fn emit_table(&self, run: &Map<String, Value>, out: &mut dyn Write) -> std::io::Result<()> {
        let echo: Vec<String> = run.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "# {} ({})", self.command, echo.join(" "))?;
        for s in &self.sections {
            match s {
                Section::Pairs(pairs) => {
                    let w = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                    for (k, v) in pairs {
                        writeln!(out, "{k:<w$}  {v}")?;
                    }
                }
                Section::Table { headers, rows } => {
                    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
                    for r in rows {
                        for (i, c) in r.iter().enumerate() {
                            widths[i] = widths[i].max(c.chars().count());
                        }
                    }
                    let line = |cells: &[String]| -> String {
                        let parts: Vec<String> =
                            cells.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = widths[i])).collect();
                        parts.join("  ").trim_end().to_string()
                    };
                    writeln!(out, "{}", line(headers))?;
                    for r in rows {
                        writeln!(out, "{}", line(r))?;
                    }
                }
            }
            writeln!(out)?;
        }
        writeln!(out, "outcome: {}", outcome_name(self.outcome))
    }
}

pub fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Ok => "ok",
        Outcome::Undetermined => "undetermined",
        Outcome::Violation => "violation",
    }
}

pub fn dims_json(m: &Representation) -> Value {
    let names = m.algebra().quiver().vertices();
    let mut map = Map::new();
    for (v, d) in names.iter().zip(m.dims()) {
        map.insert(v.to_string(), json!(d));
    }
    Value::Object(map)
}

pub fn dims_text(m: &Representation) -> String {
    let parts: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn map_json(f: &ModuleMap) -> Value {
    let names = f.source().algebra().quiver().vertices();
    let mut map = Map::new();
    for (v, name) in names.iter().enumerate() {
        let c = f.comp(v);
        let rows: Vec<Vec<String>> =
            (0..c.rows()).map(|i| (0..c.cols()).map(|j| c.get(i, j).to_string()).collect()).collect();
        map.insert(name.to_string(), json!(rows));
    }
    Value::Object(map)
}

pub fn pd_json(r: &PdResult) -> Value {
    match r {
        PdResult::Finite(m) => json!({"kind": "Finite", "value": m}),
        PdResult::PeriodicInfinite(c) => json!({
            "kind": "PeriodicInfinite",
            "preperiod": c.preperiod,
            "period": c.period,
            "witness": map_json(&c.witness),
        }),
        PdResult::AtLeast(n) => json!({"kind": "AtLeast", "value": n}),
    }
}

pub fn pd_outcome(r: &PdResult) -> Outcome {
    if r.is_decided() {
        Outcome::Ok
    } else {
        Outcome::Undetermined
    }
}

pub fn evidence_json(e: &OnsetEvidence) -> Value {
    match e {
        OnsetEvidence::Terminated { pd } => json!({"kind": "Terminated", "pd": pd}),
        OnsetEvidence::Periodic { preperiod, period } => {
            json!({"kind": "Periodic", "preperiod": preperiod, "period": period})
        }
        OnsetEvidence::None { undetermined_pairs } => json!({"kind": "None", "undetermined_pairs": undetermined_pairs}),
    }
}

pub fn onset_json(o: &OnsetResult) -> Value {
    json!({
        "status": o.status.to_string(),
        "evidence": evidence_json(&o.evidence),
        "window": o.window,
    })
}

pub fn bound_json(b: Bound) -> Value {
    match b {
        Bound::Exact(v) => json!({"kind": "Exact", "value": v}),
        Bound::LowerBound(v) => json!({"kind": "LowerBound", "value": v}),
    }
}

pub fn ab_json(r: &AbResult) -> Value {
    let pairs: Vec<Value> =
        r.pairs.iter().map(|p| json!({"member": p.member, "onset": onset_json(&p.onset)})).collect();
    json!({
        "bound": bound_json(r.bound),
        "undetermined": r.undetermined,
        "pairs": pairs,
    })
}

pub fn statement_json(s: &StatementReport) -> Value {
    json!({
        "statement": s.statement,
        "status": s.status.to_string(),
        "checked": s.checked,
        "skipped": s.skipped,
        "failures": s.failures,
        "note": s.note,
    })
}

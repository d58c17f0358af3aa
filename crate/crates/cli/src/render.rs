//! JSON and plain-text renderings of a report.

use std::fmt::Write;

use serde_json::Value;

use crate::report::{Report, TagJson};

pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("reports always serialize")
}

fn value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_tags(out: &mut String, ts: &[TagJson]) {
    for t in ts {
        if t.note.is_empty() {
            let _ = writeln!(out, "    [{}]", t.rule);
        } else {
            let _ = writeln!(out, "    [{}] {}", t.rule, t.note);
        }
    }
}

pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", crate::descriptor::to_json(&report.input));
    match &report.uc {
        Some(uc) => {
            let upper = uc.upper.as_ref().map_or_else(|| String::from("?"), value);
            match &uc.exact {
                Some(e) => {
                    let _ = writeln!(out, "uc: {}", value(e));
                }
                None => {
                    let _ = writeln!(out, "uc: [{}, {}]", value(&uc.lower), upper);
                }
            }
            if let Some(c) = &uc.candidates {
                let items: Vec<String> = c.iter().map(value).collect();
                let _ = writeln!(out, "uc candidates: {{{}}}", items.join(", "));
            }
            write_tags(&mut out, &uc.provenance);
        }
        None => {
            let _ = writeln!(out, "uc: unknown");
        }
    }
    let r = &report.rdim;
    match (r.status, r.lower, r.upper) {
        ("exact", Some(v), _) => {
            let _ = writeln!(out, "rdim: {v}");
        }
        ("interval", Some(a), Some(b)) => {
            let _ = writeln!(out, "rdim: [{a}, {b}]");
        }
        _ => {
            let _ = writeln!(out, "rdim: unknown");
        }
    }
    write_tags(&mut out, &r.provenance);
    let _ = writeln!(out, "relation: {}", report.relation);
    for n in &report.notes {
        let _ = writeln!(out, "note: {n}");
    }
    for c in &report.criteria {
        let hyp = c.hypothesis.map(|h| format!(" (assuming {h})")).unwrap_or_default();
        let _ = writeln!(out, "criterion {}{}: {}", c.name, hyp, value(&c.result));
        write_tags(&mut out, &c.provenance);
    }
    if let Some(c) = &report.certificate {
        let _ = writeln!(
            out,
            "certificate: {} exponents e in [{}, {}], line bundle exists: {}, verified: {}",
            c.exponents_checked, c.first_e, c.last_e, c.line_bundle_exists, c.verified
        );
    }
    if !report.conjectures_used.is_empty() {
        let _ = writeln!(out, "CONJECTURES USED: {}", report.conjectures_used.join(", "));
    }
    for d in &report.diagnostics {
        let _ = writeln!(out, "diagnostic: {d}");
    }
    out
}

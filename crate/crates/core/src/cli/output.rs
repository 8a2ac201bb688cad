//! Output documents and their text, CSV and JSON renderings.
//!
//! Every number is exact: rationals are written `p/q` in lowest terms, or
//! `p` when integral. JSON objects are emitted with sorted keys, so parsing
//! a document and pretty-printing it again reproduces it byte for byte.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::isomorphism::{CheckRecord, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Info,
    DegTable,
    MultTable,
    PairingMatrix,
    XiTable,
    Poincare,
    VerifyReport,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Info => "info",
            Kind::DegTable => "deg-table",
            Kind::MultTable => "mult-table",
            Kind::PairingMatrix => "pairing-matrix",
            Kind::XiTable => "xi-table",
            Kind::Poincare => "poincare",
            Kind::VerifyReport => "verify-report",
        }
    }
}

/// A labelled grid of preformatted cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub ring: Option<&'static str>,
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLine {
    pub eta: String,
    pub xi: String,
    pub degree: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Info {
    pub n: usize,
    pub total: i64,
    pub product: i64,
    pub gorenstein: bool,
    pub basis: Vec<BasisLine>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Table(Table),
    Info(Info),
    Report(VerificationReport),
    /// Many weight vectors at once; text and JSON list only the failures.
    Sweep(VerificationReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputDocument {
    pub kind: Kind,
    pub weights: Option<Vec<i64>>,
    pub payload: Payload,
}

fn weights_label(weights: &[i64]) -> String {
    let parts: Vec<String> = weights.iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
fn grid(lines: &[Vec<String>]) -> String {
    let cols = lines.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            lines
                .iter()
                .filter_map(|l| l.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for line in lines {
        let mut text = String::new();
        for (c, cell) in line.iter().enumerate() {
            if c > 0 {
                text.push_str("  ");
            }
            text.push_str(cell);
            let pad = widths[c] - cell.chars().count();
            text.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

impl Table {
    fn lines(&self) -> Vec<Vec<String>> {
        let mut lines = Vec::with_capacity(self.rows.len() + 1);
        lines.push(std::iter::once(self.corner.clone()).chain(self.columns.iter().cloned()).collect());
        for (label, cells) in &self.rows {
            lines.push(std::iter::once(label.clone()).chain(cells.iter().cloned()).collect());
        }
        lines
    }
}

fn record_line(r: &CheckRecord) -> String {
    let mut line = format!(
        "{}  {}  {}  {} inputs",
        status(r.passed()).to_uppercase(),
        weights_label(&r.weights),
        r.check,
        r.inputs
    );
    if let Some(c) = &r.counterexample {
        let _ = write!(
            line,
            "\n      operands: {}\n      lhs: {}\n      rhs: {}",
            c.operands.join(", "),
            c.lhs,
            c.rhs
        );
    }
    line
}

fn record_json(r: &CheckRecord) -> Value {
    json!({
        "check": r.check,
        "weights": r.weights,
        "inputs": r.inputs,
        "passed": r.passed(),
        "counterexample": r.counterexample.as_ref().map(|c| json!({
            "operands": c.operands,
            "lhs": c.lhs,
            "rhs": c.rhs,
        })),
    })
}

fn vector_count(report: &VerificationReport) -> usize {
    let mut seen: Vec<&Vec<i64>> = report.records().iter().map(|r| &r.weights).collect();
    seen.dedup();
    seen.len()
}

impl OutputDocument {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Table(t) => {
                out.push_str(&t.title);
                out.push('\n');
                out.push_str(&grid(&t.lines()));
            }
            Payload::Info(info) => {
                let w = self.weights.as_deref().unwrap_or_default();
                let _ = writeln!(out, "w = {}", weights_label(w));
                let _ = writeln!(out, "n = {}", info.n);
                let _ = writeln!(out, "|w| = {}", info.total);
                let _ = writeln!(out, "<w> = {}", info.product);
                let _ = writeln!(out, "gorenstein = {}", info.gorenstein);
                let mut lines = vec![vec!["basis".to_string(), "xi".to_string(), "degree".to_string()]];
                lines.extend(
                    info.basis
                        .iter()
                        .map(|b| vec![b.eta.clone(), b.xi.clone(), b.degree.clone()]),
                );
                out.push_str(&grid(&lines));
            }
            Payload::Report(report) => {
                for r in report.records() {
                    out.push_str(&record_line(r));
                    out.push('\n');
                }
                let _ = writeln!(
                    out,
                    "status: {} ({} checks, {} inputs)",
                    status(report.passed()),
                    report.records().len(),
                    report.total_inputs()
                );
            }
            Payload::Sweep(report) => {
                for r in report.failures() {
                    out.push_str(&record_line(r));
                    out.push('\n');
                }
                let _ = writeln!(
                    out,
                    "status: {} ({} weight vectors, {} checks, {} inputs, {} failures)",
                    status(report.passed()),
                    vector_count(report),
                    report.records().len(),
                    report.total_inputs(),
                    report.failures().count()
                );
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let mut write = |row: Vec<String>| writer.write_record(&row).expect("in-memory csv");
        match &self.payload {
            Payload::Table(t) => {
                for line in t.lines() {
                    write(line);
                }
            }
            Payload::Info(info) => {
                write(vec!["field".into(), "value".into()]);
                write(vec!["n".into(), info.n.to_string()]);
                write(vec!["total".into(), info.total.to_string()]);
                write(vec!["product".into(), info.product.to_string()]);
                write(vec!["gorenstein".into(), info.gorenstein.to_string()]);
                for b in &info.basis {
                    write(vec!["basis".into(), b.eta.clone(), b.xi.clone(), b.degree.clone()]);
                }
            }
            Payload::Report(report) | Payload::Sweep(report) => {
                write(
                    ["check", "weights", "inputs", "status", "operands", "lhs", "rhs"]
                        .map(String::from)
                        .to_vec(),
                );
                for r in report.records() {
                    let weights: Vec<String> = r.weights.iter().map(i64::to_string).collect();
                    let (operands, lhs, rhs) = match &r.counterexample {
                        Some(c) => (c.operands.join("; "), c.lhs.clone(), c.rhs.clone()),
                        None => Default::default(),
                    };
                    write(vec![
                        r.check.clone(),
                        weights.join(" "),
                        r.inputs.to_string(),
                        status(r.passed()).into(),
                        operands,
                        lhs,
                        rhs,
                    ]);
                }
            }
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8 csv")
    }

    pub fn to_json_value(&self) -> Value {
        let payload = match &self.payload {
            Payload::Table(t) => json!({
                "title": t.title,
                "ring": t.ring,
                "corner": t.corner,
                "columns": t.columns,
                "rows": t.rows.iter().map(|(label, _)| label).collect::<Vec<_>>(),
                "cells": t.rows.iter().map(|(_, cells)| cells).collect::<Vec<_>>(),
            }),
            Payload::Info(info) => json!({
                "n": info.n,
                "total": info.total,
                "product": info.product,
                "gorenstein": info.gorenstein,
                "basis": info.basis.iter().map(|b| json!({
                    "eta": b.eta,
                    "xi": b.xi,
                    "degree": b.degree,
                })).collect::<Vec<_>>(),
            }),
            Payload::Report(report) => json!({
                "status": status(report.passed()),
                "inputs": report.total_inputs(),
                "checks": report.records().iter().map(record_json).collect::<Vec<_>>(),
            }),
            Payload::Sweep(report) => json!({
                "status": status(report.passed()),
                "vectors": vector_count(report),
                "checks": report.records().len(),
                "inputs": report.total_inputs(),
                "failures": report.failures().map(record_json).collect::<Vec<_>>(),
            }),
        };
        json!({
            "kind": self.kind.as_str(),
            "weights": self.weights,
            "payload": payload,
        })
    }

    pub fn to_json(&self) -> String {
        canonical_json(&self.to_json_value())
    }
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn canonical_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values always serialize");
    text.push('\n');
    text
}

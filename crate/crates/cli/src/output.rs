use std::fmt::Display;
use std::io::Write;

use clap::ValueEnum;
use ncschur::poly::NCPoly;
use ncschur::scalar::{Laurent, Ring};
use ncschur::symfunc::{FundExpansion, SchurExpansion};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

/// Writes either plain text lines or one JSON record per line.
pub struct Out {
    pub format: Format,
    buf: Vec<u8>,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out { format, buf: Vec::new() }
    }

    fn record(&mut self, text: String, value: Value) {
        let line = match self.format {
            Format::Text => text,
            Format::JsonLines => value.to_string(),
        };
        self.buf.extend_from_slice(line.as_bytes());
        self.buf.push(b'\n');
    }

    /// `key: value`.
    pub fn field(&mut self, key: &str, value: impl Display) {
        let v = value.to_string();
        self.record(format!("{key}: {v}"), json!({ key: v }));
    }

    pub fn raw(&mut self, text: &str) {
        for line in text.lines() {
            self.record(line.to_string(), json!({ "line": line }));
        }
    }

    pub fn schur(&mut self, s: &SchurExpansion<BigInt>) {
        if s.is_zero() {
            self.record("0".into(), json!({ "partition": null, "coeff": "0" }));
        }
        for (l, c) in s.terms() {
            self.record(format!("{l} : {c}"), json!({ "partition": l.to_text(), "coeff": c.to_string() }));
        }
    }

    pub fn q_schur(&mut self, s: &SchurExpansion<Laurent>) {
        for (t, part) in ncschur::llt::q_expansion_lines(s) {
            for (l, c) in part.terms() {
                self.record(
                    format!("q^{t} : {l} : {c}"),
                    json!({ "q": t, "partition": l.to_text(), "coeff": c.to_string() }),
                );
            }
        }
    }

    pub fn fundamental<R: Ring>(&mut self, f: &FundExpansion<R>) {
        for (a, c) in f.terms() {
            self.record(
                format!("Q[{}] : {c}", a.to_text()),
                json!({ "composition": a.to_text(), "coeff": c.to_string() }),
            );
        }
    }

    pub fn poly<R: Ring>(&mut self, p: &NCPoly<R>, n: u8) {
        for (w, c) in p.terms() {
            self.record(format!("{c} {}", w.to_text(n)), json!({ "word": w.to_text(n), "coeff": c.to_string() }));
        }
    }

    pub fn flush(self) -> std::io::Result<()> {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(&self.buf)?;
        stdout.flush()
    }
}

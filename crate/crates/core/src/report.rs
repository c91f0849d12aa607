//! Machine-readable command reports.
//!
//! JSON layout:
//!
//! ```text
//! {"command": "...", "n": 5, "status": "pass", "seed": 7,
//!  "metrics": [{"name": "...", "value": 0.0, "bound": 1e-10}],
//!  "payload": {"rows": 5, "cols": 5, "entries": [[re, im], ...]}}
//! ```
//!
//! `seed` is present only for seeded commands, `payload` is `null` when the
//! command produces no matrix, and `entries` is row-major.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::linalg::{fmt_complex, Complex, ComplexDense};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A measured quantity with its acceptance bound; passes iff `value <= bound`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub bound: f64,
}

impl Metric {
    pub fn new(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Self {
            name: name.into(),
            value,
            bound,
        }
    }

    pub fn passed(&self) -> bool {
        self.value <= self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Payload {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

impl Payload {
    pub fn from_dense(m: &ComplexDense) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_dense(&self) -> Option<ComplexDense> {
        let data = self.entries.iter().map(|&[re, im]| Complex::new(re, im)).collect();
        ComplexDense::new(self.rows, self.cols, data).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandReport {
    pub command: String,
    pub n: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub metrics: Vec<Metric>,
    #[serde(default)]
    pub payload: Option<Payload>,
}

impl CommandReport {
    /// Status is derived from the metrics.
    pub fn new(command: impl Into<String>, n: usize, metrics: Vec<Metric>, payload: Option<Payload>) -> Self {
        let status = if metrics.iter().all(Metric::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            command: command.into(),
            n,
            status,
            seed: None,
            metrics,
            payload,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Pretty => self.render_pretty(),
        }
    }

    fn payload_cells(&self) -> Option<(usize, Vec<String>)> {
        self.payload.as_ref().map(|p| {
            let cells = p
                .entries
                .iter()
                .map(|&[re, im]| fmt_complex(Complex::new(re, im)))
                .collect();
            (p.cols.max(1), cells)
        })
    }

    /// Metrics table (`name,value,bound`), then a blank line and the payload
    /// rows when there is a payload.
    fn render_csv(&self) -> String {
        let mut out = String::from("name,value,bound\n");
        for m in &self.metrics {
            let _ = writeln!(out, "{},{:e},{:e}", m.name, m.value, m.bound);
        }
        if let Some((cols, cells)) = self.payload_cells() {
            out.push('\n');
            for row in cells.chunks(cols) {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn render_pretty(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let _ = write!(out, "{} (n = {}): {status}", self.command, self.n);
        if let Some(seed) = self.seed {
            let _ = write!(out, "  [seed {seed}]");
        }
        out.push('\n');
        for m in &self.metrics {
            let mark = if m.passed() { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  {mark} {:<48} {:>12.3e} <= {:.3e}", m.name, m.value, m.bound);
        }
        if let Some(m) = self.payload.as_ref().and_then(Payload::to_dense) {
            let _ = write!(out, "{m}");
        }
        out
    }
}

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::args::Format;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub target: f64,
    pub got: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `|got - target| <= tol`.
    pub fn close(name: impl Into<String>, target: f64, got: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            target,
            got,
            tol,
            pass: (got - target).abs() <= tol,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(command: &str, params: BTreeMap<String, String>, checks: Vec<Check>) -> Self {
        let verdict = if checks.iter().all(|c| c.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Report {
            command: command.to_string(),
            params,
            checks,
            verdict,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

/// A numeric table with named columns.
#[derive(Clone, Debug)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

pub fn write_report(report: &Report, format: Format, out: Option<&Path>) -> Result<()> {
    let mut w = sink(out)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, report)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            for c in &report.checks {
                csv.serialize(c)?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

pub fn write_table(table: &Table, format: Format, out: Option<&Path>) -> Result<()> {
    let mut w = sink(out)?;
    match format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(&table.columns)?;
            for row in &table.rows {
                csv.write_record(row.iter().map(|v| format!("{v:e}")))?;
            }
            csv.flush()?;
        }
        Format::Json => {
            let rows: Vec<BTreeMap<&str, f64>> = table
                .rows
                .iter()
                .map(|r| {
                    table
                        .columns
                        .iter()
                        .map(String::as_str)
                        .zip(r.iter().copied())
                        .collect()
                })
                .collect();
            serde_json::to_writer_pretty(&mut w, &rows)?;
            writeln!(w)?;
        }
    }
    Ok(())
}

//! Command-line front end: `spectrum`, `sample`, `verify`, `pct` and `qes`.
//!
//! Every command except `sample` emits a report
//! `{command, params, checks: [{name, target, got, tol, pass}], verdict}`.
//! Exit codes: 0 all checks pass, 1 a check failed, 2 invalid parameters.

pub mod args;
pub mod commands;
pub mod params;
pub mod report;
pub mod verify;

use anyhow::Result;

use args::{Cli, Command};
use report::{write_report, write_table};

pub fn run(cli: &Cli) -> Result<i32> {
    let report = match &cli.command {
        Command::Sample(c) => {
            let table = commands::sample(c)?;
            write_table(&table, c.format, c.out.as_deref())?;
            return Ok(0);
        }
        Command::Spectrum(c) => (commands::spectrum(c)?, c),
        Command::Pct(a) => (commands::pct(&a.common, a.direction)?, &a.common),
        Command::Qes(c) => (commands::qes(c)?, c),
        Command::Verify(a) => (verify::verify(a)?, &a.common),
    };
    let (report, common) = report;
    write_report(&report, common.format, common.out.as_deref())?;
    Ok(report.exit_code())
}

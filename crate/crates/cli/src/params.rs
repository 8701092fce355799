use std::collections::BTreeMap;

use anyhow::{anyhow, Result};
use rextmorse::rational::{format_rational, parse_rational_with_form};
use rextmorse::Q;

use crate::args::Common;

/// Parsed rational inputs plus the echo of every given parameter.
#[derive(Debug, Default)]
pub struct Params {
    pub echo: BTreeMap<String, String>,
    /// Names of parameters that were given in decimal form.
    pub decimal: Vec<String>,
}

impl Params {
    pub fn from_common(c: &Common) -> Self {
        let mut p = Params::default();
        if let Some(f) = c.family {
            p.echo.insert("family".into(), f.to_string());
        }
        if let Some(t) = c.ty {
            p.echo.insert("type".into(), t.to_string());
        }
        if let Some(m) = c.m {
            p.echo.insert("m".into(), m.to_string());
        }
        if let Some(nu) = c.nu {
            p.echo.insert("nu".into(), nu.to_string());
        }
        p
    }

    /// Parses `raw` (or `default`) as an exact rational and records it.
    pub fn rational(&mut self, name: &str, raw: Option<&str>, default: Option<&str>) -> Result<Option<Q>> {
        let Some(text) = raw.or(default) else {
            return Ok(None);
        };
        let (value, decimal) = parse_rational_with_form(text)?;
        if decimal && raw.is_some() {
            eprintln!(
                "warning: --{name} {text} given as a decimal, read as {}; exact identity checks will be skipped",
                format_rational(&value)
            );
            self.decimal.push(name.to_string());
        }
        self.echo.insert(name.to_string(), format_rational(&value));
        Ok(Some(value))
    }

    pub fn required(&mut self, name: &str, raw: Option<&str>) -> Result<Q> {
        self.rational(name, raw, None)?
            .ok_or_else(|| anyhow!("missing required parameter --{name}"))
    }

    pub fn exact(&self) -> bool {
        self.decimal.is_empty()
    }
}

pub fn require<T: Copy>(name: &str, v: Option<T>) -> Result<T> {
    v.ok_or_else(|| anyhow!("missing required parameter --{name}"))
}

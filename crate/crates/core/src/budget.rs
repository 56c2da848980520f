//! Resource budgets for exhaustive searches.
//!
//! Budgets come from defaults, an optional `key = value` file and the
//! `PURSUIT_BUDGET_STATES` environment variable, in increasing precedence
//! (command-line flags override all three in the CLI).

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "PURSUIT_BUDGET_STATES";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Cap on game states allocated by the retrograde solver.
    pub max_states: u64,
    /// Cap on (position, policy memory) states visited by the verifiers.
    pub max_product_states: u64,
    /// Wall-clock limit per solve or verification.
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 80_000_000,
            max_product_states: 4_000_000,
            time_limit: None,
        }
    }
}

impl Budget {
    /// Defaults with the environment override applied.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        b.apply_env()?;
        Ok(b)
    }

    pub fn apply_env(&mut self) -> Result<()> {
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            self.max_states = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={v:?} is not an integer")))?;
        }
        Ok(())
    }

    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", lineno + 1)))?;
            let value = value.trim().trim_matches('"');
            let int = || {
                value
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("config line {}: {value:?} is not an integer", lineno + 1)))
            };
            match key.trim() {
                "max_states" => self.max_states = int()?,
                "max_product_states" => self.max_product_states = int()?,
                "time_limit_secs" => self.time_limit = Some(Duration::from_secs(int()?)),
                other => {
                    return Err(Error::Parse(format!(
                        "config line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_states(&self, what: &'static str, required: u64) -> Result<()> {
        if required > self.max_states {
            Err(Error::Resource {
                what,
                required,
                budget: self.max_states,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn deadline(&self) -> Deadline {
        Deadline(self.time_limit.map(|t| Instant::now() + t))
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Deadline(Option<Instant>);

impl Deadline {
    pub(crate) fn check(&self, what: &'static str) -> Result<()> {
        match self.0 {
            Some(t) if Instant::now() > t => Err(Error::Timeout { what }),
            _ => Ok(()),
        }
    }
}

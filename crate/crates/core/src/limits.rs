//! Size gates for the exponential searches.
//!
//! Every gate can be raised (or lowered) at once with the `CONNSYS_MAX_N`
//! environment variable; the override is read once per process.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    /// Backtracking enumeration of ultrafilters / tangles.
    Enumeration,
    /// Exact branch-width and linear-width.
    Width,
    /// Literal (MA3) quantification for majority systems.
    Majority,
    /// Ultrafilter number (search over generating prefilters).
    UltrafilterNumber,
    /// Exhaustive antichain and filter searches in the audits.
    Antichain,
}

impl Gate {
    pub const fn default_max(self) -> usize {
        match self {
            Gate::Enumeration => 8,
            Gate::Width => 10,
            Gate::Majority => 8,
            Gate::UltrafilterNumber => 6,
            Gate::Antichain => 5,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Gate::Enumeration => "family enumeration",
            Gate::Width => "exact width search",
            Gate::Majority => "majority-system checking",
            Gate::UltrafilterNumber => "ultrafilter number",
            Gate::Antichain => "exhaustive antichain and filter audits",
        }
    }
}

fn override_n() -> Option<usize> {
    static OVERRIDE: OnceLock<Option<usize>> = OnceLock::new();
    *OVERRIDE.get_or_init(|| std::env::var("CONNSYS_MAX_N").ok()?.trim().parse().ok())
}

pub fn max_n(gate: Gate) -> usize {
    override_n().unwrap_or(gate.default_max())
}

pub fn check(gate: Gate, n: usize) -> Result<()> {
    let max = max_n(gate);
    if n > max {
        Err(Error::SizeLimit { what: gate.name(), n, max })
    } else {
        Ok(())
    }
}

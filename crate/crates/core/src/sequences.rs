//! Named integer sequences, each backed by one closed-form evaluator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinatorics::{fuss_catalan_sequence, KParameter};
use crate::error::{Error, Result};
use crate::formulas::{dm_count, early_adventure_totals, last_downrun_totals};
use crate::series::ubar_series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Row `j -> dm_count(k, n, j)` for a fixed number of up-steps `n`.
    EndLevelCount,
    /// `m -> FC(m+1) - FC(m)`.
    LastDownrunTotal,
    /// `m -> k/(m+1) binomial((k+1)m, m)`, with `k` at `m = 0`.
    EarlyAdventure,
    FussCatalan,
    /// Coefficients of `ū`; same values as [`SequenceKind::FussCatalan`].
    UbarCoefficients,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 5] = [
        SequenceKind::EndLevelCount,
        SequenceKind::LastDownrunTotal,
        SequenceKind::EarlyAdventure,
        SequenceKind::FussCatalan,
        SequenceKind::UbarCoefficients,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::EndLevelCount => "end-level-count",
            SequenceKind::LastDownrunTotal => "last-downrun-total",
            SequenceKind::EarlyAdventure => "early-adventure",
            SequenceKind::FussCatalan => "fuss-catalan",
            SequenceKind::UbarCoefficients => "ubar-coefficients",
        }
    }

    pub fn needs_n(self) -> bool {
        self == SequenceKind::EndLevelCount
    }

    /// OEIS entries covering this statistic for `k = 2, 3, 4`.
    pub fn related_oeis(self, k: KParameter) -> Option<&'static str> {
        let ids = match self {
            SequenceKind::LastDownrunTotal => ["A334680", "A334682", "A334719"],
            SequenceKind::EarlyAdventure => ["A007226", "A007228", "A124724"],
            _ => return None,
        };
        match k.get() {
            2..=4 => Some(ids[k.get() as usize - 2]),
            _ => None,
        }
    }

    /// Terms `0..=m_max`. `n` is the number of up-steps for
    /// [`SequenceKind::EndLevelCount`] and ignored otherwise.
    pub fn terms(self, k: KParameter, m_max: usize, n: Option<usize>) -> Result<Vec<BigInt>> {
        Ok(match self {
            SequenceKind::EndLevelCount => {
                let n = n.ok_or(Error::MissingParameter("n"))?;
                (0..=m_max).map(|j| dm_count(k, n, j)).collect()
            }
            SequenceKind::LastDownrunTotal => last_downrun_totals(k, m_max),
            SequenceKind::EarlyAdventure => early_adventure_totals(k, m_max),
            SequenceKind::FussCatalan => fuss_catalan_sequence(k, m_max),
            SequenceKind::UbarCoefficients => ubar_series(k, m_max).coeffs().to_vec(),
        })
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SequenceKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or_else(|| format!("unknown sequence kind '{s}'"))
    }
}

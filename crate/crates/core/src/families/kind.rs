use std::fmt;
use std::str::FromStr;

use super::axioms::Axiom;
use crate::error::Error;

/// Which deletion axiom a single-filter uses in place of (Q1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingleMode {
    /// Deleting `e` requires `f({e}) <= k`.
    QS1,
    /// Plain single-element deletion.
    QSD1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Filter,
    Ultrafilter,
    WeakFilter,
    QuasiFilter,
    SingleFilter(SingleMode),
    SingleUltrafilter(SingleMode),
    Tangle,
    Prefilter,
    UltraPrefilter,
    FilterSubbase,
    UltrafilterSubbase,
    PiSystem,
    LambdaSystem,
    Superfilter,
    SigmaFilter,
    ClosureSystem,
    UnionClosedSystem,
    IndependenceSystem,
    MajoritySystem,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 21] = [
        FamilyKind::Filter,
        FamilyKind::Ultrafilter,
        FamilyKind::WeakFilter,
        FamilyKind::QuasiFilter,
        FamilyKind::SingleFilter(SingleMode::QS1),
        FamilyKind::SingleFilter(SingleMode::QSD1),
        FamilyKind::SingleUltrafilter(SingleMode::QS1),
        FamilyKind::SingleUltrafilter(SingleMode::QSD1),
        FamilyKind::Tangle,
        FamilyKind::Prefilter,
        FamilyKind::UltraPrefilter,
        FamilyKind::FilterSubbase,
        FamilyKind::UltrafilterSubbase,
        FamilyKind::PiSystem,
        FamilyKind::LambdaSystem,
        FamilyKind::Superfilter,
        FamilyKind::SigmaFilter,
        FamilyKind::ClosureSystem,
        FamilyKind::UnionClosedSystem,
        FamilyKind::IndependenceSystem,
        FamilyKind::MajoritySystem,
    ];

    /// The axioms checked for this kind, in reporting order.
    pub fn axioms(self) -> &'static [Axiom] {
        use Axiom::*;
        match self {
            FamilyKind::Filter => &[NonEmpty, Q0, Q1, Q2, Q3],
            FamilyKind::Ultrafilter => &[NonEmpty, Q0, Q1, Q2, Q3, Q4],
            FamilyKind::WeakFilter => &[NonEmpty, Q0, QW1, Q2, Q3],
            FamilyKind::QuasiFilter => &[NonEmpty, Q0, QQ1, Q2, Q3],
            FamilyKind::SingleFilter(SingleMode::QS1) => &[NonEmpty, Q0, QS1, Q2, Q3],
            FamilyKind::SingleFilter(SingleMode::QSD1) => &[NonEmpty, Q0, QSD1, Q2, Q3],
            FamilyKind::SingleUltrafilter(SingleMode::QS1) => &[NonEmpty, Q0, QS1, Q2, Q3, Q4],
            FamilyKind::SingleUltrafilter(SingleMode::QSD1) => &[NonEmpty, Q0, QSD1, Q2, Q3, Q4],
            FamilyKind::Tangle => &[NonEmpty, T1, T2, T3, T4],
            FamilyKind::Prefilter => &[NonEmpty, P1, P2, P3],
            FamilyKind::UltraPrefilter => &[NonEmpty, P1, P2, P3, P4],
            FamilyKind::FilterSubbase => &[SB1, SB2, SB3],
            FamilyKind::UltrafilterSubbase => &[SB1, SB2, SB3, SB4],
            FamilyKind::PiSystem => &[PI1, PI2],
            FamilyKind::LambdaSystem => &[LS1, LS2, LS3],
            FamilyKind::Superfilter => &[NonEmpty, SUF1, SUF2, SUF3],
            FamilyKind::SigmaFilter => &[SIF1, SIF2, SIF3],
            FamilyKind::ClosureSystem => &[CL1, CL2],
            FamilyKind::UnionClosedSystem => &[UC1, UC2],
            FamilyKind::IndependenceSystem => &[IN1, IN2],
            FamilyKind::MajoritySystem => &[MA1, MA2, MA3],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Filter => "filter",
            FamilyKind::Ultrafilter => "ultrafilter",
            FamilyKind::WeakFilter => "weak_filter",
            FamilyKind::QuasiFilter => "quasi_filter",
            FamilyKind::SingleFilter(SingleMode::QS1) => "single_filter",
            FamilyKind::SingleFilter(SingleMode::QSD1) => "single_filter_qsd1",
            FamilyKind::SingleUltrafilter(SingleMode::QS1) => "single_ultrafilter",
            FamilyKind::SingleUltrafilter(SingleMode::QSD1) => "single_ultrafilter_qsd1",
            FamilyKind::Tangle => "tangle",
            FamilyKind::Prefilter => "prefilter",
            FamilyKind::UltraPrefilter => "ultra_prefilter",
            FamilyKind::FilterSubbase => "filter_subbase",
            FamilyKind::UltrafilterSubbase => "ultrafilter_subbase",
            FamilyKind::PiSystem => "pi_system",
            FamilyKind::LambdaSystem => "lambda_system",
            FamilyKind::Superfilter => "superfilter",
            FamilyKind::SigmaFilter => "sigma_filter",
            FamilyKind::ClosureSystem => "closure_system",
            FamilyKind::UnionClosedSystem => "union_closed_system",
            FamilyKind::IndependenceSystem => "independence_system",
            FamilyKind::MajoritySystem => "majority_system",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family kind {s:?}")))
    }
}

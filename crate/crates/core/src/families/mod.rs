//! Explicit set families and the axiom checkers for every family kind.

mod axioms;
mod kind;

use std::collections::BTreeMap;

use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::error::{Error, Result};
use crate::limits::{self, Gate};
use crate::subset::Subset;

pub use axioms::Axiom;
pub use kind::{FamilyKind, SingleMode};

/// A finite family of subsets of an `n`-element ground set, with the
/// efficiency bound it is meant to satisfy.
///
/// Members are kept sorted by bitmask; membership is a bitmap lookup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    k: EfficiencyBound,
    members: Vec<Subset>,
    bitmap: Vec<u64>,
}

impl std::fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SetFamily(n={}, k={}, ", self.n, self.k.0)?;
        f.debug_list().entries(&self.members).finish()?;
        f.write_str(")")
    }
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, k: EfficiencyBound, members: I) -> Result<Self> {
        let full = Subset::full(n);
        let mut fam = SetFamily::empty(n, k);
        for m in members {
            if !m.is_subset_of(full) {
                return Err(Error::InvalidInput(format!("member {m:?} is outside the ground set")));
            }
            fam.insert(m);
        }
        fam.members.sort_unstable();
        Ok(fam)
    }

    pub fn empty(n: usize, k: EfficiencyBound) -> Self {
        SetFamily { n, k, members: Vec::new(), bitmap: vec![0; (1usize << n).div_ceil(64)] }
    }

    /// Builds from a membership indicator over all `2^n` subsets.
    pub(crate) fn from_indicator(n: usize, k: EfficiencyBound, member: &[bool]) -> Self {
        let members = member.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| Subset::from_bits(i as u32));
        let mut fam = SetFamily::empty(n, k);
        for m in members {
            fam.insert(m);
        }
        fam
    }

    fn insert(&mut self, s: Subset) {
        let i = s.index();
        if self.bitmap[i / 64] >> (i % 64) & 1 == 0 {
            self.bitmap[i / 64] |= 1 << (i % 64);
            self.members.push(s);
        }
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        let i = s.index();
        self.bitmap.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> EfficiencyBound {
        self.k
    }

    pub fn with_bound(&self, k: EfficiencyBound) -> SetFamily {
        SetFamily { k, ..self.clone() }
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    fn ensure_ground(&self, sys: &ConnectivitySystem) -> Result<()> {
        if self.n != sys.n() {
            Err(Error::GroundSetMismatch { expected: sys.n(), found: self.n })
        } else {
            Ok(())
        }
    }
}

/// Outcome of checking one family against one kind's axiom list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// The first violated axiom in the kind's fixed order.
    pub violated_axiom: Option<Axiom>,
    /// Up to three subsets exhibiting the violation, lowest bitmask first.
    pub witnesses: Vec<Subset>,
    /// Derived properties reported alongside the verdict: `FT1` for filter kinds,
    /// the other deletion axiom for single kinds.
    pub derived: BTreeMap<String, bool>,
}

/// Tri-state answer for quantified flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    Yes,
    No,
    /// True only because the quantifier range is empty.
    Vacuous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyFlags {
    pub principal: TriState,
    pub non_principal: TriState,
    pub uniform: bool,
}

/// Checks `fam` against every axiom of `kind`, over `fam`'s own bound.
pub fn check_family(sys: &ConnectivitySystem, fam: &SetFamily, kind: FamilyKind) -> Result<Verdict> {
    fam.ensure_ground(sys)?;
    if kind == FamilyKind::MajoritySystem {
        limits::check(Gate::Majority, sys.n())?;
    }
    let ctx = axioms::Ctx::new(sys, fam);
    let mut verdict = Verdict { holds: true, violated_axiom: None, witnesses: Vec::new(), derived: BTreeMap::new() };
    for &axiom in kind.axioms() {
        if let Some(w) = ctx.violation(axiom) {
            verdict.holds = false;
            verdict.violated_axiom = Some(axiom);
            verdict.witnesses = w;
            break;
        }
    }
    match kind {
        FamilyKind::Filter | FamilyKind::Ultrafilter => {
            verdict.derived.insert("FT1".into(), ctx.violation(Axiom::FT1).is_none());
        }
        FamilyKind::SingleFilter(mode) | FamilyKind::SingleUltrafilter(mode) => {
            let other = match mode {
                SingleMode::QS1 => Axiom::QSD1,
                SingleMode::QSD1 => Axiom::QS1,
            };
            verdict.derived.insert(other.label().into(), ctx.violation(other).is_none());
        }
        _ => {}
    }
    Ok(verdict)
}

/// Principality and uniformity flags.
///
/// `principal` is vacuous when no singleton is k-efficient. `non_principal`
/// quantifies over all singletons, so it is never vacuous on a non-empty ground set.
pub fn classify_family(sys: &ConnectivitySystem, fam: &SetFamily) -> Result<FamilyFlags> {
    fam.ensure_ground(sys)?;
    let n = sys.n();
    let efficient: Vec<Subset> = (0..n).map(Subset::singleton).filter(|&s| sys.is_efficient(s, fam.bound())).collect();
    let principal = if efficient.is_empty() {
        TriState::Vacuous
    } else if efficient.iter().all(|&s| fam.contains(s)) {
        TriState::Yes
    } else {
        TriState::No
    };
    let non_principal = if (0..n).any(|i| fam.contains(Subset::singleton(i))) { TriState::No } else { TriState::Yes };
    let uniform = fam.members().iter().all(|m| m.len() == n);
    Ok(FamilyFlags { principal, non_principal, uniform })
}

/// `{X∖A : A ∈ F}`, same bound.
pub fn complement_family(fam: &SetFamily) -> SetFamily {
    let n = fam.n();
    SetFamily::new(n, fam.bound(), fam.members().iter().map(|m| m.complement(n)))
        .expect("complements stay inside the ground set")
}

/// Result of the finite-intersection-property test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FipResult {
    /// Every finite intersection of members of `F ∪ {A}` is non-empty.
    pub has_fip: bool,
    /// The prediction `X∖A ∉ F`.
    pub complement_absent: bool,
}

impl FipResult {
    /// Whether the two sides agree; a disagreement is an audit finding.
    pub fn agrees(&self) -> bool {
        self.has_fip == self.complement_absent
    }
}

pub fn fip_check(sys: &ConnectivitySystem, fam: &SetFamily, a: Subset) -> Result<FipResult> {
    let verdict = check_family(sys, fam, FamilyKind::Filter)?;
    if let Some(axiom) = verdict.violated_axiom {
        return Err(Error::NotAFilter { axiom: axiom.label().into() });
    }
    // the intersection of all members and A is the smallest finite intersection
    let total = fam.members().iter().fold(a, |acc, &m| acc.intersection(m));
    Ok(FipResult { has_fip: !total.is_empty(), complement_absent: !fam.contains(sys.complement(a)) })
}

/// Keeps the members with `f(A) <= k_new` and relabels the family with the new bound.
pub fn truncate_order(sys: &ConnectivitySystem, fam: &SetFamily, k_new: EfficiencyBound) -> Result<SetFamily> {
    fam.ensure_ground(sys)?;
    if k_new > fam.bound() {
        return Err(Error::BoundIncrease { old: fam.bound().0, new: k_new.0 });
    }
    SetFamily::new(fam.n(), k_new, fam.members().iter().copied().filter(|&m| sys.is_efficient(m, k_new)))
}

#[cfg(test)]
mod tests;

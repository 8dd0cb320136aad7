//! Exhaustive checks of the chain, antichain, family and duality theorems on a
//! single instance. Each check reports "verified at scale" or a counterexample
//! that re-verifies against the literal statement.

use std::fmt;
use std::str::FromStr;

use crate::closure::{Closure, MeetRule};
use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::construction::{enumerate_families, EnumerationKind, EnumerationRequest};
use crate::decomposition::{
    branch_width, chain_to_decomposition, duality_audit, Certificate, Counterexample, DualityKind,
};
use crate::error::{Error, Result};
use crate::families::{check_family, complement_family, FamilyKind, SetFamily};
use crate::limits::{self, Gate};
use crate::order::{
    brute_force_max_antichain, brute_force_min_chain_cover, chain_partition_of, find_sequence_chain, max_antichain_of,
    SequenceMode, MAX_BRUTE_ANTICHAIN, MAX_BRUTE_COVER,
};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    AntichainMeetsUltrafilter,
    ExactlyOne,
    MaximalSetExclusion,
    NoChainNoUltrafilter,
    SequenceChainNoAntichain,
    SequenceChainNoNonPrincipalUltrafilter,
    SequenceChainDecomposition,
    EquivalenceList,
    CoTangleFilter,
    DualityUltrafilter,
    DualityTangle,
    DualitySingleUltrafilter,
    Dilworth,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::AntichainMeetsUltrafilter,
        TheoremId::ExactlyOne,
        TheoremId::MaximalSetExclusion,
        TheoremId::NoChainNoUltrafilter,
        TheoremId::SequenceChainNoAntichain,
        TheoremId::SequenceChainNoNonPrincipalUltrafilter,
        TheoremId::SequenceChainDecomposition,
        TheoremId::EquivalenceList,
        TheoremId::CoTangleFilter,
        TheoremId::DualityUltrafilter,
        TheoremId::DualityTangle,
        TheoremId::DualitySingleUltrafilter,
        TheoremId::Dilworth,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::AntichainMeetsUltrafilter => "T3.5-antichain-meets-ultrafilter",
            TheoremId::ExactlyOne => "T3.6-exactly-one",
            TheoremId::MaximalSetExclusion => "T3.8-maximal-set-exclusion",
            TheoremId::NoChainNoUltrafilter => "T3.9-no-chain-no-ultrafilter",
            TheoremId::SequenceChainNoAntichain => "TSC-no-antichain",
            TheoremId::SequenceChainNoNonPrincipalUltrafilter => "TSC-no-nonprincipal-ultrafilter",
            TheoremId::SequenceChainDecomposition => "TSC-decomposition",
            TheoremId::EquivalenceList => "T2.32-equivalence-list",
            TheoremId::CoTangleFilter => "co-tangle-filter",
            TheoremId::DualityUltrafilter => "duality-ultrafilter",
            TheoremId::DualityTangle => "duality-tangle",
            TheoremId::DualitySingleUltrafilter => "duality-single-ultrafilter",
            TheoremId::Dilworth => "dilworth",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidInput(format!("unknown theorem id {s:?}")))
    }
}

/// Parses `all`, a group name (`duality`, `dilworth`, `chains`, `families`) or a
/// comma-separated list of ids and groups. The result is deduplicated and in
/// canonical order.
pub fn parse_selection(spec: &str) -> Result<Vec<TheoremId>> {
    use TheoremId::*;
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let group: &[TheoremId] = match part.to_ascii_lowercase().as_str() {
            "all" => &TheoremId::ALL,
            "duality" => &[DualityUltrafilter, DualityTangle, DualitySingleUltrafilter],
            "dilworth" => &[Dilworth],
            "chains" => &[
                AntichainMeetsUltrafilter,
                ExactlyOne,
                MaximalSetExclusion,
                NoChainNoUltrafilter,
                SequenceChainNoAntichain,
                SequenceChainNoNonPrincipalUltrafilter,
                SequenceChainDecomposition,
            ],
            "families" => &[EquivalenceList, CoTangleFilter],
            _ => {
                out.push(part.parse()?);
                continue;
            }
        };
        out.extend_from_slice(group);
    }
    if out.is_empty() {
        return Err(Error::InvalidInput("empty theorem selection".into()));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditStatus {
    VerifiedAtScale,
    CounterexampleFound,
    /// The instance is above a size gate for this check.
    Skipped,
}

impl AuditStatus {
    pub fn name(self) -> &'static str {
        match self {
            AuditStatus::VerifiedAtScale => "verified_at_scale",
            AuditStatus::CounterexampleFound => "counterexample_found",
            AuditStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub theorem: TheoremId,
    pub instance: String,
    pub k: EfficiencyBound,
    pub status: AuditStatus,
    /// Groups of subsets: antichains, chains or families, as the notes describe.
    pub witness: Vec<Vec<Subset>>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AuditOptions {
    /// Worker threads; reports are merged in theorem order.
    pub parallel: usize,
}

pub fn run_theorem_audit(
    sys: &ConnectivitySystem,
    k: EfficiencyBound,
    theorems: &[TheoremId],
    options: AuditOptions,
) -> Result<Vec<AuditReport>> {
    let mut ids = theorems.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if options.parallel <= 1 || ids.len() <= 1 {
        return ids.into_iter().map(|t| audit_one(sys, k, t)).collect();
    }
    let workers = options.parallel.min(ids.len());
    let results: Vec<Result<AuditReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let ids = &ids;
                scope.spawn(move || {
                    ids.iter()
                        .enumerate()
                        .filter(|(i, _)| i % workers == w)
                        .map(|(i, &t)| (i, audit_one(sys, k, t)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut all: Vec<(usize, Result<AuditReport>)> =
            handles.into_iter().flat_map(|h| h.join().expect("audit worker panicked")).collect();
        all.sort_by_key(|(i, _)| *i);
        all.into_iter().map(|(_, r)| r).collect()
    });
    results.into_iter().collect()
}

fn instance_summary(sys: &ConnectivitySystem) -> String {
    format!("{} n={} max_f={}", sys.spec().kind_name(), sys.n(), sys.max_value())
}

struct Audit<'a> {
    sys: &'a ConnectivitySystem,
    k: EfficiencyBound,
    report: AuditReport,
}

impl<'a> Audit<'a> {
    fn note(&mut self, s: impl Into<String>) {
        self.report.notes.push(s.into());
    }

    fn found(&mut self, witness: Vec<Vec<Subset>>) {
        self.report.status = AuditStatus::CounterexampleFound;
        self.report.witness = witness;
    }

    fn ultrafilters(&self, k: EfficiencyBound, non_principal: bool) -> Result<Vec<SetFamily>> {
        let mut req = EnumerationRequest::new(EnumerationKind::Ultrafilter, k);
        if non_principal {
            req = req.non_principal();
        }
        enumerate_families(self.sys, &req)
    }

    fn nonempty_efficient(&self) -> Vec<Subset> {
        self.sys.enumerate_k_efficient(self.k).into_iter().filter(|a| !a.is_empty()).collect()
    }
}

fn audit_one(sys: &ConnectivitySystem, k: EfficiencyBound, theorem: TheoremId) -> Result<AuditReport> {
    let report = AuditReport {
        theorem,
        instance: instance_summary(sys),
        k,
        status: AuditStatus::VerifiedAtScale,
        witness: Vec::new(),
        notes: Vec::new(),
    };
    let mut a = Audit { sys, k, report };
    let outcome = match theorem {
        TheoremId::AntichainMeetsUltrafilter => antichain_meets_ultrafilter(&mut a),
        TheoremId::ExactlyOne => exactly_one(&mut a),
        TheoremId::MaximalSetExclusion => maximal_set_exclusion(&mut a),
        TheoremId::NoChainNoUltrafilter => no_chain_no_ultrafilter(&mut a),
        TheoremId::SequenceChainNoAntichain => sequence_chain_no_antichain(&mut a),
        TheoremId::SequenceChainNoNonPrincipalUltrafilter => sequence_chain_no_ultrafilter(&mut a),
        TheoremId::SequenceChainDecomposition => sequence_chain_decomposition(&mut a),
        TheoremId::EquivalenceList => equivalence_list(&mut a),
        TheoremId::CoTangleFilter => co_tangle_filter(&mut a),
        TheoremId::DualityUltrafilter => duality(&mut a, DualityKind::Ultrafilter),
        TheoremId::DualityTangle => duality(&mut a, DualityKind::Tangle),
        TheoremId::DualitySingleUltrafilter => duality(&mut a, DualityKind::SingleUltrafilter),
        TheoremId::Dilworth => dilworth(&mut a),
    };
    match outcome {
        Ok(()) => Ok(a.report),
        Err(Error::SizeLimit { what, n, max }) => {
            let mut report = a.report;
            report.status = AuditStatus::Skipped;
            report.witness.clear();
            report.notes = vec![format!("skipped: {what} is limited to n <= {max} (n = {n})")];
            Ok(report)
        }
        Err(e) => Err(e),
    }
}

/// Antichains of `family` that no further member can join.
pub fn maximal_antichains(family: &[Subset]) -> Vec<Vec<Subset>> {
    fn grow(family: &[Subset], from: usize, cur: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        if !cur.is_empty() && family.iter().all(|&s| cur.iter().any(|&c| c.comparable(s))) {
            out.push(cur.clone());
        }
        for i in from..family.len() {
            if cur.iter().all(|&c| !c.comparable(family[i])) {
                cur.push(family[i]);
                grow(family, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(family, 0, &mut Vec::new(), &mut out);
    out
}

fn antichain_meets_ultrafilter(a: &mut Audit<'_>) -> Result<()> {
    limits::check(Gate::Antichain, a.sys.n())?;
    let family = a.nonempty_efficient();
    let antichains = maximal_antichains(&family);
    let ultrafilters = a.ultrafilters(a.k, false)?;
    a.note(format!("{} maximal antichains x {} ultrafilters checked", antichains.len(), ultrafilters.len()));
    for u in &ultrafilters {
        if let Some(anti) = antichains.iter().find(|anti| !anti.iter().any(|&s| u.contains(s))) {
            a.note("witness: [maximal antichain, ultrafilter] with no common member");
            a.found(vec![anti.clone(), u.members().to_vec()]);
            return Ok(());
        }
    }
    Ok(())
}

fn exactly_one(a: &mut Audit<'_>) -> Result<()> {
    let ultrafilters = a.ultrafilters(a.k, false)?;
    let eff = a.sys.enumerate_k_efficient(a.k);
    // membership along any chain is upward closed: A ⊂ B, A ∈ U gives B ∈ U
    let upward = ultrafilters.iter().all(|u| {
        eff.iter().all(|&x| !u.contains(x) || eff.iter().all(|&y| !x.is_proper_subset_of(y) || u.contains(y)))
    });
    a.note(format!("membership along every chain is upward closed: {upward}"));
    if ultrafilters.is_empty() {
        a.note("no ultrafilter of this order exists");
        return Ok(());
    }
    // a chain breaks "exactly one" iff some sub-chain of one or two sets does
    for u in &ultrafilters {
        let m = u.members();
        for (i, &x) in m.iter().enumerate() {
            if let Some(&y) = m[i + 1..].iter().find(|&&y| x.is_proper_subset_of(y)) {
                a.note("witness: [chain with two members in the ultrafilter, ultrafilter]");
                a.found(vec![vec![x, y], m.to_vec()]);
                return Ok(());
            }
        }
    }
    let u = &ultrafilters[0];
    let outside = eff.iter().copied().find(|&x| !u.contains(x)).expect("the empty set is never a member");
    a.note("witness: [chain with no member in the ultrafilter, ultrafilter]");
    a.found(vec![vec![outside], u.members().to_vec()]);
    Ok(())
}

fn maximal_set_exclusion(a: &mut Audit<'_>) -> Result<()> {
    if a.k.0 == 0 {
        a.note("an ultrafilter of order k needs f <= k - 1; none exists at k = 0");
        return Ok(());
    }
    let lower = EfficiencyBound(a.k.0 - 1);
    let ultrafilters = a.ultrafilters(lower, false)?;
    let restricted = ultrafilters.iter().all(|u| u.members().iter().all(|&m| a.sys.evaluate(m) < a.k.0));
    a.note(format!("restricted to chain tops with f(A_m) = k: verified = {restricted}"));
    if let Some(u) = ultrafilters.first() {
        a.note("witness: [maximal chain top X, ultrafilter of order k containing it]");
        let full = a.sys.full();
        a.found(vec![vec![full], u.members().to_vec()]);
    }
    Ok(())
}

fn no_chain_no_ultrafilter(a: &mut Audit<'_>) -> Result<()> {
    a.note("the hypothesis never holds: {empty set} is a chain of every order");
    Ok(())
}

fn sequence_chain_no_antichain(a: &mut Audit<'_>) -> Result<()> {
    let Some(chain) = find_sequence_chain(a.sys, a.k, SequenceMode::SingleElement) else {
        a.note("hypothesis fails: no single-element sequence chain");
        return Ok(());
    };
    a.note(format!("sequence chain of length {} exists", chain.len()));
    let eff = a.sys.enumerate_k_efficient(a.k);
    for (i, &x) in eff.iter().enumerate() {
        if let Some(&y) = eff[i + 1..].iter().find(|&&y| !x.comparable(y)) {
            a.note("witness: [antichain of two k-efficient sets]");
            a.found(vec![vec![x, y]]);
            return Ok(());
        }
    }
    Ok(())
}

fn sequence_chain_no_ultrafilter(a: &mut Audit<'_>) -> Result<()> {
    let Some(chain) = find_sequence_chain(a.sys, a.k, SequenceMode::SingleElement) else {
        a.note("hypothesis fails: no single-element sequence chain");
        let general = enumerate_families(
            a.sys,
            &EnumerationRequest::new(EnumerationKind::Ultrafilter, a.k).non_principal().limit(1),
        )?;
        a.note(format!(
            "general chain reading ({{empty, X}} always qualifies): non-principal ultrafilter exists = {}",
            !general.is_empty()
        ));
        return Ok(());
    };
    let req = EnumerationRequest::new(EnumerationKind::Ultrafilter, a.k).non_principal().limit(1);
    match enumerate_families(a.sys, &req)?.into_iter().next() {
        Some(u) => {
            a.note("witness: [sequence chain, non-principal ultrafilter]");
            a.found(vec![chain.sets().to_vec(), u.members().to_vec()]);
        }
        None => {
            a.note(format!("sequence chain of length {} exists and no non-principal ultrafilter does", chain.len()))
        }
    }
    Ok(())
}

fn sequence_chain_decomposition(a: &mut Audit<'_>) -> Result<()> {
    let bw = branch_width(a.sys)?.width;
    let Some(chain) = find_sequence_chain(a.sys, a.k, SequenceMode::SingleElement) else {
        a.note("hypothesis fails: no single-element sequence chain");
        a.note(format!(
            "general chain reading ({{empty, X}} always qualifies): branch-width {bw} <= k is {}",
            bw <= a.k.0
        ));
        return Ok(());
    };
    let caterpillar = chain_to_decomposition(a.sys, chain.sets(), Some(a.k))?;
    a.note(format!("caterpillar width {}, branch-width {bw}", caterpillar.width));
    if bw > a.k.0 {
        a.note("witness: [sequence chain] although every decomposition has width above k");
        a.found(vec![chain.sets().to_vec()]);
    }
    Ok(())
}

fn equivalence_list(a: &mut Audit<'_>) -> Result<()> {
    let ultrafilters = a.ultrafilters(a.k, true)?;
    a.note(format!("{} non-principal ultrafilters checked", ultrafilters.len()));
    for u in &ultrafilters {
        let co = complement_family(u);
        let checks: [(&str, &SetFamily, FamilyKind); 7] = [
            ("co-tangle", &co, FamilyKind::Tangle),
            ("superfilter", u, FamilyKind::Superfilter),
            ("closure system", u, FamilyKind::ClosureSystem),
            ("sigma-filter", u, FamilyKind::SigmaFilter),
            ("pi-system", u, FamilyKind::PiSystem),
            ("weak ultrafilter", u, FamilyKind::WeakFilter),
            ("co-independence system", &co, FamilyKind::IndependenceSystem),
        ];
        for (name, fam, kind) in checks {
            let v = check_family(a.sys, fam, kind)?;
            if let Some(axiom) = v.violated_axiom {
                a.note(format!("{name} fails on {axiom}"));
                a.note("witness: [non-principal ultrafilter, axiom witnesses]");
                a.found(vec![u.members().to_vec(), v.witnesses]);
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Every filter, by include/exclude search over the non-empty k-efficient sets.
fn all_filters(sys: &ConnectivitySystem, k: EfficiencyBound, mut visit: impl FnMut(SetFamily) -> bool) {
    fn go<'a>(cands: &[Subset], i: usize, state: Closure<'a>, visit: &mut dyn FnMut(SetFamily) -> bool) -> bool {
        if i == cands.len() {
            return state.is_empty() || visit(state.to_family());
        }
        let s = cands[i];
        if state.contains(s) || state.is_forbidden(s) {
            return go(cands, i + 1, state, visit);
        }
        let mut with = state.clone();
        if with.add(s).is_ok() && !go(cands, i + 1, with, visit) {
            return false;
        }
        let mut without = state;
        without.forbid(s).is_ok() && go(cands, i + 1, without, visit)
    }
    let cands: Vec<Subset> = sys.enumerate_k_efficient(k).into_iter().filter(|a| !a.is_empty()).collect();
    go(&cands, 0, Closure::new(sys, k, MeetRule::Intersection), &mut visit);
}

fn co_tangle_filter(a: &mut Audit<'_>) -> Result<()> {
    limits::check(Gate::Antichain, a.sys.n())?;
    let mut count = 0usize;
    let mut failure = None;
    all_filters(a.sys, a.k, |f| {
        count += 1;
        let v = check_family(a.sys, &complement_family(&f), FamilyKind::Tangle).expect("same ground set");
        match v.violated_axiom {
            Some(axiom) => {
                failure = Some((f, axiom));
                false
            }
            None => true,
        }
    });
    match failure {
        Some((f, axiom)) => {
            a.note(format!("complement of the filter violates {axiom}"));
            a.note("witness: [filter]");
            a.found(vec![f.members().to_vec()]);
        }
        None => a.note(format!("{count} filters checked")),
    }
    Ok(())
}

fn duality(a: &mut Audit<'_>, kind: DualityKind) -> Result<()> {
    let v = duality_audit(a.sys, a.k, kind)?;
    a.note(format!("width {}, width <= k: {}, no obstruction: {}", v.width, v.width_side, v.obstruction_side));
    if kind == DualityKind::Tangle && a.k.0 == 0 {
        a.note("k = 0 is the degenerate low-order case for tangles");
    }
    match v.counterexample {
        None => {}
        Some(Counterexample::Family(f)) => {
            a.note("witness: [obstruction of order k+1 despite width <= k]");
            a.found(vec![f.members().to_vec()]);
        }
        Some(Counterexample::Certificate(w)) => {
            a.note("witness: [edge sides or prefixes of an optimal decomposition of width > k]");
            let sides = match &w.certificate {
                Certificate::Branch(d) => d.edge_sides(),
                Certificate::Linear(o) => {
                    let mut acc = Subset::EMPTY;
                    o.order()
                        .iter()
                        .map(|&e| {
                            acc = acc.with(e);
                            acc
                        })
                        .collect()
                }
            };
            a.found(vec![sides]);
        }
    }
    Ok(())
}

fn dilworth(a: &mut Audit<'_>) -> Result<()> {
    limits::check(Gate::Antichain, a.sys.n())?;
    let family = a.nonempty_efficient();
    let anti = max_antichain_of(&family);
    let cover = chain_partition_of(&family);
    let mut consistent = anti.len() == cover.len();
    a.note(format!("family {}, max antichain {}, chain cover {}", family.len(), anti.len(), cover.len()));
    if family.len() <= MAX_BRUTE_COVER {
        let brute = brute_force_min_chain_cover(&family)?;
        a.note(format!("brute-force chain cover {brute}"));
        consistent &= brute == cover.len();
    }
    if family.len() <= MAX_BRUTE_ANTICHAIN {
        let brute = brute_force_max_antichain(&family)?;
        a.note(format!("brute-force antichain {brute}"));
        consistent &= brute == anti.len();
    }
    if !consistent {
        let mut witness = vec![anti];
        witness.extend(cover);
        a.note("witness: [antichain, chains of the cover...]");
        a.found(witness);
    }
    Ok(())
}

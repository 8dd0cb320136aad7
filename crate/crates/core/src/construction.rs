//! Enumeration of ultrafilters and tangles, extension of filters, the greedy
//! ultrafilter construction, subbase generation and the ultrafilter number.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::closure::{Closure, Conflict, MeetRule};
use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::error::{Error, Result};
use crate::families::{check_family, complement_family, FamilyKind, SetFamily, SingleMode};
use crate::limits::{self, Gate};
use crate::subset::{all_subsets, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationKind {
    Ultrafilter,
    Tangle,
    SingleUltrafilter(SingleMode),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Principality {
    #[default]
    Any,
    NonPrincipalOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub kind: EnumerationKind,
    pub k: EfficiencyBound,
    pub principality: Principality,
    pub limit: Option<usize>,
    /// Worker threads; results are identical for every value.
    pub parallel: usize,
}

impl EnumerationRequest {
    pub fn new(kind: EnumerationKind, k: EfficiencyBound) -> Self {
        EnumerationRequest { kind, k, principality: Principality::Any, limit: None, parallel: 1 }
    }

    pub fn non_principal(mut self) -> Self {
        self.principality = Principality::NonPrincipalOnly;
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn parallel(mut self, workers: usize) -> Self {
        self.parallel = workers.max(1);
        self
    }
}

/// Representatives of the k-efficient complement pairs: the member of each
/// pair without the top element, in increasing bitmask order.
fn complement_pairs(sys: &ConnectivitySystem, k: EfficiencyBound) -> Vec<Subset> {
    let top = sys.n() - 1;
    sys.enumerate_k_efficient(k).into_iter().filter(|a| !a.contains(top)).collect()
}

/// Depth-first search over complement-pair decisions.
///
/// For each pair `(A, X∖A)` the options are tried in the order: only `A`,
/// only `X∖A`, both. The option not taken is forbidden, so every leaf is a
/// distinct closed family that decides every pair.
struct Search<'s> {
    pairs: &'s [Subset],
    n: usize,
    limit: Option<usize>,
    ops: AtomicU64,
}

impl<'s> Search<'s> {
    fn new(pairs: &'s [Subset], n: usize, limit: Option<usize>) -> Self {
        Search { pairs, n, limit, ops: AtomicU64::new(0) }
    }

    fn ops(&self) -> u64 {
        self.ops.load(Ordering::Relaxed)
    }

    fn options<'a>(&self, state: &Closure<'a>, idx: usize) -> Vec<Closure<'a>> {
        let a = self.pairs[idx];
        let c = a.complement(self.n);
        let mut out = Vec::with_capacity(3);
        let choices: [(&[Subset], &[Subset]); 3] = [(&[a], &[c]), (&[c], &[a]), (&[a, c], &[])];
        for (add, forbid) in choices {
            if add.iter().any(|&s| state.is_forbidden(s)) || forbid.iter().any(|&s| state.contains(s)) {
                continue;
            }
            let mut next = state.clone();
            let before = next.ops();
            let ok = forbid
                .iter()
                .try_for_each(|&s| next.forbid(s))
                .and_then(|()| add.iter().try_for_each(|&s| next.add(s)));
            self.ops.fetch_add((1u64 << self.n) + next.ops() - before, Ordering::Relaxed);
            if ok.is_ok() {
                out.push(next);
            }
        }
        out
    }

    fn run(&self, state: Closure<'_>, idx: usize, out: &mut Vec<SetFamily>) {
        if self.limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if idx == self.pairs.len() {
            out.push(state.to_family());
            return;
        }
        for next in self.options(&state, idx) {
            self.run(next, idx + 1, out);
            if self.limit.is_some_and(|l| out.len() >= l) {
                return;
            }
        }
    }

    /// Same results as `run`, with the subtrees below a fixed depth handed to workers.
    fn run_parallel<'a>(&self, state: Closure<'a>, workers: usize, out: &mut Vec<SetFamily>) {
        let mut frontier = vec![(state, 0usize)];
        let target = workers * 4;
        while frontier.len() < target && frontier.iter().any(|(_, i)| *i < self.pairs.len()) {
            let mut next_frontier = Vec::new();
            for (st, i) in frontier {
                if i == self.pairs.len() {
                    next_frontier.push((st, i));
                } else {
                    next_frontier.extend(self.options(&st, i).into_iter().map(|s| (s, i + 1)));
                }
            }
            frontier = next_frontier;
        }
        let chunks: Vec<Vec<SetFamily>> = std::thread::scope(|scope| {
            let per = frontier.len().div_ceil(workers).max(1);
            let mut handles = Vec::new();
            let mut rest = frontier;
            while !rest.is_empty() {
                let tail = rest.split_off(per.min(rest.len()));
                let batch = std::mem::replace(&mut rest, tail);
                handles.push(scope.spawn(move || {
                    batch
                        .into_iter()
                        .map(|(st, i)| {
                            let mut local = Vec::new();
                            self.run(st, i, &mut local);
                            local
                        })
                        .collect::<Vec<_>>()
                }));
            }
            handles.into_iter().flat_map(|h| h.join().expect("enumeration worker panicked")).collect()
        });
        for chunk in chunks {
            out.extend(chunk);
            if let Some(l) = self.limit {
                if out.len() >= l {
                    out.truncate(l);
                    return;
                }
            }
        }
    }
}

fn seeded_state<'a>(
    sys: &'a ConnectivitySystem,
    k: EfficiencyBound,
    rule: MeetRule,
    triple_free: bool,
    non_principal: bool,
) -> std::result::Result<Closure<'a>, Conflict> {
    let mut state = Closure::new(sys, k, rule).triple_free(triple_free);
    if non_principal {
        for e in 0..sys.n() {
            state.forbid(Subset::singleton(e))?;
        }
    }
    Ok(state)
}

fn search_from(
    state: Closure<'_>,
    pairs: &[Subset],
    n: usize,
    limit: Option<usize>,
    parallel: usize,
) -> Vec<SetFamily> {
    let search = Search::new(pairs, n, limit);
    let mut out = Vec::new();
    if parallel > 1 {
        search.run_parallel(state, parallel, &mut out);
    } else {
        search.run(state, 0, &mut out);
    }
    out
}

/// Every family of the requested kind, in canonical decision order.
///
/// Tangles are found through their complements: `T` is a tangle exactly when
/// `{X∖A : A ∈ T}` is closed under efficient intersections and supersets,
/// decides every pair, has no three members with empty intersection and
/// contains no singleton. The principality filter does not apply to tangles.
pub fn enumerate_families(sys: &ConnectivitySystem, req: &EnumerationRequest) -> Result<Vec<SetFamily>> {
    limits::check(Gate::Enumeration, sys.n())?;
    if req.limit == Some(0) {
        return Err(Error::InvalidInput("limit must be at least 1".into()));
    }
    let non_principal = req.principality == Principality::NonPrincipalOnly;
    let (rule, triple_free, forbid_singletons) = match req.kind {
        EnumerationKind::Ultrafilter => (MeetRule::Intersection, false, non_principal),
        EnumerationKind::SingleUltrafilter(mode) => (MeetRule::SingleDeletion(mode), false, non_principal),
        EnumerationKind::Tangle => (MeetRule::Intersection, true, true),
    };
    let Ok(state) = seeded_state(sys, req.k, rule, triple_free, forbid_singletons) else {
        return Ok(Vec::new());
    };
    let pairs = complement_pairs(sys, req.k);
    let found = search_from(state, &pairs, sys.n(), req.limit, req.parallel);
    Ok(match req.kind {
        EnumerationKind::Tangle => found.iter().map(complement_family).collect(),
        _ => found,
    })
}

/// Extends a filter to an ultrafilter of the same order: the first ultrafilter
/// containing `F` in canonical decision order. An ultrafilter is returned unchanged.
pub fn extend_filter_to_ultrafilter(sys: &ConnectivitySystem, fam: &SetFamily) -> Result<SetFamily> {
    let verdict = check_family(sys, fam, FamilyKind::Filter)?;
    if let Some(axiom) = verdict.violated_axiom {
        return Err(Error::NotAFilter { axiom: axiom.label().into() });
    }
    let mut state = Closure::new(sys, fam.bound(), MeetRule::Intersection);
    for &m in fam.members() {
        state.add(m).map_err(|_| Error::NoUltrafilterExtension)?;
    }
    let pairs = complement_pairs(sys, fam.bound());
    search_from(state, &pairs, sys.n(), Some(1), 1).into_iter().next().ok_or(Error::NoUltrafilterExtension)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructedUltrafilter {
    pub family: SetFamily,
    /// Basic steps counted: candidate generation, intersection and superset
    /// probes, state copies.
    pub ops: u64,
    /// The greedy pass reached a set that neither side could join and the
    /// remaining pairs were settled by backtracking.
    pub fallback: bool,
}

/// The three-step construction: list the k-efficient sets, greedily grow a
/// filter from the first non-empty one, then decide every remaining pair,
/// taking `A` when consistent and `X∖A` otherwise.
pub fn construct_ultrafilter(sys: &ConnectivitySystem, k: EfficiencyBound) -> Result<ConstructedUltrafilter> {
    let n = sys.n();
    let size = 1u64 << n;
    let candidates = sys.enumerate_k_efficient(k);
    let a0 = candidates.iter().copied().find(|a| !a.is_empty()).expect("X is always k-efficient");
    let mut ops = size;

    let mut state = Closure::new(sys, k, MeetRule::Intersection);
    state.add(a0).expect("closure of a non-empty efficient set is consistent");
    ops += state.ops();
    let seed = state.clone();

    let try_add = |state: &mut Closure<'_>, a: Subset, ops: &mut u64| -> bool {
        let mut trial = state.clone();
        let before = trial.ops();
        let ok = trial.add(a).is_ok();
        *ops += size + trial.ops() - before;
        if ok {
            *state = trial;
        }
        ok
    };

    for &a in &candidates {
        if !a.is_empty() && !state.contains(a) {
            try_add(&mut state, a, &mut ops);
        }
    }

    let mut dead_end = false;
    for &a in &candidates {
        let c = a.complement(n);
        if state.contains(a) || state.contains(c) {
            continue;
        }
        if !try_add(&mut state, a, &mut ops) && !try_add(&mut state, c, &mut ops) {
            dead_end = true;
            break;
        }
    }
    if !dead_end {
        return Ok(ConstructedUltrafilter { family: state.to_family(), ops, fallback: false });
    }

    // the family fixed on any element of A0 extends the seed, so this succeeds
    let pairs = complement_pairs(sys, k);
    let search = Search::new(&pairs, n, Some(1));
    let mut out = Vec::new();
    search.run(seed, 0, &mut out);
    ops += search.ops();
    let family = out.into_iter().next().expect("a fixed family always extends the seed");
    Ok(ConstructedUltrafilter { family, ops, fallback: true })
}

/// The filter generated by a subbase: all finite intersections, kept when
/// k-efficient, then closed upward within the k-efficient sets.
pub fn generate_from_subbase(sys: &ConnectivitySystem, subbase: &SetFamily) -> Result<SetFamily> {
    let verdict = check_family(sys, subbase, FamilyKind::FilterSubbase)?;
    if let Some(axiom) = verdict.violated_axiom {
        return Err(Error::NotASubbase { axiom: axiom.label().into() });
    }
    let n = sys.n();
    let k = subbase.bound();
    let members = subbase.members();
    // provenance: the subbase members whose intersection produced each set
    let mut source: Vec<Option<Vec<usize>>> = vec![None; 1 << n];
    let mut queue = Vec::new();
    for (i, &m) in members.iter().enumerate() {
        if source[m.index()].is_none() {
            source[m.index()] = Some(vec![i]);
            queue.push(m);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let s = queue[head];
        head += 1;
        for (i, &m) in members.iter().enumerate() {
            let t = s.intersection(m);
            if source[t.index()].is_none() {
                let mut from = source[s.index()].clone().expect("queued sets have a source");
                if !from.contains(&i) {
                    from.push(i);
                }
                from.sort_unstable();
                source[t.index()] = Some(from);
                queue.push(t);
            }
        }
    }
    if let Some(from) = &source[0] {
        return Err(Error::EmptyIntersection(from.iter().map(|&i| members[i]).collect()));
    }
    let mut member = vec![false; 1 << n];
    for s in all_subsets(n) {
        if source[s.index()].is_some() && sys.is_efficient(s, k) {
            for sup in s.supersets(n) {
                if sys.is_efficient(sup, k) {
                    member[sup.index()] = true;
                }
            }
        }
    }
    let family = SetFamily::from_indicator(n, k, &member);
    let m = family.members();
    for (i, &a) in m.iter().enumerate() {
        for &b in &m[i + 1..] {
            let c = a.intersection(b);
            if sys.is_efficient(c, k) && !family.contains(c) {
                return Err(Error::EfficiencyEscape { a, b });
            }
        }
    }
    Ok(family)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrafilterNumberResult {
    /// `None` when no non-principal ultrafilter has a generating prefilter.
    pub u: Option<usize>,
    pub witness_prefilter: Option<SetFamily>,
    /// The non-principal ultrafilter the witness generates.
    pub generated: Option<SetFamily>,
}

fn minimal_members(fam: &SetFamily) -> Vec<Subset> {
    let m = fam.members();
    m.iter().copied().filter(|&a| !m.iter().any(|&b| b.is_proper_subset_of(a))).collect()
}

/// Smallest prefilter whose up-closure is a non-principal ultrafilter.
///
/// A prefilter generating `U` must contain every minimal member of `U`, and two
/// distinct minimal members have no member below their intersection, which
/// breaks downward directedness. So `U` has a generating prefilter exactly when
/// it has a single minimal member, and then that member alone is the smallest one.
pub fn ultrafilter_number(sys: &ConnectivitySystem, k: EfficiencyBound) -> Result<UltrafilterNumberResult> {
    limits::check(Gate::UltrafilterNumber, sys.n())?;
    let req = EnumerationRequest::new(EnumerationKind::Ultrafilter, k).non_principal();
    let mut best: Option<(SetFamily, SetFamily)> = None;
    for u in enumerate_families(sys, &req)? {
        let base = minimal_members(&u);
        let prefilter = SetFamily::new(sys.n(), k, base)?;
        if !check_family(sys, &prefilter, FamilyKind::Prefilter)?.holds {
            continue;
        }
        if best.as_ref().map_or(true, |(p, _)| prefilter.len() < p.len()) {
            best = Some((prefilter, u));
        }
    }
    Ok(match best {
        Some((p, u)) => UltrafilterNumberResult { u: Some(p.len()), witness_prefilter: Some(p), generated: Some(u) },
        None => UltrafilterNumberResult { u: None, witness_prefilter: None, generated: None },
    })
}

#[cfg(test)]
mod tests;

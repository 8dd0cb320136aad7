//! Chains, antichains, sequence chains and Dilworth covers over k-efficient sets.

use std::collections::VecDeque;

use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::error::{Error, Result};
use crate::limits::{self, Gate};
use crate::subset::Subset;

/// Strictly increasing k-efficient sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    sets: Vec<Subset>,
    k: EfficiencyBound,
}

fn check_chain(sys: &ConnectivitySystem, sets: &[Subset], k: EfficiencyBound) -> Result<()> {
    for (i, w) in sets.windows(2).enumerate() {
        if !w[0].is_proper_subset_of(w[1]) {
            return Err(Error::ChainOrderBroken(i + 1));
        }
    }
    match sets.iter().find(|&&a| !sys.is_efficient(a, k)) {
        Some(&a) => Err(Error::EfficiencyViolation(a, sys.evaluate(a))),
        None => Ok(()),
    }
}

impl Chain {
    pub fn new(sys: &ConnectivitySystem, sets: Vec<Subset>, k: EfficiencyBound) -> Result<Self> {
        check_chain(sys, &sets, k)?;
        Ok(Chain { sets, k })
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn bound(&self) -> EfficiencyBound {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Starts at ∅, ends at X.
    pub fn is_sequence_chain(&self, n: usize) -> bool {
        self.sets.first() == Some(&Subset::EMPTY) && self.sets.last() == Some(&Subset::full(n))
    }

    /// Every step adds exactly one element.
    pub fn is_single_element(&self) -> bool {
        self.sets.windows(2).all(|w| w[1].difference(w[0]).len() == 1)
    }
}

/// Pairwise incomparable k-efficient sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    sets: Vec<Subset>,
    k: EfficiencyBound,
}

impl Antichain {
    pub fn new(sys: &ConnectivitySystem, sets: Vec<Subset>, k: EfficiencyBound) -> Result<Self> {
        for (i, &a) in sets.iter().enumerate() {
            if !sys.is_efficient(a, k) {
                return Err(Error::EfficiencyViolation(a, sys.evaluate(a)));
            }
            if let Some(&b) = sets[i + 1..].iter().find(|&&b| a.comparable(b)) {
                return Err(Error::NotAnAntichain(a, b));
            }
        }
        Ok(Antichain { sets, k })
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn bound(&self) -> EfficiencyBound {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Maximum matching in the strict-inclusion graph: `next[i] = Some(j)` pairs
/// `family[i] ⊂ family[j]` as consecutive chain members.
fn inclusion_matching(family: &[Subset]) -> Vec<Option<usize>> {
    let m = family.len();
    let adj: Vec<Vec<usize>> =
        (0..m).map(|i| (0..m).filter(|&j| family[i].is_proper_subset_of(family[j])).collect()).collect();
    let mut next: Vec<Option<usize>> = vec![None; m];
    let mut prev: Vec<Option<usize>> = vec![None; m];
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        next: &mut [Option<usize>],
        prev: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if prev[v].map_or(true, |w| augment(w, adj, seen, next, prev)) {
                next[u] = Some(v);
                prev[v] = Some(u);
                return true;
            }
        }
        false
    }
    for u in 0..m {
        let mut seen = vec![false; m];
        augment(u, &adj, &mut seen, &mut next, &mut prev);
    }
    next
}

/// A maximum antichain of an arbitrary family, from a minimum vertex cover of
/// the inclusion matching graph.
pub fn max_antichain_of(family: &[Subset]) -> Vec<Subset> {
    let family = dedup(family);
    let m = family.len();
    let next = inclusion_matching(&family);
    let mut prev = vec![None; m];
    for (u, v) in next.iter().enumerate() {
        if let Some(v) = *v {
            prev[v] = Some(u);
        }
    }
    // alternating search from unmatched left vertices
    let mut left = vec![false; m];
    let mut right = vec![false; m];
    let mut queue: VecDeque<usize> = (0..m).filter(|&u| next[u].is_none()).collect();
    for &u in &queue {
        left[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for v in 0..m {
            if family[u].is_proper_subset_of(family[v]) && !right[v] && next[u] != Some(v) {
                right[v] = true;
                if let Some(w) = prev[v] {
                    if !left[w] {
                        left[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    (0..m).filter(|&i| left[i] && !right[i]).map(|i| family[i]).collect()
}

/// A minimum partition of a family into chains, read off the matching.
pub fn chain_partition_of(family: &[Subset]) -> Vec<Vec<Subset>> {
    let family = dedup(family);
    let next = inclusion_matching(&family);
    let mut has_prev = vec![false; family.len()];
    for v in next.iter().flatten() {
        has_prev[*v] = true;
    }
    let mut chains = Vec::new();
    for start in 0..family.len() {
        if has_prev[start] {
            continue;
        }
        let mut chain = vec![family[start]];
        let mut cur = start;
        while let Some(v) = next[cur] {
            chain.push(family[v]);
            cur = v;
        }
        chains.push(chain);
    }
    chains
}

fn dedup(family: &[Subset]) -> Vec<Subset> {
    let mut f = family.to_vec();
    f.sort_unstable();
    f.dedup();
    f
}

/// Maximum antichain among the non-empty k-efficient sets.
pub fn find_max_antichain(sys: &ConnectivitySystem, k: EfficiencyBound) -> Result<Antichain> {
    limits::check(Gate::Antichain, sys.n())?;
    let family: Vec<Subset> = sys.enumerate_k_efficient(k).into_iter().filter(|a| !a.is_empty()).collect();
    Antichain::new(sys, max_antichain_of(&family), k)
}

pub const MAX_COVER_FAMILY: usize = 64;

/// Minimum chain cover of a family of k-efficient sets.
pub fn min_chain_cover(sys: &ConnectivitySystem, family: &[Subset], k: EfficiencyBound) -> Result<Vec<Chain>> {
    if let Some(&a) = family.iter().find(|&&a| !sys.is_efficient(a, k)) {
        return Err(Error::NotKEfficient(a));
    }
    if family.len() > MAX_COVER_FAMILY {
        return Err(Error::FamilyTooLarge { n: family.len(), max: MAX_COVER_FAMILY });
    }
    chain_partition_of(family).into_iter().map(|c| Chain::new(sys, c, k)).collect()
}

pub const MAX_BRUTE_COVER: usize = 20;
pub const MAX_BRUTE_ANTICHAIN: usize = 20;

/// Minimum number of chains covering the family, by breadth-first search over
/// unions of maximal chains. Chains may overlap here; trimming the overlaps
/// gives a partition of the same size, and every chain sits inside a maximal one.
pub fn brute_force_min_chain_cover(family: &[Subset]) -> Result<usize> {
    let mut family = dedup(family);
    let m = family.len();
    if m > MAX_BRUTE_COVER {
        return Err(Error::FamilyTooLarge { n: m, max: MAX_BRUTE_COVER });
    }
    if m == 0 {
        return Ok(0);
    }
    family.sort_by_key(|s| (s.len(), s.bits()));
    // covers[i]: members directly above family[i] with nothing of the family between
    let covers: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| {
                    family[i].is_proper_subset_of(family[j])
                        && !(0..m).any(|t| {
                            family[i].is_proper_subset_of(family[t]) && family[t].is_proper_subset_of(family[j])
                        })
                })
                .collect()
        })
        .collect();
    let minimal: Vec<usize> = (0..m).filter(|&j| !(0..m).any(|i| covers[i].contains(&j))).collect();
    let mut chains = Vec::new();
    fn walk(i: usize, mask: usize, covers: &[Vec<usize>], out: &mut Vec<usize>) {
        let mask = mask | 1 << i;
        if covers[i].is_empty() {
            out.push(mask);
        }
        for &j in &covers[i] {
            walk(j, mask, covers, out);
        }
    }
    for &i in &minimal {
        walk(i, 0, &covers, &mut chains);
    }
    let full = (1usize << m) - 1;
    let mut seen = vec![false; full + 1];
    let mut frontier = vec![0usize];
    seen[0] = true;
    for steps in 1.. {
        let mut next = Vec::new();
        for &mask in &frontier {
            for &c in &chains {
                let grown = mask | c;
                if grown == full {
                    return Ok(steps);
                }
                if !seen[grown] {
                    seen[grown] = true;
                    next.push(grown);
                }
            }
        }
        frontier = next;
    }
    unreachable!("the maximal chains cover the family")
}

/// Size of the largest antichain, by exhaustive search over sub-families.
pub fn brute_force_max_antichain(family: &[Subset]) -> Result<usize> {
    let family = dedup(family);
    let m = family.len();
    if m > MAX_BRUTE_ANTICHAIN {
        return Err(Error::FamilyTooLarge { n: m, max: MAX_BRUTE_ANTICHAIN });
    }
    let mut best = 0;
    for mask in 0usize..1 << m {
        let idx: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if idx.len() > best
            && idx.iter().enumerate().all(|(p, &i)| idx[p + 1..].iter().all(|&j| !family[i].comparable(family[j])))
        {
            best = idx.len();
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SequenceMode {
    /// Each step adds exactly one element.
    #[default]
    SingleElement,
    /// Any strictly increasing steps; `∅ ⊂ X` always qualifies.
    General,
}

/// A sequence chain ∅ = A_0 ⊂ … ⊂ A_m = X of k-efficient sets, if one exists.
///
/// Single-element mode runs a breadth-first search over the k-efficient sets,
/// expanding elements in increasing index order.
pub fn find_sequence_chain(sys: &ConnectivitySystem, k: EfficiencyBound, mode: SequenceMode) -> Option<Chain> {
    let full = sys.full();
    if mode == SequenceMode::General {
        return Chain::new(sys, vec![Subset::EMPTY, full], k).ok();
    }
    let n = sys.n();
    let mut parent: Vec<Option<Subset>> = vec![None; 1 << n];
    let mut seen = vec![false; 1 << n];
    seen[0] = true;
    let mut queue = VecDeque::from([Subset::EMPTY]);
    while let Some(s) = queue.pop_front() {
        if s == full {
            break;
        }
        for e in s.complement(n).elements() {
            let t = s.with(e);
            if !seen[t.index()] && sys.is_efficient(t, k) {
                seen[t.index()] = true;
                parent[t.index()] = Some(s);
                queue.push_back(t);
            }
        }
    }
    if !seen[full.index()] {
        return None;
    }
    let mut sets = vec![full];
    let mut cur = full;
    while let Some(p) = parent[cur.index()] {
        sets.push(p);
        cur = p;
    }
    sets.reverse();
    Some(Chain::new(sys, sets, k).expect("search only visits efficient sets"))
}

/// Appends `A_m ∪ {e}`.
pub fn chain_extend_single(sys: &ConnectivitySystem, chain: &Chain, e: usize) -> Result<Chain> {
    let last = chain.sets.last().copied().unwrap_or(Subset::EMPTY);
    if e >= sys.n() {
        return Err(Error::InvalidInput(format!("element index {e} is outside the ground set")));
    }
    if last.contains(e) {
        return Err(Error::ElementAlreadyPresent(e));
    }
    let next = last.with(e);
    if !sys.is_efficient(next, chain.k) {
        return Err(Error::EfficiencyViolation(next, sys.evaluate(next)));
    }
    let mut sets = chain.sets.clone();
    sets.push(next);
    Ok(Chain { sets, k: chain.k })
}

/// Replaces `A_index` by `A_index ∖ {e}` and re-validates the whole chain.
pub fn chain_delete_single(sys: &ConnectivitySystem, chain: &Chain, index: usize, e: usize) -> Result<Chain> {
    let Some(&a) = chain.sets.get(index) else {
        return Err(Error::InvalidInput(format!("chain has no position {index}")));
    };
    if !a.contains(e) {
        return Err(Error::ElementAbsent(e));
    }
    let mut sets = chain.sets.clone();
    sets[index] = a.without(e);
    Chain::new(sys, sets, chain.k)
}

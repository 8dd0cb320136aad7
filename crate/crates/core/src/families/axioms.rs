use std::fmt;

use super::SetFamily;
use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::subset::{all_subsets, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// The family has at least one member.
    NonEmpty,
    Q0,
    Q1,
    Q2,
    Q3,
    Q4,
    QW1,
    QQ1,
    QS1,
    QSD1,
    FT1,
    T1,
    T2,
    T3,
    T4,
    P1,
    P2,
    P3,
    P4,
    SB1,
    SB2,
    SB3,
    SB4,
    PI1,
    PI2,
    LS1,
    LS2,
    LS3,
    SUF1,
    SUF2,
    SUF3,
    SIF1,
    SIF2,
    SIF3,
    CL1,
    CL2,
    UC1,
    UC2,
    IN1,
    IN2,
    MA1,
    MA2,
    MA3,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        use Axiom::*;
        match self {
            NonEmpty => "nonempty",
            Q0 => "Q0",
            Q1 => "Q1",
            Q2 => "Q2",
            Q3 => "Q3",
            Q4 => "Q4",
            QW1 => "QW1'",
            QQ1 => "QQ1'",
            QS1 => "QS1",
            QSD1 => "QSD1",
            FT1 => "FT1",
            T1 => "T1",
            T2 => "T2",
            T3 => "T3",
            T4 => "T4",
            P1 => "P1",
            P2 => "P2",
            P3 => "P3",
            P4 => "P4",
            SB1 => "SB1",
            SB2 => "SB2",
            SB3 => "SB3",
            SB4 => "SB4",
            PI1 => "PI1",
            PI2 => "PI2",
            LS1 => "LS1",
            LS2 => "LS2",
            LS3 => "LS3",
            SUF1 => "SUF1",
            SUF2 => "SUF2",
            SUF3 => "SUF3",
            SIF1 => "SIF1",
            SIF2 => "SIF2",
            SIF3 => "SIF3",
            CL1 => "CL1",
            CL2 => "CL2",
            UC1 => "UC1",
            UC2 => "UC2",
            IN1 => "IN1",
            IN2 => "IN2",
            MA1 => "MA1",
            MA2 => "MA2",
            MA3 => "MA3",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub(super) struct Ctx<'a> {
    sys: &'a ConnectivitySystem,
    fam: &'a SetFamily,
    k: EfficiencyBound,
    n: usize,
    full: Subset,
}

type Witness = Option<Vec<Subset>>;

impl<'a> Ctx<'a> {
    pub(super) fn new(sys: &'a ConnectivitySystem, fam: &'a SetFamily) -> Self {
        Ctx { sys, fam, k: fam.bound(), n: sys.n(), full: sys.full() }
    }

    fn eff(&self, s: Subset) -> bool {
        self.sys.is_efficient(s, self.k)
    }

    fn has(&self, s: Subset) -> bool {
        self.fam.contains(s)
    }

    fn members(&self) -> &[Subset] {
        self.fam.members()
    }

    /// `None` if the axiom holds, otherwise the first witness found.
    pub(super) fn violation(&self, axiom: Axiom) -> Witness {
        use Axiom::*;
        match axiom {
            NonEmpty | SB1 | PI1 => self.fam.is_empty().then(Vec::new),
            Q0 | T1 | P2 | SB3 | SUF1 => self.efficiency(),
            Q1 | PI2 | CL1 => self.intersection_closed(),
            Q2 | SUF2 | SIF2 => self.upward_closed(),
            Q3 | P1 | SB2 => self.has(Subset::EMPTY).then(|| vec![Subset::EMPTY]),
            Q4 | T2 | MA1 => self.decides_every_pair(),
            QW1 => self.weak_intersection(),
            QQ1 => self.quasi_union(),
            QS1 => self.single_deletion(true),
            QSD1 => self.single_deletion(false),
            FT1 => self.triple_intersection(),
            T3 => self.triple_union(),
            T4 => self.no_co_singleton(),
            P3 => self.downward_directed(),
            P4 | SB4 => self.ultra_base(),
            LS1 | SIF1 | CL2 => self.contains_full(),
            LS2 => self.complement_closed(),
            LS3 => self.disjoint_unions(),
            SUF3 => self.union_prime(),
            SIF3 => self.finite_intersections(),
            UC1 => self.union_closed(),
            UC2 => self.empty_and_full(),
            IN1 => (!self.has(Subset::EMPTY)).then(|| vec![Subset::EMPTY]),
            IN2 => self.downward_closed(),
            MA2 => self.disjoint_are_complements(),
            MA3 => self.majority_shift(),
        }
    }

    fn efficiency(&self) -> Witness {
        self.members().iter().find(|&&a| !self.eff(a)).map(|&a| vec![a])
    }

    fn intersection_closed(&self) -> Witness {
        let m = self.members();
        for (i, &a) in m.iter().enumerate() {
            for &b in &m[i + 1..] {
                let c = a.intersection(b);
                if self.eff(c) && !self.has(c) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    fn upward_closed(&self) -> Witness {
        for &a in self.members() {
            if let Some(b) = a.supersets(self.n).find(|&b| self.eff(b) && !self.has(b)) {
                return Some(vec![a, b]);
            }
        }
        None
    }

    fn downward_closed(&self) -> Witness {
        for &a in self.members() {
            if let Some(b) = a.subsets().find(|&b| self.eff(b) && !self.has(b)) {
                return Some(vec![a, b]);
            }
        }
        None
    }

    fn decides_every_pair(&self) -> Witness {
        all_subsets(self.n).find(|&a| self.eff(a) && !self.has(a) && !self.has(a.complement(self.n))).map(|a| vec![a])
    }

    fn weak_intersection(&self) -> Witness {
        let m = self.members();
        for (i, &a) in m.iter().enumerate() {
            for &b in &m[i..] {
                let c = a.intersection(b);
                if c.is_empty() && self.eff(c) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    /// Any `A, B` outside the family whose union is a member; only unions that
    /// are members matter, so iterate over members and their splits.
    fn quasi_union(&self) -> Witness {
        for &c in self.members() {
            for a in c.subsets() {
                if self.has(a) {
                    continue;
                }
                let forced = c.difference(a);
                for extra in a.subsets() {
                    let b = forced.union(extra);
                    if !self.has(b) {
                        return Some(vec![a, b]);
                    }
                }
            }
        }
        None
    }

    fn single_deletion(&self, needs_efficient_singleton: bool) -> Witness {
        for &a in self.members() {
            for e in a.elements() {
                let single = Subset::singleton(e);
                if needs_efficient_singleton && !self.eff(single) {
                    continue;
                }
                let d = a.without(e);
                if self.eff(d) && !self.has(d) {
                    return Some(vec![a, single]);
                }
            }
        }
        None
    }

    fn triple_intersection(&self) -> Witness {
        let m = self.members();
        for (i, &a) in m.iter().enumerate() {
            for (j, &b) in m.iter().enumerate().skip(i) {
                let ab = a.intersection(b);
                for &c in &m[j..] {
                    if ab.intersection(c).is_empty() {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }

    fn triple_union(&self) -> Witness {
        let m = self.members();
        for (i, &a) in m.iter().enumerate() {
            for (j, &b) in m.iter().enumerate().skip(i) {
                let ab = a.union(b);
                for &c in &m[j..] {
                    if ab.union(c) == self.full {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }

    fn no_co_singleton(&self) -> Witness {
        (0..self.n).map(|e| self.full.without(e)).find(|&s| self.has(s)).map(|s| vec![s])
    }

    /// `below[s]`: some k-efficient member is a subset of `s`.
    fn efficient_member_below(&self) -> Vec<bool> {
        let mut below = vec![false; 1 << self.n];
        for &m in self.members() {
            if self.eff(m) {
                below[m.index()] = true;
            }
        }
        for i in 0..self.n {
            let bit = 1usize << i;
            for s in 0..below.len() {
                if s & bit != 0 && below[s ^ bit] {
                    below[s] = true;
                }
            }
        }
        below
    }

    fn downward_directed(&self) -> Witness {
        let below = self.efficient_member_below();
        let m = self.members();
        for (i, &b) in m.iter().enumerate() {
            for &c in &m[i..] {
                if !below[b.intersection(c).index()] {
                    return Some(vec![b, c]);
                }
            }
        }
        None
    }

    fn ultra_base(&self) -> Witness {
        let below = self.efficient_member_below();
        all_subsets(self.n)
            .find(|&a| self.eff(a) && !below[a.index()] && !below[a.complement(self.n).index()])
            .map(|a| vec![a])
    }

    fn contains_full(&self) -> Witness {
        (!self.has(self.full) || !self.eff(self.full)).then(|| vec![self.full])
    }

    fn complement_closed(&self) -> Witness {
        for &a in self.members() {
            let c = a.complement(self.n);
            if self.eff(c) && !self.has(c) {
                return Some(vec![a]);
            }
        }
        None
    }

    /// Every collection of at least two pairwise-disjoint non-empty members.
    /// Empty members never change a union, so they are skipped.
    fn disjoint_unions(&self) -> Witness {
        let m: Vec<Subset> = self.members().iter().copied().filter(|s| !s.is_empty()).collect();
        let mut stack = Vec::new();
        self.disjoint_dfs(&m, 0, Subset::EMPTY, &mut stack)
    }

    fn disjoint_dfs(&self, m: &[Subset], from: usize, union: Subset, stack: &mut Vec<Subset>) -> Witness {
        for i in from..m.len() {
            if !m[i].intersection(union).is_empty() {
                continue;
            }
            let u = union.union(m[i]);
            stack.push(m[i]);
            if stack.len() >= 2 && self.eff(u) && !self.has(u) {
                return Some(stack.clone());
            }
            if let Some(w) = self.disjoint_dfs(m, i + 1, u, stack) {
                return Some(w);
            }
            stack.pop();
        }
        None
    }

    fn union_prime(&self) -> Witness {
        for &c in self.members() {
            for a in c.subsets() {
                if self.has(a) || !self.eff(a) {
                    continue;
                }
                let forced = c.difference(a);
                for extra in a.subsets() {
                    let b = forced.union(extra);
                    if !self.has(b) && self.eff(b) {
                        return Some(vec![a, b]);
                    }
                }
            }
        }
        None
    }

    /// Closure of the members under intersection; any efficient non-member in it
    /// is a violation.
    fn finite_intersections(&self) -> Witness {
        let mut seen = vec![false; 1 << self.n];
        let mut queue: Vec<Subset> = Vec::new();
        for &m in self.members() {
            if !seen[m.index()] {
                seen[m.index()] = true;
                queue.push(m);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let s = queue[head];
            head += 1;
            for &m in self.members() {
                let t = s.intersection(m);
                if !seen[t.index()] {
                    seen[t.index()] = true;
                    queue.push(t);
                }
            }
        }
        all_subsets(self.n).find(|&s| seen[s.index()] && self.eff(s) && !self.has(s)).map(|s| vec![s])
    }

    fn union_closed(&self) -> Witness {
        let m = self.members();
        for (i, &a) in m.iter().enumerate() {
            for &b in &m[i + 1..] {
                let c = a.union(b);
                if self.eff(c) && !self.has(c) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    fn empty_and_full(&self) -> Witness {
        if !self.has(Subset::EMPTY) {
            Some(vec![Subset::EMPTY])
        } else if !self.has(self.full) {
            Some(vec![self.full])
        } else {
            None
        }
    }

    fn disjoint_are_complements(&self) -> Witness {
        let m = self.members();
        for (i, &a) in m.iter().enumerate() {
            for &b in &m[i..] {
                if a.intersection(b).is_empty() && b != a.complement(self.n) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    /// Witness is `[A, F, G]`.
    fn majority_shift(&self) -> Witness {
        for &a in self.members() {
            let outside = a.complement(self.n);
            for f in a.subsets() {
                for g in outside.subsets() {
                    if f.len() > g.len() {
                        continue;
                    }
                    let t = a.difference(f).union(g);
                    if self.eff(t) && !self.has(t) {
                        return Some(vec![a, f, g]);
                    }
                }
            }
        }
        None
    }
}

//! Incremental closure of a partial family under the filter rules, used by
//! every constructive search.

use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::families::{SetFamily, SingleMode};
use crate::subset::Subset;

/// Which meet rule the family must be closed under. Up-closure within the
/// k-efficient sets is always applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeetRule {
    /// Pairwise intersections (Q1).
    Intersection,
    /// Single-element deletions.
    SingleDeletion(SingleMode),
}

/// Raised when closure forces ∅, a non-efficient set or a forbidden set into
/// the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conflict;

/// A partial family with a forbidden list; every successful `add` leaves it closed.
#[derive(Clone)]
pub struct Closure<'a> {
    sys: &'a ConnectivitySystem,
    k: EfficiencyBound,
    rule: MeetRule,
    /// Reject additions that would create three members with empty intersection.
    triple_free: bool,
    member: Vec<bool>,
    forbidden: Vec<bool>,
    members: Vec<Subset>,
    ops: u64,
}

impl<'a> Closure<'a> {
    pub fn new(sys: &'a ConnectivitySystem, k: EfficiencyBound, rule: MeetRule) -> Self {
        let size = 1usize << sys.n();
        Closure {
            sys,
            k,
            rule,
            triple_free: false,
            member: vec![false; size],
            forbidden: vec![false; size],
            members: Vec::new(),
            ops: 0,
        }
    }

    pub fn triple_free(mut self, on: bool) -> Self {
        self.triple_free = on;
        self
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.member[a.index()]
    }

    pub fn is_forbidden(&self, a: Subset) -> bool {
        self.forbidden[a.index()]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub fn add_ops(&mut self, extra: u64) {
        self.ops += extra;
    }

    pub fn bound(&self) -> EfficiencyBound {
        self.k
    }

    pub fn forbid(&mut self, a: Subset) -> Result<(), Conflict> {
        self.ops += 1;
        if self.member[a.index()] {
            return Err(Conflict);
        }
        self.forbidden[a.index()] = true;
        Ok(())
    }

    /// Adds `a` and everything the rules then force.
    pub fn add(&mut self, a: Subset) -> Result<(), Conflict> {
        let mut work = vec![a];
        while let Some(s) = work.pop() {
            self.ops += 1;
            if self.member[s.index()] {
                continue;
            }
            if s.is_empty() || self.forbidden[s.index()] || !self.sys.is_efficient(s, self.k) {
                return Err(Conflict);
            }
            if self.triple_free {
                for (i, &b) in self.members.iter().enumerate() {
                    let sb = s.intersection(b);
                    if sb.is_empty() {
                        return Err(Conflict);
                    }
                    for &c in &self.members[i..] {
                        self.ops += 1;
                        if sb.intersection(c).is_empty() {
                            return Err(Conflict);
                        }
                    }
                }
            }
            self.member[s.index()] = true;
            self.members.push(s);
            for sup in s.supersets(self.sys.n()) {
                self.ops += 1;
                if !self.member[sup.index()] && self.sys.is_efficient(sup, self.k) {
                    work.push(sup);
                }
            }
            match self.rule {
                MeetRule::Intersection => {
                    for &b in &self.members {
                        self.ops += 1;
                        let c = s.intersection(b);
                        if !self.member[c.index()] && self.sys.is_efficient(c, self.k) {
                            work.push(c);
                        }
                    }
                }
                MeetRule::SingleDeletion(mode) => {
                    for e in s.elements() {
                        self.ops += 1;
                        if mode == SingleMode::QS1 && !self.sys.is_efficient(Subset::singleton(e), self.k) {
                            continue;
                        }
                        let d = s.without(e);
                        if !self.member[d.index()] && self.sys.is_efficient(d, self.k) {
                            work.push(d);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Members in increasing bitmask order.
    pub fn to_family(&self) -> SetFamily {
        SetFamily::from_indicator(self.sys.n(), self.k, &self.member)
    }
}

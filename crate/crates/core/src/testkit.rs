//! Small fixtures shared by the unit tests.

use crate::connectivity::{ConnectivitySystem, EfficiencyBound, Graph};
use crate::families::SetFamily;
use crate::subset::Subset;

pub fn c4() -> ConnectivitySystem {
    ConnectivitySystem::edge_cut(Graph::cycle(4)).unwrap()
}

pub fn k4() -> ConnectivitySystem {
    ConnectivitySystem::edge_cut(Graph::complete(4)).unwrap()
}

pub fn zero(labels: &[&str]) -> ConnectivitySystem {
    ConnectivitySystem::zero(labels).unwrap()
}

/// Subset from element labels.
pub fn s(sys: &ConnectivitySystem, labels: &[&str]) -> Subset {
    sys.ground().subset_from_labels(labels).unwrap()
}

pub fn fam(sys: &ConnectivitySystem, k: u32, sets: &[&[&str]]) -> SetFamily {
    SetFamily::new(sys.n(), EfficiencyBound(k), sets.iter().map(|l| s(sys, l))).unwrap()
}

/// `{A : e ∈ A, f(A) <= k}`.
pub fn fixed_on(sys: &ConnectivitySystem, e: usize, k: u32) -> SetFamily {
    let k = EfficiencyBound(k);
    SetFamily::new(sys.n(), k, sys.enumerate_k_efficient(k).into_iter().filter(|a| a.contains(e))).unwrap()
}

//! Branch decompositions, linear orderings, exact widths and the duality audits.

use std::collections::VecDeque;

use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::construction::{enumerate_families, EnumerationKind, EnumerationRequest};
use crate::error::{Error, Result};
use crate::families::{SetFamily, SingleMode};
use crate::limits::{self, Gate};
use crate::subset::{all_subsets, Subset};

/// An unrooted ternary tree whose leaves are the ground-set elements, stored
/// as a parent array rooted at node 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    parent: Vec<Option<usize>>,
    leaf: Vec<Option<usize>>,
}

impl BranchDecomposition {
    /// Validates the shape: a single tree, leaves labelled by a bijection onto
    /// `0..n`, every internal node of degree 3.
    pub fn new(n: usize, parent: Vec<Option<usize>>, leaf: Vec<Option<usize>>) -> Result<Self> {
        let nodes = parent.len();
        if leaf.len() != nodes {
            return Err(Error::MalformedTree("parent and label arrays differ in length".into()));
        }
        if nodes == 0 {
            return Err(Error::MalformedTree("tree has no nodes".into()));
        }
        let roots = parent.iter().filter(|p| p.is_none()).count();
        if roots != 1 {
            return Err(Error::MalformedTree(format!("expected one root, found {roots}")));
        }
        let mut degree = vec![0usize; nodes];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= nodes || p == v {
                    return Err(Error::MalformedTree(format!("node {v} has invalid parent {p}")));
                }
                degree[v] += 1;
                degree[p] += 1;
            }
        }
        for start in 0..nodes {
            let mut v = start;
            let mut steps = 0;
            while let Some(p) = parent[v] {
                v = p;
                steps += 1;
                if steps > nodes {
                    return Err(Error::MalformedTree("parent pointers form a cycle".into()));
                }
            }
        }
        let mut seen = vec![false; n];
        for (v, l) in leaf.iter().enumerate() {
            match *l {
                Some(e) => {
                    if e >= n || seen[e] {
                        return Err(Error::MalformedTree(format!("leaf label {e} is out of range or repeated")));
                    }
                    seen[e] = true;
                    if degree[v] > 1 {
                        return Err(Error::MalformedTree(format!("labelled node {v} is not a leaf")));
                    }
                }
                None => {
                    if degree[v] != 3 {
                        return Err(Error::MalformedTree(format!("internal node {v} has degree {}", degree[v])));
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::MalformedTree("not every element labels a leaf".into()));
        }
        Ok(BranchDecomposition { parent, leaf })
    }

    /// Roots an undirected tree at node 0.
    fn from_edges(n: usize, leaf: Vec<Option<usize>>, edges: &[(usize, usize)]) -> Result<Self> {
        let nodes = leaf.len();
        let mut adj = vec![Vec::new(); nodes];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut parent = vec![None; nodes];
        let mut seen = vec![false; nodes];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        Self::new(n, parent, leaf)
    }

    pub fn parent(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn leaf_labels(&self) -> &[Option<usize>] {
        &self.leaf
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    /// For each tree edge (each non-root node), the elements below it.
    pub fn edge_sides(&self) -> Vec<Subset> {
        let nodes = self.parent.len();
        let mut below: Vec<Subset> = self.leaf.iter().map(|l| l.map_or(Subset::EMPTY, Subset::singleton)).collect();
        // children before parents: order nodes by depth, deepest first
        let mut depth = vec![0usize; nodes];
        for (v, slot) in depth.iter_mut().enumerate() {
            let mut u = v;
            while let Some(p) = self.parent[u] {
                u = p;
                *slot += 1;
            }
        }
        let mut order: Vec<usize> = (0..nodes).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
        for v in order {
            if let Some(p) = self.parent[v] {
                below[p] = below[p].union(below[v]);
            }
        }
        (0..nodes).filter(|&v| self.parent[v].is_some()).map(|v| below[v]).collect()
    }
}

/// A permutation of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOrdering {
    order: Vec<usize>,
}

impl LinearOrdering {
    pub fn new(n: usize, order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::NotAPermutation);
        }
        for &e in &order {
            if e >= n || seen[e] {
                return Err(Error::NotAPermutation);
            }
            seen[e] = true;
        }
        Ok(LinearOrdering { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `w_i = f({e_1..e_i})` for `i = 1..n`.
    pub fn prefix_widths(&self, sys: &ConnectivitySystem) -> Vec<u32> {
        let mut acc = Subset::EMPTY;
        self.order
            .iter()
            .map(|&e| {
                acc = acc.with(e);
                sys.evaluate(acc)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Branch(BranchDecomposition),
    Linear(LinearOrdering),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthResult {
    pub width: u32,
    pub certificate: Certificate,
}

/// Width of a supplied tree: the largest `f` over the edge bipartitions.
pub fn decomposition_width(sys: &ConnectivitySystem, d: &BranchDecomposition) -> Result<u32> {
    let n = sys.n();
    let labelled = d.leaf.iter().flatten().count();
    if labelled != n || d.leaf.iter().flatten().any(|&e| e >= n) {
        return Err(Error::MalformedTree(format!("tree has {labelled} leaves for {n} elements")));
    }
    Ok(d.edge_sides().into_iter().map(|s| sys.evaluate(s)).max().unwrap_or(0))
}

/// `max{w_1..w_{n-1}, f(e_1)..f(e_n)}`.
pub fn ordering_width(sys: &ConnectivitySystem, ord: &LinearOrdering) -> Result<u32> {
    if ord.order.len() != sys.n() {
        return Err(Error::NotAPermutation);
    }
    let singles = ord.order.iter().map(|&e| sys.evaluate(Subset::singleton(e))).max().unwrap_or(0);
    let prefixes = ord.prefix_widths(sys);
    let inner = prefixes[..prefixes.len() - 1].iter().copied().max().unwrap_or(0);
    Ok(singles.max(inner))
}

/// Exact branch-width by dynamic programming over subsets.
///
/// `cost(S)` is the best width of a rooted binary tree with leaf set `S`,
/// counting the edge above it; an unrooted tree is a top edge `(S, X∖S)`.
pub fn branch_width(sys: &ConnectivitySystem) -> Result<WidthResult> {
    let n = sys.n();
    limits::check(Gate::Width, n)?;
    if n == 1 {
        let d = BranchDecomposition::new(1, vec![None], vec![Some(0)])?;
        return Ok(WidthResult { width: 0, certificate: Certificate::Branch(d) });
    }
    let size = 1usize << n;
    let mut cost = vec![u32::MAX; size];
    let mut split = vec![Subset::EMPTY; size];
    let mut by_size: Vec<Subset> = all_subsets(n).skip(1).collect();
    by_size.sort_by_key(|s| (s.len(), s.bits()));
    for s in by_size {
        let f = sys.evaluate(s);
        if s.len() == 1 {
            cost[s.index()] = f;
            continue;
        }
        let low = Subset::from_bits(s.bits() & s.bits().wrapping_neg());
        let rest = s.difference(low);
        let mut best = u32::MAX;
        let mut best_part = Subset::EMPTY;
        for sub in rest.subsets() {
            let s1 = sub.union(low);
            if s1 == s {
                continue;
            }
            let s2 = s.difference(s1);
            let c = cost[s1.index()].max(cost[s2.index()]);
            if c < best {
                best = c;
                best_part = s1;
            }
        }
        cost[s.index()] = f.max(best);
        split[s.index()] = best_part;
    }
    let full = sys.full();
    let first = Subset::singleton(0);
    let mut best = u32::MAX;
    let mut top = first;
    for sub in full.difference(first).subsets() {
        let s = sub.union(first);
        if s == full {
            continue;
        }
        let c = cost[s.index()].max(cost[full.difference(s).index()]);
        if c < best {
            best = c;
            top = s;
        }
    }
    let d = build_tree(n, &split, top, full.difference(top))?;
    Ok(WidthResult { width: best, certificate: Certificate::Branch(d) })
}

fn build_tree(n: usize, split: &[Subset], a: Subset, b: Subset) -> Result<BranchDecomposition> {
    fn grow(
        split: &[Subset],
        s: Subset,
        up: Option<usize>,
        parent: &mut Vec<Option<usize>>,
        leaf: &mut Vec<Option<usize>>,
    ) -> usize {
        let id = parent.len();
        parent.push(up);
        if s.len() == 1 {
            leaf.push(s.elements().next());
        } else {
            leaf.push(None);
            let s1 = split[s.index()];
            grow(split, s1, Some(id), parent, leaf);
            grow(split, s.difference(s1), Some(id), parent, leaf);
        }
        id
    }
    // root at the side with an internal node when there is one, so its degree is 3
    let (root_side, other) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut parent = Vec::new();
    let mut leaf = Vec::new();
    let root = grow(split, root_side, None, &mut parent, &mut leaf);
    grow(split, other, Some(root), &mut parent, &mut leaf);
    BranchDecomposition::new(n, parent, leaf)
}

/// Branch-width by scanning every unrooted ternary tree (built by inserting
/// leaves into edges). Exponential; a cross-check for the subset DP.
pub fn branch_width_exhaustive(sys: &ConnectivitySystem) -> Result<WidthResult> {
    let n = sys.n();
    limits::check(Gate::Width, n)?;
    if n <= 2 {
        return branch_width(sys);
    }
    let mut best: Option<(u32, Vec<(usize, usize)>)> = None;
    let mut edges: Vec<(usize, usize)> = vec![(n, 0), (n, 1), (n, 2)];
    insert_leaves(sys, 3, n + 1, &mut edges, &mut best);
    let (width, edges) = best.expect("at least one tree exists");
    let nodes = 2 * n - 2;
    let leaf = (0..nodes).map(|v| (v < n).then_some(v)).collect();
    let d = BranchDecomposition::from_edges(n, leaf, &edges)?;
    Ok(WidthResult { width, certificate: Certificate::Branch(d) })
}

fn insert_leaves(
    sys: &ConnectivitySystem,
    next_leaf: usize,
    next_internal: usize,
    edges: &mut Vec<(usize, usize)>,
    best: &mut Option<(u32, Vec<(usize, usize)>)>,
) {
    let n = sys.n();
    if next_leaf == n {
        let w = tree_width(sys, next_internal, edges);
        if best.as_ref().map_or(true, |(b, _)| w < *b) {
            *best = Some((w, edges.clone()));
        }
        return;
    }
    for i in 0..edges.len() {
        let (u, v) = edges[i];
        let w = next_internal;
        edges[i] = (u, w);
        edges.push((w, v));
        edges.push((w, next_leaf));
        insert_leaves(sys, next_leaf + 1, next_internal + 1, edges, best);
        edges.pop();
        edges.pop();
        edges[i] = (u, v);
    }
}

/// Width of a tree given as an edge list; leaves are nodes `0..n`.
fn tree_width(sys: &ConnectivitySystem, nodes: usize, edges: &[(usize, usize)]) -> u32 {
    let n = sys.n();
    let mut adj = vec![Vec::new(); nodes];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut width = 0;
    for &(u, v) in edges {
        // leaves reachable from v without crossing (u, v)
        let mut side = Subset::EMPTY;
        let mut stack = vec![(v, u)];
        while let Some((x, from)) = stack.pop() {
            if x < n {
                side = side.with(x);
            }
            for &y in &adj[x] {
                if y != from {
                    stack.push((y, x));
                }
            }
        }
        width = width.max(sys.evaluate(side));
    }
    width
}

/// Exact linear width by dynamic programming over prefix sets.
pub fn linear_width(sys: &ConnectivitySystem) -> Result<WidthResult> {
    let n = sys.n();
    limits::check(Gate::Width, n)?;
    let size = 1usize << n;
    // g[S]: best max of f over the non-empty prefixes of an ordering of S
    let mut g = vec![0u32; size];
    for s in all_subsets(n).skip(1) {
        let best = s.elements().map(|e| g[s.without(e).index()]).min().expect("non-empty");
        g[s.index()] = sys.evaluate(s).max(best);
    }
    let mut order = Vec::with_capacity(n);
    let mut s = sys.full();
    while !s.is_empty() {
        let target = s.elements().map(|e| g[s.without(e).index()]).min().expect("non-empty");
        let e = s.elements().find(|&e| g[s.without(e).index()] == target).expect("minimum is attained");
        order.push(e);
        s = s.without(e);
    }
    order.reverse();
    let ord = LinearOrdering::new(n, order)?;
    let width = ordering_width(sys, &ord)?;
    Ok(WidthResult { width, certificate: Certificate::Linear(ord) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityKind {
    Ultrafilter,
    Tangle,
    SingleUltrafilter,
}

impl DualityKind {
    pub fn name(self) -> &'static str {
        match self {
            DualityKind::Ultrafilter => "ultrafilter",
            DualityKind::Tangle => "tangle",
            DualityKind::SingleUltrafilter => "single_ultrafilter",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// An obstruction that exists although the width is at most `k`.
    Family(SetFamily),
    /// An optimal decomposition of width above `k` with no obstruction found.
    Certificate(WidthResult),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityVerdict {
    pub kind: DualityKind,
    pub k: EfficiencyBound,
    pub width: u32,
    /// width <= k
    pub width_side: bool,
    /// no obstruction of order k+1 exists
    pub obstruction_side: bool,
    pub consistent: bool,
    pub counterexample: Option<Counterexample>,
}

/// Computes the width and searches for an obstruction independently, then
/// compares: width <= k should hold exactly when no obstruction exists.
pub fn duality_audit(sys: &ConnectivitySystem, k: EfficiencyBound, kind: DualityKind) -> Result<DualityVerdict> {
    let width = match kind {
        DualityKind::SingleUltrafilter => linear_width(sys)?,
        _ => branch_width(sys)?,
    };
    let req = match kind {
        DualityKind::Ultrafilter => EnumerationRequest::new(EnumerationKind::Ultrafilter, k).non_principal(),
        DualityKind::Tangle => EnumerationRequest::new(EnumerationKind::Tangle, k),
        DualityKind::SingleUltrafilter => {
            EnumerationRequest::new(EnumerationKind::SingleUltrafilter(SingleMode::QS1), k).non_principal()
        }
    };
    let obstruction = enumerate_families(sys, &req.limit(1))?.into_iter().next();
    let width_side = width.width <= k.0;
    let obstruction_side = obstruction.is_none();
    let consistent = width_side == obstruction_side;
    let counterexample = match (consistent, obstruction) {
        (true, _) => None,
        (false, Some(f)) => Some(Counterexample::Family(f)),
        (false, None) => Some(Counterexample::Certificate(width.clone())),
    };
    Ok(DualityVerdict { kind, k, width: width.width, width_side, obstruction_side, consistent, counterexample })
}

/// The caterpillar decomposition read off a single-element sequence chain:
/// elements in the order the chain adds them.
///
/// With a bound, every chain member must satisfy `f <= k`.
pub fn chain_to_decomposition(
    sys: &ConnectivitySystem,
    chain: &[Subset],
    bound: Option<EfficiencyBound>,
) -> Result<WidthResult> {
    let n = sys.n();
    if chain.first() != Some(&Subset::EMPTY) || chain.last() != Some(&sys.full()) {
        return Err(Error::NotASequenceChain("chain must start at the empty set and end at X".into()));
    }
    if let Some(k) = bound {
        if let Some(&a) = chain.iter().find(|&&a| !sys.is_efficient(a, k)) {
            return Err(Error::NotASequenceChain(format!(
                "member {:?} has f = {} above the bound {}",
                a,
                sys.evaluate(a),
                k.0
            )));
        }
    }
    let mut order = Vec::with_capacity(n);
    for (i, w) in chain.windows(2).enumerate() {
        if !w[0].is_proper_subset_of(w[1]) {
            return Err(Error::NotASequenceChain(format!("step {} is not a strict inclusion", i + 1)));
        }
        let added = w[1].difference(w[0]);
        if added.len() != 1 {
            return Err(Error::NotSingleElement(i + 1));
        }
        order.push(added.elements().next().expect("one element"));
    }
    let ord = LinearOrdering::new(n, order)?;
    let width = ordering_width(sys, &ord)?;
    Ok(WidthResult { width, certificate: Certificate::Linear(ord) })
}

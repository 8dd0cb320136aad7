//! Connectivity systems: a ground set with a validated symmetric submodular
//! function, stored as a dense table of `2^n` values.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{all_subsets, GroundSet, Subset, MAX_GROUND};

/// Members of a family of "order k+1" satisfy `f(A) <= k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EfficiencyBound(pub u32);

impl EfficiencyBound {
    #[inline]
    pub const fn k(self) -> u32 {
        self.0
    }

    /// The order as usually reported, `k + 1`.
    #[inline]
    pub const fn order(self) -> u32 {
        self.0 + 1
    }
}

impl fmt::Display for EfficiencyBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}", self.0)
    }
}

/// A finite simple undirected graph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            if u >= vertices || v >= vertices {
                return Err(Error::NotSimpleGraph(format!("edge ({u},{v}) names a vertex >= {vertices}")));
            }
            if u == v {
                return Err(Error::NotSimpleGraph(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::NotSimpleGraph(format!("parallel edge ({u},{v})")));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn cycle(n: usize) -> Self {
        Graph { vertices: n, edges: (0..n).map(|i| (i, (i + 1) % n)).collect() }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph { vertices: n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { vertices: n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// How the connectivity function is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityFunctionSpec {
    /// Explicit values; a subset missing from the map takes its complement's value.
    Table { ground: GroundSet, values: BTreeMap<Subset, u32> },
    /// Ground set = edges; f(A) counts vertices touching both A and E∖A.
    GraphEdgeCut { graph: Graph, labels: Option<GroundSet> },
    /// Ground set = vertices; f(A) counts edges crossing (A, V∖A).
    GraphVertexCut { graph: Graph, labels: Option<GroundSet> },
}

impl ConnectivityFunctionSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ConnectivityFunctionSpec::Table { .. } => "table",
            ConnectivityFunctionSpec::GraphEdgeCut { .. } => "graph_edge_cut",
            ConnectivityFunctionSpec::GraphVertexCut { .. } => "graph_vertex_cut",
        }
    }
}

/// A ground set with a symmetric submodular function, `f(∅) = f(X) = 0`.
///
/// Immutable after construction and `Sync`, so searches may share it freely.
#[derive(Clone, Debug)]
pub struct ConnectivitySystem {
    ground: GroundSet,
    values: Vec<u32>,
    max_value: u32,
    spec: ConnectivityFunctionSpec,
}

pub fn build_system(spec: ConnectivityFunctionSpec) -> Result<ConnectivitySystem> {
    let (ground, values) = match &spec {
        ConnectivityFunctionSpec::Table { ground, values } => (ground.clone(), complete_table(ground, values)?),
        ConnectivityFunctionSpec::GraphEdgeCut { graph, labels } => {
            let ground = graph_labels(labels, "e", graph.edges.len())?;
            (ground, edge_cut_values(graph))
        }
        ConnectivityFunctionSpec::GraphVertexCut { graph, labels } => {
            let ground = match labels {
                Some(g) => g.clone(),
                None => GroundSet::numbered("v", graph.vertices)?,
            };
            if ground.len() != graph.vertices {
                return Err(Error::InvalidInput(format!(
                    "{} labels given for {} vertices",
                    ground.len(),
                    graph.vertices
                )));
            }
            (ground, vertex_cut_values(graph))
        }
    };
    validate(ground.len(), &values)?;
    let max_value = values.iter().copied().max().unwrap_or(0);
    Ok(ConnectivitySystem { ground, values, max_value, spec })
}

fn graph_labels(labels: &Option<GroundSet>, prefix: &str, n: usize) -> Result<GroundSet> {
    if n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge { n, max: MAX_GROUND });
    }
    let ground = match labels {
        Some(g) => g.clone(),
        None => GroundSet::numbered(prefix, n)?,
    };
    if ground.len() != n {
        return Err(Error::InvalidInput(format!("{} labels given for {n} graph elements", ground.len())));
    }
    Ok(ground)
}

fn complete_table(ground: &GroundSet, given: &BTreeMap<Subset, u32>) -> Result<Vec<u32>> {
    let n = ground.len();
    let full = ground.full();
    let mut values = vec![0u32; 1 << n];
    for a in all_subsets(n) {
        if !a.is_subset_of(full) {
            continue;
        }
        let co = a.complement(n);
        values[a.index()] = match (given.get(&a), given.get(&co)) {
            (Some(&x), Some(&y)) if x != y => return Err(Error::SymmetryViolation(a)),
            (Some(&x), _) | (None, Some(&x)) => x,
            (None, None) => return Err(Error::MissingValue(a)),
        };
    }
    if let Some(bad) = given.keys().find(|s| !s.is_subset_of(full)) {
        return Err(Error::InvalidInput(format!("table key {bad:?} is outside the ground set")));
    }
    Ok(values)
}

fn edge_cut_values(graph: &Graph) -> Vec<u32> {
    let m = graph.edges.len();
    let mut incident = vec![0u32; graph.vertices];
    for (i, &(u, v)) in graph.edges.iter().enumerate() {
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }
    let full = Subset::full(m).bits();
    (0..1u32 << m)
        .map(|a| incident.iter().filter(|&&inc| inc & a != 0 && inc & !a & full != 0).count() as u32)
        .collect()
}

fn vertex_cut_values(graph: &Graph) -> Vec<u32> {
    (0..1u32 << graph.vertices)
        .map(|a| graph.edges.iter().filter(|&&(u, v)| (a >> u & 1) != (a >> v & 1)).count() as u32)
        .collect()
}

/// Checks symmetry, normalization and submodularity of a dense value table.
///
/// Submodularity is checked through the equivalent local form
/// `f(A+i) + f(A+j) >= f(A) + f(A+i+j)` for `i, j ∉ A`, which is exact and costs
/// `O(2^n n^2)`; a failure is reported as the pair `(A+i, A+j)`.
pub fn validate(n: usize, values: &[u32]) -> Result<()> {
    if n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge { n, max: MAX_GROUND });
    }
    assert_eq!(values.len(), 1 << n, "value table must have 2^n entries");
    for a in all_subsets(n) {
        if values[a.index()] != values[a.complement(n).index()] {
            return Err(Error::SymmetryViolation(a));
        }
    }
    if values[0] != 0 {
        return Err(Error::NormalizationViolation(values[0]));
    }
    for a in all_subsets(n) {
        let fa = values[a.index()] as u64;
        let outside: Vec<usize> = a.complement(n).elements().collect();
        for (pos, &i) in outside.iter().enumerate() {
            let ai = a.with(i);
            let fai = values[ai.index()] as u64;
            for &j in &outside[pos + 1..] {
                let aj = a.with(j);
                if fai + (values[aj.index()] as u64) < fa + values[ai.with(j).index()] as u64 {
                    return Err(Error::SubmodularityViolation(ai, aj));
                }
            }
        }
    }
    Ok(())
}

impl ConnectivitySystem {
    /// A table-backed system from a total value list indexed by bitmask.
    pub fn from_values(ground: GroundSet, values: Vec<u32>) -> Result<Self> {
        if values.len() != 1 << ground.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} values, got {}",
                1usize << ground.len(),
                values.len()
            )));
        }
        let map = all_subsets(ground.len()).zip(values.iter().copied()).collect();
        build_system(ConnectivityFunctionSpec::Table { ground, values: map })
    }

    /// A table-backed system from a function of the subset.
    pub fn from_fn(ground: GroundSet, f: impl Fn(Subset) -> u32) -> Result<Self> {
        let values = all_subsets(ground.len()).map(f).collect();
        Self::from_values(ground, values)
    }

    pub fn edge_cut(graph: Graph) -> Result<Self> {
        let graph = Graph::new(graph.vertices, graph.edges)?;
        build_system(ConnectivityFunctionSpec::GraphEdgeCut { graph, labels: None })
    }

    pub fn vertex_cut(graph: Graph) -> Result<Self> {
        let graph = Graph::new(graph.vertices, graph.edges)?;
        build_system(ConnectivityFunctionSpec::GraphVertexCut { graph, labels: None })
    }

    /// `f ≡ 0` on the given labels.
    pub fn zero(labels: &[&str]) -> Result<Self> {
        Self::from_fn(GroundSet::new(labels.iter().copied())?, |_| 0)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    #[inline]
    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    pub fn spec(&self) -> &ConnectivityFunctionSpec {
        &self.spec
    }

    pub fn max_value(&self) -> u32 {
        self.max_value
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `f(A)`. Panics if `a` has bits outside the ground set.
    #[inline]
    pub fn evaluate(&self, a: Subset) -> u32 {
        self.values[a.index()]
    }

    #[inline]
    pub fn is_efficient(&self, a: Subset, k: EfficiencyBound) -> bool {
        self.values[a.index()] <= k.0
    }

    #[inline]
    pub fn complement(&self, a: Subset) -> Subset {
        a.complement(self.n())
    }

    /// All `A` with `f(A) <= k`, in increasing bitmask order.
    pub fn enumerate_k_efficient(&self, k: EfficiencyBound) -> Vec<Subset> {
        all_subsets(self.n()).filter(|&a| self.is_efficient(a, k)).collect()
    }

    pub fn contains(&self, a: Subset) -> bool {
        a.is_subset_of(self.full())
    }

    /// The same function with elements renamed by `perm` (`new index = perm[old]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::NotAPermutation);
        }
        let mut labels = vec![String::new(); n];
        for (old, &new) in perm.iter().enumerate() {
            labels[new] = self.ground.label(old).to_string();
        }
        let ground = GroundSet::new(labels).map_err(|_| Error::NotAPermutation)?;
        let map = |a: Subset| Subset::from_elements(a.elements().map(|i| perm[i]));
        let mut values = vec![0; 1 << n];
        for a in all_subsets(n) {
            values[map(a).index()] = self.evaluate(a);
        }
        Self::from_values(ground, values)
    }
}

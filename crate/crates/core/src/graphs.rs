//! Small-graph generators for the exhaustive tests and audits.

use std::collections::BTreeSet;

use crate::connectivity::Graph;

/// Every connected simple graph on vertices `0..v` (labelled, so isomorphic
/// copies repeat). Edges are listed in lexicographic order.
pub fn labelled_connected_graphs(v: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    assert!(slots.len() < 32, "labelled enumeration is meant for tiny vertex counts");
    (0u32..1 << slots.len())
        .map(|mask| Graph {
            vertices: v,
            edges: slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect(),
        })
        .filter(Graph::is_connected)
        .collect()
}

type EdgeSet = Vec<(usize, usize)>;

fn degrees(v: usize, edges: &EdgeSet) -> Vec<usize> {
    let mut d = vec![0; v];
    for &(a, b) in edges {
        d[a] += 1;
        d[b] += 1;
    }
    d
}

/// Lexicographically least sorted edge list over all relabellings that list
/// vertices by non-increasing degree.
fn canonical(v: usize, edges: &EdgeSet) -> EdgeSet {
    let deg = degrees(v, edges);
    let mut best: Option<EdgeSet> = None;
    let mut perm = vec![usize::MAX; v];
    let mut used = vec![false; v];
    fn assign(
        pos: usize,
        v: usize,
        deg: &[usize],
        edges: &EdgeSet,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<EdgeSet>,
    ) {
        if pos == v {
            let mut e: EdgeSet = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            e.sort_unstable();
            if best.as_ref().map_or(true, |b| e < *b) {
                *best = Some(e);
            }
            return;
        }
        // new label `pos` goes to an unused vertex of the largest remaining degree
        let target = (0..v).filter(|&u| !used[u]).map(|u| deg[u]).max().expect("vertices remain");
        for u in 0..v {
            if !used[u] && deg[u] == target {
                used[u] = true;
                perm[u] = pos;
                assign(pos + 1, v, deg, edges, perm, used, best);
                used[u] = false;
            }
        }
    }
    assign(0, v, &deg, edges, &mut perm, &mut used, &mut best);
    best.expect("at least one relabelling")
}

/// One representative of each isomorphism class of connected simple graphs
/// with exactly `m >= 1` edges and no isolated vertices, in canonical form.
///
/// Grown edge by edge: every such graph loses either a leaf edge or a cycle
/// edge and stays connected, so adding an edge to each class of size `m - 1`
/// reaches every class of size `m`.
pub fn connected_graphs_with_edges(m: usize) -> Vec<Graph> {
    assert!(m >= 1, "at least one edge");
    let mut level: BTreeSet<(usize, EdgeSet)> = BTreeSet::from([(2, vec![(0, 1)])]);
    for _ in 1..m {
        let mut next = BTreeSet::new();
        for (v, edges) in &level {
            let v = *v;
            for a in 0..v {
                for b in a + 1..=v {
                    let e = (a, b);
                    if edges.contains(&e) {
                        continue;
                    }
                    let nv = if b == v { v + 1 } else { v };
                    let mut grown = edges.clone();
                    grown.push(e);
                    next.insert((nv, canonical(nv, &grown)));
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|(vertices, edges)| Graph { vertices, edges }).collect()
}

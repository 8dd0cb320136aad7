mod common;

use proptest::prelude::*;

use connsys::closure::{Closure, MeetRule};
use connsys::decomposition::{
    branch_width, branch_width_exhaustive, decomposition_width, linear_width, ordering_width, Certificate,
    LinearOrdering,
};
use connsys::families::{check_family, complement_family, FamilyKind, SetFamily};
use connsys::order::{brute_force_max_antichain, chain_partition_of, max_antichain_of};
use connsys::subset::{all_subsets, Subset};
use connsys::{ConnectivitySystem, EfficiencyBound, Graph};

/// A simple graph on up to `max_v` vertices from an edge mask.
fn graph(max_v: usize) -> impl Strategy<Value = Graph> {
    (2..=max_v)
        .prop_flat_map(|v| {
            let slots: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
            let m = slots.len();
            (Just(v), Just(slots), 1u64..(1 << m))
        })
        .prop_map(|(v, slots, mask)| Graph {
            vertices: v,
            edges: slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect(),
        })
}

/// Edge-cut system with 1..=7 edges.
fn edge_system() -> impl Strategy<Value = ConnectivitySystem> {
    graph(5)
        .prop_filter("at most 7 edges", |g| g.edges.len() <= 7)
        .prop_map(|g| ConnectivitySystem::edge_cut(g).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_systems_always_validate(g in graph(6)) {
        prop_assert!(ConnectivitySystem::edge_cut(g.clone()).is_ok());
        prop_assert!(ConnectivitySystem::vertex_cut(g).is_ok());
    }

    #[test]
    fn efficient_sets_grow_with_k(sys in edge_system()) {
        let mut prev: Vec<Subset> = Vec::new();
        for k in 0..=sys.max_value() {
            let cur = sys.enumerate_k_efficient(EfficiencyBound(k));
            prop_assert!(prev.iter().all(|a| cur.contains(a)));
            prev = cur;
        }
        prop_assert_eq!(prev.len(), 1 << sys.n());
    }

    #[test]
    fn branch_width_dp_matches_tree_search(sys in edge_system()) {
        prop_assume!(sys.n() <= 6);
        let dp = branch_width(&sys).unwrap();
        prop_assert_eq!(dp.width, branch_width_exhaustive(&sys).unwrap().width);
        let Certificate::Branch(d) = &dp.certificate else { panic!("branch certificate expected") };
        prop_assert_eq!(decomposition_width(&sys, d).unwrap(), dp.width);
    }

    #[test]
    fn linear_width_matches_all_orderings(sys in edge_system()) {
        prop_assume!(sys.n() <= 6);
        let lw = linear_width(&sys).unwrap();
        let Certificate::Linear(o) = &lw.certificate else { panic!("ordering expected") };
        prop_assert_eq!(ordering_width(&sys, o).unwrap(), lw.width);
        let mut best = u32::MAX;
        let mut order: Vec<usize> = (0..sys.n()).collect();
        permute(&mut order, 0, &mut |p| {
            let w = ordering_width(&sys, &LinearOrdering::new(sys.n(), p.to_vec()).unwrap()).unwrap();
            best = best.min(w);
        });
        prop_assert_eq!(lw.width, best);
        prop_assert!(branch_width(&sys).unwrap().width <= lw.width);
    }

    #[test]
    fn widths_are_relabelling_invariant((sys, perm) in edge_system().prop_flat_map(|s| { let n = s.n(); (Just(s), permutation(n)) })) {
        let moved = sys.permuted(&perm).unwrap();
        prop_assert_eq!(branch_width(&sys).unwrap().width, branch_width(&moved).unwrap().width);
        prop_assert_eq!(linear_width(&sys).unwrap().width, linear_width(&moved).unwrap().width);
    }

    #[test]
    fn fixed_families_are_ultrafilters(sys in edge_system(), e in 0usize..7, k in 0u32..4) {
        let e = e % sys.n();
        let k = EfficiencyBound(k.min(sys.max_value()));
        let fixed = SetFamily::new(sys.n(), k, sys.enumerate_k_efficient(k).into_iter().filter(|a| a.contains(e))).unwrap();
        prop_assert!(check_family(&sys, &fixed, FamilyKind::Ultrafilter).unwrap().holds);
        prop_assert!(check_family(&sys, &complement_family(&fixed), FamilyKind::Filter).unwrap().violated_axiom.is_some());
    }

    #[test]
    fn closure_output_is_a_filter(sys in edge_system(), pick in prop::collection::vec(any::<prop::sample::Index>(), 1..4), k in 0u32..4) {
        let k = EfficiencyBound(k.min(sys.max_value()));
        let cands: Vec<Subset> = sys.enumerate_k_efficient(k).into_iter().filter(|a| !a.is_empty()).collect();
        let mut c = Closure::new(&sys, k, MeetRule::Intersection);
        let ok = pick.iter().all(|i| c.add(cands[i.index(cands.len())]).is_ok());
        if ok {
            prop_assert!(check_family(&sys, &c.to_family(), FamilyKind::Filter).unwrap().holds);
        }
    }

    #[test]
    fn complement_is_an_involution(n in 1usize..6, bits in prop::collection::vec(any::<u32>(), 0..12)) {
        let sets = bits.into_iter().map(|b| Subset::from_bits(b & ((1 << n) - 1)));
        let f = SetFamily::new(n, EfficiencyBound(0), sets).unwrap();
        prop_assert_eq!(complement_family(&complement_family(&f)), f);
    }

    #[test]
    fn dilworth_on_random_families(n in 1usize..6, bits in prop::collection::vec(1u32..64, 1..14)) {
        let mut fam: Vec<Subset> = bits.into_iter().map(|b| Subset::from_bits(b & ((1 << n) - 1))).filter(|s| !s.is_empty()).collect();
        fam.sort();
        fam.dedup();
        prop_assume!(!fam.is_empty());
        let anti = max_antichain_of(&fam);
        let cover = chain_partition_of(&fam);
        prop_assert_eq!(anti.len(), cover.len());
        prop_assert_eq!(anti.len(), brute_force_max_antichain(&fam).unwrap());
        for chain in &cover {
            prop_assert!(chain.windows(2).all(|w| w[0].is_proper_subset_of(w[1])));
        }
    }

    #[test]
    fn subset_algebra(n in 1usize..10, a in any::<u32>(), b in any::<u32>()) {
        let full = Subset::full(n);
        let (a, b) = (Subset::from_bits(a & full.bits()), Subset::from_bits(b & full.bits()));
        prop_assert_eq!(a.union(b).complement(n), a.complement(n).intersection(b.complement(n)));
        prop_assert_eq!(a.difference(b), a.intersection(b.complement(n)));
        prop_assert_eq!(a.len() + b.len(), a.union(b).len() + a.intersection(b).len());
        prop_assert_eq!(a.subsets().count(), 1 << a.len());
        prop_assert_eq!(a.supersets(n).count(), 1 << (n - a.len()));
        prop_assert!(all_subsets(n).nth(a.index()) == Some(a));
    }
}

fn permute(items: &mut Vec<usize>, from: usize, visit: &mut dyn FnMut(&[usize])) {
    if from == items.len() {
        visit(items);
        return;
    }
    for i in from..items.len() {
        items.swap(from, i);
        permute(items, from + 1, visit);
        items.swap(from, i);
    }
}

#[test]
fn table_systems_satisfy_duality_helpers() {
    // every small table system has branch-width at most its linear width
    for sys in common::small_systems(3, 2) {
        assert!(branch_width(&sys).unwrap().width <= linear_width(&sys).unwrap().width);
    }
}

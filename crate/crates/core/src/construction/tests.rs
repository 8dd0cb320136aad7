use super::*;
use crate::testkit::{c4, fam, fixed_on, s, zero};

fn enumerate(sys: &ConnectivitySystem, req: EnumerationRequest) -> Vec<SetFamily> {
    enumerate_families(sys, &req).unwrap()
}

#[test]
fn c4_has_no_non_principal_ultrafilter_at_k2() {
    let req = EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(2)).non_principal();
    assert!(enumerate(&c4(), req).is_empty());
}

#[test]
fn c4_full_set_is_the_only_non_principal_ultrafilter_at_k1() {
    let sys = c4();
    let req = EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(1)).non_principal();
    assert_eq!(enumerate(&sys, req), vec![fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]])]);
}

#[test]
fn c4_ultrafilters_at_k2_are_the_four_fixed_families() {
    let sys = c4();
    let got = enumerate(&sys, EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(2)));
    let want: Vec<SetFamily> = (0..4).map(|e| fixed_on(&sys, e, 2)).collect();
    assert_eq!(got.len(), 4);
    for w in &want {
        assert!(got.contains(w));
    }
}

#[test]
fn two_point_trivial_system_has_no_tangle_of_order_one() {
    let sys = zero(&["a", "b"]);
    assert!(enumerate(&sys, EnumerationRequest::new(EnumerationKind::Tangle, EfficiencyBound(0))).is_empty());
}

#[test]
fn enumerated_tangles_pass_the_checker() {
    let sys = crate::testkit::k4();
    for k in 0..=4 {
        for t in enumerate(&sys, EnumerationRequest::new(EnumerationKind::Tangle, EfficiencyBound(k))) {
            assert!(check_family(&sys, &t, FamilyKind::Tangle).unwrap().holds, "{t:?}");
        }
    }
}

#[test]
fn parallel_enumeration_matches_sequential() {
    let sys = crate::testkit::k4();
    for k in 0..=4 {
        let req = EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(k));
        assert_eq!(enumerate(&sys, req), enumerate(&sys, req.parallel(4)));
        let req = EnumerationRequest::new(EnumerationKind::Tangle, EfficiencyBound(k)).limit(2);
        assert_eq!(enumerate(&sys, req), enumerate(&sys, req.parallel(3)));
    }
}

#[test]
fn limit_caps_results() {
    let sys = c4();
    let req = EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(2)).limit(1);
    assert_eq!(enumerate(&sys, req).len(), 1);
}

#[test]
fn extension_examples() {
    let x = zero(&["x"]);
    let fx = fam(&x, 0, &[&["x"]]);
    assert_eq!(extend_filter_to_ultrafilter(&x, &fx).unwrap(), fx);

    let sys = c4();
    let full = fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]]);
    assert_eq!(extend_filter_to_ultrafilter(&sys, &full).unwrap(), full);
    let full2 = full.with_bound(EfficiencyBound(2));
    assert_eq!(extend_filter_to_ultrafilter(&sys, &full2).unwrap(), fixed_on(&sys, 0, 2));
}

#[test]
fn extension_rejects_non_filters() {
    let sys = c4();
    let bad = fam(&sys, 1, &[&[], &["e1", "e2", "e3", "e4"]]);
    assert_eq!(extend_filter_to_ultrafilter(&sys, &bad), Err(Error::NotAFilter { axiom: "Q3".into() }));
}

#[test]
fn construction_examples() {
    let x = zero(&["x"]);
    assert_eq!(construct_ultrafilter(&x, EfficiencyBound(0)).unwrap().family, fam(&x, 0, &[&["x"]]));
    let sys = c4();
    let r = construct_ultrafilter(&sys, EfficiencyBound(1)).unwrap();
    assert_eq!(r.family, fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]]));
    let r = construct_ultrafilter(&sys, EfficiencyBound(2)).unwrap();
    assert_eq!(r.family, fixed_on(&sys, 0, 2));
    assert!(!r.fallback);
    assert!(r.ops <= 64 * 4u64.pow(4), "{}", r.ops);
}

#[test]
fn subbase_examples() {
    let abc = zero(&["a", "b", "c"]);
    let sb = fam(&abc, 0, &[&["a", "b"], &["b", "c"]]);
    assert_eq!(
        generate_from_subbase(&abc, &sb).unwrap(),
        fam(&abc, 0, &[&["b"], &["a", "b"], &["b", "c"], &["a", "b", "c"]])
    );
    let ab = zero(&["a", "b"]);
    assert_eq!(
        generate_from_subbase(&ab, &fam(&ab, 0, &[&["a"], &["b"]])),
        Err(Error::EmptyIntersection(vec![s(&ab, &["a"]), s(&ab, &["b"])]))
    );
    let sys = c4();
    let full = fam(&sys, 2, &[&["e1", "e2", "e3", "e4"]]);
    assert_eq!(generate_from_subbase(&sys, &full).unwrap(), full);
}

#[test]
fn inefficient_intersections_are_dropped() {
    // {e1,e2,e3} ∩ {e1,e3,e4} = {e1,e3} has f = 4 and is dropped
    let sys = c4();
    let sb = fam(&sys, 2, &[&["e1", "e2", "e3"], &["e1", "e3", "e4"]]);
    let got = generate_from_subbase(&sys, &sb).unwrap();
    assert_eq!(got, fam(&sys, 2, &[&["e1", "e2", "e3"], &["e1", "e3", "e4"], &["e1", "e2", "e3", "e4"]]));
    assert!(check_family(&sys, &got, FamilyKind::Filter).unwrap().holds);
}

#[test]
fn ultrafilter_number_examples() {
    let sys = c4();
    assert_eq!(ultrafilter_number(&sys, EfficiencyBound(2)).unwrap().u, None);
    let r = ultrafilter_number(&sys, EfficiencyBound(1)).unwrap();
    assert_eq!(r.u, Some(1));
    assert_eq!(r.witness_prefilter, Some(fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]])));
    assert_eq!(ultrafilter_number(&zero(&["x"]), EfficiencyBound(0)).unwrap().u, None);
}

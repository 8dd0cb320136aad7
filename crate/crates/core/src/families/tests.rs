use super::*;
use crate::testkit::{c4, fam, fixed_on, s, zero};

fn check(sys: &ConnectivitySystem, f: &SetFamily, kind: FamilyKind) -> Verdict {
    check_family(sys, f, kind).unwrap()
}

#[test]
fn singleton_system_ultrafilter() {
    let sys = zero(&["x"]);
    assert!(check(&sys, &fam(&sys, 0, &[&["x"]]), FamilyKind::Ultrafilter).holds);
}

#[test]
fn c4_full_set_is_an_ultrafilter_at_k1() {
    let sys = c4();
    let v = check(&sys, &fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]]), FamilyKind::Ultrafilter);
    assert!(v.holds, "{v:?}");
    assert_eq!(v.derived.get("FT1"), Some(&true));
}

#[test]
fn empty_set_member_breaks_q3() {
    let sys = c4();
    let v = check(&sys, &fam(&sys, 1, &[&[], &["e1", "e2", "e3", "e4"]]), FamilyKind::Filter);
    assert!(!v.holds);
    assert_eq!(v.violated_axiom, Some(Axiom::Q3));
    assert_eq!(v.witnesses, vec![Subset::EMPTY]);
}

#[test]
fn empty_set_tangle_fails_t2_on_two_points() {
    // {a} and {b} are 0-efficient but neither they nor their complements are members
    let sys = zero(&["a", "b"]);
    let v = check(&sys, &fam(&sys, 0, &[&[]]), FamilyKind::Tangle);
    assert!(!v.holds);
    assert_eq!(v.violated_axiom, Some(Axiom::T2));
    assert_eq!(v.witnesses, vec![s(&sys, &["a"])]);
}

#[test]
fn empty_families_are_rejected_where_required() {
    let sys = zero(&["a", "b"]);
    let empty = fam(&sys, 0, &[]);
    for kind in [FamilyKind::Filter, FamilyKind::Ultrafilter, FamilyKind::Prefilter, FamilyKind::Tangle] {
        assert_eq!(check(&sys, &empty, kind).violated_axiom, Some(Axiom::NonEmpty), "{kind}");
    }
    assert_eq!(check(&sys, &empty, FamilyKind::IndependenceSystem).violated_axiom, Some(Axiom::IN1));
    assert!(check(&sys, &fam(&sys, 0, &[&[]]), FamilyKind::IndependenceSystem).holds);
}

#[test]
fn e1_fixed_family_is_an_ultrafilter_at_k2() {
    let sys = c4();
    let u = fixed_on(&sys, 0, 2);
    assert_eq!(u.len(), 7);
    assert!(check(&sys, &u, FamilyKind::Ultrafilter).holds);
    assert!(check(&sys, &u, FamilyKind::Superfilter).holds);
    assert!(check(&sys, &u, FamilyKind::UltraPrefilter).holds);
}

#[test]
fn ground_set_mismatch() {
    let sys = c4();
    let other = zero(&["a"]);
    let f = fam(&other, 0, &[&["a"]]);
    assert_eq!(check_family(&sys, &f, FamilyKind::Filter), Err(Error::GroundSetMismatch { expected: 4, found: 1 }));
}

#[test]
fn classify_examples() {
    let sys = c4();
    let flags = classify_family(&sys, &fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]])).unwrap();
    assert_eq!(flags, FamilyFlags { principal: TriState::Vacuous, non_principal: TriState::Yes, uniform: true });

    let x = zero(&["x"]);
    let flags = classify_family(&x, &fam(&x, 0, &[&["x"]])).unwrap();
    assert_eq!(flags, FamilyFlags { principal: TriState::Yes, non_principal: TriState::No, uniform: true });

    let flags = classify_family(&sys, &fixed_on(&sys, 0, 2)).unwrap();
    assert_eq!(flags, FamilyFlags { principal: TriState::No, non_principal: TriState::No, uniform: false });
}

#[test]
fn complement_examples() {
    let ab = zero(&["a", "b"]);
    assert_eq!(complement_family(&fam(&ab, 0, &[&[]])), fam(&ab, 0, &[&["a", "b"]]));
    let sys = c4();
    let fx = fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]]);
    assert_eq!(complement_family(&fx), fam(&sys, 1, &[&[]]));
    let u = fixed_on(&sys, 2, 2);
    assert_eq!(complement_family(&complement_family(&u)), u);
}

#[test]
fn fip_examples() {
    let ab = zero(&["a", "b"]);
    let r = fip_check(&ab, &fam(&ab, 0, &[&["a", "b"]]), s(&ab, &["a"])).unwrap();
    assert!(r.has_fip && r.agrees());
    let r = fip_check(&ab, &fam(&ab, 0, &[&["a"], &["a", "b"]]), s(&ab, &["b"])).unwrap();
    assert!(!r.has_fip && r.agrees());
    let r = fip_check(&ab, &fam(&ab, 0, &[&["a"], &["a", "b"]]), ab.full()).unwrap();
    assert!(r.has_fip);
    assert!(matches!(fip_check(&ab, &fam(&ab, 0, &[&[]]), ab.full()), Err(Error::NotAFilter { .. })));
}

#[test]
fn truncation_examples() {
    let sys = c4();
    let u = fixed_on(&sys, 0, 2);
    assert_eq!(truncate_order(&sys, &u, EfficiencyBound(1)).unwrap(), fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]]));
    assert_eq!(truncate_order(&sys, &u, EfficiencyBound(2)).unwrap(), u);
    assert_eq!(truncate_order(&sys, &u, EfficiencyBound(3)), Err(Error::BoundIncrease { old: 2, new: 3 }));
    let x = zero(&["x"]);
    let fx = fam(&x, 0, &[&["x"]]);
    assert_eq!(truncate_order(&x, &fx, EfficiencyBound(0)).unwrap(), fx);
}

#[test]
fn single_filter_reports_the_other_mode() {
    let sys = c4();
    let fx = fam(&sys, 1, &[&["e1", "e2", "e3", "e4"]]);
    let v = check(&sys, &fx, FamilyKind::SingleFilter(SingleMode::QS1));
    assert!(v.holds);
    assert_eq!(v.derived.get("QSD1"), Some(&true));
    // {e1,e2} minus e1 is the efficient {e2}, which the e1-fixed family lacks
    let u = fixed_on(&sys, 0, 2);
    let v = check(&sys, &u, FamilyKind::SingleFilter(SingleMode::QS1));
    assert_eq!(v.violated_axiom, Some(Axiom::QS1));
    assert_eq!(v.derived.get("QSD1"), Some(&false));
}

#[test]
fn weak_and_quasi_filters() {
    let ab = zero(&["a", "b"]);
    // {a} and {b} are disjoint with an efficient (empty) intersection
    let v = check(&ab, &fam(&ab, 0, &[&["a"], &["b"], &["a", "b"]]), FamilyKind::WeakFilter);
    assert_eq!(v.violated_axiom, Some(Axiom::QW1));
    assert_eq!(v.witnesses, vec![s(&ab, &["a"]), s(&ab, &["b"])]);
    // X = {a} ∪ {b} with neither part a member
    let v = check(&ab, &fam(&ab, 0, &[&["a", "b"]]), FamilyKind::QuasiFilter);
    assert_eq!(v.violated_axiom, Some(Axiom::QQ1));
    assert!(check(&ab, &fam(&ab, 0, &[&["a"], &["a", "b"]]), FamilyKind::QuasiFilter).holds);
}

#[test]
fn prefilter_and_subbase_axioms() {
    let abc = zero(&["a", "b", "c"]);
    let p = fam(&abc, 0, &[&["a", "b"], &["b", "c"]]);
    assert_eq!(check(&abc, &p, FamilyKind::Prefilter).violated_axiom, Some(Axiom::P3));
    assert!(check(&abc, &fam(&abc, 0, &[&["b"], &["a", "b"], &["b", "c"]]), FamilyKind::Prefilter).holds);
    assert!(check(&abc, &p, FamilyKind::FilterSubbase).holds);
    let v = check(&abc, &p, FamilyKind::UltrafilterSubbase);
    assert_eq!(v.violated_axiom, Some(Axiom::SB4));
}

#[test]
fn lambda_system_disjoint_unions() {
    let abc = zero(&["a", "b", "c"]);
    let d = fam(&abc, 0, &[&[], &["a"], &["b"], &["b", "c"], &["a", "c"], &["a", "b", "c"]]);
    let v = check(&abc, &d, FamilyKind::LambdaSystem);
    assert_eq!(v.violated_axiom, Some(Axiom::LS3));
    assert_eq!(v.witnesses, vec![s(&abc, &["a"]), s(&abc, &["b"])]);
}

#[test]
fn majority_and_union_closed() {
    let ab = zero(&["a", "b"]);
    let m = fam(&ab, 0, &[&["a"], &["b"], &["a", "b"]]);
    assert!(check(&ab, &m, FamilyKind::MajoritySystem).holds);
    assert_eq!(check(&ab, &m, FamilyKind::UnionClosedSystem).violated_axiom, Some(Axiom::UC2));
    let all = fam(&ab, 0, &[&[], &["a"], &["b"], &["a", "b"]]);
    assert!(check(&ab, &all, FamilyKind::UnionClosedSystem).holds);
    assert!(check(&ab, &all, FamilyKind::ClosureSystem).holds);
    assert_eq!(check(&ab, &all, FamilyKind::MajoritySystem).violated_axiom, Some(Axiom::MA2));
}

#[test]
fn kind_names_round_trip() {
    for kind in FamilyKind::ALL {
        assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
    }
    assert!("bogus".parse::<FamilyKind>().is_err());
}

//! Enumeration against brute force over every family on ground sets of size <= 3.

mod common;

use connsys::construction::{enumerate_families, EnumerationKind, EnumerationRequest};
use connsys::families::{check_family, classify_family, truncate_order, FamilyKind, SetFamily, SingleMode, TriState};
use connsys::subset::Subset;
use connsys::EfficiencyBound;

fn all_families(n: usize, k: u32) -> impl Iterator<Item = SetFamily> {
    let size = 1usize << n;
    (0u64..1 << size).map(move |code| {
        let sets = (0..size).filter(|&i| code >> i & 1 == 1).map(|i| Subset::from_bits(i as u32));
        SetFamily::new(n, EfficiencyBound(k), sets).unwrap()
    })
}

#[test]
fn enumeration_is_complete_for_tiny_ground_sets() {
    let kinds = [
        (EnumerationKind::Ultrafilter, FamilyKind::Ultrafilter),
        (EnumerationKind::Tangle, FamilyKind::Tangle),
        (EnumerationKind::SingleUltrafilter(SingleMode::QS1), FamilyKind::SingleUltrafilter(SingleMode::QS1)),
        (EnumerationKind::SingleUltrafilter(SingleMode::QSD1), FamilyKind::SingleUltrafilter(SingleMode::QSD1)),
    ];
    for n in 1..=3 {
        for sys in common::small_systems(n, 2) {
            for k in 0..=sys.max_value() {
                for (ekind, fkind) in kinds {
                    let brute: Vec<SetFamily> =
                        all_families(n, k).filter(|f| check_family(&sys, f, fkind).unwrap().holds).collect();
                    let mut got =
                        enumerate_families(&sys, &EnumerationRequest::new(ekind, EfficiencyBound(k))).unwrap();
                    got.sort_by(|a, b| a.members().cmp(b.members()));
                    let mut want = brute.clone();
                    want.sort_by(|a, b| a.members().cmp(b.members()));
                    assert_eq!(got, want, "{fkind} on {:?} k={k}", sys.values());

                    let np =
                        enumerate_families(&sys, &EnumerationRequest::new(ekind, EfficiencyBound(k)).non_principal())
                            .unwrap();
                    let want_np: Vec<&SetFamily> = brute
                        .iter()
                        .filter(|f| {
                            fkind == FamilyKind::Tangle
                                || classify_family(&sys, f).unwrap().non_principal == TriState::Yes
                        })
                        .collect();
                    assert_eq!(np.len(), want_np.len(), "non-principal {fkind} on {:?} k={k}", sys.values());
                }
            }
        }
    }
}

#[test]
fn truncation_maps_ultrafilters_to_ultrafilters() {
    for n in 1..=3 {
        for sys in common::small_systems(n, 2) {
            for k in 0..sys.max_value() {
                let higher = enumerate_families(
                    &sys,
                    &EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(k + 1)),
                )
                .unwrap();
                let lower = enumerate_families(
                    &sys,
                    &EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(k)),
                )
                .unwrap();
                for u in higher {
                    let t = truncate_order(&sys, &u, EfficiencyBound(k)).unwrap();
                    assert!(lower.contains(&t), "{:?} truncated to k={k} is not an ultrafilter", u);
                }
            }
        }
    }
}

#[test]
fn enumeration_order_is_deterministic_and_parallel_safe() {
    for sys in common::small_systems(3, 2) {
        for k in 0..=sys.max_value() {
            let req = EnumerationRequest::new(EnumerationKind::Ultrafilter, EfficiencyBound(k));
            let a = enumerate_families(&sys, &req).unwrap();
            assert_eq!(a, enumerate_families(&sys, &req).unwrap());
            assert_eq!(a, enumerate_families(&sys, &req.parallel(3)).unwrap());
            for limit in 1..=a.len() {
                assert_eq!(enumerate_families(&sys, &req.limit(limit)).unwrap(), a[..limit]);
            }
        }
    }
}

#![allow(dead_code)]

use connsys::subset::GroundSet;
use connsys::ConnectivitySystem;

/// Every symmetric submodular table on `n` points with values in `0..=max`
/// and `f(∅) = 0`.
pub fn small_systems(n: usize, max: u32) -> Vec<ConnectivitySystem> {
    let size = 1usize << n;
    let full = size - 1;
    let reps: Vec<usize> = (1..size).filter(|&a| a < full ^ a).collect();
    let base = max as usize + 1;
    let mut out = Vec::new();
    for mut code in 0..base.pow(reps.len() as u32) {
        let mut f = vec![0u32; size];
        for &a in &reps {
            f[a] = (code % base) as u32;
            f[full ^ a] = f[a];
            code /= base;
        }
        let submodular = (0..size).all(|a| (0..size).all(|b| f[a] + f[b] >= f[a & b] + f[a | b]));
        if submodular {
            out.push(ConnectivitySystem::from_values(GroundSet::numbered("x", n).unwrap(), f).unwrap());
        }
    }
    out
}

//! Deterministic instance generators shared by the benchmarks.

use stackgame_core::feasibility::complete_with_anchor;
use stackgame_core::rational::int;
use stackgame_core::{AssetParams, AttackVector, GameInstance};

/// A feasible instance with `assets` assets (at least 2). Non-anchor assets
/// share attacker reward 5 and have attacker omegas `2, 3, 4, …`.
pub fn feasible_instance(assets: usize) -> GameInstance {
    assert!(assets >= 2, "need at least two assets");
    let prefix: Vec<AssetParams> = (0..assets - 1)
        .map(|k| {
            let k = k as i64;
            let omega = k + 2;
            AssetParams::from_ints(format!("T{}", k + 1), 3 + (k * 7) % 5, (k * 3) % 4 - 1, 5, omega - 5)
        })
        .collect();
    complete_with_anchor(&prefix, format!("T{assets}"), int(3), int(0)).expect("prefix omegas are positive")
}

/// Attack vector with weights proportional to `1, 2, …, n`.
pub fn ramp_attack(assets: usize) -> AttackVector {
    let total = (assets * (assets + 1) / 2) as i64;
    AttackVector::new((1..=assets as i64).map(|k| stackgame_core::rational::ratio(k, total)).collect())
        .expect("weights sum to one")
}

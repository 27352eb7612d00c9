#![allow(dead_code)]

use proptest::prelude::*;
use stackgame_core::feasibility::complete_with_anchor;
use stackgame_core::rational::ratio;
use stackgame_core::{AssetParams, AttackVector, DefenseVector, GameInstance, Rational};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

pub fn unit_interval() -> impl Strategy<Value = Rational> {
    (0i64..=12).prop_map(|n| ratio(n, 12))
}

fn normalize(weights: &[u32]) -> Vec<Rational> {
    let total: u32 = weights.iter().sum();
    weights.iter().map(|&w| ratio(w as i64, total as i64)).collect()
}

/// Probability vectors of length `len` with small-denominator weights.
pub fn simplex_point(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(0u32..=9, len)
        .prop_filter("needs some mass", |w| w.iter().any(|&x| x > 0))
        .prop_map(|w| normalize(&w))
}

pub fn attack(len: usize) -> impl Strategy<Value = AttackVector> {
    simplex_point(len).prop_map(|v| AttackVector::new(v).unwrap())
}

pub fn defense(len: usize) -> impl Strategy<Value = DefenseVector> {
    simplex_point(len).prop_map(|v| DefenseVector::new(v).unwrap())
}

/// Any instance with nonzero prefix attacker omegas; usually infeasible.
pub fn any_instance() -> impl Strategy<Value = GameInstance> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec((rational(), rational(), rational(), rational()), n).prop_filter_map(
            "prefix omega must be nonzero",
            |rows| {
                let assets = rows
                    .into_iter()
                    .enumerate()
                    .map(|(i, (a, b, c, d))| AssetParams::new(format!("a{i}"), a, b, c, d))
                    .collect();
                GameInstance::new(assets).ok()
            },
        )
    })
}

/// Feasible instances: the non-anchor assets share one attacker reward and
/// have positive attacker omegas; the anchor comes from `solve_anchor`.
pub fn feasible_instance() -> impl Strategy<Value = GameInstance> {
    (1usize..=7, rational()).prop_flat_map(|(prefix_len, reward)| {
        (
            prop::collection::vec((positive_rational(), rational(), rational()), prefix_len),
            rational(),
            rational(),
        )
            .prop_map(move |(rows, anchor_rb, anchor_cb)| {
                let prefix: Vec<_> = rows
                    .into_iter()
                    .enumerate()
                    .map(|(i, (omega, rb, cb))| {
                        AssetParams::new(format!("a{i}"), rb, cb, reward.clone(), omega - &reward)
                    })
                    .collect();
                complete_with_anchor(&prefix, "anchor", anchor_rb, anchor_cb).unwrap()
            })
    })
}

/// A feasible instance paired with an attack of matching length.
pub fn feasible_with_attack() -> impl Strategy<Value = (GameInstance, AttackVector)> {
    feasible_instance().prop_flat_map(|g| {
        let n = g.len();
        (Just(g), attack(n))
    })
}

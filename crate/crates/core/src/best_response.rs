//! The attacker-indifference defense family and the attacker's best response.

use num::{One, Signed, Zero};

use crate::error::{GameError, Result};
use crate::feasibility::check_feasibility;
use crate::model::{DefenseVector, GameInstance};
use crate::rational::{self, Rational};

/// Defense vectors `D(d)` that leave the attacker indifferent between all
/// assets, parameterized by the anchor's protection probability `d`.
///
/// Each entry is affine in `d`: `D_n(d) = offset_n + slope_n · d` with
/// `offset_n = (R_R(n) − R_R(N)) / Ω_n^R` and `slope_n = Ω_N^R / Ω_n^R`.
/// The anchor entry is `d` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefenseFamily {
    offsets: Vec<Rational>,
    slopes: Vec<Rational>,
}

impl DefenseFamily {
    pub fn new(instance: &GameInstance) -> Self {
        let anchor = instance.anchor();
        let anchor_omega = anchor.omega_attacker();
        let mut offsets = Vec::with_capacity(instance.len());
        let mut slopes = Vec::with_capacity(instance.len());
        for asset in instance.prefix() {
            // Nonzero by GameInstance construction.
            let omega = asset.omega_attacker();
            offsets.push((&asset.reward_attacker - &anchor.reward_attacker) / &omega);
            slopes.push(&anchor_omega / &omega);
        }
        offsets.push(Rational::zero());
        slopes.push(Rational::one());
        Self { offsets, slopes }
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }

    pub fn slopes(&self) -> &[Rational] {
        &self.slopes
    }

    /// Raw entries at `d`, without any range checks.
    pub fn entries_at(&self, d: &Rational) -> Vec<Rational> {
        self.offsets.iter().zip(&self.slopes).map(|(o, s)| o + s * d).collect()
    }

    /// Intersection of `[0, 1]` with every `0 ≤ D_n(d) ≤ 1`.
    pub fn supported_interval(&self) -> Result<AnchorInterval> {
        let mut lo = Rational::zero();
        let mut hi = Rational::one();
        for (offset, slope) in self.offsets.iter().zip(&self.slopes) {
            if slope.is_zero() {
                if !rational::is_probability(offset) {
                    return Err(GameError::EmptyAnchorInterval);
                }
                continue;
            }
            // Values of d where D_n(d) hits 0 and 1.
            let at_zero = -offset / slope;
            let at_one = (Rational::one() - offset) / slope;
            let (lower, upper) = if slope.is_positive() { (at_zero, at_one) } else { (at_one, at_zero) };
            if lower > lo {
                lo = lower;
            }
            if upper < hi {
                hi = upper;
            }
        }
        if lo > hi {
            return Err(GameError::EmptyAnchorInterval);
        }
        Ok(AnchorInterval { lo, hi })
    }
}

/// Closed interval `[lo, hi] ⊆ [0, 1]` of admissible anchor probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl AnchorInterval {
    pub fn contains(&self, d: &Rational) -> bool {
        &self.lo <= d && d <= &self.hi
    }
}

pub fn feasible_anchor_interval(instance: &GameInstance) -> Result<AnchorInterval> {
    DefenseFamily::new(instance).supported_interval()
}

/// The family member with anchor probability `d`.
pub fn defense_family_at(instance: &GameInstance, d: &Rational) -> Result<DefenseVector> {
    if !check_feasibility(instance).feasible {
        return Err(GameError::Infeasible);
    }
    family_member(instance, d)
}

/// Family member for an instance already known to be feasible.
pub(crate) fn family_member(instance: &GameInstance, d: &Rational) -> Result<DefenseVector> {
    if !rational::is_probability(d) {
        return Err(GameError::AnchorOutOfRange(d.clone()));
    }
    let family = DefenseFamily::new(instance);
    let entries = family.entries_at(d);
    if !entries.iter().all(rational::is_probability) {
        let AnchorInterval { lo, hi } = family.supported_interval()?;
        return Err(GameError::OutsideAnchorInterval { d: Box::new(d.clone()), lo: Box::new(lo), hi: Box::new(hi) });
    }
    if !rational::sum(&entries).is_one() {
        return Err(GameError::InvariantViolation(format!("family at d = {d} does not sum to 1")));
    }
    Ok(DefenseVector::from_validated(entries))
}

/// All maximizing assets (ascending) and the maximal attack utility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestResponse {
    pub support: Vec<usize>,
    pub value: Rational,
}

pub fn attacker_best_response(instance: &GameInstance, defense: &DefenseVector) -> Result<BestResponse> {
    let utilities = instance.attack_utilities(defense)?;
    let value = utilities.iter().max().cloned().expect("instances have at least two assets");
    let support = utilities.iter().enumerate().filter(|(_, u)| **u == value).map(|(i, _)| i).collect();
    Ok(BestResponse { support, value })
}

/// `max_n u_n − min_n u_n`; zero exactly when the attacker is indifferent.
pub fn indifference_gap(instance: &GameInstance, defense: &DefenseVector) -> Result<Rational> {
    let utilities = instance.attack_utilities(defense)?;
    let max = utilities.iter().max().expect("nonempty");
    let min = utilities.iter().min().expect("nonempty");
    Ok(max - min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::AssetParams;
    use crate::rational::{int, ratio};

    fn tanks() -> GameInstance {
        GameInstance::eight_tank_example()
    }

    #[test]
    fn family_endpoints_and_midpoint() {
        let g = tanks();
        let zero = defense_family_at(&g, &int(0)).unwrap();
        let expected: Vec<_> = [3, 5, 6, 7, 12, 20, 42].iter().map(|&q| ratio(1, q)).chain([int(0)]).collect();
        assert_eq!(zero.entries(), expected.as_slice());
        assert_eq!(defense_family_at(&g, &int(1)).unwrap(), DefenseVector::vertex(8, 7).unwrap());
        let half = defense_family_at(&g, &ratio(1, 2)).unwrap();
        let expected: Vec<_> =
            [6, 10, 12, 14, 24, 40, 84].iter().map(|&q| ratio(1, q)).chain([ratio(1, 2)]).collect();
        assert_eq!(half.entries(), expected.as_slice());
    }

    #[test]
    fn family_rejects_bad_inputs() {
        let g = tanks();
        assert_eq!(defense_family_at(&g, &ratio(3, 2)), Err(GameError::AnchorOutOfRange(ratio(3, 2))));
        let mut assets = g.assets().to_vec();
        assets[7].cost_attacker = int(-4);
        let bad = GameInstance::new(assets).unwrap();
        assert_eq!(defense_family_at(&bad, &int(0)), Err(GameError::Infeasible));
    }

    #[test]
    fn interval_of_eight_tanks_is_unit() {
        let i = feasible_anchor_interval(&tanks()).unwrap();
        assert_eq!((i.lo, i.hi), (int(0), int(1)));
    }

    #[test]
    fn interval_binding_inside_unit() {
        // D_1(d) = 1 − 2d, so only d ≤ 1/2 is supported.
        let g = GameInstance::new(vec![
            AssetParams::from_ints("a", 0, 0, 5, -4),
            AssetParams::from_ints("b", 0, 0, 4, -6),
        ])
        .unwrap();
        let i = feasible_anchor_interval(&g).unwrap();
        assert_eq!((i.lo, i.hi), (int(0), ratio(1, 2)));
    }

    #[test]
    fn empty_interval() {
        // D_1(d) = 3 + d is never a probability.
        let g = GameInstance::new(vec![
            AssetParams::from_ints("a", 0, 0, 7, -6),
            AssetParams::from_ints("b", 0, 0, 4, -3),
        ])
        .unwrap();
        assert_eq!(feasible_anchor_interval(&g), Err(GameError::EmptyAnchorInterval));
    }

    #[test]
    fn best_response_on_family_is_full_tie() {
        let g = tanks();
        for d in [int(0), ratio(1, 2), int(1)] {
            let defense = defense_family_at(&g, &d).unwrap();
            let br = attacker_best_response(&g, &defense).unwrap();
            assert_eq!(br.support, (0..8).collect::<Vec<_>>());
            assert_eq!(br.value, int(4) + &d);
        }
    }

    #[test]
    fn best_response_off_family() {
        let g = tanks();
        let br = attacker_best_response(&g, &DefenseVector::vertex(8, 0).unwrap()).unwrap();
        assert_eq!(br.support, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(br.value, int(5));
        let br = attacker_best_response(&g, &DefenseVector::uniform(8).unwrap()).unwrap();
        assert_eq!(br.support, vec![0]);
        assert_eq!(br.value, ratio(37, 8));
    }

    #[test]
    fn gap_values() {
        let g = tanks();
        let d = defense_family_at(&g, &ratio(1, 3)).unwrap();
        assert_eq!(indifference_gap(&g, &d).unwrap(), int(0));
        assert_eq!(indifference_gap(&g, &DefenseVector::vertex(8, 0).unwrap()).unwrap(), int(3));
        let twins = GameInstance::new(vec![
            AssetParams::from_ints("a", 1, 2, 3, 4),
            AssetParams::from_ints("b", 1, 2, 3, 4),
        ])
        .unwrap();
        assert_eq!(indifference_gap(&twins, &DefenseVector::uniform(2).unwrap()).unwrap(), int(0));
    }
}

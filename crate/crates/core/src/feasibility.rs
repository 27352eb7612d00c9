//! Conditions on the anchor's attacker reward and cost that keep the
//! attacker-indifference family on the probability simplex.

use num::{One, Signed, Zero};

use crate::error::{GameError, Result};
use crate::model::{AssetParams, GameInstance};
use crate::rational::Rational;

/// Result of the interval check `lower ≤ C_R(anchor) ≤ upper` for one
/// non-anchor asset. For a negative omega the bounds are swapped so that
/// `lower ≤ upper` whenever the interval is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssetCheck {
    pub index: usize,
    pub omega_negative: bool,
    pub lower: Rational,
    pub upper: Rational,
    pub passed: bool,
}

impl AssetCheck {
    /// How far the anchor cost sits outside `[lower, upper]`; zero when it passes.
    pub fn violation(&self, anchor_cost: &Rational) -> Rational {
        if anchor_cost < &self.lower {
            &self.lower - anchor_cost
        } else if anchor_cost > &self.upper {
            anchor_cost - &self.upper
        } else {
            Rational::zero()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub per_asset_checks: Vec<AssetCheck>,
    /// `Σ_{n<N} (R_R(n) − R_R(N)) / Ω_n^R`; must equal 1.
    pub sum_condition_one: Rational,
    /// `Σ_{n<N} (R_R(n) + C_R(N)) / Ω_n^R`; must equal 0.
    pub sum_condition_two: Rational,
    pub feasible: bool,
}

impl FeasibilityReport {
    pub fn intervals_hold(&self) -> bool {
        self.per_asset_checks.iter().all(|c| c.passed)
    }

    pub fn sum_one_holds(&self) -> bool {
        self.sum_condition_one.is_one()
    }

    pub fn sum_two_holds(&self) -> bool {
        self.sum_condition_two.is_zero()
    }

    pub fn failed_assets(&self) -> impl Iterator<Item = &AssetCheck> {
        self.per_asset_checks.iter().filter(|c| !c.passed)
    }
}

pub fn check_feasibility(instance: &GameInstance) -> FeasibilityReport {
    let anchor = instance.anchor();
    let anchor_cost = &anchor.cost_attacker;
    let mut sum_one = Rational::zero();
    let mut sum_two = Rational::zero();
    let mut checks = Vec::with_capacity(instance.len() - 1);

    for (index, asset) in instance.prefix().iter().enumerate() {
        let omega = asset.omega_attacker();
        let floor = -&asset.reward_attacker;
        let ceiling = asset.cost_attacker.clone();
        // Ω ≥ 0: −R_R(n) ≤ C_R(N) ≤ C_R(n); Ω < 0 reverses both inequalities.
        let omega_negative = omega.is_negative();
        let (lower, upper) = if omega_negative { (ceiling, floor) } else { (floor, ceiling) };
        let passed = &lower <= anchor_cost && anchor_cost <= &upper;
        checks.push(AssetCheck { index, omega_negative, lower, upper, passed });

        sum_one += (&asset.reward_attacker - &anchor.reward_attacker) / &omega;
        sum_two += (&asset.reward_attacker + anchor_cost) / &omega;
    }

    let feasible = checks.iter().all(|c| c.passed) && sum_one.is_one() && sum_two.is_zero();
    FeasibilityReport { per_asset_checks: checks, sum_condition_one: sum_one, sum_condition_two: sum_two, feasible }
}

/// Solves the two sum conditions for the anchor's attacker `(reward, cost)`
/// given the non-anchor assets.
///
/// Only the equalities are enforced; the per-asset interval conditions still
/// need [`check_feasibility`] on the completed instance.
pub fn solve_anchor(prefix: &[AssetParams]) -> Result<(Rational, Rational)> {
    let mut reciprocal_sum = Rational::zero();
    let mut weighted_rewards = Rational::zero();
    for (index, asset) in prefix.iter().enumerate() {
        let omega = asset.omega_attacker();
        if omega.is_zero() {
            return Err(GameError::ZeroAttackerOmega { index, name: asset.name.clone() });
        }
        weighted_rewards += &asset.reward_attacker / &omega;
        reciprocal_sum += omega.recip();
    }
    if reciprocal_sum.is_zero() {
        return Err(GameError::SingularAnchorSystem);
    }
    let reward = (&weighted_rewards - Rational::one()) / &reciprocal_sum;
    let cost = -(weighted_rewards / reciprocal_sum);
    Ok((reward, cost))
}

/// Appends an anchor whose attacker parameters come from [`solve_anchor`].
pub fn complete_with_anchor(
    prefix: &[AssetParams],
    name: impl Into<String>,
    reward_defender: Rational,
    cost_defender: Rational,
) -> Result<GameInstance> {
    let (reward_attacker, cost_attacker) = solve_anchor(prefix)?;
    let mut assets = prefix.to_vec();
    assets.push(AssetParams::new(name, reward_defender, cost_defender, reward_attacker, cost_attacker));
    GameInstance::new(assets)
}

/// `Ω_N^R · Σ_{n<N} 1/Ω_n^R`, which is −1 on every feasible instance.
pub fn anchor_omega_identity(instance: &GameInstance) -> Rational {
    let reciprocal_sum =
        instance.prefix().iter().fold(Rational::zero(), |acc, a| acc + a.omega_attacker().recip());
    instance.anchor().omega_attacker() * reciprocal_sum
}

//! Backward induction for the defender: along the indifference family its
//! payoff is affine in the anchor probability `d`,
//! `Π_B(d) = (Δ₁ − Δ₃) + Δ₂·d`, so the sign of `Δ₂` decides the optimum.

use std::fmt;

use num::{Signed, Zero};

use crate::best_response::{family_member, feasible_anchor_interval, AnchorInterval};
use crate::error::{GameError, Result};
use crate::feasibility::check_feasibility;
use crate::model::{AttackVector, DefenseVector, GameInstance};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTriple {
    pub delta1: Rational,
    pub delta2: Rational,
    pub delta3: Rational,
}

impl DeltaTriple {
    /// Defender payoff on the family at anchor probability `d`.
    pub fn defender_payoff_at(&self, d: &Rational) -> Rational {
        &self.delta1 - &self.delta3 + &self.delta2 * d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Positive,
    Negative,
    Zero,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Positive => "positive",
            Regime::Negative => "negative",
            Regime::Zero => "zero",
        })
    }
}

pub fn compute_deltas(instance: &GameInstance, attack: &AttackVector) -> Result<DeltaTriple> {
    instance.check_len(attack.len())?;
    let anchor = instance.anchor();
    let anchor_omega = anchor.omega_attacker();
    let a = attack.entries();
    let last = instance.anchor_index();

    let mut delta1 = Rational::zero();
    let mut weighted = Rational::zero();
    for (n, asset) in instance.prefix().iter().enumerate() {
        let omega = asset.omega_attacker();
        let omega_b = asset.omega_defender();
        delta1 += (&asset.reward_attacker - &anchor.reward_attacker) / &omega * &omega_b * &a[n];
        weighted += omega_b / omega * &a[n];
    }
    // The anchor term Ω_N^R · (Ω_N^B / Ω_N^R) · A_N needs no division.
    let delta2 = anchor_omega * weighted + anchor.omega_defender() * &a[last];
    let delta3 = instance.assets().iter().zip(a).fold(Rational::zero(), |acc, (asset, an)| acc + &asset.cost_defender * an);
    Ok(DeltaTriple { delta1, delta2, delta3 })
}

pub fn classify_regime(deltas: &DeltaTriple) -> Regime {
    if deltas.delta2.is_positive() {
        Regime::Positive
    } else if deltas.delta2.is_negative() {
        Regime::Negative
    } else {
        Regime::Zero
    }
}

/// The defender's choice on the family for a given regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OptimalDefense {
    Unique { anchor_probability: Rational, defense: DefenseVector },
    /// Every family member is optimal. `representative` is the member at
    /// `interval.lo`, used wherever a concrete vector is needed.
    Indeterminate { interval: AnchorInterval, representative: DefenseVector },
}

impl OptimalDefense {
    pub fn defense(&self) -> &DefenseVector {
        match self {
            OptimalDefense::Unique { defense, .. } => defense,
            OptimalDefense::Indeterminate { representative, .. } => representative,
        }
    }

    pub fn anchor_probability(&self) -> &Rational {
        match self {
            OptimalDefense::Unique { anchor_probability, .. } => anchor_probability,
            OptimalDefense::Indeterminate { interval, .. } => &interval.lo,
        }
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, OptimalDefense::Indeterminate { .. })
    }
}

pub fn optimal_defense(instance: &GameInstance, regime: Regime) -> Result<OptimalDefense> {
    if !check_feasibility(instance).feasible {
        return Err(GameError::Infeasible);
    }
    optimal_for_feasible(instance, regime)
}

fn optimal_for_feasible(instance: &GameInstance, regime: Regime) -> Result<OptimalDefense> {
    let interval = feasible_anchor_interval(instance)?;
    Ok(match regime {
        Regime::Positive => {
            let defense = family_member(instance, &interval.hi)?;
            OptimalDefense::Unique { anchor_probability: interval.hi, defense }
        }
        Regime::Negative => {
            let defense = family_member(instance, &interval.lo)?;
            OptimalDefense::Unique { anchor_probability: interval.lo, defense }
        }
        Regime::Zero => {
            let representative = family_member(instance, &interval.lo)?;
            OptimalDefense::Indeterminate { interval, representative }
        }
    })
}

/// Per-asset multipliers of the defender payoff at the two ends of the
/// family: `high` at the top of the anchor interval (the positive regime)
/// and `low` at the bottom (the negative regime).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayoffCoefficients {
    pub high: Vec<Rational>,
    pub low: Vec<Rational>,
}

impl PayoffCoefficients {
    pub fn len(&self) -> usize {
        self.high.len()
    }

    pub fn is_empty(&self) -> bool {
        self.high.is_empty()
    }
}

pub fn defender_payoff_coefficients(instance: &GameInstance) -> Result<PayoffCoefficients> {
    if !check_feasibility(instance).feasible {
        return Err(GameError::Infeasible);
    }
    let interval = feasible_anchor_interval(instance)?;
    let coefficients = |defense: &DefenseVector| -> Vec<Rational> {
        instance
            .assets()
            .iter()
            .zip(defense.entries())
            .map(|(asset, d)| d * asset.omega_defender() - &asset.cost_defender)
            .collect()
    };
    Ok(PayoffCoefficients {
        high: coefficients(&family_member(instance, &interval.hi)?),
        low: coefficients(&family_member(instance, &interval.lo)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub deltas: DeltaTriple,
    pub regime: Regime,
    pub optimal_defense: OptimalDefense,
    pub defender_payoff: Rational,
    pub attacker_payoff: Rational,
}

/// Regime, optimal defense and both payoffs for an announced attack.
///
/// The defender payoff is computed from the delta decomposition and checked
/// against direct evaluation; a mismatch is reported as an invariant error.
pub fn solve(instance: &GameInstance, attack: &AttackVector) -> Result<SolveReport> {
    if !check_feasibility(instance).feasible {
        return Err(GameError::Infeasible);
    }
    let deltas = compute_deltas(instance, attack)?;
    let regime = classify_regime(&deltas);
    let optimal_defense = optimal_for_feasible(instance, regime)?;
    let defender_payoff = deltas.defender_payoff_at(optimal_defense.anchor_probability());
    let direct = instance.defender_payoff(optimal_defense.defense(), attack)?;
    if direct != defender_payoff {
        return Err(GameError::InvariantViolation(format!(
            "delta decomposition gives {defender_payoff}, direct evaluation gives {direct}"
        )));
    }
    let attacker_payoff = instance.attacker_payoff(optimal_defense.defense(), attack)?;
    Ok(SolveReport { deltas, regime, optimal_defense, defender_payoff, attacker_payoff })
}

/// Attacker payoff anywhere on the family: `R_R(N) − Ω_N^R · d`, whatever
/// the attack vector.
pub fn attacker_equilibrium_payoff(instance: &GameInstance, d: &Rational) -> Result<Rational> {
    if !check_feasibility(instance).feasible {
        return Err(GameError::Infeasible);
    }
    if !rational::is_probability(d) {
        return Err(GameError::AnchorOutOfRange(d.clone()));
    }
    let anchor = instance.anchor();
    Ok(&anchor.reward_attacker - anchor.omega_attacker() * d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::AssetParams;
    use crate::rational::{int, ratio};

    fn tanks() -> GameInstance {
        GameInstance::eight_tank_example()
    }

    fn e(k: usize) -> AttackVector {
        AttackVector::vertex(8, k - 1).unwrap()
    }

    fn triple(a: Rational, b: Rational, c: Rational) -> DeltaTriple {
        DeltaTriple { delta1: a, delta2: b, delta3: c }
    }

    #[test]
    fn deltas_at_vertices() {
        let g = tanks();
        assert_eq!(compute_deltas(&g, &e(8)).unwrap(), triple(int(0), int(3), int(0)));
        assert_eq!(compute_deltas(&g, &e(5)).unwrap(), triple(ratio(1, 3), ratio(-1, 3), int(-3)));
        assert_eq!(compute_deltas(&g, &e(1)).unwrap(), triple(ratio(10, 3), ratio(-10, 3), int(2)));
        // Seventh coefficient of Δ₂ is −9/42.
        assert_eq!(compute_deltas(&g, &e(7)).unwrap().delta2, ratio(-3, 14));
    }

    #[test]
    fn regimes() {
        assert_eq!(classify_regime(&triple(int(0), int(3), int(0))), Regime::Positive);
        assert_eq!(classify_regime(&triple(ratio(1, 3), ratio(-1, 3), int(-3))), Regime::Negative);
        assert_eq!(classify_regime(&triple(int(7), int(0), int(1))), Regime::Zero);
    }

    #[test]
    fn optimal_defense_per_regime() {
        let g = tanks();
        let pos = optimal_defense(&g, Regime::Positive).unwrap();
        assert_eq!(pos.defense(), &DefenseVector::vertex(8, 7).unwrap());
        let neg = optimal_defense(&g, Regime::Negative).unwrap();
        assert_eq!(neg.defense().entries()[0], ratio(1, 3));
        assert_eq!(neg.anchor_probability(), &int(0));
        match optimal_defense(&g, Regime::Zero).unwrap() {
            OptimalDefense::Indeterminate { interval, representative } => {
                assert_eq!((interval.lo, interval.hi), (int(0), int(1)));
                assert_eq!(&representative, neg.defense());
            }
            other => panic!("expected indeterminate, got {other:?}"),
        }
    }

    #[test]
    fn coefficient_vectors() {
        let c = defender_payoff_coefficients(&tanks()).unwrap();
        assert_eq!(c.high, [-2, 1, -4, -2, 3, -1, -3, 3].map(int));
        let low = vec![ratio(4, 3), int(2), ratio(-11, 6), int(-1), ratio(10, 3), ratio(-3, 4), ratio(-39, 14), int(0)];
        assert_eq!(c.low, low);
    }

    #[test]
    fn coefficients_vanish_without_defender_stakes() {
        let assets: Vec<_> = tanks()
            .assets()
            .iter()
            .map(|a| AssetParams::new(a.name.clone(), int(0), int(0), a.reward_attacker.clone(), a.cost_attacker.clone()))
            .collect();
        let c = defender_payoff_coefficients(&GameInstance::new(assets).unwrap()).unwrap();
        assert!(c.high.iter().chain(&c.low).all(|v| v.is_zero()));
    }

    #[test]
    fn solve_at_vertices() {
        let g = tanks();
        let r = solve(&g, &e(8)).unwrap();
        assert_eq!(r.regime, Regime::Positive);
        assert_eq!(r.optimal_defense.defense(), &DefenseVector::vertex(8, 7).unwrap());
        assert_eq!((r.defender_payoff, r.attacker_payoff), (int(3), int(5)));

        let r = solve(&g, &e(5)).unwrap();
        assert_eq!(r.regime, Regime::Negative);
        assert_eq!(r.optimal_defense.anchor_probability(), &int(0));
        assert_eq!((r.defender_payoff, r.attacker_payoff), (ratio(10, 3), int(4)));

        let r = solve(&g, &e(7)).unwrap();
        assert_eq!(r.regime, Regime::Negative);
        assert_eq!((r.defender_payoff, r.attacker_payoff), (ratio(-39, 14), int(4)));
    }

    #[test]
    fn solve_on_zero_regime_uses_low_end() {
        // A₅ = 9/10, A₈ = 1/10 puts Δ₂ exactly at zero.
        let g = tanks();
        let mut a = vec![int(0); 8];
        a[4] = ratio(9, 10);
        a[7] = ratio(1, 10);
        let r = solve(&g, &AttackVector::new(a).unwrap()).unwrap();
        assert_eq!(r.regime, Regime::Zero);
        assert!(r.optimal_defense.is_indeterminate());
        assert_eq!(r.defender_payoff, int(3));
        assert_eq!(r.attacker_payoff, int(4));
    }

    #[test]
    fn equilibrium_attacker_payoff() {
        let g = tanks();
        assert_eq!(attacker_equilibrium_payoff(&g, &int(1)).unwrap(), int(5));
        assert_eq!(attacker_equilibrium_payoff(&g, &int(0)).unwrap(), int(4));
        let half = ratio(1, 2);
        assert_eq!(attacker_equilibrium_payoff(&g, &half).unwrap(), ratio(9, 2));
        let defense = family_member(&g, &half).unwrap();
        for a in [e(1), e(4), AttackVector::uniform(8).unwrap()] {
            assert_eq!(g.attacker_payoff(&defense, &a).unwrap(), ratio(9, 2));
        }
        assert!(attacker_equilibrium_payoff(&g, &int(2)).is_err());
    }

    #[test]
    fn infeasible_instance_is_rejected() {
        let mut assets = tanks().assets().to_vec();
        assets[7].cost_attacker = int(-4);
        let bad = GameInstance::new(assets).unwrap();
        assert_eq!(solve(&bad, &e(1)), Err(GameError::Infeasible));
        assert_eq!(defender_payoff_coefficients(&bad), Err(GameError::Infeasible));
    }
}

//! Attacker-side analysis on the `Δ₂ = 0` hyperplane.
//!
//! Substituting `A_N = 1 − Σ_{n<N} A_n` into `Δ₂ = 0` leaves the constraint
//! `α · A_{1:N−1} = rhs` with `A ≥ 0` and `Σ A_{1:N−1} ≤ 1`. The attacker's
//! objective on that slice is the low-end defender coefficient vector
//! restricted to the non-anchor assets.

use num::{One, Signed, Zero};

use crate::error::{GameError, Result};
use crate::model::{AttackVector, GameInstance};
use crate::rational::{self, Rational};
use crate::solver::defender_payoff_coefficients;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneProblem {
    /// Constraint coefficients, one per non-anchor asset.
    pub alpha: Vec<Rational>,
    pub rhs: Rational,
    /// Objective coefficients, one per non-anchor asset.
    pub objective: Vec<Rational>,
}

impl HyperplaneProblem {
    /// Number of assets including the eliminated anchor.
    pub fn asset_count(&self) -> usize {
        self.alpha.len() + 1
    }

    /// Objective value of a full attack vector; the anchor entry is ignored.
    pub fn objective_value(&self, attack: &AttackVector) -> Rational {
        rational::dot(&self.objective, &attack.entries()[..self.alpha.len()])
    }

    /// Whether `attack` satisfies `α · A_{1:N−1} = rhs`.
    pub fn contains(&self, attack: &AttackVector) -> bool {
        attack.len() == self.asset_count() && rational::dot(&self.alpha, attack.entries()) == self.rhs
    }
}

pub fn build_hyperplane_problem(instance: &GameInstance) -> Result<HyperplaneProblem> {
    let coefficients = defender_payoff_coefficients(instance)?;
    let anchor_ratio = instance.anchor().omega_defender() / instance.anchor().omega_attacker();
    let alpha = instance
        .prefix()
        .iter()
        .map(|a| a.omega_defender() / a.omega_attacker() - &anchor_ratio)
        .collect();
    let mut objective = coefficients.low;
    objective.pop();
    Ok(HyperplaneProblem { alpha, rhs: -anchor_ratio, objective })
}

/// Payoff ratios `r_i = rhs · c_i / α_i` and the indices whose single-index
/// weighting `A_i = rhs / α_i` is a valid probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioTable {
    /// `None` where `α_i = 0`.
    pub ratios: Vec<Option<Rational>>,
    pub feasible_indices: Vec<usize>,
}

impl RatioTable {
    fn feasible_ratios(&self) -> impl Iterator<Item = &Rational> {
        self.feasible_indices.iter().filter_map(|&i| self.ratios[i].as_ref())
    }

    pub fn min_feasible(&self) -> Option<&Rational> {
        self.feasible_ratios().min()
    }

    pub fn max_feasible(&self) -> Option<&Rational> {
        self.feasible_ratios().max()
    }
}

pub fn payoff_ratios(problem: &HyperplaneProblem) -> Result<RatioTable> {
    if problem.alpha.iter().all(Zero::is_zero) {
        return Err(GameError::DegenerateHyperplane);
    }
    let mut ratios = Vec::with_capacity(problem.alpha.len());
    let mut feasible_indices = Vec::new();
    for (i, (alpha, c)) in problem.alpha.iter().zip(&problem.objective).enumerate() {
        if alpha.is_zero() {
            ratios.push(None);
            continue;
        }
        ratios.push(Some(&problem.rhs * c / alpha));
        if rational::is_probability(&(&problem.rhs / alpha)) {
            feasible_indices.push(i);
        }
    }
    Ok(RatioTable { ratios, feasible_indices })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstrainedExtrema {
    pub min_value: Rational,
    pub min_attack: AttackVector,
    pub max_value: Rational,
    pub max_attack: AttackVector,
}

/// Exact minimum and maximum of the objective over the hyperplane slice.
///
/// The slice is a polytope whose vertices lie on edges of the reduced simplex
/// `{x ≥ 0, Σx ≤ 1}`: single-index points `x_k = rhs/α_k` (the slack goes to
/// the anchor), two-index points on the face `Σx = 1`, and simplex vertices
/// that already sit on the hyperplane. Candidates are scanned in that order
/// and ties keep the first one found.
pub fn constrained_extrema(problem: &HyperplaneProblem) -> Result<ConstrainedExtrema> {
    let m = problem.alpha.len();
    let alpha = &problem.alpha;
    let rhs = &problem.rhs;
    let mut candidates: Vec<Vec<Rational>> = Vec::new();
    let point = |entries: &[(usize, Rational)]| {
        let mut x = vec![Rational::zero(); m];
        for (i, v) in entries {
            x[*i] = v.clone();
        }
        x
    };

    for k in 0..m {
        if alpha[k].is_zero() {
            continue;
        }
        let t = rhs / &alpha[k];
        if rational::is_probability(&t) {
            candidates.push(point(&[(k, t)]));
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let spread = &alpha[i] - &alpha[j];
            if spread.is_zero() {
                continue;
            }
            let xi = (rhs - &alpha[j]) / spread;
            if xi.is_positive() && xi < Rational::one() {
                let xj = Rational::one() - &xi;
                candidates.push(point(&[(i, xi), (j, xj)]));
            }
        }
    }
    if rhs.is_zero() {
        candidates.push(point(&[]));
    }
    for k in 0..m {
        if &alpha[k] == rhs {
            candidates.push(point(&[(k, Rational::one())]));
        }
    }

    let mut best: Option<(Rational, usize, Rational, usize)> = None;
    for (idx, x) in candidates.iter().enumerate() {
        let value = rational::dot(&problem.objective, x);
        best = Some(match best {
            None => (value.clone(), idx, value, idx),
            Some((lo, lo_idx, hi, hi_idx)) => {
                let (lo, lo_idx) = if value < lo { (value.clone(), idx) } else { (lo, lo_idx) };
                let (hi, hi_idx) = if value > hi { (value, idx) } else { (hi, hi_idx) };
                (lo, lo_idx, hi, hi_idx)
            }
        });
    }
    let (min_value, min_idx, max_value, max_idx) = best.ok_or(GameError::EmptyIntersection)?;
    let lift = |x: &[Rational]| {
        let mut full = x.to_vec();
        full.push(Rational::one() - rational::sum(x));
        AttackVector::new(full)
    };
    Ok(ConstrainedExtrema {
        min_attack: lift(&candidates[min_idx])?,
        min_value,
        max_attack: lift(&candidates[max_idx])?,
        max_value,
    })
}

/// Whether the attacker can push the objective strictly above `threshold`.
pub fn exceeds_threshold(problem: &HyperplaneProblem, threshold: &Rational) -> Result<bool> {
    Ok(&constrained_extrema(problem)?.max_value > threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::AssetParams;
    use crate::rational::{int, ratio};
    use crate::solver::compute_deltas;

    fn problem() -> HyperplaneProblem {
        build_hyperplane_problem(&GameInstance::eight_tank_example()).unwrap()
    }

    #[test]
    fn hyperplane_of_eight_tanks() {
        let p = problem();
        let alpha = vec![ratio(19, 3), int(4), ratio(31, 6), int(4), ratio(10, 3), ratio(13, 4), ratio(45, 14)];
        assert_eq!(p.alpha, alpha);
        assert_eq!(p.rhs, int(3));
        let c = vec![ratio(4, 3), int(2), ratio(-11, 6), int(-1), ratio(10, 3), ratio(-3, 4), ratio(-39, 14)];
        assert_eq!(p.objective, c);
    }

    #[test]
    fn proportional_omegas_give_zero_alpha() {
        // Ω^B_n / Ω^R_n = 2 everywhere.
        let g = GameInstance::new(vec![
            AssetParams::from_ints("a", 1, 1, 2, -1),
            AssetParams::from_ints("b", -1, -1, 1, -2),
        ])
        .unwrap();
        let p = build_hyperplane_problem(&g).unwrap();
        assert_eq!(p.alpha, vec![int(0)]);
        assert_eq!(payoff_ratios(&p), Err(GameError::DegenerateHyperplane));
    }

    #[test]
    fn ratio_table() {
        let t = payoff_ratios(&problem()).unwrap();
        let r: Vec<_> = t.ratios.iter().map(|r| r.clone().unwrap()).collect();
        let expected =
            vec![ratio(12, 19), ratio(3, 2), ratio(-33, 31), ratio(-3, 4), int(3), ratio(-9, 13), ratio(-13, 5)];
        assert_eq!(r, expected);
        assert_eq!(t.feasible_indices, (0..7).collect::<Vec<_>>());
        assert_eq!(t.min_feasible(), Some(&ratio(-13, 5)));
        assert_eq!(t.max_feasible(), Some(&int(3)));
    }

    #[test]
    fn ratios_collapse_when_objective_equals_alpha() {
        let mut p = problem();
        p.objective = p.alpha.clone();
        let t = payoff_ratios(&p).unwrap();
        assert!(t.ratios.iter().all(|r| r.as_ref() == Some(&int(3))));
    }

    #[test]
    fn extrema_of_eight_tanks() {
        let p = problem();
        let ex = constrained_extrema(&p).unwrap();
        assert_eq!(ex.min_value, ratio(-13, 5));
        assert_eq!(ex.min_attack.support(), vec![6, 7]);
        assert_eq!(ex.min_attack.entries()[6], ratio(14, 15));
        assert_eq!(ex.min_attack.entries()[7], ratio(1, 15));
        assert_eq!(ex.max_value, int(3));
        assert_eq!(ex.max_attack.support(), vec![4, 7]);
        assert_eq!(ex.max_attack.entries()[4], ratio(9, 10));
        assert_eq!(ex.max_attack.entries()[7], ratio(1, 10));
        let g = GameInstance::eight_tank_example();
        for a in [&ex.min_attack, &ex.max_attack] {
            assert!(p.contains(a));
            assert!(compute_deltas(&g, a).unwrap().delta2.is_zero());
        }
    }

    #[test]
    fn zero_objective() {
        let mut p = problem();
        p.objective = vec![int(0); 7];
        let ex = constrained_extrema(&p).unwrap();
        assert_eq!((ex.min_value, ex.max_value), (int(0), int(0)));
    }

    #[test]
    fn thresholds() {
        let p = problem();
        assert!(!exceeds_threshold(&p, &int(5)).unwrap());
        assert!(exceeds_threshold(&p, &int(2)).unwrap());
        assert!(!exceeds_threshold(&p, &int(3)).unwrap());
    }

    #[test]
    fn two_index_vertices_when_single_weights_overshoot() {
        // rhs/α₁ = 2 is not a probability, so the optimum needs A_N = 0.
        let p = HyperplaneProblem { alpha: vec![int(1), int(4)], rhs: int(2), objective: vec![int(1), int(0)] };
        let ex = constrained_extrema(&p).unwrap();
        // Candidates: x₂ = 1/2 (value 0) and x = (2/3, 1/3) (value 2/3).
        assert_eq!(ex.min_value, int(0));
        assert_eq!(ex.max_value, ratio(2, 3));
        assert_eq!(ex.max_attack.entries(), &[ratio(2, 3), ratio(1, 3), int(0)]);
    }

    #[test]
    fn zero_rhs_face() {
        let p = HyperplaneProblem { alpha: vec![int(2), int(0)], rhs: int(0), objective: vec![int(5), int(-1)] };
        let ex = constrained_extrema(&p).unwrap();
        // A₁ must vanish; A₂ ranges over [0, 1].
        assert_eq!(ex.min_value, int(-1));
        assert_eq!(ex.max_value, int(0));
        assert_eq!(ex.min_attack.entries(), &[int(0), int(1), int(0)]);
    }

    #[test]
    fn missed_simplex() {
        let p = HyperplaneProblem { alpha: vec![int(1), int(1)], rhs: int(5), objective: vec![int(1), int(1)] };
        assert_eq!(constrained_extrema(&p), Err(GameError::EmptyIntersection));
    }
}

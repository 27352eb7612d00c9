//! Brute-force reference oracles for cross-checking the analytic results on
//! small instances. They deliberately avoid the closed forms used by the
//! solver modules.

use num::{One, Signed, Zero};

use crate::error::{GameError, Result};
use crate::feasibility::check_feasibility;
use crate::model::{AttackVector, DefenseVector, GameInstance};
use crate::rational::{self, ratio, Rational};
use crate::solver::compute_deltas;

pub const DEFAULT_GRID_CAP: u128 = 10_000_000;

/// Number of compositions of `resolution` into `dimension` nonnegative parts,
/// `C(resolution + dimension − 1, dimension − 1)`, saturating at `u128::MAX`.
pub fn composition_count(dimension: usize, resolution: usize) -> u128 {
    let n = (resolution + dimension - 1) as u128;
    let k = (dimension - 1).min(resolution) as u128;
    let mut count: u128 = 1;
    for i in 0..k {
        // count · (n − i) / (i + 1) stays integral at every step.
        count = match count.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    count
}

/// Lexicographic enumeration of the grid `{x ∈ Δ^{dimension−1} : k·x ∈ ℕ^dimension}`.
#[derive(Debug, Clone)]
pub struct SimplexGrid {
    parts: Vec<usize>,
    resolution: usize,
    done: bool,
}

impl SimplexGrid {
    pub fn new(dimension: usize, resolution: usize) -> Result<Self> {
        Self::with_cap(dimension, resolution, DEFAULT_GRID_CAP)
    }

    pub fn with_cap(dimension: usize, resolution: usize, cap: u128) -> Result<Self> {
        if dimension == 0 || resolution == 0 {
            return Err(GameError::InvalidProbability("grid needs dimension ≥ 1 and resolution ≥ 1".into()));
        }
        let count = composition_count(dimension, resolution);
        if count > cap {
            return Err(GameError::GridTooLarge { count, cap });
        }
        let mut parts = vec![0; dimension];
        parts[dimension - 1] = resolution;
        Ok(Self { parts, resolution, done: false })
    }

    fn advance(&mut self) {
        let last = self.parts.len() - 1;
        let mut tail = self.parts[last];
        // Rightmost position with mass to its right gets one more unit; the
        // remaining tail collapses into the last slot.
        for i in (0..last).rev() {
            if tail > 0 {
                self.parts[i] += 1;
                for p in &mut self.parts[i + 1..] {
                    *p = 0;
                }
                self.parts[last] = tail - 1;
                return;
            }
            tail += self.parts[i];
        }
        self.done = true;
    }
}

impl Iterator for SimplexGrid {
    type Item = Vec<Rational>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let k = self.resolution as i64;
        let point = self.parts.iter().map(|&p| ratio(p as i64, k)).collect();
        self.advance();
        Some(point)
    }
}

pub fn enumerate_simplex_grid(dimension: usize, resolution: usize) -> Result<SimplexGrid> {
    SimplexGrid::new(dimension, resolution)
}

/// Best attacker value over the pure attacks and every maximizing vertex.
pub fn brute_force_attacker(instance: &GameInstance, defense: &DefenseVector) -> Result<(Rational, Vec<usize>)> {
    let mut best: Option<Rational> = None;
    let mut witnesses = Vec::new();
    for n in 0..instance.len() {
        let value = instance.attacker_payoff(defense, &AttackVector::vertex(instance.len(), n)?)?;
        match &best {
            Some(b) if &value < b => {}
            Some(b) if &value == b => witnesses.push(n),
            _ => {
                best = Some(value);
                witnesses = vec![n];
            }
        }
    }
    Ok((best.expect("at least two assets"), witnesses))
}

/// Family member at `d` from the unsimplified indifference condition
/// `u_n = u_N`, i.e. `D_n = (R_R(n) − [(1 − d)·R_R(N) − d·C_R(N)]) / Ω_n^R`.
fn indifferent_defense(instance: &GameInstance, d: &Rational) -> Vec<Rational> {
    let anchor = instance.anchor();
    let anchor_utility = (Rational::one() - d) * &anchor.reward_attacker - d * &anchor.cost_attacker;
    let mut entries: Vec<Rational> = instance
        .prefix()
        .iter()
        .map(|a| (&a.reward_attacker - &anchor_utility) / (&a.reward_attacker + &a.cost_attacker))
        .collect();
    entries.push(d.clone());
    entries
}

/// Scans `d ∈ {0, 1/k, …, 1}` and keeps the first grid point with the
/// highest defender payoff against `attack`.
pub fn brute_force_defender_on_family(
    instance: &GameInstance,
    attack: &AttackVector,
    resolution: usize,
) -> Result<(Rational, Rational)> {
    if !check_feasibility(instance).feasible {
        return Err(GameError::Infeasible);
    }
    if resolution == 0 {
        return Err(GameError::InvalidProbability("resolution must be positive".into()));
    }
    let mut best: Option<(Rational, Rational)> = None;
    for i in 0..=resolution {
        let d = ratio(i as i64, resolution as i64);
        let Ok(defense) = DefenseVector::new(indifferent_defense(instance, &d)) else {
            continue;
        };
        let value = instance.defender_payoff(&defense, attack)?;
        if best.as_ref().is_none_or(|(_, b)| &value > b) {
            best = Some((d, value));
        }
    }
    best.ok_or(GameError::EmptyAnchorInterval)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstrainedBruteForce {
    pub min_value: Rational,
    pub min_witness: AttackVector,
    pub max_value: Rational,
    pub max_witness: AttackVector,
    /// Every vertex of the slice, in enumeration order.
    pub vertices: Vec<AttackVector>,
}

/// Enumerates the vertices of `{A ∈ simplex : Δ₂(A) = 0}` over all index
/// pairs and evaluates `Δ₁ − Δ₃` without the anchor term at each.
///
/// Ties on the extreme value go to the lexicographically smallest witness.
pub fn brute_force_constrained_attacker(instance: &GameInstance) -> Result<ConstrainedBruteForce> {
    if !check_feasibility(instance).feasible {
        return Err(GameError::Infeasible);
    }
    let n = instance.len();
    let mut slope = Vec::with_capacity(n);
    let mut objective = Vec::with_capacity(n);
    for k in 0..n {
        let deltas = compute_deltas(instance, &AttackVector::vertex(n, k)?)?;
        slope.push(deltas.delta2);
        objective.push(if k == instance.anchor_index() { Rational::zero() } else { deltas.delta1 - deltas.delta3 });
    }

    let mut vertices = Vec::new();
    for i in 0..n {
        if slope[i].is_zero() {
            vertices.push(AttackVector::vertex(n, i)?);
        }
        for j in (i + 1)..n {
            if slope[i].is_zero() || slope[j].is_zero() || slope[i].signum() == slope[j].signum() {
                continue;
            }
            // t·δ_i + (1 − t)·δ_j = 0
            let t = &slope[j] / (&slope[j] - &slope[i]);
            let mut entries = vec![Rational::zero(); n];
            entries[j] = Rational::one() - &t;
            entries[i] = t;
            vertices.push(AttackVector::new(entries)?);
        }
    }
    if vertices.is_empty() {
        return Err(GameError::EmptyIntersection);
    }

    let value = |a: &AttackVector| rational::dot(&objective, a.entries());
    let pick = |better: fn(&Rational, &Rational) -> bool| {
        let mut best: Option<(Rational, &AttackVector)> = None;
        for v in &vertices {
            let val = value(v);
            let replace = match &best {
                None => true,
                Some((b, w)) => better(&val, b) || (&val == b && v.entries() < w.entries()),
            };
            if replace {
                best = Some((val, v));
            }
        }
        best.map(|(v, w)| (v, w.clone())).expect("nonempty")
    };
    let (min_value, min_witness) = pick(|a, b| a < b);
    let (max_value, max_witness) = pick(|a, b| a > b);
    Ok(ConstrainedBruteForce { min_value, min_witness, max_value, max_witness, vertices })
}

//! Domain types and the expected-payoff functionals of both teams.
//!
//! Indices are zero-based throughout the library; the CLI translates to the
//! one-based asset numbering used in reports.

use std::fmt;

use num::{One, Zero};

use crate::error::{GameError, Result};
use crate::rational::{self, int, Rational};

/// Rewards and costs of a single asset for the defender and the attacker.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AssetParams {
    pub name: String,
    pub reward_defender: Rational,
    pub cost_defender: Rational,
    pub reward_attacker: Rational,
    pub cost_attacker: Rational,
}

impl AssetParams {
    pub fn new(
        name: impl Into<String>,
        reward_defender: Rational,
        cost_defender: Rational,
        reward_attacker: Rational,
        cost_attacker: Rational,
    ) -> Self {
        Self { name: name.into(), reward_defender, cost_defender, reward_attacker, cost_attacker }
    }

    /// Integer-valued shorthand, mostly for fixtures and tests.
    pub fn from_ints(name: impl Into<String>, rb: i64, cb: i64, rr: i64, cr: i64) -> Self {
        Self::new(name, int(rb), int(cb), int(rr), int(cr))
    }

    /// Attacker reward plus attacker cost.
    pub fn omega_attacker(&self) -> Rational {
        &self.reward_attacker + &self.cost_attacker
    }

    /// Defender reward plus defender cost.
    pub fn omega_defender(&self) -> Rational {
        &self.reward_defender + &self.cost_defender
    }
}

/// An ordered list of assets whose last element is the anchor.
///
/// Construction rejects fewer than two assets and any non-anchor asset whose
/// attacker omega is zero, since those omegas divide the defense family. The
/// anchor's own omega may be zero; such instances are always infeasible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameInstance {
    assets: Vec<AssetParams>,
}

impl GameInstance {
    pub fn new(assets: Vec<AssetParams>) -> Result<Self> {
        if assets.len() < 2 {
            return Err(GameError::TooFewAssets(assets.len()));
        }
        let anchor = assets.len() - 1;
        if let Some((index, asset)) =
            assets[..anchor].iter().enumerate().find(|(_, a)| a.omega_attacker().is_zero())
        {
            return Err(GameError::ZeroAttackerOmega { index, name: asset.name.clone() });
        }
        Ok(Self { assets })
    }

    /// The eight-tank instance used as the canonical golden fixture.
    pub fn eight_tank_example() -> Self {
        let rows: [(i64, i64, i64, i64); 8] = [
            (8, 2, 5, -2),
            (6, -1, 5, 0),
            (9, 4, 5, 1),
            (5, 2, 5, 2),
            (7, -3, 5, 7),
            (4, 1, 5, 15),
            (6, 3, 5, 37),
            (3, 0, 4, -5),
        ];
        let assets = rows
            .iter()
            .enumerate()
            .map(|(i, &(rb, cb, rr, cr))| AssetParams::from_ints(format!("T{}", i + 1), rb, cb, rr, cr))
            .collect();
        Self::new(assets).expect("fixture is well formed")
    }

    /// Moves the asset at `index` to the anchor position, keeping the relative
    /// order of the others.
    pub fn with_anchor(&self, index: usize) -> Result<Self> {
        self.check_index(index)?;
        let mut assets = self.assets.clone();
        let chosen = assets.remove(index);
        assets.push(chosen);
        Self::new(assets)
    }

    pub fn len(&self) -> usize {
        self.assets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assets.is_empty()
    }

    pub fn assets(&self) -> &[AssetParams] {
        &self.assets
    }

    /// All assets except the anchor.
    pub fn prefix(&self) -> &[AssetParams] {
        &self.assets[..self.anchor_index()]
    }

    pub fn anchor_index(&self) -> usize {
        self.assets.len() - 1
    }

    pub fn anchor(&self) -> &AssetParams {
        &self.assets[self.anchor_index()]
    }

    pub fn asset(&self, index: usize) -> Result<&AssetParams> {
        self.check_index(index)?;
        Ok(&self.assets[index])
    }

    pub fn omega_attacker(&self, index: usize) -> Result<Rational> {
        Ok(self.asset(index)?.omega_attacker())
    }

    pub fn omega_defender(&self, index: usize) -> Result<Rational> {
        Ok(self.asset(index)?.omega_defender())
    }

    /// `Σ_n A_n (D_n R_B(n) − (1 − D_n) C_B(n))`.
    pub fn defender_payoff(&self, defense: &DefenseVector, attack: &AttackVector) -> Result<Rational> {
        self.check_len(defense.len())?;
        self.check_len(attack.len())?;
        let total = self.assets.iter().zip(defense.entries()).zip(attack.entries()).fold(
            Rational::zero(),
            |acc, ((asset, d), a)| {
                let protected = d * &asset.reward_defender;
                let exposed = (Rational::one() - d) * &asset.cost_defender;
                acc + a * (protected - exposed)
            },
        );
        Ok(total)
    }

    /// `Σ_n A_n u_n` with `u_n` from [`attack_utility`](Self::attack_utility).
    pub fn attacker_payoff(&self, defense: &DefenseVector, attack: &AttackVector) -> Result<Rational> {
        self.check_len(defense.len())?;
        self.check_len(attack.len())?;
        let total = self.assets.iter().zip(defense.entries()).zip(attack.entries()).fold(
            Rational::zero(),
            |acc, ((asset, d), a)| acc + a * utility(asset, d),
        );
        Ok(total)
    }

    /// The attacker's value for hitting asset `index` under `defense`:
    /// `(1 − D_n) R_R(n) − D_n C_R(n)`.
    pub fn attack_utility(&self, defense: &DefenseVector, index: usize) -> Result<Rational> {
        self.check_len(defense.len())?;
        let asset = self.asset(index)?;
        Ok(utility(asset, &defense.entries()[index]))
    }

    /// Per-asset attack utilities for every asset.
    pub fn attack_utilities(&self, defense: &DefenseVector) -> Result<Vec<Rational>> {
        self.check_len(defense.len())?;
        Ok(self.assets.iter().zip(defense.entries()).map(|(a, d)| utility(a, d)).collect())
    }

    pub fn payoffs(&self, defense: &DefenseVector, attack: &AttackVector) -> Result<PayoffPair> {
        Ok(PayoffPair {
            defender: self.defender_payoff(defense, attack)?,
            attacker: self.attacker_payoff(defense, attack)?,
        })
    }

    pub(crate) fn check_len(&self, found: usize) -> Result<()> {
        if found != self.len() {
            return Err(GameError::LengthMismatch { expected: self.len(), found });
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.len() {
            return Err(GameError::IndexOutOfRange { index, len: self.len() });
        }
        Ok(())
    }
}

fn utility(asset: &AssetParams, d: &Rational) -> Rational {
    (Rational::one() - d) * &asset.reward_attacker - d * &asset.cost_attacker
}

/// Expected payoffs of both teams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayoffPair {
    pub defender: Rational,
    pub attacker: Rational,
}

fn validate_probabilities(entries: &[Rational]) -> Result<()> {
    if entries.is_empty() {
        return Err(GameError::InvalidProbability("empty vector".into()));
    }
    if let Some((i, v)) = entries.iter().enumerate().find(|(_, v)| !rational::is_probability(v)) {
        return Err(GameError::InvalidProbability(format!("entry {i} = {v} lies outside [0, 1]")));
    }
    let total = rational::sum(entries);
    if !total.is_one() {
        return Err(GameError::InvalidProbability(format!("entries sum to {total}, not 1")));
    }
    Ok(())
}

macro_rules! probability_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash)]
        pub struct $name(Vec<Rational>);

        impl $name {
            /// Validates that every entry is in `[0, 1]` and the entries sum to 1.
            pub fn new(entries: Vec<Rational>) -> Result<Self> {
                validate_probabilities(&entries)?;
                Ok(Self(entries))
            }

            /// The unit vector with all mass on `index`.
            pub fn vertex(len: usize, index: usize) -> Result<Self> {
                if index >= len {
                    return Err(GameError::IndexOutOfRange { index, len });
                }
                let mut entries = vec![Rational::zero(); len];
                entries[index] = Rational::one();
                Ok(Self(entries))
            }

            pub fn uniform(len: usize) -> Result<Self> {
                if len == 0 {
                    return Err(GameError::InvalidProbability("empty vector".into()));
                }
                Ok(Self(vec![rational::ratio(1, len as i64); len]))
            }

            /// `λ·self + (1 − λ)·other`, for `λ ∈ [0, 1]`.
            pub fn mix(&self, other: &Self, lambda: &Rational) -> Result<Self> {
                if self.len() != other.len() {
                    return Err(GameError::LengthMismatch { expected: self.len(), found: other.len() });
                }
                if !rational::is_probability(lambda) {
                    return Err(GameError::InvalidProbability(format!("mixing weight {lambda}")));
                }
                let rest = Rational::one() - lambda;
                Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| lambda * a + &rest * b).collect()))
            }

            pub fn entries(&self) -> &[Rational] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Indices with nonzero mass.
            pub fn support(&self) -> Vec<usize> {
                self.0.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| i).collect()
            }

            pub fn into_inner(self) -> Vec<Rational> {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, v) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    };
}

probability_vector!(
    /// Marginal protection probabilities over the assets.
    DefenseVector
);
probability_vector!(
    /// Attack probabilities over the assets.
    AttackVector
);

impl DefenseVector {
    /// Entries must already be known to lie on the simplex.
    pub(crate) fn from_validated(entries: Vec<Rational>) -> Self {
        debug_assert!(validate_probabilities(&entries).is_ok());
        Self(entries)
    }
}

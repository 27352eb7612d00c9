//! Exact solver for the analytical Stackelberg attacker-defender
//! resource-allocation game.
//!
//! A defender (the leader) protects `N` assets and commits to a marginal
//! protection vector; an attacker (the follower) picks a probability vector
//! over the same assets. Every quantity the solver produces is a rational
//! function of the per-asset rewards and costs, so all arithmetic is done in
//! arbitrary-precision rationals and results compare bit-exactly.
//!
//! The last asset of a [`GameInstance`] is the anchor: its protection
//! probability `d` parameterizes the attacker-indifference defense family.
//!
//! ```
//! use stackgame_core::{solve, AttackVector, GameInstance, Regime};
//!
//! let game = GameInstance::eight_tank_example();
//! let attack = AttackVector::vertex(8, 7).unwrap();
//! let report = solve(&game, &attack).unwrap();
//! assert_eq!(report.regime, Regime::Positive);
//! assert_eq!(report.defender_payoff.to_string(), "3");
//! assert_eq!(report.attacker_payoff.to_string(), "5");
//! ```

pub mod allocation;
pub mod attacker;
pub mod best_response;
mod error;
pub mod feasibility;
pub mod model;
pub mod oracles;
pub mod rational;
pub mod region;
pub mod solver;

pub use allocation::{uniform_allocation, validate_allocation, AllocationMatrix, AllocationVerdict};
pub use attacker::{
    build_hyperplane_problem, constrained_extrema, exceeds_threshold, payoff_ratios,
    ConstrainedExtrema, HyperplaneProblem, RatioTable,
};
pub use best_response::{
    attacker_best_response, defense_family_at, feasible_anchor_interval, indifference_gap,
    AnchorInterval, BestResponse, DefenseFamily,
};
pub use error::{GameError, Result};
pub use feasibility::{anchor_omega_identity, check_feasibility, solve_anchor, FeasibilityReport};
pub use model::{AssetParams, AttackVector, DefenseVector, GameInstance, PayoffPair};
pub use rational::Rational;
pub use region::{
    convex_hull_2d, hull_boundary_contains, pareto_frontier, point_for_attack, vertex_images, PayoffRegion, PlanarPoint,
    PointLabel,
};
pub use solver::{
    attacker_equilibrium_payoff, classify_regime, compute_deltas, defender_payoff_coefficients,
    optimal_defense, solve, DeltaTriple, OptimalDefense, PayoffCoefficients, Regime, SolveReport,
};

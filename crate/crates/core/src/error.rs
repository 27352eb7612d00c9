use crate::rational::Rational;

pub type Result<T, E = GameError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("a game needs at least 2 assets, got {0}")]
    TooFewAssets(usize),
    #[error("asset {index} ({name}) has zero attacker reward+cost; it cannot be a non-anchor asset")]
    ZeroAttackerOmega { index: usize, name: String },
    #[error("asset index {index} out of range for {len} assets")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("vector length {found} does not match asset count {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),
    #[error("anchor probability {0} lies outside [0, 1]")]
    AnchorOutOfRange(Rational),
    #[error("anchor probability {d} lies outside the supported interval [{lo}, {hi}]")]
    OutsideAnchorInterval { d: Box<Rational>, lo: Box<Rational>, hi: Box<Rational> },
    #[error("instance violates the anchor feasibility conditions")]
    Infeasible,
    #[error("anchor system is singular: the reciprocal attacker omegas sum to zero")]
    SingularAnchorSystem,
    #[error("no anchor probability in [0, 1] keeps every defense entry inside [0, 1]")]
    EmptyAnchorInterval,
    #[error("hyperplane is degenerate: every constraint coefficient is zero")]
    DegenerateHyperplane,
    #[error("the zero-slope hyperplane does not intersect the attack simplex")]
    EmptyIntersection,
    #[error("resource count must be at least 1")]
    ZeroResources,
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("grid would emit {count} vectors, above the cap of {cap}")]
    GridTooLarge { count: u128, cap: u128 },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

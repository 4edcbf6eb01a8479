use thiserror::Error;

/// Errors produced by constructors and partial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// 0/0 has no canonical representative; constructors reject it.
    #[error("0/0 is not a valid extended rational")]
    ZeroOverZero,

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix [{0}] does not have determinant 1")]
    InvalidMatrix(String),

    /// The point lies outside the open quadrant (re > 0, im > 0).
    #[error("point {0} is not in the open quadrant")]
    OutsideDomain(String),

    /// The inverse transformation is undefined at its pole a/c.
    #[error("point {0} is the pole of the inverse transformation")]
    PoleInput(String),

    #[error("invalid slice: {0}")]
    InvalidSlice(String),

    #[error("({left}, {right}) is not a left-right pair")]
    NotAPair { left: String, right: String },

    #[error("forest generators must not be the identity")]
    IdentityGenerator,

    #[error("vertex {vertex} is not valid in {mode} mode")]
    InvalidVertex { vertex: String, mode: String },

    /// Root search exceeded the step guard. Termination is guaranteed, so
    /// this signals an implementation bug rather than a mathematical one.
    #[error("root search did not terminate within {0} steps")]
    StepLimitExceeded(usize),

    /// A translation (c = 0) preserves diameters, so its trace is infinite.
    #[error("matrix has c = 0: every power has an unbounded slice")]
    InfiniteDiameter,

    #[error("parse error: {0}")]
    Parse(String),
}

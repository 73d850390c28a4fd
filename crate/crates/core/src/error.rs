use thiserror::Error;

/// Failures raised by the constructions in this crate.
///
/// Certificate failures are never errors: they are returned as values carrying
/// witnesses (see [`crate::certificate`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {conductor} exceeds the configured cap (phi = {phi} > {cap})")]
    ConductorCap { conductor: u64, phi: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("group closure exceeded cap {0}")]
    NotFiniteWithinCap(usize),
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("no square root found for determinant {det} of element {element}")]
    SqrtNotFound { element: String, det: String },
    #[error("point set is not invariant: {0} maps outside")]
    NotInvariant(String),
    #[error("degenerate points: {0}")]
    DegeneratePoints(String),
    #[error("fixed points lie outside every reachable cyclotomic field (discriminant {0})")]
    RootFieldUnsupported(String),
    #[error("finite subgroup with unrecognised order statistics (order {0})")]
    UnknownGroup(usize),

    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("polynomial is not semi-invariant under {0}")]
    NotSemiInvariant(String),
    #[error("character value {0} is not a root of unity")]
    NotRootOfUnity(String),
    #[error("nonzero constant term")]
    ConstantTerm,
    #[error("contraction is not invariant under {0}")]
    PNotInvariant(String),
    #[error("degree alignment: {0}")]
    DegreeAlignment(String),

    #[error("point pair lies on the diagonal")]
    OnDiagonal,
    #[error("point is not on the quadric yz = x^2 - 1")]
    NotOnQuadric,
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("not squarefree: {0}")]
    NotSquarefree(String),
    #[error("removed set must contain at least 3 points for a finite automorphism group")]
    NeedThreePoints,

    #[error("no polynomial witness found up to degree {cap} ({step})")]
    WitnessNotFound { step: String, cap: u32 },
    #[error("no (a,b) in the sample sequence makes every root of P a pole")]
    PoleConditionUnsatisfiable,
    #[error("invalid planar embedding: {0}")]
    InvalidEmbedding(String),
    #[error("claimed inverse does not invert {0}")]
    NotAnAutomorphism(String),

    #[error("trivial automorphism")]
    TrivialAutomorphism,
    #[error("no fixed point of g lies in the removed set")]
    NoFixedPointInLambda,
    #[error("a point of the removed set is fixed by g: {0}")]
    FixedPointInLambda(String),
    #[error("removed set has no explicit point in the working field")]
    NoRationalPoint,
}

pub type Result<T> = std::result::Result<T, Error>;

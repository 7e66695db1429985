use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("invalid modulus {0}: expected an odd prime")]
    InvalidModulus(u64),
    #[error("operands disagree on the modulus or are not reduced modulo {0}")]
    MismatchedModulus(u64),
    #[error("invalid group order parameter {0}: need n >= 3")]
    InvalidOrder(u64),
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("set is not closed under inverses: {0} is missing its inverse")]
    NotSymmetric(String),
    #[error("residue set contains 0")]
    ContainsZero,
    #[error("cubic set matches none of the type-I/II/III templates")]
    UnclassifiableCubic,
    #[error("connection set is not cubic")]
    NotCubic,
    #[error("graph is not connected")]
    NotConnected,
    #[error("hamiltonian witness construction failed: {0}")]
    WitnessConstructionFailed(String),
    #[error("negative discriminant {0} in the two-dimensional eigenvalue pair")]
    NegativeDiscriminant(f64),
    #[error("graphs have different orders ({0} vs {1})")]
    MismatchedOrder(u64, u64),
    #[error("type-II exponents are not pairwise distinct")]
    DegenerateSet,
    #[error("{0} lies outside Z_p \\ {{0, 1}}")]
    OutOfDomain(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

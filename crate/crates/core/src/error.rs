use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::QPoly;

/// Failures of exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cannot parse `{0}`")]
    Parse(String),
    /// An inversion in `Q[x]/(m)` failed; the payload is a nontrivial monic factor of `m`.
    #[error("zero divisor encountered: {0} is a proper factor of the modulus")]
    ZeroDivisorEncountered(QPoly),
    #[error("monodromy must be nonzero")]
    ZeroMonodromy,
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different number fields")]
    FieldMismatch,
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinPoly(String),
}

/// Failures of the topological layer, including propagated arithmetic errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("malformed simplex {0:?}: repeated vertex")]
    MalformedSimplex(Vec<u32>),
    #[error("empty complex")]
    EmptyComplex,
    #[error("degree {degree} out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("cocycle condition fails on triangle {0:?}")]
    NotACocycle([u32; 3]),
    #[error("edge ({0}, {1}) has no cocycle value")]
    MissingEdge(u32, u32),
    #[error("edge ({0}, {1}) is not an edge of the complex")]
    UnknownEdge(u32, u32),
    #[error("simplex {0:?} is not in the complex")]
    UnknownSimplex(Vec<u32>),
    #[error("subcomplex is not closed under faces: missing {0:?}")]
    NotFaceClosed(Vec<u32>),
    #[error("differentials compose to a nonzero map in degree {0}")]
    NotAChainComplex(usize),
    #[error("invalid cut presentation: {0}")]
    InvalidCut(String),
    #[error("vertex map is not a simplicial isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("connected sum requires manifold inputs with a removable top simplex")]
    NotAManifoldInput,
    #[error("approximant {0:?} is not a nonzero integer combination of the base classes")]
    NotInSpan(Vec<i64>),
    #[error("certificate failed re-verification: {0}")]
    CertificateRejected(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

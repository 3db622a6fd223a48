//! Crate-wide error type.
//!
//! Two broad families matter for callers: *validation* errors (a
//! mathematically malformed object, a violated precondition) and *format*
//! errors (input that could not even be parsed into an object). The CLI maps
//! the former to exit code 1 and the latter to exit code 2.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("modulus {0} is too large (must be < 2^31)")]
    ModulusTooLarge(u64),

    #[error("dimension mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix must have positive dimensions, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular over Z/{p}Z")]
    SingularMatrix { p: u64 },

    #[error(
        "not skew-symmetric: entry ({row},{col}) is {value} but entry ({col},{row}) is {transposed}, \
         which is not its negative mod {p}"
    )]
    NotSkewSymmetric {
        row: usize,
        col: usize,
        value: u64,
        transposed: u64,
        p: u64,
    },

    #[error("diagonal entry ({index},{index}) is {value}, must be 0")]
    NonzeroDiagonal { index: usize, value: u64 },

    #[error("alpha[{index}] is zero; every generator power must be a nonzero field element")]
    ZeroGeneratorPower { index: usize },

    #[error("generator index {index} out of range for {n} generators")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { got: usize, expected: usize },

    #[error("exponent {value} at position {index} is not reduced mod {p}")]
    ExponentOutOfRange { index: usize, value: u64, p: u64 },

    #[error("elements belong to different presentations")]
    PresentationMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("element {index} is not p-central: its p-th power has a non-scalar term")]
    NotPCentral { index: usize },

    #[error(
        "elements {i} and {j} commute; triple classification needs pairwise non-commuting elements"
    )]
    CommutingElements { i: usize, j: usize },

    #[error(
        "generators {i} and {j} commute (commutation exponent 0): in a coherent 3-central set a \
         commuting pair spans a single line, so tournament analysis requires every pair to be \
         non-commuting"
    )]
    CommutingGenerators { i: usize, j: usize },

    #[error("vertex {vertex} out of range for a tournament on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} is not a tournament edge")]
    SelfLoop(usize),

    #[error("pair {{{i},{j}}} carries more than one directed edge")]
    DuplicateEdge { i: usize, j: usize },

    #[error("pair {{{i},{j}}} carries no directed edge; the underlying graph must be complete")]
    MissingEdge { i: usize, j: usize },

    #[error("tournament is not admissible: {0}")]
    NotAdmissible(String),

    #[error("selected vertex {vertex} is not on the triangle ({a},{b},{c})")]
    SelectionOutsideCycle {
        vertex: usize,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("degenerate parameters: a^3*alpha + b^3*beta = 0, so a*x + b*y is not invertible")]
    DegenerateParameters,

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that mean the input could not be parsed at all,
    /// as opposed to a well-formed object failing validation.
    pub fn is_format(&self) -> bool {
        matches!(self, Error::Format(_) | Error::Io(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

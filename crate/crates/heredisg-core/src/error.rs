use alloc::string::String;
use core::fmt;

/// Errors surfaced by the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus is not a prime in the supported range.
    NotPrime(u64),
    /// Incompatible shapes in a linear-algebra operation.
    DimensionMismatch { expected: usize, got: usize },
    /// Two representations do not live over the same quiver.
    QuiverMismatch,
    /// Two modules do not live over the same category.
    CategoryMismatch,
    /// Quiver file or module file syntax error.
    Parse { line: usize, msg: String },
    /// The quiver has a directed cycle.
    CyclicQuiver,
    /// Duplicate vertex or arrow name.
    DuplicateName(String),
    /// Unknown vertex, arrow or object name.
    UnknownName(String),
    /// The underlying graph is not Dynkin (A/D/E).
    NonDynkin,
    /// Category axioms failed during construction.
    InvalidCategory(String),
    /// Module axioms failed during construction.
    InvalidModule(String),
    /// Endomorphism-ring locality cannot be certified for this modulus.
    LocalityUndecidable { end_dim: usize, modulus: u64 },
    /// The input was required to be indecomposable but is not.
    Decomposable,
    /// A windowed computation touched the window boundary; the answer would
    /// not agree with the infinite repetitive category.
    WindowMargin { level: i64, step: usize },
    /// A level index lies outside the window.
    LevelOutsideWindow { level: i64, lo: i64, hi: i64 },
    /// A module in `mod_p` was required but a projective summand was found.
    ProjectiveSummand,
    /// AR classification did not terminate within the iteration bound.
    Inconclusive { bound: usize },
    /// Generic precondition violation.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime in the supported range"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::QuiverMismatch => write!(f, "representations live over different quivers"),
            Error::CategoryMismatch => write!(f, "modules live over different categories"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::CyclicQuiver => write!(f, "quiver has a directed cycle"),
            Error::DuplicateName(n) => write!(f, "duplicate name `{n}`"),
            Error::UnknownName(n) => write!(f, "unknown name `{n}`"),
            Error::NonDynkin => write!(f, "underlying graph is not Dynkin (A/D/E)"),
            Error::InvalidCategory(msg) => write!(f, "invalid category: {msg}"),
            Error::InvalidModule(msg) => write!(f, "invalid module: {msg}"),
            Error::LocalityUndecidable { end_dim, modulus } => write!(
                f,
                "cannot certify locality of a {end_dim}-dimensional endomorphism ring over F_{modulus}"
            ),
            Error::Decomposable => write!(f, "input representation is decomposable"),
            Error::WindowMargin { level, step } => write!(
                f,
                "resolution step {step} needs projectives at window boundary level {level}; enlarge the window"
            ),
            Error::LevelOutsideWindow { level, lo, hi } => {
                write!(f, "level {level} outside window [{lo}, {hi}]")
            }
            Error::ProjectiveSummand => {
                write!(f, "module has a nonzero projective direct summand")
            }
            Error::Inconclusive { bound } => {
                write!(f, "classification inconclusive within {bound} translate steps")
            }
            Error::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}

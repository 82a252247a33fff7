use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree n must exceed 1 (got {0})")]
    ExtensionDegreeTooSmall(u32),
    #[error("m must be positive")]
    ZeroSubfieldDegree,
    #[error("field of order {p}^{degree} exceeds the supported size 2^31")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("element does not belong to this field: {0}")]
    ForeignElement(String),
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("duplicate interpolation abscissa")]
    DuplicateAbscissa,
    #[error("polynomial degree {degree} must be below {bound}")]
    DegreeTooLarge { degree: usize, bound: u64 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("orbit assignment has {got} values, expected {expected}")]
    AssignmentLength { expected: usize, got: usize },
    #[error("polynomial has coefficients outside F_q")]
    CoefficientsOutsideFq,
    #[error("polynomial has a root in F_q")]
    HasRootInFq,
    #[error("polynomial is not a member of V_qs")]
    NotInVqs,
    #[error("element is not in F_q")]
    NotInFq,
    #[error("element is an {0}-th power in F_q")]
    IsPower(u64),
    #[error("exponent must be at least {min} (got {got})")]
    ExponentTooSmall { min: u64, got: u64 },
    #[error("size {size} exceeds the size guard {guard}")]
    SizeGuard { size: u64, guard: u64 },
    #[error("F_p-dimension {dim} exceeds the cap {cap}")]
    DimensionGuard { dim: usize, cap: usize },
    #[error("right-hand side is not in lowest terms")]
    NotLowestTerms,
    #[error("equation is reducible: {0}")]
    Reducible(String),
    #[error("irreducibility could not be certified")]
    NotCertified,
    #[error("extension is not geometric: the constant field grows by a factor {0}")]
    ConstantFieldExtension(u64),
    #[error("right-hand side is a perfect {0}-th power")]
    PerfectPower(u64),
    #[error("exponent {d} does not divide {order_minus_one}")]
    ExponentNotDividing { d: u64, order_minus_one: u64 },
    #[error("operation requires the full trace left-hand side")]
    RequiresFullTrace,
    #[error("root basis is linearly dependent over F_p")]
    DependentBasis,
    #[error("no non-degenerate basis ordering found for the tower")]
    DegenerateTower,
    #[error("Riemann-Hurwitz gives a non-integral or negative genus (2g-2 = {0})")]
    GenusInconsistent(i64),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Schema(e.to_string())
    }
}

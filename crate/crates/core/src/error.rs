use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("term {term} has degree {found}, expected {expected}")]
    DegreeMismatch { term: usize, expected: u32, found: u32 },
    #[error("term {term} has {found} exponents, expected {expected}")]
    ExponentLength { term: usize, expected: usize, found: usize },
    #[error("cannot add forms of degree {left} and {right}")]
    InhomogeneousSum { left: u32, right: u32 },
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("pencil is not injective as a sheaf map")]
    NotInjective,
    #[error("twisted section dimensions {0:?} do not come from a vector bundle with nonnegative splitting type")]
    InconsistentSections(alloc::vec::Vec<usize>),
    #[error("splitting type entries must be non-increasing")]
    NotNonIncreasing,
    #[error("splitting type of length {length} and sum {sum} does not fit a {w}x{u} pencil")]
    TypeFrame { length: usize, sum: u64, w: usize, u: usize },
    #[error("splitting types of different length or degree are incomparable")]
    IncomparableFrame,
    #[error("every random substitution restricted both forms to zero")]
    DegenerateSubstitution,
    #[error("f1 and f2 are linearly dependent and do not span a line")]
    DegenerateLine,
    #[error("line has forms of degree {found} in {vars} variables, context expects degree {expected} in {expected_vars}")]
    LineMismatch { found: u32, vars: usize, expected: u32, expected_vars: usize },
    #[error("generic splitting type undefined: degree {degree} exceeds rank {rank}")]
    GenericTypeUndefined { degree: usize, rank: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("Schubert symbol ({a},{b}) out of range for Gr(2,{n})")]
    SchubertIndex { a: i64, b: i64, n: usize },
    #[error("classes live in different rings")]
    ContextMismatch,
    #[error("push-pull degree {bidegree} differs from closed binomial {binomial} at (a,b)=({a},{b})")]
    PushPullMismatch { a: u32, b: u32, bidegree: String, binomial: String },
}

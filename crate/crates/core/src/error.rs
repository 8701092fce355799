use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A parameter inequality required by the construction does not hold.
    /// The payload names the violated inequality, e.g. `A < (m-2)/2`.
    #[error("parameter out of range: {inequality} violated ({detail})")]
    ParameterRange { inequality: String, detail: String },

    #[error("quantum number {nu} outside the allowed index set {allowed}")]
    IndexOutOfRange { nu: i64, allowed: String },

    #[error("polynomial {what} has {roots} root(s) on {interval}; nodelessness certificate failed")]
    NotNodeless {
        what: String,
        roots: usize,
        interval: String,
    },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("no explicit closed form for {0}")]
    Unsupported(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("potential is not finite at x = {x}")]
    NonFinitePotential { x: f64 },

    #[error("factorization energy {epsilon} lies above the ground-state energy {ground}")]
    EnergyAboveGround { epsilon: String, ground: String },

    #[error("all-zero sample vector has no sign structure")]
    ZeroVector,

    #[error("cannot parse rational from {0:?}")]
    Parse(String),

    /// The ground-state deletion partner of a type III extension is just the
    /// inverse of its construction; the payload is the recovered `A - 1`.
    #[error("type III partner is the inverse construction: returns conventional V_{{A-1,B}} with A-1 = {a_minus_one}")]
    InverseConstruction { a_minus_one: String },

    #[error("polynomial solution of degree {degree} not found ({reason})")]
    NoPolynomialSolution { degree: usize, reason: String },
}

impl Error {
    pub(crate) fn range(inequality: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::ParameterRange {
            inequality: inequality.into(),
            detail: detail.into(),
        }
    }
}

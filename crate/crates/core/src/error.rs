use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order must be at least {min}, got {n}")]
    OrderTooSmall { n: u64, min: u64 },

    #[error("{left} and {right} are not a Farey pair of order {n}")]
    NotAFareyPair { left: String, right: String, n: u64 },

    #[error("alpha = {0} lies outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("factor index {j} out of range 0..{delta}")]
    FactorIndexOutOfRange { j: u64, delta: u64 },

    #[error("polynomial must have degree >= 1")]
    ConstantPolynomial,

    #[error("root iteration did not converge after {iterations} sweeps (last update {last_update:e})")]
    NonConvergence { iterations: usize, last_update: f64 },

    #[error("no sign change of the radial equation on [{lo:e}, {hi}] at theta = {theta} (F = {f_lo:e}, {f_hi:e})")]
    NoSignChange {
        theta: f64,
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("theta = {theta} is not strictly inside the sector of the arc")]
    OutsideSector { theta: f64 },

    #[error("operation requires a {expected} arc, got {actual}")]
    WrongArcType {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("|z| = {0} exceeds the unit disc")]
    OutsideUnitDisc(f64),

    #[error("no order n <= {cap} admits the point")]
    NotFoundBelowCap { cap: u64 },

    #[error("point is not in the region of order {n}")]
    NotInRegion { n: u64 },

    #[error("invalid stochastic matrix: {0}")]
    InvalidMatrix(String),

    #[error("matrix of order {m} cannot be inflated to order {n}")]
    InflateTooSmall { m: usize, n: usize },

    #[error("need at least 3 boundary samples, got {0}")]
    TooFewSamples(usize),

    #[error("scale factor {0} lies outside [0, 1]")]
    ScaleOutOfRange(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors surfaced by the library. Every operation that has a restricted
/// domain reports violations through this type instead of panicking.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sphere dimension must satisfy n >= 1, got {0}")]
    InvalidDimension(u32),

    #[error("precision must be at least 64 bits, got {0}")]
    InvalidPrecision(u32),

    #[error("{op} is only defined for n >= {min}, got n = {n}")]
    DimensionTooSmall {
        op: &'static str,
        min: u32,
        n: u32,
    },

    #[error("rho must be positive, got {0}")]
    NonPositiveRho(String),

    #[error("rho_n = {rho} does not exceed the breakpoint ((n+1)/2)^n = {breakpoint}")]
    BelowBreakpoint { rho: String, breakpoint: String },

    #[error("energy must be a finite non-negative value, got {0}")]
    InvalidEnergy(f64),

    #[error("gamma moment must be non-negative, got {0}")]
    InvalidGammaMoment(String),

    #[error("quadrature refinement did not certify tolerance {tol:e}: delta = {delta}")]
    QuadratureUncertified { tol: f64, delta: String },

    #[error("scan grid is missing required breakpoint {0}")]
    MissingBreakpoint(String),

    #[error("shell scan requires k_max >= {min}, got {got}")]
    EmptyShellScan { min: u32, got: u32 },

    #[error("invalid range `{0}`: expected a single value N or a range A..B with A <= B")]
    InvalidRange(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

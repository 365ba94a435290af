//! Exact enumeration of the Dirac spectrum on the n-sphere.
//!
//! The spectrum is `±(n/2 + k)` for `k = 0, 1, 2, ...`, each level carrying
//! multiplicity `2^floor(n/2) * C(k+n-1, k)`. Everything here is exact:
//! eigenvalues are rationals, multiplicities and cumulative counts are
//! arbitrary-size integers, and the only floating quantity is the polynomial
//! envelope of the counting function.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Dimension of the sphere, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SphereDim {
    n: u32,
}

impl SphereDim {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Self { n })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// floor(n/2), the spinor-rank exponent.
    pub fn half_floor(self) -> u32 {
        self.n / 2
    }

    /// n/2 as an exact rational.
    pub fn half(self) -> Rational {
        Rational::from((self.n, 2u32))
    }
}

/// Sign of a spectral branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSign {
    Plus,
    Minus,
}

/// One eigenvalue level: degree, branch sign, exact eigenvalue, exact
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralLine {
    pub degree: u32,
    pub sign: SpectrumSign,
    pub eigenvalue: Rational,
    pub multiplicity: Integer,
}

impl SpectralLine {
    pub fn new(dim: SphereDim, degree: u32, sign: SpectrumSign) -> Self {
        Self {
            degree,
            sign,
            eigenvalue: dirac_eigenvalue(dim, degree, sign),
            multiplicity: dirac_multiplicity(dim, degree),
        }
    }
}

/// Binomial coefficient by the multiplicative ladder; never forms a
/// factorial, so it stays exact for any argument size.
pub fn binomial(top: u64, k: u64) -> Integer {
    if k > top {
        return Integer::from(0);
    }
    let k = k.min(top - k);
    let mut result = Integer::from(1);
    for i in 0..k {
        result *= top - i;
        result /= i + 1;
    }
    result
}

/// Eigenvalue `sign * (n/2 + k)` as an exact rational.
pub fn dirac_eigenvalue(dim: SphereDim, k: u32, sign: SpectrumSign) -> Rational {
    let value = Rational::from((u64::from(dim.n()) + 2 * u64::from(k), 2u64));
    match sign {
        SpectrumSign::Plus => value,
        SpectrumSign::Minus => -value,
    }
}

/// Multiplicity `2^floor(n/2) * C(k+n-1, k)` of the level `±(n/2 + k)`.
pub fn dirac_multiplicity(dim: SphereDim, k: u32) -> Integer {
    let b = binomial(u64::from(k) + u64::from(dim.n()) - 1, u64::from(k));
    b << dim.half_floor()
}

/// Number of positive eigenvalues strictly below `energy`, with multiplicity,
/// in closed form: the degree sum telescopes to a single binomial
/// (hockey-stick identity), so no term-by-term summation is performed.
pub fn cumulative_count(dim: SphereDim, energy: f64) -> Integer {
    assert!(
        energy.is_finite() && energy >= 0.0,
        "energy must be finite and non-negative"
    );
    let e = Rational::from_f64(energy).expect("finite f64 converts exactly");
    cumulative_count_rational(dim, &e)
}

/// Exact-rational core of [`cumulative_count`]. The branch test against n/2
/// and the ceiling are taken in exact arithmetic so that breakpoint energies
/// land on the correct side.
pub fn cumulative_count_rational(dim: SphereDim, energy: &Rational) -> Integer {
    let excess = Rational::from(energy - dim.half());
    if excess <= 0 {
        return Integer::from(0);
    }
    // Largest degree with n/2 + k < E is ceil(E - n/2) - 1.
    let top_degree = Integer::from(excess.ceil_ref()) - 1u32;
    if top_degree < 0 {
        return Integer::from(0);
    }
    let j = top_degree.to_u64().expect("degree fits u64");
    // sum_{k=0..j} C(k+n-1, k) = C(j+n, j)
    binomial(j + u64::from(dim.n()), j) << dim.half_floor()
}

/// Cumulative count over full shells `k = 0..=j`:
/// `sum m_k = 2^floor(n/2) * C(j+n, j)`.
pub fn shell_cumulative(dim: SphereDim, j: u32) -> Integer {
    binomial(u64::from(j) + u64::from(dim.n()), u64::from(j)) << dim.half_floor()
}

/// Polynomial envelope of the counting function:
/// `2^(floor(n/2) + doubled) * (E + 1/2)^n / n!` for `E > n/2`, zero below.
/// The doubled variant covers counting over both spectral branches.
pub fn count_envelope(dim: SphereDim, energy: f64, doubled: bool) -> f64 {
    assert!(
        energy.is_finite() && energy >= 0.0,
        "energy must be finite and non-negative"
    );
    let e = Rational::from_f64(energy).expect("finite f64 converts exactly");
    count_envelope_rational(dim, &e, doubled).to_f64()
}

/// Exact-rational envelope, used wherever a strict comparison against the
/// exact count matters.
pub fn count_envelope_rational(dim: SphereDim, energy: &Rational, doubled: bool) -> Rational {
    let excess = Rational::from(energy - dim.half());
    if excess <= 0 {
        return Rational::new();
    }
    let shifted = Rational::from(energy + Rational::from((1u32, 2u32)));
    let power = shifted.pow(dim.n() as i32);
    let mut scale = Rational::from((Integer::from(1) << dim.half_floor(), factorial(dim.n())));
    if doubled {
        scale *= 2u32;
    }
    power * scale
}

/// Exact count against its envelope at one energy.
#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub energy: f64,
    pub exact_count: Integer,
    pub envelope: f64,
}

pub fn count_report(dim: SphereDim, energy: f64) -> CountReport {
    CountReport {
        energy,
        exact_count: cumulative_count(dim, energy),
        envelope: count_envelope(dim, energy, false),
    }
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

//! Extended-precision arithmetic plumbing.
//!
//! All transcendental evaluation goes through MPFR floats with a caller-chosen
//! mantissa width; exact quantities stay in `rug::Integer` / `rug::Rational`
//! until the last moment. The default width (256 bits, ~77 decimal digits)
//! leaves a wide margin over the 7 printed digits the reports need.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Mantissa width used for every inexact computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    pub const DEFAULT_BITS: u32 = 256;
    pub const MIN_BITS: u32 = 64;

    pub fn new(bits: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::InvalidPrecision(bits));
        }
        Ok(Self { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Same precision with twice the mantissa, used by saturation checks.
    pub fn doubled(self) -> Self {
        Self {
            bits: self.bits * 2,
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self {
            bits: Self::DEFAULT_BITS,
        }
    }
}

pub fn pi(prec: Precision) -> Float {
    Float::with_val(prec.bits(), Constant::Pi)
}

pub fn float_from_rational(prec: Precision, value: &Rational) -> Float {
    Float::with_val(prec.bits(), value)
}

pub fn float_from_integer(prec: Precision, value: &Integer) -> Float {
    Float::with_val(prec.bits(), value)
}

pub fn float_from_u32(prec: Precision, value: u32) -> Float {
    Float::with_val(prec.bits(), value)
}

pub fn float_from_f64(prec: Precision, value: f64) -> Float {
    Float::with_val(prec.bits(), value)
}

/// x^(p/q) for positive x via integer power and integer root, avoiding the
/// generic pow path. q must be positive.
pub fn pow_rational(x: &Float, p: i32, q: u32) -> Float {
    debug_assert!(x.is_sign_positive() && q > 0);
    let raised = Float::with_val(x.prec(), x.pow(p));
    raised.root(q)
}

/// Exact conversion of a finite f64 into a rational (every finite double is
/// a dyadic rational).
pub fn rational_from_f64(value: f64) -> Option<Rational> {
    Rational::from_f64(value)
}

/// Fixed-point decimal rendering with round-to-nearest (ties away from zero).
/// Deterministic for a deterministic input, unlike shortest-float printing.
pub fn format_fixed(x: &Float, decimals: usize) -> String {
    let prec = x.prec();
    let scale = Integer::from(10).pow(decimals as u32);
    let scaled = Float::with_val(prec, x * &scale);
    let rounded = scaled.round();
    let as_int = rounded
        .to_integer()
        .expect("finite value expected when formatting");
    let negative = as_int < 0;
    let digits = as_int.abs().to_string();
    let digits = if digits.len() <= decimals {
        format!("{}{}", "0".repeat(decimals + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = digits.split_at(digits.len() - decimals);
    let sign = if negative { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Significant-digit rendering used for machine-readable fields where no
/// column convention applies.
pub fn format_sig(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    // Position of the leading decimal digit: floor(log10 |x|).
    let abs = Float::with_val(x.prec(), x.abs_ref());
    let log10 = abs.log10();
    let floor_log = log10
        .floor()
        .to_integer()
        .expect("finite value expected when formatting")
        .to_i32()
        .expect("exponent fits i32");
    let decimals = digits as i32 - 1 - floor_log;
    if decimals >= 0 {
        format_fixed(x, decimals as usize)
    } else {
        // Integer-valued rounding above the decimal point.
        let scale = Integer::from(10).pow((-decimals) as u32);
        let scaled = Float::with_val(x.prec(), x / &scale);
        let rounded = scaled.round();
        let as_int = rounded.to_integer().expect("finite value expected");
        (as_int * scale).to_string()
    }
}

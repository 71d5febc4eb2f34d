//! Scalar abstractions.
//!
//! Algebraic data (weights, group matrices, grids) is exact and uses
//! [`Rational`]. Function values are computed in any IEEE float type through
//! [`Real`]. Reductions that make sense both exactly and approximately (the
//! affine fundamental-domain reduction) are written once against [`Coord`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

/// A weight or point in ω-coordinates with exact entries.
pub type Weight = Vec<Rational>;

/// Floating-point types usable for function evaluation.
pub trait Real: Float + FloatConst + FromPrimitive + Send + Sync + Debug + Display + 'static {
    /// Nearest representable value of an exact rational.
    fn from_rational(q: &Rational) -> Self {
        Self::from_f64(rational_to_f64(q)).expect("finite rational")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Coordinate types on which the affine reduction can run: exact rationals or
/// floats with a wall-snapping tolerance.
pub trait Coord: Clone + PartialOrd + Debug + Send + Sync {
    fn coord_zero() -> Self;
    fn coord_one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn floor(&self) -> Self;
    /// Distance below which a coordinate is snapped onto a wall.
    fn wall_tolerance() -> Self;
    fn magnitude(&self) -> Self;
    fn approx_f64(&self) -> f64;
}

impl Coord for Rational {
    fn coord_zero() -> Self {
        Zero::zero()
    }
    fn coord_one() -> Self {
        One::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn floor(&self) -> Self {
        BigRational::floor(self)
    }
    fn wall_tolerance() -> Self {
        Zero::zero()
    }
    fn magnitude(&self) -> Self {
        Signed::abs(self)
    }
    fn approx_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

macro_rules! float_coord {
    ($t:ty, $tol:expr) => {
        impl Coord for $t {
            fn coord_zero() -> Self {
                0.0
            }
            fn coord_one() -> Self {
                1.0
            }
            fn from_rational(q: &Rational) -> Self {
                rational_to_f64(q) as $t
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn floor(&self) -> Self {
                <$t>::floor(*self)
            }
            fn wall_tolerance() -> Self {
                $tol
            }
            fn magnitude(&self) -> Self {
                <$t>::abs(*self)
            }
            fn approx_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}
float_coord!(f32, 1e-6);
float_coord!(f64, 1e-12);

/// Integer rational.
pub fn q(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational `n/d`.
pub fn qf(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Converts a rational to the nearest `f64`.
pub fn rational_to_f64(v: &Rational) -> f64 {
    if let Some(x) = ToPrimitive::to_f64(v) {
        if x.is_finite() {
            return x;
        }
    }
    let n = v.numer().to_f64().unwrap_or(f64::NAN);
    let d = v.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Parses `p`, `p/q` or a terminating decimal such as `-0.25` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidArgument(format!("cannot parse rational `{s}`"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        let whole: BigInt = if ip_digits.is_empty() { BigInt::zero() } else { ip_digits.parse().map_err(|_| bad())? };
        let frac: BigInt = fp.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let mag = BigRational::new(whole * &scale + frac, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Parses a comma-separated list of rationals such as `1,-1/2,3`.
pub fn parse_weight(s: &str) -> Result<Weight> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Canonical text form of a rational: `p` for integers, `p/q` otherwise.
pub fn format_rational(v: &Rational) -> String {
    v.to_string()
}

/// Text form of a weight, e.g. `(1, -1/2)`.
pub fn format_weight(w: &[Rational]) -> String {
    let parts: Vec<String> = w.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// Builds a weight from integers.
pub fn weight(v: &[i64]) -> Weight {
    v.iter().map(|&x| q(x)).collect()
}

/// Converts an exact weight to floats.
pub fn to_real<T: Real>(w: &[Rational]) -> Vec<T> {
    w.iter().map(T::from_rational).collect()
}

/// True when every coordinate is an integer.
pub fn is_integral(w: &[Rational]) -> bool {
    w.iter().all(|x| x.is_integer())
}

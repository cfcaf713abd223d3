//! Exact scalar and truncated power-series arithmetic.

pub mod linalg;
mod poly;
mod series;

pub use poly::{poly_mul, Exponent, PolyRing, TruncatedPoly, MAX_VARS};
pub use series::{series_coefficient, series_exp, series_log, RationalFunctionSeries};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// `n / 1` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p / q` as a rational. Panics on a zero denominator.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `1 / k!` for small `k`.
pub fn inv_factorial(k: u32) -> BigRational {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= BigInt::from(i);
    }
    BigRational::new(BigInt::one(), f)
}

/// Lowest terms with a positive denominator.
pub fn is_canonical(q: &BigRational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

/// Exact conversion of an integral rational to `i64`.
pub fn to_i64(q: &BigRational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

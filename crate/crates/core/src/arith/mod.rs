//! Exact scalars, dense univariate polynomials and small linear algebra over Q.
//!
//! Scalars are `num-bigint`/`num-rational` values; `Ratio` keeps itself
//! reduced with a positive denominator, which is the invariant we rely on
//! everywhere downstream.

mod intpoly;
mod matrix;
mod modpoly;
mod poly;

pub use intpoly::IntPoly;
pub use matrix::RatMatrix;
pub use modpoly::ModPoly;
pub use poly::RatPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `n / d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign_of(q: &Rational) -> i32 {
    use num_traits::Signed;
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Serialises a rational as its `p/q` display string.
pub(crate) fn serialize_rational<S: serde::Serializer>(
    q: &Rational,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

//! Exact rational and integer linear algebra.
//!
//! Everything here is dense and exact: rationals are arbitrary-precision
//! `num::BigRational`, integers are `num::BigInt`. No rounding happens
//! anywhere in the crate.

mod abelian;
mod qmatrix;
mod span;
mod zmatrix;

pub use abelian::{fp_abelian_group, fp_abelian_group_labeled, FPAbelianGroup};
pub use qmatrix::{kernel_basis, quotient_space, QMatrix};
pub use span::Span;
pub use zmatrix::{abelian_kernel, smith_normal_form, SmithDecomposition, ZMatrix};

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Zero};

pub type Rational = BigRational;
pub type QVector = Vec<Rational>;
pub type ZVector = Vec<BigInt>;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational p/q from machine integers; panics on q = 0.
pub fn ratio(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn qzero() -> Rational {
    BigRational::zero()
}

pub fn qone() -> Rational {
    BigRational::one()
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Renders a rational as "p" or "p/q".
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

//! Coefficient fields.
//!
//! Every structure in the crate is generic over a [`Scalar`]: an exact field
//! with a canonical text form. [`num_rational::BigRational`] is the default
//! and the only instantiation that cannot overflow; `Rational64` is provided
//! for quick experiments on small inputs.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// An exact field of characteristic zero.
///
/// Equality must be structural equality of canonical forms; the row
/// reduction and ideal membership code relies on `is_zero` being exact.
pub trait Scalar:
    Clone + Eq + Hash + Debug + Display + Num + Signed + Send + Sync + 'static
{
    /// Parses `"p/q"`, `"p"` or `"-p/q"`, reducing to lowest terms.
    fn parse_scalar(s: &str) -> Result<Self>;

    fn from_i64(v: i64) -> Self;
}

impl Scalar for BigRational {
    fn parse_scalar(s: &str) -> Result<Self> {
        parse_ratio::<BigInt>(s)
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Scalar for Ratio<i64> {
    fn parse_scalar(s: &str) -> Result<Self> {
        parse_ratio::<i64>(s)
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

fn parse_ratio<T>(s: &str) -> Result<Ratio<T>>
where
    T: Clone + num_integer::Integer + FromStr,
{
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: T = num.parse().map_err(|_| bad())?;
    let den: T = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidArgument(format!("zero denominator in {s:?}")));
    }
    Ok(Ratio::new(num, den))
}

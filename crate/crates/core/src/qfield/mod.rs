//! Exact arithmetic over Q and over quadratic extensions Q(sqrt(D)).
//!
//! Everything downstream (polynomials, rational functions, the Binet side of
//! every closed form) is written against the [`Field`] trait so that the same
//! code runs over plain rationals when the characteristic roots are rational
//! and over [`QuadElem`] otherwise.

mod quad;
mod spec;

pub use quad::{QuadElem, QuadField};
pub use spec::{binet_coeffs, roots, Algebraic, Binet, BinetData, RecurrenceSpec};

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number with a positive, gcd-reduced denominator.
pub type Rational = BigRational;

/// A commutative field whose elements carry enough context to build constants.
///
/// `Ctx` is the field tag: `()` for Q and the discriminant for Q(sqrt(D)).
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, value: Rational) -> Self;
    /// The rational value, if the element lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;
    fn is_zero_elem(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn is_one_elem(&self) -> bool {
        self.sub(&Self::one_in(&self.ctx())).is_zero_elem()
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn scale(&self, factor: &Rational) -> Self {
        self.mul(&Self::from_rational(&self.ctx(), factor.clone()))
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.ctx());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Field for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }

    fn one_in(_: &()) -> Self {
        Rational::one()
    }

    fn from_rational(_: &(), value: Rational) -> Self {
        value
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
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

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Exact integer square-root test. Returns the root when `d` is a perfect square.
pub fn is_perfect_square(d: &BigInt) -> Option<BigInt> {
    if d.sign() == Sign::Minus {
        return None;
    }
    let root = d.sqrt();
    if &root * &root == *d {
        Some(root)
    } else {
        None
    }
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `5^e` (or any base) for a possibly negative exponent, exactly.
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    let p = Field::pow(base, exp.unsigned_abs());
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// `(-1)^e` for signed exponents.
pub fn sign_pow(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

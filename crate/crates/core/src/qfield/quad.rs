use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{is_perfect_square, Field, Rational};
use crate::error::{Error, Result};

/// The field tag for Q(sqrt(D)): a nonzero, non-square discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadField {
    disc: BigInt,
}

impl QuadField {
    pub fn new(disc: BigInt) -> Result<Self> {
        if disc.is_zero() || is_perfect_square(&disc).is_some() {
            return Err(Error::SquareDiscriminant(disc.to_string()));
        }
        Ok(QuadField { disc })
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn elem(&self, rat: Rational, coef: Rational) -> QuadElem {
        QuadElem { rat, coef, disc: self.disc.clone() }
    }

    /// The element sqrt(D).
    pub fn sqrt_disc(&self) -> QuadElem {
        self.elem(Rational::zero(), Rational::one())
    }
}

/// `rat + coef * sqrt(disc)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    rat: Rational,
    coef: Rational,
    disc: BigInt,
}

impl QuadElem {
    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn coef(&self) -> &Rational {
        &self.coef
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    /// Galois conjugate: flips the sign of the sqrt(D) part.
    pub fn conjugate(&self) -> Self {
        QuadElem { rat: self.rat.clone(), coef: -&self.coef, disc: self.disc.clone() }
    }

    /// `x * conj(x) = rat^2 - D coef^2`, always rational.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(self.disc.clone()) * &self.coef * &self.coef
    }

    pub fn trace(&self) -> Rational {
        &self.rat + &self.rat
    }

    /// The rational value, or `NotRational` when the sqrt(D) part is nonzero.
    pub fn rationalize(&self) -> Result<Rational> {
        if self.coef.is_zero() {
            Ok(self.rat.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.disc == other.disc {
            Ok(())
        } else {
            Err(Error::DiscriminantMismatch(self.disc.to_string(), other.disc.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadElem {
            rat: &self.rat + &other.rat,
            coef: &self.coef + &other.coef,
            disc: self.disc.clone(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadElem {
            rat: &self.rat - &other.rat,
            coef: &self.coef - &other.coef,
            disc: self.disc.clone(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = Rational::from_integer(self.disc.clone());
        Ok(QuadElem {
            rat: &self.rat * &other.rat + d * &self.coef * &other.coef,
            coef: &self.rat * &other.coef + &self.coef * &other.rat,
            disc: self.disc.clone(),
        })
    }

    pub fn checked_inv(&self) -> Result<Self> {
        let n = self.norm();
        // D is not a square, so the norm vanishes only at zero.
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadElem { rat: &self.rat / &n, coef: -&self.coef / &n, disc: self.disc.clone() })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.checked_inv()?)
    }
}

// The trait methods panic on a discriminant mismatch; elements of one
// computation always share a single QuadField.
impl Field for QuadElem {
    type Ctx = QuadField;

    fn ctx(&self) -> QuadField {
        QuadField { disc: self.disc.clone() }
    }

    fn zero_in(ctx: &QuadField) -> Self {
        ctx.elem(Rational::zero(), Rational::zero())
    }

    fn one_in(ctx: &QuadField) -> Self {
        ctx.elem(Rational::one(), Rational::zero())
    }

    fn from_rational(ctx: &QuadField, value: Rational) -> Self {
        ctx.elem(value, Rational::zero())
    }

    fn to_rational(&self) -> Option<Rational> {
        self.rationalize().ok()
    }

    fn is_zero_elem(&self) -> bool {
        self.rat.is_zero() && self.coef.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("discriminant mismatch")
    }

    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("discriminant mismatch")
    }

    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("discriminant mismatch")
    }

    fn neg(&self) -> Self {
        QuadElem { rat: -&self.rat, coef: -&self.coef, disc: self.disc.clone() }
    }

    fn inv(&self) -> Result<Self> {
        self.checked_inv()
    }

    fn scale(&self, factor: &Rational) -> Self {
        QuadElem { rat: &self.rat * factor, coef: &self.coef * factor, disc: self.disc.clone() }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let coef = self.coef.abs();
        let root = if coef.is_one() {
            format!("sqrt({})", self.disc)
        } else {
            format!("{}*sqrt({})", coef, self.disc)
        };
        match (self.rat.is_zero(), self.coef.is_negative()) {
            (true, false) => write!(f, "{root}"),
            (true, true) => write!(f, "-{root}"),
            (false, false) => write!(f, "{} + {root}", self.rat),
            (false, true) => write!(f, "{} - {root}", self.rat),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{ratio, rational};
    use proptest::prelude::*;

    fn q2() -> QuadField {
        QuadField::new(BigInt::from(2)).unwrap()
    }

    #[test]
    fn square_discriminants_rejected() {
        assert!(QuadField::new(BigInt::from(9)).is_err());
        assert!(QuadField::new(BigInt::from(0)).is_err());
        assert!(QuadField::new(BigInt::from(-11)).is_ok());
    }

    #[test]
    fn invert_one_plus_sqrt2() {
        let x = q2().elem(rational(1), rational(1));
        let inv = x.checked_inv().unwrap();
        assert_eq!(inv, q2().elem(rational(-1), rational(1)));
        assert!(x.mul(&inv).is_one_elem());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(QuadElem::zero_in(&q2()).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_discriminants() {
        let a = q2().sqrt_disc();
        let b = QuadField::new(BigInt::from(5)).unwrap().sqrt_disc();
        assert!(matches!(a.checked_add(&b), Err(Error::DiscriminantMismatch(..))));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn rationalize_reports_irrational_part() {
        let x = q2().elem(ratio(1, 2), rational(0));
        assert_eq!(x.rationalize().unwrap(), ratio(1, 2));
        assert!(matches!(q2().sqrt_disc().rationalize(), Err(Error::NotRational(_))));
    }

    #[test]
    fn display() {
        let f = QuadField::new(BigInt::from(5)).unwrap();
        assert_eq!(f.elem(ratio(1, 2), ratio(-1, 2)).to_string(), "1/2 - 1/2*sqrt(5)");
        assert_eq!(f.sqrt_disc().to_string(), "sqrt(5)");
    }

    fn arb_elem(disc: i64) -> impl Strategy<Value = QuadElem> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(move |(a, b, c, d)| {
            QuadField::new(BigInt::from(disc)).unwrap().elem(ratio(a, b), ratio(c, d))
        })
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_elem(-7), y in arb_elem(-7), z in arb_elem(-7)) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            if !x.is_zero_elem() {
                prop_assert!(x.mul(&x.inv().unwrap()).is_one_elem());
            }
        }

        #[test]
        fn conjugation_is_automorphism(x in arb_elem(5), y in arb_elem(5)) {
            prop_assert_eq!(x.mul(&y).conjugate(), x.conjugate().mul(&y.conjugate()));
            prop_assert_eq!(x.add(&y).conjugate(), x.conjugate().add(&y.conjugate()));
            prop_assert_eq!(x.mul(&x.conjugate()).rationalize().unwrap(), x.norm());
        }
    }
}

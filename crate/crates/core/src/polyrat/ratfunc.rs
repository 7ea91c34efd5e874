use super::{Polynomial, PowerSeries};
use crate::error::{Error, Result};
use crate::qfield::{Field, Rational};

/// `num / den` in canonical form.
///
/// `num` and `den` are coprime; `den` has constant term one when `den(0) != 0`
/// and is monic otherwise. Two functions are equal exactly when their canonical
/// forms are identical, so the derived `PartialEq` decides equality.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<F: Field> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ctx = den.ctx().clone();
        if num.is_zero() {
            return Ok(RationalFunction { num, den: Polynomial::one(&ctx) });
        }
        let g = num.gcd(&den);
        let (num, _) = num.divmod(&g)?;
        let (den, _) = den.divmod(&g)?;
        let c0 = den.coeff(0);
        let unit = if c0.is_zero_elem() { den.leading().cloned().expect("nonzero") } else { c0 };
        let unit_inv = unit.inv()?;
        Ok(RationalFunction { num: num.scale(&unit_inv), den: den.scale(&unit_inv) })
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        let ctx = p.ctx().clone();
        Self::new(p, Polynomial::one(&ctx)).expect("unit denominator")
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Self::from_poly(Polynomial::zero(ctx))
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// `c / (1 - lambda x)`.
    pub fn simple_pole(c: F, lambda: F) -> Self {
        let ctx = c.ctx();
        let den = Polynomial::new(&ctx, vec![F::one_in(&ctx), lambda.neg()]);
        Self::new(Polynomial::constant(c), den).expect("nonzero denominator")
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.den.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// A polynomial when the denominator is the constant one.
    pub fn as_polynomial(&self) -> Option<&Polynomial<F>> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero")
    }

    /// Equality of canonical forms.
    pub fn equals(&self, other: &Self) -> bool {
        self == other
    }

    /// Re-canonicalizes; a no-op on values built through the constructors.
    pub fn normalize(&self) -> Self {
        Self::new(self.num.clone(), self.den.clone()).expect("nonzero")
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero_elem() {
            return Err(Error::DenominatorZero { x: x.to_string(), term: "den".into() });
        }
        self.num.eval(x).div(&d)
    }

    /// First `order` Maclaurin coefficients via
    /// `c_i = (num_i - sum_{j>=1} den_j c_{i-j}) / den_0`.
    pub fn expand(&self, order: usize) -> Result<PowerSeries<F>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero_elem() {
            return Err(Error::PoleAtOrigin);
        }
        let d0_inv = d0.inv()?;
        let den = self.den.coeffs();
        let mut out: Vec<F> = Vec::with_capacity(order);
        for i in 0..order {
            let mut acc = self.num.coeff(i);
            for j in 1..den.len().min(i + 1) {
                acc = acc.sub(&den[j].mul(&out[i - j]));
            }
            out.push(acc.mul(&d0_inv));
        }
        Ok(PowerSeries::new(out))
    }

    /// The same function over Q, or the first irrational coefficient.
    pub fn descend(&self) -> Result<RationalFunction<Rational>> {
        let num = self.num.to_rational()?;
        let den = self.den.to_rational()?;
        Ok(RationalFunction { num, den })
    }

    pub fn lift(f: &RationalFunction<Rational>, ctx: &F::Ctx) -> Self {
        RationalFunction { num: Polynomial::lift(f.num(), ctx), den: Polynomial::lift(f.den(), ctx) }
    }
}

/// Sums an iterator of rational functions.
pub fn sum_all<F: Field>(ctx: &F::Ctx, terms: impl IntoIterator<Item = RationalFunction<F>>) -> RationalFunction<F> {
    terms.into_iter().fold(RationalFunction::zero(ctx), |acc, t| acc.add(&t))
}

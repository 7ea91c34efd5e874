use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{is_perfect_square, Field, QuadElem, QuadField, Rational};
use crate::error::{Error, Result};

/// `U_{n+1} = a U_n + b U_{n-1}` with initial values `U_0`, `U_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    a: BigInt,
    b: BigInt,
    u0: Rational,
    u1: Rational,
}

impl RecurrenceSpec {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, u0: Rational, u1: Rational) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if b.is_zero() {
            return Err(Error::FirstOrder);
        }
        let d: BigInt = &a * &a + 4 * &b;
        if d.is_zero() {
            return Err(Error::Degenerate { a: a.to_string(), b: b.to_string() });
        }
        Ok(RecurrenceSpec { a, b, u0, u1 })
    }

    /// Integer initial values, the common case.
    pub fn integers(a: i64, b: i64, u0: i64, u1: i64) -> Result<Self> {
        Self::new(a, b, Rational::from_integer(u0.into()), Rational::from_integer(u1.into()))
    }

    pub fn fibonacci() -> Self {
        Self::integers(1, 1, 0, 1).unwrap()
    }

    pub fn lucas() -> Self {
        Self::integers(1, 1, 2, 1).unwrap()
    }

    pub fn pell() -> Self {
        Self::integers(2, 1, 0, 1).unwrap()
    }

    /// Pell-type sequence with `P_1 = 1, P_2 = 3`, i.e. `q_0 = q_1 = 1`.
    pub fn pell_q() -> Self {
        Self::generalized_pell(Rational::one(), Rational::from_integer(3.into()))
    }

    /// `P_{n+1} = 2 P_n + P_{n-1}` with `P_1 = p`, `P_2 = q` (so `P_0 = q - 2p`).
    pub fn generalized_pell(p: Rational, q: Rational) -> Self {
        let p0 = &q - &p * Rational::from_integer(2.into());
        Self::new(2, 1, p0, p).unwrap()
    }

    /// Same `(a, b)` with the companion initial values `V_0 = 2`, `V_1 = a`.
    pub fn companion(&self) -> Self {
        RecurrenceSpec {
            a: self.a.clone(),
            b: self.b.clone(),
            u0: Rational::from_integer(2.into()),
            u1: Rational::from_integer(self.a.clone()),
        }
    }

    /// Same `(a, b)` with `U_0 = 0`, `U_1 = 1`.
    pub fn fundamental(&self) -> Self {
        RecurrenceSpec { a: self.a.clone(), b: self.b.clone(), u0: Rational::zero(), u1: Rational::one() }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn u0(&self) -> &Rational {
        &self.u0
    }

    pub fn u1(&self) -> &Rational {
        &self.u1
    }

    pub fn discriminant(&self) -> BigInt {
        &self.a * &self.a + 4 * &self.b
    }

    pub fn binet(&self) -> Binet {
        let d = self.discriminant();
        let a = Rational::from_integer(self.a.clone());
        let half = Rational::new(1.into(), 2.into());
        match is_perfect_square(&d) {
            Some(s) => {
                let s = Rational::from_integer(s);
                let alpha = (&a + &s) * &half;
                let beta = (&a - &s) * &half;
                Binet::Rational(BinetData::build(alpha, beta, &self.u0, &self.u1))
            }
            None => {
                let field = QuadField::new(d).expect("non-square discriminant");
                let alpha = field.elem(&a * &half, half.clone());
                let beta = field.elem(&a * &half, -half);
                Binet::Quadratic(BinetData::build(alpha, beta, &self.u0, &self.u1))
            }
        }
    }
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.a, self.b, self.u0, self.u1)
    }
}

/// Characteristic roots and Binet coefficients in a field containing the roots:
/// `U_n = A alpha^n - B beta^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinetData<F: Field> {
    pub alpha: F,
    pub beta: F,
    pub a_coef: F,
    pub b_coef: F,
}

impl<F: Field> BinetData<F> {
    fn build(alpha: F, beta: F, u0: &Rational, u1: &Rational) -> Self {
        let ctx = alpha.ctx();
        let u0 = F::from_rational(&ctx, u0.clone());
        let u1 = F::from_rational(&ctx, u1.clone());
        let gap = alpha.sub(&beta).inv().expect("distinct roots");
        let a_coef = u1.sub(&u0.mul(&beta)).mul(&gap);
        let b_coef = u1.sub(&u0.mul(&alpha)).mul(&gap);
        BinetData { alpha, beta, a_coef, b_coef }
    }

    pub fn ctx(&self) -> F::Ctx {
        self.alpha.ctx()
    }

    /// `A alpha^n - B beta^n`.
    pub fn term(&self, n: u64) -> F {
        self.a_coef.mul(&self.alpha.pow(n)).sub(&self.b_coef.mul(&self.beta.pow(n)))
    }

    /// `alpha^n + beta^n`.
    pub fn companion_term(&self, n: u64) -> F {
        self.alpha.pow(n).add(&self.beta.pow(n))
    }

    pub fn lift(&self, r: &Rational) -> F {
        F::from_rational(&self.ctx(), r.clone())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Binet {
    /// `a^2 + 4b` is a perfect square: the roots are rational.
    Rational(BinetData<Rational>),
    Quadratic(BinetData<QuadElem>),
}

/// Runs a generic expression against whichever field the roots live in.
#[macro_export]
macro_rules! with_binet {
    ($binet:expr, |$data:ident| $body:expr) => {
        match $binet {
            $crate::qfield::Binet::Rational($data) => $body,
            $crate::qfield::Binet::Quadratic($data) => $body,
        }
    };
}

/// An element of whichever field holds the roots.
#[derive(Clone, Debug, PartialEq)]
pub enum Algebraic {
    Rational(Rational),
    Quadratic(QuadElem),
}

impl fmt::Display for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebraic::Rational(r) => write!(f, "{r}"),
            Algebraic::Quadratic(q) => write!(f, "{q}"),
        }
    }
}

/// `(alpha, beta)`, alpha on the `+sqrt(D)` branch.
pub fn roots(spec: &RecurrenceSpec) -> (Algebraic, Algebraic) {
    match spec.binet() {
        Binet::Rational(d) => (Algebraic::Rational(d.alpha), Algebraic::Rational(d.beta)),
        Binet::Quadratic(d) => (Algebraic::Quadratic(d.alpha), Algebraic::Quadratic(d.beta)),
    }
}

/// `(A, B)` with `A = (U_1 - U_0 beta)/(alpha - beta)`, `B = (U_1 - U_0 alpha)/(alpha - beta)`.
pub fn binet_coeffs(spec: &RecurrenceSpec) -> (Algebraic, Algebraic) {
    match spec.binet() {
        Binet::Rational(d) => (Algebraic::Rational(d.a_coef), Algebraic::Rational(d.b_coef)),
        Binet::Quadratic(d) => (Algebraic::Quadratic(d.a_coef), Algebraic::Quadratic(d.b_coef)),
    }
}

//! Partial sums `S_{n,r}(x) = sum_{i=0}^n U_i^r x^i` and the generalized Pell
//! sums `S_m = sum_{i=1}^m P_i`, `S_{-m} = sum_{i=1}^m P_{-i}`.
//!
//! [`partial_sum_direct`] is the oracle. [`partial_sum_general_b`] sums the
//! `r + 1` geometric series in the root field and is exact for every `b`.
//! [`partial_sum_closed`] evaluates the paired closed forms, which hold only
//! for `b = 1`; other specs are routed to the geometric form.

use num_traits::{One, Zero};

use crate::binsum::binomial;
use crate::compare::Comparison;
use crate::error::{Error, Result};
use crate::polyrat::{sum_all, Polynomial, RationalFunction};
use crate::qfield::{rational, rational_pow, sign_pow, BinetData, Field, Rational, RecurrenceSpec};
use crate::seq::SequenceHandle;
use crate::with_binet;

/// Largest `n` served in symbolic mode.
pub const SYMBOLIC_LIMIT: u64 = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct PartialSumQuery {
    pub spec: RecurrenceSpec,
    pub n: u64,
    pub r: u32,
    /// `None` asks for the sum as a function of `x`.
    pub x: Option<Rational>,
}

impl PartialSumQuery {
    pub fn at(spec: RecurrenceSpec, n: u64, r: u32, x: Rational) -> Self {
        PartialSumQuery { spec, n, r, x: Some(x) }
    }

    pub fn symbolic(spec: RecurrenceSpec, n: u64, r: u32) -> Self {
        PartialSumQuery { spec, n, r, x: None }
    }

    fn check(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::OutOfRange("exponent r must be at least 1".into()));
        }
        if self.x.is_none() && self.n > SYMBOLIC_LIMIT {
            return Err(Error::SymbolicTooLarge { n: self.n, limit: SYMBOLIC_LIMIT });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PartialSum {
    Value(Rational),
    Function(RationalFunction<Rational>),
}

impl PartialSum {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            PartialSum::Value(v) => Some(v),
            PartialSum::Function(_) => None,
        }
    }

    pub fn function(&self) -> Option<&RationalFunction<Rational>> {
        match self {
            PartialSum::Function(f) => Some(f),
            PartialSum::Value(_) => None,
        }
    }
}

impl std::fmt::Display for PartialSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartialSum::Value(v) => write!(f, "{v}"),
            PartialSum::Function(g) => {
                write!(f, "{}", crate::polyrat::render::render(g, crate::polyrat::render::Style::Text))
            }
        }
    }
}

/// Which closed form produced a [`ClosedSum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Paired `b = 1` form, odd or even `r`.
    UnitB,
    /// Geometric sums over the poles `alpha^k beta^{r-k}`.
    GeneralB,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedSum {
    pub sum: PartialSum,
    pub route: Route,
}

/// Exact `sum_{i=0}^n U_i^r x^i`; any initial values.
pub fn partial_sum_direct(q: &PartialSumQuery) -> Result<PartialSum> {
    q.check()?;
    let powers: Vec<Rational> = SequenceHandle::u(&q.spec)
        .terms(q.n as usize + 1)
        .iter()
        .map(|u| Field::pow(u, q.r as u64))
        .collect();
    Ok(match &q.x {
        Some(x) => {
            let mut acc = Rational::zero();
            for c in powers.iter().rev() {
                acc = acc * x + c;
            }
            PartialSum::Value(acc)
        }
        None => PartialSum::Function(RationalFunction::from_poly(Polynomial::new(&(), powers))),
    })
}

/// Sparse `sum c_k x^k`, kept sparse so pointwise evaluation never builds the
/// degree-`n` polynomial.
#[derive(Clone, Debug)]
struct Sparse(Vec<(u64, Rational)>);

impl Sparse {
    fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().map(|(k, c)| c * rational_pow(x, *k as i64)).sum()
    }

    fn poly(&self) -> Polynomial<Rational> {
        let top = self.0.iter().map(|(k, _)| *k).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); top + 1];
        for (k, c) in &self.0 {
            coeffs[*k as usize] += c;
        }
        Polynomial::new(&(), coeffs)
    }

    fn render(&self) -> String {
        crate::polyrat::render::render_poly(&self.poly(), crate::polyrat::render::Style::Text)
    }
}

/// A sum of `num / den` terms, kept apart so a vanishing denominator can be
/// named.
#[derive(Clone, Debug, Default)]
struct TermSum(Vec<(Sparse, Sparse)>);

impl TermSum {
    fn push(&mut self, num: Vec<(u64, Rational)>, den: Vec<(u64, Rational)>) {
        self.0.push((Sparse(num), Sparse(den)));
    }

    fn eval(&self, x: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (num, den) in &self.0 {
            let d = den.eval(x);
            if d.is_zero() {
                return Err(Error::DenominatorZero { x: x.to_string(), term: den.render() });
            }
            acc += num.eval(x) / d;
        }
        Ok(acc)
    }

    fn function(&self) -> RationalFunction<Rational> {
        sum_all(
            &(),
            self.0
                .iter()
                .map(|(num, den)| RationalFunction::new(num.poly(), den.poly()).expect("nonzero denominator")),
        )
    }

    fn resolve(&self, x: &Option<Rational>) -> Result<PartialSum> {
        Ok(match x {
            Some(x) => PartialSum::Value(self.eval(x)?),
            None => PartialSum::Function(self.function()),
        })
    }
}

/// `A^2 = U_1^2 / D` for `U_0 = 0`.
fn a_squared(spec: &RecurrenceSpec) -> Rational {
    spec.u1() * spec.u1() / Rational::from_integer(spec.discriminant())
}

fn require_unit_b(spec: &RecurrenceSpec) -> Result<()> {
    if !spec.u0().is_zero() {
        return Err(Error::NonZeroInitial);
    }
    if !spec.b().is_one() {
        return Err(Error::OutOfRange(format!("paired closed form needs b = 1, got b = {}", spec.b())));
    }
    Ok(())
}

fn binom(r: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(r as u64, k as u64))
}

fn sgn(e: u64) -> Rational {
    rational(sign_pow(e as i64))
}

/// Odd `r`, `b = 1`:
/// `A^{r-1} sum_{k<=(r-1)/2} C(r,k) (U_m x - (-1)^{kn} U_{m(n+1)} x^{n+1} - (-1)^{k(n+1)} U_{mn} x^{n+2})
///  / (1 - (-1)^k V_m x - x^2)` with `m = r - 2k`.
fn odd_terms(spec: &RecurrenceSpec, n: u64, r: u32) -> TermSum {
    let (u, v) = (SequenceHandle::u(spec), SequenceHandle::v(spec));
    let pref = Field::pow(&a_squared(spec), ((r - 1) / 2) as u64);
    let mut out = TermSum::default();
    for k in 0..=(r - 1) / 2 {
        let m = (r - 2 * k) as u64;
        let (kk, c) = (k as u64, &pref * binom(r, k));
        out.push(
            vec![
                (1, &c * u.term(m as i64)),
                (n + 1, -(&c * sgn(kk * n) * u.term((m * (n + 1)) as i64))),
                (n + 2, -(&c * sgn(kk * (n + 1)) * u.term((m * n) as i64))),
            ],
            vec![(0, rational(1)), (1, -(sgn(kk) * v.term(m as i64))), (2, rational(-1))],
        );
    }
    out
}

/// Even `r` as printed (summation bound `(r-1)/2`, which is `r/2 - 1`):
/// `A^r sum_k C(r,k) (V_m x - (-1)^{kn} V_{m(n+1)} x^{n+1} - (-1)^{k(n+1)} V_{mn} x^{n+2})
///  / (1 - (-1)^k V_m x + x^2) + A^r C(r,r/2) ((-1)^{r(n+1)/2} x^{n+1} - 1) / ((-1)^{r/2} x - 1)`.
fn even_terms_printed(spec: &RecurrenceSpec, n: u64, r: u32) -> TermSum {
    let v = SequenceHandle::v(spec);
    let pref = Field::pow(&a_squared(spec), (r / 2) as u64);
    let h = (r / 2) as u64;
    let mut out = TermSum::default();
    for k in 0..r / 2 {
        let m = (r - 2 * k) as u64;
        let (kk, c) = (k as u64, &pref * binom(r, k));
        out.push(
            vec![
                (1, &c * v.term(m as i64)),
                (n + 1, -(&c * sgn(kk * n) * v.term((m * (n + 1)) as i64))),
                (n + 2, -(&c * sgn(kk * (n + 1)) * v.term((m * n) as i64))),
            ],
            vec![(0, rational(1)), (1, -(sgn(kk) * v.term(m as i64))), (2, rational(1))],
        );
    }
    let c = &pref * binom(r, r / 2);
    out.push(vec![(0, -c.clone()), (n + 1, c * sgn(h * (n + 1)))], vec![(0, rational(-1)), (1, sgn(h))]);
    out
}

/// Even `r`, `b = 1`, as the paired geometric sums actually combine:
/// `A^r sum_{k<r/2} (-1)^k C(r,k) (2 - (-1)^k V_m x - (-1)^{k(n+1)} V_{m(n+1)} x^{n+1}
///   + (-1)^{kn} V_{mn} x^{n+2}) / (1 - (-1)^k V_m x + x^2)
///  + A^r (-1)^{r/2} C(r,r/2) (1 - ((-1)^{r/2} x)^{n+1}) / (1 - (-1)^{r/2} x)`.
fn even_terms(spec: &RecurrenceSpec, n: u64, r: u32) -> TermSum {
    let v = SequenceHandle::v(spec);
    let pref = Field::pow(&a_squared(spec), (r / 2) as u64);
    let h = (r / 2) as u64;
    let mut out = TermSum::default();
    for k in 0..r / 2 {
        let m = (r - 2 * k) as u64;
        let kk = k as u64;
        let c = &pref * binom(r, k) * sgn(kk);
        out.push(
            vec![
                (0, &c * rational(2)),
                (1, -(&c * sgn(kk) * v.term(m as i64))),
                (n + 1, -(&c * sgn(kk * (n + 1)) * v.term((m * (n + 1)) as i64))),
                (n + 2, &c * sgn(kk * n) * v.term((m * n) as i64)),
            ],
            vec![(0, rational(1)), (1, -(sgn(kk) * v.term(m as i64))), (2, rational(1))],
        );
    }
    let c = &pref * binom(r, r / 2) * sgn(h);
    out.push(
        vec![(0, c.clone()), (n + 1, -(c * sgn(h * (n + 1))))],
        vec![(0, rational(1)), (1, -sgn(h))],
    );
    out
}

/// The paired closed form for `b = 1`; other `b` go through
/// [`partial_sum_general_b`] and report [`Route::GeneralB`].
pub fn partial_sum_closed(q: &PartialSumQuery) -> Result<ClosedSum> {
    q.check()?;
    if !q.spec.u0().is_zero() {
        return Err(Error::NonZeroInitial);
    }
    if !q.spec.b().is_one() {
        return Ok(ClosedSum { sum: general_b(q)?, route: Route::GeneralB });
    }
    let terms = if q.r % 2 == 1 { odd_terms(&q.spec, q.n, q.r) } else { even_terms(&q.spec, q.n, q.r) };
    Ok(ClosedSum { sum: terms.resolve(&q.x)?, route: Route::UnitB })
}

/// Theorem-style display as printed, `b = 1` only. Odd `r` is the same form
/// [`partial_sum_closed`] uses; even `r` keeps the printed numerator and tail.
pub fn partial_sum_printed(q: &PartialSumQuery) -> Result<PartialSum> {
    q.check()?;
    require_unit_b(&q.spec)?;
    let terms = if q.r % 2 == 1 { odd_terms(&q.spec, q.n, q.r) } else { even_terms_printed(&q.spec, q.n, q.r) };
    terms.resolve(&q.x)
}

fn general_in<F: Field>(d: &BinetData<F>, n: u64, r: u32, x: &Option<Rational>) -> Result<PartialSum> {
    let ctx = d.ctx();
    let a_r = d.a_coef.pow(r as u64);
    match x {
        Some(x) => {
            let xf = F::from_rational(&ctx, x.clone());
            let one = F::one_in(&ctx);
            let mut acc = F::zero_in(&ctx);
            for k in 0..=r {
                let ratio = d.alpha.pow(k as u64).mul(&d.beta.pow((r - k) as u64)).mul(&xf);
                let den = ratio.sub(&one);
                // ratio 1: the geometric sum is n + 1 terms of 1
                let geo = if den.is_zero_elem() {
                    F::from_rational(&ctx, Rational::from_integer((n + 1).into()))
                } else {
                    ratio.pow(n + 1).sub(&one).div(&den)?
                };
                acc = acc.add(&geo.scale(&(binom(r, k) * sgn((r - k) as u64))));
            }
            let value = a_r.mul(&acc);
            let value = value.to_rational().ok_or_else(|| Error::NotRational(value.to_string()))?;
            Ok(PartialSum::Value(value))
        }
        None => {
            let terms = (0..=r).map(|k| {
                let lambda = d.alpha.pow(k as u64).mul(&d.beta.pow((r - k) as u64));
                let top = Polynomial::monomial(lambda.pow(n + 1), n as usize + 1).sub(&Polynomial::one(&ctx));
                let bottom = Polynomial::monomial(lambda, 1).sub(&Polynomial::one(&ctx));
                let c = a_r.scale(&(binom(r, k) * sgn((r - k) as u64)));
                RationalFunction::new(top.scale(&c), bottom).expect("nonzero denominator")
            });
            Ok(PartialSum::Function(sum_all(&ctx, terms).descend()?))
        }
    }
}

fn general_b(q: &PartialSumQuery) -> Result<PartialSum> {
    with_binet!(q.spec.binet(), |d| general_in(&d, q.n, q.r, &q.x))
}

/// `A^r sum_{k=0}^r (-1)^{r-k} C(r,k) ((lambda_k x)^{n+1} - 1) / (lambda_k x - 1)`,
/// `lambda_k = alpha^k beta^{r-k}`; exact for every `b`. A ratio `lambda_k x = 1`
/// contributes `n + 1`.
pub fn partial_sum_general_b(q: &PartialSumQuery) -> Result<PartialSum> {
    q.check()?;
    if !q.spec.u0().is_zero() {
        return Err(Error::NonZeroInitial);
    }
    general_b(q)
}

/// The `r = 1` corollary as printed: `x (U_1 - U_{n+1} x^n - U_n x^{n+2}) / (1 - V_1 x - x^2)`.
pub fn sn1_printed(spec: &RecurrenceSpec, n: u64) -> Result<RationalFunction<Rational>> {
    require_unit_b(spec)?;
    sn1_with(spec, n, (n + 1, n + 3))
}

/// `x (U_1 - U_{n+1} x^n - U_n x^{n+1}) / (1 - V_1 x - x^2)`, the `r = 1` case
/// of the odd form.
pub fn sn1_corrected(spec: &RecurrenceSpec, n: u64) -> Result<RationalFunction<Rational>> {
    require_unit_b(spec)?;
    sn1_with(spec, n, (n + 1, n + 2))
}

fn sn1_with(spec: &RecurrenceSpec, n: u64, (e1, e2): (u64, u64)) -> Result<RationalFunction<Rational>> {
    let u = SequenceHandle::u(spec);
    let v1 = SequenceHandle::v(spec).term(1);
    let num = Sparse(vec![(1, spec.u1().clone()), (e1, -u.term(n as i64 + 1)), (e2, -u.term(n as i64))]);
    let den = Sparse(vec![(0, rational(1)), (1, -v1), (2, rational(-1))]);
    RationalFunction::new(num.poly(), den.poly())
}

/// The eight partial sums of the generalized Pell sequence `P_1 = p, P_2 = q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HoradamVariant {
    /// `S_{4n} = q_{2n}(p q_{2n-1} + q q_{2n}) + p - q`
    S4n,
    /// `S_{4n-2} = q_{2n-1}(p q_{2n-2} + q q_{2n-1})`
    S4nMinus2,
    /// `S_{4n+1} = q_{2n}(p q_{2n} + q q_{2n+1}) - q`
    S4nPlus1,
    /// `S_{4n-1} = q_{2n}(p q_{2n-2} + q q_{2n-1}) - q`
    S4nMinus1,
    /// `S_{-4n} = q_{2n}(-p q_{2n+2} + q q_{2n+1}) + 3p - q`
    SNeg4n,
    /// `S_{-4n+2} = q_{2n}(-p q_{2n} + q q_{2n-1}) + 2p`
    SNeg4nPlus2,
    /// `S_{-4n+1} = q_{2n}(p q_{2n+1} - q q_{2n}) + p`
    SNeg4nPlus1,
    /// `S_{-4n-1} = q_{2n+1}(p q_{2n+2} - q q_{2n+1}) + 2p - q`
    SNeg4nMinus1,
}

impl HoradamVariant {
    pub const ALL: [HoradamVariant; 8] = [
        HoradamVariant::S4n,
        HoradamVariant::S4nMinus2,
        HoradamVariant::S4nPlus1,
        HoradamVariant::S4nMinus1,
        HoradamVariant::SNeg4n,
        HoradamVariant::SNeg4nPlus2,
        HoradamVariant::SNeg4nPlus1,
        HoradamVariant::SNeg4nMinus1,
    ];

    /// Signed subscript `m` of `S_m` at `n`.
    pub fn index(self, n: u64) -> i64 {
        let four = 4 * n as i64;
        match self {
            HoradamVariant::S4n => four,
            HoradamVariant::S4nMinus2 => four - 2,
            HoradamVariant::S4nPlus1 => four + 1,
            HoradamVariant::S4nMinus1 => four - 1,
            HoradamVariant::SNeg4n => -four,
            HoradamVariant::SNeg4nPlus2 => -four + 2,
            HoradamVariant::SNeg4nPlus1 => -four + 1,
            HoradamVariant::SNeg4nMinus1 => -four - 1,
        }
    }
}

fn q_seq(i: u64) -> Rational {
    SequenceHandle::u(&RecurrenceSpec::pell_q()).term(i as i64)
}

/// Printed right-hand side of a generalized Pell sum.
pub fn horadam_sums(p: &Rational, q: &Rational, variant: HoradamVariant, n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::OutOfRange("generalized Pell sums need n >= 1".into()));
    }
    let t = 2 * n;
    let (two, three) = (rational(2), rational(3));
    Ok(match variant {
        HoradamVariant::S4n => q_seq(t) * (p * q_seq(t - 1) + q * q_seq(t)) + p - q,
        HoradamVariant::S4nMinus2 => q_seq(t - 1) * (p * q_seq(t - 2) + q * q_seq(t - 1)),
        HoradamVariant::S4nPlus1 => q_seq(t) * (p * q_seq(t) + q * q_seq(t + 1)) - q,
        HoradamVariant::S4nMinus1 => q_seq(t) * (p * q_seq(t - 2) + q * q_seq(t - 1)) - q,
        HoradamVariant::SNeg4n => q_seq(t) * (-(p * q_seq(t + 2)) + q * q_seq(t + 1)) + three * p - q,
        HoradamVariant::SNeg4nPlus2 => q_seq(t) * (-(p * q_seq(t)) + q * q_seq(t - 1)) + two * p,
        HoradamVariant::SNeg4nPlus1 => q_seq(t) * (p * q_seq(t + 1) - q * q_seq(t)) + p,
        HoradamVariant::SNeg4nMinus1 => q_seq(t + 1) * (p * q_seq(t + 2) - q * q_seq(t + 1)) + two * p - q,
    })
}

/// `S_{4n-1}` with the constant that the direct sums support:
/// `q_{2n}(p q_{2n-2} + q q_{2n-1}) - p`.
pub fn horadam_s4n_minus1_corrected(p: &Rational, q: &Rational, n: u64) -> Result<Rational> {
    Ok(horadam_sums(p, q, HoradamVariant::S4nMinus1, n)? + q - p)
}

/// `S_m` or `S_{-m}` by summing terms of the generalized Pell sequence; the
/// negative side walks the recurrence backwards.
pub fn horadam_direct(p: &Rational, q: &Rational, variant: HoradamVariant, n: u64) -> Rational {
    let seq = SequenceHandle::u(&RecurrenceSpec::generalized_pell(p.clone(), q.clone()));
    let m = variant.index(n);
    if m >= 0 {
        let terms = seq.terms(m as usize + 1);
        terms[1..].iter().sum()
    } else {
        seq.terms_backward((-m) as usize + 1)[1..].iter().sum()
    }
}

/// `P_{-m}` by backward recurrence against
/// `-p (-1)^{m+2} p_{m+2} - q (-1)^{m+1} p_{m+1}`.
pub fn pell_reflection(p: &Rational, q: &Rational, m: u64) -> Comparison<Rational> {
    let lhs = SequenceHandle::u(&RecurrenceSpec::generalized_pell(p.clone(), q.clone())).term(-(m as i64));
    let pell = SequenceHandle::u(&RecurrenceSpec::pell());
    let rhs = -(p * sgn(m + 2) * pell.term(m as i64 + 2)) - q * sgn(m + 1) * pell.term(m as i64 + 1);
    Comparison::new(lhs, rhs)
}

/// `p`, `q` as rationals from integers.
pub fn pell_params(p: i64, q: i64) -> (Rational, Rational) {
    (rational(p), rational(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::ratio;

    fn fib() -> RecurrenceSpec {
        RecurrenceSpec::fibonacci()
    }

    fn value(s: PartialSum) -> Rational {
        s.value().cloned().expect("pointwise")
    }

    #[test]
    fn direct_examples() {
        let d = |spec, n, r, x| value(partial_sum_direct(&PartialSumQuery::at(spec, n, r, rational(x))).unwrap());
        assert_eq!(d(fib(), 5, 1, 1), rational(12));
        assert_eq!(d(fib(), 3, 2, 1), rational(6));
        assert_eq!(d(fib(), 0, 2, 7), rational(0));
        assert_eq!(d(RecurrenceSpec::pell(), 4, 1, 1), rational(20));
    }

    #[test]
    fn closed_examples() {
        let c = |spec, n, r, x| partial_sum_closed(&PartialSumQuery::at(spec, n, r, rational(x))).unwrap();
        let s = c(fib(), 5, 1, 1);
        assert_eq!((value(s.sum), s.route), (rational(12), Route::UnitB));
        assert_eq!(value(c(RecurrenceSpec::pell(), 4, 1, 1).sum), rational(20));
        let g = c(RecurrenceSpec::integers(1, 2, 0, 1).unwrap(), 4, 1, 1);
        assert_eq!((value(g.sum), g.route), (rational(10), Route::GeneralB));
    }

    #[test]
    fn symbolic_n1_is_x() {
        let s = partial_sum_closed(&PartialSumQuery::symbolic(fib(), 1, 1)).unwrap();
        let x = RationalFunction::from_poly(Polynomial::from_ints(&[0, 1]));
        assert_eq!(s.sum.function(), Some(&x));
    }

    #[test]
    fn symbolic_matches_direct_unit_b() {
        for spec in [fib(), RecurrenceSpec::pell()] {
            for r in 1..=4 {
                for n in 0..=12 {
                    let q = PartialSumQuery::symbolic(spec.clone(), n, r);
                    let closed = partial_sum_closed(&q).unwrap().sum;
                    assert_eq!(closed, partial_sum_direct(&q).unwrap(), "{spec} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn printed_even_form_fails() {
        let q = PartialSumQuery::symbolic(fib(), 3, 2);
        assert_ne!(partial_sum_printed(&q).unwrap(), partial_sum_direct(&q).unwrap());
        let q = PartialSumQuery::symbolic(fib(), 3, 3);
        assert_eq!(partial_sum_printed(&q).unwrap(), partial_sum_direct(&q).unwrap());
    }

    #[test]
    fn general_b_examples() {
        let s = RecurrenceSpec::integers(1, 2, 0, 1).unwrap();
        let g = |n, r, x: Rational| value(partial_sum_general_b(&PartialSumQuery::at(s.clone(), n, r, x)).unwrap());
        assert_eq!(g(4, 1, rational(1)), rational(10));
        assert_eq!(g(3, 2, rational(1)), rational(11));
        assert_eq!(g(9, 3, rational(0)), rational(0));
        let sym = partial_sum_general_b(&PartialSumQuery::symbolic(s.clone(), 6, 2)).unwrap();
        assert_eq!(sym, partial_sum_direct(&PartialSumQuery::symbolic(s, 6, 2)).unwrap());
    }

    #[test]
    fn unit_ratio() {
        // r = 2, Fibonacci: alpha beta = -1, so x = -1 makes the middle ratio 1.
        let q = PartialSumQuery::at(fib(), 4, 2, rational(-1));
        assert_eq!(partial_sum_general_b(&q).unwrap(), partial_sum_direct(&q).unwrap());
        assert!(matches!(partial_sum_closed(&q), Err(Error::DenominatorZero { .. })));
    }

    #[test]
    fn closed_requires_zero_start() {
        let q = PartialSumQuery::at(RecurrenceSpec::lucas(), 3, 1, rational(1));
        assert_eq!(partial_sum_closed(&q), Err(Error::NonZeroInitial));
        assert!(partial_sum_direct(&q).is_ok());
    }

    #[test]
    fn symbolic_limit() {
        let q = PartialSumQuery::symbolic(fib(), 33, 1);
        assert!(matches!(partial_sum_direct(&q), Err(Error::SymbolicTooLarge { .. })));
    }

    #[test]
    fn sn1_forms() {
        let direct = partial_sum_direct(&PartialSumQuery::symbolic(fib(), 0, 1)).unwrap();
        assert_eq!(PartialSum::Function(sn1_printed(&fib(), 0).unwrap()), direct);
        for n in 1..10 {
            let direct = partial_sum_direct(&PartialSumQuery::symbolic(fib(), n, 1)).unwrap();
            assert_eq!(PartialSum::Function(sn1_corrected(&fib(), n).unwrap()), direct);
            assert_ne!(PartialSum::Function(sn1_printed(&fib(), n).unwrap()), direct);
        }
    }

    #[test]
    fn horadam_examples() {
        let (p, q) = pell_params(1, 2);
        assert_eq!(horadam_sums(&p, &q, HoradamVariant::S4nMinus2, 1).unwrap(), rational(3));
        assert_eq!(horadam_direct(&p, &q, HoradamVariant::S4nMinus2, 1), rational(3));
        for v in HoradamVariant::ALL {
            let printed = horadam_sums(&p, &q, v, 1).unwrap();
            let direct = horadam_direct(&p, &q, v, 1);
            assert_eq!(printed == direct, v != HoradamVariant::S4nMinus1, "{v:?}");
        }
        assert_eq!(horadam_s4n_minus1_corrected(&p, &q, 1).unwrap(), horadam_direct(&p, &q, HoradamVariant::S4nMinus1, 1));
    }

    #[test]
    fn reflection() {
        for (p, q) in [(1, 2), (1, 3), (2, 5), (-3, 7)] {
            let (p, q) = pell_params(p, q);
            for m in 0..30 {
                assert!(pell_reflection(&p, &q, m).holds());
            }
        }
        let (p, q) = (ratio(1, 2), ratio(3, 4));
        assert!(pell_reflection(&p, &q, 5).holds());
    }
}

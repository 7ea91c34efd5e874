//! Direct evaluation of `U_n` and the companion `V_n`.
//!
//! [`SequenceHandle::term`] walks the recurrence (backwards for negative
//! indices); [`SequenceHandle::term_fast`] uses Lucas-pair doubling on the
//! fundamental solution. The two paths share no code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::qfield::{Field, Rational, RecurrenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// The sequence with the spec's own initial values.
    U,
    /// The companion `V_0 = 2, V_1 = a`, i.e. `alpha^n + beta^n`.
    V,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceHandle {
    spec: RecurrenceSpec,
    kind: Kind,
}

impl SequenceHandle {
    pub fn new(spec: RecurrenceSpec, kind: Kind) -> Self {
        SequenceHandle { spec, kind }
    }

    pub fn u(spec: &RecurrenceSpec) -> Self {
        Self::new(spec.clone(), Kind::U)
    }

    pub fn v(spec: &RecurrenceSpec) -> Self {
        Self::new(spec.clone(), Kind::V)
    }

    pub fn fibonacci() -> Self {
        Self::u(&RecurrenceSpec::fibonacci())
    }

    pub fn lucas() -> Self {
        Self::v(&RecurrenceSpec::fibonacci())
    }

    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn initial(&self) -> (Rational, Rational) {
        match self.kind {
            Kind::U => (self.spec.u0().clone(), self.spec.u1().clone()),
            Kind::V => (Rational::from_integer(2.into()), Rational::from_integer(self.spec.a().clone())),
        }
    }

    /// Exact `U_n` for any signed index.
    pub fn term(&self, n: i64) -> Rational {
        if n >= 0 {
            self.terms(n as usize + 1).pop().expect("nonempty")
        } else {
            self.terms_backward(n.unsigned_abs() as usize + 1).pop().expect("nonempty")
        }
    }

    /// `[U_0, U_{-1}, ..., U_{-(count-1)}]` from `U_{k-1} = (U_{k+1} - a U_k) / b`.
    pub fn terms_backward(&self, count: usize) -> Vec<Rational> {
        let a = Rational::from_integer(self.spec.a().clone());
        let b = Rational::from_integer(self.spec.b().clone());
        let (mut cur, mut next) = self.initial();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let prev = (&next - &a * &cur) / &b;
            next = std::mem::replace(&mut cur, prev);
            out.push(next.clone());
        }
        out
    }

    /// `[U_0, ..., U_{count-1}]` by forward iteration on integers scaled by the
    /// common denominator of the initial values.
    pub fn terms(&self, count: usize) -> Vec<Rational> {
        let (u0, u1) = self.initial();
        let scale = u0.denom().lcm(u1.denom());
        let mut x = u0.numer() * (&scale / u0.denom());
        let mut y = u1.numer() * (&scale / u1.denom());
        let (a, b) = (self.spec.a(), self.spec.b());
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(Rational::new(x.clone(), scale.clone()));
            let z = a * &y + b * &x;
            x = std::mem::replace(&mut y, z);
        }
        out
    }

    /// Same value as [`term`](Self::term) for `n >= 0`, in O(log n) big multiplications.
    pub fn term_fast(&self, n: u64) -> Rational {
        let (a, b) = (self.spec.a(), self.spec.b());
        let (un, un1, vn) = fundamental_pair(a, b, n);
        match self.kind {
            Kind::V => Rational::from_integer(vn),
            Kind::U => {
                // U_n = u1 W_n + u0 b W_{n-1} with W the (0, 1) solution, and
                // b W_{n-1} = W_{n+1} - a W_n.
                let shifted = &un1 - a * &un;
                let (u0, u1) = (self.spec.u0(), self.spec.u1());
                let scale = u0.denom().lcm(u1.denom());
                let numer = u1.numer() * (&scale / u1.denom()) * un + u0.numer() * (&scale / u0.denom()) * shifted;
                // Reduce against the small denominator only; a full rational
                // normalisation runs gcd on the huge numerator.
                let g = (&numer % &scale).gcd(&scale);
                Rational::new_raw(numer / &g, scale / g)
            }
        }
    }

    /// `U_n^r`.
    pub fn power_term(&self, n: i64, r: u32) -> Rational {
        Field::pow(&self.term(n), r as u64)
    }
}

/// `(W_n, W_{n+1}, V_n)` for the fundamental solution `W_0 = 0, W_1 = 1` and
/// the companion, by doubling:
/// `W_{2m} = W_m V_m`, `V_{2m} = V_m^2 - 2 Q^m` with `Q = -b`, and
/// `W_{m+1} = (a W_m + V_m)/2`, `V_{m+1} = (D W_m + a V_m)/2`.
pub fn fundamental_pair(a: &BigInt, b: &BigInt, n: u64) -> (BigInt, BigInt, BigInt) {
    let q = -b;
    let d = a * a + 4 * b;
    let (mut w, mut v, mut qm) = (BigInt::zero(), BigInt::from(2), BigInt::one());
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let w2 = &w * &v;
        let v2 = &v * &v - 2 * &qm;
        qm = &qm * &qm;
        w = w2;
        v = v2;
        if (n >> bit) & 1 == 1 {
            let w1 = (a * &w + &v) >> 1u32;
            let v1 = (&d * &w + a * &v) >> 1u32;
            w = w1;
            v = v1;
            qm *= &q;
        }
    }
    let next = (a * &w + &v) >> 1u32;
    (w, next, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{ratio, rational};
    use crate::with_binet;

    #[test]
    fn classical_values() {
        let fib = SequenceHandle::fibonacci();
        assert_eq!(fib.term(10), rational(55));
        assert_eq!(fib.term(-3), rational(2));
        let lucas = SequenceHandle::lucas();
        assert_eq!((0..5).map(|n| lucas.term(n)).collect::<Vec<_>>(), [2, 1, 3, 4, 7].map(rational));
        let pell = SequenceHandle::u(&RecurrenceSpec::pell());
        assert_eq!((1..6).map(|n| pell.term(n)).collect::<Vec<_>>(), [1, 2, 5, 12, 29].map(rational));
        let q = SequenceHandle::u(&RecurrenceSpec::pell_q());
        assert_eq!((0..6).map(|n| q.term(n)).collect::<Vec<_>>(), [1, 1, 3, 7, 17, 41].map(rational));
    }

    #[test]
    fn negative_fibonacci_reflection() {
        let fib = SequenceHandle::fibonacci();
        for n in 0..40i64 {
            let sign = if n % 2 == 0 { rational(-1) } else { rational(1) };
            assert_eq!(fib.term(-n), sign * fib.term(n));
        }
    }

    #[test]
    fn negative_indices_with_non_unit_b() {
        let h = SequenceHandle::u(&RecurrenceSpec::integers(1, 2, 0, 1).unwrap());
        // U_{-1} = (U_1 - U_0)/2
        assert_eq!(h.term(-1), ratio(1, 2));
        for n in 1..30i64 {
            // forward step from (U_{-n-1}, U_{-n}) reproduces U_{-n+1}
            let fwd = h.term(-n) * rational(1) + h.term(-n - 1) * rational(2);
            assert_eq!(fwd, h.term(-n + 1));
        }
    }

    #[test]
    fn fast_doubling_values() {
        let fib = SequenceHandle::fibonacci();
        assert_eq!(fib.term_fast(20), rational(6765));
        assert_eq!(fib.term_fast(16), rational(987));
        assert_eq!(fib.term_fast(8) * SequenceHandle::lucas().term_fast(8), rational(987));
        let h = SequenceHandle::u(&RecurrenceSpec::new(3, -5, ratio(2, 3), ratio(-7, 2)).unwrap());
        assert_eq!(h.term_fast(0), ratio(2, 3));
        assert_eq!(h.term_fast(1), ratio(-7, 2));
    }

    #[test]
    fn fast_agrees_with_iteration() {
        let specs = [
            RecurrenceSpec::fibonacci(),
            RecurrenceSpec::integers(1, 2, 0, 1).unwrap(),
            RecurrenceSpec::integers(3, -2, 2, 1).unwrap(),
            RecurrenceSpec::integers(1, -3, 2, 1).unwrap(),
            RecurrenceSpec::integers(-4, 7, 5, -3).unwrap(),
            RecurrenceSpec::new(2, 3, ratio(1, 2), ratio(5, 7)).unwrap(),
        ];
        for spec in specs {
            for kind in [Kind::U, Kind::V] {
                let h = SequenceHandle::new(spec.clone(), kind);
                let iter = h.terms(2001);
                for n in (0..=2000u64).step_by(37).chain([1, 2, 3, 1999, 2000]) {
                    assert_eq!(h.term_fast(n), iter[n as usize], "{spec} {kind:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn binet_agrees_with_recurrence() {
        for spec in [
            RecurrenceSpec::fibonacci(),
            RecurrenceSpec::pell(),
            RecurrenceSpec::integers(1, 2, 2, 1).unwrap(),
            RecurrenceSpec::integers(3, -2, 0, 1).unwrap(),
            RecurrenceSpec::new(1, -3, ratio(-1, 3), rational(4)).unwrap(),
        ] {
            let u = SequenceHandle::u(&spec).terms(65);
            let v = SequenceHandle::v(&spec).terms(65);
            with_binet!(spec.binet(), |d| {
                for n in 0..=64u64 {
                    assert_eq!(d.term(n).to_rational().unwrap(), u[n as usize]);
                    assert_eq!(d.companion_term(n).to_rational().unwrap(), v[n as usize]);
                }
            });
        }
    }

    #[test]
    fn powers() {
        let fib = SequenceHandle::fibonacci();
        assert_eq!(fib.power_term(5, 3), rational(125));
        assert_eq!(fib.power_term(4, 4), rational(81));
        assert_eq!(fib.power_term(7, 1), fib.term(7));
    }
}

use crate::qfield::Field;

/// Truncated power series: exactly `order()` known coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> PowerSeries<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Cauchy product truncated to the shorter order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..n)
            .map(|i| {
                (0..=i).fold(F::zero_in(&self.coeffs[0].ctx()), |acc, j| {
                    acc.add(&self.coeffs[j].mul(&other.coeffs[i - j]))
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}

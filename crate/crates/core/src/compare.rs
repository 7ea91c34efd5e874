use std::fmt;

/// Both sides of an identity, evaluated independently.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Comparison<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Comparison { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl<T: fmt::Display> fmt::Display for Comparison<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

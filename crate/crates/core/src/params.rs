use crate::error::{Error, Result};
use crate::scalar::{Field, Rat};

/// Logarithmic parameter triple: `alpha = ln a`, `beta = ln b`, `gamma = ln c`.
///
/// Every identity in this crate depends on `a, b, c` only through their
/// logarithms, so the parameters are stored (and supplied) as logarithms.
#[derive(Debug, Clone, PartialEq)]
pub struct Params<T = Rat> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
}

impl<T: Field> Params<T> {
    /// Two-parameter triple with `gamma = 1` (i.e. `c = e`).
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        Self::with_gamma(alpha, beta, T::one())
    }

    pub fn with_gamma(alpha: T, beta: T, gamma: T) -> Result<Self> {
        if (alpha.clone() + beta.clone()).is_zero() {
            return Err(Error::InvalidParams("ln a + ln b must be non-zero".into()));
        }
        Ok(Params { alpha, beta, gamma })
    }

    /// `a = e, b = 1, c = e`: the classical poly-Bernoulli case.
    pub fn classical() -> Self {
        Params { alpha: T::one(), beta: T::zero(), gamma: T::one() }
    }

    /// `ln a + ln b`.
    pub fn log_ab(&self) -> T {
        self.alpha.clone() + self.beta.clone()
    }

    /// Converts every component into another field.
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Params<U> {
        Params { alpha: f(&self.alpha), beta: f(&self.beta), gamma: f(&self.gamma) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn rejects_zero_log_ab() {
        assert!(matches!(Params::new(rat(1), rat(-1)), Err(Error::InvalidParams(_))));
        let p = Params::new(ratio(1, 3), ratio(1, 6)).unwrap();
        assert_eq!(p.log_ab(), ratio(1, 2));
        assert_eq!(p.gamma, rat(1));
    }
}

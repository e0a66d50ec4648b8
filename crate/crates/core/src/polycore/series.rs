use num_traits::One;

use super::{ExactScalar, MultiPoly};
use crate::error::{Error, Result};

/// A multivariate power series known up to (and including) total degree `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: MultiPoly,
    bound: u32,
}

impl TruncatedSeries {
    pub fn new(poly: MultiPoly, bound: u32) -> Self {
        TruncatedSeries { poly: poly.truncate(bound), bound }
    }

    pub fn one(nvars: usize, bound: u32) -> Self {
        TruncatedSeries::new(MultiPoly::one(nvars), bound)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.bound.min(other.bound);
        TruncatedSeries { poly: self.poly.mul_truncated(&other.poly, Some(bound)), bound }
    }

    /// Multiplies by a polynomial, keeping this series' bound.
    pub fn mul_poly(&self, p: &MultiPoly) -> TruncatedSeries {
        TruncatedSeries { poly: self.poly.mul_truncated(p, Some(self.bound)), bound: self.bound }
    }

    pub fn homogeneous_component(&self, n: u32) -> MultiPoly {
        self.poly.homogeneous_component(n)
    }

    /// Multiplicative inverse of a series with constant term 1, via the
    /// geometric series `sum_j (1 - S)^j`. Since `1 - S` has no constant term,
    /// `bound + 1` summands are enough.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c = self.poly.constant_term();
        if !c.is_one() {
            return Err(Error::NotInvertible(c.to_string()));
        }
        let nvars = self.nvars();
        let u = &MultiPoly::one(nvars) - &self.poly;
        let mut acc = MultiPoly::one(nvars);
        let mut power = MultiPoly::one(nvars);
        for _ in 0..self.bound {
            power = power.mul_truncated(&u, Some(self.bound));
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(TruncatedSeries { poly: acc, bound: self.bound })
    }

    /// True if this series equals `1` up to its bound.
    pub fn is_one(&self) -> bool {
        self.poly == MultiPoly::one(self.nvars())
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.poly.constant_term()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// Functional form of [`TruncatedSeries::inverse`].
pub fn series_inverse(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> ExactScalar {
        ExactScalar::from(n)
    }

    #[test]
    fn inverse_of_one() {
        let one = TruncatedSeries::one(2, 5);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inverse_is_geometric_series() {
        let s = TruncatedSeries::new(MultiPoly::linear(q(1), &[q(1)]), 3);
        let inv = s.inverse().unwrap();
        let expected = MultiPoly::from_terms(1, [([0u32], q(1)), ([1], q(-1)), ([2], q(1)), ([3], q(-1))]).unwrap();
        assert_eq!(inv.poly(), &expected);
    }

    #[test]
    fn non_unit_constant_term_is_rejected() {
        let s = TruncatedSeries::new(MultiPoly::linear(q(2), &[q(1)]), 3);
        assert_eq!(s.inverse(), Err(Error::NotInvertible("2".into())));
    }

    #[test]
    fn product_bound_is_minimum() {
        let a = TruncatedSeries::new(MultiPoly::linear(q(1), &[q(1), q(1)]), 4);
        let b = TruncatedSeries::new(MultiPoly::linear(q(1), &[q(2), q(0)]), 2);
        let c = a.mul(&b);
        assert_eq!(c.bound(), 2);
        assert!(c.poly().degree().unwrap() <= 2);
    }
}

//! Exact sparse polynomial arithmetic and the symmetric-function building
//! blocks used by the enumerative formulas.

mod poly;
mod scalar;
mod series;
mod symmetric;

pub use poly::{product_coefficient, ExponentVector, MultiPoly};
pub use scalar::ExactScalar;
pub use series::{series_inverse, TruncatedSeries};
pub use symmetric::{
    compositions, elem_sym, homogeneous_component, hyperplane_class, psi_coefficient, staircase, vandermonde,
    weighted_linear_product,
};

pub(crate) use symmetric::fold_product;

use num_bigint::BigInt;
use num_traits::Zero;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;
    use num_bigint::BigInt;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(5, 6), BigInt::from(0));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }
}

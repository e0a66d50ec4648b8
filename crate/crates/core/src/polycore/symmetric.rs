//! Building blocks shared by every Chern-class computation: products of
//! weighted linear forms, the Vandermonde polynomial, elementary symmetric
//! polynomials and single-coefficient extraction.

use num_traits::{One, Zero};

use super::{ExactScalar, ExponentVector, MultiPoly};
use crate::error::{Error, Result};

/// All `v` in `N^parts` with `v_0 + ... + v_{parts-1} = total`, in
/// lexicographically decreasing order (`(total, 0, ..)` first).
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Coefficient of `x^i` in `p`.
pub fn psi_coefficient(p: &MultiPoly, i: &ExponentVector) -> Result<ExactScalar> {
    p.coefficient(i)
}

/// Sum of the terms of `p` of total degree exactly `n`.
pub fn homogeneous_component(p: &MultiPoly, n: u32) -> MultiPoly {
    p.homogeneous_component(n)
}

/// `prod_{|v| = d} (c + <v, x>)` over `v` in `N^{k+1}`, where `c = 1` when
/// `affine` and `c = 0` otherwise.
///
/// The affine product is the total Chern class of `Sym^d` of a rank `k+1`
/// bundle with Chern roots `x_0..x_k`; the linear product is its top Chern
/// class. With `bound`, every partial product is truncated at that total
/// degree, which is exact for any coefficient of degree `<= bound`.
pub fn weighted_linear_product(k: u32, d: u32, affine: bool, bound: Option<u32>) -> Result<MultiPoly> {
    if d == 0 {
        return Err(Error::param("d must be at least 1"));
    }
    let nvars = k as usize + 1;
    let constant = if affine { ExactScalar::one() } else { ExactScalar::zero() };
    let factors = compositions(d, nvars).into_iter().map(|v| {
        let coeffs: Vec<ExactScalar> = v.into_iter().map(|a| ExactScalar::from(a as i64)).collect();
        MultiPoly::linear(constant.clone(), &coeffs)
    });
    Ok(fold_product(nvars, factors, bound))
}

/// Left-to-right product with per-step truncation.
pub(crate) fn fold_product<I>(nvars: usize, factors: I, bound: Option<u32>) -> MultiPoly
where
    I: IntoIterator<Item = MultiPoly>,
{
    let start = match bound {
        Some(b) => MultiPoly::one(nvars).truncate(b),
        None => MultiPoly::one(nvars),
    };
    factors.into_iter().fold(start, |acc, f| acc.mul_truncated(&f, bound))
}

/// `prod_{i<j} (x_i - x_j)` in `k + 1` variables.
pub fn vandermonde(k: u32) -> MultiPoly {
    let nvars = k as usize + 1;
    let mut v = MultiPoly::one(nvars);
    for i in 0..nvars {
        for j in i + 1..nvars {
            v = &v * &(&MultiPoly::var(nvars, i) - &MultiPoly::var(nvars, j));
        }
    }
    v
}

/// The `j`-th elementary symmetric polynomial in `n` variables.
pub fn elem_sym(j: u32, n: u32) -> Result<MultiPoly> {
    if j > n {
        return Err(Error::param(format!("elementary symmetric degree {j} exceeds {n} variables")));
    }
    let nvars = n as usize;
    let terms = itertools::Itertools::combinations(0..nvars, j as usize).map(|subset| {
        let mut e = vec![0u32; nvars];
        for i in subset {
            e[i] = 1;
        }
        (e, ExactScalar::one())
    });
    MultiPoly::from_terms(nvars, terms)
}

/// `x_0 + ... + x_k`, the Plücker hyperplane class in Chern roots.
pub fn hyperplane_class(k: u32) -> MultiPoly {
    elem_sym(1, k + 1).expect("1 <= k + 1")
}

/// The exponent vector `(r, r-1, ..., r-k)` of the point class after
/// multiplication by the Vandermonde polynomial.
pub fn staircase(r: u32, k: u32) -> ExponentVector {
    ExponentVector::from((0..=k).map(|i| r - i).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> ExactScalar {
        ExactScalar::from(n)
    }

    fn lin(c: i64, a: &[i64]) -> MultiPoly {
        MultiPoly::linear(q(c), &a.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2), vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
    }

    #[test]
    fn q_1_3_matches_closed_form() {
        // 9 x0 x1 (2x0 + x1)(x0 + 2x1)
        let expected = [lin(0, &[1, 0]), lin(0, &[0, 1]), lin(0, &[2, 1]), lin(0, &[1, 2])]
            .iter()
            .fold(MultiPoly::constant(2, q(9)), |acc, f| &acc * f);
        assert_eq!(weighted_linear_product(1, 3, false, None).unwrap(), expected);
    }

    #[test]
    fn q_1_1_is_x0_x1() {
        let p = weighted_linear_product(1, 1, false, None).unwrap();
        assert_eq!(p, &MultiPoly::var(2, 0) * &MultiPoly::var(2, 1));
    }

    #[test]
    fn affine_product_k1_d2() {
        let expected = &(&lin(1, &[2, 0]) * &lin(1, &[1, 1])) * &lin(1, &[0, 2]);
        assert_eq!(weighted_linear_product(1, 2, true, None).unwrap(), expected);
    }

    #[test]
    fn zero_degree_rejected() {
        assert!(weighted_linear_product(1, 0, true, None).is_err());
    }

    #[test]
    fn vandermonde_small_cases() {
        assert_eq!(vandermonde(0), MultiPoly::one(1));
        assert_eq!(vandermonde(1), lin(0, &[1, -1]));
        let v2 = &(&lin(0, &[1, -1, 0]) * &lin(0, &[1, 0, -1])) * &lin(0, &[0, 1, -1]);
        assert_eq!(vandermonde(2), v2);
        assert_eq!(vandermonde(3).degree(), Some(6));
    }

    #[test]
    fn elementary_symmetric() {
        assert_eq!(elem_sym(1, 2).unwrap(), lin(0, &[1, 1]));
        let e2 = MultiPoly::from_terms(3, [([1u32, 1, 0], q(1)), ([1, 0, 1], q(1)), ([0, 1, 1], q(1))]).unwrap();
        assert_eq!(elem_sym(2, 3).unwrap(), e2);
        assert_eq!(elem_sym(0, 5).unwrap(), MultiPoly::one(5));
        assert!(elem_sym(3, 2).is_err());
    }

    #[test]
    fn psi_of_cubic_threefold_product() {
        let x0 = MultiPoly::var(2, 0);
        let x1 = MultiPoly::var(2, 1);
        let e = &x0 + &x1;
        let p = &(&weighted_linear_product(1, 3, false, None).unwrap() * &(&e * &e)) * &vandermonde(1);
        assert_eq!(psi_coefficient(&p, &[4, 3].into()).unwrap(), q(45));
        assert_eq!(psi_coefficient(&x0, &[1].into()), Err(Error::Dimension { expected: 2, found: 1 }));
        let sq = &e * &e;
        assert_eq!(psi_coefficient(&sq, &[2, 1].into()).unwrap(), q(0));
        assert_eq!(psi_coefficient(&MultiPoly::var(1, 0), &[1].into()).unwrap(), q(1));
    }

    #[test]
    fn homogeneous_parts_of_product() {
        let p = &lin(1, &[1, 0]) * &lin(1, &[0, 1]);
        assert_eq!(homogeneous_component(&p, 1), lin(0, &[1, 1]));
        assert_eq!(homogeneous_component(&p, 2), &MultiPoly::var(2, 0) * &MultiPoly::var(2, 1));
        assert!(homogeneous_component(&p, 3).is_zero());
    }

    #[test]
    fn staircase_exponents() {
        assert_eq!(staircase(6, 2), ExponentVector::from([6, 5, 4]));
    }
}

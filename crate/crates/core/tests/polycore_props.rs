use std::collections::BTreeMap;

use enumgeom::polycore::{
    psi_coefficient, series_inverse, vandermonde, weighted_linear_product, ExactScalar, ExponentVector, MultiPoly,
    TruncatedSeries,
};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = (Vec<u32>, i64)> {
    (prop::collection::vec(0u32..4, 3), -9i64..=9)
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(term(), 0..=8)
        .prop_map(|ts| MultiPoly::from_terms(3, ts.into_iter().map(|(e, c)| (e, ExactScalar::from(c)))).unwrap())
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (poly(), 1u32..6).prop_map(|(p, bound)| {
        let shift = MultiPoly::one(3) - MultiPoly::constant(3, p.constant_term());
        TruncatedSeries::new(p + shift, bound)
    })
}

/// Naive dense product with every pair of terms, no early exit.
fn naive_product(a: &MultiPoly, b: &MultiPoly) -> BTreeMap<Vec<u32>, ExactScalar> {
    let mut out: BTreeMap<Vec<u32>, ExactScalar> = BTreeMap::new();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let e: Vec<u32> = ea.as_slice().iter().zip(eb.as_slice()).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != ExactScalar::from(0));
    out
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_matches_dense_oracle(a in poly(), b in poly()) {
        let fast = &a * &b;
        let naive = naive_product(&a, &b);
        prop_assert_eq!(fast.num_terms(), naive.len());
        for (e, c) in naive {
            prop_assert_eq!(fast.coefficient(&ExponentVector::from(e)).unwrap(), c);
        }
    }

    #[test]
    fn psi_is_convolution(a in poly(), b in poly(), target in prop::collection::vec(0u32..6, 3)) {
        let mut conv = ExactScalar::from(0);
        for i in 0..=target[0] {
            for j in 0..=target[1] {
                for k in 0..=target[2] {
                    let left = ExponentVector::from(vec![i, j, k]);
                    let right = ExponentVector::from(vec![target[0] - i, target[1] - j, target[2] - k]);
                    conv += psi_coefficient(&a, &left).unwrap() * psi_coefficient(&b, &right).unwrap();
                }
            }
        }
        let t = ExponentVector::from(target);
        prop_assert_eq!(psi_coefficient(&(&a * &b), &t).unwrap(), conv);
    }

    #[test]
    fn series_inverse_is_inverse(s in unit_series()) {
        let inv = series_inverse(&s).unwrap();
        prop_assert!(s.mul(&inv).is_one());
    }

    #[test]
    fn truncated_product_equals_truncated_full_product(k in 0u32..3, d in 1u32..4, affine: bool, bound in 0u32..8) {
        let full = weighted_linear_product(k, d, affine, None).unwrap();
        let cut = weighted_linear_product(k, d, affine, Some(bound)).unwrap();
        prop_assert_eq!(cut, full.truncate(bound));
    }
}

#[test]
fn vandermonde_is_alternating() {
    for k in 1..=3u32 {
        let v = vandermonde(k);
        let n = k as usize + 1;
        for i in 0..n {
            for j in i + 1..n {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, j);
                assert_eq!(v.permute_vars(&perm).unwrap(), -&v, "k={k}, swap {i}<->{j}");
            }
        }
    }
}

#[test]
fn vandermonde_evaluates_to_difference_product() {
    let pts: Vec<ExactScalar> = [2, -3, 7, 5].into_iter().map(ExactScalar::from).collect();
    let mut expected = ExactScalar::from(1);
    for i in 0..4 {
        for j in i + 1..4 {
            expected *= &(&pts[i] - &pts[j]);
        }
    }
    assert_eq!(vandermonde(3).evaluate(&pts).unwrap(), expected);
}

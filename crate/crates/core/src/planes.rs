//! Degrees of loci of hypersurfaces and complete intersections containing a
//! `k`-plane, and Plücker-degree integrals over Fano schemes of `k`-planes.
//!
//! Everything is computed in the Chern roots `x_0, ..., x_k` of the dual
//! tautological bundle on `G(k, r)`. A symmetric class of top degree is
//! integrated by multiplying with the Vandermonde polynomial and reading off
//! the coefficient of `x_0^r x_1^(r-1) ... x_k^(r-k)`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polycore::{
    binomial, elem_sym, fold_product, hyperplane_class, product_coefficient, staircase, vandermonde,
    weighted_linear_product, ExactScalar, MultiPoly,
};
use crate::weights::TorusWeights;

/// Type `(d_1, ..., d_m)` of a complete intersection in `P^r`, together with
/// the dimension `k` of the linear subspaces of interest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    degrees: Vec<u32>,
    r: u32,
    k: u32,
}

impl ProblemSpec {
    pub fn new(degrees: Vec<u32>, r: u32, k: u32) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::param("degree list must be non-empty"));
        }
        if let Some(d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::param(format!("every degree must be at least 2, got {d}")));
        }
        if r < 3 {
            return Err(Error::param(format!("ambient dimension r must be at least 3, got {r}")));
        }
        if k < 1 {
            return Err(Error::param("plane dimension k must be at least 1"));
        }
        if k >= r {
            return Err(Error::param(format!("plane dimension k={k} must be below r={r}")));
        }
        let spec = ProblemSpec { degrees, r, k };
        if spec.rank_big().to_i64().is_none() {
            return Err(Error::param("degrees too large"));
        }
        Ok(spec)
    }

    /// Shorthand for a hypersurface of degree `d`.
    pub fn hypersurface(d: u32, r: u32, k: u32) -> Result<Self> {
        Self::new(vec![d], r, k)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.degrees.len() as u32
    }

    /// Same spec with degrees sorted ascending.
    pub fn normalized(&self) -> ProblemSpec {
        let mut degrees = self.degrees.clone();
        degrees.sort_unstable();
        ProblemSpec { degrees, ..*self }
    }

    fn rank_big(&self) -> BigInt {
        let k = self.k as i64;
        self.degrees.iter().map(|&d| binomial(d as i64 + k, k)).sum()
    }

    /// `sum_j C(d_j + k, k)`, the rank of `⊕ Sym^{d_j} S*`.
    pub fn rank(&self) -> i64 {
        self.rank_big().to_i64().expect("checked in constructor")
    }

    /// `dim G(k, r) = (k+1)(r-k)`.
    pub fn grassmannian_dim(&self) -> i64 {
        (self.k as i64 + 1) * (self.r as i64 - self.k as i64)
    }

    /// Codimension of the locus of members containing a `k`-plane.
    pub fn gamma(&self) -> i64 {
        self.rank() - self.grassmannian_dim()
    }

    /// Expected dimension of the Fano scheme of `k`-planes.
    pub fn delta(&self) -> i64 {
        -self.gamma()
    }

    pub fn two_k_below_r(&self) -> bool {
        2 * self.k < self.r
    }

    /// `r >= 2k + m`: the Fano scheme of a general member is non-empty (given `delta >= 0`).
    pub fn nonempty_regime(&self) -> bool {
        self.r >= 2 * self.k + self.m()
    }

    /// Total degree `r + (r-1) + ... + (r-k)` of the extraction monomial.
    pub fn target_degree(&self) -> u32 {
        (0..=self.k).map(|i| self.r - i).sum()
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}), r={}, k={})", self.degrees.iter().join(","), self.r, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegimeReport {
    pub gamma: i64,
    pub delta: i64,
    /// The Fano scheme of `k`-planes of a general member is empty.
    pub empty: bool,
    /// `delta` when the Fano scheme is non-empty.
    pub fano_dimension: Option<i64>,
}

pub fn regime_report(spec: &ProblemSpec) -> RegimeReport {
    let gamma = spec.gamma();
    let empty = gamma > 0 || 2 * spec.k() > spec.r() - spec.m().min(spec.r());
    RegimeReport { gamma, delta: -gamma, empty, fano_dimension: (!empty).then_some(-gamma) }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::regime(what))
    }
}

fn check_plane_locus(d: u32, r: u32, k: u32) -> Result<ProblemSpec> {
    let spec = ProblemSpec::hypersurface(d, r, k)?;
    require(spec.gamma() > 0, "gamma must be positive")?;
    require(spec.two_k_below_r(), "2k must be less than r")?;
    Ok(spec)
}

/// Degree-`(k+1)(r-k)` part of `prod_{|v|=d} (1 + <v, x>)`: the top Chern
/// class of `Sym^d S*` on `G(k, r)`.
pub fn tau_poly(d: u32, r: u32, k: u32) -> Result<MultiPoly> {
    let spec = check_plane_locus(d, r, k)?;
    let top = spec.grassmannian_dim() as u32;
    Ok(weighted_linear_product(k, d, true, Some(top))?.homogeneous_component(top))
}

fn positive_integer(value: ExactScalar, what: &str) -> Result<BigInt> {
    match value.to_integer() {
        Some(n) if n > BigInt::zero() => Ok(n),
        _ => Err(Error::Inconsistency(format!("{what} evaluated to {value}, expected a positive integer"))),
    }
}

/// Degree of the locus of degree-`d` hypersurfaces in `P^r` containing a
/// `k`-plane, by coefficient extraction against the Vandermonde polynomial.
///
/// Requires `gamma > 0`, `2k < r` and `d >= 3`. Quadrics are rejected: a
/// smooth quadric either contains no `k`-plane or two families of them, so
/// the locus is not the one this formula counts.
pub fn deg_planes_dm(d: u32, r: u32, k: u32) -> Result<BigInt> {
    require(d >= 3, "d must be at least 3 (quadrics contain two families of planes)")?;
    let spec = check_plane_locus(d, r, k)?;
    let tau = tau_poly(d, r, k)?;
    let coeff = product_coefficient(&tau, &vandermonde(k), &staircase(spec.r(), k))?;
    positive_integer(coeff, "coefficient extraction")
}

/// All `(k+1)`-subsets of `{0, ..., r}`: the torus-fixed coordinate `k`-planes.
pub fn fixed_planes(r: u32, k: u32) -> Vec<Vec<usize>> {
    (0..=r as usize).combinations(k as usize + 1).collect()
}

/// Bott residue sum over the coordinate `k`-planes of `G(k, r)`:
/// `sum_I tau(t_I) / prod_{i in I, j not in I} (t_i - t_j)`.
///
/// Each summand is a rational number; the sum must be a positive integer
/// independent of the weights, and anything else is reported as an
/// inconsistency.
pub fn deg_planes_bott(d: u32, r: u32, k: u32, t: &TorusWeights) -> Result<BigInt> {
    require(d >= 3, "d must be at least 3 (quadrics contain two families of planes)")?;
    check_plane_locus(d, r, k)?;
    if t.len() != r as usize + 1 {
        return Err(Error::Dimension { expected: r as usize + 1, found: t.len() });
    }
    if !t.pairwise_distinct() {
        return Err(Error::SingularWeights("weights must be pairwise distinct".into()));
    }
    let tau = tau_poly(d, r, k)?;
    let total = bott_sum(&tau, r, k, t)?;
    positive_integer(total, "Bott residue sum")
}

fn bott_sum(class: &MultiPoly, r: u32, k: u32, t: &TorusWeights) -> Result<ExactScalar> {
    let t = t.as_slice();
    let contributions = fixed_planes(r, k)
        .into_par_iter()
        .map(|subset| {
            let local: Vec<ExactScalar> = subset.iter().map(|&i| t[i].clone()).collect();
            let numerator = class.evaluate(&local)?;
            let mut euler = ExactScalar::from(1);
            for &i in &subset {
                for (j, tj) in t.iter().enumerate() {
                    if !subset.contains(&j) {
                        euler *= &(&t[i] - tj);
                    }
                }
            }
            Ok(numerator / euler)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(contributions.into_iter().sum())
}

/// `Q_{k,d} = prod_{|v|=d} <v, x>`, the top Chern class of `Sym^d S*`.
pub fn q_poly(k: u32, degrees: &[u32]) -> Result<MultiPoly> {
    let nvars = k as usize + 1;
    let factors = degrees.iter().map(|&d| weighted_linear_product(k, d, false, None)).collect::<Result<Vec<_>>>()?;
    Ok(fold_product(nvars, factors, None))
}

/// Preconditions of the complete-intersection degree formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiPreconditions {
    pub gamma: i64,
    /// `C(d_m + k, k) - gamma`, the dimension of the Fano scheme of the
    /// complete intersection `X` of type `(d_1, ..., d_{m-1})`.
    pub rho: i64,
    /// `h^0(X, O_X(d_m))` from the Koszul resolution of `X`.
    pub h0_last_degree: BigInt,
    /// `dim |O_X(d_m)| > gamma`.
    pub linear_system_large_enough: bool,
}

/// `h^0(X, O_X(n))` for a complete intersection `X` of type `degrees` in `P^r`
/// of positive dimension, as the alternating sum over the Koszul complex.
pub fn complete_intersection_h0(degrees: &[u32], r: u32, n: u32) -> BigInt {
    let mut total = BigInt::zero();
    for size in 0..=degrees.len() {
        for subset in degrees.iter().combinations(size) {
            let shift: i64 = subset.iter().map(|&&d| d as i64).sum();
            let term = binomial(n as i64 - shift + r as i64, r as i64);
            if size % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

pub fn ci_preconditions(spec: &ProblemSpec) -> CiPreconditions {
    let (&last, rest) = spec.degrees().split_last().expect("non-empty degrees");
    let gamma = spec.gamma();
    let rho = binomial(last as i64 + spec.k() as i64, spec.k() as i64).to_i64().expect("fits") - gamma;
    let h0 = complete_intersection_h0(rest, spec.r(), last);
    let linear_system_large_enough = &h0 - 1 > BigInt::from(gamma);
    CiPreconditions { gamma, rho, h0_last_degree: h0, linear_system_large_enough }
}

/// Degree, inside `|O_X(d_m)|`, of the locus of members containing a
/// `k`-plane, where `X` is a general complete intersection of type
/// `(d_1, ..., d_{m-1})`: the extraction coefficient of
/// `Q_{k,(d_1..d_{m-1})} * theta * V`, with `theta` the degree-`rho` Chern
/// class of `Sym^{d_m} S*`.
///
/// The last listed degree plays the role of `d_m`.
pub fn deg_ci_planes(spec: &ProblemSpec) -> Result<BigInt> {
    let pre = ci_preconditions(spec);
    require(pre.gamma > 0, "gamma must be positive")?;
    require(pre.rho >= 0, "Fano scheme of the residual complete intersection must be non-empty (rho >= 0)")?;
    // a smooth complete intersection of dimension n contains no linear space of dimension > n/2
    require(
        spec.r() + 1 >= 2 * spec.k() + spec.m(),
        "residual complete intersection must have dimension at least 2k (r >= 2k + m - 1)",
    )?;
    require(pre.linear_system_large_enough, "dim |O_X(d_m)| must exceed gamma")?;
    if spec.m() == 1 {
        require(spec.degrees()[0] >= 3, "d must be at least 3 (quadrics contain two families of planes)")?;
        require(spec.two_k_below_r(), "2k must be less than r")?;
    }
    let k = spec.k();
    let (&last, rest) = spec.degrees().split_last().expect("non-empty degrees");
    let rho = pre.rho as u32;
    let theta = weighted_linear_product(k, last, true, Some(rho))?.homogeneous_component(rho);
    let q = q_poly(k, rest)?;
    let factor = &q * &vandermonde(k);
    debug_assert_eq!(factor.degree().unwrap_or(0) + rho, spec.target_degree(), "degree bookkeeping for {spec}");
    let coeff = product_coefficient(&factor, &theta, &staircase(spec.r(), k))?;
    positive_integer(coeff, "complete-intersection coefficient extraction")
}

fn check_fano(spec: &ProblemSpec) -> Result<()> {
    require(spec.delta() >= 0, "delta must be non-negative")?;
    require(spec.nonempty_regime(), "r must be at least 2k + m")
}

/// `int_G c * [F]` for a homogeneous class `c` of degree `delta`, where `F` is
/// the Fano scheme of `k`-planes.
fn integrate_over_fano(spec: &ProblemSpec, class: &MultiPoly) -> Result<ExactScalar> {
    let k = spec.k();
    let q = q_poly(k, spec.degrees())?;
    let factor = &q * &vandermonde(k);
    let total = factor.degree().unwrap_or(0) + class.degree().unwrap_or(0);
    if total != spec.target_degree() {
        return Err(Error::Inconsistency(format!(
            "degree bookkeeping failed for {spec}: {total} != {}",
            spec.target_degree()
        )));
    }
    product_coefficient(&factor, class, &staircase(spec.r(), k))
}

/// Plücker degree of the Fano scheme `F_k(X)` of a general complete
/// intersection: extraction coefficient of `Q_{k,d} * e^delta * V` with
/// `e = x_0 + ... + x_k`.
pub fn deg_fano(spec: &ProblemSpec) -> Result<BigInt> {
    check_fano(spec)?;
    let e = hyperplane_class(spec.k()).pow(spec.delta() as u32);
    positive_integer(integrate_over_fano(spec, &e)?, "Fano degree extraction")
}

/// `int_F c_2(S*)` for a Fano surface (`delta = 2`).
pub fn c2_fano_integral(spec: &ProblemSpec) -> Result<BigInt> {
    require(spec.delta() == 2, "delta must equal 2 (Fano surface)")?;
    let c2 = elem_sym(2, spec.k() + 1)?;
    let value = integrate_over_fano(spec, &c2)?;
    value.to_integer().ok_or_else(|| Error::Inconsistency(format!("c2 integral evaluated to {value}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: &[u32], r: u32, k: u32) -> ProblemSpec {
        ProblemSpec::new(d.to_vec(), r, k).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(ProblemSpec::new(vec![], 4, 1).is_err());
        assert!(ProblemSpec::new(vec![1], 4, 1).is_err());
        assert!(ProblemSpec::new(vec![3], 2, 1).is_err());
        assert!(ProblemSpec::new(vec![3], 4, 0).is_err());
        let s = spec(&[3, 2], 5, 1);
        assert_eq!(s.gamma() + s.delta(), 0);
        assert_eq!(s.normalized().degrees(), &[2, 3]);
    }

    #[test]
    fn regime_examples() {
        assert_eq!(regime_report(&spec(&[3], 5, 2)).gamma, 1);
        let r = regime_report(&spec(&[3], 4, 1));
        assert_eq!((r.delta, r.empty, r.fano_dimension), (2, false, Some(2)));
        for k in 1..5 {
            let r = regime_report(&spec(&[2, 2], 2 * k + 3, k));
            assert_eq!(r.fano_dimension, Some(k as i64 + 1));
        }
        // 2k > r - m
        assert!(regime_report(&spec(&[2], 4, 2)).empty);
    }

    #[test]
    fn tau_is_symmetric() {
        let tau = tau_poly(4, 3, 1).unwrap();
        assert!(tau.is_homogeneous());
        assert_eq!(tau.degree(), Some(4));
        assert_eq!(tau.permute_vars(&[1, 0]).unwrap(), tau);
    }

    #[test]
    fn tau_requires_positive_gamma() {
        // gamma(3,4,1) = 4 - 6 < 0
        assert_eq!(tau_poly(3, 4, 1), Err(Error::Regime("gamma must be positive".into())));
        assert_eq!(tau_poly(4, 4, 2), Err(Error::Regime("2k must be less than r".into())));
    }

    #[test]
    fn quadric_rejected() {
        assert!(matches!(deg_planes_dm(2, 3, 1), Err(Error::Regime(_))));
    }

    #[test]
    fn lines_on_quartic_surfaces() {
        assert_eq!(deg_planes_dm(4, 3, 1).unwrap(), BigInt::from(320));
        let t = TorusWeights::from_integers(&[1, 2, 5, 7]);
        assert_eq!(deg_planes_bott(4, 3, 1, &t).unwrap(), BigInt::from(320));
        let t = TorusWeights::from_integers(&[0, 3, 11, -4]);
        assert_eq!(deg_planes_bott(4, 3, 1, &t).unwrap(), BigInt::from(320));
    }

    #[test]
    fn bott_rejects_repeated_weights() {
        let t = TorusWeights::from_integers(&[1, 2, 2, 7]);
        assert!(matches!(deg_planes_bott(4, 3, 1, &t), Err(Error::SingularWeights(_))));
        let t = TorusWeights::from_integers(&[1, 2, 7]);
        assert!(matches!(deg_planes_bott(4, 3, 1, &t), Err(Error::Dimension { .. })));
    }

    #[test]
    fn koszul_h0() {
        // h0(P^4, O(3)) = 35; on a quadric in P^4: 35 - 5 = 30
        assert_eq!(complete_intersection_h0(&[], 4, 3), BigInt::from(35));
        assert_eq!(complete_intersection_h0(&[2], 4, 3), BigInt::from(30));
        // two quadrics in P^5, degree 2: 21 - 2
        assert_eq!(complete_intersection_h0(&[2, 2], 5, 2), BigInt::from(19));
    }

    #[test]
    fn ci_reduces_to_hypersurface() {
        assert_eq!(deg_ci_planes(&spec(&[4], 3, 1)).unwrap(), deg_planes_dm(4, 3, 1).unwrap());
    }

    #[test]
    fn fano_examples() {
        assert_eq!(deg_fano(&spec(&[3], 4, 1)).unwrap(), BigInt::from(45));
        assert_eq!(c2_fano_integral(&spec(&[3], 4, 1)).unwrap(), BigInt::from(27));
        assert_eq!(deg_fano(&spec(&[2, 2], 5, 1)).unwrap(), BigInt::from(32));
        assert_eq!(c2_fano_integral(&spec(&[2, 2], 5, 1)).unwrap(), BigInt::from(16));
    }

    #[test]
    fn fano_regime_errors() {
        assert!(matches!(deg_fano(&spec(&[4], 3, 1)), Err(Error::Regime(_))));
        assert!(matches!(c2_fano_integral(&spec(&[3], 5, 1)), Err(Error::Regime(_))));
    }
}

//! Chern numbers and birational invariants of Fano schemes of complete
//! intersections, plus the irregularity and Picard-number classifications.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::planes::{c2_fano_integral, deg_fano, ProblemSpec};
use crate::polycore::{binomial, ExactScalar};

/// Coefficients in `c_2(Sym^n E) = alpha c_1(E)^2 + beta c_2(E)` and
/// `c_1(Sym^n E) = gamma c_1(E)` for `E` of rank `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPowerCoeffs {
    pub n: u32,
    pub k: u32,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
}

pub fn sym_power_coeffs(n: u32, k: u32) -> Result<SymPowerCoeffs> {
    if n < 1 {
        return Err(Error::param("n must be at least 1"));
    }
    let (n_, k_) = (n as i64, k as i64);
    let g = ExactScalar::from(binomial(n_ + k_, k_ + 1));
    let half = ExactScalar::new(1, 2).expect("nonzero");
    // alpha = g^2/2 - g/2 - C(n+k, k+2), kept over the rationals
    let alpha = &(&(&half * &g.pow(2)) - &(&half * &g)) - &ExactScalar::from(binomial(n_ + k_, k_ + 2));
    let alpha =
        alpha.to_integer().ok_or_else(|| Error::Inconsistency(format!("alpha({n},{k}) = {alpha} is not integral")))?;
    Ok(SymPowerCoeffs { n, k, alpha, beta: binomial(n_ + k_ + 1, k_ + 2), gamma: binomial(n_ + k_, k_ + 1) })
}

/// Closed forms of `(alpha, beta)` valid only for `k = 1, 2`.
pub fn sym_power_coeffs_small(n: u32, k: u32) -> Result<(BigInt, BigInt)> {
    let n_ = n as i64;
    let (num, den, b, beta) = match k {
        1 => (BigInt::from(3 * n_ + 2), 4, binomial(n_ + 1, 3), binomial(n_ + 2, 3)),
        2 => (BigInt::from(5 * (n_ + 1)), 3, binomial(n_ + 3, 5), binomial(n_ + 3, 4)),
        _ => return Err(Error::param(format!("closed forms exist only for k = 1, 2; got k = {k}"))),
    };
    let (alpha, rem) = (num * b).div_rem(&BigInt::from(den));
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!("closed-form alpha({n},{k}) is not integral")));
    }
    Ok((alpha, beta))
}

/// Coefficients of `c_2(F) = (A h^2 + B c_2(S*)) [F]`.
pub fn ab_coeffs(spec: &ProblemSpec) -> Result<(BigInt, BigInt)> {
    let (r, k) = (spec.r() as i64, spec.k() as i64);
    let coeffs = spec.degrees().iter().map(|&d| sym_power_coeffs(d, spec.k())).collect::<Result<Vec<_>>>()?;
    let sum_alpha: BigInt = coeffs.iter().map(|c| &c.alpha).sum();
    let sum_beta: BigInt = coeffs.iter().map(|c| &c.beta).sum();
    let sum_gamma: BigInt = coeffs.iter().map(|c| &c.gamma).sum();
    let mut pair_gamma = BigInt::zero();
    for (i, a) in coeffs.iter().enumerate() {
        for b in &coeffs[i + 1..] {
            pair_gamma += &a.gamma * &b.gamma;
        }
    }
    // The alpha sum runs over i = 1..m: a term for i = 0 would not reproduce
    // A = 6, 3, 13, 66 for the four classical surfaces.
    let a =
        binomial(r + 1, 2) + k - sum_alpha - pair_gamma - BigInt::from(r + 1) * &sum_gamma + &sum_gamma * &sum_gamma;
    let b = BigInt::from(r - 2 * k - 1) - sum_beta;
    Ok((a, b))
}

/// `A` for lines on a hypersurface of degree `2r - 5` in `P^r` as a
/// polynomial in `r`: `(6r^4 - 56r^3 + 177r^2 - 211r + 78) / 3`.
pub fn a_coeff_lines_degree_2r_minus_5(r: u32) -> BigInt {
    let r = BigInt::from(r);
    let p: BigInt = BigInt::from(6) * Pow::pow(&r, 4u32) - BigInt::from(56) * Pow::pow(&r, 3u32)
        + BigInt::from(177) * Pow::pow(&r, 2u32)
        - BigInt::from(211) * &r
        + 78;
    let (q, rem) = p.div_rem(&BigInt::from(3));
    debug_assert!(rem.is_zero());
    q
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCoefficient {
    /// `K_F = O_F(coefficient)` in terms of the Plücker polarization.
    pub coefficient: BigInt,
    /// `sum_i C(d_i + k, k + 1) <= r`: `F` is a Fano variety.
    pub is_fano: bool,
}

pub fn canonical_coefficient(spec: &ProblemSpec) -> CanonicalCoefficient {
    let k = spec.k() as i64;
    let s: BigInt = spec.degrees().iter().map(|&d| binomial(d as i64 + k, k + 1)).sum();
    let r = BigInt::from(spec.r());
    CanonicalCoefficient { is_fano: s <= r, coefficient: s - r - 1 }
}

/// `K_F^delta = c^delta * deg(F)`.
pub fn canonical_degree(spec: &ProblemSpec, deg_f: &BigInt) -> Result<BigInt> {
    let delta = spec.delta();
    if delta < 0 {
        return Err(Error::regime("delta must be non-negative"));
    }
    Ok(Pow::pow(&canonical_coefficient(spec).coefficient, delta as u32) * deg_f)
}

/// Chern numbers and derived invariants of a Fano surface `F_k(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub spec: ProblemSpec,
    pub deg_f: BigInt,
    pub c2_integral: BigInt,
    pub coeffs: Vec<SymPowerCoeffs>,
    pub a: BigInt,
    pub b: BigInt,
    pub c1_coeff: BigInt,
    /// `K_F^2`.
    pub k_delta: BigInt,
    /// Topological Euler characteristic `e(F) = c_2(F)`.
    pub euler: BigInt,
    pub chi_o: BigInt,
    pub p_a: BigInt,
    pub signature: BigInt,
}

pub fn surface_invariants(spec: &ProblemSpec) -> Result<InvariantReport> {
    if spec.delta() != 2 {
        return Err(Error::regime("delta must equal 2 (Fano surface)"));
    }
    if !spec.nonempty_regime() {
        return Err(Error::regime("r must be at least 2k + m"));
    }
    let deg_f = deg_fano(spec)?;
    let c2_integral = c2_fano_integral(spec)?;
    let coeffs = spec.degrees().iter().map(|&d| sym_power_coeffs(d, spec.k())).collect::<Result<Vec<_>>>()?;
    let (a, b) = ab_coeffs(spec)?;
    let c1_coeff = canonical_coefficient(spec).coefficient;
    let k_delta = canonical_degree(spec, &deg_f)?;
    let euler = &a * &deg_f + &b * &c2_integral;
    let (chi_o, rem) = (&k_delta + &euler).div_rem(&BigInt::from(12));
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!("K^2 + e = {} is not divisible by 12 for {spec}", &k_delta + &euler)));
    }
    let p_a = &chi_o - 1;
    let signature = BigInt::from(4) * &chi_o - &euler;
    Ok(InvariantReport {
        spec: spec.clone(),
        deg_f,
        c2_integral,
        coeffs,
        a,
        b,
        c1_coeff,
        k_delta,
        euler,
        chi_o,
        p_a,
        signature,
    })
}

/// Both sides of `sum_{i=1}^n C(i-1, m-1) C(n-i+k, k) = C(n+k, m+k)`.
pub fn combinatorial_identity(n: u32, m: u32, k: u32) -> Result<(BigInt, BigInt)> {
    if m < 1 || n < m {
        return Err(Error::param(format!("need n >= m >= 1, got n={n}, m={m}")));
    }
    let (n, m, k) = (n as i64, m as i64, k as i64);
    let lhs = (1..=n).map(|i| binomial(i - 1, m - 1) * binomial(n - i + k, k)).sum();
    Ok((lhs, binomial(n + k, m + k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irregularity {
    /// Lines on a general cubic threefold.
    CubicThreefoldLines,
    /// Planes on a general cubic fivefold.
    CubicFivefoldPlanes,
    /// `k`-planes on the intersection of two general quadrics in `P^{2k+3}`.
    TwoQuadrics {
        k: u32,
    },
    Regular,
}

impl Irregularity {
    pub fn is_irregular(self) -> bool {
        self != Irregularity::Regular
    }

    pub fn tag(self) -> &'static str {
        match self {
            Irregularity::CubicThreefoldLines => "irregular-cubic-threefold-lines",
            Irregularity::CubicFivefoldPlanes => "irregular-cubic-fivefold-planes",
            Irregularity::TwoQuadrics { .. } => "irregular-two-quadrics",
            Irregularity::Regular => "regular",
        }
    }
}

/// Whether the Fano scheme of `k`-planes on a general complete intersection
/// of the given type has `q(F) > 0`. Only the case tag is reported.
pub fn irregularity_classify(spec: &ProblemSpec) -> Result<Irregularity> {
    let spec = spec.normalized();
    let (r, k) = (spec.r(), spec.k());
    if spec.delta() < 2 {
        return Err(Error::regime("delta must be at least 2"));
    }
    if !spec.nonempty_regime() {
        return Err(Error::regime("r must be at least 2k + m (Fano scheme is empty)"));
    }
    if spec.degrees() == [2] && r == 2 * k + 1 {
        return Err(Error::regime("Fano scheme of a quadric in P^(2k+1) has two components"));
    }
    Ok(match (spec.degrees(), r, k) {
        ([3], 4, 1) => Irregularity::CubicThreefoldLines,
        ([3], 6, 2) => Irregularity::CubicFivefoldPlanes,
        ([2, 2], r, k) if r == 2 * k + 3 => Irregularity::TwoQuadrics { k },
        _ => Irregularity::Regular,
    })
}

/// Mandatory caveat attached to every Picard number.
pub const VERY_GENERAL_NOTE: &str = "valid for a very general complete intersection; 'general' is not sufficient";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardNumber {
    /// Picard number of each connected component.
    pub rho: u32,
    pub components: u32,
    pub note: String,
}

pub fn picard_number(spec: &ProblemSpec) -> Result<PicardNumber> {
    let spec = spec.normalized();
    if spec.delta() < 2 {
        return Err(Error::regime("delta must be at least 2"));
    }
    let (r, k) = (spec.r(), spec.k());
    let (rho, components, case) = match spec.degrees() {
        [2] if r == 2 * k + 1 => (1, 2, "quadric in P^(2k+1): two isomorphic disjoint components"),
        [2] if r == 2 * k + 3 => (2, 1, "quadric in P^(2k+3)"),
        [2, 2] if r == 2 * k + 4 => (2 * k + 6, 1, "two quadrics in P^(2k+4)"),
        _ => (1, 1, "generic case"),
    };
    Ok(PicardNumber { rho, components, note: format!("{case}; {VERY_GENERAL_NOTE}") })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: &[u32], r: u32, k: u32) -> ProblemSpec {
        ProblemSpec::new(d.to_vec(), r, k).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn sym_power_examples() {
        let c = sym_power_coeffs(3, 1).unwrap();
        assert_eq!((c.alpha, c.beta, c.gamma), (big(11), big(10), big(6)));
        let c = sym_power_coeffs(2, 1).unwrap();
        assert_eq!((c.alpha, c.beta, c.gamma), (big(2), big(4), big(3)));
        let c = sym_power_coeffs(3, 2).unwrap();
        assert_eq!((c.alpha, c.beta, c.gamma), (big(40), big(15), big(10)));
        let c = sym_power_coeffs(5, 1).unwrap();
        assert_eq!((c.alpha, c.beta, c.gamma), (big(85), big(35), big(15)));
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(sym_power_coeffs_small(3, 1).unwrap(), (big(11), big(10)));
        assert_eq!(sym_power_coeffs_small(5, 1).unwrap(), (big(85), big(35)));
        assert_eq!(sym_power_coeffs_small(3, 2).unwrap(), (big(40), big(15)));
        assert!(sym_power_coeffs_small(3, 3).is_err());
    }

    #[test]
    fn ab_examples() {
        assert_eq!(ab_coeffs(&spec(&[3], 4, 1)).unwrap(), (big(6), big(-9)));
        assert_eq!(ab_coeffs(&spec(&[2, 2], 5, 1)).unwrap(), (big(3), big(-6)));
        assert_eq!(ab_coeffs(&spec(&[3], 6, 2)).unwrap(), (big(13), big(-14)));
        assert_eq!(ab_coeffs(&spec(&[5], 5, 1)).unwrap(), (big(66), big(-33)));
    }

    #[test]
    fn a_polynomial_matches_general_formula() {
        for r in 4..=12 {
            let (a, _) = ab_coeffs(&spec(&[2 * r - 5], r, 1)).unwrap();
            assert_eq!(a, a_coeff_lines_degree_2r_minus_5(r), "r = {r}");
        }
        assert_eq!(a_coeff_lines_degree_2r_minus_5(5), big(66));
    }

    #[test]
    fn canonical_class() {
        let c = canonical_coefficient(&spec(&[3], 4, 1));
        assert_eq!(c.coefficient, big(1));
        assert!(!c.is_fano);
        // lines on a quadric threefold: C(3,2) = 3 <= 4
        assert!(canonical_coefficient(&spec(&[2], 4, 1)).is_fano);
        assert_eq!(canonical_coefficient(&spec(&[2, 2], 5, 1)).coefficient, big(0));
        assert_eq!(canonical_coefficient(&spec(&[3], 6, 2)).coefficient, big(3));
        assert_eq!(canonical_degree(&spec(&[3], 4, 1), &big(45)).unwrap(), big(45));
        assert_eq!(canonical_degree(&spec(&[2, 2], 5, 1), &big(32)).unwrap(), big(0));
        assert_eq!(canonical_degree(&spec(&[5], 5, 1), &big(6125)).unwrap(), big(496125));
    }

    #[test]
    fn cubic_threefold_report() {
        let rep = surface_invariants(&spec(&[3], 4, 1)).unwrap();
        assert_eq!(rep.euler, big(27));
        assert_eq!(rep.k_delta, big(45));
        assert_eq!(rep.chi_o, big(6));
        assert_eq!(rep.p_a, big(5));
        assert_eq!(rep.signature, big(-3));
    }

    #[test]
    fn surface_requires_delta_two() {
        assert!(matches!(surface_invariants(&spec(&[3], 5, 1)), Err(Error::Regime(_))));
    }

    #[test]
    fn combinatorial_identity_examples() {
        assert_eq!(combinatorial_identity(1, 1, 0).unwrap(), (big(1), big(1)));
        // C(0,1)C(3,1) + C(1,1)C(2,1) + C(2,1)C(1,1) = 0 + 2 + 2
        assert_eq!(combinatorial_identity(3, 2, 1).unwrap(), (big(4), big(4)));
        assert!(combinatorial_identity(2, 3, 0).is_err());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(irregularity_classify(&spec(&[3], 4, 1)).unwrap(), Irregularity::CubicThreefoldLines);
        assert_eq!(irregularity_classify(&spec(&[3], 6, 2)).unwrap(), Irregularity::CubicFivefoldPlanes);
        assert_eq!(irregularity_classify(&spec(&[2, 2], 7, 2)).unwrap(), Irregularity::TwoQuadrics { k: 2 });
        assert_eq!(irregularity_classify(&spec(&[4], 9, 1)).unwrap(), Irregularity::Regular);
        assert!(irregularity_classify(&spec(&[2], 7, 3)).is_err());
        assert!(irregularity_classify(&spec(&[4], 3, 1)).is_err());
    }

    #[test]
    fn picard_examples() {
        assert_eq!(picard_number(&spec(&[2], 5, 1)).unwrap().rho, 2);
        assert_eq!(picard_number(&spec(&[2, 2], 6, 1)).unwrap().rho, 8);
        let p = picard_number(&spec(&[3], 7, 1)).unwrap();
        assert_eq!(p.rho, 1);
        assert!(p.note.contains("very general"));
        let p = picard_number(&spec(&[2], 7, 3)).unwrap();
        assert_eq!((p.rho, p.components), (1, 2));
    }
}

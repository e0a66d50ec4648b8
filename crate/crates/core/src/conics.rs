//! Degree of the locus of degree-`d` hypersurfaces in `P^r` containing a
//! plane conic.
//!
//! The Hilbert scheme of conics `H` is the projective bundle `P(Sym^2 E)`
//! over `G(2, r)`, with `E` the rank-3 bundle of linear forms on the plane.
//! The bundle `E_d` with fiber `H^0(O_C(d))` sits in
//!
//! ```text
//! 0 -> Sym^{d-2} E ⊗ O(-1) -> Sym^d E -> E_d -> 0
//! ```
//!
//! and the degree is `int_H c_{3r-1}(E_d)`, halved for quartic surfaces
//! (a general member of that locus contains two conics).
//!
//! Two localization sums are provided. [`deg_conics_bott`] uses the torus
//! characters of `E_d` and of the tangent space at every fixed conic and is
//! the one the dispatcher trusts. [`deg_conics_bott_printed`] evaluates the
//! untwisted form `eta` with the simplified tangent weights; together with
//! the closed form [`deg_conics_closed`] it is kept for comparison only, see
//! [`conic_formula_audit`].

use std::fmt::Write as _;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polycore::{binomial, compositions, weighted_linear_product, ExactScalar, MultiPoly, TruncatedSeries};
use crate::weights::{TorusWeights, DEFAULT_SEED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConicProblem {
    d: u32,
    r: u32,
}

impl ConicProblem {
    pub fn new(d: u32, r: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::param(format!("conic problems need d >= 2, got {d}")));
        }
        if r < 3 {
            return Err(Error::param(format!("conic problems need r >= 3, got {r}")));
        }
        Ok(ConicProblem { d, r })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `2d + 2 - 3r`, the codimension of the locus.
    pub fn epsilon(&self) -> i64 {
        2 * self.d as i64 + 2 - 3 * self.r as i64
    }

    /// `3r - 2d - 2`, the expected dimension of the space of conics on a general member.
    pub fn mu(&self) -> i64 {
        -self.epsilon()
    }

    /// `dim H = 3r - 1`.
    pub fn hilbert_dim(&self) -> u32 {
        3 * self.r - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicUniqueness {
    /// A general member of the locus contains exactly one conic, and it is smooth.
    UniqueSmooth,
    /// Quartic surfaces: two smooth coplanar conics.
    TwoCoplanar,
    /// Finite expected count, but uniqueness is not known; no degree is reported.
    Boundary,
    /// A general hypersurface already contains a positive-dimensional family.
    Family,
}

impl ConicUniqueness {
    pub fn describe(self) -> &'static str {
        match self {
            ConicUniqueness::UniqueSmooth => "unique smooth conic",
            ConicUniqueness::TwoCoplanar => "two smooth coplanar conics",
            ConicUniqueness::Boundary => "boundary regime (epsilon = 0), degree undefined",
            ConicUniqueness::Family => "positive-dimensional family, degree undefined",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConicRegime {
    pub epsilon: i64,
    pub mu: i64,
    pub uniqueness: ConicUniqueness,
}

pub fn conic_regime(p: &ConicProblem) -> ConicRegime {
    let epsilon = p.epsilon();
    let uniqueness = match epsilon {
        e if e < 0 => ConicUniqueness::Family,
        0 => ConicUniqueness::Boundary,
        _ if (p.d, p.r) == (4, 3) => ConicUniqueness::TwoCoplanar,
        _ => ConicUniqueness::UniqueSmooth,
    };
    ConicRegime { epsilon, mu: -epsilon, uniqueness }
}

/// `c(Sym^d E) * c(Sym^{d-2} E)^{-1}` in the Chern roots `x_1, x_2, x_3`
/// of `E`, truncated at `bound`. For `d = 1` this is `c(E)` itself.
pub fn chern_ed_series(d: u32, bound: u32) -> Result<TruncatedSeries> {
    match d {
        0 => Err(Error::param("d must be at least 1")),
        1 => Ok(TruncatedSeries::new(weighted_linear_product(2, 1, true, Some(bound))?, bound)),
        _ => {
            let top = TruncatedSeries::new(weighted_linear_product(2, d, true, Some(bound))?, bound);
            if d == 2 {
                return Ok(top);
            }
            let divisor = TruncatedSeries::new(weighted_linear_product(2, d - 2, true, Some(bound))?, bound);
            Ok(top.mul(&divisor.inverse()?))
        }
    }
}

/// Degree `3r - 1` part of [`chern_ed_series`]: a symmetric form in three variables.
pub fn eta_form(d: u32, r: u32) -> Result<MultiPoly> {
    let p = ConicProblem::new(d, r)?;
    if p.epsilon() < 0 {
        return Err(Error::regime("epsilon must be non-negative"));
    }
    let n = p.hilbert_dim();
    Ok(chern_ed_series(d, n)?.homogeneous_component(n))
}

/// A torus-fixed conic: the pair of coordinate lines `x_a x_b = 0` (a double
/// line when `a == b`) in the coordinate plane spanned by `plane`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConicFixedPoint {
    pub plane: [usize; 3],
    pub pair: (usize, usize),
}

/// All fixed conics: six per coordinate plane.
pub fn fixed_conics(r: u32) -> Vec<ConicFixedPoint> {
    (0..=r as usize)
        .combinations(3)
        .flat_map(|plane| {
            let plane = [plane[0], plane[1], plane[2]];
            plane
                .into_iter()
                .combinations_with_replacement(2)
                .map(move |ab| ConicFixedPoint { plane, pair: (ab[0], ab[1]) })
        })
        .collect()
}

/// Number of fixed conics, checked against `r(r^2 - 1)`.
pub fn fixed_point_census(r: u32) -> Result<usize> {
    if r < 2 {
        return Err(Error::param(format!("census needs r >= 2, got {r}")));
    }
    let count = fixed_conics(r).len();
    let expected = (r as usize) * (r as usize * r as usize - 1);
    if count != expected {
        return Err(Error::Inconsistency(format!("{count} fixed conics, expected {expected}")));
    }
    Ok(count)
}

/// `e_n` of the given values.
fn elementary_symmetric(values: &[ExactScalar], n: usize) -> ExactScalar {
    let mut e = vec![ExactScalar::zero(); n + 1];
    e[0] = ExactScalar::one();
    for v in values {
        for j in (1..=n).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e.swap_remove(n)
}

/// Position of `a` and `b` inside the 3-element plane.
fn local_pair(fp: &ConicFixedPoint) -> (usize, usize) {
    let pos = |i| fp.plane.iter().position(|&p| p == i).expect("pair lies in plane");
    (pos(fp.pair.0), pos(fp.pair.1))
}

/// Torus characters of `H^0(O_C(d))` at the fixed conic `x_a x_b = 0` of a
/// plane with weights `w`: the degree-`d` monomials not divisible by `x_a x_b`.
pub fn ed_characters(d: u32, w: &[ExactScalar; 3], pair: (usize, usize)) -> Vec<ExactScalar> {
    compositions(d, 3)
        .into_iter()
        .filter(|u| {
            let (a, b) = pair;
            if a == b {
                u[a] < 2
            } else {
                u[a] == 0 || u[b] == 0
            }
        })
        .map(|u| u.iter().zip(w).map(|(&ui, wi)| wi * &ExactScalar::from(ui as i64)).sum())
        .collect()
}

/// Local top Chern class `c_{3r-1}(E_d)` at a fixed conic.
pub fn local_top_chern(d: u32, r: u32, w: &[ExactScalar; 3], pair: (usize, usize)) -> ExactScalar {
    elementary_symmetric(&ed_characters(d, w, pair), 3 * r as usize - 1)
}

/// Weights are admissible for [`deg_conics_bott`] when they are distinct and,
/// inside every coordinate plane, the six sums `t_a + t_b` are distinct.
pub fn conic_weights_generic(t: &[i64]) -> bool {
    let distinct = t.iter().all_unique();
    distinct
        && (0..t.len())
            .combinations(3)
            .all(|p| p.iter().combinations_with_replacement(2).map(|ab| t[*ab[0]] + t[*ab[1]]).all_unique())
}

/// Exact value of a localization sum together with its integrality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicBottValue {
    pub value: ExactScalar,
    pub integral: bool,
}

impl ConicBottValue {
    fn new(value: ExactScalar) -> Self {
        ConicBottValue { integral: value.is_integer(), value }
    }
}

fn check_weights(r: u32, t: &TorusWeights) -> Result<()> {
    if t.len() != r as usize + 1 {
        return Err(Error::Dimension { expected: r as usize + 1, found: t.len() });
    }
    Ok(())
}

fn nonzero(x: ExactScalar, what: &str) -> Result<ExactScalar> {
    if x.is_zero() {
        Err(Error::SingularWeights(format!("{what} vanishes")))
    } else {
        Ok(x)
    }
}

/// `int_H c_{3r-1}(E_d)` by localization at the `r(r^2-1)` fixed conics.
///
/// At the conic `x_a x_b = 0` in the plane `I`, the numerator is the
/// elementary symmetric function of the characters of `E_d`, and the Euler
/// class of the tangent space is
/// `prod_{i in I, j not in I} (t_i - t_j) * prod_{{α,β} != {a,b}} (t_α + t_β - t_a - t_b)`
/// (tangent to the Grassmannian, then to the fiber `P(Sym^2 E)`).
/// The sum is an integer independent of `t` for every `epsilon >= 0`.
pub fn deg_conics_bott(d: u32, r: u32, t: &TorusWeights) -> Result<ConicBottValue> {
    let p = ConicProblem::new(d, r)?;
    if p.epsilon() <= 0 {
        return Err(Error::regime("epsilon must be positive"));
    }
    check_weights(r, t)?;
    let t = t.as_slice();
    let terms = fixed_conics(r)
        .into_par_iter()
        .map(|fp| {
            let w = fp.plane.map(|i| t[i].clone());
            let (a, b) = local_pair(&fp);
            let numerator = local_top_chern(d, r, &w, (a, b));
            let mut euler = ExactScalar::one();
            for &i in &fp.plane {
                for (j, tj) in t.iter().enumerate() {
                    if !fp.plane.contains(&j) {
                        euler *= &(&t[i] - tj);
                    }
                }
            }
            let base = &w[a] + &w[b];
            for ab in (0..3).combinations_with_replacement(2) {
                if (ab[0], ab[1]) != (a, b) {
                    euler *= &(&(&w[ab[0]] + &w[ab[1]]) - &base);
                }
            }
            Ok(numerator / nonzero(euler, "tangent Euler class")?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConicBottValue::new(terms.into_iter().sum()))
}

/// The localization sum with numerator `eta(t_i, t_j, t_k)` and denominator
/// `(t_i t_j t_k)^{r-2} * prod_{{α,β} != {a,b}} (t_α + t_β)`, negated.
///
/// It is generally neither an integer nor constant in `t`; it is evaluated
/// only so that [`conic_formula_audit`] can measure it.
pub fn deg_conics_bott_printed(d: u32, r: u32, t: &TorusWeights) -> Result<ConicBottValue> {
    let p = ConicProblem::new(d, r)?;
    if p.epsilon() <= 0 {
        return Err(Error::regime("epsilon must be positive"));
    }
    check_weights(r, t)?;
    let eta = eta_form(d, r)?;
    let t = t.as_slice();
    let terms = (0..=r as usize)
        .combinations(3)
        .collect_vec()
        .into_par_iter()
        .map(|plane| {
            let w: Vec<ExactScalar> = plane.iter().map(|&i| t[i].clone()).collect();
            let numerator = eta.evaluate(&w)?;
            let prod: ExactScalar = w.iter().cloned().product();
            let base = nonzero(prod, "t_i t_j t_k")?.pow(r - 2);
            let pairs = (0..3).combinations_with_replacement(2).collect_vec();
            let mut sum = ExactScalar::zero();
            for skip in &pairs {
                let mut den = base.clone();
                for ab in pairs.iter().filter(|ab| *ab != skip) {
                    den *= &(&w[ab[0]] + &w[ab[1]]);
                }
                sum += &numerator / &nonzero(den, "t_a + t_b")?;
            }
            Ok(sum)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConicBottValue::new(-terms.into_iter().sum::<ExactScalar>()))
}

/// `-(5/32) C(r+1, 3) eta(1, 1, 1)`, evaluated as written.
pub fn deg_conics_closed(d: u32, r: u32) -> Result<ExactScalar> {
    let p = ConicProblem::new(d, r)?;
    if p.epsilon() <= 0 {
        return Err(Error::regime("epsilon must be positive"));
    }
    if (d, r) == (4, 3) {
        return Err(Error::regime("closed form excludes (d, r) = (4, 3)"));
    }
    Ok(-(ExactScalar::new(5, 32).expect("nonzero") * ExactScalar::from(binomial(r as i64 + 1, 3)) * eta_at_ones(d, r)?))
}

/// `eta(1, 1, 1)`.
pub fn eta_at_ones(d: u32, r: u32) -> Result<ExactScalar> {
    eta_form(d, r)?.evaluate(&[ExactScalar::one(), ExactScalar::one(), ExactScalar::one()])
}

/// Seeds of the two weight assignments the dispatcher compares.
pub const DISPATCH_SEEDS: [u64; 2] = [DEFAULT_SEED, DEFAULT_SEED + 1];

/// Seeded weights admissible for [`deg_conics_bott`].
pub fn conic_weights(r: u32, seed: u64) -> Result<TorusWeights> {
    TorusWeights::sample_with(r as usize + 1, seed, conic_weights_generic)
}

/// Degree of the locus of degree-`d` hypersurfaces in `P^r` containing a conic.
///
/// Evaluates [`deg_conics_bott`] at two seeded weight assignments, requires
/// both to agree and be integral, and halves for quartic surfaces.
pub fn deg_conics(d: u32, r: u32) -> Result<BigInt> {
    deg_conics_seeded(d, r, DISPATCH_SEEDS)
}

pub fn deg_conics_seeded(d: u32, r: u32, seeds: [u64; 2]) -> Result<BigInt> {
    let p = ConicProblem::new(d, r)?;
    match conic_regime(&p).uniqueness {
        ConicUniqueness::Family => return Err(Error::regime("epsilon must be positive")),
        ConicUniqueness::Boundary => {
            return Err(Error::regime("boundary regime: epsilon = 0 is not covered by the uniqueness theorem"))
        }
        _ => {}
    }
    let first = deg_conics_bott(d, r, &conic_weights(r, seeds[0])?)?;
    let second = deg_conics_bott(d, r, &conic_weights(r, seeds[1])?)?;
    if first != second {
        return Err(Error::Inconsistency(format!(
            "localization sum depends on the weights: {} vs {}",
            first.value, second.value
        )));
    }
    let total = first
        .value
        .to_integer()
        .ok_or_else(|| Error::Inconsistency(format!("localization sum {} is not an integer", first.value)))?;
    let degree = if (d, r) == (4, 3) {
        let (half, rem) = total.div_rem(&BigInt::from(2));
        if !rem.is_zero() {
            return Err(Error::Inconsistency(format!("odd top Chern number {total} for quartic surfaces")));
        }
        half
    } else {
        total
    };
    if degree <= BigInt::zero() {
        return Err(Error::Inconsistency(format!("non-positive degree {degree}")));
    }
    Ok(degree)
}

/// Measurements comparing the three conic formulas for one `(d, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicAudit {
    pub d: u32,
    pub r: u32,
    pub eta_at_ones: ExactScalar,
    /// Printed localization sum at `t = (1, ..., 1)`.
    pub printed_at_ones: ExactScalar,
    /// `printed_at_ones / (-C(r+1,3) eta(1,1,1))`.
    pub measured_plane_factor: ExactScalar,
    /// Printed localization sum at the two dispatcher weight assignments.
    pub printed_generic: [ExactScalar; 2],
    /// `-(5/32) C(r+1,3) eta(1,1,1)`; `None` for the excluded `(4, 3)`.
    pub closed_form: Option<ExactScalar>,
    /// `int_H c_{3r-1}(E_d)` from [`deg_conics_bott`].
    pub top_chern_number: ExactScalar,
    pub degree: BigInt,
    /// Largest `j` with `c_j` of the untwisted quotient series nonzero, up to degree `2d + 4`.
    pub untwisted_top_degree: u32,
}

pub fn conic_audit(d: u32, r: u32) -> Result<ConicAudit> {
    let ones = TorusWeights::new(vec![ExactScalar::one(); r as usize + 1]);
    let eta1 = eta_at_ones(d, r)?;
    let printed_at_ones = deg_conics_bott_printed(d, r, &ones)?.value;
    let planes = ExactScalar::from(binomial(r as i64 + 1, 3));
    let measured_plane_factor = &printed_at_ones / &(-(&planes * &eta1));
    let printed_generic = [
        deg_conics_bott_printed(d, r, &conic_weights(r, DISPATCH_SEEDS[0])?)?.value,
        deg_conics_bott_printed(d, r, &conic_weights(r, DISPATCH_SEEDS[1])?)?.value,
    ];
    let closed_form = if (d, r) == (4, 3) { None } else { Some(deg_conics_closed(d, r)?) };
    let top_chern_number = deg_conics_bott(d, r, &conic_weights(r, DISPATCH_SEEDS[0])?)?.value;
    let degree = deg_conics(d, r)?;
    let probe = 2 * d + 4;
    let series = chern_ed_series(d, probe)?;
    let untwisted_top_degree = series.poly().degree().unwrap_or(0);
    Ok(ConicAudit {
        d,
        r,
        eta_at_ones: eta1,
        printed_at_ones,
        measured_plane_factor,
        printed_generic,
        closed_form,
        top_chern_number,
        degree,
        untwisted_top_degree,
    })
}

/// Cases covered by the generated audit document.
pub const AUDIT_CASES: [(u32, u32); 4] = [(4, 3), (5, 3), (6, 3), (6, 4)];

/// Markdown report comparing the printed localization sum, the printed
/// closed form, and the twisted localization sum against the 2508 anchor.
pub fn conic_formula_audit(cases: &[(u32, u32)]) -> Result<String> {
    let audits = cases.iter().map(|&(d, r)| conic_audit(d, r)).collect::<Result<Vec<_>>>()?;
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "# Conic formula audit").unwrap();
    writeln!(w).unwrap();
    writeln!(w, "<!-- generated by `enumgeom::conics::conic_formula_audit`; do not edit by hand -->").unwrap();
    writeln!(w).unwrap();
    writeln!(
        w,
        "Three routes to `deg Σ_c(d, r)` are evaluated exactly. The anchor is \
         `deg Σ_c(4, 3) = 2508`, half of `∫ c_8(E_4)`."
    )
    .unwrap();
    writeln!(w).unwrap();
    writeln!(w, "| (d, r) | η(1,1,1) | untwisted sum at t = 1 | measured per-plane factor | closed form with 5/32 | untwisted sum, weights A | untwisted sum, weights B | twisted sum ∫ c_(3r-1)(E_d) | degree |").unwrap();
    writeln!(w, "|---|---|---|---|---|---|---|---|---|").unwrap();
    for a in &audits {
        writeln!(
            w,
            "| ({}, {}) | {} | {} | {} | {} | {} | {} | {} | {} |",
            a.d,
            a.r,
            a.eta_at_ones,
            a.printed_at_ones,
            a.measured_plane_factor,
            a.closed_form.as_ref().map_or("excluded".to_string(), ToString::to_string),
            a.printed_generic[0],
            a.printed_generic[1],
            a.top_chern_number,
            a.degree
        )
        .unwrap();
    }
    writeln!(w).unwrap();
    let anchor = audits.iter().find(|a| (a.d, a.r) == (4, 3));
    writeln!(w, "## Findings").unwrap();
    writeln!(w).unwrap();
    writeln!(
        w,
        "- At `t = (1, ..., 1)` every one of the six fixed conics of a plane contributes \
         `η(1,1,1) / 32`, so the untwisted sum has per-plane factor 6/32 = 3/16, not the 5/32 of the closed form."
    )
    .unwrap();
    writeln!(
        w,
        "- The untwisted sum changes with the weights and is not an integer, so neither it nor the closed form \
         computes a degree."
    )
    .unwrap();
    if let Some(a) = anchor {
        writeln!(
            w,
            "- The twisted sum gives `∫ c_8(E_4) = {}` at both weight assignments; halving gives {}, matching the anchor 2508.",
            a.top_chern_number, a.degree
        )
        .unwrap();
    }
    writeln!(
        w,
        "- The untwisted quotient `c(Sym^d E) / c(Sym^(d-2) E)` is still nonzero in degree {} (the largest examined) for d = {} \
         although `E_d` has rank {}; the kernel of `Sym^d E -> E_d` is `Sym^(d-2) E ⊗ O(-1)`, and the twist by the \
         tautological line of `P(Sym^2 E)` is what the twisted sum accounts for.",
        audits[0].untwisted_top_degree,
        audits[0].d,
        2 * audits[0].d + 1
    )
    .unwrap();
    writeln!(w).unwrap();
    writeln!(
        w,
        "Weights A and B are the dispatcher's seeded assignments (seeds {} and {}).",
        DISPATCH_SEEDS[0], DISPATCH_SEEDS[1]
    )
    .unwrap();
    Ok(out)
}

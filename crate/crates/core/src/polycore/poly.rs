use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ExactScalar;
use crate::error::{Error, Result};

/// Exponents of a monomial `x0^e0 * x1^e1 * ...`.
///
/// Ordered graded-lexicographically: total degree first, then
/// lexicographically with `x0 > x1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Box<[u32]>);

impl ExponentVector {
    pub fn new(exponents: impl Into<Box<[u32]>>) -> Self {
        ExponentVector(exponents.into())
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars].into())
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        ExponentVector(e.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self - other` if every entry stays non-negative.
    fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(|v| ExponentVector(v.into()))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v.into())
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        ExponentVector(v.into())
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec().into())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality. The zero polynomial is the empty map, but it still
/// remembers its number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, ExactScalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, ExactScalar::one())
    }

    pub fn constant(nvars: usize, c: ExactScalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector::zero(nvars), c);
        p
    }

    /// The variable `x_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable x{var} out of range for {nvars} variables");
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector::unit(nvars, var), ExactScalar::one());
        p
    }

    /// `constant + sum_i coeffs[i] * x_i`.
    pub fn linear(constant: ExactScalar, coeffs: &[ExactScalar]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::constant(nvars, constant);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(ExponentVector::unit(nvars, i), c.clone());
        }
        p
    }

    pub fn from_terms<E, I>(nvars: usize, terms: I) -> Result<Self>
    where
        E: Into<ExponentVector>,
        I: IntoIterator<Item = (E, ExactScalar)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            let e = e.into();
            if e.len() != nvars {
                return Err(Error::Dimension { expected: nvars, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &ExactScalar)> + '_ {
        self.terms.iter()
    }

    /// Largest total degree of a stored term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(ExponentVector::total_degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExponentVector::total_degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Coefficient of `x^exponents`, zero if the monomial is absent.
    pub fn coefficient(&self, exponents: &ExponentVector) -> Result<ExactScalar> {
        self.check_len(exponents.len())?;
        Ok(self.terms.get(exponents).cloned().unwrap_or_else(ExactScalar::zero))
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.terms.get(&ExponentVector::zero(self.nvars)).cloned().unwrap_or_else(ExactScalar::zero)
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found == self.nvars {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.nvars, found })
        }
    }

    fn add_term(&mut self, e: ExponentVector, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    /// Product with every term of total degree above `bound` discarded.
    pub fn mul_truncated(&self, other: &MultiPoly, bound: Option<u32>) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "multiplying polynomials in different rings");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da = ea.total_degree();
            if bound.is_some_and(|b| da > b) {
                // terms are graded, nothing further can fit
                break;
            }
            for (eb, cb) in &other.terms {
                if bound.is_some_and(|b| da + eb.total_degree() > b) {
                    break;
                }
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }

    pub fn pow_truncated(&self, exp: u32, bound: Option<u32>) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars).truncate(bound.unwrap_or(u32::MAX));
        for _ in 0..exp {
            acc = acc.mul_truncated(self, bound);
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        self.pow_truncated(exp, None)
    }

    /// Drops every term of total degree above `bound`.
    pub fn truncate(&self, bound: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() <= bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of the terms of total degree exactly `n`.
    pub fn homogeneous_component(&self, n: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == n)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[ExactScalar]) -> Result<ExactScalar> {
        self.check_len(point.len())?;
        let mut total = ExactScalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k > 0 {
                    term *= &x.pow(k);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<MultiPoly> {
        self.check_len(perm.len())?;
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::param(format!("{perm:?} is not a permutation")));
            }
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &k) in e.as_slice().iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.add_term(ne.into(), c.clone());
        }
        Ok(out)
    }
}

/// Coefficient of `x^target` in `a * b`, without forming the product.
pub fn product_coefficient(a: &MultiPoly, b: &MultiPoly, target: &ExponentVector) -> Result<ExactScalar> {
    a.check_len(target.len())?;
    b.check_len(target.len())?;
    let mut total = ExactScalar::zero();
    for (ea, ca) in &a.terms {
        if let Some(rest) = target.checked_sub(ea) {
            if let Some(cb) = b.terms.get(&rest) {
                total += ca * cb;
            }
        }
    }
    Ok(total)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_truncated(rhs, None)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    /// Highest graded-lex term first, e.g. `2*x0^2*x1 - x1 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.numer() < &0.into();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = e.total_degree() == 0;
            let mut first = true;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (v, &k) in e.as_slice().iter().enumerate().filter(|(_, k)| **k > 0) {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if k == 1 {
                    write!(f, "x{v}")?;
                } else {
                    write!(f, "x{v}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

//! Multivariate polynomials over the Gaussian rationals.
//!
//! A [`Scalar`] is a finite map from monomials (exponent vectors over a fixed,
//! ordered parameter list) to nonzero [`GaussRational`] coefficients. The map
//! itself is the canonical form: two scalars are equal exactly when their term
//! maps are equal, which makes polynomial identity over this ring decidable.
//!
//! Monomials are ordered graded-lexicographically over the declared parameter
//! order; printing walks terms from the largest monomial down.

use super::gauss::GaussRational;
use super::{Assignment, CoeffError};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Ordered list of parameter names, shared by every scalar of one algebra.
#[derive(Debug, Clone, Eq)]
pub struct Params(Arc<[String]>);

impl Params {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Params(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn empty() -> Self {
        Params(Vec::new().into())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for Params {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

/// Exponent vector over the parameter list. Ordered by total degree, then
/// lexicographically on exponents, so `BTreeMap` iteration ascends to the
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into())
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0u32; nvars];
        exps[index] = 1;
        Monomial(exps.into())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn product(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }
}

// Derived Ord on Box<[u32]> alone would be plain lex; wrap it behind degree.
impl Monomial {
    fn grlex_key(&self) -> (u64, &[u32]) {
        (self.degree(), &self.0)
    }
}

/// A polynomial over `Q(i)[params]` in canonical form: no zero coefficients,
/// unique monomials, fixed parameter list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    params: Params,
    terms: BTreeMap<GrlexMonomial, GaussRational>,
}

/// Monomial wrapper imposing graded-lex order on the term map.
#[derive(Debug, Clone, PartialEq, Eq)]
struct GrlexMonomial(Monomial);

impl PartialOrd for GrlexMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrlexMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.grlex_key().cmp(&other.0.grlex_key())
    }
}

impl Scalar {
    pub fn zero(params: &Params) -> Self {
        Scalar {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: &Params, value: GaussRational) -> Self {
        let mut s = Scalar::zero(params);
        if !value.is_zero() {
            s.terms
                .insert(GrlexMonomial(Monomial::constant(params.len())), value);
        }
        s
    }

    pub fn one(params: &Params) -> Self {
        Scalar::constant(params, GaussRational::one())
    }

    pub fn from_integer(params: &Params, n: i64) -> Self {
        Scalar::constant(params, GaussRational::from_integer(n))
    }

    /// The Gaussian unit `I` as a scalar.
    pub fn gaussian_unit(params: &Params) -> Self {
        Scalar::constant(params, GaussRational::i())
    }

    /// The parameter named `name`, or `None` if it is not declared.
    pub fn parameter(params: &Params, name: &str) -> Option<Self> {
        params
            .index_of(name)
            .map(|i| Scalar::parameter_at(params, i))
    }

    pub fn parameter_at(params: &Params, index: usize) -> Self {
        let mut s = Scalar::zero(params);
        s.terms.insert(
            GrlexMonomial(Monomial::variable(params.len(), index)),
            GaussRational::one(),
        );
        s
    }

    pub fn from_term(params: &Params, monomial: Monomial, coeff: GaussRational) -> Self {
        assert_eq!(monomial.exponents().len(), params.len(), "monomial arity");
        let mut s = Scalar::zero(params);
        if !coeff.is_zero() {
            s.terms.insert(GrlexMonomial(monomial), coeff);
        }
        s
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.term_count() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.0.is_constant() && c.is_one())
    }

    pub fn is_minus_one(&self) -> bool {
        self.term_count() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.0.is_constant() && c == &GaussRational::from_integer(-1))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter().map(|(m, c)| (&m.0, c))
    }

    /// Coefficient of the largest monomial, if any.
    pub fn leading_coefficient(&self) -> Option<&GaussRational> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    /// True when the scalar is a single term whose coefficient is purely real
    /// or purely imaginary, i.e. prints without internal `+`/`-`.
    pub fn is_single_pure_term(&self) -> bool {
        self.term_count() == 1
            && self
                .leading_coefficient()
                .is_some_and(|c| c.re().is_zero() || c.im().is_zero())
    }

    fn require_same_params(&self, other: &Self) -> Result<(), CoeffError> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(CoeffError::ParamMismatch {
                left: self.params.to_string(),
                right: other.params.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CoeffError> {
        self.require_same_params(other)?;
        let mut terms = self.terms.clone();
        for (mono, coeff) in &other.terms {
            match terms.get_mut(mono) {
                Some(existing) => {
                    let sum = &*existing + coeff;
                    if sum.is_zero() {
                        terms.remove(mono);
                    } else {
                        *existing = sum;
                    }
                }
                None => {
                    terms.insert(mono.clone(), coeff.clone());
                }
            }
        }
        Ok(Scalar {
            params: self.params.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CoeffError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CoeffError> {
        self.require_same_params(other)?;
        let mut terms: BTreeMap<GrlexMonomial, GaussRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mono = GrlexMonomial(ma.0.product(&mb.0));
                let coeff = ca * cb;
                match terms.get_mut(&mono) {
                    Some(existing) => {
                        let sum = &*existing + &coeff;
                        if sum.is_zero() {
                            terms.remove(&mono);
                        } else {
                            *existing = sum;
                        }
                    }
                    None => {
                        if !coeff.is_zero() {
                            terms.insert(mono, coeff);
                        }
                    }
                }
            }
        }
        Ok(Scalar {
            params: self.params.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Scalar::zero(&self.params);
        }
        Scalar {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one(&self.params);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates the polynomial at the given parameter values. Every parameter
    /// that actually occurs must be assigned; the result is parameter-free.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Self, CoeffError> {
        let empty = Params::empty();
        let mut total = GaussRational::zero();
        for (mono, coeff) in &self.terms {
            let mut value = coeff.clone();
            for (idx, &exp) in mono.0.exponents().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = &self.params.names()[idx];
                let assigned = assignment
                    .get(name)
                    .ok_or_else(|| CoeffError::MissingAssignment(name.clone()))?;
                value = &value * &assigned.pow(exp);
            }
            total = &total + &value;
        }
        Ok(Scalar::constant(&empty, total))
    }

    fn monomial_string(&self, mono: &Monomial) -> String {
        let mut factors = Vec::new();
        for (idx, &exp) in mono.exponents().iter().enumerate() {
            if exp == 0 {
                continue;
            }
            let name = &self.params.names()[idx];
            if exp == 1 {
                factors.push(name.clone());
            } else {
                factors.push(format!("{name}^{exp}"));
            }
        }
        factors.join("*")
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: Self) -> Scalar {
        self.checked_add(rhs)
            .expect("scalar parameter lists differ")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Self) -> Scalar {
        self.checked_sub(rhs)
            .expect("scalar parameter lists differ")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Self) -> Scalar {
        self.checked_mul(rhs)
            .expect("scalar parameter lists differ")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Scalar {
    /// Compact canonical form: terms from the leading monomial down, joined
    /// with `+`/`-`, e.g. `a*l+1`, `-1/2*b^2`, `(1+I)*a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (mono, coeff) in self.terms.iter().rev() {
            let term = if mono.0.is_constant() {
                coeff.to_string()
            } else {
                let ms = self.monomial_string(&mono.0);
                if coeff.is_one() {
                    ms
                } else if coeff == &GaussRational::from_integer(-1) {
                    format!("-{ms}")
                } else if coeff.re().is_zero() || coeff.im().is_zero() {
                    format!("{coeff}*{ms}")
                } else {
                    format!("({coeff})*{ms}")
                }
            };
            if out.is_empty() {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push('-');
                out.push_str(rest);
            } else {
                out.push('+');
                out.push_str(&term);
            }
        }
        write!(f, "{out}")
    }
}

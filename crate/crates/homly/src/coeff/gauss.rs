//! Gaussian-rational numbers: exact complex scalars `re + im*I` with
//! arbitrary-precision rational parts.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number: arbitrary-precision, always reduced, denominator positive.
pub type Rational = BigRational;

/// A Gaussian rational `re + im*I`, where `I^2 = -1`.
///
/// Equality is componentwise; the normal form is inherited from [`Rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRational {
    re: Rational,
    im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit `I`.
    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        GaussRational::new(Rational::from_integer(n.into()), Rational::zero())
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational::new(re, Rational::zero())
    }

    /// Builds `p/q`. Panics if `q` is zero.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        GaussRational::from_rational(Rational::new(p.into(), q.into()))
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    /// Sign used when a printer wants to pull a leading `-` out of a term.
    pub fn print_negative(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.re.is_negative()
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = GaussRational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;

    fn add(self, rhs: Self) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;

    fn sub(self, rhs: Self) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;

    fn mul(self, rhs: Self) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;

    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussRational {
    /// Canonical form: `p/q`, `p/q*I`, or `re+im*I` / `re-im*I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let imag_mag = |m: &Rational| {
            if m.is_one() {
                "I".to_string()
            } else {
                format!("{m}*I")
            }
        };
        if self.re.is_zero() {
            return if self.im.is_negative() {
                write!(f, "-{}", imag_mag(&-self.im.clone()))
            } else {
                write!(f, "{}", imag_mag(&self.im))
            };
        }
        if self.im.is_negative() {
            write!(f, "{}-{}", self.re, imag_mag(&-self.im.clone()))
        } else {
            write!(f, "{}+{}", self.re, imag_mag(&self.im))
        }
    }
}

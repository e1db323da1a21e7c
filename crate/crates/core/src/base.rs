//! The coefficient ring R = K[y]: dense univariate polynomials over the
//! exact rationals.
//!
//! Coefficients are stored by ascending power of y. The highest stored
//! coefficient is always nonzero; the zero polynomial is the empty list,
//! and its degree is -∞.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::degree::Degree;
use crate::render;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoly {
    coeffs: Vec<Scalar>,
}

impl BasePoly {
    /// Builds a polynomial from coefficients by ascending power, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BasePoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::scalar::integer(c)).collect())
    }

    pub fn zero() -> Self {
        BasePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial c * y^k.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        BasePoly { coeffs }
    }

    pub fn y() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree in y; -∞ for the zero polynomial.
    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n as i64 - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Coefficient of y^k (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BasePoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Composition self(other): substitutes `other` for y.
    pub fn compose(&self, other: &BasePoly) -> BasePoly {
        let mut acc = BasePoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * other + BasePoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut exp: u32) -> BasePoly {
        let mut result = BasePoly::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl Add<&BasePoly> for &BasePoly {
    type Output = BasePoly;
    fn add(self, rhs: &BasePoly) -> BasePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        BasePoly::from_coeffs(coeffs)
    }
}

impl Sub<&BasePoly> for &BasePoly {
    type Output = BasePoly;
    fn sub(self, rhs: &BasePoly) -> BasePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        BasePoly::from_coeffs(coeffs)
    }
}

impl Mul<&BasePoly> for &BasePoly {
    type Output = BasePoly;
    fn mul(self, rhs: &BasePoly) -> BasePoly {
        if self.is_zero() || rhs.is_zero() {
            return BasePoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        BasePoly::from_coeffs(coeffs)
    }
}

impl Neg for &BasePoly {
    type Output = BasePoly;
    fn neg(self) -> BasePoly {
        BasePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for BasePoly {
            type Output = BasePoly;
            fn $method(self, rhs: BasePoly) -> BasePoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BasePoly> for BasePoly {
            type Output = BasePoly;
            fn $method(self, rhs: &BasePoly) -> BasePoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<BasePoly> for &BasePoly {
            type Output = BasePoly;
            fn $method(self, rhs: BasePoly) -> BasePoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for BasePoly {
    type Output = BasePoly;
    fn neg(self) -> BasePoly {
        -&self
    }
}

impl fmt::Display for BasePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render::fmt_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), render::factors(&[("y", k)]))),
        )
    }
}

//! Operators in S = R[x; sigma, delta] and the pseudo-degree chi.
//!
//! An operator is stored in canonical form sum_i a_i x^i with a_i in K[y]
//! and the highest stored coefficient nonzero; the representation is
//! unique. Multiplication pushes x past coefficients with the commutation
//! rule x r = sigma(r) x + delta(r), extended to x^i by induction.
//!
//! chi is the degree in x, with chi(0) = -infinity. For s >= 1 it is a
//! pseudo-degree function: chi(PQ) = chi(P) + chi(Q) and
//! chi(P + Q) <= max(chi(P), chi(Q)).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::algebra::{same_algebra, Algebra};
use crate::base::BasePoly;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::render;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrePoly {
    algebra: Algebra,
    coeffs: Vec<BasePoly>,
}

impl OrePoly {
    /// Builds an operator from coefficients by ascending power of x,
    /// trimming trailing zeros.
    pub fn from_coeffs(algebra: Algebra, mut coeffs: Vec<BasePoly>) -> Self {
        while coeffs.last().is_some_and(BasePoly::is_zero) {
            coeffs.pop();
        }
        OrePoly { algebra, coeffs }
    }

    pub fn zero(algebra: Algebra) -> Self {
        OrePoly { algebra, coeffs: Vec::new() }
    }

    pub fn one(algebra: Algebra) -> Self {
        Self::constant(algebra, BasePoly::one())
    }

    pub fn x(algebra: Algebra) -> Self {
        Self::monomial(algebra, BasePoly::one(), 1)
    }

    /// Embeds a coefficient polynomial as an operator of x-degree <= 0.
    pub fn constant(algebra: Algebra, c: BasePoly) -> Self {
        Self::from_coeffs(algebra, vec![c])
    }

    /// The operator c * x^i.
    pub fn monomial(algebra: Algebra, c: BasePoly, i: usize) -> Self {
        if c.is_zero() {
            return Self::zero(algebra);
        }
        let mut coeffs = vec![BasePoly::zero(); i + 1];
        coeffs[i] = c;
        OrePoly { algebra, coeffs }
    }

    /// The defining relation as an operator: x * r = sigma(r) x + delta(r).
    pub fn x_times(algebra: &Algebra, r: &BasePoly) -> Self {
        Self::from_coeffs(algebra.clone(), vec![algebra.delta(r), algebra.sigma(r)])
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the operator lies in the scalar field K (including 0).
    pub fn is_scalar(&self) -> bool {
        match self.coeffs.len() {
            0 => true,
            1 => self.coeffs[0].is_constant(),
            _ => false,
        }
    }

    /// Degree in x; -∞ for the zero operator.
    pub fn chi(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n as i64 - 1),
        }
    }

    /// Coefficient of x^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BasePoly {
        self.coeffs.get(i).cloned().unwrap_or_else(BasePoly::zero)
    }

    pub fn coeffs(&self) -> &[BasePoly] {
        &self.coeffs
    }

    /// The coefficient a_m with m = chi(P); an error for the zero operator.
    pub fn leading_coeff(&self) -> Result<&BasePoly> {
        self.coeffs.last().ok_or(Error::ZeroOperand { operation: "leading_coeff" })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.algebra.clone());
        }
        OrePoly {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// PQ, or an algebra-mismatch error.
    pub fn checked_mul(&self, rhs: &OrePoly) -> Result<OrePoly> {
        if !same_algebra(&self.algebra, &rhs.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.mul_impl(rhs))
    }

    /// PQ - QP, or an algebra-mismatch error.
    pub fn commutator(&self, rhs: &OrePoly) -> Result<OrePoly> {
        Ok(self.checked_mul(rhs)? - rhs.checked_mul(self)?)
    }

    pub fn pow(&self, exp: u32) -> OrePoly {
        let mut result = OrePoly::one(self.algebra.clone());
        for _ in 0..exp {
            result = result.mul_impl(self);
        }
        result
    }

    fn mul_impl(&self, rhs: &OrePoly) -> OrePoly {
        if self.is_zero() || rhs.is_zero() {
            return OrePoly::zero(self.algebra.clone());
        }
        let mut acc = vec![BasePoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        // shifted holds x^i * Q, advanced by one application of the
        // commutation rule per iteration.
        let mut shifted = rhs.coeffs.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                shifted = shift_once(&self.algebra, &shifted);
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in shifted.iter().enumerate() {
                if !b.is_zero() {
                    acc[j] = &acc[j] + a * b;
                }
            }
        }
        OrePoly::from_coeffs(self.algebra.clone(), acc)
    }
}

/// x * (sum_j b_j x^j) = sum_j sigma(b_j) x^(j+1) + sum_j delta(b_j) x^j.
fn shift_once(algebra: &Algebra, coeffs: &[BasePoly]) -> Vec<BasePoly> {
    let mut out = vec![BasePoly::zero(); coeffs.len() + 1];
    for (j, b) in coeffs.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        out[j + 1] = &out[j + 1] + algebra.sigma(b);
        out[j] = &out[j] + algebra.delta(b);
    }
    out
}

fn require_same(a: &OrePoly, b: &OrePoly) {
    assert!(
        same_algebra(&a.algebra, &b.algebra),
        "{}",
        Error::AlgebraMismatch
    );
}

impl Add<&OrePoly> for &OrePoly {
    type Output = OrePoly;
    fn add(self, rhs: &OrePoly) -> OrePoly {
        require_same(self, rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        OrePoly::from_coeffs(self.algebra.clone(), coeffs)
    }
}

impl Sub<&OrePoly> for &OrePoly {
    type Output = OrePoly;
    fn sub(self, rhs: &OrePoly) -> OrePoly {
        require_same(self, rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        OrePoly::from_coeffs(self.algebra.clone(), coeffs)
    }
}

impl Mul<&OrePoly> for &OrePoly {
    type Output = OrePoly;
    fn mul(self, rhs: &OrePoly) -> OrePoly {
        require_same(self, rhs);
        self.mul_impl(rhs)
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        OrePoly {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for OrePoly {
            type Output = OrePoly;
            fn $method(self, rhs: OrePoly) -> OrePoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&OrePoly> for OrePoly {
            type Output = OrePoly;
            fn $method(self, rhs: &OrePoly) -> OrePoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<OrePoly> for &OrePoly {
            type Output = OrePoly;
            fn $method(self, rhs: OrePoly) -> OrePoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        -&self
    }
}

/// Some((c, k)) when p is the single monomial c * y^k.
fn single_term(p: &BasePoly) -> Option<(Scalar, usize)> {
    let mut found = None;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if found.is_some() {
            return None;
        }
        found = Some((c.clone(), k));
    }
    found
}

impl fmt::Display for OrePoly {
    /// Descending x-power; coefficients in descending y-power. Monomial
    /// coefficients print inline (`3*y^2*x^4`), other coefficients print
    /// as a parenthesized factor (`(y^2 + 1)*x^2`), and the coefficient
    /// of x^0 is spliced in term by term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut w = render::TermWriter::new();
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if i == 0 {
                for (k, c) in a.coeffs().iter().enumerate().rev() {
                    if !c.is_zero() {
                        w.monomial(f, c, &render::factors(&[("y", k)]))?;
                    }
                }
            } else if let Some((c, k)) = single_term(a) {
                w.monomial(f, &c, &render::factors(&[("y", k), ("x", i)]))?;
            } else {
                let negative =
                    !w.is_first() && a.leading_coeff().is_some_and(Signed::is_negative);
                let inner = if negative { (-a).to_string() } else { a.to_string() };
                w.grouped(f, &inner, negative, &render::factors(&[("x", i)]))?;
            }
        }
        w.finish(f)
    }
}

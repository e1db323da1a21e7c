//! Presentation of the Ore algebra S = K[y][x; sigma, delta].
//!
//! An algebra is determined by the images sigma(y) and delta(y): sigma is
//! the unique K-algebra endomorphism of K[y] sending y to sigma(y), and
//! delta is the unique K-linear sigma-derivation sending y to delta(y),
//! i.e. the additive map with delta(ab) = sigma(a)delta(b) + delta(a)b.
//!
//! The derived constant s = deg_y(sigma(y)) controls the structure: for
//! s >= 1 sigma is injective, S has no zero divisors, and the x-degree is
//! multiplicative ("domain mode"); s = 0 algebras still have well-defined
//! arithmetic but the centralizer and annihilator machinery refuses them.

use std::sync::Arc;

use num_traits::Zero;

use crate::base::BasePoly;
use crate::error::{Error, Result};

/// Shared handle under which operators reference their algebra.
pub type Algebra = Arc<OreAlgebraSpec>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreAlgebraSpec {
    sigma_y: BasePoly,
    delta_y: BasePoly,
    s: i64,
}

impl OreAlgebraSpec {
    /// Builds an algebra from the images of y under sigma and delta.
    /// Fails if sigma(y) = 0, which would make sigma annihilate y.
    pub fn new(sigma_y: BasePoly, delta_y: BasePoly) -> Result<Self> {
        let s = sigma_y.degree().as_finite().ok_or(Error::InvalidAlgebra {
            message: "sigma(y) must be nonzero".to_string(),
        })?;
        Ok(OreAlgebraSpec { sigma_y, delta_y, s })
    }

    /// The Weyl preset: sigma = identity, delta = d/dy.
    pub fn weyl() -> Self {
        OreAlgebraSpec {
            sigma_y: BasePoly::y(),
            delta_y: BasePoly::one(),
            s: 1,
        }
    }

    pub fn sigma_y(&self) -> &BasePoly {
        &self.sigma_y
    }

    pub fn delta_y(&self) -> &BasePoly {
        &self.delta_y
    }

    /// deg_y(sigma(y)).
    pub fn s(&self) -> i64 {
        self.s
    }

    /// True when s >= 1, so sigma is injective and x-degrees multiply.
    pub fn is_domain(&self) -> bool {
        self.s >= 1
    }

    pub fn require_domain(&self) -> Result<()> {
        if self.is_domain() {
            Ok(())
        } else {
            Err(Error::NotADomain { s: self.s })
        }
    }

    /// sigma(p) = p(sigma(y)).
    pub fn sigma(&self, p: &BasePoly) -> BasePoly {
        p.compose(&self.sigma_y)
    }

    /// sigma iterated k times.
    pub fn sigma_pow(&self, p: &BasePoly, k: usize) -> BasePoly {
        let mut result = p.clone();
        for _ in 0..k {
            result = self.sigma(&result);
        }
        result
    }

    /// delta(p), by K-linear extension of
    /// delta(y^n) = sigma(y) * delta(y^(n-1)) + delta(y) * y^(n-1).
    pub fn delta(&self, p: &BasePoly) -> BasePoly {
        let coeffs = p.coeffs();
        if coeffs.len() <= 1 {
            return BasePoly::zero();
        }
        let mut result = BasePoly::zero();
        // delta(y^n) for the current n, starting at delta(y^0) = 0.
        let mut delta_pow = BasePoly::zero();
        let mut y_pow = BasePoly::one();
        for c in coeffs.iter().skip(1) {
            delta_pow = &self.sigma_y * &delta_pow + &self.delta_y * &y_pow;
            y_pow = y_pow * BasePoly::y();
            if !c.is_zero() {
                result = result + delta_pow.scale(c);
            }
        }
        result
    }
}

/// Convenience for tests and presets: wraps a spec for sharing.
pub fn shared(spec: OreAlgebraSpec) -> Algebra {
    Arc::new(spec)
}

/// True when both operands reference the same algebra presentation.
pub(crate) fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

//! Annihilating polynomials for commuting operator pairs.
//!
//! For commuting P and Q the powers P^i Q^j cannot stay linearly
//! independent over K forever, so some nonzero f(s, t) with f(P, Q) = 0
//! exists. The search is direct: flatten every product P^i Q^j with
//! i <= I, j <= J into shared coordinates and take a kernel vector of the
//! resulting matrix. The returned relation therefore holds exactly by
//! construction, and callers can re-verify it through `evaluate`.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::same_algebra;
use crate::coords::CoordBox;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ore::OrePoly;
use crate::render;
use crate::scalar::Scalar;

/// Default doubling budget for the automatic bound escalation.
pub const DEFAULT_MAX_DOUBLINGS: u32 = 5;

/// A polynomial in two commuting variables s and t, stored as the grid
/// coeffs[i][j] for s^i t^j. Canonical form: trailing zero rows and
/// columns trimmed, first nonzero coefficient in (i, j)-lexicographic
/// order equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: Vec<Vec<Scalar>>,
}

impl BivariatePoly {
    /// Builds from a grid of coefficients (outer index = power of s,
    /// inner = power of t), trimming but not rescaling.
    pub fn from_grid(mut coeffs: Vec<Vec<Scalar>>) -> Self {
        for row in &mut coeffs {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        BivariatePoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of s^i t^j.
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Nonzero terms (i, j, c) in ascending (i, j)-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// Rescales so the first nonzero coefficient in (i, j)-lex order is 1.
    pub fn normalize(mut self) -> Self {
        let Some(lead) = self.terms().next().map(|(_, _, c)| c.clone()) else {
            return self;
        };
        if !lead.is_one() {
            for row in &mut self.coeffs {
                for c in row {
                    *c = &*c / &lead;
                }
            }
        }
        self
    }

    /// f(P, Q) = sum c_ij P^i Q^j; an error when P and Q do not commute
    /// (the value would depend on the evaluation order).
    pub fn evaluate(&self, p: &OrePoly, q: &OrePoly) -> Result<OrePoly> {
        let comm = p.commutator(q)?;
        if !comm.is_zero() {
            return Err(Error::NotCommuting { chi: comm.chi() });
        }
        let algebra = p.algebra().clone();
        let mut p_pows = vec![OrePoly::one(algebra.clone())];
        let mut q_pows = vec![OrePoly::one(algebra.clone())];
        let mut acc = OrePoly::zero(algebra);
        for (i, j, c) in self.terms() {
            while p_pows.len() <= i {
                p_pows.push(p_pows.last().unwrap() * p);
            }
            while q_pows.len() <= j {
                q_pows.push(q_pows.last().unwrap() * q);
            }
            acc = acc + (&p_pows[i] * &q_pows[j]).scale(c);
        }
        Ok(acc)
    }
}

impl fmt::Display for BivariatePoly {
    /// Terms in ascending (i, j)-lexicographic order, e.g. `t^2 - s^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render::fmt_terms(
            f,
            self.terms()
                .map(|(i, j, c)| (c.clone(), render::factors(&[("s", i), ("t", j)]))),
        )
    }
}

fn require_annihilator_inputs(p: &OrePoly, q: &OrePoly, operation: &'static str) -> Result<()> {
    if !same_algebra(p.algebra(), q.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    p.algebra().require_domain()?;
    if p.is_scalar() {
        return Err(Error::ScalarOperand { operation });
    }
    let comm = p.commutator(q)?;
    if !comm.is_zero() {
        return Err(Error::NotCommuting { chi: comm.chi() });
    }
    Ok(())
}

/// Searches for a nonzero f with f(P, Q) = 0 among monomials s^i t^j,
/// i <= deg_s, j <= deg_t. Returns None when the products are still
/// linearly independent at these bounds.
///
/// Among all kernel vectors the returned one has the lexicographically
/// least leading monomial, which makes the output canonical.
pub fn annihilating_polynomial(
    p: &OrePoly,
    q: &OrePoly,
    deg_s: usize,
    deg_t: usize,
) -> Result<Option<BivariatePoly>> {
    require_annihilator_inputs(p, q, "annihilating_polynomial")?;
    let mut p_pows = vec![OrePoly::one(p.algebra().clone())];
    for _ in 0..deg_s {
        p_pows.push(p_pows.last().unwrap() * p);
    }
    let mut q_pows = vec![OrePoly::one(p.algebra().clone())];
    for _ in 0..deg_t {
        q_pows.push(q_pows.last().unwrap() * q);
    }
    // Column (i, j) at index i*(deg_t+1)+j: ascending (i, j)-lex, matching
    // the coefficient grid of BivariatePoly.
    let products: Vec<OrePoly> = p_pows
        .iter()
        .flat_map(|pi| q_pows.iter().map(move |qj| pi * qj))
        .collect();
    let hull = CoordBox::hull(&products);
    let mut m = Matrix::zero(hull.dim(), products.len());
    for (col, product) in products.iter().enumerate() {
        for (row, e) in hull.flatten(product).into_iter().enumerate() {
            if !e.is_zero() {
                m.set(row, col, e);
            }
        }
    }
    let kernel = m.kernel_basis();
    let Some(v) = kernel.into_iter().next() else {
        return Ok(None);
    };
    let grid = v.chunks(deg_t + 1).map(<[Scalar]>::to_vec).collect();
    Ok(Some(BivariatePoly::from_grid(grid).normalize()))
}

/// Escalating search: starts at deg_s = chi(Q)+1, deg_t = chi(P)+1 and
/// doubles both bounds until a relation appears, up to `max_doublings`
/// rounds. Termination at small bounds is the expected case for inputs
/// satisfying the centralizer finiteness conditions; the cap turns the
/// remaining cases into an error instead of a loop.
pub fn annihilating_polynomial_auto(
    p: &OrePoly,
    q: &OrePoly,
    max_doublings: u32,
) -> Result<BivariatePoly> {
    require_annihilator_inputs(p, q, "annihilating_polynomial_auto")?;
    if p.chi() <= Degree::Finite(0) {
        return Err(Error::NoPositiveDegree { operation: "annihilating_polynomial_auto" });
    }
    let mut deg_s = (q.chi().as_finite().unwrap_or(-1) + 1) as usize;
    let mut deg_t = (p.chi().as_finite().unwrap_or(-1) + 1) as usize;
    let mut doublings = 0;
    loop {
        if let Some(f) = annihilating_polynomial(p, q, deg_s, deg_t)? {
            return Ok(f);
        }
        if doublings == max_doublings {
            return Err(Error::BudgetExhausted {
                doublings,
                deg_s: deg_s as i64,
                deg_t: deg_t as i64,
            });
        }
        doublings += 1;
        deg_s = (deg_s * 2).max(1);
        deg_t = (deg_t * 2).max(1);
    }
}

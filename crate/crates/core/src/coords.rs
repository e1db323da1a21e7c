//! Flattened coordinates for operators inside a bounded monomial box.
//!
//! The monomials y^j x^i with i <= max_x and j <= max_y are listed in
//! (i, j)-lexicographic order, x-power major: index = i*(max_y+1) + j.
//! Every module that turns operators into vectors uses this order, so the
//! centralizer and annihilator pipelines agree on what "first" and
//! "leading" mean.

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::base::BasePoly;
use crate::ore::OrePoly;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoordBox {
    max_x: usize,
    max_y: usize,
}

impl CoordBox {
    pub fn new(max_x: usize, max_y: usize) -> Self {
        CoordBox { max_x, max_y }
    }

    /// The smallest box containing every operator in the list; (0, 0) for
    /// an all-zero family.
    pub fn hull<'a>(ops: impl IntoIterator<Item = &'a OrePoly>) -> Self {
        let mut max_x = 0;
        let mut max_y = 0;
        for op in ops {
            for (i, c) in op.coeffs().iter().enumerate() {
                if let Some(d) = c.degree().as_finite() {
                    max_x = max_x.max(i);
                    max_y = max_y.max(d as usize);
                }
            }
        }
        CoordBox { max_x, max_y }
    }

    pub fn max_x(&self) -> usize {
        self.max_x
    }

    pub fn max_y(&self) -> usize {
        self.max_y
    }

    pub fn dim(&self) -> usize {
        (self.max_x + 1) * (self.max_y + 1)
    }

    /// Coordinate index of the monomial y^j x^i.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.max_x && j <= self.max_y);
        i * (self.max_y + 1) + j
    }

    /// The (i, j) of a coordinate index: y^j x^i.
    pub fn monomial(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.dim());
        (index / (self.max_y + 1), index % (self.max_y + 1))
    }

    pub fn contains(&self, op: &OrePoly) -> bool {
        op.coeffs().iter().enumerate().all(|(i, c)| {
            i <= self.max_x
                && c.degree().as_finite().is_none_or(|d| d as usize <= self.max_y)
        })
    }

    /// The coordinate vector of an operator that fits in the box.
    pub fn flatten(&self, op: &OrePoly) -> Vec<Scalar> {
        assert!(self.contains(op), "operator exceeds the coordinate box");
        let mut v = vec![Scalar::zero(); self.dim()];
        for (i, c) in op.coeffs().iter().enumerate() {
            for (j, e) in c.coeffs().iter().enumerate() {
                if !e.is_zero() {
                    v[self.index(i, j)] = e.clone();
                }
            }
        }
        v
    }

    /// Rebuilds the operator from a coordinate vector of length dim().
    pub fn unflatten(&self, algebra: &Algebra, v: &[Scalar]) -> OrePoly {
        assert_eq!(v.len(), self.dim(), "coordinate vector has the wrong length");
        let width = self.max_y + 1;
        let coeffs = v
            .chunks(width)
            .map(|chunk| BasePoly::from_coeffs(chunk.to_vec()))
            .collect();
        OrePoly::from_coeffs(algebra.clone(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{shared, OreAlgebraSpec};

    #[test]
    fn index_order_is_x_major() {
        let b = CoordBox::new(2, 3);
        assert_eq!(b.dim(), 12);
        assert_eq!(b.index(0, 0), 0);
        assert_eq!(b.index(0, 3), 3);
        assert_eq!(b.index(1, 0), 4);
        assert_eq!(b.monomial(7), (1, 3));
        for k in 0..b.dim() {
            let (i, j) = b.monomial(k);
            assert_eq!(b.index(i, j), k);
        }
    }

    #[test]
    fn flatten_round_trip() {
        let alg = shared(OreAlgebraSpec::weyl());
        let op = OrePoly::from_coeffs(
            alg.clone(),
            vec![
                BasePoly::from_int_coeffs(&[1, 0, -2]),
                BasePoly::zero(),
                BasePoly::from_int_coeffs(&[0, 5]),
            ],
        );
        let b = CoordBox::hull([&op]);
        assert_eq!((b.max_x(), b.max_y()), (2, 2));
        let v = b.flatten(&op);
        assert_eq!(b.unflatten(&alg, &v), op);

        let bigger = CoordBox::new(4, 3);
        assert!(bigger.contains(&op));
        assert_eq!(bigger.unflatten(&alg, &bigger.flatten(&op)), op);
    }

    #[test]
    fn hull_of_zeros_is_origin() {
        let alg = shared(OreAlgebraSpec::weyl());
        let z = OrePoly::zero(alg);
        let b = CoordBox::hull([&z]);
        assert_eq!(b.dim(), 1);
    }
}

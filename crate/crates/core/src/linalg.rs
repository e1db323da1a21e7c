//! Dense exact linear algebra over K.
//!
//! Elimination is fraction-free: each row is cleared to integers, the
//! forward pass is Bareiss elimination (every intermediate entry is a
//! minor of the cleared matrix, and the division by the previous pivot is
//! exact), and only the final reduction pass works in rationals. A
//! spurious zero or nonzero here would silently change ranks, so every
//! supposedly exact division is checked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::scalar::integer(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns, in order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        // Forward pass: Bareiss elimination on denominator-cleared rows.
        // Every intermediate entry is a minor over the pivot rows/columns,
        // so the division by the previous pivot is exact.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|r| clear_row(self.row(r))).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = BigInt::one();
        for c in 0..self.cols {
            let r = pivots.len();
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let (top, rest) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest {
                let factor = std::mem::replace(&mut row[c], BigInt::zero());
                for j in c + 1..self.cols {
                    let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                    if num.is_zero() {
                        row[j] = num;
                        continue;
                    }
                    let (q, rem) = num.div_rem(&prev);
                    assert!(rem.is_zero(), "fraction-free elimination lost exactness");
                    row[j] = q;
                }
            }
            prev = m[r][c].clone();
            pivots.push(c);
            if pivots.len() == self.rows {
                break;
            }
        }

        // Reduction pass: normalize pivots to 1 and clear above, in rationals.
        let mut out: Vec<Vec<Scalar>> = m
            .into_iter()
            .enumerate()
            .map(|(r, row)| {
                if r < pivots.len() {
                    let lead = Scalar::from_integer(row[pivots[r]].clone());
                    row.into_iter().map(|v| Scalar::from_integer(v) / &lead).collect()
                } else {
                    vec![Scalar::zero(); self.cols]
                }
            })
            .collect();
        for r in (0..pivots.len()).rev() {
            let pc = pivots[r];
            let (above, below) = out.split_at_mut(r);
            let pivot_row = &below[0];
            for row in above.iter_mut() {
                let factor = std::mem::replace(&mut row[pc], Scalar::zero());
                if factor.is_zero() {
                    continue;
                }
                for j in pc + 1..self.cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = &row[j] - &factor * &pivot_row[j];
                    }
                }
            }
        }
        (Matrix::from_rows(out), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column in
    /// ascending order. Each vector is supported on columns up to its
    /// free column and normalized so its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            let lead = v.iter().find(|e| !e.is_zero()).cloned().unwrap();
            if !lead.is_one() {
                for e in &mut v {
                    *e = &*e / &lead;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of M·x = b with free variables set to zero, or
    /// None when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Scales a rational row to coprime integers (lcm of denominators).
fn clear_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(3);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let m = Matrix::zero(2, 3);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_clears_above() {
        let m = Matrix::from_int_rows(&[&[2, 1, 1], &[4, 3, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, Matrix::from_int_rows(&[&[1, 0, 1], &[0, 1, -1]]));
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_int_rows(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5], &[3, 5, 8]]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_rows(vec![
            vec![crate::scalar::rational(1, 2), crate::scalar::integer(1)],
            vec![crate::scalar::integer(1), crate::scalar::integer(3)],
        ]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let basis = Matrix::zero(2, 3).kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            assert!(v[i].is_one());
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = Matrix::from_int_rows(&[&[1, 1, 0]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
            assert!(v.iter().find(|e| !e.is_zero()).unwrap().is_one());
        }
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = vec![crate::scalar::integer(5), crate::scalar::integer(11)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);

        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let bad = vec![crate::scalar::integer(1), crate::scalar::integer(3)];
        assert_eq!(singular.solve(&bad), None);
        let good = vec![crate::scalar::integer(1), crate::scalar::integer(2)];
        let x = singular.solve(&good).unwrap();
        assert_eq!(singular.mul_vec(&x), good);
    }
}

//! Shared helpers for integration tests: seeded samplers and independent
//! oracles. The oracles recompute sigma, delta, products and kernels along
//! different code paths than the library (naive power sums, the mirrored
//! Leibniz recursion, plain rational elimination) so agreement is evidence
//! rather than tautology.

#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use orecas::annihilator::BivariatePoly;
use orecas::{Algebra, BasePoly, OrePoly, Scalar};

pub fn integer(n: i64) -> Scalar {
    orecas::scalar::integer(n)
}

// ---------------------------------------------------------------- samplers

pub fn sample_base(rng: &mut ChaCha8Rng, max_deg: usize) -> BasePoly {
    let deg = rng.gen_range(0..=max_deg);
    BasePoly::from_coeffs((0..=deg).map(|_| integer(rng.gen_range(-3..=3))).collect())
}

pub fn sample_operator(
    rng: &mut ChaCha8Rng,
    algebra: &Algebra,
    max_x: usize,
    max_y: usize,
) -> OrePoly {
    let deg = rng.gen_range(0..=max_x);
    OrePoly::from_coeffs(
        algebra.clone(),
        (0..=deg).map(|_| sample_base(rng, max_y)).collect(),
    )
}

pub fn sample_nonzero_operator(
    rng: &mut ChaCha8Rng,
    algebra: &Algebra,
    max_x: usize,
    max_y: usize,
) -> OrePoly {
    loop {
        let p = sample_operator(rng, algebra, max_x, max_y);
        if !p.is_zero() {
            return p;
        }
    }
}

// ------------------------------------------------------- sigma/delta oracle

/// sigma as an explicit power sum: sigma(sum c_k y^k) = sum c_k sigma(y)^k,
/// with powers built by naive repeated multiplication.
pub fn sigma_oracle(algebra: &Algebra, p: &BasePoly) -> BasePoly {
    let mut acc = BasePoly::zero();
    let mut power = BasePoly::one();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k > 0 {
            power = &power * algebra.sigma_y();
        }
        acc = acc + power.scale(c);
    }
    acc
}

/// delta via the mirrored Leibniz factorization
/// delta(y^n) = sigma(y^(n-1)) * delta(y) + delta(y^(n-1)) * y,
/// extended K-linearly. The library recurses on the other factorization.
pub fn delta_oracle(algebra: &Algebra, p: &BasePoly) -> BasePoly {
    let mut acc = BasePoly::zero();
    // delta(y^k) and y^(k-1) for the current k.
    let mut delta_pow = BasePoly::zero();
    let mut y_pow = BasePoly::one();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k > 0 {
            delta_pow =
                sigma_oracle(algebra, &y_pow) * algebra.delta_y() + delta_pow * BasePoly::y();
            y_pow = y_pow * BasePoly::y();
        }
        acc = acc + delta_pow.scale(c);
    }
    acc
}

// ---------------------------------------------------- multiplication oracle

/// x * (sum b_j x^j) = sum sigma(b_j) x^(j+1) + delta(b_j) x^j, computed
/// with the oracle sigma/delta on a raw coefficient vector.
fn x_times_vec(algebra: &Algebra, coeffs: &[BasePoly]) -> Vec<BasePoly> {
    let mut out = vec![BasePoly::zero(); coeffs.len() + 1];
    for (j, b) in coeffs.iter().enumerate() {
        out[j + 1] = &out[j + 1] + sigma_oracle(algebra, b);
        out[j] = &out[j] + delta_oracle(algebra, b);
    }
    out
}

/// Product by direct expansion: for each term a_i x^i of p, apply x i
/// times to q and left-multiply the result's coefficients by a_i.
pub fn mul_oracle(p: &OrePoly, q: &OrePoly) -> OrePoly {
    let algebra = p.algebra().clone();
    let mut acc = OrePoly::zero(algebra.clone());
    let mut shifted: Vec<BasePoly> = q.coeffs().to_vec();
    for (i, a) in p.coeffs().iter().enumerate() {
        if i > 0 {
            shifted = x_times_vec(&algebra, &shifted);
        }
        let term: Vec<BasePoly> = shifted.iter().map(|c| a * c).collect();
        acc = acc + OrePoly::from_coeffs(algebra.clone(), term);
    }
    acc
}

pub fn commutator_oracle(p: &OrePoly, q: &OrePoly) -> OrePoly {
    mul_oracle(p, q) - mul_oracle(q, p)
}

/// f(P, Q) recomputed from scratch: powers of P and Q by naive oracle
/// multiplication, then the double sum.
pub fn evaluate_oracle(f: &BivariatePoly, p: &OrePoly, q: &OrePoly) -> OrePoly {
    let algebra = p.algebra().clone();
    let mut acc = OrePoly::zero(algebra.clone());
    for (i, j, c) in f.terms() {
        let mut term = OrePoly::one(algebra.clone());
        for _ in 0..i {
            term = mul_oracle(&term, p);
        }
        for _ in 0..j {
            term = mul_oracle(&term, q);
        }
        acc = acc + term.scale(c);
    }
    acc
}

/// phi(a) for phi in K[a]: explicit power sum in the operator ring.
pub fn eval_at_operator(phi: &BasePoly, a: &OrePoly) -> OrePoly {
    let algebra = a.algebra().clone();
    let mut acc = OrePoly::zero(algebra.clone());
    let mut power = OrePoly::one(algebra);
    for (k, c) in phi.coeffs().iter().enumerate() {
        if k > 0 {
            power = &power * a;
        }
        acc = acc + power.scale(c);
    }
    acc
}

/// Flattens operators into vectors over their joint monomial box, with the
/// y-major layout (the library uses x-major internally).
pub fn flatten_ops(ops: &[&OrePoly]) -> Vec<Vec<Scalar>> {
    let max_x = ops.iter().map(|g| g.coeffs().len()).max().unwrap_or(0);
    let max_y = ops
        .iter()
        .flat_map(|g| g.coeffs())
        .map(|c| c.coeffs().len())
        .max()
        .unwrap_or(0);
    ops.iter()
        .map(|g| {
            let mut v = vec![Scalar::zero(); max_x * max_y];
            for (ix, c) in g.coeffs().iter().enumerate() {
                for (jy, e) in c.coeffs().iter().enumerate() {
                    v[jy * max_x + ix] = e.clone();
                }
            }
            v
        })
        .collect()
}

// -------------------------------------------------- naive linear elimination

/// Plain rational Gaussian elimination, no fraction-free bookkeeping.
/// Returns the rank.
pub fn naive_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let height = rows.len();
    if height == 0 {
        return 0;
    }
    let width = rows[0].len();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..height).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Scalar::one() / rows[rank][col].clone();
        for v in &mut rows[rank] {
            *v = &*v * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &factor * p;
                }
            }
        }
        rank += 1;
        if rank == height {
            break;
        }
    }
    rank
}

/// Kernel dimension by rank-nullity.
pub fn naive_nullity(rows: Vec<Vec<Scalar>>, cols: usize) -> usize {
    cols - naive_rank(rows)
}

/// Flattened commutator constraints for the degree-slice system, built
/// with the oracle commutator and a y-major flattening (the library uses
/// x-major), so both the arithmetic and the coordinates are independent.
///
/// Columns are the monomials y^j x^i with i <= n, j <= coeff_bound; rows
/// are the coordinates of [a, y^j x^i].
pub fn slice_constraints_oracle(
    a: &OrePoly,
    n: usize,
    coeff_bound: usize,
) -> (Vec<Vec<Scalar>>, usize) {
    let algebra = a.algebra().clone();
    let mut gens = Vec::new();
    for j in 0..=coeff_bound {
        for i in 0..=n {
            let mono = OrePoly::monomial(
                algebra.clone(),
                BasePoly::monomial(Scalar::one(), j),
                i,
            );
            gens.push(commutator_oracle(a, &mono));
        }
    }
    let max_x = gens
        .iter()
        .map(|g| g.coeffs().len())
        .max()
        .unwrap_or(0);
    let max_y = gens
        .iter()
        .flat_map(|g| g.coeffs())
        .map(|c| c.coeffs().len())
        .max()
        .unwrap_or(0);
    // Row index of y^jy x^ix is jy * max_x + ix: y-major.
    let mut rows = vec![vec![Scalar::zero(); gens.len()]; max_x * max_y];
    for (col, g) in gens.iter().enumerate() {
        for (ix, c) in g.coeffs().iter().enumerate() {
            for (jy, e) in c.coeffs().iter().enumerate() {
                if !e.is_zero() {
                    rows[jy * max_x + ix][col] = e.clone();
                }
            }
        }
    }
    (rows, gens.len())
}

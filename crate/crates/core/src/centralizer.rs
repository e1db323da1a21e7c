//! Centralizer slices, condition D(l), and free module bases over K[a].
//!
//! The centralizer C_S(a) is explored by degree slices: for a bound n on
//! the x-degree and a bound D on the coefficient y-degree, the slice is
//! the exact kernel of b |-> ab - ba restricted to the monomial box, a
//! finite-dimensional K-space. On top of the slices sit
//!
//! * leading-coefficient dimensions per degree (condition D(l)),
//! * a greedy free-module basis over K[a]: b_1 = 1, then repeatedly the
//!   slice element of minimal degree outside the K[a]-span so far,
//! * span membership with explicit coefficients phi_i in K[a], and
//! * the commutativity check for the slice.
//!
//! Truncation in y is the one concession to finiteness. When no explicit
//! bound is given, a starting bound is derived from the input (its
//! coefficients, the coefficients of its relevant powers, and for s >= 2
//! the leading-coefficient balance equation) and doubled until the slice
//! basis is identical at two consecutive bounds.

use num_bigint::BigInt;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::algebra::same_algebra;
use crate::base::BasePoly;
use crate::coords::CoordBox;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ore::OrePoly;
use crate::scalar::Scalar;

/// Floor for automatically chosen coefficient-degree bounds.
const MIN_COEFF_BOUND: usize = 4;
/// Doublings attempted before giving up on stabilization.
const MAX_COEFF_DOUBLINGS: u32 = 4;

/// A K-basis of {b : chi(b) <= n, deg_y of coefficients <= coeff_bound,
/// ab = ba}, in ascending order of leading monomial.
#[derive(Clone, Debug)]
pub struct CentralizerSlice {
    pub a: OrePoly,
    pub n: usize,
    /// The coefficient-degree bound the basis was verified at.
    pub coeff_bound: usize,
    pub basis: Vec<OrePoly>,
}

/// Validates a as a centralizer base point: nonzero, not a scalar.
fn require_base_point(a: &OrePoly, operation: &'static str) -> Result<()> {
    a.algebra().require_domain()?;
    if a.is_scalar() {
        return Err(Error::ScalarOperand { operation });
    }
    Ok(())
}

/// The slice basis at one explicit coefficient bound.
fn slice_basis_at(a: &OrePoly, n: usize, coeff_bound: usize) -> Vec<OrePoly> {
    let algebra = a.algebra();
    let inbox = CoordBox::new(n, coeff_bound);
    let gens: Vec<OrePoly> = (0..inbox.dim())
        .map(|k| {
            let (i, j) = inbox.monomial(k);
            let mono = OrePoly::monomial(
                algebra.clone(),
                BasePoly::monomial(Scalar::one(), j),
                i,
            );
            a * &mono - mono * a
        })
        .collect();
    let outbox = CoordBox::hull(&gens);
    let mut m = Matrix::zero(outbox.dim(), inbox.dim());
    for (col, g) in gens.iter().enumerate() {
        for (row, e) in outbox.flatten(g).into_iter().enumerate() {
            if !e.is_zero() {
                m.set(row, col, e);
            }
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| inbox.unflatten(algebra, &v))
        .collect()
}

/// Starting point for the automatic coefficient bound: the coefficient
/// degrees of a and of the powers a^k that fit under the degree bound,
/// the balance-equation degrees where they apply, and a floor of 4.
fn default_coeff_bound(a: &OrePoly, n: usize) -> Result<usize> {
    let mut bound = MIN_COEFF_BOUND as i64;
    let mut absorb = |op: &OrePoly| {
        for c in op.coeffs() {
            if let Some(d) = c.degree().as_finite() {
                bound = bound.max(d);
            }
        }
    };
    absorb(a);
    if let Some(m) = a.chi().as_finite() {
        if m > 0 {
            let mut power = a.clone();
            let mut k = 1;
            while (k + 1) * m <= n as i64 {
                power = &power * a;
                k += 1;
                absorb(&power);
            }
        }
    }
    if a.algebra().s() >= 2 && a.chi() > Degree::Finite(0) {
        for deg in 0..=n {
            if let Some(d) = leading_coeff_degree_bound(a, deg)? {
                bound = bound.max(d);
            }
        }
    }
    Ok(bound as usize)
}

/// Computes the degree-<= n centralizer slice of a. With an explicit
/// coeff_bound the slice is truncated exactly there; with None the bound
/// starts at a derived default and doubles until the basis stabilizes.
pub fn centralizer_slice(
    a: &OrePoly,
    n: usize,
    coeff_bound: Option<usize>,
) -> Result<CentralizerSlice> {
    require_base_point(a, "centralizer_slice")?;
    if let Some(d) = coeff_bound {
        return Ok(CentralizerSlice {
            a: a.clone(),
            n,
            coeff_bound: d,
            basis: slice_basis_at(a, n, d),
        });
    }
    let mut d = default_coeff_bound(a, n)?;
    let mut basis = slice_basis_at(a, n, d);
    for _ in 0..MAX_COEFF_DOUBLINGS {
        let next = slice_basis_at(a, n, 2 * d);
        if next == basis {
            return Ok(CentralizerSlice { a: a.clone(), n, coeff_bound: d, basis });
        }
        d *= 2;
        basis = next;
    }
    Err(Error::CoeffBoundUnstable { last: d as i64 })
}

/// The y-degree forced on the leading coefficient of a degree-n
/// centralizer element by the balance equation
/// deg_y(a_m) + s^m * d = d + s^n * deg_y(a_m),
/// i.e. d = deg_y(a_m) * (s^n - 1) / (s^m - 1); None when that value is
/// not a nonnegative integer (no degree-n element can exist).
pub fn leading_coeff_degree_bound(a: &OrePoly, n: usize) -> Result<Option<i64>> {
    let s = a.algebra().s();
    if s < 2 {
        return Err(Error::BalanceDegenerate { s });
    }
    if a.is_scalar() {
        return Err(Error::ScalarOperand { operation: "leading_coeff_degree_bound" });
    }
    let m = match a.chi() {
        Degree::Finite(m) if m > 0 => m as u32,
        _ => return Err(Error::NoPositiveDegree { operation: "leading_coeff_degree_bound" }),
    };
    let da = a
        .leading_coeff()
        .expect("nonzero by the scalar check")
        .degree()
        .expect_finite("leading coefficient of a nonzero operator");
    let s = BigInt::from(s);
    let numer = BigInt::from(da) * (Pow::pow(&s, n as u32) - BigInt::one());
    let denom = Pow::pow(&s, m) - BigInt::one();
    if (&numer % &denom).is_zero() {
        let d = (numer / denom).to_i64().ok_or(Error::InvalidArgument {
            message: "balance-equation degree overflows a machine integer".to_string(),
        })?;
        Ok(Some(d))
    } else {
        Ok(None)
    }
}

/// Groups a slice basis by exact degree and returns, for each n in
/// 0..=max, the dimension of the leading-coefficient space at degree n.
fn leading_dims(slice: &CentralizerSlice, max: usize) -> Vec<usize> {
    (0..=max)
        .map(|deg| {
            let lcs: Vec<Vec<Scalar>> = slice
                .basis
                .iter()
                .filter(|b| b.chi() == Degree::Finite(deg as i64))
                .map(|b| {
                    let lc = b.leading_coeff().expect("basis elements are nonzero");
                    let mut v = lc.coeffs().to_vec();
                    v.resize(slice.coeff_bound + 1, Scalar::zero());
                    v
                })
                .collect();
            if lcs.is_empty() {
                0
            } else {
                Matrix::from_rows(lcs).rank()
            }
        })
        .collect()
}

/// Dimension of {leading_coeff(b) : b in C_S(a), chi(b) = n} ∪ {0}.
pub fn leading_space_dim(a: &OrePoly, n: usize, coeff_bound: Option<usize>) -> Result<usize> {
    let slice = centralizer_slice(a, n, coeff_bound)?;
    Ok(leading_dims(&slice, n)[n])
}

/// Per-degree leading-space dimensions up to a bound, compared against l.
///
/// The other half of condition D(l) — chi(b) >= 0 for every nonzero b —
/// holds structurally: operators are polynomials in x, so a nonzero
/// element always has a nonnegative degree.
#[derive(Clone, Debug)]
pub struct ConditionDReport {
    pub ell: usize,
    pub max_degree: usize,
    pub coeff_bound: usize,
    /// dims[n] = leading-space dimension at degree n.
    pub dims: Vec<usize>,
    /// Degrees where the dimension exceeds ell.
    pub violations: Vec<usize>,
}

impl ConditionDReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies leading_space_dim(a, n) <= ell for every n <= max_degree.
pub fn check_condition_d(
    a: &OrePoly,
    ell: usize,
    max_degree: usize,
    coeff_bound: Option<usize>,
) -> Result<ConditionDReport> {
    let slice = centralizer_slice(a, max_degree, coeff_bound)?;
    let dims = leading_dims(&slice, max_degree);
    let violations = (0..=max_degree).filter(|&n| dims[n] > ell).collect();
    Ok(ConditionDReport {
        ell,
        max_degree,
        coeff_bound: slice.coeff_bound,
        dims,
        violations,
    })
}

/// A free K[a]-module basis of the centralizer up to a degree bound:
/// elements b_1 = 1, b_2, ... with their degrees chi(b_i).
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    pub a: OrePoly,
    /// m = chi(a).
    pub m: usize,
    pub elements: Vec<OrePoly>,
    pub degrees: Vec<usize>,
    /// Degree bound the construction exhausted.
    pub max_degree: usize,
    pub coeff_bound: usize,
}

/// Builds the greedy basis: starting from b_1 = 1, repeatedly adjoins the
/// slice element of minimal degree (ties broken by leading monomial)
/// outside the K[a]-span of the elements so far, normalized so the
/// leading y-term of its leading coefficient is 1. On return every slice
/// element up to max_degree reduces to 0 against the basis.
pub fn greedy_basis(
    a: &OrePoly,
    max_degree: usize,
    coeff_bound: Option<usize>,
) -> Result<ModuleBasis> {
    if a.is_scalar() {
        return Err(Error::ScalarOperand { operation: "greedy_basis" });
    }
    a.algebra().require_domain()?;
    let m = a.chi().expect_finite("nonzero by the scalar check");
    if m == 0 {
        return Err(Error::NoPositiveDegree { operation: "greedy_basis" });
    }
    if (max_degree as i64) < m {
        return Err(Error::BoundExhausted { needed: m, given: max_degree as i64 });
    }
    let slice = centralizer_slice(a, max_degree, coeff_bound)?;

    let mut basis = ModuleBasis {
        a: a.clone(),
        m: m as usize,
        elements: vec![OrePoly::one(a.algebra().clone())],
        degrees: vec![0],
        max_degree,
        coeff_bound: slice.coeff_bound,
    };
    // Kernel vectors come out in ascending leading-monomial order, which
    // is exactly the greedy visiting order: degree first, then leading
    // coefficient degree.
    for candidate in &slice.basis {
        if span_membership(candidate, &basis)?.is_some() {
            continue;
        }
        let lc_lead = candidate
            .leading_coeff()
            .expect("kernel basis elements are nonzero")
            .leading_coeff()
            .expect("leading coefficient is nonzero")
            .clone();
        let b = candidate.scale(&(Scalar::one() / lc_lead));
        basis
            .degrees
            .push(b.chi().expect_finite("nonzero candidate") as usize);
        basis.elements.push(b);
    }
    Ok(basis)
}

/// Expresses c as sum_i phi_i(a) * b_i if possible.
///
/// Returns the coefficients phi_i as polynomials in the indeterminate a
/// (coefficient k of phi_i multiplies a^k), aligned with B.elements, or
/// None when c is not in the K[a]-span. At each step the top degree d of
/// the remainder is cancelled by a K-combination of the products a^j b_i
/// with chi(b_i) + j*m = d: solvable leading-coefficient system or the
/// element is not in the span, because the degree of any combination is
/// the maximum over its terms.
pub fn span_membership(c: &OrePoly, basis: &ModuleBasis) -> Result<Option<Vec<BasePoly>>> {
    if !same_algebra(c.algebra(), basis.a.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if !basis.a.commutator(c)?.is_zero() {
        return Err(Error::NotInCentralizer);
    }
    let m = basis.m;
    let mut phis = vec![BasePoly::zero(); basis.elements.len()];
    let mut rem = c.clone();
    // a^0, a^1, ... extended on demand.
    let mut powers = vec![OrePoly::one(basis.a.algebra().clone())];
    while let Degree::Finite(d) = rem.chi() {
        let d = d as usize;
        // (basis index, power of a) pairs that can reach degree d.
        let mut pairs = Vec::new();
        for (i, &deg) in basis.degrees.iter().enumerate() {
            if d >= deg && (d - deg).is_multiple_of(m) {
                pairs.push((i, (d - deg) / m));
            }
        }
        if pairs.is_empty() {
            return Ok(None);
        }
        while powers.len() <= pairs.iter().map(|&(_, j)| j).max().unwrap() {
            powers.push(powers.last().unwrap() * &basis.a);
        }
        let products: Vec<OrePoly> = pairs
            .iter()
            .map(|&(i, j)| &powers[j] * &basis.elements[i])
            .collect();

        // Solve lc(rem) = sum alpha_p * lc(products[p]) coefficientwise.
        let rem_lc = rem.leading_coeff().expect("remainder is nonzero");
        let height = products
            .iter()
            .map(|p| p.leading_coeff().expect("products of nonzero operators"))
            .chain([rem_lc])
            .map(|lc| lc.degree().expect_finite("nonzero leading coefficient") as usize)
            .max()
            .unwrap()
            + 1;
        let mut mat = Matrix::zero(height, products.len());
        for (col, p) in products.iter().enumerate() {
            let lc = p.leading_coeff().expect("nonzero product");
            for (row, e) in lc.coeffs().iter().enumerate() {
                mat.set(row, col, e.clone());
            }
        }
        let mut rhs = rem_lc.coeffs().to_vec();
        rhs.resize(height, Scalar::zero());
        let Some(alpha) = mat.solve(&rhs) else {
            return Ok(None);
        };

        for (p, (&(i, j), product)) in pairs.iter().zip(&products).enumerate() {
            if alpha[p].is_zero() {
                continue;
            }
            rem = rem - product.scale(&alpha[p]);
            phis[i] = &phis[i] + BasePoly::monomial(alpha[p].clone(), j);
        }
        debug_assert!(rem.chi() < Degree::Finite(d as i64), "top degree must cancel");
    }
    Ok(Some(phis))
}

/// Structural sanity check: the basis rank always divides m = chi(a).
pub fn check_rank_divides(basis: &ModuleBasis) -> bool {
    basis.m.is_multiple_of(basis.elements.len())
}

/// Pairwise commutators of a slice basis.
#[derive(Clone, Debug)]
pub struct CommutativityReport {
    pub n: usize,
    pub coeff_bound: usize,
    pub basis_size: usize,
    pub pairs_checked: usize,
    /// Index pairs (i, j) of basis elements that fail to commute.
    pub failures: Vec<(usize, usize)>,
}

impl CommutativityReport {
    pub fn commutative(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks commutator(b_i, b_j) = 0 for all pairs of slice basis elements.
pub fn check_commutative(
    a: &OrePoly,
    n: usize,
    coeff_bound: Option<usize>,
) -> Result<CommutativityReport> {
    let slice = centralizer_slice(a, n, coeff_bound)?;
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..slice.basis.len() {
        for j in i + 1..slice.basis.len() {
            pairs_checked += 1;
            if !slice.basis[i].commutator(&slice.basis[j])?.is_zero() {
                failures.push((i, j));
            }
        }
    }
    Ok(CommutativityReport {
        n,
        coeff_bound: slice.coeff_bound,
        basis_size: slice.basis.len(),
        pairs_checked,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{shared, Algebra, OreAlgebraSpec};

    fn weyl() -> Algebra {
        shared(OreAlgebraSpec::weyl())
    }

    fn q_square() -> Algebra {
        shared(
            OreAlgebraSpec::new(BasePoly::from_int_coeffs(&[0, 0, 1]), BasePoly::zero())
                .unwrap(),
        )
    }

    fn x_pow(alg: &Algebra, k: u32) -> OrePoly {
        OrePoly::x(alg.clone()).pow(k)
    }

    #[test]
    fn q_square_slice_is_x_powers() {
        // sigma(y)=y^2: sigma^i(b) = b forces constant coefficients, so
        // the degree-3 slice of C(x^2) is spanned by 1, x, x^2, x^3.
        let a = x_pow(&q_square(), 2);
        let slice = centralizer_slice(&a, 3, Some(4)).unwrap();
        let expected: Vec<OrePoly> = (0..=3).map(|k| x_pow(a.algebra(), k)).collect();
        assert_eq!(slice.basis, expected);
    }

    #[test]
    fn weyl_slice_of_x_is_constant_coefficient() {
        // [x, b] = sum delta(b_i) x^i, so every coefficient must be constant.
        let a = OrePoly::x(weyl());
        let slice = centralizer_slice(&a, 2, Some(4)).unwrap();
        let expected: Vec<OrePoly> = (0..=2).map(|k| x_pow(a.algebra(), k)).collect();
        assert_eq!(slice.basis, expected);
    }

    #[test]
    fn slice_contains_powers_of_a() {
        let alg = weyl();
        // a = x^2 + y: chi(a) = 2, nontrivial coefficients
        let a = OrePoly::from_coeffs(
            alg.clone(),
            vec![BasePoly::y(), BasePoly::zero(), BasePoly::one()],
        );
        let slice = centralizer_slice(&a, 4, None).unwrap();
        let box_ = CoordBox::new(4, slice.coeff_bound);
        let mut rows: Vec<Vec<Scalar>> = slice.basis.iter().map(|b| box_.flatten(b)).collect();
        let rank_before = Matrix::from_rows(rows.clone()).rank();
        for k in 0..=2 {
            rows.push(box_.flatten(&a.pow(k)));
        }
        // 1, a, a^2 add nothing new: they are already in the span.
        assert_eq!(Matrix::from_rows(rows).rank(), rank_before);
    }

    #[test]
    fn scalar_base_point_is_rejected() {
        let a = OrePoly::constant(weyl(), BasePoly::from_int_coeffs(&[7]));
        assert!(matches!(
            centralizer_slice(&a, 2, None),
            Err(Error::ScalarOperand { operation: "centralizer_slice" })
        ));
    }

    #[test]
    fn domain_gate_applies() {
        let degenerate = shared(OreAlgebraSpec::new(BasePoly::one(), BasePoly::zero()).unwrap());
        let a = x_pow(&degenerate, 2);
        assert!(matches!(
            centralizer_slice(&a, 2, None),
            Err(Error::NotADomain { s: 0 })
        ));
    }

    #[test]
    fn balance_equation_degrees() {
        // s=2, constant leading coefficient: bound 0 at every degree.
        let a = x_pow(&q_square(), 2);
        assert_eq!(leading_coeff_degree_bound(&a, 5).unwrap(), Some(0));

        // s=2, m=1, deg_y(a_m)=1: at n=2 the bound is (4-1)/(2-1) = 3.
        let alg = q_square();
        let a = OrePoly::monomial(alg.clone(), BasePoly::y(), 1);
        assert_eq!(leading_coeff_degree_bound(&a, 2).unwrap(), Some(3));

        // s=2, m=2, deg_y(a_m)=1, n=1: (2-1)/(4-1) is not an integer.
        let a = OrePoly::monomial(alg.clone(), BasePoly::y(), 2);
        assert_eq!(leading_coeff_degree_bound(&a, 1).unwrap(), None);

        // s=1 is degenerate for the balance equation.
        assert!(matches!(
            leading_coeff_degree_bound(&OrePoly::x(weyl()), 2),
            Err(Error::BalanceDegenerate { s: 1 })
        ));
    }

    #[test]
    fn leading_dimensions() {
        let a = x_pow(&q_square(), 2);
        assert_eq!(leading_space_dim(&a, 1, None).unwrap(), 1);
        assert_eq!(leading_space_dim(&a, 0, None).unwrap(), 1);
        let weyl_x = OrePoly::x(weyl());
        assert_eq!(leading_space_dim(&weyl_x, 3, None).unwrap(), 1);
    }

    #[test]
    fn condition_d_reports() {
        let a = x_pow(&q_square(), 2);
        let report = check_condition_d(&a, 1, 6, None).unwrap();
        assert!(report.holds());
        assert_eq!(report.dims, vec![1; 7]);

        // D(0) is impossible: scalars always centralize.
        let report = check_condition_d(&a, 0, 2, None).unwrap();
        assert!(!report.holds());
        assert!(report.violations.contains(&0));
    }

    #[test]
    fn greedy_basis_examples() {
        // sigma(y)=y^2, a = x^2: C = K[x] is free over K[x^2] with {1, x}.
        let a = x_pow(&q_square(), 2);
        let b = greedy_basis(&a, 5, None).unwrap();
        assert_eq!(b.degrees, vec![0, 1]);
        assert_eq!(b.elements[0], OrePoly::one(a.algebra().clone()));
        assert_eq!(b.elements[1], OrePoly::x(a.algebra().clone()));
        assert!(check_rank_divides(&b));

        // Weyl, a = x: C = K[a] itself.
        let a = OrePoly::x(weyl());
        let b = greedy_basis(&a, 5, None).unwrap();
        assert_eq!(b.degrees, vec![0]);

        // Weyl, a = x^2: again {1, x}.
        let a = x_pow(&weyl(), 2);
        let b = greedy_basis(&a, 5, None).unwrap();
        assert_eq!(b.degrees, vec![0, 1]);
        assert!(check_rank_divides(&b));
    }

    #[test]
    fn greedy_basis_rejections() {
        let y2 = OrePoly::constant(weyl(), BasePoly::from_int_coeffs(&[0, 0, 1]));
        assert!(matches!(
            greedy_basis(&y2, 4, Some(4)),
            Err(Error::NoPositiveDegree { operation: "greedy_basis" })
        ));
        let a = x_pow(&weyl(), 3);
        assert!(matches!(
            greedy_basis(&a, 2, None),
            Err(Error::BoundExhausted { needed: 3, given: 2 })
        ));
    }

    #[test]
    fn span_membership_examples() {
        let q = q_square();
        let a = x_pow(&q, 2);
        let basis = greedy_basis(&a, 5, None).unwrap();

        // x^3 = a * x: phi = (0, a)
        let phis = span_membership(&x_pow(&q, 3), &basis).unwrap().unwrap();
        assert_eq!(phis[0], BasePoly::zero());
        assert_eq!(phis[1], BasePoly::y());

        // a^3 + a against {1} alone
        let trivial = ModuleBasis {
            a: a.clone(),
            m: 2,
            elements: vec![OrePoly::one(q.clone())],
            degrees: vec![0],
            max_degree: 6,
            coeff_bound: 4,
        };
        let c = a.pow(3) + a.clone();
        let phis = span_membership(&c, &trivial).unwrap().unwrap();
        assert_eq!(phis[0], BasePoly::from_int_coeffs(&[0, 1, 0, 1]));

        // x has odd degree: not in the K[a]-span of {1}
        assert_eq!(span_membership(&x_pow(&q, 1), &trivial).unwrap(), None);

        // y does not commute with x^2 here
        let y = OrePoly::constant(q.clone(), BasePoly::y());
        assert!(matches!(
            span_membership(&y, &trivial),
            Err(Error::NotInCentralizer)
        ));
    }

    #[test]
    fn commutativity_check() {
        let a = x_pow(&q_square(), 2);
        let report = check_commutative(&a, 4, None).unwrap();
        assert!(report.commutative());
        assert_eq!(report.basis_size, 5);

        let a = x_pow(&weyl(), 2);
        let report = check_commutative(&a, 4, None).unwrap();
        assert!(report.commutative());

        // a in K[y] \ K: the slice is K[y] up to the bound, commutative.
        let y2 = OrePoly::constant(weyl(), BasePoly::from_int_coeffs(&[0, 0, 1]));
        let report = check_commutative(&y2, 3, Some(6)).unwrap();
        assert!(report.commutative());
        assert_eq!(report.basis_size, 7);
    }
}

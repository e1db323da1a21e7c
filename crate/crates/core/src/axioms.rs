//! Randomized validation of the pseudo-degree axioms for chi.
//!
//! The axioms checked on sampled operators:
//!
//! 1. chi(a) = -∞ exactly for a = 0;
//! 2. chi(ab) = chi(a) + chi(b) (multiplicativity);
//! 3. chi(a+b) <= max(chi(a), chi(b)) (subadditivity);
//! 4. chi(a+b) = chi(a) whenever chi(b) < chi(a) (the dominant term wins).
//!
//! Counterexamples are reported, not raised: for s = 0 the endomorphism
//! sigma is not injective and multiplicativity genuinely fails, which the
//! report flags as expected rather than as a defect.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::base::BasePoly;
use crate::ore::OrePoly;
use crate::scalar::integer;

/// Outcome of one axiom across all trials.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub trials: u32,
    pub failures: u32,
    pub first_counterexample: Option<String>,
}

impl AxiomCheck {
    fn new(name: &'static str) -> Self {
        AxiomCheck { name, trials: 0, failures: 0, first_counterexample: None }
    }

    fn record(&mut self, pass: bool, counterexample: impl FnOnce() -> String) {
        self.trials += 1;
        if !pass {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(counterexample());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    /// deg_y(sigma(y)) of the algebra under test.
    pub s: i64,
    /// True when s >= 1, so multiplicativity is guaranteed and any failure
    /// of it would be a defect; false means failures there are expected.
    pub multiplicativity_certified: bool,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    /// True when every failure is an expected one: multiplicativity on an
    /// s = 0 algebra. A fully passing report also qualifies.
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| {
            c.passed() || (c.name == "multiplicativity" && !self.multiplicativity_certified)
        })
    }
}

/// Samples a coefficient polynomial with y-degree <= max_deg and small
/// integer coefficients (zero is possible).
fn sample_base(rng: &mut ChaCha8Rng, max_deg: u32) -> BasePoly {
    let deg = rng.gen_range(0..=max_deg) as usize;
    BasePoly::from_coeffs((0..=deg).map(|_| integer(rng.gen_range(-3..=3))).collect())
}

/// Samples an operator with x-degree <= max_deg (zero is possible).
fn sample_operator(rng: &mut ChaCha8Rng, algebra: &Algebra, max_deg: u32) -> OrePoly {
    let deg = rng.gen_range(0..=max_deg) as usize;
    OrePoly::from_coeffs(
        algebra.clone(),
        (0..=deg).map(|_| sample_base(rng, max_deg)).collect(),
    )
}

fn sample_nonzero(rng: &mut ChaCha8Rng, algebra: &Algebra, max_deg: u32) -> OrePoly {
    loop {
        let p = sample_operator(rng, algebra, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Runs `trials` random checks of the pseudo-degree axioms with operators
/// of x- and y-degree at most `max_deg`. Deterministic for a fixed seed.
pub fn validate_pseudo_degree(
    algebra: &Algebra,
    trials: u32,
    max_deg: u32,
    seed: u64,
) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut zero_check = AxiomCheck::new("zero-element");
    let mut mul_check = AxiomCheck::new("multiplicativity");
    let mut add_check = AxiomCheck::new("subadditivity");
    let mut dom_check = AxiomCheck::new("dominant-term");

    for _ in 0..trials {
        let a = sample_nonzero(&mut rng, algebra, max_deg);
        let b = sample_nonzero(&mut rng, algebra, max_deg);

        let zero_ok = OrePoly::zero(algebra.clone()).chi().as_finite().is_none()
            && a.chi().is_finite();
        zero_check.record(zero_ok, || format!("a = {a}: chi(a) = {}", a.chi()));

        let ab = &a * &b;
        mul_check.record(ab.chi() == a.chi() + b.chi(), || {
            format!(
                "a = {a}, b = {b}: chi(ab) = {} but chi(a) + chi(b) = {}",
                ab.chi(),
                a.chi() + b.chi()
            )
        });

        let sum = &a + &b;
        add_check.record(sum.chi() <= a.chi().max(b.chi()), || {
            format!(
                "a = {a}, b = {b}: chi(a+b) = {} exceeds max({}, {})",
                sum.chi(),
                a.chi(),
                b.chi()
            )
        });

        // Orient the pair so chi(b) < chi(a) when degrees differ.
        let (hi, lo) = if a.chi() >= b.chi() { (&a, &b) } else { (&b, &a) };
        if lo.chi() < hi.chi() {
            let sum = hi + lo;
            dom_check.record(sum.chi() == hi.chi(), || {
                format!(
                    "a = {hi}, b = {lo}: chi(a+b) = {} but chi(a) = {}",
                    sum.chi(),
                    hi.chi()
                )
            });
        }
    }

    AxiomReport {
        s: algebra.s(),
        multiplicativity_certified: algebra.is_domain(),
        checks: vec![zero_check, mul_check, add_check, dom_check],
    }
}

//! Degrees with a bottom element.
//!
//! Degree functions on polynomials and operators take values in
//! Z ∪ {-∞}, where -∞ is reserved for the zero element. Addition and
//! ordering extend the integer operations: -∞ absorbs sums and is below
//! every integer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    pub fn as_finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(n) => Some(n),
        }
    }

    /// Finite value, or a panic: for callers that have already excluded zero.
    pub fn expect_finite(self, context: &str) -> i64 {
        match self {
            Degree::NegInfinity => panic!("degree of zero element: {context}"),
            Degree::Finite(n) => n,
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, Degree::Finite(_)) => Ordering::Less,
            (Degree::Finite(_), Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl Add<i64> for Degree {
    type Output = Degree;
    fn add(self, rhs: i64) -> Degree {
        self + Degree::Finite(rhs)
    }
}

impl From<i64> for Degree {
    fn from(n: i64) -> Self {
        Degree::Finite(n)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(n) => write!(f, "{n}"),
        }
    }
}

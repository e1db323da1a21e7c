use std::fmt;

use crate::degree::Degree;

/// Errors produced by the engine and the expression front-end.
///
/// Variants are grouped by how the CLI maps them to exit codes: syntax,
/// config and argument problems are usage errors (exit 2), everything
/// else is a domain error (exit 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Expression could not be parsed; `offset` is a byte position in the input.
    Syntax { offset: usize, message: String },
    /// `x` appeared in a context that only allows coefficient polynomials.
    UnexpectedX { offset: usize },
    /// Algebra config file is malformed or unreadable.
    Config { message: String },
    /// A bound or option has an invalid value.
    InvalidArgument { message: String },
    /// The algebra presentation is invalid (sigma(y) = 0).
    InvalidAlgebra { message: String },
    /// Two operators from different algebras were combined.
    AlgebraMismatch,
    /// An operation that requires a nonzero operator got 0.
    ZeroOperand { operation: &'static str },
    /// The algebra has deg_y(sigma(y)) = 0, so sigma is not injective and
    /// degrees are not multiplicative; centralizer and annihilator
    /// computations refuse to run.
    NotADomain { s: i64 },
    /// The operator is a scalar, which centralizes everything.
    ScalarOperand { operation: &'static str },
    /// The operator has x-degree 0 where positive degree is required.
    NoPositiveDegree { operation: &'static str },
    /// The leading-coefficient balance equation needs deg_y(sigma(y)) >= 2.
    BalanceDegenerate { s: i64 },
    /// The two operators do not commute; `chi` is the degree of their commutator.
    NotCommuting { chi: Degree },
    /// The element handed to span reduction does not commute with the base operator.
    NotInCentralizer,
    /// The degree bound is too small to hold any power of the base operator.
    BoundExhausted { needed: i64, given: i64 },
    /// The coefficient-degree bound kept changing the slice basis after
    /// repeated doubling.
    CoeffBoundUnstable { last: i64 },
    /// The annihilator search hit its doubling cap without finding a relation.
    BudgetExhausted { doublings: u32, deg_s: i64, deg_t: i64 },
    /// Randomized axiom validation found failures that the algebra does not
    /// excuse (anything except multiplicativity when s = 0).
    AxiomViolation { check: String },
}

impl Error {
    /// True for errors the CLI treats as usage/parse errors (exit code 2).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnexpectedX { .. }
                | Error::Config { .. }
                | Error::InvalidArgument { .. }
                | Error::InvalidAlgebra { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            Error::UnexpectedX { offset } => {
                write!(f, "unexpected x at byte {offset}: expected a polynomial in y only")
            }
            Error::Config { message } => write!(f, "config error: {message}"),
            Error::InvalidArgument { message } => write!(f, "invalid argument: {message}"),
            Error::InvalidAlgebra { message } => write!(f, "invalid algebra: {message}"),
            Error::AlgebraMismatch => {
                write!(f, "operands belong to different algebras")
            }
            Error::ZeroOperand { operation } => {
                write!(f, "{operation} requires a nonzero operator")
            }
            Error::NotADomain { s } => write!(
                f,
                "algebra has deg_y(sigma(y)) = {s}: sigma is not injective, degrees are \
                 not multiplicative, and this computation is not available"
            ),
            Error::ScalarOperand { operation } => write!(
                f,
                "{operation} requires an operator outside the scalar field (its \
                 centralizer would be the whole algebra)"
            ),
            Error::NoPositiveDegree { operation } => {
                write!(f, "{operation} requires an operator of positive x-degree")
            }
            Error::BalanceDegenerate { s } => write!(
                f,
                "leading-coefficient balance equation is degenerate for deg_y(sigma(y)) = {s}; \
                 it requires deg_y(sigma(y)) >= 2"
            ),
            Error::NotCommuting { chi } => write!(
                f,
                "operators do not commute: their commutator is nonzero (x-degree {chi})"
            ),
            Error::NotInCentralizer => {
                write!(f, "element does not commute with the base operator")
            }
            Error::BoundExhausted { needed, given } => write!(
                f,
                "degree bound exhausted: bound {given} is below the operator degree {needed}"
            ),
            Error::CoeffBoundUnstable { last } => write!(
                f,
                "centralizer basis did not stabilize up to coefficient-degree bound {last}; \
                 pass an explicit --coeff-bound"
            ),
            Error::BudgetExhausted { doublings, deg_s, deg_t } => write!(
                f,
                "no annihilating polynomial found after {doublings} doublings \
                 (final bounds deg_s = {deg_s}, deg_t = {deg_t})"
            ),
            Error::AxiomViolation { check } => {
                write!(f, "pseudo-degree axiom failed unexpectedly: {check}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

//! Canonical text rendering of polynomial terms.
//!
//! The printed forms re-parse under the expression grammar, so signs are
//! placed where the parser accepts them: a leading negative term carries
//! its sign inside the scalar factor (`-1*y*x`, `(-1/2)*y`), later terms
//! use ` - ` as a separator with the magnitude printed.

use std::fmt;

use num_traits::{One, Signed};

use crate::scalar::Scalar;

/// Variable-power factor strings, skipping zero powers: [("y",2),("x",1)]
/// becomes ["y^2", "x"].
pub(crate) fn factors(pairs: &[(&str, usize)]) -> Vec<String> {
    pairs
        .iter()
        .filter(|(_, p)| *p > 0)
        .map(|(v, p)| if *p == 1 { (*v).to_string() } else { format!("{v}^{p}") })
        .collect()
}

/// A scalar as a standalone factor: integers plain, fractions parenthesized.
fn scalar_factor(c: &Scalar) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

pub(crate) struct TermWriter {
    first: bool,
}

impl TermWriter {
    pub(crate) fn new() -> Self {
        TermWriter { first: true }
    }

    /// True until the first term has been written.
    pub(crate) fn is_first(&self) -> bool {
        self.first
    }

    /// Writes one monomial term c * factors. The coefficient must be nonzero.
    pub(crate) fn monomial(
        &mut self,
        f: &mut fmt::Formatter<'_>,
        c: &Scalar,
        factors: &[String],
    ) -> fmt::Result {
        let (lead, mag);
        if self.first {
            lead = "";
            mag = c.clone();
        } else {
            lead = if c.is_negative() { " - " } else { " + " };
            mag = c.abs();
        }
        f.write_str(lead)?;
        let mut parts: Vec<String> = Vec::with_capacity(factors.len() + 1);
        if !mag.is_one() || factors.is_empty() {
            parts.push(scalar_factor(&mag));
        }
        parts.extend_from_slice(factors);
        f.write_str(&parts.join("*"))?;
        self.first = false;
        Ok(())
    }

    /// Writes a parenthesized polynomial factor times the given factors.
    /// `negative` pulls a minus sign out as a separator; it must be false
    /// for the first term (the group then keeps its internal signs).
    pub(crate) fn grouped(
        &mut self,
        f: &mut fmt::Formatter<'_>,
        inner: &str,
        negative: bool,
        factors: &[String],
    ) -> fmt::Result {
        debug_assert!(!(self.first && negative));
        if !self.first {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        write!(f, "({inner})")?;
        for factor in factors {
            write!(f, "*{factor}")?;
        }
        self.first = false;
        Ok(())
    }

    /// Finishes the sum; an empty sum renders as "0".
    pub(crate) fn finish(&mut self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Renders a complete sum of monomial terms in the given order.
pub(crate) fn fmt_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (Scalar, Vec<String>)>,
{
    let mut w = TermWriter::new();
    for (c, factors) in terms {
        w.monomial(f, &c, &factors)?;
    }
    w.finish(f)
}

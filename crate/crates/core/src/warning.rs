//! Non-fatal diagnostics surfaced alongside results.

use std::fmt;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// A representative `a*lambda - sum b_i*delta_i` with some `b_i <= 0`.
    NonPositiveBoundaryCoefficient { index: usize, value: Rational },
    /// A genus-2 germ whose Horikawa index came out negative. Geometric germs
    /// never do this, so the input data is suspect.
    NegativeHorikawaIndex { germ: Option<String>, value: Rational },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NonPositiveBoundaryCoefficient { index, value } => write!(
                f,
                "representative has non-positive boundary coefficient b_{index} = {value}"
            ),
            Warning::NegativeHorikawaIndex { germ, value } => match germ {
                Some(name) => write!(f, "germ {name}: negative Horikawa index {value}"),
                None => write!(f, "negative Horikawa index {value}"),
            },
        }
    }
}

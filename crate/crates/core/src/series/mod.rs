//! Exact truncated series arithmetic.
//!
//! Three series types share the same ground rules (exact rational
//! coefficients, explicit truncation orders that are narrowed and never
//! silently widened by arithmetic):
//!
//! - [`LaurentSeries`]: univariate in `q^{-1}`, with a finite, explicitly
//!   tracked positive-power part.
//! - [`BiSeries`]: polynomial in `u` whose coefficients are `LaurentSeries`.
//! - [`PowerSeries`]: ordinary truncated power series over a generic
//!   coefficient ring (used with rational and polynomial-in-`q`
//!   coefficients by the product-form transforms).

pub mod biseries;
pub mod laurent;
pub mod pseries;

pub use biseries::BiSeries;
pub use laurent::LaurentSeries;
pub use pseries::{Coeff, PowerSeries};

use core::fmt;

/// Errors raised by series operations with domain restrictions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// `log`/`pow` require constant term exactly 1.
    ConstantTermNotOne,
    /// The operand carries positive powers of `q` where none are allowed.
    PositivePart,
    /// Raising to a polynomial exponent requires the valuation of `a - 1`
    /// to exceed the exponent's degree.
    ValuationTooLow { valuation: i64, exponent_degree: i64 },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ConstantTermNotOne => write!(f, "constant term is not 1"),
            SeriesError::PositivePart => write!(f, "series has a positive-power part"),
            SeriesError::ValuationTooLow { valuation, exponent_degree } => write!(
                f,
                "valuation {} does not exceed exponent degree {}",
                valuation, exponent_degree
            ),
        }
    }
}

impl core::error::Error for SeriesError {}

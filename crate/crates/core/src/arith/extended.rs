use std::fmt;
use std::str::FromStr;

use super::ring::{fmt_compact, parse_rational, Rational};
use crate::error::Error;

/// A rational number extended by a point at infinity, plus an explicit
/// "undefined" marker for `0 · ∞` situations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedScalar {
    Finite(Rational),
    Infinity,
    Undefined,
}

impl ExtendedScalar {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedScalar::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedScalar::Infinity)
    }
}

impl From<Rational> for ExtendedScalar {
    fn from(r: Rational) -> Self {
        ExtendedScalar::Finite(r)
    }
}

impl fmt::Display for ExtendedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedScalar::Finite(r) => write!(f, "{}", fmt_compact(r)),
            ExtendedScalar::Infinity => write!(f, "inf"),
            ExtendedScalar::Undefined => write!(f, "undefined"),
        }
    }
}

impl FromStr for ExtendedScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(ExtendedScalar::Infinity);
        }
        parse_rational(s)
            .map(ExtendedScalar::Finite)
            .ok_or_else(|| Error::Parse(format!("expected a rational `a/b` or `inf`, got `{s}`")))
    }
}

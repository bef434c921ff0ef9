//! Exact arithmetic: rationals, univariate polynomials and rational functions
//! in `k`, affine forms in `(k, p)`, Laurent polynomials and blow-up limits.

pub mod affine;
pub mod blowup;
pub mod extended;
pub mod laurent;
pub mod ring;
pub mod unipoly;
pub mod unirational;

pub use affine::{AffineForm, FactoredRational};
pub use blowup::{blowup_limit, substitute_blowup, uni_limit};
pub use extended::ExtendedScalar;
pub use laurent::{graded_lex_cmp, monomial_name, Exponent, LaurentPoly};
pub use ring::{Field, Rational, Ring};
pub use unipoly::UniPoly;
pub use unirational::UniRational;

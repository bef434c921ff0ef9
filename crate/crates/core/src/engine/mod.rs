//! Polynomial side: the CMS operator, the `J_λ` recursion, the nonsingular
//! basis `I_λ` and the specializations at `k = -1`.

pub mod cms;
pub mod jacobi;
pub mod sympoly;

pub use cms::{k_p1_multiply, p1, p1_multiply, CmsOperator};
pub use jacobi::{with_retry, JBasisCombo, JacobiEngine, JacobiPoly, RETRY_T};
pub use sympoly::SymPoly;
pub mod special;
pub use special::{
    limit_at_minus_one, si_direct, sj_by_si, sj_direct, sj_infinity_by_si, InfinityFamily, SpecializedPoly,
};

//! Determinant zetas of global operators, their canonical absolute forms,
//! and reciprocity under `u -> 1/u`.

pub mod automorphy;
pub mod cyclotomic;
pub mod form;
pub mod reciprocity;
pub mod spectral_zeta;

pub use automorphy::{
    automorphy, automorphy_exact, automorphy_residual, AutomorphyCertificate, AUTOMORPHY_TOL,
};
pub use cyclotomic::{binomial_exponents, cyclotomic_poly, divisors, factor_cyclotomic, mobius};
pub use form::{
    canonical_form, canonical_form_default, canonical_form_from_poly, canonical_form_of,
    eval_exact, reciprocal_poly_exact, tensor_case_form, CanonicalAbsForm, FormRecord, FormSource,
    TensorCase, ROOT_MATCH_TOL,
};
pub use reciprocity::{
    general_reciprocity_check, log_det, sample_u, verify_theorem2, LogDet, Theorem2Report,
};
pub use spectral_zeta::{zeta_eval, RootExponent, SpectralZeta};

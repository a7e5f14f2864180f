//! Absolute zeta functions of absolute automorphic forms: the subset
//! expansion into multiple Hurwitz zeta, multiple gamma and multiple sine
//! functions, and the numerical kernels behind them.

pub mod barnes;
pub mod expansion;
pub mod mellin;
pub mod omega;
pub mod quad;
pub mod special;
pub mod theorem4;

pub use barnes::{
    lattice_counts, ln_multi_gamma, ln_multi_sine, ln_multi_sine_integral, mellin_kernel,
    multi_gamma, multi_hurwitz_continued, multi_hurwitz_series, multi_sine, Laurent,
    CONTINUATION_MAX_ORDER, SERIES_MAX_ORDER, SERIES_TOL,
};
pub use expansion::{
    abs_zeta_eval, abs_zeta_log, functional_eq_residual, theorem1_expand, AbsExpansion, SubsetTerm,
};
pub use mellin::mellin_z;
pub use omega::{EvalResult, Method, OmegaVector, SignedLog};
pub use theorem4::{theorem4_report, SpotCheck, Theorem4Report};

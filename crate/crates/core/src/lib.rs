pub mod abszeta;
pub mod error;
pub mod matrix;
pub mod qca;
pub mod scalar;
pub mod spectral;
pub mod zeta;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/forms.md")]
    mod forms {}
    #[doc = include_str!("../../../book/src/absolute_zeta.md")]
    mod absolute_zeta {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

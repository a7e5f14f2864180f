//! Spectra of global operators: eigenvalue clustering, exact characteristic
//! polynomials, root-of-unity matching and the Chebyshev multiplicity formula
//! for the tensor model.

pub mod charpoly;
pub mod chebyshev;
pub mod eigen;
pub mod roots;

pub use charpoly::{
    exact_char_poly, exact_char_poly_capped, reciprocal_char_poly, IntPoly, DEFAULT_EXACT_CAP,
};
pub use chebyshev::{b_coefficient, chebyshev_t, predicted_multiplicities, MultiplicityPrediction};
pub use eigen::{eigenvalues, numeric_spectrum, Eigenvalue, Origin, Spectrum, DEFAULT_CLUSTER_TOL};
pub use roots::{
    default_max_order, euler_phi, match_root_of_unity, roots_of_unity_profile, ClassOccupancy,
    RootProfile,
};

//! Local and global QCA operators on the path `{0, ..., N-1}`.

pub mod classify;
pub mod config;
pub mod global;
pub mod local;
pub mod state;

pub use classify::{classify, OperatorClass, DEFAULT_CLASSIFY_TOL};
pub use config::Configuration;
pub use global::{
    assemble_global, evolve, transition_weight, GlobalOperator, Layer, DEFAULT_DENSE_CAP,
};
pub use local::{local_domany_kinzel, local_qca1, local_qca2, local_tensor, sigma, LocalOperator};
pub use state::{measure_probabilities, Reading, StateVector};

//! Parametric LambdaPrime / LambdaCC graph clustering over the whole
//! resolution range `λ ∈ (0, 1)`.

pub mod error;
pub mod exact;
pub mod graph;
pub mod lp;
pub mod objectives;
pub mod oracles;
pub mod orlp;
pub mod pwl;
pub mod rational;
pub mod rounding;
pub mod simplex;
pub mod sweeps;

pub use error::{Error, Result};

//! Schur-function machinery: `gl(n)` dimensions, `gl(m|n)`
//! superdimensions, Littlewood–Richardson coefficients and exact point
//! evaluation of ordinary and supersymmetric Schur functions.

mod dims;
mod eval;
mod lr;

use thiserror::Error;

pub use dims::{dim_gl_frobenius, dim_gl_hook, dim_gl_weyl, sdim_gl};
pub use eval::{schur_eval, super_schur_eval, SuperPoint};
pub use lr::{lr_coefficient, LrQuery};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("gl(n) needs n >= 1")]
    ZeroRank,
}

//! t-dimension and superdimension series of the orthosymplectic spinor and
//! self-dual tensor irreps, of the classical irreps they correspond to, and
//! the machinery that checks the correspondence.
//!
//! Every series is graded by level from the highest weight, so its constant
//! term is 1 (the overall weight prefactor of each character is dropped).
//! Classical series are produced in `+t`; superdimension series already
//! include the `t → −t` substitution where the grading calls for it.

mod classical;
mod correspondence;
mod cummins_king;
mod exceptional;
mod orthosymplectic;
mod osp1;
mod spec;

use thiserror::Error;

use crate::partitions::PartitionError;
use crate::schur::SchurError;
use crate::series::SeriesError;

pub use classical::{so_even_dim_t, so_odd_dim_t, sp_closed_form, sp_dim_t, spinor_closed_form, spinor_sdim, spinor_tdim};
pub use correspondence::{verify_correspondence, CaseParams, CorrespondenceCase, CorrespondenceReport, Side, Verdict};
pub use cummins_king::{cummins_king_check, cummins_king_trial, CumminsKingReport, TrialRecord};
pub use exceptional::{d21_closed_form, d21_decomposition, d21_sdim_t, EvenComponent};
pub use orthosymplectic::{ospb_sdim_t, ospd_sdim_t};
pub use osp1::{e_np_series, osp1_closed_form, osp1_dim_t};
pub use spec::{Chirality, Family, IrrepSpec, Params, Route, Total};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{family} requires --{param}")]
    MissingParameter { family: &'static str, param: &'static str },
    #[error("{family} does not take --{param}")]
    UnexpectedParameter { family: &'static str, param: &'static str },
    #[error("no closed form is available for {0}")]
    NoClosedForm(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub(crate) fn invalid(msg: impl Into<String>) -> CharacterError {
    CharacterError::InvalidParameter(msg.into())
}

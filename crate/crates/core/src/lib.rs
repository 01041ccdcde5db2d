//! Degree-matrix and Betti-table calculus for plane sections of space
//! curves: which section data force a curve to be arithmetically
//! Cohen-Macaulay, which are realizable by non-aCM curves of the various
//! flavours, explicit curve recipes built from links and double links, and
//! dimension bounds for deficiency modules of Buchsbaum curves.

pub mod buchsbaum;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod hvector;
pub mod matrix;
pub mod poly;
pub mod recipe;
pub mod transforms;

pub use error::{Error, Result};
pub use hvector::{
    degree_matrix_from_hvector, hvector_from_betti, hvector_from_degree_matrix, HVector,
};
pub use matrix::{
    check_homogeneous, degree_matrix_from_betti, transpose_antidiagonal, BettiTable, Block,
    DegreeMatrix, HomogeneousIntMatrix,
};

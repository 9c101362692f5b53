//! Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras
//! stored as structure constants, with axiom checkers.
//!
//! Conventions: `e_i · e_j = Σ_k m[i][j][k] e_k` and
//! `Δ(e_i) = Σ_{j,k} c[i][j][k] e_j ⊗ e_k`. As matrices, the multiplication
//! is `n x n²` with entry `[k][i·n + j]` and the comultiplication is `n² x n`
//! with entry `[j·n + k][i]`.

mod algebra;
mod coalgebra;
mod duals;
mod hopf;
mod maps;

pub use algebra::FiniteDimAlgebra;
pub use coalgebra::FiniteDimCoalgebra;
pub use duals::{
    cop_coalgebra, dual_hopf, dual_map, dual_of_algebra, dual_of_coalgebra, op_algebra, tensor_algebra,
    tensor_coalgebra,
};
pub use hopf::{antipode_system, check_antipode, check_bialgebra, compute_antipode, BialgebraCandidate, HopfAlgebra};
pub use maps::{check_algebra_map, check_coalgebra_map};

use thiserror::Error;

use crate::field::FieldSpec;
use crate::linalg::LinalgError;
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{what} has length {found}, expected {expected}")]
    BadLength {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("not a bialgebra: {}", .0.first_failure().map_or("?", |c| c.name.as_str()))]
    NotABialgebra(Box<Report>),
    #[error("not a Hopf algebra: {0}")]
    NotHopf(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

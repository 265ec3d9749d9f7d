//! Lazy Sweedler and Hochschild cohomology for finite-dimensional Hopf
//! *-algebras, with the Maurer–Cartan cocycle, the curvature map and the
//! crossed-product realisations `Op`.
//!
//! Everything is a dense complex tensor over fixed bases. Antilinear maps
//! (stars) are stored as the matrix `S` with `v* = S·conj(v)`.

mod convolution;
mod crossed;
mod error;
mod hopf;
pub mod instances;
mod io;
mod linalg;
mod module;
mod solve;

pub use convolution::{Conv, HochschildReport, SweedlerReport};
pub use crossed::{OpGaugeReport, OpPotentialReport};
pub use error::LazyError;
pub use hopf::{FiniteHopf, HopfReport};
pub use linalg::{antilinear, basis, max_norm, real_nullspace, real_rank, Bilinear, Matrix, Vector, C};
pub use module::{ModuleAlgebra, ModuleReport, Piece, SecondOrder, Target};
pub use solve::{CohomologyDims, HochschildSpace};
pub use crossed::matrix_distance;

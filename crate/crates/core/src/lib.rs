//! Exact computational Lie theory for cotangent algebras `T*g`, plus the
//! floating-point geometry of the affine group and its double.

pub mod catalog;
pub mod exec;
pub mod geom;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod metrics;
pub mod operators;
pub mod rational;
pub mod reference;
pub mod repro;

pub use exec::Execution;
pub use lie::{LieAlgebra, LieError};
pub use linalg::{inertia, nullspace, rank, rref, Inertia, LinalgError, Subspace};
pub use matrix::Matrix;
pub use rational::Rational;

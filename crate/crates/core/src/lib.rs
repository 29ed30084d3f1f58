//! Exact verification kernel for the algebra families connecting truncated
//! Yangians and finite W-algebras.
//!
//! Everything here computes over exact rationals; identity checks clear
//! denominators and compare polynomial data, so a check either holds on the
//! nose or returns a counterexample payload. The crate is organized around
//! the objects it verifies:
//!
//! - [`rmatrix`]: rational/graded/twisted R-matrices and Yang-Baxter-type
//!   identities;
//! - [`poisson`]: the classical truncated Yangian with mechanically derived
//!   mode brackets, truncation ideal, center, and adjoint structure;
//! - [`drinfeld_fit`]: the level-one correction fit relating the two
//!   presentations;
//! - [`twist`]: the twisting automorphism, folded quotients, twisted
//!   generators and their exchange identities;
//! - [`reps`]: finite-dimensional modules from evaluation tensor products,
//!   highest weights and Drinfeld polynomial data;
//! - [`nls`]: discrete-momentum Fock sectors for the nonlinear Schrodinger
//!   hierarchy and the truncated action on them.
//!
//! All values are immutable after construction and operations are pure
//! functions, so verification jobs can run in parallel freely.

pub mod error;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod signature;
pub mod superpoly;

pub mod drinfeld_fit;
pub mod nls;
pub mod poisson;
pub mod reps;
pub mod twist;

pub use error::CoreError;
pub use report::{Check, CheckStatus, Report};
pub use scalar::Scalar;
pub use signature::{GeneratorIndex, Parity, Signature};
pub use superpoly::{Monomial, SuperPolyElement};

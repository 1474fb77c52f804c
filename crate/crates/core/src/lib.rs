//! Exact computations with finite-dimensional Lie superalgebras,
//! their representations, O-operators and super r-matrices.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod format;
pub mod graded;
pub mod lie;
pub mod oop;
pub mod prelie;
pub mod rep;
pub mod report;
pub mod rmat;

pub use error::{Error, Result};
pub use graded::{GradedLinearMap, Parity, Scalar, SuperSpace, Tensor2, Tensor3};

//! Graded linear algebra: parities, exact scalars, super vector spaces,
//! homogeneous maps and tensors.

pub mod linalg;
pub mod map;
mod parity;
pub mod scalar;
pub mod space;
pub mod tensor;

pub use map::GradedLinearMap;
pub use parity::Parity;
pub use scalar::Scalar;
pub use space::SuperSpace;
pub use tensor::{Tensor2, Tensor3};

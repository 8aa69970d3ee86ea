mod bigjson;
pub mod cyclotomic;
pub mod error;
pub mod laurent;
pub mod matrix;
pub mod quadratic;
pub mod scalar;
pub mod braid;
pub mod burau;
pub mod free;
pub mod geometry;
pub mod triangle;
pub mod suite;

pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use matrix::Matrix;

/// Exact scalars: elements of ℚ(ζ_n).
pub type Exact = Cyclotomic;
pub type ExactMatrix = Matrix<Cyclotomic>;
pub type FloatMatrix = Matrix<num_complex::Complex<f64>>;

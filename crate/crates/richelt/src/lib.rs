//! Exact construction and verification of Richardson elements in the first
//! graded piece of nice parabolic subalgebras of the simple Lie algebras.

pub mod chevalley;
pub mod error;
pub mod linalg;
pub mod model;
pub mod parabolic;
pub mod recipe;
pub mod roots;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};

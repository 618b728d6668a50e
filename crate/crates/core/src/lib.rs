//! Exact computer algebra for Z2xZ2-graded color superalgebras realized in the
//! enveloping algebra of the N=1 superconformal Galilei algebra.
//!
//! All arithmetic is exact (big rationals, and a single quadratic surd for the
//! Fock matrices). Half-integer parameters are carried as `two_ell = 2l`.

pub mod algebra;
pub mod colored;
pub mod element;
pub mod enveloping;
pub mod error;
pub mod fock;
pub mod generator;
pub mod grading;
pub mod grassmann;
pub mod involution;
pub mod json;
pub mod leftaction;
pub mod linalg;
pub mod par;
pub mod rational;
pub mod scga;
pub mod surd;
pub mod verify;
pub mod vf;

pub use algebra::{AlgebraBuilder, ColorAlgebra};
pub use element::AlgebraElement;
pub use error::{Error, Result};
pub use involution::{InvolutionKind, InvolutionSpec, SignChoice};
pub use generator::Gen;
pub use grading::Degree;
pub use par::Exec;
pub use rational::Rational;
pub use verify::{VerificationReport, Violation};

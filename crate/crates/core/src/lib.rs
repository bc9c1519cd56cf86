//! Power series as lazy, exactly computed coefficient streams.
//!
//! The engine in [`seq`] works over any [`Coefficient`] type. Calculus,
//! finite differences, bivariate triangles, linear recurrences and a set of
//! worked applications are layered on top of it.

pub mod apps;
pub mod bivariate;
mod cache;
pub mod calculus;
pub mod coeff;
pub mod discrete;
pub mod error;
pub mod linear;
pub mod named;
pub mod poly;
pub mod seq;

pub use coeff::{binomial, factorial, Coefficient, GaussianRational, Rational};
pub use error::{CoeffError, Result, SeqError};
pub use poly::Poly;
pub use seq::Seq;

//! Exact Weingarten calculus for the unitary, orthogonal and symplectic
//! groups: symbolic Weingarten functions as reduced rational functions of the
//! dimension, exact moments of matrix entries, degenerate-dimension
//! regularization, leading-order asymptotics, and a seeded Monte Carlo
//! verification harness.

pub mod error;
pub mod rational;
pub mod symm;
pub mod pairing;
pub mod unitary;
pub mod orthogonal;
pub mod montecarlo;
pub mod cli;

pub use error::{Result, WgError};
pub use rational::{BigRat, Poly, RationalFunction};

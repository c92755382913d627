//! Exact computations with Gel'fand–Dorfman algebras, their bialgebras,
//! Yang–Baxter type equations, O-operators and conformal counterparts.

pub mod bialgebras;
pub mod cli;
pub mod conformal;
pub mod costructures;
mod error;
pub mod exactalg;
pub mod operators;
pub mod structures;
pub mod yangbaxter;

pub use error::{Error, Result};

//! Exact arithmetic in Ore extensions R[x; sigma, delta] over k[y] and
//! k(y), with centralizer bases and annihilating-curve search for
//! commuting pairs.

pub mod annihilator;
pub mod bivar;
pub mod centralizer;
pub mod cli;
pub mod config;
pub mod error;
pub mod linalg;
pub mod ore;
pub mod parse;
pub mod poly;
pub mod render;
pub mod scalar;

pub use error::{Error, Result};

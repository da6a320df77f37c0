//! Mixed ladder determinantal ideals: construction, Gröbner bases, heights,
//! Hilbert series, Cohen-Macaulay and Gorenstein tests, and G-biliaison
//! chains down to a linear ideal.

pub mod biliaison;
pub mod cell;
pub mod dimension;
pub mod error;
pub mod exactpoly;
pub mod gorenstein;
pub mod groebner;
pub mod idealgen;
pub mod ladder;
pub mod suite;

pub use cell::Cell;
pub use error::{Error, Result};

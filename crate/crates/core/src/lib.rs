//! Random 2-cell embeddings of graphs as combinatorial maps, their face and
//! local face distributions, conjugacy-class products in `S_n` and hook
//! characters.
//!
//! Darts are 0-based internally; everything printed for humans (cycle
//! notation, map JSON) is 1-based.

pub mod characters;
pub mod distributions;
pub mod enumeration;
pub mod error;
pub mod mapcore;
pub mod permcore;

pub use error::{Error, Result};

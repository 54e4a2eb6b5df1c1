//! Dataset formats, published reference tables and the command-line front
//! end for spin fake degrees.

pub mod cli;
pub mod data;
pub mod output;
pub mod pipeline;
pub mod reference;

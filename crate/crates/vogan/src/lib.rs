//! Tables, file formats and the command-line interface on top of `vogan-core`.

pub mod ascii;
pub mod cli;
pub mod report;
pub mod selfcheck;
pub mod sweep;

pub use vogan_core as core;

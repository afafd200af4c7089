//! Input parsing and output formats for the `karpelevich` command.

pub mod error;
pub mod input;
pub mod output;

//! Library side of the `gyrograph` command-line tool.

#![forbid(unsafe_code)]

pub mod commands;
pub mod report;

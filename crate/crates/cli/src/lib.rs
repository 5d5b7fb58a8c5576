//! Report format and subcommand implementations behind the `uqsl2` binary.

pub mod commands;
pub mod report;
